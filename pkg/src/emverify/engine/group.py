"""Generic finite group oracle: closure, conjugacy classes, derived subgroup.

Elements are hashable tuples: a permutation is a tuple of images, a matrix
a tuple of row tuples of field codes.  A kind object supplies identity,
multiplication and inversion; everything downstream (classes, character
degrees) is kind-agnostic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import lcm

from emverify.engine.ff import FiniteField

DEFAULT_CLOSURE_BOUND = 2**16


class BoundExceededError(RuntimeError):
    pass


class PermutationKind:
    def __init__(self, degree: int):
        self.degree = degree

    def identity(self):
        return tuple(range(self.degree))

    def mul(self, a, b):
        return tuple(a[b[i]] for i in range(self.degree))

    def inv(self, a):
        out = [0] * self.degree
        for i, v in enumerate(a):
            out[v] = i
        return tuple(out)

    def validate(self, a):
        if not (isinstance(a, tuple) and sorted(a) == list(range(self.degree))):
            raise ValueError(f"not a permutation of degree {self.degree}: {a!r}")

    def describe(self):
        return f"permutations of degree {self.degree}"


class MatrixKind:
    def __init__(self, ff: FiniteField, dim: int):
        self.field = ff
        self.dim = dim

    def identity(self):
        return tuple(
            tuple(1 if i == j else 0 for j in range(self.dim)) for i in range(self.dim)
        )

    def mul(self, a, b):
        ff, n = self.field, self.dim
        mul_t, add_t = ff.mul_table, ff.add_table
        out = []
        for i in range(n):
            row_a = a[i]
            row = []
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = add_t[acc][mul_t[row_a[k]][b[k][j]]]
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def inv(self, a):
        # Gauss-Jordan over the small field.
        ff, n = self.field, self.dim
        aug = [list(a[i]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv_p = ff.inv(aug[col][col])
            aug[col] = [ff.mul(x, inv_p) for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    c = aug[r][col]
                    aug[r] = [ff.sub(x, ff.mul(c, y)) for x, y in zip(aug[r], aug[col])]
        return tuple(tuple(row[n:]) for row in aug)

    def validate(self, a):
        if not (
            isinstance(a, tuple)
            and len(a) == self.dim
            and all(len(row) == self.dim for row in a)
            and all(0 <= x < self.field.q for row in a for x in row)
        ):
            raise ValueError(f"not a {self.dim}x{self.dim} matrix over {self.field!r}")

    def describe(self):
        return f"{self.dim}x{self.dim} matrices over GF({self.field.q})"


@dataclass
class ConcreteGroup:
    kind: object
    generators: list
    elements: list
    index: dict = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def inverse_index(self) -> list[int]:
        inv = self.kind.inv
        return [self.index[inv(x)] for x in self.elements]

    @cached_property
    def classes(self) -> list[list[int]]:
        """Conjugacy classes as lists of element indices, identity first,
        ordered by first appearance in the element enumeration."""
        kind, index = self.kind, self.index
        gens = [(g, kind.inv(g)) for g in self.generators]
        class_of = [-1] * self.order
        classes = []
        for start in range(self.order):
            if class_of[start] != -1:
                continue
            cid = len(classes)
            members = [start]
            class_of[start] = cid
            frontier = [self.elements[start]]
            while frontier:
                x = frontier.pop()
                for g, g_inv in gens:
                    y = kind.mul(g, kind.mul(x, g_inv))
                    yi = index[y]
                    if class_of[yi] == -1:
                        class_of[yi] = cid
                        members.append(yi)
                        frontier.append(y)
            classes.append(sorted(members))
        self._class_of = class_of
        return classes

    @property
    def class_of(self) -> list[int]:
        self.classes
        return self._class_of

    @cached_property
    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    @cached_property
    def inverse_class(self) -> list[int]:
        """inverse_class[i] = class id of the inverses of class i."""
        return [self.class_of[self.inverse_index[c[0]]] for c in self.classes]

    @cached_property
    def center_size(self) -> int:
        return sum(1 for c in self.classes if len(c) == 1)

    @cached_property
    def exponent(self) -> int:
        out = 1
        for c in self.classes:
            out = lcm(out, self.element_order(self.elements[c[0]]))
        return out

    def element_order(self, x) -> int:
        kind = self.kind
        e = kind.identity()
        acc, n = x, 1
        while acc != e:
            acc = kind.mul(acc, x)
            n += 1
        return n

    @cached_property
    def derived_subgroup(self) -> frozenset:
        """Element set of the commutator subgroup (normal closure of
        generator commutators)."""
        kind = self.kind
        gens = self.generators
        seeds = set()
        for a in gens:
            for b in gens:
                # [a, b] = (ba)^-1 (ab)
                seeds.add(kind.mul(kind.inv(kind.mul(b, a)), kind.mul(a, b)))
        subgroup = _subgroup_closure(kind, seeds, self.order)
        while True:
            new = set()
            for g in gens:
                g_inv = kind.inv(g)
                for x in subgroup:
                    y = kind.mul(g, kind.mul(x, g_inv))
                    if y not in subgroup:
                        new.add(y)
            if not new:
                return frozenset(subgroup)
            subgroup = _subgroup_closure(kind, subgroup | new, self.order)

    @cached_property
    def derived_order(self) -> int:
        return len(self.derived_subgroup)

    def conjugacy_class_count(self) -> int:
        return len(self.classes)

    def export_generators(self) -> str:
        """One generator per line: cycle notation for permutations, rows of
        field codes for matrices."""
        lines = []
        for g in self.generators:
            if isinstance(self.kind, PermutationKind):
                lines.append(_cycle_notation(g))
            else:
                lines.append(" ".join(",".join(str(x) for x in row) for row in g))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"ConcreteGroup(order={self.order}, kind={self.kind.describe()})"


def _cycle_notation(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = perm[x]
        cycles.append("(" + " ".join(str(v) for v in cyc) + ")")
    return "".join(cycles) if cycles else "()"


def _subgroup_closure(kind, seed, bound) -> set:
    elements = {kind.identity()}
    frontier = [kind.identity()]
    seed = list(seed)
    for s in seed:
        if s not in elements:
            elements.add(s)
            frontier.append(s)
    while frontier:
        x = frontier.pop()
        for s in seed:
            y = kind.mul(x, s)
            if y not in elements:
                if len(elements) >= bound:
                    raise BoundExceededError("closure exceeded bound")
                elements.add(y)
                frontier.append(y)
    return elements


def closure(
    kind, generators, bound: int = DEFAULT_CLOSURE_BOUND
) -> ConcreteGroup:
    """Breadth-first multiplicative closure of the generators."""
    gens = list(generators)
    for g in gens:
        kind.validate(g)
    identity = kind.identity()
    elements = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = kind.mul(x, g)
                if y not in index:
                    if len(elements) >= bound:
                        raise BoundExceededError(
                            f"group order exceeds the bound {bound}"
                        )
                    index[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
        frontier = nxt
    return ConcreteGroup(kind=kind, generators=gens, elements=elements, index=index)


def from_elements(kind, elements, bound: int = DEFAULT_CLOSURE_BOUND) -> ConcreteGroup:
    """Group from an explicit element list (must be closed); a small
    generating set is extracted greedily in list order."""
    if len(elements) > bound:
        raise BoundExceededError(f"group order exceeds the bound {bound}")
    elements = list(elements)
    element_set = set(elements)
    gens: list = []
    generated = {kind.identity()}
    for x in elements:
        if x not in generated:
            gens.append(x)
            generated = _subgroup_closure(kind, gens, bound)
    if generated != element_set:
        raise ValueError("element list is not closed under multiplication")
    group = closure(kind, gens, bound=bound)
    assert group.order == len(elements)
    return group
