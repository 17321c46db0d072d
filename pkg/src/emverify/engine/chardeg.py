"""Irreducible character degrees of a ConcreteGroup, exactly.

Two routes:

* counting: for p-groups whose degree multiset is already forced by the
  class count, the linear-character count and the sum-of-squares identity
  (at most two unknown degree exponents), solve the 2x2 integer system.

* eigenvectors: the modular class-algebra method.  Over GF(ell) with
  ell = 1 (mod exponent) and ell > 2*sqrt(|G|), the class sums act
  diagonalisably on the centre of the group algebra; splitting into
  simultaneous eigenspaces yields the central characters, and the
  orthogonality relation recovers each degree as the unique square root
  below ell/2.

Both routes end in the same invariant checks (sum of squares, class
count, linear count), and tests run them against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from emverify.engine.group import ConcreteGroup
from emverify.engine import modlin

PRIME_SEARCH_LIMIT = 10**7


class ModulusSearchError(RuntimeError):
    pass


@dataclass(frozen=True)
class DegreeReport:
    degrees: tuple[tuple[int, int], ...]  # (degree, multiplicity), sorted
    class_count: int
    linear_count: int
    derived_order: int
    order: int
    method: str
    modulus: int | None = None

    def as_dict(self) -> dict[int, int]:
        return dict(self.degrees)

    def min_positive_valuation(self, p: int) -> float | int:
        from emverify.heights import INFINITY
        from emverify.partitions import valuation

        best = None
        for d, _ in self.degrees:
            if d % p == 0:
                nu = valuation(d, p)
                best = nu if best is None else min(best, nu)
        return INFINITY if best is None else best

    def check(self) -> None:
        assert sum(mult * d * d for d, mult in self.degrees) == self.order
        assert sum(mult for _, mult in self.degrees) == self.class_count
        assert self.as_dict().get(1, 0) == self.linear_count
        assert self.linear_count * self.derived_order == self.order
        for d, _ in self.degrees:
            assert self.order % d == 0


def char_degrees(group: ConcreteGroup, force_full: bool = False) -> DegreeReport:
    order = group.order
    class_count = len(group.classes)
    derived_order = group.derived_order
    linear = order // derived_order
    if class_count == order:
        report = DegreeReport(
            degrees=((1, order),),
            class_count=class_count,
            linear_count=order,
            derived_order=1,
            order=order,
            method="abelian",
        )
        report.check()
        return report
    if not force_full:
        counted = _try_counting(order, class_count, linear, derived_order)
        if counted is not None:
            counted.check()
            return counted
    report = _eigenvector_method(group, class_count, linear, derived_order)
    report.check()
    return report


def _prime_power_exponent(n: int) -> tuple[int, int] | None:
    for p in range(2, isqrt(n) + 1):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            return (p, e) if n == 1 else None
    return (n, 1) if n > 1 else None


def _try_counting(
    order: int, class_count: int, linear: int, derived_order: int
) -> DegreeReport | None:
    pp = _prime_power_exponent(order)
    if pp is None:
        return None
    p, _ = pp
    residual_chars = class_count - linear
    residual_mass = order - linear
    # Degrees are p-powers p^k with p^{2k} <= residual_mass; solvable only
    # with at most two candidate exponents.
    k_max = 0
    while p ** (2 * (k_max + 1)) <= residual_mass:
        k_max += 1
    if k_max > 2 or (k_max == 0 and residual_chars):
        return None
    if k_max <= 1:
        m1 = residual_chars
        if m1 * p * p != residual_mass:
            return None
        degrees = {1: linear}
        if m1:
            degrees[p] = m1
    else:
        # m1 + m2 = residual_chars, p^2 m1 + p^4 m2 = residual_mass
        num = residual_mass - p * p * residual_chars
        den = p**4 - p * p
        if num % den:
            return None
        m2 = num // den
        m1 = residual_chars - m2
        if m1 < 0 or m2 < 0:
            return None
        degrees = {1: linear}
        if m1:
            degrees[p] = m1
        if m2:
            degrees[p * p] = m2
    return DegreeReport(
        degrees=tuple(sorted(degrees.items())),
        class_count=class_count,
        linear_count=linear,
        derived_order=derived_order,
        order=order,
        method="counting",
    )


def _find_modulus(order: int, exponent: int) -> int:
    """Least prime ell = 1 (mod exponent) with ell > 2*sqrt(order)."""
    lower = 2 * isqrt(order) + 1
    ell = exponent * (lower // exponent) + 1
    while ell <= lower:
        ell += exponent
    while ell < PRIME_SEARCH_LIMIT:
        if _is_prime(ell):
            return ell
        ell += exponent
    raise ModulusSearchError(
        f"no prime = 1 mod {exponent} above {lower} below {PRIME_SEARCH_LIMIT}"
    )


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _class_id_table(group: ConcreteGroup) -> np.ndarray:
    """CID[k, x] = class id of elements[x]^-1 * g_k, with g_k the class-k
    representative.  Every class matrix (and any linear combination of
    them) is a cheap row-wise weighted bincount of this table:
    M_i[k, j] = #{x in C_i : CID[k, x] = j}."""
    from emverify.engine.group import PermutationKind

    r, n = len(group.classes), group.order
    reps = [group.classes[k][0] for k in range(r)]
    class_of = group.class_of
    cid = np.empty((r, n), dtype=np.int32)
    if isinstance(group.kind, PermutationKind):
        dtype = np.int8 if group.kind.degree <= 127 else np.int16
        table = np.array(group.elements, dtype=dtype)
        inv_rows = table[np.array(group.inverse_index)]
        key = {table[i].tobytes(): class_of[i] for i in range(n)}
        for k, rep in enumerate(reps):
            prods = inv_rows[:, table[rep]]
            row = cid[k]
            for x, prod in enumerate(prods):
                row[x] = key[prod.tobytes()]
    else:
        kind, index, elements = group.kind, group.index, group.elements
        inverses = [elements[i] for i in group.inverse_index]
        for k, rep in enumerate(reps):
            gk = elements[rep]
            row = cid[k]
            for x, x_inv in enumerate(inverses):
                row[x] = class_of[index[kind.mul(x_inv, gk)]]
    return cid


def _weighted_class_matrix(
    cid: np.ndarray, weights: np.ndarray, r: int, ell: int
) -> np.ndarray:
    """sum_i weights[class(x)] M_i as an r x r matrix over GF(ell).

    weights is indexed by element, already reduced mod ell; row sums stay
    below n * ell < 2^53, so float64 bincount is exact."""
    out = np.empty((r, r), dtype=np.int64)
    w = weights.astype(np.float64)
    for k in range(r):
        out[k] = np.bincount(cid[k], weights=w, minlength=r).astype(np.int64)
    return out % ell


def _split_block(
    restriction: np.ndarray, ell: int, probe: np.ndarray | None = None
) -> list[np.ndarray]:
    """Bases (columns) of the eigenspaces of a diagonalisable matrix.

    If probe is a cyclic-friendly vector (components on every eigenspace),
    one Krylov pass both finds all eigenvalues and, when they are simple,
    yields the eigenvectors via the companion-matrix Horner recurrence.
    """
    dim = restriction.shape[0]
    found: list[tuple[int, np.ndarray]] = []
    covered = 0
    basis_probe = 0
    vec = probe if probe is not None else np.zeros(dim, dtype=np.int64)
    if probe is None:
        vec[0] = 1
    while covered < dim:
        poly, iterates = modlin.krylov_minpoly(restriction, vec, ell)
        roots = modlin.poly_roots_mod(poly, ell)
        new_roots = [r0 for r0 in roots if all(r0 != seen for seen, _ in found)]
        if not found and len(roots) == len(poly) - 1 == dim:
            # All eigenvalues simple and visible at once: companion route.
            for root in roots:
                u = modlin.companion_eigenvector(poly, root, ell)
                found.append((root, (iterates @ u % ell).reshape(dim, 1)))
            covered = dim
            break
        for root in new_roots:
            eig = modlin.kernel_basis(
                (restriction - root * np.eye(dim, dtype=np.int64)) % ell, ell
            )
            if eig.shape[1]:
                found.append((root, eig))
                covered += eig.shape[1]
        if covered >= dim:
            break
        # Next probe: first standard basis vector outside the found span.
        span, span_pivots = modlin.rref(np.hstack([e for _, e in found]).T, ell)
        while basis_probe < dim:
            basis_probe += 1
            candidate = np.zeros(dim, dtype=np.int64)
            candidate[basis_probe - 1] = 1
            residual = candidate.copy()
            for row_idx, pc in enumerate(span_pivots):
                f = residual[pc]
                if f:
                    residual = (residual - f * span[row_idx]) % ell
            if residual.any():
                vec = candidate
                break
        else:
            raise RuntimeError("eigenspace search failed to cover the space")
    found.sort(key=lambda t: t[0])
    return [e for _, e in found]


def _splitting_matrices(group: ConcreteGroup, cid: np.ndarray, ell: int):
    """Deterministic stream of commuting matrices to split against: first
    generic combinations sum_i t^i z_i (one usually separates everything),
    then the individual class matrices."""
    r = len(group.classes)
    class_of_elem = np.array(group.class_of, dtype=np.int64)
    for t in (2, 3, 5, 7, 11):
        tpows = np.array([pow(t, i, ell) for i in range(r)], dtype=np.int64)
        yield _weighted_class_matrix(cid, tpows[class_of_elem], r, ell)
    for i in sorted(range(1, r), key=lambda i: (-group.class_sizes[i], i)):
        indicator = (class_of_elem == i).astype(np.int64)
        yield _weighted_class_matrix(cid, indicator, r, ell)


def _eigenvector_method(
    group: ConcreteGroup, class_count: int, linear: int, derived_order: int
) -> DegreeReport:
    order = group.order
    ell = _find_modulus(order, group.exponent)
    r = class_count
    sizes = group.class_sizes
    inv_class = group.inverse_class
    cid = _class_id_table(group)
    # blocks: column-span bases in reduced column-echelon form (pivot rows
    # known), invariant under every class matrix, each carrying the
    # block component of the identity-class vector e_0 in block
    # coordinates.  That component has weight on every central idempotent
    # of the block, so it is a cyclic vector for any splitting matrix.
    identity_vec = np.zeros(r, dtype=np.int64)
    identity_vec[0] = 1
    basis0, pivots0 = modlin.column_echelon(np.eye(r, dtype=np.int64), ell)
    blocks: list[tuple[np.ndarray, list[int], np.ndarray]] = [
        (basis0, pivots0, identity_vec.copy())
    ]
    for mat in _splitting_matrices(group, cid, ell):
        if all(b.shape[1] == 1 for b, _, _ in blocks):
            break
        next_blocks: list[tuple[np.ndarray, list[int], np.ndarray]] = []
        for basis, pivots, probe in blocks:
            if basis.shape[1] == 1:
                next_blocks.append((basis, pivots, probe))
                continue
            restriction = modlin.mat_mul(mat, basis, ell)[pivots]
            for eig in _split_block(restriction, ell, probe=probe):
                sub = modlin.mat_mul(basis, eig, ell)
                next_blocks.append(modlin.column_echelon(sub, ell) + (None,))
        # Re-derive the per-block probes: solve (stacked bases) c = e_0.
        stacked = np.hstack([b for b, _, _ in next_blocks])
        coords = modlin.solve_unique(stacked, identity_vec, ell)
        blocks, offset = [], 0
        for basis, pivots, _ in next_blocks:
            width = basis.shape[1]
            blocks.append((basis, pivots, coords[offset : offset + width].copy()))
            offset += width
    if not all(b.shape[1] == 1 for b, _, _ in blocks):
        raise RuntimeError("class matrices failed to separate all characters")
    sqrtable = modlin.sqrt_table(ell)
    degrees: dict[int, int] = {}
    for basis, _, _ in blocks:
        v = basis[:, 0] % ell
        v0 = int(v[0])
        # Identity-class coordinate of a central idempotent is d^2/|G| != 0.
        assert v0 != 0, "eigenvector vanishes on the identity class"
        v0_inv = pow(v0, -1, ell)
        omega = [(sizes[i] * int(v[inv_class[i]]) * v0_inv) % ell for i in range(r)]
        s = 0
        for i in range(r):
            s += omega[i] * omega[inv_class[i]] * pow(sizes[i], -1, ell)
        s %= ell
        d_squared = (order * pow(s, -1, ell)) % ell
        d = sqrtable.get(d_squared)
        assert d is not None, "degree is not a square below ell/2"
        degrees[d] = degrees.get(d, 0) + 1
    return DegreeReport(
        degrees=tuple(sorted(degrees.items())),
        class_count=class_count,
        linear_count=linear,
        derived_order=derived_order,
        order=order,
        method="eigenvectors",
        modulus=ell,
    )
