"""Constructors for the explicit small groups the verification suite needs:
unitriangular Sylow subgroups of classical matrix groups and the order-q^5
mixed-field unitriangular group whose degree multiset the engine certifies.
"""

from __future__ import annotations

from itertools import product

from emverify.engine.ff import FiniteField
from emverify.engine.group import (
    BoundExceededError,
    ConcreteGroup,
    DEFAULT_CLOSURE_BOUND,
    MatrixKind,
    from_elements,
)

SYLOW_LIE_FAMILIES = ("SL", "Sp4", "SU3", "SU4")


def _factor_prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            f = 0
            while q % p == 0:
                q //= p
                f += 1
            if q != 1:
                raise ValueError("not a prime power")
            return p, f
    raise ValueError(f"not a prime power: {q}")


def _unitriangular_matrices(ff: FiniteField, dim: int, entry_ranges=None):
    """All upper unitriangular dim x dim matrices; entry_ranges optionally
    restricts the value set per (i, j) position."""
    positions = [(i, j) for i in range(dim) for j in range(i + 1, dim)]
    ranges = []
    for pos in positions:
        if entry_ranges and pos in entry_ranges:
            ranges.append(entry_ranges[pos])
        else:
            ranges.append(tuple(range(ff.q)))
    for values in product(*ranges):
        mat = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
        for (i, j), v in zip(positions, values):
            mat[i][j] = v
        yield tuple(tuple(row) for row in mat)


def _preserves_bilinear(kind: MatrixKind, mat, gram, twist: int = 0) -> bool:
    """m^T * gram * m == gram, with the left factor twisted by Frobenius^twist."""
    ff, n = kind.field, kind.dim
    for i in range(n):
        for j in range(n):
            acc = 0
            for a in range(n):
                left = ff.frobenius(mat[a][i], twist) if twist else mat[a][i]
                inner = 0
                for b in range(n):
                    inner = ff.add(inner, ff.mul(gram[a][b], mat[b][j]))
                acc = ff.add(acc, ff.mul(left, inner))
            if acc != gram[i][j]:
                return False
    return True


def _symplectic_gram(ff: FiniteField, dim: int):
    # Antidiagonal alternating form; signs vanish in characteristic 2.
    gram = [[0] * dim for _ in range(dim)]
    for i in range(dim // 2):
        gram[i][dim - 1 - i] = 1
        gram[dim - 1 - i][i] = ff.neg(1)
    return tuple(tuple(row) for row in gram)


def _hermitian_gram(ff: FiniteField, dim: int):
    gram = [[0] * dim for _ in range(dim)]
    for i in range(dim):
        gram[i][dim - 1 - i] = 1
    return tuple(tuple(row) for row in gram)


def build_sylow_lie(
    family: str, n: int, q: int, bound: int = DEFAULT_CLOSURE_BOUND
) -> ConcreteGroup:
    """Sylow p-subgroup (p the defining prime of q) of a classical group,
    as explicit unitriangular matrices.

    family "SL": rank parameter n is the matrix dimension, over GF(q);
    "Sp4": 4x4 symplectic over GF(q); "SU3"/"SU4": unitary over GF(q^2).
    """
    if family not in SYLOW_LIE_FAMILIES:
        raise ValueError(f"unsupported family {family!r}; choose from {SYLOW_LIE_FAMILIES}")
    p, f = _factor_prime_power(q)
    if family == "SL":
        if n < 2:
            raise ValueError("SL needs dimension >= 2")
        expected = q ** (n * (n - 1) // 2)
        if expected > bound:
            raise BoundExceededError(f"order {expected} exceeds bound {bound}")
        kind = MatrixKind(FiniteField(p, f), n)
        elements = list(_unitriangular_matrices(kind.field, n))
    elif family == "Sp4":
        expected = q**4
        if expected > bound:
            raise BoundExceededError(f"order {expected} exceeds bound {bound}")
        kind = MatrixKind(FiniteField(p, f), 4)
        gram = _symplectic_gram(kind.field, 4)
        elements = [
            m
            for m in _unitriangular_matrices(kind.field, 4)
            if _preserves_bilinear(kind, m, gram)
        ]
    else:
        dim = 3 if family == "SU3" else 4
        expected = q ** (dim * (dim - 1) // 2)
        if expected > bound:
            raise BoundExceededError(f"order {expected} exceeds bound {bound}")
        kind = MatrixKind(FiniteField(p, 2 * f), dim)
        gram = _hermitian_gram(kind.field, dim)
        elements = [
            m
            for m in _unitriangular_matrices(kind.field, dim)
            if _preserves_bilinear(kind, m, gram, twist=f)
        ]
    if len(elements) != expected:
        raise RuntimeError(
            f"{family} Sylow enumeration produced {len(elements)} elements, expected {expected}"
        )
    return from_elements(kind, elements, bound=bound)


def subfield_heisenberg(q: int, bound: int = DEFAULT_CLOSURE_BOUND) -> ConcreteGroup:
    """Order-q^5 unitriangular group over GF(q^2) with restricted middle entry.

    3x3 upper unitriangular matrices over GF(q^2) whose (2,3) entry lies in
    the subfield GF(q); (1,2) and (1,3) entries are unrestricted.  Defined
    for odd prime powers q.
    """
    p, f = _factor_prime_power(q)
    if p == 2:
        raise ValueError("q must be odd")
    expected = q**5
    if expected > bound:
        raise BoundExceededError(f"order {expected} exceeds bound {bound}")
    kind = MatrixKind(FiniteField(p, 2 * f), 3)
    subfield = kind.field.subfield_elements(f)
    elements = list(
        _unitriangular_matrices(kind.field, 3, entry_ranges={(1, 2): subfield})
    )
    assert len(elements) == expected
    return from_elements(kind, elements, bound=bound)
