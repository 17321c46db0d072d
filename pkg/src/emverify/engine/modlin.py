"""Dense linear algebra over a prime field GF(ell), numpy int64 backed.

ell is always small enough (a few thousand) that products of two residues
accumulated over a few thousand terms stay far below 2^63.
"""

from __future__ import annotations

import numpy as np


def mat_mul(a: np.ndarray, b: np.ndarray, ell: int) -> np.ndarray:
    return (a.astype(np.int64) @ b.astype(np.int64)) % ell


def rref(mat: np.ndarray, ell: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form, returns (matrix, pivot column list)."""
    a = mat.astype(np.int64) % ell
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pivot_row = r + int(nz[0])
        if pivot_row != r:
            a[[r, pivot_row]] = a[[pivot_row, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, ell)) % ell
        factors = a[:, c].copy()
        factors[r] = 0
        np.subtract(a, np.outer(factors, a[r]), out=a)
        a %= ell
        pivots.append(c)
        r += 1
    return a, pivots


def kernel_basis(mat: np.ndarray, ell: int) -> np.ndarray:
    """Columns span the kernel of mat (shape rows x cols -> cols x dim)."""
    a, pivots = rref(mat, ell)
    cols = mat.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for j, fc in enumerate(free):
        basis[fc, j] = 1
        for r, pc in enumerate(pivots):
            basis[pc, j] = (-a[r, fc]) % ell
    return basis


def column_echelon(mat: np.ndarray, ell: int) -> tuple[np.ndarray, list[int]]:
    """Reduced column echelon form with pivot rows; columns stay a basis of
    the same column span.  mat must have full column rank."""
    reduced, pivots = rref(mat.T, ell)
    reduced = reduced[: len(pivots)]
    if len(pivots) != mat.shape[1]:
        raise ValueError("columns are linearly dependent")
    return reduced.T, pivots


def minpoly_of_vector(mat: np.ndarray, vec: np.ndarray, ell: int) -> np.ndarray:
    """Monic minimal polynomial of mat relative to vec (ascending coeffs)."""
    dim = mat.shape[0]
    iterates = [vec % ell]
    # Echelon bookkeeping: rows of `ech` are reduced iterates, `coeffs[i]`
    # expresses ech[i] in terms of the raw iterates.
    ech: list[np.ndarray] = []
    ech_pivots: list[int] = []
    coeffs: list[np.ndarray] = []
    current = vec % ell
    k = 0
    while True:
        reduced = current.copy()
        combo = np.zeros(len(iterates), dtype=np.int64)
        combo[k] = 1
        for row, pivot, crow in zip(ech, ech_pivots, coeffs):
            factor = reduced[pivot]
            if factor:
                reduced = (reduced - factor * row) % ell
                combo[: len(crow)] = (combo[: len(crow)] - factor * crow) % ell
        nz = np.nonzero(reduced)[0]
        if nz.size == 0:
            # combo gives the dependency: minimal polynomial coefficients.
            poly = combo % ell
            lead = int(poly[k])
            poly = (poly * pow(lead, -1, ell)) % ell
            return poly[: k + 1]
        pivot = int(nz[0])
        inv = pow(int(reduced[pivot]), -1, ell)
        ech.append((reduced * inv) % ell)
        ech_pivots.append(pivot)
        coeffs.append((combo * inv) % ell)
        k += 1
        if k > dim:
            raise RuntimeError("minimal polynomial search exceeded dimension")
        current = (mat @ current) % ell
        iterates.append(current)
        for i, crow in enumerate(coeffs):
            coeffs[i] = np.pad(crow, (0, len(iterates) - len(crow)))


def krylov_minpoly(
    mat: np.ndarray, vec: np.ndarray, ell: int
) -> tuple[np.ndarray, np.ndarray]:
    """Monic minimal polynomial of mat relative to vec, together with the
    Krylov iterates [vec, mat vec, ..., mat^{d-1} vec] as columns."""
    poly = minpoly_of_vector(mat, vec, ell)
    d = len(poly) - 1
    dim = mat.shape[0]
    iterates = np.empty((dim, d), dtype=np.int64)
    current = vec % ell
    for i in range(d):
        iterates[:, i] = current
        if i + 1 < d:
            current = (mat @ current) % ell
    return poly, iterates


def companion_eigenvector(poly: np.ndarray, root: int, ell: int) -> np.ndarray:
    """Eigenvector of the companion matrix of monic poly for the given root,
    in the Krylov basis: downward Horner partial sums."""
    d = len(poly) - 1
    u = np.zeros(d, dtype=np.int64)
    u[d - 1] = 1
    for i in range(d - 1, 0, -1):
        u[i - 1] = (root * u[i] + int(poly[i])) % ell
    assert (root * u[0] + int(poly[0])) % ell == 0
    return u


def poly_roots_mod(poly: np.ndarray, ell: int) -> list[int]:
    """All roots in GF(ell) by vectorised Horner scan."""
    xs = np.arange(ell, dtype=np.int64)
    acc = np.zeros(ell, dtype=np.int64)
    for c in reversed(poly):
        acc = (acc * xs + int(c)) % ell
    return [int(x) for x in np.nonzero(acc == 0)[0]]


def solve_unique(a: np.ndarray, b: np.ndarray, ell: int) -> np.ndarray:
    """Solve a x = b for invertible square a."""
    n = a.shape[0]
    aug = np.hstack([a % ell, (b % ell).reshape(n, 1)])
    reduced, pivots = rref(aug, ell)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return reduced[:, n].copy()


def sqrt_table(ell: int) -> dict[int, int]:
    """x^2 -> x for x in (0, ell/2); unique since -x is the other root."""
    table: dict[int, int] = {}
    for x in range(1, (ell + 1) // 2):
        table[(x * x) % ell] = x
    return table
