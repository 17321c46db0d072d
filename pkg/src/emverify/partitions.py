"""Partition combinatorics: hooks, conjugation, cores, quotients, degrees.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the partition of 0.  Bead (beta-set) encodings use
first-column hook lengths; for core/quotient decompositions the bead count
is always padded to a multiple of the prime, which fixes the labelling of
the quotient components once and for all (round-trip tests pin it).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import factorial

Partition = tuple[int, ...]


def is_partition(parts: tuple[int, ...]) -> bool:
    return all(isinstance(x, int) and x >= 1 for x in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts: tuple[int, ...]) -> Partition:
    if not isinstance(parts, tuple) or not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, largest-first lexicographic order."""
    if n < 0:
        return ()
    return tuple(_partitions_bounded(n, n))


def _partitions_bounded(n: int, largest: int) -> list[Partition]:
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return out


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> tuple[int, ...]:
    """One hook length per cell, row by row; len(result) == sum(lam)."""
    conj = conjugate(lam)
    out = []
    for i, row in enumerate(lam):
        for j in range(row):
            out.append((row - j) + (conj[j] - i) - 1)
    return tuple(out)


def beta_set(lam: Partition, beads: int) -> tuple[int, ...]:
    """First-column hook lengths with the given bead count, decreasing.

    Requires beads >= len(lam).  Bead values are lam[i] + beads - 1 - i
    with lam padded by zeros.
    """
    if beads < len(lam):
        raise ValueError(f"need at least {len(lam)} beads, got {beads}")
    padded = lam + (0,) * (beads - len(lam))
    return tuple(padded[i] + beads - 1 - i for i in range(beads))


def partition_from_beta(beta: tuple[int, ...]) -> Partition:
    """Inverse of beta_set; accepts the beads in any order."""
    values = sorted(beta, reverse=True)
    if len(set(values)) != len(values) or (values and values[-1] < 0):
        raise ValueError(f"not a beta set: {beta!r}")
    beads = len(values)
    parts = tuple(v - (beads - 1 - i) for i, v in enumerate(values))
    return tuple(p for p in parts if p > 0)


@dataclass(frozen=True)
class CoreQuotient:
    core: Partition
    quotient: tuple[Partition, ...]
    p: int
    weight: int


def _bead_count(lam: Partition, p: int) -> int:
    n = max(len(lam), 1)
    return ((n + p - 1) // p) * p


def core_quotient(lam: Partition, p: int) -> CoreQuotient:
    """p-core and p-quotient via the abacus with p runners.

    The bead count is the smallest positive multiple of p covering all
    parts, so the runner labelling does not depend on lam beyond its
    length class; adding p more beads leaves the result unchanged.
    """
    if p < 2:
        raise ValueError(f"prime must be at least 2, got {p}")
    beads = _bead_count(lam, p)
    beta = beta_set(lam, beads)
    runners: list[list[int]] = [[] for _ in range(p)]
    for v in beta:
        runners[v % p].append(v // p)
    quotient = tuple(partition_from_beta(tuple(rows)) for rows in runners)
    # Pushing every bead to the bottom of its runner yields the core.
    core_beta = []
    for j, rows in enumerate(runners):
        core_beta.extend(r * p + j for r in range(len(rows)))
    core = partition_from_beta(tuple(core_beta))
    weight = sum(sum(comp) for comp in quotient)
    assert sum(core) + p * weight == sum(lam)
    return CoreQuotient(core=core, quotient=quotient, p=p, weight=weight)


def is_core(lam: Partition, p: int) -> bool:
    """True iff lam has no hook length divisible by p."""
    if p < 2:
        raise ValueError(f"prime must be at least 2, got {p}")
    beta = beta_set(lam, _bead_count(lam, p))
    beads = set(beta)
    return all(v < p or (v - p) in beads for v in beta)


def from_core_quotient(cq: CoreQuotient) -> Partition:
    """Inverse of core_quotient under the same runner convention."""
    p = cq.p
    if not is_core(cq.core, p):
        raise ValueError(f"core {cq.core!r} is not a {p}-core")
    if len(cq.quotient) != p:
        raise ValueError(f"quotient must have {p} components")
    # Adding p beads appends one bead at the bottom of every runner, so
    # padding by the longest quotient component guarantees room everywhere.
    longest = max(len(comp) for comp in cq.quotient)
    beads = _bead_count(cq.core, p) + p * (longest + 1)
    beta = beta_set(cq.core, beads)
    runners: list[list[int]] = [[] for _ in range(p)]
    for v in beta:
        runners[v % p].append(v // p)
    out_beta = []
    for j, rows in enumerate(runners):
        k = len(rows)
        # A core's beads occupy the bottom rows of each runner.
        assert sorted(rows) == list(range(k))
        comp = cq.quotient[j]
        if len(comp) > k:
            raise ValueError("bead count underflow; core shorter than quotient")
        for row in beta_set(comp, k):
            out_beta.append(row * p + j)
    return partition_from_beta(tuple(out_beta))


def combine(core: Partition, quotient: tuple[Partition, ...], p: int) -> Partition:
    weight = sum(sum(comp) for comp in quotient)
    return from_core_quotient(CoreQuotient(core, tuple(quotient), p, weight))


def legendre_valuation(n: int, p: int) -> int:
    """nu_p(n!) by summing floor divisions."""
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def valuation(value: int, p: int) -> int:
    if value == 0:
        raise ValueError("valuation of zero")
    nu = 0
    value = abs(value)
    while value % p == 0:
        value //= p
        nu += 1
    return nu


@cache
def hooks_valuation(lam: Partition, p: int) -> int:
    """nu_p of the product of all hook lengths."""
    return sum(valuation(h, p) for h in hook_lengths(lam) if h % p == 0)


def char_valuation(lam: Partition, p: int) -> int:
    """nu_p of the degree of the irreducible S_n character labelled lam.

    Uses Legendre's formula on n! minus the hook valuations; agrees with
    nu_p(char_degree_exact(lam)) (tested), without big integers.
    """
    if p < 2:
        raise ValueError(f"prime must be at least 2, got {p}")
    return legendre_valuation(sum(lam), p) - hooks_valuation(lam, p)


def char_degree_exact(lam: Partition) -> int:
    """Exact hook-length-formula degree n! / prod(hooks)."""
    n = sum(lam)
    num = factorial(n)
    den = 1
    for h in hook_lengths(lam):
        den *= h
    assert num % den == 0
    return num // den


@cache
def cores_of_size(m: int, p: int) -> tuple[Partition, ...]:
    """All p-cores of m, in partitions() order."""
    return tuple(lam for lam in partitions(m) if is_core(lam, p))
