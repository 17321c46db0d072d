"""Character-degree multisets of Sylow p-subgroups of S_n and A_n.

Degrees of a p-group are powers of p, so multisets are kept as maps from
exponent k to the number of irreducible characters of degree p^k; the
multiset of a direct product is then additive convolution.  The wreath
step G wr C_p follows the orbit count on p-tuples of characters: each of
the N fixed diagonal tuples extends in p ways, each free orbit induces one
character of p times the product degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from emverify.heights import INFINITY, MinHeight, min_positive_key
from emverify.partitions import legendre_valuation

DEFAULT_ORACLE_BOUND = 2**14

Perm = tuple[int, ...]


@dataclass(frozen=True)
class PDegreeMultiset:
    p: int
    counts: tuple[tuple[int, int], ...]  # (exponent, multiplicity), sorted
    order: int  # group order as an exponent of p

    def __post_init__(self):
        if sum(mult * self.p ** (2 * k) for k, mult in self.counts) != self.p**self.order:
            raise ValueError("sum of squared degrees does not match group order")
        linear = dict(self.counts).get(0, 0)
        reduced = linear
        while reduced > 1 and reduced % self.p == 0:
            reduced //= self.p
        if linear < 1 or reduced != 1:
            raise ValueError("linear character count must be a positive p-power")

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def char_count(self) -> int:
        return sum(mult for _, mult in self.counts)

    def min_positive(self) -> MinHeight:
        return min_positive_key(self.as_dict())


def make_multiset(p: int, counts: dict[int, int], order: int) -> PDegreeMultiset:
    items = tuple(sorted((k, m) for k, m in counts.items() if m))
    return PDegreeMultiset(p=p, counts=items, order=order)


def trivial_multiset(p: int) -> PDegreeMultiset:
    return make_multiset(p, {0: 1}, 0)


def product_multiset(a: PDegreeMultiset, b: PDegreeMultiset) -> PDegreeMultiset:
    if a.p != b.p:
        raise ValueError("mismatched primes")
    counts: dict[int, int] = {}
    for k1, m1 in a.counts:
        for k2, m2 in b.counts:
            counts[k1 + k2] = counts.get(k1 + k2, 0) + m1 * m2
    return make_multiset(a.p, counts, a.order + b.order)


def wreath_cyclic(base: PDegreeMultiset, p: int) -> PDegreeMultiset:
    """Degree multiset of (base group) wr C_p from the base multiset."""
    if base.p != p:
        raise ValueError(f"base multiset is for p={base.p}, not {p}")
    n_chars = base.char_count()
    # p-th power of the generating polynomial: all p-tuples.
    tuples: dict[int, int] = {0: 1}
    for _ in range(p):
        nxt: dict[int, int] = {}
        for k1, m1 in tuples.items():
            for k2, m2 in base.counts:
                nxt[k1 + k2] = nxt.get(k1 + k2, 0) + m1 * m2
        tuples = nxt
    counts: dict[int, int] = {}
    for k, mult in base.counts:
        # Diagonal tuples: p extensions each, of degree (p^k)^p.
        counts[p * k] = counts.get(p * k, 0) + p * mult
        tuples[p * k] -= mult
    for k, mult in tuples.items():
        if mult == 0:
            continue
        assert mult % p == 0
        counts[k + 1] = counts.get(k + 1, 0) + mult // p
    assert sum(counts.values()) == p * n_chars + (n_chars**p - n_chars) // p
    return make_multiset(p, counts, p * base.order + 1)


@cache
def wreath_power(p: int, i: int) -> PDegreeMultiset:
    """The i-fold iterated wreath power of C_p (i = 0 is trivial)."""
    if i == 0:
        return trivial_multiset(p)
    if i == 1:
        return make_multiset(p, {0: p}, 1)
    return wreath_cyclic(wreath_power(p, i - 1), p)


def base_p_digits(n: int, p: int) -> list[int]:
    digits = []
    while n:
        digits.append(n % p)
        n //= p
    return digits


@cache
def sylow_degrees_sym(n: int, p: int) -> PDegreeMultiset:
    """Degree multiset of a Sylow p-subgroup of S_n.

    The Sylow subgroup is the direct product, over the base-p digits a_i
    of n, of a_i copies of the i-fold wreath power of C_p.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    out = trivial_multiset(p)
    for i, digit in enumerate(base_p_digits(n, p)):
        for _ in range(digit):
            out = product_multiset(out, wreath_power(p, i))
    assert out.order == legendre_valuation(n, p)
    return out


def sylow_is_abelian_sym(n: int, p: int) -> bool:
    """Abelian iff no base-p digit at position >= 2 is set."""
    return all(d == 0 for d in base_p_digits(n, p)[2:])


def mh_sylow_sym(n: int, p: int) -> MinHeight:
    return sylow_degrees_sym(n, p).min_positive()


def mh_sylow_alt(two_w: int) -> MinHeight:
    """Minimal positive degree exponent for a Sylow 2-subgroup of A_{2w}.

    For w <= 2 the group is abelian; for w >= 3 it has a character of
    degree 2 (w = 3 directly, w > 3 through a wreath quotient on which the
    restriction of the sign character acts freely).  The generic engine
    re-derives this for 2w <= 16 in the oracle tests.
    """
    if two_w < 0 or two_w % 2 != 0:
        raise ValueError("argument must be an even non-negative integer")
    w = two_w // 2
    return INFINITY if w <= 2 else 1


# ----------------------------------------------------------------------
# Explicit permutation generators (oracle feed)


def _cycle_block_perm(n: int, offset: int, block: int, step: int) -> Perm:
    """x -> x + step (mod block) on [offset, offset+block), identity elsewhere."""
    images = list(range(n))
    for x in range(block):
        images[offset + x] = offset + (x + step) % block
    return tuple(images)


def wreath_tower_generators(n: int, offset: int, p: int, levels: int) -> list[Perm]:
    """Generators of the levels-fold wreath power of C_p on p^levels points."""
    gens = []
    for j in range(1, levels + 1):
        gens.append(_cycle_block_perm(n, offset, p**j, p ** (j - 1)))
    return gens


def sylow_generators_sym(
    n: int, p: int, order_bound: int = DEFAULT_ORACLE_BOUND
) -> list[Perm]:
    """Permutation generators of a Sylow p-subgroup of S_n.

    Raises if the subgroup order p^{nu_p(n!)} exceeds order_bound; the
    caller controls how far the brute-force oracle may be pushed.
    """
    order = p ** legendre_valuation(n, p)
    if order > order_bound:
        raise ValueError(
            f"Sylow order {order} exceeds the oracle bound {order_bound}"
        )
    gens: list[Perm] = []
    offset = 0
    digits = base_p_digits(n, p)
    for i in range(len(digits) - 1, -1, -1):
        for _ in range(digits[i]):
            gens.extend(wreath_tower_generators(n, offset, p, i))
            offset += p**i
    return gens


def perm_sign(perm: Perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _pmul(a: Perm, b: Perm) -> Perm:
    return tuple(a[b[i]] for i in range(len(a)))


def _pinv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def sylow_generators_alt(
    two_w: int, order_bound: int = DEFAULT_ORACLE_BOUND
) -> list[Perm]:
    """Generators of a Sylow 2-subgroup of A_{2w}.

    Schreier generators of the even-permutation subgroup of the S_{2w}
    Sylow 2-subgroup, with coset representatives {id, t} for an odd
    generator t; keeps the oracle inside the order bound without building
    the twice-larger symmetric-group Sylow.
    """
    if two_w % 2 != 0:
        raise ValueError("argument must be even")
    order = 2 ** legendre_valuation(two_w, 2)
    if order > 2 * order_bound:
        raise ValueError(
            f"S_{two_w} Sylow order {order} exceeds twice the oracle bound"
        )
    gens = sylow_generators_sym(two_w, 2, order_bound=2 * order_bound)
    odd = [g for g in gens if perm_sign(g) == -1]
    if not odd:
        return gens
    t = odd[0]
    t_inv = _pinv(t)
    out = []
    for g in gens:
        if perm_sign(g) == 1:
            out.append(g)
            out.append(_pmul(t, _pmul(g, t_inv)))
        else:
            out.append(_pmul(g, t_inv))
            out.append(_pmul(t, g))
    identity = tuple(range(two_w))
    seen = {identity}
    unique = []
    for g in out:
        if g not in seen:
            seen.add(g)
            unique.append(g)
    return unique
