"""Exact cyclotomic polynomial arithmetic and factored degree polynomials.

All arithmetic is integer-exact (dense coefficient tuples, Python ints);
no floating point anywhere.  Degree polynomials are kept factored as a
multiset of cyclotomic indices and only ever expanded by evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache

from emverify.partitions import valuation

Poly = tuple[int, ...]  # dense coefficients, ascending powers


def poly_mul(a: Poly, b: Poly) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return tuple(out)


def poly_divexact(num: Poly, den: Poly) -> Poly:
    """Exact division of integer polynomials; raises if not exact."""
    num_list = list(num)
    dn, dd = len(num_list) - 1, len(den) - 1
    if den[-1] == 0:
        raise ValueError("denominator must have nonzero leading coefficient")
    quot = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        coeff = num_list[k + dd]
        if coeff % den[-1] != 0:
            raise ValueError("division not exact")
        c = coeff // den[-1]
        quot[k] = c
        if c:
            for j, cd in enumerate(den):
                num_list[k + j] -= c * cd
    if any(num_list):
        raise ValueError("division not exact (nonzero remainder)")
    return tuple(quot)


def poly_eval(coeffs: Poly, x: int) -> int:
    out = 0
    for c in reversed(coeffs):
        out = out * x + c
    return out


def poly_compose_power(coeffs: Poly, k: int) -> Poly:
    """coeffs(x) -> coeffs(x^k)."""
    out = [0] * ((len(coeffs) - 1) * k + 1)
    for i, c in enumerate(coeffs):
        out[i * k] = c
    return tuple(out)


def poly_substitute_neg(coeffs: Poly) -> Poly:
    """coeffs(x) -> coeffs(-x)."""
    return tuple(c if i % 2 == 0 else -c for i, c in enumerate(coeffs))


@cache
def divisors(m: int) -> tuple[int, ...]:
    out = [d for d in range(1, m + 1) if m % d == 0]
    return tuple(out)


@cache
def euler_phi(m: int) -> int:
    out, rest = 1, m
    for p in range(2, m + 1):
        if p * p > rest:
            break
        if rest % p == 0:
            out *= p - 1
            rest //= p
            while rest % p == 0:
                out *= p
                rest //= p
    if rest > 1:
        out *= rest - 1
    return out


@dataclass(frozen=True)
class CyclotomicPoly:
    index: int
    coeffs: Poly

    def eval(self, q: int) -> int:
        return poly_eval(self.coeffs, q)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@cache
def cyclotomic(m: int) -> CyclotomicPoly:
    """The m-th cyclotomic polynomial, exact integer coefficients.

    Built by the standard index reductions down to prime index; the
    product identity prod_{d|m} phi_d(X) = X^m - 1 is what the tests pin.
    """
    if m < 1:
        raise ValueError(f"index must be positive, got {m}")
    poly = _cyclotomic_coeffs(m)
    assert len(poly) - 1 == euler_phi(m) and poly[-1] == 1
    return CyclotomicPoly(index=m, coeffs=poly)


@cache
def _cyclotomic_coeffs(m: int) -> Poly:
    if m == 1:
        return (-1, 1)
    p = next(d for d in range(2, m + 1) if m % d == 0)
    k = m // p
    if k == 1:
        return tuple([1] * p)
    if k % p == 0:
        return poly_compose_power(_cyclotomic_coeffs(k), p)
    base = _cyclotomic_coeffs(k)
    return poly_divexact(poly_compose_power(base, p), base)


def cyclotomic_product(m: int, q: int) -> int:
    """prod over d | m of phi_d(q), by exact evaluation."""
    out = 1
    for d in divisors(m):
        out *= cyclotomic(d).eval(q)
    return out


@dataclass(frozen=True)
class DegreePolynomial:
    """A character degree in factored form: sign * q^a * prod phi_e(q)^m / (c*d).

    c is prime to q (divides the centre order of the ambient group); d is
    divisible only by bad primes of the family.  The cyclotomic part is a
    multiset of indices with positive multiplicities; cancellation against
    the denominator is resolved by exact evaluation only.
    """

    sign: int
    q_power: int
    c_den: int
    d_den: int
    factors: tuple[tuple[int, int], ...]  # (cyclotomic index, multiplicity)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.q_power < 0 or self.c_den < 1 or self.d_den < 1:
            raise ValueError("invalid degree polynomial data")
        if any(mult < 1 or idx < 1 for idx, mult in self.factors):
            raise ValueError("factors need positive index and multiplicity")
        if list(self.factors) != sorted(self.factors):
            raise ValueError("factors must be sorted by index")

    def eval(self, q: int) -> int:
        num = self.sign * q**self.q_power
        for idx, mult in self.factors:
            num *= cyclotomic(idx).eval(q) ** mult
        den = self.c_den * self.d_den
        if num % den != 0:
            raise ValueError(
                f"degree polynomial is not integral at q={q}: {num}/{den}"
            )
        return num // den

    def valuation_at(self, q: int, p: int) -> int:
        return valuation(self.eval(q), p)


def eval_valuation(
    poly: CyclotomicPoly | DegreePolynomial, q: int, p: int
) -> tuple[int, int]:
    """Exact value at q together with its p-adic valuation."""
    if q < 2:
        raise ValueError(f"specialisation point must be >= 2, got {q}")
    value = poly.eval(q)
    return value, (valuation(value, p) if value % p == 0 else 0)


def multiplicative_order(q: int, p: int) -> int:
    if q % p == 0:
        raise ValueError(f"{q} is divisible by {p}")
    d, acc = 1, q % p
    while acc != 1:
        acc = (acc * q) % p
        d += 1
    return d


@dataclass(frozen=True)
class ScanViolation:
    p: int
    q: int
    d: int
    m: int
    expected_nu: int
    actual_nu: int


@dataclass
class ScanReport:
    p: int
    i_max: int
    q_max: int
    d_set: tuple[int, ...]
    checks: int = 0
    violations: list[ScanViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def valuation_scan(
    p: int, d_set: tuple[int, ...] | None = None, i_max: int = 2, q_max: int = 50
) -> ScanReport:
    """Scan p-adic valuations of cyclotomic values at integer points.

    For every q <= q_max with multiplicative order d modulo p (d ranging
    over d_set, default all divisors of p-1), checks that
    nu_p(phi_{d*p^i}(q)) = 1 for 1 <= i <= i_max and that phi_m(q) is
    prime to p for every other m <= d*p^i_max with m != d.  Violations are
    report content, not faults.
    """
    if p < 3:
        raise ValueError("p must be an odd prime")
    if d_set is None:
        d_set = tuple(d for d in divisors(p - 1))
    for d in d_set:
        if (p - 1) % d != 0:
            raise ValueError(f"{d} does not divide {p - 1}")
    report = ScanReport(p=p, i_max=i_max, q_max=q_max, d_set=tuple(sorted(d_set)))
    for q in range(2, q_max + 1):
        if q % p == 0:
            continue
        d = multiplicative_order(q, p)
        if d not in d_set:
            continue
        special = {d * p**i for i in range(1, i_max + 1)}
        for m in range(1, d * p**i_max + 1):
            if m == d:
                continue  # q is a root of phi_d modulo p; valuation unconstrained
            expected = 1 if m in special else 0
            actual = _cyclotomic_valuation(m, q, p)
            report.checks += 1
            if actual != expected:
                report.violations.append(
                    ScanViolation(p=p, q=q, d=d, m=m, expected_nu=expected, actual_nu=actual)
                )
    return report


def _cyclotomic_valuation(m: int, q: int, p: int) -> int:
    # Cheap exact pre-filter: divisibility by p from the residue of the
    # coefficients; only evaluate the big integer when p divides the value.
    coeffs = cyclotomic(m).coeffs
    residue = 0
    for c in reversed(coeffs):
        residue = (residue * q + c) % p
    if residue != 0:
        return 0
    return valuation(cyclotomic(m).eval(q), p)
