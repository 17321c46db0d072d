"""Small finite fields with table-based arithmetic.

Elements of GF(p^k) are integers 0..p^k-1 encoding polynomial coefficients
in base p (little-endian).  The modulus is the lexicographically smallest
monic irreducible of degree k, chosen deterministically so group
constructions and reports are reproducible; the choice is recorded on the
field object.
"""

from __future__ import annotations

from functools import cache


def _poly_mod_mul(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    k = len(modulus) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    for i in range(len(out) - 1, k - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(k):
                out[i - k + j] = (out[i - k + j] - c * modulus[j]) % p
    return out[:k] + [0] * max(0, k - len(out))


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    def trim(x):
        while x and x[-1] == 0:
            x.pop()
        return x

    a, b = trim(list(a)), trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = (a[-1] * inv) % p
            shift = len(a) - len(b)
            for j in range(len(b)):
                a[shift + j] = (a[shift + j] - c * b[j]) % p
            trim(a)
            if not a:
                break
        a, b = b, a
    return a


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    # x^{p^k} == x (mod f) and gcd(x^{p^{k/l}} - x, f) = 1 for prime l | k.
    k = len(coeffs) - 1
    if k == 1:
        return True

    def pth_power(poly: list[int]) -> list[int]:
        result, base, e = [1], poly[:], p
        while e:
            if e & 1:
                result = _poly_mod_mul(result, base, coeffs, p)
            e >>= 1
            if e:
                base = _poly_mod_mul(base, base, coeffs, p)
        return result

    def pad2(poly: list[int]) -> list[int]:
        return poly + [0] * max(0, 2 - len(poly))

    powers = {}
    cur = [0, 1]
    for i in range(1, k + 1):
        cur = pth_power(cur)
        powers[i] = cur[:]
    top = pad2(powers[k][:])
    if top[0] % p or top[1] % p != 1 or any(c % p for c in top[2:]):
        return False
    for l in (d for d in range(2, k + 1) if k % d == 0 and _is_prime(d)):
        diff = pad2(powers[k // l][:])
        diff[1] = (diff[1] - 1) % p
        if len(_poly_gcd(diff, coeffs, p)) != 1:
            return False
    return True


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@cache
def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k over GF(p), lexicographically smallest
    coefficient tuple (c_0, ..., c_{k-1})."""
    if k == 1:
        return (0, 1)
    for code in range(p**k):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        poly = coeffs + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise RuntimeError("no irreducible polynomial found")  # unreachable


class FiniteField:
    """GF(p^k) with precomputed add/mul tables (intended for q <= ~2000)."""

    def __init__(self, p: int, k: int = 1):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("degree must be positive")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = smallest_irreducible(p, k)
        self._build_tables()

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        mod_list = list(self.modulus)

        def decode(code: int) -> list[int]:
            out = []
            for _ in range(k):
                out.append(code % p)
                code //= p
            return out

        def encode(coeffs: list[int]) -> int:
            out = 0
            for c in reversed(coeffs[:k]):
                out = out * p + (c % p)
            return out

        self.add_table = [[0] * q for _ in range(q)]
        self.mul_table = [[0] * q for _ in range(q)]
        polys = [decode(a) for a in range(q)]
        for a in range(q):
            for b in range(a, q):
                s = encode([(x + y) % p for x, y in zip(polys[a], polys[b])])
                self.add_table[a][b] = s
                self.add_table[b][a] = s
                m = encode(_poly_mod_mul(polys[a], polys[b], mod_list, p))
                self.mul_table[a][b] = m
                self.mul_table[b][a] = m
        self.neg_table = [encode([(-x) % p for x in polys[a]]) for a in range(q)]
        self.inv_table = [0] * q
        for a in range(1, q):
            self.inv_table[a] = self.power(a, q - 2)
        self.frob_table = [self.power(a, p) for a in range(q)]

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.inv_table[a]

    def power(self, a: int, e: int) -> int:
        out, base = 1, a
        while e:
            if e & 1:
                out = self.mul_table[out][base]
            e >>= 1
            base = self.mul_table[base][base]
        return out

    def frobenius(self, a: int, times: int = 1) -> int:
        for _ in range(times):
            a = self.frob_table[a]
        return a

    def subfield_elements(self, f: int) -> tuple[int, ...]:
        """Elements fixed by the f-fold Frobenius, i.e. the copy of GF(p^f)."""
        if self.k % f != 0:
            raise ValueError(f"GF({self.p}^{f}) is not a subfield of GF({self.p}^{self.k})")
        return tuple(a for a in range(self.q) if self.frobenius(a, f) == a)

    def __repr__(self):
        return f"FiniteField(p={self.p}, k={self.k}, modulus={self.modulus})"
