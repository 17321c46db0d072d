import pytest
from hypothesis import given
from hypothesis import strategies as st

from emverify.cyclo import (
    CyclotomicPoly,
    DegreePolynomial,
    cyclotomic,
    divisors,
    euler_phi,
    eval_valuation,
    multiplicative_order,
    poly_divexact,
    poly_eval,
    poly_mul,
    valuation_scan,
)


def test_cyclotomic_examples():
    assert cyclotomic(1).coeffs == (-1, 1)
    assert cyclotomic(6).coeffs == (1, -1, 1)
    assert cyclotomic(20).coeffs == (1, 0, -1, 0, 1, 0, -1, 0, 1)
    with pytest.raises(ValueError):
        cyclotomic(0)


def naive_cyclotomic(m):
    # Independent route: divide x^m - 1 by the product of all proper-divisor
    # cyclotomics, themselves built the same slow way.
    if m == 1:
        return (-1, 1)
    num = tuple([-1] + [0] * (m - 1) + [1])
    den = (1,)
    for d in divisors(m)[:-1]:
        den = poly_mul(den, naive_cyclotomic(d))
    return poly_divexact(num, den)


@pytest.mark.parametrize("m", list(range(1, 61)))
def test_against_naive_division_route(m):
    assert cyclotomic(m).coeffs == naive_cyclotomic(m)


def test_product_identity_up_to_200():
    for m in range(1, 201):
        prod = (1,)
        for d in divisors(m):
            prod = poly_mul(prod, cyclotomic(d).coeffs)
        expected = tuple([-1] + [0] * (m - 1) + [1])
        assert prod == expected
        assert cyclotomic(m).degree == euler_phi(m)
        assert cyclotomic(m).coeffs[-1] == 1


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_product_identity_values(q):
    for m in range(1, 201):
        prod = 1
        for d in divisors(m):
            prod *= cyclotomic(d).eval(q)
        assert prod == q**m - 1


def test_eval_valuation_examples():
    assert eval_valuation(cyclotomic(6), 2, 3) == (3, 1)
    assert eval_valuation(cyclotomic(1), 2, 7) == (1, 0)
    assert eval_valuation(cyclotomic(20), 2, 5) == (205, 1)
    assert eval_valuation(cyclotomic(18), 2, 3) == (57, 1)
    assert eval_valuation(cyclotomic(4), 2, 3) == (5, 0)


def test_degree_polynomial_eval():
    # q * phi_2(q) at q=3 is 12; denominators must divide exactly.
    dp = DegreePolynomial(sign=1, q_power=1, c_den=1, d_den=1, factors=((2, 1),))
    assert dp.eval(3) == 12
    assert dp.valuation_at(3, 3) == 1
    half = DegreePolynomial(sign=1, q_power=1, c_den=1, d_den=2, factors=((2, 2),))
    assert half.eval(3) == 24  # q(q+1)^2/2
    with pytest.raises(ValueError):
        DegreePolynomial(sign=1, q_power=1, c_den=1, d_den=5, factors=((2, 1),)).eval(2)


def test_degree_polynomial_validation():
    with pytest.raises(ValueError):
        DegreePolynomial(sign=2, q_power=0, c_den=1, d_den=1, factors=())
    with pytest.raises(ValueError):
        DegreePolynomial(sign=1, q_power=-1, c_den=1, d_den=1, factors=())
    with pytest.raises(ValueError):
        DegreePolynomial(sign=1, q_power=0, c_den=1, d_den=1, factors=((3, 1), (2, 1)))


def test_multiplicative_order():
    assert multiplicative_order(2, 5) == 4
    assert multiplicative_order(4, 5) == 2
    assert multiplicative_order(2, 7) == 3
    with pytest.raises(ValueError):
        multiplicative_order(10, 5)


def test_scan_examples():
    report = valuation_scan(5, d_set=(4,), i_max=1, q_max=2)
    assert report.ok
    # phi_20(2) = 205 = 5 * 41 was among the checks
    assert report.checks > 0
    report = valuation_scan(3, i_max=2, q_max=10)
    assert report.ok


def test_scan_small_primes_clean():
    for p in (3, 5, 7):
        assert valuation_scan(p, i_max=2, q_max=20).ok


def test_scan_rejects_bad_input():
    with pytest.raises(ValueError):
        valuation_scan(2)
    with pytest.raises(ValueError):
        valuation_scan(5, d_set=(3,))


@given(st.integers(min_value=1, max_value=120), st.integers(min_value=2, max_value=9))
def test_cyclotomic_eval_consistent_with_poly_eval(m, q):
    assert cyclotomic(m).eval(q) == poly_eval(cyclotomic(m).coeffs, q)
    assert cyclotomic(m).eval(q) > 0
