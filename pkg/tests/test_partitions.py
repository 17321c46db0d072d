from collections import Counter
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emverify.partitions import (
    beta_set,
    char_degree_exact,
    char_valuation,
    combine,
    conjugate,
    core_quotient,
    cores_of_size,
    from_core_quotient,
    hook_lengths,
    is_core,
    legendre_valuation,
    partition_from_beta,
    partitions,
    valuation,
)

from oracles import core_by_rim_removal, hooks_by_cell_walk, weight_by_rim_removal

partitions_strategy = st.lists(
    st.integers(min_value=1, max_value=9), min_size=0, max_size=8
).map(lambda xs: tuple(sorted(xs, reverse=True)))


def test_conjugate_examples():
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((2, 2)) == (2, 2)


@given(partitions_strategy)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam


def test_hook_lengths_examples():
    assert Counter(hook_lengths((2, 2))) == Counter([3, 2, 2, 1])
    assert Counter(hook_lengths((7,))) == Counter(range(1, 8))
    assert hook_lengths((4, 2, 1)) == (6, 4, 2, 1, 3, 1, 1)


@given(partitions_strategy)
def test_hook_lengths_against_cell_walk(lam):
    assert sorted(hook_lengths(lam)) == hooks_by_cell_walk(lam)
    assert len(hook_lengths(lam)) == sum(lam)


@given(partitions_strategy)
def test_conjugate_preserves_hooks_and_degree(lam):
    assert sorted(hook_lengths(lam)) == sorted(hook_lengths(conjugate(lam)))
    assert char_degree_exact(lam) == char_degree_exact(conjugate(lam))


def test_beta_set_round_trip():
    for n in range(9):
        for lam in partitions(n):
            for extra in range(3):
                beads = len(lam) + extra
                assert partition_from_beta(beta_set(lam, beads)) == lam


def test_core_quotient_examples():
    cq = core_quotient((4, 2, 1), 2)
    assert cq.core == (1,) and cq.weight == 3
    cq = core_quotient((5,), 5)
    assert cq.core == () and cq.weight == 1
    cq = core_quotient((3, 2, 1), 2)
    assert cq.core == (3, 2, 1) and cq.weight == 0
    with pytest.raises(ValueError):
        core_quotient((2, 1), 1)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_core_quotient_against_rim_removal(p):
    for n in range(11):
        for lam in partitions(n):
            cq = core_quotient(lam, p)
            assert cq.core == core_by_rim_removal(lam, p)
            assert cq.weight == weight_by_rim_removal(lam, p)
            assert sum(cq.core) + p * cq.weight == n
            assert is_core(cq.core, p)
            assert is_core(lam, p) == (cq.weight == 0)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_from_core_quotient_round_trip(p):
    for n in range(13):
        for lam in partitions(n):
            cq = core_quotient(lam, p)
            assert from_core_quotient(cq) == lam


def test_from_core_quotient_rejects_non_core():
    cq = core_quotient((4, 2, 1), 2)
    bad = type(cq)(core=(2,), quotient=cq.quotient, p=2, weight=cq.weight)
    with pytest.raises(ValueError):
        from_core_quotient(bad)


def test_combine_small_example():
    lam = combine((1,), ((1,), ()), 2)
    assert sum(lam) == 3
    assert core_quotient(lam, 2).core == (1,)
    assert combine((), ((), (), ()), 3) == ()


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_core_idempotent(p):
    for n in range(13):
        for lam in partitions(n):
            core = core_quotient(lam, p).core
            assert core_quotient(core, p).core == core


def test_two_cores_are_staircases():
    staircases = {tuple(range(k, 0, -1)) for k in range(8)}
    for n in range(21):
        found = set(cores_of_size(n, 2))
        expected = {s for s in staircases if sum(s) == n}
        assert found == expected


def test_char_valuation_examples():
    assert char_valuation((2, 2), 2) == 1
    assert char_valuation((9,), 3) == 0
    assert char_valuation((3, 1, 1), 3) == 1
    assert char_degree_exact((3, 1, 1)) == 6


def test_char_degree_examples():
    assert char_degree_exact((2, 2)) == 2
    assert char_degree_exact((1, 1, 1, 1)) == 1


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_valuation_matches_exact_degree(p):
    for n in range(13):
        for lam in partitions(n):
            degree = char_degree_exact(lam)
            expected = valuation(degree, p) if degree % p == 0 else 0
            assert char_valuation(lam, p) == expected


def test_column_orthogonality_small():
    for n in range(11):
        assert sum(char_degree_exact(lam) ** 2 for lam in partitions(n)) == factorial(n)


def test_legendre():
    for n in range(60):
        for p in (2, 3, 5, 7):
            assert legendre_valuation(n, p) == valuation(factorial(n), p) if n else True
    assert legendre_valuation(0, 2) == 0


@settings(max_examples=40)
@given(partitions_strategy, st.sampled_from([2, 3, 5]))
def test_quotient_components_total_weight(lam, p):
    cq = core_quotient(lam, p)
    assert sum(sum(c) for c in cq.quotient) == cq.weight
    assert len(cq.quotient) == p
