import itertools

import pytest

from pcore.abacus import RowMultiplicities, is_p_prime_multiplicities
from pcore.errors import FeasibilityRefused, InvariantViolation
from pcore.oracle import (
    SearchState,
    brute_force_largest,
    count_walks,
    cross_check_sizes,
    enumerate_p_core_p_prime,
)
from pcore.walk import is_recurrent, labels_used, largest_partition, walk_from_row_multiplicities


def walks_by_product(p, max_len):
    """Every tuple with entries < p and total <= max_len whose residue walk avoids 0."""
    found = set()
    for m in itertools.product(range(p), repeat=p - 1):
        if sum(m) <= max_len and is_p_prime_multiplicities(RowMultiplicities(p, m)):
            found.add(m)
    return found


@pytest.mark.parametrize(
    "p, m, size", [(3, (2, 1), 10), (5, (4, 2, 2, 3), 198), (7, (6, 2, 5, 5, 2, 5), 1726)]
)
def test_brute_force_examples(p, m, size):
    bf = brute_force_largest(p)
    assert bf.row_multiplicities.values == m and bf.size == size
    assert bf.maximizers == 1


def test_brute_force_refuses_large_p():
    with pytest.raises(FeasibilityRefused):
        brute_force_largest(13)
    with pytest.raises(FeasibilityRefused):
        list(enumerate_p_core_p_prime(17))


def test_enumerate_examples():
    assert [m.values for m in enumerate_p_core_p_prime(3, 0)] == [(0, 0)]
    assert {m.values for m in enumerate_p_core_p_prime(3, 2)} == {(0, 0), (1, 0), (2, 0), (0, 1), (0, 2)}


@pytest.mark.parametrize("p, max_len", [(3, 2), (3, 10), (5, 6), (5, 40), (7, 5)])
def test_enumerate_matches_product_search(p, max_len):
    listed = [m.values for m in enumerate_p_core_p_prime(p, max_len)]
    assert len(listed) == len(set(listed))
    assert set(listed) == walks_by_product(p, max_len)
    assert len(listed) == count_walks(p, max_len)


def test_enumeration_count_matches_search():
    assert len(list(enumerate_p_core_p_prime(5))) == brute_force_largest(5).walks_searched == 115


@pytest.mark.parametrize("p", [3, 5, 7])
def test_enumerated_multiplicity_bounds(p):
    for m in enumerate_p_core_p_prime(p):
        assert all(v <= p - 1 for v in m)
        if m[1] > 0:
            assert all(v <= p - 2 for v in m.values[1:])


@pytest.mark.parametrize("p", [3, 5, 7])
def test_cross_check_sizes(p):
    report = cross_check_sizes(p)
    assert report.ok, report.first_mismatch
    assert report.checked == count_walks(p)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_maximizer_is_recurrent(p):
    w = walk_from_row_multiplicities(brute_force_largest(p).row_multiplicities)
    assert is_recurrent(w) and labels_used(w) == set(range(1, p))


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_brute_force_equals_solver(p):
    bf = brute_force_largest(p)
    lp = largest_partition(p)
    assert (bf.row_multiplicities, bf.size) == (lp.row_multiplicities, lp.size)


def test_search_state_invariant():
    SearchState(0, 2, (0,))
    with pytest.raises(InvariantViolation):
        SearchState(0, 3, (1, 1))
