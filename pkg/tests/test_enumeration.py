import pytest

from oracles import brute_force_b, catalan, partitions_by_growth, vector_partitions_brute

from hyperpart.core import partition_from_diagram, simplex_diagram
from hyperpart.enumeration import (
    Box,
    BudgetExceeded,
    Simplex,
    VolumeBudget,
    a_slice_product_bound,
    a_upper_bound,
    b_lower_bound,
    b_weak_lower_bound,
    count_a,
    count_a_dfs,
    count_b,
    count_by_corner_hook,
    count_by_cvector,
    count_p,
    count_p_tilde,
    enumerate_downsets,
    lempa_k,
    size_histogram,
)
from hyperpart.series import macmahon_numbers, partition_numbers_oracle


def test_enumerate_examples():
    diagrams = list(enumerate_downsets(1, Simplex(3)))
    assert {D.cells for D in diagrams} == {
        frozenset(), frozenset({(1, 1)}), frozenset({(1, 1), (1, 2)}),
        frozenset({(1, 1), (2, 1)}), frozenset({(1, 1), (1, 2), (2, 1)}),
    }
    assert len(list(enumerate_downsets(2, VolumeBudget(1)))) == 2
    assert len(list(enumerate_downsets(1, VolumeBudget(4)))) == 12


@pytest.mark.parametrize("d,n", [(1, 8), (2, 6), (3, 5), (4, 4)])
def test_enumeration_matches_growth_oracle(d, n):
    diagrams = [D.cells for D in enumerate_downsets(d, VolumeBudget(n))]
    assert len(diagrams) == len(set(diagrams))
    layers = partitions_by_growth(d, n)
    assert set(diagrams) == set().union(*layers)
    hist = size_histogram(d, VolumeBudget(n))
    assert hist == [len(layer) for layer in layers]
    assert [count_p(d, i) for i in range(n + 1)] == hist


def test_box_constraint():
    # plane partitions in a 2x2x2 box: MacMahon's box formula gives 20
    assert len(list(enumerate_downsets(2, Box(2, 2, 2)))) == 20
    # integer partitions in a 3x2 rectangle: C(5, 2) = 10
    assert len(list(enumerate_downsets(1, Box(3, 2)))) == 10


def test_parallel_split_is_deterministic():
    serial = size_histogram(3, VolumeBudget(7))
    assert size_histogram(3, VolumeBudget(7), jobs=2, split_depth=2) == serial
    assert size_histogram(3, VolumeBudget(7), jobs=3, split_depth=4) == serial


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        size_histogram(3, VolumeBudget(9), budget=100)
    with pytest.raises(BudgetExceeded):
        count_b(2, 9, budget=10)
    with pytest.raises(BudgetExceeded):
        list(enumerate_downsets(2, Simplex(6), budget=50))


def test_count_p_examples():
    assert count_p(1, 5) == 7
    assert count_p(2, 6) == 48
    assert count_p(3, 6) == 140
    assert macmahon_numbers(3, 6)[6] - count_p(3, 6) == 1


def test_count_p_tilde_examples():
    assert count_p_tilde(1, 0) == 1
    assert count_p_tilde(1, 4) == 12
    assert count_p_tilde(3, 3) == 16
    for d in (1, 2, 3):
        for n in range(2, 8):
            assert count_p(d, n) < count_p_tilde(d, n) <= n * count_p(d, n)


def test_count_a_examples():
    assert count_a(1, 2) == 2
    assert count_a(1, 4) == 14
    assert count_a(2, 3) == 2


def test_a1_is_catalan_with_same_index():
    assert [count_a(1, k) for k in range(11)] == [catalan(k) for k in range(11)]


@pytest.mark.parametrize("d,k_max", [(1, 10), (2, 7), (3, 6)])
def test_count_a_matches_direct_enumeration(d, k_max):
    for k in range(k_max + 1):
        assert count_a(d, k) == count_a_dfs(d, k)


def test_simplex_diagrams_fit():
    for d in (1, 2):
        for k in range(7):
            for D in enumerate_downsets(d, Simplex(k)):
                pi = partition_from_diagram(D)
                assert all(sum(pos) + v <= k for pos, v in pi.entries.items())
                assert D.cells <= simplex_diagram(d, k).cells


def test_count_b_examples():
    assert count_b(1, 1) == 1
    assert count_b(1, 4) == 12 == b_lower_bound(1, 4)
    assert count_b(2, 4) >= b_lower_bound(2, 4) == 1


@pytest.mark.parametrize("d,k_max", [(1, 9), (2, 6), (3, 5)])
def test_count_b_matches_brute_force(d, k_max):
    for k in range(1, k_max + 1):
        assert count_b(d, k) == brute_force_b(d, k)


def test_simplex_inequalities():
    for d in (1, 2):
        for k in range(1, 10):
            a, b = count_a(d, k), count_b(d, k)
            assert a >= b
            assert b >= b_lower_bound(d, k)
            assert b >= b_weak_lower_bound(d, k)
            assert a <= a_upper_bound(d, k)
            if d >= 2 and k >= d:
                assert a <= a_slice_product_bound(d, k)
    for k in range(3, 7):
        assert count_a(3, k) <= a_slice_product_bound(3, k)


def test_lempa_k_exact():
    assert lempa_k(1, 8) == 4
    assert lempa_k(2, 20) == 4
    assert lempa_k(2, 36) == 6
    for d in (1, 2, 3):
        for n in range(1, 200):
            k = lempa_k(d, n)
            f = 1
            for i in range(2, d + 2):
                f *= i
            assert k ** (d + 1) <= f * n < (k + 1) ** (d + 1)


@pytest.mark.parametrize("d", [1, 2])
def test_lempa_instances(d):
    m2 = macmahon_numbers(2, 20)
    for n in range(1, 21):
        k = lempa_k(d, n)
        # for d = 2 the volume count is MacMahon's (checked separately up to n = 9)
        ptilde = sum(m2[: n + 1]) if d == 2 else count_p_tilde(1, n)
        assert ptilde >= count_a(d, k)


def test_count_by_cvector_examples():
    assert count_by_cvector(2, (0, 0)) == 1
    assert count_by_cvector(2, (2, 2)) == 2
    assert count_by_cvector(2, (2, 1)) == 1
    assert count_by_cvector(2, (3, 0)) == 0
    for target in [(3, 3), (4, 2), (2, 2, 2), (3, 2, 1)]:
        assert count_by_cvector(len(target), target) == vector_partitions_brute(target)


def test_count_by_corner_hook_examples():
    assert count_by_corner_hook(3, 0) == 1
    assert count_by_corner_hook(3, 6) == 141
    p = partition_numbers_oracle(10)
    assert [count_by_corner_hook(1, n) for n in range(11)] == list(p)
