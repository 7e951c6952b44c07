"""Exit criteria. Each test is one criterion; the summary section prints PASS/FAIL per test."""
import itertools
import time
from math import comb

from oracles import heights, partitions_by_growth

from hyperpart.bounds import constants, crossing_table, verify_suite
from hyperpart.core import Hypermatrix, Partition, partition_from_diagram, simplex_diagram
from hyperpart.enumeration import (
    VolumeBudget,
    b_lower_bound,
    b_weak_lower_bound,
    count_b,
    count_by_corner_hook,
    count_by_cvector,
    count_p,
    enumerate_downsets,
)
from hyperpart.series import macmahon_numbers, partition_numbers_oracle, vector_partition_table
from hyperpart.statistics import c_statistic, corner_hook_volume, stat_vector
from hyperpart.transform import phi, phi_inverse

TOL = 2e-3

# OEIS A000293, solid partitions of n = 0..9
SOLID_PARTITIONS = [1, 1, 4, 10, 26, 59, 140, 307, 684, 1464]


def test_01_macmahon_discrepancy():
    start = time.perf_counter()
    for d in (3, 4, 5):
        m6 = macmahon_numbers(d, 6)[6]
        p6 = count_p(d, 6)
        assert m6 - p6 == comb(d, 3) + comb(d, 4)
    assert time.perf_counter() - start < 60


def test_02_oeis_cross_checks():
    start = time.perf_counter()
    assert [count_p(3, n) for n in range(10)] == SOLID_PARTITIONS
    assert [count_p(2, n) for n in range(10)] == list(macmahon_numbers(2, 9))
    assert [count_p(1, n) for n in range(21)] == list(partition_numbers_oracle(20))
    assert time.perf_counter() - start < 60


def test_03_bijection_suite():
    start = time.perf_counter()
    for d in (1, 2):
        box = list(itertools.product(range(1, 4), repeat=d))
        for vals in itertools.product(range(3), repeat=len(box)):
            A = Hypermatrix(d, dict(zip(box, vals)))
            assert phi_inverse(phi(A)) == A
    for d in (1, 2, 3):
        seen = 0
        for D in enumerate_downsets(d, VolumeBudget(8)):
            pi = partition_from_diagram(D)
            assert phi(phi_inverse(pi)) == pi
            seen += 1
        assert seen == sum(count_p(d, n) for n in range(9))
    assert time.perf_counter() - start < 120


def test_04_vector_partitions_via_cvector():
    for d, caps in ((2, (4, 4)), (3, (3, 3, 3))):
        table = vector_partition_table(d, caps)
        for index, value in table.items():
            assert count_by_cvector(d, index) == value, index


def test_05_corner_hook_interpretation():
    for d in (2, 3):
        m = macmahon_numbers(d, 7)
        assert [count_by_corner_hook(d, n) for n in range(8)] == list(m)


def test_06_inequality_suite():
    for d in (1, 2, 3):
        report = verify_suite(d, n_max=6, k_max=6)
        assert report.counts()["fail"] == 0, [i.as_dict() for i in report.failures()]
        assert report.counts()["skipped"] == 0
        for inst in report.instances:
            if isinstance(inst.lhs, int):
                assert inst.error_bound == 0.0
            else:
                assert inst.rhs - inst.lhs > inst.error_bound


def test_07_constants():
    start = time.perf_counter()
    assert abs(constants(2).gamma.value - 2.0094) <= TOL
    assert abs(constants(3).alpha.value - 1.2797) <= TOL
    assert abs(constants(3).beta.value - 4.0799) <= TOL
    assert abs(constants(7).gamma.value - 1.45831) <= TOL
    rows = crossing_table(10)
    assert all(above == (d >= 7) for d, _, _, above in rows)
    assert time.perf_counter() - start < 1


def test_08_sharpness_and_degeneracy():
    for d in (1, 2, 3):
        for k in range(9):
            pi = partition_from_diagram(simplex_diagram(d, k))
            n = comb(k, d + 1)
            assert all(c_statistic(pi, axis) == n for axis in range(1, d + 1))
    for n, layer in enumerate(partitions_by_growth(1, 10)):
        for D in layer:
            pi = Partition(1, heights(D))
            assert c_statistic(pi, 1) == n == corner_hook_volume(pi)
            assert stat_vector(pi).values == (n,)


def test_09_b_lower_bounds():
    assert count_b(1, 4) == 12 == (3 * 2 ** (3 - 1)) ** comb(1, 1)
    for d in (1, 2):
        for k in range(1, 10):
            b = count_b(d, k)
            assert b >= b_lower_bound(d, k)
            assert b >= b_weak_lower_bound(d, k)
