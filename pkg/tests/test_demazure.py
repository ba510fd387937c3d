import pytest

from sl2fusion.chebyshev import numerical_multiplicity
from sl2fusion.demazure import (
    _graded,
    demazure_dimension,
    flag_table,
    graded_multiplicity,
)
from sl2fusion.partitions import Partition, demazure_partition, partitions_of
from sl2fusion.polynomials import IntPoly


def test_graded_multiplicity_examples():
    assert graded_multiplicity((1, 1), 2, 0) == IntPoly.monomial(1)
    assert graded_multiplicity((1, 1), 2, 2) == IntPoly.one()
    assert graded_multiplicity((1, 1, 1), 2, 1) == IntPoly.monomial(2)


def test_flag_table_weyl_four():
    # graded table of the four-fold column at level 2; its q=1 values (1,2,1)
    # match the series route and the dimension count 9 + 2*3 + 1 = 16
    table = flag_table((1, 1, 1, 1), 2)
    assert table == {
        4: IntPoly.one(),
        2: IntPoly({2: 1, 3: 1}),
        0: IntPoly.monomial(4),
    }
    assert sum(
        p.evaluate(1) * demazure_dimension(2, n) for n, p in table.items()
    ) == 16


def test_flag_table_trivial_cases():
    assert flag_table((2, 1), 2) == {3: IntPoly.one()}
    assert flag_table((), 1) == {0: IntPoly.one()}


def test_demazure_dimension():
    assert demazure_dimension(1, 3) == 8
    assert demazure_dimension(2, 3) == 6
    assert demazure_dimension(4, 0) == 1


def test_flag_of_demazure_module_is_itself():
    for level in range(1, 6):
        for n in range(11):
            table = flag_table(demazure_partition(level, n), level)
            assert table == {n: IntPoly.one()}


def test_preconditions():
    with pytest.raises(ValueError):
        graded_multiplicity((3,), 2, 3)
    with pytest.raises(ValueError):
        graded_multiplicity((1,), 0, 1)
    with pytest.raises(ValueError):
        graded_multiplicity((1, 1), 2, -1)


def test_out_of_range_weights_vanish():
    assert graded_multiplicity((2, 2), 3, 5) == IntPoly.zero()
    assert graded_multiplicity((2, 2), 3, 6) == IntPoly.zero()


def test_coefficients_non_negative():
    for weight in range(9):
        for xi in partitions_of(weight):
            lo = xi[0] if xi else 1
            for level in range(lo, weight + 1):
                for n, poly in flag_table(xi, level).items():
                    assert all(c > 0 for _, c in poly.items()), (xi, level, n)


def test_q1_matches_series_route_small():
    for weight in range(9):
        for xi in partitions_of(weight):
            lo = xi[0] if xi else 1
            for level in range(lo, weight + 1):
                for n in range(weight + 1):
                    assert graded_multiplicity(xi, level, n).evaluate(1) == \
                        numerical_multiplicity(xi, level, n)


def test_memoized_and_plain_recursion_agree():
    for weight in range(8):
        for xi in partitions_of(weight):
            lo = xi[0] if xi else 1
            for level in range(lo, weight + 1):
                for n in range(weight + 1):
                    plain = _graded(Partition(xi), level, n, None)
                    assert plain == graded_multiplicity(xi, level, n)
