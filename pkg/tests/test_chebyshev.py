import pytest

from sl2fusion.chebyshev import (
    cheb,
    cheb_closed,
    cheb_product,
    numerical_multiplicity,
    weyl_generating_series,
)
from sl2fusion.partitions import Partition, partitions_of
from sl2fusion.polynomials import IntPoly


def P(*coeffs):
    return IntPoly.from_list(coeffs)


def test_cheb_small_values():
    assert cheb(0) == P(1)
    assert cheb(1) == P(1)
    assert cheb(2) == P(1, -1)
    assert cheb(4) == P(1, -3, 1)


def test_cheb_closed_small_values():
    assert cheb_closed(3) == P(1, -2)
    assert cheb_closed(0) == P(1)
    assert cheb_closed(6) == P(1, -5, 6, -1)


def test_cheb_routes_agree():
    for n in range(61):
        assert cheb(n) == cheb_closed(n)


def test_cheb_degree_and_constant_term():
    for n in range(30):
        p = cheb(n)
        assert p.coeff(0) == 1
        assert (p.degree or 0) == n // 2


def test_product_identity_small():
    x = IntPoly.monomial(1)
    for i in range(1, 13):
        for j in range(1, i + 1):
            assert cheb(i) * cheb(j) == cheb(i + 1) * cheb(j - 1) + x ** j * cheb(i - j)


def test_cheb_product():
    assert cheb_product((1, 1, 1)) == P(1)
    assert cheb_product(()) == P(1)
    assert cheb_product((2, 2)) == P(1, -2, 1)


def test_split_identity_small():
    for weight in range(11):
        for xi in partitions_of(weight):
            if len(xi) < 2:
                continue
            split = cheb_product(xi.plus()) + cheb_product(xi.minus()).shift(xi[-1])
            assert split == cheb_product(xi)


def test_numerical_multiplicity_examples():
    assert numerical_multiplicity((1, 1, 1, 1), 2, 2) == 2
    assert numerical_multiplicity((2, 1), 2, 3) == 1
    assert numerical_multiplicity((1, 1), 1, 0) == 0


def test_numerical_multiplicity_guards():
    assert numerical_multiplicity((2, 2), 2, 5) == 0  # parity
    assert numerical_multiplicity((2, 2), 2, 6) == 0  # beyond the weight
    assert numerical_multiplicity((), 3, 0) == 1


def test_numerical_multiplicity_preconditions():
    with pytest.raises(ValueError):
        numerical_multiplicity((3, 1), 2, 4)
    with pytest.raises(ValueError):
        numerical_multiplicity((1,), 0, 1)
    with pytest.raises(ValueError):
        numerical_multiplicity((1, 1), 2, -2)


def test_weyl_series_examples():
    assert weyl_generating_series(0, 2, 4).coeffs() == (1, 1, 1, 1)
    assert weyl_generating_series(1, 2, 3).coeffs() == (1, 1, 1)
    assert weyl_generating_series(2, 2, 3).coeffs() == (1, 2, 3)


def test_weyl_series_matches_column_multiplicities():
    for level in (2, 3):
        for n in range(4):
            series = weyl_generating_series(n, level, 5)
            for r in range(5):
                column = Partition((1,) * (n + 2 * r))
                assert series[r] == numerical_multiplicity(column, level, n)


def test_dimension_sum_small():
    # total dimension of a flag equals the product of (part + 1)
    from sl2fusion.demazure import demazure_dimension

    for weight in range(9):
        for xi in partitions_of(weight):
            expected = 1
            for part in xi:
                expected *= part + 1
            lo = xi[0] if xi else 1
            for level in range(lo, weight + 1):
                total = sum(
                    numerical_multiplicity(xi, level, n) * demazure_dimension(level, n)
                    for n in range(weight, -1, -2)
                )
                assert total == expected, (xi, level)
