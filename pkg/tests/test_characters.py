import pytest

from sl2fusion.characters import (
    graded_character,
    irreducible_multiplicity,
    irreducible_multiplicity_ses,
    sl2_character,
)
from sl2fusion.partitions import partitions_of
from sl2fusion.polynomials import GradedCharacter, IntPoly

ONE = IntPoly.one()
Q = IntPoly.monomial(1)


def test_irreducible_multiplicity_examples():
    assert irreducible_multiplicity((1, 1), 2) == ONE
    assert irreducible_multiplicity((1, 1), 0) == Q
    assert irreducible_multiplicity((1, 1, 1), 1) == Q + Q ** 2


def test_irreducible_multiplicity_guards():
    assert irreducible_multiplicity((1, 1), 1) == IntPoly.zero()
    assert irreducible_multiplicity((1, 1), 4) == IntPoly.zero()
    with pytest.raises(ValueError):
        irreducible_multiplicity((1, 1), -1)


def test_ses_recursion_base_and_small_cases():
    assert irreducible_multiplicity_ses((2,), 2) == ONE
    assert irreducible_multiplicity_ses((2,), 0) == IntPoly.zero()
    assert irreducible_multiplicity_ses((1, 1), 0) == Q
    assert irreducible_multiplicity_ses((), 0) == ONE
    # values checked against the Kostka route
    assert irreducible_multiplicity_ses((2, 2), 0) == Q ** 2
    assert irreducible_multiplicity_ses((2, 2), 2) == Q
    assert irreducible_multiplicity_ses((2, 2), 4) == ONE


def test_ses_equals_kostka_route_small():
    for weight in range(10):
        for xi in partitions_of(weight):
            for r in range(weight + 3):
                assert irreducible_multiplicity_ses(xi, r) == \
                    irreducible_multiplicity(xi, r), (xi, r)


def test_sl2_character_values():
    assert sl2_character(0) == GradedCharacter({0: 1})
    assert sl2_character(1) == GradedCharacter({1: 1, -1: 1})
    assert sl2_character(2) == GradedCharacter({2: 1, 0: 1, -2: 1})
    with pytest.raises(ValueError):
        sl2_character(-1)


def test_graded_character_pinned():
    assert graded_character((1, 1)) == GradedCharacter(
        {2: 1, 0: ONE + Q, -2: 1}
    )
    assert graded_character((2,)) == GradedCharacter({2: 1, 0: 1, -2: 1})
    assert graded_character(()) == GradedCharacter({0: 1})


def test_graded_character_z1_specialization():
    assert graded_character((1, 1)).specialize_z1() == IntPoly({0: 3, 1: 1})


def test_classical_limit_factorizes():
    for weight in range(10):
        for xi in partitions_of(weight):
            product = GradedCharacter({0: 1})
            for part in xi:
                product = product * sl2_character(part)
            assert graded_character(xi).specialize_q1() == product.specialize_q1()


def test_dimension_is_product_of_parts_plus_one():
    for weight in range(10):
        for xi in partitions_of(weight):
            expected = 1
            for part in xi:
                expected *= part + 1
            assert graded_character(xi).dimension() == expected


def test_multiplicities_non_negative():
    for weight in range(10):
        for xi in partitions_of(weight):
            for r in range(weight + 1):
                for _, c in irreducible_multiplicity(xi, r).items():
                    assert c > 0
