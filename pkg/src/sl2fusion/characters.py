"""Graded multiplicities of irreducible sl2-modules in fusion products and
the resulting graded characters."""

from functools import cache

from .kostka import cocharge_kostka
from .partitions import Partition
from .polynomials import GradedCharacter, IntPoly

_ZERO = IntPoly.zero()
_ONE = IntPoly.one()

_SES_CACHE = {}


def irreducible_multiplicity(xi, r: int) -> IntPoly:
    """Graded multiplicity of the (r+1)-dimensional irreducible sl2-module
    in the fusion product attached to xi.

    Equals the cocharge Kostka polynomial of the two-row shape
    ((weight + r)/2, (weight - r)/2) with content xi; zero when r exceeds
    the weight or has the wrong parity.
    """
    xi = Partition(xi)
    if r < 0:
        raise ValueError("r must be non-negative, got %d" % r)
    weight = xi.weight
    if r > weight or (weight - r) % 2:
        return _ZERO
    return cocharge_kostka(Partition(((weight + r) // 2, (weight - r) // 2)), xi)


def irreducible_multiplicity_ses(xi, r: int) -> IntPoly:
    """The same multiplicity by the short-exact-sequence recursion on xi,
    kept fully independent of the Kostka route for cross-checking.

    A one-part partition (k) contributes exactly at r = k; otherwise the
    multiplicity splits along xi.plus() and xi.minus(), the minus branch
    shifted by (length - 1) * (last part).
    """
    xi = Partition(xi)
    if r < 0:
        raise ValueError("r must be non-negative, got %d" % r)
    return _ses(xi, r)


def _ses(xi, r):
    weight = xi.weight
    if r > weight or (weight - r) % 2:
        return _ZERO
    if len(xi) == 0:
        return _ONE if r == 0 else _ZERO
    if len(xi) == 1:
        return _ONE if r == xi[0] else _ZERO
    key = (xi, r)
    hit = _SES_CACHE.get(key)
    if hit is not None:
        return hit
    result = _ses(xi.plus(), r) + _ses(xi.minus(), r).shift((len(xi) - 1) * xi[-1])
    _SES_CACHE[key] = result
    return result


def sl2_character(n: int) -> GradedCharacter:
    """Character z^n + z^(n-2) + ... + z^-n of the irreducible sl2-module
    with highest weight n, placed at grade 0."""
    if n < 0:
        raise ValueError("highest weight must be non-negative, got %d" % n)
    return GradedCharacter({n - 2 * k: _ONE for k in range(n + 1)})


def graded_character(xi) -> GradedCharacter:
    """Graded character of the fusion product attached to xi: the sum of
    irreducible characters weighted by their graded multiplicities."""
    return _graded_character(Partition(xi))


@cache
def _graded_character(xi: Partition) -> GradedCharacter:
    weight = xi.weight
    total = GradedCharacter()
    for r in range(weight % 2, weight + 1, 2):
        mult = irreducible_multiplicity(xi, r)
        if mult:
            total = total + sl2_character(r).scale(mult)
    return total
