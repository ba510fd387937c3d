"""Graded multiplicities of level-m Demazure modules in flags of fusion
products, by the two-branch partition recursion with memoization."""

from .partitions import Partition, level_decompose
from .polynomials import IntPoly

_ZERO = IntPoly.zero()
_ONE = IntPoly.one()

# Shared memo table keyed by (partition, level, n).  Values are immutable
# IntPoly objects, so concurrent readers under a get-or-insert discipline
# always observe identical results.
_CACHE = {}


def graded_multiplicity(xi, level: int, n: int) -> IntPoly:
    """Polynomial in q counting level-`level` Demazure modules of highest
    weight n in a flag of the fusion product attached to xi, weighted by
    their grade shifts.

    Recursion cases, after the range/parity guard (n > weight or wrong
    parity gives 0):

    * empty xi: 1 at n = 0;
    * single part r <= level: 1 at n = r (the module is itself a Demazure
      module, so its flag is trivial);
    * largest part equal to the level: peel it off, shifting the grade by
      (weight - n) / 2; below the level the multiplicity vanishes;
    * otherwise split along xi.plus() / xi.minus() with grade shift
      (length - 1) * (last part) on the minus branch.

    All coefficients of the result are non-negative.  Requires
    level >= largest part of xi.
    """
    xi = Partition(xi)
    if level < 1:
        raise ValueError("level must be >= 1, got %d" % level)
    if xi and xi[0] > level:
        raise ValueError(
            "no level-%d flag: largest part %d exceeds the level" % (level, xi[0])
        )
    if n < 0:
        raise ValueError("n must be non-negative, got %d" % n)
    return _graded(xi, level, n, _CACHE)


def _graded(xi, level, n, memo):
    weight = xi.weight
    spread = weight - n
    if spread < 0 or spread % 2:
        return _ZERO
    if len(xi) == 0:
        return _ONE
    if len(xi) == 1:
        return _ONE if n == xi[0] else _ZERO
    key = (xi, level, n)
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit
    if xi[0] == level:
        if n >= level:
            result = _graded(Partition(xi[1:]), level, n - level, memo).shift(spread // 2)
        else:
            result = _ZERO
    else:
        result = _graded(xi.plus(), level, n, memo) + _graded(
            xi.minus(), level, n, memo
        ).shift((len(xi) - 1) * xi[-1])
    if memo is not None:
        memo[key] = result
    return result


def flag_table(xi, level: int) -> dict:
    """All nonzero graded multiplicities for a flag of xi, keyed by highest
    weight n.  Always contains n = weight(xi) with polynomial 1."""
    xi = Partition(xi)
    table = {}
    for n in range(xi.weight, -1, -2):
        poly = graded_multiplicity(xi, level, n)
        if poly:
            table[n] = poly
    return table


def demazure_dimension(level: int, n: int) -> int:
    """Dimension (n0 + 1) * (level + 1)^n1 of the level-`level` Demazure
    module of highest weight n = n1 * level + n0."""
    n1, n0 = level_decompose(n, level)
    return (n0 + 1) * (level + 1) ** n1
