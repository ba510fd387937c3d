"""Renormalized Chebyshev polynomials of the second kind and the series
quotient that counts Demazure modules of a fixed level in a flag of a fusion
product numerically (after setting the grading variable to 1)."""

from functools import cache
from math import comb

from .errors import ConsistencyError
from .partitions import Partition, level_decompose
from .polynomials import IntPoly, IntSeries


@cache
def cheb(n: int) -> IntPoly:
    """The n-th renormalized Chebyshev polynomial, a polynomial in x.

    Defined by the three-term recurrence p(n+1) = p(n) - x*p(n-1) with
    p(0) = p(1) = 1; its degree is n // 2 and its constant term is 1.
    """
    if n < 0:
        raise ValueError("index must be non-negative, got %d" % n)
    if n <= 1:
        return IntPoly.one()
    return cheb(n - 1) - cheb(n - 2).shift(1)


def cheb_closed(n: int) -> IntPoly:
    """Same polynomial via the alternating binomial sum, no recurrence.

    Coefficient of x^s is (-1)^s * C(n-s, s); kept as an independent route
    for cross-checking cheb().
    """
    if n < 0:
        raise ValueError("index must be non-negative, got %d" % n)
    return IntPoly((s, (-1) ** s * comb(n - s, s)) for s in range(n // 2 + 1))


def cheb_product(parts) -> IntPoly:
    """Product of cheb(p) over the parts of a partition; 1 for the empty one."""
    return _cheb_product(Partition(parts))


@cache
def _cheb_product(xi: Partition) -> IntPoly:
    if not xi:
        return IntPoly.one()
    return _cheb_product(Partition(xi[1:])) * cheb(xi[0])


@cache
def _flag_series(level: int, n: int, order: int) -> IntSeries:
    # cheb(level - n0 - 1) / cheb(level)^(n1 + 1), truncated; constant term
    # of every cheb is 1, so the division is exact over the integers.
    n1, n0 = level_decompose(n, level)
    numerator = IntSeries.from_poly(cheb(level - n0 - 1), order)
    denominator = IntSeries.from_poly(cheb(level), order) ** (n1 + 1)
    return numerator / denominator


def numerical_multiplicity(xi, level: int, n: int) -> int:
    """Total number of level-`level` Demazure modules of highest weight n in
    a flag of the fusion product attached to xi.

    Computed as one coefficient of the Chebyshev series quotient, entirely
    independent of the graded recursion in the demazure module.  Returns 0
    when n exceeds the weight of xi or has the wrong parity.  Requires
    level >= largest part of xi (otherwise no flag exists).
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
    spread = xi.weight - n
    if spread < 0 or spread % 2:
        return 0
    k = spread // 2
    quotient = _flag_series(level, n, k + 1)
    value = sum(c * quotient[k - e] for e, c in _cheb_product(xi).items() if e <= k)
    if value < 0:
        raise ConsistencyError(
            "negative multiplicity %d at xi=%s level=%d n=%d" % (value, xi, level, n)
        )
    return value


def weyl_generating_series(n: int, level: int, order: int) -> IntSeries:
    """Generating series whose r-th coefficient counts level-`level` Demazure
    modules of highest weight n in a flag of the local Weyl module W(n + 2r).

    Equals cheb(level - n0 - 1) / cheb(level)^(n1 + 1) truncated at `order`.
    """
    if level < 1:
        raise ValueError("level must be >= 1, got %d" % level)
    if n < 0:
        raise ValueError("n must be non-negative, got %d" % n)
    if order < 1:
        raise ValueError("order must be >= 1, got %d" % order)
    return _flag_series(level, n, order)
