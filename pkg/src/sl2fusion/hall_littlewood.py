"""Modified Hall-Littlewood polynomials in two variables, built from
q-Bernstein raising operators, and their expansion into Schur polynomials.

The coefficient of the Schur polynomial s_lambda in the modified
Hall-Littlewood polynomial of mu is the Kostka-Foulkes polynomial
K_{lambda,mu}(q); in two variables this captures exactly the lambda of
length at most 2.
"""

from functools import cache

from .errors import ConsistencyError
from .partitions import Partition
from .polynomials import IntPoly

_ZERO = IntPoly.zero()
_ONE = IntPoly.one()


class SymPoly2:
    """Symmetric polynomial in x1, x2 whose coefficients are IntPoly in q.

    Stored as a map from exponent pairs (a, b) of x1^a x2^b to coefficient
    polynomials; the constructor drops zero terms and rejects maps that are
    not symmetric under swapping the two exponents.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for key, val in items:
            a, b = key
            if a < 0 or b < 0:
                raise ValueError("negative exponent pair %r" % (key,))
            if isinstance(val, int):
                val = IntPoly.constant(val)
            if val:
                total = data.get((a, b), _ZERO) + val
                if total:
                    data[(a, b)] = total
                else:
                    del data[(a, b)]
        for (a, b), poly in data.items():
            if data.get((b, a), _ZERO) != poly:
                raise ValueError("not symmetric at exponents (%d, %d)" % (a, b))
        self._terms = data

    def terms(self):
        return tuple(sorted(self._terms.items()))

    def coeff(self, a, b) -> IntPoly:
        return self._terms.get((a, b), _ZERO)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, SymPoly2):
            return self._terms == other._terms
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, SymPoly2):
            return NotImplemented
        data = dict(self._terms)
        for key, poly in other._terms.items():
            total = data.get(key, _ZERO) + poly
            if total:
                data[key] = total
            else:
                del data[key]
        return SymPoly2(data)

    def __sub__(self, other):
        if not isinstance(other, SymPoly2):
            return NotImplemented
        return self + other.scale(-1)

    def scale(self, factor) -> "SymPoly2":
        """Multiply every coefficient by an IntPoly or integer."""
        if isinstance(factor, int):
            factor = IntPoly.constant(factor)
        if not factor:
            return SymPoly2()
        return SymPoly2({key: poly * factor for key, poly in self._terms.items()})

    def times_x1x2(self, k: int) -> "SymPoly2":
        """Multiply by (x1 * x2)^k."""
        if k < 0:
            raise ValueError("power must be non-negative, got %d" % k)
        return SymPoly2({(a + k, b + k): poly for (a, b), poly in self._terms.items()})

    def reverse_q(self, n: int) -> "SymPoly2":
        """Apply q^n * c(1/q) to every coefficient c."""
        return SymPoly2({key: poly.reverse(n) for key, poly in self._terms.items()})

    def __repr__(self):
        return "SymPoly2(%r)" % (dict(self.terms()),)


def complete_homogeneous(m: int) -> SymPoly2:
    """h_m(x1, x2) = x1^m + x1^(m-1) x2 + ... + x2^m."""
    if m < 0:
        raise ValueError("degree must be non-negative, got %d" % m)
    return SymPoly2({(i, m - i): _ONE for i in range(m + 1)})


def schur_poly(a: int, b: int) -> SymPoly2:
    """Two-variable Schur polynomial of the shape (a, b), a >= b >= 0.

    Equals (x1 x2)^b * h_{a-b}(x1, x2).
    """
    if not a >= b >= 0:
        raise ValueError("need a >= b >= 0, got (%d, %d)" % (a, b))
    return SymPoly2({(b + i, a - i): _ONE for i in range(a - b + 1)})


def bernstein(m: int, f: SymPoly2) -> SymPoly2:
    """Apply the q-Bernstein raising operator of degree m.

    Forms x1^(m+1) f(q x1, x2) - x2^(m+1) f(x1, q x2) and divides by
    x1 - x2.  The numerator is antisymmetric whenever f is symmetric, so
    the division is exact; a nonzero remainder therefore signals a broken
    invariant and raises ConsistencyError.
    """
    if m < 0:
        raise ValueError("operator degree must be non-negative, got %d" % m)
    numerator = {}
    for (a, b), c in f.terms():
        _acc(numerator, (a + m + 1, b), c.shift(a))
        _acc(numerator, (a, b + m + 1), -c.shift(b))
    return SymPoly2(_exact_div_x1_minus_x2(numerator))


def _acc(data, key, poly):
    total = data.get(key, _ZERO) + poly
    if total:
        data[key] = total
    elif key in data:
        del data[key]


def _exact_div_x1_minus_x2(numerator):
    # Synthetic division by (x1 - x2), treating the input as a polynomial in
    # x1 whose coefficients are maps {x2-exponent: IntPoly}.
    if not numerator:
        return {}
    rows = {}
    for (a, b), c in numerator.items():
        rows.setdefault(a, {})[b] = c
    quotient = {}
    carry = {}
    for a in range(max(rows), 0, -1):
        step = {b + 1: c for b, c in carry.items()}
        for b, c in rows.get(a, {}).items():
            _acc(step, b, c)
        carry = step
        for b, c in carry.items():
            quotient[(a - 1, b)] = c
    remainder = {b + 1: c for b, c in carry.items()}
    for b, c in rows.get(0, {}).items():
        _acc(remainder, b, c)
    if remainder:
        raise ConsistencyError("division by (x1 - x2) left remainder %r" % (remainder,))
    return quotient


def modified_hall_littlewood(mu) -> SymPoly2:
    """Q'_mu(x1, x2; q): the raising operators of the parts of mu applied to
    the constant 1, last part first.  Homogeneous of degree weight(mu)."""
    return _mhl(Partition(mu))


@cache
def _mhl(mu: Partition) -> SymPoly2:
    if not mu:
        return SymPoly2({(0, 0): _ONE})
    return bernstein(mu[0], _mhl(Partition(mu[1:])))


def schur_expand(f: SymPoly2) -> dict:
    """Expansion of a homogeneous symmetric polynomial in two-variable Schur
    polynomials, as a map Partition -> IntPoly.

    Greedy elimination on the leading monomial: the exponent pair (a, b)
    with maximal a.  Each subtraction removes that monomial and only
    introduces pairs with smaller maximal exponent, so the loop terminates
    after at most degree/2 + 1 rounds, and the recorded coefficients
    reconstruct the input exactly.
    """
    work = {key: poly for key, poly in f.terms()}
    if not work:
        return {}
    degrees = {a + b for (a, b) in work}
    if len(degrees) > 1:
        raise ValueError("not homogeneous: degrees %s" % sorted(degrees))
    d = degrees.pop()
    out = {}
    while work:
        a = max(key[0] for key in work)
        b = d - a
        if a < b:
            raise ConsistencyError("leading monomial (%d, %d) below the diagonal" % (a, b))
        c = work[(a, b)]
        out[Partition((a, b))] = c
        for i in range(a - b + 1):
            key = (b + i, a - i)
            total = work.get(key, _ZERO) - c
            if total:
                work[key] = total
            else:
                work.pop(key, None)
    return out


@cache
def _schur_coefficients(mu: Partition) -> dict:
    return schur_expand(_mhl(mu))


def kostka_by_operators(lam, mu) -> IntPoly:
    """Kostka-Foulkes polynomial K_{lam,mu}(q) read off from the Schur
    expansion of the modified Hall-Littlewood polynomial of mu.

    lam must have at most two parts (two variables see nothing deeper);
    weights that disagree give 0.
    """
    lam = Partition(lam)
    if len(lam) > 2:
        raise ValueError("shape must have at most 2 parts, got %r" % (lam,))
    mu = Partition(mu)
    if lam.weight != mu.weight:
        return _ZERO
    return _schur_coefficients(mu).get(lam, _ZERO)


def cocharge_by_operators(lam, mu) -> IntPoly:
    """Cocharge Kostka polynomial via the operator route: reverse the
    Kostka-Foulkes polynomial at the weighted size of mu."""
    mu = Partition(mu)
    poly = kostka_by_operators(lam, mu)
    bound = mu.weighted_size()
    if poly.degree is not None and poly.degree > bound:
        raise ConsistencyError(
            "Kostka degree %d exceeds weighted size %d of %s" % (poly.degree, bound, mu)
        )
    return poly.reverse(bound)
