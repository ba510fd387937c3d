"""Exact arithmetic carriers: sparse integer polynomials, truncated integer
power series, and z-Laurent characters with polynomial coefficients.

All coefficients are Python ints, so no operation can overflow.  Every value
is treated as immutable; operations return fresh objects, which makes all
three classes safe to share between threads or memo tables.
"""

from __future__ import annotations


def _as_int(value):
    if isinstance(value, int):
        return value
    raise TypeError("expected an integer, got %r" % (value,))


class IntPoly:
    """Univariate polynomial with unbounded integer coefficients.

    Stored as a sparse exponent -> coefficient map with no zero entries.
    The variable is anonymous; callers read it as q or x depending on
    context, and may pass a variable name when formatting.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exp, coeff in items:
            if exp < 0:
                raise ValueError("exponents must be non-negative, got %d" % exp)
            if coeff:
                total = data.get(exp, 0) + coeff
                if total:
                    data[exp] = total
                else:
                    del data[exp]
        self._terms = data

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def constant(cls, c):
        return cls({0: _as_int(c)})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def from_list(cls, coeffs):
        """Dense constructor: coeffs[k] is the coefficient of exponent k."""
        return cls(enumerate(coeffs))

    def items(self):
        """Term list as ((exponent, coefficient), ...) sorted by exponent."""
        return tuple(sorted(self._terms.items()))

    def coeff(self, exp) -> int:
        return self._terms.get(exp, 0)

    @property
    def degree(self):
        """Largest exponent, or None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        data = dict(self._terms)
        for exp, coeff in other._terms.items():
            total = data.get(exp, 0) + coeff
            if total:
                data[exp] = total
            else:
                del data[exp]
        result = IntPoly.__new__(IntPoly)
        result._terms = data
        return result

    __radd__ = __add__

    def __neg__(self):
        result = IntPoly.__new__(IntPoly)
        result._terms = {e: -c for e, c in self._terms.items()}
        return result

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return IntPoly.zero()
            result = IntPoly.__new__(IntPoly)
            result._terms = {e: c * other for e, c in self._terms.items()}
            return result
        if not isinstance(other, IntPoly):
            return NotImplemented
        data = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = e1 + e2
                total = data.get(exp, 0) + c1 * c2
                if total:
                    data[exp] = total
                elif exp in data:
                    del data[exp]
        result = IntPoly.__new__(IntPoly)
        result._terms = data
        return result

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = IntPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "IntPoly":
        """Multiply by the k-th power of the variable."""
        if k < 0:
            raise ValueError("shift must be non-negative, got %d" % k)
        result = IntPoly.__new__(IntPoly)
        result._terms = {e + k: c for e, c in self._terms.items()}
        return result

    def reverse(self, n: int) -> "IntPoly":
        """q^n * p(1/q): map each exponent e to n - e.

        Requires degree <= n so the result is again a polynomial.  Applying
        reverse twice with the same n is the identity.
        """
        deg = self.degree
        if deg is not None and deg > n:
            raise ValueError("degree %d exceeds reversal bound %d" % (deg, n))
        result = IntPoly.__new__(IntPoly)
        result._terms = {n - e: c for e, c in self._terms.items()}
        return result

    def evaluate(self, x: int) -> int:
        """Exact evaluation at an integer point."""
        return sum(c * x ** e for e, c in self._terms.items())

    def to_json(self):
        """[[exponent, coefficient-as-decimal-string], ...] sorted by exponent."""
        return [[e, str(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, data):
        return cls((int(e), int(c)) for e, c in data)

    def format(self, var="q"):
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.items():
            if e == 0:
                body = str(abs(c))
            else:
                power = var if e == 1 else "%s^%d" % (var, e)
                body = power if abs(c) == 1 else "%d*%s" % (abs(c), power)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "IntPoly(%r)" % (dict(self.items()),)


class IntSeries:
    """Integer power series truncated below a fixed order.

    A series of order k stores the coefficients of x^0 .. x^{k-1} densely.
    Binary operations truncate to the smaller operand order.  Division
    requires the divisor's constant term to be +1 or -1 and is then exact
    over the integers (computed by back-substitution).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs, order=None):
        data = [_as_int(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative, got %d" % order)
            data = data[:order] + [0] * (order - len(data))
        self._coeffs = data

    @classmethod
    def from_poly(cls, poly: IntPoly, order: int) -> "IntSeries":
        data = [0] * order
        for e, c in poly.items():
            if e < order:
                data[e] = c
        return cls(data)

    @property
    def order(self) -> int:
        return len(self._coeffs)

    def coeffs(self):
        return tuple(self._coeffs)

    def __getitem__(self, k):
        if not 0 <= k < len(self._coeffs):
            raise IndexError("coefficient %d outside truncation order %d" % (k, len(self._coeffs)))
        return self._coeffs[k]

    def __eq__(self, other):
        if isinstance(other, IntSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __add__(self, other):
        n = min(self.order, other.order)
        return IntSeries([self._coeffs[i] + other._coeffs[i] for i in range(n)])

    def __sub__(self, other):
        n = min(self.order, other.order)
        return IntSeries([self._coeffs[i] - other._coeffs[i] for i in range(n)])

    def __mul__(self, other):
        n = min(self.order, other.order)
        out = [0] * n
        for i, a in enumerate(self._coeffs[:n]):
            if not a:
                continue
            for j in range(n - i):
                b = other._coeffs[j]
                if b:
                    out[i + j] += a * b
        return IntSeries(out)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a series")
        out = IntSeries([1], self.order)
        for _ in range(n):
            out = out * self
        return out

    def __truediv__(self, other):
        n = min(self.order, other.order)
        if n == 0:
            return IntSeries([])
        unit = other._coeffs[0]
        if unit not in (1, -1):
            raise ValueError("series division needs constant term +1 or -1, got %r" % unit)
        out = [0] * n
        for k in range(n):
            acc = self._coeffs[k]
            for i in range(1, k + 1):
                acc -= other._coeffs[i] * out[k - i]
            out[k] = acc * unit
        return IntSeries(out)

    def inverse(self) -> "IntSeries":
        return IntSeries([1], self.order) / self

    def __repr__(self):
        return "IntSeries(%r)" % (self._coeffs,)


class GradedCharacter:
    """Laurent polynomial in a weight variable z with IntPoly coefficients.

    Models characters of graded sl2-modules: the coefficient of z^k equals
    the coefficient of z^-k, which the constructor enforces.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        data = {}
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        for z, poly in items:
            if isinstance(poly, int):
                poly = IntPoly.constant(poly)
            if poly:
                total = data.get(z, IntPoly.zero()) + poly
                if total:
                    data[z] = total
                else:
                    del data[z]
        for z, poly in data.items():
            if data.get(-z, IntPoly.zero()) != poly:
                raise ValueError("character is not palindromic in z at exponent %d" % z)
        self._coeffs = data

    def coeff(self, z) -> IntPoly:
        return self._coeffs.get(z, IntPoly.zero())

    def support(self):
        return tuple(sorted(self._coeffs))

    def items(self):
        return tuple(sorted(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, GradedCharacter):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        data = dict(self._coeffs)
        for z, poly in other._coeffs.items():
            total = data.get(z, IntPoly.zero()) + poly
            if total:
                data[z] = total
            else:
                del data[z]
        return GradedCharacter(data)

    def scale(self, factor) -> "GradedCharacter":
        """Multiply every coefficient by an IntPoly or integer."""
        if isinstance(factor, int):
            factor = IntPoly.constant(factor)
        return GradedCharacter({z: poly * factor for z, poly in self._coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        data = {}
        for z1, p1 in self._coeffs.items():
            for z2, p2 in other._coeffs.items():
                z = z1 + z2
                total = data.get(z, IntPoly.zero()) + p1 * p2
                if total:
                    data[z] = total
                elif z in data:
                    del data[z]
        return GradedCharacter(data)

    def specialize_z1(self) -> IntPoly:
        """Set z = 1, i.e. sum all coefficients."""
        total = IntPoly.zero()
        for poly in self._coeffs.values():
            total = total + poly
        return total

    def specialize_q1(self):
        """Set q = 1; returns a plain {z-exponent: integer} dict."""
        return {z: poly.evaluate(1) for z, poly in self._coeffs.items()}

    def dimension(self) -> int:
        """Value at z = 1, q = 1."""
        return self.specialize_z1().evaluate(1)

    def to_json(self):
        return [[z, poly.to_json()] for z, poly in self.items()]

    @classmethod
    def from_json(cls, data):
        return cls((int(z), IntPoly.from_json(poly)) for z, poly in data)

    def __repr__(self):
        return "GradedCharacter(%r)" % (dict(self.items()),)
