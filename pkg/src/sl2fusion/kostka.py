"""Cocharge Kostka polynomials for two-row shapes by a box-moving recursion
on the content partition, plus a brute-force oracle that enumerates
semistandard tableaux and sums q^charge over their reading words."""

from dataclasses import dataclass

from .partitions import Partition
from .polynomials import IntPoly

_ZERO = IntPoly.zero()
_ONE = IntPoly.one()

_CACHE = {}


def cocharge_kostka(lam, mu) -> IntPoly:
    """Cocharge Kostka polynomial for a shape lam of length <= 2 and content
    mu, by the recursion on mu.

    One step replaces mu by mu.plus() (same shape) and by mu.minus() (shape
    offset by the last part of mu in both rows, grade shifted by
    (length(mu) - 1) * last part); the minus branch vanishes when the offset
    would push the second row negative.  Bases: empty mu pairs only with the
    empty shape, a one-part mu only with the equal one-row shape.
    """
    lam = Partition(lam)
    if len(lam) > 2:
        raise ValueError("shape must have at most 2 parts, got %r" % (lam,))
    mu = Partition(mu)
    a = lam[0] if lam else 0
    b = lam[1] if len(lam) > 1 else 0
    if a + b != mu.weight:
        return _ZERO
    return _cocharge(a, b, mu)


def _cocharge(a, b, mu):
    # a >= b is preserved by the recursion; only b can go negative.
    if b < 0:
        return _ZERO
    if len(mu) == 0:
        return _ONE if a == 0 and b == 0 else _ZERO
    if len(mu) == 1:
        return _ONE if (a, b) == (mu[0], 0) else _ZERO
    key = (a, b, mu)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    last = mu[-1]
    result = _cocharge(a, b, mu.plus())
    if b - last >= 0:
        result = result + _cocharge(a - last, b - last, mu.minus()).shift(
            (len(mu) - 1) * last
        )
    _CACHE[key] = result
    return result


@dataclass(frozen=True)
class Tableau:
    """A semistandard tableau with at most two rows.

    rows holds the nonempty rows top to bottom; rows weakly increase left to
    right and columns strictly increase top to bottom.
    """

    rows: tuple

    def __post_init__(self):
        if len(self.rows) > 2:
            raise ValueError("at most two rows supported")
        for row in self.rows:
            if any(v < 1 for v in row):
                raise ValueError("entries must be positive integers")
            if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
                raise ValueError("rows must weakly increase")
        if len(self.rows) == 2:
            top, bottom = self.rows
            if len(bottom) > len(top):
                raise ValueError("second row longer than the first")
            if any(bottom[j] <= top[j] for j in range(len(bottom))):
                raise ValueError("columns must strictly increase")

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    @property
    def content(self):
        """Multiplicity of each letter 1 .. max, as a tuple."""
        filling = [v for row in self.rows for v in row]
        if not filling:
            return ()
        counts = [0] * max(filling)
        for v in filling:
            counts[v - 1] += 1
        return tuple(counts)

    def reading_word(self):
        """Rows read right to left, top row first."""
        return tuple(v for row in self.rows for v in reversed(row))


def ssyt_tableaux(shape, content):
    """All semistandard tableaux of the given two-row shape and content, by
    backtracking over cells in row order with letters tried in increasing
    order (so the list order is deterministic)."""
    shape = Partition(shape)
    if len(shape) > 2:
        raise ValueError("shape must have at most 2 parts, got %r" % (shape,))
    content = Partition(content)
    if shape.weight != content.weight:
        return []
    if not shape:
        return [Tableau(rows=())]
    top_len = shape[0]
    bottom_len = shape[1] if len(shape) > 1 else 0
    counts = list(content)
    letters = len(counts)
    top = []
    bottom = []
    found = []

    def fill(cell):
        if cell == top_len + bottom_len:
            rows = (tuple(top), tuple(bottom)) if bottom else (tuple(top),)
            found.append(Tableau(rows=rows))
            return
        in_top = cell < top_len
        row = top if in_top else bottom
        col = cell if in_top else cell - top_len
        for v in range(1, letters + 1):
            if not counts[v - 1]:
                continue
            if col > 0 and v < row[col - 1]:
                continue
            if not in_top and v <= top[col]:
                continue
            counts[v - 1] -= 1
            row.append(v)
            fill(cell + 1)
            row.pop()
            counts[v - 1] += 1

    fill(0)
    return found


def charge(word) -> int:
    """Charge of a word whose letter content is a partition.

    Repeatedly extract a standard subword: start at the rightmost 1, then
    for each next letter take its first occurrence to the right of the
    current position, wrapping around to the start of the word when there
    is none.  The letter 1 carries index 0 and the index grows by one at
    every wrap; the subword contributes the sum of its indices.  Extracted
    letters are removed and the process repeats until the word is empty.
    """
    entries = list(word)
    counts = {}
    for v in entries:
        if v < 1:
            raise ValueError("letters must be positive integers, got %r" % (v,))
        counts[v] = counts.get(v, 0) + 1
    if entries:
        top = max(counts)
        profile = [counts.get(v, 0) for v in range(1, top + 1)]
        if any(profile[i] < profile[i + 1] for i in range(top - 1)) or 0 in profile:
            raise ValueError("content %r is not a partition" % (profile,))
    total = 0
    while entries:
        largest = max(entries)
        pos = max(i for i, v in enumerate(entries) if v == 1)
        chosen = [pos]
        index = 0
        for letter in range(2, largest + 1):
            ahead = [i for i in range(pos + 1, len(entries)) if entries[i] == letter]
            if ahead:
                pos = ahead[0]
            else:
                pos = min(i for i, v in enumerate(entries) if v == letter)
                index += 1
            total += index
            chosen.append(pos)
        for i in sorted(chosen, reverse=True):
            del entries[i]
    return total


def kostka_by_charge(lam, mu) -> IntPoly:
    """Kostka-Foulkes polynomial as the charge generating function over all
    semistandard tableaux of shape lam and content mu.

    Exponential-time oracle for the recursion and operator routes.
    """
    lam = Partition(lam)
    if len(lam) > 2:
        raise ValueError("shape must have at most 2 parts, got %r" % (lam,))
    mu = Partition(mu)
    if lam.weight != mu.weight:
        return _ZERO
    out = _ZERO
    for tableau in ssyt_tableaux(lam, mu):
        out = out + IntPoly.monomial(charge(tableau.reading_word()))
    return out
