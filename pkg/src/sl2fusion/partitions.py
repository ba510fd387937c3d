"""Integer partitions and the small surgeries on them that drive every
recursion in this package."""

from __future__ import annotations


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The constructor accepts any iterable of non-negative integers, sorts it
    in decreasing order and drops zeros, so zero parts are never stored and
    every Partition is automatically in canonical form.  Negative entries
    raise ValueError.
    """

    def __new__(cls, parts=()):
        cleaned = sorted(parts, reverse=True)
        if cleaned and cleaned[-1] < 0:
            raise ValueError("partition parts must be non-negative: %r" % (cleaned,))
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        return super().__new__(cls, cleaned)

    @property
    def weight(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        """Column lengths of the Young diagram; an involution."""
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= i) for i in range(1, self[0] + 1))

    def weighted_size(self) -> int:
        """The statistic sum_i (i-1) * parts[i], rows counted from 1."""
        return sum(i * p for i, p in enumerate(self))

    def plus(self) -> "Partition":
        """Move one box from the last row up to the row above.

        Length <= 1 returns the partition unchanged.  Preserves the weight;
        strictly smaller in the (length, last part) order when length >= 2.
        """
        if len(self) <= 1:
            return self
        return Partition(self[:-2] + (self[-2] + 1, self[-1] - 1))

    def minus(self) -> "Partition":
        """Drop the last row and shorten the row above by its size.

        Length <= 1 returns the empty partition.  Removes 2 * (last part)
        boxes.
        """
        if len(self) <= 1:
            return Partition()
        return Partition(self[:-2] + (self[-2] - self[-1],))

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """Parse comma-separated parts; '' and '-' denote the empty partition."""
        text = text.strip()
        if text in ("", "-"):
            return cls()
        return cls(int(tok) for tok in text.split(","))

    def __str__(self):
        return ",".join(str(p) for p in self) if self else "-"

    def __repr__(self):
        return "Partition(%s)" % (tuple(self),)


def level_decompose(n: int, level: int):
    """Split n as n1 * level + n0 with 0 <= n0 < level; returns (n1, n0)."""
    if level <= 0:
        raise ValueError("level must be positive, got %d" % level)
    if n < 0:
        raise ValueError("n must be non-negative, got %d" % n)
    return divmod(n, level)


def demazure_partition(level: int, n: int) -> Partition:
    """The partition (level, ..., level, n0) of weight n whose fusion product
    realizes the level-`level` Demazure module of highest weight n."""
    n1, n0 = level_decompose(n, level)
    return Partition((level,) * n1 + (n0,))


def partitions_of(weight, max_length=None, max_part=None):
    """All partitions of the given weight, in reverse lexicographic order.

    Optional bounds restrict the number of parts and the largest part.
    """
    if weight < 0:
        raise ValueError("weight must be non-negative, got %d" % weight)
    room = weight if max_length is None else max_length
    largest = weight if max_part is None else min(max_part, weight)
    out = []

    def build(remaining, cap, slots, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if slots == 0:
            return
        for part in range(min(cap, remaining), 0, -1):
            build(remaining - part, part, slots - 1, prefix + (part,))

    build(weight, largest, room, ())
    return out


def partition_count(weight: int) -> int:
    """Number of partitions of `weight`, by the coin-change recurrence.

    Independent of partitions_of; used to cross-check the enumeration.
    """
    if weight < 0:
        raise ValueError("weight must be non-negative, got %d" % weight)
    table = [1] + [0] * weight
    for part in range(1, weight + 1):
        for total in range(part, weight + 1):
            table[total] += table[total - part]
    return table[weight]
