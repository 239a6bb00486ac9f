"""
Streams of colors and their head/tail destructor.

StreamPrefix is a finite observation. LassoStream is an exact eventually
periodic stream stem + cycle + cycle + ..., which is what every finite
deterministic machine produces.
"""
from thermocoalg_common.core.errors import ValidationError


class StreamPrefix(object):
    """
    @brief The finite sequence (c0, ..., c_{n-1})
    """
    __slots__ = ['_colors']

    def __init__(self, colors=()):
        self._colors = tuple(colors)

    @property
    def colors(self):
        return self._colors

    def __len__(self):
        return len(self._colors)

    def __iter__(self):
        return iter(self._colors)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return StreamPrefix(self._colors[i])
        return self._colors[i]

    def __eq__(self, other):
        return isinstance(other, StreamPrefix) and self._colors == other._colors

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._colors)

    def firstDifference(self, other):
        """
        @brief Smallest index where the prefixes differ, None if one extends the other
        """
        for i, (a, b) in enumerate(zip(self._colors, other.colors)):
            if a != b:
                return i
        return None

    def __str__(self):
        return " ".join(str(c) for c in self._colors)

    def printState(self):
        return "StreamPrefix({})".format(", ".join(repr(c) for c in self._colors))

    __repr__ = printState


def stream_destructor(prefix):
    """
    @brief gamma(u) = (head(u), tail(u))
    """
    if not len(prefix):
        raise ValidationError("prefix", "the empty prefix has no head")
    return prefix[0], prefix[1:]


def cons(head, tail):
    return StreamPrefix((head,) + tuple(tail))


def _primitive_period(cycle):
    n = len(cycle)
    for p in range(1, n + 1):
        if n % p == 0 and cycle[:p] * (n // p) == cycle:
            return cycle[:p]
    return cycle


class LassoStream(object):
    """
    @brief stem followed by cycle repeated forever, kept in canonical form

    Canonical means the cycle is primitive and the stem does not end with the
    last color of the cycle, so two lassos are equal iff their streams are.
    """
    __slots__ = ['_stem', '_cycle']

    def __init__(self, stem, cycle):
        stem = list(stem)
        cycle = tuple(cycle)
        if not cycle:
            raise ValidationError("cycle", "a lasso needs a non empty cycle")
        cycle = list(_primitive_period(cycle))
        while stem and stem[-1] == cycle[-1]:
            stem.pop()
            cycle = [cycle[-1]] + cycle[:-1]
        self._stem = tuple(stem)
        self._cycle = tuple(cycle)

    @property
    def stem(self):
        return self._stem

    @property
    def cycle(self):
        return self._cycle

    @property
    def head(self):
        return self._stem[0] if self._stem else self._cycle[0]

    @property
    def tail(self):
        if self._stem:
            return LassoStream(self._stem[1:], self._cycle)
        return LassoStream((), self._cycle[1:] + self._cycle[:1])

    def destruct(self):
        return self.head, self.tail

    def at(self, i):
        if i < len(self._stem):
            return self._stem[i]
        return self._cycle[(i - len(self._stem)) % len(self._cycle)]

    def prefix(self, n):
        return StreamPrefix(self.at(i) for i in range(n))

    def isPeriodic(self):
        return not self._stem

    def __eq__(self, other):
        return isinstance(other, LassoStream) and (self._stem, self._cycle) == (other._stem, other._cycle)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._stem, self._cycle))

    def __str__(self):
        stem = " ".join(str(c) for c in self._stem)
        cycle = " ".join(str(c) for c in self._cycle)
        return "{}({})^w".format(stem + " " if stem else "", cycle)

    def printState(self):
        return "LassoStream(stem={}, cycle={})".format(self._stem, self._cycle)

    __repr__ = printState
