"""
Colored machines: deterministic coalgebras mu: M -> C x M.

The states are hidden; only the stream of colors is observable.
"""
import collections
import itertools
import numbers

from thermocoalg_common.core.errors import UnknownStateError, ValidationError
from thermocoalg_coalgebra.core.lts import LTS
from thermocoalg_coalgebra.core.stream import StreamPrefix

Step = collections.namedtuple("Step", "color next")


class ColoredMachine(object):
    """
    @brief mu as a total map state -> (color, next)

    State order follows the insertion order of mu, which keeps printing and
    serialization stable.
    """

    def __init__(self, mu, colors=None):
        items = mu.items() if hasattr(mu, "items") else mu
        self._mu = collections.OrderedDict()
        for state, value in items:
            if state in self._mu:
                raise ValidationError("mu", "state {!r} is defined twice".format(state))
            self._mu[state] = Step(*value)
        if not self._mu:
            raise ValidationError("mu", "a machine needs at least one state")
        for state, s in self._mu.items():
            if s.next not in self._mu:
                raise ValidationError("mu", "{!r} steps to the undefined state {!r}".format(state, s.next))
        used = frozenset(s.color for s in self._mu.values())
        if colors is None:
            colors = used
        self._colors = frozenset(colors)
        if not used <= self._colors:
            raise ValidationError("colors", "undeclared colors {}".format(sorted(map(repr, used - self._colors))))

    @property
    def states(self):
        return tuple(self._mu)

    @property
    def colors(self):
        return self._colors

    def __len__(self):
        return len(self._mu)

    def __contains__(self, state):
        return state in self._mu

    def step(self, state):
        """
        @brief mu(state) = (color, next)
        """
        try:
            return self._mu[state]
        except (KeyError, TypeError):
            raise UnknownStateError(state)

    def color(self, state):
        return self.step(state).color

    def next(self, state):
        return self.step(state).next

    def items(self):
        return self._mu.items()

    def relabel(self, state, color):
        """
        @brief Copy of the machine with one color changed
        """
        self.step(state)
        mu = collections.OrderedDict(self._mu)
        mu[state] = Step(color, mu[state].next)
        return ColoredMachine(mu, self._colors | {color})

    def __eq__(self, other):
        return isinstance(other, ColoredMachine) and dict(self._mu) == dict(other._mu) \
            and self._colors == other._colors

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((frozenset(self._mu.items()), self._colors))

    def printState(self, verbose=False):
        to_ret = "ColoredMachine: {} states, {} colors".format(len(self._mu), len(self._colors))
        if verbose:
            for state, s in self._mu.items():
                to_ret += "\n  {} -> ({}, {})".format(state, s.color, s.next)
        return to_ret

    __repr__ = printState


def behaviour(m, x0, n):
    """
    @brief The first n colors of beh(x0)
    """
    if not isinstance(n, numbers.Integral) or n < 0:
        raise ValidationError("n", "must be an integer >= 0, got {!r}".format(n))
    x = x0
    m.step(x)
    colors = []
    for _ in range(n):
        color, x = m.step(x)
        colors.append(color)
    return StreamPrefix(colors)


def trajectory(m, x0, n):
    """
    @brief States x0, x1, ..., x_n visited by mu
    """
    states = [x0]
    for _ in range(n):
        states.append(m.next(states[-1]))
    return states


def machine_to_lts(m):
    """
    @brief The deterministic LTS with one transition x -color-> next per state
    """
    return LTS([(x, s.color, s.next) for x, s in m.items()], states=m.states, labels=m.colors)


def disjoint_union(m, m_prime):
    """
    @brief m + m', states tagged (0, x) and (1, x')
    """
    mu = collections.OrderedDict()
    for tag, machine in ((0, m), (1, m_prime)):
        for x, s in machine.items():
            mu[(tag, x)] = (s.color, (tag, s.next))
    return ColoredMachine(mu, m.colors | m_prime.colors)


def enumerate_machines(n_states, colors):
    """
    @brief Every machine on states 0..n_states-1 whose colors come from colors
    """
    colors = list(colors)
    states = range(n_states)
    for coloring in itertools.product(colors, repeat=n_states):
        for successors in itertools.product(states, repeat=n_states):
            yield ColoredMachine(zip(states, zip(coloring, successors)), colors)


def random_machine(rng, n_states, colors):
    """
    @brief A machine with uniformly drawn colors and successors, rng a numpy Generator
    """
    colors = list(colors)
    picks = rng.integers(0, len(colors), size=n_states)
    successors = rng.integers(0, n_states, size=n_states)
    return ColoredMachine([(x, (colors[int(picks[x])], int(successors[x]))) for x in range(n_states)], colors)
