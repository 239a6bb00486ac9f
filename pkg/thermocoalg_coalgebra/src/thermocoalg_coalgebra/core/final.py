"""
The stream system as final coalgebra, restricted to what finite machines reach.

Streams of a finite machine are eventually periodic, so beh(x) is stored
exactly as a LassoStream and the stream system's destructor is
u -> (head u, tail u).
"""
import collections

from thermocoalg_coalgebra.core.finite_function import FiniteFunction
from thermocoalg_coalgebra.core.machine import ColoredMachine
from thermocoalg_coalgebra.core.stream import LassoStream


def lasso(m, x0):
    """
    @brief beh(x0) in exact stem + cycle form
    """
    seen = {}
    colors = []
    x = x0
    while x not in seen:
        seen[x] = len(colors)
        color, x = m.step(x)
        colors.append(color)
    start = seen[x]
    return LassoStream(colors[:start], colors[start:])


def final_image(m):
    """
    @brief The sub-coalgebra of streams reached from the behaviours of m

    States are LassoStreams, mu(u) = (head u, tail u).
    """
    mu = collections.OrderedDict()
    pending = [lasso(m, x) for x in m.states]
    while pending:
        u = pending.pop(0)
        if u in mu:
            continue
        mu[u] = (u.head, u.tail)
        pending.append(u.tail)
    return ColoredMachine(mu, m.colors)


def behaviour_map(m, target=None):
    """
    @brief x -> beh(x) as a function into the states of final_image(m)
    """
    if target is None:
        target = final_image(m)
    return FiniteFunction(m.states, target.states, {x: lasso(m, x) for x in m.states})
