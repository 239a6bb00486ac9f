"""
Coalgebra homomorphisms between colored machines and the finality of beh.

f: M -> M' is a homomorphism when mu'(f(x)) = (color(x), f(next(x))) for
every state x.
"""
import itertools

import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.errors import ValidationError
from thermocoalg_common.core.report import CheckReport
from thermocoalg_coalgebra.core.final import behaviour_map, final_image
from thermocoalg_coalgebra.core.finite_function import FiniteFunction
from thermocoalg_coalgebra.core.machine import behaviour


class HomomorphismCheck(object):
    """
    @brief Verdict of check_homomorphism, truthy when the square commutes

    On failure @witness is the first offending state and @reason says which
    side of the square broke.
    """
    __slots__ = ['ok', 'witness', 'reason']

    def __init__(self, ok, witness=None, reason=None):
        self.ok = ok
        self.witness = witness
        self.reason = reason

    def __bool__(self):
        return self.ok

    __nonzero__ = __bool__

    def printState(self):
        if self.ok:
            return "homomorphism"
        return "not a homomorphism at {!r}: {}".format(self.witness, self.reason)

    __repr__ = printState


def _check_total(m, m_prime, f):
    if f.domain != frozenset(m.states):
        raise ValidationError("f", "must be total on the states of the source machine")
    for x in m.states:
        if f(x) not in m_prime:
            raise ValidationError("f", "{!r} is sent to {!r}, not a state of the target".format(x, f(x)))


def check_homomorphism(m, m_prime, f, n=None):
    """
    @brief Check the commuting square pointwise, then the prefixes up to n (default 2|M|)
    """
    _check_total(m, m_prime, f)
    for x in m.states:
        color, y = m.step(x)
        color_prime, y_prime = m_prime.step(f(x))
        if color != color_prime:
            return HomomorphismCheck(False, x, "color {!r} becomes {!r}".format(color, color_prime))
        if f(y) != y_prime:
            return HomomorphismCheck(False, x, "f(next) = {!r} but next(f) = {!r}".format(f(y), y_prime))
    if n is None:
        n = 2 * len(m)
    for x in m.states:
        index = behaviour(m, x, n).firstDifference(behaviour(m_prime, f(x), n))
        if index is not None:
            return HomomorphismCheck(False, x, "streams differ at index {}".format(index))
    return HomomorphismCheck(True)


def identity_homomorphism(m):
    return FiniteFunction.identity(m.states)


def compose_homomorphisms(m1, m2, m3, f, g):
    """
    @brief g o f for homomorphisms f: m1 -> m2 and g: m2 -> m3
    """
    for name, src, dst, h in (("f", m1, m2, f), ("g", m2, m3, g)):
        verdict = check_homomorphism(src, dst, h)
        if not verdict:
            raise ValidationError(name, verdict.printState())
    composite = FiniteFunction(m1.states, m3.states, {x: g(f(x)) for x in m1.states})
    verdict = check_homomorphism(m1, m3, composite)
    log.test(verdict.ok, "[compose_homomorphisms]", verdict.printState(), "composite is a homomorphism")
    return composite


def _propagate(m, target, assignment, x, t):
    # follow mu from x and t together until a state already assigned is reached
    assignment = dict(assignment)
    while x not in assignment:
        if m.color(x) != target.color(t):
            return None
        assignment[x] = t
        x, t = m.next(x), target.next(t)
    return assignment if assignment[x] == t else None


def homomorphisms_into(m, target):
    """
    @brief Every homomorphism m -> target, found by propagation search
    """
    found = []

    def search(assignment):
        free = [x for x in m.states if x not in assignment]
        if not free:
            found.append(FiniteFunction(m.states, target.states, assignment))
            return
        for t in target.states:
            extended = _propagate(m, target, assignment, free[0], t)
            if extended is not None:
                search(extended)

    search({})
    return found


def color_consistent_maps(m, target):
    """
    @brief All maps M -> T that preserve colors, homomorphisms or not
    """
    choices = [[t for t in target.states if target.color(t) == m.color(x)] for x in m.states]
    for images in itertools.product(*choices):
        yield FiniteFunction(m.states, target.states, dict(zip(m.states, images)))


def finality_check(m, n=None, exhaustive=False):
    """
    @brief beh is a homomorphism into the stream system and the only one

    With exhaustive=True uniqueness is also checked against every color
    consistent map, not only the propagation search.
    """
    if n is None:
        n = 2 * len(m)
    target = final_image(m)
    beh = behaviour_map(m, target)
    report = CheckReport("finality")
    report.add("beh is a homomorphism", 0 if check_homomorphism(m, target, beh, n) else 1, 0)

    wrong = 0
    for k in range(n + 1):
        for x in m.states:
            if behaviour(m, x, k) != beh(x).prefix(k):
                wrong += 1
    report.add("beh matches the prefixes up to {}".format(n), wrong, 0)

    homs = homomorphisms_into(m, target)
    report.add("beh is the unique homomorphism", sum(1 for h in homs if h != beh) + (0 if beh in homs else 1), 0)
    if exhaustive:
        others = sum(1 for h in color_consistent_maps(m, target) if h != beh and check_homomorphism(m, target, h, n))
        report.add("no other color consistent map commutes", others, 0)
    return report
