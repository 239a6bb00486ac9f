"""
The covariant and contravariant powerset functors on finite sets.

P(f) sends a subset to its direct image, P^op(f) sends a subset of the
codomain to its preimage. Laws are checked by enumerating every subset, so
carriers are capped at POWERSET_CAP elements.
"""
import itertools

from thermocoalg_common.core.errors import ValidationError
from thermocoalg_common.core.report import CheckReport
from thermocoalg_coalgebra.core.finite_function import FiniteFunction

POWERSET_CAP = 12


def powerset(carrier):
    """
    @brief All subsets of carrier as frozensets, smallest first
    """
    elements = sorted(carrier, key=repr)
    if len(elements) > POWERSET_CAP:
        raise ValidationError("size", "{} elements exceed the powerset cap of {}".format(len(elements), POWERSET_CAP))
    return [frozenset(c) for r in range(len(elements) + 1) for c in itertools.combinations(elements, r)]


def covariant(f):
    """
    @brief P(f): P(X) -> P(Y), S -> f(S)
    """
    return FiniteFunction(powerset(f.domain), powerset(f.codomain), {s: f.image(s) for s in powerset(f.domain)})


def contravariant(f):
    """
    @brief P^op(f): P(Y) -> P(X), T -> {x | f(x) in T}
    """
    return FiniteFunction(powerset(f.codomain), powerset(f.domain), {t: f.preimage(t) for t in powerset(f.codomain)})


def _mismatches(left, right):
    return sum(1 for s in left.domain if left(s) != right(s))


def powerset_functor_check(f, g):
    """
    @brief Composition and identity laws of both powerset functors for f: X -> Y, g: Y -> Z
    """
    if f.codomain != g.domain:
        raise ValidationError("g", "f and g are not composable")
    report = CheckReport("powerset functor")
    gf = f.then(g)

    report.add("P(g.f) = P(g).P(f)", _mismatches(covariant(gf), covariant(f).then(covariant(g))), 0)
    for name, carrier in (("X", f.domain), ("Y", f.codomain), ("Z", g.codomain)):
        identity = FiniteFunction.identity(carrier)
        report.add("P(id_{0}) = id_P({0})".format(name),
                   _mismatches(covariant(identity), FiniteFunction.identity(powerset(carrier))), 0)
        report.add("Pop(id_{0}) = id_P({0})".format(name),
                   _mismatches(contravariant(identity), FiniteFunction.identity(powerset(carrier))), 0)
    report.add("Pop(g.f) = Pop(f).Pop(g)", _mismatches(contravariant(gf), contravariant(g).then(contravariant(f))), 0)

    pop_f = contravariant(f)
    wrong = 0
    for t in pop_f.domain:
        if pop_f(t) != frozenset(x for x in f.domain if f(x) in t):
            wrong += 1
    report.add("Pop(f)(T) = {x | f(x) in T}", wrong, 0)
    return report
