"""
Total functions between finite sets and the laws of their composition.
"""
from thermocoalg_common.core.errors import ValidationError
from thermocoalg_common.core.report import CheckReport


class FiniteFunction(object):
    """
    @brief f: domain -> codomain given by a total assignment

    f.then(g) is g o f, as in diagrammatic order; f >> g is the same.
    """
    __slots__ = ['_domain', '_codomain', '_mapping']

    def __init__(self, domain, codomain, mapping):
        self._domain = frozenset(domain)
        self._codomain = frozenset(codomain)
        mapping = dict(mapping)
        missing = [x for x in self._domain if x not in mapping]
        if missing:
            raise ValidationError("mapping", "not total, no image for {}".format(sorted(map(repr, missing))))
        extra = [x for x in mapping if x not in self._domain]
        if extra:
            raise ValidationError("mapping", "assigns values outside the domain: {}".format(sorted(map(repr, extra))))
        stray = [y for y in mapping.values() if y not in self._codomain]
        if stray:
            raise ValidationError("mapping", "image leaves the codomain: {}".format(sorted(map(repr, stray))))
        self._mapping = mapping

    @staticmethod
    def identity(carrier):
        carrier = frozenset(carrier)
        return FiniteFunction(carrier, carrier, {x: x for x in carrier})

    @property
    def domain(self):
        return self._domain

    @property
    def codomain(self):
        return self._codomain

    @property
    def mapping(self):
        return dict(self._mapping)

    def __call__(self, x):
        try:
            return self._mapping[x]
        except KeyError:
            raise ValidationError("x", "{!r} is not in the domain".format(x))

    def then(self, other):
        """
        @brief other o self
        """
        if self._codomain != other.domain:
            raise ValidationError("other", "codomain and domain differ, cannot compose")
        return FiniteFunction(self._domain, other.codomain, {x: other(y) for x, y in self._mapping.items()})

    def __rshift__(self, other):
        return self.then(other)

    def __lshift__(self, other):
        return other.then(self)

    def image(self, subset):
        return frozenset(self(x) for x in subset)

    def preimage(self, subset):
        subset = frozenset(subset)
        return frozenset(x for x, y in self._mapping.items() if y in subset)

    def isInjective(self):
        return len(set(self._mapping.values())) == len(self._mapping)

    def __eq__(self, other):
        return isinstance(other, FiniteFunction) and (self._domain, self._codomain, self._mapping) == \
            (other._domain, other._codomain, other._mapping)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._domain, self._codomain, frozenset(self._mapping.items())))

    def printState(self):
        pairs = ", ".join("{!r}: {!r}".format(x, y) for x, y in sorted(self._mapping.items(), key=repr))
        return "FiniteFunction({{{}}})".format(pairs)

    __repr__ = printState


def random_function(rng, domain, codomain):
    """
    @brief Uniformly drawn total function, rng a numpy Generator
    """
    domain = sorted(domain, key=repr)
    codomain = sorted(codomain, key=repr)
    picks = rng.integers(0, len(codomain), size=len(domain))
    return FiniteFunction(domain, codomain, {x: codomain[int(i)] for x, i in zip(domain, picks)})


def _mismatches(f, g):
    return sum(1 for x in f.domain if f(x) != g(x))


def category_laws_check(f, g, h):
    """
    @brief Associativity and identity laws for f: W -> X, g: X -> Y, h: Y -> Z

    Residuals count the points where the two sides disagree.
    """
    report = CheckReport("category laws")
    left = f.then(g).then(h)
    right = f.then(g.then(h))
    report.add("h.(g.f) = (h.g).f", _mismatches(left, right), 0)
    for name, fn in (("f", f), ("g", g), ("h", h)):
        report.add("id.{0} = {0}".format(name), _mismatches(fn.then(FiniteFunction.identity(fn.codomain)), fn), 0)
        report.add("{0}.id = {0}".format(name), _mismatches(FiniteFunction.identity(fn.domain).then(fn), fn), 0)
    return report
