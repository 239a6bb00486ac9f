"""
Coalgebras as algebras in the opposite category, read off finite squares.

A homomorphism square for f: (M, mu) -> (M', mu') is checked twice: once as
mu' o f = (id x f) o mu, once with every arrow reversed and composed in the
opposite order. The Bogoliubov inverse is the concrete arrow reversal on the
operator side: undoing a chain of transforms runs the chain backwards.
"""
import thermocoalg_common.core.fock as fock
from thermocoalg_common.core.fock import FockSpace, Mode
from thermocoalg_common.core.report import CheckReport
from thermocoalg_coalgebra.core.finite_function import FiniteFunction
from thermocoalg_tfd.core import hopf_doubling


class Arrow(object):
    """
    @brief A map between finite carriers, composed in diagrammatic order
    """
    __slots__ = ['_fn', 'name']

    def __init__(self, fn, name):
        self._fn = fn
        self.name = name

    def then(self, other):
        return Arrow(lambda x: other(self(x)), "{}.{}".format(other.name, self.name))

    def op(self):
        return OppositeArrow(self)

    def __call__(self, x):
        return self._fn(x)


class OppositeArrow(object):
    """
    @brief f^op, with f^op ;op g^op = (g ; f)^op
    """
    __slots__ = ['_arrow']

    def __init__(self, arrow):
        self._arrow = arrow

    @property
    def name(self):
        return self._arrow.name + "^op"

    def then(self, other):
        return OppositeArrow(other.unop().then(self._arrow))

    def unop(self):
        return self._arrow


def _square_arrows(m, m_prime, f):
    mu = Arrow(m.step, "mu")
    mu_prime = Arrow(m_prime.step, "mu'")
    f_arrow = Arrow(f, "f")
    id_times_f = Arrow(lambda s: (s[0], f(s[1])), "(id x f)")
    return mu, mu_prime, f_arrow, id_times_f


def preimages(fn, domain):
    """
    @brief The graph of fn read backwards: value -> frozenset of inputs in domain
    """
    fibers = {}
    for x in domain:
        fibers.setdefault(fn(x), set()).add(x)
    return {y: frozenset(xs) for y, xs in fibers.items()}


def _relate(fibers, keys):
    """
    @brief Union of the fibers over keys, the op arrow applied to a set
    """
    out = set()
    for k in keys:
        out |= fibers.get(k, frozenset())
    return out


def op_square_keys(m, m_prime, f):
    """
    @brief Both sides of the reversed square as maps state -> set of (color, state') keys

    f^op o mu'^op and mu^op o (id x f)^op are evaluated as relations from
    C x M' back to M by walking preimage tables only. A state x sits under
    key k on a side when that side's relation sends k to a set holding x.
    """
    pre_f = preimages(f, m.states)
    pre_mu = preimages(m.step, m.states)
    pre_mu_prime = preimages(m_prime.step, m_prime.states)
    colors = set(m.colors) | set(m_prime.colors)
    left = {x: set() for x in m.states}
    right = {x: set() for x in m.states}
    for c in colors:
        for y in m_prime.states:
            key = (c, y)
            for x in _relate(pre_f, pre_mu_prime.get(key, ())):
                left[x].add(key)
            for x in _relate(pre_mu, [(c, x_) for x_ in pre_f.get(y, ())]):
                right[x].add(key)
    return left, right


def alg_coalg_duality_check(m, m_prime=None, f=None):
    """
    @brief Evaluate each homomorphism square as a coalgebra and as an op-algebra

    Defaults to the identity map m -> m. Every state contributes three
    entries: the coalgebra reading, the reversed reading, and their agreement.
    The coalgebra reading composes functions forwards; the reversed reading
    never applies mu, mu' or f forwards past building their preimage tables.
    """
    if m_prime is None:
        m_prime = m
    if f is None:
        f = FiniteFunction.identity(m.states)
    mu, mu_prime, f_arrow, id_times_f = _square_arrows(m, m_prime, f)
    coalg_left = f_arrow.then(mu_prime)
    coalg_right = mu.then(id_times_f)
    alg_left, alg_right = op_square_keys(m, m_prime, f)

    report = CheckReport("algebra/coalgebra duality")
    for x in m.states:
        coalg = tuple(coalg_left(x)) == tuple(coalg_right(x))
        alg = bool(alg_left[x]) and alg_left[x] == alg_right[x]
        report.add("coalgebra square at {!r}".format(x), 0 if coalg else 1, 0)
        report.add("op-algebra square at {!r}".format(x), 0 if alg else 1, 0)
        report.add("readings agree at {!r}".format(x), 0 if coalg == alg else 1, 0)
    return report


def bogoliubov_reversal_check(steps, n_max=8, tol=1e-10):
    """
    @brief Apply transforms by each angle in steps, then undo them in reverse order

    The round trip must return the plain ladder operators, and so must the
    single inverse by the accumulated angle.
    """
    space = FockSpace.doubled(n_max)
    a = fock.make_annihilator(space, Mode.Plain)
    a_tilde = fock.make_annihilator(space, Mode.Tilde)
    pair = hopf_doubling.bogoliubov(0.0, space)
    for theta in steps:
        pair = hopf_doubling.rotate(pair, theta)

    report = CheckReport("bogoliubov reversal")
    restored = hopf_doubling.inverse_steps(pair, steps)
    report.add("undo steps in reverse order", max(restored[0].distance(a), restored[1].distance(a_tilde)), tol)
    restored = hopf_doubling.inverse_bogoliubov(pair)
    report.add("undo the accumulated angle", max(restored[0].distance(a), restored[1].distance(a_tilde)), tol)
    report.add("accumulated angle is the sum", abs(pair.theta - sum(steps)), tol)
    return report
