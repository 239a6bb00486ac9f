"""
Doubling of a bosonic mode: coproducts and Bogoliubov transformations.

A single-mode observable O is doubled either commutatively, O x 1 + 1 x O,
or with a real deformation q = e^theta, q (O x 1) + 1/q (1 x O). The
Bogoliubov pair

    A(theta)  = A cosh(theta) - A~+ sinh(theta)
    A~(theta) = A~ cosh(theta) - A+ sinh(theta)

is taken as the definition of the transformed operators. The same
transformation is generated by G = -i(A+ A~+ - A A~) through
exp(i theta G) A exp(-i theta G) = A(theta), and both paths are available.
"""
import math

import numpy as np

import thermocoalg_common.core.fock as fock
import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.errors import ValidationError
from thermocoalg_common.core.fock import FockOperator, FockSpace, Mode
from thermocoalg_common.tools.decorators import requires_doubled, requires_single

Q_RTOL = 1e-12


class DeformationParam(object):
    """
    @brief Bogoliubov angle theta together with q = e^theta

    >>> DeformationParam(0.0).q
    1.0
    >>> DeformationParam.fromQ(1.0).isUndeformed()
    True
    """
    __slots__ = ['_theta', '_q']

    def __init__(self, theta, q=None):
        if not math.isfinite(theta):
            raise ValidationError("theta", "must be finite, got {}".format(theta))
        self._theta = float(theta)
        self._q = math.exp(self._theta)
        if q is not None:
            if not (math.isfinite(q) and abs(q - self._q) <= Q_RTOL * self._q):
                raise ValidationError("q", "must equal e^theta = {:.17g}, got {}".format(self._q, q))
            self._q = float(q)

    @staticmethod
    def fromQ(q):
        if not (math.isfinite(q) and q > 0):
            raise ValidationError("q", "deformation must be real and > 0, got {}".format(q))
        return DeformationParam(math.log(q), q)

    @property
    def theta(self):
        return self._theta

    @property
    def q(self):
        return self._q

    @property
    def cosh(self):
        return math.cosh(self._theta)

    @property
    def sinh(self):
        return math.sinh(self._theta)

    def isUndeformed(self):
        return self._theta == 0.0

    def hyperbolicResidual(self):
        """|cosh^2 - sinh^2 - 1|, relative to cosh^2 for large angles"""
        c, s = self.cosh, self.sinh
        return abs(c * c - s * s - 1.0) / (c * c)

    def __eq__(self, other):
        return isinstance(other, DeformationParam) and self._theta == other._theta

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._theta)

    def printState(self):
        return "DeformationParam(theta={:.12g}, q={:.12g})".format(self._theta, self._q)

    __repr__ = printState


def _as_param(params):
    if isinstance(params, DeformationParam):
        return params
    return DeformationParam.fromQ(params)


class BogoliubovPair(object):
    """
    @brief The transformed operators (A(theta), A~(theta)) on a doubled space
    """
    __slots__ = ['_a_theta', '_a_tilde_theta', '_params']

    def __init__(self, a_theta, a_tilde_theta, params):
        a_theta._check(a_tilde_theta)
        self._a_theta = a_theta
        self._a_tilde_theta = a_tilde_theta
        self._params = params if isinstance(params, DeformationParam) else DeformationParam(params)

    @property
    def a_theta(self):
        return self._a_theta

    @property
    def a_tilde_theta(self):
        return self._a_tilde_theta

    @property
    def params(self):
        return self._params

    @property
    def theta(self):
        return self._params.theta

    @property
    def space(self):
        return self._a_theta.space

    def ccrResiduals(self, margin=1):
        """
        @brief Deviation of the four canonical commutators from their values
        on the interior block

        Returns a dict keyed by the identity checked.
        """
        space = self.space
        a, at = self._a_theta, self._a_tilde_theta
        eye = fock.identity(space)
        zero = fock.zero(space)
        return {
            "[A, A+] = 1": fock.interior_residual(fock.commutator(a, a.adjoint()), eye, margin),
            "[A~, A~+] = 1": fock.interior_residual(fock.commutator(at, at.adjoint()), eye, margin),
            "[A, A~] = 0": fock.interior_residual(fock.commutator(a, at), zero, margin),
            "[A, A~+] = 0": fock.interior_residual(fock.commutator(a, at.adjoint()), zero, margin),
        }

    def distance(self, other, margin=None):
        """
        @brief Largest entry deviation from another pair, on the full space or an interior block
        """
        if margin is None:
            return max(self._a_theta.distance(other.a_theta), self._a_tilde_theta.distance(other.a_tilde_theta))
        return max(fock.interior_residual(self._a_theta, other.a_theta, margin),
                   fock.interior_residual(self._a_tilde_theta, other.a_tilde_theta, margin))

    def printState(self):
        return "BogoliubovPair({}, {})".format(self._params.printState(), self.space.printState())

    __repr__ = printState


@requires_single("op")
def commutative_coproduct(op):
    """
    @brief op x 1 + 1 x op on the doubled space
    """
    return fock.lift(op, Mode.Plain) + fock.lift(op, Mode.Tilde)


@requires_single("op")
def deformed_coproduct(op, params):
    """
    @brief q (op x 1) + 1/q (1 x op) on the doubled space

    @params is a DeformationParam or a bare q > 0. q is a scalar weight, not
    a q^N operator.
    """
    p = _as_param(params)
    return p.q * fock.lift(op, Mode.Plain) + (1.0 / p.q) * fock.lift(op, Mode.Tilde)


def _transform(a, a_tilde, theta):
    c, s = math.cosh(theta), math.sinh(theta)
    return c * a - s * a_tilde.adjoint(), c * a_tilde - s * a.adjoint()


@requires_doubled("space")
def bogoliubov(theta, space):
    """
    @brief A(theta), A~(theta) by linear recombination of the ladder operators
    """
    p = theta if isinstance(theta, DeformationParam) else DeformationParam(theta)
    a = fock.make_annihilator(space, Mode.Plain)
    a_tilde = fock.make_annihilator(space, Mode.Tilde)
    return BogoliubovPair(*_transform(a, a_tilde, p.theta), params=p)


@requires_doubled("space")
def bogoliubov_generator(space):
    """
    @brief G = -i(A+ A~+ - A A~), self-adjoint by construction
    """
    a = fock.make_annihilator(space, Mode.Plain)
    a_tilde = fock.make_annihilator(space, Mode.Tilde)
    return -1j * (a.adjoint() @ a_tilde.adjoint() - a @ a_tilde)


def rotate(pair, theta):
    """
    @brief Apply a further transform by theta to the operators of pair

    Transforms with real angles form a one-parameter group, so the result
    carries the angle pair.theta + theta.
    """
    return BogoliubovPair(*_transform(pair.a_theta, pair.a_tilde_theta, theta),
                          params=DeformationParam(pair.theta + theta))


def unrotate(pair, theta):
    """
    @brief Undo one transform step by theta: A = A(theta) cosh + A~(theta)+ sinh
    """
    c, s = math.cosh(theta), math.sinh(theta)
    a = c * pair.a_theta + s * pair.a_tilde_theta.adjoint()
    a_tilde = c * pair.a_tilde_theta + s * pair.a_theta.adjoint()
    return BogoliubovPair(a, a_tilde, params=DeformationParam(pair.theta - theta))


def inverse_bogoliubov(pair):
    """
    @brief Recover (A, A~) from a transformed pair
    """
    restored = unrotate(pair, pair.theta)
    return restored.a_theta, restored.a_tilde_theta


def inverse_steps(pair, steps):
    """
    @brief Undo a sequence of transforms applied in the order given by steps

    The inverse runs through steps in reverse order.
    """
    for theta in reversed(list(steps)):
        pair = unrotate(pair, theta)
    return pair.a_theta, pair.a_tilde_theta


def conjugation_unitary(theta, space):
    """
    @brief exp(i theta G) on the doubled space
    """
    return fock.exp_operator(1j * theta * bogoliubov_generator(space))


def conjugate(op, unitary):
    """
    @brief U op U+
    """
    return unitary @ op @ unitary.adjoint()


@requires_doubled("space")
def bogoliubov_by_conjugation(theta, space):
    """
    @brief A(theta), A~(theta) realized as exp(i theta G) X exp(-i theta G)

    Agrees with bogoliubov() only away from the truncation edge.
    """
    u = conjugation_unitary(theta, space)
    a = fock.make_annihilator(space, Mode.Plain)
    a_tilde = fock.make_annihilator(space, Mode.Tilde)
    log.debug("[bogoliubov_by_conjugation]", "theta={} {}".format(theta, space.printState()))
    return BogoliubovPair(conjugate(a, u), conjugate(a_tilde, u), params=DeformationParam(theta))


def pair_sector_generator(n_max):
    """
    @brief G restricted to span{|n, n~>}, indexed by n

    Built from single-mode operators as -i(a+ sqrt(N+1) - sqrt(N+1) a).
    """
    space = FockSpace.single(n_max)
    a = fock.make_annihilator(space)
    root = FockOperator(space, np.diag(np.sqrt(np.arange(1, n_max + 2, dtype=float))))
    return -1j * (a.adjoint() @ root - root @ a)


@requires_doubled("space")
def su11_generators(space):
    """
    @brief (K+, K-, K0) = (A+ A~+, A A~, (A+ A + A~ A~+) / 2)
    """
    a = fock.make_annihilator(space, Mode.Plain)
    a_tilde = fock.make_annihilator(space, Mode.Tilde)
    k_plus = a.adjoint() @ a_tilde.adjoint()
    k_minus = a @ a_tilde
    k_zero = 0.5 * (a.adjoint() @ a + a_tilde @ a_tilde.adjoint())
    return k_plus, k_minus, k_zero


def su11_residuals(space, margin=1):
    k_plus, k_minus, k_zero = su11_generators(space)
    return {
        "[K0, K+] = K+": fock.interior_residual(fock.commutator(k_zero, k_plus), k_plus, margin),
        "[K0, K-] = -K-": fock.interior_residual(fock.commutator(k_zero, k_minus), -k_minus, margin),
        "[K-, K+] = 2 K0": fock.interior_residual(fock.commutator(k_minus, k_plus), 2.0 * k_zero, margin),
    }


def swap_asymmetry(op):
    """
    @brief Largest entry of S op S - op for the tensor-factor swap S on op's space
    """
    s = fock.swap_operator(op.space)
    return (s @ op @ s).distance(op)
