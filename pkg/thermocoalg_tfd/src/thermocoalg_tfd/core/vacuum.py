"""
The theta-labelled thermal vacuum |0(theta)> and the quantities read off it.

Per mode the vacuum is the pair condensate

    |0(theta)> = sum_n tanh(theta)^n / cosh(theta) |n, n~>

with weights W_n = tanh(theta)^(2n) / cosh(theta)^2. Truncation at n_max drops
the tail mass tanh(theta)^(2(n_max+1)). Multi-mode vacua are tensor products,
so every quantity is computed per mode and combined.
"""
import math

import numpy as np
from scipy.special import xlogy

import thermocoalg_common.core.fock as fock
import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.errors import (CheckFailed, DimensionError, TruncationError,
                                            ValidationError)
from thermocoalg_common.core.fock import FockOperator, FockSpace, Mode
from thermocoalg_common.core.report import CheckReport
from thermocoalg_common.tools.decorators import positive, requires_single

from thermocoalg_tfd.core import hopf_doubling

VACUUM_TAIL_TOL = 1e-10


class ModeSpec(object):
    """
    @brief One bosonic mode: energy E > 0 (hbar = 1) and Bogoliubov angle theta >= 0
    """
    __slots__ = ['_energy', '_theta']

    def __init__(self, energy, theta=0.0):
        if not (math.isfinite(energy) and energy > 0):
            raise ValidationError("energy", "must be > 0, got {}".format(energy))
        if not (math.isfinite(theta) and theta >= 0):
            raise ValidationError("theta", "must be finite and >= 0, got {}".format(theta))
        self._energy = float(energy)
        self._theta = float(theta)

    @property
    def energy(self):
        return self._energy

    @property
    def theta(self):
        return self._theta

    def printState(self):
        return "ModeSpec(E={:.12g}, theta={:.12g})".format(self._energy, self._theta)

    __repr__ = printState


def condensate_weights(theta, n_max):
    """
    @brief W_n for n = 0..n_max, with no tail precondition
    """
    t2 = math.tanh(theta) ** 2
    return np.power(t2, np.arange(n_max + 1, dtype=float)) / math.cosh(theta) ** 2


def tail_mass(theta, n_max):
    return math.tanh(theta) ** (2 * (n_max + 1))


def required_n_max(theta, tail=VACUUM_TAIL_TOL):
    """
    @brief Smallest n_max with tanh(theta)^(2(n_max+1)) <= tail
    """
    t = abs(math.tanh(theta))
    if t == 0.0:
        return 1
    if t >= 1.0:
        raise TruncationError("no finite truncation holds theta={}".format(theta), 1.0)
    return max(1, int(math.ceil(math.log(tail) / (2.0 * math.log(t)))) - 1)


class ThermalVacuum(object):
    """
    @brief Per-mode condensate weights of |0(theta)> at truncation n_max

    The angles {theta_k} are the coordinate of the vacuum in the foliation;
    see thetas().
    """
    __slots__ = ['_modes', '_n_max', '_weights']

    def __init__(self, modes, n_max, weights):
        self._modes = tuple(modes)
        self._n_max = n_max
        self._weights = tuple(weights)
        for w in self._weights:
            w.setflags(write=False)

    @property
    def modes(self):
        return self._modes

    @property
    def n_max(self):
        return self._n_max

    @property
    def weights(self):
        return self._weights

    def modeCount(self):
        return len(self._modes)

    def thetas(self):
        return tuple(m.theta for m in self._modes)

    def mode(self, k):
        if not 0 <= k < len(self._modes):
            raise ValidationError("k", "mode index {} out of range [0, {})".format(k, len(self._modes)))
        return self._modes[k]

    def weightsOf(self, k):
        self.mode(k)
        return self._weights[k]

    def tail(self, k):
        return tail_mass(self.mode(k).theta, self._n_max)

    @property
    def space(self):
        return FockSpace.doubled(self._n_max)

    def stateVector(self, k=0, normalize=False):
        """
        @brief sum_n tanh^n / cosh |n, n~> for mode k on the doubled space
        """
        theta = self.mode(k).theta
        space = self.space
        state = np.zeros(space.dim, dtype=complex)
        n = np.arange(self._n_max + 1, dtype=float)
        state[space.pairIndices()] = np.power(math.tanh(theta), n) / math.cosh(theta)
        if normalize:
            state /= np.linalg.norm(state)
        return state

    def annihilationResidual(self, k=0, margin=1):
        """
        @brief Largest component of A(theta)|0(theta)> and A~(theta)|0(theta)> on the interior
        """
        pair = hopf_doubling.bogoliubov(self.mode(k).theta, self.space)
        state = self.stateVector(k)
        idx = fock.interior_indices(self.space, margin)
        return max(float(np.max(np.abs(pair.a_theta.apply(state)[idx]))),
                   float(np.max(np.abs(pair.a_tilde_theta.apply(state)[idx]))))

    def printState(self):
        return "ThermalVacuum(n_max={}, thetas={})".format(
            self._n_max, ", ".join("{:.6g}".format(t) for t in self.thetas()))

    __repr__ = printState


def _as_modes(modes):
    if isinstance(modes, ModeSpec):
        return [modes]
    return list(modes)


def build_vacuum(modes, n_max, tail_tol=VACUUM_TAIL_TOL):
    """
    @brief Build |0(theta)> for the given modes

    Raises TruncationError, with a suggested n_max, if some mode would drop
    more than tail_tol of its weight.
    """
    modes = _as_modes(modes)
    if not modes:
        raise ValidationError("modes", "at least one mode is required")
    FockSpace(n_max)
    weights = []
    for k, m in enumerate(modes):
        tail = tail_mass(m.theta, n_max)
        if tail > tail_tol:
            raise TruncationError("mode {} (theta={}) does not fit n_max={}".format(k, m.theta, n_max),
                                  tail, required_n_max(m.theta, tail_tol))
        weights.append(condensate_weights(m.theta, n_max))
    log.debug("[build_vacuum]", "{} modes at n_max={}".format(len(modes), n_max))
    return ThermalVacuum(modes, n_max, weights)


def single_mode_vacuum(theta, n_max, energy=1.0):
    return build_vacuum([ModeSpec(energy, theta)], n_max)


class OrderParameter(object):
    """
    @brief The set {N_k = sinh^2 theta_k}, one value per mode
    """
    __slots__ = ['_values']

    def __init__(self, values):
        self._values = tuple(float(v) for v in values)

    @property
    def values(self):
        return self._values

    def __getitem__(self, k):
        return self._values[k]

    def __len__(self):
        return len(self._values)

    def isOrdered(self):
        """True when some mode is condensed"""
        return any(v > 0 for v in self._values)

    def printState(self):
        return "OrderParameter({})".format(", ".join("{:.12g}".format(v) for v in self._values))

    __repr__ = printState


def condensate_number(v, k=0):
    """
    @brief <0(theta)|A_k+ A_k|0(theta)> = sum_n n W_n
    """
    w = v.weightsOf(k)
    return float(np.dot(np.arange(len(w), dtype=float), w))


def tilde_condensate_number(v, k=0):
    """
    @brief <0(theta)|A~_k+ A~_k|0(theta)>, read from the tilde reduced density
    """
    v.mode(k)
    psi = v.stateVector(k).reshape(v.n_max + 1, v.n_max + 1)
    rho_tilde = psi.T @ psi.conj()
    return float(np.dot(np.arange(v.n_max + 1, dtype=float), np.real(np.diag(rho_tilde))))


def order_parameter(v):
    return OrderParameter(math.sinh(m.theta) ** 2 for m in v.modes)


def joint_weight(v, occupations):
    """
    @brief prod_k W_{n_k}(theta_k) for one occupation number per mode
    """
    occupations = list(occupations)
    if len(occupations) != v.modeCount():
        raise DimensionError("expected {} occupations, got {}".format(v.modeCount(), len(occupations)))
    value = 1.0
    for k, n in enumerate(occupations):
        if not 0 <= n <= v.n_max:
            raise ValidationError("occupations", "n={} outside [0, {}]".format(n, v.n_max))
        value *= float(v.weights[k][n])
    return value


def _components(theta, n_max):
    return np.power(math.tanh(theta), np.arange(n_max + 1, dtype=float)) / math.cosh(theta)


def vacuum_overlap(theta, theta_prime, n_max, mode_count=1):
    """
    @brief <0(theta')|0(theta)> summed over the truncated pair sector

    Scalars give the single-mode overlap raised to mode_count; sequences of
    angles give the product over modes.
    """
    if np.ndim(theta) == 0:
        thetas, primes = [theta] * mode_count, [theta_prime] * mode_count
    else:
        thetas, primes = list(theta), list(theta_prime)
        if len(thetas) != len(primes):
            raise DimensionError("angle lists differ in length: {} vs {}".format(len(thetas), len(primes)))
    value = 1.0
    for t, tp in zip(thetas, primes):
        if not (math.isfinite(t) and math.isfinite(tp)):
            raise ValidationError("theta", "angles must be finite")
        value *= float(np.dot(_components(t, n_max), _components(tp, n_max)))
    return value


def entropy_closed_form(number):
    """
    @brief (1+N) ln(1+N) - N ln N
    """
    return float(xlogy(1.0 + number, 1.0 + number) - xlogy(number, number))


def entropy_expectation(v):
    """
    @brief -sum_k sum_n W_n ln W_n
    """
    return float(sum(-np.sum(xlogy(w, w)) for w in v.weights))


def entropy_operator(space, theta, which_mode=Mode.Plain):
    """
    @brief S_A = -(A+ A ln sinh^2 - A A+ ln cosh^2) on the doubled space

    Unbounded at theta = 0, where it is refused.
    """
    if theta == 0:
        raise ValidationError("theta", "entropy operator is unbounded at theta=0")
    a = fock.make_annihilator(space, which_mode)
    return -(math.log(math.sinh(theta) ** 2) * (a.adjoint() @ a)
             - math.log(math.cosh(theta) ** 2) * (a @ a.adjoint()))


def entropy_by_operator(v):
    """
    @brief sum_k <0(theta)|S_A_k|0(theta)>, the operator route to entropy_expectation
    """
    total = 0.0
    for k, m in enumerate(v.modes):
        if m.theta == 0:
            continue
        total += fock.expectation(v.stateVector(k, normalize=True), entropy_operator(v.space, m.theta)).real
    return total


def identity_state(space):
    """
    @brief |I> = sum_n |n, n~>
    """
    state = np.zeros(space.dim, dtype=complex)
    state[space.pairIndices()] = 1.0
    return state


def entropy_vacuum_residual(v, k=0, margin=1):
    """
    @brief Largest interior deviation of exp(-S/2)|I> from |0(theta)>, for S_A and S_A~
    """
    theta = v.mode(k).theta
    space = v.space
    if theta == 0:
        return 0.0
    target = v.stateVector(k)
    idx = fock.interior_indices(space, margin)
    residual = 0.0
    for which in (Mode.Plain, Mode.Tilde):
        s = entropy_operator(space, theta, which)
        state = fock.exp_operator(-0.5 * s).apply(identity_state(space))
        residual = max(residual, float(np.max(np.abs(state[idx] - target[idx]))))
    return residual


def reconstruct_vacuum(theta, n_max, padding=None):
    """
    @brief exp(i theta G)|0, 0~> in the pair sector, cut back to n_max

    The exponential is taken at n_max + padding so that the truncation edge
    does not reach the returned components. The result is the pair-sector
    amplitude vector indexed by n.
    """
    if padding is None:
        padding = max(20, required_n_max(theta, 1e-18) - n_max)
    g = hopf_doubling.pair_sector_generator(n_max + padding)
    start = np.zeros(n_max + padding + 1, dtype=complex)
    start[0] = 1.0
    return fock.exp_apply(1j * theta * g, start)[:n_max + 1]


def embed_pair_sector(amplitudes, space):
    state = np.zeros(space.dim, dtype=complex)
    state[space.pairIndices()] = amplitudes
    return state


def reduced_density(v, k=0):
    """
    @brief Tr_tilde |0(theta)><0(theta)| for mode k, equal to diag(W_n)
    """
    return fock.partial_trace_tilde(v.stateVector(k), v.space)


@requires_single("obs")
def vacuum_expectation(v, obs, k=0):
    """
    @brief <0(theta)|obs x 1|0(theta)> = Tr(diag(W) obs), the Kronecker-delta trace

    obs acts on the single-mode space at the vacuum's truncation.
    """
    if obs.space.n_max != v.n_max:
        raise DimensionError("observable at n_max={} for a vacuum at n_max={}".format(obs.space.n_max, v.n_max))
    w = v.weightsOf(k)
    return float(np.real(np.dot(w, np.diag(obs.entries))))


def kronecker_trace(obs, n_max=None):
    """
    @brief sum_n <n, n~|obs x 1|n, n~> checked against sum_n <n|obs|n>

    obs is a single-mode operator or a doubled one of the form X x 1. The two
    sums are finite and must agree exactly.
    """
    space = obs.space
    if n_max is not None and n_max != space.n_max:
        raise DimensionError("observable at n_max={}, expected {}".format(space.n_max, n_max))
    if space.isDoubled():
        d = space.single_dim
        blocks = obs.entries.reshape(d, d, d, d)
        single = FockOperator(space.singleSpace(), blocks[:, 0, :, 0])
        if fock.lift(single, Mode.Plain).distance(obs) != 0:
            raise DimensionError("observable acts on the tilde factor")
        doubled = obs
    else:
        single = obs
        doubled = fock.lift(obs, Mode.Plain)
    pairs = doubled.space.pairIndices()
    via_pairs = complex(np.sum(doubled.entries[pairs, pairs]))
    direct = complex(np.sum(np.diag(single.entries)))
    if via_pairs != direct:
        report = CheckReport("kronecker_trace")
        report.add("doubled-basis trace = direct trace", abs(via_pairs - direct), 0)
        raise CheckFailed(report)
    return via_pairs


def bose_occupation(beta, energy):
    """
    @brief 1 / (e^(beta E) - 1)
    """
    return 1.0 / math.expm1(beta * energy)


@positive("beta", "energy")
def theta_for_beta(beta, energy):
    """
    @brief The angle with sinh^2 theta equal to the Bose occupation
    """
    return math.asinh(math.sqrt(bose_occupation(beta, energy)))


@positive("energy")
def beta_for_theta(theta, energy):
    """
    @brief Inverse temperature tied to theta: e^(beta E) = coth^2 theta

    theta = 0 is the zero-temperature vacuum and gives inf.
    """
    if theta == 0:
        return math.inf
    return -2.0 * math.log(math.tanh(abs(theta))) / energy
