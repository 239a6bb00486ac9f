"""
Two-level system with mixed states phi, psi and their tilde doubling.

Amplitude vectors are written in the energy basis (|0>, |1>) with
H = diag(omega1, omega2). The Pauli matrices carry a 1/2 prefactor.
"""
import math

import numpy as np
import scipy.linalg
from scipy.special import xlogy

from thermocoalg_common.core.errors import NormalizationError, ValidationError
from thermocoalg_common.core.fock import Mode

ORTHONORMAL_TOL = 1e-12

SIGMA_1 = 0.5 * np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = 0.5 * np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = 0.5 * np.array([[1, 0], [0, -1]], dtype=complex)


class TwoLevelParams(object):
    """
    @brief Level frequencies, mixing angle and the phases of alpha, beta

    The phases must differ by a multiple of pi for phi and psi to stay
    orthogonal.
    """
    __slots__ = ['_omega1', '_omega2', '_theta', '_gamma1', '_gamma2']

    def __init__(self, omega1, omega2, theta_mix, gamma1=0.0, gamma2=0.0):
        for name, value in (("omega1", omega1), ("omega2", omega2), ("theta_mix", theta_mix),
                            ("gamma1", gamma1), ("gamma2", gamma2)):
            if not math.isfinite(value):
                raise ValidationError(name, "must be finite, got {}".format(value))
        if omega1 == omega2:
            raise ValidationError("omega2", "must differ from omega1 for mixing dynamics")
        turns = (gamma1 - gamma2) / math.pi
        if abs(turns - round(turns)) > 1e-9:
            raise ValidationError("gamma1", "gamma1 - gamma2 must be a multiple of pi")
        self._omega1 = float(omega1)
        self._omega2 = float(omega2)
        self._theta = float(theta_mix)
        self._gamma1 = float(gamma1)
        self._gamma2 = float(gamma2)

    @property
    def omega1(self):
        return self._omega1

    @property
    def omega2(self):
        return self._omega2

    @property
    def theta_mix(self):
        return self._theta

    @property
    def gamma1(self):
        return self._gamma1

    @property
    def gamma2(self):
        return self._gamma2

    @property
    def alpha(self):
        return complex(np.exp(1j * self._gamma1) * math.cos(self._theta))

    @property
    def beta(self):
        return complex(np.exp(1j * self._gamma2) * math.sin(self._theta))

    def hamiltonian(self):
        return np.diag([self._omega1, self._omega2]).astype(complex)

    def printState(self):
        return "TwoLevelParams(omega1={}, omega2={}, theta={})".format(self._omega1, self._omega2, self._theta)


class QubitPair(object):
    """
    @brief The amplitude vectors of phi and psi, checked orthonormal
    """
    __slots__ = ['_phi', '_psi']

    def __init__(self, phi, psi, tol=ORTHONORMAL_TOL):
        phi = np.array(phi, dtype=complex)
        psi = np.array(psi, dtype=complex)
        if phi.shape != (2,) or psi.shape != (2,):
            raise ValidationError("pair", "amplitudes must have 2 components")
        residual = orthonormality_residual(phi, psi)
        if residual > tol:
            raise NormalizationError("phi, psi are not orthonormal (residual {:.3e})".format(residual))
        phi.setflags(write=False)
        psi.setflags(write=False)
        self._phi = phi
        self._psi = psi

    @property
    def phi(self):
        return self._phi

    @property
    def psi(self):
        return self._psi

    def matrix(self):
        """rows phi, psi"""
        return np.array([self._phi, self._psi])

    def basis(self):
        """columns phi, psi"""
        return self.matrix().T


def orthonormality_residual(phi, psi):
    gram = np.array([[np.vdot(phi, phi), np.vdot(phi, psi)], [np.vdot(psi, phi), np.vdot(psi, psi)]])
    return float(np.max(np.abs(gram - np.eye(2))))


def mix(params):
    """
    @brief phi = alpha|0> + beta|1>, psi = -beta|0> + alpha|1>
    """
    a, b = params.alpha, params.beta
    return QubitPair([a, b], [-b, a])


def phase_matrix(params, t):
    """
    @brief e^(-iHt) = diag(e^(-i omega1 t), e^(-i omega2 t))
    """
    return np.diag([np.exp(-1j * params.omega1 * t), np.exp(-1j * params.omega2 * t)])


def evolution_matrix(params, t):
    """
    @brief Rows are the amplitudes of phi(t), psi(t)

    e^(-i omega1 t) [[cos, e^(-i dw t) sin], [-sin, e^(-i dw t) cos]] for zero phases.
    """
    return mix(params).matrix() @ phase_matrix(params, t)


def evolve(pair, params, t):
    """
    @brief Evolve both amplitude vectors by e^(-iHt)
    """
    if not math.isfinite(t):
        raise ValidationError("t", "must be finite")
    rows = pair.matrix() @ phase_matrix(params, t)
    return QubitPair(rows[0], rows[1])


def mixed_propagator(params, t):
    """
    @brief e^(-iHt) written in the (phi, psi) basis; U(t1 + t2) = U(t2) U(t1)
    """
    r = mix(params).basis()
    return r.conj().T @ phase_matrix(params, t) @ r


def unitarity_residual(u):
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))


def mixing_frequency(params):
    """
    @brief omega_phipsi = (omega2 - omega1) sin(2 theta) cos(gamma1 - gamma2) / 2
    """
    return 0.5 * (params.omega2 - params.omega1) * math.sin(2.0 * params.theta_mix) \
        * math.cos(params.gamma1 - params.gamma2)


def mixing_frequency_fd(params, t, dt=1e-4):
    """
    @brief <psi(t)|i d/dt|phi(t)> by central differences
    """
    pair = mix(params)
    forward = evolve(pair, params, t + dt).phi
    backward = evolve(pair, params, t - dt).phi
    derivative = 1j * (forward - backward) / (2.0 * dt)
    return complex(np.vdot(evolve(pair, params, t).psi, derivative))


def free_energy_operator(params):
    """
    @brief F = H - omega_phipsi sigma_1
    """
    return params.hamiltonian() - mixing_frequency(params) * SIGMA_1


def ts_term(pair, params):
    """
    @brief omega_phipsi (|phi><psi| + |psi><phi|)
    """
    w = mixing_frequency(params)
    return w * (np.outer(pair.phi, pair.psi.conj()) + np.outer(pair.psi, pair.phi.conj()))


def rotate_to_pair(op, pair):
    """
    @brief R op R+ with R the matrix whose columns are phi and psi
    """
    r = pair.basis()
    return r @ op @ r.conj().T


def generator_residual(params, t, dt=1e-4):
    """
    @brief Largest deviation of i d/dt (phi, psi) from (F + omega_phipsi sigma_1)(phi, psi)
    """
    generator = free_energy_operator(params) + mixing_frequency(params) * SIGMA_1
    pair = mix(params)
    now = evolve(pair, params, t)
    forward = evolve(pair, params, t + dt)
    backward = evolve(pair, params, t - dt)
    residual = 0.0
    for f, b, x in ((forward.phi, backward.phi, now.phi), (forward.psi, backward.psi, now.psi)):
        derivative = 1j * (f - b) / (2.0 * dt)
        residual = max(residual, float(np.max(np.abs(derivative - generator @ x))))
    return residual


def direct_evolution(params, t):
    """
    @brief Rows phi(t), psi(t) from the matrix exponential of -iHt
    """
    u = scipy.linalg.expm(-1j * t * params.hamiltonian())
    pair = mix(params)
    return np.array([u @ pair.phi, u @ pair.psi])


def double_state(amplitudes):
    """
    @brief x0|0> + x1|1>  ->  x0|0, 0~> + x1|1, 1~> in the 4-dimensional doubled space
    """
    x = np.asarray(amplitudes, dtype=complex)
    xi = np.zeros(4, dtype=complex)
    xi[0] = x[0]
    xi[3] = x[1]
    return xi


def reduced_density_matrix(xi, trace_out=Mode.Tilde):
    """
    @brief Partial trace of |xi><xi| over the tilde (or the plain) factor
    """
    psi = np.asarray(xi, dtype=complex).reshape(2, 2)
    rho = np.einsum('ij,kl->ijkl', psi, psi.conj())
    if trace_out == Mode.Tilde:
        return np.einsum('ijkj->ik', rho)
    return np.einsum('ijil->jl', rho)


def von_neumann_entropy(rho):
    eigenvalues = np.clip(scipy.linalg.eigvalsh(rho), 0.0, None)
    return float(-np.sum(xlogy(eigenvalues, eigenvalues)))


def doubled_entropy(pair, params=None, which="phi"):
    """
    @brief (S_system, S_tilde) for the doubled phi (or psi) state

    params is accepted for symmetry with evolve(); entropies depend on the
    amplitudes only.
    """
    amplitudes = pair.phi if which == "phi" else pair.psi
    norm = np.linalg.norm(amplitudes)
    if abs(norm - 1.0) > ORTHONORMAL_TOL:
        raise NormalizationError("amplitude norm is {!r}".format(norm))
    xi = double_state(amplitudes)
    return (von_neumann_entropy(reduced_density_matrix(xi, Mode.Tilde)),
            von_neumann_entropy(reduced_density_matrix(xi, Mode.Plain)))
