"""
Free energy of the thermal vacuum and its minimization.

For one mode with energy E at inverse temperature beta

    F(theta) = E sinh^2 theta - S(theta) / beta
    dF/dtheta = sinh(2 theta) (E - (2 / beta) ln coth theta)

and the stationary angle gives the Bose occupation sinh^2 theta = 1/(e^(beta E) - 1).
"""
import collections
import math

import numpy as np
from multiprocessing.dummy import Pool
from scipy.optimize import check_grad, newton

import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.errors import ConvergenceError, ValidationError
from thermocoalg_common.tools.decorators import positive

from thermocoalg_tfd.core.vacuum import (ModeSpec, beta_for_theta, bose_occupation, build_vacuum,
                                         entropy_closed_form, entropy_expectation, required_n_max)

ModeMinimum = collections.namedtuple("ModeMinimum", "energy theta iterations residual grad_error")

HeatConvergence = collections.namedtuple("HeatConvergence", "coarse fine ratio order")

MAX_ITER = 100


@positive("beta")
def free_energy(v, beta):
    """
    @brief F_A = sum_k E_k sinh^2 theta_k - entropy / beta
    """
    energy = sum(m.energy * math.sinh(m.theta) ** 2 for m in v.modes)
    return energy - entropy_expectation(v) / beta


@positive("energy", "beta")
def free_energy_profile(theta, energy, beta):
    """
    @brief Single-mode F(theta) with the untruncated entropy
    """
    number = math.sinh(theta) ** 2
    return energy * number - entropy_closed_form(number) / beta


@positive("energy", "beta")
def free_energy_gradient(theta, energy, beta):
    """
    @brief dF/dtheta, zero at theta = 0 and at the Bose angle
    """
    if theta == 0:
        return 0.0
    return math.sinh(2.0 * theta) * (energy + 2.0 * math.log(math.tanh(abs(theta))) / beta)


def _stationarity(u, energy, beta):
    # E - (2/beta) ln coth(e^u), increasing and concave in u
    return energy + 2.0 * math.log(math.tanh(math.exp(u))) / beta


def _stationarity_slope(u, energy, beta):
    theta = math.exp(u)
    return (2.0 / beta) * (2.0 * theta / math.sinh(2.0 * theta))


@positive("energy", "beta")
def minimize_mode(energy, beta, tol=1e-14, maxiter=MAX_ITER):
    """
    @brief Stationary angle of F for one mode

    Newton's method on the stationarity condition in u = ln theta. Started
    left of the root, the iterates increase monotonically to it.
    """
    u0 = -0.5 * beta * energy - 1.0
    u, info = newton(_stationarity, u0, fprime=_stationarity_slope, args=(energy, beta),
                     tol=tol, maxiter=maxiter, full_output=True, disp=False)
    theta = math.exp(u)
    residual = abs(_stationarity(u, energy, beta))
    if not info.converged:
        raise ConvergenceError("free energy minimization (E={}, beta={})".format(energy, beta),
                               residual, info.iterations)
    grad_error = check_grad(lambda x: free_energy_profile(x[0], energy, beta),
                            lambda x: np.array([free_energy_gradient(x[0], energy, beta)]),
                            np.array([theta + 0.1]))
    log.debug("[minimize_mode]", "E={} beta={} theta={:.15g} iterations={} gradient check {:.2e}".format(
        energy, beta, theta, info.iterations, grad_error))
    return ModeMinimum(energy, theta, info.iterations, residual, grad_error)


def _energy_of(mode):
    return mode.energy if isinstance(mode, ModeSpec) else float(mode)


def minimize_free_energy(modes, beta, n_max=None, parallel=False, tail_tol=1e-10):
    """
    @brief The vacuum minimizing F_A at inverse temperature beta

    @modes are ModeSpec (their angles are ignored) or bare energies. With
    n_max None the smallest truncation holding every mode is used.
    """
    if isinstance(modes, (ModeSpec, int, float)):
        modes = [modes]
    energies = [_energy_of(m) for m in modes]
    if parallel and len(energies) > 1:
        pool = Pool()
        try:
            minima = pool.map(lambda e: minimize_mode(e, beta), energies)
        finally:
            pool.close()
    else:
        minima = [minimize_mode(e, beta) for e in energies]
    if n_max is None:
        n_max = max(required_n_max(m.theta, tail_tol) for m in minima)
    return build_vacuum([ModeSpec(m.energy, m.theta) for m in minima], n_max, tail_tol)


def bose_residual(v, beta):
    """
    @brief Largest |sinh^2 theta_k - 1/(e^(beta E_k) - 1)| over the modes of v
    """
    return max(abs(math.sinh(m.theta) ** 2 - bose_occupation(beta, m.energy)) for m in v.modes)


def second_difference(theta, energy, beta, h=1e-4):
    """
    @brief Central second difference of F at theta, > 0 at a local minimum
    """
    f = free_energy_profile
    return (f(theta + h, energy, beta) - 2.0 * f(theta, energy, beta) + f(theta - h, energy, beta)) / (h * h)


def heat_relation_check(theta_path, energy, beta_path=None, dt=1.0, consistency_tol=1e-8):
    """
    @brief Largest |E dN/dt - (1/beta) dS/dt| over the interior of a uniform time grid

    Derivatives are central differences, so the residual is O(dt^2). With
    beta_path None the inverse temperature is tied to theta at every sample.
    """
    thetas = np.asarray(theta_path, dtype=float)
    if thetas.ndim != 1 or thetas.size < 3:
        raise ValidationError("theta_path", "need at least 3 samples")
    if not dt > 0:
        raise ValidationError("dt", "must be > 0, got {}".format(dt))
    if beta_path is None:
        betas = np.array([beta_for_theta(t, energy) for t in thetas])
    else:
        betas = np.asarray(beta_path, dtype=float)
        if betas.shape != thetas.shape:
            raise ValidationError("beta_path", "expected {} samples, got {}".format(thetas.size, betas.size))
        for t, b in zip(thetas, betas):
            expected = math.sinh(t) ** 2
            got = 0.0 if math.isinf(b) else bose_occupation(b, energy)
            if abs(expected - got) > consistency_tol * max(1.0, expected):
                raise ValidationError("beta_path", "beta={} is not the temperature of theta={}".format(b, t))
    numbers = np.sinh(thetas) ** 2
    entropies = np.array([entropy_closed_form(n) for n in numbers])
    d_number = (numbers[2:] - numbers[:-2]) / (2.0 * dt)
    d_entropy = (entropies[2:] - entropies[:-2]) / (2.0 * dt)
    inv_beta = np.where(np.isinf(betas[1:-1]), 0.0, 1.0 / betas[1:-1])
    return float(np.max(np.abs(energy * d_number - inv_beta * d_entropy)))


def heat_relation_convergence(theta_fn, energy, t_span, points):
    """
    @brief Residual of heat_relation_check at points and 2 points - 1 samples

    The observed order log2(coarse / fine) is about 2 for a smooth path.
    """
    t0, t1 = t_span
    results = []
    for count in (points, 2 * points - 1):
        t = np.linspace(t0, t1, count)
        results.append(heat_relation_check([theta_fn(x) for x in t], energy, dt=t[1] - t[0]))
    coarse, fine = results
    ratio = coarse / fine if fine > 0 else math.inf
    order = math.log2(ratio) if fine > 0 and coarse > 0 else math.nan
    log.debug("[heat_relation_convergence]", "coarse={:.3e} fine={:.3e} order={:.3f}".format(coarse, fine, order))
    return HeatConvergence(coarse, fine, ratio, order)
