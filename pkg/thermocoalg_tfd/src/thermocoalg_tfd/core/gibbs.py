"""
Gibbs ensembles e^(-beta H)/Z at truncation and the KMS condition.

Everything is evaluated in the eigenbasis of H, where the Boltzmann factors
and the analytic continuation alpha_z(P)_ij = P_ij e^(i z (e_i - e_j)) are
exact at truncation.
"""
import math

import numpy as np
import scipy.linalg

import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.errors import TruncationError, ValidationError
from thermocoalg_common.core.fock import FockOperator
from thermocoalg_common.tools.decorators import finite_entries, positive

GIBBS_TAIL_TOL = 1e-12
OVERFLOW_EXPONENT = 700.0


@positive("beta", "energy")
def required_gibbs_n_max(beta, energy, tail=GIBBS_TAIL_TOL):
    """
    @brief Smallest n_max with e^(-beta E n_max) < tail for H = E N
    """
    return max(1, int(math.floor(math.log(1.0 / tail) / (beta * energy))) + 1)


class GibbsEnsemble(object):
    """
    @brief Thermal state of a hermitian H at inverse temperature beta

    Construction diagonalizes H once and refuses truncations whose top level
    still carries a Boltzmann factor above tail_tol relative to the ground level.
    """

    @finite_entries("hamiltonian")
    @positive("beta")
    def __init__(self, hamiltonian, beta, tail_tol=GIBBS_TAIL_TOL):
        if not hamiltonian.isHermitian(1e-12 * max(1.0, hamiltonian.norm())):
            raise ValidationError("hamiltonian", "must be hermitian")
        self._hamiltonian = hamiltonian
        self._beta = float(beta)
        self._energies, self._vectors = scipy.linalg.eigh(hamiltonian.entries)
        self._e_min = float(self._energies[0])
        self._spread = float(self._energies[-1] - self._e_min)
        self._tail = math.exp(-self._beta * self._spread)
        if self._tail >= tail_tol:
            raise TruncationError("Boltzmann tail of {} at beta={}".format(hamiltonian.space.printState(), beta),
                                  self._tail, self.requiredNMax(tail_tol))
        self._boltzmann = np.exp(-self._beta * (self._energies - self._e_min))
        self._z_reduced = float(np.sum(self._boltzmann))
        log.debug("[GibbsEnsemble]", "beta={} spread={:.6g} tail={:.3e}".format(beta, self._spread, self._tail))

    @property
    def hamiltonian(self):
        return self._hamiltonian

    @property
    def beta(self):
        return self._beta

    @property
    def space(self):
        return self._hamiltonian.space

    @property
    def energies(self):
        return self._energies

    @property
    def tail(self):
        return self._tail

    def requiredNMax(self, tail_tol=GIBBS_TAIL_TOL):
        """
        @brief Truncation suggestion assuming an evenly spaced spectrum
        """
        n_max = self.space.n_max
        if self._spread <= 0:
            return n_max
        level = self._spread / n_max
        return int(math.ceil(math.log(1.0 / tail_tol) / (self._beta * level))) + 1

    def partitionFunction(self):
        return math.exp(-self._beta * self._e_min) * self._z_reduced

    def freeEnergy(self):
        """
        @brief -ln Z / beta
        """
        return self._e_min - math.log(self._z_reduced) / self._beta

    def populations(self):
        return self._boltzmann / self._z_reduced

    def density(self):
        v = self._vectors
        return FockOperator(self.space, (v * self.populations()) @ v.conj().T)

    def toEigenbasis(self, op):
        self._hamiltonian._check(op)
        v = self._vectors
        return v.conj().T @ op.entries @ v

    def expectation(self, obs):
        """
        @brief Tr(e^(-beta H) obs) / Tr(e^(-beta H)), complex in general
        """
        diag = np.diag(self.toEigenbasis(obs))
        return complex(np.dot(self.populations(), diag))

    def continuation(self, op, z):
        """
        @brief alpha_z(op) = e^(iHz) op e^(-iHz) in the eigenbasis, for complex z
        """
        growth = abs(complex(z).imag) * self._spread
        if growth > OVERFLOW_EXPONENT:
            raise ValidationError("beta", "continuation overflows (|Im z| * spread = {:.4g}); "
                                          "use a smaller n_max or beta".format(growth))
        diff = self._energies[:, None] - self._energies[None, :]
        return self.toEigenbasis(op) * np.exp(1j * complex(z) * diff)

    def printState(self):
        return "GibbsEnsemble(beta={:.6g}, {})".format(self._beta, self.space.printState())


def gibbs_average(ens, obs):
    """
    @brief Real part of the thermal average of obs
    """
    value = ens.expectation(obs)
    if abs(value.imag) > 1e-10 * max(1.0, abs(value.real)):
        log.warn("[gibbs_average]", "discarding imaginary part {:.3e}".format(value.imag))
    return value.real


def kms_sides(ens, o, p, t):
    """
    @brief (<O alpha_t(P)>, <alpha_(t - i beta)(P) O>)
    """
    rho = ens.populations()
    o_eig = ens.toEigenbasis(o)
    lhs = np.sum(rho * np.diag(o_eig @ ens.continuation(p, t)))
    rhs = np.sum(rho * np.diag(ens.continuation(p, t - 1j * ens.beta) @ o_eig))
    return complex(lhs), complex(rhs)


def kms_check(ens, o, p, t):
    """
    @brief |<O P(t)> - <P(t - i beta) O>|
    """
    lhs, rhs = kms_sides(ens, o, p, t)
    return abs(lhs - rhs)
