"""
Modular conjugation J and the thermal Hamiltonian H_bar = H - H~ on one doubled mode.

J is antiunitary: it conjugates the components of a state and then swaps the
plain and tilde tensor factors. For real, swap-symmetric condensates J fixes
the vacuum, and J exp(-beta H_bar / 2) M |0(theta)> = M+ |0(theta)> ties the
angle to the temperature.
"""
import numpy as np

import thermocoalg_common.core.fock as fock
from thermocoalg_common.core.fock import FockOperator, Mode
from thermocoalg_common.core.report import CheckReport
from thermocoalg_common.tools.decorators import requires_doubled

from thermocoalg_tfd.core.vacuum import beta_for_theta


class ModularConjugation(object):
    """
    @brief J = swap o complex conjugation on a doubled space
    """

    @requires_doubled("space")
    def __init__(self, space):
        self._space = space
        self._swap = fock.swap_operator(space)

    @property
    def space(self):
        return self._space

    def apply(self, state):
        return self._swap.apply(np.conj(np.asarray(state, dtype=complex)))

    def conjugate(self, op):
        """
        @brief J op J, a linear operator again
        """
        return FockOperator(self._space, self._swap.entries @ op.entries.conj() @ self._swap.entries)

    def squareResidual(self):
        """
        @brief Largest entry of J^2 - 1
        """
        return (self._swap @ self._swap).distance(fock.identity(self._space))


@requires_doubled("space")
def modular_hamiltonian(space, energy):
    """
    @brief H_bar = E (A+ A - A~+ A~), diagonal in the number basis
    """
    return energy * (fock.number_operator(space, Mode.Plain) - fock.number_operator(space, Mode.Tilde))


def _diagonal_exp(op, scale, state):
    # exp(scale op) state for op diagonal in the number basis; zero components stay zero
    with np.errstate(over="ignore", invalid="ignore"):
        scaled = np.exp(scale * np.real(np.diag(op.entries))) * state
    return np.where(state == 0, 0.0, scaled)


def _probes(space):
    a = fock.make_annihilator(space, Mode.Plain)
    ad = a.adjoint()
    return [("A", a), ("A+", ad), ("A^2", a @ a), ("A+^2", ad @ ad), ("A+A", ad @ a), ("AA+", a @ ad)]


def _relation_name(probe):
    return "J exp(-beta Hbar/2) M|0> = M+|0> [M={}]".format(probe)


def modular_checks(v, k=0, tol=1e-8, fixed_tol=1e-12, t=1.0):
    """
    @brief Check the modular identities on mode k of a vacuum

    Exact identities get tolerance 0. The defining relation is skipped at
    theta = 0, where beta is infinite.
    """
    mode = v.mode(k)
    space = v.space
    state = v.stateVector(k)
    j = ModularConjugation(space)
    hbar = modular_hamiltonian(space, mode.energy)
    report = CheckReport("modular")

    report.add("J^2 = 1", j.squareResidual(), 0)
    report.add("J|0> = |0>", float(np.max(np.abs(j.apply(state) - state))), fixed_tol)
    report.add("Hbar|0> = 0", float(np.max(np.abs(hbar.apply(state)))), 0)
    report.add("J Hbar J = -Hbar", j.conjugate(hbar).distance(-hbar), 0)
    evolved = _diagonal_exp(hbar, -1j * t, state)
    report.add("exp(-i Hbar t)|0> = |0>", float(np.max(np.abs(evolved - state))), fixed_tol)

    if mode.theta == 0:
        for name, _ in _probes(space):
            report.skip(_relation_name(name), "theta=0, beta infinite")
        return report
    beta = beta_for_theta(mode.theta, mode.energy)
    for name, m in _probes(space):
        lhs = j.apply(_diagonal_exp(hbar, -0.5 * beta, m.apply(state)))
        rhs = m.adjoint().apply(state)
        report.add(_relation_name(name), float(np.max(np.abs(lhs - rhs))), tol)
    return report
