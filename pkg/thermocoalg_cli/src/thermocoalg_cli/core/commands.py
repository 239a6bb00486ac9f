"""
The experiments behind each subcommand.

Every command takes the RunConfig first and returns a CommandResult: the
output (a Table, or a line of text for the machine command) and the
CheckReport its rows were verified against, if any.
"""
import collections
import math

import numpy as np
from multiprocessing.dummy import Pool

import thermocoalg_common.core.fock as fock
import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.errors import ValidationError
from thermocoalg_common.core.fock import FockSpace
from thermocoalg_common.core.report import CheckReport
from thermocoalg_common.tools.time_keeper import Timer
from thermocoalg_tfd.core import fibonacci as fib
from thermocoalg_tfd.core import free_energy as fe
from thermocoalg_tfd.core import gibbs
from thermocoalg_tfd.core import hopf_doubling
from thermocoalg_tfd.core import modular
from thermocoalg_tfd.core import qubit
from thermocoalg_tfd.core import vacuum as vac
from thermocoalg_coalgebra.core import foliation as fol
from thermocoalg_coalgebra.core import functor
from thermocoalg_coalgebra.core import homomorphism as hom
from thermocoalg_coalgebra.core import machine as mc
from thermocoalg_coalgebra.core import refinement as ref
from thermocoalg_coalgebra.core import serialization as ser
from thermocoalg_coalgebra.core.finite_function import random_function

from thermocoalg_cli.core.table import Table

CommandResult = collections.namedtuple("CommandResult", "output report")


def _map(config, fn, items):
    """
    @brief fn over items, on a thread pool when config.parallel; order is kept
    """
    items = list(items)
    if not config.parallel or len(items) < 2:
        return [fn(x) for x in items]
    pool = Pool()
    try:
        return pool.map(fn, items)
    finally:
        pool.close()


def _ladder(n_max):
    space = FockSpace(n_max)
    a = fock.make_annihilator(space)
    return a, a.adjoint(), fock.number_operator(space)


def cmd_bose(config, beta, energies):
    """
    @brief Minimize F per energy and compare sinh^2 theta with the Bose occupation
    """
    if not energies:
        raise ValidationError("energies", "at least one energy is required")

    def row(energy):
        minimum = fe.minimize_mode(energy, beta)
        closed = vac.bose_occupation(beta, energy)
        found = math.sinh(minimum.theta) ** 2
        return energy, minimum.theta, closed, found, abs(found - closed)

    table = Table(("E", "theta_min", "N_bose_closed_form", "N_from_minimizer", "abs_diff"), name="bose")
    report = CheckReport("bose")
    for values in _map(config, row, energies):
        table.addRow(*values)
        report.add("Bose occupation at E={}".format(values[0]), values[4], config.tol("bose"))
    return CommandResult(table, report)


def cmd_gibbs_vs_tfd(config, beta, energy):
    """
    @brief Trace averages over the Gibbs state against theta(beta) vacuum expectations
    """
    theta = vac.theta_for_beta(beta, energy)
    n_max = config.n_max
    a, ad, n = _ladder(n_max)
    ens = gibbs.GibbsEnsemble(n * energy, beta, tail_tol=config.tol("gibbs_tail"))
    v = vac.build_vacuum([vac.ModeSpec(energy, theta)], n_max, config.tol("tail"))

    table = Table(("observable", "gibbs_average", "vacuum_expectation", "abs_diff"), name="gibbs-vs-tfd")
    report = CheckReport("gibbs vs tfd")
    for name, obs in (("N", n), ("N^2", n @ n), ("a+a+", a + ad)):
        thermal = gibbs.gibbs_average(ens, obs)
        expected = vac.vacuum_expectation(v, obs)
        table.addRow(name, thermal, expected, abs(thermal - expected))
        report.add("<{}>".format(name), abs(thermal - expected), config.tol("gibbs"))
    return CommandResult(table, report)


def cmd_kms(config, beta, energy, t_max, steps):
    """
    @brief Both sides of the KMS condition for (a, a+) and (N, a + a+) with H = E N
    """
    if steps < 1:
        raise ValidationError("steps", "must be >= 1, got {}".format(steps))
    if not math.isfinite(t_max):
        raise ValidationError("t_max", "must be finite")
    if not energy > 0:
        raise ValidationError("energy", "must be > 0, got {}".format(energy))
    a, ad, n = _ladder(config.n_max)
    ens = gibbs.GibbsEnsemble(n * energy, beta, tail_tol=config.tol("gibbs_tail"))
    table = Table(("pair", "t", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "residual"), name="kms")
    report = CheckReport("kms")
    for name, o, p in (("a,a+", a, ad), ("N,a+a+", n, a + ad)):
        for t in np.linspace(0.0, t_max, steps):
            lhs, rhs = gibbs.kms_sides(ens, o, p, float(t))
            residual = abs(lhs - rhs)
            table.addRow(name, t, lhs.real, lhs.imag, rhs.real, rhs.imag, residual)
            report.add("KMS {} at t={:.6g}".format(name, t), residual, config.tol("kms"))
    return CommandResult(table, report)


def cmd_qubit(config, omega1, omega2, theta, t_max, steps):
    """
    @brief Amplitudes of phi(t), psi(t), unitarity and doubled entropies on a time grid
    """
    if steps < 2:
        raise ValidationError("steps", "must be >= 2, got {}".format(steps))
    params = qubit.TwoLevelParams(omega1, omega2, theta)
    if not math.isfinite(t_max):
        raise ValidationError("t_max", "must be finite")
    pair = qubit.mix(params)
    columns = ["t"]
    for state in ("phi", "psi"):
        for level in ("0", "1"):
            columns += [state + level + "_re", state + level + "_im"]
    columns += ["unitarity_residual", "S_phi", "S_phi_tilde", "S_psi", "S_psi_tilde"]
    table = Table(columns, name="qubit")
    worst = 0.0
    for t in np.linspace(0.0, t_max, steps):
        now = qubit.evolve(pair, params, float(t))
        residual = qubit.unitarity_residual(qubit.evolution_matrix(params, float(t)))
        worst = max(worst, residual)
        amplitudes = []
        for x in now.phi[0], now.phi[1], now.psi[0], now.psi[1]:
            amplitudes += [x.real, x.imag]
        table.addRow(t, *(amplitudes + [residual] + list(qubit.doubled_entropy(now, which="phi"))
                          + list(qubit.doubled_entropy(now, which="psi"))))
    report = CheckReport("qubit")
    report.add("unitarity", worst, config.tol("unitarity"))
    return CommandResult(table, report)


def cmd_fibonacci(config, depth, mode="tree"):
    """
    @brief Census of the sigma+- tree per depth against F(depth + 1)
    """
    table = Table(("depth", "zeros", "ones", "total", "fibonacci_reference", "match"), name="fibonacci")
    mismatches = 0
    for census in fib.generate(depth, mode):
        reference = fib.fibonacci(census.depth + 1)
        match = census.total == reference
        mismatches += 0 if match else 1
        table.addRow(census.depth, census.zeros, census.ones, census.total, reference, match)
    report = CheckReport("fibonacci")
    report.add("totals follow F(depth + 1)", mismatches, 0)
    return CommandResult(table, report)


def cmd_machine(config, path, start, n, equiv=None, against=None):
    """
    @brief The n color prefix of beh(start), or the equivalence verdict of two states

    With equiv the second state is looked up in the machine read from
    against, or in the same machine.
    """
    m = ser.load_machine(path)
    if equiv is None:
        return CommandResult(str(mc.behaviour(m, start, n)), None)
    x, y = equiv
    other = ser.load_machine(against) if against else m
    verdict = ref.observational_equivalence(m, x, other, y)
    if verdict:
        return CommandResult("equivalent", None)
    return CommandResult("differ at index {}".format(verdict.index), None)


def cmd_foliation(config, theta_min, theta_max, points, energy=1.0, beta=1.0):
    """
    @brief Order parameter stream of the vacuum foliation with entropy, free energy and overlaps
    """
    if points < 2:
        raise ValidationError("points", "must be >= 2, got {}".format(points))
    if not (math.isfinite(theta_min) and theta_min >= 0.0):
        raise ValidationError("theta_min", "must be finite and >= 0, got {}".format(theta_min))
    if not (math.isfinite(theta_max) and theta_max > theta_min):
        raise ValidationError("theta_max", "must exceed theta_min={}".format(theta_min))
    grid = np.linspace(theta_min, theta_max, points)
    _, machine = fol.foliation_as_machine(grid, energy, config.n_max, config.label_digits)
    stream = mc.behaviour(machine, 0, points)
    table = Table(("index", "theta", "label", "order_parameter", "entropy", "free_energy", "overlap_next"),
                  name="foliation")
    outside = 0
    for label, row in zip(stream, fol.foliation_table(grid, energy, beta, config.n_max)):
        table.addRow(row.index, row.theta, label, row.order_parameter, row.entropy, row.free_energy,
                     row.overlap_next)
        if row.overlap_next is not None and not 0.0 < row.overlap_next <= 1.0:
            outside += 1
    report = CheckReport("foliation")
    report.add("overlaps in (0, 1]", outside, 0)
    return CommandResult(table, report)


def _check_bose(config, rng):
    worst = 0.0
    for beta in (0.5, 1.0, 2.0):
        for energy in (0.5, 1.0, 2.0):
            theta = fe.minimize_mode(energy, beta).theta
            worst = max(worst, abs(math.sinh(theta) ** 2 - vac.bose_occupation(beta, energy)))
    report = CheckReport("bose")
    report.add("Bose occupation from the minimizer", worst, config.tol("bose"))
    return report


def _check_gibbs(config, rng):
    return cmd_gibbs_vs_tfd(config, 1.0, 1.0).report


def _check_ccr(config, rng):
    report = CheckReport("ccr")
    space = FockSpace.doubled(20)
    for theta in rng.uniform(-2.0, 2.0, size=3):
        worst = max(hopf_doubling.bogoliubov(float(theta), space).ccrResiduals().values())
        report.add("CCR at theta={:.4f}".format(theta), worst, config.tol("ccr"))
    return report


def _check_reconstruction(config, rng):
    report = CheckReport("reconstruction")
    n_max = 40
    for theta in (0.1, 0.5, 1.0):
        expected = np.power(math.tanh(theta), np.arange(n_max + 1)) / math.cosh(theta)
        got = vac.reconstruct_vacuum(theta, n_max)
        report.add("exp(i theta G)|0,0~> at theta={}".format(theta), float(np.max(np.abs(got - expected))),
                   config.tol("reconstruction"))
    return report


def _check_kms(config, rng):
    result = cmd_kms(config, 1.0, 1.0, 2.0, 5)
    report = CheckReport("kms")
    worst = max(r.residual for r in result.report.results)
    report.add("KMS on (a, a+) and (N, a + a+)", worst, config.tol("kms"))
    return report


def _check_modular(config, rng):
    v = vac.single_mode_vacuum(0.5, 30)
    return modular.modular_checks(v, tol=config.tol("modular"))


def _check_qubit(config, rng):
    report = CheckReport("qubit")
    params = qubit.TwoLevelParams(1.0, 2.5, 0.4)
    worst = max(qubit.unitarity_residual(qubit.evolution_matrix(params, float(t)))
                for t in rng.uniform(-50.0, 50.0, size=100))
    report.add("unitarity", worst, config.tol("unitarity"))
    report.add("mixing frequency", qubit.generator_residual(params, 0.7), config.tol("frequency"))
    entropies = qubit.doubled_entropy(qubit.mix(qubit.TwoLevelParams(1.0, 2.0, math.pi / 4)))
    report.add("doubled entropy at pi/4", abs(entropies[0] - math.log(2.0)), config.tol("entropy"))
    return report


def _check_fibonacci(config, rng):
    return cmd_fibonacci(config, 20, "tree").report


def _check_coalgebra(config, rng):
    report = CheckReport("coalgebra")
    failures = sum(0 if hom.finality_check(m, exhaustive=True) else 1 for m in mc.enumerate_machines(2, "ab"))
    for _ in range(20):
        m = mc.random_machine(rng, int(rng.integers(1, 7)), "rgb")
        failures += 0 if hom.finality_check(m) else 1
    report.add("finality", failures, 0)

    disagreements = 0
    for _ in range(100):
        m = mc.random_machine(rng, int(rng.integers(1, 9)), "ab")
        m_prime = mc.random_machine(rng, int(rng.integers(1, 9)), "ab")
        x, y = int(rng.integers(0, len(m))), int(rng.integers(0, len(m_prime)))
        if ref.prefix_verdict(m, x, m_prime, y).equivalent != ref.refinement_verdict(m, x, m_prime, y):
            disagreements += 1
    report.add("prefix and refinement verdicts agree", disagreements, 0)

    broken = 0
    for _ in range(20):
        x, y, z = [range(int(s)) for s in rng.integers(1, 6, size=3)]
        if not functor.powerset_functor_check(random_function(rng, x, y), random_function(rng, y, z)):
            broken += 1
    report.add("powerset functor laws", broken, 0)
    return report


SELF_CHECKS = collections.OrderedDict([
    ("bose", _check_bose),
    ("gibbs", _check_gibbs),
    ("ccr", _check_ccr),
    ("reconstruction", _check_reconstruction),
    ("kms", _check_kms),
    ("modular", _check_modular),
    ("qubit", _check_qubit),
    ("fibonacci", _check_fibonacci),
    ("coalgebra", _check_coalgebra),
])


def cmd_selfcheck(config):
    """
    @brief Run a fast subset of the identity checks with their timings
    """
    def run(item):
        name, check = item
        with Timer("[selfcheck]", name) as timer:
            sub = check(config, np.random.default_rng([config.seed, len(name)]))
        return name, sub, timer.elapsed

    table = Table(("name", "residual", "tolerance", "passed", "seconds"), name="selfcheck")
    report = CheckReport("selfcheck")
    for name, sub, seconds in _map(config, run, SELF_CHECKS.items()):
        for r in sub.results:
            table.addRow("{}: {}".format(name, r.name), r.residual, r.tolerance, r.passed, seconds)
        report.extend(sub, prefix=name + ": ")
    log.info("[selfcheck]", "{} checks, {} failed".format(len(report.results), len(report.failures())))
    return CommandResult(table, report)
