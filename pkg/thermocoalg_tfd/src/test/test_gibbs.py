import math
import unittest

import numpy as np

import thermocoalg_common.core.fock as fock
import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.errors import TruncationError, ValidationError
from thermocoalg_common.core.fock import FockOperator, FockSpace

from thermocoalg_tfd.core import gibbs
from thermocoalg_tfd.core import vacuum as vac
from thermocoalg_tfd.core.free_energy import minimize_free_energy
from thermocoalg_tfd.core.gibbs import GibbsEnsemble
from thermocoalg_tfd.core.vacuum import ModeSpec


def ladder(n_max):
    space = FockSpace(n_max)
    a = fock.make_annihilator(space)
    return space, a, a.adjoint(), fock.number_operator(space)


class TestGibbsEnsemble(unittest.TestCase):

    def setUp(self):
        self.longMessage = True

    def test_identity(self):
        space, _, _, n = ladder(40)
        ens = GibbsEnsemble(n, 1.0)
        msg = """
        the thermal average of 1 is 1"""
        self.assertAlmostEqual(1.0, gibbs.gibbs_average(ens, fock.identity(space)), delta=1e-15, msg=msg)
        self.assertAlmostEqual(1.0, float(np.sum(ens.populations())), delta=1e-15, msg=msg)

    def test_number(self):
        _, _, _, n = ladder(40)
        ens = GibbsEnsemble(n, 1.0)
        v = minimize_free_energy([1.0], 1.0, n_max=40)
        msg = """
        <N> at beta=1 should be 1/(e-1), the condensate of the minimizing vacuum"""
        self.assertAlmostEqual(1.0 / (math.e - 1.0), gibbs.gibbs_average(ens, n), delta=1e-12, msg=msg)
        self.assertAlmostEqual(vac.condensate_number(v), gibbs.gibbs_average(ens, n), delta=1e-9, msg=msg)

    def test_number_squared(self):
        _, _, _, n = ladder(60)
        ens = GibbsEnsemble(n, 1.0)
        v = vac.build_vacuum([ModeSpec(1.0, vac.theta_for_beta(1.0, 1.0))], 60)
        msg = """
        <N^2> should match sum n^2 W_n of the theta(beta) vacuum"""
        expected = float(np.dot(np.arange(61) ** 2, v.weightsOf(0)))
        self.assertAlmostEqual(expected, gibbs.gibbs_average(ens, n @ n), delta=1e-9, msg=msg)

    def test_tfd_equivalence(self):
        for beta in (0.5, 1.0, 2.0):
            space, a, ad, n = ladder(60)
            ens = GibbsEnsemble(n, beta)
            v = vac.build_vacuum([ModeSpec(1.0, vac.theta_for_beta(beta, 1.0))], 60)
            for name, obs in (("N", n), ("N^2", n @ n), ("a + a+", a + ad)):
                msg = """
                {} at beta={} should agree between the trace and the thermal vacuum""".format(name, beta)
                self.assertAlmostEqual(gibbs.gibbs_average(ens, obs), vac.vacuum_expectation(v, obs),
                                       delta=1e-8, msg=msg)
            self.assertEqual(0.0, vac.vacuum_expectation(v, a + ad), msg)

    def test_random_polynomials(self):
        rng = np.random.default_rng(7)
        for beta, energy in rng.uniform(0.2, 5.0, size=(6, 2)):
            n_max = gibbs.required_gibbs_n_max(beta, energy)
            n = fock.number_operator(FockSpace(n_max))
            ens = GibbsEnsemble(energy * n, beta)
            v = vac.build_vacuum([ModeSpec(energy, vac.theta_for_beta(beta, energy))], n_max, tail_tol=1e-11)
            power = fock.identity(n.space)
            for degree in (1, 2, 3):
                power = power @ n
                expected = gibbs.gibbs_average(ens, power)
                msg = """
                <N^{}> at beta={:.3f}, E={:.3f} should match the vacuum expectation""".format(degree, beta, energy)
                self.assertAlmostEqual(expected, vac.vacuum_expectation(v, power),
                                       delta=1e-8 * max(1.0, abs(expected)), msg=msg)

    def test_low_temperature(self):
        _, _, _, n = ladder(60)
        ens = GibbsEnsemble(n, 5.0)
        msg = """
        <N> at beta=5 should be the geometric series value"""
        self.assertAlmostEqual(math.exp(-5) / (1 - math.exp(-5)), gibbs.gibbs_average(ens, n), delta=1e-14, msg=msg)

    def test_partition_function(self):
        space, _, _, n = ladder(50)
        h = n + 2.0 * fock.identity(space)
        ens = GibbsEnsemble(h, 1.0)
        msg = """
        Z and -ln Z / beta should follow the shifted geometric series"""
        z = math.exp(-2.0) / (1.0 - math.exp(-1.0))
        self.assertAlmostEqual(z, ens.partitionFunction(), delta=1e-14, msg=msg)
        self.assertAlmostEqual(-math.log(z), ens.freeEnergy(), delta=1e-12, msg=msg)

    def test_density(self):
        _, _, _, n = ladder(30)
        ens = GibbsEnsemble(n, 1.5)
        rho = ens.density()
        msg = """
        the density should be hermitian with unit trace"""
        self.assertTrue(rho.isHermitian(1e-15), msg)
        self.assertAlmostEqual(1.0, np.trace(rho.entries).real, delta=1e-14, msg=msg)

    def test_truncation_tail(self):
        _, _, _, n = ladder(5)
        msg = """
        a visible Boltzmann tail should be refused with a suggested truncation"""
        with self.assertRaises(TruncationError, msg=msg) as ctx:
            GibbsEnsemble(n, 0.1)
        self.assertGreater(ctx.exception.suggested_n_max, 5, msg)
        n_ok = fock.number_operator(FockSpace(ctx.exception.suggested_n_max))
        self.assertLess(GibbsEnsemble(n_ok, 0.1).tail, gibbs.GIBBS_TAIL_TOL, msg)

    def test_validation(self):
        space, a, _, n = ladder(10)
        msg = """
        non hermitian or non finite Hamiltonians and beta <= 0 should be refused"""
        with self.assertRaises(ValidationError, msg=msg):
            GibbsEnsemble(a, 1.0)
        with self.assertRaises(ValidationError, msg=msg):
            GibbsEnsemble(n, 0.0)
        bad = np.diag(np.arange(11, dtype=float))
        bad[3, 3] = np.nan
        with self.assertRaises(ValidationError, msg=msg):
            GibbsEnsemble(FockOperator(space, bad), 1.0)

    def test_imaginary_part_dropped(self):
        space, _, _, n = ladder(40)
        ens = GibbsEnsemble(n, 1.0)
        log.setLevel(log.WARN)
        warnings = log.countMsg(log.WARN)
        msg = """
        an anti-hermitian observable has a purely imaginary average; the real part is returned"""
        self.assertEqual(0.0, gibbs.gibbs_average(ens, 1j * fock.identity(space)), msg)
        self.assertEqual(warnings + 1, log.countMsg(log.WARN), msg)


class TestKMS(unittest.TestCase):

    def setUp(self):
        self.longMessage = True
        self.space, self.a, self.ad, self.n = ladder(gibbs.required_gibbs_n_max(1.0, 1.0))
        self.ens = GibbsEnsemble(self.n, 1.0)

    def test_identity(self):
        eye = fock.identity(self.space)
        msg = """
        the identity satisfies KMS trivially"""
        self.assertLess(gibbs.kms_check(self.ens, eye, eye, 0.7), 1e-14, msg)

    def test_ladder_pairs(self):
        pairs = (("a, a+", self.a, self.ad), ("N, a + a+", self.n, self.a + self.ad))
        for name, o, p in pairs:
            for t in np.linspace(-2.0, 2.0, 10):
                msg = """
                <O P(t)> = <P(t - i beta) O> for {} at t={}""".format(name, t)
                self.assertLess(gibbs.kms_check(self.ens, o, p, t), 1e-8, msg)

    def test_sides_nontrivial(self):
        lhs, rhs = gibbs.kms_sides(self.ens, self.a, self.ad, 0.3)
        msg = """
        both sides should carry the value <a a+(t)>, not vanish"""
        self.assertGreater(abs(lhs), 1.0, msg)
        self.assertAlmostEqual(lhs, rhs, delta=1e-8, msg=msg)

    def test_overflow(self):
        _, a, ad, n = ladder(60)
        ens = GibbsEnsemble(n, 20.0)
        msg = """
        continuation beyond the overflow guard should be refused naming beta"""
        with self.assertRaises(ValidationError, msg=msg) as ctx:
            gibbs.kms_check(ens, a, ad, 0.0)
        self.assertEqual("beta", ctx.exception.name, msg)


if __name__ == "__main__":
    unittest.main()
