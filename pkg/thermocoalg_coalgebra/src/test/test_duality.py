import unittest

from thermocoalg_coalgebra.core import duality
from thermocoalg_coalgebra.core.finite_function import FiniteFunction
from thermocoalg_coalgebra.core.machine import ColoredMachine


def two_cycle():
    return ColoredMachine({"x": ("red", "y"), "y": ("blue", "x")})


class TestArrows(unittest.TestCase):

    def setUp(self):
        self.longMessage = True

    def test_opposite_composition(self):
        f = duality.Arrow(lambda x: x + 1, "f")
        g = duality.Arrow(lambda x: 2 * x, "g")
        msg = """
        f^op then g^op is (g then f)^op"""
        composite = f.op().then(g.op())
        self.assertEqual("f.g^op", composite.name, msg)
        self.assertEqual(7, composite.unop()(3), msg)
        self.assertEqual(8, f.then(g)(3), msg)


class TestDualityCheck(unittest.TestCase):

    def setUp(self):
        self.longMessage = True

    def test_identity(self):
        m = two_cycle()
        report = duality.alg_coalg_duality_check(m)
        msg = """
        the identity square holds in both readings"""
        self.assertTrue(report.passed, report.printState() + msg)
        self.assertEqual(6, len(report.results), msg)

    def test_homomorphism(self):
        m = ColoredMachine({0: ("red", 1), 1: ("blue", 2), 2: ("red", 3), 3: ("blue", 0)})
        f = FiniteFunction(m.states, ["x", "y"], {0: "x", 1: "y", 2: "x", 3: "y"})
        report = duality.alg_coalg_duality_check(m, two_cycle(), f)
        msg = """
        a verified homomorphism passes both readings at every state"""
        self.assertTrue(report.passed, report.printState() + msg)

    def test_falsified(self):
        m = two_cycle()
        swap = FiniteFunction(m.states, m.states, {"x": "y", "y": "x"})
        report = duality.alg_coalg_duality_check(m, m, swap)
        msg = """
        a non homomorphism fails both readings at the same states, which still agree"""
        self.assertFalse(report.passed, msg)
        for x in m.states:
            self.assertFalse(report["coalgebra square at {!r}".format(x)].passed, msg)
            self.assertFalse(report["op-algebra square at {!r}".format(x)].passed, msg)
            self.assertTrue(report["readings agree at {!r}".format(x)].passed, msg)

    def test_preimages(self):
        msg = """
        the graph of a map read backwards groups inputs by their image"""
        fibers = duality.preimages(lambda n: n % 3, range(7))
        self.assertEqual({0: frozenset([0, 3, 6]), 1: frozenset([1, 4]), 2: frozenset([2, 5])}, fibers, msg)

    def test_reversed_square_from_fibers(self):
        m = two_cycle()
        swap = FiniteFunction(m.states, m.states, {"x": "y", "y": "x"})
        left, right = duality.op_square_keys(m, m, swap)
        msg = """
        the reversed square places x under (blue, x) on one side and (red, x) on the other"""
        self.assertEqual({("blue", "x")}, left["x"], msg)
        self.assertEqual({("red", "x")}, right["x"], msg)
        left, right = duality.op_square_keys(m, m, FiniteFunction.identity(m.states))
        msg = """
        the identity square places every state under its own step on both sides"""
        for x in m.states:
            self.assertEqual({tuple(m.step(x))}, left[x], msg)
            self.assertEqual(left[x], right[x], msg)


class TestBogoliubovReversal(unittest.TestCase):

    def setUp(self):
        self.longMessage = True

    def test_reversal(self):
        report = duality.bogoliubov_reversal_check((0.3, -0.5, 0.8))
        msg = """
        undoing the steps in reverse order restores the ladder operators"""
        self.assertTrue(report.passed, report.printState() + msg)

    def test_no_steps(self):
        report = duality.bogoliubov_reversal_check(())
        msg = """
        an empty chain is its own inverse"""
        self.assertTrue(report.passed, report.printState() + msg)


if __name__ == "__main__":
    unittest.main()
