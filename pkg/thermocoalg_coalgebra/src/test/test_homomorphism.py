import unittest

import numpy as np

from thermocoalg_common.core.errors import ValidationError

from thermocoalg_coalgebra.core import homomorphism as hom
from thermocoalg_coalgebra.core import machine as mc
from thermocoalg_coalgebra.core.final import behaviour_map, final_image
from thermocoalg_coalgebra.core.finite_function import FiniteFunction
from thermocoalg_coalgebra.core.machine import ColoredMachine


def two_cycle():
    return ColoredMachine({"x": ("red", "y"), "y": ("blue", "x")})


def four_cycle():
    return ColoredMachine({0: ("red", 1), 1: ("blue", 2), 2: ("red", 3), 3: ("blue", 0)})


class TestCheckHomomorphism(unittest.TestCase):

    def setUp(self):
        self.longMessage = True

    def test_identity(self):
        m = two_cycle()
        msg = """
        the identity is a homomorphism"""
        self.assertTrue(hom.check_homomorphism(m, m, hom.identity_homomorphism(m)), msg)

    def test_quotient(self):
        f = FiniteFunction(range(4), ["x", "y"], {0: "x", 1: "y", 2: "x", 3: "y"})
        msg = """
        folding the four cycle onto the two cycle commutes with mu"""
        self.assertTrue(hom.check_homomorphism(four_cycle(), two_cycle(), f), msg)

    def test_behaviour_into_streams(self):
        m = four_cycle()
        target = final_image(m)
        msg = """
        beh commutes with the stream destructor for every tested prefix length"""
        for n in range(2 * len(m) + 1):
            self.assertTrue(hom.check_homomorphism(m, target, behaviour_map(m, target), n), msg)

    def test_broken_color(self):
        m = two_cycle()
        verdict = hom.check_homomorphism(m, m.relabel("y", "green"), FiniteFunction.identity(m.states))
        msg = """
        changing one color breaks the square at that state"""
        self.assertFalse(verdict, msg)
        self.assertEqual("y", verdict.witness, msg)
        self.assertIn("green", verdict.reason, msg)

    def test_broken_successor(self):
        m = ColoredMachine({"x": ("red", "y"), "y": ("red", "y")})
        f = FiniteFunction(m.states, m.states, {"x": "y", "y": "x"})
        verdict = hom.check_homomorphism(m, m, f)
        msg = """
        a color preserving map can still break the successor side"""
        self.assertFalse(verdict, msg)
        self.assertEqual("x", verdict.witness, msg)

    def test_not_total(self):
        f = FiniteFunction(["x"], ["x", "y"], {"x": "x"})
        msg = """
        f must cover every state of the source"""
        with self.assertRaises(ValidationError, msg=msg):
            hom.check_homomorphism(two_cycle(), two_cycle(), f)


class TestComposition(unittest.TestCase):

    def setUp(self):
        self.longMessage = True

    def test_compose(self):
        f = FiniteFunction(range(4), ["x", "y"], {0: "x", 1: "y", 2: "x", 3: "y"})
        target = final_image(two_cycle())
        g = behaviour_map(two_cycle(), target)
        composite = hom.compose_homomorphisms(four_cycle(), two_cycle(), target, f, g)
        msg = """
        homomorphisms compose, and the composite into the streams is beh itself"""
        self.assertTrue(hom.check_homomorphism(four_cycle(), target, composite), msg)
        self.assertEqual(behaviour_map(four_cycle(), target), composite, msg)

    def test_compose_rejects(self):
        m = two_cycle()
        bad = FiniteFunction(m.states, m.states, {"x": "y", "y": "x"})
        msg = """
        composing with a non homomorphism should name it"""
        with self.assertRaises(ValidationError, msg=msg) as ctx:
            hom.compose_homomorphisms(m, m, m, hom.identity_homomorphism(m), bad)
        self.assertEqual("g", ctx.exception.name, msg)

    def test_search(self):
        m = ColoredMachine({"a": ("r", "b"), "b": ("r", "a")})
        msg = """
        a constant two cycle maps onto itself by the identity and the swap only"""
        homs = hom.homomorphisms_into(m, m)
        self.assertEqual(2, len(homs), msg)
        self.assertIn(FiniteFunction(m.states, m.states, {"a": "b", "b": "a"}), homs, msg)
        self.assertEqual(1, len(hom.homomorphisms_into(two_cycle(), two_cycle())), msg)


class TestFinality(unittest.TestCase):

    def setUp(self):
        self.longMessage = True

    def test_small_machines_exhaustive(self):
        msg = """
        beh is the unique homomorphism into the stream system for every machine with |M| <= 3, |C| <= 3"""
        for n_states in (1, 2, 3):
            for machine in mc.enumerate_machines(n_states, "abc"):
                report = hom.finality_check(machine, exhaustive=True)
                self.assertTrue(report.passed, machine.printState(True) + "\n" + report.printState() + msg)

    def test_four_states(self):
        msg = """
        beh is the unique homomorphism for every machine with |M| = 4, |C| <= 3"""
        for machine in mc.enumerate_machines(4, "abc"):
            report = hom.finality_check(machine)
            self.assertTrue(report.passed, machine.printState(True) + "\n" + report.printState() + msg)

    def test_random_larger(self):
        rng = np.random.default_rng(13)
        msg = """
        finality on random machines with up to 8 states"""
        for _ in range(50):
            machine = mc.random_machine(rng, int(rng.integers(5, 9)), "rgb")
            self.assertTrue(hom.finality_check(machine).passed, machine.printState(True) + msg)


if __name__ == "__main__":
    unittest.main()
