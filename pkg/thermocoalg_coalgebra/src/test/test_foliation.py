import math
import unittest

import numpy as np

from thermocoalg_common.core.errors import TruncationError, ValidationError
from thermocoalg_tfd.core import vacuum as vac

from thermocoalg_coalgebra.core import foliation as fol
from thermocoalg_coalgebra.core.machine import behaviour
from thermocoalg_coalgebra.core.stream import StreamPrefix


class TestFoliationMachine(unittest.TestCase):

    def setUp(self):
        self.longMessage = True

    def test_single_vacuum(self):
        lts, machine = fol.foliation_as_machine([0.0])
        msg = """
        one vacuum at theta = 0 emits the constant stream 0"""
        self.assertEqual(StreamPrefix([0.0] * 5), behaviour(machine, 0, 5), msg)
        self.assertTrue(lts.hasTransition(0, 0.0, 0), msg)

    def test_two_vacua(self):
        _, machine = fol.foliation_as_machine([0.0, math.asinh(1.0)])
        msg = """
        sinh^2(asinh 1) = 1 and the last vacuum repeats"""
        self.assertEqual(StreamPrefix([0.0, 1.0, 1.0, 1.0]), behaviour(machine, 0, 4), msg)

    def test_labels_match_condensate(self):
        grid = np.linspace(0.0, 1.0, 5)
        _, machine = fol.foliation_as_machine(grid, n_max=200)
        msg = """
        each color is the order parameter of its vacuum"""
        for i, theta in enumerate(grid):
            number = vac.condensate_number(vac.single_mode_vacuum(theta, 200))
            self.assertEqual(fol.order_label(theta), machine.color(i), msg)
            self.assertAlmostEqual(number, machine.color(i), delta=1e-10 * max(1.0, number), msg=msg)
        stream = list(behaviour(machine, 0, 5))
        self.assertEqual(sorted(stream), stream, msg)

    def test_lts(self):
        lts, machine = fol.foliation_as_machine([0.0, 0.5, 1.0])
        msg = """
        the LTS is a chain ending in a self loop"""
        self.assertTrue(lts.isDeterministic(), msg)
        self.assertEqual(frozenset([2]), lts.successors(2), msg)
        self.assertEqual(frozenset([1]), lts.successors(0), msg)
        self.assertEqual(3, len(machine), msg)

    def test_invalid_grids(self):
        msg = """
        empty, non finite and non increasing grids should be refused"""
        for grid in ([], [0.0, float("nan")], [0.0, 0.5, 0.5], [1.0, 0.0]):
            with self.assertRaises(ValidationError, msg=msg) as ctx:
                fol.foliation_as_machine(grid)
            self.assertEqual("theta_grid", ctx.exception.name, msg)
        with self.assertRaises(ValidationError, msg=msg):
            fol.foliation_as_machine([0.0, 1.0], energy=0.0)

    def test_negative_angles(self):
        msg = """
        negative angles are refused on both paths, with or without n_max"""
        for n_max in (None, 40):
            with self.assertRaises(ValidationError, msg=msg) as ctx:
                fol.foliation_as_machine([-1.0, -0.5, 0.0, 0.5], n_max=n_max)
            self.assertEqual("theta_grid", ctx.exception.name, msg)
        with self.assertRaises(ValidationError, msg=msg):
            fol.foliation_table([-0.5, 0.5], 1.0, 1.0, 40)

    def test_truncation(self):
        msg = """
        a vacuum that does not fit n_max should be reported with a larger suggestion"""
        with self.assertRaises(TruncationError, msg=msg) as ctx:
            fol.foliation_as_machine([0.0, 2.0], n_max=10)
        self.assertGreater(ctx.exception.suggested_n_max, 10, msg)


class TestFoliationTable(unittest.TestCase):

    def setUp(self):
        self.longMessage = True

    def test_rows(self):
        grid = [0.1, 0.4, 0.7]
        rows = fol.foliation_table(grid, 1.0, 2.0, 80)
        msg = """
        one row per vacuum, overlaps strictly between 0 and 1, none after the last"""
        self.assertEqual(3, len(rows), msg)
        for row in rows[:-1]:
            self.assertGreater(row.overlap_next, 0.0, msg)
            self.assertLess(row.overlap_next, 1.0, msg)
        self.assertIsNone(rows[-1].overlap_next, msg)
        self.assertAlmostEqual(math.sinh(0.4) ** 2, rows[1].order_parameter, delta=1e-12, msg=msg)
        self.assertLess(rows[0].entropy, rows[2].entropy, msg)


if __name__ == "__main__":
    unittest.main()
