import unittest

import numpy as np

from thermocoalg_common.core.errors import ParseError, ValidationError

from thermocoalg_cli.core import table as tb
from thermocoalg_cli.core.table import Table


class TestTable(unittest.TestCase):

    def setUp(self):
        self.longMessage = True

    def test_csv(self):
        t = Table(("name", "value", "ok"), [("a", 0.1, True), ("b", None, False), ("c", 3, True)])
        msg = """
        floats carry 17 significant digits, bools are lower case, None is empty"""
        self.assertEqual("name,value,ok\na,0.10000000000000001,true\nb,,false\nc,3,true\n", tb.to_csv(t), msg)

    def test_csv_is_stable(self):
        t = Table(("x",), [(1.0 / 3.0,), (1e-300,), (2.0 ** 60,)])
        msg = """
        the same table renders to the same bytes and the digits read back exactly"""
        self.assertEqual(tb.to_csv(t), tb.to_csv(Table(t.columns, t.rows)), msg)
        values = [float(line) for line in tb.to_csv(t).splitlines()[1:]]
        self.assertEqual(t.column("x"), values, msg)

    def test_json(self):
        t = Table(("name", "value", "ok", "gap"), [("a", 1.0 / 3.0, True, None), ("b", -2.5e-17, False, 4)])
        msg = """
        JSON output reads back to an equal table"""
        self.assertEqual(t, tb.from_json(tb.to_json(t)), msg)
        self.assertEqual(t, tb.from_json(tb.render(t, "json")), msg)

    def test_numpy_values(self):
        t = Table(("i", "x"))
        t.addRow(np.int64(3), np.float64(0.5))
        msg = """
        numpy scalars are stored as python numbers"""
        self.assertIs(int, type(t.rows[0][0]), msg)
        self.assertIs(float, type(t.rows[0][1]), msg)

    def test_errors(self):
        t = Table(("a", "b"))
        msg = """
        rows must match the columns and formats must be known"""
        with self.assertRaises(ValidationError, msg=msg):
            t.addRow(1)
        with self.assertRaises(ValidationError, msg=msg):
            Table(("a", "a"))
        with self.assertRaises(ValidationError, msg=msg):
            tb.render(t, "xml")
        with self.assertRaises(ValidationError, msg=msg):
            t.column("c")
        with self.assertRaises(ParseError, msg=msg):
            tb.from_json("[1, 2]")


if __name__ == "__main__":
    unittest.main()
