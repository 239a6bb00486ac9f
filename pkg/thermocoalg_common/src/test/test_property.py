import unittest
from thermocoalg_common.core.property import Property
from thermocoalg_common.core.errors import ValidationError
import thermocoalg_common.tools.logger as log


class TestProperty(unittest.TestCase):

    def setUp(self):
        self.longMessage = True
        log.disableOutput()

    def tearDown(self):
        log.enableOutput()
        log.clear()

    def test_init(self):
        p = Property("beta", float)
        msg = """
        a property built from a type should be unspecified"""
        self.assertFalse(p.isSpecified(), msg)
        self.assertTrue(p.dataTypeIs(float), msg)

        p = Property("n_max", 60)
        msg = """
        a property built from a value takes its type"""
        self.assertTrue(p.dataTypeIs(int), msg)
        self.assertEqual(60, p.value, msg)

    def test_setValue(self):
        p = Property("beta", 1.0)
        p.value = 2
        msg = """
        an int should be promoted where a float is expected"""
        self.assertEqual(2.0, p.value, msg)
        self.assertIsInstance(p.value, float, msg)

        msg = """
        a value of the wrong type should be refused and logged"""
        with self.assertRaises(ValidationError, msg=msg):
            p.setValue("hot")
        self.assertEqual(2.0, p.value, msg)

        msg = """
        a bool is not an integer truncation level"""
        q = Property("n_max", 60)
        with self.assertRaises(ValidationError, msg=msg):
            q.setValue(True)

    def test_setValueFromStr(self):
        flag = Property("parallel", False)
        msg = """
        boolean words should be understood"""
        for text, expected in (("true", True), ("OFF", False), ("1", True), (" no ", False)):
            flag.setValueFromStr(text)
            self.assertIs(expected, flag.value, msg)
        with self.assertRaises(ValidationError, msg=msg):
            flag.setValueFromStr("maybe")

        msg = """
        numeric text should be converted"""
        p = Property("tol_bose", 1e-10)
        p.setValueFromStr("2.5e-9")
        self.assertEqual(2.5e-9, p.value, msg)

    def test_unset(self):
        p = Property("seed", 3)
        p.unset()
        msg = """
        unset should clear the value but keep the type"""
        self.assertFalse(p.isSpecified(), msg)
        self.assertEqual(int, p.dataType(), msg)
        self.assertEqual("seed:None", p.printState(), msg)


if __name__ == "__main__":
    unittest.main()
