import unittest
import thermocoalg_common.core.params as params
from thermocoalg_common.core.errors import ValidationError


def paramMapValues(ph):
    # map paramhandler keys to their current values
    return {k: ph.getParamValue(k) for k in ph.keys()}


class TestParamHandler(unittest.TestCase):

    def setUp(self):
        self.longMessage = True
        self.ph1 = params.ParamHandler()
        self.ph2 = params.ParamHandler()
        self.ph1.addParam("n_max", 60, "truncation level", lambda v: v >= 1)
        self.ph2.addParam("seed", 0, "random seed")
        msg = """
        addParam should register the key with its default value"""
        self.assertEqual({"n_max": 60}, paramMapValues(self.ph1), msg)

    def test_merge(self):
        msg = """
        merge should keep parameters of both handlers"""
        merged = self.ph1.merge(self.ph2)
        self.assertEqual({"n_max": 60, "seed": 0}, paramMapValues(merged), msg)

        msg = """
        a value specified from a file should override the built-in one"""
        self.ph2.addParam("n_max", 60)
        self.ph2.specify("n_max", 40, params.ParamTypes.File)
        merged = self.ph1.merge(self.ph2)
        self.assertEqual(40, merged.getParamValue("n_max"), msg)
        self.assertEqual(params.ParamTypes.File, merged["n_max"].origin, msg)

        msg = """
        a built-in value in other should not override self"""
        self.ph1.specify("n_max", 30, params.ParamTypes.Flag)
        self.ph2.setDefault("n_max")
        merged = self.ph1.merge(self.ph2)
        self.assertEqual(30, merged.getParamValue("n_max"), msg)

        msg = """
        merge should leave both inputs untouched"""
        self.assertEqual(30, self.ph1.getParamValue("n_max"), msg)

    def test_specify(self):
        msg = """
        specify should set the value and remember its origin"""
        self.ph1.specify("n_max", 12, params.ParamTypes.Flag)
        self.assertEqual(12, self.ph1.getParamValue("n_max"), msg)
        self.assertEqual(params.ParamTypes.Flag, self.ph1["n_max"].origin, msg)

        msg = """
        a failing check should keep the previous value"""
        with self.assertRaises(ValidationError, msg=msg):
            self.ph1.specify("n_max", 0)
        self.assertEqual(12, self.ph1.getParamValue("n_max"), msg)

        msg = """
        an unknown key should raise a ValidationError naming the key"""
        with self.assertRaises(ValidationError, msg=msg) as ctx:
            self.ph1.specify("n-max", 3)
        self.assertEqual("n-max", ctx.exception.name, msg)

    def test_specifyFromStr(self):
        self.ph1.addParam("parallel", False)
        self.ph1.addParam("tol_kms", 1e-8)
        self.ph1.specifyFromStr("parallel", "yes", params.ParamTypes.File)
        self.ph1.specifyFromStr("tol_kms", "1e-6", params.ParamTypes.File)
        msg = """
        text values should be converted to the param data type"""
        self.assertIs(True, self.ph1.getParamValue("parallel"), msg)
        self.assertEqual(1e-6, self.ph1.getParamValue("tol_kms"), msg)

        msg = """
        unreadable text should be refused"""
        with self.assertRaises(ValidationError, msg=msg):
            self.ph1.specifyFromStr("n_max", "sixty")

    def test_setDefault(self):
        self.ph1.specify("n_max", 7, params.ParamTypes.Flag)
        self.ph1.setDefault()
        msg = """
        setDefault without a key should restore every param"""
        self.assertEqual(60, self.ph1.getParamValue("n_max"), msg)
        self.assertTrue(self.ph1["n_max"].hasDefaultValue(), msg)
        self.assertEqual(params.ParamTypes.Builtin, self.ph1["n_max"].origin, msg)

    def test_filtered(self):
        self.ph1.addParam("format", "csv")
        self.ph1.specify("format", "json", params.ParamTypes.Flag)
        msg = """
        getParamMapFiltered should select params by origin"""
        self.assertEqual(["format"], list(self.ph1.getParamMapFiltered(params.ParamTypes.Flag)), msg)

    def test_printState(self):
        self.ph1.addParam("format", "csv")
        msg = """
        printState lists params sorted by key"""
        self.assertEqual("format:csv n_max:60 ", self.ph1.printState(), msg)


if __name__ == "__main__":
    unittest.main()
