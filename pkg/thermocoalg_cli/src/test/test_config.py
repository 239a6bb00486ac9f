import os
import shutil
import tempfile
import unittest

import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.errors import ValidationError
from thermocoalg_common.core.params import ParamTypes

from thermocoalg_cli.core.config import TOLERANCES, RunConfig, normalize_key


class TestRunConfig(unittest.TestCase):

    def setUp(self):
        self.longMessage = True
        log.disableOutput()
        log.clear()

    def tearDown(self):
        log.enableOutput()
        log.clear()

    def test_defaults(self):
        config = RunConfig()
        msg = """
        built-in defaults"""
        self.assertEqual(60, config.n_max, msg)
        self.assertEqual("csv", config.format, msg)
        self.assertEqual(0, config.seed, msg)
        self.assertFalse(config.parallel, msg)
        self.assertEqual(12, config.label_digits, msg)
        self.assertEqual(1e-8, config.tol("kms"), msg)
        self.assertEqual(1e-12, config.tol("gibbs-tail"), msg)
        for name in TOLERANCES:
            self.assertGreater(config.tol(name), 0.0, msg)

    def test_key_spelling(self):
        config = RunConfig()
        msg = """
        n-max, nMax and n_max name the same setting"""
        self.assertEqual("n_max", normalize_key("nMax"), msg)
        self.assertEqual("n_max", normalize_key(" n-max "), msg)
        config.set("nMax", "40")
        self.assertEqual(40, config.n_max, msg)
        config.set("label-digits", "6")
        self.assertEqual(6, config.label_digits, msg)

    def test_file_then_flags(self):
        config = RunConfig()
        config.parseText("# run settings\nn_max = 30\n\nformat=json  # trailing comment\nparallel = yes\n")
        msg = """
        file values replace the defaults and are marked as such"""
        self.assertEqual(30, config.n_max, msg)
        self.assertEqual("json", config.format, msg)
        self.assertTrue(config.parallel, msg)
        self.assertEqual(ParamTypes.File, config.params["n_max"].origin, msg)
        config.specify("n_max", 50)
        msg = """
        flags override the file"""
        self.assertEqual(50, config.n_max, msg)
        self.assertEqual(ParamTypes.Flag, config.params["n_max"].origin, msg)

    def test_unknown_key(self):
        msg = """
        an unknown key should be named together with its line"""
        with self.assertRaises(ValidationError, msg=msg) as ctx:
            RunConfig().parseText("n_max=10\n# ok\nbogus=1\n")
        self.assertEqual("bogus", ctx.exception.name, msg)
        self.assertIn("line 3", str(ctx.exception), msg)
        with self.assertRaises(ValidationError, msg=msg) as ctx:
            RunConfig().parseText("n_max 10\n")
        self.assertIn("line 1", str(ctx.exception), msg)

    def test_ranges(self):
        config = RunConfig()
        msg = """
        n_max >= 1, tolerances > 0, known formats only"""
        for key, text in (("n_max", "0"), ("format", "xml"), ("tol_kms", "-1"), ("tol_ccr", "nan"),
                          ("n_max", "ten"), ("seed", "-3")):
            with self.assertRaises(ValidationError, msg=msg) as ctx:
                config.set(key, text)
            self.assertEqual(key, ctx.exception.name, msg)
        self.assertEqual(60, config.n_max, msg)
        self.assertEqual(1e-8, config.tol("kms"), msg)

    def test_tolerance_overrides(self):
        config = RunConfig()
        config.setTolerance("kms=1e-10")
        config.setTolerance("gibbs-tail = 1e-14")
        msg = """
        --tol NAME=VALUE changes one tolerance"""
        self.assertEqual(1e-10, config.tol("kms"), msg)
        self.assertEqual(1e-14, config.tol("gibbs_tail"), msg)
        for bad in ("kms", "=1", "nope=1"):
            with self.assertRaises(ValidationError, msg=msg) as ctx:
                config.setTolerance(bad)
            self.assertEqual("tol", ctx.exception.name, msg)

    def test_load_file(self):
        folder = tempfile.mkdtemp()
        try:
            path = os.path.join(folder, "run.cfg")
            with open(path, "w") as f:
                f.write("seed = 7\ntol-unitarity = 1e-13\n")
            config = RunConfig()
            config.loadFile(path)
            msg = """
            settings should be read from a file"""
            self.assertEqual(7, config.seed, msg)
            self.assertEqual(1e-13, config.tol("unitarity"), msg)
        finally:
            shutil.rmtree(folder)

    def test_describe(self):
        text = RunConfig().describe()
        msg = """
        the help text lists each setting with its default"""
        self.assertIn("n-max = 60", text, msg)
        self.assertIn("tol-kms = 1e-08", text, msg)


if __name__ == "__main__":
    unittest.main()
