"""
Run settings shared by every subcommand.

Values come from the built-in defaults, then an optional flat key=value
file, then the command line. Keys are normalized with inflection, so
n-max, nMax and n_max name the same setting.
"""
import collections
import io
import math

import inflection

import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.errors import ValidationError
from thermocoalg_common.core.params import ParamHandler, ParamTypes

FORMATS = ("csv", "json")

TOLERANCES = collections.OrderedDict([
    ("bose", (1e-10, "sinh^2 theta of the minimizer against the Bose occupation")),
    ("gibbs", (1e-8, "vacuum expectation against the Gibbs trace average")),
    ("kms", (1e-8, "KMS boundary condition residual")),
    ("ccr", (1e-9, "canonical commutators on the interior block")),
    ("reconstruction", (1e-8, "exp(i theta G)|0,0~> against sqrt(W_n)")),
    ("modular", (1e-8, "modular relation for the ladder operators")),
    ("unitarity", (1e-12, "unitarity of the qubit evolution")),
    ("tail", (1e-10, "vacuum weight allowed beyond n_max")),
    ("gibbs_tail", (1e-12, "Boltzmann factor allowed at the top level")),
    ("frequency", (1e-6, "mixing frequency against finite differences")),
    ("entropy", (1e-12, "doubled entropy against its closed form")),
])


def normalize_key(key):
    return inflection.underscore(key.strip()).replace("-", "_")


def _positive_finite(value):
    return math.isfinite(value) and value > 0


class RunConfig(object):
    """
    @brief Typed run settings over a ParamHandler

    >>> config = RunConfig()
    >>> config.set("n-max", "40")
    >>> config.n_max
    40
    >>> config.setTolerance("kms=1e-9")
    >>> config.tol("kms")
    1e-09
    """

    def __init__(self):
        self._params = ParamHandler()
        self._params.addParam("n_max", 60, "Fock truncation level", lambda v: v >= 1)
        self._params.addParam("format", "csv", "output format, csv or json", lambda v: v in FORMATS)
        self._params.addParam("seed", 0, "seed of the randomized sweeps", lambda v: v >= 0)
        self._params.addParam("parallel", False, "spread independent rows over a thread pool")
        self._params.addParam("label_digits", 12, "significant digits of foliation colors", lambda v: 1 <= v <= 17)
        for name, (value, description) in TOLERANCES.items():
            self._params.addParam("tol_" + name, value, description, _positive_finite)

    @property
    def params(self):
        return self._params

    @property
    def n_max(self):
        return self._params.getParamValue("n_max")

    @property
    def format(self):
        return self._params.getParamValue("format")

    @property
    def seed(self):
        return self._params.getParamValue("seed")

    @property
    def parallel(self):
        return self._params.getParamValue("parallel")

    @property
    def label_digits(self):
        return self._params.getParamValue("label_digits")

    def tol(self, name):
        return self._params.getParamValue("tol_" + normalize_key(name))

    def _key(self, key, where=""):
        normalized = normalize_key(key)
        if not self._params.hasParam(normalized):
            raise ValidationError(key.strip(), "unknown setting{}".format(where))
        return normalized

    def set(self, key, text, origin=ParamTypes.Flag):
        """
        @brief Set one setting from its textual value
        """
        self._params.specifyFromStr(self._key(key), str(text), origin)

    def specify(self, key, value, origin=ParamTypes.Flag):
        self._params.specify(self._key(key), value, origin)

    def setTolerance(self, assignment, origin=ParamTypes.Flag):
        """
        @brief Apply a NAME=VALUE tolerance override
        """
        name, sep, value = assignment.partition("=")
        if not sep or not name.strip():
            raise ValidationError("tol", "expected NAME=VALUE, got {!r}".format(assignment))
        key = "tol_" + normalize_key(name)
        if not self._params.hasParam(key):
            raise ValidationError("tol", "unknown tolerance {!r}, known: {}".format(
                name.strip(), ", ".join(TOLERANCES)))
        self._params.specifyFromStr(key, value, origin)

    def parseText(self, text):
        """
        @brief Read key=value lines; '#' starts a comment, blank lines are skipped
        """
        for number, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep or not key.strip():
                raise ValidationError("config", "line {}: expected key=value, got {!r}".format(number, line))
            self._params.specifyFromStr(self._key(key, " on line {}".format(number)), value, ParamTypes.File)

    def loadFile(self, path):
        with io.open(path, "r", encoding="utf-8") as f:
            self.parseText(f.read())
        log.debug("[RunConfig]", "loaded {}: {}".format(path, self.printState()))

    def describe(self):
        """
        @brief One line per setting with its default, for --help
        """
        lines = []
        for key in sorted(self._params.keys()):
            p = self._params.getParam(key)
            lines.append("  {} = {}  ({})".format(inflection.dasherize(key), p.default, p.description))
        return "\n".join(lines)

    def printState(self):
        return self._params.printState()
