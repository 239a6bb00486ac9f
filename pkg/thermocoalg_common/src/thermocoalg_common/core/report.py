import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.errors import CheckFailed


class CheckResult(object):
    """
    @brief One named identity check: the measured residual against its tolerance

    A tolerance of 0 means the identity must hold exactly. A residual of None
    marks a check that does not apply (it counts as passed).
    """
    __slots__ = ['name', 'residual', 'tolerance', 'detail']

    def __init__(self, name, residual, tolerance, detail=None):
        self.name = name
        self.residual = residual
        self.tolerance = tolerance
        self.detail = detail

    @property
    def passed(self):
        if self.residual is None:
            return True
        if self.tolerance == 0:
            return self.residual == 0
        return self.residual <= self.tolerance

    def printState(self):
        if self.residual is None:
            return "{}: n/a{}".format(self.name, " ({})".format(self.detail) if self.detail else "")
        return "{}: residual={:.3e} tol={:.1e} {}".format(
            self.name, self.residual, self.tolerance, "ok" if self.passed else "FAILED")


class CheckReport(object):
    """
    @brief Ordered collection of CheckResult, truthy when every check passed

    >>> r = CheckReport("demo")
    >>> r.add("exact", 0.0, 0)
    True
    >>> bool(r)
    True
    """

    def __init__(self, name):
        self.name = name
        self._results = []

    def add(self, name, residual, tolerance, detail=None):
        result = CheckResult(name, None if residual is None else float(residual), tolerance, detail)
        self._results.append(result)
        return log.test(result.passed, "[{}]".format(self.name), result.printState(), result.printState(),
                        mode_failed=log.WARN)

    def skip(self, name, detail):
        self._results.append(CheckResult(name, None, 0, detail))

    def extend(self, other, prefix=""):
        for r in other.results:
            self._results.append(CheckResult(prefix + r.name, r.residual, r.tolerance, r.detail))

    @property
    def results(self):
        return list(self._results)

    def __getitem__(self, name):
        for r in self._results:
            if r.name == name:
                return r
        raise KeyError(name)

    def __contains__(self, name):
        return any(r.name == name for r in self._results)

    def failures(self):
        return [r for r in self._results if not r.passed]

    @property
    def passed(self):
        return not self.failures()

    def __bool__(self):
        return self.passed

    __nonzero__ = __bool__

    def raiseOnFailure(self):
        if not self.passed:
            raise CheckFailed(self)
        return self

    def printState(self):
        return "\n".join([self.name] + ["  " + r.printState() for r in self._results])
