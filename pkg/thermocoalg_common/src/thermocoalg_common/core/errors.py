"""
Exceptions raised by thermocoalg packages.

Everything derives from ThermoError so callers can catch the family at once.
The command line maps ValidationError, ParseError and UnknownStateError to
exit code 2 and the numeric failures to exit code 1.
"""


class ThermoError(Exception):
    pass


class DimensionError(ThermoError, ValueError):
    """Operator lives on the wrong space, or shapes do not match."""
    pass


class NormalizationError(ThermoError, ValueError):
    pass


class ValidationError(ThermoError, ValueError):
    """
    @brief A user supplied value is out of range

    @name is the parameter (or command line flag) at fault.
    """

    def __init__(self, name, message):
        super(ValidationError, self).__init__("{}: {}".format(name, message))
        self.name = name


class TruncationError(ThermoError):
    """
    @brief The truncated Fock space drops too much weight
    """

    def __init__(self, message, tail, suggested_n_max=None):
        if suggested_n_max is not None:
            message = "{} (tail {:.3e}; try n_max >= {})".format(message, tail, suggested_n_max)
        else:
            message = "{} (tail {:.3e})".format(message, tail)
        super(TruncationError, self).__init__(message)
        self.tail = tail
        self.suggested_n_max = suggested_n_max


class ConvergenceError(ThermoError):
    def __init__(self, message, residual, iterations):
        super(ConvergenceError, self).__init__(
            "{} after {} iterations, residual {:.3e}".format(message, iterations, residual))
        self.residual = residual
        self.iterations = iterations


class CheckFailed(ThermoError):
    """An identity check exceeded its tolerance. @report holds the details."""

    def __init__(self, report):
        super(CheckFailed, self).__init__("{} failed: {}".format(
            report.name, ", ".join(r.name for r in report.failures())))
        self.report = report


class ParseError(ThermoError):
    def __init__(self, line, message):
        super(ParseError, self).__init__("line {}: {}".format(line, message))
        self.line = line


class UnknownStateError(ThermoError, KeyError):
    def __init__(self, state):
        super(UnknownStateError, self).__init__("unknown state {!r}".format(state))
        self.state = state

    def __str__(self):
        return self.args[0]
