import inspect
import math

import numpy as np
import wrapt

from thermocoalg_common.core.errors import DimensionError, ValidationError


def _argument(wrapped, instance, args, kwargs, name):
    """
    Return the value bound to parameter @name for a call of @wrapped.
    """
    signature = inspect.signature(wrapped)
    try:
        bound = signature.bind_partial(*args, **kwargs)
    except TypeError:
        return None
    bound.apply_defaults()
    return bound.arguments.get(name)


def _space_of(value):
    return getattr(value, "space", value)


def requires_doubled(*names):
    """
    Precondition decorator.
    Raise a DimensionError unless every named argument is (or lives on) a
    doubled Fock space.
    """
    @wrapt.decorator
    def wrapper(wrapped, instance, args, kwargs):
        for name in names:
            value = _argument(wrapped, instance, args, kwargs, name)
            if value is not None and not _space_of(value).isDoubled():
                raise DimensionError("{}: argument '{}' must live on a doubled space, got {}".format(
                    wrapped.__name__, name, _space_of(value).printState()))
        return wrapped(*args, **kwargs)
    return wrapper


def requires_single(*names):
    """
    Precondition decorator.
    Raise a DimensionError unless every named argument lives on a single-mode space.
    """
    @wrapt.decorator
    def wrapper(wrapped, instance, args, kwargs):
        for name in names:
            value = _argument(wrapped, instance, args, kwargs, name)
            if value is not None and _space_of(value).isDoubled():
                raise DimensionError("{}: argument '{}' must live on a single-mode space".format(
                    wrapped.__name__, name))
        return wrapped(*args, **kwargs)
    return wrapper


def finite_entries(*names):
    """
    Precondition decorator.
    Raise a ValidationError if a named operator or array holds NaN or inf.
    """
    @wrapt.decorator
    def wrapper(wrapped, instance, args, kwargs):
        for name in names:
            value = _argument(wrapped, instance, args, kwargs, name)
            if value is None:
                continue
            entries = getattr(value, "entries", value)
            if not np.all(np.isfinite(entries)):
                raise ValidationError(name, "entries must be finite")
        return wrapped(*args, **kwargs)
    return wrapper


def positive(*names):
    """
    Precondition decorator.
    Raise a ValidationError if a named scalar argument is not a finite number > 0.
    """
    @wrapt.decorator
    def wrapper(wrapped, instance, args, kwargs):
        for name in names:
            value = _argument(wrapped, instance, args, kwargs, name)
            if value is None:
                continue
            if not (math.isfinite(value) and value > 0):
                raise ValidationError(name, "must be > 0, got {}".format(value))
        return wrapped(*args, **kwargs)
    return wrapper
