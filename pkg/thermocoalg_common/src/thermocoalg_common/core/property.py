import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.errors import ValidationError

_TRUE = ("1", "true", "yes", "on")
_FALSE = ("0", "false", "no", "off")


class Property(object):
    """
    @brief Tuple key-value with datatype check

    If input doesn't correspond to the defined data type, it is refused.
    Data type is set during initialization, either from a value or from a type.

    >>> p = Property("n_max", 60)
    >>> p.setValueFromStr("40")
    >>> p.value
    40
    """
    __slots__ = ['_key', '_value', '_data_type']

    def __init__(self, key, value):
        self._key = key
        if isinstance(value, type):
            self._value = None
            self._data_type = value
        else:
            self._value = value
            self._data_type = type(value)

    @property
    def key(self):
        return self._key

    @property
    def value(self):
        return self._value

    @value.setter
    def value(self, value):
        self.setValue(value)

    def dataType(self):
        return self._data_type

    def dataTypeIs(self, vtype):
        return self._data_type == vtype

    def isSpecified(self):
        return self._value is not None

    def unset(self):
        self._value = None

    def setValue(self, value):
        """
        @brief Set the value. Ints are accepted where floats are expected.
        """
        if self._data_type is float and isinstance(value, int) and not isinstance(value, bool):
            value = float(value)
        if self._data_type is int and isinstance(value, bool):
            raise ValidationError(self._key, "expected int, got bool")
        if not isinstance(value, self._data_type):
            log.error("[setValue]", "{}: Input {} != {}".format(self._key, type(value).__name__, self._data_type.__name__))
            raise ValidationError(self._key, "expected {}, got {!r}".format(self._data_type.__name__, value))
        self._value = value

    def setValueFromStr(self, text):
        """
        @brief Convert a string into the property datatype and set it
        """
        text = text.strip()
        try:
            if self._data_type is bool:
                if text.lower() in _TRUE:
                    value = True
                elif text.lower() in _FALSE:
                    value = False
                else:
                    raise ValueError(text)
            else:
                value = self._data_type(text)
        except ValueError:
            raise ValidationError(self._key, "cannot read {!r} as {}".format(text, self._data_type.__name__))
        self.setValue(value)

    def printState(self):
        return "{}:{}".format(self._key, self._value)
