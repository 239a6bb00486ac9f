from enum import Enum
from copy import deepcopy
import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.property import Property
from thermocoalg_common.core.errors import ValidationError

"""
Builtin: value comes from the built-in defaults
File: value was read from a configuration file
Flag: value was given on the command line
"""
ParamTypes = Enum('ParamTypes', 'Builtin File Flag')


class Param(Property):
    """
    @brief A param is a property with additionally:
        *a default value and a description
        *the origin of its current value (ParamTypes)
        *an optional validity check

    >>> p = Param("n_max", "truncation level", 60, lambda v: v >= 1)
    >>> p.origin
    <ParamTypes.Builtin: 1>
    >>> p.setValueFromStr("3", ParamTypes.Flag)
    >>> p.value, p.origin
    (3, <ParamTypes.Flag: 3>)
    """
    __slots__ = ['_description', '_default', '_origin', '_check']

    def __init__(self, key, description, value, check=None):
        super(Param, self).__init__(key, value)
        self._description = description
        self._default = deepcopy(self._value)
        self._origin = ParamTypes.Builtin
        self._check = check

    @property
    def description(self):
        return self._description

    @property
    def default(self):
        return self._default

    @property
    def origin(self):
        return self._origin

    def setValue(self, value, origin=ParamTypes.Builtin):
        previous = self._value
        super(Param, self).setValue(value)
        if self._check is not None and not self._check(self._value):
            bad, self._value = self._value, previous
            raise ValidationError(self._key, "value {!r} out of range".format(bad))
        self._origin = origin

    def setValueFromStr(self, text, origin=ParamTypes.Builtin):
        super(Param, self).setValueFromStr(text)
        self._origin = origin

    def setDefault(self):
        self._value = deepcopy(self._default)
        self._origin = ParamTypes.Builtin

    def hasDefaultValue(self):
        return self._value == self._default


class ParamHandler(object):
    """
    >>> ph = ParamHandler()
    >>> ph.addParam("seed", 0, "random seed")
    >>> ph.specify("seed", 7)
    >>> ph.printState()
    'seed:7 '
    >>> ph.setDefault("seed")
    >>> ph.printState()
    'seed:0 '
    """
    __slots__ = ['_params']

    def __init__(self, params=None):
        self._params = {}
        if params:
            self._params = params

    def __getitem__(self, key):
        return self.getParam(key)

    def __contains__(self, key):
        return self.hasParam(key)

    def keys(self):
        return self._params.keys()

    def items(self):
        return self._params.items()

    def getCopy(self):
        return ParamHandler(deepcopy(self._params))

    def hasParam(self, key):
        return key in self._params

    def addParam(self, key, value, description="", check=None):
        self._params[key] = Param(key, description, value, check)

    def getParam(self, key):
        if not self.hasParam(key):
            log.error('[getParam]', 'Param {} is not in the map. Debug: {}'.format(key, self.printState()))
            raise ValidationError(key, "unknown parameter")
        return self._params[key]

    def getParamValue(self, key):
        return self.getParam(key).value

    def specify(self, key, value, origin=ParamTypes.Builtin):
        self.getParam(key).setValue(value, origin)

    def specifyFromStr(self, key, text, origin=ParamTypes.Builtin):
        self.getParam(key).setValueFromStr(text, origin)

    def setDefault(self, key=None):
        """
        @brief Set the param (or every param, if key is None) back to its default
        """
        if key is None:
            for p in self._params.values():
                p.setDefault()
        else:
            self.getParam(key).setDefault()

    def merge(self, other):
        """
        @brief Return a new handler where params specified away from their
        built-in origin in other override the values of self
        """
        to_ret = self.getCopy()
        for key, param in other.items():
            if not to_ret.hasParam(key):
                to_ret._params[key] = deepcopy(param)
            elif param.origin != ParamTypes.Builtin:
                to_ret.specify(key, param.value, param.origin)
        return to_ret

    def getParamMapFiltered(self, origin):
        return {k: p for k, p in self._params.items() if p.origin == origin}

    def printState(self):
        to_ret = ""
        for key in sorted(self._params):
            to_ret += self._params[key].printState() + " "
        return to_ret
