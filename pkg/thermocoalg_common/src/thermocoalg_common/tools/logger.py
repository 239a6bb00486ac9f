#!/usr/bin/python

# Logging tool
# Tagged, leveled and colored messages for library code and the command line.
# Data goes to stdout; everything printed here goes to a diagnostic stream.

import re
import sys


class logMode:
    ALWAYS  = -1
    ERROR   = 0
    WARN    = 1
    OK      = 2
    INFO    = 3
    DEBUG   = 4
    TRACE   = 5

    NAMES = {'always': -1, 'error': 0, 'warn': 1, 'ok': 2, 'info': 3, 'debug': 4, 'trace': 5}


class logColor:
    BOLD        = '\x1b[1m'
    BLUE        = '\x1b[36m'
    YELLOW      = '\x1b[33m'
    GREEN       = '\x1b[32m'
    RED         = '\x1b[31m'
    ENDC        = '\x1b[0m'


_ANSI = re.compile("\x1b\\[[0-9]+m")

_STYLE = {
    logMode.DEBUG: logColor.BLUE,
    logMode.INFO: logColor.BLUE,
    logMode.OK: logColor.GREEN + logColor.BOLD,
    logMode.WARN: logColor.YELLOW + logColor.BOLD,
    logMode.ERROR: logColor.RED + logColor.BOLD,
}

_SUFFIX = {logMode.OK: "ok", logMode.WARN: "warn", logMode.ERROR: "error"}


class Log(object):
    """
    @brief Message sink keeping a history of (mode, tag, msg) records

    Records above the current level are dropped. Records are echoed to the
    stream unless output is disabled; the history is kept either way so that
    checks can ask hasError() after a quiet run.
    """

    def __init__(self, stream=None):
        self._history = []
        self._level = logMode.WARN
        self._buffered = False
        self._color = None
        self._stream = stream

    # configuration
    def setLevel(self, mode):
        if isinstance(mode, str):
            mode = logMode.NAMES[mode.lower()]
        self._level = mode

    def getLevel(self):
        return self._level

    def setStream(self, stream):
        self._stream = stream

    def getStream(self):
        return self._stream if self._stream is not None else sys.stderr

    def useColor(self, use_color):
        self._color = use_color

    def enableOutput(self):
        self._buffered = False

    def disableOutput(self):
        self._buffered = True

    def clear(self):
        self._history = []

    # records
    def log(self, mode, tag, msg=None):
        if mode > self._level:
            return
        record = (mode, tag, msg)
        self._history.append(record)
        if not self._buffered:
            stream = self.getStream()
            stream.write(self.format(record) + "\n")
            stream.flush()

    def test(self, cond, tag, msg_failed=None, msg_success=None, mode_failed=logMode.ERROR):
        """
        @brief Log the outcome of a condition and return it
        """
        if not cond:
            self.log(mode_failed, tag, msg_failed)
        else:
            self.log(logMode.OK, tag, msg_success)
        return cond

    def format(self, record):
        mode, tag, msg = record
        text = tag.ljust(24)
        if mode in _SUFFIX:
            text += _SUFFIX[mode]
            if msg is not None:
                text += ": "
        if msg is not None:
            text += str(msg)
        if mode in _STYLE and self._colored():
            text = _STYLE[mode] + text + logColor.ENDC
        return text

    def _colored(self):
        if self._color is not None:
            return self._color
        isatty = getattr(self.getStream(), "isatty", None)
        return bool(isatty and isatty())

    # queries
    def countMsg(self, mode):
        return sum(1 for r in self._history if r[0] != logMode.ALWAYS and r[0] <= mode)

    def hasMode(self, mode):
        return self.countMsg(mode) > 0

    def hasError(self):
        return self.hasMode(logMode.ERROR)

    def hasWarn(self):
        return self.hasMode(logMode.WARN)

    def lastModeMsg(self, mode):
        for r in reversed(self._history):
            if r[0] == mode:
                return r[2] if r[2] is not None else r[1]
        return None

    def lastError(self):
        return self.lastModeMsg(logMode.ERROR)

    def toString(self):
        return _ANSI.sub("", "\n".join(self.format(r) for r in self._history))


# static functions
_inst = Log()

setLevel      = _inst.setLevel
getLevel      = _inst.getLevel
setStream     = _inst.setStream
useColor      = _inst.useColor
enableOutput  = _inst.enableOutput
disableOutput = _inst.disableOutput
clear         = _inst.clear

countMsg    = _inst.countMsg
hasMode     = _inst.hasMode
hasError    = _inst.hasError
hasWarn     = _inst.hasWarn
lastError   = _inst.lastError
toString    = _inst.toString
test        = _inst.test


def always(tag, msg=None): _inst.log(logMode.ALWAYS, tag, msg)
def error(tag, msg=None):  _inst.log(logMode.ERROR, tag, msg)
def warn(tag, msg=None):   _inst.log(logMode.WARN, tag, msg)
def ok(tag, msg=None):     _inst.log(logMode.OK, tag, msg)
def info(tag, msg=None):   _inst.log(logMode.INFO, tag, msg)
def debug(tag, msg=None):  _inst.log(logMode.DEBUG, tag, msg)
def trace(tag, msg=None):  _inst.log(logMode.TRACE, tag, msg)


ALWAYS  = logMode.ALWAYS
ERROR   = logMode.ERROR
WARN    = logMode.WARN
OK      = logMode.OK
INFO    = logMode.INFO
DEBUG   = logMode.DEBUG
TRACE   = logMode.TRACE
