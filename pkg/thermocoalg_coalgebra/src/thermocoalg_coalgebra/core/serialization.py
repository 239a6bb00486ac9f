"""
Text format for machines and transition systems.

One record per line, three TAB separated fields:

    state<TAB>color<TAB>next       colored machine
    state<TAB>label<TAB>state      labelled transition system

UTF-8, LF line endings. Blank lines and lines starting with '#' are skipped.
States, colors and labels are read back as strings.
"""
import io

from thermocoalg_common.core.errors import ParseError, ValidationError
from thermocoalg_coalgebra.core.lts import LTS
from thermocoalg_coalgebra.core.machine import ColoredMachine

SEPARATOR = "\t"


def _records(text):
    for number, line in enumerate(text.split("\n"), 1):
        line = line.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split(SEPARATOR)
        if len(fields) != 3:
            raise ParseError(number, "expected 3 tab separated fields, got {}".format(len(fields)))
        fields = [f.strip() for f in fields]
        if not all(fields):
            raise ParseError(number, "empty field")
        yield number, fields


def _check_field(value):
    text = str(value)
    if SEPARATOR in text or "\n" in text or not text.strip():
        raise ValidationError("state", "{!r} cannot be written as a field".format(value))
    return text


def parse_machine(text):
    """
    @brief ColoredMachine from the text format

    Every state must be defined exactly once and every next state must be
    defined somewhere in the file.
    """
    mu = []
    defined = {}
    for number, (state, color, nxt) in _records(text):
        if state in defined:
            raise ParseError(number, "state {!r} already defined on line {}".format(state, defined[state]))
        defined[state] = number
        mu.append((number, state, color, nxt))
    if not mu:
        raise ParseError(0, "no transitions")
    for number, state, _, nxt in mu:
        if nxt not in defined:
            raise ParseError(number, "next state {!r} of {!r} is never defined".format(nxt, state))
    return ColoredMachine([(state, (color, nxt)) for _, state, color, nxt in mu])


def format_machine(m):
    lines = [SEPARATOR.join(_check_field(v) for v in (x, s.color, s.next)) for x, s in m.items()]
    return "\n".join(lines) + "\n"


def parse_lts(text):
    transitions = [tuple(fields) for _, fields in _records(text)]
    if not transitions:
        raise ParseError(0, "no transitions")
    return LTS(transitions)


def format_lts(lts):
    lines = sorted(SEPARATOR.join(_check_field(v) for v in t) for t in lts.transitions)
    return "\n".join(lines) + "\n"


def load_machine(path):
    with io.open(path, "r", encoding="utf-8", newline="\n") as f:
        return parse_machine(f.read())


def dump_machine(m, path):
    with io.open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(format_machine(m))


def load_lts(path):
    with io.open(path, "r", encoding="utf-8", newline="\n") as f:
        return parse_lts(f.read())


def dump_lts(lts, path):
    with io.open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(format_lts(lts))
