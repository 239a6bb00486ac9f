"""
Tables written by the subcommands.

CSV uses '.' as decimal point and 17 significant digits for floats, so the
same run always prints the same bytes. JSON is {"columns": [...], "rows": [...]}
and reads back to an equal table.
"""
import csv
import io
import json
import numbers

from thermocoalg_common.core.errors import ParseError, ValidationError


class Table(object):
    """
    @brief Named columns and rows of plain values (numbers, strings, bools, None)
    """
    __slots__ = ['_name', '_columns', '_rows']

    def __init__(self, columns, rows=None, name=""):
        self._name = name
        self._columns = tuple(columns)
        if len(set(self._columns)) != len(self._columns):
            raise ValidationError("columns", "duplicate column names in {}".format(self._columns))
        self._rows = []
        for row in rows or []:
            self.addRow(*row)

    @property
    def name(self):
        return self._name

    @property
    def columns(self):
        return self._columns

    @property
    def rows(self):
        return list(self._rows)

    def addRow(self, *values):
        if len(values) != len(self._columns):
            raise ValidationError("row", "expected {} values, got {}".format(len(self._columns), len(values)))
        self._rows.append(tuple(_plain(v) for v in values))

    def column(self, name):
        try:
            i = self._columns.index(name)
        except ValueError:
            raise ValidationError("column", "no column {!r} in {}".format(name, self._columns))
        return [row[i] for row in self._rows]

    def __len__(self):
        return len(self._rows)

    def __eq__(self, other):
        return isinstance(other, Table) and self._columns == other._columns and self._rows == other._rows

    def __ne__(self, other):
        return not self.__eq__(other)

    def printState(self):
        return "Table {}: {} x {}".format(self._name, len(self._rows), len(self._columns))


def _plain(value):
    # numpy scalars become python numbers
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        return float(value)
    raise ValidationError("row", "cannot tabulate {!r}".format(value))


def format_value(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.17g" % value
    return str(value)


def to_csv(table):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([format_value(v) for v in row])
    return out.getvalue()


def to_json(table):
    return json.dumps({"columns": list(table.columns), "rows": [list(r) for r in table.rows]}) + "\n"


def from_json(text):
    try:
        data = json.loads(text)
        return Table(data["columns"], data["rows"])
    except (ValueError, KeyError, TypeError) as e:
        raise ParseError(1, "not a table: {}".format(e))


def render(table, fmt):
    if fmt == "csv":
        return to_csv(table)
    if fmt == "json":
        return to_json(table)
    raise ValidationError("format", "expected csv or json, got {!r}".format(fmt))
