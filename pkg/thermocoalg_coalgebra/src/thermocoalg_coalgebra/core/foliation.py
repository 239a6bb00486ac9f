"""
The discretized vacuum foliation seen as a black-box machine.

States are the grid indices i of |0(theta_i)>, colors are the order
parameter N(theta_i) = sinh^2 theta_i rounded to a fixed number of
significant digits, and mu steps i -> i + 1. The last vacuum is stationary
and steps to itself.
"""
import collections
import math

import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.errors import ValidationError
from thermocoalg_coalgebra.core.lts import LTS
from thermocoalg_coalgebra.core.machine import ColoredMachine
from thermocoalg_tfd.core import free_energy as fe
from thermocoalg_tfd.core import vacuum as vac

LABEL_DIGITS = 12

FoliationRow = collections.namedtuple("FoliationRow", "index theta order_parameter entropy free_energy overlap_next")


def order_label(theta, digits=LABEL_DIGITS):
    """
    @brief sinh^2 theta rounded to digits significant digits
    """
    return float("{:.{}g}".format(math.sinh(theta) ** 2, digits))


def check_grid(theta_grid):
    grid = [float(t) for t in theta_grid]
    if not grid:
        raise ValidationError("theta_grid", "needs at least one point")
    for t in grid:
        if not (math.isfinite(t) and t >= 0.0):
            raise ValidationError("theta_grid", "angles must be finite and >= 0, got {}".format(t))
    for i in range(1, len(grid)):
        if not grid[i] > grid[i - 1]:
            raise ValidationError("theta_grid", "must be strictly increasing, point {} is {} after {}".format(
                i, grid[i], grid[i - 1]))
    return grid


def foliation_as_machine(theta_grid, energy=1.0, n_max=None, digits=LABEL_DIGITS):
    """
    @brief (LTS, ColoredMachine) for the vacua along an increasing theta grid

    n_max, when given, is checked against the largest angle so that every
    state of the machine corresponds to a representable vacuum.
    """
    grid = check_grid(theta_grid)
    if energy <= 0:
        raise ValidationError("energy", "must be > 0, got {}".format(energy))
    if n_max is not None:
        vac.build_vacuum([vac.ModeSpec(energy, grid[-1])], n_max)
    last = len(grid) - 1
    mu = collections.OrderedDict()
    for i, theta in enumerate(grid):
        mu[i] = (order_label(theta, digits), min(i + 1, last))
    machine = ColoredMachine(mu)
    lts = LTS([(i, color, nxt) for i, (color, nxt) in mu.items()], states=mu.keys())
    log.debug("[foliation_as_machine]", "{} vacua, labels {}".format(len(grid), sorted(machine.colors)))
    return lts, machine


def foliation_table(theta_grid, energy, beta, n_max):
    """
    @brief Per vacuum: order parameter, entropy, free energy at beta, overlap with the next vacuum

    The last row has no successor and reports overlap None.
    """
    grid = check_grid(theta_grid)
    rows = []
    for i, theta in enumerate(grid):
        v = vac.single_mode_vacuum(theta, n_max, energy)
        overlap = vac.vacuum_overlap(theta, grid[i + 1], n_max) if i + 1 < len(grid) else None
        rows.append(FoliationRow(i, theta, vac.condensate_number(v), vac.entropy_expectation(v),
                                 fe.free_energy(v, beta), overlap))
    return rows
