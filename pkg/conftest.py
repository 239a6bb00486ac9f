import os
import sys

ROOT = os.path.dirname(os.path.abspath(__file__))

for package in ("thermocoalg_common", "thermocoalg_tfd", "thermocoalg_coalgebra", "thermocoalg_cli"):
    src = os.path.join(ROOT, package, "src")
    if src not in sys.path:
        sys.path.insert(0, src)

collect_ignore = ["examples"]
