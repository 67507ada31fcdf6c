"""Size caps guarding the exponential enumerations.

Each cap can be overridden through an environment variable, read at call
time so tests and the CLI can adjust them without reloading modules.
"""

import os

from .errors import InputError

DEFAULTS = {
    "degree": 12,  # compositions_of and per-degree basis changes
    "solve_degree": 10,  # H -> Psi and R -> Psi conversions
    "edges": 24,  # 2^|E| subset sums
    "colorings": 10**7,  # m^n proper-coloring oracle
}

ENV_VARS = {
    "degree": "CHROMNSYM_DEGREE_CAP",
    "solve_degree": "CHROMNSYM_SOLVE_DEGREE_CAP",
    "edges": "CHROMNSYM_EDGE_CAP",
    "colorings": "CHROMNSYM_COLORING_BUDGET",
}

_overrides = {}


def cap(name):
    """Current value of the cap called `name`.

    Precedence: explicit `set_cap` override, then environment, then default.
    """
    if name in _overrides:
        return _overrides[name]
    raw = os.environ.get(ENV_VARS[name])
    if raw is not None:
        try:
            value = int(raw)
        except ValueError:
            raise InputError(f"{ENV_VARS[name]} must be an integer, got {raw!r}")
        if value <= 0:
            raise InputError(f"{ENV_VARS[name]} must be positive, got {value}")
        return value
    return DEFAULTS[name]


def set_cap(name, value):
    """Override a cap for the rest of the process; `None` clears the override."""
    if name not in DEFAULTS:
        raise KeyError(name)
    if value is None:
        _overrides.pop(name, None)
    else:
        if value <= 0:
            raise ValueError("caps must be positive")
        _overrides[name] = int(value)
