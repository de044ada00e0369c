"""Global working-precision control.

Two modes are supported:

* ``"standard"`` - native binary64 floats (about 16 significant digits).
* ``"extended"`` - mpmath arbitrary-precision reals at 40 significant
  digits, enough headroom for high-degree moment products.

The mode is a process-wide setting.  All numeric kernels in this package
draw their scalar constructors and elementary functions from here, so a
single :func:`set_precision` call (or the ``precision`` context manager)
switches every computation that starts afterwards.  Values created under
one mode remain valid under the other: mixed float/mpf arithmetic follows
mpmath's promotion rules.
"""

from __future__ import annotations

import math
from contextlib import contextmanager

import mpmath

STANDARD = "standard"
EXTENDED = "extended"

EXTENDED_DPS = 40

_mode = STANDARD

# mpmath's global context is configured once; it only affects mpf
# arithmetic, which standard mode never performs.
mpmath.mp.dps = EXTENDED_DPS


def set_precision(mode: str) -> None:
    """Select the global working precision ("standard" or "extended")."""
    global _mode
    if mode not in (STANDARD, EXTENDED):
        raise ValueError(f"unknown precision mode {mode!r}")
    _mode = mode
    if mode == EXTENDED:
        mpmath.mp.dps = EXTENDED_DPS


def get_precision() -> str:
    """Return the active precision mode."""
    return _mode


@contextmanager
def working_precision(mode: str):
    """Context manager that temporarily switches the precision mode."""
    previous = _mode
    set_precision(mode)
    try:
        yield
    finally:
        set_precision(previous)


def extended_active() -> bool:
    return _mode == EXTENDED


def real(x):
    """Convert ``x`` to the scalar type of the active mode."""
    if _mode == EXTENDED:
        return mpmath.mpf(x)
    return float(x)


def exp(x):
    if _mode == EXTENDED or isinstance(x, mpmath.mpf):
        return mpmath.exp(x)
    return math.exp(x)


def sqrt(x):
    if _mode == EXTENDED or isinstance(x, mpmath.mpf):
        return mpmath.sqrt(x)
    return math.sqrt(x)


def cos(x):
    if _mode == EXTENDED or isinstance(x, mpmath.mpf):
        return mpmath.cos(x)
    return math.cos(x)


def sin(x):
    if _mode == EXTENDED or isinstance(x, mpmath.mpf):
        return mpmath.sin(x)
    return math.sin(x)


def pi_value():
    if _mode == EXTENDED:
        return mpmath.pi + 0  # realize as mpf
    return math.pi


def eps():
    """Unit roundoff of the active mode."""
    if _mode == EXTENDED:
        return float(mpmath.mpf(10) ** (5 - EXTENDED_DPS))
    return 2.0 ** -52


def nearest_integer(x) -> int:
    """Round half away from zero; used to centre truncated sums."""
    return int(math.floor(float(x) + 0.5)) if x >= 0 else -int(math.floor(-float(x) + 0.5))


def accumulate(terms):
    """Sum an iterable of same-mode scalars.

    In standard mode :func:`math.fsum` gives an exactly rounded result,
    which keeps certified error budgets honest and output bit-stable.
    """
    terms = list(terms)
    if not terms:
        return real(0)
    if any(isinstance(t, mpmath.mpf) for t in terms):
        total = mpmath.mpf(0)
        for t in terms:
            total += t
        return total
    return math.fsum(terms)


def as_float(x) -> float:
    """Best-effort float view of a scalar from either mode."""
    return float(x)
