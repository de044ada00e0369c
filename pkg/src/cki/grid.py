"""Uniform-grid function interpolation on [0, 1].

Recipe: fit samples on the nodes ``0, 1/n, ..., 1`` with the unique
polynomial of degree at most n, rescale it to integer nodes, and feed the
scaled polynomial to the cardinal machinery.  The resulting interpolant

    I_n[f](x) = sum_j c_j psi(j - n*x)

reproduces the samples at the nodes; between nodes it is a fixed-scale
kernel approximation, not a convergent scheme, so no accuracy beyond node
reproduction is claimed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import precision as prec
from .cardinal import CardinalCoefficients, CardinalInterpolant, evaluate
from .errors import DegreeCapError
from .poly import Polynomial

#: equispaced monomial conversion is exponentially ill-conditioned; past
#: this degree not even extended precision keeps honest budgets.
DEGREE_CAP = 20


@dataclass(frozen=True)
class GridSamples:
    """Values f_i = f(i/n) on the uniform nodes of [0, 1]."""

    n: int
    values: tuple

    def __init__(self, n: int, values: Sequence):
        if n < 1:
            raise ValueError("n must be at least 1")
        values = tuple(prec.real(v) for v in values)
        if len(values) != n + 1:
            raise ValueError(f"expected {n + 1} values, got {len(values)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", values)


def _newton_integer_nodes(values) -> Polynomial:
    """Degree <= n polynomial through ``(i, values[i])`` for i = 0..n.

    Forward differences on integer nodes, expanded to monomials through
    the falling-factorial basis ``t(t-1)...(t-j+1)/j!``.
    """
    level = list(values)
    leading = [level[0]]
    while len(level) > 1:
        level = [b - a for a, b in zip(level, level[1:])]
        leading.append(level[0])
    result = Polynomial()
    basis = Polynomial([prec.real(1)])
    for j, delta in enumerate(leading):
        result = result + delta * basis
        step = Polynomial([prec.real(-j), prec.real(1)])
        basis = (1 / prec.real(j + 1)) * (basis * step)
    return result


def fit_polynomial(samples: GridSamples, cap: int = DEGREE_CAP) -> Polynomial:
    """The unique polynomial of degree <= n with ``P(i/n) = f_i``.

    Built by Newton forward differences on the integer nodes and mapped
    back to [0, 1]; degrees above the cap are refused because the
    monomial conversion loses too many digits (switch to extended
    precision and raise the cap deliberately if you must).
    """
    if samples.n > cap:
        raise DegreeCapError(
            f"grid degree n={samples.n} exceeds the conditioning cap {cap}; "
            f"equispaced fits this large need extended precision"
        )
    node_poly = _newton_integer_nodes(samples.values)
    return node_poly.dilate(samples.n)


def scale(p: Polynomial, n: int) -> Polynomial:
    """The substitution ``x -> x/n``: coefficient ``c_k -> c_k / n**k``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Polynomial([c / (n ** k) for k, c in enumerate(p.coefficients)])


@dataclass(frozen=True)
class GridInterpolant:
    """A fitted grid interpolant ready for evaluation."""

    n: int
    fitted: Polynomial
    scaled: Polynomial
    interpolant: CardinalInterpolant
    tol: float


class GridEvaluation(NamedTuple):
    value: object
    budget: object
    extrapolated: bool

    def __float__(self):
        return float(self.value)


def build_grid_interpolant(samples: GridSamples, coefficients: CardinalCoefficients,
                           tol: float = 1e-12) -> GridInterpolant:
    """Compose the polynomial fit, the rescaling, and the cardinal step."""
    if coefficients.max_degree < samples.n:
        raise ValueError(
            f"coefficient table degree {coefficients.max_degree} does not "
            f"cover grid degree {samples.n}"
        )
    fitted = fit_polynomial(samples)
    scaled = scale(fitted, samples.n)
    interp = CardinalInterpolant(coefficients, scaled, tol)
    return GridInterpolant(n=samples.n, fitted=fitted, scaled=scaled,
                           interpolant=interp, tol=tol)


def evaluate_grid(interp: GridInterpolant, x) -> GridEvaluation:
    """Evaluate ``I_n[f]`` at x; points outside [0, 1] are flagged.

    The kernel sum runs over shifts within the certified radius of
    ``round(n*x)``, so only a handful of centres outside the interval
    ever contribute.
    """
    x = prec.real(x)
    inner = evaluate(interp.interpolant, interp.n * x)
    extrapolated = bool(x < 0 or x > 1)
    return GridEvaluation(inner.value, inner.budget, extrapolated)
