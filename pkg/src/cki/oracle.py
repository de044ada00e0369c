"""Brute-force ground truth for coefficient routes.

Two finite-truncation solvers of the interpolation system
``sum_j c_j psi(j - ell) = targets(ell)`` are provided:

* :func:`solve_toeplitz` - the minimum-norm least-squares section exactly
  as one would write it down: constraint rows on ``[-L, L]``, coefficient
  columns on the padded window.  Its solution is exact on the constraints
  but, for targets that do not decay, the norm objective suppresses the
  large coefficients near the window edge and the resulting boundary
  layer propagates into the interior at the reciprocal-symbol decay rate.
  The residual and that caveat are part of the record.

* :func:`finite_section_coefficients` - the adjudication-grade oracle.
  It solves the square symmetric section ``T y = delta_j`` (benign O(1)
  right-hand sides), then forms ``sum_ell y_ell * ell**k``.  Boundary
  effects now enter only through the exponentially small edge entries of
  y, so a half-width around 110 in extended precision pins coefficient
  values to ~1e-10 for degrees up to 6.

:func:`adjudicate` scores any number of candidate coefficient sequences
against oracle values and against direct interpolation residuals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, NamedTuple, Sequence

import numpy as np

from . import precision as prec
from .errors import SingularSectionError
from .kernel import Kernel, truncation_radius
from .poly import Polynomial

#: padding below this certificate radius would let dropped shifts
#: contaminate the constraint rows at more than 1e-14.
PAD_TOLERANCE = 1e-14


@dataclass(frozen=True)
class ToeplitzProblem:
    """A solved minimum-norm finite section."""

    kernel: Kernel
    L: int
    pad: int
    targets: tuple             # indexed by ell = -L..L
    coefficient_start: int     # = -L - pad
    coefficients: tuple        # indexed by j = -L-pad..L+pad
    residual_norm: float
    rank: int
    condition: float

    def coefficient(self, j: int):
        idx = j - self.coefficient_start
        if not 0 <= idx < len(self.coefficients):
            raise ValueError(f"j={j} outside the coefficient window")
        return self.coefficients[idx]


def solve_toeplitz(kernel: Kernel, targets: Sequence, L: int, pad: int) -> ToeplitzProblem:
    """Minimum-norm least-squares solve of the truncated system.

    ``targets`` holds the 2L+1 values on ell = -L..L.  The padding must
    cover the kernel's certified truncation radius so dropped columns
    cannot reach the constraints.
    """
    if L < 1:
        raise ValueError("L must be positive")
    if pad < 1:
        raise ValueError("pad must be positive")
    min_pad = truncation_radius(kernel, 0, PAD_TOLERANCE)
    if pad < min_pad:
        raise ValueError(
            f"pad={pad} below the certified truncation radius {min_pad} "
            f"for tolerance {PAD_TOLERANCE}"
        )
    targets = [float(t) for t in targets]
    if len(targets) != 2 * L + 1:
        raise ValueError(f"expected {2 * L + 1} targets, got {len(targets)}")
    ells = np.arange(-L, L + 1)
    js = np.arange(-L - pad, L + pad + 1)
    matrix = np.empty((ells.size, js.size))
    for row, ell in enumerate(ells):
        for col, j in enumerate(js):
            matrix[row, col] = float(kernel.evaluate(float(j - ell)))
    b = np.asarray(targets)
    solution, _, rank, singular_values = np.linalg.lstsq(matrix, b, rcond=None)
    condition = float(singular_values[0] / singular_values[-1]) if singular_values[-1] > 0 else float("inf")
    if rank < ells.size:
        raise SingularSectionError(
            f"finite section is numerically singular (rank {rank} of {ells.size})",
            condition=condition,
        )
    residual = float(np.linalg.norm(matrix @ solution - b))
    return ToeplitzProblem(
        kernel=kernel, L=L, pad=pad, targets=tuple(targets),
        coefficient_start=int(js[0]), coefficients=tuple(float(c) for c in solution),
        residual_norm=residual, rank=int(rank), condition=condition,
    )


def _band_width(kernel: Kernel) -> int:
    # entries beyond the band are below the working noise floor
    target = prec.eps() * 1e-6
    return truncation_radius(kernel, 0, max(target, 1e-60))


def _banded_cholesky(first_column, n: int, band: int):
    """Cholesky factor of the SPD banded Toeplitz section, stored by band."""
    factor = [[prec.real(0)] * (band + 1) for _ in range(n)]
    for i in range(n):
        for j in range(max(0, i - band), i + 1):
            acc = first_column[i - j]
            for t in range(max(0, i - band, j - band), j):
                acc -= factor[i][i - t] * factor[j][j - t]
            if i == j:
                factor[i][0] = prec.sqrt(acc)
            else:
                factor[i][i - j] = acc / factor[j][0]
    return factor


def _banded_solve(factor, band: int, rhs):
    n = len(rhs)
    forward = [prec.real(0)] * n
    for i in range(n):
        acc = rhs[i]
        for t in range(max(0, i - band), i):
            acc -= factor[i][i - t] * forward[t]
        forward[i] = acc / factor[i][0]
    back = [prec.real(0)] * n
    for i in range(n - 1, -1, -1):
        acc = forward[i]
        for t in range(i + 1, min(n, i + band + 1)):
            acc -= factor[t][t - i] * back[t]
        back[i] = acc / factor[i][0]
    return back


def finite_section_inverse_rows(kernel: Kernel, half_width: int,
                                positions: Sequence[int]) -> Dict[int, list]:
    """Rows ``y^(j)`` of the inverse of the square section on [-W, W].

    ``y^(j)`` solves ``sum_l psi(l - m) y_l = delta_{m j}``; its entries
    approximate the reciprocal-symbol coefficients ``a_{j-l}`` away from
    the window edges.  The section matrix is symmetric positive definite
    (the symbol is positive), and is numerically banded, so a banded
    Cholesky factorization gives dense-accurate results at O(W) cost.
    """
    n = 2 * half_width + 1
    if any(abs(j) > half_width for j in positions):
        raise ValueError("positions must lie inside the window")
    band = min(_band_width(kernel), n - 1)
    first_column = [kernel.evaluate(prec.real(d)) for d in range(band + 1)]
    factor = _banded_cholesky(first_column, n, band)
    rows = {}
    for j in positions:
        rhs = [prec.real(0)] * n
        rhs[j + half_width] = prec.real(1)
        rows[j] = _banded_solve(factor, band, rhs)
    return rows


def finite_section_coefficients(kernel: Kernel, half_width: int, max_degree: int,
                                positions: Sequence[int]) -> Dict[int, Dict[int, object]]:
    """Oracle values of the coefficient polynomials at the given positions.

    Returns ``{degree: {j: value}}`` with ``value = sum_l y^(j)_l l**degree``
    over the section window.  Run in extended precision for degrees above
    2: the far window entries are exponentially small and double roundoff
    on them is amplified by ``l**degree``.
    """
    rows = finite_section_inverse_rows(kernel, half_width, positions)
    out: Dict[int, Dict[int, object]] = {k: {} for k in range(max_degree + 1)}
    for j, row in rows.items():
        for k in range(max_degree + 1):
            acc = prec.real(0)
            for idx, y in enumerate(row):
                ell = idx - half_width
                acc += y * prec.real(ell) ** k
            out[k][j] = acc
    return out


class RouteReport(NamedTuple):
    route: str
    max_coefficient_deviation: float
    max_interpolation_residual: float


@dataclass(frozen=True)
class AdjudicationReport:
    """Routes ranked by interpolation residual (best first)."""

    positions: tuple
    nodes: tuple
    rows: tuple                # RouteReport, sorted

    def by_route(self) -> Dict[str, RouteReport]:
        return {r.route: r for r in self.rows}


def interpolation_residual(kernel: Kernel, sequence: Mapping[int, object],
                           target, nodes: Sequence[int]) -> float:
    """Max residual of ``sum_j c_j psi(ell-j) - target(ell)`` over nodes.

    The sequence must cover every node's certified neighbourhood.
    """
    radius = truncation_radius(kernel, 0, PAD_TOLERANCE)
    worst = 0.0
    for ell in nodes:
        terms = []
        for j in range(ell - radius, ell + radius + 1):
            if j not in sequence:
                raise ValueError(
                    f"sequence window misses j={j} needed for node {ell}"
                )
            terms.append(sequence[j] * kernel.evaluate(prec.real(ell - j)))
        value = prec.accumulate(terms)
        worst = max(worst, abs(float(value - target(ell))))
    return worst


def sequence_from_polynomial(polynomial: Polynomial, window: Sequence[int]) -> Dict[int, object]:
    """Tabulate a coefficient polynomial on an integer window."""
    return {j: polynomial(prec.real(j)) for j in window}


def adjudicate(routes: Mapping[str, Mapping[int, object]],
               oracle_values: Mapping[int, object],
               kernel: Kernel, target, nodes: Sequence[int]) -> AdjudicationReport:
    """Score candidate coefficient sequences against the oracle.

    ``oracle_values`` maps positions to ground-truth coefficients (from
    :func:`finite_section_coefficients` or a ToeplitzProblem window);
    ``target`` is the callable the routes claim to interpolate.  Each
    route is scored by its worst coefficient deviation on the oracle
    positions and its worst direct interpolation residual on the nodes;
    rows come back sorted by residual, then deviation.
    """
    positions = sorted(oracle_values)
    rows = []
    for name, sequence in routes.items():
        deviation = max(
            abs(float(sequence[j] - oracle_values[j])) for j in positions
        )
        residual = interpolation_residual(kernel, sequence, target, nodes)
        rows.append(RouteReport(name, deviation, residual))
    rows.sort(key=lambda r: (r.max_interpolation_residual,
                             r.max_coefficient_deviation, r.route))
    return AdjudicationReport(
        positions=tuple(positions), nodes=tuple(nodes), rows=tuple(rows),
    )
