"""Kernels, certified truncation radii, and discrete/continuous moments.

The central objects are :class:`Kernel` - an evaluable, rapidly decaying,
positive function with a certified decay rate - and :class:`MomentTable`,
which caches the grid moments

    M_k = sum over integers j of j**k * psi(j)

together with a per-entry truncation radius and tail bound, so that every
stored value is accompanied by a machine-checkable error certificate.

The Gaussian kernel is normalized as ``exp(-x**2/2) / sqrt(2*pi)``, which
makes its continuous moments equal to the odd double factorials:
``integral of y**k psi(y) dy = (k-1)!!`` for even ``k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import mpmath

from . import precision as prec
from .errors import TailNotCertifiableError

#: hard ceiling for truncation-radius searches; generous for any kernel
#: with genuine super-algebraic decay, and prevents runaway scans for
#: user kernels whose certificates are too weak for the requested tol.
RADIUS_CAP = 200


def double_factorial(k: int):
    """(k-1)!! for even k >= 0 as an exact integer; 0 for odd k."""
    if k % 2 == 1:
        return 0
    out = 1
    for t in range(k - 1, 0, -2):
        out *= t
    return out


@dataclass(frozen=True)
class Kernel:
    """An evaluable positive kernel with certified decay.

    Parameters
    ----------
    family : str
        Identifier ("gaussian" or "user").
    evaluate : callable
        ``x -> psi(x)``, positive for all real x, in the active precision.
    symmetric : bool
        True if ``psi(-x) == psi(x)``; odd grid moments are then exact zeros.
    decay_constant : callable
        ``N -> C_N`` with ``psi(x) <= C_N / (1 + |x|**N)`` for all x.
    tail_bound : callable, optional
        ``(degree, radius) -> bound`` on ``sum_{|j| > radius} |j|**degree
        * psi(j)`` over integer j, sharper than the generic certificate.
        Must accept real radii >= max(degree, 2) and remain valid for any
        unit-spaced grid whose points all exceed the radius in modulus.
    fourier : callable, optional
        Known transform ``xi -> psi_hat(xi)`` under the convention
        ``psi_hat(xi) = integral exp(-2*pi*i*xi*x) psi(x) dx``.
    continuous_moments : callable, optional
        ``k -> integral y**k psi(y) dy`` in closed form, when available.
    """

    family: str
    evaluate: Callable
    symmetric: bool
    decay_constant: Callable[[int], float]
    tail_bound: Optional[Callable] = None
    fourier: Optional[Callable] = None
    continuous_moments: Optional[Callable] = None

    def __call__(self, x):
        return self.evaluate(x)

    def grid_tail_bound(self, degree: int, radius):
        """Certified bound on ``sum_{|t| > radius} |t|**degree * psi(t)``.

        The sum ranges over any unit-spaced set of real points with
        modulus exceeding ``radius``; integer grids are the common case.
        Requires ``radius >= max(degree, 2)``.
        """
        if radius < max(degree, 2):
            raise ValueError("radius below certified range")
        if self.tail_bound is not None:
            return self.tail_bound(degree, radius)
        # generic route: for any exponent N >= degree + 2 the certificate
        # gives sum |t|**degree psi(t) <= 2 C_N (r**(d-N) + r**(d-N+1)/(N-d-1));
        # optimize over N since a single fixed exponent only decays like 1/r.
        r = mpmath.mpf(radius)
        best = None
        for exponent in range(degree + 2, degree + 82):
            c = mpmath.mpf(self.decay_constant(exponent))
            s = exponent - degree
            bound = 2 * c * (r ** (-s) + r ** (1 - s) / (s - 1))
            if best is None or bound < best:
                best = bound
        return best if prec.extended_active() else float(best)


def _gaussian_tail_bound(degree: int, radius):
    # sum_{|t|>r} t^d exp(-t^2/2)/sqrt(2 pi) <= 2 r^d exp(-r^2/2)
    #   / ((1 - exp(1/2 - r)) sqrt(2 pi)),  r >= max(d, 2):
    # consecutive unit steps shrink each term by at least exp(1/2 - r).
    # Evaluated in mpmath so certificates survive float underflow.
    r = mpmath.mpf(radius)
    bound = 2 * r ** degree * mpmath.exp(-r * r / 2) / (
        (1 - mpmath.exp(mpmath.mpf("0.5") - r)) * mpmath.sqrt(2 * mpmath.pi)
    )
    return bound if prec.extended_active() else float(bound)


def _gaussian_decay_constant(n: int) -> float:
    # sup of psi(x) * (1 + |x|**n); the monomial factor peaks at x = sqrt(n)
    peak = mpmath.mpf(n) ** (mpmath.mpf(n) / 2) * mpmath.exp(-mpmath.mpf(n) / 2)
    return float((1 + peak) / mpmath.sqrt(2 * mpmath.pi))


def _gaussian_evaluate(x):
    x = prec.real(x)
    return prec.exp(-x * x / 2) / prec.sqrt(2 * prec.pi_value())


def _gaussian_fourier(xi):
    xi = prec.real(xi)
    pi = prec.pi_value()
    return prec.exp(-2 * pi * pi * xi * xi)


def _gaussian_continuous_moment(k: int):
    return prec.real(double_factorial(k))


def gaussian() -> Kernel:
    """The normalized Gaussian kernel ``exp(-x**2/2)/sqrt(2*pi)``."""
    return Kernel(
        family="gaussian",
        evaluate=_gaussian_evaluate,
        symmetric=True,
        decay_constant=_gaussian_decay_constant,
        tail_bound=_gaussian_tail_bound,
        fourier=_gaussian_fourier,
        continuous_moments=_gaussian_continuous_moment,
    )


def from_evaluable(evaluate, decay_constant, symmetric=False, family="user",
                   fourier=None, continuous_moments=None) -> Kernel:
    """Wrap a user-supplied positive evaluable function as a kernel.

    ``decay_constant`` must provide certified constants ``C_N`` with
    ``psi(x) <= C_N / (1 + |x|**N)``; without them no truncation can be
    certified and construction is refused.
    """
    if decay_constant is None:
        raise ValueError("a decay certificate is required")
    return Kernel(
        family=family,
        evaluate=evaluate,
        symmetric=symmetric,
        decay_constant=decay_constant,
        fourier=fourier,
        continuous_moments=continuous_moments,
    )


def truncation_radius(kernel: Kernel, degree: int, tol, cap: int = RADIUS_CAP) -> int:
    """Smallest scanned radius R with ``sum_{|j|>R} |j|**degree psi(j) <= tol``.

    Linear scan from ``max(degree, 2)`` upward; raises
    :class:`TailNotCertifiableError` carrying the best achieved bound if
    the cap is reached first.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    best = None
    for radius in range(max(degree, 2), cap + 1):
        bound = kernel.grid_tail_bound(degree, radius)
        if best is None or bound < best:
            best = bound
        if bound <= tol:
            return radius
    raise TailNotCertifiableError(
        f"tail not certifiable: degree {degree} needs more than the radius cap "
        f"{cap} to reach {tol} (best bound {float(best):.3e})",
        best_bound=best,
        radius=cap,
    )


class MomentResult(tuple):
    """A certified moment value: ``(value, tail_bound)`` named pair."""

    __slots__ = ()

    def __new__(cls, value, tail_bound):
        return tuple.__new__(cls, (value, tail_bound))

    @property
    def value(self):
        return self[0]

    @property
    def tail_bound(self):
        return self[1]


def discrete_moment(kernel: Kernel, k: int, tol) -> MomentResult:
    """Grid moment ``M_k = sum_j j**k psi(j)`` with a certified tail bound.

    Symmetric kernels return exact zeros for odd k.  Summation pairs j
    with -j in ascending ``|j|`` and, in standard precision, accumulates
    with an exactly rounded float sum, so repeated calls are bit-identical.
    """
    if k < 0:
        raise ValueError("moment order must be non-negative")
    if kernel.symmetric and k % 2 == 1:
        return MomentResult(prec.real(0), prec.real(0))
    radius = truncation_radius(kernel, k, tol)
    terms = []
    if k == 0:
        terms.append(kernel.evaluate(prec.real(0)))
    for j in range(1, radius + 1):
        x = prec.real(j)
        if kernel.symmetric:
            terms.append(2 * x ** k * kernel.evaluate(x))
        else:
            terms.append(x ** k * kernel.evaluate(x) + (-x) ** k * kernel.evaluate(-x))
    value = prec.accumulate(terms)
    tail = kernel.grid_tail_bound(k, radius)
    return MomentResult(value, tail)


def continuous_moment(k: int):
    """``integral y**k psi(y) dy`` for the normalized Gaussian.

    Equals ``(k-1)!!`` for even k and 0 for odd k.
    """
    if k < 0:
        raise ValueError("moment order must be non-negative")
    return prec.real(double_factorial(k))


@dataclass(frozen=True)
class MomentTable:
    """Eagerly built table of certified grid moments M_0..M_N."""

    kernel: Kernel
    max_degree: int
    values: tuple
    radii: tuple
    tails: tuple
    tol: float = 1e-12

    @classmethod
    def build(cls, kernel: Kernel, max_degree: int, tol=1e-12) -> "MomentTable":
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        values, radii, tails = [], [], []
        for k in range(max_degree + 1):
            if kernel.symmetric and k % 2 == 1:
                values.append(prec.real(0))
                radii.append(0)
                tails.append(prec.real(0))
            else:
                radius = truncation_radius(kernel, k, tol)
                moment = discrete_moment(kernel, k, tol)
                values.append(moment.value)
                radii.append(radius)
                tails.append(moment.tail_bound)
        return cls(kernel=kernel, max_degree=max_degree, values=tuple(values),
                   radii=tuple(radii), tails=tuple(tails), tol=tol)

    def __getitem__(self, k: int):
        if not 0 <= k <= self.max_degree:
            raise ValueError(
                f"moment table covers degrees 0..{self.max_degree}, got {k}"
            )
        return self.values[k]

    def covers(self, degree: int) -> bool:
        return degree <= self.max_degree

    def require(self, degree: int) -> None:
        if not self.covers(degree):
            raise ValueError(
                f"moment table too short: need degree {degree}, "
                f"have {self.max_degree}"
            )
