"""Periodized-symbol machinery: Wiener condition, reciprocal coefficients,
spectral construction of interpolation coefficients, Poisson verification.

The periodization of a kernel is the 1-periodic function

    symbol(t) = sum_z psi(z) exp(2*pi*i*z*t),

whose Fourier coefficients are the kernel's grid samples.  If the symbol
has no zero on [0, 1] (Wiener's condition), its reciprocal has rapidly
decaying Fourier coefficients ``a_z``, and discrete convolution of grid
data with ``(a_z)`` produces interpolation coefficients:
``conv(a, psi-samples) = delta``.

Sampling is uniform with a power-of-two count, so coefficient analysis is
a plain DFT (trapezoidal quadrature of the Fourier integral, exact for the
sampled bandwidth).  In standard precision the transform runs through
numpy's FFT; in extended precision a direct mpmath DFT is used at modest
sample counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import precision as prec
from .errors import UnsupportedRouteError, WienerConditionError
from .kernel import Kernel, truncation_radius

#: default tail target for the symbol's defining series.
SYMBOL_TAIL = 1e-14


@dataclass(frozen=True)
class PeriodizedSymbol:
    """Samples of the periodized kernel on the uniform grid r/m."""

    kernel: Kernel
    m: int
    samples: tuple
    tail_bound: float
    min_modulus: object
    argmin: float
    wiener_holds: bool

    @classmethod
    def from_samples(cls, samples, kernel=None, tail_bound=0.0) -> "PeriodizedSymbol":
        """Wrap raw symbol samples (used for synthetic counterexamples)."""
        samples = tuple(samples)
        m = len(samples)
        moduli = [abs(s) for s in samples]
        idx = min(range(m), key=lambda r: moduli[r])
        min_modulus = moduli[idx]
        holds = bool(min_modulus > 10 * tail_bound)
        return cls(kernel=kernel, m=m, samples=samples, tail_bound=tail_bound,
                   min_modulus=min_modulus, argmin=idx / m, wiener_holds=holds)


def _is_power_of_two(m: int) -> bool:
    return m >= 1 and (m & (m - 1)) == 0


def periodize(kernel: Kernel, m: int = 4096, tail: float = SYMBOL_TAIL) -> PeriodizedSymbol:
    """Sample ``sum_z psi(z) e^{2 pi i z t}`` at t = r/m with a certified tail.

    Requires a power-of-two m >= 64.  Symmetric kernels yield real samples
    via the cosine form; the Wiener flag is set when the smallest sampled
    modulus clears ten times the truncation tail.
    """
    if not _is_power_of_two(m) or m < 64:
        raise ValueError("sample count must be a power of two, at least 64")
    tail = min(tail, 10 * prec.eps()) if prec.extended_active() else tail
    radius = truncation_radius(kernel, 0, tail)
    weights = [kernel.evaluate(prec.real(z)) for z in range(radius + 1)]
    two_pi = 2 * prec.pi_value()
    samples = []
    for r in range(m):
        t = prec.real(r) / m
        if kernel.symmetric:
            acc = weights[0]
            for z in range(1, radius + 1):
                acc += 2 * weights[z] * prec.cos(two_pi * z * t)
            samples.append(acc)
        else:
            re = weights[0]
            im = prec.real(0)
            for z in range(1, radius + 1):
                c, s = prec.cos(two_pi * z * t), prec.sin(two_pi * z * t)
                wpos = weights[z]
                wneg = kernel.evaluate(prec.real(-z))
                re += (wpos + wneg) * c
                im += (wpos - wneg) * s
            samples.append(complex(re, im) if not prec.extended_active()
                           else re + 1j * im)
    bound = float(kernel.grid_tail_bound(0, radius))
    return PeriodizedSymbol.from_samples(samples, kernel=kernel, tail_bound=bound)


class WienerCheck(NamedTuple):
    holds: bool
    min_modulus: object
    argmin: float


def check_wiener(symbol: PeriodizedSymbol) -> WienerCheck:
    """Report whether the sampled symbol stays clear of zero on [0, 1)."""
    return WienerCheck(symbol.wiener_holds, symbol.min_modulus, symbol.argmin)


class DecayReport(NamedTuple):
    """Finite-range evidence for rapid decay of reciprocal coefficients."""

    partial_sums: dict          # k -> list of partial sums of |a_z| |z|^k
    max_tail_ratio: float       # max |a_{z+1}|/|a_z| over 4 <= z < z_max
    power_law_constant: float   # max |a_z| z^6 over 4 <= z <= z_max


@dataclass(frozen=True)
class ReciprocalCoefficients:
    """Fourier coefficients of 1/symbol for |z| <= z_max."""

    symbol: PeriodizedSymbol
    z_max: int
    values: tuple               # index z + z_max
    reconstruction_residual: float
    decay: DecayReport

    def value(self, z: int):
        if abs(z) > self.z_max:
            raise ValueError(f"coefficients computed for |z| <= {self.z_max}")
        return self.values[z + self.z_max]

    def tail_sum_bound(self, distance: int) -> float:
        """Bound on ``sum_{|z| > distance} |a_z|`` from the computed range.

        Sums the computed magnitudes beyond ``distance`` and closes the
        series with a geometric extrapolation at the observed tail ratio.
        """
        ratio = min(self.decay.max_tail_ratio, 0.99)
        total = 0.0
        for z in range(distance + 1, self.z_max + 1):
            total += 2 * abs(float(self.value(z)))
        edge = max(abs(float(self.value(self.z_max))),
                   abs(float(self.value(-self.z_max))))
        total += 2 * edge * ratio / (1 - ratio)
        return total


def reciprocal_coefficients(symbol: PeriodizedSymbol, z_max: int = 32) -> ReciprocalCoefficients:
    """DFT analysis of 1/symbol over one period.

    Raises :class:`WienerConditionError` when the symbol has a sampled
    zero.  The reconstruction residual is the max over samples of
    ``|sum_{|z|<=z_max} a_z e^{2 pi i z t} - 1/symbol(t)|`` and is limited
    by the genuine decay rate of the coefficients, not by the sample
    count; report it, don't assume it.
    """
    if not symbol.wiener_holds:
        raise WienerConditionError(
            "symbol has a zero; reciprocal not in Wiener algebra"
        )
    if z_max < 1 or 2 * z_max >= symbol.m:
        raise ValueError("z_max must satisfy 1 <= z_max < m/2")
    m = symbol.m
    if prec.extended_active():
        if not symbol.kernel or not symbol.kernel.symmetric:
            raise UnsupportedRouteError(
                "extended-precision analysis is implemented for symmetric "
                "kernels only"
            )
        recip = [1 / s for s in symbol.samples]
        two_pi = 2 * prec.pi_value()
        coeffs = {}
        for z in range(z_max + 1):
            acc = prec.real(0)
            for r in range(m):
                acc += recip[r] * prec.cos(two_pi * z * r / prec.real(m))
            coeffs[z] = acc / m
        values = tuple(coeffs[abs(z)] for z in range(-z_max, z_max + 1))
        float_values = np.array([float(v) for v in values])
        recip_float = np.array([float(v) for v in recip])
    else:
        arr = np.asarray(symbol.samples, dtype=complex)
        recip_arr = 1.0 / arr
        spectrum = np.fft.fft(recip_arr) / m
        if symbol.kernel is None or symbol.kernel.symmetric:
            # real even symbol: enforce a_z == a_{-z} exactly
            spectrum = spectrum.real
            values = tuple(float(spectrum[abs(z)]) for z in range(-z_max, z_max + 1))
        else:
            values = tuple(spectrum[z % m] for z in range(-z_max, z_max + 1))
        float_values = np.array([float(np.real(v)) for v in values])
        recip_float = recip_arr.real

    # residual of the truncated reconstruction against the sampled reciprocal
    t = np.arange(m) / m
    rec = np.zeros(m)
    for z in range(-z_max, z_max + 1):
        rec += float_values[z + z_max] * np.cos(2 * np.pi * z * t)
    residual = float(np.max(np.abs(rec - recip_float)))

    mags = np.abs(float_values)
    ratios = []
    for z in range(4, z_max):
        if mags[z + z_max] > 0:
            ratios.append(mags[z + 1 + z_max] / mags[z + z_max])
    partials = {}
    checkpoints = sorted({max(1, z_max // 4), z_max // 2, (3 * z_max) // 4, z_max})
    for k in range(5):
        sums = []
        for stop in checkpoints:
            total = mags[z_max] if k == 0 else 0.0
            for z in range(1, stop + 1):
                total += 2 * mags[z + z_max] * z ** k
            sums.append(float(total))
        partials[k] = sums
    power_constant = max(
        (float(mags[z + z_max] * z ** 6) for z in range(4, z_max + 1)),
        default=0.0,
    )
    decay = DecayReport(
        partial_sums=partials,
        max_tail_ratio=float(max(ratios)) if ratios else float("inf"),
        power_law_constant=power_constant,
    )
    return ReciprocalCoefficients(symbol=symbol, z_max=z_max, values=values,
                                  reconstruction_residual=residual, decay=decay)


@dataclass(frozen=True)
class SpectralInterpolation:
    """Interpolation coefficients from convolution with the reciprocal."""

    reciprocal: ReciprocalCoefficients
    data_start: int
    data_values: tuple
    start: int
    coefficients: tuple

    def coefficient(self, j: int):
        idx = j - self.start
        if not 0 <= idx < len(self.coefficients):
            return prec.real(0)
        return self.coefficients[idx]

    def boundary_budget(self, j: int) -> float:
        """Zero-extension error bound for the coefficient at j.

        The data window is extended by zero, so the coefficient misses
        every term ``a_z * data(j - z)`` with ``j - z`` outside the
        window; the bound is ``max|data| * sum_{|z| > d} |a_z|`` with d
        the distance from j to the window edges.
        """
        if not self.data_values:
            return 0.0
        lo = self.data_start
        hi = self.data_start + len(self.data_values) - 1
        distance = max(0, min(j - lo, hi - j))
        peak = max(abs(float(v)) for v in self.data_values)
        return peak * self.reciprocal.tail_sum_bound(distance)

    def synthesize(self, ell: int):
        """``sum_j c_j psi(ell - j)`` over the coefficient window."""
        kernel = self.reciprocal.symbol.kernel
        terms = []
        for idx, c in enumerate(self.coefficients):
            j = self.start + idx
            terms.append(c * kernel.evaluate(prec.real(ell - j)))
        return prec.accumulate(terms)


def spectral_interpolate(symbol: PeriodizedSymbol, values: Sequence, start: int,
                         z_max: int = 32,
                         reciprocal: ReciprocalCoefficients = None) -> SpectralInterpolation:
    """Coefficients ``c_j = sum_z a_z data(j - z)`` on a padded window.

    Data is extended by zero outside its window, which is exact for data
    that is genuinely zero there and otherwise carries the documented
    boundary budget.  The output window pads the data window by z_max on
    both sides.
    """
    if reciprocal is None:
        reciprocal = reciprocal_coefficients(symbol, z_max)
    else:
        z_max = reciprocal.z_max
    values = tuple(prec.real(v) for v in values)
    out = []
    out_start = start - z_max
    n = len(values)
    for j in range(out_start, start + n - 1 + z_max + 1):
        terms = []
        for z in range(-z_max, z_max + 1):
            d = j - z - start
            if 0 <= d < n:
                terms.append(reciprocal.value(z) * values[d])
        out.append(prec.accumulate(terms))
    return SpectralInterpolation(
        reciprocal=reciprocal, data_start=start, data_values=values,
        start=out_start, coefficients=tuple(out),
    )


class PoissonSides(NamedTuple):
    lhs: object
    rhs: object


def verify_poisson(kernel: Kernel, x) -> PoissonSides:
    """Both sides of the periodization identity at x in [0, 1).

    lhs: ``sum_z psi(z) e^{2 pi i z x}`` (symbol series);
    rhs: ``sum_z psi_hat(x + z)`` (transform side).  Requires a kernel
    with a known transform.
    """
    if kernel.fourier is None:
        raise UnsupportedRouteError(
            f"kernel {kernel.family!r} has no closed-form transform"
        )
    x = prec.real(x)
    radius = truncation_radius(kernel, 0, SYMBOL_TAIL if not prec.extended_active()
                               else 10 * prec.eps())
    two_pi = 2 * prec.pi_value()
    lhs_terms = [kernel.evaluate(prec.real(0))]
    for z in range(1, radius + 1):
        if kernel.symmetric:
            lhs_terms.append(2 * kernel.evaluate(prec.real(z)) * prec.cos(two_pi * z * x))
        else:
            lhs_terms.append(
                kernel.evaluate(prec.real(z)) * prec.cos(two_pi * z * x)
                + kernel.evaluate(prec.real(-z)) * prec.cos(-two_pi * z * x)
            )
    lhs = prec.accumulate(lhs_terms)
    rhs_terms = []
    for z in range(-radius - 2, radius + 3):
        rhs_terms.append(kernel.fourier(x + z))
    rhs = prec.accumulate(rhs_terms)
    return PoissonSides(lhs, rhs)
