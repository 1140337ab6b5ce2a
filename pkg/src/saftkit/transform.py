"""Forward and inverse transforms on sampled signals.

Three evaluation paths:

* saft_direct: O(N^2) quadrature of the kernel inner product, the
  reference oracle; accepts any strictly increasing frequency list.
* saft_fast: O(N log N) chirp-FFT factorization, restricted to the
  conjugate frequency grid w_k = b * 2 pi k / (n dt).
* saft_b0: the degenerate b = 0 branch, a chirped and scaled resampling.

saft_inverse applies the direct quadrature under the inverse parameter
matrix.  With the real kernel normalization used here the plain inner
product already reconstructs the signal, so no extra scalar phase is
applied (the unit-modulus constant sometimes attached to the inverse
integral breaks reconstruction in this convention; see
core.phase_constant_C, which is still exposed for scalar work).
"""

import math

import numpy as np

from . import core
from .errors import (
    DegenerateBError,
    DegenerateBranchError,
    GridError,
    NegativeDError,
)
from .signal import GridSpec, SampledSignal, Spectrum, resample_at


def conjugate_omega_grid(m, grid):
    """Frequency grid that turns the fast path's inner sum into a DFT.

    w_k = b * xi_k with xi_k = 2 pi k/(n dt), k = -n/2 .. n/2 - 1,
    returned in increasing order.  Spacing is 2 pi |b| / (n dt), the
    round-trip-stable companion of the time grid.
    """
    if m.has_zero_b:
        raise DegenerateBError("conjugate grid requires b != 0")
    n = grid.n
    xi = (2.0 * math.pi / (n * grid.dt)) * (np.arange(n) - n // 2)
    omegas = m.b * xi
    return omegas if m.b > 0 else omegas[::-1].copy()


def saft_direct(f, m, omegas):
    """Direct quadrature of the transform at arbitrary frequencies.

    values[j] = sum_k f(t_k) * conj(kappa(t_k, w_j)) * dt

    The summation order over k is fixed left to right per output j, so
    results are deterministic and outputs may be computed in parallel.
    """
    if m.has_zero_b:
        raise DegenerateBError("saft_direct requires b != 0; see saft_b0")
    omegas = np.asarray(omegas, dtype=float)
    t = f.grid.points()
    ek = np.conj(core.kernel_eval(m, t[None, :], omegas[:, None]))
    vals = ek @ f.values * f.grid.dt
    return Spectrum(omegas, vals)


def saft_fast(f, m):
    """Chirp-FFT evaluation on the conjugate frequency grid.

    The kernel conjugate factors as

        conj(kappa(t, w)) = K * exp(i(a t^2 + 2 t p)/(2b))
                              * exp(-i t w / b)
                              * exp(i(d w^2 - 2 w (d p - b q))/(2b))

    so the middle factor becomes a DFT once w = b * xi with xi on the
    FFT frequency grid.  Matches saft_direct to rounding error.
    """
    if m.has_zero_b:
        raise DegenerateBError("saft_fast requires b != 0; see saft_b0")
    grid = f.grid
    n = grid.n
    t = grid.points()
    pre = np.exp(1j * ((m.a * t ** 2 + 2.0 * t * m.p) / (2.0 * m.b)))
    u = np.fft.fftshift(np.fft.fft(f.values * pre))
    xi = (2.0 * math.pi / (n * grid.dt)) * (np.arange(n) - n // 2)
    omegas = m.b * xi
    post = np.exp(1j * ((m.d * omegas ** 2
                         - 2.0 * omegas * (m.d * m.p - m.b * m.q)) / (2.0 * m.b)))
    # xi * t_min compensates the DFT's index origin (first sample at t_min)
    vals = (grid.dt * core.kernel_scale(m.b)) * post * np.exp(-1j * xi * grid.t_min) * u
    if m.b < 0:
        omegas = omegas[::-1].copy()
        vals = vals[::-1].copy()
    return Spectrum(omegas, vals)


def saft_inverse(F, m, ts):
    """Reconstruct a signal from its spectrum by inverse quadrature.

    values[k] = sum_j F(w_j) * conj(kappa_inv(w_j, t_k)) * dw

    with kappa_inv the kernel of inverse_matrix(m).  The spectrum must
    be uniformly spaced (its own spacing supplies dw) and wide enough to
    carry the signal's energy; both are the caller's responsibility.
    """
    if m.has_zero_b:
        raise DegenerateBError("saft_inverse requires b != 0")
    dw = F.spacing()
    mi = core.inverse_matrix(m)
    t = ts.points()
    ek = np.conj(core.kernel_eval(mi, F.omegas[None, :], t[:, None]))
    vals = ek @ F.values * dw
    return SampledSignal(ts, vals)


def saft_b0(f, m, omegas):
    """Degenerate transform for matrices with b = 0 exactly.

    output(w) = sqrt(d) * exp(i (c d / 2)(w - p)^2 + i w q) * f(d (w - p))

    f is evaluated off-grid by band-limited resampling; every point
    d*(w - p) must lie inside the sampled window.
    """
    if not m.has_zero_b:
        raise DegenerateBranchError("saft_b0 applies only to matrices with b = 0")
    if m.d <= 0:
        raise NegativeDError(
            "b = 0 branch requires d > 0 (sqrt(d) real), got d = %r" % (m.d,)
        )
    omegas = np.asarray(omegas, dtype=float)
    shifted = omegas - m.p
    samples = resample_at(f, m.d * shifted)
    phase = np.exp(1j * (0.5 * m.c * m.d * shifted ** 2 + omegas * m.q))
    return Spectrum(omegas, math.sqrt(m.d) * phase * samples)


def dual_grid(F, m, n=None):
    """Centered time grid conjugate to a uniform spectrum.

    Spacing dt = 2 pi |b| / (n dw), the inverse of the relation used by
    conjugate_omega_grid; default n is the spectrum length.
    """
    if m.has_zero_b:
        raise DegenerateBError("dual grid requires b != 0")
    dw = F.spacing()
    if n is None:
        n = F.omegas.size
    dt = 2.0 * math.pi * abs(m.b) / (n * dw)
    half = (n // 2) * dt
    return GridSpec(n, -half, -half + n * dt)
