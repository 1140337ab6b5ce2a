"""Convolution operators adapted to the transform.

The classical convolution carries the 1/sqrt(2 pi) of its defining
integral.  The transform-adapted operators (saft_convolve,
phase_free_convolve, spectral_convolve_inv) use the plain integral
between the chirp modulations; that normalization is the one under
which the convolution and product identities hold with unit constant,
as certified by the verification module.

All discrete convolutions are linear (inputs zero-padded to 2n), then
truncated back to the input window.  Truncation is legitimate for the
decaying corpus signals; if more than 1e-10 of the output energy falls
outside the retained window a SupportWarning is emitted.
"""

import math
import warnings

import numpy as np

from . import core
from .errors import DegenerateBError, GridError, GridMismatchError, SupportWarning
from .signal import (
    SampledSignal,
    Spectrum,
    require_same_grid,
    resample_interpolant,
)
from .transform import saft_direct

LEAK_LIMIT = 1e-10


def _linear_full(x, y):
    """Full linear convolution (length 2n - 1) of equal-length arrays."""
    nfft = 2 * x.size
    return np.fft.ifft(np.fft.fft(x, nfft) * np.fft.fft(y, nfft))[: 2 * x.size - 1]


def _lag_shift(x_min, step):
    """Index offset aligning the full-convolution lag grid to the input grid.

    The full result lives on 2*x_min + i*step; sample k of the input
    window is slot k + shift with shift = -x_min/step, which must be an
    integer for the two grids to coincide.
    """
    s = -x_min / step
    si = int(round(s))
    if abs(s - si) > 1e-9:
        raise GridError(
            "window origin %.17g is not an integer multiple of the spacing; "
            "convolution output cannot be aligned to the input grid" % x_min
        )
    return si


def _truncate_to_window(c, n, shift, opname):
    """Keep slots shift .. shift+n-1 of the full result, zero elsewhere.

    Warns with SupportWarning when the discarded slots carry at least
    LEAK_LIMIT of the total output energy.
    """
    idx = np.arange(n) + shift
    valid = (idx >= 0) & (idx < c.size)
    out = np.zeros(n, dtype=complex)
    out[valid] = c[idx[valid]]
    total = float(np.sum(np.abs(c) ** 2))
    leak = 0.0
    if total > 0.0:
        leak = max(0.0, 1.0 - float(np.sum(np.abs(out) ** 2)) / total)
    if leak >= LEAK_LIMIT:
        warnings.warn(
            SupportWarning(
                "%s: fraction %.3g of the output energy lies outside the "
                "retained window" % (opname, leak)
            ),
            stacklevel=3,
        )
    return out


def std_convolve(f, g):
    """Classical convolution (f*g)(t) = (1/sqrt(2 pi)) integral f(x) g(t-x) dx."""
    require_same_grid(f, g)
    grid = f.grid
    c = _linear_full(f.values, g.values) * (grid.dt / math.sqrt(2.0 * math.pi))
    out = _truncate_to_window(c, grid.n, _lag_shift(grid.t_min, grid.dt),
                              "std_convolve")
    return SampledSignal(grid, out)


def saft_convolve(f, g, m):
    """Transform-adapted convolution.

    h(t) = K * conj(m_A(t)) * integral f_up(x) g_up(t - x) dx

    where f_up, g_up are the chirp-modulated inputs and K the kernel
    normalization.  Under this operator the transform of h factors into
    the product of the transforms times a frequency phase.
    """
    require_same_grid(f, g)
    grid = f.grid
    t = grid.points()
    up = core.chirp_mod(m, t, "up")
    c = _linear_full(f.values * up, g.values * up) * grid.dt
    out = _truncate_to_window(c, grid.n, _lag_shift(grid.t_min, grid.dt),
                              "saft_convolve")
    h = core.kernel_scale(m.b) * core.chirp_mod(m, t, "down") * out
    return SampledSignal(grid, h)


def phase_free_convolve(f, g, m):
    """Convolution whose transform identity carries no phase factor.

    h(t) = sqrt(2) * K * conj(m_A(t)) * c(sqrt(2) t),
    c(y) = integral f_up(x) g_up(y - x) dx.

    c is evaluated at the scaled points by direct summation, with g_up
    resampled band-limited at the off-grid arguments; arguments outside
    the sampled window contribute zero (the corpus signals vanish there).
    """
    require_same_grid(f, g)
    grid = f.grid
    t = grid.points()
    up = core.chirp_mod(m, t, "up")
    fu = f.values * up
    gu = SampledSignal(grid, g.values * up)
    xf, yf = resample_interpolant(gu)
    args = math.sqrt(2.0) * t[:, None] - t[None, :]
    gvals = np.interp(args.ravel(), xf, yf).reshape(args.shape)
    gvals[(args < grid.t_min) | (args > grid.t_max)] = 0.0
    c = gvals @ fu * grid.dt
    h = math.sqrt(2.0) * core.kernel_scale(m.b) * core.chirp_mod(m, t, "down") * c
    return SampledSignal(grid, h)


def spectral_convolve_inv(F, G, m):
    """Frequency-domain companion convolution of the product identity.

    (F conv_inv G)(w) = K * conj(n_A(w)) * integral F_up(v) G_up(w - v) dv

    with n_A the chirp modulator of inverse_matrix(m), i.e.
    n_A(w) = exp(-i d w^2/(2b)).  K* = K under the real normalization.
    """
    if m.has_zero_b:
        raise DegenerateBError("spectral_convolve_inv requires b != 0")
    if not np.array_equal(F.omegas, G.omegas):
        raise GridMismatchError("spectra are sampled on different frequency grids")
    dw = F.spacing()
    mi = core.inverse_matrix(m)
    w = F.omegas
    up = core.chirp_mod(mi, w, "up")
    c = _linear_full(F.values * up, G.values * up) * dw
    out = _truncate_to_window(c, w.size, _lag_shift(w[0], dw),
                              "spectral_convolve_inv")
    vals = core.kernel_scale(m.b) * core.chirp_mod(mi, w, "down") * out
    return Spectrum(w, vals)


def product_modulated(f, g, m):
    """Pointwise product with the time-domain phase of the product identity.

    h(t) = Phi_inv(t) * f(t) * g(t); the transform of h equals the
    spectral companion convolution of the two transforms.
    """
    require_same_grid(f, g)
    t = f.grid.points()
    vals = core.phase_factor_prod(m, t) * f.values * g.values
    return SampledSignal(f.grid, vals)


def xiang_qin_product_rhs(f, g, m, omegas):
    """Right-hand side of the product formula written via the classical
    Fourier spectrum of one factor:

        T[f g](w) = (1/(sqrt(2 pi) |b|)) * conj(Phi(w))
                    * integral T[f](v) Phi(v) g_FT((w - v)/b) dv

    with Phi the convolution-identity phase and g_FT the classical
    Fourier transform of g.  Requires a uniform, window-aligned
    frequency grid; returns the comparison spectrum on that grid.
    """
    if m.has_zero_b:
        raise DegenerateBError("xiang_qin_product_rhs requires b != 0")
    require_same_grid(f, g)
    omegas = np.asarray(omegas, dtype=float)
    steps = np.diff(omegas)
    dv = float(steps[0])
    if np.max(np.abs(steps - dv)) > 1e-9 * abs(dv):
        raise GridError("xiang_qin_product_rhs needs a uniform frequency grid")
    fhat = saft_direct(f, m, omegas).values
    phi = core.phase_factor_conv(m, omegas)
    fourier = core.preset("fourier")
    pts = omegas / m.b
    if m.b > 0:
        gft = saft_direct(g, fourier, pts).values
    else:
        gft = saft_direct(g, fourier, pts[::-1].copy()).values[::-1]
    c = _linear_full(fhat * phi, gft) * dv
    out = _truncate_to_window(c, omegas.size, _lag_shift(omegas[0], dv),
                              "xiang_qin_product_rhs")
    coeff = math.sqrt(2.0 * math.pi) * core.kernel_scale(m.b) ** 2
    return Spectrum(omegas, coeff * np.conj(phi) * out)
