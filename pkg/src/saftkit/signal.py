"""Sampled signals and spectra: uniform grids, test-signal generators,
norms, CSV persistence, and band-limited resampling.

All continuous integrals in this package are approximated by the
left-endpoint Riemann sum on a uniform grid t_k = t_min + k*dt,
k = 0..n-1.  Corpus signals decay far below tolerance at the window
edges, so this is equivalent to any other low-order rule.
"""

import csv
import dataclasses
import math

import numpy as np

from . import core
from .errors import (
    FormatError,
    GridError,
    GridMismatchError,
    IoError,
    NonFiniteError,
    ParamError,
    RangeError,
)

RESAMPLE_PAD = 8  # spectral zero-padding factor for off-grid evaluation


@dataclasses.dataclass(frozen=True)
class GridSpec:
    """Uniform sampling grid: n points t_min + k*dt, k = 0..n-1."""

    n: int
    t_min: float
    t_max: float

    def __post_init__(self):
        if self.n < 8 or (self.n & (self.n - 1)) != 0:
            raise GridError("n must be a power of two >= 8, got %r" % (self.n,))
        if not (math.isfinite(self.t_min) and math.isfinite(self.t_max)):
            raise GridError("grid endpoints must be finite")
        if not self.t_max > self.t_min:
            raise GridError(
                "t_max must exceed t_min, got [%r, %r]" % (self.t_min, self.t_max)
            )

    @property
    def dt(self):
        return (self.t_max - self.t_min) / self.n

    def points(self):
        return self.t_min + self.dt * np.arange(self.n)


def make_grid(n, t_min, t_max):
    """Build a validated GridSpec; n must be a power of two >= 8."""
    return GridSpec(int(n), float(t_min), float(t_max))


def _frozen_complex(values, n=None):
    out = np.asarray(values, dtype=complex)
    if out.ndim != 1:
        raise GridError("sample array must be one-dimensional")
    if n is not None and out.size != n:
        raise GridError("got %d samples for a grid of %d points" % (out.size, n))
    if not np.all(np.isfinite(out)):
        raise NonFiniteError("sample values must be finite")
    out = out.copy()
    out.setflags(write=False)
    return out


@dataclasses.dataclass(frozen=True)
class SampledSignal:
    """Complex samples on a uniform time grid."""

    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_complex(self.values, self.grid.n))


@dataclasses.dataclass(frozen=True)
class Spectrum:
    """Complex values on an explicit, strictly increasing frequency grid."""

    omegas: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        om = np.asarray(self.omegas, dtype=float)
        if om.ndim != 1 or om.size == 0:
            raise GridError("omega grid must be a nonempty 1-d array")
        if not np.all(np.isfinite(om)):
            raise NonFiniteError("omega grid must be finite")
        if om.size > 1 and not np.all(np.diff(om) > 0):
            raise GridError("omega grid must be strictly increasing")
        om = om.copy()
        om.setflags(write=False)
        object.__setattr__(self, "omegas", om)
        object.__setattr__(self, "values", _frozen_complex(self.values, om.size))

    def spacing(self, rel_tol=1e-9):
        """Uniform grid spacing; GridError if spacing varies beyond rel_tol."""
        if self.omegas.size < 2:
            raise GridError("spacing undefined for a single-point spectrum")
        steps = np.diff(self.omegas)
        dw = float(steps[0])
        if np.max(np.abs(steps - dw)) > rel_tol * abs(dw):
            raise GridError("omega grid is not uniform")
        return dw


def generate(kind, params, grid):
    """Sample a named test signal on the grid.

    Kinds and parameters:
        gaussian: sigma > 0, t0      -> exp(-(t - t0)^2 / (2 sigma^2))
        chirp:    rate, sigma > 0    -> exp(i*rate*t^2/2) * exp(-t^2/(2 sigma^2))
        rect:     width > 0          -> 1 where |t| < width/2, else 0

    params is a mapping, e.g. {"sigma": 1.0}; omitted entries default
    (sigma=1, t0=0, rate=1, width=2).
    """
    t = grid.points()
    params = dict(params or {})

    def take(name, default):
        v = params.pop(name, default)
        try:
            return float(v)
        except (TypeError, ValueError) as exc:
            raise ParamError("parameter %r must be a real number" % name) from exc

    if kind == "gaussian":
        sigma = take("sigma", 1.0)
        t0 = take("t0", 0.0)
        if sigma <= 0:
            raise ParamError("gaussian sigma must be positive")
        vals = np.exp(-((t - t0) ** 2) / (2.0 * sigma ** 2)).astype(complex)
    elif kind == "chirp":
        rate = take("rate", 1.0)
        sigma = take("sigma", 1.0)
        if sigma <= 0:
            raise ParamError("chirp sigma must be positive")
        vals = np.exp(1j * 0.5 * rate * t ** 2) * np.exp(-(t ** 2) / (2.0 * sigma ** 2))
    elif kind == "rect":
        width = take("width", 2.0)
        if width <= 0:
            raise ParamError("rect width must be positive")
        vals = np.where(np.abs(t) < 0.5 * width, 1.0, 0.0).astype(complex)
    else:
        raise ParamError("unknown signal kind %r" % (kind,))
    if params:
        raise ParamError("unexpected parameter(s) for %s: %s"
                         % (kind, ", ".join(sorted(params))))
    return SampledSignal(grid, vals)


def apply_chirp(f, m, direction):
    """Multiply a signal by the chirp modulator of matrix m ("up"/"down")."""
    mod = core.chirp_mod(m, f.grid.points(), direction)
    return SampledSignal(f.grid, f.values * mod)


def l2_norm(f):
    """Discrete L2 norm sqrt(sum |f_k|^2 * dt)."""
    return math.sqrt(float(np.sum(np.abs(f.values) ** 2)) * f.grid.dt)


def spectrum_l2_norm(s):
    """Discrete L2 norm of a uniformly gridded spectrum."""
    return math.sqrt(float(np.sum(np.abs(s.values) ** 2)) * abs(s.spacing()))


def require_same_grid(f, g):
    if f.grid != g.grid:
        raise GridMismatchError(
            "operands sampled on different grids: %r vs %r" % (f.grid, g.grid)
        )


# ---------------------------------------------------------------- CSV I/O
#
# Signal files:   header "t,re,im",     one row per sample.
# Spectrum files: header "omega,re,im", one row per frequency.
# All numbers are written with 17 significant digits, which round-trips
# IEEE doubles exactly.  UTF-8, LF line endings.

def _fmt(x):
    return "%.17g" % x


def _write_rows(path, header, cols):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(header + "\n")
            for row in zip(*cols):
                fh.write(",".join(_fmt(v) for v in row) + "\n")
    except OSError as exc:
        raise IoError("cannot write %s: %s" % (path, exc)) from exc


def _read_rows(path, header):
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            try:
                first = next(reader)
            except StopIteration:
                raise FormatError("%s: empty file" % path) from None
            if [h.strip() for h in first] != header.split(","):
                raise FormatError("%s: expected header %r" % (path, header))
            rows = []
            for lineno, row in enumerate(reader, start=2):
                if not row:
                    continue
                if len(row) != 3:
                    raise FormatError("%s: line %d: expected 3 fields" % (path, lineno))
                try:
                    rows.append((float(row[0]), float(row[1]), float(row[2])))
                except ValueError:
                    raise FormatError(
                        "%s: line %d: malformed number" % (path, lineno)
                    ) from None
    except OSError as exc:
        raise IoError("cannot read %s: %s" % (path, exc)) from exc
    if not rows:
        raise FormatError("%s: no data rows" % path)
    return np.array(rows, dtype=float)


def write_signal(f, path):
    """Write a signal to CSV with header t,re,im."""
    t = f.grid.points()
    _write_rows(path, "t,re,im", (t, f.values.real, f.values.imag))


def write_spectrum(s, path):
    """Write a spectrum to CSV with header omega,re,im."""
    _write_rows(path, "omega,re,im", (s.omegas, s.values.real, s.values.imag))


def read_signal(path):
    """Read a signal CSV; row count must be a power of two >= 8 and the
    time column uniform within 1e-9 relative."""
    data = _read_rows(path, "t,re,im")
    t = data[:, 0]
    n = t.size
    if n < 8 or (n & (n - 1)) != 0:
        raise FormatError("%s: row count %d is not a power of two >= 8" % (path, n))
    dt = (t[-1] - t[0]) / (n - 1)
    if dt <= 0 or np.max(np.abs(np.diff(t) - dt)) > 1e-9 * abs(dt):
        raise FormatError("%s: time grid is not uniform" % path)
    grid = GridSpec(n, float(t[0]), float(t[0] + n * dt))
    return SampledSignal(grid, data[:, 1] + 1j * data[:, 2])


def read_spectrum(path):
    """Read a spectrum CSV (strictly increasing omega column)."""
    data = _read_rows(path, "omega,re,im")
    if data.shape[0] > 1 and not np.all(np.diff(data[:, 0]) > 0):
        raise FormatError("%s: omega column must be strictly increasing" % path)
    return Spectrum(data[:, 0], data[:, 1] + 1j * data[:, 2])


# ------------------------------------------------------- resampling

def _fine_values(values):
    """Trigonometric upsampling of one period by RESAMPLE_PAD.

    Returns the samples of the trigonometric interpolant on the grid
    refined by RESAMPLE_PAD, same origin.  The Nyquist coefficient is
    split symmetrically so original sample points are reproduced exactly.
    """
    n = values.size
    pad = RESAMPLE_PAD
    spec = np.fft.fft(values)
    wide = np.zeros(pad * n, dtype=complex)
    half = n // 2
    wide[:half] = spec[:half]
    wide[-half:] = spec[half:]
    wide[half] = 0.5 * spec[half]
    wide[-half] = 0.5 * spec[half]
    return np.fft.ifft(wide) * pad


def resample_interpolant(f):
    """Build a band-limited interpolant for off-grid evaluation.

    Returns (x, y): the refined sample positions and interpolant values,
    covering [t_min, t_max] inclusive (the right endpoint holds the
    periodic-extension value).  Evaluate with np.interp(points, x, y).
    """
    g = f.grid
    fine = _fine_values(f.values)
    x = g.t_min + (g.dt / RESAMPLE_PAD) * np.arange(fine.size + 1)
    y = np.concatenate([fine, fine[:1]])
    return x, y


def resample_at(f, points):
    """Evaluate a signal at arbitrary points inside its window.

    Band-limited interpolation: the discrete Fourier representation is
    zero-padded by 8x and the resulting fine grid interpolated linearly.
    Points must lie within [t_min, t_max]; raises RangeError otherwise.
    """
    pts = np.asarray(points, dtype=float)
    g = f.grid
    if pts.size and (pts.min() < g.t_min or pts.max() > g.t_max):
        raise RangeError(
            "points in [%.17g, %.17g] fall outside the sampled window [%g, %g]"
            % (pts.min(), pts.max(), g.t_min, g.t_max)
        )
    x, y = resample_interpolant(f)
    return np.interp(pts, x, y)
