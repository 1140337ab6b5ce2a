"""Numerical certification of the transform identities.

Every checker evaluates the left and right side of one identity through
independent code paths (sharing nothing above the scalar formulas of
core) and reports the relative L2 residual

    residual = ||LHS - RHS|| / ||RHS||      (||LHS|| when ||RHS|| = 0).

Identity names used in reports and on the command line:

    convolution-theorem   T[f conv_m g] = Phi(w) T[f] T[g]
    product-theorem       T[Phi_inv f g] = (T[f] conv_inv T[g])
    phase-free-theorem    T_m[f star g](w) = T_m1[f](w/sqrt2) T_m1[g](w/sqrt2)
    lct-special-case      same with p = q = 0 (m1 = m)
    inverse-roundtrip     inverse(forward(f)) = f
    unitarity             ||T[f]|| = ||f||       (b > 0)
    xiang-qin-product     T[f g] via the classical-Fourier comparison form
"""

import contextlib
import csv
import dataclasses
import json
import math
import warnings

import numpy as np

from . import convolve, core, transform
from .errors import IoError, OffsetError, SaftError, SupportWarning
from .signal import (
    GridSpec,
    SampledSignal,
    generate,
    l2_norm,
    make_grid,
    spectrum_l2_norm,
)


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    identity_name: str
    residual: float
    tolerance: float
    passed: bool
    matrix: core.SaftMatrix
    grid: GridSpec
    notes: tuple = ()


def _report(name, residual, tolerance, m, grid, notes=()):
    residual = float(residual)
    return VerificationReport(name, residual, float(tolerance),
                              residual <= tolerance, m, grid, tuple(notes))


def _residual(lhs, rhs):
    denom = float(np.linalg.norm(rhs))
    diff = float(np.linalg.norm(np.asarray(lhs) - np.asarray(rhs)))
    return diff / denom if denom > 0.0 else float(np.linalg.norm(lhs))


@contextlib.contextmanager
def _collect_support_notes(notes):
    """Route SupportWarnings raised in the block into the notes list."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        yield
    for w in caught:
        if issubclass(w.category, SupportWarning):
            notes.append(str(w.message))
        else:
            warnings.warn_explicit(w.message, w.category, w.filename, w.lineno)


def _support_radius(spec, cutoff=1e-13):
    """Largest |omega| where the spectrum exceeds cutoff * peak."""
    mags = np.abs(spec.values)
    peak = float(mags.max(initial=0.0))
    if peak == 0.0:
        return 0.0
    idx = np.nonzero(mags > cutoff * peak)[0]
    return float(max(abs(spec.omegas[idx[0]]), abs(spec.omegas[idx[-1]])))


def _centered_grid(radius, n):
    """Uniform n-point frequency grid on [-radius, radius), origin-aligned."""
    dv = 2.0 * radius / n
    return (np.arange(n) - n // 2) * dv


def check_convolution_theorem(f, g, m, grid=None, tolerance=1e-4):
    """Transform of the adapted convolution vs phase times spectra product."""
    grid = grid or f.grid
    notes = []
    omegas = transform.conjugate_omega_grid(m, grid)
    with _collect_support_notes(notes):
        h = convolve.saft_convolve(f, g, m)
        lhs = transform.saft_direct(h, m, omegas).values
    rhs = (core.phase_factor_conv(m, omegas)
           * transform.saft_direct(f, m, omegas).values
           * transform.saft_direct(g, m, omegas).values)
    return _report("convolution-theorem", _residual(lhs, rhs), tolerance,
                   m, grid, notes)


def check_product_theorem(f, g, m, grid=None, tolerance=1e-4):
    """Transform of the phased product vs spectral companion convolution.

    The frequency window is chosen adaptively: the two spectra are
    scanned for their numerical support and the comparison grid spans
    the sum of the two radii, so the frequency-domain convolution is
    fully resolved regardless of the matrix.
    """
    grid = grid or f.grid
    notes = []
    radius = (_support_radius(transform.saft_fast(f, m))
              + _support_radius(transform.saft_fast(g, m)))
    if radius > 0.0:
        omegas = _centered_grid(radius, grid.n)
    else:
        omegas = transform.conjugate_omega_grid(m, grid)
    with _collect_support_notes(notes):
        h = convolve.product_modulated(f, g, m)
        lhs = transform.saft_direct(h, m, omegas).values
        fhat = transform.saft_direct(f, m, omegas)
        ghat = transform.saft_direct(g, m, omegas)
        rhs = convolve.spectral_convolve_inv(fhat, ghat, m).values
    return _report("product-theorem", _residual(lhs, rhs), tolerance,
                   m, grid, notes)


def _phase_free_residual(f, g, m, grid):
    omegas = transform.conjugate_omega_grid(m, grid)
    notes = []
    with _collect_support_notes(notes):
        h = convolve.phase_free_convolve(f, g, m)
        lhs = transform.saft_direct(h, m, omegas).values
    m1 = core.half_offset_matrix(m)
    pts = omegas / math.sqrt(2.0)
    rhs = (transform.saft_direct(f, m1, pts).values
           * transform.saft_direct(g, m1, pts).values)
    return _residual(lhs, rhs), notes


def check_phase_free_theorem(f, g, m, grid=None, tolerance=1e-4):
    """Phase-free convolution identity, spectra under the half-offset
    matrix at scaled frequencies w/sqrt(2)."""
    grid = grid or f.grid
    residual, notes = _phase_free_residual(f, g, m, grid)
    return _report("phase-free-theorem", residual, tolerance, m, grid, notes)


def check_lct_special_case(f, g, m, grid=None, tolerance=1e-4):
    """Offset-free specialization of the phase-free identity.

    Requires p = q = 0 (the half-offset matrix then equals the matrix
    itself); agrees with check_phase_free_theorem to the bit on such
    matrices.
    """
    if m.p != 0.0 or m.q != 0.0:
        raise OffsetError("lct-special-case requires p = q = 0, got p=%r q=%r"
                          % (m.p, m.q))
    grid = grid or f.grid
    residual, notes = _phase_free_residual(f, g, m, grid)
    return _report("lct-special-case", residual, tolerance, m, grid, notes)


def check_inverse_roundtrip(f, m, grid=None, tolerance=1e-6):
    """Forward fast path, inverse quadrature, compare with the input."""
    grid = grid or f.grid
    spec = transform.saft_fast(f, m)
    back = transform.saft_inverse(spec, m, grid)
    return _report("inverse-roundtrip", _residual(back.values, f.values),
                   tolerance, m, grid)


def check_unitarity(f, m, grid=None, tolerance=1e-6):
    """Norm preservation of the forward transform, asserted for b > 0."""
    grid = grid or f.grid
    if m.b < 0:
        return _report("unitarity", 0.0, tolerance, m, grid,
                       ("skipped: norm preservation asserted only for b > 0",))
    spec = transform.saft_fast(f, m)
    fn = l2_norm(f)
    if fn == 0.0:
        return _report("unitarity", 0.0, tolerance, m, grid)
    residual = abs(spectrum_l2_norm(spec) - fn) / fn
    return _report("unitarity", residual, tolerance, m, grid)


def check_xiang_qin(f, g, m, grid=None, tolerance=1e-3):
    """Product spectrum vs the classical-Fourier comparison formula."""
    grid = grid or f.grid
    notes = []
    radius = (_support_radius(transform.saft_fast(f, m))
              + abs(m.b) * _support_radius(transform.saft_fast(g, core.preset("fourier"))))
    if radius > 0.0:
        omegas = _centered_grid(radius, grid.n)
    else:
        omegas = transform.conjugate_omega_grid(m, grid)
    prod = SampledSignal(f.grid, f.values * g.values)
    lhs = transform.saft_direct(prod, m, omegas).values
    with _collect_support_notes(notes):
        rhs = convolve.xiang_qin_product_rhs(f, g, m, omegas).values
    return _report("xiang-qin-product", _residual(lhs, rhs), tolerance,
                   m, grid, notes)


# ----------------------------------------------------------------- suite

# name -> (arity, checker, default tolerance)
IDENTITY_CHECKS = {
    "convolution-theorem": ("pair", check_convolution_theorem, 1e-4),
    "product-theorem": ("pair", check_product_theorem, 1e-4),
    "phase-free-theorem": ("pair", check_phase_free_theorem, 1e-4),
    "lct-special-case": ("pair", check_lct_special_case, 1e-4),
    "inverse-roundtrip": ("single", check_inverse_roundtrip, 1e-6),
    "unitarity": ("single", check_unitarity, 1e-6),
    "xiang-qin-product": ("pair", check_xiang_qin, 1e-3),
}


def default_matrices():
    """Canonical matrix set exercised by the suite: the Fourier matrix,
    a fractional rotation, a Fresnel row, and an offset and an
    offset-free general matrix."""
    return [
        core.preset("fourier"),
        core.preset("frft", [math.pi / 4.0]),
        core.preset("fresnel", [2.0]),
        core.make_matrix(1, 2, 0.5, 2, 0.3, -0.4),
        core.make_matrix(1, 2, 0.5, 2, 0.0, 0.0),
    ]


def default_corpus(grid=None):
    """Two decaying Gaussians; pair checks use both, single checks each."""
    grid = grid or make_grid(1024, -20.0, 20.0)
    return [
        generate("gaussian", {"sigma": 1.0}, grid),
        generate("gaussian", {"sigma": 1.5}, grid),
    ]


def run_suite(signals, matrices, identities=None, tolerances=None):
    """Run checkers over identities x matrices, never aborting on failure.

    Arguments:
        signals: corpus list; pair identities use the first two entries,
            single-signal identities run once per entry
        matrices: SaftMatrix list (empty list gives an empty report)
        identities: identity-name list, default all, executed in the
            registry order given
        tolerances: None for defaults, a single float applied to every
            identity, or a dict name -> tolerance

    Returns a list of VerificationReport in deterministic order.
    A checker error (degenerate matrix, misaligned grid) becomes a
    failing report carrying the message, except that lct-special-case
    on a matrix with offsets is recorded as skipped.
    """
    if identities is None:
        identities = list(IDENTITY_CHECKS)
    unknown = [i for i in identities if i not in IDENTITY_CHECKS]
    if unknown:
        raise SaftError("unknown identity name(s): %s" % ", ".join(unknown))
    signals = list(signals)
    if not signals:
        raise SaftError("run_suite needs at least one corpus signal")
    f = signals[0]
    g = signals[1] if len(signals) > 1 else signals[0]

    def tol_for(name):
        default = IDENTITY_CHECKS[name][2]
        if tolerances is None:
            return default
        if isinstance(tolerances, dict):
            return tolerances.get(name, default)
        return float(tolerances)

    reports = []
    for name in identities:
        arity, checker, _ = IDENTITY_CHECKS[name]
        for m in matrices:
            cases = [(f, g)] if arity == "pair" else [(s,) for s in signals]
            for args in cases:
                tol = tol_for(name)
                try:
                    reports.append(checker(*args, m, tolerance=tol))
                except OffsetError:
                    reports.append(_report(name, 0.0, tol, m, f.grid,
                                           ("skipped: matrix has offsets",)))
                except SaftError as exc:
                    reports.append(_report(name, math.inf, tol, m, f.grid,
                                           ("error: %s" % exc,)))
    return reports


# ---------------------------------------------------------------- reports

def write_report_csv(reports, path):
    """One row per report: identity,matrix,residual,tolerance,passed."""
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["identity", "matrix", "residual", "tolerance", "passed"])
            for r in reports:
                w.writerow([r.identity_name, r.matrix.text_form(),
                            "%.17g" % r.residual, "%.17g" % r.tolerance,
                            "true" if r.passed else "false"])
    except OSError as exc:
        raise IoError("cannot write %s: %s" % (path, exc)) from exc


def write_report_json(reports, path):
    """Full-metadata JSON form of the report list."""
    payload = []
    for r in reports:
        payload.append({
            "identity": r.identity_name,
            "matrix": {
                "a": r.matrix.a, "b": r.matrix.b, "c": r.matrix.c,
                "d": r.matrix.d, "p": r.matrix.p, "q": r.matrix.q,
                "text": r.matrix.text_form(),
            },
            "residual": r.residual,
            "tolerance": r.tolerance,
            "passed": r.passed,
            "grid": {"n": r.grid.n, "t_min": r.grid.t_min, "t_max": r.grid.t_max},
            "notes": list(r.notes),
        })
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        raise IoError("cannot write %s: %s" % (path, exc)) from exc
