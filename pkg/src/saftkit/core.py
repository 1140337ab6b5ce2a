"""Parameter matrices and exact scalar formulas of the special affine
Fourier transform (SAFT).

A transform is parameterized by six reals collected in an augmented
matrix ``(a, b, c, d | p, q)`` with the unimodularity constraint
``a*d - b*c = 1``.  The kernel for ``b != 0`` is

    kappa(t, w) = K * exp(-(i/(2b)) * (a t^2 + d w^2 + 2 t (p - w)
                                       - 2 w (d p - b q)))

with the real normalization K = 1/sqrt(2 pi |b|).  The forward
transform is the inner product <f, kappa(., w)> = integral f kappa* dt,
so the Fourier matrix (0, 1, -1, 0 | 0, 0) reproduces the classical
unitary Fourier transform.
"""

import dataclasses
import math

import numpy as np

from .errors import (
    DegenerateBError,
    DeterminantError,
    NonFiniteError,
    ParamError,
    UnknownPresetError,
)

DET_TOL = 1e-12


@dataclasses.dataclass(frozen=True)
class SaftMatrix:
    """Augmented SAFT parameter matrix (a, b, c, d | p, q)."""

    a: float
    b: float
    c: float
    d: float
    p: float = 0.0
    q: float = 0.0

    def __post_init__(self):
        vals = (self.a, self.b, self.c, self.d, self.p, self.q)
        if not all(math.isfinite(v) for v in vals):
            raise NonFiniteError("matrix parameters must be finite, got %r" % (vals,))
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > DET_TOL:
            raise DeterminantError(
                "a*d - b*c = %.17g, must equal 1 within %g" % (det, DET_TOL)
            )

    @property
    def has_zero_b(self):
        # exact test on purpose: the b = 0 transform is a different formula,
        # not a numerical limit, and near-zero b must stay on the b != 0 path
        return self.b == 0.0

    def text_form(self):
        """Canonical text form ``a,b,c,d;p,q`` at full precision."""
        head = ",".join("%.17g" % v for v in (self.a, self.b, self.c, self.d))
        tail = ",".join("%.17g" % v for v in (self.p, self.q))
        return head + ";" + tail


def make_matrix(a, b, c, d, p=0.0, q=0.0):
    """Validate and build a SaftMatrix from six real parameters."""
    try:
        vals = [float(v) for v in (a, b, c, d, p, q)]
    except (TypeError, ValueError) as exc:
        raise NonFiniteError("matrix parameters must be real numbers") from exc
    return SaftMatrix(*vals)


# Table of named transform families.  Each entry maps the parameter list
# to the six matrix entries.
_PRESETS = {
    "fourier": ((), lambda: (0, 1, -1, 0, 0, 0)),
    "offset-fourier": (("p", "q"), lambda p, q: (0, 1, -1, 0, p, q)),
    "frft": (("theta",), lambda th: (math.cos(th), math.sin(th),
                                     -math.sin(th), math.cos(th), 0, 0)),
    "offset-frft": (("theta", "p", "q"),
                    lambda th, p, q: (math.cos(th), math.sin(th),
                                      -math.sin(th), math.cos(th), p, q)),
    "lct": (("a", "b", "c", "d"), lambda a, b, c, d: (a, b, c, d, 0, 0)),
    "fresnel": (("b",), lambda b: (1, b, 0, 1, 0, 0)),
    "time-scale": (("alpha",), lambda al: (1.0 / al, 0, 0, al, 0, 0)),
    "time-shift": (("tau",), lambda tau: (1, 0, 0, 1, tau, 0)),
    "freq-shift": (("xi",), lambda xi: (1, 0, 0, 1, 0, xi)),
    "lens": (("tau",), lambda tau: (1, 0, tau, 1, 0, 0)),
    "free-space": (("eta",), lambda eta: (1, eta, 0, 1, 0, 0)),
    "magnify": (("beta",), lambda be: (math.exp(be), 0, 0, math.exp(-be), 0, 0)),
    "hyperbolic": (("alpha",), lambda al: (math.cosh(al), math.sinh(al),
                                           math.sinh(al), math.cosh(al), 0, 0)),
}


def preset(name, params=()):
    """Build the matrix of a named transform family.

    Arguments:
        name: one of fourier, offset-fourier, frft, offset-frft, lct,
            fresnel, time-scale, time-shift, freq-shift, lens,
            free-space, magnify, hyperbolic
        params: real parameters in the order the family expects

    Return a validated SaftMatrix.
    """
    if name not in _PRESETS:
        raise UnknownPresetError(
            "unknown preset %r; choose from %s" % (name, ", ".join(sorted(_PRESETS)))
        )
    wanted, build = _PRESETS[name]
    params = tuple(params)
    if len(params) != len(wanted):
        raise ParamError(
            "preset %r takes %d parameter(s) (%s), got %d"
            % (name, len(wanted), ", ".join(wanted) or "none", len(params))
        )
    try:
        vals = [float(v) for v in params]
    except (TypeError, ValueError) as exc:
        raise ParamError("preset parameters must be real numbers") from exc
    if name == "time-scale" and vals[0] == 0.0:
        raise ParamError("time-scale parameter alpha must be nonzero")
    return make_matrix(*build(*vals))


def parse_matrix_spec(text):
    """Parse the matrix grammar shared by the CLI and report files.

    Accepts either the explicit form ``a,b,c,d;p,q`` or a preset form
    ``name`` / ``name:param[,param...]``, e.g. ``frft:0.7853981``.
    """
    text = text.strip()
    if not text:
        raise ParamError("empty matrix spec")
    if ";" in text:
        head, _, tail = text.partition(";")
        fields = head.split(",") + tail.split(",")
        if len(fields) != 6:
            raise ParamError(
                "matrix form must be a,b,c,d;p,q (6 numbers), got %r" % text
            )
        try:
            vals = [float(v) for v in fields]
        except ValueError as exc:
            raise ParamError("bad number in matrix spec %r" % text) from exc
        return make_matrix(*vals)
    name, _, tail = text.partition(":")
    params = [v for v in tail.split(",") if v.strip()] if tail else []
    try:
        params = [float(v) for v in params]
    except ValueError as exc:
        raise ParamError("bad number in preset spec %r" % text) from exc
    return preset(name.strip(), params)


def inverse_matrix(m):
    """Matrix of the inverse transform: (d, -b, -c, a | p0, q0).

    The inverse offsets are p0 = b q - d p and q0 = c p - a q.
    """
    p0 = m.b * m.q - m.d * m.p
    q0 = m.c * m.p - m.a * m.q
    return SaftMatrix(m.d, -m.b, -m.c, m.a, p0, q0)


def half_offset_matrix(m):
    """Same (a, b, c, d) with offsets divided by sqrt(2).

    This is the companion matrix appearing on the spectral side of the
    phase-free convolution identity.
    """
    s = math.sqrt(2.0)
    return SaftMatrix(m.a, m.b, m.c, m.d, m.p / s, m.q / s)


def kernel_scale(b):
    """Kernel normalization K = 1/sqrt(2 pi |b|).

    Real for either sign of b.  This choice keeps |K|^2 * 2 pi |b| = 1
    and makes the forward/inverse pair reconstruct exactly; a complex
    branch for b < 0 would leave a residual unit phase in round trips.
    """
    if b == 0.0:
        raise DegenerateBError("kernel scale undefined for b = 0")
    return 1.0 / math.sqrt(2.0 * math.pi * abs(b))


def phase_constant_C(m):
    """Transform-dependent scalar exp((i/2)(c d p^2 + a b q^2 - 2 a d p q)).

    Unit modulus.  Provided as part of the scalar toolbox; the inverse
    transform implemented here reconstructs without it (see saft_inverse).
    """
    arg = 0.5 * (m.c * m.d * m.p ** 2 + m.a * m.b * m.q ** 2
                 - 2.0 * m.a * m.d * m.p * m.q)
    return complex(math.cos(arg), math.sin(arg))


def phase_factor_conv(m, w):
    """Spectral phase of the convolution identity.

    Phi(w) = exp(i w (d p - b q)/b) * exp(-i d w^2 / (2 b)).
    Accepts a scalar or an array of frequencies.
    """
    if m.has_zero_b:
        raise DegenerateBError("phase_factor_conv requires b != 0")
    w = np.asarray(w, dtype=float)
    arg = w * ((m.d * m.p - m.b * m.q) / m.b) - (m.d / (2.0 * m.b)) * w ** 2
    out = np.exp(1j * arg)
    return out if out.ndim else complex(out)


def phase_factor_prod(m, t):
    """Time-domain phase of the product identity.

    Phi_inv(t) = exp(i a t^2/(2 b)) * exp(-i (t/b)(a p0 + b q0)) with
    p0, q0 the inverse-matrix offsets.  Accepts scalar or array t.
    """
    if m.has_zero_b:
        raise DegenerateBError("phase_factor_prod requires b != 0")
    mi = inverse_matrix(m)
    t = np.asarray(t, dtype=float)
    arg = (m.a / (2.0 * m.b)) * t ** 2 - (t / m.b) * (m.a * mi.p + m.b * mi.q)
    out = np.exp(1j * arg)
    return out if out.ndim else complex(out)


def chirp_mod(m, t, direction):
    """Chirp modulator m_A(t) = exp(i (a/(2b)) t^2) and its conjugate.

    direction "up" returns m_A(t); "down" returns conj(m_A(t)), so the
    two directions multiply to 1 exactly.
    """
    if m.has_zero_b:
        raise DegenerateBError("chirp modulation requires b != 0")
    if direction not in ("up", "down"):
        raise ParamError("direction must be 'up' or 'down', got %r" % (direction,))
    t = np.asarray(t, dtype=float)
    up = np.exp(1j * (m.a / (2.0 * m.b)) * t ** 2)
    out = up if direction == "up" else np.conj(up)
    return out if out.ndim else complex(out)


def kernel_eval(m, t, w):
    """Evaluate the transform kernel kappa(t, w) for b != 0.

    kappa(t, w) = K * exp(-(i/(2b))(a t^2 + d w^2 + 2 t (p - w)
                                    - 2 w (d p - b q)))

    Broadcasts over array t and w.  The forward transform is
    integral f(t) conj(kappa(t, w)) dt.
    """
    if m.has_zero_b:
        raise DegenerateBError("kernel_eval requires b != 0")
    t = np.asarray(t, dtype=float)
    w = np.asarray(w, dtype=float)
    arg = (m.a * t ** 2 + m.d * w ** 2 + 2.0 * t * (m.p - w)
           - 2.0 * w * (m.d * m.p - m.b * m.q)) / (-2.0 * m.b)
    out = kernel_scale(m.b) * np.exp(1j * arg)
    return out if out.ndim else complex(out)
