"""Numerical toolkit for the special affine Fourier transform.

Forward and inverse transforms (direct quadrature, chirp-FFT fast path,
and the degenerate b = 0 branch), transform-adapted convolution
operators, and a verification engine that certifies the convolution and
product identities to quantified tolerances.
"""

from .core import (
    SaftMatrix,
    chirp_mod,
    half_offset_matrix,
    inverse_matrix,
    kernel_eval,
    kernel_scale,
    make_matrix,
    parse_matrix_spec,
    phase_constant_C,
    phase_factor_conv,
    phase_factor_prod,
    preset,
)
from .convolve import (
    phase_free_convolve,
    product_modulated,
    saft_convolve,
    spectral_convolve_inv,
    std_convolve,
    xiang_qin_product_rhs,
)
from .signal import (
    GridSpec,
    SampledSignal,
    Spectrum,
    apply_chirp,
    generate,
    l2_norm,
    make_grid,
    read_signal,
    read_spectrum,
    resample_at,
    spectrum_l2_norm,
    write_signal,
    write_spectrum,
)
from .transform import (
    conjugate_omega_grid,
    dual_grid,
    saft_b0,
    saft_direct,
    saft_fast,
    saft_inverse,
)
from .verify import (
    VerificationReport,
    check_convolution_theorem,
    check_inverse_roundtrip,
    check_lct_special_case,
    check_phase_free_theorem,
    check_product_theorem,
    check_unitarity,
    check_xiang_qin,
    default_corpus,
    default_matrices,
    run_suite,
    write_report_csv,
    write_report_json,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "SaftMatrix",
    "GridSpec",
    "SampledSignal",
    "Spectrum",
    "VerificationReport",
    "errors",
    "make_matrix",
    "preset",
    "parse_matrix_spec",
    "inverse_matrix",
    "half_offset_matrix",
    "phase_constant_C",
    "phase_factor_conv",
    "phase_factor_prod",
    "chirp_mod",
    "kernel_eval",
    "kernel_scale",
    "make_grid",
    "generate",
    "apply_chirp",
    "l2_norm",
    "spectrum_l2_norm",
    "read_signal",
    "read_spectrum",
    "write_signal",
    "write_spectrum",
    "resample_at",
    "conjugate_omega_grid",
    "dual_grid",
    "saft_direct",
    "saft_fast",
    "saft_inverse",
    "saft_b0",
    "std_convolve",
    "saft_convolve",
    "phase_free_convolve",
    "spectral_convolve_inv",
    "product_modulated",
    "xiang_qin_product_rhs",
    "check_convolution_theorem",
    "check_product_theorem",
    "check_phase_free_theorem",
    "check_lct_special_case",
    "check_inverse_roundtrip",
    "check_unitarity",
    "check_xiang_qin",
    "run_suite",
    "default_corpus",
    "default_matrices",
    "write_report_csv",
    "write_report_json",
    "__version__",
]
