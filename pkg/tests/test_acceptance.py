"""Acceptance suite: one test per release criterion.

Each test prints one line with the measured residuals and the tolerance
it is held to, then asserts.  Criteria cover oracle equivalence of the
fast path, reduction to the classical Fourier transform, inverse
round-trips, unitarity over random matrices, the three convolution and
product identities, the comparison product formula, the degenerate
b = 0 branch, and CLI pipeline determinism.
"""

import math
import time

import numpy as np

import saftkit as sk
from saftkit.cli import main
from oracles import brute_fourier, rel_l2

GRID = sk.make_grid(1024, -20.0, 20.0)

# canonical matrix set: Fourier, quarter rotation, Fresnel, an offset
# general matrix, and its offset-free companion
MATRICES = [
    sk.preset("fourier"),
    sk.preset("frft", [math.pi / 4.0]),
    sk.preset("fresnel", [2.0]),
    sk.make_matrix(1, 2, 0.5, 2, 0.3, -0.4),
    sk.make_matrix(1, 2, 0.5, 2, 0.0, 0.0),
]

CORPUS = [
    sk.generate("gaussian", {"sigma": 1.0}, GRID),
    sk.generate("chirp", {"rate": 0.8, "sigma": 1.5}, GRID),
    sk.generate("rect", {"width": 4.0}, GRID),
]


def test_criterion_01_oracle_equivalence():
    """Fast path matches the direct quadrature oracle, 3 signals x 5
    matrices at n = 1024, within the wall-clock budget."""
    start = time.perf_counter()
    worst = 0.0
    for f in CORPUS:
        for m in MATRICES:
            fast = sk.saft_fast(f, m)
            slow = sk.saft_direct(f, m, fast.omegas)
            worst = max(worst, rel_l2(fast.values, slow.values))
    elapsed = time.perf_counter() - start
    print("criterion 01 oracle-equivalence: worst residual %.3e "
          "(tol 1e-10), %.2f s (budget 10 s)" % (worst, elapsed))
    assert worst <= 1e-10
    assert elapsed < 10.0


def test_criterion_02_fourier_reduction():
    """The Fourier-matrix transform reproduces the classical unitary
    Fourier integral."""
    m = sk.preset("fourier")
    worst = 0.0
    for f in CORPUS:
        got = sk.saft_fast(f, m)
        want = brute_fourier(f.values, GRID.points(), got.omegas)
        worst = max(worst, rel_l2(got.values, want))
    print("criterion 02 fourier-reduction: worst residual %.3e (tol 1e-6)"
          % worst)
    assert worst <= 1e-6


def test_criterion_03_inverse_roundtrip():
    """inverse(forward(f)) returns f for every corpus signal and matrix."""
    worst = 0.0
    for f in CORPUS:
        for m in MATRICES:
            back = sk.saft_inverse(sk.saft_fast(f, m), m, GRID)
            worst = max(worst, rel_l2(back.values, f.values))
    print("criterion 03 inverse-roundtrip: worst residual %.3e (tol 1e-6)"
          % worst)
    assert worst <= 1e-6


def test_criterion_04_unitarity_random_matrices():
    """Norm preservation over 20 seeded random unimodular matrices with
    b in [0.5, 4] and offsets in [-1, 1]."""
    rng = np.random.default_rng(20260814)
    gaussians = [CORPUS[0], sk.generate("gaussian", {"sigma": 1.5}, GRID)]
    worst = 0.0
    for _ in range(20):
        b = rng.uniform(0.5, 4.0)
        a = rng.uniform(-2.0, 2.0)
        d = rng.uniform(-2.0, 2.0)
        c = (a * d - 1.0) / b
        p, q = rng.uniform(-1.0, 1.0, size=2)
        m = sk.make_matrix(a, b, c, d, p, q)
        for f in gaussians:
            spec = sk.saft_fast(f, m)
            fn = sk.l2_norm(f)
            worst = max(worst, abs(sk.spectrum_l2_norm(spec) - fn) / fn)
    print("criterion 04 unitarity: worst residual %.3e (tol 1e-6)" % worst)
    assert worst <= 1e-6


def test_criterion_05_convolution_theorem():
    """Adapted convolution factors into phase times spectra product;
    the Fourier matrix case is held to the classical tolerance."""
    f, g = CORPUS[0], sk.generate("gaussian", {"sigma": 1.5}, GRID)
    worst = 0.0
    for m in MATRICES:
        r = sk.check_convolution_theorem(f, g, m)
        worst = max(worst, r.residual)
        assert r.residual <= 1e-4, m.text_form()
    fourier = sk.check_convolution_theorem(f, g, sk.preset("fourier"))
    print("criterion 05 convolution-theorem: worst residual %.3e "
          "(tol 1e-4), fourier %.3e (tol 1e-6)" % (worst, fourier.residual))
    assert fourier.residual <= 1e-6


def test_criterion_06_product_theorem():
    """Phased product maps to the spectral companion convolution."""
    f, g = CORPUS[0], sk.generate("gaussian", {"sigma": 1.5}, GRID)
    worst = 0.0
    for m in MATRICES:
        r = sk.check_product_theorem(f, g, m)
        worst = max(worst, r.residual)
    print("criterion 06 product-theorem: worst residual %.3e (tol 1e-4)"
          % worst)
    assert worst <= 1e-4


def test_criterion_07_phase_free_and_lct_special():
    """Phase-free identity on all matrices; the offset-free checker
    agrees with it to 1e-10 where both apply."""
    f, g = CORPUS[0], sk.generate("gaussian", {"sigma": 1.5}, GRID)
    worst = 0.0
    worst_gap = 0.0
    for m in MATRICES:
        r = sk.check_phase_free_theorem(f, g, m)
        worst = max(worst, r.residual)
        if m.p == 0.0 and m.q == 0.0:
            s = sk.check_lct_special_case(f, g, m)
            assert s.residual <= 1e-4
            worst_gap = max(worst_gap, abs(s.residual - r.residual))
    print("criterion 07 phase-free: worst residual %.3e (tol 1e-4), "
          "checker gap %.3e (tol 1e-10)" % (worst, worst_gap))
    assert worst <= 1e-4
    assert worst_gap <= 1e-10


def test_criterion_08_xiang_qin_comparison():
    """Product spectrum matches the classical-Fourier comparison form."""
    f, g = CORPUS[0], sk.generate("gaussian", {"sigma": 1.5}, GRID)
    residuals = []
    for m in (sk.make_matrix(1, 2, 0.5, 2, 0.0, 0.0), sk.preset("fourier")):
        r = sk.check_xiang_qin(f, g, m)
        residuals.append(r.residual)
    print("criterion 08 xiang-qin: residuals %.3e / %.3e (tol 1e-3)"
          % tuple(residuals))
    assert max(residuals) <= 1e-3


def test_criterion_09_degenerate_branch():
    """b = 0 branch: the identity matrix reproduces the input and the
    time-shift preset translates magnitudes."""
    f = CORPUS[0]
    ident = sk.saft_b0(f, sk.make_matrix(1, 0, 0, 1), GRID.points())
    ident_err = float(np.max(np.abs(ident.values - f.values)))

    tau = 2.0
    omegas = GRID.points()[: GRID.n - 64] + tau  # node-aligned arguments
    shifted = sk.saft_b0(f, sk.preset("time-shift", [tau]), omegas)
    want = np.exp(-((omegas - tau) ** 2) / 2.0)
    shift_err = float(np.max(np.abs(np.abs(shifted.values) - want)))
    print("criterion 09 degenerate-branch: identity %.3e (tol 1e-9), "
          "time-shift magnitude %.3e (tol 1e-9)" % (ident_err, shift_err))
    assert ident_err <= 1e-9
    assert shift_err <= 1e-9


def test_criterion_10_cli_pipeline_determinism(tmp_path):
    """generate -> transform -> verify exits 0 twice and produces
    byte-identical CSVs across runs."""
    lct = "1,2,0.5,2;0.3,-0.4"

    def run(base):
        base.mkdir()
        f = base / "f.csv"
        spec = base / "F.csv"
        back = base / "back.csv"
        report = base / "report.csv"
        assert main(["generate", "--kind", "gaussian", "--sigma", "1",
                     "--out", str(f)]) == 0
        assert main(["transform", "--in", str(f), "--matrix", lct,
                     "--fwd", "--method", "fast", "--out", str(spec)]) == 0
        assert main(["transform", "--in", str(spec), "--matrix", lct,
                     "--inv", "--out", str(back)]) == 0
        assert main(["verify", "--all", "--matrix", lct,
                     "--report", str(report)]) == 0
        return [p.read_bytes() for p in (f, spec, back, report)]

    first = run(tmp_path / "run1")
    second = run(tmp_path / "run2")
    same = [a == b for a, b in zip(first, second)]
    print("criterion 10 cli-pipeline: exit codes 0, byte-identical "
          "outputs %s" % same)
    assert all(same)
