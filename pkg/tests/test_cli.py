"""Command-line interface: exit codes, file flow, determinism."""

import numpy as np
import pytest

import saftkit as sk
from saftkit.cli import main
from oracles import rel_l2

FT = "0,1,-1,0;0,0"
LCT = "1,2,0.5,2;0.3,-0.4"


def _gen(tmp_path, name="f.csv", kind="gaussian", extra=("--sigma", "1")):
    out = tmp_path / name
    rc = main(["generate", "--kind", kind, *extra, "--out", str(out)])
    assert rc == 0
    return out


class TestGenerate:
    def test_writes_default_grid(self, tmp_path):
        out = _gen(tmp_path)
        f = sk.read_signal(out)
        assert f.grid.n == 1024
        assert f.grid.t_min == -20.0

    def test_custom_grid_and_kind(self, tmp_path):
        out = tmp_path / "c.csv"
        rc = main(["generate", "--kind", "chirp", "--rate", "0.8",
                   "--sigma", "1.5", "--n", "512", "--range", "-10,10",
                   "--out", str(out)])
        assert rc == 0
        f = sk.read_signal(out)
        assert f.grid.n == 512
        g = sk.generate("chirp", {"rate": 0.8, "sigma": 1.5},
                        sk.make_grid(512, -10, 10))
        np.testing.assert_array_equal(f.values, g.values)

    def test_bad_kind_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["generate", "--kind", "wavelet", "--out",
                  str(tmp_path / "x.csv")])
        assert exc.value.code == 2

    def test_bad_param_exits_2(self, tmp_path, capsys):
        rc = main(["generate", "--kind", "gaussian", "--sigma", "0",
                   "--out", str(tmp_path / "x.csv")])
        assert rc == 2
        assert "error" in capsys.readouterr().err

    def test_unwritable_path_exits_3(self, tmp_path):
        rc = main(["generate", "--kind", "gaussian", "--sigma", "1",
                   "--out", str(tmp_path / "no" / "dir" / "x.csv")])
        assert rc == 3

    def test_byte_deterministic(self, tmp_path):
        a = _gen(tmp_path, "a.csv")
        b = _gen(tmp_path, "b.csv")
        assert a.read_bytes() == b.read_bytes()


class TestTransform:
    def test_forward_fast_matches_library(self, tmp_path, gauss1):
        src = _gen(tmp_path)
        out = tmp_path / "F.csv"
        rc = main(["transform", "--in", str(src), "--matrix", FT,
                   "--fwd", "--method", "fast", "--out", str(out)])
        assert rc == 0
        got = sk.read_spectrum(out)
        want = sk.saft_fast(gauss1, sk.preset("fourier"))
        np.testing.assert_array_equal(got.values, want.values)

    def test_direct_method_agrees_with_fast(self, tmp_path):
        src = _gen(tmp_path)
        fast, direct = tmp_path / "fast.csv", tmp_path / "direct.csv"
        assert main(["transform", "--in", str(src), "--matrix", LCT,
                     "--fwd", "--out", str(fast)]) == 0
        assert main(["transform", "--in", str(src), "--matrix", LCT,
                     "--fwd", "--method", "direct", "--out", str(direct)]) == 0
        a, b = sk.read_spectrum(fast), sk.read_spectrum(direct)
        assert rel_l2(a.values, b.values) < 1e-10

    def test_preset_spec_accepted(self, tmp_path):
        src = _gen(tmp_path)
        rc = main(["transform", "--in", str(src), "--matrix",
                   "frft:0.7853981", "--fwd", "--out", str(tmp_path / "F.csv")])
        assert rc == 0

    def test_round_trip_through_files(self, tmp_path, gauss1):
        src = _gen(tmp_path)
        spec, back = tmp_path / "F.csv", tmp_path / "back.csv"
        assert main(["transform", "--in", str(src), "--matrix", LCT,
                     "--fwd", "--out", str(spec)]) == 0
        assert main(["transform", "--in", str(spec), "--matrix", LCT,
                     "--inv", "--range", "-20,20", "--n", "1024",
                     "--out", str(back)]) == 0
        f = sk.read_signal(back)
        assert rel_l2(f.values, gauss1.values) < 1e-6

    def test_inverse_default_grid_is_conjugate(self, tmp_path, gauss1):
        src = _gen(tmp_path)
        spec, back = tmp_path / "F.csv", tmp_path / "back.csv"
        assert main(["transform", "--in", str(src), "--matrix", LCT,
                     "--fwd", "--out", str(spec)]) == 0
        assert main(["transform", "--in", str(spec), "--matrix", LCT,
                     "--inv", "--out", str(back)]) == 0
        f = sk.read_signal(back)
        assert f.grid.n == 1024
        assert abs(f.grid.t_min - (-20.0)) < 1e-9
        assert rel_l2(f.values, gauss1.values) < 1e-6

    def test_zero_b_fast_exits_4_with_hint(self, tmp_path, capsys):
        src = _gen(tmp_path)
        rc = main(["transform", "--in", str(src), "--matrix", "1,0,0,1;0,0",
                   "--fwd", "--out", str(tmp_path / "F.csv")])
        assert rc == 4
        assert "--method direct" in capsys.readouterr().err

    def test_zero_b_direct_identity(self, tmp_path, gauss1):
        src = _gen(tmp_path)
        out = tmp_path / "F.csv"
        rc = main(["transform", "--in", str(src), "--matrix", "1,0,0,1;0,0",
                   "--fwd", "--method", "direct", "--out", str(out)])
        assert rc == 0
        got = sk.read_spectrum(out)
        assert np.max(np.abs(got.values - gauss1.values)) < 1e-9

    def test_missing_input_exits_3(self, tmp_path):
        rc = main(["transform", "--in", str(tmp_path / "nope.csv"),
                   "--matrix", FT, "--fwd", "--out", str(tmp_path / "F.csv")])
        assert rc == 3

    def test_bad_matrix_spec_exits_2(self, tmp_path):
        src = _gen(tmp_path)
        rc = main(["transform", "--in", str(src), "--matrix", "1,2,3",
                   "--fwd", "--out", str(tmp_path / "F.csv")])
        assert rc == 2


class TestConvolve:
    def test_std_operator(self, tmp_path, gauss1, gauss15):
        f = _gen(tmp_path, "f.csv")
        g = _gen(tmp_path, "g.csv", extra=("--sigma", "1.5"))
        out = tmp_path / "h.csv"
        rc = main(["convolve", "--in1", str(f), "--in2", str(g),
                   "--operator", "std", "--out", str(out)])
        assert rc == 0
        got = sk.read_signal(out)
        want = sk.std_convolve(gauss1, gauss15)
        np.testing.assert_array_equal(got.values, want.values)

    def test_std_ignores_matrix_with_warning(self, tmp_path, capsys):
        f = _gen(tmp_path, "f.csv")
        rc = main(["convolve", "--in1", str(f), "--in2", str(f),
                   "--operator", "std", "--matrix", FT,
                   "--out", str(tmp_path / "h.csv")])
        assert rc == 0
        assert "ignores" in capsys.readouterr().err

    def test_saft_operator_matches_library(self, tmp_path, gauss1, gauss15,
                                           offset_lct):
        f = _gen(tmp_path, "f.csv")
        g = _gen(tmp_path, "g.csv", extra=("--sigma", "1.5"))
        out = tmp_path / "h.csv"
        rc = main(["convolve", "--in1", str(f), "--in2", str(g),
                   "--operator", "saft", "--matrix", LCT, "--out", str(out)])
        assert rc == 0
        got = sk.read_signal(out)
        want = sk.saft_convolve(gauss1, gauss15, offset_lct)
        np.testing.assert_array_equal(got.values, want.values)

    def test_phasefree_without_matrix_exits_2(self, tmp_path):
        f = _gen(tmp_path, "f.csv")
        rc = main(["convolve", "--in1", str(f), "--in2", str(f),
                   "--operator", "phasefree", "--out", str(tmp_path / "h.csv")])
        assert rc == 2

    def test_mismatched_grids_exit_5(self, tmp_path):
        f = _gen(tmp_path, "f.csv")
        out512 = tmp_path / "g.csv"
        assert main(["generate", "--kind", "gaussian", "--sigma", "1",
                     "--n", "512", "--out", str(out512)]) == 0
        rc = main(["convolve", "--in1", str(f), "--in2", str(out512),
                   "--operator", "std", "--out", str(tmp_path / "h.csv")])
        assert rc == 5


class TestVerify:
    def test_single_identity_pass(self, tmp_path, capsys):
        rc = main(["verify", "--identity", "unitarity", "--matrix", LCT])
        assert rc == 0
        out = capsys.readouterr().out
        assert "PASS unitarity" in out
        assert "residual=" in out

    def test_strict_tolerance_fails(self, capsys):
        rc = main(["verify", "--identity", "inverse-roundtrip",
                   "--matrix", LCT, "--tol", "1e-15"])
        assert rc == 1
        assert "FAIL" in capsys.readouterr().out

    def test_all_and_identity_conflict(self):
        rc = main(["verify", "--all", "--identity", "unitarity"])
        assert rc == 2

    def test_neither_all_nor_identity(self):
        rc = main(["verify"])
        assert rc == 2

    def test_unknown_identity_exits_2(self):
        rc = main(["verify", "--identity", "bogus", "--matrix", LCT])
        assert rc == 2

    def test_report_files_written(self, tmp_path):
        csv_path = tmp_path / "r.csv"
        json_path = tmp_path / "r.json"
        rc = main(["verify", "--identity", "unitarity", "--identity",
                   "inverse-roundtrip", "--matrix", LCT,
                   "--report", str(csv_path), "--json", str(json_path)])
        assert rc == 0
        header = csv_path.read_text(encoding="utf-8").splitlines()[0]
        assert header == "identity,matrix,residual,tolerance,passed"
        assert json_path.read_text(encoding="utf-8").startswith("[")

    def test_report_byte_deterministic(self, tmp_path):
        p1, p2 = tmp_path / "r1.csv", tmp_path / "r2.csv"
        for p in (p1, p2):
            rc = main(["verify", "--identity", "unitarity", "--matrix", LCT,
                       "--report", str(p)])
            assert rc == 0
        assert p1.read_bytes() == p2.read_bytes()


class TestThreadConfig:
    def test_invalid_count_exits_2(self, monkeypatch, capsys):
        monkeypatch.setenv("SAFT_KIT_THREADS", "zero")
        rc = main(["verify", "--identity", "unitarity", "--matrix", FT])
        assert rc == 2
        assert "SAFT_KIT_THREADS" in capsys.readouterr().err

    def test_negative_count_exits_2(self, monkeypatch):
        monkeypatch.setenv("SAFT_KIT_THREADS", "-3")
        assert main(["verify", "--identity", "unitarity",
                     "--matrix", FT]) == 2

    def test_valid_count_exports_library_caps(self, monkeypatch):
        monkeypatch.setenv("SAFT_KIT_THREADS", "2")
        for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS",
                    "MKL_NUM_THREADS", "NUMEXPR_NUM_THREADS"):
            monkeypatch.delenv(var, raising=False)
        import os
        rc = main(["verify", "--identity", "unitarity", "--matrix", LCT])
        assert rc == 0
        assert os.environ["OMP_NUM_THREADS"] == "2"
