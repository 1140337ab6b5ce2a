"""Command-line front end.

Subcommands:
    generate   write a corpus signal CSV
    transform  forward or inverse transform of a signal/spectrum file
    convolve   convolve two signal files with one of the three operators
    verify     run identity checkers and write a report

Exit codes: 0 success (verify: all identities passed), 1 verification
failure, 2 usage error, 3 I/O or file-format failure, 4 misuse of a
degenerate (b = 0) matrix or of its evaluation rules, 5 operand grid
mismatch.

The environment variable SAFT_KIT_THREADS (positive integer) caps the
thread count of the underlying numerical libraries; it must be applied
before they are first imported, so this module defers all heavy imports
until after the environment is configured.
"""

import argparse
import os
import re
import sys

# Values like "-20,20" (the --range grammar) start with a dash but are
# not options; widen argparse's negative-number test so they pass through.
_NEG_VALUE = re.compile(r"^-\d[\d.,eE+-]*$")

_THREAD_VARS = (
    "OMP_NUM_THREADS",
    "OPENBLAS_NUM_THREADS",
    "MKL_NUM_THREADS",
    "NUMEXPR_NUM_THREADS",
)


class _Usage(Exception):
    """Usage problem detectable only after argument parsing."""


def _configure_threads():
    raw = os.environ.get("SAFT_KIT_THREADS")
    if raw is None:
        return
    try:
        count = int(raw)
    except ValueError:
        count = 0
    if count <= 0:
        raise ValueError(
            "SAFT_KIT_THREADS must be a positive integer, got %r" % raw
        )
    for var in _THREAD_VARS:
        os.environ.setdefault(var, str(count))


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="saftkit",
        description="Special affine Fourier transform toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a test-signal CSV")
    gen.add_argument("--kind", required=True, choices=("gaussian", "chirp", "rect"))
    gen.add_argument("--sigma", type=float, help="gaussian/chirp width")
    gen.add_argument("--t0", type=float, help="gaussian center")
    gen.add_argument("--rate", type=float, help="chirp rate")
    gen.add_argument("--width", type=float, help="rect width")
    gen.add_argument("--n", type=int, default=1024, help="sample count (power of two)")
    gen.add_argument("--range", default="-20,20", metavar="LO,HI",
                     help="time window, default -20,20")
    gen.add_argument("--out", required=True, help="output signal CSV")

    tr = sub.add_parser("transform", help="forward or inverse transform a file")
    tr.add_argument("--in", dest="in_path", required=True,
                    help="input CSV (signal for --fwd, spectrum for --inv)")
    tr.add_argument("--matrix", required=True,
                    help="matrix spec: a,b,c,d;p,q or preset[:params]")
    dirgrp = tr.add_mutually_exclusive_group(required=True)
    dirgrp.add_argument("--fwd", action="store_true", help="forward transform")
    dirgrp.add_argument("--inv", action="store_true", help="inverse transform")
    tr.add_argument("--method", choices=("fast", "direct"), default="fast",
                    help="forward evaluation path (inverse is always direct)")
    tr.add_argument("--n", type=int, help="inverse output sample count")
    tr.add_argument("--range", metavar="LO,HI",
                    help="inverse output time window (default: conjugate grid)")
    tr.add_argument("--out", required=True, help="output CSV")

    conv = sub.add_parser("convolve", help="convolve two signal files")
    conv.add_argument("--in1", required=True, help="first signal CSV")
    conv.add_argument("--in2", required=True, help="second signal CSV")
    conv.add_argument("--operator", required=True,
                      choices=("saft", "phasefree", "std"))
    conv.add_argument("--matrix", help="matrix spec (saft/phasefree operators)")
    conv.add_argument("--out", required=True, help="output signal CSV")

    ver = sub.add_parser("verify", help="run identity checkers")
    ver.add_argument("--all", action="store_true", help="run every identity")
    ver.add_argument("--identity", action="append", default=[],
                     metavar="NAME", help="run one identity (repeatable)")
    ver.add_argument("--matrix", action="append", default=[], metavar="SPEC",
                     help="matrix to check (repeatable; default canonical set)")
    ver.add_argument("--n", type=int, default=1024, help="corpus grid size")
    ver.add_argument("--range", default="-20,20", metavar="LO,HI",
                     help="corpus time window")
    ver.add_argument("--tol", type=float,
                     help="override every identity tolerance")
    ver.add_argument("--report", help="write report CSV here")
    ver.add_argument("--json", dest="json_path", help="write report JSON here")

    for p in (parser, gen, tr, conv, ver):
        p._negative_number_matcher = _NEG_VALUE
    return parser


def _parse_range(text):
    from .errors import ParamError

    parts = text.split(",")
    if len(parts) != 2:
        raise ParamError("range must be LO,HI, got %r" % text)
    try:
        return float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise ParamError("bad number in range %r" % text) from exc


def _cmd_generate(args):
    from . import signal

    lo, hi = _parse_range(args.range)
    grid = signal.make_grid(args.n, lo, hi)
    params = {}
    for name in ("sigma", "t0", "rate", "width"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    f = signal.generate(args.kind, params, grid)
    signal.write_signal(f, args.out)
    return 0


def _cmd_transform(args):
    from . import core, signal, transform
    from .errors import DegenerateBError

    m = core.parse_matrix_spec(args.matrix)
    if args.fwd:
        f = signal.read_signal(args.in_path)
        if m.has_zero_b:
            if args.method == "fast":
                raise DegenerateBError(
                    "matrix has b = 0: no fast path exists; rerun with "
                    "--method direct to apply the b = 0 evaluation rules "
                    "(output sampled on the input time grid)"
                )
            spec = transform.saft_b0(f, m, f.grid.points())
        elif args.method == "fast":
            spec = transform.saft_fast(f, m)
        else:
            spec = transform.saft_direct(
                f, m, transform.conjugate_omega_grid(m, f.grid))
        signal.write_spectrum(spec, args.out)
    else:
        spec = signal.read_spectrum(args.in_path)
        if args.range is not None:
            lo, hi = _parse_range(args.range)
            grid = signal.make_grid(args.n or spec.omegas.size, lo, hi)
        else:
            grid = transform.dual_grid(spec, m, args.n)
        f = transform.saft_inverse(spec, m, grid)
        signal.write_signal(f, args.out)
    return 0


def _cmd_convolve(args):
    from . import convolve, core, signal

    f = signal.read_signal(args.in1)
    g = signal.read_signal(args.in2)
    if args.operator == "std":
        if args.matrix is not None:
            print("saftkit: warning: --operator std ignores --matrix",
                  file=sys.stderr)
        h = convolve.std_convolve(f, g)
    else:
        if args.matrix is None:
            raise _Usage("--operator %s requires --matrix" % args.operator)
        m = core.parse_matrix_spec(args.matrix)
        if args.operator == "saft":
            h = convolve.saft_convolve(f, g, m)
        else:
            h = convolve.phase_free_convolve(f, g, m)
    signal.write_signal(h, args.out)
    return 0


def _cmd_verify(args):
    from . import core, signal, verify

    if not args.all and not args.identity:
        raise _Usage("choose --all or at least one --identity NAME")
    if args.all and args.identity:
        raise _Usage("--all and --identity are mutually exclusive")
    identities = None if args.all else list(args.identity)
    lo, hi = _parse_range(args.range)
    grid = signal.make_grid(args.n, lo, hi)
    corpus = verify.default_corpus(grid)
    if args.matrix:
        matrices = [core.parse_matrix_spec(s) for s in args.matrix]
    else:
        matrices = verify.default_matrices()
    reports = verify.run_suite(corpus, matrices, identities, tolerances=args.tol)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        line = "%s %-22s %s residual=%.6e tol=%g" % (
            status, r.identity_name, r.matrix.text_form(), r.residual, r.tolerance)
        for note in r.notes:
            line += " [%s]" % note
        print(line)
    if args.report:
        verify.write_report_csv(reports, args.report)
    if args.json_path:
        verify.write_report_json(reports, args.json_path)
    return 0 if all(r.passed for r in reports) else 1


_HANDLERS = {
    "generate": _cmd_generate,
    "transform": _cmd_transform,
    "convolve": _cmd_convolve,
    "verify": _cmd_verify,
}


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _configure_threads()
    except ValueError as exc:
        print("saftkit: error: %s" % exc, file=sys.stderr)
        return 2

    from .errors import (
        DegenerateBError,
        DegenerateBranchError,
        FormatError,
        GridMismatchError,
        IoError,
        NegativeDError,
        RangeError,
        SaftError,
    )

    try:
        return _HANDLERS[args.command](args)
    except _Usage as exc:
        print("saftkit: error: %s" % exc, file=sys.stderr)
        return 2
    except GridMismatchError as exc:
        print("saftkit: error: %s" % exc, file=sys.stderr)
        return 5
    except (DegenerateBError, DegenerateBranchError, NegativeDError,
            RangeError) as exc:
        print("saftkit: error: %s" % exc, file=sys.stderr)
        return 4
    except (IoError, FormatError) as exc:
        print("saftkit: error: %s" % exc, file=sys.stderr)
        return 3
    except SaftError as exc:
        print("saftkit: error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
