"""Command-line front end.

    powerlimit analyze --input matrix.json [--format json]
    powerlimit analyze --generate substochastic --d 3 --seed 7
    powerlimit analyze --input-dir corpus/ --jobs 4
    powerlimit generate negative-entry --d 4 --seed 1 > m.json

Exit codes: 0 analysis completed, 2 bad input, 3 overflow or Inconclusive
under ``--strict``.
"""
import argparse
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .classify import ANGULAR_TOL
from .generator import Family, MatrixFamily, family_from_name, generate
from .io import MatrixFileError, dump_matrix, parse_matrix_file
from .iteration import IterationConfig, IterationOutcome
from .matrix import NORMALIZATION_TOL, ZERO_THRESHOLD
from .report import analyze, format_text

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_STRICT = 3

log = logging.getLogger("powerlimit")


def _family(name):
    try:
        return family_from_name(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser():
    parser = argparse.ArgumentParser(prog="powerlimit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="classify a matrix and iterate its powers")
    src = an.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", type=Path, help="matrix JSON file")
    src.add_argument("--generate", type=_family, metavar="FAMILY", help="analyze a generated sample")
    src.add_argument("--input-dir", type=Path, help="analyze every *.json file in a directory")
    an.add_argument("--d", type=int, default=2, help="dimension for --generate (default 2)")
    an.add_argument("--seed", type=int, default=0, help="seed for --generate (default 0)")
    an.add_argument("--min-modulus", type=float, default=0.01)
    an.add_argument("--tol", type=float, default=IterationConfig.conv_tol, help="successive-difference tolerance")
    an.add_argument("--zero-tol", type=float, default=IterationConfig.zero_tol)
    an.add_argument("--max-iter", type=int, default=IterationConfig.max_iter)
    an.add_argument("--window", type=int, default=IterationConfig.oscillation_window)
    an.add_argument("--classify-tol", type=float, default=ANGULAR_TOL, help="positive-real / angular tolerance")
    an.add_argument("--norm-tol", type=float, default=NORMALIZATION_TOL)
    an.add_argument("--format", choices=("text", "json"), default="text")
    an.add_argument("--transpose", action="store_true", help="input is row-normalized; analyze its transpose")
    an.add_argument("--strict", action="store_true", help="exit 3 on overflow or Inconclusive")
    an.add_argument("--jobs", type=int, default=1, help="parallel analyses for --input-dir")

    gen = sub.add_parser("generate", help="write a sample matrix as JSON")
    gen.add_argument("family", type=_family, help=", ".join(f.value for f in Family))
    gen.add_argument("--d", type=int, default=2)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--min-modulus", type=float, default=0.01)
    gen.add_argument("--output", type=Path, help="file to write (default stdout)")
    return parser


def _config(args):
    return IterationConfig(
        conv_tol=args.tol, zero_tol=args.zero_tol, max_iter=args.max_iter, oscillation_window=args.window
    )


def _analyze_matrix(M, args, cfg):
    if args.transpose:
        M = M.T
    report = analyze(M, cfg, classify_tol=args.classify_tol, norm_tol=args.norm_tol, zero_threshold=ZERO_THRESHOLD)
    code = EXIT_OK
    if report.overflow:
        log.warning("iterates overflowed; column modulus sums above 1?")
    if args.strict and (report.overflow or report.numeric.verdict is IterationOutcome.INCONCLUSIVE):
        code = EXIT_STRICT
    return report, code


def _analyze_file(path, args, cfg):
    try:
        M = parse_matrix_file(Path(path).read_bytes())
    except OSError as exc:
        return None, EXIT_INPUT, f"{path}: {exc.strerror or exc}"
    except MatrixFileError as exc:
        return None, EXIT_INPUT, f"{path}: {exc}"
    report, code = _analyze_matrix(M, args, cfg)
    return report, code, None


def run_analyze(args, out=None, err=None):
    """Execute ``analyze``; returns ``(reports, exit_code)``."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        cfg = _config(args)
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return [], EXIT_INPUT

    if args.input_dir is not None:
        return _run_batch(args, cfg, out, err)

    if args.generate is not None:
        try:
            M = generate(MatrixFamily(args.generate, args.d, args.min_modulus), args.seed)
        except ValueError as exc:
            print(f"error: {exc}", file=err)
            return [], EXIT_INPUT
        report, code = _analyze_matrix(M, args, cfg)
    else:
        report, code, msg = _analyze_file(args.input, args, cfg)
        if report is None:
            print(f"error: {msg}", file=err)
            return [], code

    if args.format == "json":
        print(report.to_json(indent=2), file=out)
    else:
        print(format_text(report), file=out)
    if code == EXIT_STRICT:
        print("error: numeric verdict is inconclusive (--strict)", file=err)
    return [report], code


def _run_batch(args, cfg, out, err):
    if not args.input_dir.is_dir():
        print(f"error: {args.input_dir}: not a directory", file=err)
        return [], EXIT_INPUT
    paths = sorted(args.input_dir.glob("*.json"))
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        results = list(pool.map(lambda p: _analyze_file(p, args, cfg), paths))

    worst = EXIT_OK
    entries, reports = [], []
    for path, (report, code, msg) in zip(paths, results):
        worst = max(worst, code)
        if report is None:
            print(f"error: {msg}", file=err)
            entries.append({"file": path.name, "error": msg})
            continue
        reports.append(report)
        entries.append({"file": path.name, "report": report.to_dict()})
    if args.format == "json":
        print(json.dumps(entries, indent=2, allow_nan=False), file=out)
    else:
        for entry, (report, _, _) in zip(entries, results):
            if report is not None:
                print(f"== {entry['file']}", file=out)
                print(format_text(report), file=out)
    return reports, worst


def run_generate(args, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        M = generate(MatrixFamily(args.family, args.d, args.min_modulus), args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    text = json.dumps(dump_matrix(M))
    if args.output:
        args.output.write_text(text + "\n", encoding="utf-8")
    else:
        print(text, file=out)
    return EXIT_OK


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    if args.command == "generate":
        return run_generate(args)
    return run_analyze(args)[1]


if __name__ == "__main__":
    sys.exit(main())
