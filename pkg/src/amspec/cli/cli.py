#!/usr/bin/env python3
"""
amspec command-line interface

Subcommands compute spectra, butterfly datasets, thickness, Minkowski sums,
Gap Lemma verdicts, IDS curves, gap labels, Diophantine constants and the
sum-of-spectra experiment. Machine output goes to files only; the console
gets a short summary.

Frequency grammar (--freq):
    p/q                       rational, e.g. 8/13
    [a0;a1,...,(b1,...,bk)]   periodic continued fraction, e.g. "[0;(1)]" for the golden mean
    0.61803398874989484820    decimal string (last digit uncertain by ±1/2)
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from ..amo.bloch import bloch_oracle
from ..amo.butterfly import butterfly, butterfly_frame
from ..amo.spectrum import SpectrumResult, spectrum_fixed_phase, spectrum_for
from ..amo.transfer import AmoParams
from ..bounds.calculators import perturbation_bounds
from ..dioph.continued import convergent_at
from ..dioph.diophantine import PLAIN, TWO_PI, dc_constants
from ..dioph.frequency import FrequencySpec, parse_frequency
from ..errors import AmspecError, FrequencyParseError, ValidationError
from ..gaplemma.checker import check_newhouse
from ..gaplemma.oracle import verify_prediction
from ..ids.counting import ids_curve
from ..ids.labeling import label_gaps
from ..pipeline.experiment import DEFAULT_APPROX_ORDER, run_main_theorem
from ..pipeline.reporter import save_report
from ..pipeline.threshold import find_threshold
from ..sets.interval import IntervalUnion, hausdorff_distance, is_interval, iterated_sum
from ..sets.thickness import thickness
from ..utils.config import RunConfig
from ..utils.constants import DEFAULT_EDGE_TOL, DEFAULT_N_MAX, DEFAULT_PHASE_AVG, SCHEMA_VERSION
from ..utils.io import write_csv, write_json
from ..utils.logger import setup_logging
from .config_loader import load_config, serialize_config

FORMATS = ("json", "csv")


def frequency_arg(text: str) -> FrequencySpec:
    """argparse type for --freq; malformed input is a usage error (exit 2)."""
    try:
        return parse_frequency(text)
    except FrequencyParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


# === Output helpers ===
def _target(args, run: RunConfig) -> Path:
    if args.output:
        return Path(args.output)
    return run.ensure_output_folder() / f"{args.command}.{args.format}"


def _emit(args, run: RunConfig, payload: Dict[str, Any],
          frame: Optional[pd.DataFrame] = None) -> Path:
    target = _target(args, run)
    if args.format == "csv":
        if frame is None:
            raise ValidationError(f"'{args.command}' has no CSV form; use --format json", key="format")
        write_csv(target, frame)
    else:
        write_json(target, payload)
    print(f"📂 Results saved to: {target}")
    return target


def _spectra_from_args(args, run: RunConfig) -> List[SpectrumResult]:
    lambdas = args.lam
    freqs = args.freq
    if len(freqs) == 1:
        freqs = freqs * len(lambdas)
    if len(freqs) != len(lambdas):
        raise ValidationError(f"{len(lambdas)} couplings but {len(freqs)} frequencies", key="freq")
    return [spectrum_for(lam, spec, args.order, run.edge_tol, run.gap_close_tol(lam, args.gap_close_tol))
            for lam, spec in zip(lambdas, freqs)]


def _unions_from_args(args, run: RunConfig) -> List[IntervalUnion]:
    if args.union:
        unions = []
        for path in args.union:
            with open(path, encoding="utf-8") as f:
                unions.append(IntervalUnion.from_dict(json.load(f)))
        return unions
    if not args.lam or not args.freq:
        raise ValidationError("give --union files or --lambda with --freq", key="union")
    return [s.union for s in _spectra_from_args(args, run)]


def _parts_frame(union: IntervalUnion) -> pd.DataFrame:
    return pd.DataFrame([{"band_index": i, "lo": float(p.lo), "hi": float(p.hi)}
                         for i, p in enumerate(union)], columns=["band_index", "lo", "hi"])


# === Subcommands ===
def spectrum_command(args, run: RunConfig) -> None:
    spec = args.freq[0]
    lam = args.lam[0]
    if 0 < args.bloch < 8:
        raise ValidationError("--bloch grid must have at least 8 points", key="bloch")
    gap_close_tol = run.gap_close_tol(lam, args.gap_close_tol)
    if args.phase is not None:
        freq = spec.rational if spec.is_rational else convergent_at(spec, args.order)[0]
        result = spectrum_fixed_phase(lam, freq, args.phase, run.edge_tol, gap_close_tol)
        result.frequency = str(spec)
    else:
        result = spectrum_for(lam, spec, args.order, run.edge_tol, gap_close_tol)
    payload = result.to_dict()
    dist_bound, diam_bound = perturbation_bounds(lam)
    payload["perturbation_bounds"] = {"hausdorff_to_free": dist_bound, "diam_deviation": diam_bound}
    if args.bloch:
        oracle = bloch_oracle(lam, result.params.freq, args.bloch, args.bloch, run.threads,
                              phase=args.phase)
        payload["bloch_oracle"] = {"grid": args.bloch, "parts": oracle.pairs(),
                                   "hausdorff": float(hausdorff_distance(result.union, oracle))}
    _emit(args, run, payload, _parts_frame(result.union))
    print(f"✅ Spectrum λ={lam}, α={spec}: {len(result.union)} bands "
          f"in [{float(result.union.lo):.10g}, {float(result.union.hi):.10g}]")


def butterfly_command(args, run: RunConfig) -> None:
    gap_close_tol = run.gap_close_tol(args.lam[0], args.gap_close_tol)
    rows = butterfly(args.lam[0], args.qmax, run.edge_tol, gap_close_tol, run.threads)
    frame = butterfly_frame(rows)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "lambda": args.lam[0],
        "q_max": args.qmax,
        "edge_tol": run.edge_tol,
        "gap_close_tol": gap_close_tol,
        "rows": [{"p": f.p, "q": f.q, "parts": u.pairs()} for f, u in rows],
    }
    _emit(args, run, payload, frame)
    print(f"✅ Butterfly λ={args.lam[0]}: {len(rows)} frequencies, {len(frame)} bands")


def thickness_command(args, run: RunConfig) -> None:
    union = _unions_from_args(args, run)[0]
    report = thickness(union)
    payload = {"schema_version": SCHEMA_VERSION, "union": union.to_dict(), **report.to_dict()}
    frame = pd.DataFrame([g.to_dict() for g in report.gaps])
    _emit(args, run, payload, frame)
    print(f"✅ τ = {report.tau}, Γ = {report.gamma}, {len(report.gaps)} bounded gaps")


def sum_command(args, run: RunConfig) -> None:
    unions = _unions_from_args(args, run)
    total = iterated_sum(unions)
    report = thickness(total)
    payload = {"schema_version": SCHEMA_VERSION,
               "summands": [u.to_dict() for u in unions],
               "sum": total.to_dict(), "is_interval": is_interval(total),
               "thickness": report.to_dict(with_gaps=False)}
    _emit(args, run, payload, _parts_frame(total))
    glyph = "✅" if is_interval(total) else "❌"
    print(f"{glyph} Sum of {len(unions)} sets has {len(total)} part(s)")


def check_command(args, run: RunConfig) -> None:
    unions = _unions_from_args(args, run)
    verdict = None
    if args.lemma == "newhouse":
        if len(unions) != 2:
            raise ValidationError("the Newhouse check takes exactly 2 sets", key="lemma")
        verdict = check_newhouse(*unions)
    check = verify_prediction(unions, search_orderings=args.search_orderings, verdict=verdict)
    payload = {"schema_version": SCHEMA_VERSION, **check.to_dict()}
    _emit(args, run, payload)
    print(f"{'✅' if check.ok else '❌'} {check.verdict.kind} verdict: {check.status}, "
          f"S = {float(check.verdict.astels_sum):.6g}, oracle parts = {len(check.oracle)}")


def _grid(text: str) -> np.ndarray:
    lo, hi, n = text.split(":")
    return np.linspace(float(lo), float(hi), int(n))


def ids_command(args, run: RunConfig) -> None:
    params = AmoParams(args.lam[0], args.freq[0], args.phase or 0.0)
    H = 2.0 + 2.0 * abs(params.lam)
    grid = _grid(args.grid) if args.grid else np.linspace(-H - 0.5, H + 0.5, 401)
    curve = ids_curve(params, args.N, grid, args.phase_avg)
    payload = {"schema_version": SCHEMA_VERSION, **curve.to_dict()}
    _emit(args, run, payload, curve.to_frame())
    print(f"✅ IDS λ={params.lam}, α={args.freq[0]}: N={args.N}, {len(grid)} points")


def label_command(args, run: RunConfig) -> None:
    spec = args.freq[0]
    lam = args.lam[0]
    result = spectrum_for(lam, spec, args.order, run.edge_tol, run.gap_close_tol(lam, args.gap_close_tol))
    curve = ids_curve(AmoParams(lam, spec), args.N, [], args.phase_avg)
    labels = label_gaps(result, curve, args.n_max, args.tol)
    payload = {"schema_version": SCHEMA_VERSION, "spectrum": result.to_dict(),
               "volume": args.N, "phase_avg": args.phase_avg, "n_max": args.n_max,
               "tol": args.tol, "labels": [a.to_dict() for a in labels]}
    frame = pd.DataFrame([{"gap_index": a.gap_index, "lo": float(a.gap.lo), "hi": float(a.gap.hi),
                           "label_n": a.label_n, "ids_value": a.ids_value, "residual": a.residual,
                           "curve_value": a.curve_value}
                          for a in labels])
    _emit(args, run, payload, frame)
    print(f"✅ {sum(a.labeled for a in labels)}/{len(labels)} gaps labeled")


def dc_command(args, run: RunConfig) -> None:
    report = dc_constants(args.freq[0], args.t, args.qmax, args.normalization)
    payload = {"schema_version": SCHEMA_VERSION, **report.to_dict()}
    frame = pd.DataFrame(report.convergent_profile, columns=["q", "value"])
    _emit(args, run, payload, frame)
    print(f"✅ c_best = {report.c_best:.9g} at q = {report.argmin_q}")


def pipeline_command(args, run: RunConfig) -> None:
    config = load_config(args.config)
    report = run_main_theorem(config, threads=args.threads)
    out_dir = args.output or run.output_folder
    paths = save_report(report, out_dir, stem="experiment")
    n_interval = sum(1 for r in report.records if r.is_interval)
    print(f"✅ {len(report.records)} coupling tuples, {n_interval} interval sums, "
          f"threshold = {report.empirical_threshold}")
    print(f"📂 Results saved to: {paths['json']}, {paths['csv']}")


def threshold_command(args, run: RunConfig) -> None:
    config = load_config(args.config)
    result = find_threshold(config, args.steps)
    payload = {"schema_version": SCHEMA_VERSION, "config": serialize_config(config), **result.to_dict()}
    frame = pd.DataFrame(result.samples, columns=["lambda", "is_interval"])
    _emit(args, run, payload, frame)
    print(f"{'✅' if result.monotone else '⚠️'} λ* ≈ {result.value:.6g} at order {result.order}")


# === Parser ===
def _common_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--output', '-o', default=None,
                        help='Output file (pipeline: folder); default $AMSPEC_OUTPUT_DIR/<command>.<format>')
    parent.add_argument('--format', choices=FORMATS, default='json', help='Output format (default: json)')
    parent.add_argument('--threads', type=int, default=None, help='Worker threads (default: $AMSPEC_THREADS or 1)')
    parent.add_argument('--log-level', default=None, help='DEBUG, INFO, WARNING or ERROR')
    return parent


def _spectrum_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--lambda', dest='lam', type=float, nargs='+', default=[], help='Coupling(s) λ')
    parent.add_argument('--freq', type=frequency_arg, nargs='+', default=[], help='Frequency (see grammar above)')
    parent.add_argument('--order', type=int, default=DEFAULT_APPROX_ORDER,
                        help=f'Convergent index for irrational frequencies (default: {DEFAULT_APPROX_ORDER})')
    parent.add_argument('--edge-tol', type=float, default=None, help=f'Band-edge tolerance (default: {DEFAULT_EDGE_TOL})')
    parent.add_argument('--gap-close-tol', type=float, default=None,
                        help='Merge gaps narrower than this (default: 1e-9·(4+4|λ|))')
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Almost Mathieu spectra, thickness and sums of Cantor spectra",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Free spectrum at a rational frequency
  python -m amspec spectrum --lambda 0 --freq 1/5

  # Golden-mean Diophantine constant
  python -m amspec dc --freq "[0;(1)]" --t 2 --qmax 1000

  # Sum-of-spectra experiment
  python -m amspec pipeline --config experiment.json -o results/
        """)
    common = _common_parent()
    spectral = _spectrum_parent()
    sub = parser.add_subparsers(dest='command', help='Available commands')

    p = sub.add_parser('spectrum', parents=[common, spectral], help='Spectrum at one coupling')
    p.add_argument('--phase', type=float, default=None, help='Fixed phase ω (default: union over ω)')
    p.add_argument('--bloch', type=int, default=0, help='Also run the Bloch oracle on an N×N grid')
    p.set_defaults(func=spectrum_command)

    p = sub.add_parser('butterfly', parents=[common, spectral], help='Butterfly dataset up to q_max')
    p.add_argument('--qmax', type=int, required=True)
    p.set_defaults(func=butterfly_command)

    for name, func, help_text in (('thickness', thickness_command, 'Thickness of one set'),
                                  ('sum', sum_command, 'Exact Minkowski sum')):
        p = sub.add_parser(name, parents=[common, spectral], help=help_text)
        p.add_argument('--union', nargs='+', default=[], help='JSON files {"parts": [[lo, hi], ...]}')
        p.set_defaults(func=func)

    p = sub.add_parser('check', parents=[common, spectral], help='Gap Lemma verdict with oracle')
    p.add_argument('--union', nargs='+', default=[], help='JSON files {"parts": [[lo, hi], ...]}')
    p.add_argument('--lemma', choices=('astels', 'newhouse'), default='astels')
    p.add_argument('--search-orderings', action='store_true')
    p.set_defaults(func=check_command)

    p = sub.add_parser('ids', parents=[common, spectral], help='Integrated density of states')
    p.add_argument('--N', type=int, default=2000, help='Truncation size')
    p.add_argument('--phase', type=float, default=None)
    p.add_argument('--phase-avg', type=int, default=DEFAULT_PHASE_AVG)
    p.add_argument('--grid', default=None, help='lo:hi:n evaluation grid')
    p.set_defaults(func=ids_command)

    p = sub.add_parser('label', parents=[common, spectral], help='Gap labels of a spectrum')
    p.add_argument('--N', type=int, default=20000, help='Truncation size')
    p.add_argument('--phase-avg', type=int, default=DEFAULT_PHASE_AVG)
    p.add_argument('--n-max', type=int, default=DEFAULT_N_MAX)
    p.add_argument('--tol', type=float, default=None, help='Default: max(5/N, 1e-4)')
    p.set_defaults(func=label_command)

    p = sub.add_parser('dc', parents=[common, spectral], help='Empirical Diophantine constant')
    p.add_argument('--t', type=float, required=True)
    p.add_argument('--qmax', type=int, required=True)
    p.add_argument('--normalization', choices=(PLAIN, TWO_PI), default=PLAIN)
    p.set_defaults(func=dc_command)

    p = sub.add_parser('pipeline', parents=[common], help='Sum-of-spectra experiment')
    p.add_argument('--config', required=True, help='Experiment configuration (JSON)')
    p.set_defaults(func=pipeline_command)

    p = sub.add_parser('threshold', parents=[common], help='Equal-coupling threshold search')
    p.add_argument('--config', required=True, help='Experiment configuration (JSON)')
    p.add_argument('--steps', type=int, default=8, help='Bisection steps (default: 8)')
    p.set_defaults(func=threshold_command)
    return parser


_NEEDS_FREQ = {'spectrum', 'ids', 'label', 'dc'}
_NEEDS_LAMBDA = {'spectrum', 'butterfly', 'ids', 'label'}


def dispatch(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    """Run the selected subcommand; 0 on success, 1 on domain error, 2 on usage error."""
    if args.command in _NEEDS_FREQ and not args.freq:
        parser.error(f"{args.command}: --freq is required")
    if args.command in _NEEDS_LAMBDA and not args.lam:
        parser.error(f"{args.command}: --lambda is required")

    run = RunConfig.from_env(threads=args.threads, log_level=args.log_level)
    if getattr(args, 'edge_tol', None) is not None:
        run.edge_tol = args.edge_tol
    setup_logging(run.log_level)
    try:
        args.func(args, run)
    except AmspecError as exc:
        print(f"❌ {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            parser.print_help()
            return 2
        return dispatch(args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == '__main__':
    sys.exit(main())
