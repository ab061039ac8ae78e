import argparse
import logging
import os
import sys
from typing import List, Optional, Sequence

from pydantic import ValidationError

from circle_fft.cost import fit_cost_model, run_benchmark, verify_recurrence
from circle_fft.geometry import layout_decomposition, layout_recycling_pair, layout_terms
from circle_fft.geometry.layout import caption
from circle_fft.models import Algorithm, RenderStyle, Signal, Spectrum
from circle_fft.render import render_circle, render_decomposition, render_recycling_pair
from circle_fft.transforms import fft_iterative, ifft, is_power_of_two, make_plan, naive_dft, naive_idft
from circle_fft.utils.constants import (
    DEFAULT_BENCH_SIZES,
    DEFAULT_CIRCLE_RADIUS,
    DEFAULT_DOT_RADIUS,
    DEFAULT_FONT_SIZE,
    DEFAULT_PANEL_GAP,
    DEFAULT_REPEATS,
    DEFAULT_WARMUP,
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFY,
)
from circle_fft.utils.exceptions import CircleFFTError, InsufficientDataError
from circle_fft.utils.file_utils import SignalFormat, format_values, load_signal, parse_int_list, parse_labels, save_signal
from circle_fft.utils.output_utils import format_recurrence_table, save_bench_csv, save_fit_json, save_text, write_bench_csv

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

logger = logging.getLogger("circle_fft")


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; usage errors here are status 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        save_text(text, output)
    else:
        sys.stdout.write(text)


def cmd_transform(args: argparse.Namespace) -> int:
    """
    Forward or inverse transform of a signal file.

    Power-of-two lengths go through the iterative FFT; other lengths fall
    back to the naive DFT with a warning, and --naive forces the oracle.
    """
    fmt = SignalFormat(args.format)
    try:
        values = load_signal(args.input, fmt)
    except OSError as e:
        logger.error(f"Cannot read {args.input}: {e}")
        return EXIT_USAGE

    n = values.n
    use_naive = args.naive
    if not use_naive and not is_power_of_two(n):
        logger.warning(f"N={n} is not a power of two; falling back to the naive O(N^2) DFT")
        use_naive = True

    result: Signal | Spectrum
    if args.inverse:
        result = naive_idft(values.values) if use_naive else ifft(values.values, make_plan(n))
    else:
        result = naive_dft(values) if use_naive else fft_iterative(values, make_plan(n))
    logger.info(f"{'Inverse' if args.inverse else 'Forward'} transform of {n} values via {'naive DFT' if use_naive else 'FFT'}")

    try:
        if args.output:
            save_signal(result, args.output, fmt)
        else:
            sys.stdout.write(format_values(result, fmt))
    except OSError as e:
        logger.error(f"Cannot write output: {e}")
        return EXIT_IO
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    """Time the transforms over a size sweep and fit the cost models."""
    try:
        sizes = parse_int_list(args.sizes) if args.sizes else list(DEFAULT_BENCH_SIZES)
        algorithms = [Algorithm(name.strip()) for name in args.algorithms.split(",") if name.strip()]
    except ValueError as e:
        logger.error(f"Invalid benchmark flags: {e}")
        return EXIT_USAGE
    if not sizes or not algorithms:
        logger.error("Need at least one size and one algorithm")
        return EXIT_USAGE

    records = run_benchmark(sorted(sizes), algorithms, args.repeats, args.warmup)

    try:
        if args.csv:
            save_bench_csv(records, args.csv)
        else:
            write_bench_csv(records, sys.stdout)
    except OSError as e:
        logger.error(f"Cannot write benchmark CSV: {e}")
        return EXIT_IO

    try:
        fit = fit_cost_model(records)
    except InsufficientDataError as e:
        if args.fit_json:
            logger.error(f"Cannot fit cost model: {e}")
            return EXIT_USAGE
        logger.info(f"Skipping cost model fit: {e}")
        return EXIT_OK

    if args.fit_json:
        try:
            save_fit_json(fit, args.fit_json)
        except OSError as e:
            logger.error(f"Cannot write fit JSON: {e}")
            return EXIT_IO
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Check M(N) = 2M(N/2) + N/2 and A(N) = 2A(N/2) + N at every level up to --max-n."""
    if args.max_n < 2 or not is_power_of_two(args.max_n):
        logger.error(f"--max-n must be a power of two >= 2, got {args.max_n}")
        return EXIT_USAGE

    report = verify_recurrence(args.max_n)
    sys.stdout.write(format_recurrence_table(report) + "\n")

    failure = report.first_failure
    if failure is not None:
        logger.error(f"Recurrence violated at N={failure.n}: {failure.message}")
        return EXIT_VERIFY
    logger.info(f"Recurrence holds at all {len(report.levels)} levels up to N={args.max_n}")
    return EXIT_OK


def _render_one(size: int, k: int, labels: Optional[Sequence[str]], args: argparse.Namespace, style: RenderStyle) -> str:
    if args.recycle:
        return render_recycling_pair(layout_recycling_pair(size, k, labels), style)
    if args.decompose:
        return render_decomposition(layout_decomposition(size, k, labels), style)
    placements = layout_terms(size, k, labels)
    return render_circle(placements, style, caption(k, [p.label for p in placements]))


def cmd_diagram(args: argparse.Namespace) -> int:
    """Write the unit-circle picture of A_k, or its even/odd decomposition."""
    size = args.n
    if size < 1:
        logger.error(f"--n must be positive, got {size}")
        return EXIT_USAGE
    if (args.decompose or args.recycle) and (size < 2 or not is_power_of_two(size)):
        logger.error(f"--n must be a power of two >= 2 for decomposition figures, got {size}")
        return EXIT_USAGE
    if not args.all_k and args.k is None:
        logger.error("--k is required unless --all-k is given")
        return EXIT_USAGE

    try:
        style = RenderStyle(
            circle_radius=args.circle_radius,
            panel_gap=args.panel_gap,
            font_size=args.font_size,
            dot_radius=args.dot_radius,
        )
        labels = parse_labels(args.labels, size) if args.labels else None
        if args.all_k:
            bins = range(size // 2) if args.recycle else range(size)
            documents = {k: _render_one(size, k, labels, args, style) for k in bins}
        else:
            documents = {args.k: _render_one(size, args.k, labels, args, style)}
    except (ValidationError, ValueError) as e:
        logger.error(f"Invalid diagram request: {e}")
        return EXIT_USAGE

    try:
        if args.all_k:
            out_dir = args.output or "."
            os.makedirs(out_dir, exist_ok=True)
            for k, svg in documents.items():
                save_text(svg, os.path.join(out_dir, f"A_{k}.svg"))
        else:
            _emit(documents[args.k], args.output)
    except OSError as e:
        logger.error(f"Cannot write diagram: {e}")
        return EXIT_IO
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="circle-fft", description="Radix-2 FFT, cost accounting and unit-circle diagrams")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")
    sub = parser.add_subparsers(dest="command", required=True)

    transform = sub.add_parser("transform", help="transform a signal file")
    transform.add_argument("input", help="signal file, one 're,im' per line (or JSON with --format json)")
    transform.add_argument("--inverse", action="store_true", help="treat input as a spectrum and invert it")
    transform.add_argument("--naive", action="store_true", help="force the O(N^2) DFT")
    transform.add_argument("--output", help="output file (default: stdout)")
    transform.add_argument("--format", choices=[f.value for f in SignalFormat], default=SignalFormat.CSV.value)
    transform.set_defaults(handler=cmd_transform)

    bench = sub.add_parser("bench", help="benchmark transforms over a size sweep")
    bench.add_argument("--sizes", help="comma-separated sizes (default 2^8..2^13)")
    bench.add_argument(
        "--algorithms",
        default=",".join(a.value for a in Algorithm),
        help="comma-separated subset of naive,fft_recursive,fft_iterative",
    )
    bench.add_argument("--repeats", type=int, default=DEFAULT_REPEATS)
    bench.add_argument("--warmup", type=int, default=DEFAULT_WARMUP)
    bench.add_argument("--csv", help="benchmark CSV path (default: stdout)")
    bench.add_argument("--fit-json", dest="fit_json", help="cost model fit JSON path")
    bench.set_defaults(handler=cmd_bench)

    verify = sub.add_parser("verify", help="check the operation-count recurrence")
    verify.add_argument("--max-n", dest="max_n", type=int, default=1024)
    verify.set_defaults(handler=cmd_verify)

    diagram = sub.add_parser("diagram", help="write an SVG of the unit-circle picture")
    diagram.add_argument("--n", type=int, required=True)
    diagram.add_argument("--k", type=int)
    diagram.add_argument("--decompose", action="store_true", help="even/odd decomposition row")
    diagram.add_argument("--recycle", action="store_true", help="both rows of one butterfly, k and k+N/2")
    diagram.add_argument("--all-k", dest="all_k", action="store_true", help="one file per bin into --output dir")
    diagram.add_argument("--labels", help="comma-separated term labels")
    diagram.add_argument("--output", help="SVG path, or directory with --all-k (default: stdout)")
    diagram.add_argument("--circle-radius", dest="circle_radius", type=float, default=DEFAULT_CIRCLE_RADIUS)
    diagram.add_argument("--panel-gap", dest="panel_gap", type=float, default=DEFAULT_PANEL_GAP)
    diagram.add_argument("--font-size", dest="font_size", type=float, default=DEFAULT_FONT_SIZE)
    diagram.add_argument("--dot-radius", dest="dot_radius", type=float, default=DEFAULT_DOT_RADIUS)
    diagram.set_defaults(handler=cmd_diagram)

    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    logger.setLevel(level)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point for the circle-fft command line.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        Exit status: 0 ok, 1 usage/input, 2 I/O, 3 verification failure
    """
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"circle-fft: error: {e}\n")
        return EXIT_USAGE

    _configure_logging(args)
    try:
        return int(args.handler(args))
    except CircleFFTError as e:
        logger.error(str(e))
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
