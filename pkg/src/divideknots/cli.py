"""Command-line interface.

Thin client over the report layer: parsing and I/O live here, all
mathematics in the core modules.  Exit codes: 0 success, 2 invalid
input (bad code, unrealizable divide, bad flags), 3 file I/O failure,
4 internal invariant violation.
"""

import argparse
import sys
from dataclasses import dataclass
from typing import Optional, Tuple

from .defect import SearchConfig
from .divides import Divide, build_map, faces, parse_divide, read_divide_file, snail
from .errors import DivideError, InternalInvariantError
from .report import (family_rows, render_family_text, render_report_text,
                     report_document, to_json)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IO = 3
EXIT_INTERNAL = 4


@dataclass(frozen=True)
class RunManifest:
    """Everything that determines one CLI run; equal manifests must
    produce byte-identical output."""

    command: str
    gauss: Optional[str] = None
    file: Optional[str] = None
    snail: Optional[int] = None
    range: Optional[Tuple[int, int]] = None
    black: Optional[str] = None
    swap_colours: bool = False
    coeff_bound: int = 1
    max_candidates: int = 100_000
    time_budget: float = 60.0
    no_search: bool = False
    json: bool = False
    out: Optional[str] = None

    @property
    def search_config(self) -> SearchConfig:
        return SearchConfig(coeff_bound=self.coeff_bound,
                            max_candidates=self.max_candidates,
                            time_budget=self.time_budget)


def _parse_range(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("range must look like 1..10")
    try:
        a, b = int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError("range bounds must be integers") from exc
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError("range needs 1 <= a <= b")
    return a, b


def _add_source_flags(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--gauss", metavar="CODE", help="signed Gauss code (may be empty)")
    group.add_argument("--file", metavar="PATH", help="divide file to read")
    group.add_argument("--snail", type=int, metavar="N", help="n-th snail divide")


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--swap-colours", action="store_true",
                     help="invert the checkerboard colouring")
    sub.add_argument("--black", metavar="REGION",
                     help="region id to paint black (overrides any file hint)")
    sub.add_argument("--coeff-bound", type=int, default=1, metavar="K",
                     help="coordinate box for the defect search (default 1)")
    sub.add_argument("--max-candidates", type=int, default=100_000, metavar="M",
                     help="cap on examined candidate vectors (default 100000)")
    sub.add_argument("--time-budget", type=float, default=60.0, metavar="SECONDS",
                     help="search time budget in seconds (default 60)")
    sub.add_argument("--no-search", action="store_true",
                     help="skip the defect search (snail certificates still apply)")
    sub.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub.add_argument("--out", metavar="PATH", help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divide-knots",
        description="Seifert forms, invariants and certified topological "
                    "four-genus bounds for divide knots")
    subs = parser.add_subparsers(dest="command", required=True)

    p_validate = subs.add_parser("validate", help="check a divide without computing")
    _add_source_flags(p_validate)
    _add_common_flags(p_validate)

    p_report = subs.add_parser("report", help="full invariant report for one divide")
    _add_source_flags(p_report)
    _add_common_flags(p_report)

    p_family = subs.add_parser("family", help="bounds table for a run of snail knots")
    p_family.add_argument("--range", type=_parse_range, required=True, metavar="A..B",
                          help="snail indices, e.g. 1..10")
    _add_common_flags(p_family)
    return parser


def _manifest_from_args(args: argparse.Namespace) -> RunManifest:
    return RunManifest(
        command=args.command,
        gauss=getattr(args, "gauss", None),
        file=getattr(args, "file", None),
        snail=getattr(args, "snail", None),
        range=getattr(args, "range", None),
        black=args.black,
        swap_colours=args.swap_colours,
        coeff_bound=args.coeff_bound,
        max_candidates=args.max_candidates,
        time_budget=args.time_budget,
        no_search=args.no_search,
        json=args.json,
        out=args.out,
    )


def _load_divide(manifest: RunManifest) -> Divide:
    if manifest.gauss is not None:
        return parse_divide(manifest.gauss)
    if manifest.file is not None:
        return read_divide_file(manifest.file)
    assert manifest.snail is not None
    if manifest.snail < 1:
        raise DivideError("--snail expects a positive index")
    return snail(manifest.snail)


def cmd_validate(manifest: RunManifest) -> str:
    divide = _load_divide(manifest)
    cmap = build_map(divide)
    regions = faces(cmap)
    inner = sum(1 for r in regions if r.is_inner)
    if manifest.json:
        return to_json({
            "valid": True,
            "gauss": divide.gauss_code,
            "double_points": divide.crossing_count,
            "regions": len(regions),
            "inner_regions": inner,
        })
    return (f"ok: {divide.crossing_count} double points, {len(regions)} regions "
            f"({inner} inner)\n")


def cmd_report(manifest: RunManifest) -> str:
    divide = _load_divide(manifest)
    doc = report_document(divide, black=manifest.black, swap=manifest.swap_colours,
                          config=manifest.search_config,
                          run_search=not manifest.no_search)
    return to_json(doc) if manifest.json else render_report_text(doc)


def cmd_family(manifest: RunManifest) -> str:
    assert manifest.range is not None
    rows = family_rows(manifest.range[0], manifest.range[1],
                       swap=manifest.swap_colours, config=manifest.search_config,
                       run_search=not manifest.no_search)
    return to_json(rows) if manifest.json else render_family_text(rows)


_COMMANDS = {"validate": cmd_validate, "report": cmd_report, "family": cmd_family}


def run(manifest: RunManifest) -> str:
    return _COMMANDS[manifest.command](manifest)


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    manifest = _manifest_from_args(args)
    try:
        output = run(manifest)
    except DivideError as exc:
        print(f"invalid divide: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except InternalInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    try:
        if manifest.out:
            with open(manifest.out, "w", encoding="utf-8") as handle:
                handle.write(output)
        else:
            sys.stdout.write(output)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
