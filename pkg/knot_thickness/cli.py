"""Command-line front end: `validate`, `analyze` and `verify`."""
import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

from omegaconf import DictConfig
from tqdm import tqdm

from .analysis import Outcome, Settings, Status, analyze_diagram, overall_status, status_for, verify_record
from .config import load_config
from .data import CensusRecord, load_census
from .diagrams import Diagram, braid_closure, parse_braid, parse_gauss, parse_pd
from .exceptions import KnotThicknessError, MalformedInputError


logger = logging.getLogger(__name__)

CENSUS_SUFFIXES = (".csv", ".json")


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def parse_code(text: str, name: Optional[str] = None, kind: str = "auto") -> Diagram:
    """Parse one diagram given as a PD code, a signed Gauss code or a braid word."""
    stripped = text.strip()
    if kind == "auto":
        if stripped.startswith(("X[", "PD[")):
            kind = "pd"
        elif stripped[:1] in ("O", "U", "o", "u"):
            kind = "gauss"
        else:
            kind = "braid"
    if kind == "pd":
        return parse_pd(stripped, name=name)
    if kind == "gauss":
        return parse_gauss(stripped, name=name)
    return braid_closure(parse_braid(stripped), name=name)


def read_inputs(source: str, kind: str = "auto") -> List[Tuple[str, str]]:
    """(name, code) pairs from a census file or from a text file with one code per line.

    A line may carry a name as `name: code`; `#` starts a comment line.
    """
    if source != "-" and Path(source).suffix in CENSUS_SUFFIXES:
        return [(record.name, _record_code(record)) for record in load_census(source)]
    entries = []
    for number, line in enumerate(_read_text(source).splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, separator, code = line.partition(":")
        if separator and not name.strip().startswith(("X[", "PD[")):
            entries.append((name.strip(), code.strip()))
        else:
            entries.append((f"line {number}", line))
    if not entries:
        raise MalformedInputError("No diagram codes found in input")
    return entries


def _record_code(record: CensusRecord) -> str:
    return record.pd.replace(";", ",") if record.pd else record.braid


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _emit_json(payload: object) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))
    sys.stdout.write("\n")


def _progress(items: Iterable, total: int, description: str) -> Iterable:
    return tqdm(items, total=total, desc=description, unit="knot", disable=not sys.stderr.isatty())


def cmd_validate(args: argparse.Namespace, cfg: DictConfig) -> int:
    statuses = []
    for name, code in read_inputs(args.input, args.code):
        try:
            diagram = parse_code(code, name=name, kind=args.code)
        except KnotThicknessError as error:
            status = status_for(error)
            label = "unsupported" if status == Status.UNSUPPORTED else "error"
            print(f"{name}: FAIL")
            print(f"{label}: {error}", file=sys.stderr)
            statuses.append(status)
            continue
        corners = sum(len(face.corners) for face in diagram.faces)
        print(f"{name}: ok")
        print(f"  crossings: {diagram.n}")
        print(f"  labels: ok (1..{2 * diagram.n}, each twice)")
        print(f"  faces: {len(diagram.faces)}")
        print(f"  corners: {corners}")
        print(f"  writhe: {diagram.writhe}")
        statuses.append(Status.PASS)
    return overall_status(statuses).exit_code


def _settings(args: argparse.Namespace, cfg: DictConfig) -> Settings:
    return Settings(
        max_states=args.max_states if args.max_states is not None else int(cfg.limits.max_states),
        edge=getattr(args, "edge", None),
        all_edges=cfg.analyze.all_edges if getattr(args, "all_edges", None) is None else args.all_edges,
        deep=bool(cfg.verify.deep or getattr(args, "deep", False)),
        max_crossings=cfg.verify.max_crossings if getattr(args, "max_crossings", None) is None else args.max_crossings,
        fox_max_crossings=cfg.verify.fox_max_crossings,
        deep_max_crossings=cfg.verify.deep_max_crossings,
        brute_force_max_crossings=cfg.verify.brute_force_max_crossings,
        states=getattr(args, "states", False),
    )


def _text_line(outcome: Outcome) -> str:
    report = outcome.data.get("report") or {}
    pieces = [f"{outcome.name}: {outcome.status.value}"]
    for key in ("dalt", "beta", "max_spread", "theorem_ok"):
        if key in report:
            pieces.append(f"{key}={report[key]}")
    if "alexander" in outcome.data:
        pieces.append(f"alexander={outcome.data['alexander']['fox']}")  # type: ignore
    if outcome.message:
        pieces.append(f"({outcome.message})")
    return " ".join(pieces)


def _state_lines(outcome: Outcome) -> List[str]:
    lines = []
    for label, states in outcome.data.get("states", {}).items():  # type: ignore
        for entry in states:
            grading = entry["gradings"]
            lines.append(
                f"  edge {label} {entry['corners']}: "
                f"M={grading['maslov']} A={grading['alexander']} δ={grading['delta']}"
            )
    return lines


def cmd_analyze(args: argparse.Namespace, cfg: DictConfig) -> int:
    settings = _settings(args, cfg)
    output_format = args.format or cfg.analyze.format
    outcomes = []
    start = time.perf_counter()
    entries = read_inputs(args.input, args.code)
    for name, code in _progress(entries, len(entries), "analyze"):
        try:
            diagram = parse_code(code, name=name, kind=args.code)
        except KnotThicknessError as error:
            outcomes.append(Outcome(name=name, status=status_for(error), message=str(error)))
            continue
        outcomes.append(analyze_diagram(diagram, settings))
    status = overall_status([outcome.status for outcome in outcomes])

    if output_format == "json":
        _emit_json({"diagrams": [outcome.to_json() for outcome in outcomes], "status": status.value})
    else:
        for outcome in outcomes:
            print(_text_line(outcome))
            for line in _state_lines(outcome):
                print(line)
        print(f"{len(outcomes)} diagram(s) in {time.perf_counter() - start:.2f}s: {status.value}")
    return status.exit_code


def run_verify(records: Sequence[CensusRecord], settings: Settings, jobs: int = 1) -> List[Outcome]:
    """Verify every record, keeping input order."""
    worker = partial(verify_record, settings=settings)
    if jobs <= 1:
        return [worker(record) for record in _progress(records, len(records), "verify")]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(_progress(executor.map(worker, records), len(records), "verify"))


def summarize(outcomes: Sequence[Outcome]) -> dict:
    counts = {status.value: 0 for status in Status}
    for outcome in outcomes:
        counts[outcome.status.value] += 1
    return {"total": len(outcomes), **counts}


def cmd_verify(args: argparse.Namespace, cfg: DictConfig) -> int:
    settings = _settings(args, cfg)
    census = args.census or cfg.census
    records = load_census(census)
    jobs = args.jobs if args.jobs is not None else cfg.jobs
    start = time.perf_counter()
    outcomes = run_verify(records, settings, jobs=jobs)
    status = overall_status([outcome.status for outcome in outcomes])
    summary = summarize(outcomes)
    logger.info("Verified %d records in %.2fs", len(outcomes), time.perf_counter() - start)

    if args.json:
        _emit_json({"records": [outcome.to_json() for outcome in outcomes], "summary": summary, "status": status.value})
    else:
        for outcome in outcomes:
            print(_text_line(outcome))
            failed = sorted(name for name, passed in outcome.checks.items() if not passed)
            if failed:
                print(f"  failed checks: {', '.join(failed)}")
        counts = ", ".join(f"{key}={value}" for key, value in summary.items() if value)
        print(f"{counts} in {time.perf_counter() - start:.2f}s: {status.value}")
    return status.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knot-thickness",
        description="Kauffman states, δ-gradings and the δ-spread versus dealternating bound.",
    )
    parser.add_argument("--config", type=Path, default=None, help="YAML config replacing the bundled one.")
    parser.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level on stderr.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_input(subparser: argparse.ArgumentParser) -> None:
        subparser.add_argument("input", help="Text file with one code per line, a census file, or - for stdin.")
        subparser.add_argument("--code", choices=("auto", "pd", "gauss", "braid"), default="auto")

    validate = subparsers.add_parser("validate", help="Parse diagrams and check their structure.")
    add_input(validate)
    validate.set_defaults(handler=cmd_validate)

    analyze = subparsers.add_parser("analyze", help="Report states, spreads, dalt(D) and Alexander polynomials.")
    add_input(analyze)
    edges = analyze.add_mutually_exclusive_group()
    edges.add_argument("--edge", type=int, default=None, metavar="LABEL", help="Only this marked edge.")
    edges.add_argument("--all-edges", action="store_true", default=None, help="Every eligible marked edge.")
    formats = analyze.add_mutually_exclusive_group()
    formats.add_argument("--json", dest="format", action="store_const", const="json")
    formats.add_argument("--text", dest="format", action="store_const", const="text")
    analyze.add_argument("--max-states", type=int, default=None)
    analyze.add_argument("--deep", action="store_true", help="Also run the pairwise four-case check.")
    analyze.add_argument("--states", action="store_true", help="List every Kauffman state with its gradings.")
    analyze.set_defaults(handler=cmd_analyze)

    verify = subparsers.add_parser("verify", help="Run every check over a census.")
    verify.add_argument(
        "census", nargs="?", default=None, help="Census CSV or JSON, or rolfsen; defaults to the bundled sample."
    )
    verify.add_argument("--deep", action="store_true")
    verify.add_argument("--max-crossings", type=int, default=None)
    verify.add_argument("--max-states", type=int, default=None)
    verify.add_argument("--jobs", type=int, default=None)
    verify.add_argument("--json", action="store_true", help="Emit the full JSON report.")
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    cfg = load_config(args.config, args.overrides)
    try:
        return args.handler(args, cfg)
    except FileNotFoundError as error:
        print(f"error: {error}", file=sys.stderr)
        return Status.PARSE_ERROR.exit_code
    except KnotThicknessError as error:
        print(f"error: {error}", file=sys.stderr)
        return status_for(error).exit_code


if __name__ == "__main__":
    sys.exit(main())
