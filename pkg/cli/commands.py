"""
Command-line surface: coeff, product, pieri, table, verify, trace.

run(argv) parses arguments, opens a run log folder, dispatches to a handler
and maps failures to exit codes (2 for bad input, 1 for violations).
"""

import argparse
import json
import sys
import time
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence

from combinatorics import (
    AmbientSpace,
    Filling,
    HoledTableau,
    Partition,
    crossing_violations,
    format_partition,
    nw_holed_tableaux,
    parse_partition,
    path_persistence_violations,
    pieri_families,
    pieri_transfer,
    pieri_transfer_reverse,
    se_holed_tableaux,
    trace_nw_to_se,
    trace_se_to_nw,
    weight,
)
from config import EngineConfig
from infra import (
    CLI_GREEN,
    CLI_RED,
    CLI_CLR,
    EngineError,
    SpaceMismatch,
    filter_none,
    finalize_json_array,
    log_event,
    write_json_event,
)
from infra.run_log import set_run_dir, write_entry
from oracle import p_product_expansion, schur_product_expansion
from ring import SchubertRing, basis_element, get_ring, verify_space

from .cli_cfg import MAX_PRINTED_VIOLATIONS, ORACLE_MAX_WEIGHT_SHIFTED, RUN_DIR_FORMAT, RUN_LOG_NAME
from .records import CoefficientRecord, write_table


class UsageError(Exception):
    """Raised by the argument parser instead of exiting."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


# =============================================================================
# Argument grammar
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    """Parser for all subcommands; partition and space literals stay strings
    until a handler parses them, so ShapeError can name the offending token."""
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "jsonl"], default=None,
                        help="Output format (default from config)")

    parser = _Parser(prog="schubert", description="Schubert structure constants")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("coeff", parents=[common], help="Single structure constant")
    p.add_argument("--space", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--convention", choices=["paper", "standard"], default=None)

    p = sub.add_parser("product", parents=[common], help="Expansion of s_lambda * s_mu")
    p.add_argument("--space", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)

    p = sub.add_parser("pieri", parents=[common], help="Pieri product by the special class (p)")
    p.add_argument("--space", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)

    p = sub.add_parser("table", parents=[common], help="All structure constants of a space")
    p.add_argument("--space", required=True)
    p.add_argument("--out", default=None, help="Write JSON lines to FILE instead of stdout")
    p.add_argument("--all", action="store_true", help="Include zero constants")

    p = sub.add_parser("verify", parents=[common], help="Ring identities (and oracle agreement)")
    p.add_argument("--space", action="append", default=None, help="Repeatable; default from config")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--max-size", type=int, default=None, help="Cap k, m and n of the default spaces")

    p = sub.add_parser("trace", parents=[common], help="Slide traces of the Pieri transfer")
    p.add_argument("--space", required=True)
    p.add_argument("--mode", choices=["a", "shifted"], required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--p", type=int, required=True)

    return parser


# =============================================================================
# Output helpers
# =============================================================================

def _symbol(parts: Partition) -> str:
    return f"s({format_partition(parts)})"


def _format_filling(filling: Filling) -> str:
    shape = filling.shape
    rows = " / ".join(" ".join(str(x) for x in row) or "-" for row in filling.rows)
    return f"{format_partition(shape.outer)}/{format_partition(shape.inner)}: {rows}"


def _format_holes(holed: HoledTableau) -> str:
    return " ".join(f"({r},{c})" + ("'" if marked else "") for (r, c), marked in holed.holes)


def _emit_records(records: Iterable[CoefficientRecord]) -> None:
    write_table(records, sys.stdout)


def _parse_space(raw: str) -> AmbientSpace:
    return AmbientSpace.parse(raw)


def _json_line(data: Dict[str, Any]) -> str:
    return json.dumps(data, ensure_ascii=False, separators=(",", ":"), default=str)


# =============================================================================
# Handlers
# =============================================================================

def _cmd_coeff(args: argparse.Namespace, config: EngineConfig) -> int:
    space = _parse_space(args.space)
    lam, mu, nu = parse_partition(args.lam), parse_partition(args.mu), parse_partition(args.nu)
    ring = get_ring(space, config)
    value = ring.constant(lam, mu, nu, args.convention or config.convention)
    if config.output_format == "jsonl":
        _emit_records([CoefficientRecord.of(ring.space.label, lam, mu, nu, value)])
    else:
        print(value)
    return 0


def _print_expansion(ring: SchubertRing, lam: Partition, mu: Partition, element, config: EngineConfig) -> None:
    if config.output_format == "jsonl":
        _emit_records([CoefficientRecord.of(ring.space.label, lam, mu, nu, c) for nu, c in element.terms])
    else:
        print(element)


def _cmd_product(args: argparse.Namespace, config: EngineConfig) -> int:
    ring = get_ring(_parse_space(args.space), config)
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    element = ring.multiply(basis_element(ring.space, lam), basis_element(ring.space, mu))
    _print_expansion(ring, lam, mu, element, config)
    return 0


def _cmd_pieri(args: argparse.Namespace, config: EngineConfig) -> int:
    ring = get_ring(_parse_space(args.space), config)
    lam = parse_partition(args.lam)
    element = ring.pieri_multiply(args.p, basis_element(ring.space, lam))
    _print_expansion(ring, lam, (args.p,), element, config)
    return 0


def _table_records(ring: SchubertRing, include_zero: bool) -> Iterator[CoefficientRecord]:
    basis = ring.basis()
    for lam in basis:
        for mu in basis:
            product = ring.product(lam, mu)
            for nu in basis:
                if weight(nu) != weight(lam) + weight(mu):
                    continue
                value = product.get(nu, 0)
                if value or include_zero:
                    yield CoefficientRecord.of(ring.space.label, lam, mu, nu, value)


def _cmd_table(args: argparse.Namespace, config: EngineConfig) -> int:
    ring = get_ring(_parse_space(args.space), config)
    records = _table_records(ring, args.all)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            count = write_table(records, f)
        log_event(f"Wrote {count} records to {args.out}")
    elif config.output_format == "jsonl":
        _emit_records(records)
    else:
        for record in records:
            print(f"{_symbol(tuple(record.lambda_))} * {_symbol(tuple(record.mu))} "
                  f"-> {_symbol(tuple(record.nu))}: {record.coeff}")
    return 0


def _cap_space(space: AmbientSpace, limit: Optional[int]) -> AmbientSpace:
    if limit is None:
        return space
    if space.kind == "A":
        return AmbientSpace.type_a(min(space.k, limit), min(space.m, limit))
    if space.kind == "D":
        return AmbientSpace.type_d(max(2, min(space.n, limit)))
    return AmbientSpace(kind=space.kind, n=min(space.n, limit))


def _oracle_violations(space: AmbientSpace, config: EngineConfig) -> List[Dict[str, Any]]:
    """Compare ring constants with Schur (type A) or P-polynomial (B/C/D, on f) expansions."""
    ring = get_ring(space, config)
    shifted = ring.space.kind != "A"
    source = get_ring(AmbientSpace.type_b(ring.space.n), config) if shifted else ring
    basis = source.basis()
    found = []
    for lam in basis:
        for mu in basis:
            if shifted and weight(lam) + weight(mu) > ORACLE_MAX_WEIGHT_SHIFTED:
                continue
            if shifted:
                expected = p_product_expansion(lam, mu, config.oracle_p_variables)
            else:
                expected = schur_product_expansion(lam, mu)
            got = source.product(lam, mu)
            for nu in basis:
                if weight(nu) != weight(lam) + weight(mu):
                    continue
                if expected.get(nu, 0) != got.get(nu, 0):
                    entry = {"space": source.space.label, "lambda": list(lam), "mu": list(mu),
                             "nu": list(nu), "oracle": expected.get(nu, 0), "engine": got.get(nu, 0)}
                    write_entry("oracle", entry)
                    found.append(entry)
    return found


def _cmd_verify(args: argparse.Namespace, config: EngineConfig) -> int:
    limit = args.max_size if args.max_size is not None else config.verify_max_size
    if args.space:
        spaces = [_parse_space(raw) for raw in args.space]
    else:
        spaces = [_cap_space(_parse_space(raw), limit) for raw in config.verify_spaces]

    status = 0
    for space in spaces:
        report = verify_space(space, config)
        oracle = _oracle_violations(space, config) if args.oracle else []
        failed = not report.ok or bool(oracle)
        if failed:
            status = 1
        if config.output_format == "jsonl":
            data = report.model_dump()
            if args.oracle:
                data["oracle_violations"] = oracle
            print(_json_line(data))
            continue
        verdict = f"{CLI_RED}FAIL{CLI_CLR}" if failed else f"{CLI_GREEN}ok{CLI_CLR}"
        print(f"{report.space}: {verdict} ({report.basis_size} basis classes, "
              f"{len(report.checks)} checks, {report.total_violations} violations"
              + (f", {len(oracle)} oracle disagreements)" if args.oracle else ")"))
        for violation in report.violations[:MAX_PRINTED_VIOLATIONS]:
            print(f"  {violation.check}: {violation.detail}")
        for entry in oracle[:MAX_PRINTED_VIOLATIONS]:
            print(f"  oracle: {entry}")
    return status


def _trace_type_a(space: AmbientSpace, lam, mu, nu, p: int, config: EngineConfig) -> int:
    families = pieri_families(lam, mu, nu, p, space)
    problems = 0
    if len(families["mu_side"]) != len(families["lambda_side"]):
        problems += 1
    images = set()
    for family in families["mu_side"]:
        transfer = pieri_transfer(family.tableau, mu, space)
        back = pieri_transfer_reverse(transfer.tableau, lam, space)
        round_trip = back.partition == family.partition and back.tableau == family.tableau
        crossings = crossing_violations(transfer.traces)
        images.add((transfer.partition, transfer.tableau))
        problems += (not round_trip) + len(crossings)
        entry = {
            "mode": "a",
            "mu_tilde": list(family.partition),
            "lambda_tilde": list(transfer.partition),
            "paths": [[list(cell) for cell in trace.path] for trace in transfer.traces],
            "moves": [list(trace.moves) for trace in transfer.traces],
            "round_trip": round_trip,
            "crossings": len(crossings),
        }
        write_entry("traces", entry)
        if config.output_format == "jsonl":
            print(_json_line(entry))
            continue
        print(f"mu~ = ({format_partition(family.partition)})  T = {_format_filling(family.tableau)}")
        for trace in transfer.traces:
            path = " -> ".join(f"({r},{c})" for r, c in trace.path)
            print(f"  slide {path}  [{', '.join(trace.moves) or 'stay'}]")
        print(f"  lambda~ = ({format_partition(transfer.partition)})  T~ = {_format_filling(transfer.tableau)}")
        print(f"  round trip: {'ok' if round_trip else 'MISMATCH'}, crossings: {len(crossings)}")
    expected = {(f.partition, f.tableau) for f in families["lambda_side"]}
    if images != expected:
        problems += 1
    if config.output_format == "text":
        print(f"mu side: {len(families['mu_side'])}, lambda side: {len(families['lambda_side'])}, "
              f"problems: {problems}")
    return 1 if problems else 0


def _trace_shifted(space: AmbientSpace, lam, mu, nu, p: int, config: EngineConfig) -> int:
    n = space.normalized().n
    for name, parts in (("lambda", lam), ("mu", mu), ("nu", nu)):
        space.require(parts, name)
    nw = nw_holed_tableaux(lam, mu, nu, p, n)
    se = set(se_holed_tableaux(lam, mu, nu, p, n))
    problems = 0 if len(nw) == len(se) else 1
    for holed in nw:
        forward = trace_nw_to_se(holed)
        back = trace_se_to_nw(forward.holed)
        round_trip = back.holed == holed
        persistence = []
        for earlier, later in zip(forward.traces, forward.traces[1:]):
            persistence.extend(path_persistence_violations(earlier.path, later.path))
        landed = forward.holed in se
        problems += (not round_trip) + (not landed) + len(persistence)
        entry = {
            "mode": "shifted",
            "nw_holes": _format_holes(holed),
            "se_holes": _format_holes(forward.holed),
            "paths": [[list(cell) for cell in trace.path] for trace in forward.traces],
            "moves": [list(trace.moves) for trace in forward.traces],
            "round_trip": round_trip,
            "landed": landed,
            "persistence": len(persistence),
        }
        write_entry("traces", entry)
        if config.output_format == "jsonl":
            print(_json_line(entry))
            continue
        print(f"NW holes {_format_holes(holed)}  T = {_format_filling(holed.base)}")
        for trace in forward.traces:
            path = " -> ".join(f"({r},{c})" for r, c in trace.path)
            print(f"  slide {path}  [{', '.join(trace.moves) or 'stay'}]")
        print(f"  SE holes {_format_holes(forward.holed)}  T~ = {_format_filling(forward.holed.base)}")
        print(f"  round trip: {'ok' if round_trip else 'MISMATCH'}, "
              f"persistence violations: {len(persistence)}")
    if config.output_format == "text":
        print(f"NW holed: {len(nw)}, SE holed: {len(se)}, problems: {problems}")
    return 1 if problems else 0


def _cmd_trace(args: argparse.Namespace, config: EngineConfig) -> int:
    space = _parse_space(args.space)
    lam, mu, nu = parse_partition(args.lam), parse_partition(args.mu), parse_partition(args.nu)
    if args.mode == "a":
        if space.kind != "A":
            raise SpaceMismatch("type A", space.label)
        return _trace_type_a(space, lam, mu, nu, args.p, config)
    if not space.is_shifted:
        raise SpaceMismatch("type B, C or D", space.label)
    return _trace_shifted(space, lam, mu, nu, args.p, config)


HANDLERS = {
    "coeff": _cmd_coeff,
    "product": _cmd_product,
    "pieri": _cmd_pieri,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "trace": _cmd_trace,
}


# =============================================================================
# Entry point
# =============================================================================

def _open_run_dir(config: EngineConfig, command: str) -> Optional[Path]:
    if not config.write_run_log:
        return None
    stamp = datetime.now().strftime(RUN_DIR_FORMAT)
    base = Path(config.log_dir) / f"{stamp}-{command}"
    run_dir, suffix = base, 1
    while run_dir.exists():
        suffix += 1
        run_dir = base.with_name(f"{base.name}-{suffix}")
    run_dir.mkdir(parents=True)
    return run_dir


def run(argv: Optional[Sequence[str]] = None, config: Optional[EngineConfig] = None) -> int:
    """Parse argv, run one subcommand, return the exit status."""
    config = config or EngineConfig.from_env()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"{CLI_RED}{e}{CLI_CLR}", file=sys.stderr)
        return 2
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    if args.format:
        config = config.model_copy(update={"output_format": args.format})

    run_dir = _open_run_dir(config, args.command)
    log_file = run_dir / RUN_LOG_NAME if run_dir else None
    set_run_dir(run_dir)
    write_json_event(log_file, {"type": "run_start", "argv": argv, "config": config.model_dump()})
    started = time.perf_counter()

    status = 2
    error = None
    try:
        status = HANDLERS[args.command](args, config)
    except EngineError as e:
        error = str(e)
        print(f"{CLI_RED}{type(e).__name__}: {e}{CLI_CLR}", file=sys.stderr)
        status = 2
    finally:
        write_json_event(log_file, filter_none({
            "type": "run_end",
            "command": args.command,
            "exit_code": status,
            "error": error,
            "duration_sec": round(time.perf_counter() - started, 3),
        }))
        finalize_json_array(log_file)
        set_run_dir(None)
    return status
