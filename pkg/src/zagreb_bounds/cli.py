"""Command-line front end: ``zagreb {compute,bounds,verify,table1,enumerate}``.

Exit codes: 0 success, 1 property or reproduction failure, 2 input error,
3 domain error, 4 capacity guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import verify
from .bounds import (
    APPLICATION_IDS,
    BASELINES,
    NAMED_BOUNDS,
    THEOREM_FAMILIES,
    BoundValue,
    admissible_specs,
    best_bound,
    bound_alpha,
    evaluate,
    general_zagreb_lower_bound,
    m1_coindex_bounds,
    m2_lower_bound,
    nordhaus_gaddum,
    spectral_lower_bound,
    target_index,
)
from .errors import CapacityError, ConvergenceError, DomainError, HypothesisError, ParseError
from .graph import CorpusSpec, Graph, degree_sequence, enumerate_graphs, parse_edge_list, parse_graph6, to_graph6
from .indices import (
    compute_all,
    first_zagreb_coindex,
    forgotten,
    forgotten_coindex,
    general_zagreb,
    second_zagreb,
    second_zagreb_coindex,
    spectral_radius,
)
from .scalars import approx6, same, to_text

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DOMAIN, EXIT_CAPACITY = 0, 1, 2, 3, 4


class InputError(Exception):
    """Unreadable input or unwritable output (exit 2)."""


# -- argument parsing -------------------------------------------------------

def _real(text: str):
    """Integers stay exact; anything else parses as a float."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return Fraction(text) if "/" in text else float(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a real number") from None


def _add_output(p: argparse.ArgumentParser, default: str = "text"):
    p.add_argument("--out", choices=("json", "csv", "text"), default=default, help="report format")
    p.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")


def _add_input(p: argparse.ArgumentParser):
    p.add_argument("--input", default="-", metavar="PATH", help="graph file, '-' for stdin (default)")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")


def _add_corpus(p: argparse.ArgumentParser):
    p.add_argument("--nmin", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--connected", action=argparse.BooleanOptionalAction, default=True,
                   help="connected graphs only (default on)")
    p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--min-degree", action=argparse.BooleanOptionalAction, default=None,
                   help="require delta >= 1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zagreb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="degree-based indices, coindices and spectral radius of one graph")
    _add_input(p)
    p.add_argument("--alpha", type=_real, action="append", default=[], help="Z_alpha exponent (repeatable)")
    _add_output(p)

    p = sub.add_parser("bounds", help="evaluate lower bounds on one graph")
    _add_input(p)
    p.add_argument("--alpha", type=_real, default=1, help="alpha for theorem families (default 1)")
    p.add_argument("--bounds", default="best", metavar="SEL",
                   help="comma-separated bound ids, 'all-pairs' or 'best' (default)")
    _add_output(p)

    p = sub.add_parser("verify", help="run verification properties over an enumerated corpus")
    _add_corpus(p)
    p.add_argument("--properties", help="comma-separated property ids (P1..P7 or full names)")
    p.add_argument("props", nargs="*", metavar="PROPERTY", help="property ids, as an alternative to --properties")
    p.add_argument("--workers", type=int, default=1, help="worker processes (default 1)")
    _add_output(p)

    p = sub.add_parser("table1", aliases=["reproduce-table1"], help="recompute the reference table")
    _add_output(p)

    p = sub.add_parser("enumerate", help="write one graph6 line per corpus graph")
    _add_corpus(p)
    p.add_argument("--output", metavar="PATH", help="destination file (stdout if omitted)")
    return parser


# -- serialization ----------------------------------------------------------

def _num_fields(prefix: str, x) -> dict:
    if x is None:
        return {prefix: None, f"{prefix}_approx": None}
    return {prefix: to_text(x), f"{prefix}_approx": approx6(x)}


def _json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv(header: Sequence[str], rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(header), lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for r in rows:
        w.writerow({k: ("" if r.get(k) is None else r[k]) for k in header})
    return buf.getvalue()


def _text_table(header: Sequence[str], rows: Sequence[dict]) -> str:
    cells = [list(header)] + [["" if r.get(k) is None else str(r[k]) for k in header] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells) + "\n"


def _emit(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def _read_graph(path: str, fmt: str) -> Graph:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        if fmt == "graph6":
            lines = [ln for ln in text.splitlines() if ln.strip()]
            if len(lines) != 1:
                raise ParseError(f"expected exactly one graph6 line, got {len(lines)}")
            return parse_graph6(lines[0])
        return parse_edge_list(text)
    except ValueError as exc:  # ParseError and Graph validation errors
        raise InputError(str(exc)) from None


# -- compute ----------------------------------------------------------------

def cmd_compute(args) -> tuple[int, str]:
    g = _read_graph(args.input, args.format)
    values = compute_all(g, args.alpha)
    ds = degree_sequence(g)
    rows = [{"quantity": name, **_num_fields("value", iv.value), "exact": iv.exact} for name, iv in values.items()]
    if args.out == "json":
        payload = {
            "n": g.n, "m": g.m, "graph6": to_graph6(g), "degrees": list(ds.degrees),
            "indices": {r["quantity"]: {k: r[k] for k in ("value", "value_approx", "exact")} for r in rows},
        }
        return EXIT_OK, _json(payload)
    head = [
        {"quantity": "n", "value": g.n, "value_approx": g.n, "exact": True},
        {"quantity": "m", "value": g.m, "value_approx": g.m, "exact": True},
        {"quantity": "degrees", "value": " ".join(map(str, ds.degrees)), "value_approx": None, "exact": True},
    ]
    header = ("quantity", "value", "value_approx", "exact")
    if args.out == "csv":
        return EXIT_OK, _csv(header, head + rows)
    return EXIT_OK, _text_table(header, head + rows)


# -- bounds -----------------------------------------------------------------

BOUND_HEADER = (
    "bound_id", "alpha", "target", "side", "removed", "pair", "value", "value_approx",
    "true", "true_approx", "slack", "slack_approx", "equality", "equality_predicted",
)


def _row(bound_id: str, target: str, bv: BoundValue | None, value, true, alpha, upper: bool = False) -> dict:
    """One report row; ``slack`` is the gap on the safe side, so it is never negative for a valid bound."""
    spec = bv.spec if bv is not None else None
    hi, lo = (value, true) if upper else (true, value)
    slack = hi - lo if not _mixed(hi, lo) else float(hi) - float(lo)
    return {
        "bound_id": bound_id,
        "alpha": None if alpha is None else str(alpha),
        "target": target,
        "side": "upper" if upper else "lower",
        "removed": " ".join(map(str, spec.removed)) if spec is not None and spec.pair else None,
        "pair": " ".join(map(str, spec.pair)) if spec is not None and spec.pair else None,
        **_num_fields("value", value),
        **_num_fields("true", true),
        **_num_fields("slack", slack),
        "equality": same(value, true),
        "equality_predicted": None if bv is None else bv.equality_predicted,
    }


def _mixed(a, b) -> bool:
    return not (isinstance(a, Fraction) and isinstance(b, Fraction))


def _z_label(alpha) -> str:
    return f"Z_{alpha}"


def _kernel_rows(g: Graph, bound_id: str, specs) -> list[dict]:
    ds = degree_sequence(g)
    rows = []
    for spec in specs:
        bv = general_zagreb_lower_bound(ds, spec)
        true = general_zagreb(ds, 2 * spec.alpha).value
        rows.append(_row(bound_id, _z_label(2 * spec.alpha), bv, bv.value, true, spec.alpha))
    return rows


def _application_rows(g: Graph, app: str) -> list[dict]:
    ds = degree_sequence(g)
    lb = best_bound(ds, 1)
    src = f"{app}[best]"
    if app == "app_m2":
        bv = m2_lower_bound(ds, lb)
        return [_row(src, "M2", None, bv.value, second_zagreb(g).value, None)]
    if app == "app_spectral":
        bv = spectral_lower_bound(ds, lb)
        return [_row(src, "lambda_1", None, bv.value, spectral_radius(g).value, None)]
    if app == "app_ng":
        ng = nordhaus_gaddum(g, lb)
        return [
            _row(src, "M1(G)+M1(co-G)", None, ng.m1_sum_lb, ng.m1_sum_direct, None),
            _row(src, "M2(G)+M2(co-G)", None, ng.m2_sum_lb, ng.m2_sum_direct, None),
            _row(src, "F(G)+F(co-G)", None, ng.f_sum_lb, ng.f_sum_direct, None),
        ]
    m2_ub, m1bar_ub, fsum_lb = m1_coindex_bounds(ds, lb)
    return [
        _row(src, "M2+coM2", None, m2_ub, second_zagreb(g).value + second_zagreb_coindex(g).value, None, upper=True),
        _row(src, "coM1", None, m1bar_ub, first_zagreb_coindex(g).value, None, upper=True),
        _row(src, "F+coF", None, fsum_lb, forgotten(g).value + forgotten_coindex(g).value, None),
    ]


def bound_rows(g: Graph, selection: str, alpha) -> list[dict]:
    ds = degree_sequence(g)
    if selection == "best":
        bv = best_bound(ds, alpha)
        return [_row("best", _z_label(2 * alpha), bv, bv.value, general_zagreb(ds, 2 * alpha).value, alpha)]
    if selection == "all-pairs":
        specs = [s for r in range(3) for s in admissible_specs(ds.n, alpha, r)]
        if not specs:
            raise HypothesisError(f"n = {ds.n}: no admissible spec (need n >= 3)")
        return _kernel_rows(g, "all-pairs", specs)
    rows: list[dict] = []
    for bid in (s.strip() for s in selection.split(",") if s.strip()):
        if bid in THEOREM_FAMILIES:
            specs = list(admissible_specs(ds.n, alpha, THEOREM_FAMILIES[bid]))
            if not specs:
                raise HypothesisError(f"{bid} needs n >= {3 + THEOREM_FAMILIES[bid]}, got {ds.n}")
            rows.extend(_kernel_rows(g, bid, specs))
        elif bid in NAMED_BOUNDS or bid in BASELINES:
            a = bound_alpha(bid, alpha)
            bv = evaluate(bid, ds, alpha)
            rows.append(_row(bid, _z_label(2 * a), bv, bv.value, target_index(ds, bid, alpha), a))
        elif bid in APPLICATION_IDS:
            rows.extend(_application_rows(g, bid))
        else:
            raise InputError(f"unknown bound id {bid!r}")
    return rows


def cmd_bounds(args) -> tuple[int, str]:
    g = _read_graph(args.input, args.format)
    rows = bound_rows(g, args.bounds, args.alpha)
    if args.out == "json":
        return EXIT_OK, _json({"graph6": to_graph6(g), "n": g.n, "m": g.m, "rows": rows})
    if args.out == "csv":
        return EXIT_OK, _csv(BOUND_HEADER, rows)
    shown = ("bound_id", "alpha", "target", "side", "removed", "pair", "value_approx", "true_approx", "slack_approx",
             "equality", "equality_predicted")
    return EXIT_OK, _text_table(shown, rows)


# -- verify -----------------------------------------------------------------

def corpus_from_args(args, *, min_degree_default: bool):
    min_degree = min_degree_default if args.min_degree is None else args.min_degree
    if args.nmin is None and args.nmax is None and not args.dedup and args.connected and min_degree:
        return verify.DEFAULT_CORPUS
    n_min = 3 if args.nmin is None else args.nmin
    n_max = (7 if args.dedup else 6) if args.nmax is None else args.nmax
    n_min = min(n_min, n_max) if args.nmin is None else n_min
    try:
        return (CorpusSpec(n_min, n_max, args.connected, args.dedup, min_degree),)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _selected_properties(args) -> list[str]:
    raw = []
    if args.properties:
        raw.extend(args.properties.split(","))
    for p in args.props:
        raw.extend(p.split(","))
    raw = [r.strip() for r in raw if r.strip()]
    if not raw:
        return list(verify.PROPERTIES)
    try:
        chosen = [verify.resolve_property(r) for r in raw]
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    return list(dict.fromkeys(chosen))


VERIFY_HEADER = (
    "property", "status", "corpus", "graphs_checked", "checks", "kind", "graph6", "bound_id",
    "lhs", "rhs", "lhs_approx", "rhs_approx", "context", "triage",
)


def _verify_rows(reports) -> list[dict]:
    rows = []
    for r in reports:
        base = {"property": r.property, "status": r.status, "corpus": r.corpus,
                "graphs_checked": r.graphs_checked, "checks": r.checks}
        rows.append({**base, "kind": "summary"})
        rows.extend({**base, "kind": "violation", **v.to_dict()} for v in r.violations)
        rows.extend({**base, "kind": "witness", "graph6": w.graph6, "context": w.detail} for w in r.witnesses)
        rows.extend({**base, "kind": "missing", "context": m} for m in r.missing)
    return rows


def cmd_verify(args) -> tuple[int, str]:
    corpus = corpus_from_args(args, min_degree_default=True)
    props = _selected_properties(args)
    reports = verify.run_properties(props, corpus, workers=max(1, args.workers))
    ok = all(r.passed for r in reports)
    code = EXIT_OK if ok else EXIT_FAIL
    if args.out == "json":
        return code, _json({"status": "pass" if ok else "fail", "reports": [r.to_dict() for r in reports]})
    if args.out == "csv":
        return code, _csv(VERIFY_HEADER, _verify_rows(reports))
    text = "\n".join(r.to_text() for r in reports)
    return code, f"{text}\noverall: {'PASS' if ok else 'FAIL'}\n"


# -- table1 -----------------------------------------------------------------

TABLE_HEADER = ("graph", "source", "Delta", "d2", "d_nminus1", "delta", "M1", *verify.TABLE_COLUMNS)


def _table_rows() -> list[dict]:
    rows = []
    for row in verify.table1_rows():
        for source, data in (("recomputed", row.recomputed), ("printed", row.printed)):
            cells = {"graph": row.graph, "source": source}
            for key in TABLE_HEADER[2:]:
                v = data[key]
                cells[key] = to_text(v) if isinstance(v, Fraction) and v.denominator != 1 else (
                    int(v) if isinstance(v, Fraction) else v)
            rows.append(cells)
    return rows


def cmd_table1(args) -> tuple[int, str]:
    report = verify.reproduce_table1()
    code = EXIT_OK if report.passed else EXIT_FAIL
    if args.out == "json":
        return code, _json({"table": _table_rows(), "report": report.to_dict()})
    if args.out == "csv":
        return code, _csv(TABLE_HEADER, _table_rows())
    return code, verify.table1_text(report) + "\n"


# -- enumerate --------------------------------------------------------------

def cmd_enumerate(args) -> tuple[int, str | None]:
    corpus = corpus_from_args(args, min_degree_default=False)
    if corpus is verify.DEFAULT_CORPUS:
        corpus = (CorpusSpec(3, 6, args.connected, False, False),)
    lines = []
    for spec in corpus:
        lines.extend(to_graph6(g) for g in enumerate_graphs(spec))
    return EXIT_OK, "".join(f"{ln}\n" for ln in lines)


COMMANDS = {
    "compute": cmd_compute,
    "bounds": cmd_bounds,
    "verify": cmd_verify,
    "table1": cmd_table1,
    "reproduce-table1": cmd_table1,
    "enumerate": cmd_enumerate,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors are input errors
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        code, text = COMMANDS[args.command](args)
        _emit(text, args.output)
        return code
    except InputError as exc:
        print(f"zagreb: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DomainError, HypothesisError, ConvergenceError) as exc:
        print(f"zagreb: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except CapacityError as exc:
        print(f"zagreb: capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
