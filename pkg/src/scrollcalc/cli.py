"""Command-line front end.

Subcommands::

    analyze         full report for one (e, b, k)
    scan            one row per admissible (e, b, k) over a range of b
    audit-examples  recompute the three worked examples and compare
    specialize      decide whether one splitting type specializes to another
    hilbert-poly    Hilbert polynomial coefficients and values

Exit codes: 0 success, 1 internal inconsistency, 2 bad input or inadmissible
configuration, 3 negative ``specialize`` verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__, scroll
from .audit import MATCH, audit_examples, discrepancy_flags, gold_case_matches
from .degeneration import (
    epsilon_classes,
    epsilon_config,
    epsilon_invariance,
    join_spans,
    specialization_certificate,
)
from .divisors import InternalInconsistency
from .extensions import (
    ScrollConfig,
    bundle_pair,
    cohomology_A_B,
    cohomology_E,
    dim_ext1_direct,
    dim_ext1_piecewise,
    h0_end_E,
    strict_violations,
)
from .p1 import SplittingType, specialization_failure

SCHEMA = "scrollcalc/1"

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2
EXIT_NOT_SPECIALIZATION = 3

SCAN_COLUMNS = (
    "e",
    "b",
    "k",
    "n",
    "d",
    "g",
    "dim_ext1",
    "h0_end_generic",
    "dim_component",
    "codim_kind",
    "codim_value",
    "dominates",
)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2)


def analyze(cfg: ScrollConfig, audit_mode: bool = False) -> dict:
    """Everything computed for one configuration, as a JSON-ready dict."""
    report = scroll.component_report(cfg)
    if audit_mode:
        report.flags.extend(discrepancy_flags(cfg))
    pair = bundle_pair(cfg)
    ec = epsilon_config(cfg)
    eps_pair = epsilon_classes(ec)
    invariance = epsilon_invariance(cfg)
    cert = specialization_certificate(cfg)
    ext = dim_ext1_direct(cfg)
    if ext != dim_ext1_piecewise(cfg):
        report.flags.append("inconsistent: piecewise and direct Ext^1 dimensions differ")
    if not invariance.all():
        report.flags.append("inconsistent: eps-side invariants differ from e-side")
    if not cert.dominates:
        report.flags.append("inconsistent: eps-side type does not specialize to e-side type")
    h0A, h1A, h0B = cohomology_A_B(cfg)
    ell, r = join_spans(cfg)
    hp = scroll.hilbert_polynomial(cfg)

    out = report.to_json()
    out.update(
        {
            "schema": SCHEMA,
            "A": str(pair.A),
            "B": str(pair.B),
            "c1": str(pair.c1),
            "c2": pair.c2,
            "cohomology_E": list(cohomology_E(cfg)),
            "cohomology_A_B": {"h0A": h0A, "h1A": h1A, "h0B": h0B},
            "dim_ext1": ext,
            "h0_end_generic": h0_end_E(cfg, generic=True),
            "intersection_table": scroll.intersection_table(cfg).as_dict(),
            "hilbert_polynomial": [str(c) for c in hp.coeffs],
            "join_spans": {"l": ell, "r": r},
            "epsilon": {
                **ec.to_json(),
                "A": str(eps_pair.A),
                "B": str(eps_pair.B),
                "invariance": invariance.to_json(),
            },
            "certificate": cert.to_json(),
            "consistent": report.consistent,
        }
    )
    return out


def _render_text(data: dict) -> str:
    cfg = data["cfg"]
    codim = data["codim"]
    eps = data["epsilon"]
    cert = data["certificate"]
    lines = [
        f"configuration     e={cfg['e']} b={cfg['b']} k={cfg['k']}",
        f"classes           A = {data['A']}   B = {data['B']}",
        f"scroll            X in P^{data['n']}, degree {data['d']}, sectional genus {data['g']}",
        f"h^i(E)            {data['cohomology_E']}",
        f"dim Ext^1(B,A)    {data['dim_ext1']}",
        f"h0(End E)         {data['h0_end_generic']}",
        f"dim component     {data['dim_component']} (HRR {data['dim_component_hrr']})",
        f"chi(T_X)          {data['chi_T']}  h0(T_X)={data['h0_T']}  h1(T_X)={data['h1_T']}",
        f"codim scroll locus {codim['kind']} {codim['value']}  (dim Y >= {codim['dimY_lower_bound']})",
        f"eps side          eps={eps['eps']} b={eps['b']} k={eps['k']}  A = {eps['A']}  B = {eps['B']}",
        f"pushforwards      F_e: {','.join(map(str, cert['type_e']))}   "
        f"F_eps: {','.join(map(str, cert['type_eps']))}",
        f"specializes       {str(cert['dominates']).lower()}",
    ]
    for flag in data["flags"]:
        lines.append(f"flag              {flag}")
    return "\n".join(lines)


def scan_row(cfg: ScrollConfig) -> tuple:
    inv = scroll.invariants(cfg)
    codim = scroll.codim_scroll_locus(cfg)
    return (
        cfg.e,
        cfg.b,
        cfg.k,
        inv.n,
        inv.d,
        inv.g,
        dim_ext1_direct(cfg),
        h0_end_E(cfg, generic=True),
        scroll.dim_component_closed(cfg),
        codim.kind,
        codim.value,
        specialization_certificate(cfg).dominates,
    )


def admissible_configs(e: int, b_min: int, b_max: int):
    for b in range(max(b_min, 3 * e + 1), b_max + 1):
        for k in range(b - e + 1, 2 * b - 4 * e):
            yield ScrollConfig(e, b, k)


def _rows_for_b(args: tuple[int, int]) -> list[tuple]:
    e, b = args
    return [scan_row(cfg) for cfg in admissible_configs(e, b, b)]


def scan(e: int, b_min: int, b_max: int, workers: int = 1) -> list[tuple]:
    """Rows for every admissible config, sorted by (b, k) whatever the worker count."""
    jobs = [(e, b) for b in range(b_min, b_max + 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_rows_for_b, jobs))
    else:
        chunks = [_rows_for_b(j) for j in jobs]
    rows = [row for chunk in chunks for row in chunk]
    rows.sort(key=lambda r: (r[1], r[2]))
    return rows


def _format_cell(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def write_scan(rows, fh, fmt: str) -> None:
    if fmt == "tsv":
        fh.write("\t".join(SCAN_COLUMNS) + "\n")
        for row in rows:
            fh.write("\t".join(_format_cell(v) for v in row) + "\n")
    else:
        for row in rows:
            record = {"schema": SCHEMA, **dict(zip(SCAN_COLUMNS, row))}
            fh.write(json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n")


# -- subcommand handlers --------------------------------------------------------


def _cmd_analyze(args) -> int:
    try:
        cfg = ScrollConfig(args.e, args.b, args.k)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    bad = strict_violations(cfg)
    if bad:
        for label in bad:
            print(f"{label} violated", file=sys.stderr)
        return EXIT_USAGE
    try:
        data = analyze(cfg, audit_mode=args.audit_mode)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    print(_dumps(data) if args.format == "json" else _render_text(data))
    return EXIT_OK if data["consistent"] else EXIT_INCONSISTENT


def _cmd_scan(args) -> int:
    if args.b_min > args.b_max:
        print("error: --b-min must not exceed --b-max", file=sys.stderr)
        return EXIT_USAGE
    if args.e < 2:
        print("error: scans need e >= 2", file=sys.stderr)
        return EXIT_USAGE
    rows = scan(args.e, args.b_min, args.b_max, workers=args.workers)
    try:
        if args.out == "-":
            write_scan(rows, sys.stdout, args.format)
        else:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                write_scan(rows, fh, args.format)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def _cmd_audit(args) -> int:
    findings = audit_examples()
    if args.format == "json":
        print(_dumps({"schema": SCHEMA, "findings": [f.to_json() for f in findings]}))
    else:
        for f in findings:
            line = (
                f"[{f.example_id}] {f.checked_claim}: printed {f.paper_value}, "
                f"computed {f.computed_value} -> {f.verdict}"
            )
            if f.verdict != MATCH and f.note:
                line += f" ({f.note})"
            print(line)
    return EXIT_OK if gold_case_matches(findings) else EXIT_INCONSISTENT


def _cmd_specialize(args) -> int:
    try:
        general = SplittingType.parse(args.from_)
        special = SplittingType.parse(args.to)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    reason = specialization_failure(general, special)
    if reason is None:
        print("true")
        return EXIT_OK
    print(f"false: {reason}")
    return EXIT_NOT_SPECIALIZATION


def _cmd_hilbert(args) -> int:
    try:
        cfg = ScrollConfig(args.e, args.b, args.k)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    bad = strict_violations(cfg)
    if bad:
        for label in bad:
            print(f"{label} violated", file=sys.stderr)
        return EXIT_USAGE
    hp = scroll.hilbert_polynomial(cfg)
    print(f"P(T) = {hp}")
    for i, c in enumerate(hp.coeffs):
        print(f"T^{i}\t{c}")
    for m in args.eval or []:
        print(f"P({m}) = {hp(m)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scrollcalc",
        description="Exact invariants of threefold scrolls over Hirzebruch surfaces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cfg(p):
        p.add_argument("--e", type=int, required=True, help="Hirzebruch index, e >= 2")
        p.add_argument("--b", type=int, required=True, help="c1 = 3C + b f")
        p.add_argument("--k", type=int, required=True, help="c2")

    p = sub.add_parser("analyze", help="full report for one configuration")
    add_cfg(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument(
        "--audit-mode",
        action="store_true",
        help="flag printed values that disagree when the config is a worked example",
    )
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("scan", help="tabulate every admissible k for a range of b")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--b-min", type=int, required=True)
    p.add_argument("--b-max", type=int, required=True)
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.add_argument("--format", choices=("tsv", "json-lines"), default="tsv")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("audit-examples", help="check the three worked examples")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("specialize", help="does FROM flatly specialize to TO?")
    p.add_argument("--from", dest="from_", required=True, metavar="TYPE")
    p.add_argument("--to", required=True, metavar="TYPE")
    p.set_defaults(func=_cmd_specialize)

    p = sub.add_parser("hilbert-poly", help="Hilbert polynomial of the scroll")
    add_cfg(p)
    p.add_argument("--eval", type=int, action="append", metavar="M")
    p.set_defaults(func=_cmd_hilbert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) if exc.code in (0, None) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
