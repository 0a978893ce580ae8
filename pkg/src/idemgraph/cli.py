"""Command-line front end.

Subcommands: verify (claim-by-claim check suite, exit code 1 on any
failed claim), report (metrics next to their closed-form expectations),
export (graph as DOT, edge list, or JSON report), enumerate (idempotent
set as JSON).  All outputs are deterministic: identical invocations
produce byte-identical bytes.  Exit codes: 0 success, 1 failed claim,
2 usage or field-construction error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .field import GF, parse_modulus
from .graph import (
    GraphKind,
    all_pairs_distances,
    build_graph,
    components,
    diameter,
    dot_text,
    edgelist_text,
    girth,
    harary,
    wiener,
)
from .idempotents import DEFAULT_BRUTE_FORCE_CAP, enumerate_constructive
from .verify import DEFAULT_SWEEP, GraphReport, expected_values, verify_all

CAP_ENV_VAR = "IDEMGRAPH_CAP"


def _add_field_args(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--p", type=int, required=required, help="prime characteristic")
    parser.add_argument("--k", type=int, default=1, help="extension degree (default 1)")
    parser.add_argument(
        "--modulus",
        type=str,
        default=None,
        help='modulus coefficients, constant term first, e.g. "1,1,1"',
    )
    parser.add_argument(
        "--cap",
        type=int,
        default=None,
        help=f"brute-force candidate cap (default {DEFAULT_BRUTE_FORCE_CAP}; "
        f"env {CAP_ENV_VAR} overrides)",
    )


def _resolve_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get(CAP_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_BRUTE_FORCE_CAP


def _make_field(args) -> GF:
    modulus = parse_modulus(args.modulus) if args.modulus else None
    return GF(args.p, args.k, modulus)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _claim_table(report: GraphReport) -> str:
    headers = ("claim", "computed", "expected", "status")
    rows = [(c.name, c.computed, c.expected, c.status) for c in report.claims]
    widths = [
        max(len(headers[i]), max((len(r[i]) for r in rows), default=0))
        for i in range(4)
    ]
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip(),
        "  ".join("-" * widths[i] for i in range(4)),
    ]
    for r in rows:
        lines.append("  ".join(r[i].ljust(widths[i]) for i in range(4)).rstrip())
    return "\n".join(lines)


def _field_line(report: GraphReport) -> str:
    return (
        f"field GF({report.q}): p={report.p} k={report.k} "
        f"modulus={','.join(str(c) for c in report.modulus)}"
    )


def cmd_verify(args) -> int:
    cap = _resolve_cap(args)
    if args.sweep:
        pairs = DEFAULT_SWEEP
    else:
        if args.p is None:
            print("error: --p is required without --sweep", file=sys.stderr)
            return 2
        pairs = ((args.p, args.k),)
    reports = []
    for p, k in pairs:
        gf = GF(p, k, parse_modulus(args.modulus) if args.modulus and not args.sweep else None)
        report = verify_all(gf, cap)
        reports.append(report)
        print(_field_line(report))
        print(_claim_table(report))
        for entry in report.witness_audit:
            if entry["known_limited"] and entry["witness_failures"]:
                print(f"note: {entry['name']}: {entry['note']}")
        failed = report.failed_claims()
        if failed:
            print(f"FAILED: {len(failed)} of {len(report.claims)} claims")
        else:
            print(f"all {len(report.claims)} claims passed")
        print()
    if args.out:
        if args.sweep:
            doc = [r.to_json_dict() for r in reports]
        else:
            doc = reports[0].to_json_dict()
        _emit(_json_text(doc), args.out)
    return 0 if all(r.all_passed for r in reports) else 1


def cmd_report(args) -> int:
    gf = _make_field(args)
    exp = expected_values(gf.q)
    idems = enumerate_constructive(gf)
    gid = build_graph(idems, GraphKind.GID)
    dist = all_pairs_distances(gid)
    degs = gid.degrees()
    rows = [
        ("idempotents", str(len(idems.members)), str(exp["idempotent_count"])),
        ("vertices", str(gid.vertex_count), str(exp["vertex_count"])),
        ("degree", f"{min(degs)}..{max(degs)}", f"{exp['degree']}..{exp['degree']}"),
        ("edges", str(gid.edge_count()), str(exp["edge_count"])),
        ("diameter", str(diameter(gid, dist)), str(exp["diameter"])),
        ("girth", str(girth(gid)), str(exp["girth"])),
        ("components", str(components(gid)), "1"),
        ("wiener", str(wiener(gid, dist)), str(exp["wiener"])),
        ("harary", str(harary(gid, dist)), str(exp["harary"])),
    ]
    print(
        f"field GF({gf.q}): p={gf.p} k={gf.k} modulus={gf.modulus_str()}"
    )
    sizes = idems.class_sizes()
    print("class sizes: " + " ".join(f"{c.value}={n}" for c, n in sizes.items()))
    width = max(len(r[0]) for r in rows)
    print(f"{'quantity'.ljust(width)}  computed  expected")
    for name, computed, expected in rows:
        print(f"{name.ljust(width)}  {computed:>8}  {expected:>8}")
    return 0


def cmd_export(args) -> int:
    gf = _make_field(args)
    if args.format == "json":
        report = verify_all(gf, _resolve_cap(args))
        _emit(_json_text(report.to_json_dict()), args.out)
        return 0
    if not args.kind:
        print("error: --kind is required for dot/edgelist exports", file=sys.stderr)
        return 2
    idems = enumerate_constructive(gf)
    kind = GraphKind.IR if args.kind == "ir" else GraphKind.GID
    g = build_graph(idems, kind)
    text = edgelist_text(g) if args.format == "edgelist" else dot_text(g)
    _emit(text, args.out)
    return 0


def cmd_enumerate(args) -> int:
    gf = _make_field(args)
    idems = enumerate_constructive(gf)
    _emit(_json_text(idems.to_json_dict()), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idemgraph",
        description="Idempotents of the 2x2 matrix ring over GF(p^k) and their graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the full claim suite")
    _add_field_args(p_verify, required=False)
    p_verify.add_argument("--out", type=str, default=None, help="write JSON report here")
    p_verify.add_argument(
        "--sweep", action="store_true", help="verify every prime power q <= 13"
    )
    p_verify.set_defaults(func=cmd_verify)

    p_report = sub.add_parser("report", help="print metrics next to expectations")
    _add_field_args(p_report)
    p_report.set_defaults(func=cmd_report)

    p_export = sub.add_parser("export", help="write the graph to a file or stdout")
    _add_field_args(p_export)
    p_export.add_argument("--kind", choices=("ir", "gid"), default=None)
    p_export.add_argument("--format", choices=("dot", "edgelist", "json"), required=True)
    p_export.add_argument("--out", type=str, default=None)
    p_export.set_defaults(func=cmd_export)

    p_enum = sub.add_parser("enumerate", help="write the idempotent set as JSON")
    _add_field_args(p_enum)
    p_enum.add_argument("--out", type=str, default=None)
    p_enum.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
