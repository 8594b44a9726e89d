"""Command-line front end.

    pontclass classify SO:5,3 [--certificates]
    pontclass table [--max-pq 10] [--max-n 6] [--format text|json] [--parallel N]
    pontclass chern G2(2) [--max-degree 4]
    pontclass verify [--json]

Exit status: 0 on success, 1 when a verdict disagrees with the expected list
or an oracle check fails, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from functools import lru_cache
from typing import Sequence

from . import __version__
from .charclass import ComplexGroupError, group_chern, pontryagin_classes, total_chern
from .classify import VanishingReport, classify, classify_many, classify_product
from .exactpoly import MultiPoly, UsageError, render
from .groupdata import TOKEN_TABLE, catalog, isotropy_data, parse_group
from .oracle import run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@lru_cache(maxsize=1)
def catalog_checksum() -> str:
    """Digest of the curated data for the default catalog."""
    h = hashlib.sha256()
    for spec in catalog():
        data = isotropy_data(spec)
        names = data.variable_names
        h.update(spec.token.encode())
        h.update(repr([[str(c) for c in w] for w in data.weights]).encode())
        h.update(str(data.zero_weight_count).encode())
        for idx, rep in data.relations:
            h.update(f"{idx}:{render(rep, names)}".encode())
        for g in data.kernel_gens:
            h.update(render(g, names).encode())
    return h.hexdigest()[:16]


def _envelope(kind: str, payload) -> str:
    doc = {
        "tool_version": __version__,
        "catalog_checksum": catalog_checksum(),
        "kind": kind,
        "payload": payload,
    }
    return json.dumps(doc, indent=2, ensure_ascii=False)


def _use_color() -> bool:
    return "PONTCLASS_NO_COLOR" not in os.environ and sys.stdout.isatty()


def _mark(ok: bool, color: bool) -> str:
    sym = "✓" if ok else "✗"
    if not color:
        return sym
    return f"\033[32m{sym}\033[0m" if ok else f"\033[31m{sym}\033[0m"


def _report_text(r: VanishingReport, certificates: bool = False) -> str:
    lines = [f"{r.spec.label}  [{r.spec.token}]  dim M = {r.dim_M}  route = {r.route}"]
    names = r.variable_names
    if r.p1_poly is not None:
        lines.append(f"  p1 = {render(r.p1_poly, names)}")
        lines.append(f"  p2 = {render(r.p2_poly, names)}")
        lines.append("  kernel generators: " + "; ".join(render(g, names) for g in r.kernel_generators))
    lines.append(f"  p1 vanishes: {r.p1_vanishes}   p2 vanishes: {r.p2_vanishes}")
    lines.append(f"  on the vanishing list: {r.on_vanishing_list}   agrees: {r.agrees_with_list}")
    if certificates and r.certificates is not None:
        for key, res in zip(("p1", "p2"), r.certificates):
            if res.in_ideal:
                parts = [f"({c})*{render_mono(m, names)}*g{j + 1}" for j, m, c in res.certificate]
                lines.append(f"  {key} = " + (" + ".join(parts) if parts else "0"))
    return "\n".join(lines)


def render_mono(mono, names) -> str:
    return render(MultiPoly(len(names), {mono: 1}), names)


def _table_text(reports: Sequence[VanishingReport], color: bool) -> str:
    head = f"{'group':<12} {'token':<10} {'dim M':>6}  p1=0  p2=0  listed  agrees"
    rows = [head, "-" * len(head)]
    for r in reports:
        rows.append(
            f"{r.spec.label:<12} {r.spec.token:<10} {r.dim_M:>6}  "
            f"{_mark(r.p1_vanishes, color):^4}  {_mark(r.p2_vanishes, color):^4}  "
            f"{_mark(r.on_vanishing_list, color):^6}  {_mark(r.agrees_with_list, color):^6}"
        )
    bad = sum(not r.agrees_with_list for r in reports)
    rows.append(f"{len(reports)} groups, {bad} disagreement(s)")
    return "\n".join(rows)


def cmd_classify(args) -> int:
    specs = [parse_group(t) for t in args.groups]
    if len(specs) == 1:
        report = classify(specs[0])
        if args.format == "json":
            print(_envelope("classify", report.to_dict(args.certificates)))
        else:
            print(_report_text(report, args.certificates))
        return EXIT_OK if report.agrees_with_list else EXIT_FAIL
    product = classify_product(specs)
    if args.format == "json":
        payload = {
            "factors": [f.to_dict(args.certificates) for f in product.factors],
            "all_vanish": product.all_vanish,
        }
        print(_envelope("classify-product", payload))
    else:
        print("\n".join(_report_text(f, args.certificates) for f in product.factors))
        print(f"all p_i of the product vanish: {product.all_vanish}")
    return EXIT_OK if all(f.agrees_with_list for f in product.factors) else EXIT_FAIL


def cmd_table(args) -> int:
    if args.max_pq < 2 or args.max_n < 1:
        raise UsageError("bounds too small: need --max-pq >= 2 and --max-n >= 1")
    if args.parallel < 1:
        raise UsageError("--parallel must be at least 1")
    reports = classify_many(catalog(args.max_pq, args.max_n), args.parallel)
    if args.format == "json":
        print(_envelope("table", [r.to_dict() for r in reports]))
    else:
        print(_table_text(reports, _use_color()))
    return EXIT_OK if all(r.agrees_with_list for r in reports) else EXIT_FAIL


def cmd_chern(args) -> int:
    spec = parse_group(args.group)
    if spec.is_complex:
        raise ComplexGroupError(
            f"{spec.label} is a complex group: its Pontryagin classes vanish by rule, "
            "so there is no isotropy computation to show"
        )
    if args.max_degree < 0:
        raise UsageError("--max-degree must be non-negative")
    data = isotropy_data(spec)
    chern = group_chern(spec) if args.max_degree == 4 else total_chern(data.weights, data.arity, args.max_degree)
    names = data.variable_names
    comps = {f"c{k}": render(chern.component(k), names) for k in range(args.max_degree + 1)}
    pair = pontryagin_classes(spec)
    rnames = data.reduced_names
    rels = [f"{names[idx]} = {render(rep, names)}" for idx, rep in data.relations]
    p = {"p1": render(pair.p1, rnames), "p2": render(pair.p2, rnames)}
    if args.format == "json":
        payload = {
            "group": spec.token,
            "variables": list(names),
            "relations": rels,
            "reduced_variables": list(rnames),
            "chern": comps,
            **p,
        }
        print(_envelope("chern", payload))
        return EXIT_OK
    print(f"{spec.label}  [{spec.token}]  variables: {', '.join(names)}")
    print(f"  {len(data.weights)} nonzero weights, {data.zero_weight_count} zero weights")
    for k, v in comps.items():
        print(f"  {k} = {v}")
    for r in rels:
        print(f"  relation: {r}")
    print(f"  p1 = {p['p1']}")
    print(f"  p2 = {p['p2']}")
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_checks()
    ok = all(r.passed for r in results)
    if args.json:
        print(_envelope("verify", {"passed": ok, "checks": [r.to_dict() for r in results]}))
    else:
        color = _use_color()
        for r in results:
            print(f"{_mark(r.passed, color)} {r.name}")
            if not r.passed and r.detail:
                print(f"    {r.detail}")
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    tokens = ", ".join(sorted(k for k in TOKEN_TABLE if "_" not in k))
    parser = argparse.ArgumentParser(
        prog="pontclass",
        description="Decide vanishing of p1 and p2 for compact quotients of symmetric spaces.",
        epilog=f"group tokens: {tokens}; parameters follow a colon, e.g. SO:5,3",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one group, or a product of several")
    p.add_argument("groups", nargs="+", metavar="GROUP")
    p.add_argument("--certificates", action="store_true", help="include ideal-membership witnesses")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="sweep the catalog and compare with the vanishing list")
    p.add_argument("--max-pq", type=int, default=10, help="bound on p+q (default 10)")
    p.add_argument("--max-n", type=int, default=6, help="bound on n (default 6)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--parallel", type=int, default=1, metavar="N", help="worker processes")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("chern", help="print Chern and Pontryagin classes of the isotropy representation")
    p.add_argument("group", metavar="GROUP")
    p.add_argument("--max-degree", type=int, default=4, help="truncation degree (polynomial degree)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("verify", help="run the independent oracle checks")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"pontclass: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
