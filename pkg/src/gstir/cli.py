"""Command-line surface: the `gstir` binary.

Subcommands: count, bell, poly, seq, triangle, verify. Exit codes:
0 success, 1 usage or parse error, 2 computation error (size cap, no
closed form, out of domain), 3 formula/oracle verification mismatch.
Output is byte-identical across runs for identical flags.
"""

import argparse
import json
import sys

from . import formulas, graphs, oracle, sequences, verify
from .exact import InexactDivision
from .formulas import OutOfDomain


class NoFormula(ValueError):
    """No closed form covers the requested graph family / block count."""


def formula_count(spec, k: int) -> int:
    """Closed-form S(G;k) for the families that have one."""
    if isinstance(spec, graphs.Multipartite):
        return formulas.multipartite_stirling(
            formulas.MultipartiteSpec(spec.sizes), k)
    if isinstance(spec, graphs.Edgeless):
        return formulas.multipartite_stirling(
            formulas.MultipartiteSpec((spec.n,)), k) if spec.n >= 1 else 0
    if isinstance(spec, graphs.BipartiteMinusMatching):
        return formulas.km_stirling(spec.n, k)
    if isinstance(spec, graphs.Mycielskian) and isinstance(spec.inner,
                                                           graphs.Star):
        n = spec.inner.n
        if k == 3 and n >= 2:
            return formulas.myc_star_stirling3(n)
        if k == 2 * n:
            return formulas.myc_star_stirling_2n(n)
        raise NoFormula(
            f"Myc(St({n})) has closed forms only for k=3 and k={2 * n}; "
            "use --method oracle")
    raise NoFormula(_no_formula_hint(spec))


def formula_bell(spec) -> int:
    """Closed-form B(G) for the families that have one."""
    if isinstance(spec, graphs.Multipartite):
        return formulas.multipartite_bell(formulas.MultipartiteSpec(spec.sizes))
    if isinstance(spec, graphs.Edgeless):
        from .exact import bell
        return bell(spec.n)
    if isinstance(spec, graphs.BipartiteMinusMatching):
        return formulas.km_bell(spec.n)
    if isinstance(spec, graphs.Mycielskian) and isinstance(spec.inner,
                                                           graphs.Star):
        return formulas.myc_star_bell(spec.inner.n)
    raise NoFormula(_no_formula_hint(spec))


def formula_profile(spec) -> dict:
    """Closed-form full profile {k: count}; multipartite and KM only."""
    if isinstance(spec, (graphs.Multipartite, graphs.Edgeless)):
        sizes = spec.sizes if isinstance(spec, graphs.Multipartite) \
            else (spec.n,)
        mspec = formulas.MultipartiteSpec(sizes)
        n = sum(sizes)
        return {k: v for k in range(1, n + 1)
                if (v := formulas.multipartite_stirling(mspec, k))}
    if isinstance(spec, graphs.BipartiteMinusMatching):
        n = spec.n
        return {k: v for k in range(1, 2 * n + 1)
                if (v := formulas.km_stirling(n, k))}
    raise NoFormula(_no_formula_hint(spec))


def _no_formula_hint(spec):
    if isinstance(spec, graphs.Tree):
        n = len(spec.parents)
        return (f"no closed-form profile for trees; use --method oracle "
                f"(the total is the classical Bell number of {n - 1})")
    if isinstance(spec, graphs.Mycielskian):
        return ("closed forms cover Mycielskians of stars only (k=3, k=2n, "
                "bell); use --method oracle")
    return (f"no closed form for {graphs.render_graph_spec(spec)}; "
            "use --method oracle")


def _oracle_kwargs(args):
    kw = {"jobs": args.jobs, "force": args.force}
    return kw


def _profile_json(spec_text, prof_counts, order, bell_value, method):
    return json.dumps({
        "graph": spec_text,
        "order": order,
        "stirling": {str(k): str(v) for k, v in sorted(prof_counts.items())},
        "bell": str(bell_value),
        "method": method,
    }, sort_keys=True)


def _emit_profile(args, spec_text, counts, order, bell_value, method, out):
    if args.format == "json":
        out.write(_profile_json(spec_text, counts, order, bell_value, method)
                  + "\n")
    elif args.format == "csv":
        for k, v in sorted(counts.items()):
            out.write(f"{k},{v}\n")
    else:
        for k, v in sorted(counts.items()):
            out.write(f"S(G;{k}) = {v}\n")
        out.write(f"B(G) = {bell_value}\n")


def cmd_count(args, out):
    spec = graphs.parse_graph_spec(args.graph)
    spec_text = graphs.render_graph_spec(spec)
    if args.k is None:
        return _count_profile(args, spec, spec_text, out)
    results = {}
    if args.method in ("oracle", "both"):
        g = graphs.realize(spec)
        prof = oracle.stirling_profile(g, **_oracle_kwargs(args))
        results["oracle"] = prof[args.k]
    if args.method in ("formula", "both"):
        results["formula"] = formula_count(spec, args.k)
    match = None
    if len(results) == 2:
        match = results["formula"] == results["oracle"]
    if args.format == "json":
        d = {"graph": spec_text, "k": args.k,
             **{m: str(v) for m, v in results.items()}}
        if match is not None:
            d["match"] = match
        out.write(json.dumps(d, sort_keys=True) + "\n")
    elif args.format == "csv":
        for m in sorted(results):
            out.write(f"{m},{results[m]}\n")
    else:
        if match is None:
            out.write(f"{next(iter(results.values()))}\n")
        else:
            flag = "match" if match else "MISMATCH"
            out.write(f"formula={results['formula']} "
                      f"oracle={results['oracle']} {flag}\n")
    return 3 if match is False else 0


def _count_profile(args, spec, spec_text, out):
    order = graphs.realize(spec).order
    profiles = {}
    if args.method in ("oracle", "both"):
        g = graphs.realize(spec)
        prof = oracle.stirling_profile(g, **_oracle_kwargs(args))
        profiles["oracle"] = (prof.counts, prof.bell)
    if args.method in ("formula", "both"):
        counts = formula_profile(spec)
        profiles["formula"] = (counts, sum(counts.values()))
    match = None
    if len(profiles) == 2:
        match = profiles["formula"] == profiles["oracle"]
    for method, (counts, bell_value) in sorted(profiles.items()):
        _emit_profile(args, spec_text, counts, order, bell_value, method, out)
    if match is not None and args.format == "plain":
        out.write("match\n" if match else "MISMATCH\n")
    return 3 if match is False else 0


def cmd_bell(args, out):
    spec = graphs.parse_graph_spec(args.graph)
    results = {}
    if args.method in ("oracle", "both"):
        g = graphs.realize(spec)
        results["oracle"] = oracle.bell_of(g, **_oracle_kwargs(args))
    if args.method in ("formula", "both"):
        results["formula"] = formula_bell(spec)
    match = None
    if len(results) == 2:
        match = results["formula"] == results["oracle"]
    if args.format == "json":
        d = {"graph": graphs.render_graph_spec(spec),
             **{m: str(v) for m, v in results.items()}}
        if match is not None:
            d["match"] = match
        out.write(json.dumps(d, sort_keys=True) + "\n")
    elif args.format == "csv":
        for m in sorted(results):
            out.write(f"{m},{results[m]}\n")
    else:
        if match is None:
            out.write(f"{next(iter(results.values()))}\n")
        else:
            flag = "match" if match else "MISMATCH"
            out.write(f"formula={results['formula']} "
                      f"oracle={results['oracle']} {flag}\n")
    return 3 if match is False else 0


def _render_poly(poly: oracle.Polynomial) -> str:
    terms = []
    for k, c in enumerate(poly.coefficients):
        if c == 0:
            continue
        if k == 0:
            t = str(c)
        else:
            x = "x" if k == 1 else f"x^{k}"
            if c == 1:
                t = x
            elif c == -1:
                t = f"-{x}"
            else:
                t = f"{c}{x}"
        terms.append(t)
    if not terms:
        return "0"
    text = terms[0]
    for t in terms[1:]:
        text += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return text


def cmd_poly(args, out):
    spec = graphs.parse_graph_spec(args.graph)
    g = graphs.realize(spec)
    if args.kind == "partition":
        poly = oracle.partition_polynomial(g, **_oracle_kwargs(args))
    else:
        poly = oracle.chromatic_polynomial(g, **_oracle_kwargs(args))
    if args.format == "json":
        out.write(json.dumps({
            "graph": graphs.render_graph_spec(spec),
            "kind": args.kind,
            "basis": poly.basis,
            "coefficients": [str(c) for c in poly.coefficients],
        }, sort_keys=True) + "\n")
    elif args.format == "csv":
        for k, c in enumerate(poly.coefficients):
            out.write(f"{k},{c}\n")
    else:
        out.write(f"{_render_poly(poly)}  ({poly.basis} basis)\n")
    return 0


def cmd_seq(args, out):
    values = sequences.sequence_values(args.id, args.start, args.stop)
    if args.format == "bfile":
        sequences.write_bfile(values, out)
    elif args.format == "json":
        out.write(sequences.sequence_json(args.id, values) + "\n")
    elif args.format == "csv":
        out.write(sequences.sequence_csv(values))
    else:
        out.write(",".join(str(v) for _, v in values) + "\n")
    return 0


def cmd_triangle(args, out):
    rows = [sequences.triangle_row(args.id, n)
            for n in range(1, args.rows + 1)]
    if args.format == "json":
        out.write(sequences.triangle_json(args.id, rows) + "\n")
    elif args.format == "csv":
        out.write(sequences.triangle_csv(rows))
    elif args.format == "bfile":
        raise NoFormula("triangles have no b-file form; use csv or json")
    else:
        for r in rows:
            out.write(f"n={r.n}: " + " ".join(map(str, r.entries)) + "\n")
    return 0


def cmd_verify(args, out):
    kw = _oracle_kwargs(args)
    report = verify.run_family(args.family, args.max_n, **kw)
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        out.write(report.to_plain())
        ok = report.all_oracle_ok
        nmis = len(report.paper_mismatches)
        out.write(f"family={report.family} cases={len(report.cases)} "
                  f"formula-vs-oracle={'all ok' if ok else 'MISMATCH'} "
                  f"published-table-disagreements={nmis}\n")
    return 0 if report.all_oracle_ok else 3


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gstir",
        description="Exact proper-partition counting for graph families")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, method=True):
        p.add_argument("--format", choices=["plain", "json", "csv", "bfile"],
                       default="plain")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--force", action="store_true",
                       help="lift the oracle's vertex-count cap")
        if method:
            p.add_argument("--method",
                           choices=["oracle", "formula", "both"],
                           default="oracle")

    p = sub.add_parser("count", help="S(G;k) or the full profile")
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bell", help="total proper partitions B(G)")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("poly", help="partition or chromatic polynomial")
    p.add_argument("graph")
    p.add_argument("kind", choices=["partition", "chromatic"])
    common(p, method=False)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("seq", help="terms of a registered sequence")
    p.add_argument("id")
    p.add_argument("start", type=int)
    p.add_argument("stop", type=int)
    common(p, method=False)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("triangle", help="rows of a registered triangle")
    p.add_argument("id")
    p.add_argument("--rows", type=int, default=6)
    common(p, method=False)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("verify",
                       help="cross-check formulas, oracle, published tables")
    p.add_argument("family", choices=sorted(verify.FAMILIES))
    p.add_argument("--max-n", type=int, default=3)
    common(p, method=False)
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 1 if e.code else 0
    try:
        return args.func(args, out)
    except graphs.ParseError as e:
        print(f"gstir: {e}", file=sys.stderr)
        return 1
    except (oracle.TooLarge, NoFormula, OutOfDomain, InexactDivision,
            graphs.InvalidSize, graphs.NotATree,
            sequences.NotALinearSequence, sequences.NotATriangle,
            sequences.NonMonotoneIndex, KeyError, ValueError) as e:
        print(f"gstir: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
