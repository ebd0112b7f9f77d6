"""Command-line interface.

Subcommands: poly, table, check, zigzag, egf, sokal-k, roots.
Exit codes: 0 success / all checks pass, 1 failed check, 2 usage or input errors.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from .analysis import poly_roots, sokal_constant
from .checks import SUITES, run_suites
from .errors import CapacityError, Graph6Error
from .family import FamilyKind, family_poly
from .graphs import build_named, emit_graph6, parse_graph6
from .oracles import partition_function, zigzag_numbers
from .polynomials import poly_to_json
from .series import egf_reconstruct
from .tutte import tutte_subset

KIND_MAP = {
    "coadjoint": FamilyKind.COADJOINT,
    "adjoint": FamilyKind.ADJOINT,
    "chromatic": FamilyKind.CHROMATIC,
    "matching": FamilyKind.MATCHING,
}

_NAME_RE = re.compile(r"^([KPCE])(\d+)(?:,(\d+))?$", re.IGNORECASE)


def parse_graph_name(name):
    m = _NAME_RE.match(name.strip())
    if not m:
        raise ValueError(f"unknown graph name {name!r} (expected K<n>, K<m>,<n>, P<n>, C<n>, E<n>)")
    letter = m.group(1).upper()
    a = int(m.group(2))
    b = m.group(3)
    if b is not None:
        if letter != "K":
            raise ValueError(f"two sizes only make sense for K<m>,<n>, got {name!r}")
        return build_named("complete_bipartite", a, int(b))
    family = {"K": "complete", "P": "path", "C": "cycle", "E": "empty"}[letter]
    return build_named(family, a)


def render_bipoly(bp, xvar="x", yvar="y"):
    terms = []
    for i in range(len(bp.coeffs) - 1, -1, -1):
        row = bp.coeffs[i]
        for j in range(len(row) - 1, -1, -1):
            c = row[j]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if terms else "")
            mag = abs(c)
            body = ""
            if i:
                body += xvar if i == 1 else f"{xvar}^{i}"
            if j:
                body += yvar if j == 1 else f"{yvar}^{j}"
            if not body or mag != 1:
                body = f"{mag}{body}"
            terms.append(sign + body)
    return "".join(terms) or "0"


def _emit_poly(g, kind_name, out, fmt, weight=Fraction(-2)):
    if kind_name == "tutte":
        if fmt == "json":
            t = tutte_subset(g)
            out.write(json.dumps({
                "graph": emit_graph6(g),
                "kind": "tutte",
                "coeffs": [[str(c) for c in row] for row in t.coeffs],
            }) + "\n")
        else:
            out.write(render_bipoly(tutte_subset(g)) + "\n")
        return
    if kind_name == "z":
        p = partition_function(g, weight)
        var = "q"
    else:
        p = family_poly(g, KIND_MAP[kind_name])
        var = "x"
    if fmt == "json":
        record = {"graph": emit_graph6(g), "kind": kind_name}
        record.update(poly_to_json(p, var))
        out.write(json.dumps(record) + "\n")
    else:
        out.write(p.render(var) + "\n")


def cmd_poly(args, out):
    if args.graph6 is not None:
        graphs = [parse_graph6(args.graph6)]
    elif args.stdin:
        graphs = [parse_graph6(line) for line in sys.stdin if line.strip()]
    else:
        graphs = [parse_graph_name(args.graph)]
    weight = Fraction(args.weight)
    for g in graphs:
        _emit_poly(g, args.kind, out, args.format, weight)
    return 0


def table_rows(which, max_n):
    rows = []
    for n in range(1, max_n + 1):
        if which == "kn":
            g = build_named("complete", n)
            label = f"K_{n}"
        else:
            g = build_named("complete_bipartite", n, n)
            label = f"K_{{{n},{n}}}"
        rows.append((label, g, family_poly(g, FamilyKind.COADJOINT)))
    return rows


def cmd_table(args, out):
    rows = table_rows(args.which, args.max)
    if args.format == "text":
        for label, _, p in rows:
            out.write(f"P({label},x)={p.render()}\n")
    elif args.format == "json":
        payload = []
        for label, g, p in rows:
            record = {"name": label, "graph": emit_graph6(g), "kind": "coadjoint"}
            record.update(poly_to_json(p))
            payload.append(record)
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        for label, _, p in rows:
            out.write(",".join([label] + [str(c) for c in p.coeffs]) + "\n")
    return 0


def cmd_check(args, out):
    names = list(SUITES) if args.which == "all" else [args.which]
    results = run_suites(names, max_n=args.max_n)
    failures = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        detail = f"  ({r.detail})" if r.detail else ""
        out.write(f"{status}  {r.name}{detail}\n")
        failures += 0 if r.passed else 1
    out.write(f"{len(results) - failures}/{len(results)} checks passed\n")
    return 0 if failures == 0 else 1


def cmd_zigzag(args, out):
    for n, e in enumerate(zigzag_numbers(args.max)):
        out.write(f"E_{n} = {e}\n")
    return 0


def cmd_egf(args, out):
    for n, p in enumerate(egf_reconstruct(args.order)):
        out.write(f"p_{n}(x)={p.render()}\n")
    return 0


def cmd_sokal_k(args, out):
    out.write(f"{sokal_constant(args.tol):.6f}\n")
    return 0


def cmd_roots(args, out):
    g = parse_graph_name(args.graph)
    p = family_poly(g, FamilyKind.COADJOINT)
    if p.degree < 1:
        raise ValueError("polynomial has no roots")
    rs = poly_roots(p)
    for r, res in sorted(zip(rs.roots, rs.residuals), key=lambda t: abs(t[0])):
        out.write(f"{r.real:+.12f}{r.imag:+.12f}i  residual {res:.2e}\n")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coadjoint",
        description="Exact computation of the co-adjoint graph polynomial family",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="compute a polynomial for one graph or a graph6 stream")
    p.add_argument("--kind", required=True, choices=[*KIND_MAP, "tutte", "z"])
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="named graph: K4, K3,3, P5, C6, E3")
    src.add_argument("--graph6", help="one graph6 string")
    src.add_argument("--stdin", action="store_true", help="graph6 lines on standard input")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--weight", default="-2", help="edge weight for --kind z (exact rational)")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("table", help="co-adjoint polynomial tables for K_n or K_n,n")
    p.add_argument("which", choices=["kn", "knn"])
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", help="run the identity suites")
    p.add_argument("which", choices=[*SUITES, "all"])
    p.add_argument("--max-n", type=int, default=5, help="vertex cap; 6 is the slow exhaustive setting")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("zigzag", help="zigzag numbers E_0..E_max")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_zigzag)

    p = sub.add_parser("egf", help="polynomials reconstructed from exp(xF(z))")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_egf)

    p = sub.add_parser("sokal-k", help="the root-bound constant")
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_sokal_k)

    p = sub.add_parser("roots", help="complex roots of the co-adjoint polynomial")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_roots)

    return parser


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args, out)
    except (ValueError, CapacityError, Graph6Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
