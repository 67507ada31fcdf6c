"""Command-line front end.

    chromnsym expand  --digraph D.json [--basis psi|h|r]
    chromnsym project --digraph D.json
    chromnsym verify  --digraph D.json [--oracle-colors M]
    chromnsym alpha   --digraph D.json --subset 0,2
    chromnsym star    --n K [--check]
    chromnsym rewrite --family DIR --target psi:1,2
    chromnsym random  --vertices N --arcs M --seed S

Exit status: 0 success, 1 failed verification, 2 input error.
"""

import argparse
import json
import sys

from . import config
from .chromatic import (
    GeneratorFamily,
    chromatic_nsym,
    inward_star,
    rewrite_in_generators,
    star_closed_form,
    substitute_generators,
    verify_projection,
)
from .combinatorics import as_composition
from .digraph import Digraph, alpha, component_tuple, random_digraph, total_degree
from .errors import InputError, IntegrityError
from .nsym import NSymElement, basis_tag, chi, convert

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


def render(element, fmt):
    if fmt == "json":
        return json.dumps({"basis": element.basis, "terms": element.to_json()})
    if fmt == "latex":
        return element.to_latex()
    return element.to_text()


def parse_subset(text):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise InputError(f"--subset must be comma-separated arc indices, got {text!r}") from None


def parse_target(text):
    """`psi:1,2` or `psi:[1,2]` -> Psi_(1,2); `psi:` or `psi:[]` is the unit."""
    basis, sep, body = text.partition(":")
    if not sep or basis_tag(basis) != "Psi":
        raise InputError(f"--target must look like psi:1,2, got {text!r}")
    body = body.strip().strip("[]").strip()
    try:
        parts = [int(tok) for tok in body.split(",")] if body else []
    except ValueError:
        raise InputError(f"bad composition in --target {text!r}") from None
    return NSymElement("Psi", {as_composition(parts): 1})


def cmd_expand(args, out):
    x = chromatic_nsym(Digraph.load(args.digraph), args.jobs)
    print(render(convert(x, basis_tag(args.basis)), args.format), file=out)
    return EXIT_OK


def cmd_project(args, out):
    x = chromatic_nsym(Digraph.load(args.digraph), args.jobs)
    print(render(chi(x), args.format), file=out)
    return EXIT_OK


def cmd_verify(args, out):
    d = Digraph.load(args.digraph)
    if args.oracle_colors is not None and args.oracle_colors < 1:
        raise InputError("--oracle-colors must be positive")
    report = verify_projection(d, args.jobs, args.oracle_colors)
    if args.format == "json":
        print(json.dumps(report.to_json()), file=out)
    else:
        r = (lambda e: e.to_latex()) if args.format == "latex" else (lambda e: e.to_text())
        print(f"chi(X_D) = {r(report.lifted)}", file=out)
        print(f"X_G      = {r(report.stanley)}", file=out)
        print(f"projection: {'equal' if report.equal else 'DIFFERENT'}", file=out)
        if report.oracle_colors is not None:
            verdict = "equal" if report.oracle_equal else "DIFFERENT"
            print(f"coloring oracle ({report.oracle_colors} colors): {verdict}", file=out)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_alpha(args, out):
    d = Digraph.load(args.digraph)
    s = d.subset_from_indices(parse_subset(args.subset))
    comp = alpha(d, s)
    tup = component_tuple(d, s)
    tds = [total_degree(d, c) for c in tup]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "subset": [list(a) for a in s],
                    "alpha": list(comp),
                    "components": [list(c) for c in tup],
                    "total_degrees": tds,
                }
            ),
            file=out,
        )
    else:
        print(f"alpha: [{','.join(map(str, comp))}]", file=out)
        blocks = " ".join("{" + ",".join(map(str, c)) + "}" for c in tup)
        print(f"components: {blocks}", file=out)
        print(f"total degrees: {' '.join(map(str, tds))}", file=out)
    return EXIT_OK


def cmd_star(args, out):
    if args.n < 0:
        raise InputError("--n must be nonnegative")
    closed = star_closed_form(args.n)
    print(render(closed, args.format), file=out)
    if args.check:
        ok = chromatic_nsym(inward_star(args.n + 1), args.jobs) == closed
        print(f"check: {'equal' if ok else 'DIFFERENT'}", file=sys.stderr)
        return EXIT_OK if ok else EXIT_FAILED
    return EXIT_OK


def cmd_rewrite(args, out):
    fam = GeneratorFamily.load_dir(args.family)
    target = parse_target(args.target)
    poly = rewrite_in_generators(fam, target)
    if args.format == "json":
        print(json.dumps({"target": target.to_json(), "polynomial": poly.to_json()}), file=out)
    elif args.format == "latex":
        print(poly.to_latex(), file=out)
    else:
        print(poly.to_text(), file=out)
    if args.check:
        ok = substitute_generators(fam, poly) == target
        print(f"check: {'equal' if ok else 'DIFFERENT'}", file=sys.stderr)
        return EXIT_OK if ok else EXIT_FAILED
    return EXIT_OK


def cmd_random(args, out):
    d = random_digraph(args.vertices, args.arcs, seed=args.seed)
    print(json.dumps(d.to_json()), file=out)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for subset sums")
    common.add_argument("--edge-cap", type=int, help="max arcs/edges for 2^|E| sums")
    common.add_argument("--degree-cap", type=int, help="max degree for enumerations")

    parser = argparse.ArgumentParser(
        prog="chromnsym", description="Chromatic noncommutative symmetric functions of digraphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="print X_D in Psi, H or R")
    p.add_argument("--digraph", required=True)
    p.add_argument("--basis", default="psi", choices=("psi", "h", "r", "Psi", "H", "R"))
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("project", parents=[common], help="print chi(X_D) in the p basis")
    p.add_argument("--digraph", required=True)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("verify", parents=[common], help="check chi(X_D) = X_G")
    p.add_argument("--digraph", required=True)
    p.add_argument("--oracle-colors", type=int, metavar="M")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("alpha", parents=[common], help="alpha(S) for an arc subset")
    p.add_argument("--digraph", required=True)
    p.add_argument("--subset", required=True, help="comma-separated indices into the sorted arc list")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("star", parents=[common], help="closed form for the inward star")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("rewrite", parents=[common], help="write Psi_alpha in chromatic generators")
    p.add_argument("--family", required=True, help="directory holding D1.json, D2.json, ...")
    p.add_argument("--target", required=True, help="e.g. psi:1,2")
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_rewrite)

    p = sub.add_parser("random", parents=[common], help="emit a seeded random digraph")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--arcs", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.jobs < 1:
            raise InputError("--jobs must be positive")
        for name, value in (("edges", args.edge_cap), ("degree", args.degree_cap)):
            if value is not None:
                if value < 1:
                    raise InputError(f"--{name}-cap must be positive")
                config.set_cap(name, value)
        return args.func(args, out)
    except (InputError, OSError) as exc:
        print(f"chromnsym: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except IntegrityError as exc:
        print(f"chromnsym: integrity failure: {exc}", file=sys.stderr)
        return EXIT_FAILED
    finally:
        config.set_cap("edges", None)
        config.set_cap("degree", None)


if __name__ == "__main__":
    sys.exit(main())
