"""Command line interface.

Three subcommands:

  analyze FILE    decomposition analysis of one poset (sections selectable)
  generate        emit a poset from a named family in the text format
  verify          run the check suites exhaustively or on random families

Exit codes: 0 success, 1 a checked statement failed (witness printed),
2 malformed input, 3 a scope cap was hit (lift with --unsafe-scope).
"""

from __future__ import annotations

import argparse
import json
import sys

from .chains import maximum_antichain, minimum_chain_decomposition
from .cut import enumerate_admissible_cuts, integer_determinant, j_matrix, verify_cut_identity
from .errors import CheckFailure, CycleError, FormatError, ScopeExceededError
from .generate import FAMILIES, make_family
from .hcd import acyclic_orientation, chain_graph, mhcd, verify_embedding
from .nccd import verify_chain_bounds
from .poset import AUTOMORPHISM_CAP, Poset
from .textio import dumps, load, loads
from .verify import DEFAULT_CHECKS, verify_exhaustive, verify_random

SECTIONS = ("dilworth", "mhcd", "cut-check", "embedding", "inequalities")


def _read_poset(path: str) -> Poset:
    if path == "-":
        return loads(sys.stdin.read())
    return load(path)


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


# -- analyze --------------------------------------------------------------------


def _section_dilworth(p: Poset, unsafe: bool) -> dict:
    d = minimum_chain_decomposition(p)
    a = maximum_antichain(p)
    return {
        "minimum_chains": d.k,
        "maximum_antichain": len(a),
        "equal": d.k == len(a),
        "decomposition": d.to_lines(),
        "antichain": sorted(str(x) for x in a),
    }


def _section_mhcd(p: Poset, unsafe: bool) -> dict:
    d = mhcd(p)
    gr = acyclic_orientation(p, d)
    names = [list(map(str, c)) for c in d.chains_as_labels()]
    edges = [[names[i], names[j]] for i, j in gr.edges()]
    return {
        "k": d.k,
        "decomposition": d.to_lines(),
        "oriented_edges": edges,
    }


def _section_cut_check(p: Poset, unsafe: bool) -> dict:
    d = mhcd(p)
    cuts = enumerate_admissible_cuts(p, d)
    reports = [verify_cut_identity(p, c) for c in cuts]
    return {
        "admissible_cuts": len(cuts),
        "identity_holds": all(r.equal for r in reports),
        "j_determinant": integer_determinant(j_matrix(p, d)),
        "cuts": [{"heights": list(r.heights), "equal": r.equal} for r in reports],
    }


def _section_embedding(p: Poset, unsafe: bool) -> dict:
    cap = None if unsafe else AUTOMORPHISM_CAP
    return verify_embedding(p, auto_cap=cap).to_dict()


def _section_inequalities(p: Poset, unsafe: bool) -> dict:
    if unsafe:
        return verify_chain_bounds(p, nc_cap=None, scan_cap=None).to_dict()
    return verify_chain_bounds(p).to_dict()


_SECTIONS = {
    "dilworth": _section_dilworth,
    "mhcd": _section_mhcd,
    "cut-check": _section_cut_check,
    "embedding": _section_embedding,
    "inequalities": _section_inequalities,
}


def _print_analysis(doc: dict) -> None:
    print(f"poset: {doc['n']} elements")
    s = doc["sections"]
    if "dilworth" in s:
        sec = s["dilworth"]
        tag = "equal" if sec["equal"] else "MISMATCH"
        print(
            f"dilworth: minimum chains = {sec['minimum_chains']}, "
            f"maximum antichain = {sec['maximum_antichain']} ({tag})"
        )
        for line in sec["decomposition"]:
            print(f"  {line}")
        print(f"  antichain: {' '.join(sec['antichain'])}")
    if "mhcd" in s:
        sec = s["mhcd"]
        print(f"minimal homogeneous decomposition: k = {sec['k']}")
        for line in sec["decomposition"]:
            print(f"  {line}")
        for src, dst in sec["oriented_edges"]:
            print(f"  edge: <{','.join(src)}> -> <{','.join(dst)}>")
    if "cut-check" in s:
        sec = s["cut-check"]
        holds = "holds on all" if sec["identity_holds"] else "FAILS"
        print(
            f"cut identity: {sec['admissible_cuts']} admissible cuts, {holds} "
            f"(det J = {sec['j_determinant']})"
        )
    if "embedding" in s:
        sec = s["embedding"]
        status = "ok" if sec["ok"] else "FAILED"
        print(
            f"embedding: |Aut(P)| = {sec['aut_poset_order']} into "
            f"{sec['aut_oriented_order']} oriented symmetries [{status}]"
        )
    if "inequalities" in s:
        sec = s["inequalities"]
        chain_str = " <= ".join(
            str(sec[key])
            for key in (
                "min_chains",
                "min_noncrossing",
                "min_descents",
                "min_descents_ext",
                "min_homogeneous",
            )
        )
        status = "ok" if sec["ok"] else "VIOLATED"
        print(f"inequalities: {chain_str} [{status}]")
        print(f"  permutation: {' '.join(sec['permutation'])}")
        print(f"  extension:   {' '.join(sec['extension'])}")
    if doc["findings"]:
        print("findings:")
        for f in doc["findings"]:
            print(f"  {json.dumps(f, sort_keys=True)}")


def _cmd_analyze(args: argparse.Namespace) -> int:
    p = _read_poset(args.file)
    wanted = [name for name in SECTIONS if getattr(args, name.replace("-", "_"))]
    if args.all or not wanted:
        wanted = list(SECTIONS)
    sections: dict = {}
    findings: list = []
    for name in wanted:
        sections[name] = _SECTIONS[name](p, args.unsafe_scope)
        for f in sections[name].pop("findings", []):
            findings.append({"section": name, **(f if isinstance(f, dict) else {"kind": str(f)})})
    ok = all(
        sec.get(flag, True)
        for sec in sections.values()
        for flag in ("equal", "identity_holds", "ok")
    )
    doc = {"n": p.n, "sections": sections, "findings": findings, "ok": ok}
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            d = mhcd(p)
            fh.write(chain_graph(p, d).to_dot("chains"))
            fh.write("\n")
            fh.write(acyclic_orientation(p, d).to_dot("oriented"))
            fh.write("\n")
    if args.json:
        _emit_json(doc)
    else:
        _print_analysis(doc)
    if not ok:
        bad = [name for name, sec in sections.items() if not all(
            sec.get(flag, True) for flag in ("equal", "identity_holds", "ok"))]
        print(f"failed sections: {', '.join(bad)}", file=sys.stderr)
        return 1
    return 0


# -- generate -------------------------------------------------------------------


def _cmd_generate(args: argparse.Namespace) -> int:
    p = make_family(args.family, args.n, density=args.density, seed=args.seed)
    text = dumps(p)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# -- verify ---------------------------------------------------------------------


def _print_verify(summary: dict) -> None:
    print(f"mode: {summary['mode']}")
    print(f"posets checked: {summary['posets']}")
    for check in summary.get("global_checks", []):
        tag = "pass" if check["passed"] else "FAIL"
        print(f"global {check['name']}: {tag}")
    if summary["findings"]:
        print("findings:")
        for f in summary["findings"]:
            print(f"  {f['kind']}: {f['count']} occurrences")
    if summary["failures"]:
        first = summary["failures"][0]
        print(f"FAILURES: {len(summary['failures'])} posets", file=sys.stderr)
        print("first failing poset:", file=sys.stderr)
        for line in first["poset"]["covers"] or ["(antichain)"]:
            print(f"  {line}", file=sys.stderr)
        for check in first["checks"]:
            if not check["passed"]:
                print(f"  failed check: {check['name']}", file=sys.stderr)
                if "witness" in check:
                    print(f"  witness: {json.dumps(check['witness'], sort_keys=True)}", file=sys.stderr)
    else:
        print("all checks passed")


def _cmd_verify(args: argparse.Namespace) -> int:
    which = tuple(args.checks.split(",")) if args.checks else DEFAULT_CHECKS
    if args.mode == "exhaustive":
        summary = verify_exhaustive(args.nmax, which=which, seed=args.seed)
    else:
        summary = verify_random(
            args.n,
            args.count,
            which=which,
            seed=args.seed,
            density=args.density,
            family=args.family,
        )
    if args.json:
        _emit_json(summary)
    else:
        _print_verify(summary)
    return 0 if summary["ok"] else 1


# -- parser ---------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetdecomp",
        description="chain decompositions of finite posets: Dilworth minima, "
        "homogeneous decompositions, cuts, and noncrossing structure",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="analyze one poset from a text file ('-' for stdin)")
    an.add_argument("file", help="poset in the text format, or '-' for stdin")
    for name in SECTIONS:
        an.add_argument(f"--{name}", action="store_true", help=f"include the {name} section")
    an.add_argument("--all", action="store_true", help="include every section (default)")
    an.add_argument("--json", action="store_true", help="emit one JSON document")
    an.add_argument("--dot", metavar="FILE", help="write chain graphs in DOT format")
    an.add_argument(
        "--unsafe-scope",
        action="store_true",
        help="lift enumeration caps (exponential searches may run long)",
    )
    an.set_defaults(func=_cmd_analyze)

    gen = sub.add_parser("generate", help="emit a poset from a named family")
    gen.add_argument("family", choices=FAMILIES)
    gen.add_argument("--n", type=int, required=True, help="size parameter")
    gen.add_argument("--density", type=float, default=0.3, help="relation density (random family)")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", metavar="FILE", help="write to a file instead of stdout")
    gen.set_defaults(func=_cmd_generate)

    ver = sub.add_parser("verify", help="run the check suites over many posets")
    vsub = ver.add_subparsers(dest="mode", required=True)

    vex = vsub.add_parser("exhaustive", help="every labeled poset up to a size")
    vex.add_argument("--nmax", type=int, default=4)
    vex.add_argument("--seed", type=int, default=0)
    vex.add_argument("--checks", help="comma-separated check names (default: all)")
    vex.add_argument("--json", action="store_true")
    vex.set_defaults(func=_cmd_verify)

    vr = vsub.add_parser("random", help="seeded random posets")
    vr.add_argument("--n", type=int, default=8)
    vr.add_argument("--count", type=int, default=50)
    vr.add_argument("--seed", type=int, default=0)
    vr.add_argument("--density", type=float, default=0.3)
    vr.add_argument("--family", choices=("random", "wrapforest"), default="random")
    vr.add_argument("--checks", help="comma-separated check names (default: all)")
    vr.add_argument("--json", action="store_true")
    vr.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, CycleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ScopeExceededError as exc:
        print(f"scope: {exc}", file=sys.stderr)
        print("pass --unsafe-scope to lift the cap", file=sys.stderr)
        return 3
    except CheckFailure as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(f"witness: {exc.witness}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
