"""Command line front end.

Graphs are given as graph6 records or family descriptors such as
``cycle:6``, ``h:2``, ``star:4``, ``corona:K3,2`` or ``cycle:6+0-3`` (the
``+u-v`` suffix adds an edge). The word ``family`` may precede a descriptor,
and ``family corona K3 2`` is read as ``corona:K3,2``.

Exit codes: 0 success, 1 parse error, 2 size guard, 3 isolated vertices,
4 not isomorphic, 5 an invariant check failed.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from .errors import FamilyError, Graph6Error, IsolatedVertexError, SizeGuardError
from .families import parse_graph_input
from .graph import Graph, read_graph6_file
from .iso import profiles_isomorphic
from .report import analyze, run_checks
from .rules import XRule
from .survey import uniqueness_survey
from .tar import build_tar, tar_to_dict, to_dot
from .xsets import build_profile

log = logging.getLogger("xtar")

EXIT_PARSE, EXIT_SIZE, EXIT_ISOLATED, EXIT_NOT_ISO, EXIT_CHECK_FAILED = 1, 2, 3, 4, 5


def _graph_tokens(tokens: list[str]) -> list[str]:
    """Group CLI tokens into graph specs, honoring the optional 'family' word."""
    out = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok == "family":
            rest = tokens[i + 1:]
            if not rest:
                raise FamilyError("'family' must be followed by a descriptor")
            if len(rest) > 1 and ":" not in rest[0] and all(r.replace(".", "").isalnum() for r in rest[1:]) \
                    and _takes_args(rest[0]):
                out.append(f"{rest[0]}:{','.join(rest[1:])}")
                break
            out.append(rest[0])
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _takes_args(name: str) -> bool:
    # "family corona K3 2" style: a bare name followed by positional arguments
    return name in {"corona", "grl", "double_star", "ds"}


def _load(tokens: list[str], count: int) -> list[Graph]:
    specs = _graph_tokens(tokens)
    if len(specs) != count:
        raise FamilyError(f"expected {count} graph(s), got {len(specs)}: {specs}")
    return [parse_graph_input(s) for s in specs]


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_analyze(args) -> int:
    rule = XRule.parse(args.rule)
    if args.input:
        graphs = read_graph6_file(args.input)
    else:
        graphs = _load(args.graph, 1)
    for g in graphs:
        _emit(analyze(g, rule, normalize=args.normalize, override=args.override).as_dict())
    return 0


def cmd_tar(args) -> int:
    (g,) = _load(args.graph, 1)
    if g.has_isolated() and not args.normalize:
        raise IsolatedVertexError("graph has isolated vertices; rerun with --normalize")
    if args.normalize:
        g, _ = g.without_isolated()
    p = build_profile(g, args.rule, override=args.override)
    if args.format == "dot":
        sys.stdout.write(to_dot(build_tar(p, args.max_k)))
    else:
        _emit(tar_to_dict(p, args.max_k))
    return 0


def cmd_iso(args) -> int:
    g, h = _load(args.graphs, 2)
    for name, graph in (("first", g), ("second", h)):
        if graph.has_isolated():
            if not args.normalize:
                raise IsolatedVertexError(f"{name} graph has isolated vertices; rerun with --normalize")
    if args.normalize:
        g, _ = g.without_isolated()
        h, _ = h.without_isolated()
    verdict = profiles_isomorphic(build_profile(g, args.rule, override=args.override),
                                  build_profile(h, args.rule, override=args.override))
    _emit(verdict.as_dict())
    return 0 if verdict.isomorphic else EXIT_NOT_ISO


def cmd_survey(args) -> int:
    graphs = read_graph6_file(args.input) if args.input else None
    result = uniqueness_survey(args.n, args.rule, graphs=graphs, jobs=args.jobs, allow_long=args.long)
    if args.classes:
        for cls in result.classes:
            sys.stdout.write(" ".join(cls) + "\n")
    sys.stdout.write(result.row() + "\n")
    return 0


def cmd_check(args) -> int:
    (g,) = _load(args.graph, 1)
    suite = run_checks(g, args.rule, normalize=args.normalize)
    _emit(suite.as_dict())
    return 0 if suite.passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xtar", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def rule_flag(p):
        p.add_argument("--rule", default="zf", type=XRule.parse,
                       help="zf, psd, dom or pd (default zf)")

    def override_flag(p):
        p.add_argument("--override", action="store_true",
                       help="lift the 24-vertex limit on full subset sweeps")

    p = sub.add_parser("analyze", help="X-numbers, thresholds and polynomial as JSON")
    p.add_argument("graph", nargs="*")
    p.add_argument("--input", help="graph6 file, one record per line")
    p.add_argument("--normalize", action="store_true", help="strip isolated vertices instead of refusing")
    rule_flag(p)
    override_flag(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("tar", help="serialize the TAR graph (or a k-level subgraph)")
    p.add_argument("graph", nargs="+")
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--normalize", action="store_true")
    rule_flag(p)
    override_flag(p)
    p.set_defaults(func=cmd_tar)

    p = sub.add_parser("iso", help="decide TAR-graph isomorphism of two graphs")
    p.add_argument("graphs", nargs="+")
    p.add_argument("--normalize", action="store_true")
    rule_flag(p)
    override_flag(p)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("survey", help="count graphs of order n with a unique TAR graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--input", help="graph6 catalog to survey instead of internal generation")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--long", action="store_true", help="allow internal generation at n=8")
    p.add_argument("--classes", action="store_true", help="also print each TAR class")
    rule_flag(p)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("check", help="run the invariant suite on one graph")
    p.add_argument("graph", nargs="+")
    p.add_argument("--normalize", action="store_true")
    rule_flag(p)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.command == "analyze" and not args.graph and not args.input:
        parser.error("analyze needs a graph or --input")
    try:
        return args.func(args)
    except (Graph6Error, FamilyError) as exc:
        return _fail(exc, EXIT_PARSE)
    except SizeGuardError as exc:
        return _fail(exc, EXIT_SIZE)
    except IsolatedVertexError as exc:
        return _fail(exc, EXIT_ISOLATED)


def _fail(exc: Exception, code: int) -> int:
    log.debug("exit %d", code, exc_info=exc)
    sys.stderr.write(f"error: {exc}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
