"""Command-line entry point: ``listramsey <subcommand> ...``.

Exit status is 0 when a result or verdict was reached, 2 when a search
budget ran out (verdict ``unknown``) and 1 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bounds, cnf, construct, decide, extremal
from .coloring import ListAssignment
from .hypergraph import Hypergraph, is_r_partite, named, weak_chromatic_number
from .morphism import verify_coloring

EXIT_OK, EXIT_ERROR, EXIT_BUDGET = 0, 1, 2


def load_graph(source: str) -> Hypergraph:
    """A built-in name (``K5``, ``C5``, ``K3,3``, ``K4^(3)``), a file path, or ``-`` for stdin."""
    if source == "-":
        return Hypergraph.from_text(sys.stdin.read())
    if os.path.exists(source):
        with open(source) as fh:
            return Hypergraph.from_text(fh.read())
    return named(source)


def _fraction(text: str) -> Fraction:
    return Fraction(text)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


def _budget(args) -> dict:
    return {"max_nodes": args.budget_nodes, "time_limit_ms": args.budget_ms}


def _lists(args, host: Hypergraph) -> ListAssignment:
    if args.lists:
        with open(args.lists) as fh:
            return ListAssignment.from_json(fh.read(), host)
    if args.universe:
        return ListAssignment.random(host, args.k, args.universe, seed=args.seed)
    return ListAssignment.constant(host, args.k)


# ---------------------------------------------------------------- handlers
def cmd_turan(args) -> int:
    pattern = load_graph(args.pattern)
    res = extremal.turan_number(args.n, pattern, args.mode, workers=args.threads, **_budget(args))
    _emit(args, res.to_dict(), f"ex{'_hom' if args.mode == extremal.HOM_FREE else ''}({args.n}, {args.pattern}) = "
          f"{res.value}  [{res.nodes_explored} nodes, {res.elapsed_ms:.1f} ms]\nwitness: {res.witness.edge_list}")
    return EXIT_OK


def cmd_density(args) -> int:
    pattern = load_graph(args.pattern)
    est = extremal.density_estimate(pattern, args.n_max, args.mode, **_budget(args))
    rows = "\n".join(f"n={n:3d}  ex={ex:4d}  ratio={float(q):.4f}" for n, ex, q in est.rows)
    tail = f"\ntruncated at n={est.truncated_at}" if est.truncated else ""
    _emit(args, est.to_dict(), rows + tail)
    return EXIT_BUDGET if est.truncated else EXIT_OK


def cmd_mparam(args) -> int:
    m = extremal.m_parameter(load_graph(args.pattern))
    _emit(args, {"m": str(m), "value": float(m)}, f"m = {m}")
    return EXIT_OK


def cmd_chromatic(args) -> int:
    chi, part = weak_chromatic_number(load_graph(args.pattern), return_partition=True)
    _emit(args, {"chi": chi, "partition": list(part.parts)}, f"chi = {chi}  partition {list(part.parts)}")
    return EXIT_OK


def cmd_partite(args) -> int:
    ok, part = is_r_partite(load_graph(args.pattern))
    payload = {"r_partite": ok, "partition": None if part is None else list(part.parts)}
    _emit(args, payload, f"r-partite: {ok}" + (f"  partition {list(part.parts)}" if part else ""))
    return EXIT_OK


def cmd_symmetrize(args) -> int:
    g, pattern = load_graph(args.graph), load_graph(args.pattern)
    target = args.target
    if target is None:
        target = extremal.degree_target(args.density, args.eps, g.n, g.r)
    trace = extremal.symmetrize(g, pattern, target)
    lines = [f"{s.removed} <- copy of {s.copied}: {s.edges_before} -> {s.edges_after} edges" for s in trace.steps]
    lines.append(f"status: {trace.status}")
    _emit(args, trace.to_dict(), "\n".join(lines))
    return EXIT_OK


def _verify_payload(host, coloring, pattern) -> dict:
    found = verify_coloring(host, coloring, pattern)
    if found is None:
        return {"pattern_free": True}
    c, emb = found
    return {"pattern_free": False, "color": c, "embedding": list(emb.image)}


def cmd_construct_ub(args) -> int:
    host = Hypergraph.complete(args.n, args.r)
    lists = _lists(args, host)
    target = load_graph(args.target) if args.target else construct.balanced_bipartite(args.n)
    res = construct.union_bound_construct(lists, target, seed=args.seed, max_retries=args.max_retries)
    payload = res.to_dict()
    payload["verification"] = _verify_payload(host, res.coloring, load_graph(args.pattern))
    _emit(args, payload, f"success after {res.attempts} attempt(s); class sizes {res.coloring.class_sizes()}; "
          f"{args.pattern}-free: {payload['verification']['pattern_free']}")
    return EXIT_OK


def cmd_construct_lll(args) -> int:
    host = Hypergraph.complete(args.n, args.r)
    lists = _lists(args, host)
    target = load_graph(args.target)
    res = construct.lll_construct(lists, target, seed=args.seed, max_resamples=args.max_resamples,
                                  best_effort=args.best_effort)
    payload = res.to_dict()
    payload["verification"] = _verify_payload(host, res.coloring, load_graph(args.pattern))
    _emit(args, payload, f"success after {res.resamples} resample(s); class sizes {res.coloring.class_sizes()}; "
          f"{args.pattern}-free: {payload['verification']['pattern_free']}")
    return EXIT_OK


def cmd_feasible(args) -> int:
    target = load_graph(args.target)
    if args.max_n:
        n = construct.max_feasible_n(target.r, args.k, target)
        _emit(args, {"k": args.k, "r": target.r, "max_feasible_n": n}, f"largest feasible n: {n}")
        return EXIT_OK
    if args.host:
        rep = construct.lll_host_feasibility(load_graph(args.host), args.k, target)
    else:
        rep = construct.lll_feasibility(args.n, target.r, args.k, target)
    _emit(args, rep.to_dict(), f"p = {rep.p}, d = {rep.d}, e*p*(d+1) = {rep.condition_value:.6f}, "
          f"feasible: {rep.feasible}")
    return EXIT_OK


def _decision_exit(args, out, host, extra=None) -> int:
    payload = out.to_dict()
    payload.update(extra or {})
    _emit(args, payload, f"verdict: {out.verdict}  [{out.nodes_explored} nodes, {out.elapsed_ms:.1f} ms]")
    return EXIT_BUDGET if out.verdict == decide.UNKNOWN else EXIT_OK


def cmd_decide(args) -> int:
    host, pattern = load_graph(args.host), load_graph(args.pattern)
    lists = _lists(args, host)
    if args.cnf:
        with open(args.cnf, "w") as fh:
            fh.write(cnf.to_dimacs(host, lists, pattern))
    out = decide.is_list_ramsey(host, lists, pattern, workers=args.threads, **_budget(args))
    return _decision_exit(args, out, host, {"cnf": args.cnf} if args.cnf else None)


def cmd_decide_family(args) -> int:
    host = load_graph(args.host)
    lists = _lists(args, host)
    out = decide.is_family_ramsey(host, lists, args.s, workers=args.threads, **_budget(args))
    return _decision_exit(args, out, host)


def cmd_scan(args) -> int:
    rows = decide.scan_not_ramsey(args.nmax, args.k, load_graph(args.pattern), args.strategy, args.trials,
                                  args.universe, args.seed or 0, **_budget(args))
    if args.json:
        print(json.dumps([vars(r) for r in rows], indent=2))
    else:
        sys.stdout.write(decide.scan_to_csv(rows))
    return EXIT_BUDGET if any(r.verdict == decide.UNKNOWN for r in rows) else EXIT_OK


def cmd_bounds(args) -> int:
    if args.theorem == "lower":
        reps = [bounds.theorem12_lower(args.pi, args.r, args.k)]
    elif args.theorem == "sandwich":
        reps = [bounds.theorem11_bounds(args.chi, args.m, args.pi, args.r, args.k, args.non_r_partite)]
    elif args.theorem == "family":
        reps = [bounds.theorem31_bounds(args.s, args.k)]
    elif args.theorem == "size":
        reps = [bounds.size_degree_lowers(args.pi, args.k)]
    else:
        reps = bounds.pattern_reports(load_graph(args.pattern), args.k, args.n_max, **_budget(args))
    text = []
    for rep in reps:
        text.append(f"[{rep.theorem}] lower={rep.lower} upper={rep.upper}")
        text.extend(f"  caveat: {c}" for c in rep.caveats)
    payload = [rep.to_dict() for rep in reps]
    _emit(args, payload if len(payload) > 1 else payload[0], "\n".join(text))
    return EXIT_OK


# ------------------------------------------------------------------ parser
def build_parser() -> argparse.ArgumentParser:
    def global_flags(suppress: bool) -> argparse.ArgumentParser:
        # flags are accepted before or after the subcommand; the subcommand
        # copy must not overwrite a value given before it
        dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        g = argparse.ArgumentParser(add_help=False)
        g.add_argument("--seed", type=int, default=dflt(None), help="RNG seed")
        g.add_argument("--json", action="store_true", default=dflt(False), help="print JSON reports")
        g.add_argument("--budget-nodes", type=int, default=dflt(None), help="search node budget")
        g.add_argument("--budget-ms", type=float, default=dflt(None), help="search wall-clock budget (ms)")
        g.add_argument("--threads", type=int, default=dflt(1), help="worker processes for tree searches")
        return g

    common = global_flags(suppress=True)

    parser = argparse.ArgumentParser(prog="listramsey", description=__doc__.splitlines()[0],
                                     parents=[global_flags(suppress=False)])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.set_defaults(func=func)
        return p

    def list_opts(p):
        p.add_argument("-k", type=int, default=2, help="list size")
        p.add_argument("--lists", help="ListAssignment JSON file")
        p.add_argument("--universe", type=int, help="draw seeded random k-subsets of this many colors")

    p = add("turan", cmd_turan, "exact Turán number ex(n, H)")
    p.add_argument("pattern")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--mode", choices=extremal.MODES, default=extremal.COPY_FREE)

    p = add("density", cmd_density, "table of ex(n,H)/C(n,r)")
    p.add_argument("pattern")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--mode", choices=extremal.MODES, default=extremal.COPY_FREE)

    add("mparam", cmd_mparam, "the m(H) parameter").add_argument("pattern")
    add("chromatic", cmd_chromatic, "weak chromatic number").add_argument("pattern")
    add("partite", cmd_partite, "test r-partiteness").add_argument("pattern")

    p = add("symmetrize", cmd_symmetrize, "Zykov symmetrization towards a degree target")
    p.add_argument("graph")
    p.add_argument("pattern")
    p.add_argument("--target", type=int, help="minimum degree to reach")
    p.add_argument("--density", type=_fraction, default=Fraction(0), help="density estimate for the target")
    p.add_argument("--eps", type=_fraction, default=Fraction(0))

    p = add("construct-ub", cmd_construct_ub, "union-bound construction with relabeled copies")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, default=2)
    p.add_argument("--target", help="target graph on n vertices (default: balanced complete bipartite)")
    p.add_argument("--pattern", default="K3", help="pattern to verify against")
    p.add_argument("--max-retries", type=int, default=1000)
    list_opts(p)

    p = add("construct-lll", cmd_construct_lll, "local-lemma construction by resampling")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, default=2)
    p.add_argument("--target", default="K2")
    p.add_argument("--pattern", default="K3", help="pattern to verify against")
    p.add_argument("--max-resamples", type=int, default=None)
    p.add_argument("--best-effort", action="store_true")
    list_opts(p)

    p = add("feasible", cmd_feasible, "local-lemma feasibility")
    p.add_argument("-n", type=int)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--target", default="K2")
    p.add_argument("--host", help="arbitrary host graph instead of the complete one")
    p.add_argument("--max-n", action="store_true", help="report the largest feasible n")

    p = add("decide", cmd_decide, "is the host list Ramsey for a pattern?")
    p.add_argument("host")
    p.add_argument("--pattern", default="K3")
    p.add_argument("--cnf", help="also write the DIMACS encoding to this file")
    list_opts(p)

    p = add("decide-family", cmd_decide_family, "is the host list Ramsey for chromatic number > s?")
    p.add_argument("host")
    p.add_argument("-s", type=int, required=True)
    list_opts(p)

    p = add("scan", cmd_scan, "decide K_n for a range of n")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--pattern", default="K3")
    p.add_argument("--strategy", choices=("constant", "seeded-random"), default="constant")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--universe", type=int, default=None)

    p = add("bounds", cmd_bounds, "evaluate bound formulas")
    p.add_argument("theorem", choices=("lower", "sandwich", "family", "size", "pattern"))
    p.add_argument("--pi", type=_fraction, default=Fraction(0))
    p.add_argument("-r", type=int, default=2)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--chi", type=int, default=3)
    p.add_argument("--m", type=_fraction, default=Fraction(2))
    p.add_argument("-s", type=int, default=2)
    p.add_argument("--non-r-partite", action="store_true")
    p.add_argument("--pattern", default="K3")
    p.add_argument("--n-max", type=int, default=7)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; 2 is reserved for budgets here
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR
    try:
        return args.func(args)
    except extremal.BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, IndexError, OSError, construct.ConstructionFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, construct.ConstructionFailed) and args.json:
            print(json.dumps(exc.report, indent=2, default=str))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
