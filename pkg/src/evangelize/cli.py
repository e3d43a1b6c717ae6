"""Command-line front end.

Results go to stdout as JSON; a one-line human summary goes to stderr.
Exit codes: 0 success, 2 parse/validation error, 3 unmet solver
precondition, 4 work guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bench import DEFAULT_SOLVER, SOLVERS, rows_to_csv, run_bench
from .clique import solve_mes_clique
from .dense import build_pes_dense
from .diffusion import run_diffusion
from .generate import KINDS, generate_instance
from .graph import (GraphFormatError, PreconditionError, WorkGuardExceeded, read_graph,
                    serialize_graph, write_graph)
from .nd import (MAX_COMPOSITIONS, compute_type_partition, min_vertex_cover,
                 solve_mes_nd, solve_mes_vc)
from .oracle import SolveResult, brute_force_mes, brute_force_pes, pes_via_binary_search
from .reductions import IMInstance, im_to_mes_gadget
from .tree import solve_mes_tree

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_GUARD = 0, 2, 3, 4


def graph_class(g) -> str:
    if g.is_complete():
        return "clique"
    if g.is_forest():
        return "forest"
    return "general"


def pick_mes_solver(g, name, max_compositions=MAX_COMPOSITIONS):
    """Resolve ``auto`` to clique, then forest, then neighborhood diversity."""
    if name == "auto":
        kind = graph_class(g)
        if kind == "clique":
            return "clique", solve_mes_clique
        if kind == "forest":
            return "tree", solve_mes_tree
        part = compute_type_partition(g)

        def nd(g, b):
            try:
                return solve_mes_nd(g, b, max_compositions, part)
            except WorkGuardExceeded as exc:
                raise WorkGuardExceeded(f"{exc}; try --solver oracle for small n") from None
        return "nd", nd
    if name == "nd":
        return "nd", lambda g, b: solve_mes_nd(g, b, max_compositions)
    table = {"tree": solve_mes_tree, "clique": solve_mes_clique, "oracle": brute_force_mes}
    return name, table[name]


def _summary(g):
    return {"n": g.n, "m": g.m, "class": graph_class(g), "t": compute_type_partition(g).t}


def _report(command, g, result, start, work=None):
    return {
        "command": command,
        "instance": _summary(g) if g is not None else None,
        "result": result,
        "wall_time": round(time.perf_counter() - start, 6),
        "work": work or {},
    }


def _seed_list(text):
    return [int(x) for x in text.replace(",", " ").split()] if text else []


def cmd_simulate(args):
    g = read_graph(args.graph)
    start = time.perf_counter()
    res = run_diffusion(g, args.seed, want_trace=args.trace)
    out = {
        "seed": sorted(set(args.seed)),
        "evangelists": sorted(res.evangelists),
        "influenced": sorted(res.influenced),
        "n_evangelists": len(res.evangelists),
        "n_influenced": len(res.influenced),
        "rounds": res.rounds,
    }
    if args.trace:
        out["trace"] = [{"evangelized": sorted(e), "influenced": sorted(i)} for e, i in res.trace]
    print(f"|Evg|={len(res.evangelists)} |Inf|={len(res.influenced)} rounds={res.rounds}",
          file=sys.stderr)
    return _report("simulate", g, out, start, {"rounds": res.rounds})


def cmd_solve_mes(args):
    g = read_graph(args.graph)
    start = time.perf_counter()
    if args.alpha is not None and args.cover is not None:
        cover = _seed_list(args.cover) if args.cover != "auto" else min_vertex_cover(g)
        answer, seed = solve_mes_vc(g, cover, args.alpha, args.budget, args.max_work)
        out = {"decision": answer, "alpha": args.alpha, "seed": list(seed.members),
               "budget": args.budget, "solver": "vc", "cover": sorted(cover)}
        print(f"vc decision alpha={args.alpha}: {'yes' if answer else 'no'}", file=sys.stderr)
        return _report("solve mes", g, out, start)
    _, solver = pick_mes_solver(g, args.solver, args.max_work)
    res: SolveResult = solver(g, args.budget)
    out = res.as_dict()
    if args.alpha is not None:
        out["alpha"] = args.alpha
        out["decision"] = res.objective >= args.alpha
    print(f"{res.solver}: |Inf|={res.objective} with seed {list(res.seed.members)}",
          file=sys.stderr)
    return _report("solve mes", g, out, start, {"explored": res.explored})


def cmd_solve_pes(args):
    g = read_graph(args.graph)
    start = time.perf_counter()
    if args.solver == "dense":
        seed = build_pes_dense(g, args.tmax_e, args.tmax_i)
        res = SolveResult(seed, len(seed), "dense", 0)
    elif args.solver == "oracle":
        res = brute_force_pes(g)
    else:
        _, mes = pick_mes_solver(g, args.mes_solver, args.max_work)
        res = pes_via_binary_search(g, mes)
    out = res.as_dict()
    print(f"{res.solver}: perfect seed of size {res.objective}", file=sys.stderr)
    return _report("solve pes", g, out, start, {"explored": res.explored})


def cmd_partition(args):
    g = read_graph(args.graph)
    start = time.perf_counter()
    p = compute_type_partition(g)
    out = {"t": p.t, "classes": [list(c) for c in p.classes], "kinds": list(p.kinds),
           "adjacency": p.adjacency.astype(int).tolist()}
    print(f"neighborhood diversity t={p.t}", file=sys.stderr)
    return _report("partition", g, out, start)


def cmd_gadget(args):
    g = read_graph(args.graph)
    start = time.perf_counter()
    im = IMInstance.from_graph(g)
    out_g = im_to_mes_gadget(im)
    if args.out:
        write_graph(out_g, args.out)
    else:
        sys.stdout.write(serialize_graph(out_g))
        return None
    print(f"gadget with {out_g.n} nodes written to {args.out}", file=sys.stderr)
    return _report("gadget im-to-mes", out_g, {"out": args.out, "n": out_g.n, "m": out_g.m},
                   start)


def cmd_gen(args):
    params = {"n": args.n}
    for key in ("t", "p", "te_bar", "ti_bar", "drop", "thresholds"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    g = generate_instance(args.kind, params, args.rng_seed)
    text = serialize_graph(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"{args.kind}: n={g.n} m={g.m} written to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return None


def cmd_bench(args):
    solvers = args.solvers.split(",") if args.solvers else None
    params = {}
    for key in ("t", "p", "te_bar", "ti_bar"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    rows = run_bench(args.family, args.sizes, args.betas, solvers, args.rng_seed, params)
    text = rows_to_csv(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"{len(rows)} rows", file=sys.stderr)
    return None


def build_parser():
    ap = argparse.ArgumentParser(prog="evangelize", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run the diffusion from a seed set")
    p.add_argument("--graph", required=True)
    p.add_argument("--seed", type=int, nargs="*", default=[], help="seed node ids")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_simulate)

    solve = sub.add_parser("solve", help="solve MES or PES").add_subparsers(
        dest="problem", required=True)
    p = solve.add_parser("mes")
    p.add_argument("--graph", required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--solver", default="auto", choices=["auto", "tree", "clique", "nd", "oracle"])
    p.add_argument("--alpha", type=int, help="decision target: is |Inf| >= alpha reachable?")
    p.add_argument("--cover", help="vertex cover ids (comma separated) or 'auto'; needs --alpha")
    p.add_argument("--max-work", type=int, default=MAX_COMPOSITIONS)
    p.set_defaults(func=cmd_solve_mes)
    p = solve.add_parser("pes")
    p.add_argument("--graph", required=True)
    p.add_argument("--solver", default="binary-search", choices=["binary-search", "dense", "oracle"])
    p.add_argument("--mes-solver", default="auto", choices=["auto", "tree", "clique", "nd", "oracle"])
    p.add_argument("--tmax-e", type=int, help="dense solver bound on t_E (default: instance max)")
    p.add_argument("--tmax-i", type=int, help="dense solver bound on t_I (default: instance max)")
    p.add_argument("--max-work", type=int, default=MAX_COMPOSITIONS)
    p.set_defaults(func=cmd_solve_pes)

    p = sub.add_parser("partition", help="print the neighborhood-diversity type partition")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_partition)

    gadget = sub.add_parser("gadget", help="reductions").add_subparsers(dest="which", required=True)
    p = gadget.add_parser("im-to-mes")
    p.add_argument("--graph", required=True, help="IM instance (t_I = t_E = t)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gadget)

    for name, helptext in (("gen", "generate an instance"), ("bench", "scaling sweep to CSV")):
        p = sub.add_parser(name, help=helptext)
        if name == "gen":
            p.add_argument("--kind", required=True, choices=KINDS)
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--drop", type=float)
            p.add_argument("--thresholds", choices=["random", "max"])
            p.set_defaults(func=cmd_gen)
        else:
            p.add_argument("--family", required=True, choices=sorted(DEFAULT_SOLVER))
            p.add_argument("--sizes", type=int, nargs="*", default=[])
            p.add_argument("--betas", type=int, nargs="+", default=[1])
            p.add_argument("--solvers", help=f"comma separated from {sorted(SOLVERS)}")
            p.set_defaults(func=cmd_bench)
        p.add_argument("--t", type=int)
        p.add_argument("--p", type=float)
        p.add_argument("--te-bar", type=int)
        p.add_argument("--ti-bar", type=int)
        p.add_argument("--rng-seed", type=int, default=0)
        p.add_argument("--out")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (GraphFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except WorkGuardExceeded as exc:
        print(f"work guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    if report is not None:
        print(json.dumps(report, indent=2))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
