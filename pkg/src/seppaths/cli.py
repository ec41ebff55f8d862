"""Command-line interface.

Exit codes (stable contract): 0 success / separating, 1 parse or usage
error, 2 strategy failure (including a non-separating verification),
3 inconsistent probe outcome in ``localize``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import families, strategies
from .errors import (
    CatalogOverflow,
    DecodeError,
    DecompositionError,
    FormatError,
    StrategyFailed,
)
from .exact import DEFAULT_CATALOG_CAP, DEFAULT_NODE_CAP, exact_min
from .graph import (
    Graph,
    parse_graph,
    parse_path_system,
    path_system,
    serialize_graph,
    serialize_path_system,
)
from .verify import decode, verify


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _pick_seed(args) -> int:
    if getattr(args, "entropy", False):
        return random.SystemRandom().randrange(2**32)
    return args.seed


# ---------------------------------------------------------------------------

def cmd_gen(args) -> int:
    seed = _pick_seed(args)
    fam = args.family
    if fam == "path":
        g = families.make_path_graph(int(args.params[0]))
    elif fam == "star":
        g = families.make_star(int(args.params[0]))
    elif fam == "comb":
        g = families.make_hair_comb(int(args.params[0]))
    elif fam == "ladder":
        g = families.make_ladder(int(args.params[0]))
    elif fam == "gnp":
        if len(args.params) < 2:
            raise ValueError("gnp needs n and p")
        g = families.gnp(int(args.params[0]), float(args.params[1]), seed)
    elif fam == "tree-random":
        g = families.random_tree(int(args.params[0]), seed)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown family {fam}")
    _write(serialize_graph(g), args.out)
    return 0


_CLOSED_FORMS = {
    "path": (lambda n: families.make_path_graph(n), lambda n: families.separate_path_graph(n), 1),
    "star": (lambda n: families.make_star(n), lambda n: families.separate_star(n), 1),
    "comb": (lambda n: families.make_hair_comb(n), lambda n: families.separate_hair_comb(n), 3),
    "ladder": (lambda n: families.make_ladder(n), lambda n: families.separate_ladder(n), 2),
}


def _run_strategy(g: Graph, name: str, args) -> strategies.StrategyOutcome:
    seed = _pick_seed(args)
    n, m = g.n, g.m
    if name in _CLOSED_FORMS:
        make, build, div = _CLOSED_FORMS[name]
        k = n // div
        if n == 0 or n % div or not strategies._same_edge_set(g, make(k)):
            raise StrategyFailed("recognition", f"input is not the canonical {name} graph")
        ps = path_system(g, [p.vertices for p in build(k)])
        return strategies.StrategyOutcome(ps, name, verify(g, ps).separating, len(ps), {})
    if name == "tree":
        ps = families.separate_tree(g)
        return strategies.StrategyOutcome(ps, "tree", verify(g, ps).separating, len(ps), {})
    if name == "trivial":
        ps = strategies._trivial_system(g)
        return strategies.StrategyOutcome(ps, "trivial", verify(g, ps).separating, len(ps), {})
    if name == "min-degree":
        c = args.c if args.c is not None else (g.min_degree() / n if n else 1.0)
        return strategies.min_degree_strategy(g, c, seed=seed, max_retries=args.max_retries)
    if name == "dense":
        c = args.c if args.c is not None else 0.1
        return strategies.dense_strategy(g, c, seed=seed, max_retries=args.max_retries)
    if name == "random":
        p = args.p if args.p is not None else (m / (n * (n - 1) / 2) if n > 1 else 0.0)
        return strategies.random_graph_strategy(g, p, seed=seed, max_retries=args.max_retries)
    if name == "portfolio":
        return strategies.portfolio(
            g, seed=seed, dense_c=(args.c if args.c is not None else 0.1),
            max_retries=args.max_retries,
        )
    raise ValueError(f"unknown strategy {name}")  # pragma: no cover


def cmd_construct(args) -> int:
    g = _read_graph(args.graph)
    outcome = _run_strategy(g, args.strategy, args)
    _write(serialize_path_system(outcome.system), args.out)
    print(
        f"strategy={outcome.strategy_name} size={outcome.size} "
        f"verified={'true' if outcome.verified else 'false'}",
        file=sys.stderr,
    )
    return 0 if outcome.verified else 2


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    with open(args.system, "r", encoding="utf-8") as fh:
        ps = parse_path_system(fh.read(), g)
    report = verify(g, ps)
    _write(report.to_json() + "\n", args.out)
    return 0 if report.separating else 2


def cmd_localize(args) -> int:
    g = _read_graph(args.graph)
    with open(args.system, "r", encoding="utf-8") as fh:
        ps = parse_path_system(fh.read(), g)
    try:
        e = decode(g, ps, set(args.outcome))
    except DecodeError as exc:
        print(f"inconsistent outcome: {exc}", file=sys.stderr)
        return 3
    u, v = g.edges[e]
    print(f"{e} {u} {v}")
    return 0


def cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    result = exact_min(
        g,
        catalog_cap=args.catalog_cap,
        node_cap=args.node_cap,
        backend=args.backend,
    )
    _write(
        json.dumps(
            {
                "value": result.value,
                "proved_optimal": result.proved_optimal,
                "nodes_explored": result.nodes_explored,
                "witness": [list(p.vertices) for p in result.witness],
            }
        )
        + "\n",
        args.out,
    )
    return 0


_BENCH_FAMILIES = {
    "paths": ("path", families.make_path_graph),
    "stars": ("star", families.make_star),
    "combs": ("comb", families.make_hair_comb),
    "ladders": ("ladder", families.make_ladder),
    "gnp": ("gnp", None),
    "trees-random": ("tree", None),
}


def cmd_bench(args) -> int:
    lo, sep, hi = args.range.partition("..")
    if not sep:
        raise ValueError("range must look like A..B")
    lines = ["graph,n,m,strategy,size,size_per_n,verified,millis"]
    seed = _pick_seed(args)
    for k in range(int(lo), int(hi) + 1, args.step):
        label, maker = _BENCH_FAMILIES[args.family]
        if args.family == "gnp":
            if args.p is None:
                raise ValueError("gnp benchmarks need --p")
            g = families.gnp(k, args.p, seed + k)
            name = f"gnp-{k}-{args.p}"
        elif args.family == "trees-random":
            g = families.random_tree(k, seed + k)
            name = f"tree-{k}"
        else:
            g = maker(k)
            name = f"{label}-{k}"
        t0 = time.perf_counter()
        try:
            outcome = _run_strategy(g, args.strategy, args)
            size, verified = outcome.size, outcome.verified
        except StrategyFailed:
            size, verified = -1, False
        millis = int(1000 * (time.perf_counter() - t0))
        lines.append(
            f"{name},{g.n},{g.m},{args.strategy},{size},"
            f"{(size / g.n if g.n else 0.0):.4f},"
            f"{'true' if verified else 'false'},{millis}"
        )
    _write("\n".join(lines) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    top = _Parser(prog="seppaths", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, seeded=True):
        if seeded:
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--entropy", action="store_true",
                           help="use a fresh random seed instead of --seed")
        p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("gen", help="emit a generated graph as an edge list")
    p.add_argument("family", choices=["path", "star", "comb", "ladder", "gnp", "tree-random"])
    p.add_argument("params", nargs="+", help="n, plus p for gnp")
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("construct", help="build a separating path system")
    p.add_argument("graph")
    p.add_argument("--strategy", default="portfolio", choices=[
        "tree", "path", "star", "comb", "ladder", "min-degree", "dense",
        "random", "portfolio", "trivial"])
    p.add_argument("--c", type=float, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--max-retries", type=int, default=100)
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a path system against a graph")
    p.add_argument("graph")
    p.add_argument("system")
    common(p, seeded=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("localize", help="decode failed-probe indices to an edge")
    p.add_argument("graph")
    p.add_argument("system")
    p.add_argument("outcome", nargs="*", type=int)
    common(p, seeded=False)
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("solve", help="exact minimum separating system size")
    p.add_argument("graph")
    p.add_argument("--catalog-cap", type=int, default=DEFAULT_CATALOG_CAP)
    p.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
    p.add_argument("--backend", default="auto", choices=["auto", "compiled", "pure"])
    common(p, seeded=False)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="CSV benchmark over a graph corpus")
    p.add_argument("family", choices=sorted(_BENCH_FAMILIES))
    p.add_argument("range", help="inclusive parameter range, e.g. 3..12")
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--strategy", default="portfolio", choices=[
        "tree", "path", "star", "comb", "ladder", "min-degree", "dense",
        "random", "portfolio", "trivial"])
    p.add_argument("--c", type=float, default=None)
    p.add_argument("--max-retries", type=int, default=100)
    common(p)
    p.set_defaults(func=cmd_bench)
    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"cannot read {exc.filename}", file=sys.stderr)
        return 1
    except StrategyFailed as exc:
        print(f"strategy failed at stage {exc.stage}: {exc}", file=sys.stderr)
        return 2
    except (CatalogOverflow, DecompositionError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
