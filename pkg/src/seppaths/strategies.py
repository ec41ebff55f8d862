"""General-purpose strategies producing linear-size separating systems.

All follow one blueprint: split the edges into two halves, cover one half
with at most n paths (these tell apart edges on different cover paths),
refine it into matchings that meet each cover path at most once (these
tell apart edges on the same cover path), then stitch every matching into
few genuine paths of the whole graph -- via common-neighbor detours for
graphs of linear minimum degree, via greedy connector routing for random
graphs -- and repeat with the halves swapped.

The core-peeling strategy for dense graphs reduces to the minimum-degree
one on each peeled core and handles core-to-rest edges through per-vertex
neighbor cycles decomposed into rainbow matchings.

Randomness is always seeded; anything the underlying asymptotics cannot
guarantee at small scale fails loudly as StrategyFailed rather than
degrading silently.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field

from . import families
from .decompose import matching_decompose, path_decompose
from .errors import StrategyFailed
from .graph import (
    ColoredMultigraph,
    Graph,
    PathSystem,
    induced_subgraph,
    is_tree,
    path_system,
    subgraph_with_edges,
)
from .verify import verify


def _iceil(x: float) -> int:
    # guards against float fuzz right at integer thresholds
    return math.ceil(x - 1e-9)


@dataclass(frozen=True)
class StrategyOutcome:
    system: PathSystem
    strategy_name: str
    verified: bool
    size: int
    diagnostics: dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class SplitPair:
    """Two spanning subgraphs partitioning the edge set of one graph."""

    g1: Graph
    g2: Graph


@dataclass(frozen=True)
class CommonNeighborGraph:
    """Auxiliary graph joining vertex pairs with many common neighbors.

    x and y are adjacent iff they share at least ``threshold`` neighbors
    in the designated host (optionally restricted to a vertex subset).
    Used to stitch matching edges into alternating paths.
    """

    n: int
    threshold: int
    adj: tuple[tuple[int, ...], ...]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]


def common_neighbor_graph(
    host: Graph, threshold: int, within: set[int] | None = None
) -> CommonNeighborGraph:
    if threshold < 1:
        raise ValueError("threshold must be positive")
    verts = sorted(within) if within is not None else range(host.n)
    restrict = 0
    for v in verts:
        restrict |= 1 << v
    masks = {v: host.adjacency_mask(v) & restrict for v in verts}
    adj: list[list[int]] = [[] for _ in range(host.n)]
    vlist = list(verts)
    for a in range(len(vlist)):
        x = vlist[a]
        for b in range(a + 1, len(vlist)):
            y = vlist[b]
            if (masks[x] & masks[y]).bit_count() >= threshold:
                adj[x].append(y)
                adj[y].append(x)
    return CommonNeighborGraph(host.n, threshold, tuple(tuple(ws) for ws in adj))


def random_split(
    g: Graph, min_deg_target: int, max_retries: int = 100, seed: int = 0
) -> SplitPair:
    """Assign each edge to either half with probability 1/2, retrying until
    both halves meet the minimum-degree target."""
    if max_retries < 1:
        raise ValueError("need at least one attempt")
    rng = random.Random(seed)
    for _ in range(max_retries):
        take = [rng.random() < 0.5 for _ in range(g.m)]
        g1 = subgraph_with_edges(g, [i for i in range(g.m) if take[i]])
        g2 = subgraph_with_edges(g, [i for i in range(g.m) if not take[i]])
        if g1.min_degree() >= min_deg_target and g2.min_degree() >= min_deg_target:
            return SplitPair(g1, g2)
    raise StrategyFailed(
        "random-split",
        f"no split with both minimum degrees >= {min_deg_target} "
        f"in {max_retries} attempts",
    )


def alternating_cover(matching, aux: CommonNeighborGraph) -> list[list[int]]:
    """Cover a matching with paths alternating matching and auxiliary edges.

    Matching ("blue") edges are consumed exactly once across the returned
    paths; auxiliary ("red") edges may repeat between paths. Every path
    starts and ends with a blue edge (blue at even edge offsets) and is
    grown at both ends until non-extendable.
    """
    pairs = sorted((u, v) if u < v else (v, u) for u, v in matching)
    partner: dict[int, int] = {}
    for u, v in pairs:
        if u in partner or v in partner or u == v:
            raise ValueError("not a matching")
        partner[u] = v
        partner[v] = u
    unused = set(pairs)
    out: list[list[int]] = []

    def extension(end: int, on_path: set[int]):
        for w in aux.neighbors(end):
            if w in on_path or w not in partner:
                continue
            z = partner[w]
            if z in on_path:
                continue
            key = (w, z) if w < z else (z, w)
            if key in unused:
                return w, z, key
        return None

    for e in pairs:
        if e not in unused:
            continue
        unused.discard(e)
        seq = [e[0], e[1]]
        on_path = {e[0], e[1]}
        grew = True
        while grew:
            grew = False
            ext = extension(seq[-1], on_path)
            if ext:
                w, z, key = ext
                seq.extend((w, z))
                on_path.update((w, z))
                unused.discard(key)
                grew = True
            ext = extension(seq[0], on_path)
            if ext:
                w, z, key = ext
                seq[:0] = [z, w]
                on_path.update((w, z))
                unused.discard(key)
                grew = True
        out.append(seq)
    return out


def _chunks(seq: list[int], chunk_len: int):
    """Split a path into edge-chunks of at most chunk_len, keeping the
    global edge offset (for blue/red parity)."""
    edges = len(seq) - 1
    for start in range(0, edges, chunk_len):
        stop = min(start + chunk_len, edges)
        yield start, seq[start : stop + 1]


def _expand_chunk(
    chunk: list[int],
    start_offset: int,
    red_masks,
    blue_replace: dict[tuple[int, int], int] | None,
    stage: str,
) -> list[int]:
    """Turn an alternating chunk into a genuine simple path.

    Red edges (odd global offset) become two-edge detours through the
    smallest unused common neighbor. When ``blue_replace`` is given, blue
    edges are replaced by two-edge detours through their assigned vertex
    (the neighbor-cycle color); otherwise they are kept as-is.
    """
    used = set(chunk)
    out = [chunk[0]]
    for a in range(len(chunk) - 1):
        x, y = chunk[a], chunk[a + 1]
        if (start_offset + a) % 2 == 0:
            if blue_replace is not None:
                key = (x, y) if x < y else (y, x)
                v = blue_replace[key]
                if v in used:
                    raise StrategyFailed(stage, f"cycle vertex {v} reused on a path")
                used.add(v)
                out.append(v)
            out.append(y)
        else:
            mm = red_masks[x] & red_masks[y]
            w = -1
            while mm:
                low = mm & -mm
                cand = low.bit_length() - 1
                if cand not in used:
                    w = cand
                    break
                mm ^= low
            if w < 0:
                raise StrategyFailed(
                    stage, f"no unused common neighbor for auxiliary edge ({x}, {y})"
                )
            used.add(w)
            out.extend((w, y))
    return out


def _detour_direction(
    blue: Graph, red_host: Graph, c: float, diag: dict[str, int], tag: str
) -> list[list[int]]:
    """Separate the edges of one half using detours through the other.

    Cover paths + matchings + alternating covers through the
    common-neighbor graph, chopped into short chunks and expanded into
    simple paths of the whole graph.
    """
    n = blue.n
    decomp = path_decompose(blue)
    fam = matching_decompose(blue, decomp)
    aux = common_neighbor_graph(red_host, _iceil(c * c * n / 24))
    chunk_len = _iceil(c * c * n / 48)
    red_masks = [red_host.adjacency_mask(v) for v in range(n)]
    seqs = [list(p.vertices) for p in decomp]
    diag[f"cover_paths_{tag}"] = len(decomp)
    diag[f"matchings_{tag}"] = len(fam.matchings)
    alt_total = 0
    chunk_total = 0
    for medges in fam.matchings:
        matching = [blue.edges[e] for e in medges]
        for seq in alternating_cover(matching, aux):
            alt_total += 1
            for start, chunk in _chunks(seq, chunk_len):
                chunk_total += 1
                seqs.append(
                    _expand_chunk(chunk, start, red_masks, None, "red-edge-expansion")
                )
    diag[f"alternating_paths_{tag}"] = alt_total
    diag[f"chunks_{tag}"] = chunk_total
    return seqs


def min_degree_strategy(
    g: Graph, c: float, seed: int = 0, max_retries: int = 100
) -> StrategyOutcome:
    """Separating system of size at most ceil(122 n / c^2) for graphs with
    minimum degree at least c*n."""
    if not 0 < c <= 1:
        raise ValueError("c must lie in (0, 1]")
    n = g.n
    if g.min_degree() < c * n - 1e-9:
        raise StrategyFailed(
            "degree-precondition", f"minimum degree {g.min_degree()} < c*n = {c * n:.2f}"
        )
    split = random_split(g, _iceil(c * n / 3), max_retries, seed)
    diag: dict[str, int] = {}
    seqs = _detour_direction(split.g1, split.g2, c, diag, "a")
    seqs += _detour_direction(split.g2, split.g1, c, diag, "b")
    ps = path_system(g, seqs)
    bound = _iceil(122 * n / (c * c))
    if len(ps) > bound:
        raise StrategyFailed("size-bound", f"{len(ps)} paths exceed {bound}")
    rep = verify(g, ps)
    return StrategyOutcome(ps, "min-degree", rep.separating, len(ps), diag)


# ---------------------------------------------------------------------------
# core peeling for dense graphs

def _k_core_vertices(g: Graph, verts: set[int], k: int) -> set[int]:
    """Vertex set of the k-core of the induced subgraph on verts."""
    alive = set(verts)
    deg = {v: sum(1 for w in g.neighbors(v) if w in alive) for v in alive}
    import heapq

    low = [v for v in alive if deg[v] < k]
    heapq.heapify(low)
    while low:
        v = heapq.heappop(low)
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
                if deg[w] == k - 1:
                    heapq.heappush(low, w)
    return alive


def _peel_cores(g: Graph, c: float) -> list[list[int]]:
    """Partition the vertices into successive dense cores.

    Each level is the (c*|rest|/2)-core of what remains; peeling stops
    when at most sqrt(n) vertices are left (they form the last level).
    """
    n = g.n
    levels: list[list[int]] = []
    remaining = set(range(n))
    while remaining:
        if len(remaining) <= math.sqrt(n) + 1e-9:
            levels.append(sorted(remaining))
            break
        k = _iceil(c * len(remaining) / 2)
        core = _k_core_vertices(g, remaining, k)
        if not core:
            raise StrategyFailed(
                "core-peeling", f"empty {k}-core with {len(remaining)} vertices left"
            )
        levels.append(sorted(core))
        remaining -= core
    return levels


def _neighbor_cycles(g: Graph, core: set[int], rest: set[int]) -> ColoredMultigraph:
    """For each outside vertex with >= 3 core neighbors, a cycle through
    those neighbors, colored by the outside vertex."""
    edges: list[tuple[int, int, int]] = []
    for y in sorted(rest):
        nbrs = [x for x in g.neighbors(y) if x in core]
        if len(nbrs) < 3:
            continue
        for i in range(len(nbrs)):
            edges.append((nbrs[i], nbrs[(i + 1) % len(nbrs)], y))
    return ColoredMultigraph(g.n, tuple(edges))


def _rainbow_decompose(
    multi: ColoredMultigraph, avoid_cycle_neighbors: bool
) -> list[list[int]]:
    """First-fit decomposition into rainbow matchings (edge indices).

    A slot accepts an edge sharing no vertex and no color with its
    members; with ``avoid_cycle_neighbors`` a slot also rejects edges
    that are cycle-adjacent to a member.
    """
    edges = multi.edges
    pos_in_cycle: dict[int, tuple[int, int]] = {}
    by_color: dict[int, list[int]] = {}
    for i, (_u, _v, col) in enumerate(edges):
        by_color.setdefault(col, []).append(i)
    cyc_nbrs: list[set[int]] = [set() for _ in edges]
    for col, idxs in by_color.items():
        k = len(idxs)
        for a, ei in enumerate(idxs):
            cyc_nbrs[ei].update((idxs[(a - 1) % k], idxs[(a + 1) % k]))
    slots: list[list[int]] = []
    slot_verts: list[set[int]] = []
    slot_colors: list[set[int]] = []
    for ei, (u, v, col) in enumerate(edges):
        placed = False
        for s in range(len(slots)):
            if u in slot_verts[s] or v in slot_verts[s] or col in slot_colors[s]:
                continue
            if avoid_cycle_neighbors and any(
                f in cyc_nbrs[ei] for f in slots[s]
            ):
                continue
            slots[s].append(ei)
            slot_verts[s].update((u, v))
            slot_colors[s].add(col)
            placed = True
            break
        if not placed:
            slots.append([ei])
            slot_verts.append({u, v})
            slot_colors.append({col})
    return slots


def dense_strategy(
    g: Graph, c: float, seed: int = 0, max_retries: int = 100
) -> StrategyOutcome:
    """Separating system of size at most ceil(638 n / c^3) for graphs in
    which every vertex subset of size >= sqrt(n) spans >= c|U|^2 edges.

    The hypothesis is only spot-checked on sampled subsets (warnings in
    diagnostics); the hard contract is that the output verifies.
    """
    if not 0 < c <= 1:
        raise ValueError("c must lie in (0, 1]")
    n = g.n
    diag: dict[str, int] = {}
    rng = random.Random(seed)
    warn = 0
    lo = max(1, _iceil(math.sqrt(n)))
    for _ in range(20 if n > 1 else 0):
        size = rng.randint(lo, n)
        subset = set(rng.sample(range(n), size))
        spanned = sum(1 for u, v in g.edges if u in subset and v in subset)
        if spanned < c * size * size - 1e-9:
            warn += 1
    diag["density_spot_warnings"] = warn

    levels = _peel_cores(g, c)
    diag["core_levels"] = len(levels)
    for i, verts in enumerate(levels):
        diag[f"core_size_{i}"] = len(verts)
    seqs: list[list[int]] = []

    # separate the edges inside each core
    for i, verts in enumerate(levels):
        sub, old = induced_subgraph(g, verts)
        if len(verts) <= math.sqrt(n) + 1e-9:
            seqs.extend([old[u], old[v]] for u, v in sub.edges)
            continue
        try:
            inner = min_degree_strategy(sub, c / 2, seed=seed + 7 * i + 1, max_retries=max_retries)
        except StrategyFailed as exc:
            raise StrategyFailed("core-internal", f"level {i}: {exc}") from exc
        if not inner.verified:
            raise StrategyFailed("core-internal", f"level {i} system does not verify")
        diag[f"inner_size_{i}"] = inner.size
        seqs.extend([old[v] for v in p.vertices] for p in inner.system)

    # separate the edges from each core to everything peeled later
    for i in range(len(levels) - 1):
        core = set(levels[i])
        rest = set().union(*levels[i + 1 :])
        h = len(core)
        cross = [
            (x, y)
            for x, y in ((u, v) if u in core else (v, u) for u, v in g.edges
                         if (u in core) != (v in core))
            if y in rest
        ]
        heavy = {
            y
            for y in rest
            if sum(1 for x in g.neighbors(y) if x in core) >= 3
        }
        singles = [xy for xy in cross if xy[1] not in heavy]
        seqs.extend([x, y] for x, y in sorted(singles))
        diag[f"cross_singletons_{i}"] = len(singles)
        multi = _neighbor_cycles(g, core, rest)
        if not multi.edges:
            continue
        matchings = _rainbow_decompose(multi, False) + _rainbow_decompose(multi, True)
        diag[f"rainbow_matchings_{i}"] = len(matchings)
        thr = int(c * c * h / 24) + 1  # strictly more than c^2 h / 24
        aux = common_neighbor_graph(g, thr, within=core)
        restrict = 0
        for v in core:
            restrict |= 1 << v
        red_masks = [g.adjacency_mask(v) & restrict for v in range(g.n)]
        chunk_len = _iceil(c * c * h / 48)
        for matching in matchings:
            pairs = []
            color_of: dict[tuple[int, int], int] = {}
            for ei in matching:
                u, v, col = multi.edges[ei]
                key = (u, v) if u < v else (v, u)
                pairs.append(key)
                color_of[key] = col
            for seq in alternating_cover(pairs, aux):
                for start, chunk in _chunks(seq, chunk_len):
                    seqs.append(
                        _expand_chunk(
                            chunk, start, red_masks, color_of, "cycle-expansion"
                        )
                    )

    ps = path_system(g, seqs)
    bound = _iceil(638 * n / (c * c * c))
    if len(ps) > bound:
        raise StrategyFailed("size-bound", f"{len(ps)} paths exceed {bound}")
    rep = verify(g, ps)
    return StrategyOutcome(ps, "dense", rep.separating, len(ps), diag)


# ---------------------------------------------------------------------------
# random graphs: greedy matching completion

def _complete_matching(pairs: list[tuple[int, int]], other: Graph) -> list[int]:
    """Join matching edges into one simple path using connectors routed
    through ``other``, avoiding already-used and still-needed vertices."""
    seq = [pairs[0][0], pairs[0][1]]
    used = {pairs[0][0], pairs[0][1]}
    for t in range(1, len(pairs)):
        u, v = pairs[t]
        future: set[int] = set()
        for uu, vv in pairs[t + 1 :]:
            future.update((uu, vv))
        src = seq[-1]
        forbidden = (used | future) - {src, u, v}
        parent = {src: src}
        queue = deque([src])
        goal = -1
        while queue:
            x = queue.popleft()
            if x != src and x in (u, v):
                goal = x
                break
            for w in other.neighbors(x):
                if w not in parent and w not in forbidden:
                    parent[w] = x
                    queue.append(w)
        if goal < 0:
            raise StrategyFailed(
                "chunk-completion", f"no connector to matching edge ({u}, {v})"
            )
        connector = [goal]
        while connector[-1] != src:
            connector.append(parent[connector[-1]])
        connector.reverse()
        seq.extend(connector[1:])
        tail = v if goal == u else u
        seq.append(tail)
        used.update(connector[1:])
        used.add(tail)
    return seq


def random_graph_strategy(
    g: Graph, p: float, seed: int = 0, max_retries: int = 100
) -> StrategyOutcome:
    """Strategy tuned to binomial random graphs of density p.

    Sparse case (m <= 20n): the edges themselves separate. Otherwise:
    split, cover, refine into matchings, chop those into submatchings of
    size at most n*p/20, and complete each submatching into a single path
    with greedy vertex-disjoint connectors through the other half.
    """
    n, m = g.n, g.m
    if m <= 20 * n:
        ps = path_system(g, ([u, v] for u, v in g.edges))
        rep = verify(g, ps)
        return StrategyOutcome(ps, "random-graph", rep.separating, len(ps), {"case": 2})
    diag: dict[str, int] = {"case": 1}
    split = random_split(g, max(1, _iceil(n * p / 10)), max_retries, seed)
    cap = max(1, int(n * p / 20 + 1e-9))
    diag["submatching_cap"] = cap
    seqs: list[list[int]] = []
    for blue, other, tag in ((split.g1, split.g2, "a"), (split.g2, split.g1, "b")):
        decomp = path_decompose(blue)
        fam = matching_decompose(blue, decomp)
        diag[f"cover_paths_{tag}"] = len(decomp)
        diag[f"matchings_{tag}"] = len(fam.matchings)
        completed = 0
        seqs.extend(list(p_.vertices) for p_ in decomp)
        for medges in fam.matchings:
            for s in range(0, len(medges), cap):
                pairs = [blue.edges[e] for e in medges[s : s + cap]]
                seqs.append(_complete_matching(pairs, other))
                completed += 1
        diag[f"completed_{tag}"] = completed
    ps = path_system(g, seqs)
    rep = verify(g, ps)
    return StrategyOutcome(ps, "random-graph", rep.separating, len(ps), diag)


# ---------------------------------------------------------------------------
# portfolio

def _trivial_system(g: Graph) -> PathSystem:
    return path_system(g, ([u, v] for u, v in g.edges))


def _same_edge_set(g: Graph, h: Graph) -> bool:
    return g.n == h.n and set(g.edges) == set(h.edges)


def portfolio(
    g: Graph, seed: int = 0, dense_c: float = 0.1, max_retries: int = 100
) -> StrategyOutcome:
    """Run every applicable strategy and keep the smallest verified system.

    Closed forms apply to canonically labeled generator outputs; the tree
    route handles any labeling. The per-edge fallback always verifies, so
    the portfolio never fails.
    """
    n, m = g.n, g.m
    candidates: list[tuple[str, PathSystem]] = []

    def add(name: str, make) -> None:
        try:
            result = make()
        except StrategyFailed:
            return
        if result is None:
            return
        if isinstance(result, StrategyOutcome):
            if not result.verified:
                return
            result = result.system
        candidates.append((name, path_system(g, [p.vertices for p in result])))

    add("path", lambda: families.separate_path_graph(n)
        if n >= 3 and _same_edge_set(g, families.make_path_graph(n)) else None)
    add("star", lambda: families.separate_star(n)
        if n >= 4 and _same_edge_set(g, families.make_star(n)) else None)
    add("comb", lambda: families.separate_hair_comb(n // 3)
        if n >= 6 and n % 3 == 0 and _same_edge_set(g, families.make_hair_comb(n // 3)) else None)
    add("ladder", lambda: families.separate_ladder(n // 2)
        if n >= 4 and n % 2 == 0 and _same_edge_set(g, families.make_ladder(n // 2)) else None)
    add("tree", lambda: families.separate_tree(g) if is_tree(g) else None)
    if n > 0 and g.min_degree() >= 1:
        add("min-degree", lambda: min_degree_strategy(
            g, g.min_degree() / n, seed=seed, max_retries=max_retries))
    if n > 1:
        add("dense", lambda: dense_strategy(g, dense_c, seed=seed, max_retries=max_retries))
        add("random-graph", lambda: random_graph_strategy(
            g, m / (n * (n - 1) / 2), seed=seed, max_retries=max_retries))
    add("trivial", lambda: _trivial_system(g))

    best_name = None
    best_ps = None
    diag: dict[str, int] = {"candidates": 0}
    for name, ps in candidates:
        if not verify(g, ps).separating:
            continue
        diag["candidates"] += 1
        diag[f"size_{name.replace('-', '_')}"] = len(ps)
        if best_ps is None or len(ps) < len(best_ps):
            best_name, best_ps = name, ps
    if best_ps is None:  # pragma: no cover - trivial fallback always verifies
        raise AssertionError("portfolio found no verified system")
    return StrategyOutcome(best_ps, best_name, True, len(best_ps), diag)
