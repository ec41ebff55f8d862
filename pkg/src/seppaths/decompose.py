"""Edge-disjoint path decomposition and matching decomposition.

Every graph on n vertices splits into at most n edge-disjoint paths, and
any such path family splits further into at most 3n matchings where each
matching takes at most one edge from any single origin path and no two
edges sharing a vertex. These are the two shared subroutines of the
linear-size strategies: the origin paths distinguish edges across paths,
the matchings make the within-path edges stitchable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DecompositionError
from .graph import Graph, PathSystem, path_system


def path_decompose(g: Graph) -> PathSystem:
    """Cover E(g) with pairwise edge-disjoint simple paths, at most n of them.

    Greedy: repeatedly extract a maximal path grown from a minimum-degree
    vertex, extending both ends toward low-degree neighbors. The <= n
    count is a checked bound; if the greedy ever exceeds it we retry with
    an Eulerian-trail cover split into simple pieces, and give up loudly
    if that also exceeds n (not observed in practice).
    """
    paths = _greedy_paths(g)
    if len(paths) > g.n:
        paths = _eulerian_paths(g)
        if len(paths) > g.n:
            raise DecompositionError(
                f"path cover needs {len(paths)} > n = {g.n} paths"
            )
    return path_system(g, paths)


def _greedy_paths(g: Graph) -> list[list[int]]:
    adj: list[set[int]] = [set(g.neighbors(v)) for v in range(g.n)]
    deg = [len(a) for a in adj]
    remaining = g.m
    out: list[list[int]] = []

    def take(u: int, w: int) -> None:
        nonlocal remaining
        adj[u].discard(w)
        adj[w].discard(u)
        deg[u] -= 1
        deg[w] -= 1
        remaining -= 1

    def next_step(v: int, on_path: set[int]) -> int | None:
        best = None
        for w in adj[v]:
            if w in on_path:
                continue
            if best is None or (deg[w], w) < (deg[best], best):
                best = w
        return best

    while remaining:
        start = min(
            (v for v in range(g.n) if deg[v] > 0), key=lambda v: (deg[v], v)
        )
        path = [start]
        on_path = {start}
        # grow until neither end extends
        grew = True
        while grew:
            grew = False
            for end in (-1, 0):
                v = path[end]
                w = next_step(v, on_path)
                if w is None:
                    continue
                take(v, w)
                if end == -1:
                    path.append(w)
                else:
                    path.insert(0, w)
                on_path.add(w)
                grew = True
        out.append(path)
    return out


def _eulerian_paths(g: Graph) -> list[list[int]]:
    """Cover via Eulerian trails per component, split at vertex repeats."""
    adj: list[dict[int, None]] = [dict() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u][v] = None
        adj[v][u] = None
    seen = [False] * g.n
    out: list[list[int]] = []
    for s in range(g.n):
        if seen[s] or not adj[s]:
            seen[s] = True
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comp.sort()
        # multigraph counts: pairing edges may double a real edge
        local: dict[int, dict[int, int]] = {
            v: {w: 1 for w in adj[v]} for v in comp
        }
        odd = [v for v in comp if len(local[v]) % 2 == 1]
        virtual: dict[tuple[int, int], int] = {}
        for i in range(2, len(odd), 2):
            # pair surplus odd vertices; the first two seed the open trail
            a, b = odd[i], odd[i + 1]
            local[a][b] = local[a].get(b, 0) + 1
            local[b][a] = local[b].get(a, 0) + 1
            key = (min(a, b), max(a, b))
            virtual[key] = virtual.get(key, 0) + 1
        start = odd[0] if odd else comp[0]
        # Hierholzer walk over the multigraph
        stack = [start]
        trail: list[int] = []
        while stack:
            x = stack[-1]
            if local[x]:
                y = min(local[x])
                local[x][y] -= 1
                if not local[x][y]:
                    del local[x][y]
                local[y][x] -= 1
                if not local[y][x]:
                    del local[y][x]
                stack.append(y)
            else:
                trail.append(stack.pop())
        trail.reverse()
        # drop virtual traversals, then split each real run into simple paths
        runs: list[list[int]] = [[trail[0]]]
        for a, b in zip(trail, trail[1:]):
            key = (min(a, b), max(a, b))
            if virtual.get(key, 0) > 0:
                virtual[key] -= 1
                runs.append([b])
            else:
                runs[-1].append(b)
        for run in runs:
            if len(run) < 2:
                continue
            piece = [run[0]]
            used = {run[0]}
            for v in run[1:]:
                if v in used:
                    out.append(piece)
                    piece = [piece[-1]]
                    used = {piece[0]}
                piece.append(v)
                used.add(v)
            if len(piece) >= 2:
                out.append(piece)
    return out


@dataclass(frozen=True)
class MatchingFamily:
    """Matchings partitioning a decomposed edge set.

    ``matchings`` holds edge-index sets; ``origin`` maps each edge index
    to the index of the decomposition path containing it. Each matching
    meets each origin path in at most one edge.
    """

    matchings: tuple[tuple[int, ...], ...]
    origin: dict[int, int]


def matching_decompose(g1: Graph, paths: PathSystem) -> MatchingFamily:
    """Split a path-decomposed graph into at most 3n conflict-avoiding matchings.

    Edges are placed one at a time (in edge-index order) into the first
    matching that contains no edge of the same origin path and no edge
    touching either endpoint. A path contributes at most n-1 blockers and
    the endpoints at most 2n-2, so a slot within 3n always exists.
    """
    origin: dict[int, int] = {}
    for j, p in enumerate(paths):
        for e in p.edge_ids():
            if e in origin:
                raise ValueError(f"edge {e} appears in two paths; not a decomposition")
            origin[e] = j
    if len(origin) != g1.m:
        raise ValueError(
            f"paths cover {len(origin)} of {g1.m} edges; not a decomposition"
        )
    slots: list[list[int]] = []
    slot_verts: list[set[int]] = []
    slot_origins: list[set[int]] = []
    cap = 3 * g1.n
    for e in range(g1.m):
        u, v = g1.edges[e]
        j = origin[e]
        placed = False
        for i in range(len(slots)):
            if j in slot_origins[i] or u in slot_verts[i] or v in slot_verts[i]:
                continue
            slots[i].append(e)
            slot_verts[i].update((u, v))
            slot_origins[i].add(j)
            placed = True
            break
        if not placed:
            if len(slots) >= cap:
                raise DecompositionError(
                    f"matching decomposition needs more than {cap} matchings"
                )
            slots.append([e])
            slot_verts.append({u, v})
            slot_origins.append({j})
    return MatchingFamily(tuple(tuple(s) for s in slots), origin)
