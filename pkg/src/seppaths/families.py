"""Named graph families and their explicit separating path systems.

Labeling conventions (all generators produce lexicographic edge order):

* path graph on n vertices: 0 - 1 - ... - n-1;
* star of order n: center 0, leaves 1..n-1;
* hair comb of order 3n: spine columns i in 0..n-1 at layer 0, each with
  a pendant two-edge tooth through layers 1 and 2; vertex (i, layer) has
  id 3*i + layer;
* ladder of order 2n: columns j in 0..n-1, rows 0 (bottom) and 1 (top);
  vertex (j, row) has id 2*j + row.
"""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass

from .graph import (
    Graph,
    Path,
    PathSystem,
    is_tree,
    path_from_vertices,
    path_system,
    tree_path,
)
from .verify import verify


# ---------------------------------------------------------------------------
# generators

def make_path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("need at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def make_star(n: int) -> Graph:
    """Star of order n: center 0 joined to n-1 leaves."""
    if n < 1:
        raise ValueError("need at least 1 vertex")
    return Graph(n, [(0, v) for v in range(1, n)])


def comb_vertex(i: int, layer: int) -> int:
    return 3 * i + layer


def make_hair_comb(n: int) -> Graph:
    """Hair comb with n teeth (order 3n)."""
    if n < 1:
        raise ValueError("need at least 1 tooth")
    pairs = []
    for i in range(n - 1):
        pairs.append((comb_vertex(i, 0), comb_vertex(i + 1, 0)))
    for i in range(n):
        pairs.append((comb_vertex(i, 0), comb_vertex(i, 1)))
        pairs.append((comb_vertex(i, 1), comb_vertex(i, 2)))
    return Graph.from_unordered(3 * n, pairs)


def ladder_vertex(col: int, row: int) -> int:
    return 2 * col + row


def make_ladder(n: int) -> Graph:
    """Ladder with n rungs (order 2n): two rails of n-1 edges plus n rungs."""
    if n < 1:
        raise ValueError("need at least 1 rung")
    pairs = []
    for j in range(n - 1):
        pairs.append((ladder_vertex(j, 0), ladder_vertex(j + 1, 0)))
        pairs.append((ladder_vertex(j, 1), ladder_vertex(j + 1, 1)))
    for j in range(n):
        pairs.append((ladder_vertex(j, 0), ladder_vertex(j, 1)))
    return Graph.from_unordered(2 * n, pairs)


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Seeded binomial random graph; each pair kept with probability p."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("probability must lie in [0, 1]")
    rng = random.Random(seed)
    pairs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                pairs.append((u, v))
    return Graph(n, pairs)


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform random labeled tree (sequence-decoded), seeded."""
    if n < 1:
        raise ValueError("need at least 1 vertex")
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = random.Random(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for x in code:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    pairs = []
    for x in code:
        v = heapq.heappop(leaves)
        pairs.append((v, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    pairs.append((u, v))
    return Graph.from_unordered(n, pairs)


# ---------------------------------------------------------------------------
# closed-form separating systems

def separate_path_graph(n: int) -> PathSystem:
    """Optimal system for the path graph: floor(n/2) staggered subpaths.

    One end edge stays uncovered; every other subpath owns one private
    edge and overlaps its neighbors in single edges.
    """
    if n < 3:
        raise ValueError("need at least 3 vertices")
    g = make_path_graph(n)

    def span(a: int, b: int) -> list[int]:
        return list(range(a, b + 1))

    def odd_family(nn: int) -> list[list[int]]:
        if nn == 3:
            return [span(1, 2)]
        fam = [span(1, 3), span(nn - 3, nn - 1)]
        fam.extend(span(2 * i, 2 * i + 3) for i in range(1, (nn - 5) // 2 + 1))
        return fam

    if n % 2 == 1:
        fam = odd_family(n)
    else:
        fam = odd_family(n - 1) + [span(n - 2, n - 1)]
    return path_system(g, fam)


def separate_star(n: int) -> PathSystem:
    """System of floor(2(n-1)/3) wedges for the star of order n.

    Leaves are grouped in triples (a, b, c) covered by wedges a-0-b and
    b-0-c, giving the three distinct signatures {i}, {i, i+1}, {i+1}.
    One leftover leaf stays uncovered; a second leftover gets its own
    single-edge path.
    """
    if n < 4:
        raise ValueError("need a star of order at least 4")
    g = make_star(n)
    k = n - 1
    seqs: list[list[int]] = []
    full = k - (k % 3)
    if k % 3 == 2:
        full = k - 2
    for a in range(1, full + 1 - 2, 3):
        seqs.append([a, 0, a + 1])
        seqs.append([a + 1, 0, a + 2])
    if k % 3 == 2:
        seqs.append([0, k - 1])
    return path_system(g, seqs)


def separate_hair_comb(n: int) -> PathSystem:
    """System of n+1 paths for the comb with n teeth, one per tooth tip.

    For n >= 3: hooks from each tooth tip down to the spine and up to the
    middle of the next tooth, plus one near-spanning path and the spine;
    the last tooth's top edge is the unique uncovered edge. The two-tooth
    comb needs its own three-path staircase (the hook pattern degenerates
    there).
    """
    if n < 2:
        raise ValueError("need at least 2 teeth")
    g = make_hair_comb(n)
    cv = comb_vertex
    if n == 2:
        seqs = [
            [cv(0, 2), cv(0, 1), cv(0, 0), cv(1, 0)],
            [cv(0, 1), cv(0, 0), cv(1, 0), cv(1, 1)],
            [cv(0, 0), cv(1, 0), cv(1, 1), cv(1, 2)],
        ]
        return path_system(g, seqs)
    seqs = [
        [cv(i, 2), cv(i, 1), cv(i, 0), cv(i + 1, 0), cv(i + 1, 1)]
        for i in range(n - 1)
    ]
    long = [cv(0, 1)] + [cv(i, 0) for i in range(n)] + [cv(n - 1, 1)]
    spine = [cv(i, 0) for i in range(n)]
    seqs.append(long)
    seqs.append(spine)
    return path_system(g, seqs)


@dataclass(frozen=True)
class LadderSubsetPath:
    """Zig-zag ladder path encoded by a set of top-rail segments.

    The path sweeps columns left to right starting on the bottom rail,
    riding the top rail across segment j exactly when j is in the subset
    and crossing a rung wherever the rail changes.
    """

    subset: frozenset[int]
    path: Path


def ladder_subset_path(n: int, subset, host: Graph | None = None) -> LadderSubsetPath:
    if host is None:
        host = make_ladder(n)
    want = frozenset(subset)
    if any(j < 0 or j > n - 2 for j in want):
        raise ValueError(f"subset must lie within 0..{n - 2}")
    row = 0
    seq = [ladder_vertex(0, 0)]
    for j in range(n - 1):
        r = 1 if j in want else 0
        if r != row:
            seq.append(ladder_vertex(j, r))
            row = r
        seq.append(ladder_vertex(j + 1, row))
    return LadderSubsetPath(want, path_from_vertices(host, seq))


def separate_ladder(n: int) -> PathSystem:
    """Logarithmic system for the ladder with n rungs.

    Candidates: for each bit b, the zig-zag whose top segments are the
    segments with bit b set (tells rail edges apart), and the zig-zag
    switching rails exactly at columns with bit b set (tells rungs
    apart), plus a path crossing the column-0 rung and the two full
    rails. Members whose removal preserves separation are then dropped.
    The final size is at most 2*ceil(log2 n) + 4.
    """
    if n < 2:
        raise ValueError("need at least 2 rungs")
    g = make_ladder(n)
    nbits = (n - 2).bit_length()
    subsets: list[frozenset[int]] = []
    for b in range(nbits):
        subsets.append(frozenset(j for j in range(n - 1) if (j >> b) & 1))
    for b in range(nbits):
        members = set()
        d = 0
        for j in range(n - 1):
            d ^= (j >> b) & 1
            if d:
                members.add(j)
        subsets.append(frozenset(members))
    subsets.append(frozenset({0}))
    seqs = [list(ladder_subset_path(n, s, g).path.vertices) for s in subsets]
    seqs.append([ladder_vertex(j, 0) for j in range(n)])
    seqs.append([ladder_vertex(j, 1) for j in range(n)])
    uniq: list[list[int]] = []
    seen = set()
    for s in seqs:
        key = tuple(s)
        if key not in seen:
            seen.add(key)
            uniq.append(s)
    if not verify(g, path_system(g, uniq)).separating:
        raise AssertionError("ladder candidate family must separate")
    i = 0
    while i < len(uniq):
        trial = uniq[:i] + uniq[i + 1 :]
        if verify(g, path_system(g, trial)).separating:
            uniq = trial
        else:
            i += 1
    assert len(uniq) <= 2 * math.ceil(math.log2(n)) + 4
    return path_system(g, uniq)


def _is_path_shaped(t: Graph) -> bool:
    return all(t.degree(v) <= 2 for v in range(t.n))


def _path_walk(t: Graph) -> list[int]:
    """Vertex order of a path-shaped tree, from its smaller endpoint."""
    if t.n == 1:
        return [0]
    start = min(v for v in range(t.n) if t.degree(v) == 1)
    walk = [start]
    prev = -1
    while len(walk) < t.n:
        nxt = [w for w in t.neighbors(walk[-1]) if w != prev]
        prev = walk[-1]
        walk.append(nxt[0])
    return walk


def separate_tree(t: Graph) -> PathSystem:
    """Separating system of at most floor(2(n-1)/3) paths for any tree.

    Repeatedly contract the three edges at the smallest branch vertex
    (degree >= 3), remember the two wedge paths through it, and solve the
    path-shaped remainder optimally. Contracted-level paths lift to the
    original tree as the unique path between their back-mapped endpoints.
    """
    if not is_tree(t):
        raise ValueError("graph is not a tree")
    if t.n <= 2:
        return PathSystem(t, ())
    backs: list[list[int]] = []  # per level: new id -> previous-level id
    pending: list[tuple[int, int, int]] = []  # (level, endpoint a, endpoint b)
    cur = t
    level = 0
    while not _is_path_shaped(cur):
        u = min(v for v in range(cur.n) if cur.degree(v) >= 3)
        v1, v2, v3 = cur.neighbors(u)[:3]
        pending.append((level, v1, v2))
        pending.append((level, v2, v3))
        merged = {v1, v2, v3}
        old_ids = [x for x in range(cur.n) if x not in merged]
        to_new = {old: i for i, old in enumerate(old_ids)}
        pairs = []
        for x, y in cur.edges:
            if (x == u and y in merged) or (y == u and x in merged):
                continue
            pairs.append((to_new[u if x in merged else x], to_new[u if y in merged else y]))
        backs.append(old_ids)
        cur = Graph.from_unordered(len(old_ids), pairs)
        level += 1
    if cur.n >= 3:
        walk = _path_walk(cur)
        for p in separate_path_graph(cur.n):
            pending.append((level, walk[p.vertices[0]], walk[p.vertices[-1]]))
    out = []
    for lvl, a, b in pending:
        for back in reversed(backs[:lvl]):
            a = back[a]
            b = back[b]
        out.append(tree_path(t, a, b).vertices)
    return path_system(t, out)
