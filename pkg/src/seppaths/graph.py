"""Core graph, path, and path-system types plus their text formats.

Vertices are dense integers 0..n-1. Edges are unordered pairs stored as
(min, max) tuples. Every edge carries a stable index in 0..m-1 -- file
order for parsed graphs, construction order otherwise -- and that index
is the currency used by signatures, reports, and the exact solver.

Text formats (the CLI interchange formats):

* graph: first line ``n m``, then m lines ``u v`` with 0 <= u, v < n;
* path system: first line ``k``, then k lines, each a space-separated
  vertex sequence.

Both round-trip exactly through parse/serialize.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import FormatError, PathError


class Graph:
    """Immutable simple undirected graph with indexed edges."""

    __slots__ = ("n", "edges", "_index", "_nbrs", "_adj_masks", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = []
        index: dict[tuple[int, int], int] = {}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in index:
                raise ValueError(f"duplicate edge {e}")
            index[e] = len(canon)
            canon.append(e)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(canon)
        self._index = index
        nbrs: list[list[int]] = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in canon:
            nbrs[u].append(v)
            nbrs[v].append(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._nbrs = tuple(tuple(sorted(ws)) for ws in nbrs)
        self._adj_masks = tuple(masks)
        self._hash = hash((n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._index[(u, v) if u < v else (v, u)]
        except KeyError:
            raise ValueError(f"no edge ({u}, {v})") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def adjacency_mask(self, v: int) -> int:
        """Neighbourhood of v as a bitmask over vertex ids."""
        return self._adj_masks[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def min_degree(self) -> int:
        if self.n == 0:
            return 0
        return min(len(ws) for ws in self._nbrs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @classmethod
    def from_unordered(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
        """Build with lexicographic edge order (the generator convention)."""
        canon = sorted((u, v) if u < v else (v, u) for u, v in pairs)
        return cls(n, canon)


@dataclass(frozen=True)
class Path:
    """Simple path given by its vertex sequence over a host graph.

    A single vertex is a valid zero-length path here; path systems
    reject such members because they cover no edge.
    """

    host: Graph
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def edge_ids(self) -> tuple[int, ...]:
        g = self.host
        vs = self.vertices
        return tuple(g.edge_id(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    def reversed(self) -> Path:
        return Path(self.host, tuple(reversed(self.vertices)))


def path_from_vertices(g: Graph, vs: Sequence[int]) -> Path:
    """Validate a vertex sequence as a simple path of g."""
    if len(vs) == 0:
        raise PathError("empty vertex sequence")
    seen = set()
    for i, v in enumerate(vs):
        if not (0 <= v < g.n):
            raise PathError(f"vertex {v} out of range at position {i}")
        if v in seen:
            raise PathError(f"repeated vertex {v} at position {i}")
        seen.add(v)
    for i in range(len(vs) - 1):
        if not g.has_edge(vs[i], vs[i + 1]):
            raise PathError(f"missing edge ({vs[i]}, {vs[i + 1]}) at position {i}")
    return Path(g, tuple(vs))


@dataclass(frozen=True)
class PathSystem:
    """Ordered family of paths over one host graph, each of length >= 1."""

    host: Graph
    paths: tuple[Path, ...]

    def __post_init__(self):
        for i, p in enumerate(self.paths):
            if p.host is not self.host and p.host != self.host:
                raise ValueError(f"path {i} lives on a different graph")
            if p.length < 1:
                raise ValueError(f"path {i} has length 0; it separates nothing")

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[Path]:
        return iter(self.paths)

    def __getitem__(self, i: int) -> Path:
        return self.paths[i]


def path_system(g: Graph, seqs: Iterable[Sequence[int]]) -> PathSystem:
    return PathSystem(g, tuple(path_from_vertices(g, vs) for vs in seqs))


@dataclass(frozen=True)
class ColoredMultigraph:
    """Edge-colored multigraph whose color classes are single cycles.

    Colors are vertex identifiers of an external graph; parallel edges
    are allowed across colors. Used internally by the core-peeling
    strategy to encode, for each outside vertex, a cycle through its
    neighbors inside a core.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]  # (u, v, color)

    def __post_init__(self):
        by_color: dict[int, list[tuple[int, int]]] = {}
        for u, v, color in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u} in color class {color}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            by_color.setdefault(color, []).append((u, v))
        for color, es in by_color.items():
            deg: dict[int, int] = {}
            for u, v in es:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            if len(es) != len(deg) or any(d != 2 for d in deg.values()):
                raise ValueError(f"color class {color} is not a single cycle")
            # degree-2 everywhere with #edges == #vertices leaves either one
            # cycle or several; walk to rule out several.
            adj: dict[int, list[int]] = {v: [] for v in deg}
            for u, v in es:
                adj[u].append(v)
                adj[v].append(u)
            start = next(iter(deg))
            seen = {start}
            frontier = [start]
            while frontier:
                x = frontier.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        frontier.append(y)
            if len(seen) != len(deg):
                raise ValueError(f"color class {color} is not a single cycle")

    def color_classes(self) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {}
        for u, v, color in self.edges:
            out.setdefault(color, []).append((u, v))
        return out


# ---------------------------------------------------------------------------
# tree utilities

def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def tree_path(t: Graph, u: int, v: int) -> Path:
    """The unique u-v path of a tree."""
    if not is_tree(t):
        raise ValueError("graph is not a tree")
    if u == v:
        raise ValueError("path endpoints coincide")
    parent = [-1] * t.n
    parent[u] = u
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for w in t.neighbors(x):
            if parent[w] == -1:
                parent[w] = x
                queue.append(w)
    if parent[v] == -1:
        raise ValueError(f"no path between {u} and {v}")
    out = [v]
    while out[-1] != u:
        out.append(parent[out[-1]])
    out.reverse()
    return Path(t, tuple(out))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``, relabeled to dense ids.

    Returns the subgraph and the list mapping new id -> old id; edges are
    ordered lexicographically in the new labels.
    """
    old_ids = sorted(set(vertices))
    to_new = {old: new for new, old in enumerate(old_ids)}
    pairs = []
    for u, v in g.edges:
        if u in to_new and v in to_new:
            pairs.append((to_new[u], to_new[v]))
    return Graph.from_unordered(len(old_ids), pairs), old_ids


def subgraph_with_edges(g: Graph, edge_ids: Iterable[int]) -> Graph:
    """Spanning subgraph keeping the listed edges, in their original order."""
    return Graph(g.n, [g.edges[i] for i in sorted(set(edge_ids))])


# ---------------------------------------------------------------------------
# text formats

def parse_graph(text: str) -> Graph:
    lines = text.splitlines()
    if not lines or not lines[0].split():
        raise FormatError("missing header 'n m'", line=1)
    header = lines[0].split()
    if len(header) != 2:
        raise FormatError("header must be 'n m'", line=1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise FormatError("header must contain two integers", line=1) from None
    if n < 0 or m < 0:
        raise FormatError("negative count in header", line=1)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for k in range(m):
        lineno = k + 2
        if k + 1 >= len(lines) or not lines[k + 1].split():
            raise FormatError(f"expected {m} edge lines, found {k}", line=lineno)
        parts = lines[k + 1].split()
        if len(parts) != 2:
            raise FormatError("edge line must be 'u v'", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError("edge line must contain two integers", line=lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range in edge ({u}, {v})", line=lineno)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", line=lineno)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise FormatError(f"duplicate edge {e}", line=lineno)
        seen.add(e)
        edges.append(e)
    for extra in range(m + 1, len(lines)):
        if lines[extra].split():
            raise FormatError("trailing content after edge list", line=extra + 1)
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_path_system(text: str, host: Graph) -> PathSystem:
    lines = text.splitlines()
    if not lines or not lines[0].split():
        raise FormatError("missing path count header", line=1)
    try:
        k = int(lines[0].strip())
    except ValueError:
        raise FormatError("path count must be an integer", line=1) from None
    if k < 0:
        raise FormatError("negative path count", line=1)
    paths = []
    for i in range(k):
        lineno = i + 2
        if i + 1 >= len(lines) or not lines[i + 1].split():
            raise FormatError(f"expected {k} path lines, found {i}", line=lineno)
        try:
            vs = [int(tok) for tok in lines[i + 1].split()]
        except ValueError:
            raise FormatError("path line must contain integers", line=lineno) from None
        try:
            p = path_from_vertices(host, vs)
        except PathError as exc:
            raise FormatError(str(exc), line=lineno) from None
        if p.length < 1:
            raise FormatError("path of length 0 not allowed in a system", line=lineno)
        paths.append(p)
    for extra in range(k + 1, len(lines)):
        if lines[extra].split():
            raise FormatError("trailing content after path list", line=extra + 1)
    return PathSystem(host, tuple(paths))


def serialize_path_system(ps: PathSystem) -> str:
    out = [str(len(ps))]
    out.extend(" ".join(map(str, p.vertices)) for p in ps)
    return "\n".join(out) + "\n"
