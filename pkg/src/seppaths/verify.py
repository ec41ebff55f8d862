"""Separation checking, lower bounds, and probe-outcome decoding.

A family of paths separates the edges of a graph when every pair of
distinct edges is told apart by some member: the member contains exactly
one of the two. Equivalently, the *signature* of an edge -- the set of
family members containing it -- is distinct for every edge. At most one
edge may have the empty signature, so a separating family leaves at most
one edge uncovered.

The link-failure reading: each path is a probe; a single defective edge
fails exactly the probes whose paths contain it, so the observed set of
failed probes equals the edge's signature and `decode` inverts it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .errors import DecodeError, PathError
from .graph import Graph, PathSystem, is_tree


@dataclass(frozen=True)
class SeparationReport:
    """Verdict plus the evidence behind it.

    ``witness`` is the lexicographically first unseparated pair of edge
    indices (present iff not separating); ``uncovered`` lists edges in no
    path; ``signatures[e]`` is the set of path indices containing edge e.
    """

    separating: bool
    witness: tuple[int, int] | None
    uncovered: tuple[int, ...]
    signatures: tuple[frozenset[int], ...]

    def to_json(self) -> str:
        return json.dumps(
            {
                "separating": self.separating,
                "witness": list(self.witness) if self.witness else None,
                "uncovered": list(self.uncovered),
                "signatures": [sorted(s) for s in self.signatures],
            }
        )


def _signatures(g: Graph, ps: PathSystem) -> list[set[int]]:
    sigs: list[set[int]] = [set() for _ in range(g.m)]
    for i, p in enumerate(ps):
        vs = p.vertices
        for a in range(len(vs) - 1):
            try:
                e = g.edge_id(vs[a], vs[a + 1])
            except ValueError:
                raise PathError(
                    f"path {i} uses missing edge ({vs[a]}, {vs[a + 1]})"
                ) from None
            sigs[e].add(i)
    return sigs


def signature(g: Graph, ps: PathSystem, e: int) -> frozenset[int]:
    """Set of path indices whose path contains edge e."""
    if not (0 <= e < g.m):
        raise ValueError(f"edge index {e} out of range")
    u, v = g.edges[e]
    out = set()
    for i, p in enumerate(ps):
        vs = p.vertices
        for a in range(len(vs) - 1):
            if (vs[a], vs[a + 1]) in ((u, v), (v, u)):
                out.add(i)
                break
    return frozenset(out)


def verify(g: Graph, ps: PathSystem) -> SeparationReport:
    """Decide whether ps separates the edges of g."""
    sigs = _signatures(g, ps)
    groups: dict[frozenset[int], list[int]] = {}
    frozen = []
    for e in range(g.m):
        s = frozenset(sigs[e])
        frozen.append(s)
        groups.setdefault(s, []).append(e)
    witness = None
    for members in groups.values():
        if len(members) >= 2:
            pair = (members[0], members[1])
            if witness is None or pair < witness:
                witness = pair
    uncovered = tuple(e for e in range(g.m) if not sigs[e])
    return SeparationReport(
        separating=witness is None,
        witness=witness,
        uncovered=uncovered,
        signatures=tuple(frozen),
    )


def decode(g: Graph, ps: PathSystem, outcome: set[int] | frozenset[int]) -> int:
    """Map a set of failed probe indices back to the defective edge.

    Requires a separating system. The empty outcome decodes to the unique
    uncovered edge; if every edge is covered, an empty outcome is
    inconsistent, as is any outcome matching no signature.
    """
    report = verify(g, ps)
    if not report.separating:
        raise ValueError("path system is not separating; decoding is ambiguous")
    want = frozenset(outcome)
    if not want:
        if not report.uncovered:
            raise DecodeError("empty outcome, but every edge is covered")
        return report.uncovered[0]
    for e, s in enumerate(report.signatures):
        if s == want:
            return e
    raise DecodeError(f"no edge has signature {sorted(want)}")


# ---------------------------------------------------------------------------
# lower bounds

def info_lower_bound(m: int) -> int:
    """Information-theoretic bound: ceil(log2 m) members are needed."""
    if m < 1:
        raise ValueError("edge count must be positive")
    return (m - 1).bit_length()


def complete_lower_bound(n: int) -> int:
    """Smallest k admitted by the length-counting inequality on K_n.

    With k paths, at most one edge is uncovered and at most k edges lie
    on exactly one path; every other edge lies on two or more, while the
    total edge capacity is k(n-1). Solved exactly (it works out to n-1).
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    total = n * (n - 1) // 2
    for k in range(0, n + 1):
        if k * (n - 1) >= 1 + k + 2 * (total - k - 1):
            return k
    raise AssertionError("unreachable: k = n always satisfies the inequality")


def tree_lower_bound(t: Graph) -> int:
    """Lower bound for trees: max(ceil((n+1)/3), ceil(log2(n-1)))."""
    if not is_tree(t):
        raise ValueError("graph is not a tree")
    if t.n < 4:
        raise ValueError("tree bound needs at least 4 vertices")
    return max(math.ceil((t.n + 1) / 3), info_lower_bound(t.n - 1))


# ---------------------------------------------------------------------------
# endpoint conditions that every separating system of a tree satisfies

@dataclass(frozen=True)
class Violation:
    kind: str
    vertices: tuple[int, ...]


def tree_endpoint_violations(t: Graph, ps: PathSystem) -> list[Violation]:
    """Check necessary endpoint conditions on a tree path system.

    For any separating system of a tree: all leaves except at most one
    are path endpoints; every degree-2 vertex is a path endpoint; and a
    path joining two leaves needs some path with exactly one of those
    leaves as an endpoint. Returns the violations found (empty for every
    actually-separating system; useful for rejecting candidates early
    and as a sanity check on the verifier).
    """
    if not is_tree(t):
        raise ValueError("graph is not a tree")
    if t.n < 3:
        raise ValueError("needs at least 3 vertices")
    endpoints: dict[int, int] = {}
    for p in ps:
        for v in (p.vertices[0], p.vertices[-1]):
            endpoints[v] = endpoints.get(v, 0) + 1
    out: list[Violation] = []
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    missed = tuple(v for v in leaves if v not in endpoints)
    if len(missed) >= 2:
        out.append(Violation("leaves-without-endpoint", missed))
    for v in range(t.n):
        if t.degree(v) == 2 and v not in endpoints:
            out.append(Violation("degree2-without-endpoint", (v,)))
    leaf_set = set(leaves)
    for p in ps:
        u, v = p.vertices[0], p.vertices[-1]
        if u in leaf_set and v in leaf_set:
            ok = any(
                (q.vertices[0] in (u, v)) != (q.vertices[-1] in (u, v))
                for q in ps
            )
            if not ok:
                out.append(Violation("leaf-pair-without-distinguisher", (u, v)))
    return out
