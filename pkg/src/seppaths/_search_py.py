"""Pure-Python depth-limited search for a minimum separating selection.

Mirror of the compiled kernel in ``_search_cy``. Both backends must
produce bit-identical results -- same branching order, same node
accounting -- so that backend choice never changes observable behavior.
Any change here must be replicated there (test_kernel_parity guards it).

State: for each edge, a signature bitmask over the positions of chosen
paths. Branch on the lexicographically first unseparated edge pair,
trying only paths containing exactly one of the two edges, best-first by
the number of unseparated pairs each resolves.
"""

from __future__ import annotations

from typing import Sequence


def search(
    masks: Sequence[int], m: int, k: int, budget: int
) -> tuple[list[int] | None, int, bool]:
    """Look for <= k paths (indices into masks) separating all m edges.

    Returns (solution or None, nodes visited, budget exhausted). Node
    budget is checked on entry; the aborted node is counted.
    """
    paths_by_edge: list[list[int]] = [[] for _ in range(m)]
    for i, mask in enumerate(masks):
        mm = mask
        while mm:
            low = mm & -mm
            paths_by_edge[low.bit_length() - 1].append(i)
            mm ^= low
    maxsep = 0
    for mask in masks:
        t = mask.bit_count()
        s = t * (m - t)
        if s > maxsep:
            maxsep = s
    if maxsep == 0:
        return None, 1, False

    sigs = [0] * m
    chosen: list[int] = []
    state = {"nodes": 0, "exhausted": False, "found": None}

    def dfs(depth: int) -> bool:
        state["nodes"] += 1
        if state["nodes"] > budget:
            state["exhausted"] = True
            return True
        groups: dict[int, list[int]] = {}
        for e in range(m):
            groups.setdefault(sigs[e], []).append(e)
        unsep = 0
        maxgroup = 0
        for members in groups.values():
            c = len(members)
            unsep += c * (c - 1) // 2
            if c > maxgroup:
                maxgroup = c
        if unsep == 0:
            state["found"] = list(chosen)
            return True
        if depth == k:
            return False
        if (unsep + maxsep - 1) // maxsep > k - depth:
            return False
        # edges sharing a signature need distinct completions over the
        # remaining positions
        if maxgroup > (1 << (k - depth)):
            return False
        e = f = m
        gmasks: list[tuple[int, int]] = []
        for members in groups.values():
            c = len(members)
            if c >= 2:
                if (members[0], members[1]) < (e, f):
                    e, f = members[0], members[1]
                gm = 0
                for x in members:
                    gm |= 1 << x
                gmasks.append((gm, c))
        cands = sorted(set(paths_by_edge[e]) ^ set(paths_by_edge[f]))
        scored = []
        for i in cands:
            sc = 0
            pm = masks[i]
            for gm, c in gmasks:
                a = (pm & gm).bit_count()
                sc += a * (c - a)
            scored.append((-sc, i))
        scored.sort()
        bit = 1 << depth
        for _negsc, i in scored:
            mm = masks[i]
            while mm:
                low = mm & -mm
                sigs[low.bit_length() - 1] |= bit
                mm ^= low
            chosen.append(i)
            if dfs(depth + 1):
                return True
            chosen.pop()
            mm = masks[i]
            while mm:
                low = mm & -mm
                sigs[low.bit_length() - 1] &= ~bit
                mm ^= low
        return False

    dfs(0)
    if state["exhausted"]:
        return None, state["nodes"], True
    return state["found"], state["nodes"], False
