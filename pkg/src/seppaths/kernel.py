"""Search backend selection: compiled extension if available, pure Python otherwise.

The compiled kernel packs edge sets and signatures into machine words, so
it only handles instances with at most 64 edges and search depth at most
64; the pure backend has no such limit. ``auto`` picks the compiled one
whenever it applies. Set ``SEPPATHS_BACKEND=pure`` (or ``compiled``) to
pin a backend globally, e.g. for benchmarking.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _search_py

try:
    from . import _search_cy  # type: ignore[attr-defined]

    HAVE_COMPILED = True
except ImportError:  # pragma: no cover - depends on build environment
    _search_cy = None
    HAVE_COMPILED = False

COMPILED_MAX_EDGES = 64
COMPILED_MAX_DEPTH = 64

_BACKENDS = ("auto", "compiled", "pure")


def resolve_backend(backend: str = "auto", *, m: int = 0, k: int = 0) -> str:
    """Return 'compiled' or 'pure' for the given instance size."""
    if backend not in _BACKENDS:
        raise ValueError(f"unknown backend {backend!r}; expected one of {_BACKENDS}")
    if backend == "auto":
        backend = os.environ.get("SEPPATHS_BACKEND", "auto")
        if backend not in _BACKENDS:
            raise ValueError(f"SEPPATHS_BACKEND={backend!r} is not a valid backend")
    if backend == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled backend requested but extension not built")
        if m > COMPILED_MAX_EDGES or k > COMPILED_MAX_DEPTH:
            raise ValueError(
                f"instance (m={m}, depth={k}) exceeds the compiled backend limits"
            )
        return "compiled"
    if backend == "pure":
        return "pure"
    if HAVE_COMPILED and m <= COMPILED_MAX_EDGES and k <= COMPILED_MAX_DEPTH:
        return "compiled"
    return "pure"


def search(
    masks: Sequence[int], m: int, k: int, budget: int, backend: str = "auto"
) -> tuple[list[int] | None, int, bool]:
    """Depth-limited separating-selection search; see _search_py.search."""
    which = resolve_backend(backend, m=m, k=k)
    if which == "compiled":
        return _search_cy.search(list(masks), m, k, budget)
    return _search_py.search(masks, m, k, budget)
