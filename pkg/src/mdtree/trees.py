"""Rooted labeled trees on ``{0, ..., n}`` and their maximal decreasing subtrees.

A tree is stored as a parent array: ``parent[v]`` is the parent label of
``v`` and ``None`` marks the root.  The maximal decreasing subtree ``MD(T)``
is the largest subtree containing the root in which every parent-to-child
edge goes from a larger label to a smaller one; its size minus one is the
*k-statistic* used throughout the package.

Exhaustive enumeration pairs a root with a Prufer sequence, which yields
every one of the ``(n+1)^n`` rooted trees exactly once.
"""

from __future__ import annotations

import heapq
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from . import config
from .errors import BadLabelRange, CycleDetected, InvalidTree, LimitExceeded, MultipleRoots

__all__ = [
    "RootedLabeledTree",
    "MdResult",
    "Subtree",
    "validate",
    "maximal_decreasing_subtree",
    "is_local_minimum",
    "prufer_decode",
    "enumerate_trees",
    "brute_force_triangle",
    "decompose",
    "reassemble",
    "classify_trees",
    "tree_from_json",
]


@dataclass(frozen=True)
class RootedLabeledTree:
    n: int
    root: int
    parent: tuple[int | None, ...]

    def children(self) -> list[list[int]]:
        """Children of every vertex, each list in increasing label order."""
        kids: list[list[int]] = [[] for _ in range(self.n + 1)]
        for v, p in enumerate(self.parent):
            if p is not None:
                kids[p].append(v)
        return kids

    @property
    def labels(self) -> frozenset[int]:
        return frozenset(range(self.n + 1))

    def to_dict(self) -> dict:
        return {"n": self.n, "root": self.root, "parent": list(self.parent)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class MdResult:
    vertices: frozenset[int]
    k: int


@dataclass(frozen=True, eq=True)
class Subtree:
    """A rooted tree on an arbitrary label set, as produced by :func:`decompose`."""

    root: int
    parent: Mapping[int, int | None]

    @property
    def labels(self) -> frozenset[int]:
        return frozenset(self.parent)

    def children(self) -> dict[int, list[int]]:
        kids: dict[int, list[int]] = {v: [] for v in sorted(self.parent)}
        for v in sorted(self.parent):
            p = self.parent[v]
            if p is not None:
                kids[p].append(v)
        return kids

    def relabel(self) -> RootedLabeledTree:
        """Order-preserving relabelling onto ``{0, ..., |labels|-1}``.

        Edge directions (increasing or decreasing) survive, so the k-statistic
        of the result equals that of the piece.
        """
        order = sorted(self.parent)
        index = {v: i for i, v in enumerate(order)}
        parent = tuple(None if self.parent[v] is None else index[self.parent[v]] for v in order)
        return RootedLabeledTree(len(order) - 1, index[self.root], parent)


def validate(parent: Sequence[int | None], root: int) -> RootedLabeledTree:
    """Check a parent array and wrap it as a :class:`RootedLabeledTree`.

    >>> validate([None], 0)
    RootedLabeledTree(n=0, root=0, parent=(None,))
    """
    parent = tuple(parent)
    if not parent:
        raise BadLabelRange("parent array is empty; a tree needs at least the label 0")
    n = len(parent) - 1
    if not (isinstance(root, int) and 0 <= root <= n):
        raise BadLabelRange(f"root {root!r} is not a label in [0, {n}]")
    for v, p in enumerate(parent):
        if p is None:
            continue
        if not (isinstance(p, int) and not isinstance(p, bool) and 0 <= p <= n):
            raise BadLabelRange(f"parent of {v} is {p!r}, outside [0, {n}]")
        if p == v:
            raise CycleDetected(f"vertex {v} is its own parent")

    unparented = [v for v, p in enumerate(parent) if p is None]
    if len(unparented) > 1:
        raise MultipleRoots(f"vertices {unparented} all lack a parent; exactly one root allowed")
    if not unparented:
        raise CycleDetected("every vertex has a parent, so the parent links contain a cycle")
    if unparented[0] != root:
        raise MultipleRoots(f"declared root {root} has parent {parent[root]}, "
                            f"but vertex {unparented[0]} has none")

    # 0 = unvisited, 1 = on current path, 2 = known to reach root
    state = [0] * (n + 1)
    state[root] = 2
    for start in range(n + 1):
        path = []
        v = start
        while state[v] == 0:
            state[v] = 1
            path.append(v)
            v = parent[v]
        if state[v] == 1:
            raise CycleDetected(f"parent links from {start} loop back through {v}")
        for u in path:
            state[u] = 2
    return RootedLabeledTree(n, root, parent)


def tree_from_json(data: str | Mapping) -> RootedLabeledTree:
    """Parse ``{"n": int, "root": int, "parent": [int | null, ...]}``."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        n, root, parent = data["n"], data["root"], data["parent"]
    except (KeyError, TypeError) as exc:
        raise InvalidTree(f"tree JSON needs keys n, root, parent: {exc}") from None
    if len(parent) != n + 1:
        raise BadLabelRange(f"n={n} but parent array has length {len(parent)}")
    return validate(parent, root)


def maximal_decreasing_subtree(t: RootedLabeledTree) -> MdResult:
    kids = t.children()
    seen = {t.root}
    stack = [t.root]
    while stack:
        v = stack.pop()
        for c in kids[v]:
            if c < v:
                seen.add(c)
                stack.append(c)
    return MdResult(frozenset(seen), len(seen) - 1)


def is_local_minimum(t: RootedLabeledTree | Subtree) -> bool:
    """True when every child of the root has a larger label than the root."""
    kids = t.children()
    return all(c > t.root for c in kids[t.root])


def prufer_decode(seq: Sequence[int], m: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree on ``{0, ..., m-1}`` encoded by ``seq``.

    At each step the smallest current leaf is joined to the next sequence
    element.  ``seq`` must have length ``m - 2`` (empty for ``m <= 2``).
    """
    if m <= 1:
        return []
    if len(seq) != m - 2:
        raise ValueError(f"Prufer sequence for {m} vertices must have length {m - 2}")
    degree = [1] * m
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(m) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def _orient(edges: Iterable[tuple[int, int]], m: int, root: int) -> tuple[int | None, ...]:
    adj: list[list[int]] = [[] for _ in range(m)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parent: list[int | None] = [None] * m
    seen = [False] * m
    seen[root] = True
    stack = [root]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                stack.append(u)
    return tuple(parent)


def _check_cap(n: int, cap: int | None) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    limit = config.enumeration_cap() if cap is None else cap
    if n > limit:
        raise LimitExceeded(f"exhaustive tree enumeration requested for n={n}, cap is {limit}")


def enumerate_trees(n: int, *, cap: int | None = None) -> Iterator[RootedLabeledTree]:
    """Yield all ``(n+1)^n`` rooted labeled trees on ``{0, ..., n}``.

    Order is root-major, then Prufer sequences in lexicographic order.
    """
    _check_cap(n, cap)
    m = n + 1
    for root in range(m):
        for seq in product(range(m), repeat=max(m - 2, 0)):
            yield RootedLabeledTree(n, root, _orient(prufer_decode(seq, m), m, root))


def _count_chunk(args: tuple[int, tuple[int, ...]]) -> list[int]:
    """Triangle contribution of every Prufer sequence starting with ``prefix``.

    Rooting an unrooted tree at ``r``, the parent of any non-root vertex of
    MD is larger than it, so MD is exactly the set of vertices reachable from
    ``r`` along label-decreasing paths.  ``down[v]`` (that set's size for
    root ``v``) is filled in increasing label order, which gives the
    statistic for all ``m`` roots from a single decode.
    """
    n, prefix = args
    m = n + 1
    row = [0] * m
    tail = m - 2 - len(prefix)
    for rest in product(range(m), repeat=max(tail, 0)):
        adj: list[list[int]] = [[] for _ in range(m)]
        for u, v in prufer_decode(prefix + rest, m):
            adj[u].append(v)
            adj[v].append(u)
        down = [1] * m
        for v in range(m):
            total = 1
            for u in adj[v]:
                if u < v:
                    total += down[u]
            down[v] = total
            row[total - 1] += 1
    return row


def brute_force_triangle(n: int, *, cap: int | None = None, workers: int = 1) -> list[int]:
    """Count the trees on ``{0, ..., n}`` by k-statistic, exhaustively.

    ``workers > 1`` splits the Prufer sequences by first symbol across
    processes; the result does not depend on the split.
    """
    _check_cap(n, cap)
    m = n + 1
    if m <= 2 or workers <= 1:
        chunks = [(n, ())]
    else:
        chunks = [(n, (x,)) for x in range(m)]

    row = [0] * m
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_chunk, chunks))
    else:
        parts = [_count_chunk(c) for c in chunks]
    for part in parts:
        for k, c in enumerate(part):
            row[k] += c
    return row


def classify_trees(trees: Iterable[RootedLabeledTree]) -> Counter:
    """Histogram of the k-statistic over ``trees``, one MD extraction per tree."""
    return Counter(maximal_decreasing_subtree(t).k for t in trees)


def decompose(t: RootedLabeledTree) -> list[Subtree]:
    """Cut the edges of ``MD(t)``, leaving ``k+1`` local minimum trees.

    Each MD vertex roots one piece; the pieces are returned by increasing
    root label.
    """
    md = maximal_decreasing_subtree(t).vertices
    kids = t.children()
    pieces = []
    for r in sorted(md):
        parent: dict[int, int | None] = {r: None}
        stack = [r]
        while stack:
            v = stack.pop()
            for c in kids[v]:
                if c not in md:
                    parent[c] = v
                    stack.append(c)
        pieces.append(Subtree(r, parent))
    return pieces


def reassemble(pieces: Sequence[Subtree], attach: Mapping[int, int]) -> RootedLabeledTree:
    """Glue ``pieces`` back together, hanging piece root ``r`` under ``attach[r]``.

    Exactly one piece root must be absent from ``attach``; it becomes the root.
    """
    labels = [v for p in pieces for v in p.parent]
    n = len(labels) - 1
    if sorted(labels) != list(range(n + 1)):
        raise BadLabelRange("piece label sets do not partition {0, ..., n}")
    parent: list[int | None] = [None] * (n + 1)
    for p in pieces:
        for v, u in p.parent.items():
            parent[v] = u
    roots = [p.root for p in pieces if p.root not in attach]
    if len(roots) != 1:
        raise MultipleRoots(f"{len(roots)} pieces left unattached, expected exactly 1")
    for r, u in attach.items():
        parent[r] = u
    return validate(parent, roots[0])
