"""Trees: Fibonacci-word decomposition trees, paths, stars, Kragujevac trees,
and exhaustive labeled-tree enumeration by Pruefer sequences.

The exhaustive sweeps run through a kernel that decodes a block of Pruefer
indices and emits one row of degree statistics per tree. A compiled kernel is
used when the extension is built; otherwise a pure-Python twin with identical
output is selected at import. Set ``FIBWORD_PURE_PYTHON=1`` to force the
fallback and ``FIBWORD_THREADS`` to bound the sweep thread pool.
"""

from __future__ import annotations

import heapq
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _pykernels
from .fibnum import fib
from .words import Word, fib_word

if os.environ.get("FIBWORD_PURE_PYTHON"):
    _kernels = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _kernels

        BACKEND = "cython"
    except ImportError:  # extension not built
        _kernels = _pykernels
        BACKEND = "python"

__all__ = [
    "BACKEND",
    "Tree",
    "TreeFormatError",
    "DecompositionTree",
    "DecompNode",
    "NeighborPartition",
    "KragujevacSpec",
    "STAT_COLUMNS",
    "MAX_DECOMPOSITION_INDEX",
    "decomposition_tree",
    "path",
    "star",
    "kragujevac",
    "neighbor_partition",
    "prufer_decode",
    "prufer_encode",
    "prufer_from_index",
    "tree_from_index",
    "enumerate_trees",
    "tree_count",
    "tree_stats",
    "iter_stat_blocks",
    "parse_edge_list",
]

MAX_DECOMPOSITION_INDEX = 28
MAX_ENUMERATION_N = 9

#: Column order of the rows produced by :func:`tree_stats`.
STAT_COLUMNS = ("irr", "fwi_star", "m1", "m2", "f1", "sigma", "max_degree", "n_big", "irr_total")


class TreeFormatError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class Tree:
    """Undirected tree on vertices ``0 .. n-1``."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a tree needs at least one vertex")
        norm = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        object.__setattr__(self, "edges", norm)
        if len(norm) != self.n - 1:
            raise ValueError(f"{self.n} vertices need {self.n - 1} edges, got {len(norm)}")
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in norm:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise ValueError(f"invalid edge ({u}, {v}) for n={self.n}")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ValueError(f"edge ({u}, {v}) closes a cycle")
            parent[ru] = rv

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: int | None = None) -> "Tree":
        edges = [tuple(e) for e in edges]
        if n is None:
            n = 1 + max((max(e) for e in edges), default=0)
        return cls(n, tuple(edges))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def is_path(self) -> bool:
        return self.max_degree <= 2

    def is_star(self) -> bool:
        return self.n >= 2 and self.max_degree == self.n - 1

    def to_text(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Tree:
    """Parse the ``n`` / ``u v`` edge-list format; blank lines are ignored."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise TreeFormatError(f"expected vertex count, got {line!r}", lineno)
            n = int(parts[0])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise TreeFormatError(f"expected 'u v', got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise TreeFormatError(f"vertex out of range for n={n}", lineno)
        edges.append((u, v))
    if n is None:
        raise TreeFormatError("empty edge list")
    try:
        return Tree(n, tuple(edges))
    except ValueError as exc:
        raise TreeFormatError(str(exc)) from exc


# -- constructors ----------------------------------------------------------


def path(n: int) -> Tree:
    if n < 2:
        raise ValueError(f"path needs n >= 2, got {n}")
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Tree:
    """Star on ``n`` vertices with centre 0."""
    if n < 2:
        raise ValueError(f"star needs n >= 2, got {n}")
    return Tree(n, tuple((0, i) for i in range(1, n)))


@dataclass(frozen=True)
class KragujevacSpec:
    """Branch sizes k_i of the branches B_{k_i} hung from the central vertex."""

    branch_sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "branch_sizes", tuple(self.branch_sizes))
        if len(self.branch_sizes) < 3:
            raise ValueError("a Kragujevac tree needs at least 3 branches")
        if any(k < 1 for k in self.branch_sizes):
            raise ValueError("branch sizes must be >= 1")

    @property
    def vertex_count(self) -> int:
        return 1 + sum(1 + 2 * k for k in self.branch_sizes)


def kragujevac(spec: KragujevacSpec | Sequence[int]) -> Tree:
    """Central vertex 0 joined to the root of each branch B_k.

    B_k is a root with k pendant paths root-middle-pendant, so the root has
    degree k + 1 once attached to the centre.
    """
    if not isinstance(spec, KragujevacSpec):
        spec = KragujevacSpec(tuple(spec))
    edges = []
    nxt = 1
    for k in spec.branch_sizes:
        root = nxt
        nxt += 1
        edges.append((0, root))
        for _ in range(k):
            mid, pend = nxt, nxt + 1
            nxt += 2
            edges.append((root, mid))
            edges.append((mid, pend))
    return Tree(nxt, tuple(edges))


@dataclass(frozen=True)
class NeighborPartition:
    l: int
    e: int
    r: int

    @property
    def total(self) -> int:
        return self.l + self.e + self.r


def neighbor_partition(t, v: int) -> NeighborPartition:
    """Count neighbours of ``v`` with smaller, equal and larger degree.

    Works on :class:`Tree` or anything exposing ``degrees`` and ``adjacency``.
    """
    if not 0 <= v < len(t.degrees):
        raise IndexError(f"vertex {v} not in graph")
    d = t.degrees[v]
    l = e = r = 0
    for x in t.adjacency[v]:
        dx = t.degrees[x]
        if dx < d:
            l += 1
        elif dx == d:
            e += 1
        else:
            r += 1
    return NeighborPartition(l, e, r)


# -- decomposition tree ----------------------------------------------------


@dataclass(frozen=True)
class DecompNode:
    id: int
    k: int
    parent: int | None
    children: tuple[int, ...] = ()

    @property
    def word(self) -> Word:
        return fib_word(self.k)


@dataclass(frozen=True)
class DecompositionTree:
    """Rooted expansion of F_n into (F_{n-1}, F_{n-2}) down to F_1, F_2 leaves.

    Node ids are assigned in preorder, so leaves appear left-to-right in id order.
    """

    root_index: int
    nodes: tuple[DecompNode, ...]
    underlying: Tree = field(repr=False)

    @property
    def root(self) -> DecompNode:
        return self.nodes[0]

    def leaves(self) -> list[DecompNode]:
        return [nd for nd in self.nodes if not nd.children]

    def leaf_word(self) -> str:
        return "".join("1" if nd.k == 1 else "0" for nd in self.leaves())

    def parent_child_edges(self) -> list[tuple[int, int]]:
        return [(nd.parent, nd.id) for nd in self.nodes if nd.parent is not None]


def decomposition_tree(n: int) -> DecompositionTree:
    if n < 1:
        raise ValueError(f"decomposition_tree needs n >= 1, got {n}")
    if n > MAX_DECOMPOSITION_INDEX:
        raise ValueError(
            f"decomposition_tree({n}) would have {2 * fib(n) - 1} nodes; "
            f"limit is n={MAX_DECOMPOSITION_INDEX}"
        )
    ks: list[int] = []
    parents: list[int | None] = []
    children: list[list[int]] = []
    stack: list[tuple[int, int | None]] = [(n, None)]
    while stack:
        k, par = stack.pop()
        nid = len(ks)
        ks.append(k)
        parents.append(par)
        children.append([])
        if par is not None:
            children[par].append(nid)
        if k >= 3:
            # pushed in reverse so F_{k-1} is visited (and numbered) first
            stack.append((k - 2, nid))
            stack.append((k - 1, nid))
    nodes = tuple(
        DecompNode(i, ks[i], parents[i], tuple(children[i])) for i in range(len(ks))
    )
    edges = tuple((p, i) for i, p in enumerate(parents) if p is not None)
    return DecompositionTree(n, nodes, Tree(len(ks), edges))


# -- Pruefer codes and enumeration -----------------------------------------


def prufer_decode(seq: Sequence[int], n: int | None = None) -> Tree:
    """Tree for a Pruefer sequence over labels ``0 .. n-1`` (heap method)."""
    if n is None:
        n = len(seq) + 2
    if len(seq) != n - 2:
        raise ValueError("a Pruefer sequence for n vertices has length n - 2")
    count = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise ValueError(f"label {x} out of range")
        count[x] += 1
    heap = [v for v in range(n) if count[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        count[x] -= 1
        if count[x] == 1:
            heapq.heappush(heap, x)
    u, v = heapq.heappop(heap), heapq.heappop(heap)
    edges.append((u, v))
    return Tree(n, tuple(edges))


def prufer_encode(t: Tree) -> list[int]:
    """Inverse of :func:`prufer_decode`: repeatedly strip the smallest leaf."""
    deg = list(t.degrees)
    adj = [set(a) for a in t.adjacency]
    heap = [v for v in range(t.n) if deg[v] == 1]
    heapq.heapify(heap)
    seq = []
    for _ in range(t.n - 2):
        leaf = heapq.heappop(heap)
        (nb,) = adj[leaf]
        seq.append(nb)
        adj[nb].discard(leaf)
        deg[nb] -= 1
        if deg[nb] == 1:
            heapq.heappush(heap, nb)
    return seq


def tree_count(n: int) -> int:
    return n ** (n - 2)


def prufer_from_index(n: int, index: int) -> list[int]:
    """Base-n digits of ``index``, most significant first."""
    if not 0 <= index < tree_count(n):
        raise ValueError(f"index {index} out of range for n={n}")
    seq = [0] * (n - 2)
    for j in range(n - 3, -1, -1):
        index, seq[j] = divmod(index, n)
    return seq


def tree_from_index(n: int, index: int) -> Tree:
    return prufer_decode(prufer_from_index(n, index), n)


def _check_enum_range(n: int):
    if not 2 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supports 2 <= n <= {MAX_ENUMERATION_N}, got {n}")


def enumerate_trees(n: int) -> Iterator[Tree]:
    """All n^(n-2) labeled trees, in Pruefer-index order."""
    _check_enum_range(n)
    for i in range(tree_count(n)):
        yield tree_from_index(n, i)


def tree_stats(n: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Rows of :data:`STAT_COLUMNS` for Pruefer indices in ``[start, stop)``."""
    _check_enum_range(n)
    total = tree_count(n)
    stop = total if stop is None else min(stop, total)
    return _kernels.tree_stats(n, start, stop)


def _thread_count() -> int:
    env = os.environ.get("FIBWORD_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def iter_stat_blocks(
    n: int, block_size: int = 1 << 16, threads: int | None = None
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(start, rows)`` over disjoint index blocks, in index order.

    Blocks are computed on a thread pool; the compiled kernel releases the GIL.
    """
    _check_enum_range(n)
    total = tree_count(n)
    starts = list(range(0, total, block_size))
    threads = threads or _thread_count()
    if threads == 1 or len(starts) == 1:
        for s in starts:
            yield s, tree_stats(n, s, s + block_size)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for s, rows in zip(starts, pool.map(lambda s: tree_stats(n, s, s + block_size), starts)):
            yield s, rows
