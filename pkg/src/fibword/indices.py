"""Degree-based indices of trees. All values are exact integers."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from itertools import combinations

from .trees import DecompositionTree, Tree

__all__ = [
    "IndexReport",
    "m1",
    "m2",
    "f1",
    "irr",
    "irr_total",
    "fwi_star",
    "fwi_star_signed",
    "fwi_star_ordered",
    "sigma",
    "fwi",
    "index_report",
]


def m1(t: Tree) -> int:
    """First Zagreb index, sum of squared degrees."""
    return sum(d * d for d in t.degrees)


def m2(t: Tree) -> int:
    """Second Zagreb index, sum over edges of deg(u) * deg(v)."""
    deg = t.degrees
    return sum(deg[u] * deg[v] for u, v in t.edges)


def f1(t: Tree) -> int:
    """Forgotten index, sum of cubed degrees."""
    return sum(d**3 for d in t.degrees)


def irr(t: Tree) -> int:
    """Albertson irregularity: sum over edges of |deg(u) - deg(v)|."""
    deg = t.degrees
    return sum(abs(deg[u] - deg[v]) for u, v in t.edges)


def irr_total(t: Tree) -> int:
    """Total irregularity over all unordered vertex pairs."""
    return sum(abs(a - b) for a, b in combinations(t.degrees, 2))


def fwi_star(t: Tree) -> int:
    """Sum over edges of |deg(u)^2 - deg(v)^2|."""
    deg = t.degrees
    return sum(abs(deg[u] ** 2 - deg[v] ** 2) for u, v in t.edges)


def fwi_star_ordered(t: Tree) -> int:
    # each edge counted once per orientation
    return 2 * fwi_star(t)


def fwi_star_signed(t: Tree | DecompositionTree, root: int = 0) -> int:
    """Sum of deg(parent)^2 - deg(child)^2 with edges oriented away from ``root``.

    For a :class:`DecompositionTree` its own root and parent links are used.
    """
    if isinstance(t, DecompositionTree):
        deg = t.underlying.degrees
        return sum(deg[p] ** 2 - deg[c] ** 2 for p, c in t.parent_child_edges())
    deg, adj = t.degrees, t.adjacency
    total = 0
    seen = {root}
    stack = [root]
    while stack:
        p = stack.pop()
        for c in adj[p]:
            if c not in seen:
                seen.add(c)
                total += deg[p] ** 2 - deg[c] ** 2
                stack.append(c)
    return total


def sigma(t: Tree) -> int:
    """Sum over edges of (deg(u) - deg(v))^2."""
    deg = t.degrees
    return sum((deg[u] - deg[v]) ** 2 for u, v in t.edges)


def fwi(dt: DecompositionTree) -> int:
    """Albertson index of a decomposition tree's undirected view."""
    return irr(dt.underlying)


@dataclass
class IndexReport:
    n: int
    edges: int
    max_degree: int
    m1: int
    m2: int
    f1: int
    irr: int
    irr_total: int
    sigma: int
    fwi_star: int
    fwi: int | None = None
    contributions: list[dict] | None = field(default=None)

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.contributions is None:
            d.pop("contributions")
        if self.fwi is None:
            d.pop("fwi")
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def csv_header(self) -> list[str]:
        return [k for k in self.to_dict() if k != "contributions"]

    def to_csv_row(self) -> list:
        d = self.to_dict()
        return [d[k] for k in self.csv_header()]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.csv_header())
        w.writerow(self.to_csv_row())
        return buf.getvalue()


def index_report(t: Tree | DecompositionTree, per_edge: bool = False) -> IndexReport:
    dt = t if isinstance(t, DecompositionTree) else None
    tree = dt.underlying if dt else t
    contributions = None
    if per_edge:
        deg = tree.degrees
        contributions = [
            {
                "u": u,
                "v": v,
                "irr": abs(deg[u] - deg[v]),
                "fwi_star": abs(deg[u] ** 2 - deg[v] ** 2),
                "sigma": (deg[u] - deg[v]) ** 2,
            }
            for u, v in tree.edges
        ]
    return IndexReport(
        n=tree.n,
        edges=len(tree.edges),
        max_degree=tree.max_degree if tree.n > 1 else 0,
        m1=m1(tree),
        m2=m2(tree),
        f1=f1(tree),
        irr=irr(tree),
        irr_total=irr_total(tree),
        sigma=sigma(tree),
        fwi_star=fwi_star(tree),
        fwi=fwi(dt) if dt else None,
        contributions=contributions,
    )
