"""Coloring values and their verifiers (proper / triangle-free / polar
constrained), the pairwise class-merging recoloring, and greedy extension
over an independent set."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, as_edge_subset, list_triangles


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color in {1..k}; k is the color budget.

    Colors are 1-based; 0 is reserved for "uncolored" inside solver
    internals and never appears in a finished Coloring.
    """

    k: int
    colors: tuple

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.k < 0:
            raise ValueError("color count must be non-negative")
        for v, c in enumerate(self.colors):
            if not (1 <= c <= self.k):
                raise ValueError(f"vertex {v} has color {c} outside 1..{self.k}")

    def __len__(self) -> int:
        return len(self.colors)

    def to_json_dict(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    @staticmethod
    def from_json_dict(d: dict) -> "Coloring":
        return Coloring(int(d["k"]), tuple(int(c) for c in d["colors"]))


def verify_proper(g: Graph, c: Coloring) -> bool:
    """True iff no edge is monochromatic."""
    if len(c.colors) != g.n:
        raise ValueError("coloring size does not match graph")
    cols = c.colors
    for u, v in g.edges():
        if cols[u] == cols[v]:
            return False
    return True


def verify_triangle_free(g: Graph, c: Coloring, polar=None) -> bool:
    """True iff no triangle is monochromatic and, when a polar edge set
    is given, no polar edge is monochromatic."""
    if len(c.colors) != g.n:
        raise ValueError("coloring size does not match graph")
    cols = c.colors
    for a, b, d in list_triangles(g):
        if cols[a] == cols[b] == cols[d]:
            return False
    if polar:
        for u, v in as_edge_subset(g, polar):
            if cols[u] == cols[v]:
                return False
    return True


def standard_recolor(c: Coloring) -> Coloring:
    """Merge color classes pairwise: (1,2)->1, (3,4)->2, ...; an odd last
    class maps alone. A proper input yields a triangle-free output with
    ceil(k/2) colors (monochromatic cycles become even). The input being
    proper is the caller's obligation and is not re-verified."""
    return Coloring((c.k + 1) // 2, tuple((x + 1) // 2 for x in c.colors))


def greedy_extend_independent(g: Graph, partial, indep, q: int):
    """Extend a triangle-free q-coloring of W = V minus indep to all of g,
    coloring the independent set greedily, or return None.

    A vertex v in indep may take color x unless two adjacent neighbors of
    v already share x; since indep is independent, each choice is
    order-independent. Vertices are scanned in increasing order and
    candidate colors in increasing order for determinism. The partial
    coloring being triangle-free on W is the caller's obligation.
    """
    indep = frozenset(indep)
    for v in indep:
        if v < 0 or v >= g.n:
            raise ValueError(f"vertex {v} out of range")
        if g.neighbors(v) & indep:
            raise ValueError("given set is not independent")
    if set(partial) != set(range(g.n)) - indep:
        raise ValueError("partial coloring must cover exactly the non-independent vertices")
    colors = [0] * g.n
    for v, x in partial.items():
        if not (1 <= x <= q):
            raise ValueError(f"partial color {x} outside 1..{q}")
        colors[v] = x
    for v in sorted(indep):
        nbrs = sorted(g.neighbors(v))
        placed = False
        for x in range(1, q + 1):
            same = [u for u in nbrs if colors[u] == x]
            blocked = False
            for i, a in enumerate(same):
                for b in same[i + 1:]:
                    if g.has_edge(a, b):
                        blocked = True
                        break
                if blocked:
                    break
            if not blocked:
                colors[v] = x
                placed = True
                break
        if not placed:
            return None
    return Coloring(q, tuple(colors))
