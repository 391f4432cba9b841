"""Generators for the structured graph families: cycle-cliques, the
clique contraction scheme, clover graphs, the 12-vertex bichromatic-edge
gadget and the triangle of three such gadgets, Mycielski iterates, and
stock graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, build_graph, contains_k4, identify_vertices, list_triangles


@dataclass(frozen=True)
class CycleClique:
    """A ring of five size-k cliques (the joints J0..J4); consecutive
    joints are fully joined, so each J_i together with the next joint
    induces a clique on 2k vertices."""

    graph: Graph
    joints: tuple
    k: int


def gen_cycle_clique(k: int) -> CycleClique:
    """The 5k-vertex cycle-clique: vertex (i, j) is joint i member j and
    two distinct vertices are adjacent iff their joints are at ring
    distance at most 1. k=1 yields the 5-cycle."""
    if k < 1:
        raise ValueError("joint size must be at least 1")
    edges = []
    for i in range(5):
        for j in range(k):
            v = i * k + j
            for j2 in range(j + 1, k):
                edges.append((v, i * k + j2))
            nxt = ((i + 1) % 5) * k
            for j2 in range(k):
                edges.append((v, nxt + j2))
    graph = build_graph(5 * k, edges)
    joints = tuple(tuple(i * k + j for j in range(k)) for i in range(5))
    return CycleClique(graph, joints, k)


def clique_contraction(g: Graph, cu, cv, cw):
    """Merge three ordered k-cliques U, V, W into one (k+1)-clique by the
    fixed identification sequence: (v_i, u_i) for i <= k-2, then
    (v_i, w_i) for i <= k-3, then (v_{k-1}, w_{k-2}) and (u_{k-1}, w_{k-1});
    each pair keeps its first member.

    Returns (graph, vmap) where vmap sends every original vertex to its
    final index (merged vertices map to their survivor).
    """
    cu, cv, cw = tuple(cu), tuple(cv), tuple(cw)
    k = len(cu)
    if not (len(cv) == k and len(cw) == k):
        raise ValueError("the three cliques must have equal size")
    if k < 2:
        raise ValueError("clique size must be at least 2")
    members = cu + cv + cw
    if len(set(members)) != 3 * k:
        raise ValueError("the three cliques must be pairwise disjoint")
    for cl in (cu, cv, cw):
        for a, b in combinations(cl, 2):
            if not g.has_edge(a, b):
                raise ValueError(f"vertices {a} and {b} are not adjacent: input set is not a clique")
    pairs = [(cv[i], cu[i]) for i in range(k - 1)]
    pairs += [(cv[i], cw[i]) for i in range(k - 2)]
    pairs += [(cv[k - 1], cw[k - 2]), (cu[k - 1], cw[k - 1])]
    cur = {v: v for v in range(g.n)}
    h = g
    for keep0, drop0 in pairs:
        a, b = cur[keep0], cur[drop0]
        h, rename = identify_vertices(h, a, b)
        for orig, pos in cur.items():
            cur[orig] = rename[a] if pos == b else rename[pos]
    return h, cur


def gen_clover(k: int) -> Graph:
    """Three k-cycle-cliques contracted on one joint each; the merged
    joints form a (k+1)-clique at the center. Has 13k+1 vertices."""
    if k < 2:
        raise ValueError("clover joint size must be at least 2")
    parts = [gen_cycle_clique(k) for _ in range(3)]
    n1 = parts[0].graph.n
    edges = list(parts[0].graph.edges())
    edges += [(u + n1, v + n1) for u, v in parts[1].graph.edges()]
    edges += [(u + 2 * n1, v + 2 * n1) for u, v in parts[2].graph.edges()]
    union = build_graph(3 * n1, edges)
    cv = parts[0].joints[0]
    cu = tuple(x + n1 for x in parts[1].joints[0])
    cw = tuple(x + 2 * n1 for x in parts[2].joints[0])
    g, _ = clique_contraction(union, cu, cv, cw)
    if g.n != 13 * k + 1:
        raise AssertionError(f"clover has {g.n} vertices, expected {13 * k + 1}")
    return g


# vertex labels of the bichromatic-edge gadget
U, V = 0, 1
W1, W2, W3, W4 = 2, 3, 4, 5
Z1, Z2, Z3 = 6, 7, 8
Y1, Y2, Y3 = 9, 10, 11

GADGET_EDGES = (
    (U, V),
    (U, W1), (U, W2), (U, W3), (U, W4),
    (V, W1), (V, W2), (V, W3), (V, W4),
    (V, Z1), (V, Y1), (Z1, Y1),
    (W1, Z1), (W1, Z2), (Z1, Z2),
    (U, Z2), (U, Z3), (Z2, Z3),
    (W2, Z1), (W2, Z3), (Z1, Z3),
    (W3, Y1), (W3, Y2), (Y1, Y2),
    (U, Y2), (U, Y3), (Y2, Y3),
    (W4, Y1), (W4, Y3), (Y1, Y3),
)


@dataclass(frozen=True)
class PolarGadget:
    """12-vertex, 30-edge graph whose (u, v) edge is forced bichromatic:
    it admits a triangle-free 2-coloring, every triangle-free 2-coloring
    gives u and v different colors, and it contains no 4-clique."""

    graph: Graph
    u: int
    v: int


_gadget_certified = False


def _certify_gadget(g: Graph):
    """Exhaustively check the gadget's three defining properties over all
    2^12 two-colorings plus a 4-clique scan; any failure is a defect."""
    global _gadget_certified
    if _gadget_certified:
        return
    tris = sorted(list_triangles(g))
    found_tf = False
    for mask in range(1 << g.n):
        tf = True
        for a, b, c in tris:
            if ((mask >> a) ^ (mask >> b)) & 1 == 0 and ((mask >> a) ^ (mask >> c)) & 1 == 0:
                tf = False
                break
        if tf:
            found_tf = True
            if ((mask >> U) ^ (mask >> V)) & 1 == 0:
                raise RuntimeError("gadget defect: a triangle-free 2-coloring leaves (u, v) monochromatic")
    if not found_tf:
        raise RuntimeError("gadget defect: no triangle-free 2-coloring exists")
    if contains_k4(g):
        raise RuntimeError("gadget defect: contains a 4-clique")
    _gadget_certified = True


def gen_polar_gadget() -> PolarGadget:
    """Build the bichromatic-edge gadget and self-check its properties."""
    g = build_graph(12, GADGET_EDGES)
    _certify_gadget(g)
    return PolarGadget(g, U, V)


def gen_gadget_triangle() -> Graph:
    """Three bichromatic-edge gadgets whose (u, v) edges are identified
    with the three edges of a central triangle; 33 vertices. The forced
    bichromatic edges make the triangle need a third color while the
    graph stays free of 4-cliques."""
    centers = ((0, 1), (1, 2), (2, 0))
    edges = {(0, 1), (1, 2), (0, 2)}
    for gi, (ea, eb) in enumerate(centers):
        base = 3 + 10 * gi

        def place(x, ea=ea, eb=eb, base=base):
            if x == U:
                return ea
            if x == V:
                return eb
            return base + (x - 2)

        for a, b in GADGET_EDGES:
            if (a, b) == (U, V):
                continue
            pa, pb = place(a), place(b)
            edges.add((pa, pb) if pa < pb else (pb, pa))
    return build_graph(33, sorted(edges))


def mycielskian(g: Graph) -> Graph:
    """One Mycielski step: shadow vertex n+i copies i's neighborhood, a
    new apex 2n joins all shadows. Preserves triangle-freeness while
    raising the chromatic number by one."""
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    for i in range(n):
        edges.append((n + i, 2 * n))
    return build_graph(2 * n + 1, edges)


def gen_mycielski(t: int) -> Graph:
    """t Mycielski steps applied to a single edge; t=0 gives K2, t=1 the
    5-cycle, and each further step keeps the graph triangle-free."""
    if t < 0:
        raise ValueError("iteration count must be non-negative")
    g = build_graph(2, [(0, 1)])
    for _ in range(t):
        g = mycielskian(g)
    return g


def gen_complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    return build_graph(n, list(combinations(range(n), 2)))


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle length must be at least 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
