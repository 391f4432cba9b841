"""Immutable simple-graph core: construction, vertex identification,
triangle machinery, clique detection, and DIMACS/DOT serialization."""

from __future__ import annotations

from itertools import combinations


class Graph:
    """Undirected simple graph on vertices 0..n-1.

    Adjacency is one frozenset per vertex, so pair queries are O(1)
    expected. Instances are immutable after construction and safe to
    share across threads; every operation on them returns a new graph.
    """

    __slots__ = ("n", "m", "_adj")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [set() for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: ({u}, {v}) with n={n}")
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.m = len(seen)
        self._adj = tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(s) for s in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    out.append((u, v))
        out.sort()
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges) -> Graph:
    """Validated construction; rejects self-loops, duplicate edges and
    out-of-range endpoints with distinct errors."""
    return Graph(n, edges)


def identify_vertices(g: Graph, u: int, v: int):
    """Contract the ordered pair (u, v): remove v, attach v's neighbors
    to u, drop the loop and any parallel edges, and renumber the
    remaining vertices contiguously.

    Returns (graph, rename) where rename maps each surviving old index
    to its new index (v is absent from the map).
    """
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertex out of range: ({u}, {v}) with n={g.n}")
    if u == v:
        raise ValueError("cannot identify a vertex with itself")
    rename = {}
    nxt = 0
    for w in range(g.n):
        if w == v:
            continue
        rename[w] = nxt
        nxt += 1
    edges = set()
    for a, b in g.edges():
        if v in (a, b):
            other = b if a == v else a
            if other == u:
                continue
            a2, b2 = rename[u], rename[other]
        else:
            a2, b2 = rename[a], rename[b]
        if a2 > b2:
            a2, b2 = b2, a2
        edges.add((a2, b2))
    return Graph(g.n - 1, sorted(edges)), rename


def degeneracy_ordering(g: Graph) -> list:
    """Repeated minimum-degree removal order (smallest index on ties)."""
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    maxdeg = max(deg, default=0)
    buckets = [set() for _ in range(maxdeg + 1)]
    for v in range(n):
        buckets[deg[v]].add(v)
    removed = [False] * n
    order = []
    d = 0
    while len(order) < n:
        while d <= maxdeg and not buckets[d]:
            d += 1
        v = min(buckets[d])
        buckets[d].discard(v)
        removed[v] = True
        order.append(v)
        for u in g.neighbors(v):
            if not removed[u]:
                buckets[deg[u]].discard(u)
                deg[u] -= 1
                buckets[deg[u]].add(u)
        d = max(d - 1, 0)
    return order


def list_triangles(g: Graph) -> frozenset:
    """The complete set of triangles, each as a sorted vertex triple.

    Walks a degeneracy ordering and tests adjacency among each removed
    vertex's not-yet-removed neighbors, so the work per vertex is
    bounded by the squared degeneracy.
    """
    order = degeneracy_ordering(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    out = set()
    for v in order:
        later = sorted(u for u in g.neighbors(v) if pos[u] > pos[v])
        for a, b in combinations(later, 2):
            if g.has_edge(a, b):
                out.add(tuple(sorted((v, a, b))))
    return frozenset(out)


def is_triangle_free(g: Graph) -> bool:
    """Early-exit triangle scan; equals emptiness of list_triangles."""
    order = degeneracy_ordering(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for v in order:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        for a, b in combinations(later, 2):
            if g.has_edge(a, b):
                return False
    return True


def contains_k4(g: Graph) -> bool:
    """True iff some four vertices are pairwise adjacent."""
    for a, b, c in list_triangles(g):
        if g.neighbors(a) & g.neighbors(b) & g.neighbors(c):
            return True
    return False


def connected_components(g: Graph) -> list:
    """Vertex lists of the connected components, each sorted, in order
    of smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def as_edge_subset(g: Graph, pairs) -> frozenset:
    """Normalize pairs to (min, max) tuples and require each to be an
    edge of g."""
    out = set()
    for u, v in pairs:
        if u > v:
            u, v = v, u
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present in graph")
        out.add((u, v))
    return frozenset(out)


def write_dimacs_graph(g: Graph) -> str:
    """DIMACS text: 'p edge N M' header plus sorted 'e u v' lines with
    1-based endpoints, u < v. Bit-exact for round-tripping."""
    lines = [f"p edge {g.n} {g.m}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def read_dimacs_graph(text: str) -> Graph:
    """Parse DIMACS graph text; comment lines starting with 'c' are
    ignored."""
    n = None
    m = None
    edges = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ValueError(f"line {ln}: duplicate DIMACS header")
            if len(parts) != 4 or parts[1] != "edge":
                raise ValueError(f"line {ln}: expected 'p edge N M'")
            n, m = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if n is None:
                raise ValueError(f"line {ln}: edge line before 'p edge' header")
            if len(parts) != 3:
                raise ValueError(f"line {ln}: expected 'e u v'")
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise ValueError(f"line {ln}: unrecognized line kind {parts[0]!r}")
    if n is None:
        raise ValueError("missing 'p edge' header")
    if m != len(edges):
        raise ValueError(f"header claims {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def write_dot(g: Graph, coloring=None) -> str:
    """DOT export of an undirected graph; when a coloring is given the
    vertices carry filled colors from a 12-color scheme."""
    lines = ["graph g {"]
    if coloring is not None:
        if len(coloring.colors) != g.n:
            raise ValueError("coloring size does not match graph")
        lines.append('  node [style=filled colorscheme="set312"];')
        for v in range(g.n):
            lines.append(f"  {v} [fillcolor={(coloring.colors[v] - 1) % 12 + 1}];")
    else:
        for v in range(g.n):
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
