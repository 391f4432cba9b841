"""Shared generators and brute-force baselines for the test suite."""

from itertools import combinations

from tfcolor import CnfFormula, build_graph, fits_occurrence_limit


def rand_graph(rng, n, p):
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def path_graph(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def brute_triangles(g):
    """Raw scan over all vertex triples, the oracle for triangle listing."""
    out = set()
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            out.add((a, b, c))
    return frozenset(out)


def random_ktree(rng, k, n):
    """Grow a k-tree: a (k+1)-clique seed, then each vertex joins a
    random k-clique. Chordal by construction; omega = k+1 for n > k."""
    base = min(n, k + 1)
    edges = list(combinations(range(base), 2))
    if base < k + 1:
        return build_graph(base, edges)
    cliques = [c for c in combinations(range(k + 1), k)]
    for v in range(k + 1, n):
        c = rng.choice(cliques)
        for u in c:
            edges.append((u, v))
        for drop in range(k):
            cliques.append(tuple(sorted((set(c) - {c[drop]}) | {v})))
    return build_graph(n, edges)


def stacked_planar(rng, n):
    """Stacked triangulation: repeatedly subdivide a face with a new
    vertex joined to its three corners. Planar by construction."""
    edges = {(0, 1), (0, 2), (1, 2)}
    faces = [(0, 1, 2)]
    for v in range(3, n):
        f = faces.pop(rng.randrange(len(faces)))
        a, b, c = f
        for x in (a, b, c):
            edges.add((min(x, v), max(x, v)))
        faces += [(a, b, v), (b, c, v), (a, c, v)]
    return build_graph(n, sorted(edges))


def planar_subgraph(rng, n, keep=0.8):
    full = stacked_planar(rng, n)
    return build_graph(n, [e for e in full.edges() if rng.random() < keep])


def icosahedron():
    return build_graph(12, [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
        (1, 6), (2, 6), (2, 7), (3, 7), (3, 8),
        (4, 8), (4, 9), (5, 9), (5, 10), (1, 10),
        (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
        (6, 11), (7, 11), (8, 11), (9, 11), (10, 11),
    ])


def petersen():
    return build_graph(10, [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
        (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
    ])


def rand_cnf(rng, n, m):
    """Random width-3 formula, no occurrence bound."""
    clauses = [tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(3)) for _ in range(m)]
    return CnfFormula(n, tuple(clauses))


def draw_nm_occ4(rng, max_n=4, max_m=3):
    """Variable/clause counts compatible with 4 occurrences per variable."""
    while True:
        n = rng.randint(1, max_n)
        m = rng.randint(1, max_m)
        if 3 * m <= 4 * n:
            return n, m


def rand_cnf_occ4(rng, n, m):
    """Random width-3 formula honoring the 4-occurrence budget."""
    assert 3 * m <= 4 * n
    while True:
        phi = rand_cnf(rng, n, m)
        if fits_occurrence_limit(phi, 4):
            return phi


def greedy_proper(rng, g):
    """First-fit proper coloring along a random vertex order; the labels
    used are always exactly 1..max."""
    order = list(range(g.n))
    rng.shuffle(order)
    colors = [0] * g.n
    for v in order:
        taken = {colors[u] for u in g.neighbors(v) if colors[u]}
        x = 1
        while x in taken:
            x += 1
        colors[v] = x
    return colors
