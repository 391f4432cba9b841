"""Exact solvers: the pruned backtracking decision procedure for
triangle-free q-colorings (plain and polar), plain-enumeration oracles
kept independent of it, clique / chromatic / vertex-cover search, and
the vertex-cover-parameter algorithm.

The oracle_* functions are deliberately naive: they share no pruning
machinery with decide_tf_q and serve as ground truth in tests.
"""

from __future__ import annotations

from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from itertools import combinations, product

from .coloring import Coloring, greedy_extend_independent, verify_triangle_free
from .graph import Graph, as_edge_subset


@dataclass(frozen=True)
class StructuralParams:
    """Exact structural parameters of one graph; construction re-checks
    the sandwich ceil(omega/2) <= chi3 <= ceil(chi/2) and the classic
    omega <= chi <= delta+1 chain."""

    omega: int
    chi: int
    chi3: int
    vc: int
    delta: int

    def __post_init__(self):
        if not ((self.omega + 1) // 2 <= self.chi3 <= (self.chi + 1) // 2):
            raise ValueError("chi3 violates its clique/chromatic sandwich")
        if not (self.omega <= self.chi <= self.delta + 1):
            raise ValueError("omega <= chi <= delta+1 violated")

    def to_json_dict(self) -> dict:
        return {
            "omega": self.omega,
            "chi": self.chi,
            "chi3": self.chi3,
            "vc": self.vc,
            "delta": self.delta,
        }


# ---------------------------------------------------------------------------
# enumeration oracles


def _brute_triangle_pairs(g: Graph):
    """tri[v] lists pairs (a, b) with a < b < v completing a triangle;
    computed by a raw scan over all vertex triples."""
    tri = [[] for _ in range(g.n)]
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            tri[c].append((a, b))
    return tri


def _tf_enumerate(n, k, tri, pol):
    """Plain k^n enumeration in vertex order with early cutoff on a
    completed monochromatic triangle or polar edge."""
    colors = [0] * n

    def rec(i):
        if i == n:
            return True
        for x in range(1, k + 1):
            ok = True
            for a, b in tri[i]:
                if colors[a] == x and colors[b] == x:
                    ok = False
                    break
            if ok:
                for a in pol[i]:
                    if colors[a] == x:
                        ok = False
                        break
            if ok:
                colors[i] = x
                if rec(i + 1):
                    return True
        colors[i] = 0
        return False

    if rec(0):
        return tuple(colors)
    return None


def oracle_chi3(g: Graph, polar=None):
    """Smallest k admitting a triangle-free (polar-respecting) k-coloring
    plus one witness, by plain enumeration; k=0 for the empty graph.
    Intended for small graphs (the caller bounds the size), except that
    heavily polar-constrained inputs prune well beyond that."""
    n = g.n
    if n == 0:
        return 0, Coloring(0, ())
    pairs = as_edge_subset(g, polar) if polar else frozenset()
    tri = _brute_triangle_pairs(g)
    pol = [[] for _ in range(n)]
    for u, v in pairs:
        pol[v].append(u)
    for k in range(1, n + 1):
        res = _tf_enumerate(n, k, tri, pol)
        if res is not None:
            return k, Coloring(k, res)
    raise AssertionError("a rainbow coloring always fits")


def oracle_chi(g: Graph) -> int:
    """Exact chromatic number via iterated proper-coloring search."""
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if decide_proper_q(g, k) is not None:
            return k
    raise AssertionError("n colors always fit")


def decide_proper_q(g: Graph, q: int):
    """Backtracking proper q-coloring (descending-degree order, first-use
    label canonicalization), or None."""
    if q < 1:
        raise ValueError("color budget must be at least 1")
    n = g.n
    if n == 0:
        return Coloring(q, ())
    adj = [g.neighbors(v) for v in range(n)]
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    colors = [0] * n

    def rec(i, used):
        if i == n:
            return True
        v = order[i]
        cap = used + 1 if used < q else q
        taken = {colors[u] for u in adj[v] if colors[u]}
        for x in range(1, cap + 1):
            if x not in taken:
                colors[v] = x
                if rec(i + 1, used if x <= used else x):
                    return True
        colors[v] = 0
        return False

    if rec(0, 0):
        return Coloring(q, tuple(colors))
    return None


def oracle_omega(g: Graph) -> int:
    """Exact clique number by branch and bound with a size cutoff."""
    n = g.n
    if n == 0:
        return 0
    adj = [g.neighbors(v) for v in range(n)]
    best = 1

    def extend(size, cand):
        nonlocal best
        if size > best:
            best = size
        for i, v in enumerate(cand):
            if size + len(cand) - i <= best:
                return
            extend(size + 1, [u for u in cand[i + 1:] if u in adj[v]])

    order = sorted(range(n), key=lambda v: -len(adj[v]))
    extend(0, order)
    return best


# ---------------------------------------------------------------------------
# the optimized decision procedure


def decide_tf_q(g: Graph, q: int, polar=None, rng=None, prefix=None):
    """Search for a triangle-free q-coloring honoring the polar edges.

    Backtracking with propagation: a per-vertex table counts blocked
    colors (a color is blocked when two adjacent neighbors already share
    it, or a polar neighbor holds it), forced vertices are assigned to a
    fixpoint, and each decision picks a most-constrained uncolored
    vertex (fewest free colors, then most colored neighbors, then
    highest degree). Color symmetry is broken by letting any assignment
    introduce at most the one label after the largest label in use, so
    the first assigned vertex takes color 1. Forced moves are exempt
    from the cap but never need labels beyond it, because an unused
    label is never blocked.

    rng, when given, shuffles decision ties and candidate colors to
    randomize which witness is found; feasibility is unaffected. prefix
    pins the colors of the first len(prefix) vertices in descending-
    degree order (used to partition the root of the search across
    workers).

    Returns a verified Coloring or None.
    """
    if q < 1:
        raise ValueError("color budget must be at least 1")
    n = g.n
    pairs = as_edge_subset(g, polar) if polar else frozenset()
    if n == 0:
        return Coloring(q, ())

    adj = [g.neighbors(v) for v in range(n)]
    padj = [set() for _ in range(n)]
    for u, v in pairs:
        padj[u].add(v)
        padj[v].add(u)

    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    tie = list(range(n))
    if rng is not None:
        rng.shuffle(tie)

    color = [0] * n
    block = [[0] * (q + 1) for _ in range(n)]
    assigned = []
    bstack = []

    def undo(a_mark, b_mark):
        while len(bstack) > b_mark:
            u, x, d = bstack.pop()
            block[u][x] -= d
        while len(assigned) > a_mark:
            color[assigned.pop()] = 0

    def apply_with_propagation(v0, x0, maxused):
        """Assign v0 = x0 plus all forced consequences; returns the new
        max label in use, or None on a dead end (caller undoes).

        The worklist holds plain vertices and forcedness is re-derived
        when one is popped: the symmetry cap may have grown since the
        vertex was touched, in which case it is no longer forced and is
        left to a later decision.
        """
        if color[v0]:
            return maxused if color[v0] == x0 else None
        if block[v0][x0]:
            return None
        pending = []

        def assign(u, xu):
            nonlocal maxused
            color[u] = xu
            assigned.append(u)
            if xu > maxused:
                maxused = xu
            au = adj[u]
            for w in au:
                if color[w]:
                    continue
                cnt = 0
                for t in adj[w] & au:
                    if color[t] == xu:
                        cnt += 1
                if cnt:
                    block[w][xu] += cnt
                    bstack.append((w, xu, cnt))
                    pending.append(w)
            for w in padj[u]:
                if not color[w]:
                    block[w][xu] += 1
                    bstack.append((w, xu, 1))
                    pending.append(w)

        assign(v0, x0)
        while pending:
            w = pending.pop()
            if color[w]:
                continue
            cap = q if maxused >= q else maxused + 1
            bw = block[w]
            free = [y for y in range(1, cap + 1) if bw[y] == 0]
            if not free:
                return None
            if len(free) == 1:
                assign(w, free[0])
        return maxused

    def pick_decision(comp, cap):
        best = None
        best_key = None
        for v in comp:
            if color[v]:
                continue
            bv = block[v]
            free = 0
            for y in range(1, cap + 1):
                if bv[y] == 0:
                    free += 1
            sat = 0
            for u in adj[v]:
                if color[u]:
                    sat += 1
            key = (free, -sat, -len(adj[v]), tie[v])
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def uncolored_components(comp):
        """Connected components of the uncolored part of comp, smallest
        first. Components only interact through colored vertices, so
        they are independent subproblems: a failing one need never be
        retried against siblings' alternatives."""
        todo = {v for v in comp if not color[v]}
        subs = []
        while todo:
            start = todo.pop()
            sub = [start]
            stack = [start]
            while stack:
                v = stack.pop()
                for u in adj[v]:
                    if u in todo:
                        todo.discard(u)
                        sub.append(u)
                        stack.append(u)
            subs.append(sub)
        subs.sort(key=len)
        return subs

    def solve_comp(comp, maxused):
        """Fully color one uncolored component; returns the new max
        label in use, or None when infeasible (caller undoes)."""
        cap = q if maxused >= q else maxused + 1
        v = pick_decision(comp, cap)
        if v is None:
            return maxused
        cand = [x for x in range(1, cap + 1) if block[v][x] == 0]
        if rng is not None:
            rng.shuffle(cand)
        for x in cand:
            a_mark, b_mark = len(assigned), len(bstack)
            mu = apply_with_propagation(v, x, maxused)
            if mu is not None:
                ok = mu
                for sub in uncolored_components(comp):
                    res = solve_comp(sub, ok)
                    if res is None:
                        ok = None
                        break
                    ok = res
                if ok is not None:
                    return ok
            undo(a_mark, b_mark)
        return None

    maxused = 0
    if prefix:
        for j, x in enumerate(prefix):
            if not (1 <= x <= q):
                raise ValueError(f"prefix color {x} outside 1..{q}")
            mu = apply_with_propagation(order[j], x, maxused)
            if mu is None:
                return None
            maxused = mu

    for sub in uncolored_components(range(n)):
        res = solve_comp(sub, maxused)
        if res is None:
            return None
        maxused = res
    result = Coloring(q, tuple(color))
    if not verify_triangle_free(g, result, pairs or None):
        raise RuntimeError("internal error: solver produced an invalid coloring")
    return result


def _decide_worker(args):
    n, edges, q, polar, prefix = args
    g = Graph(n, edges)
    res = decide_tf_q(g, q, polar=polar or None, prefix=prefix)
    return None if res is None else res.colors


def decide_tf_q_parallel(g: Graph, q: int, polar=None, jobs: int = 2):
    """Partition the root of decide_tf_q's search across worker
    processes: the first decision vertex is pinned to color 1 and the
    next few vertices range over all color tuples. Feasibility is
    deterministic; the witness found may differ from the sequential one.
    """
    if jobs <= 1 or g.n <= 2:
        return decide_tf_q(g, q, polar=polar)
    pairs = as_edge_subset(g, polar) if polar else frozenset()
    depth = 1
    while q ** depth < 2 * jobs and depth + 1 < g.n:
        depth += 1
    prefixes = [(1,) + rest for rest in product(range(1, q + 1), repeat=depth)]
    payload = (g.n, tuple(g.edges()), q, tuple(sorted(pairs)))
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        futures = {ex.submit(_decide_worker, payload + (p,)) for p in prefixes}
        try:
            while futures:
                done, futures = wait(futures, return_when=FIRST_COMPLETED)
                for fut in done:
                    colors = fut.result()
                    if colors is not None:
                        return Coloring(q, colors)
        finally:
            for fut in futures:
                fut.cancel()
    return None


def solve_chi3(g: Graph, polar=None, jobs: int = 1):
    """Exact chi3 (optionally polar-constrained) with a verified witness,
    by running the decision procedure with a growing budget."""
    if g.n == 0:
        return 0, Coloring(0, ())
    for k in range(1, g.n + 1):
        if jobs > 1:
            c = decide_tf_q_parallel(g, k, polar=polar, jobs=jobs)
        else:
            c = decide_tf_q(g, k, polar=polar)
        if c is not None:
            return k, c
    raise AssertionError("a rainbow coloring always fits")


# ---------------------------------------------------------------------------
# vertex cover and the cover-parameterized coloring algorithm


def _remove_vertex(adj, v):
    nbrs = adj.pop(v)
    emptied = []
    for u in nbrs:
        s = adj[u]
        s.discard(v)
        if not s:
            del adj[u]
            emptied.append(u)
    return nbrs, emptied


def _restore_vertex(adj, v, nbrs, emptied):
    for u in emptied:
        adj[u] = set()
    for u in nbrs:
        adj[u].add(v)
    adj[v] = set(nbrs)


def _cover_paths_cycles(adj):
    """Exact minimum cover of a graph whose degrees are all <= 2
    (disjoint paths and cycles)."""
    cover = []
    seen = set()
    for start in sorted(adj):
        if start in seen or len(adj[start]) != 1:
            continue
        walk = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            nxt = sorted(u for u in adj[cur] if u != prev)
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            walk.append(cur)
            seen.add(cur)
        cover.extend(walk[1::2])
    for start in sorted(adj):
        if start in seen:
            continue
        walk = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            nxt = sorted(u for u in adj[cur] if u != prev and u not in seen)
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            walk.append(cur)
            seen.add(cur)
        cover.extend(walk[0::2])
    return cover


def _vc_branch(adj, k, cover_out):
    if not adj:
        return True
    v = max(adj, key=lambda u: (len(adj[u]), -u))
    if len(adj[v]) <= 2:
        extra = _cover_paths_cycles(adj)
        if len(extra) <= k:
            cover_out.extend(extra)
            return True
        return False
    if k == 0:
        return False
    nbrs, emptied = _remove_vertex(adj, v)
    cover_out.append(v)
    ok = _vc_branch(adj, k - 1, cover_out)
    _restore_vertex(adj, v, nbrs, emptied)
    if ok:
        return True
    cover_out.pop()
    ns = sorted(nbrs)
    if k >= len(ns):
        undos = []
        for u in ns:
            undos.append((u,) + _remove_vertex(adj, u))
        cover_out.extend(ns)
        ok = _vc_branch(adj, k - len(ns), cover_out)
        for u, un, ue in reversed(undos):
            _restore_vertex(adj, u, un, ue)
        if ok:
            return True
        del cover_out[-len(ns):]
    return False


def min_vertex_cover(g: Graph) -> frozenset:
    """A minimum-cardinality vertex cover by bounded-depth branching on a
    maximum-degree vertex versus its whole neighborhood, with degree-2
    remainders solved directly."""
    if g.m == 0:
        return frozenset()
    adj = {v: set(g.neighbors(v)) for v in range(g.n) if g.degree(v) > 0}
    matched = set()
    lb = 0
    for u, v in g.edges():
        if u not in matched and v not in matched:
            matched.update((u, v))
            lb += 1
    for k in range(lb, g.n + 1):
        cover = []
        if _vc_branch(adj, k, cover):
            return frozenset(cover)
    raise AssertionError("all vertices always form a cover")


def fpt_tf_q_coloring(g: Graph, q: int):
    """Triangle-free q-coloring driven by a minimum vertex cover W of
    size k: when q > ceil(k/2) the direct construction always works
    (same-colored pairs inside W, one fresh color on the independent
    rest); otherwise every triangle-free q-coloring of W is enumerated
    and extended greedily over the independent set. Returns a verified
    Coloring or None."""
    if q < 1:
        raise ValueError("color budget must be at least 1")
    n = g.n
    if n == 0:
        return Coloring(q, ())
    cover = sorted(min_vertex_cover(g))
    k = len(cover)
    half = (k + 1) // 2
    indep = [v for v in range(n) if v not in set(cover)]
    if q > half:
        colors = [0] * n
        for i, w in enumerate(cover):
            colors[w] = i // 2 + 1
        for v in indep:
            colors[v] = half + 1
        result = Coloring(q, tuple(colors))
        if not verify_triangle_free(g, result):
            raise RuntimeError("internal error: direct cover construction failed")
        return result

    tri_pairs = [[] for _ in range(k)]
    for i in range(k):
        for j1, j2 in combinations(range(i), 2):
            if (
                g.has_edge(cover[j1], cover[i])
                and g.has_edge(cover[j2], cover[i])
                and g.has_edge(cover[j1], cover[j2])
            ):
                tri_pairs[i].append((j1, j2))
    wcolors = [0] * k

    def wsearch(i, used):
        if i == k:
            partial = {cover[j]: wcolors[j] for j in range(k)}
            return greedy_extend_independent(g, partial, indep, q)
        cap = used + 1 if used < q else q
        for x in range(1, cap + 1):
            ok = True
            for j1, j2 in tri_pairs[i]:
                if wcolors[j1] == x and wcolors[j2] == x:
                    ok = False
                    break
            if ok:
                wcolors[i] = x
                res = wsearch(i + 1, used if x <= used else x)
                if res is not None:
                    return res
        wcolors[i] = 0
        return None

    return wsearch(0, 0)


def compute_params(g: Graph) -> StructuralParams:
    """Exact structural parameters; chi and chi3 come from the
    backtracking paths so mid-sized gadget graphs stay tractable."""
    return StructuralParams(
        omega=oracle_omega(g),
        chi=oracle_chi(g),
        chi3=solve_chi3(g)[0],
        vc=len(min_vertex_cover(g)),
        delta=g.max_degree,
    )
