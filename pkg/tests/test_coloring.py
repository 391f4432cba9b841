"""Verifiers, the pairwise recoloring, and greedy extension over an
independent set, cross-checked against brute-force baselines."""

import random
from itertools import product

import pytest
from tfcolor import (
    Coloring,
    build_graph,
    gen_complete,
    gen_cycle,
    gen_polar_gadget,
    greedy_extend_independent,
    standard_recolor,
    verify_proper,
    verify_triangle_free,
)
from util_graphs import greedy_proper, rand_graph


def test_coloring_validates_range():
    with pytest.raises(ValueError):
        Coloring(2, (1, 3))
    with pytest.raises(ValueError):
        Coloring(1, (0,))


def test_coloring_json_round_trip():
    c = Coloring(3, (1, 3, 2))
    assert Coloring.from_json_dict(c.to_json_dict()) == c


def test_verify_proper_examples():
    assert verify_proper(gen_cycle(5), Coloring(3, (1, 2, 1, 2, 3)))
    assert not verify_proper(build_graph(2, [(0, 1)]), Coloring(1, (1, 1)))
    assert verify_proper(build_graph(3, []), Coloring(1, (1, 1, 1)))


def test_verify_proper_size_mismatch():
    with pytest.raises(ValueError, match="size"):
        verify_proper(gen_cycle(5), Coloring(1, (1, 1)))


def test_verify_triangle_free_examples():
    k4 = gen_complete(4)
    assert verify_triangle_free(k4, Coloring(2, (1, 1, 2, 2)))
    assert not verify_triangle_free(gen_complete(3), Coloring(1, (1, 1, 1)))
    pg = gen_polar_gadget()
    # one color on u, z1, y1 and the other everywhere else is valid
    colors = [2] * 12
    for v in (pg.u, 6, 9):
        colors[v] = 1
    assert verify_triangle_free(pg.graph, Coloring(2, tuple(colors)))


def test_verify_polar_edges():
    c5 = gen_cycle(5)
    c = Coloring(2, (1, 1, 2, 1, 2))
    assert verify_triangle_free(c5, c, polar=[(2, 3)])
    assert not verify_triangle_free(c5, c, polar=[(0, 1)])
    with pytest.raises(ValueError, match="not present"):
        verify_triangle_free(c5, c, polar=[(0, 2)])


def test_standard_recolor_examples():
    k4 = gen_complete(4)
    merged = standard_recolor(Coloring(4, (1, 2, 3, 4)))
    assert merged.k == 2 and verify_triangle_free(k4, merged)
    assert standard_recolor(Coloring(1, (1, 1))) == Coloring(1, (1, 1))
    merged3 = standard_recolor(Coloring(3, (1, 2, 3)))
    assert merged3 == Coloring(2, (1, 1, 2))
    assert verify_triangle_free(gen_complete(3), merged3)


def test_standard_recolor_property():
    # any proper coloring recolors to a triangle-free one on ceil(k/2) labels
    rng = random.Random(55)
    for _ in range(300):
        n = rng.randint(1, 9)
        g = rand_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        colors = greedy_proper(rng, g)
        k = max(colors)
        c = Coloring(k, tuple(colors))
        assert verify_proper(g, c)
        merged = standard_recolor(c)
        assert verify_triangle_free(g, merged)
        assert len(set(merged.colors)) == (k + 1) // 2


def test_greedy_extend_star():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    got = greedy_extend_independent(star, {0: 1}, [1, 2, 3], 1)
    assert got == Coloring(1, (1, 1, 1, 1))


def test_greedy_extend_blocked_pair():
    # apex adjacent to a monochromatic pair must avoid that color
    k4 = gen_complete(4)
    got = greedy_extend_independent(k4, {0: 1, 1: 1, 2: 2}, [3], 2)
    assert got is not None and got.colors[3] == 2


def test_greedy_extend_infeasible():
    k3 = gen_complete(3)
    assert greedy_extend_independent(k3, {0: 1, 1: 1}, [2], 1) is None


def test_greedy_extend_rejects_dependent_set():
    g = build_graph(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError, match="independent"):
        greedy_extend_independent(g, {2: 1}, [0, 1], 1)
    with pytest.raises(ValueError, match="cover"):
        greedy_extend_independent(g, {0: 1}, [2], 1)


def test_greedy_extend_matches_exhaustive_search():
    rng = random.Random(66)
    for _ in range(150):
        n = rng.randint(2, 8)
        g = rand_graph(rng, n, rng.choice([0.3, 0.6]))
        indep = []
        for v in range(n):
            if not any(g.has_edge(v, u) for u in indep):
                if rng.random() < 0.6:
                    indep.append(v)
        indep = indep[:6]
        rest = [v for v in range(n) if v not in indep]
        q = rng.randint(1, 3)
        partial = {v: rng.randint(1, q) for v in rest}
        if not verify_triangle_free_on(g, partial, q):
            continue
        got = greedy_extend_independent(g, partial, indep, q)
        brute = None
        for assign in product(range(1, q + 1), repeat=len(indep)):
            colors = [0] * n
            for v, x in partial.items():
                colors[v] = x
            for v, x in zip(indep, assign):
                colors[v] = x
            if verify_triangle_free(g, Coloring(q, tuple(colors))):
                brute = colors
                break
        assert (got is None) == (brute is None)
        if got is not None:
            assert verify_triangle_free(g, got)


def verify_triangle_free_on(g, partial, q):
    """Partial triangle check restricted to the colored vertices."""
    from tfcolor import list_triangles

    for a, b, c in list_triangles(g):
        if a in partial and b in partial and c in partial:
            if partial[a] == partial[b] == partial[c]:
                return False
    return all(1 <= x <= q for x in partial.values())
