import random

import pytest

from startrans.graphs import Graph


def mulclose(gens):
    """Brute-force closure of a generator set; oracle for group orders."""
    els = {g.images for g in gens}
    if not els:
        return els
    frontier = list(els)
    gen_images = [g.images for g in gens]
    while frontier:
        new = []
        for a in frontier:
            for b in gen_images:
                c = tuple(b[x] for x in a)
                if c not in els:
                    els.add(c)
                    new.append(c)
        frontier = new
    return els


def random_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def corpus_items():
    """Family instances plus a seeded random batch; (name, graph, group)."""
    from startrans import families
    from startrans.graphs import subdivide_1, subdivide_2

    items = []

    def add(name, graph, group=None):
        items.append((name, graph, group))

    pet = families.odd_graph(3)
    add("petersen", pet.graph, pet.group)
    o4 = families.odd_graph(4)
    add("odd4", o4.graph, o4.group)
    j73 = families.johnson_incidence(7, 3)
    add("johnson73", j73.graph, j73.group)
    j52 = families.johnson_incidence(5, 2)
    add("johnson52", j52.graph, j52.group)
    h23 = families.hamming_clique_incidence(2, 3)
    add("hamming23", h23.graph, h23.group)
    h33 = families.hamming_clique_incidence(3, 3)
    add("hamming33", h33.graph, h33.group)
    add("heawood", families.pg_incidence(2).graph)
    add("pg3", families.pg_incidence(3).graph)
    t4 = families.gf3_translate_graph(4)
    add("gf3", t4.graph, t4.group)
    add("gq24", families.hermitian_gq().graph)
    for n in (3, 5, 8):
        add(f"C{n}", families.cycle(n).graph)
    for m, n in ((1, 4), (2, 3), (3, 3), (3, 5)):
        add(f"K{m}{n}", families.complete_bipartite(m, n).graph)
    for n in (3, 4):
        add(f"T{n}", families.spider(n).graph)
    add("P4", families.path(4).graph)
    add("K4", families.complete_graph(4).graph)
    add("K5", families.complete_graph(5).graph)
    k4 = families.complete_graph(4).graph
    add("sub1K4", subdivide_1(k4))
    add("sub2K4", subdivide_2(k4))
    add("sub1Petersen", subdivide_1(pet.graph))

    rnd = random.Random(20260809)
    for count in range(200):
        n = rnd.randint(4, 9)
        p = rnd.choice([0.2, 0.3, 0.45, 0.6])
        add(f"rand{count}", random_graph(rnd, n, p), None)
    return items


def check_corpus_item(name, graph, group):
    """Criterion-9 battery for one corpus entry; returns violation strings."""
    from startrans.autgroup import automorphism_group
    from startrans.errors import CapExceeded, HypothesisNotMet
    from startrans.graphs import girth, is_regular, max_valency, min_valency
    from startrans.localsym import (
        is_star_transitive_direct,
        is_star_transitive_fast,
        is_stedge_transitive_direct,
        is_stedge_transitive_fast,
        local_s_arc_transitivity,
        vertex_orbit_reps,
    )
    from startrans.perms import Permutation, local_action

    violations = []

    def expect(cond, message):
        if not cond:
            violations.append(f"{name}: {message}")

    if group is None:
        group = automorphism_group(graph)

    star = is_star_transitive_fast(graph, group)
    if max_valency(graph) <= 8:
        direct, _ = is_star_transitive_direct(graph, group)
        expect(direct == star, f"star checks disagree ({direct} vs {star})")

    stedge = None
    if max_valency(graph) <= 8:
        try:
            stedge, _ = is_stedge_transitive_direct(graph, group)
        except CapExceeded:
            stedge = None
    if min_valency(graph) >= 3 and girth(graph) >= 4:
        fast = is_stedge_transitive_fast(graph, group)
        if stedge is None:
            stedge = fast
        else:
            expect(fast == stedge, f"edge-star checks disagree ({stedge} vs {fast})")
    else:
        try:
            is_stedge_transitive_fast(graph, group)
            violations.append(f"{name}: fast edge-star check failed to refuse")
        except HypothesisNotMet:
            pass

    if stedge and min_valency(graph) >= 3:
        expect(star, "stedge held but star failed at min valency >= 3")

    if star:
        for v in vertex_orbit_reps(group):
            if graph.adj[v]:
                stab = group.point_stabiliser(v)
                expect(
                    local_action(stab, graph.adj[v]).kind == "symmetric",
                    f"star-transitive but local action at {v} not symmetric",
                )

    if star and stedge and is_regular(graph) and min_valency(graph) >= 2:
        _, s, _ = local_s_arc_transitivity(graph, group)
        expect(s is not None and s >= 3, f"regular with both properties but s = {s}")

    rnd = random.Random(hash(name) & 0xFFFF)
    for gen in group.generators:
        expect(group.contains(gen), "generator fails membership")
    if group.generators:
        word = Permutation.identity(group.degree)
        for _ in range(4):
            word = word * rnd.choice(group.generators)
        expect(group.contains(word), "random word fails membership")
    v = rnd.randrange(graph.n)
    expect(
        group.point_stabiliser(v).order() * len(group.orbit(v)) == group.order(),
        "orbit-stabiliser identity fails",
    )
    chain = group.chain()
    if chain.base:
        b = chain.base[0]
        orbit = group.orbit(b)
        outside = [x for x in range(graph.n) if x not in orbit]
        if outside:
            expect(
                not group.contains(Permutation.transposition(group.degree, b, outside[0])),
                "transposition out of the base orbit claimed as member",
            )
    return violations


@pytest.fixture
def rng():
    return random.Random(20260809)


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
