"""Cross-cutting property checks over a randomized corpus plus all family
instances: direct/fast agreement, the implication lattice between the
transitivity notions, and group-engine soundness invariants.
"""

import random

import pytest

from conftest import random_graph
from startrans import families
from startrans.autgroup import automorphism_group
from startrans.errors import CapExceeded, HypothesisNotMet
from startrans.graphs import (
    girth,
    is_regular,
    max_valency,
    min_valency,
    subdivide_1,
    subdivide_2,
)
from startrans.localsym import (
    is_star_transitive_direct,
    is_star_transitive_fast,
    is_stedge_transitive_direct,
    is_stedge_transitive_fast,
    local_s_arc_transitivity,
    vertex_orbit_reps,
)
from startrans.perms import Permutation, local_action

DIRECT_CAP = 8


def _corpus():
    """Family instances plus a seeded random batch; yields (name, graph, group)."""
    items = []

    def add(name, graph, group=None):
        items.append((name, graph, group))

    add("petersen", families.odd_graph(3).graph, families.odd_graph(3).group)
    add("odd4", families.odd_graph(4).graph, families.odd_graph(4).group)
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
    add("sub1Petersen", subdivide_1(families.odd_graph(3).graph))

    rnd = random.Random(20260809)
    count = 0
    while count < 200:
        n = rnd.randint(4, 9)
        p = rnd.choice([0.2, 0.3, 0.45, 0.6])
        g = random_graph(rnd, n, p)
        add(f"rand{count}", g, None)
        count += 1
    return items


CORPUS = _corpus()


@pytest.mark.parametrize("name,graph,group", CORPUS, ids=[c[0] for c in CORPUS])
def test_corpus_properties(name, graph, group):
    if group is None:
        group = automorphism_group(graph)

    star_fast = is_star_transitive_fast(graph, group)
    star = star_fast
    if max_valency(graph) <= DIRECT_CAP:
        star_direct, _ = is_star_transitive_direct(graph, group)
        assert star_direct == star_fast, "star checks disagree"

    stedge = None
    if max_valency(graph) <= DIRECT_CAP:
        try:
            stedge, _ = is_stedge_transitive_direct(graph, group)
        except CapExceeded:
            stedge = None  # bijection family too large for a tiny arc stabiliser
    if min_valency(graph) >= 3 and girth(graph) >= 4:
        fast = is_stedge_transitive_fast(graph, group)
        if stedge is None:
            stedge = fast
        else:
            assert fast == stedge, "edge-star checks disagree"
    else:
        with pytest.raises(HypothesisNotMet):
            is_stedge_transitive_fast(graph, group)

    # implication: stedge => star at minimum valency >= 3
    if stedge and min_valency(graph) >= 3:
        assert star, "stedge held but star failed at min valency >= 3"

    # implication: star => locally fully symmetric
    if star:
        for v in vertex_orbit_reps(group):
            if graph.adj[v]:
                stab = group.point_stabiliser(v)
                assert local_action(stab, graph.adj[v]).kind == "symmetric"

    # implication: star and stedge and regular => 3-arc transitive
    if star and stedge and is_regular(graph) and min_valency(graph) >= 2:
        mls, s, _ = local_s_arc_transitivity(graph, group)
        assert s is not None and s >= 3

    # group soundness: generators contained, random words contained,
    # orbit-stabiliser, and a definite non-member rejected
    rnd = random.Random(hash(name) & 0xFFFF)
    for gen in group.generators:
        assert group.contains(gen)
    if group.generators:
        word = Permutation.identity(group.degree)
        for _ in range(4):
            word = word * rnd.choice(group.generators)
        assert group.contains(word)
    v = rnd.randrange(graph.n)
    assert group.point_stabiliser(v).order() * len(group.orbit(v)) == group.order()
    chain = group.chain()
    if chain.base:
        b = chain.base[0]
        orbit = group.orbit(b)
        outside = [x for x in range(graph.n) if x not in orbit]
        if outside:
            assert not group.contains(
                Permutation.transposition(group.degree, b, outside[0])
            )


def test_corpus_size():
    assert len(CORPUS) >= 220
