"""Family constructor tests: counts, valencies, attached groups, labelings."""

import math
from math import comb, factorial

import pytest

from startrans import families
from startrans.autgroup import are_isomorphic, automorphism_group
from startrans.errors import CapExceeded, FalsificationError, NotAnAutomorphism
from startrans.graphs import (
    girth,
    is_automorphism,
    is_connected,
    subdivide_1,
    valency_profile,
)
from startrans.perms import PermGroup, Permutation


def test_elementary_families():
    assert families.cycle(5).graph.n == 5
    assert girth(families.cycle(5).graph) == 5
    assert families.path(4).graph.m == 3
    star = families.complete_bipartite(1, 5)
    assert valency_profile(star.graph) == {1: 5, 5: 1}
    sp = families.spider(3)
    assert (sp.graph.n, sp.graph.m) == (7, 6)
    assert valency_profile(sp.graph) == {3: 1, 2: 3, 1: 3}
    with pytest.raises(ValueError):
        families.cycle(2)
    with pytest.raises(ValueError):
        families.spider(2)


def test_odd_graph_small(petersen):
    inst = families.odd_graph(3)
    assert inst.graph.n == 10
    assert are_isomorphic(inst.graph, petersen) is not None
    assert inst.group.order() == 120
    assert girth(inst.graph) == 5


def test_odd_graph_4():
    inst = families.odd_graph(4)
    assert inst.graph.n == comb(7, 3) == 35
    assert valency_profile(inst.graph) == {4: 35}
    assert girth(inst.graph) == 6
    assert inst.group.order() == factorial(7)
    # attached group is vertex- and arc-transitive
    assert inst.group.is_transitive()
    arcs = [(u, v) for u in range(inst.graph.n) for v in inst.graph.adj[u]]
    gens = [p.images for p in inst.group.generators]
    seen = {arcs[0]}
    stack = [arcs[0]]
    while stack:
        a = stack.pop()
        for p in gens:
            b = (p[a[0]], p[a[1]])
            if b not in seen:
                seen.add(b)
                stack.append(b)
    assert len(seen) == len(arcs)


def test_odd_graph_colex_labels():
    inst = families.odd_graph(3)
    # colexicographic 2-subsets of {0..4}
    assert inst.labels[:4] == ("{0,1}", "{0,2}", "{1,2}", "{0,3}")


def test_johnson_incidence():
    inst = families.johnson_incidence(7, 3)
    assert inst.graph.n == comb(7, 3) + comb(7, 2) == 56
    assert valency_profile(inst.graph) == {3: 35, 5: 21}
    assert inst.group.order() == factorial(7)
    # two vertex orbits = the bipartition; edge-transitive
    assert len(inst.group.orbits()) == 2
    assert inst.extras["doubled_odd"]  # 7 = 2*3+1
    assert not families.johnson_incidence(6, 2).extras["doubled_odd"]
    assert families.johnson_incidence(5, 2).extras["doubled_odd"]
    eq = families.johnson_incidence(5, 3)
    assert eq.extras["equal_valency_exception"]
    with pytest.raises(ValueError):
        families.johnson_incidence(4, 1)


def test_johnson_5_2_is_subdivided_k5():
    inst = families.johnson_incidence(5, 2)
    k5 = families.complete_graph(5).graph
    assert are_isomorphic(inst.graph, subdivide_1(k5)) is not None


def test_hamming_clique_incidence():
    inst = families.hamming_clique_incidence(2, 3)
    assert inst.graph.n == 9 + 6
    assert valency_profile(inst.graph) == {2: 9, 3: 6}
    assert inst.group.order() == 72
    inst33 = families.hamming_clique_incidence(3, 3)
    assert inst33.graph.n == 27 + 27
    assert inst33.group.order() == factorial(3) ** 3 * factorial(3)
    inst34 = families.hamming_clique_incidence(3, 4)
    assert inst34.graph.n == 64 + 48
    assert valency_profile(inst34.graph) == {3: 64, 4: 48}
    assert len(inst34.group.orbits()) == 2
    with pytest.raises(ValueError):
        families.hamming_clique_incidence(1, 3)


def test_pg_incidence():
    heawood = families.pg_incidence(2)
    assert heawood.graph.n == 14
    assert valency_profile(heawood.graph) == {3: 14}
    assert girth(heawood.graph) == 6
    pg3 = families.pg_incidence(3)
    assert pg3.graph.n == 26
    assert valency_profile(pg3.graph) == {4: 26}
    assert girth(pg3.graph) == 6
    with pytest.raises(ValueError):
        families.pg_incidence(5)


def test_hermitian_gq():
    inst = families.hermitian_gq()
    assert inst.extras["point_block"] == 45
    assert inst.graph.n == 72
    assert valency_profile(inst.graph) == {3: 45, 5: 27}
    aut = automorphism_group(inst.graph)
    assert aut.order() == 51840
    # stabiliser orders split by the two orbits
    line = inst.extras["point_block"]
    assert aut.point_stabiliser(line).order() == 1920
    assert aut.point_stabiliser(0).order() == 1152
    assert girth(inst.graph) == 8


def test_gf3_translate_graph():
    inst = families.gf3_translate_graph(4)
    assert inst.graph.n == 27 + 36
    assert valency_profile(inst.graph) == {4: 27, 3: 36}
    assert inst.group.order() == 27 * 24 * 2 == 1296
    # order hint matches an independently built chain
    regrown = PermGroup([Permutation(p.images) for p in inst.group.generators])
    assert regrown.order() == 1296
    # every line vertex has exactly 3 vector neighbors
    for v in range(27, inst.graph.n):
        assert len(inst.graph.adj[v]) == 3
    with pytest.raises(ValueError):
        families.gf3_translate_graph(6)
    with pytest.raises(ValueError):
        families.gf3_translate_graph(3)


def test_attached_generators_are_automorphisms():
    for inst in (
        families.odd_graph(3),
        families.johnson_incidence(6, 2),
        families.hamming_clique_incidence(2, 3),
        families.gf3_translate_graph(4),
    ):
        for g in inst.group.generators:
            assert is_automorphism(inst.graph, g)


def test_constructed_instance_rejects_non_automorphism():
    g = families.cycle(4).graph
    bad = PermGroup([Permutation.from_cycles(4, (0, 1))], degree=4)
    with pytest.raises(NotAnAutomorphism):
        families.ConstructedInstance("bad", g, group=bad)


def test_size_caps():
    with pytest.raises(CapExceeded):
        families.odd_graph(3, cap=5)
    with pytest.raises(CapExceeded):
        families.s_squared_example(5)


def test_s_squared_example_is_a_falsification():
    # The advertised valency-4 coset graph cannot exist; the spec-mandated
    # assertion must therefore raise, naming the measured valency.
    with pytest.raises(FalsificationError) as err:
        families.s_squared_example(4)
    assert "24" in str(err.value)
    inst = families.s_squared_example(4, check=False)
    assert inst.graph.n == 2520
    assert is_connected(inst.graph)
    assert valency_profile(inst.graph) == {24: 2520}
    assert inst.group.order() == factorial(9)
