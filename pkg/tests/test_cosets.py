"""Coset-graph constructions, round trips, and the pair-coset falsification."""

from collections import Counter
from math import factorial

import pytest

from startrans.autgroup import are_isomorphic, automorphism_group
from startrans.cosets import (
    bipartite_coset,
    canonical_coset_rep,
    coset_action,
    sabidussi,
)
from startrans.errors import CapExceeded, StartransError
from startrans.families import (
    _subsets_colex,
    _symmetric_gens,
    complete_graph,
    cycle,
    johnson_incidence,
    odd_graph,
    s_squared_example,
)
from startrans.graphs import is_connected, valency_profile
from startrans.perms import PermGroup, Permutation, _compose


def _sym3_in_s4():
    return PermGroup(
        [Permutation.from_cycles(4, (0, 1)), Permutation.from_cycles(4, (0, 1, 2))],
        degree=4,
        order=6,
    )


def test_coset_action_point_stabiliser():
    G = PermGroup.symmetric(4)
    H = _sym3_in_s4()
    table = coset_action(G, H)
    assert table.size == 4
    act = table.action_group()
    assert act.order() == 24  # faithful: natural S_4 action


def test_coset_action_whole_group():
    G = PermGroup.symmetric(4)
    table = coset_action(G, G)
    assert table.size == 1


def test_coset_action_large_index():
    G = PermGroup.symmetric(9)
    omega1 = _subsets_colex(4, 2)
    omega2 = [tuple(4 + x for x in s) for s in _subsets_colex(3, 2)]
    points = omega1 + omega2
    index_of = {s: i for i, s in enumerate(points)}

    def ground_perm(img):
        return Permutation(
            tuple(index_of[tuple(sorted(img[x] for x in s))] for s in points)
        )

    h_gens = []
    for p in _symmetric_gens(4):
        img = list(range(7))
        for x in range(4):
            img[x] = p.images[x]
        h_gens.append(ground_perm(img))
    for p in _symmetric_gens(3):
        img = list(range(7))
        for x in range(3):
            img[4 + x] = 4 + p.images[x]
        h_gens.append(ground_perm(img))
    H = PermGroup(h_gens, degree=9, order=144)
    table = coset_action(G, H)
    assert table.size == 362880 // 144 == 2520
    # canonical representatives distinguish cosets: rep * rep0^-1 in H
    chain = H.chain()
    k0 = canonical_coset_rep(chain, table.reps[5].images)
    assert canonical_coset_rep(chain, _compose(h_gens[0].images, table.reps[5].images)) == k0


def test_coset_action_rejects_non_subgroup():
    G = PermGroup([Permutation.from_cycles(4, (0, 1, 2, 3))], degree=4)
    H = _sym3_in_s4()
    with pytest.raises(StartransError):
        coset_action(G, H)


def test_coset_index_cap():
    G = PermGroup.symmetric(8)
    H = PermGroup([Permutation.from_cycles(8, (0, 1))], degree=8, order=2)
    with pytest.raises(CapExceeded):
        coset_action(G, H, index_cap=1000)


def test_sabidussi_k4():
    G = PermGroup.symmetric(4)
    inst = sabidussi(G, _sym3_in_s4(), Permutation.from_cycles(4, (2, 3)))
    assert inst.graph.n == 4
    assert valency_profile(inst.graph) == {3: 4}
    assert are_isomorphic(inst.graph, complete_graph(4).graph) is not None
    # the action is arc-transitive
    arcs = [(u, v) for u in range(4) for v in inst.graph.adj[u]]
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


def test_sabidussi_rejects_normalising_flip():
    G = PermGroup.symmetric(4)
    H = PermGroup([Permutation.from_cycles(4, (0, 1))], degree=4, order=2)
    with pytest.raises(StartransError):
        sabidussi(G, H, Permutation.from_cycles(4, (0, 1)))  # g in H


def test_sabidussi_rejects_flip_with_bad_square():
    G = PermGroup.symmetric(4)
    with pytest.raises(StartransError):
        sabidussi(G, _sym3_in_s4(), Permutation.from_cycles(4, (1, 2, 3)))


def test_sabidussi_rejects_non_generating_pair():
    G = PermGroup.symmetric(5)
    H = PermGroup(
        [Permutation.from_cycles(5, (0, 1)), Permutation.from_cycles(5, (0, 1, 2))],
        degree=5,
        order=6,
    )
    # flip moving only {3,4} stays inside Sym{0,1,2} x Sym{3,4}
    with pytest.raises(StartransError):
        sabidussi(G, H, Permutation.from_cycles(5, (3, 4)))


def test_sabidussi_reconstruction_roundtrip(petersen):
    # an arc-transitive graph is recovered from its own stabiliser data
    aut = automorphism_group(petersen)
    v = 0
    w = petersen.adj[0][0]
    gv = aut.point_stabiliser(v)
    flip = aut.transporter([(v, w), (w, v)])
    assert flip is not None
    inst = sabidussi(aut, gv, flip)
    assert are_isomorphic(inst.graph, petersen) is not None


def test_sabidussi_reconstruction_odd4():
    o4 = odd_graph(4)
    G = o4.group
    v = 0
    w = o4.graph.adj[0][0]
    gv = G.point_stabiliser(v)
    flip = G.transporter([(v, w), (w, v)])
    inst = sabidussi(G, gv, flip)
    assert are_isomorphic(inst.graph, o4.graph) is not None


def test_bipartite_coset_c6():
    G = PermGroup.symmetric(3)
    L = PermGroup([Permutation.from_cycles(3, (0, 1))], degree=3, order=2)
    R = PermGroup([Permutation.from_cycles(3, (1, 2))], degree=3, order=2)
    inst = bipartite_coset(G, L, R)
    assert are_isomorphic(inst.graph, cycle(6).graph) is not None
    # valencies are the indices |L : L^R| and |R : L^R|
    assert valency_profile(inst.graph) == {2: 6}


def test_bipartite_coset_reproduces_johnson():
    G = PermGroup.symmetric(5)
    # L = stabiliser of the 2-subset {0,1}; R = stabiliser of the 1-subset {0}
    sym5 = PermGroup.symmetric(5)
    L = sym5.setwise_stabiliser([0, 1])
    R = sym5.point_stabiliser(0)
    inst = bipartite_coset(G, L, R)
    target = johnson_incidence(5, 2).graph
    assert inst.graph.n == target.n
    assert are_isomorphic(inst.graph, target) is not None
    # edge- but not vertex-transitive: the two sides are the orbits
    assert len(inst.group.orbits()) == 2


def test_bipartite_coset_requires_generation():
    G = PermGroup.symmetric(4)
    L = PermGroup([Permutation.from_cycles(4, (0, 1))], degree=4, order=2)
    R = PermGroup([Permutation.from_cycles(4, (1, 0))], degree=4, order=2)
    with pytest.raises(StartransError):
        bipartite_coset(G, L, R)


# ---------------------------------------------------------------------------
# the pair-coset construction cannot deliver its advertised valency


def test_pair_coset_falsification_census():
    """Pin the computed facts behind the construction defect.

    The subgroup H (pair action of the two symmetric factors) admits no
    suborbit of size 4 on its 2520 cosets, so no flip element produces a
    4-valent coset graph; every involution swapping the distinguished pair
    blocks gives |H ^ gHg| = 6, hence valency 24.
    """
    inst = s_squared_example(4, check=False)
    table = inst.extras["table"]
    H = table.subgroup
    chain = H.chain()
    key_index = {
        canonical_coset_rep(chain, rep.images): i for i, rep in enumerate(table.reps)
    }
    h_actions = []
    for h in H.generators:
        h_actions.append(
            Permutation(
                tuple(
                    key_index[canonical_coset_rep(chain, _compose(rep.images, h.images))]
                    for rep in table.reps
                ),
                _checked=True,
            )
        )
    suborbits = Counter(len(o) for o in PermGroup(h_actions, degree=2520).orbits())
    assert suborbits == Counter({72: 15, 144: 8, 18: 7, 24: 4, 1: 2, 6: 2, 8: 2, 36: 1})
    assert 4 not in suborbits

    # every involution swapping the pair blocks yields intersection order 6
    h_els = {e.images for e in H.elements()}
    obar = [0, 1, 2]  # pairs within the first three symbols of the 4-set
    o2 = [6, 7, 8]  # pairs of the 3-set
    import itertools

    found = set()
    for bij in itertools.permutations(o2):
        for mid in itertools.permutations(range(3)):
            img = list(range(9))
            for a, b in zip(obar, bij):
                img[a], img[b] = b, a
            rest = [3, 4, 5]
            for a, b in zip(rest, [rest[mid[i]] for i in range(3)]):
                img[a] = b
            if any(img[img[i]] != i for i in range(9)):
                continue
            gimg = tuple(img)
            inter = sum(
                1 for e in h_els if _compose(_compose(gimg, e), gimg) in h_els
            )
            found.add(inter)
    assert found == {6}


def test_pair_coset_actual_shape():
    inst = s_squared_example(4, check=False)
    assert inst.graph.n == 2520
    assert is_connected(inst.graph)
    assert valency_profile(inst.graph) == {24: 2520}
    assert inst.group.order() == factorial(9)
