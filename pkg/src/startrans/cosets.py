"""Coset graphs: the one-subgroup (double-coset) construction and the
two-subgroup bipartite construction, with the induced action of the parent
group on the constructed vertex set.

Coset spaces are enumerated by breadth-first expansion with canonical-
representative deduplication: the canonical representative of a right coset
is obtained by walking the subgroup's stabiliser chain and greedily
minimising base-point images, so two representatives collide exactly when
they lie in the same coset.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded, StartransError
from .families import ConstructedInstance
from .graphs import Graph, is_connected
from .perms import PermGroup, Permutation, _compose

INDEX_CAP = 10000


def canonical_coset_rep(subgroup_chain, x):
    """Canonical representative (image tuple) of the right coset H*x."""
    g = tuple(x)
    for level in subgroup_chain.levels:
        if len(level.orbit_order) == 1:
            continue
        best = min(level.orbit_order, key=g.__getitem__)
        if best != level.point:
            g = _compose(level.fwd(best), g)
    return g


@dataclass(frozen=True)
class CosetTable:
    """Right cosets of a subgroup with the parent generators' action.

    ``reps[0]`` is the identity; ``reps[i]`` is a representative of coset i
    (cosets are distinguished by canonical representatives, equivalently by
    the membership test r s^-1 in subgroup).  ``actions[k]`` is the
    permutation of coset indices induced by the k-th parent generator, and
    ``tree[i]`` records how coset i was first reached as (parent coset,
    generator index), with (-1, -1) for coset 0.
    """

    parent: PermGroup
    subgroup: PermGroup
    reps: tuple
    actions: tuple
    tree: tuple

    @property
    def size(self):
        return len(self.reps)

    def action_group(self, order=None):
        return PermGroup(self.actions, degree=self.size, order=order)


def coset_action(parent, subgroup, index_cap=INDEX_CAP):
    """Enumerate right cosets of ``subgroup`` and the parent action on them.

    The action is transitive of degree |parent : subgroup|; its kernel is
    the largest normal subgroup of the parent inside ``subgroup``.
    """
    if subgroup.degree != parent.degree:
        raise StartransError("subgroup degree differs from parent degree")
    for h in subgroup.generators:
        if not parent.contains(h):
            raise StartransError("subgroup generator outside parent group")
    p_order, h_order = parent.order(), subgroup.order()
    if p_order % h_order:
        raise StartransError("subgroup order does not divide parent order")
    index = p_order // h_order
    if index > index_cap:
        raise CapExceeded(f"coset index {index} exceeds cap {index_cap}")

    chain = subgroup.chain()
    identity = tuple(range(parent.degree))
    gen_images = [g.images for g in parent.generators]
    reps = [identity]
    tree = [(-1, -1)]
    key_index = {canonical_coset_rep(chain, identity): 0}
    action_cols = [[] for _ in gen_images]
    pos = 0
    while pos < len(reps):
        x = reps[pos]
        for k, s in enumerate(gen_images):
            y = _compose(x, s)
            key = canonical_coset_rep(chain, y)
            j = key_index.get(key)
            if j is None:
                j = len(reps)
                if j >= index_cap and j >= index:
                    raise StartransError("coset enumeration exceeded expected index")
                key_index[key] = j
                reps.append(y)
                tree.append((pos, k))
            action_cols[k].append(j)
        pos += 1
    if len(reps) != index:
        raise StartransError(
            f"enumerated {len(reps)} cosets, expected index {index}"
        )
    actions = tuple(
        Permutation(tuple(col), _checked=True) for col in action_cols
    )
    return CosetTable(
        parent=parent,
        subgroup=subgroup,
        reps=tuple(Permutation(r, _checked=True) for r in reps),
        actions=actions,
        tree=tuple(tree),
    )


def sabidussi(parent, subgroup, g, name=None, index_cap=INDEX_CAP):
    """Connected arc-transitive coset graph for (parent, subgroup, g).

    Vertices are the right cosets of ``subgroup``; a coset Hx is adjacent to
    Hy exactly when x y^-1 lies in the double coset H g H.  Preconditions
    (each reported individually): g^2 in H; g does not normalise H; H and g
    together generate the parent.  Adjacency is built once at the base coset
    and transported along the action.
    """
    H = subgroup
    if isinstance(g, Permutation):
        g_img = g.images
    else:
        g_img = tuple(g)
        g = Permutation(g_img)
    if not parent.contains(g):
        raise StartransError("g is not an element of the parent group")
    if not H.contains(_compose(g_img, g_img)):
        raise StartransError("g^2 is not in the subgroup")
    g_inv = g.inverse().images
    normalises = True
    for h in H.generators:
        conj = _compose(_compose(g_inv, h.images), g_img)
        if not H.contains(conj):
            normalises = False
            break
    if normalises:
        raise StartransError("g normalises the subgroup; the flip is degenerate")
    gen_span = PermGroup(
        list(H.generators) + [g], degree=parent.degree
    )
    if gen_span.order() != parent.order():
        raise StartransError("subgroup and g do not generate the parent group")

    table = coset_action(parent, H, index_cap=index_cap)
    chain = H.chain()
    base_nbrs = sorted(
        {
            _key_index_lookup(table, chain, _compose(g_img, h.images))
            for h in H.elements()
        }
    )
    n = table.size
    nbrs = [None] * n
    nbrs[0] = tuple(base_nbrs)
    action_images = [a.images for a in table.actions]
    for i in range(1, n):
        parent_i, k = table.tree[i]
        act = action_images[k]
        nbrs[i] = tuple(act[x] for x in nbrs[parent_i])
    edges = set()
    for i in range(n):
        for j in nbrs[i]:
            if i == j:
                raise StartransError("coset graph has a loop")
            edges.add((i, j) if i < j else (j, i))
    graph = Graph(n, sorted(edges))
    if not is_connected(graph):
        raise StartransError("coset graph is not connected")
    group = table.action_group()
    inst_name = name or "coset-graph"
    return ConstructedInstance(
        inst_name,
        graph,
        group=group,
        labels=tuple(f"H*{i}" for i in range(n)),
        extras={"table": table, "flip": g},
    )


def _key_index_lookup(table, chain, x):
    key = canonical_coset_rep(chain, x)
    # rebuild the key index lazily and cache it on the table object
    cache = getattr(table, "_key_cache", None)
    if cache is None:
        cache = {
            canonical_coset_rep(chain, rep.images): i
            for i, rep in enumerate(table.reps)
        }
        object.__setattr__(table, "_key_cache", cache)
    return cache[key]


def bipartite_coset(parent, left, right, name=None, index_cap=INDEX_CAP):
    """Bipartite coset graph on the cosets of two subgroups.

    Lx is adjacent to Ry exactly when the cosets intersect, equivalently
    x y^-1 in LR; the base vertex L is adjacent to the cosets {R l : l in L}
    and adjacency elsewhere is transported along the action.  The parent
    acts edge-transitively with the two coset families as vertex orbits;
    the bivalency is (|L : L^R|, |R : L^R|) for the intersection L^R.
    """
    span = PermGroup(
        list(left.generators) + list(right.generators), degree=parent.degree
    )
    if span.order() != parent.order():
        raise StartransError("left and right subgroups do not generate the parent")
    tl = coset_action(parent, left, index_cap=index_cap)
    tr = coset_action(parent, right, index_cap=index_cap)
    chain_r = right.chain()
    base_nbrs = sorted(
        {
            _key_index_lookup(tr, chain_r, l.images)
            for l in left.elements()
        }
    )
    nl, nr = tl.size, tr.size
    nbrs = [None] * nl
    nbrs[0] = tuple(base_nbrs)
    actions_r = [a.images for a in tr.actions]
    for i in range(1, nl):
        parent_i, k = tl.tree[i]
        act = actions_r[k]
        nbrs[i] = tuple(act[x] for x in nbrs[parent_i])
    edges = set()
    for i in range(nl):
        for j in nbrs[i]:
            edges.add((i, nl + j))
    graph = Graph(nl + nr, sorted(edges))
    gens = [
        Permutation(
            tl.actions[k].images + tuple(nl + x for x in tr.actions[k].images),
            _checked=True,
        )
        for k in range(len(tl.actions))
    ]
    group = PermGroup(gens, degree=nl + nr)
    inst_name = name or "bipartite-coset-graph"
    return ConstructedInstance(
        inst_name,
        graph,
        group=group,
        labels=tuple(f"L*{i}" for i in range(nl))
        + tuple(f"R*{j}" for j in range(nr)),
        extras={"left_table": tl, "right_table": tr, "left_block": nl},
    )
