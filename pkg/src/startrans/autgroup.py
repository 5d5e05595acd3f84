"""Graph automorphism groups and isomorphism testing.

The main search individualises one vertex at a time and re-refines an
equitable colouring, building the automorphism group level by level: at
each level it finds, for every candidate image of the pivot vertex, either
a witness automorphism or a proof of absence, pruning candidates already in
the orbit of the pivot under the generators found so far.  The group order
is the product of the per-level orbit counts.

A factorial-time brute-force oracle (prefix-pruned scan of all n!
permutations) is provided for tiny graphs.

Colour signatures pack the neighbor-colour multiset into an integer (one
small counter field per colour), which keeps refinement cheap on the small
graphs that dominate the exhaustive test corpus.
"""

from __future__ import annotations

from .errors import CapExceeded
from .graphs import is_automorphism
from .perms import PermGroup, Permutation

AUTGROUP_VERTEX_CAP = 2000
BRUTE_VERTEX_CAP = 10


# ---------------------------------------------------------------------------
# equitable refinement


def _normalize(colors, alphabet=None):
    vals = sorted(set(colors) if alphabet is None else alphabet)
    rank = {c: i for i, c in enumerate(vals)}
    return [rank[c] for c in colors], len(vals)


def _refine(adj, colors):
    """Refine to a stable colouring; ids are canonical (signature-sorted)."""
    n = len(adj)
    cur, ncls = _normalize(colors)
    shift = max(1, n.bit_length())
    while True:
        sigs = [0] * n
        for v in range(n):
            acc = 0
            for u in adj[v]:
                acc += 1 << (shift * cur[u])
            sigs[v] = (cur[v], acc)
        mapping = {s: i for i, s in enumerate(sorted(set(sigs)))}
        if len(mapping) == ncls:
            return tuple(mapping[s] for s in sigs)
        cur = [mapping[s] for s in sigs]
        ncls = len(mapping)


def _refine_pair(adj1, c1, adj2, c2):
    """Refine two colourings in lockstep with a shared id alphabet.

    Returns (c1', c2') or None when the class-size vectors diverge (no
    colour-respecting isomorphism can exist).
    """
    n = len(adj1)
    cur1, _ = _normalize(c1, alphabet=set(c1) | set(c2))
    cur2, _ = _normalize(c2, alphabet=set(c1) | set(c2))
    ncls = None
    shift = max(1, n.bit_length())
    while True:
        sigs1 = [0] * n
        sigs2 = [0] * n
        for v in range(n):
            acc = 0
            for u in adj1[v]:
                acc += 1 << (shift * cur1[u])
            sigs1[v] = (cur1[v], acc)
            acc = 0
            for u in adj2[v]:
                acc += 1 << (shift * cur2[u])
            sigs2[v] = (cur2[v], acc)
        if sorted(sigs1) != sorted(sigs2):
            return None
        mapping = {s: i for i, s in enumerate(sorted(set(sigs1)))}
        new1 = [mapping[s] for s in sigs1]
        new2 = [mapping[s] for s in sigs2]
        k = len(mapping)
        if k == ncls:
            return tuple(new1), tuple(new2)
        cur1, cur2 = new1, new2
        ncls = k


def _individualized(colors, v):
    out = list(colors)
    out[v] = -1
    return out


def _class_sizes(colors):
    sizes = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    return sizes


def _match(adj1, adj2, c1, c2):
    """A colour-respecting isomorphism adj1 -> adj2 as an image tuple, or None.

    c1, c2 must come from _refine_pair (stable, shared alphabet, equal class
    sizes).  Complete backtracking: only colour-count pruning is applied.
    """
    n = len(adj1)
    sizes = _class_sizes(c1)
    smallest = None
    for col, size in sizes.items():
        if size > 1 and (smallest is None or (size, col) < smallest):
            smallest = (size, col)
    if smallest is None:
        pos2 = {c2[v]: v for v in range(n)}
        images = [pos2[c1[v]] for v in range(n)]
        for u in range(n):
            mu = images[u]
            if {images[x] for x in adj1[u]} != set(adj2[mu]):
                return None
        return tuple(images)
    col = smallest[1]
    b = min(v for v in range(n) if c1[v] == col)
    for cand in range(n):
        if c2[cand] != col:
            continue
        refined = _refine_pair(
            adj1, _individualized(c1, b), adj2, _individualized(c2, cand)
        )
        if refined is None:
            continue
        result = _match(adj1, adj2, *refined)
        if result is not None:
            return result
    return None


# ---------------------------------------------------------------------------
# automorphism group


def _orbit_closure(start, gens):
    orb = {start}
    queue = [start]
    while queue:
        x = queue.pop()
        for g in gens:
            y = g[x]
            if y not in orb:
                orb.add(y)
                queue.append(y)
    return orb


def _aut_search(adj):
    """Generators (image tuples), order, and base of the automorphism group."""
    n = len(adj)
    if n == 0:
        return [], 1, []
    colors = _refine(adj, [len(adj[v]) for v in range(n)])
    gens = []
    base = []
    order = 1
    while True:
        sizes = _class_sizes(colors)
        smallest = None
        for col, size in sizes.items():
            if size > 1 and (smallest is None or (size, col) < smallest):
                smallest = (size, col)
        if smallest is None:
            break
        col = smallest[1]
        candidates = [v for v in range(n) if colors[v] == col]
        b = candidates[0]
        level_gens = []
        orbit = {b}
        found = 1
        for cand in candidates[1:]:
            if cand in orbit:
                found += 1
                continue
            pair = _refine_pair(
                adj, _individualized(colors, b), adj, _individualized(colors, cand)
            )
            witness = _match(adj, adj, *pair) if pair is not None else None
            if witness is not None:
                level_gens.append(witness)
                gens.append(witness)
                orbit = _orbit_closure(b, level_gens)
                found += 1
        order *= found
        base.append(b)
        colors = _refine(adj, _individualized(colors, b))
    return gens, order, base


def automorphism_order(adj):
    """Order of the automorphism group of an adjacency structure."""
    return _aut_search(adj)[1]


def automorphism_group(g, cap=AUTGROUP_VERTEX_CAP):
    """Generators of the full automorphism group, with exact order."""
    if g.n > cap:
        raise CapExceeded(f"{g.n} vertices exceeds cap {cap}")
    gens, order, _ = _aut_search(g.adj)
    group = PermGroup(
        [Permutation(w, _checked=True) for w in gens], degree=g.n, order=order
    )
    for w in group.generators:
        assert is_automorphism(g, w)
    return group


def brute_automorphisms(g, cap=BRUTE_VERTEX_CAP):
    """Exhaustive scan of all n! permutations, pruned on adjacency prefixes.

    The returned group lists every automorphism as a generator, so its order
    is the raw count.
    """
    if g.n > cap:
        raise CapExceeded(f"{g.n} vertices exceeds brute-force cap {cap}")
    n = g.n
    if n == 0:
        return PermGroup.trivial(0)
    adj_sets = [set(a) for a in g.adj]
    degree = [len(a) for a in g.adj]
    found = []
    images = [0] * n
    used = [False] * n

    def rec(v):
        if v == n:
            found.append(tuple(images))
            return
        for c in range(n):
            if used[c] or degree[c] != degree[v]:
                continue
            ok = True
            for u in range(v):
                if (u in adj_sets[v]) != (images[u] in adj_sets[c]):
                    ok = False
                    break
            if ok:
                images[v] = c
                used[c] = True
                rec(v + 1)
                used[c] = False
        return

    rec(0)
    return PermGroup(
        [Permutation(w, _checked=True) for w in found], degree=n, order=len(found)
    )


def are_isomorphic(g1, g2, cap=AUTGROUP_VERTEX_CAP):
    """A vertex bijection g1 -> g2 preserving adjacency exactly, or None."""
    if g1.n > cap or g2.n > cap:
        raise CapExceeded(f"graphs exceed cap {cap}")
    if g1.n != g2.n or g1.m != g2.m:
        return None
    if sorted(map(len, g1.adj)) != sorted(map(len, g2.adj)):
        return None
    pair = _refine_pair(
        g1.adj,
        [len(a) for a in g1.adj],
        g2.adj,
        [len(a) for a in g2.adj],
    )
    if pair is None:
        return None
    if g1.n == 0:
        return ()
    return _match(g1.adj, g2.adj, *pair)
