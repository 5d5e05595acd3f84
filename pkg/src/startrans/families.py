"""Constructors for the graph families used throughout the test corpus.

Each constructor returns a :class:`ConstructedInstance` holding the graph,
optionally a permutation group acting on it (generators are checked to
preserve adjacency at construction time), and human-readable vertex labels.
Subset-indexed families use colexicographic subset ordering so vertex
numberings, and hence stabiliser generators, are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, factorial, gcd

from .errors import CapExceeded, FalsificationError, NotAnAutomorphism
from .graphs import Graph, is_automorphism, is_connected, valency_profile
from .perms import PermGroup, Permutation

VERTEX_CAP = 5000


@dataclass(frozen=True)
class ConstructedInstance:
    """A graph together with the group attached by its construction."""

    name: str
    graph: Graph
    group: PermGroup | None = None
    labels: tuple = ()
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.group is not None:
            for g in self.group.generators:
                if not is_automorphism(self.graph, g):
                    raise NotAnAutomorphism(
                        f"{self.name}: attached generator is not an automorphism"
                    )


def _check_cap(nverts, cap):
    if nverts > cap:
        raise CapExceeded(f"{nverts} vertices exceeds cap {cap}")


# ---------------------------------------------------------------------------
# elementary families


def cycle(n):
    """The cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    g = Graph(n, [(i, (i + 1) % n) for i in range(n)])
    return ConstructedInstance(f"C_{n}", g, labels=tuple(str(i) for i in range(n)))


def path(n):
    """The path on n >= 1 vertices."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    g = Graph(n, [(i, i + 1) for i in range(n - 1)])
    return ConstructedInstance(f"P_{n}", g, labels=tuple(str(i) for i in range(n)))


def complete_graph(n):
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    g = Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])
    return ConstructedInstance(f"K_{n}", g)


def complete_bipartite(m, n):
    """K_{m,n}: side A = 0..m-1, side B = m..m+n-1."""
    if m < 1 or n < 1:
        raise ValueError("complete bipartite needs m, n >= 1")
    g = Graph(m + n, [(a, m + b) for a in range(m) for b in range(n)])
    labels = tuple(f"a{i}" for i in range(m)) + tuple(f"b{j}" for j in range(n))
    return ConstructedInstance(f"K_{{{m},{n}}}", g, labels=labels)


def spider(n):
    """A centre joined to n paths of length two.

    Vertices: centre 0; middles 1..n; leaves n+1..2n, with leaf n+i below
    middle i.
    """
    if n < 3:
        raise ValueError("spider needs n >= 3")
    edges = [(0, i) for i in range(1, n + 1)] + [(i, n + i) for i in range(1, n + 1)]
    g = Graph(2 * n + 1, edges)
    labels = ("x",) + tuple(f"y{i}" for i in range(1, n + 1)) + tuple(
        f"z{i}" for i in range(1, n + 1)
    )
    return ConstructedInstance(f"T_{n}", g, labels=labels)


# ---------------------------------------------------------------------------
# subset helpers


def _subsets_colex(n, k):
    return sorted(itertools.combinations(range(n), k), key=lambda t: t[::-1])


def _subset_perm(p, subsets, index):
    """Image of a ground-set permutation on an indexed family of subsets."""
    images = p.images
    return Permutation(
        tuple(index[tuple(sorted(images[x] for x in s))] for s in subsets),
        _checked=True,
    )


def _symmetric_gens(n):
    gens = [Permutation.transposition(n, 0, 1)]
    if n > 2:
        gens.append(Permutation(tuple(range(1, n)) + (0,), _checked=True))
    return gens


# ---------------------------------------------------------------------------
# Kneser-type and incidence families


def odd_graph(k, cap=VERTEX_CAP):
    """Valency-k Kneser graph on (k-1)-subsets of a (2k-1)-set.

    Adjacency is disjointness; the natural symmetric group of the ground set
    is attached.  k = 3 gives the Petersen graph.
    """
    if k < 3:
        raise ValueError("odd graph needs valency k >= 3")
    ground = 2 * k - 1
    subsets = _subsets_colex(ground, k - 1)
    _check_cap(len(subsets), cap)
    index = {s: i for i, s in enumerate(subsets)}
    edges = []
    for i, s in enumerate(subsets):
        s_set = set(s)
        for j in range(i + 1, len(subsets)):
            if s_set.isdisjoint(subsets[j]):
                edges.append((i, j))
    g = Graph(len(subsets), edges)
    gens = [_subset_perm(p, subsets, index) for p in _symmetric_gens(ground)]
    group = PermGroup(gens, degree=g.n, order=factorial(ground))
    labels = tuple("{" + ",".join(map(str, s)) + "}" for s in subsets)
    return ConstructedInstance(
        f"O_{k}", g, group=group, labels=labels, extras={"ground": ground}
    )


def johnson_incidence(n, m, cap=VERTEX_CAP):
    """Containment graph on the m-subsets and (m-1)-subsets of an n-set.

    Bivalency {m, n-m+1}; the natural symmetric group of the n-set is
    attached.  n = 2m+1 is flagged (both valencies and subset sizes pair up
    across the middle), as is the equal-valency case m = n-m+1.
    """
    if not 2 <= m <= n - 1:
        raise ValueError("need 2 <= m <= n-1")
    big = _subsets_colex(n, m)
    small = _subsets_colex(n, m - 1)
    _check_cap(len(big) + len(small), cap)
    nverts = len(big) + len(small)
    index = {s: i for i, s in enumerate(big)}
    index.update({s: len(big) + i for i, s in enumerate(small)})
    edges = []
    for i, s in enumerate(big):
        for drop in itertools.combinations(s, m - 1):
            edges.append((i, index[drop]))
    g = Graph(nverts, edges)
    all_subsets = big + small
    gens = [_subset_perm(p, all_subsets, index) for p in _symmetric_gens(n)]
    group = PermGroup(gens, degree=nverts, order=factorial(n))
    labels = tuple("{" + ",".join(map(str, s)) + "}" for s in all_subsets)
    return ConstructedInstance(
        f"J_{{{m},{n}}}",
        g,
        group=group,
        labels=labels,
        extras={
            "doubled_odd": n == 2 * m + 1,
            "equal_valency_exception": m == n - m + 1,
            "big_block": len(big),
        },
    )


def hamming_clique_incidence(k, n, cap=VERTEX_CAP):
    """Incidence graph of k-tuples over n symbols with their maximal cliques.

    Tuples are adjacent to the axis-parallel lines (coordinate position plus
    the fixed values of the other coordinates) through them.  Bivalency
    {k, n}; the wreath-type group generated by a symbol group on coordinate
    0, the coordinate k-cycle, and the coordinate transposition is attached.
    """
    if k < 2 or n < 3:
        raise ValueError("need k >= 2 and n >= 3")
    tuples = list(itertools.product(range(n), repeat=k))
    cliques = [
        (j, rest)
        for j in range(k)
        for rest in itertools.product(range(n), repeat=k - 1)
    ]
    _check_cap(len(tuples) + len(cliques), cap)
    t_index = {t: i for i, t in enumerate(tuples)}
    c_index = {c: len(tuples) + i for i, c in enumerate(cliques)}
    edges = []
    for t, i in t_index.items():
        for j in range(k):
            rest = t[:j] + t[j + 1 :]
            edges.append((i, c_index[(j, rest)]))
    g = Graph(len(tuples) + len(cliques), edges)

    def vertex_perm(tuple_map):
        images = [0] * g.n
        for t, i in t_index.items():
            images[i] = t_index[tuple_map(t)]
        for (j, rest), i in c_index.items():
            # map a clique by mapping one of its tuples and re-extracting
            sample = rest[:j] + (0,) + rest[j:]
            img = tuple_map(sample)
            # the varying coordinate of the image clique
            other = tuple_map(rest[:j] + (1,) + rest[j:])
            jj = next(a for a in range(k) if img[a] != other[a])
            images[i] = c_index[(jj, img[:jj] + img[jj + 1 :])]
        return Permutation(images, _checked=True)

    sym = _symmetric_gens(n)
    gens = [
        vertex_perm(lambda t, p=p: (p.images[t[0]],) + t[1:]) for p in sym
    ]
    gens.append(vertex_perm(lambda t: t[-1:] + t[:-1]))  # coordinate k-cycle
    gens.append(vertex_perm(lambda t: (t[1], t[0]) + t[2:]))  # coord transposition
    group = PermGroup(gens, degree=g.n, order=factorial(n) ** k * factorial(k))
    labels = tuple(str(t) for t in tuples) + tuple(
        f"line(pos={j}, rest={rest})" for j, rest in cliques
    )
    return ConstructedInstance(
        f"H({k},{n})-cliques",
        g,
        group=group,
        labels=labels,
        extras={"tuple_block": len(tuples)},
    )


# ---------------------------------------------------------------------------
# projective and polar incidence graphs


def pg_incidence(q, cap=VERTEX_CAP):
    """Point-line incidence graph of the projective plane over a q-element field.

    Supports q in {2, 3}: points are the 1-dimensional subspaces of F_q^3
    (first nonzero coordinate normalised to 1), lines the 2-dimensional
    subspaces.  (q+1)-regular on 2(q^2+q+1) vertices with girth 6.  No group
    is attached; analyses compute the full automorphism group.
    """
    if q not in (2, 3):
        raise ValueError("q must be 2 or 3")

    def norm(vec):
        lead = next(x for x in vec if x % q)
        inv = pow(lead, q - 2, q) if q > 2 else 1
        return tuple((inv * x) % q for x in vec)

    vecs = [
        (a, b, c)
        for a in range(q)
        for b in range(q)
        for c in range(q)
        if (a, b, c) != (0, 0, 0)
    ]
    points = sorted({norm(v) for v in vecs})
    p_index = {p: i for i, p in enumerate(points)}
    lines = set()
    for i, u in enumerate(points):
        for w in points[i + 1 :]:
            span = set()
            for a in range(q):
                for b in range(q):
                    vec = tuple((a * u[t] + b * w[t]) % q for t in range(3))
                    if any(vec):
                        span.add(p_index[norm(vec)])
            lines.add(frozenset(span))
    lines = sorted(lines, key=sorted)
    _check_cap(len(points) + len(lines), cap)
    edges = []
    for j, line in enumerate(lines):
        for p in line:
            edges.append((p, len(points) + j))
    g = Graph(len(points) + len(lines), edges)
    labels = tuple(str(p) for p in points) + tuple(
        "{" + ",".join(str(points[i]) for i in sorted(line)) + "}" for line in lines
    )
    return ConstructedInstance(
        f"PG(2,{q})-incidence",
        g,
        labels=labels,
        extras={"point_block": len(points)},
    )


# GF(4) arithmetic: elements 0, 1, w, w+1 encoded 0..3, addition is xor
_GF4_MUL = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]
_GF4_INV = [None, 1, 3, 2]
_GF4_FROB = [0, 1, 3, 2]  # x -> x^2


def hermitian_gq(cap=VERTEX_CAP):
    """Incidence graph of the isotropic subspaces of a standard sesquilinear form.

    The form on F_4^4 is H(x, y) = sum x_i y_i^2 (any nondegenerate choice is
    equivalent).  Block one holds the 45 isotropic 1-spaces (valency 3),
    block two the 27 totally isotropic 2-spaces (valency 5).  No group is
    attached; analyses compute the full automorphism group.
    """
    mul = _GF4_MUL
    frob = _GF4_FROB

    def hform(x, y):
        acc = 0
        for a, b in zip(x, y):
            acc ^= mul[a][frob[b]]
        return acc

    def norm(vec):
        lead = next(x for x in vec if x)
        inv = _GF4_INV[lead]
        return tuple(mul[inv][x] for x in vec)

    vecs = [v for v in itertools.product(range(4), repeat=4) if any(v)]
    points = sorted({norm(v) for v in vecs if hform(v, v) == 0})
    p_index = {p: i for i, p in enumerate(points)}

    def span_points(u, w):
        out = set()
        for a in range(4):
            for b in range(4):
                vec = tuple(mul[a][u[t]] ^ mul[b][w[t]] for t in range(4))
                if any(vec):
                    out.add(p_index[norm(vec)])
        return frozenset(out)

    lines = set()
    for i, u in enumerate(points):
        for w in points[i + 1 :]:
            if hform(u, w) == 0:
                lines.add(span_points(u, w))
    lines = sorted(lines, key=sorted)
    _check_cap(len(points) + len(lines), cap)
    edges = []
    for j, line in enumerate(lines):
        for p in line:
            edges.append((p, len(points) + j))
    g = Graph(len(points) + len(lines), edges)
    labels = tuple(str(p) for p in points) + tuple(
        f"plane{sorted(line)}" for line in lines
    )
    return ConstructedInstance(
        "GQ(2,4)-incidence",
        g,
        labels=labels,
        extras={"point_block": len(points)},
    )


# ---------------------------------------------------------------------------
# ternary translate construction


def gf3_translate_graph(n, cap=VERTEX_CAP):
    """Bipartite inclusion graph of a zero-sum vector space over F_3 with the
    translates of the coordinate-symmetric line orbit.

    W is the zero-sum hyperplane of F_3^n; the lines are the translates of
    the n spans of the vectors with one exceptional coordinate.  Bivalency
    {n, 3}; the group generated by W-translations, coordinate permutations,
    and global negation is attached.  Requires n >= 4 coprime to 3.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    if gcd(n, 3) != 1:
        raise ValueError("n must be coprime to 3")
    nw = 3 ** (n - 1)
    _check_cap(nw + nw * n // 3, cap)

    vectors = []
    for prefix in itertools.product(range(3), repeat=n - 1):
        last = (-sum(prefix)) % 3
        vectors.append(prefix + (last,))
    w_index = {v: i for i, v in enumerate(vectors)}

    # orbit of the base span under coordinate permutations: one line per
    # position of the exceptional coordinate
    base_lines = set()
    for pos in range(n):
        vec = [1] * n
        vec[pos] = (1 - n) % 3
        vec = tuple(vec)
        line = frozenset(tuple((lam * x) % 3 for x in vec) for lam in range(3))
        base_lines.add(line)
    assert len(base_lines) == n

    lines = set()
    for line in base_lines:
        for w in vectors:
            lines.add(frozenset(tuple((a + b) % 3 for a, b in zip(v, w)) for v in line))
    lines = sorted(lines, key=lambda d: sorted(d))
    l_index = {d: nw + i for i, d in enumerate(lines)}
    edges = []
    for d, i in l_index.items():
        for v in d:
            edges.append((w_index[v], i))
    g = Graph(nw + len(lines), edges)

    def vertex_perm(vec_map):
        images = [0] * g.n
        for v, i in w_index.items():
            images[i] = w_index[vec_map(v)]
        for d, i in l_index.items():
            images[i] = l_index[frozenset(vec_map(v) for v in d)]
        return Permutation(images, _checked=True)

    gens = []
    for b in range(n - 1):
        shift = [0] * n
        shift[b] = 1
        shift[n - 1] = (shift[n - 1] - 1) % 3
        shift = tuple(shift)
        gens.append(
            vertex_perm(lambda v, s=shift: tuple((a + c) % 3 for a, c in zip(v, s)))
        )
    gens.append(vertex_perm(lambda v: (v[1], v[0]) + v[2:]))
    gens.append(vertex_perm(lambda v: v[1:] + v[:1]))
    gens.append(vertex_perm(lambda v: tuple((-a) % 3 for a in v)))
    group = PermGroup(
        gens, degree=g.n, order=3 ** (n - 1) * factorial(n) * 2
    )
    labels = tuple(str(v) for v in vectors) + tuple(
        "{" + ",".join(map(str, sorted(d))) + "}" for d in lines
    )
    return ConstructedInstance(
        f"ternary-translates({n})",
        g,
        group=group,
        labels=labels,
        extras={"vector_block": nw},
    )


# ---------------------------------------------------------------------------
# the symmetric-group-on-pairs coset construction


def s_squared_example(r, cap=12000, check=True):
    """Coset graph for the symmetric group on the pairs of an r-set and an
    (r-1)-set, following the published recipe.

    The point set has size (r-1)^2 = C(r,2) + C(r-1,2); H is the natural
    pair-action copy of S_r x S_{r-1}; g is the involution carrying the
    pairs within the first r-1 elements of the r-set to the pairs of the
    (r-1)-set.  With check=True the advertised valency r is asserted; the

    recipe provably cannot deliver it (see the falsification test), so the
    assertion raises FalsificationError with the measured valency.
    """
    from .cosets import sabidussi

    if r < 4:
        raise ValueError("need r >= 4")
    npoints = (r - 1) ** 2
    index = factorial(npoints) // (factorial(r) * factorial(r - 1))
    if index > cap:
        raise CapExceeded(f"coset index {index} exceeds cap {cap}")

    omega1 = _subsets_colex(r, 2)
    omega2 = [tuple(r + x for x in s) for s in _subsets_colex(r - 1, 2)]
    points = omega1 + omega2
    index_of = {s: i for i, s in enumerate(points)}

    # ground set for the pair actions: 0..r-1 (the r-set), r..2r-2 (the other)
    def ground_perm(images_on_ground):
        return Permutation(
            tuple(
                index_of[tuple(sorted(images_on_ground[x] for x in s))]
                for s in points
            ),
            _checked=True,
        )

    m = 2 * r - 1
    h_gens = []
    for p in _symmetric_gens(r):
        img = list(range(m))
        for x in range(r):
            img[x] = p.images[x]
        h_gens.append(ground_perm(img))
    for p in _symmetric_gens(r - 1):
        img = list(range(m))
        for x in range(r - 1):
            img[r + x] = r + p.images[x]
        h_gens.append(ground_perm(img))
    H = PermGroup(h_gens, degree=npoints, order=factorial(r) * factorial(r - 1))

    # g: transport pairs within the first r-1 elements of the r-set to the
    # pairs of the (r-1)-set via i <-> r+i, fixing the remaining points
    g_images = list(range(npoints))
    for s in _subsets_colex(r - 1, 2):
        a = index_of[s]
        b = index_of[tuple(r + x for x in s)]
        g_images[a], g_images[b] = b, a
    g_elt = Permutation(g_images)

    G = PermGroup.symmetric(npoints)
    inst = sabidussi(G, H, g_elt, name=f"pair-coset({r})", index_cap=cap)
    inst.extras["expected_valency"] = r
    profile = valency_profile(inst.graph)
    if check:
        if set(profile) != {r}:
            raise FalsificationError(
                f"pair-coset({r}): advertised valency {r}, constructed graph has "
                f"valency profile {profile}; the recipe's edge flip cannot "
                f"normalise the arc stabiliser (no suitable involution exists)"
            )
        if not is_connected(inst.graph):
            raise FalsificationError(f"pair-coset({r}): graph is not connected")
    return inst
