"""Finite simple undirected graphs and their basic metrics.

Vertices are dense 0-indexed integers; adjacency is kept as sorted neighbor
tuples.  Graphs are immutable after construction and all operations here are
pure, so concurrent read-only use is safe.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict, deque

from .errors import GraphFormatError

INFINITY = math.inf


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n, edges):
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(tuple(sorted(s)) for s in nbrs))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_adjacency(cls, adj):
        edges = [(u, v) for u, nbrs in enumerate(adj) for v in nbrs if u < v]
        return cls(len(adj), edges)

    def neighbors(self, v):
        return self.adj[v]

    def degree(self, v):
        return len(self.adj[v])

    def edges(self):
        """Edges as sorted (u, v) pairs with u < v, lexicographically ordered."""
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def m(self):
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u, v):
        return v in self.adj[u]

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"<Graph n={self.n} m={self.m}>"


# ---------------------------------------------------------------------------
# metrics


def girth(g):
    """Length of the shortest cycle; math.inf for forests.

    Per-vertex BFS with an early depth cutoff: a cycle first seen at depth d
    has length >= 2d+1, so the scan stops once that bound reaches the best.
    """
    best = INFINITY
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            dx = dist[x]
            if 2 * dx + 1 >= best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dx + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    cand = dx + dist[y] + 1
                    if cand < best:
                        best = cand
    return best


def valency_profile(g):
    """Multiset of vertex valencies, as {valency: count}."""
    return dict(Counter(len(a) for a in g.adj))


def is_regular(g):
    """The common valency if the graph is regular, else None."""
    profile = valency_profile(g)
    if len(profile) == 1:
        return next(iter(profile))
    return None


def min_valency(g):
    return min((len(a) for a in g.adj), default=0)


def max_valency(g):
    return max((len(a) for a in g.adj), default=0)


def components(g):
    """Connected components, each a sorted tuple, ordered by smallest vertex."""
    seen = set()
    out = []
    for root in range(g.n):
        if root in seen:
            continue
        comp = {root}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        out.append(tuple(sorted(comp)))
    return out


def bipartition(g):
    """A proper 2-colouring (sideA, sideB) as frozensets, or None.

    Components are coloured independently (smallest vertex on side A).
    """
    color = {}
    for root in range(g.n):
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    side_a = frozenset(v for v, c in color.items() if c == 0)
    return side_a, frozenset(range(g.n)) - side_a


def biregular_bivalency(g):
    """For a bipartite graph whose sides are regular, the bi-valency data.

    Returns (ell, r, (side_ell, side_r)) with ell <= r, or None.  Each
    component is oriented so its smaller valency lands on the ell side; for
    ell == r the split is just some proper 2-colouring.
    """
    out_1, out_2 = set(), set()
    pair = None
    for comp in components(g):
        color = {comp[0]: 0}
        queue = deque([comp[0]])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
        side_a = [v for v in comp if color[v] == 0]
        side_b = [v for v in comp if color[v] == 1]
        vals_a = {len(g.adj[v]) for v in side_a}
        vals_b = {len(g.adj[v]) for v in side_b}
        if len(vals_a) > 1 or len(vals_b) > 1:
            return None
        a = next(iter(vals_a)) if vals_a else 0
        b = next(iter(vals_b)) if vals_b else a
        if a > b:
            a, b = b, a
            side_a, side_b = side_b, side_a
        if pair is None:
            pair = (a, b)
        elif pair != (a, b):
            return None
        out_1.update(side_a)
        out_2.update(side_b)
    if pair is None:
        return None
    return pair[0], pair[1], (frozenset(out_1), frozenset(out_2))


def distances(g, v):
    """BFS distances from v; unreachable vertices get math.inf."""
    dist = [INFINITY] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] == INFINITY:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def sphere(g, v, i):
    """Vertices at distance exactly i from v."""
    if i < 0:
        raise ValueError("radius must be nonnegative")
    dist = distances(g, v)
    return frozenset(x for x in range(g.n) if dist[x] == i)


def ball(g, v, i):
    """Vertices at distance at most i from v."""
    if i < 0:
        raise ValueError("radius must be nonnegative")
    dist = distances(g, v)
    return frozenset(x for x in range(g.n) if dist[x] <= i)


def is_connected(g):
    if g.n == 0:
        return True
    return len(ball(g, 0, g.n)) == g.n


# ---------------------------------------------------------------------------
# s-arcs (non-backtracking walks)


def s_arcs_from(g, v, s):
    """All s-arcs starting at v, built layer by layer (no recursion)."""
    arcs = [(v,)]
    for _ in range(s):
        new = []
        for arc in arcs:
            x = arc[-1]
            prev = arc[-2] if len(arc) >= 2 else -1
            for y in g.adj[x]:
                if y != prev:
                    new.append(arc + (y,))
        arcs = new
    return arcs


def count_s_arcs_from(g, v, s):
    """Number of s-arcs starting at v, by dynamic programming on (prev, last)."""
    if s == 0:
        return 1
    counts = {(v, y): 1 for y in g.adj[v]}
    for _ in range(s - 1):
        new = defaultdict(int)
        for (p, x), c in counts.items():
            for y in g.adj[x]:
                if y != p:
                    new[(x, y)] += c
        counts = new
    return sum(counts.values())


def enumerate_s_arcs(g, s):
    """All s-arcs in the graph."""
    out = []
    for v in range(g.n):
        out.extend(s_arcs_from(g, v, s))
    return out


def count_s_arcs(g, s):
    return sum(count_s_arcs_from(g, v, s) for v in range(g.n))


# ---------------------------------------------------------------------------
# subdivisions


def subdivide_1(g):
    """Replace each edge by a path of length two.

    Edge i (in g.edges() order) becomes the new vertex g.n + i.
    """
    edges = []
    for i, (u, v) in enumerate(g.edges()):
        w = g.n + i
        edges.append((u, w))
        edges.append((w, v))
    return Graph(g.n + g.m, edges)


def subdivide_2(g):
    """Replace each edge by a path of length three.

    Edge i = (u, v) becomes u - (n+2i) - (n+2i+1) - v.
    """
    edges = []
    for i, (u, v) in enumerate(g.edges()):
        a = g.n + 2 * i
        b = a + 1
        edges.extend([(u, a), (a, b), (b, v)])
    return Graph(g.n + 2 * g.m, edges)


def smooth(g):
    """Invert a 1-subdivision if the graph structurally is one.

    Succeeds when the valency-2 vertices form an independent set, every edge
    meets exactly one of them, contracting them yields a simple graph, and
    that graph has minimum valency >= 3.  Returns (sigma, branch_vertices,
    mid_of) where branch_vertices[i] is the g-vertex behind sigma-vertex i
    and mid_of maps each sigma-edge to its valency-2 middle vertex; None if
    the shape does not match.
    """
    mids = [v for v in range(g.n) if len(g.adj[v]) == 2]
    mid_set = set(mids)
    branch = [v for v in range(g.n) if v not in mid_set]
    if not mids or not branch:
        return None
    if any(len(g.adj[v]) < 3 for v in branch):
        return None
    index = {v: i for i, v in enumerate(branch)}
    edges = set()
    mid_of = {}
    for w in mids:
        a, b = g.adj[w]
        if a in mid_set or b in mid_set:
            return None
        e = (index[a], index[b]) if index[a] < index[b] else (index[b], index[a])
        if e in edges:
            return None
        edges.add(e)
        mid_of[e] = w
    # every edge of g must be incident to a middle vertex
    if g.m != 2 * len(mids):
        return None
    sigma = Graph(len(branch), sorted(edges))
    return sigma, tuple(branch), mid_of


# ---------------------------------------------------------------------------
# permutations acting on graphs


def apply_permutation(g, p):
    """Relabel vertices by a permutation (vertex v becomes p(v))."""
    images = p.images if hasattr(p, "images") else tuple(p)
    edges = [(images[u], images[v]) for u, v in g.edges()]
    return Graph(g.n, edges)


def is_automorphism(g, p):
    images = p.images if hasattr(p, "images") else tuple(p)
    if len(images) != g.n:
        return False
    adj = g.adj
    for u in range(g.n):
        pu = images[u]
        mapped = {images[v] for v in adj[u]}
        if mapped != set(adj[pu]):
            return False
    return True


# ---------------------------------------------------------------------------
# text format: `n <count>` then `e <u> <v>` lines, `#` comments


def parse_graph(text):
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise GraphFormatError("duplicate vertex-count line", line=lineno)
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError("expected `n <count>`", line=lineno)
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("vertex-count line must come first", line=lineno)
            if len(parts) != 3:
                raise GraphFormatError("expected `e <u> <v>`", line=lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("non-integer endpoint", line=lineno) from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"endpoint out of range 0..{n - 1}", line=lineno)
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}", line=lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"duplicate edge {key}", line=lineno)
            seen.add(key)
            edges.append(key)
        else:
            raise GraphFormatError(f"unknown record {parts[0]!r}", line=lineno)
    if n is None:
        raise GraphFormatError("missing vertex-count line")
    return Graph(n, edges)


def serialize_graph(g):
    """Canonical text form: vertex count, then edges sorted (min, max)."""
    lines = [f"n {g.n}"]
    for u, v in sorted(g.edges()):
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"
