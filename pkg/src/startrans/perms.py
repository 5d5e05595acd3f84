"""Exact permutation-group machinery.

Permutations act on the points 0..degree-1 and are stored as image tuples.
Products apply left to right: ``(a * b)(i) == b(a(i))``.

Groups are backed by deterministic Schreier-Sims stabiliser chains, built
lazily and cached per base prefix, so that repeated stabiliser, transporter
and membership queries against the same prefix share one chain.  Orders are
plain Python integers, hence unbounded.
"""

from __future__ import annotations

from collections import deque
from math import factorial

from .errors import (
    DegreeMismatch,
    DomainNotInvariant,
    GraphFormatError,
    InvalidPermutation,
)

# ---------------------------------------------------------------------------
# raw image-tuple helpers (hot path: no wrapper objects)


def _compose(a, b):
    """Image tuple of "apply a, then b"."""
    return tuple(map(b.__getitem__, a))


def _invert(a):
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def _is_identity(a):
    return all(i == j for i, j in enumerate(a))


class Permutation:
    """Immutable permutation of 0..degree-1, stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images, _checked=False):
        if not _checked:
            images = tuple(int(x) for x in images)
            seen = [False] * len(images)
            for x in images:
                if not 0 <= x < len(images) or seen[x]:
                    raise InvalidPermutation(f"not a bijection: {images!r}")
                seen[x] = True
        object.__setattr__(self, "images", tuple(images))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree):
        return cls(tuple(range(degree)), _checked=True)

    @classmethod
    def from_cycles(cls, degree, *cycles):
        """Product of the given cycles, applied left to right."""
        images = list(range(degree))
        for cycle in cycles:
            cyc = list(cycle)
            step = list(range(degree))
            for i, j in zip(cyc, cyc[1:] + cyc[:1]):
                step[i] = j
            images = [step[x] for x in images]
        return cls(images)

    @classmethod
    def transposition(cls, degree, i, j):
        images = list(range(degree))
        images[i], images[j] = j, i
        return cls(images, _checked=True)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self.images) != len(other.images):
            raise DegreeMismatch(
                f"degrees {len(self.images)} and {len(other.images)} differ"
            )
        return Permutation(_compose(self.images, other.images), _checked=True)

    def inverse(self):
        return Permutation(_invert(self.images), _checked=True)

    __invert__ = inverse

    def __pow__(self, k):
        n = len(self.images)
        if k < 0:
            return self.inverse() ** (-k)
        result = tuple(range(n))
        base = self.images
        while k:
            if k & 1:
                result = _compose(result, base)
            base = _compose(base, base)
            k >>= 1
        return Permutation(result, _checked=True)

    def is_identity(self):
        return _is_identity(self.images)

    def cycles(self, include_fixed=False):
        """Cycle decomposition as a list of tuples."""
        images = self.images
        seen = [False] * len(images)
        out = []
        for i in range(len(images)):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def is_even(self):
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return f"Permutation.identity({self.degree})"
        text = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"<Permutation {text} deg={self.degree}>"


# ---------------------------------------------------------------------------
# stabiliser chains


class _Level:
    """One level of a stabiliser chain.

    ``gens`` generate this level's subgroup.  ``inv`` maps an orbit point x
    to an image tuple v with v[x] == point (an inverse transversal element);
    forward transversal elements are recovered lazily through ``fwd``.
    ``todo`` holds unprocessed Schreier pairs (orbit point, generator index).
    """

    __slots__ = ("point", "gens", "gens_inv", "inv", "orbit_order", "todo", "_fwd")

    def __init__(self, point, degree):
        identity = tuple(range(degree))
        self.point = point
        self.gens = []
        self.gens_inv = []
        self.inv = {point: identity}
        self.orbit_order = [point]
        self.todo = deque()
        self._fwd = {point: identity}

    def fwd(self, x):
        u = self._fwd.get(x)
        if u is None:
            u = self._fwd[x] = _invert(self.inv[x])
        return u

    def orbit_size(self):
        return len(self.orbit_order)

    def add_gen(self, gen):
        idx = len(self.gens)
        self.gens.append(gen)
        self.gens_inv.append(_invert(gen))
        self.todo.extend((x, idx) for x in self.orbit_order)
        # sweep existing points with the new generator, then close under all
        inv = self.inv
        order = self.orbit_order
        fresh = deque()
        g_inv = self.gens_inv[idx]
        for x in list(order):
            y = gen[x]
            if y not in inv:
                inv[y] = _compose(g_inv, inv[x])
                order.append(y)
                fresh.append(y)
                self.todo.extend((y, k) for k in range(len(self.gens)))
        while fresh:
            x = fresh.popleft()
            for k in range(len(self.gens)):
                g = self.gens[k]
                y = g[x]
                if y not in inv:
                    inv[y] = _compose(self.gens_inv[k], inv[x])
                    order.append(y)
                    fresh.append(y)
                    self.todo.extend((y, kk) for kk in range(len(self.gens)))


class StabilizerChain:
    """A base-and-strong-generators representation of a permutation group."""

    __slots__ = ("degree", "levels", "_order")

    def __init__(self, degree, levels):
        self.degree = degree
        self.levels = levels
        self._order = None

    @property
    def base(self):
        """Base points with nontrivial fundamental orbits."""
        return tuple(L.point for L in self.levels if L.orbit_size() > 1)

    @property
    def full_base(self):
        return tuple(L.point for L in self.levels)

    def order(self):
        if self._order is None:
            n = 1
            for L in self.levels:
                n *= L.orbit_size()
            self._order = n
        return self._order

    def sift(self, images, start=0):
        """Reduce an image tuple through the chain.

        Returns ``(residue, stop)``; membership holds iff the residue is the
        identity, in which case stop == len(levels).
        """
        h = tuple(images)
        for idx in range(start, len(self.levels)):
            L = self.levels[idx]
            x = h[L.point]
            if x == L.point:
                continue
            v = L.inv.get(x)
            if v is None:
                return h, idx
            h = _compose(h, v)
        return h, len(self.levels)

    def contains(self, images):
        residue, _ = self.sift(images)
        return _is_identity(residue)

    def strong_generators(self):
        seen = set()
        out = []
        for L in self.levels:
            for g in L.gens:
                if g not in seen:
                    seen.add(g)
                    out.append(g)
        return out

    def transporter_walk(self, constraints):
        """Find an element mapping src -> tgt for each prescribed pair.

        The chain must have been built with the constraint sources as its
        base prefix (any order).  Returns an image tuple or None.
        """
        targets = {src: tgt for src, tgt in constraints}
        us = []
        for L in self.levels:
            if not targets:
                break
            if L.point not in targets:
                continue
            t = targets.pop(L.point)
            if t not in L.inv:
                return None
            us.append(L.fwd(t))
            v = L.inv[t]
            targets = {s: v[x] for s, x in targets.items()}
        if targets:
            raise ValueError("constraint sources missing from chain prefix")
        g = tuple(range(self.degree))
        for u in reversed(us):
            g = _compose(g, u)
        return g


def _build_chain(gen_tuples, degree, base_hint=(), known_order=None):
    """Deterministic Schreier-Sims.

    The full base hint is pre-seeded as the base prefix (trivial fundamental
    orbits included), so a hint listing a point set S yields a chain whose
    suffix after |S| levels is exactly the pointwise stabiliser of S.  When
    the group order is known in advance, Schreier processing stops as soon
    as the transversal product reaches it.
    """
    levels = []
    seeded = set()
    for p in base_hint:
        if 0 <= p < degree and p not in seeded:
            seeded.add(p)
            levels.append(_Level(p, degree))

    chain = StabilizerChain(degree, levels)

    def current_order():
        n = 1
        for L in levels:
            n *= L.orbit_size()
        return n

    def insert(h, first_level):
        residue, stop = chain.sift(h, start=first_level)
        if _is_identity(residue):
            return False
        if stop == len(levels):
            pt = next(i for i, x in enumerate(residue) if x != i)
            levels.append(_Level(pt, degree))
        for k in range(first_level, stop + 1):
            levels[k].add_gen(residue)
        return True

    for g in gen_tuples:
        if not _is_identity(g):
            insert(tuple(g), 0)

    # process pending Schreier pairs, deepest level first
    while True:
        if known_order is not None and current_order() == known_order:
            for L in levels:
                L.todo.clear()
            break
        idx = None
        for k in range(len(levels) - 1, -1, -1):
            if levels[k].todo:
                idx = k
                break
        if idx is None:
            break
        L = levels[idx]
        x, gi = L.todo.popleft()
        s = L.gens[gi]
        y = s[x]
        # Schreier generator u_x * s * u_y^-1
        h = _compose(_compose(L.fwd(x), s), L.inv[y])
        if not _is_identity(h):
            insert(h, idx + 1)

    chain._order = None
    if known_order is not None and chain.order() != known_order:
        raise ValueError(
            f"chain order {chain.order()} does not match declared order {known_order}"
        )
    return chain


# ---------------------------------------------------------------------------
# groups


class LocalActionReport:
    """Identification of a permutation group as symmetric/alternating/other."""

    __slots__ = ("degree", "order", "kind", "transitive", "kernel_order")

    def __init__(self, degree, order, kind, transitive, kernel_order=1):
        self.degree = degree
        self.order = order
        self.kind = kind
        self.transitive = transitive
        self.kernel_order = kernel_order

    def __repr__(self):
        return (
            f"LocalActionReport(degree={self.degree}, order={self.order}, "
            f"kind={self.kind!r}, transitive={self.transitive}, "
            f"kernel_order={self.kernel_order})"
        )

    def _key(self):
        return (self.degree, self.order, self.kind, self.transitive, self.kernel_order)

    def __eq__(self, other):
        return isinstance(other, LocalActionReport) and self._key() == other._key()


_CHAIN_CACHE_SIZE = 6


class PermGroup:
    """A permutation group given by generators, with cached chains."""

    def __init__(self, generators, degree=None, order=None):
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            gens.append(g)
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group with no generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {degree}"
                )
        self._degree = degree
        self._generators = tuple(g for g in gens if not g.is_identity())
        self._order = order
        self._chains = {}

    # -- constructors --------------------------------------------------------

    @classmethod
    def trivial(cls, degree):
        return cls([], degree=degree, order=1)

    @classmethod
    def symmetric(cls, degree):
        if degree <= 1:
            return cls.trivial(max(degree, 1))
        gens = [Permutation.transposition(degree, 0, 1)]
        if degree > 2:
            gens.append(Permutation(tuple(range(1, degree)) + (0,), _checked=True))
        return cls(gens, degree=degree, order=factorial(degree))

    @classmethod
    def cyclic(cls, degree):
        if degree <= 1:
            return cls.trivial(max(degree, 1))
        return cls(
            [Permutation(tuple(range(1, degree)) + (0,), _checked=True)],
            degree=degree,
            order=degree,
        )

    @classmethod
    def dihedral(cls, n):
        """Symmetries of an n-cycle on vertices 0..n-1."""
        if n < 3:
            raise ValueError("dihedral group needs n >= 3")
        rot = Permutation(tuple(range(1, n)) + (0,), _checked=True)
        ref = Permutation(tuple((n - i) % n for i in range(n)), _checked=True)
        return cls([rot, ref], degree=n, order=2 * n)

    # -- basic data -----------------------------------------------------------

    @property
    def degree(self):
        return self._degree

    @property
    def generators(self):
        return self._generators

    def __repr__(self):
        return f"<PermGroup degree={self._degree} ngens={len(self._generators)}>"

    # -- chains ----------------------------------------------------------------

    def chain(self, base_hint=()):
        key = tuple(base_hint)
        cached = self._chains.get(key)
        if cached is not None:
            return cached
        built = _build_chain(
            [g.images for g in self._generators],
            self._degree,
            base_hint=key,
            known_order=self._order,
        )
        if len(self._chains) >= _CHAIN_CACHE_SIZE:
            for old in list(self._chains):
                if old != ():
                    del self._chains[old]
                    break
        self._chains[key] = built
        return built

    def _adopt_chain(self, chain):
        self._chains.setdefault((), chain)

    def order(self):
        if self._order is None:
            self._order = self.chain().order()
        return self._order

    # -- membership and orbits ---------------------------------------------------

    def contains(self, p):
        images = p.images if isinstance(p, Permutation) else tuple(p)
        if len(images) != self._degree:
            raise DegreeMismatch(
                f"element degree {len(images)} != group degree {self._degree}"
            )
        return self.chain().contains(images)

    def __contains__(self, p):
        return self.contains(p)

    def orbit(self, point):
        """Minimal generator-closed set of points containing ``point``."""
        if not 0 <= point < self._degree:
            raise ValueError(f"point {point} out of range")
        seen = {point}
        queue = [point]
        gens = [g.images for g in self._generators]
        while queue:
            x = queue.pop()
            for g in gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def orbits(self):
        """All point orbits, each sorted, ordered by smallest element."""
        remaining = set(range(self._degree))
        out = []
        while remaining:
            p = min(remaining)
            orb = self.orbit(p)
            remaining -= orb
            out.append(tuple(sorted(orb)))
        return out

    def is_transitive(self):
        return self._degree > 0 and len(self.orbit(0)) == self._degree

    def elements(self, limit=2_000_000):
        """Iterate over all group elements (products of chain transversals)."""
        if self.order() > limit:
            raise ValueError(f"group order {self.order()} exceeds limit {limit}")
        chain = self.chain()
        nontrivial = [L for L in chain.levels if L.orbit_size() > 1]
        identity = tuple(range(self._degree))
        if not nontrivial:
            yield Permutation(identity, _checked=True)
            return

        def rec(idx, acc):
            if idx < 0:
                yield Permutation(acc, _checked=True)
                return
            L = nontrivial[idx]
            for x in L.orbit_order:
                yield from rec(idx - 1, _compose(acc, L.fwd(x)))

        yield from rec(len(nontrivial) - 1, identity)

    # -- stabilisers --------------------------------------------------------------

    def _suffix_group(self, chain, k):
        order = chain.order()
        for L in chain.levels[:k]:
            order //= L.orbit_size()
        if k >= len(chain.levels):
            return PermGroup.trivial(self._degree)
        gens = [Permutation(g, _checked=True) for g in chain.levels[k].gens]
        sub = PermGroup(gens, degree=self._degree, order=order)
        sub._adopt_chain(StabilizerChain(self._degree, chain.levels[k:]))
        return sub

    def point_stabiliser(self, point):
        return self.pointwise_stabiliser([point])

    def pointwise_stabiliser(self, points):
        """Largest subgroup fixing every listed point."""
        pts = tuple(sorted(set(points)))
        for p in pts:
            if not 0 <= p < self._degree:
                raise ValueError(f"point {p} out of range")
        if not pts:
            return self
        chain = self.chain(pts)
        return self._suffix_group(chain, len(pts))

    def stabiliser_tower(self, point_blocks):
        """Pointwise stabilisers of the nested unions of the given blocks.

        One chain is built whose base prefix lists the blocks in order, so
        asking for the stabilisers of S1, S1+S2, S1+S2+S3 costs a single
        Schreier-Sims run.
        """
        hint = []
        seen = set()
        cuts = []
        for block in point_blocks:
            for p in sorted(block):
                if p not in seen:
                    seen.add(p)
                    hint.append(p)
            cuts.append(len(hint))
        if not hint:
            return [self for _ in point_blocks]
        chain = self.chain(tuple(hint))
        return [self._suffix_group(chain, c) for c in cuts]

    def setwise_stabiliser(self, points):
        """Largest subgroup permuting the listed points among themselves.

        Backtracks over the chain prefix built on the set, pruning branches
        whose pulled-back target leaves the fundamental orbit.
        """
        pts = tuple(sorted(set(points)))
        for p in pts:
            if not 0 <= p < self._degree:
                raise ValueError(f"point {p} out of range")
        if not pts:
            return self
        chain = self.chain(pts)
        k = len(pts)
        pointwise = self._suffix_group(chain, k)
        levels = chain.levels[:k]
        identity = tuple(range(self._degree))
        realized = []

        def rec(idx, used, pull, us):
            if idx == k:
                g = identity
                for u in reversed(us):
                    g = _compose(g, u)
                realized.append(g)
                return
            L = levels[idx]
            for t in pts:
                if t in used:
                    continue
                t_pulled = pull[t]
                v = L.inv.get(t_pulled)
                if v is None:
                    continue
                rec(idx + 1, used | {t}, _compose(pull, v), us + [L.fwd(t_pulled)])

        rec(0, frozenset(), identity, [])
        sub_order = pointwise.order() * len(realized)
        gens = list(pointwise.generators) + [
            Permutation(g, _checked=True) for g in realized if not _is_identity(g)
        ]
        return PermGroup(gens, degree=self._degree, order=sub_order)

    # -- transporter ----------------------------------------------------------------

    def transporter(self, constraints):
        """Some element mapping src -> tgt for every (src, tgt) pair, or None.

        Absence of such an element is a result, not an error.
        """
        constraints = list(constraints)
        sources = [s for s, _ in constraints]
        targets = [t for _, t in constraints]
        if len(set(sources)) != len(sources):
            raise ValueError("constraint sources must be distinct")
        if len(set(targets)) != len(targets):
            return None
        if not constraints:
            return Permutation.identity(self._degree)
        chain = self.chain(tuple(sources))
        g = chain.transporter_walk(constraints)
        return None if g is None else Permutation(g, _checked=True)

    # -- induced actions ---------------------------------------------------------------

    def induced_action(self, domain):
        """Restrict to an invariant ordered domain, relabelled to 0..len-1.

        Returns (image group, kernel order).
        """
        domain = list(domain)
        index = {d: i for i, d in enumerate(domain)}
        img_gens = []
        for g in self._generators:
            try:
                img = tuple(index[g.images[d]] for d in domain)
            except KeyError:
                raise DomainNotInvariant(
                    f"generator {g!r} does not stabilise the domain"
                ) from None
            img_gens.append(Permutation(img, _checked=True))
        image = PermGroup(img_gens, degree=len(domain))
        kernel_order = self.order() // image.order()
        return image, kernel_order


def identify(group, degree=None, kernel_order=1):
    """Classify a group on 0..degree-1 as symmetric, alternating, or other."""
    if degree is None:
        degree = group.degree
    order = group.order()
    full = factorial(degree)
    if order == full:
        kind = "symmetric"
    elif 2 * order == full and all(g.is_even() for g in group.generators):
        kind = "alternating"
    else:
        kind = "other"
    transitive = degree <= 1 or len(group.orbit(0)) == degree
    return LocalActionReport(degree, order, kind, transitive, kernel_order)


def local_action(group, domain):
    """Induced action on a domain, identified; returns a LocalActionReport."""
    domain = list(domain)
    image, kernel = group.induced_action(domain)
    return identify(image, len(domain), kernel_order=kernel)


# ---------------------------------------------------------------------------
# text format: `d <degree>` then `p <img0> <img1> ...` per generator


def parse_generators(text):
    """Parse the generator file format; returns a PermGroup."""
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "d":
            if degree is not None:
                raise GraphFormatError("duplicate degree line", line=lineno)
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError("expected `d <degree>`", line=lineno)
            degree = int(parts[1])
        elif parts[0] == "p":
            if degree is None:
                raise GraphFormatError("degree line must come first", line=lineno)
            try:
                images = [int(x) for x in parts[1:]]
            except ValueError:
                raise GraphFormatError("non-integer image", line=lineno) from None
            if len(images) != degree:
                raise GraphFormatError(
                    f"expected {degree} images, got {len(images)}", line=lineno
                )
            try:
                gens.append(Permutation(images))
            except InvalidPermutation as exc:
                raise GraphFormatError(str(exc), line=lineno) from None
        else:
            raise GraphFormatError(f"unknown record {parts[0]!r}", line=lineno)
    if degree is None:
        raise GraphFormatError("missing degree line")
    return PermGroup(gens, degree=degree)


def serialize_generators(group):
    """Render a group's generators in the text format."""
    lines = [f"d {group.degree}"]
    for g in group.generators:
        lines.append("p " + " ".join(map(str, g.images)))
    return "\n".join(lines) + "\n"
