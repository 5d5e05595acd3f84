"""Exhaustive enumeration of small connected graphs with a vectorised
brute-force automorphism counter.

Graphs on n vertices are encoded as edge subsets of the complete graph (one
bit per pair), generated exhaustively, and filtered for connectivity with
bitmask arithmetic over whole chunks at once.  The automorphism counter
scans all n! permutations per graph, pre-filtered by degree preservation;
it is an independent oracle against the search-based group computation.
"""

from __future__ import annotations

import itertools
from math import factorial

import numpy as np

from .graphs import Graph

_CHUNK = 1 << 15


def _pairs(n):
    return list(itertools.combinations(range(n), 2))


def connected_graph_rows(n, chunk=_CHUNK):
    """Yield arrays of adjacency-row bitmasks for all connected labelled
    graphs on exactly n vertices.

    Each yielded array has shape (batch, n); entry [i, u] is the neighbor
    bitmask of vertex u in the i-th graph.
    """
    if n == 1:
        yield np.zeros((1, 1), dtype=np.int64)
        return
    pairs = _pairs(n)
    m = len(pairs)
    weights = np.zeros((m, n), dtype=np.int64)
    for e, (u, v) in enumerate(pairs):
        weights[e, u] = 1 << v
        weights[e, v] = 1 << u
    full = (1 << n) - 1
    total = 1 << m
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        bits = ((codes[:, None] >> np.arange(m)) & 1).astype(np.int64)
        rows = bits @ weights  # (batch, n) neighbor bitmasks
        reach = rows[:, 0] | 1
        for _ in range(n - 1):
            grown = reach
            for u in range(n):
                sel = (reach >> u) & 1
                grown = grown | (rows[:, u] * sel)
            if np.array_equal(grown, reach):
                break
            reach = grown
        mask = reach == full
        if mask.any():
            yield rows[mask]


def rows_to_graph(row):
    """Build a Graph from one adjacency-row bitmask vector."""
    n = len(row)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (int(row[u]) >> v) & 1
    ]
    return Graph(n, edges)


class BruteForceCounter:
    """Counts adjacency-preserving permutations for fixed n, vectorised.

    Vertices are first sorted by degree; the degree-preserving permutations
    are then exactly the products of the symmetric groups on the degree
    classes, so only those are scanned (all of them, against the full
    adjacency matrix, in one gather per degree-class pattern).
    """

    def __init__(self, n):
        self.n = n
        self._ar = np.arange(n, dtype=np.int64)
        self._pattern_cache = {}

    def _flat_index_for(self, blocks):
        """Flattened-matrix gather indices for the block-product permutations."""
        cached = self._pattern_cache.get(blocks)
        if cached is not None:
            return cached
        n = self.n
        parts = []
        offset = 0
        for size in blocks:
            parts.append(
                [tuple(offset + x for x in p) for p in itertools.permutations(range(size))]
            )
            offset += size
        perms = np.array(
            [sum(combo, ()) for combo in itertools.product(*parts)], dtype=np.int64
        )
        flat = (perms[:, :, None] * n + perms[:, None, :]).reshape(len(perms), n * n)
        self._pattern_cache[blocks] = flat
        return flat

    def counts_for_rows(self, rows, work_limit=50_000_000):
        """Automorphism counts for a batch of adjacency-row bitmask vectors."""
        n = self.n
        rows = np.asarray(rows, dtype=np.int64)
        nrows = len(rows)
        adj = ((rows[:, :, None] >> self._ar) & 1).astype(np.int8)  # (B,n,n)
        degs = adj.sum(axis=2)  # (B,n)
        rho = np.argsort(degs, axis=1, kind="stable")
        ai = np.arange(nrows)[:, None, None]
        sorted_adj = adj[ai, rho[:, :, None], rho[:, None, :]]
        flats = sorted_adj.reshape(nrows, n * n)
        sdegs = np.take_along_axis(degs, rho, axis=1)
        uniq, inverse = np.unique(sdegs, axis=0, return_inverse=True)
        out = np.empty(nrows, dtype=np.int64)
        for k, dv in enumerate(uniq):
            sel = np.flatnonzero(inverse == k)
            blocks = []
            run = 1
            for i in range(1, n):
                if dv[i] == dv[i - 1]:
                    run += 1
                else:
                    blocks.append(run)
                    run = 1
            blocks.append(run)
            fi = self._flat_index_for(tuple(blocks))
            nperms = len(fi)
            step = max(1, work_limit // max(1, nperms * n * n))
            for s in range(0, len(sel), step):
                ss = sel[s : s + step]
                gathered = flats[ss][:, fi]  # (m, K, n*n)
                eq = (gathered == flats[ss][:, None, :]).all(axis=2)
                out[ss] = eq.sum(axis=1)
        return out

    def count_rows(self, row):
        return int(self.counts_for_rows(np.asarray(row, dtype=np.int64)[None, :])[0])

    def count_graph(self, g):
        row = [0] * g.n
        for u in range(g.n):
            for v in g.adj[u]:
                row[u] |= 1 << v
        return self.count_rows(row)


def rows_to_adj(row):
    """Adjacency tuple-of-tuples from one adjacency-row bitmask vector."""
    n = len(row)
    return tuple(
        tuple(v for v in range(n) if (int(row[u]) >> v) & 1) for u in range(n)
    )


def survey_connected(n, progress=None):
    """Compare the search-based automorphism order with the brute-force count
    over every connected labelled graph on exactly n vertices.

    Returns (graph count, mismatch count).  ``progress``, if given, is
    called with the running graph count after each chunk.
    """
    from .autgroup import automorphism_order

    counter = BruteForceCounter(n)
    total = 0
    mismatches = 0
    for rows in connected_graph_rows(n):
        counts = counter.counts_for_rows(rows)
        for row, brute in zip(rows, counts):
            adj = rows_to_adj(row)
            if automorphism_order(adj) != int(brute):
                mismatches += 1
        total += len(rows)
        if progress is not None:
            progress(total)
    return total, mismatches
