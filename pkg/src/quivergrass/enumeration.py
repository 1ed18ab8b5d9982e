"""Brute-force enumeration of subrepresentations over a prime field.

Vertices are visited in topological order.  At vertex v the images of the
already chosen subspaces under the incoming arrows span a space W; only
subspaces containing W are admissible, and the branch dies as soon as
dim W exceeds e_v.  Sinks constrain nothing further, so when only the
number of subrepresentations is wanted they contribute a Gaussian binomial
instead of being enumerated.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from .errors import BudgetExceeded, PreconditionFailed
from .linalg import (DEFAULT_BUDGET, PrimeField,
                     _iter_rref, gaussian_binomial, row_space_basis)


def default_budget():
    env = os.environ.get("QUIVERGRASS_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _check(M, e):
    if not isinstance(M.field, PrimeField):
        raise PreconditionFailed("brute force needs a prime field")
    e = M.quiver.vec(e)
    return e


def _in_range(M, e):
    return all(0 <= x <= d for x, d in zip(e, M.dims))


def projected_size(M, e, include_sinks=False):
    Q, p = M.quiver, M.field.p
    total = 1
    for v in Q.topo_order:
        k = Q.index[v]
        if include_sinks or not Q.is_sink(v):
            total *= gaussian_binomial(M.dims[k], e[k], p)
    return total


class _Walker:
    """Depth-first walk over subspace choices in topological order."""

    def __init__(self, M, e):
        Q = M.quiver
        self.M = M
        self.F = M.field
        self.p = M.field.p
        self.e = e
        self.order = list(Q.topo_order)
        self.incoming = {v: [(Q.index[a.source], M.mat(a.id)) for a in Q.arrows_to(v)]
                         for v in Q.vertices}
        self.idx = Q.index

    def forced(self, v, chosen):
        """Reduced echelon basis of the span of incoming images."""
        vecs = []
        for s, mat in self.incoming[v]:
            for u in chosen[s]:
                vecs.append(mat.apply(u))
        return row_space_basis(vecs, self.F) if vecs else []

    def extensions(self, v, W):
        """All e_v-dimensional subspaces of M_v containing span(W)."""
        k = self.idx[v]
        d, ev = self.M.dims[k], self.e[k]
        w = len(W)
        if w > ev:
            return
        pivots = []
        for row in W:
            pivots.append(next(j for j, x in enumerate(row) if x))
        free = [j for j in range(d) if j not in set(pivots)]
        for V in _iter_rref(self.p, d - w, ev - w):
            lifts = []
            for row in V:
                vec = [0] * d
                for j, x in zip(free, row):
                    vec[j] = x
                lifts.append(vec)
            yield tuple(row_space_basis(list(W) + lifts, self.F)) if (W or lifts) else ()


def iter_subreps(M, e, budget=None):
    """Yield every subrepresentation of dimension vector e.

    Each item is a tuple (vertex order) of reduced echelon bases, given as
    tuples of row vectors.
    """
    e = _check(M, e)
    if not _in_range(M, e):
        return
    budget = default_budget() if budget is None else budget
    size = projected_size(M, e, include_sinks=True)
    if size > budget:
        raise BudgetExceeded(f"{size} candidate tuples exceed budget {budget}")
    walker = _Walker(M, e)
    n = M.quiver.n
    chosen = [None] * n

    def rec(pos):
        if pos == len(walker.order):
            yield tuple(chosen)
            return
        v = walker.order[pos]
        W = walker.forced(v, chosen)
        for U in walker.extensions(v, W):
            chosen[walker.idx[v]] = U
            yield from rec(pos + 1)
        chosen[walker.idx[v]] = None

    yield from rec(0)


def _count_chunk(M, e, chunk, nchunks):
    Q = M.quiver
    walker = _Walker(M, e)
    inner = [v for v in walker.order if not Q.is_sink(v)]
    sinks = [v for v in walker.order if Q.is_sink(v)]
    p = walker.p
    chosen = [()] * Q.n

    def leaf():
        total = 1
        for v in sinks:
            k = walker.idx[v]
            w = len(walker.forced(v, chosen))
            if w > e[k]:
                return 0
            total *= gaussian_binomial(M.dims[k] - w, e[k] - w, p)
        return total

    def rec(pos):
        if pos == len(inner):
            return leaf()
        v = inner[pos]
        W = walker.forced(v, chosen)
        total = 0
        for j, U in enumerate(walker.extensions(v, W)):
            if pos == 0 and j % nchunks != chunk:
                continue
            chosen[walker.idx[v]] = U
            total += rec(pos + 1)
        chosen[walker.idx[v]] = ()
        return total

    return rec(0)


def count_subreps(M, e, budget=None, workers=None):
    """Number of subrepresentations of M with dimension vector e."""
    e = _check(M, e)
    if not _in_range(M, e):
        return 0
    budget = default_budget() if budget is None else budget
    size = projected_size(M, e)
    if size > budget:
        raise BudgetExceeded(f"{size} candidate tuples exceed budget {budget}")
    if not workers or workers <= 1 or size < 10_000:
        return _count_chunk(M, e, 0, 1)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futs = [pool.submit(_count_chunk, M, e, c, workers) for c in range(workers)]
        return sum(f.result() for f in futs)


def all_subreps(M, budget=None):
    """Every subrepresentation of M, grouped by dimension vector."""
    import itertools
    out = {}
    for e in itertools.product(*(range(d + 1) for d in M.dims)):
        out[e] = list(iter_subreps(M, e, budget=budget))
    return out
