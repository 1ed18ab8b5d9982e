"""Point counts of quiver Grassmannians.

Two independent routes:

* brute force: enumerate subrepresentations over F_p;
* the planner :func:`count_poly`: reduce Gr_e(M) along short exact
  sequences 0 -> X -> M -> S -> 0 with dim Ext^1(S, X) <= 1.  For such a
  generating extension the stratum of subreps N with dim(N & X) = f and
  dim(N / N & X) = g is an affine bundle of rank <g, dim X - f> over

      Gr_f(X) x Gr_g(S)  minus  Gr_f(X_S) x Gr_{g - dim S^X}(S / S^X)

  (no excision in the split case), so over every finite field

      |stratum| = q^<g, dim X - f> (|Gr_f X| |Gr_g S| - |Gr_f X_S| |Gr_{g - dim S^X}(S/S^X)|).
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .ar import (extension_from_mono, knit_preprojective, ringel_reflections)
from .enumeration import count_subreps, iter_subreps
from .errors import (NegativeCoefficientResult, PlanFailure,
                     PreconditionFailed, QuiverGrassError)
from .linalg import GF, QQ, IntPolynomial, Matrix, fit_polynomial, primes, row_space_basis
from .quiver import classify, defect, euler_form
from .rep import (Representation, SubrepWitness, combine, direct_sum, dual, ext1_dim,
                  hom_vectors, indecomposable_summands, is_isomorphic, is_rigid, quotient,
                  restrict, sub, support_components)

ZERO = IntPolynomial()
ONE = IntPolynomial([1])


# ---------------------------------------------------------------------------
# brute force and stratification
# ---------------------------------------------------------------------------

def brute_force_count(M, e, budget=None, workers=None) -> int:
    """Number of F_p-points of Gr_e(M), by enumeration."""
    return count_subreps(M, e, budget=budget, workers=workers)


def _split_coords(ext, bases):
    """For a subrep N of the middle term: (N & X, image of N in S) as echelon bases."""
    X, F = ext.sub, ext.sub.field
    inter, img = [], []
    for k, rows in enumerate(bases):
        x = X.dims[k]
        top = [r[x:] for r in rows]
        pi = row_space_basis(top, F) if top else []
        img.append(tuple(pi))
        if rows:
            B = Matrix(F, len(rows), len(rows[0]) - x, top) if len(rows[0]) > x else None
            if B is None:
                left = [tuple(F.one if i == j else F.zero for i in range(len(rows))) for j in range(len(rows))]
            else:
                left = B.T.kernel_basis()
            vecs = []
            for c in left:
                v = [F.zero] * x
                for coef, r in zip(c, rows):
                    if coef:
                        v = [F.add(a, F.mul(coef, b)) for a, b in zip(v, r[:x])]
                vecs.append(v)
            inter.append(tuple(row_space_basis(vecs, F)) if vecs else ())
        else:
            inter.append(())
    return tuple(inter), tuple(img)


def stratify(ext, e, budget=None):
    """Bin the subreps of the middle term by (f, g) = (dim N & X, dim N / N & X)."""
    Y = ext.middle
    e = Y.quiver.vec(e)
    out = {}
    for bases in iter_subreps(Y, e, budget=budget):
        inter, img = _split_coords(ext, bases)
        f = tuple(len(b) for b in inter)
        g = tuple(len(b) for b in img)
        out[(f, g)] = out.get((f, g), 0) + 1
    return out


def stratum_images(ext, e, budget=None):
    """(f, g) -> set of pairs (N & X, pi(N)) realised by subreps N of the middle term."""
    Y = ext.middle
    out = {}
    for bases in iter_subreps(Y, Y.quiver.vec(e), budget=budget):
        inter, img = _split_coords(ext, bases)
        key = (tuple(len(b) for b in inter), tuple(len(b) for b in img))
        out.setdefault(key, set()).add((inter, img))
    return out


def _lookup(counts, x):
    if callable(counts):
        return counts(x)
    return counts.get(tuple(x), ZERO)


def stratum_count_poly(X_counts, S_counts, f, g, Q, dim_X,
                       X_S_counts=None, S_quot_counts=None, S_X_dim=None):
    """Point count of one stratum as a polynomial in q.

    ``*_counts`` map dimension vectors to IntPolynomials (dicts or callables).
    For a split extension leave ``X_S_counts`` as None; otherwise
    ``S_quot_counts`` counts subreps of S/S^X and ``S_X_dim`` is dim S^X.
    A zero term short circuits before q^rank is formed, so negative ranks of
    empty strata never appear.
    """
    f, g = tuple(f), tuple(g)
    cx = _lookup(X_counts, f)
    term = ZERO
    if not cx.is_zero():
        term = cx * _lookup(S_counts, g)
    if X_S_counts is not None:
        h = tuple(a - b for a, b in zip(g, S_X_dim))
        if all(t >= 0 for t in h):
            cxs = _lookup(X_S_counts, f)
            if not cxs.is_zero():
                term = term - cxs * _lookup(S_quot_counts, h)
    if term.is_zero():
        return ZERO
    r = euler_form(Q, g, [a - b for a, b in zip(dim_X, f)])
    if r < 0:
        raise NegativeCoefficientResult(f"stratum f={f}, g={g} has negative rank {r}")
    if not term.has_nonnegative_coefficients():
        raise NegativeCoefficientResult(f"stratum f={f}, g={g} has count {term}")
    return term.shift(r)


# ---------------------------------------------------------------------------
# interpolation
# ---------------------------------------------------------------------------

def _degree_bound(M, e):
    d = M.dims
    if is_rigid(M):
        b = euler_form(M.quiver, e, [x - y for x, y in zip(d, e)])
    else:
        b = sum(x * (y - x) for x, y in zip(e, d))
    return max(b, 0)


def interpolation_oracle(M, e, degree_bound=None, budget=None, workers=None):
    """Fit |Gr_e(M_p)| over the first primes by a polynomial in p.

    ``M`` is a representation with an integer form, or a callable taking a
    prime p to a representation over F_p.  The fit uses degree_bound + 1 primes and is checked on one
    more.  Returns (polynomial, samples).
    """
    if isinstance(M, Representation):
        if M.int_form() is None:
            raise PreconditionFailed("interpolation needs an integer form of the module")
        build = lambda p: M.reduce(GF(p))
        generic = M.reduce(QQ)
    else:
        build = M
        generic = build(2)
    e = generic.quiver.vec(e)
    if degree_bound is None:
        degree_bound = _degree_bound(generic, e)
    samples = []
    for p in primes(2):
        if len(samples) == degree_bound + 2:
            break
        samples.append((p, count_subreps(build(p), e, budget=budget, workers=workers)))
    return fit_polynomial(samples, degree_bound), samples


# ---------------------------------------------------------------------------
# the planner
# ---------------------------------------------------------------------------

@dataclass
class PlanNode:
    """One reduction step; ``children`` are the plans of the counts it used."""
    kind: str
    dims: tuple
    e: tuple
    poly: IntPolynomial
    info: dict = field(default_factory=dict)
    children: list = field(default_factory=list)

    def to_json(self, depth=None):
        out = {"kind": self.kind, "dims": list(self.dims), "e": list(self.e),
               "polynomial": self.poly.to_list(), "info": self.info}
        if depth is None or depth > 0:
            nxt = None if depth is None else depth - 1
            out["children"] = [c.to_json(nxt) for c in self.children]
        return out

    def kinds(self):
        """Set of node kinds in the tree."""
        out = {self.kind}
        for c in self.children:
            out |= c.kinds()
        return out


def _box(e, d):
    """All g with 0 <= g <= min(e, d) componentwise."""
    return itertools.product(*(range(min(a, b) + 1) for a, b in zip(e, d)))


def greatest_subrep_vanishing_at(M, v):
    """Largest subrep of M that is zero at vertex v, as a witness."""
    Q, F = M.quiver, M.field
    i = Q.index[v]
    U = [Matrix.identity(F, d) for d in M.dims]
    U[i] = Matrix(F, M.dims[i], 0, [() for _ in range(M.dims[i])], reduce=False)
    changed = True
    while changed:
        changed = False
        for a, Ma in zip(Q.arrows, M.mats):
            s, t = Q.index[a.source], Q.index[a.target]
            if U[s].cols == 0:
                continue
            ann = U[t].T.kernel_basis()
            if not ann:
                continue
            A = Matrix(F, len(ann), M.dims[t], ann) @ (Ma @ U[s])
            ker = A.kernel_basis()
            if len(ker) < U[s].cols:
                K = Matrix.from_columns(F, ker, U[s].cols) if ker else \
                    Matrix(F, U[s].cols, 0, [() for _ in range(U[s].cols)], reduce=False)
                U[s] = U[s] @ K
                changed = True
    return SubrepWitness(M, U, check=True)


class Planner:
    """Memoised recursive computation of the counting polynomial of Gr_e(M)."""

    def __init__(self, seed=0, interpolate=True, budget=None):
        self.memo = {}
        self.rng = random.Random(seed)
        self.interpolate = interpolate
        self.budget = budget
        self._summands = {}
        self._generating = {}
        self._candidates = {}

    # -- bookkeeping --------------------------------------------------------

    def _key(self, M, e):
        if is_rigid(M):
            return ("rigid", M.quiver, M.field, M.dims, e)
        return ("module", M, e)

    def count(self, M, e):
        e = tuple(M.quiver.vec(e))
        if any(x < 0 or x > d for x, d in zip(e, M.dims)):
            return ZERO, PlanNode("Base", M.dims, e, ZERO, {"reason": "out of range"})
        if not any(e) or e == M.dims:
            return ONE, PlanNode("Base", M.dims, e, ONE, {"reason": "trivial"})
        key = self._key(M, e)
        hit = self.memo.get(key)
        if hit is None:
            hit = self._plan(M, e)
            self.memo[key] = hit
        return hit

    def poly(self, M):
        return lambda x: self.count(M, x)[0]

    def _plan(self, M, e):
        for route in (self._restrict, self._decompose, self._tube, self._vertex,
                      self._generating_route, self._interpolate):
            out = route(M, e)
            if out is not None:
                return out
        raise PlanFailure(f"no reduction applies to a module of dimension {M.dims} at e={e}")

    # -- routes -------------------------------------------------------------

    def _restrict(self, M, e):
        Q = M.quiver
        comps = support_components(M)
        if len(comps) == 1 and len(comps[0]) == Q.n:
            return None
        parts = []
        total = ONE
        for comp in comps:
            R = restrict(M, comp)
            R.summands = None
            er = tuple(e[Q.index[v]] for v in comp)
            c, plan = self.count(R, er)
            parts.append(plan)
            total = total * c
            if total.is_zero():
                break
        kind = "Restrict" if len(comps) == 1 else "Split"
        return total, PlanNode(kind, M.dims, e, total, {"components": [list(c) for c in comps]}, parts)

    def _split_summands(self, M):
        key = M
        if key not in self._summands:
            try:
                parts = indecomposable_summands(M)
            except QuiverGrassError:
                parts = [M]
            self._summands[key] = parts
        return self._summands[key]

    def _decompose(self, M, e):
        parts = self._split_summands(M)
        if len(parts) < 2:
            return None
        for j, S in enumerate(parts):
            others = parts[:j] + parts[j + 1:]
            if all(ext1_dim(S, X) == 0 for X in others):
                X = direct_sum(*others) if len(others) > 1 else others[0]
                if len(others) > 1:
                    X.summands = tuple(others)
                return self._sum_over_strata(M, e, X, S, None, "DirectSum")
        return None

    def _tube(self, M, e):
        T = getattr(M, "tube", None)
        if T is None or T.level < 2:
            return None
        X, S = T.chain[T.level - 2], T.tops[T.level - 1]
        refl = ringel_reflections(X, S)
        return self._sum_over_strata(M, e, X, S, refl, "Tube", {"level": T.level, "tube": True})

    def _vertex(self, M, e):
        Q = M.quiver
        for v in Q.vertices:
            if M.dim_at(v) == 1 and Q.is_sink(v):
                i = Q.index[v]
                if e[i] == 1:
                    W = SubrepWitness(M, [Matrix.identity(M.field, 1) if k == i else
                                          Matrix(M.field, d, 0, [() for _ in range(d)], reduce=False)
                                          for k, d in enumerate(M.dims)], check=False)
                    R = quotient(M, W)[0]
                    e2 = tuple(x - (k == i) for k, x in enumerate(e))
                    c, plan = self.count(R, e2)
                    info = {"vertex": v, "side": "contains"}
                else:
                    R = sub(M, greatest_subrep_vanishing_at(M, v))[0]
                    c, plan = self.count(R, e)
                    info = {"vertex": v, "side": "avoids"}
                return c, PlanNode("VertexReduce", M.dims, e, c, info, [plan])
        for v in Q.vertices:
            if M.dim_at(v) == 1 and Q.is_source(v):
                return self._dualize(M, e, {"reason": "source of dimension one", "vertex": v})
        return None

    def _dualize(self, M, e, info):
        D = dual(M)
        D.summands = None
        c, plan = self.count(D, tuple(d - x for d, x in zip(M.dims, e)))
        return c, PlanNode("Dualize", M.dims, e, c, info, [plan])

    def _candidates_for(self, Q, F, size):
        key = (Q, F)
        cached = self._candidates.get(key)
        if cached is not None and cached[0] >= size:
            return cached[1]
        cls = classify(Q)
        out = []
        try:
            if cls.is_dynkin:
                out = [c.module for c in knit_preprojective(Q, None, F)]
            elif cls.is_affine:
                b = 0
                while True:
                    ents = knit_preprojective(Q, b, F)
                    layer = [c.module for c in ents if c.coord.k == b]
                    out = [c.module for c in ents]
                    if not layer or min(m.total_dim for m in layer) > size or b > 4 * size:
                        break
                    b += 1
            else:
                out = [c.module for c in knit_preprojective(Q, 0, F)]
        except QuiverGrassError:
            out = []
        out = sorted(out, key=lambda m: -m.total_dim)
        self._candidates[key] = (size, out)
        return out

    def _find_mono(self, X, M):
        H = hom_vectors(X, M)
        if not H:
            return None
        F = M.field
        tries = [[F.one if i == j else F.zero for i in range(len(H))] for j in range(len(H))]
        tries += [[F.one if i in (j, k) else F.zero for i in range(len(H))]
                  for j in range(len(H)) for k in range(j + 1, len(H))]
        tries += [[F.random_element(self.rng) for _ in H] for _ in range(16)]
        for c in tries:
            f = combine(X, M, H, c)
            if f.is_mono():
                return f
        return None

    def _find_generating(self, M):
        if M in self._generating:
            return self._generating[M]
        found = None
        for X in self._candidates_for(M.quiver, M.field, M.total_dim):
            if X.total_dim >= M.total_dim or any(a > b for a, b in zip(X.dims, M.dims)):
                continue
            iota = self._find_mono(X, M)
            if iota is None:
                continue
            ext = extension_from_mono(iota)
            S = ext.quot
            if ext1_dim(S, X) != 1 or ext.is_split():
                continue
            found = (X, S, ringel_reflections(X, S))
            break
        self._generating[M] = found
        return found

    def _generating_route(self, M, e):
        Q = M.quiver
        cls = classify(Q)
        if cls.is_affine and defect(Q, M.dims) > 0:
            return self._dualize(M, e, {"reason": "preinjective side"})
        found = self._find_generating(M)
        if found is None:
            return None
        X, S, refl = found
        return self._sum_over_strata(M, e, X, S, refl, "Generating")

    def _interpolate(self, M, e):
        if not self.interpolate or M.int_form() is None:
            return None
        c, samples = interpolation_oracle(M, e, budget=self.budget)
        return c, PlanNode("Interpolate", M.dims, e, c, {"samples": samples})

    # -- the stratum sum ----------------------------------------------------

    def _sum_over_strata(self, M, e, X, S, refl, kind, info=None):
        Q = M.quiver
        info = dict(info or {})
        info.update({"sub": list(X.dims), "quotient": list(S.dims)})
        extra = {}
        if refl is not None:
            XS, _, SX, Sq = refl.modules()
            if getattr(X, "tube", None) is not None and X.tube.level >= 2:
                prev = X.tube.chain[X.tube.level - 2]
                if prev.dims == XS.dims and is_isomorphic(prev, XS):
                    XS = prev
            extra = dict(X_S_counts=self.poly(XS), S_quot_counts=self.poly(Sq), S_X_dim=SX.dims)
            info.update({"X_S": list(XS.dims), "S^X": list(SX.dims)})
        total = ZERO
        children = []
        for g in _box(e, S.dims):
            f = tuple(a - b for a, b in zip(e, g))
            if any(x > d for x, d in zip(f, X.dims)):
                continue
            term = stratum_count_poly(self.poly(X), self.poly(S), f, g, Q, X.dims, **extra)
            if not term.is_zero():
                children.append(PlanNode("Stratum", M.dims, e, term, {"f": list(f), "g": list(g)},
                                         self._stratum_children(X, S, refl, f, g, extra)))
            total = total + term
        return total, PlanNode(kind, M.dims, e, total, info, children)

    def _stratum_children(self, X, S, refl, f, g, extra):
        out = [self.count(X, f)[1], self.count(S, g)[1]]
        return out


def count_poly(M, e, planner=None, seed=0):
    """Counting polynomial of Gr_e(M) and the plan that produced it."""
    planner = planner or Planner(seed=seed)
    return planner.count(M, e)


def euler_characteristic(M, e, planner=None):
    """chi(Gr_e M) over C: the counting polynomial at q = 1."""
    return count_poly(M, e, planner)[0](1)


def grassmannian_duality_check(M, e, budget=None):
    """|Gr_e(M)| = |Gr_{d-e}(DM)| over the prime field of M."""
    e = M.quiver.vec(e)
    a = count_subreps(M, e, budget=budget)
    b = count_subreps(dual(M), [d - x for d, x in zip(M.dims, e)], budget=budget)
    return a == b, a, b
