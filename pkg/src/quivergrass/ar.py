"""Projectives, injectives, the AR translate and what is built on it.

tau is computed from a minimal projective presentation
0 -> P1 -> P0 -> M -> 0: applying Hom(-, A) gives a map of projective
modules over the opposite quiver whose cokernel is the transpose Tr M,
and tau M = D Tr M.  tau^- is the same construction conjugated by duality.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .enumeration import all_subreps
from .errors import (BoundTooLarge, DimensionCapExceeded, ExtTooBig, InjectiveSummand,
                     NotARoot, NotBrick, NotQuasiSimple, PreconditionFailed,
                     ProjectiveInput, ProjectiveSummand, Undecided, WildQuiver)
from .linalg import QQ, GF, Matrix, PrimeField, complement_indices, row_space_basis
from .quiver import classify, defect, opposite, quadratic_form
from .rep import (DEFAULT_DIM_CAP, Morphism, Representation, SubrepWitness, _same,
                  cokernel, direct_sum, dual, ext1_dim, hom_basis, hom_dim, image_witness,
                  is_brick, is_isomorphic, kernel, quotient, ringel_phi, simple as _simple,
                  sub)


# ---------------------------------------------------------------------------
# projectives, injectives, simples
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def projective_paths(Q, k):
    """Paths starting at k as (arrow-id tuple, end vertex), shortest first."""
    k = Q.vertex(k)
    out = [((), k)]
    frontier = out[:]
    while frontier:
        nxt = []
        for p, v in frontier:
            for a in Q.arrows:
                if a.source == v:
                    nxt.append((p + (a.id,), a.target))
        out += nxt
        frontier = nxt
    return tuple(out)


def _basis_at(Q, k):
    by_vertex = {v: [] for v in Q.vertices}
    for p, v in projective_paths(Q, k):
        by_vertex[v].append(p)
    return by_vertex


@lru_cache(maxsize=None)
def projective(Q, k, field=QQ):
    """P_k: basis of (P_k)_v = paths k -> v, arrows act by composition."""
    k = Q.vertex(k)
    basis = _basis_at(Q, k)
    pos = {v: {p: j for j, p in enumerate(ps)} for v, ps in basis.items()}
    dims = [len(basis[v]) for v in Q.vertices]
    mats = []
    for a in Q.arrows:
        rows, cols = len(basis[a.target]), len(basis[a.source])
        m = [[0] * cols for _ in range(rows)]
        for j, p in enumerate(basis[a.source]):
            m[pos[a.target][p + (a.id,)]][j] = 1
        mats.append(m)
    return Representation.from_ints(Q, field, dims, mats)


@lru_cache(maxsize=None)
def injective(Q, k, field=QQ):
    """I_k = D(P_k of the opposite quiver)."""
    return dual(projective(opposite(Q), k, field))


def simple(Q, k, field=QQ):
    return _simple(Q, Q.vertex(k), field)


def _element_morphism(Q, k, N, x):
    """The map P_k -> N sending the trivial path to x in N_k."""
    basis = _basis_at(Q, k)
    P = projective(Q, k, N.field)
    comps = []
    for v in Q.vertices:
        cols = [N.path_matrix(p, k).apply(x) for p in basis[v]]
        d = N.dim_at(v)
        comps.append(Matrix.from_columns(N.field, cols, d) if cols else
                     Matrix(N.field, d, 0, [() for _ in range(d)], reduce=False))
    return Morphism(P, N, comps)


def top_generators(M):
    """(vertex, vector) pairs lifting a basis of M / rad M."""
    Q, F = M.quiver, M.field
    gens = []
    for v in Q.vertices:
        d = M.dim_at(v)
        rad = []
        for a in Q.arrows_to(v):
            rad.extend(M.mat(a.id).columns())
        for j in complement_indices(rad, d, F):
            gens.append((v, tuple(F.one if i == j else F.zero for i in range(d))))
    return gens


def projective_cover(M):
    """(P0, pi) with pi : P0 -> M a projective cover."""
    Q, F = M.quiver, M.field
    gens = top_generators(M)
    if not gens:
        Z = Representation.zero(Q, F)
        return Z, Morphism.zero(Z, M), []
    pieces = [_element_morphism(Q, v, M, x) for v, x in gens]
    P0 = direct_sum(*[f.source for f in pieces]) if len(pieces) > 1 else pieces[0].source
    comps = []
    for k in range(Q.n):
        cols = []
        for f in pieces:
            cols.extend(f.comps[k].columns())
        comps.append(Matrix.from_columns(F, cols, M.dims[k]) if cols else
                     Matrix(F, M.dims[k], 0, [() for _ in range(M.dims[k])], reduce=False))
    return P0, Morphism(P0, M, comps), [v for v, _ in gens]


def _transpose(M):
    """Tr M as a representation of the opposite quiver."""
    Q, F = M.quiver, M.field
    Qop = opposite(Q)
    P0, pi, tops = projective_cover(M)
    K, inc = kernel(pi)
    kgens = top_generators(K)
    if not kgens:
        return Representation.zero(Qop, F)
    # coordinates of the generators of K inside P0 = sum_s P_{tops[s]}
    blocks = []
    for j in range(Q.n):
        v = Q.vertices[j]
        off, layout = 0, []
        for s, i in enumerate(tops):
            paths = _basis_at(Q, i)[v]
            layout.append((s, off, paths))
            off += len(paths)
        blocks.append(layout)
    T0 = [projective(Qop, i, F) for i in tops]
    T1 = [projective(Qop, j, F) for j, _ in kgens]
    T1sum = direct_sum(*T1) if len(T1) > 1 else T1[0]
    # offsets of each T1 summand inside T1sum, per vertex
    t1off = []
    for k in range(Q.n):
        o, row = 0, []
        for R in T1:
            row.append(o)
            o += R.dims[k]
        t1off.append(row)
    pieces = []
    for s, i in enumerate(tops):
        # element of (T1sum)_i: sum over r of reversed paths i -> j_r weighted by coefficients
        ki = Qop.index[i]
        x = [F.zero] * T1sum.dims[ki]
        for r, (j, y) in enumerate(kgens):
            yy = inc.comp(j).apply(y)
            layout = blocks[Q.index[j]]
            _, off, paths = layout[s]
            op_basis = _basis_at(Qop, j)[i]
            op_pos = {p: n for n, p in enumerate(op_basis)}
            for n, p in enumerate(paths):
                c = yy[off + n]
                if c:
                    idx = t1off[ki][r] + op_pos[tuple(reversed(p))]
                    x[idx] = F.add(x[idx], c)
        pieces.append(_element_morphism(Qop, i, T1sum, tuple(x)))
    T0sum = direct_sum(*T0) if len(T0) > 1 else T0[0]
    comps = []
    for k in range(Q.n):
        cols = []
        for f in pieces:
            cols.extend(f.comps[k].columns())
        d = T1sum.dims[k]
        comps.append(Matrix.from_columns(F, cols, d) if cols else
                     Matrix(F, d, 0, [() for _ in range(d)], reduce=False))
    g = Morphism(T0sum, T1sum, comps)
    return cokernel(g)[0]


def has_projective_summand(M):
    Q = M.quiver
    return any(hom_dim(M, projective(Q, v, M.field)) for v in Q.vertices)


def has_injective_summand(M):
    Q = M.quiver
    return any(hom_dim(injective(Q, v, M.field), M) for v in Q.vertices)


@lru_cache(maxsize=4096)
def _tau(M):
    T = _transpose(M)
    return _plain(dual(T))


def _plain(M):
    # drop metadata so cached results never carry hints from other modules
    return Representation(M.quiver, M.field, M.dims, M.mats, zform=M.zform)


def tau(M, strict=True):
    """AR translate.  With strict=False projective summands are silently dropped."""
    if strict and has_projective_summand(M):
        raise ProjectiveSummand("tau of a module with a projective summand")
    if M.total_dim == 0:
        return M
    return _tau(_plain(M))


def tau_minus(M, strict=True):
    if strict and has_injective_summand(M):
        raise InjectiveSummand("tau^- of a module with an injective summand")
    if M.total_dim == 0:
        return M
    return dual(tau(dual(M), strict=False))


# ---------------------------------------------------------------------------
# extensions
# ---------------------------------------------------------------------------

@dataclass
class ExtensionData:
    """0 -> X -> Y -> S -> 0 with Y_a = [[X_a, zeta_a], [0, S_a]]."""
    sub: Representation
    quot: Representation
    middle: Representation
    cocycle: tuple
    inclusion: Morphism = None
    projection: Morphism = None

    def cocycle_vector(self):
        out = []
        for z in self.cocycle:
            for c in range(z.cols):
                out.extend(z.column(c))
        return out

    def is_split(self):
        phi = ringel_phi(self.quot, self.sub)
        z = self.cocycle_vector()
        if not z or all(x == 0 for x in z):
            return True
        F = self.sub.field
        r = phi.rank()
        aug = phi.hstack(Matrix(F, len(z), 1, [[x] for x in z], reduce=False))
        return aug.rank() == r


def extension_module(X, S, cocycle) -> ExtensionData:
    _same(X, S)
    Q, F = X.quiver, X.field
    if isinstance(cocycle, dict):
        cocycle = [cocycle[a.id] for a in Q.arrows]
    blocks, mats = [], []
    for a, Xa, Sa, z in zip(Q.arrows, X.mats, S.mats, cocycle):
        s, t = Q.index[a.source], Q.index[a.target]
        shape = (X.dims[t], S.dims[s])
        if not isinstance(z, Matrix):
            z = Matrix(F, shape[0], shape[1], z if shape[0] else [])
        if z.shape != shape:
            raise PreconditionFailed(f"cocycle block of {a.id!r} has shape {z.shape}, expected {shape}")
        blocks.append(z)
        top = [list(r1) + list(r2) for r1, r2 in zip(Xa.data, z.data)]
        bot = [[F.zero] * Xa.cols + list(r) for r in Sa.data]
        mats.append(Matrix(F, Xa.rows + Sa.rows, Xa.cols + Sa.cols, top + bot, reduce=False))
    dims = [x + s for x, s in zip(X.dims, S.dims)]
    Y = Representation(Q, F, dims, mats)
    inc = Morphism(X, Y, [Matrix(F, x + s, x, [[F.one if i == j else F.zero for j in range(x)]
                                                for i in range(x + s)], reduce=False)
                          for x, s in zip(X.dims, S.dims)])
    proj = Morphism(Y, S, [Matrix(F, s, x + s, [[F.one if j == x + i else F.zero for j in range(x + s)]
                                                 for i in range(s)], reduce=False)
                           for x, s in zip(X.dims, S.dims)])
    return ExtensionData(X, S, Y, tuple(blocks), inc, proj)


def _blocks_from_vector(X, S, vec):
    Q, F = X.quiver, X.field
    blocks, off = [], 0
    for a in Q.arrows:
        r, c = X.dims[Q.index[a.target]], S.dims[Q.index[a.source]]
        chunk = vec[off:off + r * c]
        off += r * c
        blocks.append(Matrix(F, r, c, [[chunk[j * r + i] for j in range(c)] for i in range(r)],
                             reduce=False))
    return blocks


def generating_extension(S, X) -> ExtensionData:
    """A generator of Ext^1(S, X): split if Ext vanishes, else the first non-image unit vector."""
    _same(X, S)
    F = X.field
    phi = ringel_phi(S, X)
    rank = phi.rank()
    ext = phi.rows - rank
    if ext >= 2:
        raise ExtTooBig(f"dim Ext^1(S, X) = {ext}")
    vec = [F.zero] * phi.rows
    if ext == 1:
        cols = phi.columns()
        for j in range(phi.rows):
            unit = tuple(F.one if i == j else F.zero for i in range(phi.rows))
            if len(row_space_basis(cols + [unit], F)) > rank:
                vec = list(unit)
                break
    return extension_module(X, S, _blocks_from_vector(X, S, vec))


def extension_from_mono(iota: Morphism):
    """Present Y = target of a mono iota : X -> Y as an extension of S = coker iota by X.

    Returns (ExtensionData whose middle is isomorphic to Y, S, projection).
    The cocycle is zeta_a = iota^{-1}(Y_a sigma_s - sigma_t S_a) for a
    vertex-wise section sigma of the projection.
    """
    X, Y = iota.source, iota.target
    Q, F = Y.quiver, Y.field
    S, pr = cokernel(iota)
    sigmas = []
    for k in range(Q.n):
        sol = pr.comps[k].solve_matrix(Matrix.identity(F, S.dims[k]))
        sigmas.append(sol)
    blocks = []
    for a, Ya, Sa in zip(Q.arrows, Y.mats, S.mats):
        s, t = Q.index[a.source], Q.index[a.target]
        diff = Ya @ sigmas[s] - sigmas[t] @ Sa
        z = iota.comps[t].solve_matrix(diff)
        assert z is not None, "defect of the section does not land in the submodule"
        blocks.append(z)
    return extension_module(X, S, blocks)


def almost_split_sequence(M) -> ExtensionData:
    if has_projective_summand(M):
        raise ProjectiveInput("M has a projective summand")
    if not is_brick(M):
        raise NotBrick("almost split sequences are only built for bricks")
    T = tau(M)
    ext = generating_extension(M, T)
    assert not ext.is_split(), "almost split sequence came out split"
    return ext


# ---------------------------------------------------------------------------
# Ringel reflections
# ---------------------------------------------------------------------------

@dataclass
class ReflectionPair:
    X: Representation
    S: Representation
    X_S: SubrepWitness
    S_X: SubrepWitness
    f: Morphism = None
    g: Morphism = None

    def modules(self):
        """(X_S, X/X_S, S^X, S/S^X) as representations."""
        return (sub(self.X, self.X_S)[0], quotient(self.X, self.X_S)[0],
                sub(self.S, self.S_X)[0], quotient(self.S, self.S_X)[0])


@lru_cache(maxsize=2048)
def _reflections(X, S):
    tS = tau(S, strict=False)
    H = hom_basis(X, tS)
    assert len(H) == 1, "AR formula gives a one dimensional Hom(X, tau S)"
    f = H[0]
    XS = SubrepWitness(X, [m.kernel_basis() for m in f.comps], check=False)
    tX = tau_minus(X, strict=False)
    G = hom_basis(tX, S)
    assert len(G) == 1, "AR formula gives a one dimensional Hom(tau^- X, S)"
    g = G[0]
    SX = image_witness(g)
    return ReflectionPair(X, S, XS, SX, f, g)


def ringel_reflections(X, S) -> ReflectionPair:
    """X_S = ker(X -> tau S) and S^X = im(tau^- X -> S) for [S, X]^1 = 1."""
    _same(X, S)
    e = ext1_dim(S, X)
    if e != 1:
        raise PreconditionFailed(f"reflections need dim Ext^1(S, X) = 1, got {e}")
    return _reflections(_plain(X), _plain(S))


def _witness_of(M, bases):
    return SubrepWitness(M, [[tuple(r) for r in b] for b in bases], check=False)


def reflections_by_search(X, S, budget=None) -> ReflectionPair:
    """X_S and S^X straight from their definition, by enumerating all subreps over F_p."""
    _same(X, S)
    if not isinstance(X.field, PrimeField):
        raise PreconditionFailed("subrep search needs a prime field")
    if ext1_dim(S, X) != 1:
        raise PreconditionFailed("reflections need dim Ext^1(S, X) = 1")
    cands = []
    for e, subs in all_subreps(X, budget).items():
        for bases in subs:
            W = _witness_of(X, bases)
            if ext1_dim(S, quotient(X, W)[0]) == 1:
                cands.append(W)
    top = [W for W in cands if all(W.contains(V) for V in cands)]
    if len(top) != 1:
        raise AssertionError("no maximum among subreps N with [S, X/N]^1 = 1")
    cands = []
    for e, subs in all_subreps(S, budget).items():
        for bases in subs:
            W = _witness_of(S, bases)
            if ext1_dim(sub(S, W)[0], X) == 1:
                cands.append(W)
    bottom = [W for W in cands if all(V.contains(W) for V in cands)]
    if len(bottom) != 1:
        raise AssertionError("no minimum among subreps N with [N, X]^1 = 1")
    return ReflectionPair(X, S, top[0], bottom[0])


# ---------------------------------------------------------------------------
# catalogs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ARCoordinate:
    kind: str                   # "preproj", "preinj" or "regular"
    k: int = 0
    vertex: object = None
    tube: str | None = None
    index: int | None = None
    length: int | None = None

    def __str__(self):
        if self.kind == "regular":
            return f"regular:tube={self.tube},qs={self.index},n={self.length}"
        return f"{self.kind}:k={self.k},i={self.vertex}"

    @classmethod
    def parse(cls, text, Q=None):
        kind, _, rest = text.partition(":")
        kv = dict(part.split("=", 1) for part in rest.split(",") if part)
        if kind in ("preproj", "preinj"):
            v = kv["i"]
            if Q is not None:
                v = Q.vertex(v)
            return cls(kind, int(kv.get("k", 0)), v)
        if kind == "regular":
            return cls(kind, tube=kv.get("tube"), index=int(kv.get("qs", 0)),
                       length=int(kv.get("n", 1)))
        raise PreconditionFailed(f"bad coordinate {text!r}")


@dataclass
class CatalogEntry:
    coord: ARCoordinate
    module: Representation

    def to_json(self, Q):
        try:
            d = defect(Q, self.module.dims)
        except Exception:
            d = None
        return {"coordinate": str(self.coord),
                "dims": list(self.module.dims),
                "rigid": ext1_dim(self.module, self.module) == 0,
                "defect": d}


def is_injective_indecomposable(M):
    return has_injective_summand(M)


def _same_class(A, B):
    # preprojective indecomposables are determined by their dimension vectors,
    # so an undecided search between equal dimension vectors counts as a match
    try:
        return is_isomorphic(A, B)
    except Undecided:
        return True


@lru_cache(maxsize=None)
def _knit(Q, bound, field, cap):
    cls = classify(Q)
    if bound is None and not cls.is_dynkin:
        if cls.kind == "Wild":
            raise WildQuiver("knitting a wild quiver needs a bound")
        raise PreconditionFailed("knitting an affine quiver needs a bound")
    entries = []
    layer = [(v, projective(Q, v, field)) for v in Q.vertices]
    k = 0
    while layer:
        nxt = []
        for v, M in layer:
            if any(e.module.dims == M.dims and _same_class(e.module, M) for e in entries):
                continue
            M = _plain(M)
            M.coord = ARCoordinate("preproj", k, v)
            entries.append(CatalogEntry(M.coord, M))
            if bound is not None and k >= bound:
                continue
            if has_injective_summand(M):
                continue
            try:
                nxt.append((v, tau_minus(M)))
            except DimensionCapExceeded as exc:
                raise BoundTooLarge(str(exc)) from exc
        for _, N in nxt:
            if N.total_dim > cap:
                raise BoundTooLarge(f"module of dimension {N.total_dim} beyond cap {cap}")
        layer = nxt
        k += 1
    return tuple(entries)


def knit_preprojective(Q, bound=None, field=QQ, cap=DEFAULT_DIM_CAP):
    """tau^{-k} P_i for k <= bound (all of them for Dynkin quivers)."""
    return list(_knit(Q, bound, field, cap))


def knit_preinjective(Q, bound=None, field=QQ, cap=DEFAULT_DIM_CAP):
    """tau^k I_i, obtained from the opposite quiver by duality."""
    out = []
    for e in _knit(opposite(Q), bound, field, cap):
        M = dual(e.module)
        M.coord = ARCoordinate("preinj", e.coord.k, e.coord.vertex)
        out.append(CatalogEntry(M.coord, M))
    return out


def dynkin_catalog(Q, field=QQ):
    if not classify(Q).is_dynkin:
        raise PreconditionFailed("complete catalogs exist for Dynkin quivers only")
    return knit_preprojective(Q, None, field)


def indecomposable_of_root(Q, root, field=QQ):
    cls = classify(Q)
    if not cls.is_dynkin:
        raise PreconditionFailed("roots classify indecomposables for Dynkin quivers only")
    root = Q.vec(root)
    if any(x < 0 for x in root) or not any(root) or quadratic_form(Q, root) != 1:
        raise NotARoot(f"{root} is not a positive root (q = {quadratic_form(Q, root)})")
    for e in dynkin_catalog(Q, field):
        if e.module.dims == root:
            return e.module
    raise NotARoot(f"no indecomposable of dimension {root}")


def catalog_json(entries, Q):
    return json.dumps([e.to_json(Q) for e in entries], sort_keys=True)


# ---------------------------------------------------------------------------
# tubes
# ---------------------------------------------------------------------------

def _brute_fields(M):
    if isinstance(M.field, PrimeField):
        return [M]
    if M.zform is None:
        raise PreconditionFailed("quasi-simplicity over Q needs an integer form")
    return [M.reduce(GF(2)), M.reduce(GF(3))]


def is_quasi_simple(S):
    """Defect 0, brick, and no proper nonzero subrep of defect 0."""
    Q = S.quiver
    if not classify(Q).is_affine:
        raise PreconditionFailed("quasi-simplicity is defined for affine quivers")
    if S.total_dim == 0 or defect(Q, S.dims) != 0 or not is_brick(S):
        return False
    for T in _brute_fields(S):
        for e, subs in all_subreps(T).items():
            if e == T.dims or not any(e):
                continue
            if subs and defect(Q, e) == 0:
                return False
    return True


def tau_period(S, cap=6):
    cur = S
    for n in range(1, cap + 1):
        cur = tau(cur, strict=False)
        if cur.dims == S.dims and is_isomorphic(cur, S):
            return n
    return None


@dataclass
class TubeInfo:
    level: int
    chain: tuple            # R_1, ..., R_level
    tops: tuple             # regular tops tau^{-(k-1)} S, k = 1..level
    extension: ExtensionData = None   # 0 -> R_{level-1} -> R_level -> top -> 0
    period: int | None = None


def tube_module(Q, quasi_simple, n):
    """R_n: iterated generating extensions of the tau^- translates of S by R_{k-1}."""
    S = quasi_simple
    if S.quiver != Q:
        raise PreconditionFailed("quasi-simple lives on another quiver")
    if n < 1:
        raise PreconditionFailed("tube length must be positive")
    if not is_quasi_simple(S):
        raise NotQuasiSimple("input is not a quasi-simple regular module")
    period = tau_period(S)
    R1 = _plain(S)
    R1.tube = TubeInfo(1, (R1,), (R1,), None, period)
    chain, tops = [R1], [R1]
    for k in range(2, n + 1):
        top = tau_minus(tops[-1])
        ext = generating_extension(top, chain[-1])
        if ext.is_split():
            raise PreconditionFailed("tube step produced a split extension")
        R = ext.middle
        tops.append(top)
        chain.append(R)
        R.tube = TubeInfo(k, tuple(chain), tuple(tops), ext, period)
    R = chain[-1]
    total = [sum(t.dims[i] for t in tops) for i in range(Q.n)]
    assert list(R.dims) == total, "tube module dimension differs from its composition factors"
    return R
