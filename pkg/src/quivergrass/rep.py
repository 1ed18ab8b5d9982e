"""Quiver representations over an exact field.

Hom and Ext^1 are read off the Ringel map

    Phi_M^N : (f_i)_i  |->  (N_a f_s(a) - f_t(a) M_a)_a

whose kernel is Hom(M, N) and whose cokernel is Ext^1(M, N).
"""
from __future__ import annotations

import itertools
import json
import random
from functools import lru_cache

from .errors import (DimensionCapExceeded, FieldMismatch, NotClosedUnderArrows,
                     QuiverMismatch, ShapeMismatch, Undecided)
from .linalg import (QQ, Matrix, PrimeField, complement_indices, field_from_json,
                     row_space_basis)
from .quiver import Quiver, euler_form, opposite, validate_quiver

DEFAULT_DIM_CAP = 64


class Representation:
    """Matrices M_a (rows = dim at target, cols = dim at source) over a field.

    ``zform`` optionally holds integer matrices from which the module can be
    rebuilt over any field; it is set automatically by :meth:`from_ints`.
    ``summands`` records a known direct sum decomposition and ``tube`` the
    regular filtration of a tube module; both are hints for the counting
    planner and never affect equality.
    """

    __slots__ = ("quiver", "field", "dims", "mats", "zform", "summands", "tube",
                 "coord", "_hash")

    def __init__(self, quiver: Quiver, field, dims, matrices, *, zform=None,
                 cap=DEFAULT_DIM_CAP):
        self.quiver = quiver
        self.field = field
        self.dims = quiver.vec(dims)
        if any(d < 0 for d in self.dims):
            raise ShapeMismatch("negative dimension")
        if cap is not None and sum(self.dims) > cap:
            raise DimensionCapExceeded(f"total dimension {sum(self.dims)} exceeds cap {cap}")
        if isinstance(matrices, dict):
            matrices = [matrices[a.id] for a in quiver.arrows]
        matrices = list(matrices)
        if len(matrices) != len(quiver.arrows):
            raise ShapeMismatch("one matrix per arrow expected")
        mats = []
        for a, m in zip(quiver.arrows, matrices):
            r, c = self.dims[quiver.index[a.target]], self.dims[quiver.index[a.source]]
            if isinstance(m, Matrix):
                if m.field != field:
                    raise FieldMismatch(f"matrix of arrow {a.id!r} over {m.field!r}")
                if m.shape != (r, c):
                    raise ShapeMismatch(f"arrow {a.id!r}: shape {m.shape}, expected {(r, c)}")
            else:
                m = Matrix(field, r, c, [list(row) for row in m] if r else [])
            mats.append(m)
        self.mats = tuple(mats)
        self.zform = zform
        self.summands = None
        self.tube = None
        self.coord = None
        self._hash = None

    # -- constructors --------------------------------------------------------
    @classmethod
    def from_ints(cls, quiver, field, dims, matrices, **kw):
        if isinstance(matrices, dict):
            matrices = [matrices[a.id] for a in quiver.arrows]
        ints = tuple(tuple(tuple(int(x) for x in row) for row in m) for m in matrices)
        return cls(quiver, field, dims, matrices, zform=ints, **kw)

    @classmethod
    def zero(cls, quiver, field):
        dims = (0,) * quiver.n
        return cls(quiver, field, dims, [[] for _ in quiver.arrows], zform=tuple(() for _ in quiver.arrows))

    # -- basics --------------------------------------------------------------
    @property
    def dim_vector(self):
        return self.dims

    @property
    def total_dim(self):
        return sum(self.dims)

    def is_zero(self):
        return self.total_dim == 0

    def dim_at(self, v):
        return self.dims[self.quiver.index[v]]

    def mat(self, aid):
        return self.mats[self.quiver.arrow_index[aid]]

    def path_matrix(self, path, start):
        """Matrix of a path (sequence of arrow ids, first arrow first) starting at ``start``."""
        F = self.field
        cur = Matrix.identity(F, self.dim_at(start))
        for aid in path:
            cur = self.mat(aid) @ cur
        return cur

    def int_form(self):
        """Integer matrices defining the module, if known.

        Besides an explicit ``zform``, a module over Q whose entries are all
        integers is its own integer form.
        """
        if self.zform is not None:
            return self.zform
        if self.field == QQ and all(x.denominator == 1 for m in self.mats
                                    for row in m.data for x in row):
            return tuple(tuple(tuple(int(x) for x in row) for row in m.data) for m in self.mats)
        return None

    def reduce(self, field):
        """The module with the same integer matrices over another field."""
        z = self.int_form()
        if z is None:
            raise ShapeMismatch("no integer form available")
        return Representation(self.quiver, field, self.dims, [list(map(list, m)) for m in z],
                              zform=z)

    def __eq__(self, other):
        return (isinstance(other, Representation) and self.quiver == other.quiver
                and self.field == other.field and self.dims == other.dims
                and self.mats == other.mats)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.quiver, self.field, self.dims, self.mats))
        return self._hash

    def __repr__(self):
        mats = {a.id: m.to_lists() for a, m in zip(self.quiver.arrows, self.mats)}
        return f"Representation(dims={self.dims}, {mats})"

    def to_json(self, inline_quiver=True):
        out = {"field": self.field.to_json(),
               "dims": {str(v): d for v, d in zip(self.quiver.vertices, self.dims)},
               "matrices": {str(a.id): m.to_lists() for a, m in zip(self.quiver.arrows, self.mats)}}
        if inline_quiver:
            out["quiver"] = self.quiver.to_json()
        return out

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def rep_from_json(raw, quiver=None):
    if isinstance(raw, str):
        raw = json.loads(raw)
    Q = validate_quiver(raw["quiver"]) if "quiver" in raw else quiver
    if Q is None:
        raise ShapeMismatch("representation JSON needs a quiver")
    F = field_from_json(raw.get("field", {"type": "Q"}))
    dims = Q.vec(raw["dims"])
    mats = raw.get("matrices", {})
    lists = []
    for a in Q.arrows:
        m = mats.get(str(a.id), mats.get(a.id))
        if m is None:
            m = [[0] * dims[Q.index[a.source]] for _ in range(dims[Q.index[a.target]])]
        lists.append(m)
    if all(isinstance(x, int) for m in lists for row in m for x in row):
        return Representation.from_ints(Q, F, dims, lists)
    return Representation(Q, F, dims, [[[F(x) for x in row] for row in m] for m in lists])


def _same(M, N):
    if M.quiver != N.quiver:
        raise QuiverMismatch("representations live on different quivers")
    if M.field != N.field:
        raise FieldMismatch(f"{M.field!r} vs {N.field!r}")


def dual(M: Representation) -> Representation:
    """The dual module on the opposite quiver (transposed matrices)."""
    Qop = opposite(M.quiver)
    z = None
    if M.zform is not None:
        z = tuple(tuple(zip(*m)) if m else tuple(() for _ in range(M.dims[M.quiver.index[a.source]]))
                  for a, m in zip(M.quiver.arrows, M.zform))
    D = Representation(Qop, M.field, M.dims, [m.T for m in M.mats], zform=z)
    if M.summands is not None:
        D.summands = tuple(dual(S) for S in M.summands)
    return D


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------

class Morphism:
    """Vertex-wise matrices f_i : M_i -> N_i (vertex order of the quiver)."""

    __slots__ = ("source", "target", "comps")

    def __init__(self, source, target, comps, check=False):
        _same(source, target)
        self.source = source
        self.target = target
        Q = source.quiver
        if isinstance(comps, dict):
            comps = [comps[v] for v in Q.vertices]
        comps = list(comps)
        out = []
        for k, m in enumerate(comps):
            shape = (target.dims[k], source.dims[k])
            if not isinstance(m, Matrix):
                m = Matrix(source.field, shape[0], shape[1], m if shape[0] else [])
            if m.shape != shape:
                raise ShapeMismatch(f"component {k}: {m.shape} vs {shape}")
            out.append(m)
        self.comps = tuple(out)
        if check and not self.is_valid():
            raise ShapeMismatch("components do not commute with the arrow maps")

    @classmethod
    def identity(cls, M):
        return cls(M, M, [Matrix.identity(M.field, d) for d in M.dims])

    @classmethod
    def zero(cls, M, N):
        return cls(M, N, [Matrix.zeros(M.field, N.dims[k], M.dims[k]) for k in range(M.quiver.n)])

    def comp(self, v):
        return self.comps[self.source.quiver.index[v]]

    def is_valid(self):
        Q = self.source.quiver
        for a, Ma, Na in zip(Q.arrows, self.source.mats, self.target.mats):
            s, t = Q.index[a.source], Q.index[a.target]
            if Na @ self.comps[s] != self.comps[t] @ Ma:
                return False
        return True

    def __add__(self, other):
        return Morphism(self.source, self.target, [a + b for a, b in zip(self.comps, other.comps)])

    def scale(self, c):
        return Morphism(self.source, self.target, [a.scale(c) for a in self.comps])

    def compose(self, other):
        """self o other."""
        return Morphism(other.source, self.target, [a @ b for a, b in zip(self.comps, other.comps)])

    def __matmul__(self, other):
        return self.compose(other)

    def is_zero(self):
        return all(m.is_zero() for m in self.comps)

    def ranks(self):
        return tuple(m.rank() for m in self.comps)

    def is_mono(self):
        return all(r == m.cols for r, m in zip(self.ranks(), self.comps))

    def is_epi(self):
        return all(r == m.rows for r, m in zip(self.ranks(), self.comps))

    def is_iso(self):
        return all(m.rows == m.cols and m.rank() == m.rows for m in self.comps)

    def __eq__(self, other):
        return (isinstance(other, Morphism) and self.source == other.source
                and self.target == other.target and self.comps == other.comps)

    def __hash__(self):
        return hash(self.comps)

    def __repr__(self):
        return f"Morphism({[m.to_lists() for m in self.comps]})"


# ---------------------------------------------------------------------------
# the Ringel map
# ---------------------------------------------------------------------------

def _offsets(sizes):
    out, o = [], 0
    for s in sizes:
        out.append(o)
        o += s
    return out, o


def ringel_phi(M: Representation, N: Representation) -> Matrix:
    """Block matrix of Phi_M^N in the column-major basis of each Hom block."""
    _same(M, N)
    Q, F = M.quiver, M.field
    z = F.zero
    dom_off, ndom = _offsets([n * m for n, m in zip(N.dims, M.dims)])
    rows = []
    for a, Ma, Na in zip(Q.arrows, M.mats, N.mats):
        s, t = Q.index[a.source], Q.index[a.target]
        ms, mt = M.dims[s], M.dims[t]
        ns, nt = N.dims[s], N.dims[t]
        Nd, Md = Na.data, Ma.data
        for c in range(ms):
            for r in range(nt):
                row = [z] * ndom
                # N_a f_s
                base = dom_off[s] + c * ns
                for k in range(ns):
                    x = Nd[r][k]
                    if x:
                        row[base + k] = x
                # - f_t M_a
                base = dom_off[t] + r
                for k in range(mt):
                    x = Md[k][c]
                    if x:
                        row[base + k * nt] = F.neg(x)
                rows.append(row)
    return Matrix(F, len(rows), ndom, rows, reduce=False)


def _vector_to_blocks(vec, rows, cols):
    """Column-major block coordinates to a list of matrix rows."""
    return [[vec[c * rows + r] for c in range(cols)] for r in range(rows)]


def _morphism_from_vector(M, N, vec):
    off, _ = _offsets([n * m for n, m in zip(N.dims, M.dims)])
    comps = []
    for k in range(M.quiver.n):
        n, m = N.dims[k], M.dims[k]
        block = vec[off[k]:off[k] + n * m]
        comps.append(Matrix(M.field, n, m, _vector_to_blocks(block, n, m), reduce=False))
    return Morphism(M, N, comps)


@lru_cache(maxsize=8192)
def _hom_data(M, N):
    phi = ringel_phi(M, N)
    ker = phi.kernel_basis()
    rank = phi.cols - len(ker)
    ext = phi.rows - rank
    assert len(ker) - ext == euler_form(M.quiver, M.dims, N.dims), "Euler form identity failed"
    return tuple(ker), ext


def hom_vectors(M, N):
    _same(M, N)
    return _hom_data(M, N)[0]


def hom_basis(M, N):
    return [_morphism_from_vector(M, N, v) for v in hom_vectors(M, N)]


def hom_dim(M, N) -> int:
    return len(hom_vectors(M, N))


def ext1_dim(M, N) -> int:
    _same(M, N)
    return _hom_data(M, N)[1]


def is_rigid(M) -> bool:
    return ext1_dim(M, M) == 0


def is_brick(M) -> bool:
    return hom_dim(M, M) == 1


def combine(M, N, vectors, coeffs):
    """The morphism sum_j coeffs[j] * vectors[j] (vectors in Hom coordinates)."""
    F = M.field
    n = len(vectors[0]) if vectors else 0
    acc = [F.zero] * n
    for c, v in zip(coeffs, vectors):
        if c:
            acc = [F.add(x, F.mul(c, y)) for x, y in zip(acc, v)]
    return _morphism_from_vector(M, N, acc)


# ---------------------------------------------------------------------------
# sums, subobjects, quotients
# ---------------------------------------------------------------------------

def _block_diag(F, A, B):
    top = [list(r) + [F.zero] * B.cols for r in A.data]
    bot = [[F.zero] * A.cols + list(r) for r in B.data]
    return Matrix(F, A.rows + B.rows, A.cols + B.cols, top + bot, reduce=False)


def direct_sum(*modules) -> Representation:
    """Block diagonal sum; the list of (flattened) summands is recorded."""
    if not modules:
        raise ShapeMismatch("empty direct sum")
    M = modules[0]
    parts = []
    for X in modules:
        _same(M, X)
        parts.extend(X.summands if X.summands is not None else (X,))
    parts = [X for X in parts if not X.is_zero()]
    Q, F = M.quiver, M.field
    if not parts:
        return Representation.zero(Q, F)
    if len(parts) == 1:
        return parts[0]
    dims = [sum(X.dims[k] for X in parts) for k in range(Q.n)]
    mats = []
    for j in range(len(Q.arrows)):
        acc = parts[0].mats[j]
        for X in parts[1:]:
            acc = _block_diag(F, acc, X.mats[j])
        mats.append(acc)
    z = _sum_zforms(Q, parts) if all(X.zform is not None for X in parts) else None
    D = Representation(Q, F, dims, mats, zform=z)
    D.summands = tuple(parts)
    return D


def _sum_zforms(Q, parts):
    out = []
    for j, a in enumerate(Q.arrows):
        s = Q.index[a.source]
        cols = sum(X.dims[s] for X in parts)
        rows = []
        off = 0
        for X in parts:
            for r in X.zform[j]:
                rows.append(tuple([0] * off + list(r) + [0] * (cols - off - X.dims[s])))
            off += X.dims[s]
        out.append(tuple(rows))
    return tuple(out)


class SubrepWitness:
    """Subspaces U_i of M_i (columns of ``bases[i]``) closed under all arrows."""

    __slots__ = ("ambient", "bases")

    def __init__(self, ambient, bases, check=True):
        self.ambient = ambient
        Q, F = ambient.quiver, ambient.field
        if isinstance(bases, dict):
            bases = [bases[v] for v in Q.vertices]
        clean = []
        for k, b in enumerate(bases):
            d = ambient.dims[k]
            if isinstance(b, Matrix):
                vecs = b.columns()
            else:
                vecs = [tuple(F(x) for x in v) for v in b]
            if any(len(v) != d for v in vecs):
                raise ShapeMismatch(f"basis vectors at vertex {Q.vertices[k]!r} must have length {d}")
            vecs = row_space_basis(vecs, F)
            clean.append(Matrix.from_columns(F, vecs, d) if vecs else
                         Matrix(F, d, 0, [() for _ in range(d)], reduce=False))
        self.bases = tuple(clean)
        if check and not self.is_closed():
            raise NotClosedUnderArrows("subspaces are not closed under the arrow maps")

    @property
    def dims(self):
        return tuple(b.cols for b in self.bases)

    def is_closed(self):
        Q, F = self.ambient.quiver, self.ambient.field
        for a, Ma in zip(Q.arrows, self.ambient.mats):
            s, t = Q.index[a.source], Q.index[a.target]
            img = (Ma @ self.bases[s]).columns()
            if not img:
                continue
            U = self.bases[t].columns()
            if len(row_space_basis(U + img, F)) != len(U):
                return False
        return True

    def key(self):
        """Canonical hashable form (reduced echelon rows per vertex)."""
        return tuple(tuple(b.columns()) for b in self.bases)

    def __eq__(self, other):
        return isinstance(other, SubrepWitness) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def contains(self, other):
        F = self.ambient.field
        for A, B in zip(self.bases, other.bases):
            U = A.columns()
            if len(row_space_basis(U + B.columns(), F)) != len(U):
                return False
        return True

    @classmethod
    def full(cls, M):
        F = M.field
        return cls(M, [Matrix.identity(F, d) for d in M.dims], check=False)

    @classmethod
    def zero(cls, M):
        F = M.field
        return cls(M, [Matrix(F, d, 0, [() for _ in range(d)], reduce=False) for d in M.dims],
                   check=False)

    def __repr__(self):
        return f"SubrepWitness(dims={self.dims})"


def sub(M, W: SubrepWitness):
    """The subrepresentation on the witness bases, with its inclusion."""
    Q, F = M.quiver, M.field
    mats = []
    for a, Ma in zip(Q.arrows, M.mats):
        s, t = Q.index[a.source], Q.index[a.target]
        X = W.bases[t].solve_matrix(Ma @ W.bases[s])
        if X is None:
            raise NotClosedUnderArrows(f"arrow {a.id!r} leaves the subspace")
        mats.append(X)
    U = Representation(Q, F, W.dims, mats)
    return U, Morphism(U, M, list(W.bases))


def _adapted_basis(F, U, d):
    comp = complement_indices(U.columns(), d, F)
    cols = U.columns() + [tuple(F.one if i == j else F.zero for i in range(d)) for j in comp]
    B = Matrix.from_columns(F, cols, d) if cols else Matrix(F, 0, 0, [], reduce=False)
    return B, len(comp)


def quotient(M, W: SubrepWitness):
    """M/U with quotient bases given by the pivot complement, and the projection."""
    Q, F = M.quiver, M.field
    inv, qdims = [], []
    for k, U in enumerate(W.bases):
        d = M.dims[k]
        B, c = _adapted_basis(F, U, d)
        Binv = B.inverse() if d else B
        inv.append(Binv.submatrix(range(d - c, d), range(d)))
        qdims.append(c)
    mats = []
    for a, Ma in zip(Q.arrows, M.mats):
        s, t = Q.index[a.source], Q.index[a.target]
        # lift of the quotient basis at s: the complement unit vectors
        d = M.dims[s]
        comp = complement_indices(W.bases[s].columns(), d, F)
        lift = Matrix(F, d, len(comp), [[F.one if i == j else F.zero for j in comp] for i in range(d)],
                      reduce=False)
        mats.append(inv[t] @ (Ma @ lift))
    Qm = Representation(Q, F, qdims, mats)
    return Qm, Morphism(M, Qm, inv)


def kernel(f: Morphism):
    W = SubrepWitness(f.source, [m.kernel_basis() for m in f.comps], check=False)
    return sub(f.source, W)


def image_witness(f: Morphism):
    return SubrepWitness(f.target, [m.image_basis() for m in f.comps], check=False)


def image(f: Morphism):
    return sub(f.target, image_witness(f))


def cokernel(f: Morphism):
    return quotient(f.target, image_witness(f))


def witness_from_morphism_image(f: Morphism):
    return image_witness(f)


# ---------------------------------------------------------------------------
# isomorphism and decomposition
# ---------------------------------------------------------------------------

ISO_BUDGET = 1 << 14


def is_isomorphic(M, N, budget=ISO_BUDGET, trials=20, seed=0) -> bool:
    """Certificate based isomorphism test.

    An invertible element of Hom(M, N) proves isomorphism.  Over F_p an
    exhaustive search within ``budget`` is a proof of non-isomorphism;
    otherwise :class:`Undecided` is raised.
    """
    _same(M, N)
    if M.dims != N.dims:
        return False
    if M.total_dim == 0:
        return True
    H = hom_vectors(M, N)
    if not H:
        return False
    if len(H) != hom_dim(M, M) or len(H) != hom_dim(N, N):
        return False
    if ext1_dim(M, M) != ext1_dim(N, N):
        return False
    F = M.field
    k = len(H)

    def test(coeffs):
        return combine(M, N, H, coeffs).is_iso()

    one = F.one
    for size in (1, 2, 3):
        if size > k:
            break
        combos = itertools.combinations(range(k), size)
        for idx in itertools.islice(combos, 2000):
            coeffs = [F.zero] * k
            for j in idx:
                coeffs[j] = one
            if test(coeffs):
                return True
    if isinstance(F, PrimeField) and F.p ** k <= budget:
        for coeffs in itertools.product(range(F.p), repeat=k):
            if any(coeffs) and test(list(coeffs)):
                return True
        return False
    rng = random.Random(seed)
    for _ in range(max(trials, 200 if isinstance(F, PrimeField) else trials)):
        if test([F.random_element(rng) for _ in range(k)]):
            return True
    raise Undecided("no invertible morphism found within budget")


def _power(m: Matrix, n: int) -> Matrix:
    result = Matrix.identity(m.field, m.rows)
    base = m
    while n:
        if n & 1:
            result = result @ base
        base = base @ base
        n >>= 1
    return result


def fitting_split(M, budget=4096, trials=64, seed=0):
    """Try to split M = Ker(phi^n) + Im(phi^n) for an endomorphism phi.

    Returns ``(A, B, certified)``: a pair of nonzero summands, or
    ``(None, None, certified)`` when no splitting endomorphism was found.
    ``certified`` is True when the search was exhaustive, i.e. M is then
    proven indecomposable.
    """
    if M.total_dim == 0:
        return None, None, True
    E = hom_vectors(M, M)
    if len(E) <= 1:
        return None, None, True
    F = M.field
    n = M.total_dim
    k = len(E)

    def attempt(coeffs):
        phi = combine(M, M, E, coeffs)
        psi = [_power(m, n) for m in phi.comps]
        if all(m.is_zero() for m in psi):
            return None
        if all(m.rank() == m.rows for m in psi):
            return None
        g = Morphism(M, M, psi)
        A, _ = kernel(g)
        B, _ = image(g)
        return A, B

    for j in range(k):
        coeffs = [F.zero] * k
        coeffs[j] = F.one
        res = attempt(coeffs)
        if res:
            return res[0], res[1], False
    if isinstance(F, PrimeField) and F.p ** k <= budget:
        for coeffs in itertools.product(range(F.p), repeat=k):
            if any(coeffs):
                res = attempt(list(coeffs))
                if res:
                    return res[0], res[1], False
        return None, None, True
    rng = random.Random(seed)
    for _ in range(trials):
        res = attempt([F.random_element(rng) for _ in range(k)])
        if res:
            return res[0], res[1], False
    return None, None, False


def indecomposable_summands(M, **kw):
    """List of summands, each indecomposable unless the search was inconclusive."""
    if M.total_dim == 0:
        return []
    if M.summands is not None and len(M.summands) > 1:
        out = []
        for S in M.summands:
            out.extend(indecomposable_summands(S, **kw))
        return out
    A, B, _ = fitting_split(M, **kw)
    if A is None:
        return [M]
    return indecomposable_summands(A, **kw) + indecomposable_summands(B, **kw)


def is_indecomposable(M, **kw):
    """True/False when decided, None when the random search was inconclusive."""
    if M.total_dim == 0:
        return False
    A, _, certified = fitting_split(M, **kw)
    if A is not None:
        return False
    return True if certified else None


def restrict(M, vertices):
    """Restriction of M to the full subquiver on ``vertices`` (no connectivity check)."""
    Q = M.quiver
    keep = [v for v in Q.vertices if v in set(vertices)]
    arrows = [a for a in Q.arrows if a.source in keep and a.target in keep]
    Qs = Quiver(keep, arrows)
    mats = [M.mat(a.id) for a in arrows]
    z = None
    if M.zform is not None:
        z = tuple(M.zform[Q.arrow_index[a.id]] for a in arrows)
    return Representation(Qs, M.field, [M.dim_at(v) for v in keep], mats, zform=z)


def support_components(M):
    """Connected components (vertex lists) of the support of M."""
    Q = M.quiver
    supp = {v for v in Q.vertices if M.dim_at(v) > 0}
    adj = {v: set() for v in supp}
    for a in Q.arrows:
        if a.source in supp and a.target in supp:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
    comps, seen = [], set()
    for v in Q.vertices:
        if v in supp and v not in seen:
            stack, comp = [v], {v}
            while stack:
                u = stack.pop()
                for w in adj[u] - comp:
                    comp.add(w)
                    stack.append(w)
            seen |= comp
            comps.append([w for w in Q.vertices if w in comp])
    return comps


def simple(Q, v, field=QQ):
    """The simple module S_v."""
    dims = Q.unit(v)
    mats = [[[] for _ in range(dims[Q.index[a.target]])] if dims[Q.index[a.source]] == 0
            else [] for a in Q.arrows]
    return Representation.from_ints(Q, field, dims, mats)
