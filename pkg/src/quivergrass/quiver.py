"""Acyclic quivers, the Euler form and ADE classification."""
from __future__ import annotations

import json
import unicodedata
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction

from .errors import (CyclicQuiver, Disconnected, DuplicateId, IndexMismatch,
                     NotAffine, PreconditionFailed, UnknownVertex)
from .linalg import QQ, Matrix

Arrow = namedtuple("Arrow", "id source target")


def _vkey(v):
    # ints before strings, each in natural order
    return (0, v, "") if isinstance(v, int) else (1, 0, str(v))


class Quiver:
    """A finite connected acyclic quiver.

    Vertices are kept in a canonical sorted order; every vector or matrix
    indexed by vertices uses that order.  Arrows keep their input order.
    Build instances with :func:`validate_quiver` or :meth:`Quiver.make`.
    """

    __slots__ = ("vertices", "arrows", "index", "arrow_index", "topo_order",
                 "_hash", "_class")

    def __init__(self, vertices, arrows):
        self.vertices = tuple(vertices)
        self.arrows = tuple(arrows)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.arrow_index = {a.id: k for k, a in enumerate(self.arrows)}
        self.topo_order = _topological_order(self.vertices, self.arrows)
        self._hash = None
        self._class = None

    @classmethod
    def make(cls, vertices, arrows):
        """Convenience constructor: arrows as (id, source, target) triples."""
        return validate_quiver({"vertices": list(vertices),
                                "arrows": [{"id": a, "from": s, "to": t} for a, s, t in arrows]})

    @property
    def n(self):
        return len(self.vertices)

    def arrows_from(self, v):
        return [a for a in self.arrows if a.source == v]

    def arrows_to(self, v):
        return [a for a in self.arrows if a.target == v]

    def is_sink(self, v):
        return not self.arrows_from(v)

    def is_source(self, v):
        return not self.arrows_to(v)

    def vec(self, x):
        """Coerce a dimension vector (dict or sequence) to a tuple in vertex order."""
        if isinstance(x, dict):
            if set(x) != set(self.vertices):
                # allow string keys for int vertices coming from JSON
                conv = {}
                for k, val in x.items():
                    v = self._lookup(k)
                    if v is None:
                        raise IndexMismatch(f"unknown vertex {k!r} in vector")
                    conv[v] = val
                if set(conv) != set(self.vertices):
                    raise IndexMismatch("vector not indexed by the vertex set")
                x = conv
            return tuple(int(x[v]) for v in self.vertices)
        x = tuple(int(t) for t in x)
        if len(x) != self.n:
            raise IndexMismatch(f"vector of length {len(x)} for {self.n} vertices")
        return x

    def _lookup(self, k):
        if k in self.index:
            return k
        for v in self.vertices:
            if str(v) == str(k):
                return v
        return None

    def vertex(self, k):
        v = self._lookup(k)
        if v is None:
            raise UnknownVertex(f"no vertex {k!r}")
        return v

    def vec_dict(self, x):
        return {v: int(c) for v, c in zip(self.vertices, x)}

    def unit(self, v):
        v = self.vertex(v)
        return tuple(1 if w == v else 0 for w in self.vertices)

    def __eq__(self, other):
        return (isinstance(other, Quiver) and self.vertices == other.vertices
                and self.arrows == other.arrows)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vertices, self.arrows))
        return self._hash

    def __repr__(self):
        arr = ", ".join(f"{a.id}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({list(self.vertices)}; {arr})"

    def to_json(self):
        return {"vertices": list(self.vertices),
                "arrows": [{"id": a.id, "from": a.source, "to": a.target} for a in self.arrows]}

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def _topological_order(vertices, arrows):
    indeg = {v: 0 for v in vertices}
    out = {v: [] for v in vertices}
    for a in arrows:
        indeg[a.target] += 1
        out[a.source].append(a.target)
    order = []
    ready = [v for v in vertices if indeg[v] == 0]
    while ready:
        v = ready.pop(0)
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != len(vertices):
        raise CyclicQuiver("quiver has an oriented cycle")
    return tuple(order)


def validate_quiver(raw) -> Quiver:
    """Build a Quiver from its JSON-like description, checking all invariants."""
    if isinstance(raw, Quiver):
        return raw
    if isinstance(raw, str):
        raw = json.loads(raw)
    verts = list(raw.get("vertices", []))
    if not verts:
        raise PreconditionFailed("quiver needs at least one vertex")
    if len(set(verts)) != len(verts):
        raise DuplicateId("duplicate vertex id")
    vset = set(verts)
    arrows = []
    seen = set()
    for k, a in enumerate(raw.get("arrows", [])):
        if isinstance(a, dict):
            aid, s, t = a.get("id", f"a{k}"), a["from"], a["to"]
        else:
            aid, s, t = a
        if aid in seen:
            raise DuplicateId(f"duplicate arrow id {aid!r}")
        seen.add(aid)
        for v in (s, t):
            if v not in vset:
                raise UnknownVertex(f"arrow {aid!r} uses unknown vertex {v!r}")
        if s == t:
            raise CyclicQuiver(f"arrow {aid!r} is a loop")
        arrows.append(Arrow(aid, s, t))
    verts.sort(key=_vkey)
    # connectivity of the underlying graph
    adj = {v: set() for v in verts}
    for a in arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    stack, comp = [verts[0]], {verts[0]}
    while stack:
        v = stack.pop()
        for w in adj[v] - comp:
            comp.add(w)
            stack.append(w)
    Q = Quiver(verts, arrows)
    if len(comp) != len(verts):
        raise Disconnected("underlying graph is not connected")
    return Q


def opposite(Q: Quiver) -> Quiver:
    return Quiver(Q.vertices, [Arrow(a.id, a.target, a.source) for a in Q.arrows])


# ---------------------------------------------------------------------------
# forms
# ---------------------------------------------------------------------------

def euler_matrix(Q: Quiver):
    """H[i][j] = delta_ij - #(arrows i -> j), as a list of lists."""
    n = Q.n
    H = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for a in Q.arrows:
        H[Q.index[a.source]][Q.index[a.target]] -= 1
    return H


def euler_form(Q: Quiver, x, y) -> int:
    x, y = Q.vec(x), Q.vec(y)
    val = sum(a * b for a, b in zip(x, y))
    for a in Q.arrows:
        val -= x[Q.index[a.source]] * y[Q.index[a.target]]
    return val


def quadratic_form(Q: Quiver, x) -> int:
    return euler_form(Q, x, x)


def symmetrized_form(Q: Quiver, x, y) -> Fraction:
    return Fraction(euler_form(Q, x, y) + euler_form(Q, y, x), 2)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuiverClass:
    kind: str            # "Dynkin", "Affine" or "Wild"
    family: str | None   # "A", "D", "E" (None for wild)
    rank: int | None     # the subscript n in A_n, D_n, ...
    delta: tuple | None = None

    @property
    def name(self):
        if self.kind == "Wild":
            return "Wild"
        tilde = "̃" if self.kind == "Affine" else ""
        return unicodedata.normalize("NFC", f"{self.family}{tilde}{self.rank}")

    @property
    def is_dynkin(self):
        return self.kind == "Dynkin"

    @property
    def is_affine(self):
        return self.kind == "Affine"

    def __str__(self):
        if self.kind == "Affine":
            return f"Affine {self.name}, delta=({','.join(map(str, self.delta))})"
        return self.kind if self.kind == "Wild" else f"Dynkin {self.name}"


def _graph(Q):
    mult = {}
    for a in Q.arrows:
        key = frozenset((a.source, a.target))
        mult[key] = mult.get(key, 0) + 1
    nbrs = {v: set() for v in Q.vertices}
    for key in mult:
        u, w = tuple(key)
        nbrs[u].add(w)
        nbrs[w].add(u)
    return mult, nbrs


def _arm_length(start, branch, nbrs):
    # number of vertices on the path leaving `branch` through `start`
    length, prev, cur = 1, branch, start
    while True:
        nxt = nbrs[cur] - {prev}
        if not nxt:
            return length
        if len(nxt) > 1:
            return None
        prev, cur = cur, next(iter(nxt))
        length += 1


def _shape(Q):
    """(kind, family, rank) from the underlying graph alone."""
    n = Q.n
    mult, nbrs = _graph(Q)
    if any(m >= 3 for m in mult.values()):
        return ("Wild", None, None)
    if any(m == 2 for m in mult.values()):
        return ("Affine", "A", 1) if n == 2 else ("Wild", None, None)
    edges = len(mult)
    if edges == n:
        if all(len(nbrs[v]) == 2 for v in Q.vertices):
            return ("Affine", "A", n - 1)
        return ("Wild", None, None)
    if edges > n:
        return ("Wild", None, None)
    deg = {v: len(nbrs[v]) for v in Q.vertices}
    branch = [v for v in Q.vertices if deg[v] >= 3]
    if not branch:
        return ("Dynkin", "A", n)
    if any(deg[v] >= 5 for v in branch):
        return ("Wild", None, None)
    if len(branch) == 1:
        b = branch[0]
        if deg[b] == 4:
            return ("Affine", "D", 4) if n == 5 else ("Wild", None, None)
        arms = tuple(sorted(_arm_length(w, b, nbrs) for w in nbrs[b]))
        table = {(1, 2, 2): ("Dynkin", "E", 6), (1, 2, 3): ("Dynkin", "E", 7),
                 (1, 2, 4): ("Dynkin", "E", 8), (2, 2, 2): ("Affine", "E", 6),
                 (1, 3, 3): ("Affine", "E", 7), (1, 2, 5): ("Affine", "E", 8)}
        if arms[0] == 1 and arms[1] == 1:
            return ("Dynkin", "D", n)
        return table.get(arms, ("Wild", None, None))
    if len(branch) == 2 and all(deg[b] == 3 for b in branch):
        ok = all(sum(1 for w in nbrs[b] if deg[w] == 1) == 2 for b in branch)
        if ok:
            return ("Affine", "D", n - 1)
    return ("Wild", None, None)


def _cartan(Q):
    mult, _ = _graph(Q)
    n = Q.n
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for key, m in mult.items():
        u, w = tuple(key)
        i, j = Q.index[u], Q.index[w]
        C[i][j] -= m
        C[j][i] -= m
    return C


def _leading_minors_positive(C):
    n = len(C)
    for k in range(1, n + 1):
        A = [[Fraction(C[i][j]) for j in range(k)] for i in range(k)]
        if _det(A) <= 0:
            return False
    return True


def _det(A):
    A = [row[:] for row in A]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return det


def _null_root(Q):
    C = Matrix(QQ, Q.n, Q.n, _cartan(Q))
    ker = C.kernel_basis()
    if len(ker) != 1:
        raise AssertionError("radical of an affine form must be one-dimensional")
    v = ker[0]
    from math import gcd, lcm
    den = 1
    for t in v:
        den = lcm(den, t.denominator)
    ints = [int(t * den) for t in v]
    g = 0
    for t in ints:
        g = gcd(g, t)
    ints = [t // g for t in ints]
    if ints[0] < 0:
        ints = [-t for t in ints]
    return tuple(ints)


def classify(Q: Quiver) -> QuiverClass:
    if Q._class is not None:
        return Q._class
    kind, family, rank = _shape(Q)
    C = _cartan(Q)
    if kind == "Dynkin":
        assert _leading_minors_positive(C), "Dynkin graph with non-definite form"
        res = QuiverClass(kind, family, rank)
    elif kind == "Affine":
        delta = _null_root(Q)
        assert all(t > 0 for t in delta) and quadratic_form(Q, delta) == 0
        # removing an extending vertex leaves a definite form
        ext = next(k for k, t in enumerate(delta) if t == 1)
        keep = [k for k in range(Q.n) if k != ext]
        sub = [[C[i][j] for j in keep] for i in keep]
        assert _leading_minors_positive(sub) if sub else True
        res = QuiverClass(kind, family, rank, delta)
    else:
        res = QuiverClass("Wild", None, None)
    Q._class = res
    return res


def defect(Q: Quiver, x) -> int:
    """The defect <delta, x> of an affine quiver."""
    cls = classify(Q)
    if not cls.is_affine:
        raise NotAffine(f"defect needs an affine quiver, got {cls.name}")
    return euler_form(Q, cls.delta, x)


def is_real_root(Q: Quiver, x) -> bool:
    x = Q.vec(x)
    return all(t >= 0 for t in x) and any(x) and quadratic_form(Q, x) == 1
