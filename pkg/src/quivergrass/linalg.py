"""Exact linear algebra over prime fields and the rationals.

Also home to subspace enumeration over F_p, Gaussian binomials and the
integer polynomials used to store point counts.
"""
from __future__ import annotations

import itertools
from collections import namedtuple
from fractions import Fraction
from functools import lru_cache

from .errors import (BudgetExceeded, FieldMismatch, InconsistentSamples,
                     NonIntegralFit, ShapeMismatch)

DEFAULT_BUDGET = 10 ** 7


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def primes(start: int = 2):
    """Yield the primes >= start in increasing order."""
    n = max(start, 2)
    while True:
        if is_prime(n):
            yield n
        n += 1


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class PrimeField:
    """The field F_p; elements are the ints 0..p-1."""

    __slots__ = ("p",)
    is_finite = True

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p) or p >= 2 ** 31:
            raise ValueError(f"not a supported prime: {p!r}")
        self.p = p

    zero = 0
    one = 1

    def __call__(self, x):
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ValueError(f"{x} has no reduction mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def elements(self):
        return range(self.p)

    def random_element(self, rng):
        return rng.randrange(self.p)

    def lift(self, a) -> int:
        return int(a)

    def to_json(self):
        return {"type": "Fp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def __reduce__(self):
        return (PrimeField, (self.p,))

    def _rref_inplace(self, A, ncols):
        p = self.p
        pivots = []
        r = 0
        nrows = len(A)
        for c in range(ncols):
            if r == nrows:
                break
            piv = None
            for i in range(r, nrows):
                if A[i][c]:
                    piv = i
                    break
            if piv is None:
                continue
            if piv != r:
                A[r], A[piv] = A[piv], A[r]
            row = A[r]
            inv = pow(row[c], -1, p)
            if inv != 1:
                row = [x * inv % p for x in row]
                A[r] = row
            for i in range(nrows):
                if i != r:
                    f = A[i][c]
                    if f:
                        A[i] = [(x - f * y) % p for x, y in zip(A[i], row)]
            pivots.append(c)
            r += 1
        return pivots


class Rationals:
    """The field of rational numbers, with Fraction elements."""

    is_finite = False
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def random_element(self, rng):
        return Fraction(rng.randint(-3, 3))

    def lift(self, a):
        """Integers as int, other rationals as 'p/q' strings (JSON friendly)."""
        return a.numerator if a.denominator == 1 else str(a)

    def to_json(self):
        return {"type": "Q"}

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"

    def _rref_inplace(self, A, ncols):
        pivots = []
        r = 0
        nrows = len(A)
        for c in range(ncols):
            if r == nrows:
                break
            piv = next((i for i in range(r, nrows) if A[i][c] != 0), None)
            if piv is None:
                continue
            A[r], A[piv] = A[piv], A[r]
            inv = 1 / Fraction(A[r][c])
            A[r] = [x * inv for x in A[r]]
            row = A[r]
            for i in range(nrows):
                if i != r and A[i][c] != 0:
                    f = A[i][c]
                    A[i] = [x - f * y for x, y in zip(A[i], row)]
            pivots.append(c)
            r += 1
        return pivots


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_json(spec) -> PrimeField | Rationals:
    kind = spec.get("type")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return GF(int(spec["p"]))
    raise ValueError(f"unknown field spec {spec!r}")


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

RREF = namedtuple("RREF", "matrix pivots rank")


class Matrix:
    """Immutable dense matrix over an exact field.

    ``data`` is a tuple of row tuples, all entries already reduced.
    Shapes with zero rows or columns are allowed and keep their other
    dimension.
    """

    __slots__ = ("field", "rows", "cols", "data", "_hash")

    def __init__(self, field, rows: int, cols: int, data=None, *, reduce=True):
        self.field = field
        self.rows = rows
        self.cols = cols
        if data is None:
            z = field.zero
            data = tuple((z,) * cols for _ in range(rows))
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ShapeMismatch(f"data does not have shape {rows}x{cols}")
            if reduce:
                data = tuple(tuple(field(x) for x in r) for r in data)
            else:
                data = tuple(tuple(r) for r in data)
        self.data = data
        self._hash = None

    # -- constructors --------------------------------------------------------
    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ShapeMismatch("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        return cls(field, len(rows), cols, rows)

    @classmethod
    def from_columns(cls, field, columns, nrows):
        columns = list(columns)
        data = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
        return cls(field, nrows, len(columns), data)

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, rows, cols)

    @classmethod
    def identity(cls, field, n):
        data = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
        return cls(field, n, n, data, reduce=False)

    # -- basics --------------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.data)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.shape == other.shape
                and self.field == other.field and self.data == other.data)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.data))
        return self._hash

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.rows}x{self.cols}, {self.to_lists()})"

    def to_lists(self):
        return [list(self.field.lift(x) for x in r) for r in self.data]

    def is_zero(self):
        return all(x == 0 for r in self.data for x in r)

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        F = self.field
        return Matrix(F, self.rows, self.cols,
                      [[F.add(a, b) for a, b in zip(r, s)] for r, s in zip(self.data, other.data)],
                      reduce=False)

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} - {other.shape}")
        F = self.field
        return Matrix(F, self.rows, self.cols,
                      [[F.sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.data, other.data)],
                      reduce=False)

    def __neg__(self):
        F = self.field
        return Matrix(F, self.rows, self.cols, [[F.neg(a) for a in r] for r in self.data],
                      reduce=False)

    def scale(self, c):
        F = self.field
        c = F(c)
        return Matrix(F, self.rows, self.cols, [[F.mul(c, a) for a in r] for r in self.data],
                      reduce=False)

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        F = self.field
        cols = list(zip(*other.data)) if other.rows else [()] * other.cols
        if isinstance(F, PrimeField):
            p = F.p
            data = [[sum(a * b for a, b in zip(r, c)) % p for c in cols] for r in self.data]
        else:
            data = [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
                    for r in self.data]
        return Matrix(F, self.rows, other.cols, data, reduce=False)

    def apply(self, vec):
        """Matrix times a column vector given as a sequence."""
        if len(vec) != self.cols:
            raise ShapeMismatch(f"vector of length {len(vec)} for {self.shape}")
        F = self.field
        if isinstance(F, PrimeField):
            p = F.p
            return tuple(sum(a * b for a, b in zip(r, vec)) % p for r in self.data)
        return tuple(sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in self.data)

    @property
    def T(self):
        if self.rows == 0:
            return Matrix(self.field, self.cols, 0, [() for _ in range(self.cols)], reduce=False)
        return Matrix(self.field, self.cols, self.rows, list(zip(*self.data)), reduce=False)

    def hstack(self, other):
        self._check(other)
        if self.rows != other.rows:
            raise ShapeMismatch("hstack row mismatch")
        return Matrix(self.field, self.rows, self.cols + other.cols,
                      [r + s for r, s in zip(self.data, other.data)], reduce=False)

    def vstack(self, other):
        self._check(other)
        if self.cols != other.cols:
            raise ShapeMismatch("vstack column mismatch")
        return Matrix(self.field, self.rows + other.rows, self.cols,
                      self.data + other.data, reduce=False)

    def submatrix(self, rows, cols):
        rows = list(rows)
        cols = list(cols)
        return Matrix(self.field, len(rows), len(cols),
                      [[self.data[i][j] for j in cols] for i in rows], reduce=False)

    # -- elimination ---------------------------------------------------------
    def rref(self) -> RREF:
        A = [list(r) for r in self.data]
        pivots = self.field._rref_inplace(A, self.cols)
        return RREF(Matrix(self.field, self.rows, self.cols, A, reduce=False),
                    tuple(pivots), len(pivots))

    def rank(self) -> int:
        A = [list(r) for r in self.data]
        return len(self.field._rref_inplace(A, self.cols))

    def kernel_basis(self):
        """Canonical kernel basis: one vector per free column, ascending."""
        R, pivots, rank = self.rref()
        F = self.field
        pivset = set(pivots)
        basis = []
        for f in range(self.cols):
            if f in pivset:
                continue
            v = [F.zero] * self.cols
            v[f] = F.one
            for row, c in enumerate(pivots):
                v[c] = F.neg(R.data[row][f])
            basis.append(tuple(v))
        return basis

    def image_basis(self):
        """Canonical basis of the column space (reduced echelon rows of the transpose)."""
        return row_space_basis(self.columns(), self.field)

    def nullity(self) -> int:
        return self.cols - self.rank()

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self):
        if self.rows != self.cols:
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.rows
        F = self.field
        A = [list(r) + [F.one if i == j else F.zero for j in range(n)]
             for i, r in enumerate(self.data)]
        pivots = F._rref_inplace(A, n)
        if len(pivots) != n:
            raise ZeroDivisionError("singular matrix")
        return Matrix(F, n, n, [r[n:] for r in A], reduce=False)

    def solve(self, b):
        """Return one x with self @ x = b, or None if inconsistent."""
        F = self.field
        A = [list(r) + [F(x)] for r, x in zip(self.data, b)]
        pivots = F._rref_inplace(A, self.cols + 1)
        if pivots and pivots[-1] == self.cols:
            return None
        x = [F.zero] * self.cols
        for row, c in enumerate(pivots):
            x[c] = A[row][self.cols]
        return tuple(x)

    def solve_matrix(self, B):
        """Return X with self @ X = B (columns solved independently); None if any fails."""
        cols = []
        for j in range(B.cols):
            x = self.solve(B.column(j))
            if x is None:
                return None
            cols.append(x)
        return Matrix.from_columns(self.field, cols, self.cols) if cols else \
            Matrix(self.field, self.cols, 0, [() for _ in range(self.cols)], reduce=False)


def row_space_basis(vectors, field):
    """Reduced row echelon basis of span(vectors), as a list of tuples."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    n = len(vectors[0])
    pivots = field._rref_inplace(vectors, n)
    return [tuple(vectors[i]) for i in range(len(pivots))]


def span_rank(vectors, field) -> int:
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    return len(field._rref_inplace(vectors, len(vectors[0])))


def complement_indices(basis_rows, n, field):
    """Standard basis indices completing span(basis_rows) to the whole space.

    Pivot columns of the reduced echelon form are excluded; what is left is a
    deterministic complement.
    """
    A = [list(v) for v in basis_rows]
    pivots = set(field._rref_inplace(A, n)) if A else set()
    return [j for j in range(n) if j not in pivots]


# ---------------------------------------------------------------------------
# subspaces of F_p^d
# ---------------------------------------------------------------------------

def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n (product formula)."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(p: int, d: int, e: int, budget: int | None = None):
    """Yield every e-dimensional subspace of F_p^d exactly once.

    Each subspace comes as its reduced row echelon basis (tuple of row
    tuples).  Order: pivot patterns lexicographically, then free entries
    lexicographically.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 0 or e > d:
        return
    budget = DEFAULT_BUDGET if budget is None else budget
    total = gaussian_binomial(d, e, p)
    if total > budget:
        raise BudgetExceeded(f"[{d} choose {e}]_{p} = {total} exceeds budget {budget}")
    yield from _iter_rref(p, d, e)


def _iter_rref(p, d, e):
    if e == 0:
        yield ()
        return
    for pivots in itertools.combinations(range(d), e):
        pivset = set(pivots)
        free = [(r, j) for r, c in enumerate(pivots) for j in range(c + 1, d) if j not in pivset]
        base = [[0] * d for _ in range(e)]
        for r, c in enumerate(pivots):
            base[r][c] = 1
        for values in itertools.product(range(p), repeat=len(free)):
            rows = [row[:] for row in base]
            for (r, j), v in zip(free, values):
                rows[r][j] = v
            yield tuple(tuple(r) for r in rows)


# ---------------------------------------------------------------------------
# integer polynomials
# ---------------------------------------------------------------------------

class IntPolynomial:
    """Univariate polynomial in q with integer coefficients (index = degree)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, k, c=1):
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self):
        return not self.coeffs

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by q**k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def has_nonnegative_coefficients(self):
        return all(c >= 0 for c in self.coeffs)

    def to_list(self):
        return list(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                mono = "q" if k == 1 else f"q^{k}"
                term = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


def _as_poly(x):
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    raise TypeError(f"cannot treat {x!r} as a polynomial")


def fit_polynomial(samples, degree_bound: int) -> IntPolynomial:
    """Interpolate integer point counts by a polynomial of degree <= degree_bound.

    The first ``degree_bound + 1`` samples determine the polynomial by exact
    Lagrange interpolation; every remaining sample must agree with it.
    """
    samples = [(int(q), int(c)) for q, c in samples]
    if degree_bound < 0:
        degree_bound = 0
    need = degree_bound + 1
    if len(samples) < need:
        raise ValueError(f"need {need} samples, got {len(samples)}")
    xs = [q for q, _ in samples]
    if len(set(xs)) != len(xs):
        raise ValueError("sample points must be distinct")
    base = samples[:need]
    coeffs = [Fraction(0)] * need
    for i, (qi, ci) in enumerate(base):
        # basis polynomial prod_{j != i} (q - qj) / (qi - qj)
        num = [Fraction(1)]
        den = Fraction(1)
        for j, (qj, _) in enumerate(base):
            if j == i:
                continue
            num = [Fraction(0)] + num
            for k in range(len(num) - 1):
                num[k] -= qj * num[k + 1]
            den *= qi - qj
        for k, a in enumerate(num):
            coeffs[k] += ci * a / den
    if any(c.denominator != 1 for c in coeffs):
        raise NonIntegralFit(f"interpolated coefficients {coeffs} are not integral")
    poly = IntPolynomial([c.numerator for c in coeffs])
    for q, c in samples[need:]:
        if poly(q) != c:
            raise InconsistentSamples(
                f"polynomial {poly} predicts {poly(q)} at q={q}, observed {c}")
    return poly
