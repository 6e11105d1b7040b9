"""Dense matrices over the rationals, with exact elimination.

Everything here is exact: entries are `fractions.Fraction` values (arbitrary
precision, always in lowest terms with positive denominator), and there is no
tolerance parameter anywhere.  Rank computations run fraction-free in the
style of Bareiss to keep intermediate growth under control; kernel and solve
routines use ordinary Gauss-Jordan over Q with zero-skipping, which is fast on
the sparse structured systems that arise here.
"""

from fractions import Fraction
from dataclasses import dataclass
from math import gcd

# exact rational scalar type: arbitrary-precision, lowest terms, positive denominator
Rational = Fraction


class DimensionError(ValueError):
    """Shapes do not match the operation."""


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"matrix entries must be exact rationals, got {type(x).__name__}")


class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "_d")

    def __init__(self, rows, cols, entries):
        entries = [_as_fraction(x) for x in entries]
        if len(entries) != rows * cols:
            raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self._d = entries

    @classmethod
    def from_rows(cls, rows):
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise DimensionError("ragged rows")
        return cls(r, c, [x for row in rows for x in row])

    @classmethod
    def zeros(cls, rows, cols=None):
        if cols is None:
            cols = rows
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [Fraction(1) if i == j else Fraction(0) for i in range(n) for j in range(n)])

    @classmethod
    def diagonal(cls, diag):
        n = len(diag)
        m = cls.zeros(n, n)
        for i, x in enumerate(diag):
            m._d[i * n + i] = _as_fraction(x)
        return m

    @classmethod
    def column(cls, entries):
        return cls(len(entries), 1, list(entries))

    def __getitem__(self, ij):
        i, j = ij
        return self._d[i * self.cols + j]

    @property
    def entries(self):
        return tuple(self._d)

    def row(self, i):
        return self._d[i * self.cols:(i + 1) * self.cols]

    def row_lists(self):
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self._d == other._d)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self._d)))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return not any(self._d)

    def _check_same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError(f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self._d, other._d)])

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self._d, other._d)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-a for a in self._d])

    def scale(self, c):
        c = _as_fraction(c)
        return Matrix(self.rows, self.cols, [c * a for a in self._d])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        n, m, p = self.rows, self.cols, other.cols
        out = [Fraction(0)] * (n * p)
        for i in range(n):
            base = i * m
            obase = i * p
            for k in range(m):
                x = self._d[base + k]
                if x:
                    rb = k * p
                    for j in range(p):
                        y = other._d[rb + j]
                        if y:
                            out[obase + j] += x * y
        return Matrix(n, p, out)

    __rmul__ = scale

    def __pow__(self, e):
        if not self.is_square():
            raise DimensionError("power of a non-square matrix")
        if e < 0:
            raise ValueError("negative matrix powers not supported")
        result = Matrix.identity(self.rows)
        for _ in range(e):
            result = result * self
        return result

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [self._d[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

    def trace(self):
        if not self.is_square():
            raise DimensionError("trace of a non-square matrix")
        return sum((self._d[i * self.cols + i] for i in range(self.rows)), Fraction(0))


def bracket(a, b):
    """Lie bracket a*b - b*a of two square matrices of equal size."""
    if not a.is_square() or not b.is_square() or a.rows != b.rows:
        raise DimensionError("bracket needs two square matrices of equal size")
    return a * b - b * a


def _integer_rows(m):
    """Clear denominators row by row; rank is unchanged."""
    out = []
    for row in m.row_lists():
        den = 1
        for x in row:
            d = x.denominator
            if d != 1:
                den = den * d // gcd(den, d)
        out.append([int(x * den) for x in row])
    return out


def rank(m):
    """Rank over Q via fraction-free (Bareiss) elimination."""
    rows = _integer_rows(m)
    nrows = len(rows)
    ncols = m.cols
    r = 0
    prev = 1
    for c in range(ncols):
        if r >= nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, nrows):
            ric = rows[i][c]
            if ric:
                ri, rr = rows[i], rows[r]
                for j in range(c + 1, ncols):
                    ri[j] = (pivot * ri[j] - ric * rr[j]) // prev
                ri[c] = 0
            elif prev != pivot:
                ri = rows[i]
                for j in range(c + 1, ncols):
                    ri[j] = (pivot * ri[j]) // prev
        prev = pivot
        r += 1
    return r


def _rref(rows, ncols):
    """In-place reduced row echelon form over Q; returns pivot column list."""
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv if x else x for x in rows[r]]
        rr = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [a - f * b if b else a for a, b in zip(rows[i], rr)]
        pivots.append(c)
        r += 1
    return pivots


def solve_homogeneous(m):
    """Basis of the right kernel of m, as a list of column vectors.

    Empty list exactly when the kernel is zero.
    """
    rows = [row for row in m.row_lists() if any(row)]
    pivots = _rref(rows, m.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * m.cols
        vec[free] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -rows[i][free]
        basis.append(Matrix.column(vec))
    return basis


def solve_linear(m, rhs):
    """One solution of m*v = rhs over Q, or None if inconsistent.

    rhs is a list of Fractions of length m.rows.
    """
    rows = [row + [_as_fraction(r)] for row, r in zip(m.row_lists(), rhs)]
    pivots = _rref(rows, m.cols)
    ncols = m.cols
    for i in range(len(pivots), len(rows)):
        if rows[i][ncols]:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = rows[i][ncols]
    return sol


@dataclass(frozen=True)
class NilpotencyData:
    is_nilpotent: bool
    index: int | None
    single_block: bool


def nilpotency_data(m):
    """Nilpotency of a square matrix: a^k = 0, least vanishing power, and
    whether the Jordan form is a single block (index equal to the size)."""
    if not m.is_square():
        raise DimensionError("nilpotency_data needs a square matrix")
    k = m.rows
    if m.is_zero():
        # zero matrix: index 1, single block only in size 1
        return NilpotencyData(True, 1, k == 1)
    power = m
    for i in range(2, k + 1):
        power = power * m
        if power.is_zero():
            return NilpotencyData(True, i, i == k)
    return NilpotencyData(False, None, False)


def log_unipotent(u):
    """Logarithm of a unipotent matrix by the finite Mercator series.

    With n = u - 1 nilpotent, returns sum_{i>=1} (-1)^(i+1) n^i / i truncated
    at i = k-1.  Raises ValueError when u is not unipotent.
    """
    if not u.is_square():
        raise DimensionError("log_unipotent needs a square matrix")
    k = u.rows
    n = u - Matrix.identity(k)
    if not nilpotency_data(n).is_nilpotent:
        raise ValueError("input is not unipotent: u - 1 is not nilpotent")
    result = Matrix.zeros(k)
    power = Matrix.identity(k)
    for i in range(1, k):
        power = power * n
        if power.is_zero():
            break
        result = result + power.scale(Fraction((-1) ** (i + 1), i))
    return result


def exp_nilpotent(x):
    """Exponential of a nilpotent matrix by the finite series sum x^i / i!."""
    if not x.is_square():
        raise DimensionError("exp_nilpotent needs a square matrix")
    k = x.rows
    if not nilpotency_data(x).is_nilpotent:
        raise ValueError("input is not nilpotent")
    result = Matrix.identity(k)
    power = Matrix.identity(k)
    fact = 1
    for i in range(1, k):
        power = power * x
        if power.is_zero():
            break
        fact *= i
        result = result + power.scale(Fraction(1, fact))
    return result
