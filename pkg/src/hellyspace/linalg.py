"""Coefficient matrices, exact rank, and the deterministic pivot subsystem.

A polynomial system linearizes into a matrix whose rows are indexed by the
monomials that actually occur (sorted descending under a monomial order) and
whose columns are the coefficient vectors of the polynomials. The rank D of
that matrix is the dimension of the span of the system inside the polynomial
ring; a rank-D system has the D-Helly property, and the first D linearly
independent columns (leftmost-first) give a subsystem with the same variety.

Dropping the all-zero rows of the ambient monomial space cannot change column
rank, so the index holds occurring monomials only.

Elimination is exact: plain Gaussian elimination over a prime field, and a
fraction-free Bareiss-style scheme over the rationals (columns are scaled to
integers first; every division in the two-term update is exact and checked).
"""

from fractions import Fraction
from math import comb, gcd


class MonomialNotIndexed(Exception):
    """A polynomial mentions a monomial absent from the row index."""


class MonomialIndex:
    """Row labels of a coefficient matrix: distinct monomials, sorted descending."""

    __slots__ = ("monomials", "position")

    def __init__(self, monomials, order):
        key = order.key
        object.__setattr__(self, "monomials",
                           tuple(sorted(set(monomials), key=key, reverse=True)))
        object.__setattr__(self, "position",
                           {m: i for i, m in enumerate(self.monomials)})

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIndex is immutable")

    def __len__(self):
        return len(self.monomials)

    def __getitem__(self, i):
        return self.monomials[i]

    def index_of(self, mono):
        try:
            return self.position[mono]
        except KeyError:
            raise MonomialNotIndexed("monomial %r is not a row of this index" % (mono,))


class CoeffMatrix:
    """Sparse coefficient matrix: rows = MonomialIndex, columns = polynomials.

    Each column is a {row_position: coefficient} dict.
    """

    __slots__ = ("rows", "cols", "field")

    def __init__(self, rows, cols, field):
        self.rows = rows
        self.cols = cols
        self.field = field

    @property
    def shape(self):
        return (len(self.rows), len(self.cols))

    def dense_column(self, j):
        col = [self.field.zero()] * len(self.rows)
        for i, c in self.cols[j].items():
            col[i] = c
        return col


class RankResult:
    """Exact rank plus the leftmost column indices achieving it."""

    __slots__ = ("rank", "pivot_columns")

    def __init__(self, rank, pivot_columns):
        self.rank = rank
        self.pivot_columns = list(pivot_columns)

    def __repr__(self):
        return "RankResult(rank=%d, pivot_columns=%r)" % (self.rank, self.pivot_columns)

    def __eq__(self, other):
        return (isinstance(other, RankResult) and self.rank == other.rank
                and self.pivot_columns == other.pivot_columns)


def coeff_vector(f, idx):
    """Sparse coefficient vector of f under a MonomialIndex.

    Returns {row_position: coefficient} for the nonzero coefficients. Every
    monomial of f must be indexed.
    """
    return {idx.index_of(m): c for m, c in f.terms}


def build_coeff_matrix(system, order):
    """Coefficient matrix of a PolySystem: one column per polynomial."""
    monos = [m for p in system for m, _ in p.terms]
    idx = MonomialIndex(monos, order)
    cols = [coeff_vector(p, idx) for p in system]
    return CoeffMatrix(idx, cols, system.field)


def _rank_prime(matrix):
    """Gaussian elimination over GF(p), leftmost column / topmost row pivoting."""
    p = matrix.field.p
    nrows = len(matrix.rows)
    pivots = []  # (pivot_row, normalized column) with zeros at earlier pivot rows
    pivot_cols = []
    for j in range(len(matrix.cols)):
        col = matrix.dense_column(j)
        for prow, pvec in pivots:
            c = col[prow]
            if c:
                col = [(x - c * y) % p for x, y in zip(col, pvec)]
        prow = next((i for i in range(nrows) if col[i]), None)
        if prow is not None:
            inv = pow(col[prow], -1, p)
            pivots.append((prow, [x * inv % p for x in col]))
            pivot_cols.append(j)
    return RankResult(len(pivot_cols), pivot_cols)


def _clear_denominators(col):
    lcm = 1
    for x in col:
        den = x.denominator
        lcm = lcm // gcd(lcm, den) * den
    return [int(x * lcm) for x in col]


def _rank_rational(matrix):
    """Fraction-free elimination over Q.

    Columns are scaled to integer vectors (column scaling preserves rank and
    pivot columns), then reduced with Bareiss two-term updates
    new = (pivot_value * col - col[pivot_row] * pivot_vec) / previous_pivot,
    whose divisions are exact; a nonzero remainder would mean the update
    order broke the minor structure, so it is checked.
    """
    nrows = len(matrix.rows)
    pivots = []  # (pivot_row, integer column, pivot_value)
    pivot_cols = []
    for j in range(len(matrix.cols)):
        col = _clear_denominators([Fraction(x) for x in matrix.dense_column(j)])
        d = 1
        for prow, pvec, pval in pivots:
            c = col[prow]
            nxt = []
            for x, y in zip(col, pvec):
                num = pval * x - c * y
                q, r = divmod(num, d)
                if r:
                    raise ArithmeticError("inexact division in fraction-free elimination")
                nxt.append(q)
            col = nxt
            d = pval
        prow = next((i for i in range(nrows) if col[i]), None)
        if prow is not None:
            pivots.append((prow, col, col[prow]))
            pivot_cols.append(j)
    return RankResult(len(pivot_cols), pivot_cols)


def rank(matrix):
    """Exact rank and pivot columns of a CoeffMatrix.

    Pivot selection is deterministic (leftmost column, then topmost row), so
    pivot_columns is the lexicographically first maximal independent set of
    column indices.
    """
    if matrix.field.kind == "prime":
        return _rank_prime(matrix)
    return _rank_rational(matrix)


def pivot_subsystem(system, order):
    """Indices of a vector-space basis among the system's polynomials.

    The returned subsystem spans the same subspace as the whole system, so it
    cuts out the same variety; this is the deterministic linear-algebra
    baseline against which sampled bases are compared.
    """
    return rank(build_coeff_matrix(system, order)).pivot_columns


def helly_bounds(nvars, d, homogeneous):
    """Ambient a-priori upper bound on the rank of a degree-<=d system.

    Homogeneous forms of degree exactly d in nvars variables span a space of
    dimension C(nvars-1+d, d); general polynomials of degree up to d span
    C(nvars+d, nvars).
    """
    if nvars < 1 or d < 0:
        raise ValueError("need nvars >= 1 and d >= 0")
    if homogeneous:
        return comb(nvars - 1 + d, d)
    return comb(nvars + d, nvars)
