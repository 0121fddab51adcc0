import itertools
import pytest
from fractions import Fraction

from hellyspace import Rng
from hellyspace.linalg import (MonomialIndex, build_coeff_matrix, helly_bounds,
                               pivot_subsystem, rank)
from hellyspace.poly import FieldSpec, MonomialOrder, Polynomial, PolySystem

from conftest import GF101, QQ, mksystem


def _linear_system(rows, field):
    """Rows of coefficients -> system of linear polynomials (plus constant)."""
    nvars = len(rows[0]) - 1 if any(len(r) for r in rows) else 1
    polys = []
    for row in rows:
        terms = {}
        for j, c in enumerate(row[:-1]):
            mono = tuple(1 if k == j else 0 for k in range(nvars))
            terms[mono] = c
        terms[(0,) * nvars] = row[-1]
        p = Polynomial.from_terms(terms, nvars, field)
        if not p.is_zero:
            polys.append(p)
    return PolySystem(polys, nvars, field)


def _det(mat, field):
    """Leibniz determinant, the reference for the rank oracle."""
    n = len(mat)
    if n == 0:
        return field.one()
    total = field.zero()
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):  # count inversions
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        prod = field.one() if sign > 0 else field.neg(field.one())
        for i in range(n):
            prod = field.mul(prod, mat[i][perm[i]])
        total = field.add(total, prod)
    return total


def _rank_by_minors(mat, field):
    """Largest k with a nonsingular k x k submatrix. Exponential, <= 5x5 only."""
    nrows, ncols = len(mat), len(mat[0]) if mat else 0
    for k in range(min(nrows, ncols), 0, -1):
        for rs in itertools.combinations(range(nrows), k):
            for cs in itertools.combinations(range(ncols), k):
                sub = [[mat[i][j] for j in cs] for i in rs]
                if _det(sub, field) != field.zero():
                    return k
    return 0


def _dense(system, order):
    cm = build_coeff_matrix(system, order)
    ncols = len(cm.cols)
    nrows = len(cm.rows)
    field = system.field
    out = [[field.zero()] * ncols for _ in range(nrows)]
    for j, col in enumerate(cm.cols):
        for i, c in col.items():
            out[i][j] = c
    return out


def test_monomial_index_descending():
    order = MonomialOrder.grevlex(2)
    idx = MonomialIndex([(0, 0), (2, 0), (1, 0), (0, 1), (2, 0)], order)
    assert idx.monomials == ((2, 0), (1, 0), (0, 1), (0, 0))
    assert idx.index_of((0, 1)) == 2


def test_rank_pinned_linear():
    s = _linear_system([[1, 1, 0], [1, -1, 0], [2, 0, 0]], QQ)
    res = rank(build_coeff_matrix(s, MonomialOrder.grevlex(2)))
    assert res.rank == 2
    assert res.pivot_columns == [0, 1]


def test_rank_empty_and_single():
    s = mksystem(["x0 + x1"], 2)
    assert rank(build_coeff_matrix(s, MonomialOrder.grevlex(2))).rank == 1
    empty = PolySystem([], 2, QQ)
    assert rank(build_coeff_matrix(empty, MonomialOrder.grevlex(2))).rank == 0


@pytest.mark.parametrize("field", [GF101, QQ], ids=["gf101", "rationals"])
def test_rank_matches_minor_expansion(field):
    # Independent oracle: rank = size of the largest nonvanishing minor,
    # on matrices up to 6x6.
    rng = Rng(2024).child("rank_oracle")
    for trial in range(40):
        nrows = 2 + rng.below(5)
        ncols = 2 + rng.below(5)
        rows = []
        for _ in range(nrows):
            if field.kind == "prime":
                rows.append([rng.below(field.p) for _ in range(ncols)])
            else:
                rows.append([Fraction(rng.below(19) - 9) for _ in range(ncols)])
        s = _linear_system(rows, field)
        if len(s) == 0:
            continue
        order = MonomialOrder.grevlex(s.nvars)
        got = rank(build_coeff_matrix(s, order)).rank
        want = _rank_by_minors(_dense(s, order), field)
        assert got == want, "trial %d: %d vs %d" % (trial, got, want)


def test_rank_field_independence_small_entries():
    # Entries <= 9 on 4x4: every minor is below the default prime, so the
    # rank over Q and over GF(p) must agree exactly.
    big = FieldSpec.prime(2147483647)
    rng = Rng(7).child("cross_field")
    for _ in range(20):
        rows = [[rng.below(19) - 9 for _ in range(4)] for _ in range(4)]
        sq = _linear_system([[Fraction(c) for c in row] for row in rows], QQ)
        sp = _linear_system([[c % big.p for c in row] for row in rows], big)
        if len(sq) != len(sp):
            continue
        oq = MonomialOrder.grevlex(sq.nvars)
        op = MonomialOrder.grevlex(sp.nvars)
        assert rank(build_coeff_matrix(sq, oq)).rank == \
            rank(build_coeff_matrix(sp, op)).rank


def test_rank_against_sympy():
    sympy = pytest.importorskip("sympy")
    rng = Rng(99).child("sympy_rank")
    for _ in range(25):
        nrows = 2 + rng.below(6)
        ncols = 2 + rng.below(6)
        rows = [[rng.below(19) - 9 for _ in range(ncols)] for _ in range(nrows)]
        s = _linear_system([[Fraction(c) for c in row] for row in rows], QQ)
        if len(s) == 0:
            continue
        order = MonomialOrder.grevlex(s.nvars)
        dense = _dense(s, order)
        want = sympy.Matrix([[int(c) for c in row] for row in dense]).rank()
        assert rank(build_coeff_matrix(s, order)).rank == want


def test_pivot_subsystem_pinned():
    s = mksystem(["x0", "2*x0", "x1"], 2)
    pivots = pivot_subsystem(s, MonomialOrder.grevlex(2))
    assert pivots == [0, 2]
    assert len(s.subsystem(pivots)) == 2


def test_pivot_subsystem_preserves_rank():
    rng = Rng(5).child("pivots")
    for _ in range(15):
        rows = [[rng.below(5) for _ in range(4)] for _ in range(6)]
        s = _linear_system(rows, GF101)
        if len(s) == 0:
            continue
        order = MonomialOrder.grevlex(s.nvars)
        full = rank(build_coeff_matrix(s, order)).rank
        pivots = pivot_subsystem(s, order)
        assert len(pivots) == full
        sub = s.subsystem(pivots)
        assert rank(build_coeff_matrix(sub, order)).rank == full


def test_helly_bounds_pinned():
    assert helly_bounds(3, 2, True) == 6
    assert helly_bounds(3, 2, False) == 10
    assert helly_bounds(2, 3, True) == 4
    assert helly_bounds(4, 1, False) == 5
    # nvars homogeneous quadrics: C(nvars+1, 2)
    assert helly_bounds(4, 2, True) == 10


def test_rank_never_exceeds_helly_bound():
    # the monomial count itself enforces the ambient bound
    rng = Rng(11).child("bound")
    from conftest import rand_system
    for seed in range(10):
        s = rand_system(seed, 12, 3, 2, GF101, homogeneous=True)
        r = rank(build_coeff_matrix(s, MonomialOrder.grevlex(3))).rank
        assert r <= helly_bounds(3, 2, True)
