"""Shared builders for the test suite.

Systems are built either from literal strings through the file-format parser
(the pragmatic route for anything polynomial) or from explicit term dicts
when the parser itself is under test.
"""

import pytest
from fractions import Fraction

from hellyspace import (FieldSpec, Polynomial, PolySystem, Rng,
                        parse_system)

QQ = FieldSpec.rationals()
GF101 = FieldSpec.prime(101)


def mkpoly(text, nvars, field=QQ):
    """One polynomial from file-format text."""
    header = "% field Q\n" if field.kind == "rationals" else (
        "%% field %d\n" % field.p)
    header += "%% vars %d\n" % nvars
    system = parse_system(header + text + "\n", warn=lambda m: None)
    assert len(system) == 1
    return system[0]


def mksystem(lines, nvars, field=QQ):
    header = "% field Q\n" if field.kind == "rationals" else (
        "%% field %d\n" % field.p)
    header += "%% vars %d\n" % nvars
    return parse_system(header + "\n".join(lines) + "\n", warn=lambda m: None)


def rand_poly(rng, nvars, maxdeg, field, homogeneous=False):
    """Random sparse polynomial, guaranteed nonzero."""
    while True:
        terms = {}
        for _ in range(rng.below(4) + 1):
            if homogeneous:
                mono = _rand_mono_exact(rng, nvars, maxdeg)
            else:
                mono = tuple(rng.below(maxdeg + 1) for _ in range(nvars))
                while sum(mono) > maxdeg:
                    mono = tuple(rng.below(maxdeg + 1) for _ in range(nvars))
            c = _rand_coeff(rng, field)
            terms[mono] = terms.get(mono, field.zero()) + c
        p = Polynomial.from_terms(terms, nvars, field)
        if not p.is_zero:
            return p


def _rand_mono_exact(rng, nvars, d):
    mono = [0] * nvars
    for _ in range(d):
        mono[rng.below(nvars)] += 1
    return tuple(mono)


def _rand_coeff(rng, field):
    if field.kind == "prime":
        return rng.below(field.p)
    return Fraction(rng.below(19) - 9)


def rand_system(seed, m, nvars, maxdeg, field, homogeneous=False):
    rng = Rng(seed).child("test_system")
    return PolySystem([rand_poly(rng, nvars, maxdeg, field, homogeneous)
                       for _ in range(m)], nvars, field)


# sympy bridge, used only where a test imports it.

def to_sympy(p, syms):
    import sympy
    expr = sympy.Integer(0)
    for mono, c in p.term_dict().items():
        term = sympy.Rational(c) if p.field.kind == "rationals" else sympy.Integer(c)
        for sym, e in zip(syms, mono):
            term *= sym ** e
        expr += term
    return sympy.expand(expr)


def from_sympy_terms(expr, syms, nvars, field):
    """sympy expression -> term dict in this package's representation."""
    import sympy
    poly = sympy.Poly(expr, *syms)
    terms = {}
    for mono, c in poly.terms():
        if field.kind == "rationals":
            coeff = Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1]))
        else:
            coeff = int(c) % field.p
        terms[tuple(int(e) for e in mono)] = coeff
    return Polynomial.from_terms(terms, nvars, field)


@pytest.fixture(autouse=True)
def _fresh_gb_cache():
    # Keeps cache-hit assertions and call counters independent across tests.
    from hellyspace import clear_cache
    clear_cache()
    yield
