"""Exact field arithmetic and sparse multivariate polynomials.

Coefficients live in an exact field described by a FieldSpec: either a prime
field GF(p) with p < 2^31 (elements are canonical residues, plain Python ints
in [0, p)) or the rationals (elements are fractions.Fraction, automatically
reduced). Nothing here ever rounds.

Monomials are exponent tuples of length nvars, variables x0..x_{nvars-1}.
A Polynomial stores its nonzero terms as a tuple of (monomial, coefficient)
pairs sorted descending under graded reverse lexicographic order, so the
grevlex leading term is the first entry; other orders recompute the maximum.
A PolySystem is an ordered, indexed collection of polynomials over one field,
with zero polynomials stripped at construction.
"""

import warnings
from fractions import Fraction


class FieldMismatch(Exception):
    """Operands belong to different coefficient fields."""


class ArityMismatch(Exception):
    """Operands disagree on the number of variables."""


class DivisionByZero(Exception):
    """Division by the zero field element."""


class ZeroPolynomial(Exception):
    """The zero polynomial has no leading term."""


class NonPrimeModulus(Exception):
    """Requested prime-field modulus is not prime or out of range."""


# Largest prime below 2^31; products of two residues fit comfortably in the
# 64-bit fast path of CPython ints.
DEFAULT_PRIME = 2147483647

LESS, EQUAL, GREATER = -1, 0, 1


def is_prime(n):
    """Deterministic Miller-Rabin for n < 3,215,031,751 (bases 2, 3, 5, 7)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldSpec:
    """An exact coefficient field: GF(p) for a prime p < 2^31, or Q.

    Elements are not wrapped: GF(p) elements are ints in [0, p), rational
    elements are Fraction instances. The field object carries the arithmetic.
    """

    __slots__ = ("kind", "p")

    def __init__(self, kind, p=None):
        if kind == "prime":
            if p is None or not (2 <= p < 2**31):
                raise NonPrimeModulus("prime modulus must satisfy 2 <= p < 2^31, got %r" % (p,))
            if not is_prime(p):
                raise NonPrimeModulus("%d is not prime" % p)
        elif kind == "rationals":
            p = None
        else:
            raise ValueError("unknown field kind %r" % (kind,))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    @classmethod
    def prime(cls, p):
        return cls("prime", p)

    @classmethod
    def rationals(cls):
        return cls("rationals")

    @property
    def characteristic(self):
        return self.p if self.kind == "prime" else 0

    def zero(self):
        return 0 if self.kind == "prime" else Fraction(0)

    def one(self):
        return 1 if self.kind == "prime" else Fraction(1)

    def coerce(self, value):
        """Map an int or Fraction into canonical form in this field."""
        if self.kind == "prime":
            if isinstance(value, Fraction):
                if value.denominator == 1:
                    return value.numerator % self.p
                return value.numerator % self.p * pow(value.denominator, -1, self.p) % self.p
            return value % self.p
        return Fraction(value)

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "prime" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "prime" else a - b

    def mul(self, a, b):
        return a * b % self.p if self.kind == "prime" else a * b

    def neg(self, a):
        return -a % self.p if self.kind == "prime" else -a

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        return pow(a, -1, self.p) if self.kind == "prime" else 1 / a

    def div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero")
        return a * pow(b, -1, self.p) % self.p if self.kind == "prime" else a / b

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "GF(%d)" % self.p if self.kind == "prime" else "QQ"


def field_arith(field, a, b, op):
    """Exact field arithmetic: op in {'add', 'sub', 'mul', 'div'}.

    Both operands must already be canonical elements of `field` (ints for a
    prime field, Fractions for the rationals); mixing representations raises
    FieldMismatch.
    """
    expected = int if field.kind == "prime" else Fraction
    for v in (a, b):
        if not isinstance(v, expected) or isinstance(v, bool):
            raise FieldMismatch("%r is not an element of %r" % (v, field))
    if op == "add":
        return field.add(a, b)
    if op == "sub":
        return field.sub(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "div":
        return field.div(a, b)
    raise ValueError("unknown op %r" % (op,))


# ---------------------------------------------------------------------------
# Monomials: exponent tuples.

def total_degree(mono):
    return sum(mono)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Exponent vector of x^a / x^b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def grevlex_key(mono):
    """Sort key realizing graded reverse lexicographic order.

    Higher total degree wins; on ties the monomial whose last nonzero entry
    of the exponent difference is negative is the greater one, which is the
    same as comparing the reversed, negated exponent tuple.
    """
    return (sum(mono), tuple(-e for e in reversed(mono)))


def lex_key(mono):
    return mono


class MonomialOrder:
    """A total multiplicative monomial order on a fixed number of variables."""

    __slots__ = ("kind", "nvars", "key")

    def __init__(self, kind, nvars):
        if kind not in ("grevlex", "lex"):
            raise ValueError("unknown monomial order %r" % (kind,))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "key", grevlex_key if kind == "grevlex" else lex_key)

    def __setattr__(self, name, value):
        raise AttributeError("MonomialOrder is immutable")

    @classmethod
    def grevlex(cls, nvars):
        return cls("grevlex", nvars)

    @classmethod
    def lex(cls, nvars):
        return cls("lex", nvars)

    def extend(self):
        """Same order kind with one extra, last, variable."""
        return MonomialOrder(self.kind, self.nvars + 1)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and self.kind == other.kind and self.nvars == other.nvars)

    def __hash__(self):
        return hash((self.kind, self.nvars))

    def __repr__(self):
        return "MonomialOrder(%r, nvars=%d)" % (self.kind, self.nvars)


def compare_monomials(a, b, order):
    """Compare two exponent tuples under `order`: LESS, EQUAL or GREATER."""
    if len(a) != order.nvars or len(b) != order.nvars:
        raise ArityMismatch("monomials %r, %r under %r" % (a, b, order))
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return LESS
    if ka > kb:
        return GREATER
    return EQUAL


# ---------------------------------------------------------------------------
# Polynomials.

class Polynomial:
    """Immutable sparse multivariate polynomial over an exact field.

    terms is a tuple of (exponent_tuple, coefficient) pairs with nonzero
    coefficients, sorted descending under grevlex. Use from_terms to build
    one from any mapping; arithmetic returns canonical results.
    """

    __slots__ = ("terms", "nvars", "field", "_hash")

    def __init__(self, terms, nvars, field):
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def from_terms(cls, mapping, nvars, field):
        """Canonicalize a {monomial: coefficient} mapping into a Polynomial."""
        items = []
        for mono, c in mapping.items():
            if len(mono) != nvars:
                raise ArityMismatch("monomial %r in %d variables" % (mono, nvars))
            c = field.coerce(c)
            if c:
                items.append((tuple(mono), c))
        items.sort(key=lambda mc: grevlex_key(mc[0]), reverse=True)
        return cls(tuple(items), nvars, field)

    @classmethod
    def zero(cls, nvars, field):
        return cls((), nvars, field)

    @classmethod
    def constant(cls, value, nvars, field):
        return cls.from_terms({(0,) * nvars: value}, nvars, field)

    @classmethod
    def variable(cls, i, nvars, field):
        if not 0 <= i < nvars:
            raise ArityMismatch("variable x%d with nvars=%d" % (i, nvars))
        mono = tuple(1 if j == i else 0 for j in range(nvars))
        return cls((( mono, field.one()),), nvars, field)

    def term_dict(self):
        """Mutable {monomial: coefficient} copy of the terms."""
        return dict(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        """Max total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(m) for m, _ in self.terms)

    @property
    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {sum(m) for m, _ in self.terms}
        return len(degs) == 1

    @property
    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and sum(self.terms[0][0]) == 0)

    def coefficient(self, mono):
        for m, c in self.terms:
            if m == mono:
                return c
        return self.field.zero()

    def _check_compatible(self, other):
        if self.field != other.field:
            raise FieldMismatch("%r vs %r" % (self.field, other.field))
        if self.nvars != other.nvars:
            raise ArityMismatch("%d vs %d variables" % (self.nvars, other.nvars))

    def __add__(self, other):
        self._check_compatible(other)
        acc = dict(self.terms)
        add = self.field.add
        for m, c in other.terms:
            if m in acc:
                acc[m] = add(acc[m], c)
            else:
                acc[m] = c
        return Polynomial.from_terms(acc, self.nvars, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        neg = self.field.neg
        return Polynomial(tuple((m, neg(c)) for m, c in self.terms), self.nvars, self.field)

    def __mul__(self, other):
        self._check_compatible(other)
        acc = {}
        mul, add = self.field.mul, self.field.add
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(x + y for x, y in zip(m1, m2))
                prod = mul(c1, c2)
                if m in acc:
                    acc[m] = add(acc[m], prod)
                else:
                    acc[m] = prod
        return Polynomial.from_terms(acc, self.nvars, self.field)

    def scale(self, c):
        """Multiply by a field constant."""
        c = self.field.coerce(c)
        if not c:
            return Polynomial.zero(self.nvars, self.field)
        mul = self.field.mul
        return Polynomial(tuple((m, mul(cc, c)) for m, cc in self.terms), self.nvars, self.field)

    def evaluate(self, point):
        """Evaluate at a tuple of field elements."""
        if len(point) != self.nvars:
            raise ArityMismatch("point of length %d, nvars %d" % (len(point), self.nvars))
        f = self.field
        total = f.zero()
        for m, c in self.terms:
            v = c
            for x, e in zip(point, m):
                if e:
                    if f.kind == "prime":
                        v = v * pow(x, e, f.p) % f.p
                    else:
                        v = v * x**e
            total = f.add(total, v)
        return total

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.field == other.field
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.field, self.nvars, self.terms))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            factors = ["x%d" % i if e == 1 else "x%d^%d" % (i, e)
                       for i, e in enumerate(m) if e]
            if self.field.kind == "prime":
                # Balanced rendering: residues above p/2 print as negatives,
                # so x0^2 + (p-1) displays as x0^2 - 1. Parsing either form
                # recovers the same canonical residue.
                if c > self.field.p // 2:
                    negative, mag = True, self.field.p - c
                else:
                    negative, mag = False, c
            else:
                negative, mag = c < 0, abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append(("- " if negative else "+ ") + body)
        out = " ".join(parts)
        if out.startswith("+ "):
            return out[2:]
        return "-" + out[2:]

    def __repr__(self):
        return "Polynomial(%s)" % self

    def sorted_terms(self, order):
        """Terms sorted descending under an arbitrary order."""
        if order.kind == "grevlex":
            return self.terms
        return tuple(sorted(self.terms, key=lambda mc: order.key(mc[0]), reverse=True))


def poly_arith(f, g, op):
    """Polynomial ring arithmetic: op in {'add', 'sub', 'mul'}."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError("unknown op %r" % (op,))


def leading_term(f, order):
    """The maximal (monomial, coefficient) of f under `order`.

    Raises ZeroPolynomial for f = 0, which has no leading term.
    """
    if not f.terms:
        raise ZeroPolynomial("the zero polynomial has no leading term")
    if f.nvars != order.nvars:
        raise ArityMismatch("polynomial in %d variables under %r" % (f.nvars, order))
    if order.kind == "grevlex":
        return f.terms[0]
    return max(f.terms, key=lambda mc: order.key(mc[0]))


class PolySystem:
    """Ordered, indexed sequence of polynomials over one field.

    Zero polynomials are stripped at construction (a zero polynomial never
    violates anything and only inflates the ground set); a warning reports
    how many were dropped.
    """

    __slots__ = ("polys", "nvars", "field", "_hash")

    def __init__(self, polys, nvars=None, field=None):
        polys = tuple(polys)
        if polys:
            nvars = polys[0].nvars if nvars is None else nvars
            field = polys[0].field if field is None else field
        elif nvars is None or field is None:
            raise ValueError("empty PolySystem needs explicit nvars and field")
        kept = []
        dropped = 0
        for p in polys:
            if p.field != field:
                raise FieldMismatch("%r vs %r" % (p.field, field))
            if p.nvars != nvars:
                raise ArityMismatch("%d vs %d variables" % (p.nvars, nvars))
            if p.is_zero:
                dropped += 1
            else:
                kept.append(p)
        if dropped:
            warnings.warn("dropped %d zero polynomial(s) from system" % dropped)
        object.__setattr__(self, "polys", tuple(kept))
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("PolySystem is immutable")

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __iter__(self):
        return iter(self.polys)

    def __eq__(self, other):
        return (isinstance(other, PolySystem) and self.field == other.field
                and self.nvars == other.nvars and self.polys == other.polys)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.field, self.nvars, self.polys))
            object.__setattr__(self, "_hash", h)
        return h

    def subsystem(self, indices):
        """The PolySystem of self[i] for i in indices, in the given order."""
        return PolySystem(tuple(self.polys[i] for i in indices), self.nvars, self.field)

    @property
    def max_degree(self):
        degs = [p.degree for p in self.polys]
        return max(degs) if degs else 0

    @property
    def is_homogeneous(self):
        return all(p.is_homogeneous for p in self.polys)

    def __repr__(self):
        return "PolySystem(%d polys, nvars=%d, field=%r)" % (len(self), self.nvars, self.field)
