"""Groebner engine: normal forms, Buchberger's algorithm, membership tests.

This is the decision kernel behind the sampling machinery. Everything reduces
to three questions about a finite generating set F:

* normal_form(h, GB(F)) == 0, the ideal membership test;
* GB(F) == {1}, infeasibility of the system over the algebraic closure;
* 1 in <F, 1 - y*h> in one extra variable, the radical membership test
  (h vanishes wherever all of F does).

Buchberger's algorithm runs with the Gebauer-Moller pair update, which
implements both classic pruning criteria (coprime leading monomials, and the
chain criterion), and the normal selection strategy (smallest lcm first).
Output bases are reduced and monic, hence canonical for the ideal and order.

Candidate sets recur constantly during sampling runs, so computed bases go
into a bounded LRU cache keyed by generator set, order, and field. The
radical test reuses the cached basis of F: a Groebner basis stays one in the
ring with the fresh variable appended last (under both supported orders,
y-free monomials compare exactly as before, and reductions of y-free
polynomials never leave the y-free subring), so only the pairs against
1 - y*h need processing.

Coefficient growth over the rationals is controlled by stripping content
(keeping the primitive integer multiple) from every basis insertion; that
rescaling never changes the ideal.
"""

import hashlib
import threading
from collections import OrderedDict
from fractions import Fraction
from math import gcd

from .poly import (ArityMismatch, FieldMismatch, Polynomial, mono_divides,
                   mono_lcm)

_CACHE_CAPACITY = 256
_cache = OrderedDict()
_cache_lock = threading.Lock()


class GroebnerBasis:
    """A reduced, monic Groebner basis with its order and source digest."""

    __slots__ = ("gens", "order", "source_hash", "field", "nvars", "_prepped")

    def __init__(self, gens, order, source_hash, field, nvars):
        self.gens = tuple(gens)
        self.order = order
        self.source_hash = source_hash
        self.field = field
        self.nvars = nvars
        # (leading monomial, inverse of leading coefficient, term dict) per
        # generator, the shape the reducer consumes.
        prepped = []
        for g in self.gens:
            lm, lc = _lt(dict(g.terms), order.key)
            prepped.append((lm, field.inv(lc), dict(g.terms)))
        self._prepped = tuple(prepped)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    @property
    def is_unit(self):
        return len(self.gens) == 1 and self.gens[0].is_constant and not self.gens[0].is_zero

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.order == other.order
                and self.field == other.field and set(self.gens) == set(other.gens))

    def __hash__(self):
        return hash((self.order, self.field, frozenset(self.gens)))

    def __repr__(self):
        return "GroebnerBasis(%d gens, %r)" % (len(self.gens), self.order)


def _lt(d, keyf):
    m = max(d, key=keyf)
    return m, d[m]


def _strip_content(d):
    """Scale a rational term dict to primitive integer coefficients."""
    lcm = 1
    for c in d.values():
        den = c.denominator
        lcm = lcm // gcd(lcm, den) * den
    g = 0
    for c in d.values():
        g = gcd(g, abs(c.numerator * (lcm // c.denominator)))
    out = {}
    for m, c in d.items():
        out[m] = Fraction(c.numerator * (lcm // c.denominator) // g)
    return out


def _reduce_dict(h, gens, field, keyf):
    """Normal form of the term dict h against prepped generators.

    gens is a sequence of (leading monomial, inverse leading coefficient,
    term dict). Returns the fully reduced remainder as a fresh dict: no
    remainder monomial is divisible by any generator's leading monomial.
    """
    if not gens or not h:
        return dict(h)
    prime = field.kind == "prime"
    p = dict(h)
    r = {}
    if prime:
        P = field.p
    while p:
        lm = max(p, key=keyf)
        lc = p.pop(lm)
        for glm, ginv, g in gens:
            if all(a >= b for a, b in zip(lm, glm)):
                shift = tuple(a - b for a, b in zip(lm, glm))
                if prime:
                    q = lc * ginv % P
                    for m2, c2 in g.items():
                        if m2 == glm:
                            continue
                        mm = tuple(a + b for a, b in zip(m2, shift))
                        v = (p.get(mm, 0) - q * c2) % P
                        if v:
                            p[mm] = v
                        elif mm in p:
                            del p[mm]
                else:
                    q = lc * ginv
                    for m2, c2 in g.items():
                        if m2 == glm:
                            continue
                        mm = tuple(a + b for a, b in zip(m2, shift))
                        v = p.get(mm, Fraction(0)) - q * c2
                        if v:
                            p[mm] = v
                        elif mm in p:
                            del p[mm]
                break
        else:
            r[lm] = lc
    return r


def _spoly_dict(fi, fj, field, keyf):
    """S-polynomial of two prepped generators, as a term dict."""
    lmi, invi, gi = fi
    lmj, invj, gj = fj
    lcm = mono_lcm(lmi, lmj)
    si = tuple(a - b for a, b in zip(lcm, lmi))
    sj = tuple(a - b for a, b in zip(lcm, lmj))
    prime = field.kind == "prime"
    acc = {}
    if prime:
        P = field.p
        for m, c in gi.items():
            mm = tuple(a + b for a, b in zip(m, si))
            acc[mm] = c * invi % P
        for m, c in gj.items():
            mm = tuple(a + b for a, b in zip(m, sj))
            v = (acc.get(mm, 0) - c * invj) % P
            if v:
                acc[mm] = v
            elif mm in acc:
                del acc[mm]
    else:
        for m, c in gi.items():
            mm = tuple(a + b for a, b in zip(m, si))
            acc[mm] = c * invi
        for m, c in gj.items():
            mm = tuple(a + b for a, b in zip(m, sj))
            v = acc.get(mm, Fraction(0)) - c * invj
            if v:
                acc[mm] = v
            elif mm in acc:
                del acc[mm]
    return acc


def _update_pairs(G, P, t, keyf):
    """Gebauer-Moller pair update after appending generator index t to G.

    Discards new pairs whose lcm is a proper multiple of another new pair's
    lcm, keeps one representative per equal lcm, drops representatives with
    coprime leading monomials, and applies the chain criterion to old pairs.
    Mutates and returns P, a dict (i, j) -> pair lcm.
    """
    lmt = G[t][0]
    # Old pairs killed by the chain criterion through lm_t.
    for (i, j) in list(P):
        tau = P[(i, j)]
        if (mono_divides(lmt, tau)
                and mono_lcm(G[i][0], lmt) != tau
                and mono_lcm(G[j][0], lmt) != tau):
            del P[(i, j)]
    # Candidate new pairs, grouped by lcm.
    taus = {}
    for i in range(t):
        taus.setdefault(mono_lcm(G[i][0], lmt), []).append(i)
    # Keep only minimal lcms under divisibility.
    minimal = []
    for tau in sorted(taus, key=keyf):
        if not any(mono_divides(m, tau) for m in minimal):
            minimal.append(tau)
    for tau in minimal:
        members = taus[tau]
        # First criterion: one coprime pair certifies the whole equal-lcm
        # class reduces to zero, so the class is dropped entirely.
        if any(all(a == 0 or b == 0 for a, b in zip(G[i][0], lmt)) for i in members):
            continue
        P[(min(members), t)] = tau
    return P


def _prep(d, field, keyf):
    """Normalize a term dict into (lm, inverse lc, dict) for the basis list."""
    if field.kind == "rationals":
        d = _strip_content(d)
    lm, lc = _lt(d, keyf)
    if field.kind == "prime":
        inv = pow(lc, -1, field.p)
        d = {m: c * inv % field.p for m, c in d.items()}
        return (lm, 1, d)
    return (lm, field.inv(lc), d)


def _buchberger_core(seed_gb, extra, field, keyf, nvars):
    """Run Buchberger to completion and return reduced monic term dicts.

    seed_gb is a list of term dicts already known to form a Groebner basis
    (their mutual S-pairs are skipped); extra holds the remaining generators.
    Returns a list of term dicts, or the one-element unit list the moment a
    nonzero constant appears.
    """
    unit = [{(0,) * nvars: field.one()}]
    G = [_prep(d, field, keyf) for d in seed_gb]
    P = {}
    for d in extra:
        r = _reduce_dict(d, G, field, keyf)
        if not r:
            continue
        if sum(max(r, key=keyf)) == 0:
            return unit
        G.append(_prep(r, field, keyf))
        P = _update_pairs(G, P, len(G) - 1, keyf)
    while P:
        (i, j) = min(P, key=lambda ij: (keyf(P[ij]), ij))
        del P[(i, j)]
        s = _spoly_dict(G[i], G[j], field, keyf)
        r = _reduce_dict(s, G, field, keyf)
        if not r:
            continue
        if sum(max(r, key=keyf)) == 0:
            return unit
        G.append(_prep(r, field, keyf))
        P = _update_pairs(G, P, len(G) - 1, keyf)
    # Minimalize: drop generators whose lead is a multiple of another lead.
    order_asc = sorted(range(len(G)), key=lambda i: keyf(G[i][0]))
    kept = []
    for i in order_asc:
        if not any(mono_divides(G[k][0], G[i][0]) for k in kept):
            kept.append(i)
    minimal = [G[i] for i in kept]
    # Interreduce tails; leading terms are untouched since no lead divides
    # another, so one pass fully reduces.
    reduced = []
    for idx, (lm, inv, d) in enumerate(minimal):
        others = [minimal[k] for k in range(len(minimal)) if k != idx]
        r = _reduce_dict(d, others, field, keyf)
        reduced.append(r)
    # Monic canonical form.
    out = []
    for r in reduced:
        lm, lc = _lt(r, keyf)
        if field.kind == "prime":
            inv = pow(lc, -1, field.p)
            out.append({m: c * inv % field.p for m, c in r.items()})
        else:
            out.append({m: c / lc for m, c in r.items()})
    out.sort(key=lambda d: keyf(max(d, key=keyf)))
    return out


def _system_digest(polys, order, field):
    h = hashlib.sha256()
    h.update(repr(order).encode())
    h.update(repr(field).encode())
    for s in sorted(str(p) for p in polys):
        h.update(s.encode())
        h.update(b"\n")
    return h.hexdigest()


def buchberger(F, order):
    """Reduced monic Groebner basis of the ideal generated by a PolySystem.

    Results are cached (bounded LRU) under the generator set, order and
    field; permuting or duplicating generators hits the same entry and the
    reduced basis is unique, so callers may treat the result as canonical.
    """
    if F.nvars != order.nvars:
        raise ArityMismatch("system in %d variables under %r" % (F.nvars, order))
    key = (order.kind, order.nvars, F.field, frozenset(F.polys))
    with _cache_lock:
        hit = _cache.get(key)
        if hit is not None:
            _cache.move_to_end(key)
            return hit
    dicts = _buchberger_core([], [dict(p.terms) for p in F.polys],
                             F.field, order.key, F.nvars)
    gens = [Polynomial.from_terms(d, F.nvars, F.field) for d in dicts]
    gb = GroebnerBasis(gens, order, _system_digest(F.polys, order, F.field),
                       F.field, F.nvars)
    with _cache_lock:
        _cache[key] = gb
        _cache.move_to_end(key)
        while len(_cache) > _CACHE_CAPACITY:
            _cache.popitem(last=False)
    return gb


def clear_cache():
    with _cache_lock:
        _cache.clear()


def normal_form(h, gb):
    """Remainder of h on division by a Groebner basis.

    The remainder r satisfies h - r in <gb> and no term of r is divisible by
    any leading monomial of gb; for a Groebner basis it is unique, so
    r == 0 decides ideal membership.
    """
    if h.field != gb.field:
        raise FieldMismatch("%r vs %r" % (h.field, gb.field))
    if h.nvars != gb.nvars:
        raise ArityMismatch("%d vs %d variables" % (h.nvars, gb.nvars))
    r = _reduce_dict(dict(h.terms), gb._prepped, gb.field, gb.order.key)
    return Polynomial.from_terms(r, h.nvars, h.field)


def ideal_member(h, F, order):
    """True iff h lies in the ideal generated by F."""
    if h.is_zero:
        return True
    if len(F) == 0:
        return False
    return normal_form(h, buchberger(F, order)).is_zero


def is_unit_ideal(F, order):
    """True iff F generates the whole ring, i.e. the system has no solution
    over the algebraic closure."""
    if len(F) == 0:
        return False
    return buchberger(F, order).is_unit


def radical_member(h, F, order):
    """True iff h lies in the radical of <F>.

    Decided by adjoining a fresh last variable y and asking whether
    1 in <F, 1 - y*h>; equivalently, whether h vanishes on every common zero
    of F over the algebraic closure. Runs the extended-ring Buchberger seeded
    with the cached basis of F, so only pairs against 1 - y*h are processed.
    """
    if h.is_zero:
        return True
    if len(F) == 0:
        return False
    gbF = buchberger(F, order)
    if gbF.is_unit:
        return True
    if normal_form(h, gbF).is_zero:
        return True
    if h.is_constant:
        # A nonzero constant lies in a radical only when the ideal is the
        # whole ring, which was just excluded.
        return False
    field = F.field
    nv = F.nvars + 1
    keyf = order.extend().key
    lifted = [{m + (0,): c for m, c in g.terms} for g in gbF.gens]
    q = {m + (1,): field.neg(c) for m, c in h.terms}
    one = (0,) * nv
    q[one] = field.add(q.get(one, field.zero()), field.one())
    result = _buchberger_core(lifted, [q], field, keyf, nv)
    return len(result) == 1 and sum(max(result[0], key=keyf)) == 0
