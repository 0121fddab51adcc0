"""Generic violator-space sampling engine.

A violator space is a finite ground set H together with a map vi assigning to
every subset G the set of elements that "violate" G, subject to two axioms:
consistency (no element of G violates G) and locality (if F is a subset of G
and nothing in G violates F, then F and G have identical violator sets). The
engine only ever talks to a ViolatorOracle, whose single capability is the
primitive query "does h violate G?".

Everything, ground set included, is index-based: subsets are collections of
integers 0..m-1, and the oracle owns whatever the indices refer to.

Two exact basis finders operate on small sets:

* brute_force_basis enumerates subsets by ascending cardinality (lexicographic
  within a cardinality) and returns the first whose violator set is empty, a
  minimum-cardinality basis;
* extract_basis makes one incremental pass (keep h when it violates what has
  been kept so far) followed by one single-deletion shrink pass. It is exact
  for oracles whose violator map is anti-monotone (supersets violate less),
  which both algebraic oracles in this package declare via the
  `anti_monotone` attribute, and it needs O(|G| * delta) primitive calls
  instead of an exponential enumeration.

basis2 is the multiplicity-doubling sampling algorithm: sample 6*delta^2
items from the multiset where h appears m(h) times, take an exact basis C of
the sample, and double the multiplicity of every violator of C whenever the
violators' total weight is at most a 1/(3*delta) fraction; stop when nothing
violates C. clarkson wraps it with an outer sampling loop that accumulates
violators into a working set W, sampling floor(delta*sqrt(|G|)) fresh
elements per round, and delegates to basis2 outright when |G| <= 9*delta^2.

All randomness flows through a seedable SplitMix64 stream with labeled child
streams per phase, so a run is a pure function of (input, delta, seed).
"""

import hashlib
from itertools import combinations
from math import comb, isqrt

_MASK64 = (1 << 64) - 1

# Candidate-count ceiling below which basis2 uses the subset enumeration
# directly; above it, anti-monotone oracles get the two-pass extraction.
_ENUMERATION_CAP = 2000


class DeltaTooSmall(Exception):
    """A basis exceeded the supplied combinatorial-dimension bound.

    The sampling analysis assumes delta bounds every basis size; blowing
    through it means the caller underestimated (for the ideal-generation
    oracle: gamma is below the true number of minimal generators).
    """


class GroundSetTooLarge(Exception):
    """check_axioms is exhaustive and refuses ground sets above its cap."""


class Rng:
    """Deterministic SplitMix64 stream with labeled child streams.

    Semantics are part of the reproducibility contract and will not change:
    next64 is the reference SplitMix64 step; below(k) draws next64 values,
    rejecting those >= 2^64 - (2^64 mod k), and returns the first accepted
    value mod k; child(label) is an independent stream seeded with
    seed XOR blake2b(label, digest_size=8), so adding draws in one phase
    never shifts another phase's stream.
    """

    __slots__ = ("seed", "state")

    def __init__(self, seed):
        self.seed = seed & _MASK64
        self.state = self.seed

    def next64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, k):
        """Uniform integer in [0, k)."""
        if k <= 0:
            raise ValueError("below(%d)" % k)
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            r = self.next64()
            if r < limit:
                return r % k

    def child(self, label):
        tag = int.from_bytes(
            hashlib.blake2b(label.encode(), digest_size=8).digest(), "big")
        return Rng(self.seed ^ tag)

    def sample(self, population, k):
        """Uniform k-subset of a sequence, returned sorted."""
        pool = list(population)
        n = len(pool)
        if k >= n:
            return sorted(pool)
        for i in range(k):
            j = i + self.below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return sorted(pool[:k])


class Multiplicities:
    """Positive integer weights per element; values only ever double."""

    __slots__ = ("weights", "_total")

    def __init__(self, elements):
        self.weights = {h: 1 for h in elements}
        self._total = len(self.weights)

    def of(self, h):
        return self.weights[h]

    def of_set(self, V):
        return sum(self.weights[h] for h in V)

    def total(self):
        return self._total

    def double(self, V):
        for h in V:
            self._total += self.weights[h]
            self.weights[h] *= 2


class ViolatorOracle:
    """Primitive-query interface: does h violate the subset G?

    Subclasses implement _decide(G, h) with G a sorted tuple of indices.
    primitive() wraps it with phase-tagged call counting; the engine sets
    `phase` to one of 'alg1_scans', 'alg2_scans', 'bruteforce' or 'verify'
    around its scans, and ad-hoc callers land in 'verify'.

    Subclasses whose violator map is anti-monotone (G subset G' implies
    vi(G') subset vi(G)) may set anti_monotone = True to unlock the fast
    exact basis extraction inside basis2.
    """

    anti_monotone = False

    def __init__(self, ground_size):
        self.ground_size = ground_size
        self.calls = {"alg1_scans": 0, "alg2_scans": 0, "bruteforce": 0, "verify": 0}
        self.phase = "verify"

    def primitive(self, G, h):
        self.calls[self.phase] += 1
        return self._decide(tuple(G), h)

    def _decide(self, G, h):
        raise NotImplementedError

    def snapshot(self):
        return dict(self.calls)

    def calls_since(self, snap):
        return {k: self.calls[k] - snap[k] for k in self.calls}


class BasisResult:
    """Outcome of a sampling run: basis, bound used, counters, seed."""

    __slots__ = ("basis", "delta_used", "primitive_calls", "rounds_alg1",
                 "rounds_alg2", "seed", "calls_by_phase")

    def __init__(self, basis, delta_used, primitive_calls, rounds_alg1,
                 rounds_alg2, seed, calls_by_phase):
        self.basis = sorted(basis)
        self.delta_used = delta_used
        self.primitive_calls = primitive_calls
        self.rounds_alg1 = rounds_alg1
        self.rounds_alg2 = rounds_alg2
        self.seed = seed
        self.calls_by_phase = calls_by_phase

    def __repr__(self):
        return ("BasisResult(basis=%r, delta_used=%d, primitive_calls=%d, "
                "rounds=(%d, %d), seed=%d)"
                % (self.basis, self.delta_used, self.primitive_calls,
                   self.rounds_alg1, self.rounds_alg2, self.seed))


def violation_set(C, G, oracle):
    """Elements of G outside C that violate C; exactly |G \\ C| primitive calls."""
    Cset = frozenset(C)
    Ct = tuple(sorted(Cset))
    return [h for h in sorted(G) if h not in Cset and oracle.primitive(Ct, h)]


def _has_violator(C, G, oracle):
    """Early-exit scan used by the shrink pass."""
    Cset = frozenset(C)
    Ct = tuple(sorted(Cset))
    for h in sorted(G):
        if h not in Cset and oracle.primitive(Ct, h):
            return True
    return False


def brute_force_basis(G, oracle, max_size=None):
    """Smallest basis of G by exhaustive search.

    Enumerates subsets in increasing cardinality, lexicographically within a
    cardinality, and returns the first one nothing in G violates. With
    max_size set, enumeration stops at that cardinality and DeltaTooSmall
    signals that no basis of bounded size exists.
    """
    Gs = sorted(G)
    cap = len(Gs) if max_size is None else min(max_size, len(Gs))
    for r in range(cap + 1):
        for B in combinations(Gs, r):
            Bset = frozenset(B)
            ok = True
            for h in Gs:
                if h not in Bset and oracle.primitive(B, h):
                    ok = False
                    break
            if ok:
                return list(B)
    raise DeltaTooSmall(
        "no basis of size <= %d in a set of %d elements" % (cap, len(Gs)))


def extract_basis(G, oracle):
    """Exact basis of G for anti-monotone oracles, in O(|G| * |basis|) calls.

    Pass one keeps each element that violates the set kept so far; by
    anti-monotonicity nothing in G violates the final C, so vi(C) = vi(G) by
    locality. Pass two removes, in ascending order, every element whose
    removal still leaves nothing violating; removal witnesses persist under
    anti-monotonicity, so a single pass reaches a minimal basis.
    """
    if not oracle.anti_monotone:
        raise ValueError("extract_basis requires an anti-monotone oracle")
    Gs = sorted(G)
    C = []
    for h in Gs:
        if oracle.primitive(tuple(C), h):
            C.append(h)
    for c in list(C):
        trial = [x for x in C if x != c]
        if not _has_violator(trial, Gs, oracle):
            C = trial
    return C


def _exact_basis(R, delta, oracle):
    """Basis of a sampled subset: enumeration when cheap, extraction when not."""
    oracle.phase = "bruteforce"
    n = len(R)
    candidates = sum(comb(n, k) for k in range(min(delta, n) + 1))
    if candidates <= _ENUMERATION_CAP or not oracle.anti_monotone:
        return brute_force_basis(R, oracle, max_size=delta)
    B = extract_basis(R, oracle)
    if len(B) > delta:
        raise DeltaTooSmall(
            "extracted a basis of size %d > delta = %d" % (len(B), delta))
    return B


def basis2(G, delta, oracle, rng, mult=None, stats=None):
    """Sampling with multiplicity doubling; returns a basis of G.

    Below the 6*delta^2 threshold this is plain exhaustive search. Above it,
    each round samples 6*delta^2 items without replacement from the multiset
    where h occurs mult(h) times (the sample R is the set of distinct items
    drawn), takes an exact basis C of R, and scans G for violators V of C.
    When the violators' weight is small, 3*delta*m(V) <= m(G), their
    multiplicities double. The loop ends when V is empty, at which point
    vi(C) = vi(G) by locality.
    """
    if delta < 1:
        raise ValueError("delta must be >= 1")
    Gs = sorted(G)
    if stats is None:
        stats = {"rounds_alg1": 0, "rounds_alg2": 0}
    if mult is None:
        mult = Multiplicities(Gs)
    if len(Gs) <= 6 * delta * delta:
        return _exact_basis(Gs, delta, oracle)
    size = 6 * delta * delta
    while True:
        stats["rounds_alg2"] += 1
        if mult.total() <= size:
            R = list(Gs)
        else:
            R = _weighted_multiset_sample(Gs, mult, size, rng)
        C = _exact_basis(R, delta, oracle)
        oracle.phase = "alg2_scans"
        V = violation_set(C, Gs, oracle)
        if not V:
            return C
        if 3 * delta * mult.of_set(V) <= mult.total():
            mult.double(V)


def _weighted_multiset_sample(elements, mult, k, rng):
    """k multiset items without replacement; returns sorted distinct elements."""
    weights = [mult.of(h) for h in elements]
    total = sum(weights)
    chosen = set()
    for _ in range(k):
        r = rng.below(total)
        for i, w in enumerate(weights):
            if r < w:
                break
            r -= w
        chosen.add(elements[i])
        weights[i] -= 1
        total -= 1
    return sorted(chosen)


def clarkson(G, delta, oracle, rng):
    """Two-stage sampling; returns a BasisResult whose basis has vi = vi(G).

    For |G| <= 9*delta^2 the run is a single basis2 call. Otherwise each
    round samples floor(delta*sqrt(|G|)) elements R outside the working set
    W, computes C = basis2(W union R) with fresh multiplicities, and scans G
    for violators V; W absorbs V only when |V| <= 2*sqrt(|G|) (a larger V is
    an unlucky sample and is simply redrawn). The loop exits when V is empty.
    """
    if delta < 1:
        raise ValueError("delta must be >= 1")
    Gs = sorted(G)
    g = len(Gs)
    start = oracle.snapshot()
    stats = {"rounds_alg1": 0, "rounds_alg2": 0}

    def finish(basis):
        by_phase = oracle.calls_since(start)
        total = (by_phase["alg1_scans"] + by_phase["alg2_scans"]
                 + by_phase["bruteforce"])
        return BasisResult(basis, delta, total, stats["rounds_alg1"],
                           stats["rounds_alg2"], rng.seed, by_phase)

    if g == 0:
        return finish([])
    if g <= 9 * delta * delta:
        C = basis2(Gs, delta, oracle, rng.child("alg2/0"), None, stats)
        return finish(C)
    W = set()
    sample_size = isqrt(delta * delta * g)
    call_index = 0
    while True:
        stats["rounds_alg1"] += 1
        pool = [h for h in Gs if h not in W]
        R = _alg1_sample(rng, stats["rounds_alg1"], pool, sample_size)
        C = basis2(sorted(W | set(R)), delta, oracle,
                   rng.child("alg2/%d" % call_index), None, stats)
        call_index += 1
        oracle.phase = "alg1_scans"
        V = violation_set(C, Gs, oracle)
        if not V:
            return finish(C)
        if len(V) ** 2 <= 4 * g:
            W.update(V)


def _alg1_sample(rng, round_no, pool, sample_size):
    stream = rng.child("alg1/%d" % round_no)
    return stream.sample(pool, min(sample_size, len(pool)))


def check_axioms(m, oracle):
    """Exhaustively verify the two violator-space axioms on {0..m-1}.

    Materializes vi(G) = {h in H : primitive(G, h)} for every subset G (the
    primitive is queried for members of G as well, so a broken oracle cannot
    hide behind the usual h-not-in-G convention), then checks consistency
    (G disjoint from vi(G)) and locality (F subset of G and G disjoint from
    vi(F) imply vi(F) = vi(G)). Exponential in m by design; refuses m > 12.
    """
    if m > 12:
        raise GroundSetTooLarge("exhaustive check on %d elements" % m)
    full = (1 << m) - 1
    vi = {}
    for mask in range(full + 1):
        Gt = tuple(i for i in range(m) if mask >> i & 1)
        v = 0
        for h in range(m):
            if oracle.primitive(Gt, h):
                v |= 1 << h
        vi[mask] = v
        if v & mask:
            return False
    for mask in range(full + 1):
        sub = mask
        while True:
            # sub runs over all submasks of mask, the F subset G pairs.
            if not (vi[sub] & mask) and vi[sub] != vi[mask]:
                return False
            if sub == 0:
                break
            sub = (sub - 1) & mask
    return True
