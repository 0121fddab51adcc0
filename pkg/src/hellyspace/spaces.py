"""The two algebraic violator spaces, bound to the sampling engine.

Given a polynomial system H, the solve space declares h a violator of G
whenever h is outside the radical of <G>, i.e. the variety of G is not
contained in the variety of h. A basis then cuts out exactly the variety of
the whole system, and when the basis generates the unit ideal it is a
certificate that the system has no solution at all. The sampling size bound
delta comes from linear algebra: the rank of the coefficient matrix bounds
every basis (the rank-D Helly property), and it is the default when no
override is supplied.

The small-generators space declares h a violator of G whenever h is outside
the ideal <G> itself (no radical). For a homogeneous input this finds a
generating set of size at most gamma, where gamma is a caller-supplied upper
bound on the size of a minimal homogeneous generating set; when gamma is
exactly that size, the output is a minimal generating set.

Both violator maps shrink as G grows (membership in an ideal or its radical
only gets easier with more generators), so the oracles declare anti_monotone
and unlock the fast exact basis extraction in the engine.
"""

from .groebner import ideal_member, is_unit_ideal, radical_member
from .linalg import build_coeff_matrix, rank
from .poly import MonomialOrder, leading_term, mono_divides
from .violator import Rng, ViolatorOracle, clarkson, violation_set

FEASIBLE = "Feasible"
INFEASIBLE = "Infeasible"
GENERATING_SET = "GeneratingSet"


class NotHomogeneous(Exception):
    """mingen requires every input polynomial to be homogeneous."""


class SolveOracle(ViolatorOracle):
    """Primitive: h violates G iff h is not in the radical of <G>."""

    anti_monotone = True

    def __init__(self, system, order):
        super().__init__(len(system))
        self.system = system
        self.order = order

    def _decide(self, G, h):
        return not radical_member(self.system[h], self.system.subsystem(G),
                                  self.order)


class SmallGenOracle(ViolatorOracle):
    """Primitive: h violates G iff h is not in the ideal <G>."""

    anti_monotone = True

    def __init__(self, system, order):
        super().__init__(len(system))
        self.system = system
        self.order = order

    def _decide(self, G, h):
        return not ideal_member(self.system[h], self.system.subsystem(G),
                                self.order)


def solve_oracle(system, order):
    """Violator oracle of the solve space over a PolySystem."""
    return SolveOracle(system, order)


def smallgen_oracle(system, order):
    """Violator oracle of the small-generators space over a PolySystem."""
    return SmallGenOracle(system, order)


class SolveConfig:
    """Inputs of a solve-basis run."""

    __slots__ = ("system", "delta_override", "order", "seed")

    def __init__(self, system, delta_override=None, order=None, seed=0):
        if delta_override is not None and delta_override < 1:
            raise ValueError("delta_override must be >= 1")
        self.system = system
        self.delta_override = delta_override
        self.order = order if order is not None else MonomialOrder.grevlex(system.nvars)
        self.seed = seed


class MingenConfig:
    """Inputs of a mingen run; gamma bounds the minimal generator count."""

    __slots__ = ("system", "gamma", "order", "seed", "assume_gb",
                 "allow_inhomogeneous")

    def __init__(self, system, gamma, order=None, seed=0, assume_gb=False,
                 allow_inhomogeneous=False):
        if gamma < 1:
            raise ValueError("gamma must be >= 1")
        self.system = system
        self.gamma = gamma
        self.order = order if order is not None else MonomialOrder.grevlex(system.nvars)
        self.seed = seed
        self.assume_gb = assume_gb
        self.allow_inhomogeneous = allow_inhomogeneous


class SolveOutcome:
    """Basis indices, classification, bound used, stats, verification report."""

    __slots__ = ("basis", "classification", "delta_used", "result",
                 "verification")

    def __init__(self, basis, classification, delta_used, result, verification):
        self.basis = basis
        self.classification = classification
        self.delta_used = delta_used
        self.result = result
        self.verification = verification

    @property
    def verified(self):
        return None if self.verification is None else self.verification["passed"]

    def __repr__(self):
        return ("SolveOutcome(basis=%r, classification=%r, delta_used=%d)"
                % (self.basis, self.classification, self.delta_used))


def _verify_scan(oracle, basis):
    """Re-check the output certificate: nothing outside the basis violates it.

    Costs |H \\ B| primitive calls, tallied in the separate verify ledger so
    the algorithmic counters stay comparable across runs.
    """
    oracle.phase = "verify"
    failures = violation_set(basis, range(oracle.ground_size), oracle)
    return {
        "checked": oracle.ground_size - len(basis),
        "passed": not failures,
        "failures": failures,
    }


def solve_basis(cfg, verify=False):
    """Find a small subsystem with the same variety as the whole system.

    delta defaults to the exact coefficient-matrix rank, which provably
    bounds every basis of the solve space. The returned classification is
    Infeasible exactly when the basis generates the unit ideal, in which case
    the basis is a certificate that the system has no solution over the
    algebraic closure of the coefficient field.
    """
    system = cfg.system
    if cfg.delta_override is not None:
        delta = cfg.delta_override
    else:
        delta = max(1, rank(build_coeff_matrix(system, cfg.order)).rank)
    oracle = SolveOracle(system, cfg.order)
    result = clarkson(range(len(system)), delta, oracle, Rng(cfg.seed))
    if len(system) and is_unit_ideal(system.subsystem(result.basis), cfg.order):
        classification = INFEASIBLE
    else:
        classification = FEASIBLE
    verification = _verify_scan(oracle, result.basis) if verify else None
    if verification is not None:
        result.calls_by_phase["verify"] += verification["checked"]
    return SolveOutcome(result.basis, classification, delta, result, verification)


def mingen(cfg, verify=False):
    """Extract a generating set of size <= gamma from a homogeneous system.

    Every dropped polynomial lies in the ideal of the kept ones, so the
    output generates the same ideal; with gamma equal to the minimal number
    of generators the output is a minimal generating set. Raises
    NotHomogeneous unless every member is homogeneous (or the config opts
    out, in which case the size guarantee loses its graded meaning), and
    DeltaTooSmall when gamma underestimates the true minimal count.
    """
    system = cfg.system
    if not cfg.allow_inhomogeneous and not system.is_homogeneous:
        raise NotHomogeneous(
            "mingen needs homogeneous polynomials; pass allow_inhomogeneous "
            "(--allow-inhomogeneous) to waive the graded size guarantee")
    gamma = cfg.gamma
    if cfg.assume_gb:
        gamma = max(1, min(gamma, estimate_gamma(system, cfg.order)))
    oracle = SmallGenOracle(system, cfg.order)
    result = clarkson(range(len(system)), gamma, oracle, Rng(cfg.seed))
    verification = _verify_scan(oracle, result.basis) if verify else None
    if verification is not None:
        result.calls_by_phase["verify"] += verification["checked"]
    return SolveOutcome(result.basis, GENERATING_SET, gamma, result, verification)


def estimate_gamma(system, order):
    """Number of minimal generators of the leading-term ideal.

    When the system is known to contain a Groebner basis for `order`, this
    counts the leading monomials not divisible by another leading monomial,
    an upper bound for the size of a minimal generating set (and the reason
    the bound is only safe under that hypothesis).
    """
    lms = {leading_term(p, order)[0] for p in system}
    return sum(
        1 for m in lms
        if not any(other != m and mono_divides(other, m) for other in lms))
