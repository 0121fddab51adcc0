"""Randomized violator-space sampling for polynomial systems.

The library finds small subsystems of a polynomial system that define the
same variety (or certify infeasibility), and small generating subsets of
homogeneous ideals, using Clarkson-style biased sampling driven by exact
Groebner-basis membership tests. Everything runs over the rationals or a
prime field with no external dependencies.

Entry points: `solve_basis` / `mingen` for the two tasks, `clarkson` for
the raw sampler over any violator oracle, `parse_system` for the file
format, and the `hellyspace` console script for the CLI.
"""

from .poly import (DEFAULT_PRIME, FieldSpec, MonomialOrder, NonPrimeModulus,
                   Polynomial, PolySystem)
from .linalg import build_coeff_matrix, helly_bounds, pivot_subsystem, rank
from .groebner import (GroebnerBasis, buchberger, clear_cache, ideal_member,
                       is_unit_ideal, normal_form, radical_member)
from .violator import (BasisResult, DeltaTooSmall, Rng, ViolatorOracle,
                       brute_force_basis, check_axioms, clarkson,
                       extract_basis, violation_set)
from .spaces import (FEASIBLE, GENERATING_SET, INFEASIBLE, MingenConfig,
                     NotHomogeneous, SolveConfig, SolveOutcome,
                     estimate_gamma, mingen, smallgen_oracle, solve_basis,
                     solve_oracle)
from .cli import (CharTwo, FieldDirectiveConflict, InfeasibleParameters,
                  OddN, ParseError, gen_coloring, gen_random, main,
                  parse_system, serialize_system)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_PRIME", "FieldSpec", "MonomialOrder", "NonPrimeModulus",
    "Polynomial", "PolySystem",
    "build_coeff_matrix", "helly_bounds", "pivot_subsystem", "rank",
    "GroebnerBasis", "buchberger", "clear_cache", "ideal_member",
    "is_unit_ideal", "normal_form", "radical_member",
    "BasisResult", "DeltaTooSmall", "Rng", "ViolatorOracle",
    "brute_force_basis", "check_axioms", "clarkson", "extract_basis",
    "violation_set",
    "FEASIBLE", "GENERATING_SET", "INFEASIBLE", "MingenConfig",
    "NotHomogeneous", "SolveConfig", "SolveOutcome", "estimate_gamma",
    "mingen", "smallgen_oracle", "solve_basis", "solve_oracle",
    "CharTwo", "FieldDirectiveConflict", "InfeasibleParameters", "OddN",
    "ParseError", "gen_coloring", "gen_random", "main", "parse_system",
    "serialize_system",
    "__version__",
]
