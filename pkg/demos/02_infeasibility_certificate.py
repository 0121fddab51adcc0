#!/usr/bin/env python3
"""Small infeasibility certificates for a broken coloring system.

The coloring family encodes a 2-coloring constraint system that is
deliberately broken by one extra edge inside a color class.  The whole
system has n + (n/2)^2 + 1 polynomials, but only a handful of them are
needed to witness that the variety is empty.  solve_basis finds such a
witness subsystem; on an input this small it takes the direct extraction
path rather than the sampling loop (see demo 04 for the loop in action),
but either way the answer is a certificate a human can read.
"""

from hellyspace import (INFEASIBLE, MonomialOrder, SolveConfig, gen_coloring,
                        is_unit_ideal, solve_basis)

n = 8
system = gen_coloring(n)
print("coloring family, n = %d: %d polynomials in %d variables"
      % (n, len(system), system.nvars))

cfg = SolveConfig(system, seed=7)
out = solve_basis(cfg, verify=True)

print("classification: %s" % out.classification)
assert out.classification is INFEASIBLE

print("certificate indices: %s" % out.basis)
print("certificate size %d out of %d (bound used: %d)"
      % (len(out.basis), len(system), out.delta_used))
print("verified against the full system: %s" % out.verified)

# The certificate really is self-contained: by itself it already
# generates the unit ideal, so the empty variety needs no other rows.
order = MonomialOrder.grevlex(system.nvars)
sub = system.subsystem(out.basis)
assert is_unit_ideal(sub, order)
print("certificate alone generates the unit ideal: True")

# Work accounting.  Every primitive call is one radical membership test;
# the phase breakdown shows which part of the search paid for them.
stats = out.result
print("\nprimitive calls: %d total" % stats.primitive_calls)
for phase, count in sorted(stats.calls_by_phase.items()):
    print("  %-11s %d" % (phase, count))
print("rounds: %d outer, %d reweighting" % (stats.rounds_alg1, stats.rounds_alg2))

# Same seed, same certificate. The run is reproducible end to end.
again = solve_basis(SolveConfig(system, seed=7))
assert again.basis == out.basis
print("\nrerun with seed 7 reproduces the certificate exactly")
