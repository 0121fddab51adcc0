#!/usr/bin/env python3
"""Cutting a redundant homogeneous generating set down to size."""

from hellyspace import (MingenConfig, MonomialOrder, estimate_gamma,
                        ideal_member, mingen, parse_system)

# Ten homogeneous quadrics over GF(101) that are piled-up combinations of
# just three underlying forms.  An ideal-theoretic minimal generating set
# should need only those three.
text = """\
% field 101
% vars 3
x0^2
x1^2
x0*x1 + x2^2
x0^2 + x1^2
2*x0^2 + 100*x1^2
x0^2 + x0*x1 + x2^2
x1^2 + 3*x0*x1 + 3*x2^2
5*x0^2 + 5*x1^2 + x0*x1 + x2^2
x0^2 + 2*x1^2 + 7*x0*x1 + 7*x2^2
100*x0^2 + x0*x1 + x2^2
"""

system = parse_system(text)
order = MonomialOrder.grevlex(system.nvars)

# gamma caps the generator count we are willing to accept.  estimate_gamma
# reads it off the graded structure instead of guessing.
gamma = estimate_gamma(system, order)
print("m = %d, estimated generator bound gamma = %d" % (len(system), gamma))

out = mingen(MingenConfig(system, gamma=gamma, seed=3), verify=True)
print("chosen generators: %s (size %d)" % (out.basis, len(out.basis)))
print("classification: %s, verified: %s" % (out.classification, out.verified))

# Every discarded polynomial must lie in the ideal of the survivors,
# by plain membership this time, not radical membership. Minimal
# generation is an ideal-level statement.
sub = system.subsystem(out.basis)
for i, p in enumerate(system):
    if i in out.basis:
        continue
    assert ideal_member(p, sub, order), "row %d is not generated" % i
print("all %d dropped rows reduce to 0 against the chosen generators"
      % (len(system) - len(out.basis)))

print("\nprimitive calls by phase: %s" % out.result.calls_by_phase)
