#!/usr/bin/env python3
"""Coefficient rank of a polynomial system and pivot subsystems.

A system of m polynomials in n variables spans a coefficient space whose
dimension is usually far below m once the degree is fixed.  The rank tells
you how many of the inputs actually matter linearly; the pivot columns name
a concrete subsystem that spans the same space.
"""

from hellyspace import (MonomialOrder, build_coeff_matrix, helly_bounds,
                        parse_system, pivot_subsystem, radical_member, rank,
                        serialize_system)

# Six quadrics in three variables over Q.  The last three are linear
# combinations of the first three, so the rank should come out as 3.
text = """\
% field Q
% vars 3
x0^2 - x1*x2
x1^2 - x0*x2
x2^2 - x0*x1
x0^2 + x1^2 - x1*x2 - x0*x2
x0^2 - 2*x2^2 - x1*x2 + 2*x0*x1
3*x1^2 - 3*x0*x2
"""

system = parse_system(text)
order = MonomialOrder.grevlex(system.nvars)

# One column per polynomial, one row per monomial that occurs anywhere.
matrix = build_coeff_matrix(system, order)
print("coefficient matrix: %d monomial rows x %d polynomial columns"
      % matrix.shape)

res = rank(matrix)
print("m = %d polynomials, rank = %d" % (len(system), res.rank))
print("pivot columns (indices into the system): %s" % res.pivot_columns)

# helly_bounds gives the a-priori cap on the rank: the number of monomials
# of the given degree.  For homogeneous quadrics in 3 variables that is
# C(3-1+2, 2) = 6, and our rank 3 sits well under it.
cap = helly_bounds(system.nvars, 2, homogeneous=True)
print("a-priori rank cap for homogeneous quadrics in 3 vars: %d" % cap)

# pivot_subsystem picks out the rows behind the pivots.  The resulting
# subsystem generates the same linear span, hence the same ideal.
keep = pivot_subsystem(system, order)
sub = system.subsystem(keep)
print("\npivot subsystem (%d of %d polynomials):" % (len(sub), len(system)))
print(serialize_system(sub))

# Sanity check: every dropped polynomial still vanishes on the variety of
# the subsystem, i.e. lies in the radical of the ideal it generates.
for i, p in enumerate(system):
    if i in keep:
        continue
    assert radical_member(p, sub, order), "row %d escaped the subsystem" % i
print("all %d dropped rows lie in the radical of the pivot subsystem"
      % (len(system) - len(keep)))
