"""
A cable whose top degree settles late
=====================================

For the doubly cabled trefoil C(12q^2-1, 2; C(6q-1, q; T(3,2))) the top
degree of the colored Jones polynomial follows one quadratic for small
colors and a different one from n = 2q-1 on.  The inner cable follows its
quadratic from n = 1.
"""
from graphknots import parse
from graphknots.cli import example_gap_table
from graphknots.degreefit import dplus_sequence, fit_quasipoly, sign_profile

q = 4

# %%
# Compare each sampled degree with both quadratics.
knot, rows, crossover = example_gap_table(q, 10)
print(knot)
for r in rows:
    print("n=%2d  d_+=%-8s  early=%-8s  late=%-8s" % (r["n"], r["d_plus"], r["pre"], r["stable"]))
print("late formula holds from n =", crossover)

# %%
# Right before the crossover (n = 2q-2) neither quadratic is hit: two top
# terms of the cabling sum cancel, one of them coming from a negative color.

# %%
# The leading sign alternates on the early range and stays positive later,
# so its parity pattern is not constant over all colors.
print(sign_profile(knot, 12).signs)

# %%
# The inner cable has no early range.
inner = parse("C(%d,%d; T(3,2))" % (6 * q - 1, q))
print(fit_quasipoly(dplus_sequence(inner, 12)))
