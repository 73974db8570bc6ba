"""
Torus knots and their cables
============================

Colored Jones polynomials of torus knots come from a closed formula; the
cable formula rebuilds them from the unknot.  This script compares the two
and then looks at how the top degree of a cable grows with the color.
"""
from graphknots import jones, parse
from graphknots.degreefit import dplus_sequence, fit_quasipoly, jones_slopes

# %%
# The trefoil at color 2, written in quarter powers of q.
print(jones(parse("T(3,2)"), 2))

# %%
# The same polynomial from the cable formula applied to the unknot.
for n in range(1, 6):
    same = jones(parse("C(3,2; U)"), n) == jones(parse("T(3,2)"), n)
    print("n=%d  cable of unknot equals torus knot: %s" % (n, same))

# %%
# Top degrees of two cables of the trefoil.  The (7,2) cable winds less
# steeply than the trefoil's slope 6 and inherits a rescaled quadratic; the
# (13,2) cable is steeper and its degree is governed by its own winding.
for text in ("C(7,2; T(3,2))", "C(13,2; T(3,2))"):
    seq = dplus_sequence(parse(text), 12)
    qp = fit_quasipoly(seq)
    print(text)
    print("  d_+ for n=1..6:", [str(x) for x in seq[:6]])
    print("  fitted:", qp, " stable from n =", qp.stabilization)
    print("  Jones slopes:", [str(s) for s in jones_slopes(qp)])
