"""
Checking Jones slopes against surfaces
======================================

Every graph knot gets a witness surface built from annuli, Seifert surfaces
and gluings.  Its boundary slope should equal four times the quadratic
coefficient of the degree growth, and its Euler characteristic ratio should
equal twice the linear coefficient.
"""
from graphknots import parse
from graphknots.predict import predict_expr
from graphknots.surfaces import fit_expr, verify_ss

knots = [
    "T(5,3)",
    "C(7,2; T(3,2))",
    "S(T(3,2), T(5,2))",
    "S(T(3,2), T(-3,2))",
    "C(5,2; C(3,2; C(13,2; T(3,2))))",
]

# %%
for text in knots:
    k = parse(text)
    delta = fit_expr(k, 14)
    rep = verify_ss(k, delta, n_max=14)
    s = rep.surface
    print("%-36s slope %-6s chi %-4d boundary %d  ratio %-5s  %s"
          % (text, s.slope, s.euler, s.boundary_count, s.ratio, "ok" if rep.passed else "FAIL"))

# %%
# Closed forms for the same knots, built node by node, agree with the fits.
pred = predict_expr(parse("C(13,2; C(7,2; T(3,2)))"), 12)
for line in pred.trace:
    print(line)
print(pred.qp)
