"""Closed-form predictions of the degree quasi-polynomial under cabling and sums.

Every predictor returns a :class:`DeltaPrediction`.  Predictions that are only
claimed for large n carry ``valid_from=None`` until :func:`cross_validate`
compares them against a computed degree sequence.
"""
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd

from .cjones import cable_indices, jones
from .degreefit import QuasiPoly, dplus_sequence, frac_str
from .knotexpr import Cable, Sum, Torus, Unknot, as_expr, format_expr, torus_from_pair

HALF = Fraction(1, 2)

BELOW = "BelowSlope"
ABOVE = "AboveSlope"
AT = "AtSlope"
OUTSIDE_GAP = "OutsideM1Gap"


class PredictError(ValueError):
    pass


class PrecondViolated(PredictError):
    pass


class PredictionMismatch(PredictError):
    pass


def lcm(x, y):
    return x * y // gcd(x, y)


@dataclass(frozen=True)
class GQuadratic:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    tag: str = ""

    def __call__(self, x):
        x = Fraction(x)
        return self.alpha * x * x + self.beta * x + self.gamma


def build_g(p, q, qp_child, m, sign, name="g"):
    """``g_m^{+/-}(x) = (-pq + 4q^2 a_m) x^2 + (-p + 4q a_m +/- 2q b_m) x + a_m +/- b_m + c_m``.

    ``m`` is a residue modulo the child's period; ``sign`` is ``+1`` or ``-1``.
    """
    a, b, c = qp_child.triple(m)
    s = 1 if sign > 0 else -1
    return GQuadratic(
        alpha=-p * q + 4 * q * q * a,
        beta=-p + 4 * q * a + s * 2 * q * b,
        gamma=a + s * b + c,
        tag="%s_%d^%s" % (name, m % qp_child.period, "+" if s > 0 else "-"),
    )


@dataclass(frozen=True)
class SnPartition:
    n: int
    q: int
    n_child: int
    minus: tuple
    zero: tuple
    plus: tuple

    @property
    def all(self):
        return self.minus + self.zero + self.plus


def sn_partition(n, q, n_child):
    """Split ``S_n`` at ``-N - 1/2`` and ``N`` for the companion bound ``N``."""
    ks = [Fraction(j, 2) for j in cable_indices(n)]
    lo = -n_child - HALF
    minus = tuple(k for k in ks if k <= lo)
    zero = tuple(k for k in ks if lo < k < n_child)
    plus = tuple(k for k in ks if k >= n_child)
    return SnPartition(n, q, n_child, minus, zero, plus)


def companion_bound(stabilization, q):
    """Least ``N >= 0`` with ``2qN + 1 >= stabilization``.

    Converts the observed first color of agreement into the bound used to
    split ``S_n``, so that all colors ``|2qk+1|`` with ``k`` outside the
    middle block lie in the agreeing range.
    """
    if stabilization is None:
        raise PrecondViolated("child stabilization unknown; cross-validate the child first")
    s = max(int(stabilization) - 1, 0)
    return -(-s // (2 * q))


@dataclass(frozen=True)
class DeltaPrediction:
    qp: QuasiPoly
    case: str
    cases: tuple = ()  # (residue or parity, tag) pairs
    c_sigma: object = None  # {0: C_even, 1: C_odd}
    valid_from: object = None
    n_child: object = None
    trace: tuple = ()

    def __call__(self, n):
        return self.qp(n)

    def to_json(self):
        out = self.qp.to_json()
        out["case"] = self.case
        out["C_sigma"] = None if self.c_sigma is None else {
            "even": frac_str(self.c_sigma[0]), "odd": frac_str(self.c_sigma[1])}
        out["valid_from"] = self.valid_from
        return out


def _merge_case(tags):
    tags = set(tags)
    return tags.pop() if len(tags) == 1 else "Mixed"


def _check_b_nonpositive(qp, who):
    for a, b, c in qp.coeffs:
        if b > 0:
            raise PredictError("%s emitted B = %s > 0" % (who, b))


# -- torus knots and sums -----------------------------------------------------

def delta_torus(a, b):
    """``(ab/4) n^2 - ab/4 - (1 + (-1)^n)(a-2)(b-2)/8``, exact for every n >= 1."""
    if not (a > b > 1) or gcd(a, b) != 1:
        raise PrecondViolated("delta_torus needs coprime a > b > 1, got (%d,%d)" % (a, b))
    quad = Fraction(a * b, 4)
    odd = (quad, Fraction(0), -quad)
    even = (quad, Fraction(0), -quad - Fraction((a - 2) * (b - 2), 4))
    qp = QuasiPoly(2, (even, odd), 1).minimized()
    return DeltaPrediction(qp, "Torus", valid_from=1, trace=("T(%d,%d): delta_torus" % (a, b),))


DELTA_UNKNOT = QuasiPoly(1, ((Fraction(0), HALF, -HALF),), 1)


def delta_unknot():
    return DeltaPrediction(DELTA_UNKNOT, "Unknot", valid_from=1, trace=("U: quantum integer",))


def delta_sum(qp1, qp2):
    """``delta_1(n) + delta_2(n) - n/2 + 1/2``."""
    period = lcm(qp1.period, qp2.period)
    c1, c2 = qp1.expanded(period), qp2.expanded(period)
    coeffs = tuple(
        (x[0] + y[0], x[1] + y[1] - HALF, x[2] + y[2] + HALF) for x, y in zip(c1, c2))
    stab = None
    if qp1.stabilization is not None and qp2.stabilization is not None:
        stab = max(qp1.stabilization, qp2.stabilization)
    return QuasiPoly(period, coeffs, stab).minimized()


# -- cables -------------------------------------------------------------------

def _f_value(p, q, k, child_dplus):
    m = 2 * q * k + 1
    return -p * k * (q * k + 1) + Fraction(child_dplus(abs(int(m))))


def _c_sigma(p, q, qp_child, child_dplus, n_child, sigma, span):
    """``max{f(k^+), f(k^-), M_0}`` for the parity class ``sigma`` of n.

    ``f`` on the outer blocks of ``S_n`` is the g/h quadratic for the residue
    of ``|2qk+1|``.  Those quadratics are monotone on the blocks in the
    regimes where this is called, so scanning the ``span`` points nearest the
    middle of each block covers every residue's extremum.  ``M_0`` uses the
    companion's actual degrees on the middle block.
    """
    n = 2 * (n_child + span + 2) + sigma
    part = sn_partition(n, q, n_child)
    per = qp_child.period

    def g_at(k):
        m = abs(int(2 * q * k + 1)) % per
        return build_g(p, q, qp_child, m, 1 if k >= 0 else -1)(k)

    cands = [g_at(k) for k in part.plus[:span]]
    cands += [g_at(k) for k in part.minus[-span:]]
    cands += [_f_value(p, q, k, child_dplus) for k in part.zero]
    return max(cands)


def delta_cable_period2(qp_child, p, q, child_dplus):
    """Prediction for ``C(p,q; K)`` from a child with period <= 2 and b <= 0.

    Below the child's slope the quadratic grows like ``q^2 a n^2``; at or
    above it the cable's degree is ``pq(n^2-1)/4 + C_sigma`` with
    ``C_sigma`` computed from its definition.
    """
    qp_child = qp_child.minimized()
    if qp_child.period > 2:
        raise PrecondViolated("child period %d > 2" % qp_child.period)
    if q < 2 or gcd(abs(p), q) != 1:
        raise PrecondViolated("cable parameters (%d,%d) invalid" % (p, q))
    slope = Fraction(p, q)
    for a, b, c in qp_child.coeffs:
        if b > 0:
            raise PrecondViolated("child has b = %s > 0" % b)
        if b == 0 and slope == 4 * a:
            raise PrecondViolated("p/q = 4a = %s with b = 0 is not covered" % slope)

    n_child = None
    coeffs, cases, csig = [], [], {}
    for sigma in (0, 1):
        i = (q * (sigma - 1) + 1) % 2
        a, b, c = qp_child.triple(i)
        if slope < 4 * a:
            coeffs.append((q * q * a,
                           q * b + Fraction((q - 1) * (p - 4 * q * a), 2),
                           a * (q - 1) ** 2 - (b + Fraction(p, 2)) * (q - 1) + c))
            cases.append((sigma, BELOW))
        else:
            if n_child is None:
                n_child = companion_bound(qp_child.stabilization, q)
            cs = _c_sigma(p, q, qp_child, child_dplus, n_child, sigma, 1)
            csig[sigma] = cs
            quad = Fraction(p * q, 4)
            coeffs.append((quad, Fraction(0), cs - quad))
            cases.append((sigma, ABOVE if slope > 4 * a else AT))
    qp = QuasiPoly(2, tuple(coeffs)).minimized()
    _check_b_nonpositive(qp, "delta_cable_period2")
    return DeltaPrediction(
        qp, _merge_case(t for _, t in cases), tuple(cases),
        c_sigma=(csig if len(csig) == 2 else (csig or None)), n_child=n_child)


def delta_cable_torus(a, b, p, q):
    """Closed form for the ``(p,q)`` cable of ``T(a,b)``, valid for every n >= 1."""
    if not (a > b > 1) or gcd(a, b) != 1:
        raise PrecondViolated("need coprime a > b > 1")
    if q < 2 or gcd(abs(p), q) != 1:
        raise PrecondViolated("cable parameters (%d,%d) invalid" % (p, q))
    slope = Fraction(p, q)
    ab = a * b
    tw = Fraction((a - 2) * (b - 2), 8)

    def parity_term(i):
        return (1 + (-1) ** i) * tw

    coeffs, cases, csig = [], [], None
    if slope < ab:
        for sigma in (0, 1):
            i = (q * (sigma - 1) + 1) % 2
            coeffs.append((Fraction(q * q * ab, 4),
                           Fraction((q - 1) * (p - q * ab), 2),
                           Fraction(ab, 4) * (q - 1) ** 2 - Fraction(p, 2) * (q - 1)
                           - Fraction(ab, 4) - parity_term(i)))
            cases.append((sigma, BELOW))
    elif slope > ab:
        lin = -p + q * ab

        def g(m, k):
            return q * lin * k * k + lin * k - parity_term(m)

        csig = {0: g((1 - q) % 2, -HALF), 1: g(1, Fraction(0))}
        quad = Fraction(p * q, 4)
        coeffs = [(quad, Fraction(0), csig[0] - quad), (quad, Fraction(0), csig[1] - quad)]
        cases = [(0, ABOVE), (1, ABOVE)]
    else:
        raise PrecondViolated("p/q = ab is not covered")
    qp = QuasiPoly(2, tuple(coeffs), 1).minimized()
    return DeltaPrediction(qp, _merge_case(t for _, t in cases), tuple(cases), csig, valid_from=1,
                           trace=("C(%d,%d; T(%d,%d)): delta_cable_torus" % (p, q, a, b),))


def m1_gap(qp_child):
    """``max |b(i) - b(j)|`` over integers ``i = j (mod 2)``."""
    per = qp_child.period
    best = Fraction(0)
    for i in range(2 * per):
        for j in range(i % 2, 2 * per, 2):
            best = max(best, abs(qp_child.b(i) - qp_child.b(j)))
    return best


def delta_cable_monoslope(qp_child, p, q, child_dplus, M1=None):
    """Prediction for a cable of a child with constant a and arbitrary period."""
    qp_child = qp_child.minimized()
    a_vals = {t[0] for t in qp_child.coeffs}
    if len(a_vals) != 1:
        raise PrecondViolated("child a(n) is not constant")
    a = a_vals.pop()
    if q < 2 or gcd(abs(p), q) != 1:
        raise PrecondViolated("cable parameters (%d,%d) invalid" % (p, q))
    bs = [t[1] for t in qp_child.coeffs]
    if any(b > 0 for b in bs):
        raise PrecondViolated("child has b > 0")
    if M1 is None:
        M1 = m1_gap(qp_child)
    slope = Fraction(p, q)
    per = qp_child.period
    if slope == 4 * a and any(b == 0 for b in bs):
        raise PrecondViolated("p/q = 4a with some b = 0 is not covered")
    if 4 * a - M1 <= slope < 4 * a:
        raise PrecondViolated("p/q = %s lies in the gap [4a - M1, 4a) = [%s, %s)"
                              % (slope, 4 * a - M1, 4 * a))

    if slope < 4 * a - M1:
        coeffs = []
        for r in range(per):
            i = (q * (r - 1) + 1) % per
            _, b, c = qp_child.triple(i)
            coeffs.append((q * q * a,
                           q * b + Fraction((q - 1) * (p - 4 * q * a), 2),
                           a * (q - 1) ** 2 - (b + Fraction(p, 2)) * (q - 1) + c))
        qp = QuasiPoly(per, tuple(coeffs)).minimized()
        _check_b_nonpositive(qp, "delta_cable_monoslope")
        return DeltaPrediction(qp, OUTSIDE_GAP, tuple((r, OUTSIDE_GAP) for r in range(per)))

    n_child = companion_bound(qp_child.stabilization, q)
    csig = {s: _c_sigma(p, q, qp_child, child_dplus, n_child, s, per) for s in (0, 1)}
    quad = Fraction(p * q, 4)
    tag = ABOVE if slope > 4 * a else AT
    qp = QuasiPoly(2, tuple((quad, Fraction(0), csig[s] - quad) for s in (0, 1))).minimized()
    return DeltaPrediction(qp, tag, ((0, tag), (1, tag)), csig, n_child=n_child)


# -- cross validation and the whole-expression pipeline -------------------------

def first_agreement(qp, seq):
    """Least n0 with ``qp(n) == seq[n-1]`` for all sampled ``n >= n0``; None if the last differs."""
    n0 = None
    for n in range(len(seq), 0, -1):
        if qp(n) != seq[n - 1]:
            break
        n0 = n
    return n0


def cross_validate(pred, seq):
    """Attach ``valid_from`` from a computed degree sequence.

    Raises :class:`PredictionMismatch` when the prediction disagrees with the
    last sampled value, or when a closed form claimed for every n fails
    anywhere in the window.
    """
    n0 = first_agreement(pred.qp, seq)
    if n0 is None:
        raise PredictionMismatch("prediction %s disagrees at n=%d: %s != %s"
                                 % (pred.qp, len(seq), pred.qp(len(seq)), seq[-1]))
    if pred.valid_from is not None and n0 > pred.valid_from:
        raise PredictionMismatch("prediction claimed from n=%d but first agrees from n=%d"
                                 % (pred.valid_from, n0))
    return replace(pred, qp=pred.qp.with_stabilization(n0, len(seq)), valid_from=n0)


def child_dplus_oracle(child, cache=None, ceiling=None):
    def oracle(m):
        return jones(child, m, cache, ceiling).degree_data()[0]
    return oracle


def predict_expr(k, n_max=16, cache=None, ceiling=None, validate=True):
    """Prediction for a whole expression, choosing a closed form per node.

    Each node's prediction is cross-validated against its own computed
    degree sequence up to ``n_max`` (when ``validate``), and the observed
    agreement start feeds the companion bound of the parent cable.
    """
    k = as_expr(k)
    pred = _predict_node(k, n_max, cache, ceiling, validate)
    return pred


def _validated(k, pred, n_max, cache, ceiling, validate):
    if not validate:
        return pred
    seq = dplus_sequence(k, n_max, cache, ceiling)
    return cross_validate(pred, seq)


def _predict_node(k, n_max, cache, ceiling, validate):
    name = format_expr(k)
    if isinstance(k, Unknot):
        return delta_unknot()
    if isinstance(k, Torus):
        if k.a < 0:
            raise PrecondViolated("%s: no predictor for mirrored torus knots" % name)
        return _validated(k, delta_torus(k.a, k.b), n_max, cache, ceiling, validate)
    if isinstance(k, Sum):
        left = _predict_node(k.left, n_max, cache, ceiling, validate)
        right = _predict_node(k.right, n_max, cache, ceiling, validate)
        qp = delta_sum(left.qp, right.qp)
        pred = DeltaPrediction(qp, "Sum", trace=left.trace + right.trace + (name + ": delta_sum",))
        return _validated(k, pred, n_max, cache, ceiling, validate)
    if isinstance(k, Cable):
        child = k.child
        if isinstance(child, Unknot):
            t = torus_from_pair(k.p, k.q)
            if isinstance(t, Unknot):
                pred = delta_unknot()
            elif t.a < 0:
                raise PrecondViolated("%s = %s: no predictor for mirrored torus knots"
                                      % (name, format_expr(t)))
            else:
                pred = delta_torus(t.a, t.b)
            return replace(pred, trace=(name + " = " + format_expr(t) + ": delta_torus",))
        if isinstance(child, Torus) and child.a > 0:
            pred = delta_cable_torus(child.a, child.b, k.p, k.q)
            return _validated(k, pred, n_max, cache, ceiling, validate)
        cpred = _predict_node(child, n_max, cache, ceiling, validate)
        oracle = child_dplus_oracle(child, cache, ceiling)
        if cpred.qp.period <= 2:
            pred = delta_cable_period2(cpred.qp, k.p, k.q, oracle)
            how = "delta_cable_period2"
        else:
            pred = delta_cable_monoslope(cpred.qp, k.p, k.q, oracle)
            how = "delta_cable_monoslope"
        pred = replace(pred, trace=cpred.trace + ("%s: %s [%s]" % (name, how, pred.case),))
        return _validated(k, pred, n_max, cache, ceiling, validate)
    raise TypeError("not a knot expression: %r" % (k,))
