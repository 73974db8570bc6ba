"""Degree sequences, exact quasi-polynomial fits, Jones slopes and leading signs."""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .cjones import default_cache, jones
from .knotexpr import as_expr


class NoFit(ValueError):
    pass


def frac_str(x):
    x = Fraction(x)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_frac(s):
    return Fraction(s)


@dataclass(frozen=True)
class QuasiPoly:
    """``a(n) n^2 + b(n) n + c(n)`` with coefficients periodic in n.

    ``coeffs[i]`` is the triple used for ``n % period == i``.  ``stabilization``
    is the first sampled n from which the sequence agrees with the formula
    (``None`` for closed forms that carry no sampling information).
    """

    period: int
    coeffs: tuple
    stabilization: object = None
    n_max: object = None

    def __post_init__(self):
        if self.period < 1 or len(self.coeffs) != self.period:
            raise ValueError("need one coefficient triple per residue class")
        object.__setattr__(self, "coeffs",
                           tuple(tuple(Fraction(x) for x in t) for t in self.coeffs))

    def triple(self, n):
        return self.coeffs[n % self.period]

    def __call__(self, n):
        a, b, c = self.triple(n)
        return a * n * n + b * n + c

    def a(self, n):
        return self.triple(n)[0]

    def b(self, n):
        return self.triple(n)[1]

    def c(self, n):
        return self.triple(n)[2]

    def expanded(self, period):
        """Same function written with a multiple of the period."""
        if period % self.period:
            raise ValueError("%d is not a multiple of %d" % (period, self.period))
        return tuple(self.coeffs[i % self.period] for i in range(period))

    def minimized(self):
        for d in range(1, self.period + 1):
            if self.period % d == 0 and all(
                    self.coeffs[i] == self.coeffs[i % d] for i in range(self.period)):
                return QuasiPoly(d, self.coeffs[:d], self.stabilization, self.n_max)
        return self

    def same_function(self, other):
        """Equal coefficient data, ignoring stabilization bookkeeping."""
        x, y = self.minimized(), other.minimized()
        return x.period == y.period and x.coeffs == y.coeffs

    def with_stabilization(self, stabilization, n_max=None):
        return QuasiPoly(self.period, self.coeffs, stabilization, n_max)

    def to_json(self):
        out = {
            "period": self.period,
            "classes": [
                {"residue": i, "a": frac_str(a), "b": frac_str(b), "c": frac_str(c)}
                for i, (a, b, c) in enumerate(self.coeffs)
            ],
            "stabilization": self.stabilization,
            "n_max": self.n_max,
        }
        return out

    @classmethod
    def from_json(cls, blob):
        classes = sorted(blob["classes"], key=lambda r: r["residue"])
        coeffs = [(parse_frac(r["a"]), parse_frac(r["b"]), parse_frac(r["c"])) for r in classes]
        return cls(blob["period"], tuple(coeffs), blob.get("stabilization"), blob.get("n_max"))

    def __str__(self):
        rows = []
        for i, (a, b, c) in enumerate(self.coeffs):
            rows.append("n%%%d==%d: %s n^2 + %s n + %s" % (self.period, i, a, b, c))
        return "; ".join(rows)


def dplus_sequence(k, n_max, cache=None, ceiling=None, jobs=1):
    """``[d_+ J_{k,n} for n = 1..n_max]`` as exact Fractions."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    k = as_expr(k)
    if cache is None:
        cache = default_cache()

    def one(n):
        return jones(k, n, cache, ceiling).degree_data()[0]

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(one, range(1, n_max + 1)))
    return [one(n) for n in range(1, n_max + 1)]


def _interpolate(points):
    """Quadratic ``(a, b, c)`` through three ``(n, value)`` points."""
    (x0, y0), (x1, y1), (x2, y2) = points
    x0, x1, x2 = Fraction(x0), Fraction(x1), Fraction(x2)
    d01 = (y1 - y0) / (x1 - x0)
    d12 = (y2 - y1) / (x2 - x1)
    a = (d12 - d01) / (x2 - x0)
    b = d01 - a * (x0 + x1)
    c = y0 - a * x0 * x0 - b * x0
    return a, b, c


def _try_period(seq, period, tail):
    coeffs = []
    for r in range(period):
        # n = index + 1
        pts = [(n, seq[n - 1]) for n in range(1, len(seq) + 1) if n % period == r]
        if len(pts) < 3 + tail:
            return None
        a, b, c = _interpolate(pts[-3:])
        if any(a * n * n + b * n + c != v for n, v in pts[-(3 + tail):]):
            return None
        coeffs.append((a, b, c))
    qp = QuasiPoly(period, tuple(coeffs))
    stab = len(seq) + 1
    for n in range(len(seq), 0, -1):
        if qp(n) != seq[n - 1]:
            break
        stab = n
    return qp.with_stabilization(stab, len(seq))


def fit_quasipoly(seq, max_period=6, tail=2):
    """Exact interpolation fit of a degree sequence indexed from n = 1.

    For each period (smallest first) the last three points of every residue
    class determine a quadratic, which must also reproduce the ``tail``
    points before them.  Periods whose classes are too short to check are
    skipped.  The stabilization is the least n from which every sampled value
    agrees.
    """
    seq = [Fraction(x) for x in seq]
    checked = 0
    for period in range(1, max_period + 1):
        if len(seq) < period * (3 + tail):
            continue
        checked += 1
        qp = _try_period(seq, period, tail)
        if qp is not None:
            return qp
    if not checked:
        raise NoFit("sequence of length %d too short for tail=%d" % (len(seq), tail))
    raise NoFit("no period <= %d fits the last %d points of each class" % (max_period, 3 + tail))


def fit_segment(seq, start, stop, max_period=2):
    """Heuristic fit of ``seq`` restricted to ``start <= n <= stop`` (no tail check).

    Used to describe the pre-stable part of a degree sequence; the result is
    only a description of the sampled values.
    """
    for period in range(1, max_period + 1):
        coeffs = []
        ok = True
        for r in range(period):
            pts = [(n, Fraction(seq[n - 1])) for n in range(start, stop + 1) if n % period == r]
            if len(pts) < 3:
                ok = False
                break
            a, b, c = _interpolate(pts[:3])
            if any(a * n * n + b * n + c != v for n, v in pts):
                ok = False
                break
            coeffs.append((a, b, c))
        if ok:
            return QuasiPoly(period, tuple(coeffs), start, stop)
    return None


def jones_slopes(qp):
    return sorted({4 * a for a, _, _ in qp.coeffs})


def condition_delta(qp):
    """Check period <= 2, constant a with 4a integral, and constant b <= 0.

    Returns ``(holds, reasons)`` where reasons lists each failed clause.
    """
    qp = qp.minimized()
    reasons = []
    if qp.period > 2:
        reasons.append("period %d > 2" % qp.period)
    a_vals = {t[0] for t in qp.coeffs}
    b_vals = {t[1] for t in qp.coeffs}
    if len(a_vals) > 1:
        reasons.append("a(n) not constant")
    elif (4 * next(iter(a_vals))).denominator != 1:
        reasons.append("4a not an integer")
    if len(b_vals) > 1:
        reasons.append("b(n) not constant")
    if any(b > 0 for b in b_vals):
        reasons.append("b > 0")
    return not reasons, reasons


@dataclass
class SignProfile:
    signs: list
    fails_at: object = None  # (n, m) with n = m mod 2 and differing signs
    n_max: int = 0

    @property
    def holds(self):
        return self.fails_at is None

    @property
    def verdict(self):
        if self.fails_at is None:
            return "HoldsOnRange"
        return "FailsAt(%d,%d)" % self.fails_at

    def to_json(self):
        return {"signs": list(self.signs), "verdict": self.verdict, "n_max": self.n_max}


def sign_verdict(signs):
    """First ``(n, m)`` (1-based, n < m, same parity) where signs differ, else None."""
    first = {}
    for n, s in enumerate(signs, start=1):
        par = n % 2
        if par not in first:
            first[par] = n
        elif signs[first[par] - 1] != s:
            return first[par], n
    return None


def sign_profile(k, n_max, cache=None, ceiling=None):
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    k = as_expr(k)
    signs = [jones(k, n, cache, ceiling).degree_data()[2] for n in range(1, n_max + 1)]
    return SignProfile(signs, sign_verdict(signs), n_max)
