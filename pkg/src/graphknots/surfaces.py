"""Witness surfaces for Jones slopes and the SS(n) check.

A witness is tracked only through its numbers: boundary slope, number of
boundary components and Euler characteristic.  Essentiality of the
surfaces is not checked here.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .degreefit import dplus_sequence, fit_quasipoly, frac_str
from .knotexpr import Cable, Sum, Torus, Unknot, as_expr, format_expr, simplify_unknots


class SurfaceError(ValueError):
    pass


class GluingMismatch(SurfaceError):
    pass


class UnknotLeaf(SurfaceError):
    pass


class AtSlope(SurfaceError):
    pass


# Annuli never need their boundary count in an SS ratio (chi = 0); two is
# the number of boundary circles of an annulus and only feeds sum gluing.
ANNULUS_BOUNDARY = 2


@dataclass(frozen=True)
class SurfaceData:
    slope: Fraction
    boundary_count: int
    euler: int
    provenance: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "slope", Fraction(self.slope))
        if self.boundary_count <= 0:
            raise SurfaceError("boundary_count must be positive")

    @property
    def ratio(self):
        """``chi / (|boundary| * q)`` with q the reduced slope denominator."""
        return Fraction(self.euler, self.boundary_count * self.slope.denominator)

    def to_json(self):
        return {
            "slope": frac_str(self.slope),
            "boundary_count": self.boundary_count,
            "euler": self.euler,
            "ratio": frac_str(self.ratio),
            "provenance": list(self.provenance),
        }


def surface_torus(a, b):
    """Witness for ``T(a,b)``.

    For ``a > 0`` the Jones slope is ``ab`` and the witness is the cabling
    annulus.  For the mirror ``a < 0`` the top degree grows linearly, the
    Jones slope is 0 and the witness is a minimal genus Seifert surface.
    """
    Torus(a, b)
    if a > 0:
        return SurfaceData(Fraction(a * b), ANNULUS_BOUNDARY, 0, ("annulus T(%d,%d)" % (a, b),))
    genus2 = (-a - 1) * (b - 1)
    return SurfaceData(Fraction(0), 1, 1 - genus2, ("seifert T(%d,%d)" % (a, b),))


def surface_cable(s_child, p, q, a_child):
    """Witness for ``C(p,q; K)`` from the child's witness and quadratic coefficient."""
    a_child = Fraction(a_child)
    if s_child.slope != 4 * a_child:
        raise SurfaceError("child witness slope %s != 4a = %s" % (s_child.slope, 4 * a_child))
    slope = Fraction(p, q)
    if slope == 4 * a_child:
        raise AtSlope("p/q = 4a = %s: no witness construction" % slope)
    if slope > 4 * a_child:
        return SurfaceData(Fraction(p * q), ANNULUS_BOUNDARY, 0,
                           s_child.provenance + ("cabling annulus C(%d,%d)" % (p, q),))
    euler = Fraction(q * s_child.euler + s_child.boundary_count * (q - 1) * (p - 4 * a_child * q))
    if euler.denominator != 1:
        raise SurfaceError("non-integral Euler characteristic %s" % euler)
    return SurfaceData(4 * q * q * a_child, s_child.boundary_count, int(euler),
                       s_child.provenance + ("cable-transform C(%d,%d)" % (p, q),))


def surface_sum(s1, s2):
    """Glue copies of two witnesses along the swallow-follow annulus."""
    l1 = s1.boundary_count * s1.slope.denominator
    l2 = s2.boundary_count * s2.slope.denominator
    big = l1 * l2 // gcd(l1, l2)
    m1, m2 = big // l1, big // l2
    slope = s1.slope + s2.slope
    if big % slope.denominator:
        raise GluingMismatch("arc count %d not divisible by slope denominator %d"
                             % (big, slope.denominator))
    euler = m1 * s1.euler + m2 * s2.euler - big
    prov = s1.provenance + s2.provenance + ("sum-gluing m=(%d,%d)" % (m1, m2),)
    return SurfaceData(slope, big // slope.denominator, euler, prov)


def frontier_double(s):
    """Replace a non-orientable surface by the frontier of its twisted I-bundle.

    Doubles Euler characteristic and boundary count; the slope and the SS
    ratio are unchanged.
    """
    return SurfaceData(s.slope, 2 * s.boundary_count, 2 * s.euler,
                       s.provenance + ("frontier (ratio-neutral)",))


def fit_expr(k, n_max=16, max_period=6, tail=2, cache=None, ceiling=None):
    return fit_quasipoly(dplus_sequence(k, n_max, cache, ceiling), max_period, tail)


def build_witness(k, child_delta):
    """Witness surface for ``k`` by structural recursion.

    ``child_delta(expr)`` returns the quasi-polynomial of a cable's companion;
    its (constant) quadratic coefficient selects the cable regime.
    """
    k = simplify_unknots(as_expr(k))
    if isinstance(k, Unknot):
        raise UnknotLeaf("the trivial knot has no Jones-slope witness")
    return _witness(k, child_delta)


def _witness(k, child_delta):
    if isinstance(k, Torus):
        return surface_torus(k.a, k.b)
    if isinstance(k, Sum):
        return surface_sum(_witness(k.left, child_delta), _witness(k.right, child_delta))
    if isinstance(k, Cable):
        s = _witness(k.child, child_delta)
        qp = child_delta(k.child)
        a_vals = {t[0] for t in qp.coeffs}
        if len(a_vals) != 1:
            raise SurfaceError("%s: companion has several Jones slopes" % format_expr(k.child))
        return surface_cable(s, k.p, k.q, a_vals.pop())
    raise UnknotLeaf("unexpected unknot leaf in %s" % format_expr(k))


@dataclass
class SSReport:
    expr: str
    surface: SurfaceData
    classes: list

    @property
    def passed(self):
        return all(c["pass"] for c in self.classes)

    def to_json(self):
        return {"expr": self.expr, "surface": self.surface.to_json(),
                "classes": self.classes, "pass": self.passed}


def verify_ss(k, delta, child_delta=None, n_max=16, max_period=6, tail=2, cache=None,
              ceiling=None):
    """Check ``4a(n) = slope`` and ``2b(n) = chi/(|boundary| q)`` for each residue class.

    ``delta`` is the fitted or predicted quasi-polynomial of ``k``.  Companion
    coefficients come from ``child_delta`` (default: a fresh fit of each
    companion, so the check does not depend on the predictors).
    """
    k = as_expr(k)
    if child_delta is None:
        memo = {}

        def child_delta(c):
            key = format_expr(c)
            if key not in memo:
                memo[key] = fit_expr(c, n_max, max_period, tail, cache, ceiling)
            return memo[key]

    surface = build_witness(k, child_delta)
    rows = []
    for i, (a, b, c) in enumerate(delta.coeffs):
        slope_ok = 4 * a == surface.slope
        ratio_ok = 2 * b == surface.ratio
        rows.append({
            "residue": i,
            "jones_slope": frac_str(4 * a),
            "surface_slope": frac_str(surface.slope),
            "two_b": frac_str(2 * b),
            "ratio": frac_str(surface.ratio),
            "slope_ok": slope_ok,
            "ratio_ok": ratio_ok,
            "pass": slope_ok and ratio_ok,
        })
    return SSReport(format_expr(k), surface, rows)
