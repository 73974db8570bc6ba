"""Sparse Laurent polynomials in q^(1/4) with exact integer coefficients.

Exponents are stored as integer counts of quarter powers, so ``q^(5/2)``
is the key ``10``.  Values are immutable; every operation returns a new
polynomial.
"""
import heapq
import re
from fractions import Fraction


class LaurentError(ArithmeticError):
    pass


class NotDivisible(LaurentError):
    pass


class DivisionByZero(LaurentError, ZeroDivisionError):
    pass


class ZeroPolynomial(LaurentError):
    pass


def _clean(terms):
    return {e: c for e, c in terms.items() if c}


class LaurentPoly:
    """Immutable sparse map ``quarters -> coefficient`` with no zero entries."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        for e, c in terms.items():
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError("exponents must be integer quarter counts, got %r" % (e,))
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError("coefficients must be integers, got %r" % (c,))
        object.__setattr__(self, "_terms", _clean(terms))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def _trusted(cls, terms):
        # terms already cleaned and typed
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def monomial(cls, quarters, coeff=1):
        return cls({quarters: coeff})

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def zero(cls):
        return cls._trusted({})

    @classmethod
    def one(cls):
        return cls._trusted({0: 1})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms as ``(quarters, coeff)`` pairs sorted by descending exponent."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, quarters):
        return self._terms.get(quarters, 0)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._terms.items())))
        return self._hash

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._trusted({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def shift(self, quarters, coeff=1):
        """Multiply by ``coeff * q^(quarters/4)``."""
        if not coeff:
            return LaurentPoly.zero()
        return LaurentPoly._trusted({e + quarters: c * coeff for e, c in self._terms.items()})

    def exact_div(self, d):
        return exact_div(self, d)

    def degree_data(self):
        return degree_data(self)

    def mirror(self):
        return mirror(self)

    def eval_at_one(self):
        return eval_at_one(self)

    @property
    def d_plus(self):
        return degree_data(self)[0]

    @property
    def d_minus(self):
        return degree_data(self)[1]

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return "LaurentPoly(%r)" % (to_text(self),)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return LaurentPoly.constant(x)
    return NotImplemented


def add(p, r):
    if len(p._terms) < len(r._terms):
        p, r = r, p
    out = dict(p._terms)
    for e, c in r._terms.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return LaurentPoly._trusted(out)


def mul(p, r):
    if len(p._terms) < len(r._terms):
        p, r = r, p
    out = {}
    get = out.get
    big = list(p._terms.items())
    for e2, c2 in r._terms.items():
        for e1, c1 in big:
            k = e1 + e2
            out[k] = get(k, 0) + c1 * c2
    return LaurentPoly._trusted(_clean(out))


def exact_div(p, d):
    """Return ``s`` with ``s * d == p`` or raise :class:`NotDivisible`.

    Long division from the top exponent down; every quotient coefficient
    must be an exact integer and the remainder must vanish.
    """
    if not d._terms:
        raise DivisionByZero("division by the zero polynomial")
    if not p._terms:
        return LaurentPoly.zero()
    dterms = sorted(d._terms.items(), reverse=True)
    d_top, d_lead = dterms[0]
    d_low = dterms[-1][0]
    floor = min(p._terms) - d_low

    rem = dict(p._terms)
    heap = [-e for e in rem]
    heapq.heapify(heap)
    quot = {}
    while rem:
        e = -heapq.heappop(heap)
        c = rem.get(e)
        if not c:
            continue
        shift = e - d_top
        if shift < floor:
            raise NotDivisible("nonzero remainder at q^(%d/4)" % e)
        t, r = divmod(c, d_lead)
        if r:
            raise NotDivisible(
                "leading coefficient %d not divisible by %d at q^(%d/4)" % (c, d_lead, e))
        quot[shift] = t
        for de, dc in dterms:
            k = de + shift
            v = rem.get(k, 0) - t * dc
            if v:
                if k not in rem:
                    heapq.heappush(heap, -k)
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly._trusted(quot)


def degree_data(p):
    """``(d_plus, d_minus, lead_sign, lead_coeff)`` with degrees as Fractions of q."""
    if not p._terms:
        raise ZeroPolynomial("degree of the zero polynomial is undefined")
    top = max(p._terms)
    low = min(p._terms)
    lead = p._terms[top]
    return Fraction(top, 4), Fraction(low, 4), (1 if lead > 0 else -1), lead


def mirror(p):
    """Substitute q -> 1/q."""
    return LaurentPoly._trusted({-e: c for e, c in p._terms.items()})


def eval_at_one(p):
    return sum(p._terms.values())


def to_text(p):
    """Canonical text, e.g. ``-q^(18/4) + q^(10/4) + 3*q^(2/4)``."""
    if not p._terms:
        return "0"
    parts = []
    for i, (e, c) in enumerate(sorted(p._terms.items(), reverse=True)):
        mag = abs(c)
        body = ("q^(%d/4)" % e) if mag == 1 else ("%d*q^(%d/4)" % (mag, e))
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*\s*)?q\^\((-?\d+)/4\)\s*")


def from_text(text):
    """Inverse of :func:`to_text`."""
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero()
    terms = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse polynomial text at offset %d: %r" % (pos, text[pos:pos + 20]))
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        e = int(m.group(3))
        terms[e] = terms.get(e, 0) + sign * mag
        pos = m.end()
    return LaurentPoly(terms)


def quantum_integer(n):
    """(q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2)) expanded as a sum of n powers."""
    if n <= 0:
        raise ValueError("quantum integer needs n >= 1")
    return LaurentPoly._trusted({2 * (n - 1) - 4 * j: 1 for j in range(n)})
