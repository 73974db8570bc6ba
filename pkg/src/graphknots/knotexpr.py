"""Knot expressions over the unknot, torus knots, cables and connected sums.

Text grammar::

    expr := "U" | "T(" int "," int ")" | "C(" int "," int ";" expr ")" | "S(" expr "," expr ")"
    int  := ["-"] digit+

Whitespace is ignored everywhere.
"""
from dataclasses import dataclass
from math import gcd


class KnotExprError(ValueError):
    pass


class KnotSyntaxError(KnotExprError):
    def __init__(self, message, offset):
        super().__init__("%s (at offset %d)" % (message, offset))
        self.offset = offset


class ValidationError(KnotExprError):
    pass


@dataclass(frozen=True)
class Unknot:
    def __str__(self):
        return format_expr(self)


@dataclass(frozen=True)
class Torus:
    a: int
    b: int

    def __post_init__(self):
        if self.b < 2:
            raise ValidationError("torus T(%d,%d): need b >= 2" % (self.a, self.b))
        if abs(self.a) <= self.b:
            raise ValidationError("torus T(%d,%d): need |a| > b (write the normalized pair)"
                                  % (self.a, self.b))
        if gcd(abs(self.a), self.b) != 1:
            raise ValidationError("torus T(%d,%d): a and b must be coprime" % (self.a, self.b))

    def __str__(self):
        return format_expr(self)


@dataclass(frozen=True)
class Cable:
    p: int
    q: int
    child: object

    def __post_init__(self):
        if self.q < 2:
            raise ValidationError("cable C(%d,%d;...): need q >= 2 (negate p instead of q)"
                                  % (self.p, self.q))
        if gcd(abs(self.p), self.q) != 1:
            raise ValidationError("cable C(%d,%d;...): p and q must be coprime" % (self.p, self.q))
        _check_node(self.child)

    def __str__(self):
        return format_expr(self)


@dataclass(frozen=True)
class Sum:
    left: object
    right: object

    def __post_init__(self):
        _check_node(self.left)
        _check_node(self.right)

    def __str__(self):
        return format_expr(self)


U = Unknot()

NODE_TYPES = (Unknot, Torus, Cable, Sum)


def _check_node(node):
    if not isinstance(node, NODE_TYPES):
        raise ValidationError("not a knot expression: %r" % (node,))


def format_expr(k):
    if isinstance(k, Unknot):
        return "U"
    if isinstance(k, Torus):
        return "T(%d,%d)" % (k.a, k.b)
    if isinstance(k, Cable):
        return "C(%d,%d; %s)" % (k.p, k.q, format_expr(k.child))
    if isinstance(k, Sum):
        return "S(%s, %s)" % (format_expr(k.left), format_expr(k.right))
    raise TypeError("not a knot expression: %r" % (k,))


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise KnotSyntaxError("expected %r, found %r" % (ch, found), self.pos)
        self.pos += 1

    def integer(self):
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise KnotSyntaxError("expected an integer", start)
        return int(self.text[start:self.pos]), start

    def expr(self):
        ch = self.peek()
        start = self.pos
        if ch == "U":
            self.pos += 1
            return U
        if ch in ("T", "C", "S"):
            self.pos += 1
            self.expect("(")
            try:
                if ch == "T":
                    a, _ = self.integer()
                    self.expect(",")
                    b, _ = self.integer()
                    self.expect(")")
                    return Torus(a, b)
                if ch == "C":
                    p, _ = self.integer()
                    self.expect(",")
                    q, _ = self.integer()
                    self.expect(";")
                    child = self.expr()
                    self.expect(")")
                    return Cable(p, q, child)
                left = self.expr()
                self.expect(",")
                right = self.expr()
                self.expect(")")
                return Sum(left, right)
            except ValidationError as exc:
                if "at offset" in str(exc):
                    raise
                raise ValidationError("%s (node at offset %d)" % (exc, start)) from None
        found = ch or "end of input"
        raise KnotSyntaxError("expected one of U, T, C, S; found %r" % found, self.pos)


def parse(text):
    """Parse the text grammar into an expression tree.

    Raises :class:`KnotSyntaxError` (carrying ``offset``) for malformed text
    and :class:`ValidationError` for well-formed text naming an invalid knot.
    """
    p = _Parser(text)
    k = p.expr()
    p.skip()
    if p.pos != len(text):
        raise KnotSyntaxError("trailing input %r" % text[p.pos:], p.pos)
    return k


def as_expr(k):
    return parse(k) if isinstance(k, str) else k


def walk(k):
    """Yield every node, children before parents."""
    if isinstance(k, Cable):
        yield from walk(k.child)
    elif isinstance(k, Sum):
        yield from walk(k.left)
        yield from walk(k.right)
    yield k


def depth(k):
    if isinstance(k, Cable):
        return 1 + depth(k.child)
    if isinstance(k, Sum):
        return 1 + max(depth(k.left), depth(k.right))
    return 0


def simplify_unknots(k):
    """Rewrite ``S(K, U) -> K`` and ``C(p,q; U)`` -> the torus knot (or ``U``), bottom-up.

    The result names the same knot; it is the form the surface and prediction
    code works with, since the unknot has no Jones-slope witness.
    """
    if isinstance(k, Sum):
        left, right = simplify_unknots(k.left), simplify_unknots(k.right)
        if isinstance(left, Unknot):
            return right
        if isinstance(right, Unknot):
            return left
        return Sum(left, right)
    if isinstance(k, Cable):
        child = simplify_unknots(k.child)
        if isinstance(child, Unknot):
            return torus_from_pair(k.p, k.q)
        return Cable(k.p, k.q, child)
    return k


def torus_from_pair(p, q):
    """The (p, q) torus knot in normalized form, or ``U`` when it is trivial."""
    if abs(p) <= 1 or q <= 1:
        return U
    sign = 1 if p > 0 else -1
    big, small = max(abs(p), q), min(abs(p), q)
    return Torus(sign * big, small)
