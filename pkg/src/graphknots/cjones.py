"""Colored Jones polynomials of graph knots by structural recursion.

All values are unnormalized, ``J_{U,n} = [n]`` (the quantum integer), in the
variable ``q`` written with quarter-power exponents.  Torus knots use
Morton's closed formula, cables the cabling sum over ``S_n``, connected sums
the product divided by ``J_{U,n}``.
"""
import json
import threading

from .knotexpr import Cable, Sum, Torus, Unknot, as_expr, format_expr
from .qlaurent import LaurentPoly, from_text, quantum_integer, to_text

CACHE_FORMAT_VERSION = 1


class ColorCeilingExceeded(ValueError):
    pass


class JonesCache:
    """Memo table keyed by ``(canonical subexpression text, |color|)``.

    Lookups are lock-free; insertions take a lock.  Two workers racing to
    fill the same key store equal values, so the loser's write is harmless.
    """

    def __init__(self, enabled=True):
        self.enabled = enabled
        self._data = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key):
        if not self.enabled:
            return None
        val = self._data.get(key)
        if val is None:
            self.misses += 1
        else:
            self.hits += 1
        return val

    def put(self, key, value):
        if not self.enabled:
            return
        with self._lock:
            self._data.setdefault(key, value)

    def __len__(self):
        return len(self._data)

    def __contains__(self, key):
        return key in self._data

    def clear(self):
        with self._lock:
            self._data.clear()

    def save(self, path):
        with self._lock:
            rows = [[expr, n, to_text(p)] for (expr, n), p in sorted(self._data.items())]
        with open(path, "w") as fh:
            json.dump({"version": CACHE_FORMAT_VERSION, "entries": rows}, fh)

    def load(self, path):
        """Merge a saved cache; files with another format version are ignored.

        Returns the number of entries read.
        """
        with open(path) as fh:
            blob = json.load(fh)
        if blob.get("version") != CACHE_FORMAT_VERSION:
            return 0
        with self._lock:
            for expr, n, text in blob["entries"]:
                self._data.setdefault((expr, n), from_text(text))
        return len(blob["entries"])


_default_cache = JonesCache()


def default_cache():
    return _default_cache


def _check_color(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("color must be a positive integer, got %r" % (n,))


def jones_unknot(n):
    _check_color(n)
    return quantum_integer(n)


def _check_torus(a, b):
    Torus(a, b)


def normalized_torus(a, b, m):
    """Morton's normalized colored Jones polynomial ``J'_{T(a,b),m}``.

    ``J'_{K,m} = J_{K,m+1} / J_{U,m+1}``.  Negative ``a`` (the mirror) is
    computed from ``(-a, b)`` by the substitution ``q -> 1/q``.
    """
    _check_torus(a, b)
    if m < 0:
        raise ValueError("normalized color must be >= 0")
    if m == 0:
        return LaurentPoly.one()
    if a < 0:
        return normalized_torus(-a, b, m).mirror()
    ab = a * b
    terms = {}
    # k = j/2 runs over -m/2 .. m/2 in unit steps
    for j in range(-m, m + 1, 2):
        base = -ab * j * j
        e_plus = base + 2 * (a - b) * j + 2
        e_minus = base + 2 * (a + b) * j - 2
        terms[e_plus] = terms.get(e_plus, 0) + 1
        terms[e_minus] = terms.get(e_minus, 0) - 1
    numer = LaurentPoly(terms).shift(ab * m * (m + 2))
    denom = LaurentPoly({2 * (m + 1): 1, -2 * (m + 1): -1})
    return numer.exact_div(denom)


def jones_torus(a, b, n):
    _check_torus(a, b)
    _check_color(n)
    return jones_unknot(n) * normalized_torus(a, b, n - 1)


def signed_color(evaluate, m):
    """``J_{K,m}`` for any integer m, with ``J_{K,-m} = -J_{K,m}`` and ``J_{K,0} = 0``."""
    if m > 0:
        return evaluate(m)
    if m < 0:
        return -evaluate(-m)
    return LaurentPoly.zero()


def cable_indices(n):
    """Doubled indices ``j = 2k`` for ``k`` in ``S_n``: same parity as n-1, |j| <= n-1."""
    return range(-(n - 1), n, 2)


def jones_cable(p, q, child, n):
    """Cabling sum for ``C(p,q; K)`` at color n.

    ``child`` maps a positive color m to ``J_{K,m}``.
    """
    _check_color(n)
    if q < 2:
        raise ValueError("cable needs q >= 2")
    acc = {}
    get = acc.get
    for j in cable_indices(n):
        # k = j/2: v^{-pk(qk+1)} is -p*j*(q*j+2) quarters; color 2qk+1 = q*j+1
        color = q * j + 1
        sign = 1
        if color < 0:
            color, sign = -color, -1
        if color == 0:
            continue
        poly = child(color)
        shift = -p * j * (q * j + 2)
        for e, c in poly._terms.items():
            k = e + shift
            acc[k] = get(k, 0) + sign * c
    return LaurentPoly({e: c for e, c in acc.items() if c}).shift(p * q * (n * n - 1))


def jones_sum(left, right, n):
    """Connected sum from the two factors at color n: ``J1 * J2 / J_{U,n}``."""
    _check_color(n)
    return (left * right).exact_div(jones_unknot(n))


def max_color(k, n):
    """Largest color any node of ``k`` is evaluated at when computing ``J_{k,n}``."""
    k = as_expr(k)
    if isinstance(k, Cable):
        return max(n, max_color(k.child, k.q * (n - 1) + 1))
    if isinstance(k, Sum):
        return max(n, max_color(k.left, n), max_color(k.right, n))
    return n


def jones(k, n, cache=None, ceiling=None):
    """Unnormalized colored Jones polynomial ``J_{k,n}``.

    ``cache`` defaults to the module-wide cache; pass ``JonesCache(enabled=False)``
    to force recomputation.  ``ceiling`` bounds the largest intermediate color.
    """
    k = as_expr(k)
    _check_color(n)
    if cache is None:
        cache = _default_cache
    if ceiling is not None:
        top = max_color(k, n)
        if top > ceiling:
            raise ColorCeilingExceeded(
                "%s at color %d needs intermediate color %d > ceiling %d"
                % (format_expr(k), n, top, ceiling))
    return _jones(k, n, cache)


def _jones(k, n, cache):
    key = (format_expr(k), n)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if isinstance(k, Unknot):
        val = jones_unknot(n)
    elif isinstance(k, Torus):
        val = jones_torus(k.a, k.b, n)
    elif isinstance(k, Cable):
        child = k.child
        val = jones_cable(k.p, k.q, lambda m: _jones(child, m, cache), n)
    elif isinstance(k, Sum):
        val = jones_sum(_jones(k.left, n, cache), _jones(k.right, n, cache), n)
    else:
        raise TypeError("not a knot expression: %r" % (k,))
    cache.put(key, val)
    return val


def eps(k, n, cache=None, ceiling=None):
    """Sign of the leading coefficient of ``J_{k,n}``."""
    return jones(k, n, cache, ceiling).degree_data()[2]
