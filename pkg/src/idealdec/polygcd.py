"""Multivariate gcd, content and related exact arithmetic over K[x].

The gcd uses the classical primitive-remainder-sequence recursion: pick the
highest variable present, split both inputs into content times primitive
part with respect to it, run a pseudo-remainder loop on the primitive
parts, and recurse on the contents.  This is not asymptotically clever, but
it is exact, deterministic, and fast enough for the coefficient sizes this
package works with.

Normalisation convention ("canonical associate"): over Q the gcd is an
integer-primitive polynomial whose leading coefficient under display lex is
positive; over GF(p) it is scaled to leading coefficient 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from math import isqrt, lcm as int_lcm
from typing import Iterable, List, Optional, Tuple

from .domains import Rationals
from .orders import lex_order
from .rings import Polynomial

DISPLAY = lex_order()


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return q with f == q*g, or raise ExactDivisionError."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    if g.is_constant():
        inv = ring.domain.one / g.constant_value()
        return f * inv
    cg, eg = g.leading_data(DISPLAY)
    q = {}
    r = f
    while not r.is_zero():
        cr, er = r.leading_data(DISPLAY)
        diff = tuple(a - b for a, b in zip(er, eg))
        if any(d < 0 for d in diff):
            raise ExactDivisionError("not an exact divisor")
        t = cr / cg
        q[diff] = t
        r = r - g.multiply_monomial(diff, t)
    return Polynomial(ring, q)


def divides(g: Polynomial, f: Polynomial) -> bool:
    try:
        exact_divide(f, g)
        return True
    except ExactDivisionError:
        return False


def rational_content(f: Polynomial) -> Fraction:
    """Positive rational c with f/c integer-primitive (f over Q, nonzero)."""
    num = 0
    den = 1
    for c in f.terms.values():
        num = int_gcd(num, c.numerator)
        den = int_lcm(den, c.denominator)
    return Fraction(num, den)


def normalize_assoc(f: Polynomial) -> Polynomial:
    """The canonical associate of f (see module docstring)."""
    if f.is_zero():
        return f
    if isinstance(f.ring.domain, Rationals):
        g = f * (1 / rational_content(f))
        lc, _ = g.leading_data(DISPLAY)
        return -g if lc < 0 else g
    lc, _ = f.leading_data(DISPLAY)
    return f * (f.ring.domain.one / lc)


def content_wrt(f: Polynomial, sub: Iterable[int]) -> Polynomial:
    """Content of f viewed in K[sub][rest]: gcd of its K[sub]-coefficients.

    Terms are grouped by their exponents outside ``sub``; each group's
    coefficient is a polynomial supported on ``sub``, and the content is the
    gcd of those.  For f == 0 returns 0.
    """
    if f.is_zero():
        return f
    subset = frozenset(sub)
    groups = {}
    for exps, c in f.terms.items():
        outer = tuple(0 if i in subset else e for i, e in enumerate(exps))
        inner = tuple(e if i in subset else 0 for i, e in enumerate(exps))
        groups.setdefault(outer, {})[inner] = c
    acc = None
    for terms in groups.values():
        g = Polynomial(f.ring, terms)
        acc = g if acc is None else poly_gcd(acc, g)
        if acc.is_one():
            return acc
    return normalize_assoc(acc)


def primitive_part_wrt(f: Polynomial, sub: Iterable[int]) -> Polynomial:
    if f.is_zero():
        return f
    return exact_divide(f, content_wrt(f, sub))


def _content_in_main(f: Polynomial, v: int) -> Polynomial:
    acc = None
    for coeff in f.as_univariate(v).values():
        acc = coeff if acc is None else poly_gcd(acc, coeff)
        if acc.is_one():
            return acc
    return normalize_assoc(acc)


def primitive_in(f: Polynomial, v: int) -> Polynomial:
    """f divided by the gcd of its coefficients as a polynomial in x_v."""
    if f.is_zero() or f.degree_in(v) < 1:
        return normalize_assoc(f)
    return exact_divide(f, _content_in_main(f, v))


def pseudo_rem(a: Polynomial, b: Polynomial, v: int) -> Polynomial:
    """Pseudo-remainder of a by b with respect to x_v (deg_v b >= 1)."""
    db = b.degree_in(v)
    lcb = b.coefficient_of(v, db)
    xv = a.ring.var(a.ring.names[v])
    r = a
    while not r.is_zero():
        dr = r.degree_in(v)
        if dr < db:
            break
        lcr = r.coefficient_of(v, dr)
        r = r * lcb - b * (lcr * xv ** (dr - db))
    return r


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Gcd of two polynomials, returned as the canonical associate."""
    if f.is_zero():
        return normalize_assoc(g)
    if g.is_zero():
        return normalize_assoc(f)
    if f.is_constant() or g.is_constant():
        return f.ring.one
    common = f.support() | g.support()
    v = max(common)
    if f.degree_in(v) == 0:
        return poly_gcd(f, _content_in_main(g, v))
    if g.degree_in(v) == 0:
        return poly_gcd(_content_in_main(f, v), g)
    cont_f = _content_in_main(f, v)
    cont_g = _content_in_main(g, v)
    a = exact_divide(f, cont_f)
    b = exact_divide(g, cont_g)
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    while True:
        r = pseudo_rem(a, b, v)
        if r.is_zero():
            pp = primitive_in(b, v)
            break
        if r.degree_in(v) == 0:
            pp = f.ring.one
            break
        a, b = b, primitive_in(r, v)
    return normalize_assoc(poly_gcd(cont_f, cont_g) * pp)


def poly_gcd_many(polys: Iterable[Polynomial]) -> Polynomial:
    acc = None
    for p in polys:
        acc = p if acc is None else poly_gcd(acc, p)
        if acc is not None and acc.is_one():
            return acc
    if acc is None:
        raise ValueError("gcd of an empty family")
    return normalize_assoc(acc)


def poly_lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero() or g.is_zero():
        return f.ring.zero
    return normalize_assoc(exact_divide(f * g, poly_gcd(f, g)))


def poly_lcm_many(polys: Iterable[Polynomial]) -> Polynomial:
    acc = None
    for p in polys:
        acc = p if acc is None else poly_lcm(acc, p)
    if acc is None:
        raise ValueError("lcm of an empty family")
    return normalize_assoc(acc)


def _fraction_sqrt(c: Fraction) -> Optional[Fraction]:
    if c < 0:
        return None
    rn = isqrt(c.numerator)
    rd = isqrt(c.denominator)
    if rn * rn != c.numerator or rd * rd != c.denominator:
        return None
    return Fraction(rn, rd)


def poly_sqrt(f: Polynomial) -> Optional[Polynomial]:
    """Exact square root of f over Q, or None if f is not a square.

    Completes the root term by term from the display-lex leading term; the
    strictly decreasing leading monomial of the residual guarantees
    termination (lex is a well-order).
    """
    if not isinstance(f.ring.domain, Rationals):
        return None
    if f.is_zero():
        return f
    c, e = f.leading_data(DISPLAY)
    if any(x % 2 for x in e):
        return None
    rc = _fraction_sqrt(c)
    if rc is None:
        return None
    half = tuple(x // 2 for x in e)
    s = f.ring.monomial(half, rc)
    r = f - s * s
    two_rc = rc * 2
    while not r.is_zero():
        cr, er = r.leading_data(DISPLAY)
        diff = tuple(a - b for a, b in zip(er, half))
        if any(d < 0 for d in diff):
            return None
        t = f.ring.monomial(diff, cr / two_rc)
        r = r - t * (s * 2) - t * t
        s = s + t
    return s if s.leading_data(DISPLAY)[0] > 0 else -s


def squarefree_decomposition_in(
    f: Polynomial, v: int
) -> List[Tuple[Polynomial, int]]:
    """Squarefree decomposition of f as a polynomial in x_v over the fraction
    field of the remaining variables (characteristic 0).

    Returns [(h_1, m_1), ...] with each h_i squarefree in x_v, pairwise
    coprime, primitive in x_v, and f associate to prod h_i^{m_i} up to a
    factor free of x_v.  Gcds in K(rest)[x_v] are taken as primitive parts
    of polynomial gcds (Gauss's lemma).
    """
    if f.degree_in(v) < 1:
        raise ValueError("polynomial is constant in the chosen variable")
    f = primitive_in(f, v)
    df = f.derivative(v)
    g = primitive_in(poly_gcd(f, df), v)
    if g.degree_in(v) == 0:
        return [(normalize_assoc(f), 1)]
    out: List[Tuple[Polynomial, int]] = []
    c = exact_divide(f, g)  # product of the distinct x_v-factors
    k = 1
    while c.degree_in(v) > 0:
        d = primitive_in(poly_gcd(c, g), v)
        h = exact_divide(c, d)
        h = primitive_in(h, v)
        if h.degree_in(v) > 0:
            out.append((normalize_assoc(h), k))
        if d.degree_in(v) == 0:
            break
        g = exact_divide(g, d)
        c = d
        k += 1
    return out
