"""Ideals and the classical operations built from elimination.

An Ideal is a generator list bound to a ring, with cached Groebner bases
(keyed by order and localization) and cached saturations.  The operations
follow the standard eliminate-a-tag-variable constructions:

* intersect(I, J):  eliminate t from t*I + (1-t)*J;
* quotient(I, f):   generators of (I meet <f>) divided exactly by f;
* saturate(I, h):   iterated quotients until stable (reports the exponent),
  or the Rabinowitsch trick with an inverse variable (no exponent);
* eliminate(I, V):  block order with V in front;
* contract(I, u):   chained saturations of I by the K[u]-leading
  coefficients of a minimal localized basis, smallest first -- this turns
  the extension ideal I K(u)[X-u] back into its contraction in K[X];
* dimension(I):     n minus the size of a minimum hitting set of the
  leading-monomial supports (Krull dimension of K[X]/I).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .groebner import GroebnerBasis, buchberger
from .orders import (
    DEGREVLEX,
    LEX,
    MonomialOrder,
    block_order,
    degrevlex_order,
    flatten_with_front,
    lex_order,
)
from .polygcd import exact_divide, normalize_assoc
from .rings import Polynomial, PolyRing, RingError, extend_ring, fresh_name, inject, project


class IdealError(ValueError):
    pass


class Ideal:
    """A finitely generated ideal of a polynomial ring."""

    __slots__ = ("ring", "generators", "_gb_cache", "_sat_cache")

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial]):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise IdealError(f"generator {g!r} is not a polynomial")
            if g.ring != ring:
                raise RingError("generator from a different ring")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb_cache: Dict[tuple, GroebnerBasis] = {}
        self._sat_cache: Dict[tuple, "SaturationResult"] = {}

    @classmethod
    def parse(cls, ring: PolyRing, texts: Iterable[str]) -> "Ideal":
        return cls(ring, [ring.parse(t) for t in texts])

    def groebner(
        self,
        order: Optional[MonomialOrder] = None,
        localized_vars: Optional[Iterable[int]] = None,
    ) -> GroebnerBasis:
        if order is None:
            order = degrevlex_order()
        loc = frozenset(localized_vars) if localized_vars is not None else None
        cache_key = (order, loc)
        got = self._gb_cache.get(cache_key)
        if got is None:
            if not self.generators:
                comp = order
                got = GroebnerBasis(self.ring, order, comp, (), loc)
            else:
                got = buchberger(self.generators, order, loc)
            self._gb_cache[cache_key] = got
        return got

    def reduced_gb(self, order: Optional[MonomialOrder] = None) -> GroebnerBasis:
        return self.groebner(order)

    def contains(self, f: Polynomial) -> bool:
        return self.groebner().contains(f)

    def normal_form(self, f: Polynomial, order: Optional[MonomialOrder] = None):
        return self.groebner(order).normal_form(f)

    def is_zero(self) -> bool:
        return not self.generators

    def is_trivial(self) -> bool:
        return bool(self.generators) and self.groebner().is_trivial()

    def equals(self, other: "Ideal") -> bool:
        if self.ring != other.ring:
            raise RingError("ideals in different rings")
        return self.groebner().elements == other.groebner().elements

    def contains_ideal(self, other: "Ideal") -> bool:
        G = self.groebner()
        return all(G.contains(g) for g in other.generators)

    def canonical_generators(self) -> Tuple[Polynomial, ...]:
        """Reduced degrevlex basis: a canonical generator list."""
        return self.groebner().elements

    def __repr__(self):
        return f"Ideal({self.ring!r}, {len(self.generators)} generators)"


@dataclass(frozen=True)
class SaturationResult:
    """Outcome of saturate(I, h): the saturated ideal, the saturation
    exponent (smallest m with I : h^m == I : h^infinity; None when the
    inverse-variable strategy was used), and the strategy name."""

    ideal: Ideal
    exponent: Optional[int]
    strategy: str


def _working(order: Optional[MonomialOrder]) -> MonomialOrder:
    return order if order is not None else degrevlex_order()


def intersect(
    I: Ideal, J: Ideal, working_order: Optional[MonomialOrder] = None
) -> Ideal:
    """I meet J via elimination of a tag variable t from t*I + (1-t)*J."""
    if I.ring != J.ring:
        raise RingError("ideals in different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    if I.is_trivial():
        return Ideal(ring, J.generators)
    if J.is_trivial():
        return Ideal(ring, I.generators)
    t_name = fresh_name(ring, "t")
    big = extend_ring(ring, [t_name], front=True)
    t = big.var(t_name)
    order = flatten_with_front(
        _working(working_order), front=[0], total_nvars=big.nvars,
        shift=lambda i: i + 1,
    )
    gens = [t * inject(g, big, 1) for g in I.generators]
    gens += [(big.one - t) * inject(g, big, 1) for g in J.generators]
    G = buchberger(gens, order)
    picked = [project(g, ring, 1) for g in G.elements if g.degree_in(0) == 0]
    return Ideal(ring, picked)


def quotient(
    I: Ideal, f: Polynomial, working_order: Optional[MonomialOrder] = None
) -> Ideal:
    """The colon ideal I : f."""
    if f.ring != I.ring:
        raise RingError("polynomial from a different ring")
    if f.is_zero():
        raise IdealError("quotient by zero")
    if f.is_constant():
        return Ideal(I.ring, I.generators)
    if I.is_zero():
        return Ideal(I.ring, [])
    W = intersect(I, Ideal(I.ring, [f]), working_order)
    return Ideal(I.ring, [exact_divide(w, f) for w in W.generators])


def saturate(
    I: Ideal,
    h: Polynomial,
    strategy: str = "iterate",
    working_order: Optional[MonomialOrder] = None,
) -> SaturationResult:
    """The saturation I : h^infinity.

    strategy "iterate" repeats I : h until stable and reports the exponent;
    strategy "extra_variable" eliminates w from I + <w*h - 1> (no exponent).
    Results are cached on I.
    """
    if h.ring != I.ring:
        raise RingError("polynomial from a different ring")
    if h.is_zero():
        raise IdealError("saturation by zero")
    key = (h, strategy, working_order)
    got = I._sat_cache.get(key)
    if got is not None:
        return got
    if h.is_constant() or I.is_zero():
        result = SaturationResult(Ideal(I.ring, I.generators), 0, strategy)
        I._sat_cache[key] = result
        return result
    if strategy == "iterate":
        current = I
        exponent = 0
        while True:
            nxt = quotient(current, h, working_order)
            if nxt.equals(current):
                break
            current = nxt
            exponent += 1
        result = SaturationResult(current, exponent, strategy)
    elif strategy == "extra_variable":
        ring = I.ring
        w_name = fresh_name(ring, "w")
        big = extend_ring(ring, [w_name], front=True)
        order = flatten_with_front(
            _working(working_order), front=[0], total_nvars=big.nvars,
            shift=lambda i: i + 1,
        )
        gens = [inject(g, big, 1) for g in I.generators]
        gens.append(big.var(w_name) * inject(h, big, 1) - big.one)
        G = buchberger(gens, order)
        picked = [project(g, ring, 1) for g in G.elements if g.degree_in(0) == 0]
        result = SaturationResult(Ideal(ring, picked), None, strategy)
    else:
        raise IdealError(f"unknown saturation strategy {strategy!r}")
    I._sat_cache[key] = result
    return result


def eliminate(
    I: Ideal, variables: Iterable[int], inner: str = DEGREVLEX
) -> Ideal:
    """Generators of I intersected with K[remaining variables]."""
    ring = I.ring
    elim = tuple(sorted(set(variables)))
    for i in elim:
        if not 0 <= i < ring.nvars:
            raise IdealError(f"variable index {i} out of range")
    if not elim:
        return Ideal(ring, I.generators)
    if I.is_zero():
        return Ideal(ring, [])
    rest = tuple(i for i in range(ring.nvars) if i not in set(elim))
    blocks = [(elim, inner)] + ([(rest, inner)] if rest else [])
    G = buchberger(I.generators, block_order(blocks))
    elim_set = set(elim)
    picked = [g for g in G.elements if not (g.support() & elim_set)]
    return Ideal(ring, picked)


def contraction_order(ring: PolyRing, u: Iterable[int]) -> MonomialOrder:
    """The default working order for contraction work at an independent set
    u: lex blocks with the non-u variables in front."""
    u = frozenset(u)
    rest = tuple(i for i in range(ring.nvars) if i not in u)
    blocks = ([(rest, LEX)] if rest else []) + ([(tuple(sorted(u)), LEX)] if u else [])
    return block_order(blocks)


def sort_saturation_coefficients(
    cs: Sequence[Polynomial],
) -> List[Polynomial]:
    """Deduplicate (up to associates) and order the c_i for chained
    saturations: ascending total degree, then term count, then input order."""
    seen = {}
    for pos, c in enumerate(cs):
        if c.is_constant():
            continue
        key = normalize_assoc(c)
        if key not in seen:
            seen[key] = (c.total_degree(), c.num_terms(), pos, c)
    ranked = sorted(seen.values(), key=lambda t: t[:3])
    return [t[3] for t in ranked]


def chained_saturation(
    I: Ideal,
    cs: Sequence[Polynomial],
    working_order: Optional[MonomialOrder] = None,
) -> Tuple[Ideal, List[Tuple[Polynomial, Optional[int]]]]:
    """Saturate I by each c in turn, returning the result and the per-step
    (c, exponent) trail."""
    current = I
    steps: List[Tuple[Polynomial, Optional[int]]] = []
    for c in cs:
        res = saturate(current, c, "iterate", working_order)
        steps.append((c, res.exponent))
        current = res.ideal
    return current, steps


def contract(
    I: Ideal, u: Iterable[int], working_order: Optional[MonomialOrder] = None
) -> Ideal:
    """Contraction of the extension I K(u)[X-u] back to K[X].

    Requires u independent for I (no leading monomial supported inside u).
    Saturates I by the K[u]-leading coefficients of a minimal localized
    basis, in the order of sort_saturation_coefficients.
    """
    result, _ = contract_with_trail(I, u, working_order)
    return result


def contract_with_trail(
    I: Ideal, u: Iterable[int], working_order: Optional[MonomialOrder] = None
) -> Tuple[Ideal, List[Tuple[Polynomial, Optional[int]]]]:
    """contract(), but also return the (coefficient, exponent) trail of the
    chained saturation that produced it."""
    u = frozenset(u)
    ring = I.ring
    if I.is_zero():
        return Ideal(ring, []), []
    G = I.groebner(order=lex_order(), localized_vars=u)
    if G.is_trivial():
        raise IdealError("u is not an independent set for I")
    if working_order is None:
        working_order = contraction_order(ring, u)
    cs = sort_saturation_coefficients(G.leading_coefficients())
    return chained_saturation(I, cs, working_order)


def dimension(I: Ideal) -> int:
    """Krull dimension of K[X]/I (-1 for the unit ideal)."""
    if I.is_zero():
        return I.ring.nvars
    G = I.groebner()
    if G.is_trivial():
        return -1
    from .indepsets import min_hitting_set_size, minimal_supports

    supports = minimal_supports(G.lead_exps())
    return I.ring.nvars - min_hitting_set_size(supports)


def ideal_sum(I: Ideal, extra: Iterable[Polynomial]) -> Ideal:
    return Ideal(I.ring, list(I.generators) + list(extra))
