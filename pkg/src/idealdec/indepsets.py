"""Independent sets of variables modulo an ideal, and their scoring.

A set u of variables is independent for I when no leading monomial of the
(reduced degrevlex) basis is supported entirely inside u; maximal ones are
exactly the complements of minimal hitting sets of the leading-monomial
supports.  The Krull dimension is the largest cardinality among them.

Scoring a maximal independent set u means computing the minimal localized
basis of I over K(u), the vector-space dimension d_u of the localized
quotient, and the degrees/term counts of the K[u]-leading coefficients --
the quantities that drive both the cost of a zero-dimensional decomposition
over K(u) and the cost of contracting the result back.  Ranking prefers
small d_u, then small coefficient degree, then few coefficient terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .groebner import GroebnerBasis
from .orders import degrevlex_order

if TYPE_CHECKING:  # pragma: no cover
    from .ideals import Ideal


def minimal_supports(lead_exps: Iterable[Tuple[int, ...]]) -> List[FrozenSet[int]]:
    """Supports of the leading monomials, with duplicates and supersets
    removed (a superset is hit whenever its subset is)."""
    raw = {frozenset(i for i, e in enumerate(exps) if e) for exps in lead_exps}
    out: List[FrozenSet[int]] = []
    for s in sorted(raw, key=lambda s: (len(s), sorted(s))):
        if not any(t <= s for t in out):
            out.append(s)
    return out


def min_hitting_set_size(supports: Sequence[FrozenSet[int]]) -> int:
    """Smallest number of variables meeting every support (branch & bound)."""
    supports = [s for s in supports]
    if any(not s for s in supports):
        raise ValueError("empty support: the ideal contains a unit")
    if not supports:
        return 0
    best = len(frozenset().union(*supports))

    def lower_bound(unhit: List[FrozenSet[int]]) -> int:
        used: set = set()
        count = 0
        for s in unhit:
            if not (s & used):
                count += 1
                used |= s
        return count

    def rec(unhit: List[FrozenSet[int]], size: int) -> None:
        nonlocal best
        if not unhit:
            best = min(best, size)
            return
        if size + lower_bound(unhit) >= best:
            return
        pivot = min(unhit, key=len)
        for v in sorted(pivot):
            rec([s for s in unhit if v not in s], size + 1)

    rec(supports, 0)
    return best


def minimal_hitting_sets(
    supports: Sequence[FrozenSet[int]], limit: Optional[int] = None
) -> List[FrozenSet[int]]:
    """All inclusion-minimal hitting sets (up to ``limit`` of them)."""
    if any(not s for s in supports):
        raise ValueError("empty support: the ideal contains a unit")
    if not supports:
        return [frozenset()]
    found: List[FrozenSet[int]] = []

    def rec(unhit: List[FrozenSet[int]], chosen: set) -> bool:
        if limit is not None and len(found) >= limit:
            return True
        if not unhit:
            found.append(frozenset(chosen))
            return limit is not None and len(found) >= limit
        pivot = min(unhit, key=lambda s: (len(s), sorted(s)))
        for v in sorted(pivot):
            chosen.add(v)
            if rec([s for s in unhit if v not in s], chosen):
                chosen.discard(v)
                return True
            chosen.discard(v)
        return False

    rec(list(supports), set())
    # the branching can emit proper supersets of other answers; keep minimal
    by_size = sorted(set(found), key=lambda s: (len(s), sorted(s)))
    minimal: List[FrozenSet[int]] = []
    for s in by_size:
        if not any(t < s for t in minimal):
            minimal.append(s)
    return minimal


def is_independent(u: Iterable[int], G: GroebnerBasis) -> bool:
    """True iff no leading monomial of G is supported entirely inside u."""
    u = frozenset(u)
    for exps in G.lead_exps():
        if all(i in u or not e for i, e in enumerate(exps)):
            return False
    return True


def maximal_independent_sets(
    G: GroebnerBasis, limit: Optional[int] = None
) -> List[FrozenSet[int]]:
    """Inclusion-maximal independent sets, largest first.

    These are the complements of the minimal hitting sets of the leading
    supports; ties in size are broken by the sorted index tuple, so the
    output order is deterministic.
    """
    nvars = G.ring.nvars
    if G.elements and G.is_trivial():
        return []
    supports = minimal_supports(G.lead_exps())
    hitters = minimal_hitting_sets(supports, limit)
    everything = frozenset(range(nvars))
    out = [everything - h for h in hitters]
    out.sort(key=lambda u: (-len(u), sorted(u)))
    return out


@dataclass(frozen=True)
class IndepSetReport:
    """Score card for one maximal independent set u.

    d is the K(u)-vector-space dimension of the localized quotient;
    per_element lists (degree, terms) of each K[u]-leading coefficient in
    the minimal localized basis; lc_degree / lc_terms are their maxima.
    """

    u: Tuple[int, ...]
    u_names: Tuple[str, ...]
    d: int
    per_element: Tuple[Tuple[int, int], ...]
    lc_degree: int
    lc_terms: int

    def sort_key(self):
        return (self.d, self.lc_degree, self.lc_terms, self.u_names)

    def line(self) -> str:
        return (
            f"u={','.join(self.u_names)} d_u={self.d} "
            f"lcdeg={self.lc_degree} lcterms={self.lc_terms}"
        )


def score_independent_set(I: "Ideal", u: Iterable[int]) -> IndepSetReport:
    """Score a maximal independent set (localized dimension must be finite)."""
    u = tuple(sorted(set(u)))
    G = I.groebner(order=degrevlex_order(), localized_vars=u)
    d = G.vector_space_dimension()
    per = []
    for lc in G.leading_coefficients():
        per.append((max(lc.total_degree(), 0), lc.num_terms()))
    per_tuple = tuple(per)
    return IndepSetReport(
        u=u,
        u_names=tuple(I.ring.names[i] for i in u),
        d=d,
        per_element=per_tuple,
        lc_degree=max((d0 for d0, _ in per), default=0),
        lc_terms=max((t for _, t in per), default=0),
    )


@dataclass(frozen=True)
class IndepSetRanking:
    reports: Tuple[IndepSetReport, ...]

    def best(self) -> IndepSetReport:
        if not self.reports:
            raise ValueError("empty ranking")
        return self.reports[0]

    def lines(self) -> List[str]:
        return [r.line() for r in self.reports]


def rank_independent_sets(
    I: "Ideal",
    candidates: Optional[Sequence[Iterable[int]]] = None,
    budget: Optional[int] = None,
) -> IndepSetRanking:
    """Score candidate sets (default: enumerated maximal independent sets,
    capped by ``budget``) and rank them cheapest-first."""
    if candidates is None:
        candidates = maximal_independent_sets(I.groebner(), limit=budget)
    elif budget is not None:
        candidates = list(candidates)[:budget]
    reports = [score_independent_set(I, u) for u in candidates]
    reports.sort(key=lambda r: r.sort_key())
    return IndepSetRanking(tuple(reports))
