"""Independent sets: hitting-set enumeration, scoring, ranking."""

from idealdec.ideals import Ideal, dimension
from idealdec.indepsets import (
    IndepSetReport,
    is_independent,
    maximal_independent_sets,
    min_hitting_set_size,
    minimal_hitting_sets,
    minimal_supports,
    rank_independent_sets,
    score_independent_set,
)


def _ideal(ring, *texts):
    return Ideal.parse(ring, texts)


def test_minimal_supports_prunes_supersets():
    got = minimal_supports([(1, 1, 0), (1, 1, 1), (0, 0, 2)])
    assert sorted(sorted(s) for s in got) == [[0, 1], [2]]


def test_hitting_sets():
    supports = [frozenset({0, 1}), frozenset({2})]
    assert min_hitting_set_size(supports) == 2
    hitters = minimal_hitting_sets(supports)
    assert sorted(sorted(h) for h in hitters) == [[0, 2], [1, 2]]


def test_maximal_independent_sets_of_monomial_ideal(rxyz):
    I = _ideal(rxyz, "x*y", "x*z")
    G = I.groebner()
    sets = maximal_independent_sets(G)
    as_names = [
        ",".join(rxyz.names[i] for i in sorted(u)) for u in sets
    ]
    # largest first, ties by index order
    assert as_names == ["y,z", "x"]
    assert all(is_independent(u, G) for u in sets)
    assert not is_independent([0, 1], G)


def test_independent_set_cardinality_matches_dimension(rxyz):
    I = _ideal(rxyz, "x*y", "x*z")
    sets = maximal_independent_sets(I.groebner())
    assert max(len(u) for u in sets) == dimension(I)


def test_limit_caps_enumeration(rxyz):
    I = _ideal(rxyz, "x*y*z")
    sets = maximal_independent_sets(I.groebner(), limit=2)
    assert len(sets) == 2


def test_trivial_ideal_has_no_independent_sets(rxy):
    I = _ideal(rxy, "x", "x + 1")
    assert maximal_independent_sets(I.groebner()) == []


def test_score_report_line(rxy):
    I = _ideal(rxy, "x*y")
    report = score_independent_set(I, [1])
    assert report.line() == "u=y d_u=1 lcdeg=1 lcterms=1"
    assert report.u_names == ("y",)
    assert report.per_element == ((1, 1),)


def test_rank_sorts_cheapest_first(rxyz):
    I = _ideal(rxyz, "x^2*y - z")  # dim 2
    ranking = rank_independent_sets(I)
    assert len(ranking.reports) >= 2
    keys = [r.sort_key() for r in ranking.reports]
    assert keys == sorted(keys)
    assert ranking.best() == ranking.reports[0]


def _dominates(a: IndepSetReport, b: IndepSetReport) -> bool:
    """Component-wise dominance on (d, lc_degree, lc_terms)."""
    av = (a.d, a.lc_degree, a.lc_terms)
    bv = (b.d, b.lc_degree, b.lc_terms)
    return all(x <= y for x, y in zip(av, bv)) and av != bv


def test_ranking_refines_dominance(rxyz):
    I = _ideal(rxyz, "x*y", "x*z")
    ranking = rank_independent_sets(I)
    for a in ranking.reports:
        for b in ranking.reports:
            if _dominates(a, b):
                assert a.sort_key() < b.sort_key()


def test_rank_respects_budget(rxyz):
    I = _ideal(rxyz, "x*y*z")
    full = rank_independent_sets(I)
    capped = rank_independent_sets(I, budget=1)
    assert len(full.reports) == 3
    assert len(capped.reports) == 1


def test_report_lines_are_deterministic(rxyz):
    I1 = _ideal(rxyz, "x*y", "x*z")
    I2 = _ideal(rxyz, "x*y", "x*z")
    assert rank_independent_sets(I1).lines() == rank_independent_sets(I2).lines()
