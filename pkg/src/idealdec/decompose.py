"""Primary decomposition and primality checking.

The entry points are:

* ``minimal_polynomial`` -- minimal polynomial of a variable (or of a linear
  form, via an adjoined tag variable) over the base field K(u) modulo a
  zero-dimensional localized ideal;
* ``zero_dim_decompose`` -- decompose a zero-dimensional (localized) ideal
  into primary pieces by splitting minimal polynomials into coprime parts;
* ``gtz_decompose`` -- full decomposition of an arbitrary ideal: localize at
  a best-ranked maximal independent set, decompose the zero-dimensional
  extension, contract, and recurse on I + <h^m>;
* ``primality_check`` -- certify an ideal prime (or refute it) by combining
  a localized maximality certificate with the saturation identities
  I : c = I for the leading coefficients c, pruned by ideal symmetries;
* ``is_maximal_zero_dim`` -- the maximality certificate itself.

Decisions that depend on polynomial factorization go through the bounded
certificate toolkit in factorize; whenever that toolkit cannot decide, the
affected component or verdict is reported as UNKNOWN with the unresolved
obligation attached, never silently guessed.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field, replace
from typing import Iterable, List, Optional, Sequence, Tuple

from .factorize import FactorOutcome, FactorPart, split_minimal_polynomial
from .groebner import NotZeroDimensional
from .ideals import (
    Ideal,
    IdealError,
    contract_with_trail,
    eliminate,
    ideal_sum,
    intersect,
    quotient,
    saturate,
)
from .indepsets import maximal_independent_sets, rank_independent_sets
from .orders import degrevlex_order, lex_order
from .polygcd import normalize_assoc, poly_gcd, poly_lcm_many, primitive_in
from .rings import Polynomial, PolyRing, extend_ring, fresh_name, inject, project
from .symmetry import SymmetryAction, UnionFind

# verdict / status labels
PRIME = "PRIME"
NOT_PRIME = "NOT_PRIME"
MAXIMAL = "MAXIMAL"
NOT_MAXIMAL = "NOT_MAXIMAL"
UNKNOWN = "UNKNOWN"


class DecompositionError(Exception):
    pass


class DecompositionIncomplete(DecompositionError):
    pass


@dataclass(frozen=True)
class Provenance:
    """How a component was produced: the independent set used, the
    (coefficient, exponent) saturation trail of its contraction, the
    recursion depth, and free-form notes."""

    u_names: Tuple[str, ...] = ()
    saturations: Tuple[Tuple[str, Optional[int]], ...] = ()
    depth: int = 0
    notes: Tuple[str, ...] = ()


@dataclass(frozen=True)
class PrimaryComponent:
    """A (claimed) primary component with its associated prime.

    ``certified`` is True when the primality of ``prime`` is backed by a
    certificate; otherwise ``obligation`` names what is left unproven."""

    primary: Ideal
    prime: Optional[Ideal]
    certified: bool
    certificate: str = ""
    obligation: str = ""
    provenance: Provenance = field(default_factory=Provenance)


@dataclass(frozen=True)
class DecompositionResult:
    ideal: Ideal
    components: Tuple[PrimaryComponent, ...]
    complete: bool
    notes: Tuple[str, ...] = ()


@dataclass(frozen=True)
class MaximalityResult:
    status: str
    certificate: str = ""
    witness: Optional[Polynomial] = None
    obligation: str = ""


@dataclass(frozen=True)
class PrimalityVerdict:
    status: str
    u_names: Tuple[str, ...] = ()
    details: Tuple[str, ...] = ()
    witness: Optional[Polynomial] = None
    obligation: str = ""


# ---------------------------------------------------------------------------
# minimal polynomials


def minimal_polynomial(
    I: Ideal, v: int, u: Iterable[int] = ()
) -> Polynomial:
    """Minimal polynomial of x_v over K(u) modulo I K(u)[X-u].

    Computed as the gcd over K(u)[x_v] of the elimination ideal
    I /\\ K[x_v, u]; returned primitive in x_v with canonical sign
    (a constant when the localized ideal is trivial).  Raises
    NotZeroDimensional when x_v satisfies no algebraic relation.
    """
    ring = I.ring
    u = frozenset(u)
    if v in u:
        raise IdealError("variable lies in the independent set")
    others = [i for i in range(ring.nvars) if i != v and i not in u]
    J = eliminate(I, others)
    gens = [g for g in J.generators if not g.is_zero()]
    if not gens:
        raise NotZeroDimensional(
            f"{ring.names[v]} satisfies no relation over the base"
        )
    g = gens[0]
    for h in gens[1:]:
        g = poly_gcd(g, h)
        if g.is_constant():
            break
    if g.degree_in(v) == 0:
        return I.ring.one
    return normalize_assoc(primitive_in(g, v))


def _tag_ring(ring: PolyRing) -> Tuple[PolyRing, int]:
    """The ring with one tag variable adjoined at the back."""
    name = fresh_name(ring, "t")
    big = extend_ring(ring, [name], front=False)
    return big, big.nvars - 1


def minimal_polynomial_of_form(
    I: Ideal, coeffs: Sequence[int], u: Iterable[int] = ()
) -> Tuple[Polynomial, Polynomial, PolyRing, int]:
    """Minimal polynomial over K(u) of the linear form sum(c_i x_i) modulo
    the localized ideal.

    ``coeffs`` has one integer per ring variable (zero on u).  Returns
    (m, form, big, tag): m is a polynomial in the tag variable and u inside
    the extended ring ``big``, and ``form`` is the linear form in I.ring.
    """
    ring = I.ring
    u = frozenset(u)
    big, tag = _tag_ring(ring)
    form = ring.zero
    for i, c in enumerate(coeffs):
        if c and i in u:
            raise IdealError("linear form meets the independent set")
        if c:
            form = form + ring.var(ring.names[i]).scale(c)
    if form.is_zero():
        raise IdealError("zero linear form")
    gens = [inject(g, big, 0) for g in I.generators]
    gens.append(big.var(big.names[tag]) - inject(form, big, 0))
    J = Ideal(big, gens)
    m = minimal_polynomial(J, tag, u)
    return m, form, big, tag


# ---------------------------------------------------------------------------
# zero-dimensional decomposition


def _split_branches(
    I: Ideal, parts: Sequence[FactorPart], substitute: Optional[Tuple[int, Polynomial, PolyRing]]
) -> List[Tuple[Ideal, str]]:
    """The branch ideals I + <p^mult> for coprime parts p of a minimal
    polynomial.  ``substitute`` = (tag, form, big) rewrites parts that live
    in a tag-extended ring back into I.ring before adjoining."""
    out = []
    for part in parts:
        p = part.poly
        if substitute is not None:
            tag, form, big = substitute
            p = project(p.substitute(tag, inject(form, big, 0)), I.ring, 0)
        branch = ideal_sum(I, [p ** part.multiplicity])
        out.append((branch, str(normalize_assoc(p))))
    return out


def _squarefree_part_in(m: Polynomial, v: int) -> Polynomial:
    d = m.derivative(v)
    if d.is_zero():
        return m
    from .polygcd import exact_divide

    g = poly_gcd(m, d)
    if g.is_constant():
        return m
    return normalize_assoc(primitive_in(exact_divide(m, g), v))


def _radical_zero_dim(
    I: Ideal, u: Iterable[int], minpolys: Sequence[Tuple[int, Polynomial]]
) -> Ideal:
    """Radical of a zero-dimensional localized ideal: adjoin the squarefree
    part of each variable's minimal polynomial (the base field has
    characteristic zero, so this is exact)."""
    extra = []
    for v, m in minpolys:
        s = _squarefree_part_in(m, v)
        if s.degree_in(v) < m.degree_in(v):
            extra.append(s)
    if not extra:
        return I
    return ideal_sum(I, extra)


def _splits(outcome: FactorOutcome) -> bool:
    """Two or more coprime parts: adjoining p_i^mult splits the ideal.  A
    single part of high multiplicity is no split (I + <p^k> = I)."""
    return len(outcome.parts) >= 2


def _refutes_maximality(outcome: FactorOutcome) -> bool:
    return len(outcome.parts) >= 2 or any(
        p.multiplicity > 1 for p in outcome.parts
    )


def _linear_form_coeffs(
    rest: Sequence[int], nvars: int, trial: int, rng: random.Random
) -> List[int]:
    coeffs = [0] * nvars
    if trial == 0:
        for j, v in enumerate(rest):
            coeffs[v] = j + 1
    else:
        while all(c == 0 for c in coeffs):
            for v in rest:
                coeffs[v] = rng.randint(-5, 5)
    return coeffs


def zero_dim_decompose(
    I: Ideal,
    u: Iterable[int] = (),
    seed: int = 0,
    linear_budget: int = 8,
    _depth: int = 0,
) -> List[PrimaryComponent]:
    """Primary decomposition of a zero-dimensional localized ideal.

    The returned components are plain-ideal representatives of the primary
    components of I K(u)[X-u]; callers working over K[X] must contract
    them.  Splitting adjoins coprime parts of minimal polynomials, first of
    the variables and then of seeded random linear forms; a leaf that
    cannot be split is certified primary through its radical's maximality
    certificate, or reported uncertified with the unresolved obligation.
    """
    u = tuple(sorted(set(u)))
    lv = u or None
    if _depth > 64:
        raise DecompositionIncomplete("zero-dimensional split depth exceeded")
    gb = I.groebner(degrevlex_order(), localized_vars=lv)
    if not I.generators or gb.is_trivial():
        return []
    D = gb.vector_space_dimension()  # raises NotZeroDimensional if infinite
    u_names = tuple(I.ring.names[i] for i in u)
    if D == 1:
        prov = Provenance(u_names=u_names, depth=_depth)
        return [
            PrimaryComponent(I, I, True, certificate="dimension-1", provenance=prov)
        ]
    rest = gb.rest_vars
    minpolys: List[Tuple[int, Polynomial]] = []
    obligations: List[str] = []
    for v in rest:
        m = minimal_polynomial(I, v, u)
        minpolys.append((v, m))
        outcome = split_minimal_polynomial(m, v, u, seed)
        if _splits(outcome):
            comps: List[PrimaryComponent] = []
            for branch, tag in _split_branches(I, outcome.parts, None):
                for c in zero_dim_decompose(
                    branch, u, seed, linear_budget, _depth + 1
                ):
                    note = f"split {I.ring.names[v]} by {tag}"
                    comps.append(_with_note(c, note))
            return comps
        part = outcome.parts[0]
        if part.irreducible is None:
            obligations.append(outcome.obligation or f"factor {m}")
    # no variable split; try linear forms
    rng = random.Random((seed << 8) ^ (_depth * 0x9E37) ^ 0x1F0)
    for trial in range(linear_budget):
        coeffs = _linear_form_coeffs(rest, I.ring.nvars, trial, rng)
        m, form, big, tag = minimal_polynomial_of_form(I, coeffs, u)
        outcome = split_minimal_polynomial(m, tag, u, seed)
        if _splits(outcome):
            comps = []
            for branch, label in _split_branches(
                I, outcome.parts, (tag, form, big)
            ):
                for c in zero_dim_decompose(
                    branch, u, seed, linear_budget, _depth + 1
                ):
                    comps.append(_with_note(c, f"split {form} by {label}"))
            return comps
        if outcome.parts[0].irreducible is None:
            obligations.append(outcome.obligation or f"factor {m}")
    # leaf: no split found anywhere
    R = _radical_zero_dim(I, u, minpolys)
    maximality = is_maximal_zero_dim(R, u, seed, linear_budget)
    prov = Provenance(u_names=u_names, depth=_depth)
    if maximality.status == MAXIMAL:
        return [
            PrimaryComponent(
                I, R, True, certificate=maximality.certificate, provenance=prov
            )
        ]
    if maximality.status == NOT_MAXIMAL and maximality.witness is not None:
        # a zero divisor surfaced late; split along it and keep going
        comps = []
        for branch in _saturation_split(I, maximality.witness):
            for c in zero_dim_decompose(branch, u, seed, linear_budget, _depth + 1):
                comps.append(_with_note(c, f"split by witness {maximality.witness}"))
        if comps:
            return comps
    obligation = maximality.obligation or "; ".join(obligations[:3])
    return [
        PrimaryComponent(
            I,
            R,
            False,
            obligation=obligation or "maximality of the radical is unproven",
            provenance=prov,
        )
    ]


def _with_note(c: PrimaryComponent, note: str) -> PrimaryComponent:
    prov = c.provenance
    return replace(c, provenance=replace(prov, notes=prov.notes + (note,)))


def _saturation_split(I: Ideal, h: Polynomial) -> List[Ideal]:
    """I = (I : h^inf) /\\ (I + <h^m>) with m the saturation exponent."""
    res = saturate(I, h, "iterate")
    if res.ideal.equals(I):
        return []
    m = max(res.exponent or 1, 1)
    return [res.ideal, ideal_sum(I, [h ** m])]


# ---------------------------------------------------------------------------
# maximality certificates


def is_maximal_zero_dim(
    I: Ideal,
    u: Iterable[int] = (),
    seed: int = 0,
    linear_budget: int = 6,
) -> MaximalityResult:
    """Certify that a zero-dimensional localized ideal is maximal.

    MAXIMAL comes with a certificate: the K(u)-vector-space dimension is 1,
    or some variable or linear form is a primitive element whose minimal
    polynomial is certified irreducible of degree equal to that dimension.
    NOT_MAXIMAL carries a witness zero divisor.  When the bounded
    irreducibility toolkit cannot decide, the result is UNKNOWN with the
    open obligation.
    """
    u = tuple(sorted(set(u)))
    lv = u or None
    gb = I.groebner(degrevlex_order(), localized_vars=lv)
    if not I.generators:
        return MaximalityResult(NOT_MAXIMAL, obligation="zero ideal")
    if gb.is_trivial():
        return MaximalityResult(NOT_MAXIMAL, obligation="unit ideal")
    D = gb.vector_space_dimension()
    if D == 1:
        return MaximalityResult(MAXIMAL, certificate="dimension-1")
    rest = gb.rest_vars
    obligations: List[str] = []
    for v in rest:
        m = minimal_polynomial(I, v, u)
        outcome = split_minimal_polynomial(m, v, u, seed)
        if _refutes_maximality(outcome):
            w = outcome.parts[0].poly
            if w.degree_in(v) == 0 and len(outcome.parts) > 1:
                w = outcome.parts[1].poly
            return MaximalityResult(NOT_MAXIMAL, witness=w)
        part = outcome.parts[0]
        if part.irreducible is True and m.degree_in(v) == D:
            cert = f"primitive-element:{I.ring.names[v]};{part.certificate}"
            return MaximalityResult(MAXIMAL, certificate=cert)
        if part.irreducible is None:
            obligations.append(outcome.obligation or f"factor {m}")
    rng = random.Random((seed << 8) ^ 0xA11F)
    for trial in range(linear_budget):
        coeffs = _linear_form_coeffs(rest, I.ring.nvars, trial, rng)
        m, form, big, tag = minimal_polynomial_of_form(I, coeffs, u)
        outcome = split_minimal_polynomial(m, tag, u, seed)
        if _refutes_maximality(outcome):
            p = outcome.parts[0].poly
            if p.degree_in(tag) == 0 and len(outcome.parts) > 1:
                p = outcome.parts[1].poly
            w = project(p.substitute(tag, inject(form, big, 0)), I.ring, 0)
            return MaximalityResult(NOT_MAXIMAL, witness=w)
        part = outcome.parts[0]
        if part.irreducible is True and m.degree_in(tag) == D:
            cert = f"primitive-element:{form};{part.certificate}"
            return MaximalityResult(MAXIMAL, certificate=cert)
        if part.irreducible is None:
            obligations.append(outcome.obligation or f"factor {m}")
    obligation = (
        obligations[0]
        if obligations
        else "no primitive element found within the search budget"
    )
    return MaximalityResult(UNKNOWN, obligation=obligation)


# ---------------------------------------------------------------------------
# the general decomposition


def _saturation_handles(I: Ideal, u: Tuple[int, ...]) -> List[Polynomial]:
    from .ideals import sort_saturation_coefficients

    G = I.groebner(order=lex_order(), localized_vars=frozenset(u))
    return sort_saturation_coefficients(G.leading_coefficients())


def _contract_component(
    c: PrimaryComponent, u: Tuple[int, ...], depth: int
) -> PrimaryComponent:
    """Pull a localized component back to K[X] by contraction."""
    primary, trail = contract_with_trail(c.primary, u)
    prime = c.prime
    if prime is not None:
        if prime.generators == c.primary.generators:
            prime = primary
        else:
            prime, _ = contract_with_trail(prime, u)
    sat = tuple((str(p), e) for p, e in trail)
    prov = replace(c.provenance, saturations=sat, depth=depth)
    return replace(c, primary=primary, prime=prime, provenance=prov)


def _dedupe(components: List[PrimaryComponent]) -> List[PrimaryComponent]:
    seen = {}
    for c in components:
        key = c.primary.canonical_generators()
        prev = seen.get(key)
        if prev is None or (c.certified and not prev.certified):
            seen[key] = c
    return list(seen.values())


def _prune_redundant(
    I: Ideal, components: List[PrimaryComponent]
) -> List[PrimaryComponent]:
    """Drop components not needed for the intersection to equal I."""
    comps = list(components)
    # containment first: a component containing another is redundant
    keep: List[PrimaryComponent] = []
    for i, c in enumerate(comps):
        contained = False
        for j, d in enumerate(comps):
            if i == j:
                continue
            if c.primary.contains_ideal(d.primary) and not d.primary.contains_ideal(
                c.primary
            ):
                contained = True
                break
        if not contained:
            keep.append(c)
    comps = keep
    if len(comps) <= 1:
        return comps
    # leave-one-out
    changed = True
    while changed and len(comps) > 1:
        changed = False
        for i in range(len(comps)):
            rest = [c for j, c in enumerate(comps) if j != i]
            meet = rest[0].primary
            for c in rest[1:]:
                meet = intersect(meet, c.primary)
            if meet.equals(I):
                comps = rest
                changed = True
                break
    return comps


def gtz_decompose(
    I: Ideal,
    seed: int = 0,
    budget: Optional[int] = None,
    linear_budget: int = 8,
    max_depth: int = 16,
) -> DecompositionResult:
    """Primary decomposition of an arbitrary ideal over the rationals.

    Positive-dimensional ideals are localized at the best-ranked maximal
    independent set u, the zero-dimensional extension is decomposed and
    contracted back, and the remainder I + <h^m> (h the least common
    multiple of the localized leading coefficients, m the saturation
    exponent) is decomposed recursively.  Components are deduplicated and
    pruned to an irredundant intersection.
    """
    comps = _gtz(I, seed, budget, linear_budget, 0, max_depth)
    comps = _dedupe(comps)
    if not I.is_zero() and not I.is_trivial():
        comps = _prune_redundant(I, comps)
    comps.sort(key=lambda c: (len(c.primary.canonical_generators()),
                              [str(g) for g in c.primary.canonical_generators()]))
    complete = all(c.certified for c in comps)
    notes = ()
    return DecompositionResult(I, tuple(comps), complete, notes)


def _gtz(
    I: Ideal,
    seed: int,
    budget: Optional[int],
    linear_budget: int,
    depth: int,
    max_depth: int,
) -> List[PrimaryComponent]:
    if depth > max_depth:
        raise DecompositionIncomplete("decomposition recursion depth exceeded")
    if I.is_zero() or I.is_trivial():
        return []
    from .ideals import dimension

    dim = dimension(I)
    if dim == 0:
        comps = zero_dim_decompose(I, (), seed, linear_budget)
        return [replace(c, provenance=replace(c.provenance, depth=depth))
                for c in comps]
    gb = I.groebner()
    candidates = [
        us for us in maximal_independent_sets(gb, limit=budget) if len(us) == dim
    ]
    ranking = rank_independent_sets(I, candidates, budget)
    u = tuple(sorted(ranking.best().u))
    local = zero_dim_decompose(I, u, seed, linear_budget)
    # when the localized ideal is already primary, local is [I] itself and
    # the contraction below is exactly the saturation shortcut
    out: List[PrimaryComponent] = [
        _contract_component(c, u, depth) for c in local
    ]
    handles = _saturation_handles(I, u)
    if handles:
        h = normalize_assoc(poly_lcm_many(handles))
    else:
        h = I.ring.one
    if not h.is_constant():
        res = saturate(I, h, "iterate")
        m = res.exponent or 0
        if m > 0:
            remainder = ideal_sum(I, [h ** m])
            out.extend(
                _gtz(remainder, seed, budget, linear_budget, depth + 1, max_depth)
            )
    return out


# ---------------------------------------------------------------------------
# symmetry-assisted primality check


def apply_automorphism(sigma: SymmetryAction, I: Ideal) -> Ideal:
    return Ideal(I.ring, [sigma(g) for g in I.generators])


def stabilizes(sigma: SymmetryAction, I: Ideal) -> bool:
    """Whether the variable permutation maps I onto itself."""
    J = apply_automorphism(sigma, I)
    return J.groebner().elements == I.groebner().elements


def coefficient_orbits(
    cs: Sequence[Polynomial],
    symmetries: Iterable[SymmetryAction],
    I: Ideal,
) -> List[List[int]]:
    """Partition saturation coefficients into orbits under the ideal's
    symmetries.

    Generators that fail to stabilize I are skipped with a warning; images
    that match no listed coefficient (up to canonical associates) add no
    edge, which errs on the side of more orbits, never fewer checks than
    are sound.
    """
    uf = UnionFind(len(cs))
    index = {normalize_assoc(c): i for i, c in enumerate(cs)}
    for sigma in symmetries:
        if not stabilizes(sigma, I):
            label = sigma.label or sigma.cycles(I.ring.names)
            warnings.warn(f"symmetry {label} does not stabilize the ideal; skipped")
            continue
        for i, c in enumerate(cs):
            j = index.get(normalize_assoc(sigma(c)))
            if j is not None:
                uf.union(i, j)
    return uf.classes()


def _stable_under_quotient(I: Ideal, c: Polynomial) -> bool:
    return quotient(I, c).equals(I)


def primality_check(
    I: Ideal,
    symmetries: Sequence[SymmetryAction] = (),
    max_workers: Optional[int] = None,
    seed: int = 0,
    linear_budget: int = 6,
    u: Optional[Iterable[int]] = None,
    budget: Optional[int] = None,
) -> PrimalityVerdict:
    """Certify I prime, refute it, or report UNKNOWN.

    I is prime iff its extension over K(u) (u a maximal independent set) is
    maximal and I : c = I for every K[u]-leading coefficient c of the
    localized basis; both halves are checked, the latter once per symmetry
    orbit of the coefficients.  ``u`` overrides the ranked choice of
    independent set (it must be independent of full cardinality, e.g. one
    preserved by the symmetries); ``budget`` caps how many candidate sets
    the ranked choice may enumerate.  ``max_workers`` > 1 runs the
    per-orbit quotient checks on a thread pool (the outcome is unchanged).
    """
    details: List[str] = []
    if I.is_zero():
        return PrimalityVerdict(PRIME, (), ("zero ideal",))
    if I.is_trivial():
        return PrimalityVerdict(NOT_PRIME, (), ("unit ideal",))
    from .ideals import dimension

    dim = dimension(I)
    if u is not None:
        u = tuple(sorted(set(u)))
        if len(u) != dim:
            raise IdealError("u must have cardinality dim(I)")
    elif dim == 0:
        u = ()
    else:
        gb = I.groebner()
        candidates = [
            us for us in maximal_independent_sets(gb, limit=budget)
            if len(us) == dim
        ]
        ranking = rank_independent_sets(I, candidates)
        u = tuple(sorted(ranking.best().u))
    u_names = tuple(I.ring.names[i] for i in u)
    details.append("u=" + (",".join(u_names) if u_names else "-"))
    maximality = is_maximal_zero_dim(I, u, seed, linear_budget)
    details.append(f"localized-maximality={maximality.status}")
    if maximality.certificate:
        details.append(f"certificate={maximality.certificate}")
    if maximality.status == NOT_MAXIMAL:
        return PrimalityVerdict(
            NOT_PRIME, u_names, tuple(details), witness=maximality.witness
        )
    cs = _saturation_handles(I, u) if u else []
    orbits = (
        coefficient_orbits(cs, symmetries, I) if symmetries else
        [[i] for i in range(len(cs))]
    )
    reps = [cs[orbit[0]] for orbit in orbits]
    if max_workers is not None and max_workers > 1 and len(reps) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            stable = list(pool.map(lambda c: _stable_under_quotient(I, c), reps))
    else:
        stable = [_stable_under_quotient(I, c) for c in reps]
    witness = None
    for orbit, c, ok in zip(orbits, reps, stable):
        details.append(
            f"c={c} orbit_size={len(orbit)} stable={'yes' if ok else 'no'}"
        )
        if not ok and witness is None:
            witness = c
    if witness is not None:
        return PrimalityVerdict(NOT_PRIME, u_names, tuple(details), witness=witness)
    if maximality.status == MAXIMAL:
        return PrimalityVerdict(PRIME, u_names, tuple(details))
    return PrimalityVerdict(
        UNKNOWN, u_names, tuple(details), obligation=maximality.obligation
    )
