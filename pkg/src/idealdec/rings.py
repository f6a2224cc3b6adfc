"""Sparse multivariate polynomials over an exact coefficient field.

A polynomial is an immutable mapping from exponent tuples to nonzero
coefficients, bound to a ring (an ordered tuple of variable names plus a
coefficient domain).  Arithmetic is exact; display and parsing follow a
small term grammar::

    poly   := [sign] term { sign term }
    term   := coeff | [coeff "*"] factor { "*" factor }
    factor := name [ "^" exponent ]
    coeff  := int [ "/" int ]

Terms are printed in descending lexicographic order of exponent tuples with
respect to the declared variable order, so ``str`` output is canonical and
``ring.parse(str(f)) == f`` always holds.
"""

from __future__ import annotations

import re
from typing import Dict, Sequence, Tuple

from .domains import DomainError, QQ, PrimeField, Rationals

Exponents = Tuple[int, ...]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()]))")


class ParseError(ValueError):
    """Raised for text that does not match the polynomial grammar."""


class RingError(ValueError):
    """Raised for ring mismatches and malformed ring data."""


class PolyRing:
    """A polynomial ring K[x_1, ..., x_n] with named, ordered variables."""

    __slots__ = ("names", "domain", "_index", "_hash")

    def __init__(self, names: Sequence[str], domain=QQ):
        names = tuple(names)
        if not names:
            raise RingError("a ring needs at least one variable")
        seen = set()
        for n in names:
            if not _NAME_RE.fullmatch(n):
                raise RingError(f"bad variable name {n!r}")
            if n in seen:
                raise RingError(f"duplicate variable name {n!r}")
            seen.add(n)
        self.names = names
        self.domain = domain
        self._index = {n: i for i, n in enumerate(names)}
        self._hash = hash((names, domain))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise RingError(f"{name!r} is not a variable of {self}") from None

    def var(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): self.domain.one})

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.var(n) for n in self.names)

    def const(self, value) -> "Polynomial":
        c = self.domain.coerce(value)
        if not c:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def monomial(self, exps: Exponents, coeff=1) -> "Polynomial":
        return self.poly({tuple(exps): coeff})

    def poly(self, mapping: Dict[Exponents, object]) -> "Polynomial":
        """Build a polynomial from {exponent tuple: coefficient}, validating."""
        terms: Dict[Exponents, object] = {}
        for exps, raw in mapping.items():
            exps = tuple(exps)
            if len(exps) != self.nvars:
                raise RingError(
                    f"exponent tuple {exps} has length {len(exps)}, ring has "
                    f"{self.nvars} variables"
                )
            if any(e < 0 or not isinstance(e, int) for e in exps):
                raise RingError(f"negative or non-integer exponent in {exps}")
            c = self.domain.coerce(raw)
            if exps in terms:
                c = terms[exps] + c
            if c:
                terms[exps] = c
            elif exps in terms:
                del terms[exps]
        return Polynomial(self, terms)

    def parse(self, text: str) -> "Polynomial":
        return _parse_poly(self, text)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.domain == other.domain
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return format_ring_header(self)


class Polynomial:
    """An element of a PolyRing; terms is a dict {exponents: coefficient}.

    Instances are treated as immutable; the terms dict is never mutated
    after construction.  Use ring.poly / ring.parse to build values with
    validation; arithmetic uses the trusted constructor directly.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Dict[Exponents, object]):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        """The coefficient of the constant term (zero if absent)."""
        return self.terms.get((0,) * self.ring.nvars, self.ring.domain.zero)

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.constant_value() == self.ring.domain.one

    # -- structure -------------------------------------------------------

    def support(self) -> frozenset:
        """Indices of variables that actually occur."""
        used = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(i)
        return frozenset(used)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, v: int) -> int:
        if not self.terms:
            return -1
        return max(e[v] for e in self.terms)

    def num_terms(self) -> int:
        return len(self.terms)

    def as_univariate(self, v: int) -> Dict[int, "Polynomial"]:
        """Coefficients {d: c_d} of self = sum c_d * x_v^d with c_d free of x_v."""
        buckets: Dict[int, Dict[Exponents, object]] = {}
        for exps, c in self.terms.items():
            d = exps[v]
            rest = exps[:v] + (0,) + exps[v + 1:]
            buckets.setdefault(d, {})[rest] = c
        return {d: Polynomial(self.ring, t) for d, t in sorted(buckets.items())}

    def coefficient_of(self, v: int, d: int) -> "Polynomial":
        out = {}
        for exps, c in self.terms.items():
            if exps[v] == d:
                out[exps[:v] + (0,) + exps[v + 1:]] = c
        return Polynomial(self.ring, out)

    # -- arithmetic ------------------------------------------------------

    def _require_same_ring(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise RingError("polynomials from different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        self._require_same_ring(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps)
            if s is None:
                out[exps] = c
            else:
                s = s + c
                if s:
                    out[exps] = s
                else:
                    del out[exps]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        self._require_same_ring(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps)
            if s is None:
                out[exps] = -c
            else:
                s = s - c
                if s:
                    out[exps] = s
                else:
                    del out[exps]
        return Polynomial(self.ring, out)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.domain.coerce(other)
            if not c:
                return self.ring.zero
            return Polynomial(self.ring, {e: k * c for e, k in self.terms.items()})
        self._require_same_ring(other)
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out: Dict[Exponents, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                if s is None:
                    out[e] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def scale(self, c) -> "Polynomial":
        return self * c

    def multiply_monomial(self, exps: Exponents, coeff) -> "Polynomial":
        out = {}
        for e, c in self.terms.items():
            out[tuple(a + b for a, b in zip(e, exps))] = c * coeff
        return Polynomial(self.ring, out)

    # -- order-dependent views -------------------------------------------

    def leading_data(self, order) -> Tuple[object, Exponents]:
        """(leading coefficient, leading exponent tuple) under ``order``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order.key
        lead = max(self.terms, key=key)
        return self.terms[lead], lead

    def sorted_terms(self, order=None):
        """Terms as (exponents, coeff), descending; default is display lex."""
        if order is None:
            items = sorted(self.terms.items(), reverse=True)
        else:
            key = order.key
            items = sorted(self.terms.items(), key=lambda kv: key(kv[0]), reverse=True)
        return items

    # -- substitution and transport ---------------------------------------

    def specialize(self, assignment: Dict[int, object]) -> "Polynomial":
        """Substitute values for some variables (by index)."""
        dom = self.ring.domain
        values = {v: dom.coerce(c) for v, c in assignment.items()}
        out: Dict[Exponents, object] = {}
        for exps, c in self.terms.items():
            acc = c
            new = list(exps)
            for v, val in values.items():
                e = exps[v]
                if e:
                    acc = acc * val ** e
                    new[v] = 0
            if not acc:
                continue
            ne = tuple(new)
            s = out.get(ne)
            if s is None:
                out[ne] = acc
            else:
                s = s + acc
                if s:
                    out[ne] = s
                else:
                    del out[ne]
        return Polynomial(self.ring, out)

    def substitute(self, v: int, value: "Polynomial") -> "Polynomial":
        """Substitute a polynomial for variable v (Horner on v-degree)."""
        coeffs = self.as_univariate(v)
        top = max(coeffs) if coeffs else 0
        result = self.ring.zero
        for d in range(top, -1, -1):
            result = result * value
            if d in coeffs:
                result = result + coeffs[d]
        return result

    def map_to(self, target: PolyRing, var_map: Dict[int, int]) -> "Polynomial":
        """Transport along a variable renaming (old index -> new index)."""
        out: Dict[Exponents, object] = {}
        for exps, c in self.terms.items():
            new = [0] * target.nvars
            for i, e in enumerate(exps):
                if e:
                    try:
                        new[var_map[i]] = e
                    except KeyError:
                        raise RingError(
                            f"variable {self.ring.names[i]} has no image"
                        ) from None
            out[tuple(new)] = target.domain.coerce(c)
        return Polynomial(target, out)

    def permute_vars(self, image: Sequence[int]) -> "Polynomial":
        """Apply the variable substitution x_i -> x_image[i] in the same ring."""
        out: Dict[Exponents, object] = {}
        for exps, c in self.terms.items():
            new = [0] * len(exps)
            for i, e in enumerate(exps):
                if e:
                    new[image[i]] += e
            ne = tuple(new)
            s = out.get(ne)
            if s is None:
                out[ne] = c
            else:
                s = s + c
                if s:
                    out[ne] = s
                else:
                    del out[ne]
        return Polynomial(self.ring, out)

    def derivative(self, v: int) -> "Polynomial":
        dom = self.ring.domain
        out = {}
        for exps, c in self.terms.items():
            e = exps[v]
            if not e:
                continue
            k = c * dom.coerce(e)
            if not k:
                continue
            out[exps[:v] + (e - 1,) + exps[v + 1:]] = k
        return Polynomial(self.ring, out)

    # -- comparison and display -------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, int):
                return self == self.ring.const(other)
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"<{format_poly(self)}>"


def format_poly(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    ring = f.ring
    dom = ring.domain
    pieces = []
    for exps, coeff in f.sorted_terms():
        neg, mag = dom.split_sign(coeff)
        factors = []
        for i, e in enumerate(exps):
            if e == 1:
                factors.append(ring.names[i])
            elif e:
                factors.append(f"{ring.names[i]}^{e}")
        if not factors:
            body = dom.coeff_str(mag)
        elif mag == dom.one:
            body = "*".join(factors)
        else:
            body = dom.coeff_str(mag) + "*" + "*".join(factors)
        pieces.append(("-" if neg else "+", body))
    sign0, body0 = pieces[0]
    out = [body0 if sign0 == "+" else "-" + body0]
    for sign, body in pieces[1:]:
        out.append(f" {sign} {body}")
    return "".join(out)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos and not text[pos:].strip():
            break
        if not m.group(0).strip():
            pos = m.end()
            continue
        if m.group(1):
            tokens.append(("int", m.group(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    if text[pos:].strip():
        raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}")
    return tokens


def _parse_poly(ring: PolyRing, text: str) -> Polynomial:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text")
    terms: Dict[Exponents, object] = {}
    pos = 0
    n = len(tokens)
    dom = ring.domain
    first = True
    while pos < n:
        sign = 1
        kind, val = tokens[pos]
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            pos += 1
        elif not first:
            raise ParseError(f"expected + or - before {val!r}")
        first = False
        if pos >= n:
            raise ParseError("dangling sign")
        # optional coefficient
        coeff = dom.one
        saw_coeff = False
        kind, val = tokens[pos]
        if kind == "int":
            num = int(val)
            den = 1
            pos += 1
            if pos < n and tokens[pos] == ("op", "/"):
                pos += 1
                if pos >= n or tokens[pos][0] != "int":
                    raise ParseError("expected integer denominator")
                den = int(tokens[pos][1])
                if den == 0:
                    raise ParseError("zero denominator")
                pos += 1
            coeff = dom.from_fraction(num, den)
            saw_coeff = True
        exps = [0] * ring.nvars
        saw_factor = False
        while pos < n:
            kind, val = tokens[pos]
            if saw_coeff or saw_factor:
                if kind == "op" and val == "*":
                    pos += 1
                    if pos >= n:
                        raise ParseError("dangling *")
                    kind, val = tokens[pos]
                else:
                    break
            if kind != "name":
                if saw_coeff and not saw_factor:
                    raise ParseError(f"expected variable after *, got {val!r}")
                break
            try:
                idx = ring.index(val)
            except RingError:
                raise ParseError(f"unknown variable {val!r}") from None
            pos += 1
            e = 1
            if pos < n and tokens[pos] == ("op", "^"):
                pos += 1
                if pos >= n or tokens[pos][0] != "int":
                    raise ParseError("expected integer exponent")
                e = int(tokens[pos][1])
                pos += 1
            exps[idx] += e
            saw_factor = True
        if not saw_coeff and not saw_factor:
            raise ParseError(f"expected term at {tokens[pos][1]!r}")
        key = tuple(exps)
        c = coeff if sign > 0 else -coeff
        s = terms.get(key)
        if s is None:
            terms[key] = c
        else:
            s = s + c
            if s:
                terms[key] = s
            else:
                del terms[key]
    return Polynomial(ring, terms)


# -- ring headers and extensions ------------------------------------------

_RANGE_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*?)(\d+)\.\.([A-Za-z_][A-Za-z0-9_]*?)(\d+)$")


def parse_ring_header(line: str) -> PolyRing:
    """Parse "ring Q[x1..x3,y]" or "ring GF(7)[x,y]" into a PolyRing."""
    line = line.strip()
    if not line.startswith("ring"):
        raise ParseError("ring header must start with 'ring'")
    rest = line[len("ring"):].strip()
    m = re.match(r"(Q|GF\((\d+)\))\s*\[(.*)\]$", rest)
    if not m:
        raise ParseError(f"malformed ring header {line!r}")
    try:
        domain = QQ if m.group(1) == "Q" else PrimeField(int(m.group(2)))
    except DomainError as ex:
        raise ParseError(f"bad ring header: {ex}") from None
    names = []
    for chunk in m.group(3).split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError("empty name in ring header")
        r = _RANGE_RE.fullmatch(chunk)
        if r:
            p1, a, p2, b = r.group(1), int(r.group(2)), r.group(3), int(r.group(4))
            if p1 != p2 or b < a:
                raise ParseError(f"bad variable range {chunk!r}")
            names.extend(f"{p1}{i}" for i in range(a, b + 1))
        else:
            names.append(chunk)
    try:
        return PolyRing(names, domain)
    except (RingError, DomainError) as ex:
        raise ParseError(f"bad ring header: {ex}") from None


def format_ring_header(ring: PolyRing) -> str:
    dom = "Q" if isinstance(ring.domain, Rationals) else f"GF({ring.domain.p})"
    chunks = []
    i = 0
    names = ring.names
    split = [re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*?)(\d+)", n) for n in names]
    while i < len(names):
        j = i
        if split[i]:
            prefix, start = split[i].group(1), int(split[i].group(2))
            while (
                j + 1 < len(names)
                and split[j + 1]
                and split[j + 1].group(1) == prefix
                and int(split[j + 1].group(2)) == start + (j + 1 - i)
            ):
                j += 1
        if j - i >= 2:
            chunks.append(f"{names[i]}..{names[j]}")
        else:
            chunks.extend(names[i:j + 1])
        i = j + 1
    return f"ring {dom}[{','.join(chunks)}]"


def extend_ring(ring: PolyRing, new_names: Sequence[str], front: bool = True) -> PolyRing:
    """Adjoin fresh variables (at the front by default)."""
    for n in new_names:
        if n in ring._index:
            raise RingError(f"variable {n!r} already present")
    if front:
        return PolyRing(tuple(new_names) + ring.names, ring.domain)
    return PolyRing(ring.names + tuple(new_names), ring.domain)


def fresh_name(ring: PolyRing, stem: str) -> str:
    """A variable name based on ``stem`` that is not already in the ring."""
    if stem not in ring._index:
        return stem
    k = 0
    while f"{stem}{k}" in ring._index:
        k += 1
    return f"{stem}{k}"


def inject(f: Polynomial, target: PolyRing, offset: int) -> Polynomial:
    """Transport f into a larger ring whose variables i+offset match ring's i."""
    return f.map_to(target, {i: i + offset for i in range(f.ring.nvars)})


def project(f: Polynomial, target: PolyRing, offset: int) -> Polynomial:
    """Inverse of inject: drop the first ``offset`` variables (must be unused)."""
    for exps in f.terms:
        if any(exps[:offset]):
            raise RingError("polynomial involves helper variables")
    return f.map_to(target, {i + offset: i for i in range(target.nvars)})
