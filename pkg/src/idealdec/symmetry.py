"""Variable-permutation symmetries of a polynomial ring.

A SymmetryAction is a bijection of the variable positions; it acts on
polynomials by substitution x_i -> x_sigma(i) and on ideals generator-wise.
Actions compose, invert, parse from and print in cycle notation over the
variable names, and can be closed into a (small) group by breadth-first
multiplication.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from .rings import Polynomial, PolyRing, RingError


class SymmetryError(ValueError):
    pass


@dataclass(frozen=True)
class SymmetryAction:
    """A permutation of variable positions: position i maps to image[i]."""

    image: Tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        n = len(self.image)
        if sorted(self.image) != list(range(n)):
            raise SymmetryError("image is not a permutation of the positions")

    @classmethod
    def identity(cls, nvars: int) -> "SymmetryAction":
        return cls(tuple(range(nvars)), "id")

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def compose(self, other: "SymmetryAction") -> "SymmetryAction":
        """self after other: (self * other)(i) = self(other(i))."""
        if len(self.image) != len(other.image):
            raise SymmetryError("mismatched permutation sizes")
        return SymmetryAction(
            tuple(self.image[other.image[i]] for i in range(len(self.image)))
        )

    def inverse(self) -> "SymmetryAction":
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image):
            inv[j] = i
        return SymmetryAction(tuple(inv), f"{self.label}^-1" if self.label else "")

    def __call__(self, f: Polynomial) -> Polynomial:
        if f.ring.nvars != len(self.image):
            raise SymmetryError("permutation size does not match the ring")
        return f.permute_vars(self.image)

    def cycles(self, names: Sequence[str]) -> str:
        """Cycle notation over variable names; "()" for the identity."""
        seen = set()
        parts = []
        for start in range(len(self.image)):
            if start in seen or self.image[start] == start:
                seen.add(start)
                continue
            cyc = [start]
            seen.add(start)
            cur = self.image[start]
            while cur != start:
                cyc.append(cur)
                seen.add(cur)
                cur = self.image[cur]
            parts.append("(" + " ".join(names[i] for i in cyc) + ")")
        return "".join(parts) if parts else "()"

    @classmethod
    def from_cycles(
        cls, ring: PolyRing, text: str, label: str = ""
    ) -> "SymmetryAction":
        """Parse cycle notation over variable names, e.g. "(x1 x4)(x2 x5)"."""
        text = text.strip()
        image = list(range(ring.nvars))
        if text in ("", "()"):
            return cls(tuple(image), label or "id")
        chunks = re.findall(r"\(([^()]*)\)", text)
        consumed = re.sub(r"\([^()]*\)", "", text).strip()
        if not chunks or consumed:
            raise SymmetryError(f"malformed cycle notation {text!r}")
        for chunk in chunks:
            entries = [t for t in re.split(r"[,\s]+", chunk.strip()) if t]
            if len(entries) < 2:
                raise SymmetryError(f"cycle ({chunk}) is too short")
            try:
                idxs = [ring.index(e) for e in entries]
            except RingError as ex:
                raise SymmetryError(str(ex)) from None
            if len(set(idxs)) != len(idxs):
                raise SymmetryError(f"repeated entry in cycle ({chunk})")
            for a, b, name in zip(idxs, idxs[1:] + idxs[:1], entries):
                if image[a] != a:
                    raise SymmetryError(f"variable {name} moved twice")
                image[a] = b
        return cls(tuple(image), label)


def generate_group(
    generators: Iterable[SymmetryAction], cap: int = 100000
) -> List[SymmetryAction]:
    """Close a generator list under composition (breadth-first).

    Returns the full group including the identity, in discovery order;
    raises SymmetryError if the group exceeds ``cap`` elements.
    """
    gens = list(generators)
    if not gens:
        return []
    n = len(gens[0].image)
    identity = SymmetryAction.identity(n)
    seen = {identity.image: identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s.compose(g)
                if h.image not in seen:
                    if len(seen) >= cap:
                        raise SymmetryError(f"group exceeds cap {cap}")
                    seen[h.image] = h
                    nxt.append(h)
        frontier = nxt
    return list(seen.values())


class UnionFind:
    """Plain union-find over range(n), used for orbit partitions."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def classes(self) -> List[List[int]]:
        buckets = {}
        for i in range(len(self.parent)):
            buckets.setdefault(self.find(i), []).append(i)
        return [sorted(v) for _, v in sorted(buckets.items())]
