"""Monomial orders as sortable keys.

An order maps an exponent tuple to a key; monomial comparison is tuple
comparison of keys.  Three kinds are provided:

* ``lex``       -- key is the exponent tuple itself;
* ``degrevlex`` -- key is (total degree, reversed negated exponents), so
  ties in degree are broken by the *smallest* exponent on the *last*
  variable winning;
* ``block``     -- an ordered list of variable blocks, each carrying its own
  lex/degrevlex inner order; keys are compared block by block, which gives
  the elimination property for the leading blocks.

Orders are immutable and hashable so they can serve as cache keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

LEX = "lex"
DEGREVLEX = "degrevlex"
BLOCK = "block"

_SIMPLE_KINDS = (LEX, DEGREVLEX)


class OrderError(ValueError):
    """Raised for malformed order specifications."""


def _simple_key(kind: str, exps: Sequence[int]):
    if kind == LEX:
        return tuple(exps)
    # degrevlex
    return (sum(exps), tuple(-e for e in reversed(exps)))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on a polynomial ring with a fixed number of variables.

    ``kind`` is "lex", "degrevlex" or "block".  For block orders ``blocks``
    lists (variable-index tuple, inner kind) pairs; the index tuples must
    partition range(nvars) of any ring the order is used with.
    """

    kind: str
    blocks: tuple = field(default=())

    def __post_init__(self):
        if self.kind in _SIMPLE_KINDS:
            if self.blocks:
                raise OrderError(f"{self.kind} order takes no blocks")
            return
        if self.kind != BLOCK:
            raise OrderError(f"unknown order kind {self.kind!r}")
        if not self.blocks:
            raise OrderError("block order needs at least one block")
        seen = set()
        for idxs, inner in self.blocks:
            if inner not in _SIMPLE_KINDS:
                raise OrderError(f"bad inner order {inner!r}")
            if not idxs:
                raise OrderError("empty block")
            for i in idxs:
                if i in seen:
                    raise OrderError(f"variable {i} appears in two blocks")
                seen.add(i)

    def validate(self, nvars: int) -> None:
        """Check the order covers exactly the variables of an nvars ring."""
        if self.kind in _SIMPLE_KINDS:
            return
        covered = {i for idxs, _ in self.blocks for i in idxs}
        if covered != set(range(nvars)):
            raise OrderError(
                f"block order covers {sorted(covered)}, ring has {nvars} variables"
            )

    def key(self, exps: Sequence[int]):
        """Sortable key; greater key means greater monomial."""
        if self.kind == LEX:
            return tuple(exps)
        if self.kind == DEGREVLEX:
            return (sum(exps), tuple(-e for e in reversed(exps)))
        return tuple(
            _simple_key(inner, [exps[i] for i in idxs]) for idxs, inner in self.blocks
        )

    def greater(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.key(a) > self.key(b)

    def describe(self) -> str:
        if self.kind in _SIMPLE_KINDS:
            return self.kind
        parts = []
        for idxs, inner in self.blocks:
            parts.append(f"[{','.join(map(str, idxs))}:{inner}]")
        return "block(" + " > ".join(parts) + ")"


def lex_order() -> MonomialOrder:
    return MonomialOrder(LEX)


def degrevlex_order() -> MonomialOrder:
    return MonomialOrder(DEGREVLEX)


def block_order(blocks: Iterable) -> MonomialOrder:
    """Build a block order from (indices, inner_kind) pairs.

    Blocks listed first dominate: any monomial involving a variable of an
    earlier block exceeds every monomial supported on later blocks only.
    """
    normalized = tuple((tuple(idxs), inner) for idxs, inner in blocks)
    return MonomialOrder(BLOCK, normalized)


def elimination_order(
    front: Sequence[int],
    back: Sequence[int],
    front_kind: str = DEGREVLEX,
    back_kind: str = DEGREVLEX,
) -> MonomialOrder:
    """Block order eliminating ``front``: front block > back block."""
    return block_order([(tuple(front), front_kind), (tuple(back), back_kind)])


def flatten_with_front(order: MonomialOrder, front: Sequence[int], total_nvars: int,
                       shift, front_kind: str = LEX) -> MonomialOrder:
    """Prepend a front elimination block to an existing order.

    ``total_nvars`` is the variable count of the *extended* ring and
    ``shift`` maps an old variable index to its index there.  Used when new
    helper variables (e.g. the t of an intersection) are adjoined and must
    dominate a given working order on the original ring.
    """
    front_block = (tuple(front), front_kind)
    if order.kind in _SIMPLE_KINDS:
        rest = tuple(sorted(set(range(total_nvars)) - set(front)))
        return MonomialOrder(BLOCK, (front_block, (rest, order.kind)))
    shifted = tuple(
        (tuple(shift(i) for i in idxs), inner) for idxs, inner in order.blocks
    )
    return MonomialOrder(BLOCK, (front_block,) + shifted)


def order_from_string(text: str, names: Sequence[str]) -> MonomialOrder:
    """Parse a CLI order spec: "lex", "degrevlex", or "block:x,y|z".

    Block segments are separated by "|"; each segment lists variable names
    separated by commas (for single-character variable names the commas may
    be omitted, e.g. "block:xy|z").  Inner orders are degrevlex.
    """
    text = text.strip()
    if text == LEX:
        return lex_order()
    if text in (DEGREVLEX, "grevlex"):
        return degrevlex_order()
    if not text.startswith("block:"):
        raise OrderError(f"unknown order {text!r}")
    index = {n: i for i, n in enumerate(names)}
    blocks = []
    for segment in text[len("block:"):].split("|"):
        segment = segment.strip()
        if not segment:
            raise OrderError("empty block segment")
        tokens = [t.strip() for t in segment.split(",") if t.strip()]
        idxs = []
        for tok in tokens:
            if tok in index:
                idxs.append(index[tok])
            elif all(ch in index for ch in tok):
                idxs.extend(index[ch] for ch in tok)
            else:
                raise OrderError(f"unknown variable {tok!r} in order spec")
        blocks.append((tuple(idxs), DEGREVLEX))
    order = block_order(blocks)
    order.validate(len(names))
    return order
