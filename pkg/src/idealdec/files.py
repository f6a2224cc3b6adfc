"""Generator files: a ring header line, then one polynomial per line.

Blank lines and ``#`` comments are allowed anywhere; everything is UTF-8
with LF line endings.  Example::

    ring Q[x,y,z]
    # twisted cubic
    y - x^2
    z - x^3
"""

from __future__ import annotations

import hashlib
from typing import Iterable, List, Optional, Sequence, Tuple

from .ideals import Ideal
from .rings import (
    ParseError,
    Polynomial,
    PolyRing,
    format_poly,
    format_ring_header,
    parse_ring_header,
)


class FileFormatError(ValueError):
    pass


def _strip(line: str) -> str:
    hash_pos = line.find("#")
    if hash_pos >= 0:
        line = line[:hash_pos]
    return line.strip()


def parse_generator_lines(lines: Iterable[str]) -> Tuple[PolyRing, List[Polynomial]]:
    ring: Optional[PolyRing] = None
    polys: List[Polynomial] = []
    for lineno, raw in enumerate(lines, start=1):
        text = _strip(raw)
        if not text:
            continue
        try:
            if ring is None:
                ring = parse_ring_header(text)
            else:
                polys.append(ring.parse(text))
        except (ParseError, ValueError) as ex:
            raise FileFormatError(f"line {lineno}: {ex}") from ex
    if ring is None:
        raise FileFormatError("no ring header line found")
    return ring, polys


def read_generators(path: str) -> Tuple[PolyRing, List[Polynomial]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_generator_lines(fh)


def read_ideal(path: str) -> Ideal:
    ring, polys = read_generators(path)
    return Ideal(ring, polys)


def generator_lines(
    ring: PolyRing, polys: Sequence[Polynomial], comments: Sequence[str] = ()
) -> List[str]:
    out = [f"# {c}" for c in comments]
    out.append(format_ring_header(ring))
    out.extend(format_poly(p) for p in polys)
    return out


def write_generators(
    path: str,
    ring: PolyRing,
    polys: Sequence[Polynomial],
    comments: Sequence[str] = (),
) -> None:
    text = "\n".join(generator_lines(ring, polys, comments)) + "\n"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def sha256_of_file(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()
