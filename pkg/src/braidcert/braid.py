"""Braid words, the twisted knot family, and closure bookkeeping.

A braid word on ``s`` strands is a sequence of nonzero integers: the letter
``i > 0`` is the standard positive generator crossing strand position ``i``
over position ``i + 1`` (both oriented downward), and ``-i`` is its inverse.
Strand positions are numbered 1..s from the left; the closure joins the
bottom of each position to its top.

Conventions fixed here and relied on elsewhere:

* permutations compose left to right, in word order (only cycle structure is
  consumed downstream, which is convention independent);
* planar-diagram tuples are ``(a, b, c, d)`` counterclockwise from the
  incoming understrand, with edges numbered consecutively along each closure
  component.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group on ``strands`` strands."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for e in self.letters:
            if not isinstance(e, int) or e == 0:
                raise ValueError(f"letters must be nonzero integers, got {e!r}")
            if abs(e) > self.strands - 1:
                raise ValueError(
                    f"letter {e} out of range for {self.strands} strands"
                )

    @property
    def letter_count(self) -> int:
        return len(self.letters)

    @property
    def exponent_sum(self) -> int:
        """Sum of the signs of the letters (the word's writhe)."""
        return sum(1 if e > 0 else -1 for e in self.letters)

    @property
    def is_positive(self) -> bool:
        return all(e > 0 for e in self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def concat(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-e for e in reversed(self.letters)))

    def conjugate_by(self, w: "BraidWord") -> "BraidWord":
        """w * self * w**-1."""
        return w.concat(self).concat(w.inverse())

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.letters)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..size}; ``images[k]`` is the image of k+1."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(tuple(range(1, size + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Left-to-right composition: apply self first, then other."""
        if other.size != self.size:
            raise ValueError("size mismatch")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles (including fixed points), each starting at its least element."""
        seen = [False] * self.size
        out = []
        for start in range(1, self.size + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            x = self(start)
            while x != start:
                cyc.append(x)
                seen[x - 1] = True
                x = self(x)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    @property
    def is_single_cycle(self) -> bool:
        return self.cycle_type() == (self.size,)


@dataclass(frozen=True)
class PDCode:
    """Planar-diagram code: 4-tuples of edge labels, one per crossing."""

    crossings: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "crossings", tuple(tuple(x) for x in self.crossings)
        )

    def edge_multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for quad in self.crossings:
            for e in quad:
                out[e] = out.get(e, 0) + 1
        return out

    def to_json_obj(self) -> dict:
        return {"crossings": [list(q) for q in self.crossings]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PDCode":
        return cls(tuple(tuple(q) for q in obj["crossings"]))


# -- parsing and the knot family ------------------------------------------

_TOKEN_RE = re.compile(r"\(|\)\^(-?\d+)|,|-?\d+|\s+")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse a comma-separated braid word with ``(...)^k`` repetition groups.

    Example: ``"(1,2,3)^4,2,1"`` expands the parenthesized block four times.
    The strand count defaults to 1 + the largest absolute letter.
    """
    pos = 0
    text = text.strip()

    def parse_group(depth: int) -> list[int]:
        nonlocal pos
        letters: list[int] = []
        expect_item = True
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m:
                raise ValueError(f"malformed braid word at {text[pos:]!r}")
            tok = m.group(0)
            if tok.isspace():
                pos = m.end()
                continue
            if tok == ",":
                if expect_item:
                    raise ValueError("malformed braid word: empty item")
                pos = m.end()
                expect_item = True
                continue
            if tok.startswith(")"):
                if depth == 0:
                    raise ValueError("malformed braid word: unmatched ')'")
                if not letters:
                    raise ValueError("malformed braid word: empty group")
                if expect_item:
                    raise ValueError("malformed braid word: trailing comma")
                reps = int(m.group(1))
                if reps < 0:
                    raise ValueError(f"negative repetition count {reps}")
                pos = m.end()
                return letters * reps
            if not expect_item:
                raise ValueError(f"malformed braid word: missing comma before {tok!r}")
            if tok == "(":
                pos = m.end()
                letters.extend(parse_group(depth + 1))
                expect_item = False
                continue
            e = int(tok)
            if e == 0:
                raise ValueError("generator index 0 is not a braid letter")
            letters.append(e)
            pos = m.end()
            expect_item = False
        if depth != 0:
            raise ValueError("malformed braid word: unclosed '('")
        if expect_item and letters:
            raise ValueError("malformed braid word: trailing comma")
        return letters

    letters = parse_group(0) if text else []
    if strands is None:
        strands = 1 + max((abs(e) for e in letters), default=0)
    return BraidWord(strands, tuple(letters))


#: Letters of the twisted family before the variable twist block.
_FAMILY_STEM = (1, 2, 3) * 4 + (2, 1, 3, 2, 2, 1, 1, 2, 1, 1, 1, 1, 1)


def family_braid(n: int) -> BraidWord:
    """The 4-strand positive word with 25 + 2n letters defining the family.

    The word is a positive full twist on four strands, a fixed 13-letter
    positive block, then ``2n`` copies of generator 2.  ``n = 0`` gives the
    base knot of the twist family.
    """
    if n < 0:
        raise ValueError(f"family parameter must be >= 0, got {n}")
    return BraidWord(4, _FAMILY_STEM + (2,) * (2 * n))


def permutation(b: BraidWord) -> Permutation:
    """Underlying permutation: transpositions (|e|, |e|+1) applied left to right."""
    images = list(range(1, b.strands + 1))
    for e in b.letters:
        i = abs(e) - 1
        images[i], images[i + 1] = images[i + 1], images[i]
    # images currently holds, at position p, the strand that ends there; we
    # want top position -> bottom position, i.e. the inverse bookkeeping.
    out = [0] * b.strands
    for bottom, top in enumerate(images, start=1):
        out[top - 1] = bottom
    return Permutation(tuple(out))


def is_knot_closure(b: BraidWord) -> bool:
    """True iff the closure has one component (the permutation is an s-cycle)."""
    return permutation(b).is_single_cycle


def bennequin_genus(b: BraidWord) -> int:
    """Seifert genus (c - s + 1) / 2 of the closure of a positive braid knot."""
    if not b.is_positive:
        raise ValueError("genus formula requires a positive braid word")
    if not is_knot_closure(b):
        raise ValueError("closure is not a knot")
    c, s = b.letter_count, b.strands
    if (c - s + 1) % 2 != 0:
        raise RuntimeError("parity violation: inconsistent with the knot check")
    return (c - s + 1) // 2


def is_twist_positive(b: BraidWord) -> bool:
    """True iff the word is positive and some cyclic rotation starts with a
    literal full twist ``(1, 2, ..., s-1)`` repeated ``s`` times."""
    if not b.is_positive:
        return False
    s = b.strands
    pattern = tuple(range(1, s)) * s
    if not pattern:
        return True
    if len(b.letters) < len(pattern):
        return False
    doubled = b.letters + b.letters
    return any(
        doubled[r : r + len(pattern)] == pattern for r in range(len(b.letters))
    )


# -- closure traversal and planar diagrams --------------------------------


@dataclass(frozen=True)
class Passage:
    """One pass of the closure traversal through a crossing."""

    crossing: int  # index into the word
    enter_left: bool  # entered at the left (lower) strand position
    over: bool  # this pass runs along the overstrand


def _walk_strand(letters: tuple[int, ...], start: int) -> tuple[list[Passage], int]:
    """Walk one top-to-bottom pass from top position ``start``."""
    passages = []
    pos = start
    for j, e in enumerate(letters):
        i = abs(e)
        if pos == i:
            passages.append(Passage(j, True, e > 0))
            pos = i + 1
        elif pos == i + 1:
            passages.append(Passage(j, False, e < 0))
            pos = i
    return passages, pos


def closure_traversal(b: BraidWord) -> list[list[Passage]]:
    """Passages of each closure component, components ordered by least top
    position, each traversed from the top of that position."""
    through: dict[int, tuple[list[Passage], int]] = {}
    for p in range(1, b.strands + 1):
        through[p] = _walk_strand(b.letters, p)
    seen = set()
    components = []
    for start in range(1, b.strands + 1):
        if start in seen:
            continue
        passages: list[Passage] = []
        p = start
        while True:
            seen.add(p)
            strand_passages, p = through[p]
            passages.extend(strand_passages)
            if p == start:
                break
        components.append(passages)
    return components


def closure_pd_code(b: BraidWord) -> PDCode:
    """Planar-diagram code of the braid closure.

    Edges are numbered consecutively along each component in traversal order;
    every crossing contributes one 4-tuple counterclockwise from its incoming
    understrand.
    """
    ports: dict[int, dict[str, int]] = {j: {} for j in range(len(b.letters))}
    next_label = 1
    for passages in closure_traversal(b):
        m = len(passages)
        labels = list(range(next_label, next_label + m))
        next_label += m
        for k, pas in enumerate(passages):
            edge_in = labels[k]
            edge_out = labels[(k + 1) % m] if m else 0
            if pas.enter_left:
                ports[pas.crossing]["NW"] = edge_in
                ports[pas.crossing]["SE"] = edge_out
            else:
                ports[pas.crossing]["NE"] = edge_in
                ports[pas.crossing]["SW"] = edge_out
    quads = []
    for j, e in enumerate(b.letters):
        p = ports[j]
        if e > 0:
            quads.append((p["NE"], p["NW"], p["SW"], p["SE"]))
        else:
            quads.append((p["NW"], p["SW"], p["SE"], p["NE"]))
    return PDCode(tuple(quads))
