"""Planar diagram of a braid closure together with the twisting circle.

The circle sits below the last braid letter and encircles strand positions 2
and 3 (the pair whose twisting inserts the generator-2 blocks): its upper arc
runs over both strands, its lower arc under both, so it bounds a disk meeting
the closure in two points and links it twice.  Handedness cannot be validated
without a geometry engine; the diagram is the input handed to one.

Edge labels are consecutive along each component (closure components first,
the circle last); tuples are counterclockwise from the incoming understrand,
matching the primary package's convention.
"""

from __future__ import annotations

ENCIRCLED = (2, 3)  # strand positions the twisting circle surrounds


def _validate_letters(letters, strands: int) -> None:
    for e in letters:
        if e == 0 or abs(e) > strands - 1:
            raise ValueError(f"letter {e} out of range for {strands} strands")


def family_link_pd(letters, strands: int = 4) -> list[tuple[int, int, int, int]]:
    """PD code of (closure of the word) union the twisting circle."""
    letters = tuple(int(e) for e in letters)
    _validate_letters(letters, strands)
    if strands < max(ENCIRCLED) + 1:
        raise ValueError(f"need at least {max(ENCIRCLED) + 1} strands")

    # crossing ids: word positions, then the circle's four crossings
    ctop = {p: ("ctop", p) for p in ENCIRCLED}
    cbot = {p: ("cbot", p) for p in ENCIRCLED}
    ports: dict[object, dict[str, int]] = {}

    def set_port(crossing, port: str, label: int) -> None:
        ports.setdefault(crossing, {})[port] = label

    def walk_strand(start: int):
        """Passages of one top-to-bottom pass: (crossing, in_port, out_port)."""
        passages = []
        pos = start
        for j, e in enumerate(letters):
            i = abs(e)
            if pos == i:
                passages.append((j, "NW", "SE"))
                pos = i + 1
            elif pos == i + 1:
                passages.append((j, "NE", "SW"))
                pos = i
        if pos in ENCIRCLED:
            passages.append((ctop[pos], "N", "S"))
            passages.append((cbot[pos], "N", "S"))
        return passages, pos

    walks = {p: walk_strand(p) for p in range(1, strands + 1)}

    next_label = 1
    seen: set[int] = set()
    for start in range(1, strands + 1):
        if start in seen:
            continue
        passages = []
        p = start
        while True:
            seen.add(p)
            strand_passages, p = walks[p]
            passages.extend(strand_passages)
            if p == start:
                break
        m = len(passages)
        labels = list(range(next_label, next_label + m))
        next_label += m
        for k, (crossing, in_port, out_port) in enumerate(passages):
            set_port(crossing, in_port, labels[k])
            set_port(crossing, out_port, labels[(k + 1) % m] if m else 0)

    # the circle: along the top arc rightward, back along the bottom leftward
    circle = [
        (ctop[ENCIRCLED[0]], "W", "E"),
        (ctop[ENCIRCLED[1]], "W", "E"),
        (cbot[ENCIRCLED[1]], "E", "W"),
        (cbot[ENCIRCLED[0]], "E", "W"),
    ]
    labels = list(range(next_label, next_label + 4))
    for k, (crossing, in_port, out_port) in enumerate(circle):
        set_port(crossing, in_port, labels[k])
        set_port(crossing, out_port, labels[(k + 1) % 4])

    quads: list[tuple[int, int, int, int]] = []
    for j, e in enumerate(letters):
        q = ports[j]
        if e > 0:
            quads.append((q["NE"], q["NW"], q["SW"], q["SE"]))
        else:
            quads.append((q["NW"], q["SW"], q["SE"], q["NE"]))
    for p in ENCIRCLED:  # upper arc: circle over strand
        q = ports[ctop[p]]
        quads.append((q["N"], q["W"], q["S"], q["E"]))
    for p in ENCIRCLED:  # lower arc: strand over circle
        q = ports[cbot[p]]
        quads.append((q["E"], q["N"], q["W"], q["S"]))
    return quads
