"""Brute-force skein evaluators for closure invariants.

These are the reference oracles for the test suite: they resolve the closed
diagram of a braid word by recursion on crossing switches and smoothings and
are deliberately independent of the Burau and trace routes.

The recursion walks the closure (components in traversal order) and finds the
first crossing whose first passage runs along the understrand.  Switching
that crossing strictly advances the position of the first such passage (the
underlying projection, and hence the traversal, does not depend on crossing
signs), and smoothing deletes a letter, so the recursion terminates at
descending diagrams, which are unlinks.  Results are memoized on the exact
word, so sweeps over many words share subproblems.

Cost is exponential in crossing count; calls are capped (default 10
crossings, matching the documented oracle budget).
"""

from __future__ import annotations

from .braid import BraidWord, closure_traversal, permutation
from .polynomial import LaurentPoly1, LaurentPoly2, _k

DEFAULT_CROSSING_CAP = 10

_conway_cache: dict[tuple[int, tuple[int, ...]], dict] = {}
_homfly_cache: dict[tuple[int, tuple[int, ...]], dict] = {}

# delta = (a - 1/a)/z, the value of one extra split unknot component.
_DELTA = {(1, -1): 1, (-1, -1): -1}
_delta_powers: list[dict] = [{(0, 0): 1}]


def clear_caches() -> None:
    _conway_cache.clear()
    _homfly_cache.clear()


def _delta_power(k: int) -> dict:
    while len(_delta_powers) <= k:
        _delta_powers.append(_k.mul2(_delta_powers[-1], _DELTA))
    return _delta_powers[k]


def _first_bad_crossing(b: BraidWord) -> tuple[int | None, int]:
    """Index of the first crossing first met on its understrand, plus the
    component count of the closure."""
    components = closure_traversal(b)
    met: set[int] = set()
    bad = None
    for passages in components:
        for pas in passages:
            if pas.crossing in met:
                continue
            met.add(pas.crossing)
            if not pas.over:
                bad = pas.crossing
                break
        if bad is not None:
            break
    return bad, len(components)


def _cyclic_free_reduce(letters: tuple[int, ...]) -> tuple[int, ...]:
    """Cancel adjacent inverse pairs, cyclically; preserves the closure."""
    word = list(letters)
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(word):
            if word[i] == -word[i + 1]:
                del word[i : i + 2]
                changed = True
                i = max(i - 1, 0)
            else:
                i += 1
        if len(word) >= 2 and word[0] == -word[-1]:
            word = word[1:-1]
            changed = True
    return tuple(word)


def _conway_raw(strands: int, letters: tuple[int, ...]) -> dict:
    letters = _cyclic_free_reduce(letters)
    key = (strands, letters)
    hit = _conway_cache.get(key)
    if hit is not None:
        return hit
    b = BraidWord(strands, letters)
    bad, ncomp = _first_bad_crossing(b)
    if bad is None:
        out = {0: 1} if ncomp == 1 else {}
    else:
        e = letters[bad]
        switched = letters[:bad] + (-e,) + letters[bad + 1 :]
        smoothed = letters[:bad] + letters[bad + 1 :]
        p_switch = _conway_raw(strands, switched)
        p_smooth = _conway_raw(strands, smoothed)
        out = dict(p_switch)
        # nabla(L+) - nabla(L-) = z * nabla(L0)
        _k.iadd1(out, p_smooth, 1, 1 if e > 0 else -1)
    _conway_cache[key] = out
    return out


def _homfly_raw(strands: int, letters: tuple[int, ...]) -> dict:
    letters = _cyclic_free_reduce(letters)
    key = (strands, letters)
    hit = _homfly_cache.get(key)
    if hit is not None:
        return hit
    b = BraidWord(strands, letters)
    bad, ncomp = _first_bad_crossing(b)
    if bad is None:
        out = dict(_delta_power(ncomp - 1))
    else:
        e = letters[bad]
        switched = letters[:bad] + (-e,) + letters[bad + 1 :]
        smoothed = letters[:bad] + letters[bad + 1 :]
        p_switch = _homfly_raw(strands, switched)
        p_smooth = _homfly_raw(strands, smoothed)
        out = {}
        # a*P(L+) - P(L-)/a = z*P(L0), solved for the strand we hold.
        if e > 0:
            _k.iadd2(out, p_switch, -2, 0, 1)
            _k.iadd2(out, p_smooth, -1, 1, 1)
        else:
            _k.iadd2(out, p_switch, 2, 0, 1)
            _k.iadd2(out, p_smooth, 1, 1, -1)
    _homfly_cache[key] = out
    return out


def _check_cap(b: BraidWord, cap: int) -> None:
    if b.letter_count > cap:
        raise ValueError(
            f"oracle is capped at {cap} crossings, got {b.letter_count}"
        )


def conway_oracle(b: BraidWord, cap: int = DEFAULT_CROSSING_CAP) -> LaurentPoly1:
    """Conway polynomial of the closure, by skein recursion in ``z``."""
    _check_cap(b, cap)
    return LaurentPoly1(_conway_raw(b.strands, b.letters), var="z")


def homfly_oracle(b: BraidWord, cap: int = DEFAULT_CROSSING_CAP) -> LaurentPoly2:
    """Skein polynomial of the closure, convention
    ``a*P(L+) - a**-1*P(L-) = z*P(L0)`` with P(unknot) = 1."""
    _check_cap(b, cap)
    return LaurentPoly2(_homfly_raw(b.strands, b.letters), vars=("a", "z"))


def alexander_from_conway(nabla: LaurentPoly1) -> LaurentPoly1:
    """Symmetric Alexander polynomial of a knot from its Conway polynomial,
    via the standard substitution z**2 = t - 2 + t**-1."""
    if any(e % 2 for e in nabla.terms()):
        raise ValueError("Conway polynomial of a knot must have even exponents")
    block = LaurentPoly1({1: 1, 0: -2, -1: 1}, var="t")
    out = LaurentPoly1.zero("t")
    for e, c in nabla.terms().items():
        out = out + block ** (e // 2) * c
    return out


def closure_component_count(b: BraidWord) -> int:
    """Number of components of the braid closure."""
    return len(permutation(b).cycles())
