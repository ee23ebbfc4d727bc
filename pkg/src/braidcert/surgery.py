"""First homology of rational surgery diagrams and twist-family slope
arithmetic.

A diagram is a list of link components carrying surgery slopes p/q together
with a symmetric, zero-diagonal linking matrix.  After deleting unfilled
(infinity-slope) components, H1 of the surgered manifold is presented by the
square matrix with ``A[i][i] = p_i`` and ``A[i][j] = q_i * lk(i, j)``; its
cokernel is computed by an exact integer Smith normal form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence


@dataclass(frozen=True)
class Slope:
    """A surgery slope p/q in meridian-longitude coordinates.

    Stored with q >= 0 and gcd(|p|, q) = 1; (1, 0) is the unfilled (infinity)
    slope, as in a surgery description that leaves a component open.
    """

    p: int
    q: int

    def __post_init__(self):
        if (self.p, self.q) == (0, 0):
            raise ValueError("slope 0/0 is not defined")
        if self.q < 0:
            raise ValueError("store slopes with q >= 0 (sign lives in p)")
        if self.q == 0 and self.p != 1:
            raise ValueError("the infinite slope is stored as (1, 0)")
        if math.gcd(abs(self.p), self.q) != 1:
            raise ValueError(f"slope {self.p}/{self.q} is not in lowest terms")

    @classmethod
    def of(cls, p: int, q: int = 1) -> "Slope":
        """Build p/q, reducing to lowest terms and normalizing signs."""
        if (p, q) == (0, 0):
            raise ValueError("slope 0/0 is not defined")
        if q == 0:
            return cls(1, 0)
        if q < 0:
            p, q = -p, -q
        g = math.gcd(abs(p), q)
        return cls(p // g, q // g)

    @classmethod
    def infinity(cls) -> "Slope":
        return cls(1, 0)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def is_integral(self) -> bool:
        return self.q == 1

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"

    def to_json_obj(self) -> dict:
        return {"p": self.p, "q": self.q}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Slope":
        return cls.of(int(obj["p"]), int(obj["q"]))


@dataclass(frozen=True)
class SurgeryDiagram:
    """Link components with rational surgery coefficients and linking data."""

    slopes: tuple[Slope, ...]
    linking: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "slopes", tuple(self.slopes))
        object.__setattr__(
            self, "linking", tuple(tuple(row) for row in self.linking)
        )
        n = len(self.slopes)
        if len(self.linking) != n or any(len(row) != n for row in self.linking):
            raise ValueError("linking matrix shape must match component count")
        for i in range(n):
            if self.linking[i][i] != 0:
                raise ValueError("linking matrix must have zero diagonal")
            for j in range(i + 1, n):
                if self.linking[i][j] != self.linking[j][i]:
                    raise ValueError("linking matrix must be symmetric")

    def to_json_obj(self) -> dict:
        return {
            "components": [s.to_json_obj() for s in self.slopes],
            "linking": [list(row) for row in self.linking],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SurgeryDiagram":
        return cls(
            tuple(Slope.from_json_obj(c) for c in obj["components"]),
            tuple(tuple(int(x) for x in row) for row in obj["linking"]),
        )

    def drop_unfilled(self) -> "SurgeryDiagram":
        keep = [i for i, s in enumerate(self.slopes) if not s.is_infinite]
        return SurgeryDiagram(
            tuple(self.slopes[i] for i in keep),
            tuple(tuple(self.linking[i][j] for j in keep) for i in keep),
        )


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group in invariant-factor form.

    ``invariant_factors`` is the divisibility chain d1 | d2 | ..., each
    entry >= 2, followed by one 0 per infinite cyclic factor.
    """

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "invariant_factors", tuple(self.invariant_factors)
        )
        torsion = [d for d in self.invariant_factors if d != 0]
        free = [d for d in self.invariant_factors if d == 0]
        if list(self.invariant_factors) != torsion + free:
            raise ValueError("free factors must come after torsion factors")
        for d in torsion:
            if d < 2:
                raise ValueError(f"invariant factor {d} (must be >= 2 or 0)")
        for a, b in zip(torsion, torsion[1:]):
            if b % a != 0:
                raise ValueError(f"broken divisibility chain: {a} does not divide {b}")

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d == 0)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.rank:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    @property
    def is_finite_cyclic(self) -> bool:
        return self.rank == 0 and len(self.invariant_factors) <= 1

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        parts = [f"Z/{d}" for d in self.invariant_factors if d != 0]
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        return " ⊕ ".join(parts)


# -- Smith normal form ------------------------------------------------------


@dataclass(frozen=True)
class SNFResult:
    """Decomposition A = U @ S @ V with U, V unimodular and S in Smith form."""

    S: tuple[tuple[int, ...], ...]
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SNFResult:
    """Exact integer Smith normal form with tracked unimodular factors.

    Pivots are chosen by least absolute value to curb coefficient growth.
    """
    S = [list(row) for row in matrix]
    rows = len(S)
    cols = len(S[0]) if rows else 0
    U = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    V = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        for r in range(rows):  # U <- U * swap(i, j)
            U[r][i], U[r][j] = U[r][j], U[r][i]

    def swap_cols(i, j):
        for r in range(rows):
            S[r][i], S[r][j] = S[r][j], S[r][i]
        V[i], V[j] = V[j], V[i]  # V <- swap(i, j) * V

    def add_row(src, dst, k):
        """row dst += k * row src; U compensates with col src -= k * col dst."""
        for c in range(cols):
            S[dst][c] += k * S[src][c]
        for r in range(rows):
            U[r][src] -= k * U[r][dst]

    def add_col(src, dst, k):
        """col dst += k * col src; V compensates with row src -= k * row dst."""
        for r in range(rows):
            S[r][dst] += k * S[r][src]
        for c in range(cols):
            V[src][c] -= k * V[dst][c]

    def negate_row(i):
        for c in range(cols):
            S[i][c] = -S[i][c]
        for r in range(rows):
            U[r][i] = -U[r][i]

    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = S[i][j]
                if v and (best is None or abs(v) < best):
                    best, pivot = abs(v), (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)

        while True:
            dirty = False
            for i in range(t + 1, rows):
                if S[i][t]:
                    k = S[i][t] // S[t][t]
                    if k:
                        add_row(t, i, -k)
                    if S[i][t]:  # nonzero remainder becomes the smaller pivot
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if S[t][j]:
                    k = S[t][j] // S[t][t]
                    if k:
                        add_col(t, j, -k)
                    if S[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break

        # enforce that the pivot divides every remaining entry
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if S[i][j] % S[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, t, 1)
            continue

        if S[t][t] < 0:
            negate_row(t)
        t += 1
        if t >= min(rows, cols):
            break

    return SNFResult(
        tuple(tuple(r) for r in S),
        tuple(tuple(r) for r in U),
        tuple(tuple(r) for r in V),
    )


def int_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# -- surgery operations ------------------------------------------------------


def presentation_matrix(d: SurgeryDiagram) -> list[list[int]]:
    """Presentation of H1: diagonal p_i, off-diagonal q_i * lk(i, j).

    Unfilled components must be deleted first (see ``first_homology``).
    """
    if any(s.is_infinite for s in d.slopes):
        raise ValueError("diagram has an unfilled (infinite-slope) component")
    n = len(d.slopes)
    return [
        [
            d.slopes[i].p if i == j else d.slopes[i].q * d.linking[i][j]
            for j in range(n)
        ]
        for i in range(n)
    ]


def first_homology(d: SurgeryDiagram) -> AbelianGroup:
    """Invariant factors of H1 of the surgered manifold."""
    d = d.drop_unfilled()
    if not d.slopes:
        return AbelianGroup(())
    snf = smith_normal_form(presentation_matrix(d))
    n = len(d.slopes)
    diag = [snf.S[i][i] for i in range(n)]
    torsion = [x for x in diag if x not in (0, 1)]
    free = [0] * sum(1 for x in diag if x == 0)
    return AbelianGroup(tuple(torsion + free))


def twist_image_slope(r: Slope, w: int, n: int) -> Slope:
    """Slope on the twisted knot matching slope r before n twists were added
    along a curve of linking number w: (p + w**2 * n * q) / q."""
    if r.is_infinite:
        raise ValueError("image slope is not defined for the unfilled slope")
    return Slope.of(r.p + w * w * n * r.q, r.q)


def homological_longitude_slope(r: Slope, w: int) -> Slope:
    """Slope of the homological longitude of the twisting curve inside the
    r-surgered manifold: w**2 * q / p, in lowest terms with its sign."""
    if r.p == 0:
        raise ValueError("longitude slope undefined when the numerator is 0")
    return Slope.of(w * w * r.q if r.p > 0 else -w * w * r.q, abs(r.p))


def twist_slopes_covered(r: Slope, w: int) -> Callable[[int], bool]:
    """Predicate selecting the twist parameters whose -1/n filling slope lies
    in the interval of slopes pinned down by the two assumed fillings.

    Requires r > 0 and w != 0 so the homological longitude slope is positive;
    the covered set is then exactly the integers n >= 0.
    """
    if r.is_infinite or r.p <= 0:
        raise ValueError("hypothesis violation: need a positive filling slope")
    if w == 0:
        raise ValueError("hypothesis violation: need nonzero linking number")

    def covered(n: int) -> bool:
        return n >= 0

    return covered
