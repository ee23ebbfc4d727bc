"""Cusp-shape slope lengths and the normalized-length threshold search.

A cusp cross-section is a Euclidean torus similar to C / (Z + z*Z) with
Im(z) > 0: the meridian translation is normalized to 1 and the longitude to
z.  The slope p/q then translates by p + q*z, and its normalized length
divides by the square root of the cusp area Im(z).  Lengths are IEEE doubles;
threshold comparisons use plain >=, and the shape input is taken as exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class CuspShape:
    """Similarity class of a cusp torus in meridian-longitude basis."""

    z: complex

    def __post_init__(self):
        if not self.z.imag > 0:
            raise ValueError(f"cusp shape needs Im(z) > 0, got {self.z}")

    @classmethod
    def parse(cls, text: str) -> "CuspShape":
        """Parse the CLI form "re,im"."""
        try:
            re_s, im_s = text.split(",")
            return cls(complex(float(re_s), float(im_s)))
        except ValueError as exc:
            raise ValueError(f"expected a shape as 're,im', got {text!r}") from exc


def _check_slope(p: int, q: int) -> None:
    if (p, q) == (0, 0):
        raise ValueError("slope 0/0 is not defined")
    if math.gcd(abs(p), abs(q)) != 1:
        raise ValueError(f"slope {p}/{q} is not in lowest terms")


def slope_length(shape: CuspShape, p: int, q: int) -> float:
    """Translation length |p + q*z| of the slope p/q on the normalized cusp."""
    _check_slope(p, q)
    return abs(p + q * shape.z)


def normalized_length(shape: CuspShape, p: int, q: int) -> float:
    """slope_length divided by the square root of the cusp area Im(z)."""
    return slope_length(shape, p, q) / math.sqrt(shape.z.imag)


def normalized_length_lattice(m: complex, l: complex, p: int, q: int) -> float:
    """Normalized length for a general lattice basis (meridian m, longitude l);
    agrees with ``normalized_length`` for (1, z) and is scale invariant."""
    _check_slope(p, q)
    area = abs((m.conjugate() * l).imag)
    if area == 0:
        raise ValueError("degenerate lattice")
    return abs(p * m + q * l) / math.sqrt(area)


def twist_normalized_length(shape: CuspShape, n: int) -> float:
    """Normalized length of the slope -1/n, i.e. |n*z - 1| / sqrt(Im z)."""
    return normalized_length(shape, -1, n)


def min_twist_meeting_threshold(shape: CuspShape, threshold: float) -> int:
    """Smallest integer n >= 1 whose -1/n slope has normalized length at
    least ``threshold``.

    |n*z - 1| is strictly increasing once n exceeds Re(z)/|z|**2, and
    |n*z - 1| >= n*Im(z) gives the a-priori bound used to cap the scan.
    """
    if not threshold > 0:
        raise ValueError("threshold must be positive")
    cap = max(1, math.ceil(threshold / math.sqrt(shape.z.imag)) + 1)
    for n in range(1, cap + 1):
        if twist_normalized_length(shape, n) >= threshold:
            return n
    raise AssertionError("unreachable: the scan cap bounds the answer")
