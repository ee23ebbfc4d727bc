"""Hyperbolic-geometry engine interface.

The bridge only transcribes: an engine session exposes the five queries the
fixture schema needs, and ``SnapPyEngine`` adapts the snappy package when it
is installed.  Engines are treated as non-reentrant; sessions are used
sequentially.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol


class EngineUnavailable(RuntimeError):
    """No usable geometry engine in this environment."""


class EngineComputationError(RuntimeError):
    """The engine could not complete a requested computation."""


class EngineSession(Protocol):
    def is_hyperbolic(self) -> bool: ...

    def symmetry_group_order(self, precision: int) -> int: ...

    def cusp_shape(self, cusp_index: int) -> complex: ...

    def shortest_geodesic_lower_bound(self) -> float: ...

    def identify(self) -> str | None: ...


class Engine(Protocol):
    name: str
    version: str

    def open(
        self, census_name: str | None = None, pd_code: list | None = None
    ) -> EngineSession: ...


#: Precisions (decimal digits) tried, in order, for symmetry groups.
SYMMETRY_PRECISIONS = (15, 30, 60)


@dataclass
class SnapPySession:
    manifold: object

    def is_hyperbolic(self) -> bool:
        solution = self.manifold.solution_type()
        return solution == "all tetrahedra positively oriented"

    def symmetry_group_order(self, precision: int) -> int:
        m = self.manifold
        try:
            if precision > 15:
                m = m.high_precision()
            group = m.symmetry_group(of_link=False)
            return int(group.order())
        except Exception as exc:
            raise EngineComputationError(f"symmetry group failed: {exc}") from exc

    def cusp_shape(self, cusp_index: int) -> complex:
        info = self.manifold.cusp_info(cusp_index)
        return complex(info["modulus"])

    def shortest_geodesic_lower_bound(self) -> float:
        try:
            spectrum = self.manifold.length_spectrum(cutoff=1.0, full_rigor=True)
        except Exception as exc:
            raise EngineComputationError(f"length spectrum failed: {exc}") from exc
        if spectrum:
            return float(min(line.length.real for line in spectrum))
        return 1.0  # empty spectrum below the cutoff: 1.0 is a valid lower bound

    def identify(self) -> str | None:
        try:
            matches = self.manifold.identify()
        except Exception:
            return None
        return str(matches[0]) if matches else None


class SnapPyEngine:
    """Adapter around the snappy package (imported lazily)."""

    def __init__(self):
        try:
            import snappy
        except ImportError as exc:
            raise EngineUnavailable(
                "the snappy package is not installed; install it or pass a "
                "different engine"
            ) from exc
        self._snappy = snappy
        self.name = "SnapPy"
        self.version = getattr(snappy, "__version__", "unknown")

    def open(self, census_name=None, pd_code=None) -> SnapPySession:
        if census_name is not None:
            return SnapPySession(self._snappy.Manifold(census_name))
        link = self._snappy.Link([tuple(q) for q in pd_code])
        return SnapPySession(link.exterior())


def default_engine() -> Engine:
    return SnapPyEngine()
