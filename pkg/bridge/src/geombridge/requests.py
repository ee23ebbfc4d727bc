"""Bridge request objects: what to analyze and which fields to fill."""

from __future__ import annotations

from dataclasses import dataclass, field

ALL_COMPUTATIONS = frozenset(
    {"hyperbolic", "symmetry_group", "cusp_shape", "shortest_geodesic"}
)


@dataclass(frozen=True)
class BridgeRequest:
    """One subject to analyze: exactly one of census_name / pd_code."""

    subject: str
    census_name: str | None = None
    pd_code: tuple[tuple[int, int, int, int], ...] | None = None
    computations: frozenset[str] = field(default_factory=lambda: ALL_COMPUTATIONS)
    cusp_index: int = 0

    def __post_init__(self):
        if (self.census_name is None) == (self.pd_code is None):
            raise ValueError(
                f"request {self.subject!r}: exactly one of census_name and "
                "pd_code must be given"
            )
        unknown = set(self.computations) - ALL_COMPUTATIONS
        if unknown:
            raise ValueError(f"request {self.subject!r}: unknown computations {sorted(unknown)}")
        if self.pd_code is not None:
            object.__setattr__(
                self, "pd_code", tuple(tuple(int(x) for x in quad) for quad in self.pd_code)
            )
        object.__setattr__(self, "computations", frozenset(self.computations))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BridgeRequest":
        pd = obj.get("pd_code")
        if isinstance(pd, dict):  # the primary's PD JSON form {"crossings": [...]}
            pd = pd["crossings"]
        return cls(
            subject=obj["subject"],
            census_name=obj.get("census_name"),
            pd_code=None if pd is None else tuple(tuple(q) for q in pd),
            computations=frozenset(obj.get("computations", ALL_COMPUTATIONS)),
            cusp_index=int(obj.get("cusp_index", 0)),
        )

    def to_json_obj(self) -> dict:
        return {
            "subject": self.subject,
            "census_name": self.census_name,
            "pd_code": None if self.pd_code is None else {"crossings": [list(q) for q in self.pd_code]},
            "computations": sorted(self.computations),
            "cusp_index": self.cusp_index,
        }
