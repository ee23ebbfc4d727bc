"""Per-parameter evidence bundles for the twisted braid family.

A certificate gathers, for one twist parameter n: facts computed here
(genus, Alexander form checks, the braid-index bound, surgery homology,
slope arithmetic, normalized cusp lengths), externally computed geometry
ingested as fixtures, and an explicit ledger of facts taken on faith.  Every
claim carries exactly one status:

* VERIFIED    - computed in this process from the braid word alone
                (possibly on top of listed assumptions and fixture inputs);
* CONSISTENT  - computed here and agreeing with a strictly stronger claim
                that is not re-proved (e.g. homology matching a lens space);
* FIXTURE     - read from an ingested geometry fixture;
* ASSUMED     - a background fact taken on faith (n = 0 only);
* NOT-APPLICABLE - the claim is not asserted for this n (n = 0 asymmetry);
* UNVERIFIED  - a required fixture is missing; never fails the build.

A computed contradiction (e.g. the Alexander form check failing) raises
``CertificateError`` instead of producing a false certificate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Mapping

from .alexander import alexander_poly, genus_from_alexander, lspace_form_check
from .braid import bennequin_genus, family_braid, is_knot_closure, is_twist_positive
from .cusp import CuspShape, min_twist_meeting_threshold, twist_normalized_length
from .homfly import braid_index_bounds
from .surgery import (
    Slope,
    SurgeryDiagram,
    first_homology,
    twist_image_slope,
    twist_slopes_covered,
)

SCHEMA_VERSION = "1"

#: Filling slope on the base knot and linking number of the twisting curve.
BASE_SLOPE = Slope(29, 1)
TWIST_LINKING = 2

LINK_SUBJECT = "K0_link"

VERIFIED = "VERIFIED"
CONSISTENT = "CONSISTENT"
FIXTURE = "FIXTURE"
ASSUMED = "ASSUMED"
NOT_APPLICABLE = "NOT-APPLICABLE"
UNVERIFIED = "UNVERIFIED"

#: Statuses that do not block a successful exit.
OK_STATUSES = frozenset({VERIFIED, CONSISTENT, FIXTURE, ASSUMED, NOT_APPLICABLE})

CLAIM_NAMES = (
    "closure_is_knot",
    "genus_matches_family_formula",
    "alexander_span_matches_genus",
    "alexander_lspace_form",
    "braid_index_four",
    "twist_hypothesis_slope_bound",
    "lens_space_filling",
    "twist_homology_matches_image_slope",
    "twist_slope_covered",
    "lspace_knot",
    "hyperbolic",
    "asymmetric",
)


class CertificateError(RuntimeError):
    """A computed fact contradicts the certified claim set."""


@dataclass(frozen=True)
class GeometryFixture:
    """Externally computed hyperbolic-geometry facts about one subject."""

    subject: str
    hyperbolic: bool
    symmetry_group_order: int
    cusp_shape: complex | None = None
    shortest_geodesic_lower_bound: float | None = None
    provenance: Mapping[str, str] = field(default_factory=dict)
    identified_with: str | None = None

    def __post_init__(self):
        if self.symmetry_group_order < 1:
            raise ValueError("symmetry group order must be >= 1")
        if self.cusp_shape is not None and not self.cusp_shape.imag > 0:
            raise ValueError("cusp shape must have positive imaginary part")
        object.__setattr__(self, "provenance", dict(self.provenance))

    def to_json_obj(self) -> dict:
        return {
            "subject": self.subject,
            "hyperbolic": self.hyperbolic,
            "symmetry_group_order": self.symmetry_group_order,
            "cusp_shape": (
                None
                if self.cusp_shape is None
                else {"re": self.cusp_shape.real, "im": self.cusp_shape.imag}
            ),
            "shortest_geodesic_lower_bound": self.shortest_geodesic_lower_bound,
            "provenance": dict(self.provenance),
            "identified_with": self.identified_with,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "GeometryFixture":
        shape = obj.get("cusp_shape")
        return cls(
            subject=obj["subject"],
            hyperbolic=bool(obj["hyperbolic"]),
            symmetry_group_order=int(obj["symmetry_group_order"]),
            cusp_shape=None if shape is None else complex(shape["re"], shape["im"]),
            shortest_geodesic_lower_bound=obj.get("shortest_geodesic_lower_bound"),
            provenance=obj.get("provenance", {}),
            identified_with=obj.get("identified_with"),
        )


def knot_subject(n: int) -> str:
    return f"K_{n}"


def index_fixtures(
    fixtures: Iterable[GeometryFixture] | Mapping[str, GeometryFixture] | None,
) -> dict[str, GeometryFixture]:
    if fixtures is None:
        return {}
    if isinstance(fixtures, Mapping):
        return dict(fixtures)
    out = {}
    for fx in fixtures:
        if fx.subject in out:
            raise ValueError(f"duplicate fixture subject {fx.subject!r}")
        out[fx.subject] = fx
    return out


def load_fixtures(path) -> dict[str, GeometryFixture]:
    """Read a fixture file: a JSON array of fixture objects."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return index_fixtures(GeometryFixture.from_json_obj(obj) for obj in data)


def builtin_fixtures() -> dict[str, GeometryFixture]:
    """The checked-in reference fixtures (externally reported geometry)."""
    text = (
        resources.files("braidcert").joinpath("data/reference_fixtures.json").read_text()
    )
    return index_fixtures(GeometryFixture.from_json_obj(obj) for obj in json.loads(text))


@dataclass(frozen=True)
class CertificateConfig:
    normalized_length_threshold: float = 10.1
    geodesic_length_floor: float = 1.48
    homfly_max_n: int = 5


@dataclass(frozen=True)
class Claim:
    status: str
    evidence: str


@dataclass(frozen=True)
class LSpaceCertificate:
    """The per-n evidence bundle."""

    n: int
    computed: dict
    claims: dict[str, Claim]
    assumptions: tuple[dict, ...]
    fixtures_used: tuple[dict, ...]
    config: CertificateConfig

    @property
    def is_complete(self) -> bool:
        return tuple(self.claims) == CLAIM_NAMES

    @property
    def all_ok(self) -> bool:
        return all(c.status in OK_STATUSES for c in self.claims.values())

    def unverified_claims(self) -> list[str]:
        return [k for k, c in self.claims.items() if c.status == UNVERIFIED]

    def to_json_obj(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "computed": self.computed,
            "claims": {
                k: {"status": c.status, "evidence": c.evidence}
                for k, c in self.claims.items()
            },
            "assumptions": list(self.assumptions),
            "fixtures_used": list(self.fixtures_used),
            "config": {
                "normalized_length_threshold": self.config.normalized_length_threshold,
                "geodesic_length_floor": self.config.geodesic_length_floor,
                "homfly_max_n": self.config.homfly_max_n,
            },
        }


_ASSUMPTIONS = (
    {
        "label": "base_knot_lspace",
        "statement": "The closure at n = 0 is the census knot m239, a known "
        "L-space knot (not re-proved here).",
    },
    {
        "label": "lens_space_filling",
        "statement": "The (29, 0) filling of the base link is the lens space "
        "L(4,-1); this build checks it at the first-homology level only.",
    },
    {
        "label": "positive_braids_fibered",
        "statement": "Closures of positive braids are fibered, so the "
        "crossing-count genus formula computes Seifert genus and the "
        "Alexander span equals twice the genus.",
    },
    {
        "label": "threshold_constant",
        "statement": "Filling the twisting-curve cusp of the asymmetric link "
        "complement along a slope of normalized length at least 10.1 yields "
        "a hyperbolic, asymmetric manifold, provided the shortest geodesic "
        "has length at least 1.48.",
    },
)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise CertificateError(message)


def family_surgery_diagram(n: int | None) -> SurgeryDiagram:
    """The two-component diagram (base knot, twisting curve) with slopes
    (29, -1/n); ``n = None`` gives the (29, 0) lens-space filling."""
    c_slope = Slope.of(0, 1) if n is None else Slope.of(-1, n)
    return SurgeryDiagram(
        (BASE_SLOPE, c_slope),
        ((0, TWIST_LINKING), (TWIST_LINKING, 0)),
    )


def build_certificate(
    n: int,
    fixtures: Iterable[GeometryFixture] | Mapping[str, GeometryFixture] | None = None,
    config: CertificateConfig = CertificateConfig(),
) -> LSpaceCertificate:
    if n < 0:
        raise ValueError("certificates exist for n >= 0")
    fixture_map = index_fixtures(fixtures)
    computed: dict = {"n": n}
    claims: dict[str, Claim] = {}
    used: list[dict] = []

    b = family_braid(n)
    computed["letters"] = b.letter_count
    computed["twist_positive"] = is_twist_positive(b)

    knot = is_knot_closure(b)
    computed["knot_closure"] = knot
    _require(knot, "family closure is not a knot")
    claims["closure_is_knot"] = Claim(VERIFIED, "closure permutation is a 4-cycle")

    genus = bennequin_genus(b)
    computed["genus"] = genus
    _require(genus == n + 11, f"genus {genus} != n + 11")
    claims["genus_matches_family_formula"] = Claim(
        VERIFIED, f"(c - s + 1)/2 = ({b.letter_count} - 4 + 1)/2 = {genus} = n + 11"
    )

    alex = alexander_poly(b)
    span = alex.span
    computed["alexander_span"] = span
    _require(genus_from_alexander(alex) == genus, "Alexander span != 2 * genus")
    claims["alexander_span_matches_genus"] = Claim(
        VERIFIED, f"span {span} = 2 * genus; polynomial is symmetric with value 1 at t=1"
    )

    form_ok = lspace_form_check(alex)
    computed["lspace_form_ok"] = form_ok
    _require(form_ok, "Alexander polynomial fails the L-space coefficient form")
    claims["alexander_lspace_form"] = Claim(
        VERIFIED, "coefficients are +-1 and alternate from +1 at the top degree"
    )

    if n <= config.homfly_max_n:
        lower, upper = braid_index_bounds(b)
        computed["mfw_bound"] = lower
        if lower == upper:
            computed["braid_index"] = upper
            claims["braid_index_four"] = Claim(
                VERIFIED, f"breadth bound {lower} meets the {upper}-strand upper bound"
            )
        else:
            computed["braid_index"] = "inconclusive"
            claims["braid_index_four"] = Claim(
                UNVERIFIED, f"breadth bound {lower} < strand count {upper}"
            )
    else:
        computed["mfw_bound"] = None
        computed["braid_index"] = None
        claims["braid_index_four"] = Claim(
            CONSISTENT,
            f"upper bound 4 from the 4-strand presentation; breadth bound "
            f"not run (n > {config.homfly_max_n})",
        )

    base_genus = bennequin_genus(family_braid(0))
    _require(
        BASE_SLOPE.p >= 2 * base_genus - 1,
        "base filling slope below the cabling bound",
    )
    claims["twist_hypothesis_slope_bound"] = Claim(
        VERIFIED, f"{BASE_SLOPE} >= 2 * {base_genus} - 1 = {2 * base_genus - 1}"
    )

    lens = first_homology(family_surgery_diagram(None))
    computed["h1_lens_check"] = str(lens)
    _require(lens.order() == 4, f"|H1| of the (29, 0) filling is {lens.order()}, not 4")
    claims["lens_space_filling"] = Claim(
        CONSISTENT,
        "H1 = Z/4 matches the asserted lens space L(4,-1); the full "
        "identification is assumption lens_space_filling",
    )

    image = twist_image_slope(BASE_SLOPE, TWIST_LINKING, n)
    computed["image_slope"] = str(image)
    twist_h = first_homology(family_surgery_diagram(n))
    computed["h1_twist_check"] = str(twist_h)
    _require(
        twist_h.is_finite_cyclic and twist_h.order() == abs(image.p),
        f"H1 of the -1/{n} twist filling is {twist_h}, expected Z/{abs(image.p)}",
    )
    claims["twist_homology_matches_image_slope"] = Claim(
        VERIFIED, f"H1 = {twist_h} is cyclic of order {abs(image.p)} = |{image}|"
    )

    covered = twist_slopes_covered(BASE_SLOPE, TWIST_LINKING)(n)
    _require(covered, f"twist parameter {n} is outside the covered interval")
    claims["twist_slope_covered"] = Claim(
        VERIFIED,
        "the two assumed fillings pin an interval of surgeries containing "
        f"-1/{n}; the longitude slope "
        f"{(TWIST_LINKING**2 * BASE_SLOPE.q)}/{BASE_SLOPE.p} is positive",
    )

    if n == 0:
        claims["lspace_knot"] = Claim(ASSUMED, "this is assumption base_knot_lspace")
    else:
        claims["lspace_knot"] = Claim(
            CONSISTENT,
            "all computable consequences hold (coefficient form, slope "
            "arithmetic, homology); rests on assumptions base_knot_lspace "
            "and lens_space_filling",
        )

    _geometry_claims(n, fixture_map, config, computed, claims, used)

    cert = LSpaceCertificate(
        n=n,
        computed=computed,
        claims={name: claims[name] for name in CLAIM_NAMES},
        assumptions=_ASSUMPTIONS,
        fixtures_used=tuple(used),
        config=config,
    )
    assert cert.is_complete
    return cert


def _geometry_claims(n, fixture_map, config, computed, claims, used) -> None:
    link_fx = fixture_map.get(LINK_SUBJECT)
    knot_fx = fixture_map.get(knot_subject(n))

    threshold = config.normalized_length_threshold
    computed["normalized_length_threshold"] = threshold
    computed["normalized_length"] = None
    computed["threshold_met"] = None

    threshold_route = None
    if link_fx is not None and n >= 1:
        used.append({"subject": link_fx.subject, "provenance": dict(link_fx.provenance)})
        reasons = []
        if not link_fx.hyperbolic:
            reasons.append("link fixture is not hyperbolic")
        if link_fx.symmetry_group_order != 1:
            reasons.append("link fixture has nontrivial symmetry")
        if (
            link_fx.shortest_geodesic_lower_bound is None
            or link_fx.shortest_geodesic_lower_bound < config.geodesic_length_floor
        ):
            reasons.append(
                f"no geodesic bound >= {config.geodesic_length_floor} in link fixture"
            )
        if link_fx.cusp_shape is None:
            reasons.append("link fixture has no cusp shape")
        else:
            shape = CuspShape(link_fx.cusp_shape)
            nl = twist_normalized_length(shape, n)
            computed["normalized_length"] = nl
            computed["threshold_met"] = nl >= threshold
            computed["min_twist_meeting_threshold"] = min_twist_meeting_threshold(
                shape, threshold
            )
            if nl < threshold:
                reasons.append(f"normalized length {nl!r} below threshold {threshold!r}")
        if reasons:
            threshold_route = (False, "; ".join(reasons))
        else:
            threshold_route = (
                True,
                f"slope -1/{n} has normalized length {computed['normalized_length']!r} "
                f">= {threshold!r} on the link fixture's cusp, whose geometry "
                "meets the threshold hypotheses (assumption threshold_constant)",
            )

    if knot_fx is not None:
        used.append({"subject": knot_fx.subject, "provenance": dict(knot_fx.provenance)})

    # hyperbolicity
    if threshold_route is not None and threshold_route[0]:
        claims["hyperbolic"] = Claim(VERIFIED, threshold_route[1])
    elif knot_fx is not None and knot_fx.hyperbolic:
        claims["hyperbolic"] = Claim(
            FIXTURE, f"fixture {knot_fx.subject} reports a hyperbolic complement"
        )
    elif knot_fx is not None:
        raise CertificateError(f"fixture {knot_fx.subject} reports a non-hyperbolic complement")
    else:
        claims["hyperbolic"] = Claim(
            UNVERIFIED,
            "needs the link fixture (threshold route) or a per-n fixture"
            + (" (n <= 12)" if 1 <= n <= 12 else ""),
        )

    # asymmetry
    if n == 0:
        evidence = "the base knot is strongly invertible, so asymmetry is not claimed"
        if knot_fx is not None and knot_fx.symmetry_group_order >= 2:
            evidence += (
                f"; fixture order {knot_fx.symmetry_group_order} is consistent "
                "with the strong inversion"
            )
        claims["asymmetric"] = Claim(NOT_APPLICABLE, evidence)
        return
    if threshold_route is not None and threshold_route[0]:
        claims["asymmetric"] = Claim(VERIFIED, threshold_route[1])
    elif knot_fx is not None:
        if knot_fx.symmetry_group_order == 1:
            claims["asymmetric"] = Claim(
                FIXTURE, f"fixture {knot_fx.subject} reports a trivial symmetry group"
            )
        else:
            raise CertificateError(
                f"fixture {knot_fx.subject} reports symmetry order "
                f"{knot_fx.symmetry_group_order}; contradicts asymmetry"
            )
    else:
        claims["asymmetric"] = Claim(
            UNVERIFIED,
            "needs the link fixture (threshold route) or a per-n fixture"
            + (" (n <= 12)" if 1 <= n <= 12 else ""),
        )


def render_report(cert: LSpaceCertificate, format: str = "text") -> str:
    """Deterministic report; "text" gives a claim table, "json" the schema."""
    if format == "json":
        return json.dumps(cert.to_json_obj(), sort_keys=True, indent=2) + "\n"
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    lines = [f"certificate for n = {cert.n} (schema {SCHEMA_VERSION})", ""]
    width = max(len(k) for k in cert.claims)
    for name, claim in cert.claims.items():
        lines.append(f"{name:<{width}}  {claim.status:<14} {claim.evidence}")
    lines.append("")
    lines.append("computed:")
    for key in sorted(cert.computed):
        lines.append(f"  {key} = {cert.computed[key]}")
    lines.append("")
    lines.append("assumptions:")
    for a in cert.assumptions:
        lines.append(f"  [{a['label']}] {a['statement']}")
    if cert.fixtures_used:
        lines.append("")
        lines.append("fixtures used:")
        for f in cert.fixtures_used:
            prov = ", ".join(f"{k}={v}" for k, v in sorted(f["provenance"].items()))
            lines.append(f"  {f['subject']} ({prov})")
    lines.append("")
    status = "complete" if cert.all_ok else "INCOMPLETE"
    lines.append(f"verdict: {status}; unverified = {cert.unverified_claims()}")
    return "\n".join(lines) + "\n"
