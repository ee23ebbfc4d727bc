"""Fixture production: run requests through an engine and transcribe.

The bridge renders results into the fixture JSON schema consumed by the
primary package and never interprets them; the one editorial act is a
provenance note flagging drift from recorded reference digits (beyond 1e-6)
so that engine-version skew is visible without failing the run.
"""

from __future__ import annotations

import datetime
import json
import sys
from dataclasses import dataclass

from .engine import Engine, EngineComputationError, SYMMETRY_PRECISIONS
from .requests import BridgeRequest

#: Recorded reference digits for drift flagging (subject -> cusp shape).
REFERENCE_CUSP_SHAPES = {
    "K0_link": complex(0.05249786712, 0.61334493863),
}
DRIFT_TOLERANCE = 1e-6


class BridgeError(RuntimeError):
    """A request could not be completed (validation or engine failure)."""


@dataclass
class BatchOutcome:
    fixtures: list[dict]
    errors: list[dict]


def _symmetry_with_retries(session) -> int:
    last: EngineComputationError | None = None
    for precision in SYMMETRY_PRECISIONS:
        try:
            return session.symmetry_group_order(precision)
        except EngineComputationError as exc:
            last = exc
    raise BridgeError(f"symmetry computation inconclusive: {last}")


def compute_fixture(req: BridgeRequest, engine: Engine) -> dict:
    """Run one request; returns a fixture object in the primary's schema."""
    session = engine.open(census_name=req.census_name, pd_code=req.pd_code)

    hyperbolic = session.is_hyperbolic() if "hyperbolic" in req.computations else False
    if "symmetry_group" in req.computations:
        order = _symmetry_with_retries(session)
    else:
        order = 1

    shape = None
    if "cusp_shape" in req.computations:
        shape = session.cusp_shape(req.cusp_index)
        if shape.imag <= 0:
            raise BridgeError(
                f"engine returned a degenerate cusp shape {shape} for {req.subject!r}"
            )

    geodesic = None
    if "shortest_geodesic" in req.computations:
        geodesic = session.shortest_geodesic_lower_bound()

    provenance = {
        "engine": engine.name,
        "version": engine.version,
        "date": datetime.date.today().isoformat(),
    }
    reference = REFERENCE_CUSP_SHAPES.get(req.subject)
    if shape is not None and reference is not None:
        drift = abs(shape - reference)
        if drift > DRIFT_TOLERANCE:
            provenance["drift_from_reference"] = (
                f"cusp shape differs from recorded reference by {drift:.3e}"
            )

    return {
        "subject": req.subject,
        "hyperbolic": bool(hyperbolic),
        "symmetry_group_order": int(order),
        "cusp_shape": None if shape is None else {"re": shape.real, "im": shape.imag},
        "shortest_geodesic_lower_bound": geodesic,
        "provenance": provenance,
        "identified_with": session.identify(),
    }


def run_batch(requests: list[dict], engine: Engine) -> BatchOutcome:
    """Map compute_fixture over request objects; failures recorded per entry."""
    fixtures: list[dict] = []
    errors: list[dict] = []
    for obj in requests:
        subject = obj.get("subject", "<missing subject>")
        try:
            req = BridgeRequest.from_json_obj(obj)
            fixtures.append(compute_fixture(req, engine))
        except (KeyError, ValueError, BridgeError, EngineComputationError) as exc:
            errors.append({"subject": subject, "error": str(exc)})
    return BatchOutcome(fixtures, errors)


def batch_files(requests_path: str, out_path: str, engine: Engine) -> BatchOutcome:
    """File-level batch: JSON array of requests in, fixture file out."""
    with open(requests_path, encoding="utf-8") as fh:
        requests = json.load(fh)
    if not isinstance(requests, list):
        raise BridgeError("requests file must hold a JSON array")
    outcome = run_batch(requests, engine)
    with open(out_path, "w", encoding="utf-8") as fh:
        json.dump(outcome.fixtures, fh, indent=2, sort_keys=True)
        fh.write("\n")
    for err in outcome.errors:
        print(f"bridge: {err['subject']}: {err['error']}", file=sys.stderr)
    return outcome
