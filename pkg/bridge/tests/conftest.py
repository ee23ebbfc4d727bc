import pytest

from geombridge.engine import EngineComputationError

REFERENCE_SHAPE = complex(0.05249786712, 0.61334493863)


class StubSession:
    """Canned engine session; optionally fails symmetry at low precision."""

    def __init__(self, record):
        self.record = record
        self.symmetry_calls = []

    def is_hyperbolic(self):
        return self.record["hyperbolic"]

    def symmetry_group_order(self, precision):
        self.symmetry_calls.append(precision)
        if precision < self.record.get("symmetry_needs_precision", 0):
            raise EngineComputationError("insufficient precision")
        order = self.record["symmetry_group_order"]
        if order is None:
            raise EngineComputationError("inconclusive")
        return order

    def cusp_shape(self, cusp_index):
        return self.record["cusp_shapes"][cusp_index]

    def shortest_geodesic_lower_bound(self):
        return self.record["geodesic"]

    def identify(self):
        return self.record.get("identified_with")


class StubEngine:
    name = "stub-engine"
    version = "1.2.3"

    def __init__(self, table):
        self.table = table
        self.sessions = []

    def open(self, census_name=None, pd_code=None):
        if census_name is not None:
            key = census_name
        else:
            key = ("pd", len(pd_code), tuple(pd_code[0]) if pd_code else ())
        session = StubSession(self.table[key])
        self.sessions.append(session)
        return session


@pytest.fixture()
def link_record():
    return {
        "hyperbolic": True,
        "symmetry_group_order": 1,
        "cusp_shapes": {0: complex(1.2, 2.5), 1: REFERENCE_SHAPE},
        "geodesic": 1.48,
        "identified_with": None,
    }


@pytest.fixture()
def m239_record():
    return {
        "hyperbolic": True,
        "symmetry_group_order": 2,
        "cusp_shapes": {0: complex(0.1, 1.0)},
        "geodesic": 0.9,
        "identified_with": "m239",
    }
