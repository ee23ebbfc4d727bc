"""Adapter between a hyperbolic-geometry engine and the certificate tool's
fixture files.  The bridge transcribes engine output; all judgment about
thresholds and claim statuses lives in the consumer."""

from .bridge import (
    BatchOutcome,
    BridgeError,
    batch_files,
    compute_fixture,
    run_batch,
)
from .engine import (
    Engine,
    EngineComputationError,
    EngineSession,
    EngineUnavailable,
    SnapPyEngine,
    default_engine,
)
from .links import family_link_pd
from .requests import ALL_COMPUTATIONS, BridgeRequest

__version__ = "0.1.0"
