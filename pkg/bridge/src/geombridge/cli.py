"""Bridge command line: map a requests file to a fixture file."""

from __future__ import annotations

import argparse
import sys

from .bridge import BridgeError, batch_files
from .engine import EngineUnavailable, default_engine


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="bridge",
        description="Run geometry requests through a hyperbolic-geometry "
        "engine and write a fixture file for the certificate tool.",
    )
    parser.add_argument("--requests", required=True, help="JSON array of requests")
    parser.add_argument("--out", required=True, help="fixture file to write")
    args = parser.parse_args(argv)

    try:
        engine = default_engine()
    except EngineUnavailable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        outcome = batch_files(args.requests, args.out, engine)
    except (BridgeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(
        f"wrote {len(outcome.fixtures)} fixtures to {args.out}"
        + (f" ({len(outcome.errors)} requests failed)" if outcome.errors else "")
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
