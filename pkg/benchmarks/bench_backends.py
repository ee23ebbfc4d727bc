"""Compare the compiled and pure-Python term-map kernels on the workloads
that dominate the test suite: the trace-route HOMFLY of family words, the
Burau-route Alexander sweep, and a skein-oracle sweep.

Each backend runs in a fresh interpreter so the import-time selection is
honest.  Usage: ``python benchmarks/bench_backends.py [--repeat N]``.
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "homfly family n=2, x20": """
from braidcert.braid import family_braid
from braidcert.homfly import homfly
b = family_braid(2)
for _ in range(20):
    homfly(b)
""",
    "alexander family n=0..12": """
from braidcert.braid import family_braid
from braidcert.alexander import alexander_poly
for n in range(13):
    alexander_poly(family_braid(n))
""",
    "homfly all 3-strand words, <= 6 letters": """
import itertools
from braidcert.braid import BraidWord
from braidcert.homfly import homfly
for length in range(7):
    for letters in itertools.product((1, -1, 2, -2), repeat=length):
        homfly(BraidWord(3, letters))
""",
    "skein oracle, 7-letter positive 3-strand words": """
import itertools
from braidcert.braid import BraidWord
from braidcert.skein import homfly_oracle
for letters in itertools.product((1, 2), repeat=7):
    homfly_oracle(BraidWord(3, letters))
""",
}

_RUNNER = """
import json, sys, time
from braidcert.polynomial import KERNEL_BACKEND
source = sys.stdin.read()
snippets = json.loads(source)
out = {"backend": KERNEL_BACKEND, "times": {}}
for name, code in snippets.items():
    compiled = compile(code, name, "exec")
    best = None
    for _ in range(int(sys.argv[1])):
        t0 = time.perf_counter()
        exec(compiled, {})
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    out["times"][name] = best
print(json.dumps(out))
"""


def run_backend(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    if pure:
        env["BRAIDCERT_PURE_PYTHON"] = "1"
    else:
        env.pop("BRAIDCERT_PURE_PYTHON", None)
    proc = subprocess.run(
        [sys.executable, "-c", _RUNNER, str(repeat)],
        input=json.dumps(WORKLOADS).encode(),
        capture_output=True,
        env=env,
        check=True,
    )
    return json.loads(proc.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best of N runs")
    args = parser.parse_args()

    compiled = run_backend(pure=False, repeat=args.repeat)
    pure = run_backend(pure=True, repeat=args.repeat)

    if compiled["backend"] != "c":
        print("note: compiled kernels unavailable; comparing python with itself")

    name_w = max(len(n) for n in WORKLOADS)
    print(f"{'workload':<{name_w}}  {compiled['backend']:>10}  {'python':>10}  speedup")
    for name in WORKLOADS:
        tc = compiled["times"][name]
        tp = pure["times"][name]
        print(f"{name:<{name_w}}  {tc * 1e3:>8.1f}ms  {tp * 1e3:>8.1f}ms  {tp / tc:>6.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
