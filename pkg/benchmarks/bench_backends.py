#!/usr/bin/env python3
"""Compare the compiled rational kernel against the pure fractions fallback.

Runs each workload twice in subprocesses (CENDLAB_PURE unset / set) and
prints a timing table.  Workloads exercise the hot paths: raw scalar
arithmetic, dense row reduction, the full evaluation-span computation, and
one classification roundtrip.

    python3 benchmarks/bench_backends.py
"""

import json
import os
import subprocess
import sys

WORKLOADS = {
    "scalar-arithmetic": """
import time
from cendlab.fields import Rat
x, y = Rat(22, 7), Rat(-13, 9)
t0 = time.perf_counter()
acc = Rat(0)
for _ in range(200000):
    acc = acc + x * y - x / y
print(time.perf_counter() - t0)
""",
    "dense-rref-120x120": """
import time, random
from cendlab.fields import QQ
from cendlab.linalg import Mat, rref
rng = random.Random(0)
rows = [[QQ.scalar(rng.randint(-9, 9)) for _ in range(120)] for _ in range(120)]
t0 = time.perf_counter()
basis, rank = rref(Mat(rows))
print(time.perf_counter() - t0)
assert rank == 120
""",
    "wn-span-D4-n2": """
import time
from cendlab.groups import dihedral_group
from cendlab.conformal import Ambient, cend
from cendlab.workbench import wn_span
amb = Ambient(dihedral_group(4), 2)
t0 = time.perf_counter()
basis = wn_span(cend(amb))
print(time.perf_counter() - t0)
assert basis.dim == 256
""",
    "classify-roundtrip-C4-n2": """
import time, random
from cendlab.fields import QQ
from cendlab.groups import cyclic_group
from cendlab.conformal import Ambient
from cendlab.linalg import Mat
from cendlab.classify import ChiFunction, apply_automorphism, build_C, build_sigma, canonicalize
rng = random.Random(1)
g = cyclic_group(4)
amb = Ambient(g, 2)
def rand_inv():
    while True:
        m = Mat([[QQ.scalar(rng.randint(-3, 3)) for _ in range(2)] for _ in range(2)])
        if m.rank() == 2:
            return m
C = build_C(g, (0, 2), ChiFunction.constant_one(g, QQ), 2, QQ)
sigma = build_sigma([rand_inv() for _ in range(4)], amb)
image = apply_automorphism(sigma, C)
t0 = time.perf_counter()
sub, chi, out = canonicalize(image)
print(time.perf_counter() - t0)
assert sub == (0, 2)
""",
}


def run(code, pure):
    env = dict(os.environ)
    if pure:
        env["CENDLAB_PURE"] = "1"
    else:
        env.pop("CENDLAB_PURE", None)
    proc = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env
    )
    if proc.returncode != 0:
        raise RuntimeError(proc.stderr)
    return float(proc.stdout.strip().splitlines()[-1])


def main():
    backend_probe = (
        "from cendlab.fields import RATIONAL_BACKEND; print(RATIONAL_BACKEND)"
    )
    compiled_name = subprocess.run(
        [sys.executable, "-c", backend_probe], capture_output=True, text=True
    ).stdout.strip()
    if compiled_name != "compiled":
        print("note: compiled kernel not importable; both columns use fractions")
    rows = []
    for name, code in WORKLOADS.items():
        fast = run(code, pure=False)
        slow = run(code, pure=True)
        rows.append((name, fast, slow))
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'compiled':>10}  {'fractions':>10}  {'speedup':>8}")
    for name, fast, slow in rows:
        print(f"{name:<{width}}  {fast:>9.3f}s  {slow:>9.3f}s  {slow / fast:>7.1f}x")
    print(json.dumps({name: {"compiled": f, "fractions": s} for name, f, s in rows}))


if __name__ == "__main__":
    main()
