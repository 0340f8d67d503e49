"""Compare the compiled reduction kernel against the pure-Python twin.

Two views:
  * micro: normal_form on randomized reduction workloads, both modules
    called directly in-process;
  * macro: a full analysis stage (the degree-6 walkthrough curve's secant
    spans and plane projection) run in subprocesses with the kernel pinned
    via RATCURVE_PURE_KERNEL.

Run:  python3 benchmarks/bench_kernel.py
"""

from __future__ import annotations

import os
import random
import subprocess
import sys
import time

import ratcurve._kernel._fast as fast_impl  # noqa: F401 (may be missing)
import ratcurve._kernel._pure as pure_impl
from ratcurve.orders import GrevLex
from ratcurve.rationals import QQ

MACRO_SNIPPET = """
import time
from ratcurve.binary_forms import BinaryForm
from ratcurve.curves import CurveParam
from ratcurve.pipeline import CurveAnalysis
from ratcurve.rationals import QQ
from ratcurve._kernel import IMPL

curve = CurveParam(
    BinaryForm([QQ(4), QQ(-16), QQ(3), QQ(28), QQ(-1), QQ(-6), QQ(0)]),
    BinaryForm([QQ(0), QQ(4), QQ(-12), QQ(-41), QQ(99), QQ(10), QQ(-24)]),
    BinaryForm([QQ(0), QQ(1), QQ(-3), QQ(-13), QQ(27), QQ(36), QQ(0)]),
)
start = time.monotonic()
an = CurveAnalysis(curve)
an.multiplicity_counts()
print(f"{IMPL} {time.monotonic() - start:.2f}")
"""


def random_workload(seed: int, nvars: int = 6, npolys: int = 40):
    rng = random.Random(seed)
    order = GrevLex(nvars)

    def poly(nterms):
        terms = {}
        for _ in range(nterms):
            e = tuple(rng.randrange(5) for _ in range(nvars))
            terms[e] = QQ(rng.randrange(-99, 100) or 1, rng.randrange(1, 9))
        return sorted(
            ((order.key(e), e, c) for e, c in terms.items()), reverse=True
        )

    basis = [poly(rng.randrange(2, 9)) for _ in range(12)]
    targets = [poly(rng.randrange(5, 25)) for _ in range(npolys)]
    return targets, basis


def micro(impl, targets, basis, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for t in targets:
            impl.normal_form(list(t), basis, True)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    targets, basis = random_workload(seed=2024)
    out_fast = [fast_impl.normal_form(list(t), basis, True) for t in targets]
    out_pure = [pure_impl.normal_form(list(t), basis, True) for t in targets]
    if out_fast != out_pure:
        print("KERNEL MISMATCH: compiled and pure outputs differ", file=sys.stderr)
        return 1
    t_fast = micro(fast_impl, targets, basis)
    t_pure = micro(pure_impl, targets, basis)
    print(f"micro normal_form   pure {t_pure * 1e3:8.1f} ms   "
          f"fast {t_fast * 1e3:8.1f} ms   speedup x{t_pure / t_fast:.2f}")

    rows = {}
    for pinned in ("", "1"):
        env = dict(os.environ)
        if pinned:
            env["RATCURVE_PURE_KERNEL"] = pinned
        else:
            env.pop("RATCURVE_PURE_KERNEL", None)
        out = subprocess.run(
            [sys.executable, "-c", MACRO_SNIPPET],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        name, seconds = out.stdout.split()
        rows[name] = float(seconds)
    if set(rows) != {"fast", "pure"}:
        print("macro run did not exercise both kernels:", rows, file=sys.stderr)
        return 1
    print(f"macro sextic counts pure {rows['pure']:8.2f} s    "
          f"fast {rows['fast']:8.2f} s    speedup x{rows['pure'] / rows['fast']:.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
