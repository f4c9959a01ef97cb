#!/usr/bin/env python3
"""Compare the numba and pure-Python kernel backends on real workloads.

Spawns one subprocess per backend (the backend is chosen at import time via
SUPERELLIPTIC_NUMBA), runs the rewriting-heavy verification tasks with cold
action caches, and prints a timing table.

Usage: python3 bench/benchmark.py [--heavy]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

TASKS = ["generation-n4", "generation-n5", "factorization-n5", "presentation-n6"]
HEAVY_TASKS = TASKS + ["generation-n6"]


def run_task(task: str) -> float:
    from superelliptic import oracle
    from superelliptic.theorems import (
        verify_factorization_r1,
        verify_generation,
        verify_oracle_presentation,
    )
    from superelliptic.words import Context

    kind, _, tail = task.partition("-n")
    n = int(tail)
    ctx = Context(n, 3)
    oracle._ACTION_CACHE.clear()
    t0 = time.monotonic()
    if kind == "generation":
        claim = verify_generation("lmod_sphere", ctx)
    elif kind == "factorization":
        claim = verify_factorization_r1(ctx)
    elif kind == "presentation":
        claim = verify_oracle_presentation(ctx)
    else:
        raise ValueError(task)
    elapsed = time.monotonic() - t0
    if claim.status != "pass":
        raise RuntimeError(f"{task} did not pass: {claim.detail}")
    return elapsed


def worker(tasks: list[str]) -> None:
    from superelliptic import _kernels

    # compile/warm before timing
    run_task("presentation-n6")
    timings = {task: run_task(task) for task in tasks}
    print(json.dumps({"backend": _kernels.BACKEND, "timings": timings}))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--heavy", action="store_true", help="include the n=6 workload")
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    tasks = HEAVY_TASKS if args.heavy else TASKS

    if args.worker:
        worker(tasks)
        return 0

    results = {}
    for backend_flag in ("1", "0"):
        env = dict(os.environ, SUPERELLIPTIC_NUMBA=backend_flag)
        cmd = [sys.executable, os.path.abspath(__file__), "--worker"]
        if args.heavy:
            cmd.append("--heavy")
        proc = subprocess.run(cmd, env=env, capture_output=True, text=True)
        if proc.returncode != 0:
            if backend_flag == "1" and "numba is not importable" in proc.stderr:
                print("numba backend unavailable; skipping")
                continue
            print(proc.stderr, file=sys.stderr)
            return 1
        data = json.loads(proc.stdout.strip().splitlines()[-1])
        results[data["backend"]] = data["timings"]

    width = max(len(t) for t in tasks)
    print(f"{'task':<{width}}  " + "  ".join(f"{b:>8}" for b in results))
    for task in tasks:
        row = "  ".join(f"{results[b][task]:8.3f}" for b in results)
        print(f"{task:<{width}}  {row}")
    if {"numba", "python"} <= set(results):
        total_nb = sum(results["numba"].values())
        total_py = sum(results["python"].values())
        print(f"\ntotals: numba {total_nb:.3f}s, python {total_py:.3f}s "
              f"(speedup {total_py / total_nb:.1f}x)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
