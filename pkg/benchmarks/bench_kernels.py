#!/usr/bin/env python3
"""Time the pure-Python kernels against the compiled backend.

Both implementations are imported directly, so one process measures both
regardless of the REDKIT_KERNELS setting.  Workloads are deterministic;
each timing is the best of ``--repeat`` runs.
"""

import argparse
import time
from random import Random

from redkit.families import named_graph
from redkit.kernels import _pure
from redkit.oracles import cm_masks
from redkit.pipeline import red_coloring_to_cm
from redkit.witness import Witness

try:
    from redkit.kernels import _speed
except ImportError:
    _speed = None


def _subset_sum_workload(seed):
    rng = Random(seed)
    items = [2 * rng.randint(1, 300) for _ in range(24)]
    return (items, sum(items) // 2 | 1)           # odd target: full sweep


def _subset_sum_mod_workload(seed):
    rng = Random(seed)
    q = 99991
    return ([rng.randrange(q) for _ in range(22)], q, q - 1)


def _cm_workload(_seed):
    graph = named_graph("c5")
    machine = red_coloring_to_cm.apply(graph, Witness.zero(0))
    incs, decs, req = cm_masks(machine)
    return (incs, decs, req, machine.dimension, 4_000_000)


def _ilp_workload(seed):
    rng = Random(seed)
    cols = [tuple(rng.choice((-1, 0, 1)) for _ in range(6))
            for _ in range(21)]
    rhs = tuple(rng.randint(4, 7) for _ in range(6))  # likely infeasible
    return (cols, rhs)


WORKLOADS = [
    ("subset-sum dp", "subset_sum_solve", _subset_sum_workload),
    ("subset-sum mod dp", "subset_sum_mod_solve", _subset_sum_mod_workload),
    ("counter machine", "counter_machine_solve", _cm_workload),
    ("ilp 0/1 brute", "ilp01_brute", _ilp_workload),
]


def _best(fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if _speed is None:
        print("compiled backend unavailable; timing pure backend only")
    header = f"{'kernel':<20} {'pure':>10} {'compiled':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, fn_name, make in WORKLOADS:
        workload = make(args.seed)
        pure_t, pure_r = _best(getattr(_pure, fn_name), workload, args.repeat)
        if _speed is None:
            print(f"{label:<20} {pure_t:>9.4f}s {'-':>10} {'-':>9}")
            continue
        fast_t, fast_r = _best(getattr(_speed, fn_name), workload,
                               args.repeat)
        if (pure_r is None) != (fast_r is None):
            raise SystemExit(f"{label}: backends disagree on feasibility")
        print(f"{label:<20} {pure_t:>9.4f}s {fast_t:>9.4f}s "
              f"{pure_t / fast_t:>8.1f}x")


if __name__ == "__main__":
    main()
