"""Compare the associativity-scan backends on progressively larger rings.

Run:  python3 benchmarks/bench_kernels.py [--repeat N]

The scan is the O(rank^5) inner loop behind validate_ring and the
enumerator's candidate filter, so it is the piece worth compiling.  Rings
come from the built-in families (products pad out the larger ranks).
"""

import argparse
import time

from fusionring._kernels import available_backends
from fusionring.families import ising_ring, near_group_ring, psl2_level8_ring, su2_ring
from fusionring.groups import group_by_name
from fusionring.ring import deligne_product


def _zoo():
    rings = [
        ("ising (rank 3)", ising_ring()),
        ("psl2_level8 (rank 4)", psl2_level8_ring()),
        ("su2 level 10 (rank 11)", su2_ring(10)),
        ("psl2 x psl2 (rank 16)", deligne_product(psl2_level8_ring(), psl2_level8_ring())),
        ("ng(Z2,1) x su2_10 (rank 33)", deligne_product(
            near_group_ring(group_by_name("Z2"), 1), su2_ring(10))),
    ]
    return rings


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5, help="timed repetitions")
    args = ap.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    header = f"{'ring':<30}" + "".join(f"{name:>14}" for name in backends)
    print(header)
    print("-" * len(header))
    for label, ring in _zoo():
        times = []
        for name, mod in backends.items():
            mod.associativity_ok(ring.N)  # warm-up (and sanity)
            t0 = time.perf_counter()
            for _ in range(args.repeat):
                ok = mod.associativity_ok(ring.N)
            dt = (time.perf_counter() - t0) / args.repeat
            assert ok, f"{label} failed associativity under {name}"
            times.append(dt)
        cells = "".join(f"{dt * 1e3:>12.3f}ms" for dt in times)
        print(f"{label:<30}{cells}")
        if len(times) == 2 and times[1] > 0:
            print(f"{'':<30}{'speedup':>14}{times[0] / times[1]:>13.1f}x")


if __name__ == "__main__":
    main()
