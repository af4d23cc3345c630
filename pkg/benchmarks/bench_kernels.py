"""Compare the compiled and pure-Python permutation kernels.

Times the minimum-descent scan and the avoider enumeration over a few poset
families at growing sizes.  Run from the repository root:

    python3 benchmarks/bench_kernels.py [--nmax 9] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from posetdecomp import _reference, generate

try:
    from posetdecomp import _fast
except ImportError:
    _fast = None


def _time(fn, *args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nmax", type=int, default=9)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _fast is None:
        print("compiled kernel unavailable; timing the pure kernel only")

    families = [
        ("antichain", generate.antichain),
        ("fan", lambda n: generate.two_chain_fan(max(1, (n - 1) // 2))),
        ("random", lambda n: generate.random_poset(n, density=0.3, seed=7)),
    ]
    header = f"{'family':<10} {'n':>3} {'op':<12} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    seen = set()
    for name, make in families:
        for n in range(6, args.nmax + 1):
            p = make(n)
            if p.n > 12 or (name, p.n) in seen:
                continue
            seen.add((name, p.n))
            for op, label in (("min_descents", "descents"), ("permutations_avoiding", "avoiders")):
                pure = _time(
                    getattr(_reference, op), p.lt_bytes, *(
                        (p.lt_bytes, p.n) if op == "min_descents" else (p.n,)
                    ),
                    repeat=args.repeat,
                )
                if _fast is not None:
                    fast = _time(
                        getattr(_fast, op), p.lt_bytes, *(
                            (p.lt_bytes, p.n) if op == "min_descents" else (p.n,)
                        ),
                        repeat=args.repeat,
                    )
                    ratio = pure / fast if fast > 0 else float("inf")
                    print(f"{name:<10} {p.n:>3} {label:<12} {pure:>10.4f} {fast:>13.4f} {ratio:>7.1f}x")
                else:
                    print(f"{name:<10} {p.n:>3} {label:<12} {pure:>10.4f} {'-':>13} {'-':>8}")


if __name__ == "__main__":
    main()
