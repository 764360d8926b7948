#!/usr/bin/env python3
"""Run the scaling benchmark and print the fitted exponents."""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from pizza.bench import bench_dp, bench_precompute  # noqa: E402


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-exp", type=int, default=20)
    ap.add_argument("--dp-max-n", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    pre = bench_precompute(max_exp=args.max_exp, repeat=args.repeat)
    print(pre.table())
    print()
    dp = bench_dp(max_n=args.dp_max_n, repeat=args.repeat)
    print(dp.table())


if __name__ == "__main__":
    main()
