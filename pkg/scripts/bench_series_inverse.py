#!/usr/bin/env python3
"""Time the two exact series-reciprocal routes on the golden exponential.

The O(N^2) convolution recurrence is the correctness baseline; Newton
doubling is the optional fast variant.  Both must agree coefficient for
coefficient, which this script re-asserts while timing.
"""

import argparse
import time

from goldencalc.series import golden_exponential


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--orders", type=int, nargs="+", default=[16, 32, 64, 128, 192]
    )
    args = parser.parse_args()

    print(f"{'order':>6}  {'recurrence':>12}  {'newton':>12}")
    for order in args.orders:
        series = golden_exponential(order)
        t0 = time.perf_counter()
        naive = series.inverse()
        t1 = time.perf_counter()
        newton = series.inverse_newton()
        t2 = time.perf_counter()
        assert naive == newton
        print(f"{order:>6}  {t1 - t0:>11.4f}s  {t2 - t1:>11.4f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
