"""C_k(X) for small k, the ratios C_1/C_k, and the C_5 > C_3 > C_7 > C_p check."""

import argparse
import time

from giuga.survey import build_lambda_table, count_k_carmichael


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, nargs="+", default=[10**5, 10**6, 10**7])
    ap.add_argument("--kmax", type=int, default=31)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--include-primes", action="store_true")
    args = ap.parse_args(argv)
    ks = list(range(1, args.kmax + 1))
    for limit in args.limit:
        t0 = time.perf_counter()
        table = build_lambda_table(limit)
        report = count_k_carmichael(table, ks, args.include_primes, workers=args.workers)
        dt = time.perf_counter() - t0
        print(f"X = {limit:,}  ({dt:.1f} s)  ordering C5>C3>C7>Cp: {report.ordering_ok}")
        for k in ks:
            r = report.ratios[(1, k)]
            shown = "-" if r is None else f"{float(r):.4f}"
            print(f"  k={k:<3} C_k={report.counts[k]:<8} C_1/C_k={shown}")


if __name__ == "__main__":
    main()
