"""Exhaustive nowhere-zero scan of the projector family for a range of k."""

import argparse
import time

from q2kit.exact_linalg import EXHAUSTIVE_MAX_K, build_projector_family, verify_nowhere_zero


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--kmin", type=int, default=2)
    p.add_argument("--kmax", type=int, default=16)
    args = p.parse_args()
    if args.kmax > EXHAUSTIVE_MAX_K:
        p.error(f"--kmax is capped at {EXHAUSTIVE_MAX_K}")
    print("k\td\tsubsets\tviolations\tconditions_ok\tseconds")
    for k in range(args.kmin, args.kmax + 1):
        t0 = time.perf_counter()
        fam = build_projector_family(k)
        rep = verify_nowhere_zero(fam, "exhaustive")
        dt = time.perf_counter() - t0
        print(f"{k}\t{fam.norm_sq}\t{rep.checked}\t{len(rep.zero_entries)}\t{rep.conditions_ok}\t{dt:.2f}")


if __name__ == "__main__":
    main()
