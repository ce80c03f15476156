"""Try the one-factor construction on paths with a signed diagonal and show which verdict fails."""

from q2kit.coloring import exact_edge_color
from q2kit.graphs import path
from q2kit.witness import witness_onefactor


def main():
    print("k\tpattern_ok\tannihilation_ok\tboth_attained\tnowhere_zero_ok")
    for k in range(2, 9):
        classes = exact_edge_color(path(k), 2).classes()
        v = witness_onefactor(path(k), classes, signed_diagonal=True).verdicts
        print(f"{k}\t{v.pattern_ok}\t{v.annihilation_ok}\t{v.both_attained}\t{v.nowhere_zero_ok}")
    # an endpoint is covered by one color only; its diagonal block is +-J_1 +- J_2, never zero


if __name__ == "__main__":
    main()
