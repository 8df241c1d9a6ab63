"""Which seed order reproduces each printed row of the methods with memory.

For every secant-family (method, problem) pair the run is repeated with the
two starting points swapped, and both are compared with the printed errors.
"""

import argparse
import sys

from locorder.bigfloat import sci
from locorder.driver import run
from locorder.harness.published import DELTA_LAMBDA
from locorder.methods import METHODS
from locorder.problems import PROBLEMS

EST = ("bar", "hat", "tilde", "breve")


def worst_rel(report, printed):
    return max(abs(report.delta(e) - p) / p for e, p in zip(EST, printed[1:]))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--eta", type=int, default=2200)
    args = ap.parse_args(argv)

    print("| method | problem | I (tab / swap / printed) | worst rel. err tab | worst rel. err swap | better |")
    print("|---|---|---|---|---|---|")
    for m in (m for m in METHODS.values() if m.memory):
        for p in PROBLEMS.values():
            printed = DELTA_LAMBDA[m.id][p.id]
            tab = run(m, p, "cloc", args.eta)
            swap = run(m, p, "cloc", args.eta, seeds=tuple(reversed(p.x_minus1_x0)))
            a, b = worst_rel(tab, printed), worst_rel(swap, printed)
            print(f"| {m.id} | {p.id} | {tab.I} / {swap.I} / {printed[0]} | {sci(a, 2)} | "
                  f"{sci(b, 2)} | {'swapped' if b < a else 'tabulated'} |")
    return 0


if __name__ == "__main__":
    sys.exit(main())
