"""Synthetic-model checks, with per-check worst cases.

    python scripts/proposition_suite.py [--depth 60] [--json report.json]
"""

import argparse
import json
import sys
from dataclasses import replace

from locorder.harness.synthetic import default_models, verify_propositions


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depth", type=int, default=60,
                    help="generate until |e_n| < 10**-depth")
    ap.add_argument("--json", help="write the full report here")
    args = ap.parse_args(argv)

    models = [replace(m, stop_exponent=args.depth) for m in default_models()]
    report = verify_propositions(models)
    worst = {}
    for r in report.results:
        if not r.valid:
            print(f"diverges: C={r.model['C']} rho={r.model['rho']} e0={r.model['e0']}")
            continue
        for c in r.checks:
            dev = abs(c.observed - c.predicted)
            if c.name.startswith("recon") or c.name == "cloc_identity":
                dev /= abs(c.predicted) or 1
            if dev > worst.get(c.name, (-1,))[0]:
                worst[c.name] = (dev, c.tolerance, r.model)
    for name, (dev, tol, model) in sorted(worst.items()):
        print(f"{name:24s} worst {dev:.2e} (tol {tol:.0e}) at C={model['C']} "
              f"rho={model['rho']} e0={model['e0']}")
    print("PASS" if report.passed else "FAIL")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report.to_dict(), fh, indent=1)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
