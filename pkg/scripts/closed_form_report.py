"""Print the validation ledger for the tabulated 4x4 product formulas.

Checks the four component families of the closed-form product law against
the general structure-constant product on random operands, and compares
every tabulated antisymmetric-support component term-by-term against the
product table derived from first principles.  Components that disagree are
printed with the derived correction.  With --full, runs the complete
self-verification suite instead (the same report `pauligl verify` prints).
"""

import argparse
import sys

import numpy as np

from pauligl import run_verification, verify_closed_forms


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for the random-operand family checks")
    parser.add_argument("--pairs", type=int, default=100,
                        help="random operand pairs per component family")
    parser.add_argument("--full", action="store_true",
                        help="run every verification suite, not just the "
                             "closed-form checks")
    args = parser.parse_args()

    if args.full:
        report = run_verification(args.seed)
        print(report.render())
        return 0 if report.ok else 3

    report = verify_closed_forms(np.random.default_rng(args.seed),
                                 pairs=args.pairs)
    print(report.render())
    # A tabulated-component mismatch is a finding, not a failure: the
    # derived table is what the library executes.  Only a family-level
    # disagreement with the general product signals a real defect.
    return 0 if report.families_confirmed else 3


if __name__ == "__main__":
    sys.exit(main())
