"""Run every theorem sweep at its acceptance size and print one line each."""

import argparse
import sys

from idcodes import verify

SWEEPS = [
    ("gamma-bounds", dict(max_n=4)),
    ("extremal-digraphs", dict(max_n=4)),
    ("extremal-digraphs", dict(max_n=5, mode="oriented")),
    ("prop4", dict(max_n=4)),
    ("symmetric-arc", dict(max_n=4)),
    ("bondy", dict(max_n=4)),
    ("extremal-systems", dict(max_n=5)),
    ("prop6", dict(samples=1000, seed=1)),
    ("induction-bound", dict(samples=1000, seed=1)),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()
    failed = 0
    for theorem_id, params in SWEEPS:
        report = verify(theorem_id, workers=args.workers, **params)
        print(report.summary())
        failed += not report.passed
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
