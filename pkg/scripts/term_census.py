#!/usr/bin/env python3
"""Count terms per depth over the example signatures.

Shows how fast the term spaces grow and how long validating every
enumerated sequence takes with the sort-stack machine.
"""

import argparse
import time

from ualg.examples import bool_signature, list_fixture, monoid_signature
from ualg.free_algebra import enumerate_terms
from ualg.term_vm import infer_sort


def census(name, sig, sort, max_depth):
    seen = 0
    started = time.perf_counter()
    by_depth = []
    for d in range(1, max_depth + 1):
        total = 0
        for t in enumerate_terms(sig, sort, d):
            assert infer_sort(sig, t.syms) == sort
            total += 1
        by_depth.append(total)
        seen = total
    elapsed = time.perf_counter() - started
    counts = ", ".join(f"d<={d}: {n}" for d, n in enumerate(by_depth, start=1))
    print(f"{name:>12} sort {sort!r}: {counts}  ({seen} validated in {elapsed:.2f}s)")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-depth", type=int, default=4)
    args = parser.parse_args()
    census("monoid", monoid_signature(), "u", args.max_depth + 2)
    census("bool", bool_signature(), "u", args.max_depth)
    census("list+vars", list_fixture(("a", "b")).free.vsig, "list", args.max_depth + 2)


if __name__ == "__main__":
    main()
