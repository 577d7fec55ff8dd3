#!/usr/bin/env python3
"""Exhaustively certify the codes at small lengths and print the reports.

Example:
    python3 scripts/certify_small_lengths.py --max-n 7
"""

from __future__ import annotations

import argparse
import time
from itertools import permutations as iter_permutations

from permdel import Permutation, check_parity_lemmas, check_perfect, vt_signature_check


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=7, help="largest length (<= 8)")
    args = parser.parse_args()

    for n in range(2, args.max_n + 1):
        start = time.perf_counter()
        report = check_perfect(n, bound=args.max_n)
        for line in report.text_lines():
            print(line)
        vt_bad = sum(
            not vt_signature_check(Permutation(v)) for v in iter_permutations(range(n))
        )
        lemma_bad = sum(
            not check_parity_lemmas(Permutation(v)) for v in iter_permutations(range(n))
        )
        print(f"signature_violations: {vt_bad}")
        print(f"pivot_relation_violations: {lemma_bad}")
        print(f"elapsed_seconds: {time.perf_counter() - start:.2f}")
        print()


if __name__ == "__main__":
    main()
