"""Census of small dicots: the full day-2 table, then day-3 sample statistics.

Run with: python demos/census.py [sample_size]
"""

import sys
from collections import Counter

from dicots import (
    Store,
    canonical,
    compare,
    enumerate_dicots,
    is_canonical,
    is_invertible,
    notation,
    outcome,
)


def day2_table(s: Store) -> None:
    print("all dicots born by day 2")
    print(f"{'form':<10} {'outcome':<8} {'vs 0':<5} {'canonical':<10} invertible")
    for g in enumerate_dicots(s, 2):
        print(
            f"{notation(s, g):<10} {str(outcome(s, g)):<8} "
            f"{str(compare(s, g, s.zero)):<5} {notation(s, canonical(s, g)):<10} "
            f"{is_invertible(s, g).verdict}"
        )


def day3_stats(s: Store, count: int) -> None:
    print()
    print(f"fixed-seed sample of {count} dicots of birthday <= 3")
    outcomes = Counter()
    already_canonical = 0
    invertible = 0
    canonical_classes = set()
    for g in enumerate_dicots(s, 3, limit=count):
        outcomes[str(outcome(s, g))] += 1
        if is_canonical(s, g):
            already_canonical += 1
        if is_invertible(s, g).verdict:
            invertible += 1
        canonical_classes.add(canonical(s, g))
    print(f"  outcomes: {dict(sorted(outcomes.items()))}")
    print(f"  already canonical: {already_canonical}")
    print(f"  invertible: {invertible}")
    print(f"  distinct values (canonical forms): {len(canonical_classes)}")


def main() -> None:
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
    s = Store()
    day2_table(s)
    day3_stats(s, count)


if __name__ == "__main__":
    main()
