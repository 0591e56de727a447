"""Write a synthetic judgment file whose category counts reprint a fixed percentage row.

671 judgments split (352, 3, 164, 5, 0, 6, 72, 69) over the eight categories
reprint as 52.5, 0.4, 24.4, 0.7, 0.0, 0.9, 10.7, 10.3 under half-up rounding.
The counts were found by searching totals up to 1000 for the smallest one
where every row rounds to the target value.
"""
import argparse
import itertools
from decimal import Decimal

from mtkit.evalkit import JUDGMENT_CATEGORIES, percent
from mtkit.fixtures import fixture_suite

TARGET = ("52.5", "0.4", "24.4", "0.7", "0.0", "0.9", "10.7", "10.3")
COUNTS = (352, 3, 164, 5, 0, 6, 72, 69)


def search(limit: int = 1000):
    """Smallest total N with integer counts reproducing TARGET."""
    for n in range(1, limit + 1):
        options = []
        for t in TARGET:
            want = Decimal(t)
            options.append([c for c in range(n + 1) if percent(c, n) == want])
            if not options[-1]:
                break
        else:
            for combo in itertools.product(*options):
                if sum(combo) == n:
                    return n, combo
    return None


def render(counts=COUNTS) -> str:
    lines = ["% synthetic judgments reproducing the reference proportions"]
    k = 0
    # interleave categories so the file does not look sorted
    pools = [[key] * c for (key, _), c in zip(JUDGMENT_CATEGORIES, counts)]
    for group in itertools.zip_longest(*pools):
        for key in group:
            if key is None:
                continue
            k += 1
            lines.append(f"judge(j{k:03d}, '{key}').")
    return "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=fixture_suite().judgments)
    ap.add_argument("--search", action="store_true", help="re-run the count search first")
    args = ap.parse_args()
    counts = COUNTS
    if args.search:
        found = search()
        print("search result:", found)
        counts = found[1]
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render(counts))
    print(f"wrote {sum(counts)} judgments to {args.out}")


if __name__ == "__main__":
    main()
