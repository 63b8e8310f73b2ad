"""Tabulate a JSON-lines report by experiment and record kind.

    python3 scripts/summarize_report.py report.jsonl
"""

import json
import sys
from collections import Counter


def main(path: str) -> None:
    total, fatal, concl = Counter(), Counter(), Counter()
    with open(path) as fh:
        for line in fh:
            r = json.loads(line)
            k = (r["experiment"], r["kind"])
            total[k] += 1
            fatal[k] += int(r["fatal"])
            concl[k] += int(r["conclusion"] is True)
    print(f"{'experiment':<16}{'kind':<22}{'records':>8}{'true':>8}{'fatal':>8}")
    for k in sorted(total):
        print(f"{k[0]:<16}{k[1]:<22}{total[k]:>8}{concl[k]:>8}{fatal[k]:>8}")


if __name__ == "__main__":
    main(sys.argv[1])
