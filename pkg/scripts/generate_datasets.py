#!/usr/bin/env python3
"""Generate the standard evaluation grids: every task in every language,
50 instances each, at the easy (p25) and hard (p75) difficulty settings.

Output layout:
    <out>/p25/<task>_<lang>.jsonl + manifest.json
    <out>/p75/<task>_<lang>.jsonl + manifest.json

Re-running with the same seed reproduces the files byte for byte.
"""

import argparse
import sys

from problingo.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="datasets")
    parser.add_argument("--seed", type=int, default=20240601)
    parser.add_argument("--count", type=int, default=50)
    args = parser.parse_args()

    for percentile in (25.0, 75.0):
        code = cli_main([
            "generate",
            "--tasks", "all",
            "--languages", "all",
            "--dataset-seed", str(args.seed),
            "--count", str(args.count),
            "--difficulty-percentile", str(percentile),
            "--output-dir", f"{args.out}/p{int(percentile)}",
        ])
        if code != 0:
            return code
    return 0


if __name__ == "__main__":
    sys.exit(main())
