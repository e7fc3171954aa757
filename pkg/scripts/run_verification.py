#!/usr/bin/env python3
"""Sweep the verification report over a range of n.

Prints text reports to stdout; with --out, also writes one JSON report
per n. Exits 2 if any entry mismatches, mirroring the CLI contract.

Example:
    python scripts/run_verification.py --n-range 1:4 --out reports/
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from u6n_ncg.cli import _parse_caps  # noqa: E402
from u6n_ncg.verify import verify_all  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-range", default="1:3", help="inclusive range A:B")
    parser.add_argument("--out", type=Path, help="directory for JSON reports")
    parser.add_argument("--caps", help="cap overrides, e.g. detour=12,resolving=14")
    args = parser.parse_args()

    first, _, last = args.n_range.partition(":")
    span = range(int(first), int(last or first) + 1)
    caps = _parse_caps(args.caps)

    mismatch = False
    for n in span:
        report = verify_all(n, caps=caps)
        print(report.to_text())
        print()
        mismatch = mismatch or report.has_mismatch()
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            path = args.out / f"verify_n{n}.json"
            path.write_text(json.dumps(report.to_json_obj(), indent=2) + "\n")
            print(f"wrote {path}", file=sys.stderr)
    return 2 if mismatch else 0


if __name__ == "__main__":
    raise SystemExit(main())
