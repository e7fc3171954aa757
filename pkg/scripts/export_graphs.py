#!/usr/bin/env python3
"""Write DOT and JSON serializations of the non-commuting graphs for a
range of n.

Example:
    python scripts/export_graphs.py --n-range 1:3 --out graphs/
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from u6n_ncg.graphs import non_commuting_graph, to_dot, to_json  # noqa: E402
from u6n_ncg.groups import u6n_group  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-range", default="1:3", help="inclusive range A:B")
    parser.add_argument("--out", type=Path, default=Path("graphs"))
    args = parser.parse_args()

    first, _, last = args.n_range.partition(":")
    args.out.mkdir(parents=True, exist_ok=True)
    for n in range(int(first), int(last or first) + 1):
        graph = non_commuting_graph(u6n_group(n))
        (args.out / f"u6n_n{n}.dot").write_text(to_dot(graph) + "\n")
        (args.out / f"u6n_n{n}.json").write_text(to_json(graph) + "\n")
        print(f"n={n}: {graph.vertex_count} vertices, {graph.edge_count()} edges")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
