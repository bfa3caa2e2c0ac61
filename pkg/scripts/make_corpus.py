"""Regenerate the graph6 corpus used by `emd-lab scan`.

The corpus holds every connected graph on min_n..max_n vertices, one per
line, taken from the networkx graph atlas (complete up to 7 vertices).
Labelings, and therefore the graph6 strings, can differ from a corpus made
by another generator; the isomorphism classes are the same.

Usage:
    python scripts/make_corpus.py --max-n 6 --output data/corpus-n6.g6
"""

import argparse
import sys
from pathlib import Path

import networkx as nx

ATLAS_MAX_ORDER = 7


def connected_atlas_graphs(min_n: int = 2, max_n: int = 6) -> list[nx.Graph]:
    """All connected graphs with min_n..max_n vertices, in atlas order.

    Raises:
        ValueError: If the range is empty or exceeds the atlas.
    """
    if not 1 <= min_n <= max_n <= ATLAS_MAX_ORDER:
        raise ValueError(
            f"order range {min_n}..{max_n} must lie within 1..{ATLAS_MAX_ORDER}"
        )
    return [
        g
        for g in nx.graph_atlas_g()
        if min_n <= g.number_of_nodes() <= max_n and nx.is_connected(g)
    ]


def corpus_lines(graphs: list[nx.Graph]) -> list[str]:
    """graph6 line per graph, without header or newline."""
    return [
        nx.to_graph6_bytes(g, header=False).decode("ascii").strip() for g in graphs
    ]


def write_corpus(path: Path, lines: list[str]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(f"{line}\n" for line in lines))


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-n", type=int, default=2)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--output", type=Path, default=Path("data/corpus-n6.g6"))
    args = parser.parse_args(argv)

    try:
        lines = corpus_lines(connected_atlas_graphs(args.min_n, args.max_n))
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    write_corpus(args.output, lines)
    sys.stderr.write(f"wrote {len(lines)} graphs to {args.output}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
