#!/usr/bin/env python3
"""Write the graph corpora used by the suites as graph6 files, one per corpus."""

import argparse
from pathlib import Path

from properconn.graph import to_graph6
from properconn.sweeps import (
    atlas_connected,
    bridgeless_corpus,
    dense_three_corpus,
    dense_two_corpus,
    eight_vertex_min_degree,
    trees_up_to_iso,
)


def write(path: Path, graphs) -> None:
    path.write_text("".join(to_graph6(g) + "\n" for g in graphs))
    print(f"{path}: {len(graphs)} graphs")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-o", "--outdir", type=Path, default=Path("data"))
    out = ap.parse_args().outdir
    out.mkdir(parents=True, exist_ok=True)
    write(out / "connected_n2-7.g6", atlas_connected(7))
    write(out / "trees_n2-9.g6", [t for n in range(2, 10) for t in trees_up_to_iso(n)])
    write(out / "n8_mindeg4.g6", eight_vertex_min_degree(4))
    write(out / "bridgeless.g6", [g for _, g in bridgeless_corpus()])
    write(out / "dense_two.g6", [g for _, g in dense_two_corpus()])
    write(out / "dense_three.g6", [g for _, g in dense_three_corpus()])


if __name__ == "__main__":
    main()
