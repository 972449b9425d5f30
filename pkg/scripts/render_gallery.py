#!/usr/bin/env python3
"""Render SVG representations for a few named graphs into an output directory."""
import argparse
import os
import sys

from simpletri.graphs import Graph, complete_graph, cycle_graph, empty_graph, path_graph
from simpletri.io import emit_representation
from simpletri.recognition import recognize

GALLERY = {
    "c4": cycle_graph(4),
    "2k2": Graph.from_edges(4, [(0, 2), (1, 3)]),
    "p4": path_graph(4),
    "k4": complete_graph(4),
    "antichain3": empty_graph(3),
    "bull": Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]),
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="gallery")
    args = parser.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for name, g in GALLERY.items():
        result = recognize(g)
        if result is None:
            print(f"{name}: rejected, skipped")
            continue
        ordering, rep = result
        path = os.path.join(args.out, f"{name}.svg")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(emit_representation(rep, "svg"))
        print(f"{name}: apex ordering {' '.join(map(str, ordering))} -> {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
