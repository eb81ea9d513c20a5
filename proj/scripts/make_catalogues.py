#!/usr/bin/env python3
"""Regenerate data/catalogues/connected_N.g6 from the networkx graph atlas.

The atlas covers every graph up to order 7; we keep the connected ones,
one graph6 code per line, no ">>graph6<<" header. Expected counts per
order: 1, 1, 2, 6, 21, 112, 853.
"""

import os
import networkx as nx

EXPECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def main() -> None:
    out_dir = os.path.join(os.path.dirname(__file__), "..", "data", "catalogues")
    os.makedirs(out_dir, exist_ok=True)
    by_order = {n: [] for n in EXPECTED}
    for g in nx.graph_atlas_g()[1:]:
        n = g.number_of_nodes()
        if n in by_order and nx.is_connected(g):
            code = nx.to_graph6_bytes(g, header=False).decode().strip()
            by_order[n].append(code)
    for n, codes in by_order.items():
        assert len(codes) == EXPECTED[n], (n, len(codes))
        with open(os.path.join(out_dir, f"connected_{n}.g6"), "w") as f:
            f.write("\n".join(codes) + "\n")
    print("wrote", {n: len(c) for n, c in by_order.items()})


if __name__ == "__main__":
    main()
