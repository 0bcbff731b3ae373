#!/usr/bin/env python3
"""Write every non-isomorphic graph of a given order as sorted graph6 lines.

Graphs are grown one vertex at a time from the orbit representatives of the
previous order and deduplicated by nauty certificates (pynauty). Each output
graph is nauty's canonical relabeling, encoded by networkx.

    python3 tools/gen_corpus.py 8 data/graph8.g6
"""

import argparse
import sys

import networkx as nx
import pynauty

KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}


def to_pynauty(n, adjacency):
    return pynauty.Graph(n, directed=False, adjacency_dict={v: sorted(adjacency[v]) for v in range(n)})


def extend(n, graphs):
    """All graphs on n + 1 vertices, one per isomorphism class."""
    seen = {}
    for adjacency in graphs:
        for mask in range(1 << n):
            grown = [set(nbrs) for nbrs in adjacency] + [set()]
            for v in range(n):
                if mask >> v & 1:
                    grown[v].add(n)
                    grown[n].add(v)
            cert = pynauty.certificate(to_pynauty(n + 1, grown))
            if cert not in seen:
                seen[cert] = grown
    return list(seen.values())


def canonical_graph6(n, adjacency):
    labels = pynauty.canon_label(to_pynauty(n, adjacency))
    position = {old: new for new, old in enumerate(labels)}
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from((position[u], position[v]) for u in range(n) for v in adjacency[u] if u < v)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("order", type=int)
    parser.add_argument("output")
    args = parser.parse_args()
    if not 1 <= args.order <= 9:
        parser.error("order must be between 1 and 9")

    graphs = [[set()]]
    for n in range(1, args.order):
        graphs = extend(n, graphs)
    lines = sorted(canonical_graph6(args.order, g) for g in graphs)
    if len(set(lines)) != len(lines) or len(lines) != KNOWN_COUNTS[args.order]:
        sys.exit(f"generated {len(lines)} graphs, expected {KNOWN_COUNTS[args.order]}")
    with open(args.output, "w", encoding="ascii") as out:
        out.write("".join(line + "\n" for line in lines))
    print(f"{args.output}: {len(lines)} graphs")


if __name__ == "__main__":
    main()
