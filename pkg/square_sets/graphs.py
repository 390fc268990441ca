"""Graph utilities for looking at which pair sums of a set are square."""

from __future__ import annotations

from itertools import combinations
from pathlib import Path
from typing import Optional

import networkx as nx

try:
    from graphviz import Graph

    GRAPHVIZ_AVAILABLE = True
except ImportError:  # pragma: no cover - optional dependency
    GRAPHVIZ_AVAILABLE = False
    Graph = None  # type: ignore[assignment]

from .arith import square_root
from .models import SquareSet
from .sets import rank_key


def build_pair_graph(s: SquareSet) -> nx.Graph:
    """Complete graph on the elements; every edge carries ``sum``, ``square`` and ``root``."""
    graph = nx.Graph()
    for value in s.elements:
        graph.add_node(value, negative=value < 0, odd=value % 2 == 1)
    for left, right in combinations(s.elements, 2):
        root = square_root(left + right)
        graph.add_edge(left, right, sum=left + right, square=root is not None, root=root)
    return graph


def square_pair_graph(s: SquareSet) -> nx.Graph:
    """Only the edges whose pair sum is a square."""
    full = build_pair_graph(s)
    graph = nx.Graph()
    graph.add_nodes_from(full.nodes(data=True))
    graph.add_edges_from((u, v, d) for u, v, d in full.edges(data=True) if d["square"])
    return graph


def largest_square_subset(s: SquareSet) -> Optional[SquareSet]:
    """Largest subset whose pair sums are all square; ``None`` if no pair is square."""
    graph = square_pair_graph(s)
    best: Optional[SquareSet] = None
    for clique in nx.find_cliques(graph):
        if len(clique) < 2:
            continue
        candidate = SquareSet.from_values(clique)
        if best is None or (-candidate.n, rank_key(candidate)) < (-best.n, rank_key(best)):
            best = candidate
    return best


def render_pair_graph(s: SquareSet, output: Path, *, dpi: int = 160) -> Optional[Path]:
    if not GRAPHVIZ_AVAILABLE:  # pragma: no cover
        return None

    graph = build_pair_graph(s)
    dot = Graph(comment=f"Pair sums of {s.to_literal()}")
    dot.attr(layout="circo")
    dot.graph_attr.update(
        pad="0.4",
        bgcolor="#ffffff",
        fontname="Arial",
        fontsize="14",
        labelloc="t",
        label=f"{sum(1 for *_, d in graph.edges(data=True) if d['square'])}"
        f" / {graph.number_of_edges()} square pairs",
        dpi=str(dpi),
    )
    dot.node_attr.update(fontname="Arial", fontsize="11", style="filled,rounded", shape="box")
    dot.edge_attr.update(fontname="Arial", fontsize="9")

    for node, data in graph.nodes(data=True):
        if data["negative"]:
            dot.node(str(node), str(node), fillcolor="#fee2e2", color="#b91c1c", penwidth="1.8")
        elif data["odd"]:
            dot.node(str(node), str(node), fillcolor="#fef3c7", color="#d97706", penwidth="1.8")
        else:
            dot.node(str(node), str(node), fillcolor="#dbeafe", color="#1d4ed8", penwidth="1.8")

    for left, right, data in graph.edges(data=True):
        if data["square"]:
            dot.edge(str(left), str(right), label=f"{data['root']}²", color="#059669", penwidth="1.6")
        else:
            dot.edge(str(left), str(right), style="dashed", color="#cbd5e1", penwidth="0.9")

    filename = Path(output)
    fmt = filename.suffix.lstrip(".") or "svg"
    rendered = dot.render(filename.with_suffix(""), format=fmt, cleanup=True)
    return Path(rendered)
