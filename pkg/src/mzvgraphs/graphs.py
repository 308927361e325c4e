"""Kontsevich graphs built from tree recipes, with deterministic edge order.

A Kontsevich graph of weight n has two external nodes A and B of outdegree
zero, n internal nodes of outdegree two, and an explicitly ordered list of
2n directed edges.  The constructions here mirror the tree calculus: the
base ladder rung for ``e``, a wedge grafted onto an external node for
``p``/``q`` (whose two new edges are appended after all existing ones), and
join glues two graphs along their external nodes, concatenating edge lists.

Graphs carry the canonical tree they were built from as provenance; sums of
graphs are keyed by that tree.  Edge order is part of the value, and no
graph-isomorphism identification is performed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .trees import RUNG, Append, Join, Prepend, Rung, SyntaxTree, TreeSum, canonicalize, render, tree_key

EXTERNAL_A = "A"
EXTERNAL_B = "B"

#: Exact weight of the single wedge graph (one internal node, edges to A, B).
WEDGE_VALUE = Fraction(-1, 2)


@dataclass(frozen=True, slots=True)
class KGraph:
    """A Kontsevich graph with ordered edges and optional provenance tree."""

    internal: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    provenance: Optional[SyntaxTree] = None

    def __post_init__(self):
        nodes = set(self.internal) | {EXTERNAL_A, EXTERNAL_B}
        if len(nodes) != len(self.internal) + 2:
            raise ValueError("node ids must be distinct from each other and from A, B")
        if len(self.edges) != 2 * len(self.internal):
            raise ValueError("a weight-n graph must have exactly 2n edges")
        for src, dst in self.edges:
            if src not in nodes or dst not in nodes:
                raise ValueError(f"edge ({src},{dst}) mentions an unknown node")
        for v in self.internal:
            if self.outdegree(v) != 2:
                raise ValueError(f"internal node {v} must have outdegree 2")
        for v in (EXTERNAL_A, EXTERNAL_B):
            if self.outdegree(v) != 0:
                raise ValueError(f"external node {v} must have outdegree 0")

    @property
    def external(self) -> tuple[str, str]:
        return (EXTERNAL_A, EXTERNAL_B)

    @property
    def weight(self) -> int:
        return len(self.internal)

    def outdegree(self, node: str) -> int:
        return sum(1 for src, _ in self.edges if src == node)


def base_ladder() -> KGraph:
    """The single ladder rung: x <-> y with legs x -> A, y -> B."""
    return KGraph(
        internal=("v1", "v2"),
        edges=(("v1", "v2"), ("v2", "v1"), ("v1", EXTERNAL_A), ("v2", EXTERNAL_B)),
        provenance=RUNG,
    )


def wedge_graph() -> KGraph:
    """The weight-1 wedge: one internal node with edges to A then B.

    Lives outside the tree-built family (no provenance); its weight is the
    exact constant ``WEDGE_VALUE`` = -1/2.
    """
    return KGraph(internal=("v1",), edges=(("v1", EXTERNAL_A), ("v1", EXTERNAL_B)))


def _graft_wedge(g: KGraph, absorbed: str, prov: Optional[SyntaxTree]) -> KGraph:
    # The old external node `absorbed` becomes the new internal wedge node;
    # a fresh external node takes over its name.  New edges go last.
    new = f"v{len(g.internal) + 1}"
    edges = tuple((src, new if dst == absorbed else dst) for src, dst in g.edges)
    edges += ((new, EXTERNAL_A), (new, EXTERNAL_B))
    return KGraph(internal=g.internal + (new,), edges=edges, provenance=prov)


def prepend_graph(g: KGraph) -> KGraph:
    """Graft a wedge that absorbs the external node B; weight +1.

    The two new edges, wedge -> A and wedge -> B, are appended after all
    existing edges in that order.
    """
    prov = canonicalize(Prepend(g.provenance)) if g.provenance is not None else None
    return _graft_wedge(g, EXTERNAL_B, prov)


def append_graph(g: KGraph) -> KGraph:
    """Graft a wedge that absorbs the external node A; weight +1."""
    prov = canonicalize(Append(g.provenance)) if g.provenance is not None else None
    return _graft_wedge(g, EXTERNAL_A, prov)


def join_graphs(g1: KGraph, g2: KGraph) -> KGraph:
    """Glue two graphs along A and B; g1's edges precede g2's.

    Internal ids of g2 are shifted after g1's, so ids still read v1, v2, ...
    in construction order.
    """
    shift = len(g1.internal)
    renamed = {v: f"v{shift + i + 1}" for i, v in enumerate(g2.internal)}
    g2_edges = tuple((renamed.get(s, s), renamed.get(d, d)) for s, d in g2.edges)
    if g1.provenance is not None and g2.provenance is not None:
        prov = canonicalize(Join((g1.provenance, g2.provenance)))
    else:
        prov = None
    return KGraph(
        internal=g1.internal + tuple(renamed[v] for v in g2.internal),
        edges=g1.edges + g2_edges,
        provenance=prov,
    )


def build_graph(t: SyntaxTree) -> KGraph:
    """Construct the graph of a single tree, folding joins in canonical order."""
    t = canonicalize(t)
    if isinstance(t, Rung):
        return base_ladder()
    if isinstance(t, Prepend):
        return prepend_graph(build_graph(t.child))
    if isinstance(t, Append):
        return append_graph(build_graph(t.child))
    graph = build_graph(t.children[0])
    for child in t.children[1:]:
        graph = join_graphs(graph, build_graph(child))
    return graph


class GraphSum:
    """A Q-linear combination of graphs keyed by their provenance trees."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[Fraction, KGraph]] = ()):
        acc: dict[SyntaxTree, tuple[Fraction, KGraph]] = {}
        for coeff, graph in terms:
            if graph.provenance is None:
                raise ValueError("graphs in a sum must carry a provenance tree")
            key = graph.provenance
            prior = acc.get(key)
            total = (prior[0] if prior else Fraction(0)) + coeff
            if total:
                acc[key] = (total, graph)
            else:
                acc.pop(key, None)
        self._terms = acc

    def items(self) -> list[tuple[Fraction, KGraph]]:
        ordered = sorted(self._terms.items(), key=lambda kv: tree_key(kv[0]), reverse=True)
        return [pair for _, pair in ordered]

    def coefficient(self, tree: SyntaxTree) -> Fraction:
        entry = self._terms.get(canonicalize(tree))
        return entry[0] if entry else Fraction(0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphSum):
            return NotImplemented
        return self._terms == other._terms


def graph_of_tree(t: SyntaxTree | TreeSum) -> GraphSum:
    """Build the graph combination of a tree or sum of trees."""
    if isinstance(t, SyntaxTree):
        t = TreeSum.single(t)
    return GraphSum((coeff, build_graph(tree)) for tree, coeff in t.items())


def emit_graph(g: KGraph, format: str = "dot") -> str:
    """Serialize a graph as graphviz DOT or JSON.

    DOT renders externals as boxes and internals as circles, with the edge
    order index as label.  JSON uses the stable field order external,
    internal, edges, provenance.
    """
    if format == "json":
        payload = {
            "external": [EXTERNAL_A, EXTERNAL_B],
            "internal": list(g.internal),
            "edges": [[src, dst] for src, dst in g.edges],
            "provenance": render(g.provenance) if g.provenance is not None else None,
        }
        return json.dumps(payload, separators=(",", ":"))
    if format == "dot":
        lines = ["digraph kontsevich_graph {"]
        for node in (EXTERNAL_A, EXTERNAL_B):
            lines.append(f'    {node} [shape=box,label="{node}"];')
        for node in g.internal:
            lines.append(f'    {node} [shape=circle,label="{node}"];')
        for i, (src, dst) in enumerate(g.edges, start=1):
            lines.append(f"    {src} -> {dst} [label={i}];")
        lines.append("}")
        return "\n".join(lines)
    raise ValueError(f"unknown graph format {format!r}; expected dot or json")
