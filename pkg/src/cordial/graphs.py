"""Simple undirected graphs, vertex labelings, and the cordiality predicate.

A labeling assigns a group element to every vertex; each edge inherits the sum
of its endpoint labels.  A labeling is cordial when both the vertex-label and
edge-label frequencies are spread as evenly as possible (max difference 1).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .groups import Element, FiniteAbelianGroup, format_element

Edge = Tuple[int, int]


def _canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range")
            e = _canonical_edge(u, v)
            if e in seen:
                raise ValueError(f"parallel edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> List[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def leaves(self) -> List[int]:
        return [v for v, d in enumerate(self.degrees()) if d == 1]

    def has_edge(self, u: int, v: int) -> bool:
        return _canonical_edge(u, v) in set(self.edges)

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        adj = self.adjacency()
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.vertex_count

    def is_tree(self) -> bool:
        if self.vertex_count == 0:
            return True
        return self.edge_count == self.vertex_count - 1 and self.is_connected()

    def is_path_graph(self) -> bool:
        return self.is_tree() and self.max_degree() <= 2

    def remove_vertices(self, removed: Iterable[int]) -> Tuple["Graph", List[int]]:
        """Induced subgraph on the complement; returns (subgraph, old index of each new vertex)."""
        removed_set = set(removed)
        keep = [v for v in range(self.vertex_count) if v not in removed_set]
        new_of_old = {old: new for new, old in enumerate(keep)}
        edges = [
            (new_of_old[u], new_of_old[v])
            for u, v in self.edges
            if u not in removed_set and v not in removed_set
        ]
        return Graph(len(keep), tuple(edges)), keep


def from_edge_list(pairs: Sequence[Tuple[int, int]], vertex_count: Optional[int] = None) -> Graph:
    """Build a graph from (u, v) pairs; vertex count defaults to 1 + max index."""
    pairs = [(int(u), int(v)) for u, v in pairs]
    if vertex_count is None:
        vertex_count = 1 + max((max(u, v) for u, v in pairs), default=-1)
    return Graph(vertex_count, tuple(pairs))


def path(n: int) -> Graph:
    """Path P_n on n vertices (n - 1 edges)."""
    if n < 0:
        raise ValueError("vertex count must be >= 0")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Graph:
    """Star S_n: center vertex 0 with n leaves."""
    if n < 0:
        raise ValueError("leaf count must be >= 0")
    return Graph(n + 1, tuple((0, i) for i in range(1, n + 1)))


def friendship(n: int) -> Graph:
    """Friendship graph F_n: n triangles sharing the central vertex 0.

    Triangle i uses vertices (2i+1, 2i+2), so F_n has 2n+1 vertices and 3n edges.
    """
    if n < 0:
        raise ValueError("triangle count must be >= 0")
    edges = []
    for i in range(n):
        x, y = 2 * i + 1, 2 * i + 2
        edges += [(0, x), (0, y), (x, y)]
    return Graph(2 * n + 1, tuple(edges))


@dataclass(frozen=True)
class Labeling:
    """A total vertex -> group element map over a fixed graph."""

    graph: Graph
    group: FiniteAbelianGroup
    vertex_labels: Tuple[Element, ...]

    def __post_init__(self) -> None:
        if len(self.vertex_labels) != self.graph.vertex_count:
            raise ValueError("labeling must cover every vertex")
        for el in self.vertex_labels:
            if not self.group.contains(el):
                raise ValueError(f"label {el!r} not in group Z_{self.group.orders}")
        object.__setattr__(self, "vertex_labels", tuple(self.vertex_labels))

    def edge_label(self, e: Edge) -> Element:
        return induced_edge_label(self, e)

    def edge_labels(self) -> List[Element]:
        return [induced_edge_label(self, e) for e in self.graph.edges]


def induced_edge_label(labeling: Labeling, e: Edge) -> Element:
    """Sum of the endpoint labels of an edge of the labeled graph."""
    e = _canonical_edge(*e)
    if e not in set(labeling.graph.edges):
        raise ValueError(f"edge {e} not in graph")
    u, v = e
    return labeling.group.add(labeling.vertex_labels[u], labeling.vertex_labels[v])


@dataclass(frozen=True)
class FrequencyProfile:
    """Occurrence counts for every group element (zero counts included)."""

    counts: Tuple[Tuple[Element, int], ...]

    @classmethod
    def of(cls, group: FiniteAbelianGroup, values: Iterable[Element]) -> "FrequencyProfile":
        counts = {el: 0 for el in group.elements()}
        for v in values:
            counts[v] += 1
        return cls(tuple(sorted(counts.items())))

    def as_dict(self) -> Dict[Element, int]:
        return dict(self.counts)

    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def spread(self) -> int:
        values = [c for _, c in self.counts]
        return max(values) - min(values)

    def __getitem__(self, el: Element) -> int:
        return self.as_dict()[el]


@dataclass(frozen=True)
class CordialityReport:
    """Cordiality verdict with the frequency evidence behind it.

    q_V/r_V (and q_E/r_E) are the division-algorithm quotient and remainder of
    the vertex (edge) count by the group order: a cordial labeling has exactly
    r equal to q+1 occurrences and the rest equal to q.
    """

    vertex_cordial: bool
    edge_cordial: bool
    f_V: FrequencyProfile
    f_E: FrequencyProfile
    q_V: int
    r_V: int
    q_E: int
    r_E: int

    @property
    def cordial(self) -> bool:
        return self.vertex_cordial and self.edge_cordial


def vertex_profile(labeling: Labeling) -> FrequencyProfile:
    return FrequencyProfile.of(labeling.group, labeling.vertex_labels)


def edge_profile(labeling: Labeling) -> FrequencyProfile:
    return FrequencyProfile.of(labeling.group, labeling.edge_labels())


def is_cordial(labeling: Labeling) -> CordialityReport:
    """Evaluate cordiality: both frequency spreads at most 1."""
    m = labeling.group.order
    f_v = vertex_profile(labeling)
    f_e = edge_profile(labeling)
    q_v, r_v = divmod(labeling.graph.vertex_count, m)
    q_e, r_e = divmod(labeling.graph.edge_count, m)
    return CordialityReport(
        vertex_cordial=f_v.spread() <= 1,
        edge_cordial=f_e.spread() <= 1,
        f_V=f_v,
        f_E=f_e,
        q_V=q_v,
        r_V=r_v,
        q_E=q_e,
        r_E=r_e,
    )


def shift_labels(labeling: Labeling, s0: Element) -> Labeling:
    """Shift every vertex label by -s0; preserves cordiality."""
    g = labeling.group
    if not g.contains(s0):
        raise ValueError(f"{s0!r} is not an element of Z_{g.orders}")
    return Labeling(
        labeling.graph, g, tuple(g.sub(el, s0) for el in labeling.vertex_labels)
    )


def apply_group_map(labeling: Labeling, phi: Dict[Element, Element]) -> Labeling:
    """Relabel vertices through a bijection of the group onto itself."""
    g = labeling.group
    domain = set(g.elements())
    if set(phi.keys()) != domain or set(phi.values()) != domain:
        raise ValueError("map must be a bijection of the group onto itself")
    return Labeling(labeling.graph, g, tuple(phi[el] for el in labeling.vertex_labels))


def _bfs_order(graph: Graph) -> List[int]:
    adj = graph.adjacency()
    order: List[int] = []
    seen = [False] * graph.vertex_count
    for start in range(graph.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(adj[u]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def greedy_large_group_label(graph: Graph, group: FiniteAbelianGroup) -> Labeling:
    """Label a graph over a group large enough that all labels can be distinct.

    Requires |A| > |V| + |E| * max_degree - 1.  Vertices are visited in BFS
    order from vertex 0; each label is chosen to avoid every used vertex label
    and every element that would duplicate an existing edge label.  The output
    has injective vertex labels and injective edge labels, hence is cordial.
    """
    n_v = graph.vertex_count
    n_e = graph.edge_count
    bound = n_v + n_e * graph.max_degree() - 1
    if group.order <= bound:
        raise ValueError(
            f"group order {group.order} must exceed |V| + |E|*maxdeg - 1 = {bound}"
        )
    adj = graph.adjacency()
    labels: List[Optional[Element]] = [None] * n_v
    used_vertex = set()
    used_edge = set()
    for v in _bfs_order(graph):
        labeled_neighbors = [u for u in adj[v] if labels[u] is not None]
        forbidden = set(used_vertex)
        for u in labeled_neighbors:
            for e_label in used_edge:
                forbidden.add(group.sub(e_label, labels[u]))
        choice = None
        for cand in group.elements():
            if cand not in forbidden:
                choice = cand
                break
        if choice is None:  # cannot happen under the size bound
            raise RuntimeError("exclusion argument failed; bound violated internally")
        labels[v] = choice
        used_vertex.add(choice)
        for u in labeled_neighbors:
            used_edge.add(group.add(choice, labels[u]))
    return Labeling(graph, group, tuple(labels))


def labeling_to_json_dict(labeling: Labeling, report: Optional[CordialityReport] = None) -> Dict:
    """JSON-ready view of a labeling plus its cordiality evidence."""
    if report is None:
        report = is_cordial(labeling)
    g = labeling.group
    return {
        "group": list(g.orders),
        "vertex_labels": [list(el) for el in labeling.vertex_labels],
        "edge_labels": [
            {"edge": [u, v], "label": list(induced_edge_label(labeling, (u, v)))}
            for u, v in labeling.graph.edges
        ],
        "cordial": report.cordial,
        "vertex_cordial": report.vertex_cordial,
        "edge_cordial": report.edge_cordial,
        "f_V": {format_element(g, el): c for el, c in report.f_V.counts},
        "f_E": {format_element(g, el): c for el, c in report.f_E.counts},
    }


def labeling_to_dot(labeling: Labeling, name: str = "G") -> str:
    """Graphviz DOT rendering with vertex and induced edge labels."""
    g = labeling.group
    lines = [f"graph {name} {{"]
    for v in range(labeling.graph.vertex_count):
        lines.append(f'  v{v} [label="{format_element(g, labeling.vertex_labels[v])}"];')
    for u, v in labeling.graph.edges:
        el = induced_edge_label(labeling, (u, v))
        lines.append(f'  v{u} -- v{v} [label="{format_element(g, el)}"];')
    lines.append("}")
    return "\n".join(lines)


def graph_to_dot(graph: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(graph.vertex_count):
        lines.append(f"  v{v};")
    for u, v in graph.edges:
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines)


def parse_edge_list(text: str) -> Graph:
    """Parse the one-`u v`-pair-per-line edge list format (0-indexed)."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer vertex in {raw!r}") from exc
    return from_edge_list(pairs)
