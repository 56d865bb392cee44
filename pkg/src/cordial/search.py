"""Exhaustive/backtracking search for cordial labelings.

Ground truth for everything else in the package: depth-first assignment of
group elements to vertices with incremental frequency-ceiling pruning, an
optional fixed partial assignment, and two sound symmetry reductions (fix one
vertex's label to zero via label shifting; quotient interchangeable group
values via automorphisms).  Budgets are counted in search nodes so runs are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .graphs import Graph, Labeling, is_cordial
from .groups import Element, FiniteAbelianGroup


def _proper_divisors(m: int) -> List[int]:
    return [d for d in range(1, m) if m % d == 0]


@dataclass
class SearchConfig:
    """Knobs for the labeling search.

    fix_zero pins a maximum-degree vertex to the zero element (sound: any
    cordial labeling can be shifted).  group_symmetry quotients value
    relabelings: for the Klein group every permutation of {a, b, c} is an
    automorphism, so nonzero values are introduced in a fixed order; for
    cyclic groups the automorphisms are the unit scalings, so the first
    nonzero label can be normalized to a divisor of m (its orbit
    representative).  Both reductions are disabled automatically when explicit
    fixed labels already break the value symmetry.
    """

    node_budget: int = 2_000_000
    fix_zero: bool = True
    group_symmetry: bool = True
    balanced_value_order: bool = True
    fixed_labels: Dict[int, Element] = field(default_factory=dict)


@dataclass(frozen=True)
class SearchResult:
    status: str  # "found" | "infeasible" | "budget_exhausted"
    labeling: Optional[Labeling]
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == "found"


def _vertex_order(graph: Graph, seeds: List[int]) -> List[int]:
    """Seeds first, then repeatedly the vertex most attached to placed ones."""
    n = graph.vertex_count
    adj = graph.adjacency()
    degree = [len(a) for a in adj]
    placed = [False] * n
    order: List[int] = []
    for s in seeds:
        placed[s] = True
        order.append(s)
    if not order and n > 0:
        start = max(range(n), key=lambda v: (degree[v], -v))
        placed[start] = True
        order.append(start)
    while len(order) < n:
        best = None
        best_key = None
        for v in range(n):
            if placed[v]:
                continue
            attached = sum(1 for u in adj[v] if placed[u])
            key = (attached, degree[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        assert best is not None
        placed[best] = True
        order.append(best)
    return order


def search_cordial(
    graph: Graph,
    group: FiniteAbelianGroup,
    config: Optional[SearchConfig] = None,
) -> SearchResult:
    """Find a cordial labeling, prove none exists, or run out of budget.

    "infeasible" is reported only after the (symmetry-reduced) space is fully
    exhausted; any budget overrun downgrades the verdict to
    "budget_exhausted".
    """
    cfg = config or SearchConfig()
    n = graph.vertex_count
    m = group.order
    elements = list(group.elements())
    index_of = {el: i for i, el in enumerate(elements)}
    zero_id = index_of[group.zero]
    if n == 0:
        return SearchResult("found", Labeling(graph, group, ()), 0)

    add = [[index_of[group.add(x, y)] for y in elements] for x in elements]

    fixed: Dict[int, int] = {}
    for v, el in cfg.fixed_labels.items():
        if not (0 <= v < n):
            raise ValueError(f"fixed vertex {v} out of range")
        if not group.contains(el):
            raise ValueError(f"fixed label {el!r} is not in Z_{group.orders}")
        fixed[v] = index_of[el]
    if cfg.fix_zero and not fixed:
        degrees = graph.degrees()
        anchor = max(range(n), key=lambda v: (degrees[v], -v))
        fixed[anchor] = zero_id

    # Value-symmetry mode; only sound while no fixed nonzero labels exist.
    symmetry_mode = None
    if cfg.group_symmetry and all(x == zero_id for x in fixed.values()):
        if group.orders == (2, 2):
            symmetry_mode = "klein"
        elif group.is_cyclic() and m > 2:
            symmetry_mode = "cyclic"
    nonzero_ids = [i for i in range(m) if i != zero_id]
    divisor_ids = (
        [index_of[group.element((d,))] for d in _proper_divisors(m)]
        if group.is_cyclic()
        else []
    )

    order = _vertex_order(graph, sorted(fixed))
    pos_of = {v: i for i, v in enumerate(order)}
    adj = graph.adjacency()
    # For each position, neighbors that are already placed when it is reached.
    back_neighbors: List[List[int]] = []
    for i, v in enumerate(order):
        back_neighbors.append([u for u in adj[v] if pos_of[u] < i])

    n_e = graph.edge_count
    q_v, r_v = divmod(n, m)
    q_e, r_e = divmod(n_e, m)
    cap_v = q_v + (1 if r_v else 0)
    cap_e = q_e + (1 if r_e else 0)

    f_v = [0] * m
    f_e = [0] * m
    labels = [-1] * n
    state = {
        "over_v": 0,
        "over_e": 0,
        "deficit_v": q_v * m,
        "deficit_e": q_e * m,
        "rem_v": n,
        "rem_e": n_e,
        "nodes": 0,
        "budget_hit": False,
        "intro_count": 0,  # klein: how many of a,b,c have appeared
        "intro_done": False,  # cyclic: whether a nonzero label appeared
    }

    def place_vertex(x: int) -> bool:
        """Account one vertex label; undo is symmetric. False = pruned."""
        f_v[x] += 1
        if f_v[x] > cap_v:
            f_v[x] -= 1
            return False
        if r_v and f_v[x] == cap_v:
            state["over_v"] += 1
            if state["over_v"] > r_v:
                state["over_v"] -= 1
                f_v[x] -= 1
                return False
        if f_v[x] <= q_v:
            state["deficit_v"] -= 1
        state["rem_v"] -= 1
        if state["deficit_v"] > state["rem_v"]:
            unplace_vertex(x)
            return False
        return True

    def unplace_vertex(x: int) -> None:
        state["rem_v"] += 1
        if f_v[x] <= q_v:
            state["deficit_v"] += 1
        if r_v and f_v[x] == cap_v:
            state["over_v"] -= 1
        f_v[x] -= 1

    def place_edge(x: int) -> bool:
        f_e[x] += 1
        if f_e[x] > cap_e:
            f_e[x] -= 1
            return False
        if r_e and f_e[x] == cap_e:
            state["over_e"] += 1
            if state["over_e"] > r_e:
                state["over_e"] -= 1
                f_e[x] -= 1
                return False
        if f_e[x] <= q_e:
            state["deficit_e"] -= 1
        state["rem_e"] -= 1
        if state["deficit_e"] > state["rem_e"]:
            unplace_edge(x)
            return False
        return True

    def unplace_edge(x: int) -> None:
        state["rem_e"] += 1
        if f_e[x] <= q_e:
            state["deficit_e"] += 1
        if r_e and f_e[x] == cap_e:
            state["over_e"] -= 1
        f_e[x] -= 1

    def try_assign(pos: int, x: int) -> Optional[List[int]]:
        """Place label x at order[pos]; returns placed edge labels or None."""
        v = order[pos]
        if not place_vertex(x):
            return None
        placed_edges: List[int] = []
        for u in back_neighbors[pos]:
            el = add[x][labels[u]]
            if place_edge(el):
                placed_edges.append(el)
            else:
                for e in reversed(placed_edges):
                    unplace_edge(e)
                unplace_vertex(x)
                return None
        labels[v] = x
        return placed_edges

    def unassign(pos: int, x: int, placed_edges: List[int]) -> None:
        labels[order[pos]] = -1
        for e in reversed(placed_edges):
            unplace_edge(e)
        unplace_vertex(x)

    def candidates(pos: int) -> List[int]:
        v = order[pos]
        if v in fixed:
            return [fixed[v]]
        if symmetry_mode == "klein":
            cands = [zero_id] + nonzero_ids[: state["intro_count"] + 1]
        elif symmetry_mode == "cyclic" and not state["intro_done"]:
            cands = [zero_id] + divisor_ids
        else:
            cands = list(range(m))
        if cfg.balanced_value_order:
            cands = sorted(cands, key=lambda x: (f_v[x], x))
        return cands

    def dfs(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for x in candidates(pos):
            state["nodes"] += 1
            if state["nodes"] > cfg.node_budget:
                state["budget_hit"] = True
                return False
            intro_mark = False
            if v not in fixed and x != zero_id:
                if (
                    symmetry_mode == "klein"
                    and state["intro_count"] < len(nonzero_ids)
                    and x == nonzero_ids[state["intro_count"]]
                ):
                    state["intro_count"] += 1
                    intro_mark = True
                elif symmetry_mode == "cyclic" and not state["intro_done"]:
                    state["intro_done"] = True
                    intro_mark = True
            placed = try_assign(pos, x)
            if placed is not None:
                if dfs(pos + 1):
                    return True
                unassign(pos, x, placed)
            if intro_mark:
                if symmetry_mode == "klein":
                    state["intro_count"] -= 1
                else:
                    state["intro_done"] = False
            if state["budget_hit"]:
                return False
        return False

    if dfs(0):
        labeling = Labeling(graph, group, tuple(elements[x] for x in labels))
        assert is_cordial(labeling).cordial, "search returned a non-cordial labeling"
        return SearchResult("found", labeling, state["nodes"])
    if state["budget_hit"]:
        return SearchResult("budget_exhausted", None, state["nodes"])
    return SearchResult("infeasible", None, state["nodes"])
