"""Free tree enumeration and canonical tree codes.

Rooted trees are handled as level sequences: entry i is the depth of the i-th
vertex in preorder.  Enumeration walks the canonical level sequences in
reverse lexicographic order and keeps exactly one rooted representative per
free (unrooted) isomorphism class, so each tree on n vertices is produced
once.  Canonical codes root a tree at its center and sort subtrees, giving an
isomorphism-invariant key plus an explicit vertex-to-canonical-position map.
"""

from __future__ import annotations

from typing import Iterator, List, Optional, Tuple

from .graphs import Graph

TreeCode = Tuple[int, ...]


def _successor_rooted(seq: List[int], p: Optional[int] = None) -> Optional[List[int]]:
    """Next canonical rooted level sequence (ties of the classic successor rule)."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    nxt = list(seq)
    for i in range(p, len(nxt)):
        nxt[i] = nxt[i - p + q]
    return nxt


def _split_first_subtree(seq: List[int]) -> Tuple[List[int], List[int]]:
    """Split off the root's first subtree (re-rooted) from the rest of the tree."""
    second = len(seq)
    ones = 0
    for i, level in enumerate(seq):
        if level == 1:
            ones += 1
            if ones == 2:
                second = i
                break
    head = [seq[i] - 1 for i in range(1, second)]
    rest = [0] + seq[second:]
    return head, rest


def _is_free_canonical(seq: List[int]) -> bool:
    head, rest = _split_first_subtree(seq)
    head_height = max(head)
    rest_height = max(rest)
    if rest_height < head_height:
        return False
    if rest_height == head_height:
        if len(head) > len(rest):
            return False
        if len(head) == len(rest) and head > rest:
            return False
    return True


def _advance_to_free(seq: List[int]) -> Optional[List[int]]:
    """Either `seq` itself (if free-canonical) or the next free-canonical sequence."""
    if _is_free_canonical(seq):
        return seq
    head, _rest = _split_first_subtree(seq)
    p = len(head)
    nxt = _successor_rooted(seq, p)
    if seq[p] > 2 and nxt is not None:
        new_head, _ = _split_first_subtree(nxt)
        tail = list(range(1, max(new_head) + 2))
        nxt[len(nxt) - len(tail) :] = tail
    return nxt


def level_sequence_to_graph(seq: List[int]) -> Graph:
    """Graph for a level sequence: each vertex attaches to the nearest shallower one."""
    edges = []
    chain: List[int] = []
    for i, level in enumerate(seq):
        while len(chain) > level:
            chain.pop()
        if chain:
            edges.append((chain[-1], i))
        chain.append(i)
    return Graph(len(seq), tuple(edges))


def free_trees(n: int) -> Iterator[Graph]:
    """All free trees on n vertices, one representative per isomorphism class."""
    if n < 0:
        raise ValueError("vertex count must be >= 0")
    if n == 0:
        return
    if n == 1:
        yield Graph(1, ())
        return
    seq: Optional[List[int]] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _advance_to_free(seq)
        if seq is not None:
            yield level_sequence_to_graph(seq)
            seq = _successor_rooted(seq)


def count_free_trees(n: int) -> int:
    return sum(1 for _ in free_trees(n))


def tree_centers(graph: Graph) -> List[int]:
    """The one or two middle vertices of a tree (iterated leaf stripping)."""
    if not graph.is_tree():
        raise ValueError("centers are defined for trees only")
    n = graph.vertex_count
    if n == 0:
        return []
    if n <= 2:
        return list(range(n))
    adj = graph.adjacency()
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] == 1]
    removed = [False] * n
    remaining = n
    while remaining > 2:
        next_layer = []
        for v in layer:
            removed[v] = True
            remaining -= 1
            for u in adj[v]:
                if not removed[u]:
                    degree[u] -= 1
                    if degree[u] == 1:
                        next_layer.append(u)
        layer = next_layer
    return sorted(v for v in range(n) if not removed[v])


def _rooted_code(graph: Graph, root: int) -> Tuple[str, List[int]]:
    """Canonical parenthesis code rooted at `root` plus the canonical preorder.

    Children are ordered by descending subtree code, so isomorphic rooted trees
    get identical codes and corresponding canonical preorders.
    """
    adj = graph.adjacency()
    n = graph.vertex_count
    parent = [-1] * n
    order = [root]
    parent[root] = root
    for v in order:
        for u in sorted(adj[v]):
            if parent[u] == -1:
                parent[u] = v
                order.append(u)
    codes = [""] * n
    for v in reversed(order):
        children = [u for u in adj[v] if u != v and parent[u] == v]
        codes[v] = "(" + "".join(sorted((codes[u] for u in children), reverse=True)) + ")"
    preorder: List[int] = []

    def walk(v: int) -> None:
        preorder.append(v)
        children = [u for u in adj[v] if u != v and parent[u] == v]
        for u in sorted(children, key=lambda u: codes[u], reverse=True):
            walk(u)

    walk(root)
    return codes[root], preorder


def canonical_layout(graph: Graph) -> Tuple[TreeCode, List[int]]:
    """(canonical level sequence, position map) for a free tree.

    position[v] is the index of vertex v in the canonical arrangement, so two
    isomorphic trees map onto each other position-by-position.
    """
    if graph.vertex_count == 0:
        return (), []
    centers = tree_centers(graph)
    best: Optional[Tuple[str, List[int]]] = None
    for c in centers:
        cand = _rooted_code(graph, c)
        if best is None or cand[0] > best[0]:
            best = cand
    assert best is not None
    _, preorder = best
    depth = [0] * graph.vertex_count
    adj = graph.adjacency()
    root = preorder[0]
    seen = {root}
    queue = [root]
    while queue:
        v = queue.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                depth[u] = depth[v] + 1
                queue.append(u)
    code = tuple(depth[v] for v in preorder)
    position = [0] * graph.vertex_count
    for idx, v in enumerate(preorder):
        position[v] = idx
    return code, position


def canonical_code(graph: Graph) -> TreeCode:
    """Isomorphism-invariant key for a free tree."""
    return canonical_layout(graph)[0]


def prufer_to_tree(seq: List[int], n: int) -> Graph:
    """Decode a Prüfer sequence of length n-2 into a labeled tree on n vertices."""
    if n < 2:
        raise ValueError("Prüfer decoding needs n >= 2")
    if len(seq) != n - 2:
        raise ValueError("Prüfer sequence must have length n - 2")
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return Graph(n, tuple(edges))


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on n vertices from a seeded Prüfer draw."""
    import random

    if n < 0:
        raise ValueError("vertex count must be >= 0")
    if n <= 1:
        return Graph(n, ())
    if n == 2:
        return Graph(2, ((0, 1),))
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return prufer_to_tree(seq, n)
