"""Brute-force reference machinery for cross-checking the generator.

Everything in this module works on plain adjacency lists: free trees are
enumerated by the classical level-sequence successor scheme, transmissions
are computed by one breadth-first search per vertex, and isomorphism is
decided through rooted canonical encodings.  None of the incremental
transmission arithmetic used by the generator appears here, which is what
makes agreement between the two paths meaningful evidence.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence

__all__ = [
    "AdjacencyTree",
    "MAX_ENUMERATION_ORDER",
    "enumerate_free_trees",
    "enumerate_rooted_trees",
    "prufer_to_edges",
    "transmissions_bfs",
    "is_ti_graph",
    "canonical_form",
]

# Free-tree counts grow like 2.96^n; beyond this order a single call would
# run for hours, which is never what a verification pass wants.
MAX_ENUMERATION_ORDER = 22


@dataclass(frozen=True)
class AdjacencyTree:
    """Unrooted tree on labels 0..order-1 stored as adjacency lists."""

    order: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, order: int, edges: Sequence[tuple[int, int]]) -> "AdjacencyTree":
        """Build a tree from an edge list, validating that it is one."""
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        if len(edges) != order - 1:
            raise ValueError(f"a tree on {order} vertices needs {order - 1} edges, got {len(edges)}")
        neighbors: list[list[int]] = [[] for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            neighbors[u].append(v)
            neighbors[v].append(u)
        tree = cls(order, tuple(tuple(ns) for ns in neighbors))
        if _reachable_count(tree, 0) != order:
            raise ValueError("edge list is not connected")
        return tree


def _reachable_count(tree: AdjacencyTree, start: int) -> int:
    seen = bytearray(tree.order)
    seen[start] = 1
    queue = deque([start])
    count = 1
    while queue:
        v = queue.popleft()
        for w in tree.adjacency[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count


# ----------------------------------------------------------------------
# Enumeration by level sequences
# ----------------------------------------------------------------------
#
# A rooted tree on n vertices is stored as the sequence of vertex levels
# in preorder, root first (level 0).  The canonical sequence of a rooted
# isomorphism class is the lexicographically largest one, and the
# Beyer-Hedetniemi successor steps through all canonical sequences in
# decreasing order starting from the path.  Free trees are the subset of
# rooted sequences singled out by the Wright-Richmond-Odlyzko-McKay
# conditions on the first root subtree, with a jump rule that skips the
# rooted sequences sharing a rejected prefix.


def _next_rooted_sequence(seq: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a canonical rooted level sequence, or None at the star."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split_first_subtree(seq: list[int]) -> tuple[list[int], list[int]]:
    """Split into (first root subtree re-rooted, remainder including root)."""
    m = len(seq)
    ones = 0
    for i, level in enumerate(seq):
        if level == 1:
            ones += 1
            if ones == 2:
                m = i
                break
    left = [seq[i] - 1 for i in range(1, m)]
    rest = [0] + seq[m:]
    return left, rest


def _advance_free(seq: list[int]) -> list[int] | None:
    """Return seq if it encodes a free tree, else jump to the next one."""
    left, rest = _split_first_subtree(seq)
    left_height = max(left)
    rest_height = max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False
    if valid:
        return seq
    p = len(left)
    succ = _next_rooted_sequence(seq, p)
    if seq[p] > 2:
        new_left, _ = _split_first_subtree(succ)
        suffix = list(range(1, max(new_left) + 2))
        succ[-len(suffix):] = suffix
    return succ


def _tree_from_levels(seq: list[int]) -> AdjacencyTree:
    n = len(seq)
    neighbors: list[list[int]] = [[] for _ in range(n)]
    last_at_level = [0] * n
    for v in range(1, n):
        parent = last_at_level[seq[v] - 1]
        neighbors[parent].append(v)
        neighbors[v].append(parent)
        last_at_level[seq[v]] = v
    return AdjacencyTree(n, tuple(tuple(ns) for ns in neighbors))


def enumerate_free_trees(n: int, emit: Callable[[AdjacencyTree], None]) -> None:
    """Emit every free tree of order n exactly once up to isomorphism."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ENUMERATION_ORDER}, got {n}")
    if n == 1:
        emit(AdjacencyTree(1, ((),)))
        return
    if n == 2:
        emit(AdjacencyTree(2, ((1,), (0,))))
        return
    # Start from the path rooted at its center, the largest valid sequence.
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _advance_free(layout)
        if layout is not None:
            emit(_tree_from_levels(layout))
            layout = _next_rooted_sequence(layout)


def enumerate_rooted_trees(n: int, emit: Callable[[AdjacencyTree], None]) -> None:
    """Emit every rooted tree of order n once, rooted at vertex 0."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ENUMERATION_ORDER}, got {n}")
    layout: list[int] | None = list(range(n))
    while layout is not None:
        emit(_tree_from_levels(layout))
        layout = _next_rooted_sequence(layout)


def prufer_to_edges(code: Sequence[int]) -> list[tuple[int, int]]:
    """Decode a Prufer sequence into the edge list of a labeled tree.

    A sequence of length n-2 over {0..n-1} yields a tree on n vertices;
    the empty sequence yields the single edge on two vertices.
    """
    n = len(code) + 2
    degree = [1] * n
    for x in code:
        degree[x] += 1
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for x in code:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


# ----------------------------------------------------------------------
# Transmissions and canonical forms
# ----------------------------------------------------------------------


def _transmission_from(adjacency: Sequence[Sequence[int]], n: int, source: int) -> int:
    dist = [-1] * n
    dist[source] = 0
    total = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for w in adjacency[v]:
            if dist[w] < 0:
                dist[w] = d
                total += d
                queue.append(w)
    return total


def transmissions_bfs(tree: AdjacencyTree) -> list[int]:
    """Transmission of every vertex, one breadth-first search per vertex."""
    return [_transmission_from(tree.adjacency, tree.order, v) for v in range(tree.order)]


def is_ti_graph(tree: AdjacencyTree) -> bool:
    """True iff all vertex transmissions are pairwise distinct."""
    seen = set()
    for v in range(tree.order):
        t = _transmission_from(tree.adjacency, tree.order, v)
        if t in seen:
            return False
        seen.add(t)
    return True


def _subtree_sizes(tree: AdjacencyTree, root: int) -> list[int]:
    n = tree.order
    order_stack = [root]
    parent = [-1] * n
    visit = []
    while order_stack:
        v = order_stack.pop()
        visit.append(v)
        for w in tree.adjacency[v]:
            if w != parent[v]:
                parent[w] = v
                order_stack.append(w)
    size = [1] * n
    for v in reversed(visit):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    return size


def _centroids(tree: AdjacencyTree) -> list[int]:
    n = tree.order
    size = _subtree_sizes(tree, 0)
    parent_side = [n - s for s in size]
    best, centroids = n, []
    for v in range(n):
        heaviest = parent_side[v]
        for w in tree.adjacency[v]:
            if size[w] < size[v]:  # w is a child of v in the rooting at 0
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best, centroids = heaviest, [v]
        elif heaviest == best:
            centroids.append(v)
    return centroids


def _rooted_encoding(tree: AdjacencyTree, root: int) -> bytes:
    """Parenthesized encoding with children sorted by (subtree size, encoding)."""

    def encode(v: int, parent: int) -> bytes:
        subs = sorted(
            (encode(w, v) for w in tree.adjacency[v] if w != parent),
            key=lambda e: (len(e), e),
        )
        return b"(" + b"".join(subs) + b")"

    return encode(root, -1)


def canonical_form(tree: AdjacencyTree) -> bytes:
    """Byte string equal for two trees iff they are isomorphic.

    TI trees are encoded rooted at their unique minimum-transmission
    vertex; all other trees are encoded at the centroid (taking the
    smaller encoding when there are two).
    """
    tr = transmissions_bfs(tree)
    if len(set(tr)) == tree.order:
        return _rooted_encoding(tree, tr.index(min(tr)))
    return min(_rooted_encoding(tree, c) for c in _centroids(tree))
