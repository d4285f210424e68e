"""Maximum matchings and brute-force Tutte/Hall witnesses.

The blossom and Hopcroft-Karp routines decide matching existence; the
exhaustive subset scans produce certificates of non-existence.  Both are
kept independent so that each can serve as an oracle for the other.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graph_core import Bipartition, Graph, GraphError, bits, mask_of

SUBSET_CAP = 24


@dataclass(frozen=True)
class MatchingResult:
    matched_edges: frozenset[tuple[int, int]]
    is_perfect: bool

    @property
    def size(self) -> int:
        return len(self.matched_edges)


@dataclass(frozen=True)
class Witness:
    """A vertex set violating Tutte's (``kind="tutte"``) or Hall's condition."""

    kind: str
    set_s: tuple[int, ...]
    deficiency: int


def _result(g: Graph, pairs: Iterable[tuple[int, int]]) -> MatchingResult:
    edges = frozenset((min(u, v), max(u, v)) for u, v in pairs)
    covered: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v):
            raise AssertionError(f"matched pair {u}-{v} is not an edge")
        if u in covered or v in covered:
            raise AssertionError(f"matched edges share a vertex at {u}-{v}")
        covered.update((u, v))
    return MatchingResult(edges, 2 * len(edges) == g.order)


def max_matching_general(g: Graph) -> MatchingResult:
    """Maximum-cardinality matching by Edmonds' blossom contraction, O(V^3)."""
    n = g.order
    adj = [g.neighbors(v) for v in range(n)]
    match = [-1] * n

    def find_augmenting(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        in_tree = [False] * n
        in_tree[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            on_path = [False] * n
            while True:
                a = base[a]
                on_path[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if on_path[b]:
                    return b
                b = parent[match[b]]

        def mark_blossom(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
            while base[v] != b:
                in_blossom[base[v]] = in_blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle: contract the blossom onto its base
                    b = lca(v, to)
                    in_blossom = [False] * n
                    mark_blossom(v, b, to, in_blossom)
                    mark_blossom(to, b, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = b
                            if not in_tree[i]:
                                in_tree[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augment along the alternating path ending at ``to``
                        while to != -1:
                            pv = parent[to]
                            nxt = match[pv]
                            match[to] = pv
                            match[pv] = to
                            to = nxt
                        return True
                    in_tree[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting(v)
    return _result(g, [(u, match[u]) for u in range(n) if match[u] > u])


def has_perfect_matching(g: Graph) -> bool:
    if g.order % 2:
        return False
    return max_matching_general(g).is_perfect


def odd_components(g: Graph, s: Iterable[int]) -> int:
    """Number of odd-order components of ``G - S``."""
    return _odd_components(g.adjacency, g.full_mask & ~mask_of(s))


def _odd_components(adj: tuple[int, ...], rest: int) -> int:
    odd = 0
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= adj[low.bit_length() - 1]
                frontier ^= low
            nxt &= rest & ~seen
            seen |= nxt
            frontier = nxt
        if seen.bit_count() & 1:
            odd += 1
        rest &= ~seen
    return odd


def tutte_violation(g: Graph, subset_cap: int = SUBSET_CAP) -> Optional[Witness]:
    """Smallest ``S`` (lexicographic among equal sizes) with ``o(G-S) > |S|``.

    Sets with ``|S| >= n/2`` cannot violate the condition since
    ``o(G-S) <= n - |S|``, so the scan stops below that size.
    """
    n = g.order
    if n > subset_cap:
        raise GraphError(f"exhaustive Tutte scan capped at n={subset_cap}; "
                         "use max_matching_general for larger graphs")
    adj = g.adjacency
    full = g.full_mask
    for size in range((n + 1) // 2):
        for subset in combinations(range(n), size):
            odd = _odd_components(adj, full & ~mask_of(subset))
            if odd > size:
                return Witness("tutte", subset, odd - size)
    return None


def _check_bipartition(g: Graph, b: Bipartition) -> None:
    if b.left | b.right != frozenset(range(g.order)) or b.left & b.right:
        raise GraphError("bipartition does not partition the vertex set")
    xmask = mask_of(b.left)
    ymask = mask_of(b.right)
    for v in b.left:
        if g.adjacency[v] & xmask:
            raise GraphError("bipartition inconsistent with edges: edge inside X")
    for v in b.right:
        if g.adjacency[v] & ymask:
            raise GraphError("bipartition inconsistent with edges: edge inside Y")


def max_matching_bipartite(g: Graph, b: Bipartition) -> MatchingResult:
    """Maximum matching by Hopcroft-Karp phases of BFS layering and DFS augmentation."""
    _check_bipartition(g, b)
    left = sorted(b.left)
    adj = {u: g.neighbors(u) for u in left}
    mate_l = {u: -1 for u in left}
    mate_r = {v: -1 for v in sorted(b.right)}
    inf = float("inf")
    dist: dict[int, float] = {}

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if mate_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = mate_r[v]
                if w == -1:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = mate_r[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                mate_l[u] = v
                mate_r[v] = u
                return True
        dist[u] = inf
        return False

    while bfs():
        for u in left:
            if mate_l[u] == -1:
                dfs(u)
    return _result(g, [(u, v) for u, v in mate_l.items() if v != -1])


def saturates_left(result: MatchingResult, b: Bipartition) -> bool:
    return result.size == len(b.left)


def hall_violation(g: Graph, b: Bipartition, subset_cap: int = SUBSET_CAP) -> Optional[Witness]:
    """Smallest ``S`` in X (lexicographic among equal sizes) with ``|N(S)| < |S|``."""
    _check_bipartition(g, b)
    left = sorted(b.left)
    if len(left) > subset_cap:
        raise GraphError(f"exhaustive Hall scan capped at |X|={subset_cap}")
    adj = g.adjacency
    for size in range(1, len(left) + 1):
        for subset in combinations(left, size):
            nbrs = 0
            for u in subset:
                nbrs |= adj[u]
            k = nbrs.bit_count()
            if k < size:
                return Witness("hall", subset, size - k)
    return None


def neighborhood(g: Graph, s: Iterable[int]) -> list[int]:
    m = 0
    for u in s:
        m |= g.adjacency[u]
    return bits(m)
