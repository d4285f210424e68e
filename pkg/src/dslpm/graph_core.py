"""Simple undirected graphs, the join/union constructions, and text parsers.

Adjacency is held as one integer bitmask per vertex, so a ``Graph`` is a
dense symmetric bit relation.  Every construction is a pure function that
returns a new immutable graph; the left operand of ``join`` and
``disjoint_union`` always occupies the lowest vertex indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 4096


class GraphError(ValueError):
    """Invalid graph parameters or malformed graph input."""


class ParseError(GraphError):
    """Malformed graph6 or edge-list text."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..order-1``.

    ``adjacency[v]`` is the bitmask of neighbours of ``v``.
    """

    order: int
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.order
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        if n > MAX_ORDER:
            raise GraphError(f"order {n} exceeds the configured cap {MAX_ORDER}")
        if len(self.adjacency) != n:
            raise GraphError("adjacency length does not match order")
        full = (1 << n) - 1
        for v, row in enumerate(self.adjacency):
            if row & ~full or row < 0:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.adjacency):
            w = row
            while w:
                low = w & -w
                u = low.bit_length() - 1
                if not self.adjacency[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")
                w ^= low

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if order < 1:
            raise GraphError("a graph needs at least one vertex")
        adj = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adjacency[v])

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.adjacency):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def subgraph_without(self, removed: Iterable[int]) -> Graph:
        """Induced subgraph on the vertices not in ``removed``, relabelled in order."""
        drop = set(removed)
        keep = [v for v in range(self.order) if v not in drop]
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(keep), edges)

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_count()})"


@dataclass(frozen=True)
class Bipartition:
    """Sides ``left`` (X) and ``right`` (Y) of a bipartite graph."""

    left: frozenset[int]
    right: frozenset[int]

    @classmethod
    def of(cls, g: Graph, left: Iterable[int], right: Iterable[int] | None = None) -> Bipartition:
        """Validated bipartition of ``g``; ``right`` defaults to the complement of ``left``."""
        x = frozenset(left)
        y = frozenset(right) if right is not None else frozenset(range(g.order)) - x
        if x & y:
            raise GraphError("bipartition sides overlap")
        if x | y != frozenset(range(g.order)):
            raise GraphError("bipartition does not cover every vertex")
        xmask = sum(1 << v for v in x)
        ymask = sum(1 << v for v in y)
        for v in x:
            if g.adjacency[v] & xmask:
                raise GraphError(f"edge inside side X at vertex {v}")
        for v in y:
            if g.adjacency[v] & ymask:
                raise GraphError(f"edge inside side Y at vertex {v}")
        return cls(x, y)

    @property
    def balanced(self) -> bool:
        return len(self.left) == len(self.right)


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# Building blocks

def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("empty graph needs n >= 1")
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty_graph(a), empty_graph(b))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    return Graph(g.order + h.order, g.adjacency + tuple(row << shift for row in h.adjacency))


def join(g: Graph, h: Graph) -> Graph:
    shift = g.order
    gmask = g.full_mask
    hmask = h.full_mask << shift
    left = tuple(row | hmask for row in g.adjacency)
    right = tuple((row << shift) | gmask for row in h.adjacency)
    return Graph(g.order + h.order, left + right)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adjacency)))


def is_connected(g: Graph) -> bool:
    return reachable(g, 0, g.full_mask) == g.full_mask


def reachable(g: Graph, start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside the vertex mask ``allowed``."""
    seen = 1 << start
    frontier = seen
    adj = g.adjacency
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, allowed: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by ``allowed``, as bitmasks."""
    rest = g.full_mask if allowed is None else allowed
    out = []
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = reachable(g, start, rest)
        out.append(comp)
        rest &= ~comp
    return out


def two_coloring(g: Graph) -> Bipartition | None:
    """BFS 2-colouring rooted at vertex 0; ``None`` if the graph is not bipartite.

    Vertices of each component are coloured starting from its smallest vertex,
    which lands on side X.
    """
    color = [-1] * g.order
    for root in range(g.order):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        for u in queue:
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    left = [v for v in range(g.order) if color[v] == 0]
    return Bipartition.of(g, left)


# Extremal families

def build_split_family(s: int, parts: Sequence[int]) -> Graph:
    """``K_s`` joined to the disjoint union of cliques ``K_{n_1}, ..., K_{n_q}``."""
    if s < 1:
        raise GraphError("clique size s must be >= 1")
    if not parts:
        raise GraphError("parts list must be non-empty")
    if any(p < 1 for p in parts):
        raise GraphError("every part must have at least one vertex")
    rest = complete(parts[0])
    for p in parts[1:]:
        rest = disjoint_union(rest, complete(p))
    return join(complete(s), rest)


def build_g2(n: int, s: int, q: int) -> Graph:
    """``K_s v (K_{n-s-q+1} u co-K_{q-1})`` on ``n`` vertices.

    Vertex order: the ``s`` clique vertices, then the big clique, then the
    ``q-1`` isolated vertices of the union.
    """
    big = n - s - q + 1
    if s < 1 or q < 2 or big < 1:
        raise GraphError(f"invalid parameters n={n}, s={s}, q={q}")
    return build_split_family(s, [big] + [1] * (q - 1))


def build_g3(n: int, s: int) -> Graph:
    """The ``q = s + 2`` member of the ``build_g2`` family."""
    return build_g2(n, s, s + 2)


def build_g4(n: int) -> Graph:
    """``K_1 v (K_{n-3} u co-K_2)``: vertex 0 is the cut vertex."""
    if n < 4 or n % 2:
        raise GraphError("build_g4 needs an even order n >= 4")
    return build_g2(n, 1, 3)


def build_g5(s: int) -> Graph:
    """``K_s v co-K_{s+2}`` on ``2s + 2`` vertices; the clique comes first."""
    if s < 1:
        raise GraphError("build_g5 needs s >= 1")
    return join(complete(s), empty_graph(s + 2))


@dataclass(frozen=True)
class GammaGraph:
    """``K_{n,n}`` minus all edges between ``S`` and ``Y - N(S)``.

    Vertex layout: X = ``0..n-1`` with ``S = 0..s-1``; Y = ``n..2n-1`` with
    ``N(S) = n..n+k-1``.
    """

    graph: Graph
    bipartition: Bipartition
    n: int
    s: int
    k: int

    @property
    def S(self) -> list[int]:
        return list(range(self.s))

    @property
    def X_minus_S(self) -> list[int]:
        return list(range(self.s, self.n))

    @property
    def N_S(self) -> list[int]:
        return list(range(self.n, self.n + self.k))

    @property
    def Y_minus_N_S(self) -> list[int]:
        return list(range(self.n + self.k, 2 * self.n))

    def partition_blocks(self) -> list[list[int]]:
        return [self.S, self.X_minus_S, self.N_S, self.Y_minus_N_S]

    def __iter__(self) -> Iterator:
        # allows ``g, b = build_gamma(...)``
        yield self.graph
        yield self.bipartition


def build_gamma(n: int, s: int, k: int) -> GammaGraph:
    if not 1 <= k < s <= n - 1:
        raise GraphError(f"need 1 <= k < s <= n-1, got n={n}, s={s}, k={k}")
    edges = []
    for x in range(n):
        for y in range(n, 2 * n):
            if x < s and y >= n + k:
                continue
            edges.append((x, y))
    g = Graph.from_edges(2 * n, edges)
    return GammaGraph(g, Bipartition.of(g, range(n)), n, s, k)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# Text formats

_G6_HEADER = ">>graph6<<"


def _upper_triangle_pairs(n: int) -> Iterator[tuple[int, int]]:
    # column-major over the upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    data = s.encode("ascii", errors="replace")
    if not data:
        raise ParseError("empty graph6 string", 0)
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b!r} outside the graph6 range 63..126", i)
    if data[0] < 126:
        n = data[0] - 63
        pos = 1
    else:
        if len(data) < 4 or data[1] == 126:
            raise ParseError("unsupported or truncated extended size prefix", 1)
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        pos = 4
    if n < 1:
        raise ParseError("graph6 encodes an empty vertex set", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, found {len(body)}", pos)
    value = 0
    for b in body:
        value = (value << 6) | (b - 63)
    pad = need * 6 - nbits
    if value & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", pos + need - 1)
    value >>= pad
    edges = []
    bit = nbits - 1
    for i, j in _upper_triangle_pairs(n):
        if value >> bit & 1:
            edges.append((i, j))
        bit -= 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.order
    if n > 62:
        raise GraphError("graph6 output is limited to n <= 62")
    out = [chr(63 + n)]
    chunk = 0
    width = 0
    for i, j in _upper_triangle_pairs(n):
        chunk = (chunk << 1) | (g.adjacency[i] >> j & 1)
        width += 1
        if width == 6:
            out.append(chr(63 + chunk))
            chunk = width = 0
    if width:
        out.append(chr(63 + (chunk << (6 - width))))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("edge list is empty")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"header must be a vertex count, got {lines[0]!r}") from None
    if n < 1:
        raise ParseError("vertex count must be >= 1")
    edges = set()
    for lineno, line in enumerate(lines[1:], start=2):
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-numeric token in {line!r}") from None
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex index out of range [0, {n})")
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def to_edge_list(g: Graph) -> str:
    return "\n".join([str(g.order)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def edge_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))
