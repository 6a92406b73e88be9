"""Simple undirected graphs: the core type, family generators, and edge-list I/O.

Vertices are 0-based integers. Adjacency is stored as a tuple of sorted
neighbor tuples, so `Graph` values are hashable and safe to share across
workers. Dense matrices are never stored here; the spectral and exact
modules build them on demand.

The doubled-cycle family produced by `prism_family` places the lower rim on
vertices 0..n-1 and the upper rim on n..2n-1, with vertex n+i sitting
directly above vertex i. `PrismSpec.deleted` uses 1-based rim positions, so
deleting position i removes the vertical edge {i-1, n+i-1}.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field


class EdgeListParseError(ValueError):
    """Malformed edge-list text; `line_no` is the offending 1-based line."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DisconnectedGraphError(ValueError):
    """An operation that requires a connected graph received a disconnected one."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    Attributes
    ----------
    vertex_count : int
        Number of vertices, labeled 0..vertex_count-1.
    adjacency : tuple of tuples
        adjacency[v] lists the neighbors of v in ascending order.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> "Graph":
        """Build a graph from an iterable of (u, v) pairs, validating simplicity.

        Self-loops, duplicate edges (in either orientation), and out-of-range
        endpoints raise ValueError.
        """
        if vertex_count < 1:
            raise ValueError(f"vertex_count must be >= 1, got {vertex_count}")
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(vertex_count, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adjacency[u]
        lo, hi = 0, len(a)
        while lo < hi:
            mid = (lo + hi) // 2
            if a[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(a) and a[lo] == v


@dataclass(frozen=True)
class PrismSpec:
    """Parameters of one member of the vertical-edge-deleted doubled-cycle family.

    `n` is the rim length (>= 3). `deleted` holds 1-based rim positions whose
    vertical edge is removed; r = len(deleted) may run from 0 to n.
    """

    n: int
    deleted: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"rim length must be >= 3, got {self.n}")
        deleted = frozenset(self.deleted)
        object.__setattr__(self, "deleted", deleted)
        bad = [i for i in deleted if not 1 <= i <= self.n]
        if bad:
            raise ValueError(f"deleted positions {sorted(bad)} outside 1..{self.n}")

    @property
    def r(self) -> int:
        return len(self.deleted)


def cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices, edges {i, (i+1) mod n}."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on n >= 1 vertices (n-1 edges; a single vertex for n = 1)."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def strong_product(g: Graph, h: Graph) -> Graph:
    """Strong product of two graphs.

    Vertex (u, v) maps to index u * h.vertex_count + v. Two distinct pairs
    are adjacent iff each coordinate is equal or adjacent in its factor.
    """
    nh = h.vertex_count
    edges = []
    for u1 in range(g.vertex_count):
        g_moves = (u1,) + g.adjacency[u1]
        for v1 in range(nh):
            a = u1 * nh + v1
            h_moves = (v1,) + h.adjacency[v1]
            for u2 in g_moves:
                for v2 in h_moves:
                    b = u2 * nh + v2
                    if b > a:
                        edges.append((a, b))
    return Graph.from_edges(g.vertex_count * nh, edges)


def prism_family(spec: PrismSpec) -> Graph:
    """Doubled cycle with crossed diagonals, minus the spec's vertical edges.

    Builds the edges directly under the canonical labeling: rim edges on both
    copies of the cycle, the two crossing diagonals per rim edge, and the
    surviving vertical edges. With nothing deleted the result equals
    strong_product(path(2), cycle(n)).
    """
    n = spec.n
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges.append((i, j) if i < j else (j, i))        # lower rim
        edges.append((n + i, n + j) if i < j else (n + j, n + i))  # upper rim
        edges.append((i, n + j))                         # crossing diagonals
        edges.append((j, n + i))
    for i in range(1, n + 1):
        if i not in spec.deleted:
            edges.append((i - 1, n + i - 1))             # vertical
    return Graph.from_edges(2 * n, edges)


def rim_swap(n: int) -> tuple[int, ...]:
    """Permutation exchanging the two rims of a 2n-vertex prism-family graph."""
    return tuple(range(n, 2 * n)) + tuple(range(n))


def is_connected(g: Graph) -> bool:
    """BFS reachability of every vertex from vertex 0."""
    seen = [False] * g.vertex_count
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.vertex_count


def degrees(g: Graph) -> list[int]:
    """Degree of every vertex, indexed by vertex."""
    return [len(a) for a in g.adjacency]


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list interchange format.

    First non-comment line is "n m"; each of the following m non-comment
    lines is "u v" with 0 <= u, v < n and u != v. '#' starts a comment line.
    Raises EdgeListParseError with the offending line number on any defect.
    """
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    expected = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise EdgeListParseError(line_no, f"expected header 'n m', got {line!r}")
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise EdgeListParseError(line_no, f"non-integer header {line!r}") from None
            if n < 1 or m < 0:
                raise EdgeListParseError(line_no, f"invalid header counts n={n} m={m}")
            header = (n, m)
            expected = m
            continue
        if len(fields) != 2:
            raise EdgeListParseError(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"non-integer endpoints {line!r}") from None
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(line_no, f"vertex out of range in ({u}, {v}), n={n}")
        if u == v:
            raise EdgeListParseError(line_no, f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListParseError(line_no, f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append(key)
    if header is None:
        raise EdgeListParseError(1, "empty input, expected header 'n m'")
    if len(edges) != expected:
        raise EdgeListParseError(
            len(text.splitlines()) or 1,
            f"header declared {expected} edges, found {len(edges)}",
        )
    return Graph.from_edges(header[0], edges)


def serialize_edge_list(g: Graph) -> str:
    """Render a graph in the edge-list format accepted by `parse_edge_list`."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
