"""Base graphs stored as per-vertex neighborhood bitmasks, plus graph6 I/O."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .bitset import full, iter_members, members
from .errors import Graph6Error

MAX_ORDER = 64


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the open neighborhood of ``v`` as a bitmask. Instances are
    immutable and hashable, so they can key caches and cross process
    boundaries.
    """

    n: int
    adj: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        universe = full(self.n)
        for v, nbrs in enumerate(self.adj):
            if nbrs & ~universe:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nbrs >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_members(nbrs):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], label: str = "") -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), label)

    @property
    def vertices(self) -> int:
        return full(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def min_degree(self) -> int:
        return min(a.bit_count() for a in self.adj)

    def isolated_vertices(self) -> int:
        mask = 0
        for v, a in enumerate(self.adj):
            if not a:
                mask |= 1 << v
        return mask

    def has_isolated(self) -> bool:
        return any(a == 0 for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()), self.label)

    def induced(self, mask: int) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``mask``, relabeled to 0..k-1.

        Returns the subgraph and the list mapping new index -> old vertex.
        """
        keep = members(mask)
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        return Graph.from_edges(len(keep), edges), keep

    def delete_vertex(self, v: int) -> "Graph":
        sub, _ = self.induced(self.vertices & ~(1 << v))
        return sub

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph.from_edges(self.n, self.edges() + [(u, v)], self.label)

    def disjoint_union(self, other: "Graph") -> "Graph":
        """``self`` on 0..n-1 followed by ``other`` shifted by n."""
        k = self.n
        edges = self.edges() + [(u + k, v + k) for u, v in other.edges()]
        return Graph.from_edges(k + other.n, edges)

    def without_isolated(self) -> tuple["Graph", int]:
        """Drop isolated vertices; returns the reduced graph and how many were dropped."""
        iso = self.isolated_vertices()
        if not iso:
            return self, 0
        sub, _ = self.induced(self.vertices & ~iso)
        return sub, iso.bit_count()

    def to_graph6(self) -> str:
        return emit_graph6(self)

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"Graph(n={self.n}, m={self.num_edges()}{tag}, g6={emit_graph6(self)!r})"


def closed_neighborhood(g: Graph, s: int) -> int:
    out = s
    for v in iter_members(s):
        out |= g.adj[v]
    return out


def components_within(g: Graph, w: int) -> list[int]:
    """Connected components of the subgraph induced by ``w``, by least vertex."""
    comps = []
    rest = w
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grow = 0
            for v in iter_members(frontier):
                grow |= g.adj[v]
            frontier = grow & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return len(components_within(g, g.vertices)) == 1


# -- graph6 -----------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def emit_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        aj = g.adj[j]
        for i in range(j):
            bits.append(aj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_order(n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header is skipped)."""
    s = text.strip()
    start = 0
    if s.startswith(_HEADER):
        start = len(_HEADER)
    if len(s) <= start:
        raise Graph6Error("empty graph6 record", start)
    for i in range(start, len(s)):
        if not 63 <= ord(s[i]) <= 126:
            raise Graph6Error(f"byte {s[i]!r} outside the printable range 63..126", i)

    pos = start
    if s[pos] != "~":
        n = ord(s[pos]) - 63
        pos += 1
    elif len(s) > pos + 1 and s[pos + 1] == "~":
        if len(s) < pos + 8:
            raise Graph6Error("truncated 8-byte order header", pos)
        n = 0
        for c in s[pos + 2:pos + 8]:
            n = (n << 6) | (ord(c) - 63)
        pos += 8
    else:
        if len(s) < pos + 4:
            raise Graph6Error("truncated 4-byte order header", pos)
        n = 0
        for c in s[pos + 1:pos + 4]:
            n = (n << 6) | (ord(c) - 63)
        pos += 4
    if n == 0:
        raise Graph6Error("graph6 record with zero vertices", start)
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds the {MAX_ORDER}-vertex limit", start)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != nbytes:
        raise Graph6Error(f"expected {nbytes} body bytes for n={n}, found {len(body)}",
                          pos + min(len(body), nbytes))

    adj = [0] * n
    k = 0
    j, i = 1, 0
    for offset, c in enumerate(body):
        val = ord(c) - 63
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if k < nbits:
                if bit:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                i += 1
                if i == j:
                    j, i = j + 1, 0
            elif bit:
                raise Graph6Error("nonzero padding bits", pos + offset)
            k += 1
    return Graph(n, tuple(adj))


def read_graph6_file(path) -> list[Graph]:
    """One graph per nonblank line; lines starting with '#' are ignored."""
    graphs = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                graphs.append(parse_graph6(line))
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc}") from exc
    return graphs
