"""X-TAR reconfiguration graphs: construction, level connectivity, the
connectivity thresholds, and structural checks.

Adjacency is never stored. Two X-sets are adjacent when they differ in one
vertex, so the neighbors of S are found by toggling each base vertex and
looking the result up in the index.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .bitset import fmt, members
from .errors import IsolatedVertexError, SizeGuardError
from .graph import emit_graph6
from .xsets import XProfile

INTERVAL_LIMITS = {2: 2000, 3: 300}


@dataclass(frozen=True)
class TarGraph:
    base_n: int
    vertices: tuple[int, ...]
    level_cap: int | None = None
    index: dict[int, int] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.index is None:
            object.__setattr__(self, "index", {s: i for i, s in enumerate(self.vertices)})

    def __len__(self):
        return len(self.vertices)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def neighbors(self, i: int) -> list[int]:
        s = self.vertices[i]
        idx = self.index
        out = []
        for v in range(self.base_n):
            j = idx.get(s ^ (1 << v))
            if j is not None:
                out.append(j)
        return out

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def adjacency(self) -> list[list[int]]:
        return [self.neighbors(i) for i in range(len(self.vertices))]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self.vertices)) for j in self.neighbors(i) if i < j]


def _canonical_order(sets) -> tuple[int, ...]:
    return tuple(sorted(sets, key=lambda s: (s.bit_count(), s)))


def build_tar(profile: XProfile, cap: int | None = None) -> TarGraph:
    """The X-TAR graph, or its k-level subgraph when ``cap`` is given.

    A cap below X(G) yields an empty TAR graph (check ``is_empty``).
    """
    if cap is None:
        sets = profile.all_sets()
    else:
        sets = [s for layer in profile.sets_by_size[:cap + 1] for s in layer]
    return TarGraph(profile.n, _canonical_order(sets), cap)


def level_components(profile: XProfile, k: int) -> list[list[int]]:
    """Connected components of the k-level TAR graph, as lists of X-sets."""
    sets = [s for layer in profile.sets_by_size[:k + 1] for s in layer]
    alive = set(sets)
    n = profile.n
    comps = []
    for start in sets:
        if start not in alive:
            continue
        alive.discard(start)
        comp = [start]
        queue = deque([start])
        while queue:
            s = queue.popleft()
            for v in range(n):
                t = s ^ (1 << v)
                if t in alive:
                    alive.discard(t)
                    comp.append(t)
                    queue.append(t)
        comps.append(sorted(comp, key=lambda s: (s.bit_count(), s)))
    return comps


def level_connected(profile: XProfile, k: int) -> bool:
    return len(level_components(profile, k)) == 1


@dataclass
class Level:
    k: int
    num_sets: int
    connected: bool


def level_connectivity(profile: XProfile) -> dict[int, bool]:
    """Connectivity of every level k = X(G)..n in one union-find pass.

    Layers are added in order of size; a set of size k can only touch sets of
    size k-1 and k+1, so after adding layer k the structure holds level k.
    """
    parent: dict[int, int] = {}

    def find(s: int) -> int:
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    n = profile.n
    count = 0
    out = {}
    for k, layer in enumerate(profile.sets_by_size):
        for s in layer:
            parent[s] = s
            count += 1
            for v in range(n):
                t = s ^ (1 << v)
                if t in parent:
                    a, b = find(s), find(t)
                    if a != b:
                        parent[a] = b
                        count -= 1
        if k >= profile.x_number:
            out[k] = count == 1
    return out


def level_report(profile: XProfile) -> list[Level]:
    """Set counts and connectivity for every level k = X(G)..n."""
    conn = level_connectivity(profile)
    out = []
    running = sum(len(layer) for layer in profile.sets_by_size[:profile.x_number])
    for k in range(profile.x_number, profile.n + 1):
        running += len(profile.sets_by_size[k])
        out.append(Level(k, running, conn[k]))
    return out


def thresholds(profile: XProfile) -> tuple[int, int]:
    """(least connected level, least k with every level k..n connected)."""
    g = profile.graph
    if g.has_isolated():
        raise IsolatedVertexError(
            f"base graph has isolated vertices {members(g.isolated_vertices())}; "
            "remove them first (the reduction shifts every level by their count)")
    conn = level_connectivity(profile)
    x = profile.x_number
    n = profile.n
    upper = x
    for k in range(n, x - 1, -1):
        if not conn[k]:
            upper = k + 1
            break
    lower = next(k for k in range(x, n + 1) if conn[k])
    return lower, upper


def degree_stats(tar: TarGraph) -> tuple[int, int]:
    degs = [tar.degree(i) for i in range(len(tar))]
    return max(degs), min(degs)


def is_bipartite(tar: TarGraph) -> bool:
    side = [-1] * len(tar)
    for root in range(len(tar)):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in tar.neighbors(i):
                if side[j] < 0:
                    side[j] = 1 - side[i]
                    queue.append(j)
                elif side[j] == side[i]:
                    return False
    return True


def is_interval(sets) -> bool:
    """True when ``sets`` is exactly the family of sets between its
    intersection and its union."""
    sets = list(sets)
    lo = hi = sets[0]
    for s in sets[1:]:
        lo &= s
        hi |= s
    free = hi & ~lo
    t = free.bit_count()
    if len(set(sets)) != 1 << t:
        return False
    return all(s & ~hi == 0 and s & lo == lo for s in sets)


def is_hypercube(tar: TarGraph) -> bool:
    """Isomorphic to some Q_t, tested as: 2^t vertices, t-regular, interval."""
    size = len(tar)
    if size == 0 or size & (size - 1):
        return False
    t = size.bit_length() - 1
    if any(tar.degree(i) != t for i in range(size)):
        return False
    return is_interval(tar.vertices)


def tar_cartesian(t1: TarGraph, t2: TarGraph) -> TarGraph:
    """Cartesian product on the shifted universe: S1 | (S2 << n1)."""
    shift = t1.base_n
    sets = [a | (b << shift) for a in t1.vertices for b in t2.vertices]
    return TarGraph(t1.base_n + t2.base_n, _canonical_order(sets))


@dataclass
class IntervalReport:
    t: int
    cubes_found: int
    violations: list[tuple[int, ...]]

    @property
    def passed(self) -> bool:
        return not self.violations


def _induced_squares(tar: TarGraph) -> set[frozenset[int]]:
    adj = [set(a) for a in tar.adjacency()]
    found = set()
    for a in range(len(tar)):
        for b, c in combinations(sorted(adj[a]), 2):
            if c in adj[b]:
                continue
            for d in adj[b] & adj[c]:
                if d != a and d not in adj[a]:
                    found.add(frozenset((a, b, c, d)))
    return found


def _induced_cubes(tar: TarGraph) -> set[frozenset[int]]:
    adj = [set(a) for a in tar.adjacency()]
    found = set()
    for a in range(len(tar)):
        for b1, b2, b3 in combinations(sorted(adj[a]), 3):
            c12 = (adj[b1] & adj[b2]) - {a}
            c13 = (adj[b1] & adj[b3]) - {a}
            c23 = (adj[b2] & adj[b3]) - {a}
            for x in c12:
                for y in c13:
                    for z in c23:
                        if len({x, y, z}) < 3:
                            continue
                        for d in (adj[x] & adj[y] & adj[z]) - {b1, b2, b3}:
                            verts = frozenset((a, b1, b2, b3, x, y, z, d))
                            if len(verts) != 8 or verts in found:
                                continue
                            inner = sum(len(adj[v] & verts) for v in verts) // 2
                            if inner == 12:
                                found.add(verts)
    return found


def interval_property_check(tar: TarGraph, t: int) -> IntervalReport:
    """Find every induced Q_t (t = 2 or 3) and confirm its vertex sets form an
    interval [S, S'] with |S' - S| = t."""
    if t not in INTERVAL_LIMITS:
        raise ValueError("t must be 2 or 3")
    if len(tar) > INTERVAL_LIMITS[t]:
        raise SizeGuardError(f"interval check for t={t} supports up to {INTERVAL_LIMITS[t]} TAR vertices")
    cubes = _induced_squares(tar) if t == 2 else _induced_cubes(tar)
    bad = []
    for cube in sorted(cubes, key=sorted):
        sets = [tar.vertices[i] for i in cube]
        if not is_interval(sets) or len(sets) != 1 << t:
            bad.append(tuple(sorted(sets)))
    return IntervalReport(t, len(cubes), bad)


def to_dot(tar: TarGraph, name: str = "tar") -> str:
    lines = [f"graph {name} {{"]
    for i, s in enumerate(tar.vertices):
        lines.append(f'  n{i} [label="{fmt(s)}"];')
    for i, j in tar.edges():
        lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tar_to_dict(profile: XProfile, cap: int | None = None) -> dict:
    tar = build_tar(profile, cap)
    levels = [lv for lv in level_report(profile) if cap is None or lv.k <= cap]
    out = {
        "base_graph6": emit_graph6(profile.graph),
        "rule": profile.rule.value,
        "level_cap": cap,
        "num_sets": len(tar),
        "sets": [members(s) for s in tar.vertices],
        "edges": [list(e) for e in tar.edges()],
        "components": len(level_components(profile, cap if cap is not None else profile.n)),
        "levels": [{"k": lv.k, "num_sets": lv.num_sets, "connected": lv.connected} for lv in levels],
    }
    if profile.graph.has_isolated():
        out["x0"] = out["underline_x0"] = None
    else:
        lower, upper = thresholds(profile)
        out["x0"], out["underline_x0"] = upper, lower
    return out


def to_json(profile: XProfile, cap: int | None = None) -> str:
    return json.dumps(tar_to_dict(profile, cap), sort_keys=True)
