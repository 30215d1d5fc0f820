"""Irrelevant vertices, the symmetric-difference automorphisms, and TAR-graph
isomorphism decided through bijections of minimal X-sets."""
from __future__ import annotations

from dataclasses import dataclass, field

from .bitset import full, iter_members, members
from .canon import individualize, refine
from .errors import IsolatedVertexError, SizeGuardError
from .graph import Graph
from .rules import XRule
from .tar import TarGraph
from .xsets import XProfile, build_profile, vertex_occurrences, x_polynomial

BRUTE_MAX_VERTICES = 64
TWIN_CHECK_MAX_ORDER = 16


@dataclass(frozen=True)
class Bijection:
    forward: tuple[int, ...]
    inverse: tuple[int, ...]

    @classmethod
    def from_forward(cls, forward) -> "Bijection":
        forward = tuple(forward)
        inverse = [0] * len(forward)
        for v, w in enumerate(forward):
            inverse[w] = v
        return cls(forward, tuple(inverse))

    @classmethod
    def identity(cls, n: int) -> "Bijection":
        return cls(tuple(range(n)), tuple(range(n)))

    def image(self, s: int) -> int:
        out = 0
        for v in iter_members(s):
            out |= 1 << self.forward[v]
        return out

    @property
    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.forward))


@dataclass
class IsoVerdict:
    isomorphic: bool
    bijection: Bijection | None = None
    irrelevant_shift: int = 0
    witness: str | None = None

    def as_dict(self) -> dict:
        return {
            "isomorphic": self.isomorphic,
            "bijection": list(self.bijection.forward) if self.bijection else None,
            "witness": self.witness,
        }


def irrelevant_vertices(profile: XProfile) -> int:
    """Vertices that lie in no minimal X-set."""
    used = 0
    for s in profile.minimal_sets:
        used |= s
    return full(profile.n) & ~used


def nu_map(profile: XProfile, r: int) -> bool:
    """Whether S -> S xor r permutes the X-sets (and so is a TAR automorphism)."""
    family = profile.set_family
    return all((s ^ r) in family for s in family)


def invariant_mismatch(p: XProfile, q: XProfile) -> str | None:
    """First differing invariant, checked in a fixed order; None if all agree."""
    if p.n != q.n:
        return f"n: {p.n} vs {q.n}"
    if p.x_number != q.x_number:
        return f"x_number: {p.x_number} vs {q.x_number}"
    if p.upper_x != q.upper_x:
        return f"upper_x: {p.upper_x} vs {q.upper_x}"
    pp, qp = x_polynomial(p), x_polynomial(q)
    if pp != qp:
        return f"polynomial: {pp} vs {qp}"
    pm, qm = p.minimal_size_counts(), q.minimal_size_counts()
    if pm != qm:
        return f"minimal_set_sizes: {pm} vs {qm}"
    if sorted(vertex_occurrences(p)) != sorted(vertex_occurrences(q)):
        return "vertex_occurrence: per-vertex minimal-set counts differ"
    return None


def find_xset_bijection(p: XProfile, q: XProfile) -> Bijection | None:
    """A vertex bijection carrying the minimal X-sets of p onto those of q.

    Such a map carries every X-set onto an X-set, so it induces a TAR
    isomorphism. Vertices are assigned most-constrained first; after each
    assignment every minimal set through the new vertex must still have a
    same-size partner whose assigned part matches its image exactly.
    """
    if p.rule is not q.rule:
        raise ValueError(f"rule mismatch: {p.rule.value} vs {q.rule.value}")
    if invariant_mismatch(p, q) is not None:
        return None
    return _search(p, q)


def _search(p: XProfile, q: XProfile) -> Bijection | None:
    n = p.n
    P, Q = list(p.minimal_sets), list(q.minimal_sets)
    q_family = set(Q)
    sig_p, sig_q = vertex_occurrences(p), vertex_occurrences(q)
    cands = {v: [w for w in range(n) if sig_q[w] == sig_p[v]] for v in range(n)}
    if any(not c for c in cands.values()):
        return None
    through_p = [[a for a in P if a >> v & 1] for v in range(n)]
    through_q = [[b for b in Q if b >> w & 1] for w in range(n)]
    q_by_size: dict[int, list[int]] = {}
    for b in Q:
        q_by_size.setdefault(b.bit_count(), []).append(b)
    p_by_size: dict[int, list[int]] = {}
    for a in P:
        p_by_size.setdefault(a.bit_count(), []).append(a)
    order = sorted(range(n), key=lambda v: (len(cands[v]), -len(through_p[v]), v))

    fwd = [-1] * n
    inv = [-1] * n

    def image(s: int) -> int:
        out = 0
        for v in iter_members(s):
            out |= 1 << fwd[v]
        return out

    def preimage(s: int) -> int:
        out = 0
        for w in iter_members(s):
            out |= 1 << inv[w]
        return out

    def consistent(v: int, w: int, dom: int, rng: int) -> bool:
        for a in through_p[v]:
            part = a & dom
            img = image(part)
            if part == a:
                if img not in q_family:
                    return False
            elif not any(b & rng == img for b in q_by_size[a.bit_count()]):
                return False
        for b in through_q[w]:
            part = b & rng
            pre = preimage(part)
            if part == b:
                continue
            if not any(a & dom == pre for a in p_by_size[b.bit_count()]):
                return False
        return True

    def extend(depth: int, dom: int, rng: int) -> bool:
        if depth == n:
            return all(image(a) in q_family for a in P)
        v = order[depth]
        for w in cands[v]:
            if inv[w] >= 0:
                continue
            fwd[v], inv[w] = w, v
            nd, nr = dom | (1 << v), rng | (1 << w)
            if consistent(v, w, nd, nr) and extend(depth + 1, nd, nr):
                return True
            fwd[v], inv[w] = -1, -1
        return False

    if extend(0, 0, 0):
        return Bijection.from_forward(fwd)
    return None


def tar_isomorphic(g: Graph, h: Graph, rule: XRule | str) -> IsoVerdict:
    """Decide whether the X-TAR graphs of ``g`` and ``h`` are isomorphic."""
    for name, graph in (("first", g), ("second", h)):
        if graph.has_isolated():
            raise IsolatedVertexError(
                f"{name} graph has isolated vertices {members(graph.isolated_vertices())}; "
                "strip them first (G plus rK_1 has the same TAR graph as G)")
    p, q = build_profile(g, rule), build_profile(h, rule)
    return profiles_isomorphic(p, q)


def profiles_isomorphic(p: XProfile, q: XProfile) -> IsoVerdict:
    witness = invariant_mismatch(p, q)
    if witness is not None:
        return IsoVerdict(False, witness=witness)
    bij = _search(p, q)
    if bij is None:
        return IsoVerdict(False, witness="search: no bijection of minimal X-sets exists")
    return IsoVerdict(True, bijection=bij)


def brute_tar_iso(t1: TarGraph, t2: TarGraph) -> bool:
    """General graph isomorphism on the materialized TAR graphs.

    Works on the TAR graphs purely as graphs (the sets labelling the vertices
    are ignored): joint color refinement of the disjoint union, then
    individualize a pair of equally colored vertices, one per side, and
    backtrack.
    """
    a, b = len(t1), len(t2)
    if a > BRUTE_MAX_VERTICES or b > BRUTE_MAX_VERTICES:
        raise SizeGuardError(f"brute_tar_iso supports up to {BRUTE_MAX_VERTICES} TAR vertices")
    if a != b:
        return False
    if a == 0:
        return True
    adj = []
    for i in range(a):
        m = 0
        for j in t1.neighbors(i):
            m |= 1 << j
        adj.append(m)
    for i in range(b):
        m = 0
        for j in t2.neighbors(i):
            m |= 1 << (j + a)
        adj.append(m)
    if sum(x.bit_count() for x in adj[:a]) != sum(x.bit_count() for x in adj[a:]):
        return False

    def balanced(colors):
        left = sorted(colors[:a])
        return left == sorted(colors[a:])

    def is_iso(colors) -> bool:
        pos = {c: j for j, c in enumerate(colors[a:])}
        mapping = [pos[colors[i]] for i in range(a)]
        for i in range(a):
            for j in iter_members(adj[i]):
                if not adj[a + mapping[i]] >> (a + mapping[j]) & 1:
                    return False
        return True

    def search(colors) -> bool:
        if not balanced(colors):
            return False
        # on the union a "discrete" cell holds one vertex from each side
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        wide = [cells[c] for c in sorted(cells) if len(cells[c]) > 2]
        if not wide:
            return is_iso(colors)
        cell = min(wide, key=len)
        x = next(v for v in cell if v < a)
        for y in (v for v in cell if v >= a):
            split = individualize(colors, x)
            split[y] -= 1
            if search(refine(adj, split)):
                return True
        return False

    return search(refine(adj, [0] * (a + b)))


def twin_classes(g: Graph) -> list[int]:
    """Vertices grouped by equal open neighborhood, ordered by least vertex."""
    groups: dict[int, int] = {}
    for v in range(g.n):
        groups[g.adj[v]] = groups.get(g.adj[v], 0) | (1 << v)
    return sorted(groups.values(), key=lambda m: m & -m)


@dataclass
class TwinReport:
    twinclass: int
    passed: bool
    failures: list[str] = field(default_factory=list)


def twin_deletion_check(g: Graph, twinclass: int) -> TwinReport:
    """For a twin set of size >= 3, S -> S + u_i must biject the zero forcing
    sets of G - u_i onto the zero forcing sets of G containing u_i, and
    preserve minimality in both directions."""
    size = twinclass.bit_count()
    if size < 3:
        raise ValueError(
            f"twin_deletion_check needs at least 3 twins, got {size}; "
            "with only two twins a deleted twin may be needed as a forcer")
    if g.n > TWIN_CHECK_MAX_ORDER:
        raise SizeGuardError(f"twin_deletion_check supports n <= {TWIN_CHECK_MAX_ORDER}")
    verts = members(twinclass)
    if len({g.adj[v] for v in verts}) != 1:
        raise ValueError(f"{verts} is not a set of twins")
    whole = build_profile(g, XRule.ZERO_FORCING)
    whole_min = set(whole.minimal_sets)
    report = TwinReport(twinclass, True)
    for u in verts:
        sub, keep = g.induced(g.vertices & ~(1 << u))
        part = build_profile(sub, XRule.ZERO_FORCING)
        part_min = set(part.minimal_sets)

        def lift(s: int) -> int:
            out = 1 << u
            for i in iter_members(s):
                out |= 1 << keep[i]
            return out

        lifted = {lift(s): s for s in part.all_sets()}
        with_u = {s for s in whole.all_sets() if s >> u & 1}
        if set(lifted) != with_u:
            report.passed = False
            report.failures.append(f"u={u}: lifted sets of G-u differ from X-sets of G containing u")
            continue
        for big, small in lifted.items():
            if (big in whole_min) != (small in part_min):
                report.passed = False
                report.failures.append(f"u={u}: minimality differs for {members(big)}")
                break
    return report
