"""Canonical labeling by individualization/refinement, and small-order
nonisomorphic graph generation built on top of it."""
from __future__ import annotations

from typing import Iterator, Sequence

from .bitset import iter_members
from .errors import SizeGuardError
from .graph import Graph, emit_graph6

CANON_MAX_ORDER = 16
GEN_MAX_ORDER = 7
GEN_LONG_MAX_ORDER = 8


def refine(adj: Sequence[int], colors: Sequence[int]) -> list[int]:
    """Equitable refinement of a vertex coloring.

    Colors are re-ranked each round by (old color, sorted neighbor colors), so
    the result depends only on the isomorphism type of the colored graph.
    Returned colors are dense ranks 0..c-1.
    """
    n = len(adj)
    cur = _rank(list(colors))
    ncolors = len(set(cur))
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(cur[u] for u in iter_members(adj[v]))
            sigs.append((cur[v], tuple(nb)))
        nxt = _rank(sigs)
        k = len(set(nxt))
        if k == ncolors:
            return nxt
        cur, ncolors = nxt, k


def _rank(keys: list) -> list[int]:
    order = {key: i for i, key in enumerate(sorted(set(keys)))}
    return [order[key] for key in keys]


def individualize(colors: list[int], v: int) -> list[int]:
    """Split ``v`` off its cell, placing it just before the rest of the cell."""
    out = [2 * c + 1 for c in colors]
    out[v] -= 1
    return out


def target_cell(colors: list[int]) -> list[int] | None:
    """Smallest non-singleton cell (ties broken by color), or None if discrete."""
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def _twin_representatives(adj: Sequence[int], cell: list[int]) -> list[int]:
    # swapping two twins fixes every other vertex, so one branch per twin class suffices
    reps = []
    for v in cell:
        for u in reps:
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                break
        else:
            reps.append(v)
    return reps


def canonical_form(g: Graph) -> tuple[list[int], str]:
    """Canonical relabeling of ``g``.

    Returns ``(perm, certificate)`` where ``perm[v]`` is the canonical label of
    vertex ``v`` and the certificate is the graph6 string of the relabeled
    graph. Two graphs are isomorphic exactly when their certificates match.
    """
    if g.n > CANON_MAX_ORDER:
        raise SizeGuardError(f"canonical_form supports n <= {CANON_MAX_ORDER}, got {g.n}")
    adj = g.adj
    best_key = None
    best_perm = None
    stack = [refine(adj, [0] * g.n)]
    while stack:
        colors = stack.pop()
        cell = target_cell(colors)
        if cell is None:
            perm = colors
            key = _relabeled_key(adj, perm)
            if best_key is None or key > best_key:
                best_key, best_perm = key, perm
            continue
        for v in reversed(_twin_representatives(adj, cell)):
            stack.append(refine(adj, individualize(colors, v)))
    canon = Graph(g.n, best_key)
    return list(best_perm), emit_graph6(canon)


def _relabeled_key(adj: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    new = [0] * len(adj)
    for v, a in enumerate(adj):
        m = 0
        for u in iter_members(a):
            m |= 1 << perm[u]
        new[perm[v]] = m
    return tuple(new)


def certificate(g: Graph) -> str:
    return canonical_form(g)[1]


def canonical_graph(g: Graph) -> Graph:
    perm, _ = canonical_form(g)
    return g.relabel(perm)


def enumerate_nonisomorphic(n: int, require_no_isolated: bool = True,
                            allow_long: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices.

    Classes are grown edge by edge: every class with m+1 edges arises from a
    class with m edges plus one non-edge, and canonical certificates dedupe
    the results. Output is sorted by certificate; each graph is the canonical
    representative and carries its certificate as ``label``.
    """
    limit = GEN_LONG_MAX_ORDER if allow_long else GEN_MAX_ORDER
    if not 1 <= n <= limit:
        hint = "" if allow_long or n > GEN_LONG_MAX_ORDER else " (n=8 needs allow_long / --long)"
        raise SizeGuardError(f"internal generation supports 1 <= n <= {limit}, got {n}{hint}")
    start = Graph(n, (0,) * n)
    level = {certificate(start): start}
    found = dict(level)
    while level:
        nxt: dict[str, Graph] = {}
        for g in level.values():
            for u in range(n):
                for v in range(u + 1, n):
                    if g.has_edge(u, v):
                        continue
                    h = g.add_edge(u, v)
                    perm, cert = canonical_form(h)
                    if cert not in nxt:
                        nxt[cert] = h.relabel(perm)
        found.update(nxt)
        level = nxt
    for cert in sorted(found):
        g = found[cert]
        if require_no_isolated and g.has_isolated():
            continue
        yield Graph(g.n, g.adj, cert)
