"""Named graph families and the ``name:args`` descriptor syntax used by the CLI.

Vertex numbering is fixed per family, so reported sets are stable across runs
and match the conventions below:

* ``star(r)``: center 0, leaves 1..r.
* ``paw``: the star K_{1,3} plus the edge 2-3.
* ``double_star(a, b)``: centers 0 and 1, leaves of 0 are 2..a+1, leaves of 1
  follow.
* ``corona(h, r)``: the vertices of ``h`` keep their labels; the r pendant
  leaves of vertex i are ``h.n + i*r + j``.
* ``grl(r, l)``: clique 0..r-1, leaf r+j hangs off clique vertex j (j < l).
* ``h_family(r)``: 1-based labels 1..2r+4 shifted down by one; cliques on
  {0..r+1} and {r+2..2r+3}; matching i <-> r+2+i for i in 0..r-1.
* ``hr_family(r)``: the 8-vertex base graph with twins u_1=6, u_2=7 and
  extra twins u_3.. appended as 8, 9, ...
* ``zfpoly_g`` / ``zfpoly_h``: two 6-vertex graphs with equal zero forcing
  polynomials; 1-based labels shifted down by one.
"""
from __future__ import annotations

import re

from .errors import FamilyError
from .graph import Graph, parse_graph6


def _need(cond: bool, message: str):
    if not cond:
        raise FamilyError(message)


def empty(n: int) -> Graph:
    _need(n >= 1, f"empty graph needs n >= 1, got {n}")
    return Graph(n, (0,) * n, f"empty:{n}")


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(n, edges, f"complete:{n}")


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"path:{n}")


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"cycle:{n}")


def star(r: int) -> Graph:
    _need(r >= 1, f"star needs r >= 1 leaves, got {r}")
    return Graph.from_edges(r + 1, [(0, i) for i in range(1, r + 1)], f"star:{r}")


def paw() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (2, 3)], "paw")


def double_star(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, f"double star needs a, b >= 1, got {a}, {b}")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return Graph.from_edges(a + b + 2, edges, f"double_star:{a},{b}")


def hypercube(t: int) -> Graph:
    _need(0 <= t <= 6, f"hypercube dimension must be in 0..6, got {t}")
    n = 1 << t
    edges = [(v, v ^ (1 << i)) for v in range(n) for i in range(t) if v < v ^ (1 << i)]
    return Graph.from_edges(n, edges, f"hypercube:{t}")


def corona(h: Graph, r: int) -> Graph:
    """H o rK_1: every vertex of ``h`` gets ``r`` private pendant leaves."""
    _need(r >= 1, f"corona needs r >= 1, got {r}")
    k = h.n
    edges = list(h.edges())
    for i in range(k):
        edges += [(i, k + i * r + j) for j in range(r)]
    return Graph.from_edges(k * (r + 1), edges, f"corona:{h.label or h.to_graph6()},{r}")


def grl(r: int, ell: int) -> Graph:
    """K_r o K_1 with r - ell leaves removed."""
    _need(r >= 3, f"G(r,ell) needs r >= 3, got {r}")
    _need(1 <= ell <= r - 2, f"G(r,ell) needs 1 <= ell <= r-2, got ell={ell}")
    edges = [(u, v) for u in range(r) for v in range(u + 1, r)]
    edges += [(j, r + j) for j in range(ell)]
    return Graph.from_edges(r + ell, edges, f"grl:{r},{ell}")


def h_family(r: int) -> Graph:
    """Two (r+2)-cliques joined by an r-edge matching."""
    _need(r >= 2, f"H(r) needs r >= 2, got {r}")
    n = 2 * r + 4
    v1 = range(0, r + 2)
    v2 = range(r + 2, n)
    edges = [(u, v) for u in v1 for v in v1 if u < v]
    edges += [(u, v) for u in v2 for v in v2 if u < v]
    edges += [(i, r + 2 + i) for i in range(r)]
    return Graph.from_edges(n, edges, f"h:{r}")


_HR_BASE_EDGES = [
    (0, 1), (1, 2), (2, 5), (4, 5), (3, 4), (0, 3), (0, 5), (1, 5), (1, 4), (4, 7),
    (3, 7), (3, 6), (4, 6), (0, 4), (2, 4), (2, 3), (1, 3), (5, 7), (5, 6),
]
HR_TWINS_BASE = (6, 7)


def hr_family(r: int) -> Graph:
    """Base graph on 8 vertices (twins 6, 7) with r - 2 further twins appended."""
    _need(r >= 2, f"H_r needs r >= 2, got {r}")
    twin_nbrs = (3, 4, 5)
    edges = list(_HR_BASE_EDGES)
    for k in range(r - 2):
        edges += [(8 + k, w) for w in twin_nbrs]
    return Graph.from_edges(6 + r, edges, f"hr:{r}")


def hr_twins(r: int) -> list[int]:
    return [6, 7] + [8 + k for k in range(r - 2)]


def zfpoly_g() -> Graph:
    one_based = [(4, 3), (3, 6), (3, 1), (1, 5), (5, 2), (2, 1)]
    return Graph.from_edges(6, [(u - 1, v - 1) for u, v in one_based], "zfpoly_g")


def zfpoly_h() -> Graph:
    one_based = [(4, 2), (2, 3), (3, 5), (5, 2), (2, 1), (1, 3), (3, 4), (4, 5), (5, 6), (6, 4)]
    return Graph.from_edges(6, [(u - 1, v - 1) for u, v in one_based], "zfpoly_h")


_BUILDERS = {
    "empty": (empty, 1),
    "complete": (complete, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "paw": (paw, 0),
    "double_star": (double_star, 2),
    "hypercube": (hypercube, 1),
    "grl": (grl, 2),
    "h": (h_family, 1),
    "hr": (hr_family, 1),
    "zfpoly_g": (zfpoly_g, 0),
    "zfpoly_h": (zfpoly_h, 0),
}
_ALIASES = {
    "K": "complete", "P": "path", "C": "cycle", "ds": "double_star",
    "h_family": "h", "hr_family": "hr", "Q": "hypercube",
}
_SHORTHAND = re.compile(r"^(K|P|C|Q|complete|path|cycle|star|hypercube)(\d+)$")


def family(name: str, *args) -> Graph:
    """Build a named family member, e.g. ``family("h", 2)``."""
    name = _ALIASES.get(name, name)
    if name == "corona":
        _need(len(args) == 2, "corona takes (graph, r)")
        h, r = args
        if isinstance(h, str):
            h = parse_family(h)
        return corona(h, int(r))
    if name not in _BUILDERS:
        raise FamilyError(f"unknown family {name!r}; known: {', '.join(sorted(list(_BUILDERS) + ['corona']))}")
    builder, arity = _BUILDERS[name]
    _need(len(args) == arity, f"family {name!r} takes {arity} argument(s), got {len(args)}")
    try:
        ints = [int(a) for a in args]
    except (TypeError, ValueError):
        raise FamilyError(f"family {name!r} needs integer arguments, got {args!r}") from None
    return builder(*ints)


def parse_family(descriptor: str) -> Graph:
    """Parse ``name:a,b`` (optionally followed by ``+u-v`` edge additions).

    Shorthands ``K5``, ``P4``, ``C6``, ``Q3``, ``cycle6`` are accepted, and
    ``corona:<descriptor>,<r>`` nests a descriptor for the core graph. On a
    cycle the suffix ``+chord`` adds the long diagonal 0 - n//2.
    """
    text = descriptor.strip()
    base, *extra = text.split("+")
    m = _SHORTHAND.match(base)
    if m:
        g = family(m.group(1), int(m.group(2)))
    else:
        name, _, argtext = base.partition(":")
        if name == "corona":
            inner, sep, r = argtext.rpartition(",")
            _need(bool(sep), "corona descriptor must look like corona:<graph>,<r>")
            g = family("corona", inner, r)
        else:
            args = [a for a in argtext.split(",") if a] if argtext else []
            g = family(name, *args)
    is_cycle = g.label.startswith("cycle:")
    for e in extra:
        if e == "chord":
            _need(is_cycle and g.n >= 4, "+chord applies to a cycle on at least 4 vertices")
            e = f"0-{g.n // 2}"
        u, sep, v = e.partition("-")
        _need(bool(sep), f"edge addition {e!r} must look like u-v")
        try:
            a, b = int(u), int(v)
        except ValueError:
            raise FamilyError(f"edge addition {e!r} must use integer vertices") from None
        _need(0 <= a < g.n and 0 <= b < g.n and a != b, f"edge {e!r} out of range")
        _need(not g.has_edge(a, b), f"edge {e!r} already present")
        g = Graph.from_edges(g.n, g.edges() + [(a, b)], f"{g.label}+{a}-{b}")
    return g


def is_family_descriptor(text: str) -> bool:
    base = text.strip().split("+")[0]
    name = base.partition(":")[0]
    return bool(_SHORTHAND.match(base)) or name == "corona" or name in _BUILDERS or name in _ALIASES


def parse_graph_input(text: str) -> Graph:
    """Family descriptor if the name is a known family, otherwise graph6."""
    if is_family_descriptor(text):
        return parse_family(text)
    g = parse_graph6(text)
    return Graph(g.n, g.adj, text.strip())
