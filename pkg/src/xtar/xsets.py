"""Complete catalogs of X-sets (profiles) and the numbers derived from them."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

from .errors import SizeGuardError
from .graph import Graph
from .rules import XRule, is_x_set

SWEEP_MAX_ORDER = 24


@dataclass(frozen=True)
class XProfile:
    """Every X-set of ``graph`` under ``rule``.

    ``sets_by_size[k]`` lists the X-sets of cardinality k in ascending mask
    order; ``minimal_sets`` is sorted by (size, mask).
    """

    graph: Graph
    rule: XRule
    sets_by_size: tuple[tuple[int, ...], ...]
    minimal_sets: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def x_number(self) -> int:
        return min(k for k, layer in enumerate(self.sets_by_size) if layer)

    @property
    def upper_x(self) -> int:
        return max(s.bit_count() for s in self.minimal_sets)

    @property
    def total(self) -> int:
        return sum(len(layer) for layer in self.sets_by_size)

    def all_sets(self) -> list[int]:
        return [s for layer in self.sets_by_size for s in layer]

    @cached_property
    def set_family(self) -> frozenset[int]:
        return frozenset(self.all_sets())

    def contains(self, s: int) -> bool:
        return s in self.set_family

    def minimal_size_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for s in self.minimal_sets:
            out[s.bit_count()] = out.get(s.bit_count(), 0) + 1
        return dict(sorted(out.items()))


def build_profile(g: Graph, rule: XRule | str, override: bool = False) -> XProfile:
    """Sweep all 2^n subsets layer by layer, smallest first.

    A subset with an X-set one element smaller is itself an X-set (superset
    closure), so the rule is evaluated only on subsets all of whose
    one-smaller subsets fail; those that pass are exactly the minimal X-sets.
    Results are cached per (labeled graph, rule).
    """
    rule = XRule.parse(rule)
    if g.n > SWEEP_MAX_ORDER and not override:
        raise SizeGuardError(
            f"build_profile sweeps 2^n subsets; n={g.n} exceeds {SWEEP_MAX_ORDER} (use --override or override=True)")
    return _build_profile(Graph(g.n, g.adj), rule, g.label)


@lru_cache(maxsize=4096)
def _build_profile(g: Graph, rule: XRule, label: str) -> XProfile:
    n = g.n
    member = bytearray(1 << n)
    layers: list[tuple[int, ...]] = []
    minimal: list[int] = []
    for k in range(n + 1):
        layer = []
        for combo in combinations(range(n), k):
            s = 0
            for v in combo:
                s |= 1 << v
            hit = False
            for v in combo:
                if member[s ^ (1 << v)]:
                    hit = True
                    break
            if not hit:
                if not is_x_set(g, s, rule):
                    continue
                minimal.append(s)
            member[s] = 1
            layer.append(s)
        layer.sort()
        layers.append(tuple(layer))
    minimal.sort(key=lambda m: (m.bit_count(), m))
    return XProfile(Graph(n, g.adj, label), rule, tuple(layers), tuple(minimal))


def x_polynomial(profile: XProfile) -> list[int]:
    """Coefficients c[k] = number of X-sets of size k, for k = 0..n."""
    return [len(layer) for layer in profile.sets_by_size]


def minimal_sets_of_size(profile: XProfile, k: int) -> list[int]:
    return [s for s in profile.minimal_sets if s.bit_count() == k]


def vertex_occurrences(profile: XProfile) -> list[tuple[int, ...]]:
    """Per vertex: how many minimal X-sets of each size contain it."""
    sizes = sorted({s.bit_count() for s in profile.minimal_sets})
    out = []
    for v in range(profile.n):
        bit = 1 << v
        out.append(tuple(sum(1 for s in profile.minimal_sets if s & bit and s.bit_count() == k)
                         for k in sizes))
    return out


def format_polynomial(coeffs: list[int]) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) or "0"
