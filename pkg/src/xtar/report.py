"""Analysis reports and the invariant check suite behind the CLI."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .bitset import fmt, members
from .errors import IsolatedVertexError
from .graph import Graph, emit_graph6
from .iso import irrelevant_vertices, nu_map
from .rules import AUDIT_MAX_ORDER, XRule, audit_axioms, is_zero_forcing, reversal, zf_closure
from .tar import (
    INTERVAL_LIMITS, build_tar, degree_stats, interval_property_check, is_bipartite,
    is_hypercube, level_report, thresholds,
)
from .xsets import XProfile, build_profile, x_polynomial


@dataclass
class AnalysisReport:
    graph6: str
    rule: str
    n: int
    x_number: int
    upper_x: int
    underline_x0: int
    x0: int
    polynomial: list[int]
    irrelevant: list[int]
    minimal_set_sizes: dict[str, int]
    levels: list[dict]
    isolated_shift: int = 0

    def as_dict(self) -> dict:
        return asdict(self)


def _prepare(g: Graph, normalize: bool) -> tuple[Graph, int]:
    if not g.has_isolated():
        return g, 0
    if not normalize:
        raise IsolatedVertexError(
            f"graph has isolated vertices {members(g.isolated_vertices())}; "
            "rerun with --normalize to strip them")
    if g.num_edges() == 0:
        raise IsolatedVertexError("graph has no edges; nothing is left after stripping isolated vertices")
    return g.without_isolated()


def analyze(g: Graph, rule: XRule | str, normalize: bool = False,
            override: bool = False) -> AnalysisReport:
    """Full numeric summary of ``g`` under ``rule``.

    With ``normalize`` the isolated vertices are dropped first and their count
    is reported as ``isolated_shift``; every X-number of the original graph is
    the reported one plus that shift.
    """
    rule = XRule.parse(rule)
    base, shift = _prepare(g, normalize)
    p = build_profile(base, rule, override=override)
    lower, upper = thresholds(p)
    poly = x_polynomial(p)
    levels = [
        {"k": lv.k, "count": poly[lv.k], "connected": lv.connected}
        for lv in level_report(p)
    ]
    return AnalysisReport(
        graph6=emit_graph6(base),
        rule=rule.value,
        n=base.n,
        x_number=p.x_number,
        upper_x=p.upper_x,
        underline_x0=lower,
        x0=upper,
        polynomial=poly,
        irrelevant=members(irrelevant_vertices(p)),
        minimal_set_sizes={str(k): c for k, c in p.minimal_size_counts().items()},
        levels=levels,
        isolated_shift=shift,
    )


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str | None = None


@dataclass
class CheckSuite:
    graph6: str
    rule: str
    irrelevant: list[int]
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, name: str, passed: bool, detail: str | None = None):
        self.results.append(CheckResult(name, bool(passed), detail))

    def as_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "rule": self.rule,
            "passed": self.passed,
            "irrelevant": self.irrelevant,
            "checks": [asdict(r) for r in self.results],
        }


def upward_connectivity_holds(p: XProfile) -> tuple[bool, str | None]:
    """Connectivity above the upper X-number propagates to every higher level,
    and the threshold identities that follow from it hold."""
    report = level_report(p)
    levels = {lv.k: lv.connected for lv in report}
    sizes = {lv.k: lv.num_sets for lv in report}
    ux = p.upper_x
    for k in sorted(levels):
        if k > ux and levels[k]:
            broken = [j for j in levels if j > k and not levels[j]]
            if broken:
                return False, f"level {k} connected but level {broken[0]} is not"
    lower, upper = thresholds(p)
    if levels.get(ux + 1) and upper != ux + 1:
        return False, f"level {ux + 1} connected but x0 = {upper}"
    if lower > ux and lower != upper:
        return False, f"lower threshold {lower} exceeds {ux} yet differs from x0 {upper}"
    if not ux + 1 <= upper <= min(ux + p.x_number, p.n):
        return False, f"x0 = {upper} outside [{ux + 1}, {min(ux + p.x_number, p.n)}]"
    for s in p.minimal_sets:
        # an isolated point in a level with other sets splits it
        if levels[s.bit_count()] and sizes[s.bit_count()] > 1:
            return False, f"level {s.bit_count()} connected despite minimal set {fmt(s)}"
    return True, None


def reversal_holds(p: XProfile) -> tuple[bool, str | None]:
    g = p.graph
    for s in p.all_sets():
        closure, forces = zf_closure(g, s)
        rev = reversal(g, forces)
        if not is_zero_forcing(g, rev):
            return False, f"reversal {fmt(rev)} of {fmt(s)} is not zero forcing"
    return True, None


def nu_involution_holds(p: XProfile, r: int) -> tuple[bool, str | None]:
    family = p.set_family
    for s in family:
        t = s ^ r
        if t == s or t not in family or (t ^ r) != s:
            return False, f"nu_{fmt(r)} fails at {fmt(s)}"
    return True, None


def run_checks(g: Graph, rule: XRule | str, normalize: bool = False) -> CheckSuite:
    rule = XRule.parse(rule)
    base, _ = _prepare(g, normalize)
    p = build_profile(base, rule)
    irr = irrelevant_vertices(p)
    suite = CheckSuite(emit_graph6(base), rule.value, members(irr))

    if base.n <= AUDIT_MAX_ORDER:
        audit = audit_axioms(base, rule)
        bad = [c for c in audit.checks if not c.passed]
        suite.add("axioms", audit.passed, bad[0].witness if bad else None)

    tar = build_tar(p)
    if base.n >= 2:
        hi, lo = degree_stats(tar)
        suite.add("max_degree_is_n", hi == base.n, f"{hi} vs {base.n}")
        suite.add("min_degree_is_n_minus_upper_x", lo == base.n - p.upper_x,
                  f"{lo} vs {base.n - p.upper_x}")
    suite.add("bipartite", is_bipartite(tar))
    suite.add("not_hypercube", not is_hypercube(tar))
    if len(tar) <= INTERVAL_LIMITS[2]:
        rep = interval_property_check(tar, 2)
        suite.add("induced_squares_are_intervals", rep.passed, f"{rep.cubes_found} squares")
    ok, detail = upward_connectivity_holds(p)
    suite.add("upward_connectivity", ok, detail)
    if rule is XRule.ZERO_FORCING:
        ok, detail = reversal_holds(p)
        suite.add("reversal_is_zero_forcing", ok, detail)
    if rule is XRule.DOMINATION:
        suite.add("no_dom_irrelevant", irr == 0, fmt(irr))
    if irr:
        ok = nu_map(p, irr)
        suite.add("nu_irrelevant_is_automorphism", ok)
        for v in members(irr):
            ok, detail = nu_involution_holds(p, 1 << v)
            suite.add(f"nu_{v}_perfect_matching", ok, detail)
    return suite
