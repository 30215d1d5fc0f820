"""The four X-set rules (zero forcing, PSD zero forcing, domination, power
domination), their closure procedures, and an exhaustive audit of the X-set
parameter axioms."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .bitset import fmt, full, iter_members, members
from .errors import SizeGuardError
from .graph import Graph, closed_neighborhood, components_within

AUDIT_MAX_ORDER = 16


class XRule(str, enum.Enum):
    ZERO_FORCING = "zf"
    PSD_ZERO_FORCING = "psd"
    DOMINATION = "dom"
    POWER_DOMINATION = "pd"

    @classmethod
    def parse(cls, text: "str | XRule") -> "XRule":
        if isinstance(text, XRule):
            return text
        aliases = {
            "zero-forcing": "zf", "zero_forcing": "zf", "z": "zf",
            "psd-zero-forcing": "psd", "z+": "psd", "zplus": "psd",
            "domination": "dom", "gamma": "dom",
            "power-domination": "pd", "power_domination": "pd",
        }
        key = aliases.get(text.lower(), text.lower())
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown rule {text!r}; expected one of zf, psd, dom, pd") from None


# (forcer, forced) pairs in the order the forces were applied
ForceRecord = list[tuple[int, int]]


def zf_closure(g: Graph, s: int) -> tuple[int, ForceRecord]:
    """Apply the standard color change rule until nothing changes.

    Each round scans blue vertices in ascending order; a vertex with exactly
    one white neighbor forces it immediately.
    """
    adj = g.adj
    blue = s
    forces: ForceRecord = []
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if not blue >> v & 1:
                continue
            white = adj[v] & ~blue
            if white and not white & (white - 1):
                blue |= white
                forces.append((v, white.bit_length() - 1))
                changed = True
    return blue, forces


def is_zero_forcing(g: Graph, s: int) -> bool:
    adj = g.adj
    target = full(g.n)
    blue = s
    changed = True
    while changed and blue != target:
        changed = False
        for v in iter_members(blue):
            white = adj[v] & ~blue
            if white and not white & (white - 1):
                blue |= white
                changed = True
    return blue == target


def psd_closure(g: Graph, s: int) -> int:
    """Apply the PSD color change rule until nothing changes.

    Components of the white subgraph are recomputed once per round. A force
    chosen against a stale component stays legal: components only shrink as
    vertices turn blue, so a sole white neighbor remains the sole one.
    """
    adj = g.adj
    target = full(g.n)
    blue = s
    while blue != target:
        comps = components_within(g, target & ~blue)
        before = blue
        for u in iter_members(blue):
            nbrs = adj[u]
            for comp in comps:
                white = nbrs & comp & ~blue
                if white and not white & (white - 1):
                    blue |= white
        if blue == before:
            break
    return blue


def is_x_set(g: Graph, s: int, rule: XRule) -> bool:
    rule = XRule.parse(rule)
    if rule is XRule.ZERO_FORCING:
        return is_zero_forcing(g, s)
    if rule is XRule.PSD_ZERO_FORCING:
        return psd_closure(g, s) == full(g.n)
    if rule is XRule.DOMINATION:
        return closed_neighborhood(g, s) == full(g.n)
    if rule is XRule.POWER_DOMINATION:
        return is_zero_forcing(g, closed_neighborhood(g, s))
    raise AssertionError(rule)


def reversal(g: Graph, forces: ForceRecord) -> int:
    """Vertices that perform no force in ``forces``."""
    forcers = 0
    for v, _ in forces:
        forcers |= 1 << v
    return full(g.n) & ~forcers


@dataclass
class AxiomCheck:
    name: str
    passed: bool
    applicable: bool = True
    witness: str | None = None


@dataclass
class AxiomReport:
    rule: XRule
    checks: list[AxiomCheck] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "rule": self.rule.value,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "applicable": c.applicable, "witness": c.witness}
                for c in self.checks
            ],
            "notes": list(self.notes),
        }


def audit_axioms(g: Graph, rule: XRule) -> AxiomReport:
    """Exhaustively test the four X-set parameter conditions on ``g``."""
    rule = XRule.parse(rule)
    if g.n > AUDIT_MAX_ORDER:
        raise SizeGuardError(f"audit_axioms supports n <= {AUDIT_MAX_ORDER}, got {g.n}")
    n = g.n
    table = bytearray(1 << n)
    for s in range(1 << n):
        table[s] = is_x_set(g, s, rule)
    report = AxiomReport(rule)

    witness = None
    for s in range(1 << n):
        if not table[s]:
            continue
        for v in range(n):
            if not table[s | (1 << v)]:
                witness = f"{fmt(s)} is an X-set but {fmt(s | (1 << v))} is not"
                break
        if witness:
            break
    report.checks.append(AxiomCheck("superset_closed", witness is None, witness=witness))

    report.checks.append(AxiomCheck(
        "empty_set_rejected", not table[0], witness=None if not table[0] else "{} accepted"))

    comps = components_within(g, g.vertices)
    if len(comps) > 1:
        pieces = []
        for comp in comps:
            sub, keep = g.induced(comp)
            pieces.append((keep, sub))
        witness = None
        for s in range(1 << n):
            per_comp = True
            for keep, sub in pieces:
                local = 0
                for i, v in enumerate(keep):
                    if s >> v & 1:
                        local |= 1 << i
                if not is_x_set(sub, local, rule):
                    per_comp = False
                    break
            if per_comp != bool(table[s]):
                witness = f"{fmt(s)}: whole graph says {bool(table[s])}, components say {per_comp}"
                break
        report.checks.append(AxiomCheck("component_decomposition", witness is None, witness=witness))
    else:
        report.checks.append(AxiomCheck("component_decomposition", True, applicable=False))

    if not g.has_isolated():
        witness = None
        for v in range(n):
            s = full(n) & ~(1 << v)
            if not table[s]:
                witness = f"{fmt(s)} is not an X-set"
                break
        report.checks.append(AxiomCheck("all_n_minus_1_sets", witness is None, witness=witness))
    else:
        report.checks.append(AxiomCheck("all_n_minus_1_sets", True, applicable=False))
        report.notes.append(
            f"isolated vertices {members(g.isolated_vertices())} must belong to every X-set")
    return report
