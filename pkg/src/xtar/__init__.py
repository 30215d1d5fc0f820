"""X-set token addition/removal reconfiguration graphs for small graphs."""
from .bitset import fmt, members, vset
from .canon import canonical_form, certificate, enumerate_nonisomorphic
from .errors import FamilyError, Graph6Error, IsolatedVertexError, SizeGuardError, XtarError
from .families import family, parse_family, parse_graph_input
from .graph import Graph, closed_neighborhood, components_within, emit_graph6, parse_graph6
from .iso import (
    Bijection, IsoVerdict, brute_tar_iso, find_xset_bijection, irrelevant_vertices, nu_map,
    tar_isomorphic, twin_classes, twin_deletion_check,
)
from .rules import XRule, audit_axioms, is_x_set, psd_closure, zf_closure
from .survey import SurveyResult, uniqueness_survey
from .tar import (
    TarGraph, build_tar, degree_stats, interval_property_check, is_bipartite, is_hypercube,
    level_components, level_connected, level_connectivity, tar_cartesian, thresholds,
)
from .xsets import XProfile, build_profile, minimal_sets_of_size, x_polynomial

__version__ = "0.1.0"

__all__ = [
    "audit_axioms",
    "Bijection",
    "brute_tar_iso",
    "build_profile",
    "build_tar",
    "canonical_form",
    "certificate",
    "closed_neighborhood",
    "components_within",
    "degree_stats",
    "emit_graph6",
    "enumerate_nonisomorphic",
    "family",
    "FamilyError",
    "find_xset_bijection",
    "fmt",
    "Graph",
    "Graph6Error",
    "interval_property_check",
    "irrelevant_vertices",
    "is_bipartite",
    "is_hypercube",
    "is_x_set",
    "IsolatedVertexError",
    "IsoVerdict",
    "level_components",
    "level_connected",
    "level_connectivity",
    "members",
    "minimal_sets_of_size",
    "nu_map",
    "parse_family",
    "parse_graph6",
    "parse_graph_input",
    "psd_closure",
    "SizeGuardError",
    "SurveyResult",
    "tar_cartesian",
    "tar_isomorphic",
    "TarGraph",
    "thresholds",
    "twin_classes",
    "twin_deletion_check",
    "uniqueness_survey",
    "vset",
    "x_polynomial",
    "XProfile",
    "XRule",
    "XtarError",
    "zf_closure",
]
