"""Exhaustive survey: which graphs of a given order have a TAR graph shared
with no other graph of that order."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .canon import certificate, enumerate_nonisomorphic
from .graph import Graph
from .iso import find_xset_bijection
from .rules import XRule
from .xsets import XProfile, build_profile, vertex_occurrences, x_polynomial


@dataclass
class SurveyResult:
    n: int
    rule: XRule
    total: int
    unique: int
    classes: list[list[str]] = field(default_factory=list)

    @property
    def ratio(self) -> float:
        return self.unique / self.total if self.total else 0.0

    def row(self) -> str:
        ratio = f"{self.ratio:.4f}".rstrip("0").rstrip(".")
        return f"{self.total} {self.unique} {ratio}"


def _invariant_key(p: XProfile) -> tuple:
    return (
        p.n, p.x_number, p.upper_x, tuple(x_polynomial(p)),
        tuple(p.minimal_size_counts().items()), tuple(sorted(vertex_occurrences(p))),
    )


def _profile_task(args):
    g, rule = args
    return build_profile(g, rule)


def _classify_bucket(profiles: list[XProfile]) -> list[list[int]]:
    # TAR isomorphism is an equivalence, so one representative per class suffices
    classes: list[list[int]] = []
    for i, p in enumerate(profiles):
        for cls in classes:
            if find_xset_bijection(profiles[cls[0]], p) is not None:
                cls.append(i)
                break
        else:
            classes.append([i])
    return classes


def uniqueness_survey(n: int, rule: XRule | str = XRule.ZERO_FORCING,
                      graphs: Iterable[Graph] | None = None, jobs: int = 1,
                      allow_long: bool = False) -> SurveyResult:
    """Partition the no-isolated-vertex graphs of order ``n`` into classes
    with isomorphic X-TAR graphs.

    ``graphs`` replaces internal generation (for example a graph6 catalog);
    isomorphic duplicates in it are collapsed by certificate. Results do not
    depend on ``jobs``.
    """
    rule = XRule.parse(rule)
    if graphs is None:
        pool = list(enumerate_nonisomorphic(n, True, allow_long=allow_long))
    else:
        seen: dict[str, Graph] = {}
        for g in graphs:
            if g.n != n or g.has_isolated():
                continue
            cert = certificate(g)
            seen.setdefault(cert, Graph(g.n, g.adj, cert))
        pool = [seen[c] for c in sorted(seen)]

    tasks = [(g, rule) for g in pool]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            profiles = list(ex.map(_profile_task, tasks, chunksize=64))
    else:
        profiles = [_profile_task(t) for t in tasks]

    buckets: dict[tuple, list[int]] = {}
    for i, p in enumerate(profiles):
        buckets.setdefault(_invariant_key(p), []).append(i)
    keys = sorted(buckets)
    bucket_profiles = [[profiles[i] for i in buckets[k]] for k in keys]
    if jobs > 1 and len(bucket_profiles) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            local = list(ex.map(_classify_bucket, bucket_profiles, chunksize=16))
    else:
        local = [_classify_bucket(b) for b in bucket_profiles]

    classes = []
    for key, groups in zip(keys, local):
        idx = buckets[key]
        for grp in groups:
            classes.append(sorted(pool[idx[i]].label for i in grp))
    classes.sort()
    unique = sum(1 for c in classes if len(c) == 1)
    return SurveyResult(n, rule, len(pool), unique, classes)
