"""Uncommonness certificates, threshold scans and lemma audits.

A certificate is only ever issued from an exact rainbow count in a concrete base
coloring; the closed-form lower bounds are carried along for information.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .coloring import DEFAULT_MAX_VERTICES, BlowupColoring, EdgeColoring, materialize, parallel_coloring
from .counting import DEFAULT_MAX_VISITS, count_rainbow_complete
from .errors import DomainError, InvariantViolation, ResourceError
from .exact import (
    baseline_proportion,
    blowup_lower_bound,
    criterion_rhs,
    mrb_lower_bound,
    nonrainbow_bound_k4,
    nonrainbow_bound_kt,
    rainbow_count_lower_bound,
    semifinal_holds,
    semifinal_value,
)
from .simulate import hill_climb

SOURCES = ("parallel", "file", "search")


@dataclass(frozen=True)
class Budget:
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_visits: int = DEFAULT_MAX_VISITS


def _rat(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


@dataclass(frozen=True)
class Certificate:
    t: int
    r: int
    b: int
    source: str
    a: int
    criterion_rhs: Fraction
    mrb_lower: Fraction
    baseline: Fraction
    verdict_uncommon: bool
    # informational: relaxed lemma-based count, only defined for t >= 4
    lemma_lower_bound: Fraction | None = None

    def to_json(self) -> dict:
        out = {
            "t": self.t,
            "r": self.r,
            "b": self.b,
            "a": str(self.a),
            "criterion_rhs": _rat(self.criterion_rhs),
            "mrb_lower": _rat(self.mrb_lower),
            "baseline": _rat(self.baseline),
            "verdict_uncommon": self.verdict_uncommon,
            "source": self.source,
        }
        if self.lemma_lower_bound is not None:
            out["lemma_lower_bound"] = _rat(self.lemma_lower_bound)
        return out


def certify_coloring(coloring: EdgeColoring, t: int, source: str = "file",
                     budget: Budget = Budget()) -> Certificate:
    """Certify ``r``-rainbow-uncommonness of ``K_t`` from a base coloring of ``K_b``."""
    if source not in SOURCES:
        raise DomainError(f"unknown coloring source {source!r}")
    b, r = coloring.n, coloring.r
    if not 2 <= t <= b:
        raise DomainError(f"need 2 <= t <= b, got t={t} b={b}")
    try:
        a = count_rainbow_complete(coloring, t, max_visits=budget.max_visits).rainbow
    except ResourceError as exc:
        raise ResourceError(f"{exc}; the bound-based path (rainbow_count_lower_bound) avoids enumeration") from None
    rhs = criterion_rhs(b, t, r)
    mrb = mrb_lower_bound(a, b, t)
    base = baseline_proportion(r, comb(t, 2))
    by_count = a > rhs
    by_density = mrb > base
    if by_count != by_density:
        raise InvariantViolation(f"criterion comparisons disagree at t={t} r={r} b={b}: {by_count} vs {by_density}")
    if a > comb(b, t):
        raise InvariantViolation(f"rainbow count {a} exceeds C({b},{t})")
    lemma = rainbow_count_lower_bound(t, r) if t >= 4 and r >= comb(t, 2) and b == r else None
    return Certificate(t, r, b, source, a, rhs, mrb, base, by_count, lemma)


def search_coloring(t: int, r: int, max_steps: int = 1000) -> EdgeColoring:
    """Parallel coloring of ``K_r`` improved by deterministic hill climbing on rainbow ``K_t``."""
    coloring, _ = hill_climb(parallel_coloring(r), t, max_steps)
    return coloring


def certify_uncommon(t: int, r: int, source: str = "auto", budget: Budget = Budget(),
                     search_steps: int = 1000) -> Certificate:
    """Certificate for ``K_t`` with ``r`` colors on a base ``K_r``.

    ``source="parallel"`` uses the parallel coloring as is; ``source="search"``
    first hill-climbs from it (deterministic). ``"auto"`` tries the parallel
    coloring and falls back to search when it does not certify; this matters
    for e.g. ``t=5, r=10``, where the parallel coloring has no rainbow ``K_5``.
    """
    if t < 3 or r < comb(t, 2):
        raise DomainError(f"need t >= 3 and r >= C(t,2) = {comb(t, 2)}, got t={t} r={r}")
    if source == "auto":
        cert = certify_coloring(parallel_coloring(r), t, "parallel", budget)
        if cert.verdict_uncommon:
            return cert
        source = "search"
    if source == "parallel":
        coloring = parallel_coloring(r)
    elif source == "search":
        coloring = search_coloring(t, r, search_steps)
    else:
        raise DomainError(f"source must be auto, parallel or search, got {source!r}")
    return certify_coloring(coloring, t, source, budget)


@dataclass(frozen=True)
class ThresholdResult:
    t: int
    r_max: int
    min_r: int | None
    holds_through_r_max: bool
    failures_above: tuple = field(default=())

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "r_max": self.r_max,
            "min_r": self.min_r,
            "holds_through_r_max": self.holds_through_r_max,
            "failures_above": list(self.failures_above),
        }


def find_min_r_semifinal(t: int, r_max: int) -> ThresholdResult:
    """Linear exact scan of ``C(t,2)..r_max`` for the first ``r`` where the inequality holds."""
    if t < 4 or r_max < comb(t, 2):
        raise DomainError(f"need t >= 4 and r_max >= C(t,2) = {comb(t, 2)}")
    verdicts = {r: semifinal_holds(t, r) for r in range(comb(t, 2), r_max + 1)}
    min_r = next((r for r, ok in verdicts.items() if ok), None)
    if min_r is None:
        return ThresholdResult(t, r_max, None, False)
    failures = tuple(r for r, ok in verdicts.items() if r > min_r and not ok)
    return ThresholdResult(t, r_max, min_r, not failures, failures)


@dataclass(frozen=True)
class RecurrenceReport:
    b: int
    t: int
    depth: int
    n: int
    a: int
    exact_counts: tuple  # rainbow counts at depths 1..depth
    bound: Fraction
    holds: bool
    steps_hold: bool

    @property
    def exact_count(self) -> int:
        return self.exact_counts[-1]

    def to_json(self) -> dict:
        return {
            "b": self.b,
            "t": self.t,
            "depth": self.depth,
            "n": self.n,
            "a": str(self.a),
            "exact_counts": [str(c) for c in self.exact_counts],
            "exact_count": str(self.exact_count),
            "bound": _rat(self.bound),
            "holds": self.holds,
            "steps_hold": self.steps_hold,
        }


def verify_recurrence(base: EdgeColoring, t: int, depth: int, budget: Budget = Budget()) -> RecurrenceReport:
    """Count rainbow ``K_t`` in materialized blow-ups and compare with the closed-form bound.

    Also checks the one-level step ``F(b^j) >= b F(b^{j-1}) + a b^{t(j-1)}`` at every depth.
    """
    b = base.n
    if depth < 1 or t < 2 or t > b:
        raise DomainError(f"need depth >= 1 and 2 <= t <= b, got depth={depth} t={t} b={b}")
    if b**depth > budget.max_vertices:
        raise ResourceError(f"blow-up to {b**depth} vertices exceeds the cap of {budget.max_vertices}")
    counts = []
    for j in range(1, depth + 1):
        colored = materialize(BlowupColoring(base, j), budget.max_vertices)
        counts.append(count_rainbow_complete(colored, t, max_visits=budget.max_visits).rainbow)
    a = counts[0]
    steps_ok = all(counts[j] >= b * counts[j - 1] + a * b ** (t * j) for j in range(1, depth))
    bound = blowup_lower_bound(a, b, t, depth)
    return RecurrenceReport(b, t, depth, b**depth, a, tuple(counts), bound, counts[-1] >= bound, steps_ok)


@dataclass(frozen=True)
class AuditReport:
    t: int
    r: int
    exact_non_rainbow: int
    lemma_bound: int

    @property
    def bound_respected(self) -> bool:
        return self.exact_non_rainbow <= self.lemma_bound

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "r": self.r,
            "exact_non_rainbow": str(self.exact_non_rainbow),
            "lemma_bound": str(self.lemma_bound),
            "bound_respected": self.bound_respected,
        }


def audit_lemma_bounds(t: int, r: int, budget: Budget = Budget()) -> AuditReport:
    if t == 4:
        bound = nonrainbow_bound_k4(r)
    elif t >= 5:
        bound = nonrainbow_bound_kt(r, t)
    else:
        raise DomainError(f"lemma bounds cover t >= 4, got t={t}")
    res = count_rainbow_complete(parallel_coloring(r), t, max_visits=budget.max_visits)
    return AuditReport(t, r, res.non_rainbow, bound)


def semifinal_record(t: int, r: int) -> dict:
    """Exact value and verdict of the cleared inequality, for reporting."""
    v = semifinal_value(t, r)
    return {"t": t, "r": r, "value": str(v), "holds": v > 0}
