"""Multiplicities of points on stratum varieties: fast path and oracle.

The fast path multiplies the two one-sided multiplicities; the oracle
computes the tangent-cone degree of the intersection ideal directly.  The
sweep harness enumerates nested stratum triples, samples rational cell
points from a grid, and emits one report per point with degree, cone and
smoothness verdicts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .charts import (
    AffinePoint,
    Chart,
    build_chart,
    evaluate_ideal,
    in_cell,
    is_cone_over_origin,
    richardson_ideal,
    opposite_ideal,
    schubert_ideal,
    translate_to_origin,
)
from .groebner import PolyIdeal
from .hilbert import ideal_dimension, projective_degree
from .localmult import multiplicity_at_origin
from .weyl import CosetRep, GrassShape, all_coset_reps, bruhat_leq, format_coset

DEFAULT_GRID = (Fraction(-2), Fraction(-1), Fraction(0), Fraction(1), Fraction(2))


class PreconditionError(ValueError):
    """A Bruhat-order precondition does not hold."""


class MembershipError(ValueError):
    """The supplied point does not lie on the required variety."""


class KernelInconsistencyError(RuntimeError):
    """Cross-checks that must hold by theory failed; do not trust results."""


@dataclass(frozen=True)
class EngineBudget:
    """Desk-scale guard rails; exceeding them raises or truncates
    explicitly rather than silently degrading."""

    max_variables: int = 12
    max_grid_values: int = 5
    point_cap: int = 200
    max_instances: Optional[int] = None


# Memo tables keyed by the canonical reduced basis of an ideal.  Pure
# caches: safe to clear at any time, per-process under multiprocessing.
_MULT_CACHE: dict = {}
_DIM_CACHE: dict = {}
_DEGREE_CACHE: dict = {}


def clear_caches():
    _MULT_CACHE.clear()
    _DIM_CACHE.clear()
    _DEGREE_CACHE.clear()


def _mult_of(ideal: PolyIdeal) -> int:
    key = ideal.canonical_key()
    value = _MULT_CACHE.get(key)
    if value is None:
        value = multiplicity_at_origin(ideal)
        _MULT_CACHE[key] = value
    return value


def _dim_of(ideal: PolyIdeal) -> int:
    key = ideal.canonical_key()
    value = _DIM_CACHE.get(key)
    if value is None:
        value = ideal_dimension(ideal)
        _DIM_CACHE[key] = value
    return value


def _degree_of(ideal: PolyIdeal) -> int:
    key = ideal.canonical_key()
    value = _DEGREE_CACHE.get(key)
    if value is None:
        value = projective_degree(ideal)
        _DEGREE_CACHE[key] = value
    return value


def _resolve_point(chart: Chart, m: Optional[AffinePoint]) -> AffinePoint:
    if m is None:
        return chart.origin()
    if m.chart != chart:
        raise MembershipError("point lies on a different chart")
    return m


def mult_schubert_at(
    shape: GrassShape, w: CosetRep, tau: CosetRep, m: Optional[AffinePoint] = None
) -> int:
    """Multiplicity of a cell point m on the Schubert variety of w.

    Requires m in the cell of tau and tau <= w.  The result is also
    computed at the fixed point and the two must agree (the variety is
    translation-invariant along the cell); disagreement raises."""
    if not bruhat_leq(tau, w):
        raise PreconditionError(f"require tau <= w: {format_coset(tau)} vs {format_coset(w)}")
    chart = m.chart if m is not None else build_chart(shape, tau)
    if chart.tau != tau:
        raise MembershipError("point chart does not match tau")
    m = _resolve_point(chart, m)
    if not in_cell(chart, m):
        raise MembershipError(f"point {m} is not in the cell of {format_coset(tau)}")
    ideal = schubert_ideal(chart, w)
    if not evaluate_ideal(ideal, m):
        raise MembershipError("point is not on the Schubert variety")
    mu = _mult_of(translate_to_origin(ideal, m))
    mu_fixed = _mult_of(translate_to_origin(ideal, chart.origin()))
    if mu != mu_fixed:
        raise KernelInconsistencyError(
            f"translation invariance violated: {mu} != {mu_fixed}"
        )
    return mu


def mult_opposite_at(
    shape: GrassShape, v: CosetRep, tau: CosetRep, m: Optional[AffinePoint] = None
) -> int:
    """Multiplicity of m on the opposite stratum variety of v; membership
    is checked by evaluating the generators at m."""
    chart = m.chart if m is not None else build_chart(shape, tau)
    if chart.tau != tau:
        raise MembershipError("point chart does not match tau")
    m = _resolve_point(chart, m)
    ideal = opposite_ideal(chart, v)
    if ideal.is_unit() or not evaluate_ideal(ideal, m):
        raise MembershipError("point is not on the opposite variety")
    return _mult_of(translate_to_origin(ideal, m))


def mult_richardson_fast(
    shape: GrassShape,
    w: CosetRep,
    v: CosetRep,
    tau: CosetRep,
    m: Optional[AffinePoint] = None,
) -> int:
    """Product of the two one-sided multiplicities."""
    if not bruhat_leq(v, w):
        raise PreconditionError(f"require v <= w: {format_coset(v)} vs {format_coset(w)}")
    chart = m.chart if m is not None else build_chart(shape, tau)
    if chart.tau != tau:
        raise MembershipError("point chart does not match tau")
    m = _resolve_point(chart, m)
    ideal = richardson_ideal(chart, w, v)
    if ideal.is_unit() or not evaluate_ideal(ideal, m):
        raise MembershipError("point is not on the intersection variety")
    return mult_schubert_at(shape, w, tau, m) * mult_opposite_at(shape, v, tau, m)


def mult_richardson_oracle(
    shape: GrassShape,
    w: CosetRep,
    v: CosetRep,
    tau: CosetRep,
    m: Optional[AffinePoint] = None,
) -> int:
    """Tangent-cone multiplicity of the intersection ideal at m, computed
    without the product shortcut."""
    chart = m.chart if m is not None else build_chart(shape, tau)
    if chart.tau != tau:
        raise MembershipError("point chart does not match tau")
    m = _resolve_point(chart, m)
    ideal = richardson_ideal(chart, w, v)
    if ideal.is_unit() or not evaluate_ideal(ideal, m):
        raise MembershipError("point is not on the intersection variety")
    return _mult_of(translate_to_origin(ideal, m))


def degree_product_check(
    shape: GrassShape, w: CosetRep, v: CosetRep, tau: CosetRep
) -> tuple[int, int, int, bool]:
    """Projective degrees of the three cone ideals on the chart and whether
    deg(intersection) = deg * deg."""
    if not (bruhat_leq(v, tau) and bruhat_leq(tau, w)):
        raise PreconditionError(
            f"require v <= tau <= w: {format_coset(v)}, {format_coset(tau)}, {format_coset(w)}"
        )
    chart = build_chart(shape, tau)
    deg_w = _degree_of(schubert_ideal(chart, w))
    deg_v = _degree_of(opposite_ideal(chart, v))
    deg_wv = _degree_of(richardson_ideal(chart, w, v))
    return deg_w, deg_v, deg_wv, deg_wv == deg_w * deg_v


def jacobian_corank(ideal: PolyIdeal, m: AffinePoint) -> int:
    """Tangent-space dimension at m minus the variety's dimension (0 at a
    smooth point of the varieties considered here)."""
    if not evaluate_ideal(ideal, m):
        raise MembershipError("point is not on the variety")
    values = m.coords
    rows = [
        [g.derivative(i).evaluate(values) for i in range(ideal.ring.nvars)]
        for g in ideal.gens
    ]
    rank = _matrix_rank(rows)
    dim = _dim_of(ideal)
    corank = (ideal.ring.nvars - rank) - dim
    return max(corank, 0)


def _matrix_rank(rows: list[list[Fraction]]) -> int:
    work = [list(r) for r in rows if any(c != 0 for c in r)]
    rank = 0
    ncols = len(work[0]) if work else 0
    col = 0
    while work and col < ncols:
        pivot = next((i for i, r in enumerate(work) if r[col] != 0), None)
        if pivot is None:
            col += 1
            continue
        row = work.pop(pivot)
        rank += 1
        work = [
            [a - (r[col] / row[col]) * b for a, b in zip(r, row)] if r[col] != 0 else r
            for r in work
        ]
        col += 1
    return rank


def sample_points(
    ideal: PolyIdeal,
    chart: Chart,
    grid: Sequence[Fraction],
    cell_only: bool = False,
    limit: int = 200,
) -> list[AffinePoint]:
    """Deterministic enumeration of grid points satisfying all generators
    (and lying in the cell when cell_only), truncated at limit."""
    grid = tuple(Fraction(g) for g in grid)
    if len(set(grid)) != len(grid):
        raise ValueError("grid values must be distinct")
    N = len(chart.indices)
    if cell_only:
        free = [i for i, ix in enumerate(chart.indices) if ix not in chart.positive]
    else:
        free = list(range(N))
    points = []
    zero = Fraction(0)
    for combo in itertools.product(grid, repeat=len(free)):
        coords = [zero] * N
        for pos, val in zip(free, combo):
            coords[pos] = val
        point = AffinePoint(chart, tuple(coords))
        if cell_only and not in_cell(chart, point):
            continue
        if ideal.vanishes_at(point.coords):
            points.append(point)
            if len(points) >= limit:
                break
    return points


# ---------------------------------------------------------------------------
# Reports and the sweep harness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultiplicityReport:
    """Flat, JSON-ready record of one (w, v, tau, point) verification."""

    family: str
    d: int
    n: int
    tau: str
    w: str
    v: str
    point: dict
    mu_w: int
    mu_v: int
    mu_wv_fast: int
    mu_wv_oracle: int
    deg_zw: Optional[int]
    deg_zv: Optional[int]
    deg_zwv: Optional[int]
    degree_product_ok: Optional[bool]
    cone_schubert_over_point: Optional[bool]
    cone_opposite_over_point: Optional[bool]
    cone_richardson_over_origin: Optional[bool]
    smooth_w: bool
    smooth_v: bool
    smooth_wv: bool
    agreement: bool

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "d": self.d,
            "n": self.n,
            "tau": self.tau,
            "w": self.w,
            "v": self.v,
            "point": dict(self.point),
            "mu_w": self.mu_w,
            "mu_v": self.mu_v,
            "mu_wv_fast": self.mu_wv_fast,
            "mu_wv_oracle": self.mu_wv_oracle,
            "deg_zw": self.deg_zw,
            "deg_zv": self.deg_zv,
            "deg_zwv": self.deg_zwv,
            "degree_product_ok": self.degree_product_ok,
            "cone_schubert_over_point": self.cone_schubert_over_point,
            "cone_opposite_over_point": self.cone_opposite_over_point,
            "cone_richardson_over_origin": self.cone_richardson_over_origin,
            "smooth_w": self.smooth_w,
            "smooth_v": self.smooth_v,
            "smooth_wv": self.smooth_wv,
            "agreement": self.agreement,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MultiplicityReport":
        return cls(**data)

    def sort_key(self):
        return (
            self.family,
            self.d,
            self.n,
            self.w,
            self.v,
            self.tau,
            sorted(self.point.items()),
        )


def _expected_dimensions(shape, w, v):
    N = shape.dim
    return (w.length(), N - v.length(), w.length() - v.length())


def build_report(
    shape: GrassShape,
    w: CosetRep,
    v: CosetRep,
    tau: CosetRep,
    m: Optional[AffinePoint] = None,
) -> MultiplicityReport:
    """Full verification record for one point of one stratum triple."""
    chart = m.chart if m is not None else build_chart(shape, tau)
    m = _resolve_point(chart, m)
    iw = schubert_ideal(chart, w)
    iv = opposite_ideal(chart, v)
    iwv = richardson_ideal(chart, w, v)
    if iwv.is_unit():
        raise PreconditionError("empty intersection on this chart")

    # The Groebner dimensions must match the combinatorial ones; a mismatch
    # would mean the minor generators do not cut the expected varieties.
    exp_w, exp_v, exp_wv = _expected_dimensions(shape, w, v)
    for ideal, expected, label in ((iw, exp_w, "w"), (iv, exp_v, "v"), (iwv, exp_wv, "wv")):
        actual = _dim_of(ideal)
        if actual != expected:
            raise KernelInconsistencyError(
                f"dimension of {label}-ideal is {actual}, expected {expected}"
            )

    mu_w = mult_schubert_at(shape, w, tau, m)
    mu_v = mult_opposite_at(shape, v, tau, m)
    mu_fast = mu_w * mu_v
    mu_oracle = mult_richardson_oracle(shape, w, v, tau, m)

    deg_w, deg_v, deg_wv, deg_ok = degree_product_check(shape, w, v, tau)

    cone_w = is_cone_over_origin(translate_to_origin(iw, m))
    cone_v = is_cone_over_origin(translate_to_origin(iv, m))
    cone_wv = is_cone_over_origin(iwv) if not iwv.is_zero_ideal() else True

    smooth_w = jacobian_corank(iw, m) == 0
    smooth_v = jacobian_corank(iv, m) == 0
    smooth_wv = jacobian_corank(iwv, m) == 0

    return MultiplicityReport(
        family="grassmannian",
        d=shape.d,
        n=shape.n,
        tau=format_coset(tau),
        w=format_coset(w),
        v=format_coset(v),
        point=m.to_json_dict(),
        mu_w=mu_w,
        mu_v=mu_v,
        mu_wv_fast=mu_fast,
        mu_wv_oracle=mu_oracle,
        deg_zw=deg_w,
        deg_zv=deg_v,
        deg_zwv=deg_wv,
        degree_product_ok=deg_ok,
        cone_schubert_over_point=cone_w,
        cone_opposite_over_point=cone_v,
        cone_richardson_over_origin=cone_wv,
        smooth_w=smooth_w,
        smooth_v=smooth_v,
        smooth_wv=smooth_wv,
        agreement=mu_fast == mu_oracle,
    )


@dataclass(frozen=True)
class SweepConfig:
    grid: tuple = DEFAULT_GRID
    point_cap: int = 200
    max_instances: Optional[int] = None
    workers: int = 1
    budget: EngineBudget = EngineBudget()

    def __post_init__(self):
        if len(self.grid) > self.budget.max_grid_values:
            raise ValueError(
                f"grid has {len(self.grid)} values, budget allows "
                f"{self.budget.max_grid_values}"
            )
        if self.point_cap < 1:
            raise ValueError("point_cap must be positive")
        if self.point_cap > self.budget.point_cap:
            raise ValueError(
                f"point_cap {self.point_cap} exceeds the budget of "
                f"{self.budget.point_cap}"
            )
        if (
            self.budget.max_instances is not None
            and (self.max_instances is None or self.max_instances > self.budget.max_instances)
        ):
            raise ValueError("max_instances exceeds the budget")


@dataclass
class SweepResult:
    reports: list
    checked: int
    agreed: int
    failed: int
    truncated: bool

    def summary_line(self) -> str:
        line = f"checked={self.checked} agreed={self.agreed} failed={self.failed}"
        if self.truncated:
            line += " truncated=yes"
        return line


def enumerate_instances(shape: GrassShape) -> list[tuple[CosetRep, CosetRep, CosetRep]]:
    """All (w, v, tau) with v <= tau <= w, in lexicographic order."""
    reps = all_coset_reps(shape)
    out = []
    for w in reps:
        for v in reps:
            if not bruhat_leq(v, w):
                continue
            for tau in reps:
                if bruhat_leq(v, tau) and bruhat_leq(tau, w):
                    out.append((w, v, tau))
    out.sort(key=lambda t: (t[0].entries, t[1].entries, t[2].entries))
    return out


def _instance_reports(
    shape: GrassShape,
    w: CosetRep,
    v: CosetRep,
    tau: CosetRep,
    config: SweepConfig,
) -> list[MultiplicityReport]:
    chart = build_chart(shape, tau)
    ideal = richardson_ideal(chart, w, v)
    points = [chart.origin()]
    for p in sample_points(ideal, chart, config.grid, cell_only=True, limit=config.point_cap):
        if not p.is_origin():
            points.append(p)
    return [build_report(shape, w, v, tau, m) for m in points]


def _worker(payload) -> list[dict]:
    d, n, w_e, v_e, tau_e, grid, cap = payload
    shape = GrassShape(d, n)
    config = SweepConfig(grid=tuple(Fraction(g) for g in grid), point_cap=cap)
    reports = _instance_reports(
        shape,
        CosetRep(shape, w_e),
        CosetRep(shape, v_e),
        CosetRep(shape, tau_e),
        config,
    )
    return [r.to_dict() for r in reports]


def verify_theorem(shape: GrassShape, config: SweepConfig = SweepConfig()) -> SweepResult:
    """Run the product-formula verification over every stratum triple of
    the shape; returns sorted reports and tallies."""
    if shape.dim > config.budget.max_variables:
        raise ValueError(
            f"{shape} has {shape.dim} chart variables, budget allows "
            f"{config.budget.max_variables}"
        )
    instances = enumerate_instances(shape)
    truncated = False
    if config.max_instances is not None and len(instances) > config.max_instances:
        instances = instances[: config.max_instances]
        truncated = True

    reports: list[MultiplicityReport] = []
    if config.workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        payloads = [
            (shape.d, shape.n, w.entries, v.entries, tau.entries,
             tuple(str(g) for g in config.grid), config.point_cap)
            for (w, v, tau) in instances
        ]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for batch in pool.map(_worker, payloads):
                reports.extend(MultiplicityReport.from_dict(r) for r in batch)
    else:
        for w, v, tau in instances:
            reports.extend(_instance_reports(shape, w, v, tau, config))

    reports.sort(key=MultiplicityReport.sort_key)
    agreed = sum(1 for r in reports if r.agreement)
    return SweepResult(
        reports=reports,
        checked=len(reports),
        agreed=agreed,
        failed=len(reports) - agreed,
        truncated=truncated,
    )
