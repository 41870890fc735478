"""Affine charts on G(d,n) and the stratum ideals restricted to them.

A chart is an n x d matrix whose rows at the pivot positions form the
identity and whose remaining entries are the chart coordinates x_q_p.
Stratum ideals are generated by minors expressing rank conditions on
top/bottom row blocks; rank conditions are emitted only at the essential
column positions and the generator sets are autoreduced, which reproduces
the familiar small generating sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .groebner import PolyIdeal, interreduce, normal_form
from .poly import Polynomial, PolyRing, parse_polynomial
from .weyl import (
    CosetRep,
    GrassShape,
    RootIndex,
    bruhat_leq,
    chart_index_set,
    codescent_positions,
    descent_positions,
    positive_root_indices,
)


class PointNotOnChartError(ValueError):
    pass


@dataclass(frozen=True)
class Chart:
    """The affine neighbourhood of the fixed point indexed by tau."""

    shape: GrassShape
    tau: CosetRep
    indices: tuple[RootIndex, ...]
    positive: tuple[RootIndex, ...]
    ring: PolyRing = field(compare=False)
    yring: PolyRing = field(compare=False)

    def index_position(self, ix: RootIndex) -> int:
        return self.indices.index(ix)

    def origin(self) -> "AffinePoint":
        return AffinePoint(self, (Fraction(0),) * len(self.indices))

    def matrix(self) -> list[list[Polynomial]]:
        """The symbolic n x d chart matrix (columns ordered by pivot)."""
        n, d = self.shape.n, self.shape.d
        pivot_of_col = self.tau.entries
        rows = []
        var_pos = {ix: i for i, ix in enumerate(self.indices)}
        for r in range(1, n + 1):
            row = []
            for k in range(d):
                p = pivot_of_col[k]
                if r in self.tau.entries:
                    row.append(self.ring.one() if r == p else self.ring.zero())
                else:
                    row.append(self.ring.var(var_pos[RootIndex(r, p)]))
            rows.append(row)
        return rows

    def point(self, coords) -> "AffinePoint":
        """Build a point from a mapping RootIndex -> rational or a sequence
        aligned with the chart's index order."""
        if isinstance(coords, dict):
            normalized = {}
            for key, value in coords.items():
                ix = key if isinstance(key, RootIndex) else RootIndex(*key)
                normalized[ix] = Fraction(value)
            unknown = set(normalized) - set(self.indices)
            if unknown:
                raise PointNotOnChartError(f"indices not on chart: {sorted(unknown)}")
            vec = tuple(normalized.get(ix, Fraction(0)) for ix in self.indices)
        else:
            vec = tuple(Fraction(v) for v in coords)
            if len(vec) != len(self.indices):
                raise PointNotOnChartError(
                    f"expected {len(self.indices)} coordinates, got {len(vec)}"
                )
        return AffinePoint(self, vec)


@dataclass(frozen=True)
class AffinePoint:
    """A rational point of a chart, stored in the chart's index order."""

    chart: Chart
    coords: tuple[Fraction, ...]

    def __getitem__(self, ix) -> Fraction:
        if not isinstance(ix, RootIndex):
            ix = RootIndex(*ix)
        return self.coords[self.chart.index_position(ix)]

    def is_origin(self) -> bool:
        return all(c == 0 for c in self.coords)

    def to_json_dict(self) -> dict:
        return {str(ix): str(c) for ix, c in zip(self.chart.indices, self.coords)}

    @classmethod
    def from_json_dict(cls, chart: Chart, data: dict) -> "AffinePoint":
        coords = {}
        for key, val in data.items():
            q, p = key.split(".")
            coords[RootIndex(int(q), int(p))] = Fraction(str(val))
        return chart.point(coords)

    def __str__(self):
        inside = ", ".join(
            f"{ix}={c}" for ix, c in zip(self.chart.indices, self.coords) if c != 0
        )
        return "{" + inside + "}" if inside else "origin"


def build_chart(shape: GrassShape, tau: CosetRep) -> Chart:
    indices = chart_index_set(shape, tau)
    names_x = tuple(f"x_{ix.q}_{ix.p}" for ix in indices)
    names_y = tuple(f"y_{ix.q}_{ix.p}" for ix in indices)
    return Chart(
        shape=shape,
        tau=tau,
        indices=indices,
        positive=positive_root_indices(shape, tau),
        ring=PolyRing(names_x),
        yring=PolyRing(names_y),
    )


def in_cell(chart: Chart, x: AffinePoint) -> bool:
    """Whether the point lies in the Schubert cell of the chart (all
    positive-root coordinates vanish)."""
    if x.chart != chart:
        raise PointNotOnChartError("point belongs to a different chart")
    return all(x[ix] == 0 for ix in chart.positive)


def _det(matrix: list[list[Polynomial]]) -> Polynomial:
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    # Laplace expansion along the row with the most constant entries.
    best = max(range(size), key=lambda r: sum(m.is_constant() for m in matrix[r]))
    rest_rows = [matrix[r] for r in range(size) if r != best]
    total = None
    for c in range(size):
        entry = matrix[best][c]
        if entry.is_zero():
            continue
        minor = _det([[row[cc] for cc in range(size) if cc != c] for row in rest_rows])
        if minor.is_zero():
            continue
        term = entry * minor
        if (best + c) % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return matrix[0][0].ring.zero()
    return total


def _minor_generators(
    matrix_rows: list[list[Polynomial]], size: int, ring: PolyRing
) -> list[Polynomial]:
    gens = []
    nrows = len(matrix_rows)
    ncols = len(matrix_rows[0]) if matrix_rows else 0
    if size > min(nrows, ncols):
        return gens
    for rsub in combinations(range(nrows), size):
        for csub in combinations(range(ncols), size):
            sub = [[matrix_rows[r][c] for c in csub] for r in rsub]
            m = _det(sub)
            if not m.is_zero():
                gens.append(m)
    return gens


def _dedupe_normalized(gens: Iterable[Polynomial]) -> list[Polynomial]:
    seen = set()
    out = []
    for g in gens:
        g = g.primitive()
        key = frozenset(g.terms.items())
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


def schubert_ideal(chart: Chart, w: CosetRep) -> PolyIdeal:
    """Ideal of the Schubert variety indexed by w on the chart.

    For each essential position j of w the rows j+1..n of the chart matrix
    must have rank at most d - #{k : w_k <= j}; the unit-ideal marker is
    returned when the chart's cell misses the variety (tau not <= w).
    """
    if not bruhat_leq(chart.tau, w):
        return PolyIdeal.unit_marker(chart.ring)
    matrix = chart.matrix()
    d, n = chart.shape.d, chart.shape.n
    gens: list[Polynomial] = []
    for j in descent_positions(w):
        bound = d - sum(1 for e in w.entries if e <= j)
        rows = matrix[j:]
        gens.extend(_minor_generators(rows, bound + 1, chart.ring))
    return PolyIdeal(chart.ring, interreduce(_dedupe_normalized(gens)))


def opposite_ideal(chart: Chart, v: CosetRep) -> PolyIdeal:
    """Ideal of the opposite Schubert variety indexed by v on the chart:
    for each essential position j of v, rows 1..j-1 have rank at most
    d - #{k : v_k >= j}."""
    if not bruhat_leq(v, chart.tau):
        return PolyIdeal.unit_marker(chart.ring)
    matrix = chart.matrix()
    d = chart.shape.d
    gens: list[Polynomial] = []
    for j in codescent_positions(v):
        bound = d - sum(1 for e in v.entries if e >= j)
        rows = matrix[: j - 1]
        gens.extend(_minor_generators(rows, bound + 1, chart.ring))
    return PolyIdeal(chart.ring, interreduce(_dedupe_normalized(gens)))


def richardson_ideal(chart: Chart, w: CosetRep, v: CosetRep) -> PolyIdeal:
    """Ideal of the intersection of the two stratum varieties."""
    iw = schubert_ideal(chart, w)
    iv = opposite_ideal(chart, v)
    if iw.is_unit() or iv.is_unit():
        return PolyIdeal.unit_marker(chart.ring)
    return PolyIdeal(chart.ring, _dedupe_normalized(list(iw.gens) + list(iv.gens)))


def translate_to_origin(ideal: PolyIdeal, m: AffinePoint) -> PolyIdeal:
    """Substitute x = y + m, mapping m to the origin of the y-coordinates."""
    chart = m.chart
    if ideal.ring == chart.ring:
        target = chart.yring
    elif ideal.ring == chart.yring:
        target = chart.yring
    else:
        raise PointNotOnChartError("ideal and point live on different charts")
    gens = [g.shift(m.coords, target).primitive() for g in ideal.gens]
    return PolyIdeal(target, [g for g in gens if not g.is_zero()])


def evaluate_ideal(ideal: PolyIdeal, x: AffinePoint) -> bool:
    """Whether all generators vanish at the point."""
    return ideal.vanishes_at(x.coords)


def c_action(xi: Fraction, x: AffinePoint, m: AffinePoint) -> AffinePoint:
    """The additive-group action moving x by -xi times m, coordinatewise."""
    if x.chart != m.chart:
        raise PointNotOnChartError("points on different charts")
    xi = Fraction(xi)
    return AffinePoint(
        x.chart, tuple(a - xi * b for a, b in zip(x.coords, m.coords))
    )


def scale_action(xi: Fraction, x: AffinePoint) -> AffinePoint:
    xi = Fraction(xi)
    return AffinePoint(x.chart, tuple(xi * a for a in x.coords))


def is_cone_over_origin(ideal: PolyIdeal) -> bool:
    """Whether the ideal is homogeneous as an ideal: every homogeneous
    component of every reduced-basis element must lie in the ideal."""
    if ideal.is_unit():
        raise ValueError("unit ideal: empty variety has no cone semantics")
    basis = ideal.groebner()
    for g in basis:
        for component in g.homogeneous_components().values():
            if not normal_form(component, basis).is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# Matrix input
# ---------------------------------------------------------------------------


def cell_of_point(shape: GrassShape, matrix: Sequence[Sequence]) -> CosetRep:
    """The stratum label of the column span: the unique tau whose rank
    table matches dim(V intersect span(e_1..e_j)) for all j.

    Computed by bottom-up column reduction; the pivots are the lowest
    nonzero rows of the reduced columns.
    """
    n, d = shape.n, shape.d
    cols = _columns_as_fractions(matrix, n, d)
    pivot_rows: list[int] = []
    used: list[int] = []
    for r in range(n - 1, -1, -1):
        pick = None
        for c in range(d):
            if c not in used and cols[c][r] != 0:
                pick = c
                break
        if pick is None:
            continue
        used.append(pick)
        pivot_rows.append(r + 1)
        for c in range(d):
            if c != pick and cols[c][r] != 0:
                factor = cols[c][r] / cols[pick][r]
                cols[c] = [a - factor * b for a, b in zip(cols[c], cols[pick])]
    if len(pivot_rows) != d:
        raise ValueError("matrix does not have full column rank")
    return CosetRep(shape, tuple(sorted(pivot_rows)))


def point_from_matrix(shape: GrassShape, matrix: Sequence[Sequence]) -> AffinePoint:
    """Convert a rank-d matrix (columns spanning the subspace) to chart
    coordinates on the chart of the cell containing it."""
    tau = cell_of_point(shape, matrix)
    chart = build_chart(shape, tau)
    n, d = shape.n, shape.d
    cols = _columns_as_fractions(matrix, n, d)
    # Normalize so the pivot-row submatrix becomes the identity.
    block = [[cols[c][p - 1] for c in range(d)] for p in tau.entries]
    inverse = _invert(block)
    normalized = [
        [
            sum(cols[c][r] * inverse[c][k] for c in range(d))
            for k in range(d)
        ]
        for r in range(n)
    ]
    coords = {}
    for ix in chart.indices:
        k = tau.entries.index(ix.p)
        coords[ix] = normalized[ix.q - 1][k]
    return chart.point(coords)


def _columns_as_fractions(matrix, n: int, d: int) -> list[list[Fraction]]:
    rows = [list(r) for r in matrix]
    if len(rows) != n or any(len(r) != d for r in rows):
        raise ValueError(f"expected an {n} x {d} matrix")
    return [[Fraction(rows[r][c]) for r in range(n)] for c in range(d)]


def _invert(block: list[list[Fraction]]) -> list[list[Fraction]]:
    size = len(block)
    work = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(size)]
            for i, row in enumerate(block)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col] != 0), None)
        if pivot is None:
            raise ValueError("pivot-row block is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [a * inv for a in work[col]]
        for r in range(size):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return [row[size:] for row in work]


# ---------------------------------------------------------------------------
# Ideal text format
# ---------------------------------------------------------------------------


def format_ideal(ideal: PolyIdeal) -> str:
    """One generator per line in the canonical normalization (content-free,
    positive leading coefficient, lines ordered by decreasing leading
    monomial).  The zero ideal prints "0"; the unit marker prints "1"."""
    if ideal.is_zero_ideal():
        return "0\n"
    gens = sorted(
        (g.primitive() for g in ideal.gens),
        key=lambda g: ideal.ring.key(g.leading_exps()),
        reverse=True,
    )
    return "".join(str(g) + "\n" for g in gens)


def parse_ideal(ring: PolyRing, text: str) -> PolyIdeal:
    gens = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line == "0":
            continue
        gens.append(parse_polynomial(ring, line))
    return PolyIdeal(ring, gens)
