"""Exact multiplicities of points on stratum varieties of Grassmannians
and odd quadrics, with an independent tangent-cone verification path."""

from .weyl import (
    CosetRep,
    GrassShape,
    RootIndex,
    bruhat_leq,
    chart_index_set,
    positive_root_indices,
)
from .poly import Polynomial, PolyRing, parse_polynomial
from .groebner import PolyIdeal, normal_form, reduced_groebner_basis
from .hilbert import HilbertData, hilbert_data, ideal_dimension, projective_degree
from .localmult import (
    hilbert_samuel_multiplicity,
    hilbert_samuel_series,
    multiplicity_at_origin,
    tangent_cone,
)
from .charts import (
    AffinePoint,
    Chart,
    build_chart,
    c_action,
    cell_of_point,
    in_cell,
    is_cone_over_origin,
    opposite_ideal,
    point_from_matrix,
    richardson_ideal,
    scale_action,
    schubert_ideal,
    translate_to_origin,
)
from .engine import (
    MultiplicityReport,
    SweepConfig,
    SweepResult,
    build_report,
    degree_product_check,
    jacobian_corank,
    mult_opposite_at,
    mult_richardson_fast,
    mult_richardson_oracle,
    mult_schubert_at,
    sample_points,
    verify_theorem,
)
from .quadric import (
    QuadricShape,
    b_matrix,
    mult_opposite_quadric,
    mult_schubert_quadric,
    q_eval,
    richardson_mult_quadric,
    singular_locus_index,
    verify_disjoint_sing,
)

__version__ = "0.1.0"
