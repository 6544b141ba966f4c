"""Exact idealiser subrings of polynomial skew group rings.

The base ring is a rational polynomial ring acted on by a free abelian
group of translations; the package computes stabilisers, graded
components of idealiser subrings, Tor obstructions, and noetherianity
verdicts with machine checkable certificates.
"""

from .action import (
    GroupElement,
    Lattice,
    TranslationAction,
    act_on_ideal,
    act_on_point,
    apply_action,
    complement,
    effective_directions,
    stabiliser,
)
from .diophantine import (
    CurveClass,
    PellSolution,
    classify_plane_curve,
    lattice_points_box,
    pell_enumerate,
    pell_fundamental,
)
from .groebner import (
    DimensionProbe,
    Ideal,
    ResourceLimitError,
    buchberger,
    dimension_probe,
    exact_divide,
    ideal_contains,
    ideal_equal,
    ideal_intersect,
    ideal_product,
    ideal_quotient,
    ideal_sum,
    is_maximal_effective,
    normal_form,
    rational_point_of,
    reduced_groebner_basis,
    s_polynomial,
    unit_ideal,
)
from .noether import (
    Certificate,
    CriticalDensityReport,
    GrowthProbe,
    LatticeSubsetReport,
    Tor1Module,
    Verdict,
    critical_density_decide,
    decide,
    decide_left,
    decide_right,
    growth_probe,
    s_set_box,
    t_set_box,
    tor1,
    tor1_is_zero,
)
from .normalforms import (
    ColumnHermite,
    SmithForm,
    column_hermite,
    hermite_smith,
    kernel_basis,
    smith_normal_form,
)
from .parser import ParseError
from .poly import MonomialOrder, Poly, PolyRing, directional_derivative
from .skew import (
    GradedIdeal,
    IdealiserPresentation,
    SkewElement,
    idealiser_component,
    idealiser_membership,
    parse_skew,
    presentation_R_mod_IB,
    quotient_table,
    right_ideal_truncation,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "ColumnHermite",
    "CriticalDensityReport",
    "CurveClass",
    "DimensionProbe",
    "GradedIdeal",
    "GroupElement",
    "GrowthProbe",
    "Ideal",
    "IdealiserPresentation",
    "Lattice",
    "LatticeSubsetReport",
    "MonomialOrder",
    "ParseError",
    "PellSolution",
    "Poly",
    "PolyRing",
    "ResourceLimitError",
    "SkewElement",
    "SmithForm",
    "Tor1Module",
    "TranslationAction",
    "Verdict",
    "act_on_ideal",
    "act_on_point",
    "apply_action",
    "buchberger",
    "classify_plane_curve",
    "column_hermite",
    "complement",
    "critical_density_decide",
    "decide",
    "decide_left",
    "decide_right",
    "dimension_probe",
    "directional_derivative",
    "effective_directions",
    "exact_divide",
    "growth_probe",
    "hermite_smith",
    "ideal_contains",
    "ideal_equal",
    "ideal_intersect",
    "ideal_product",
    "ideal_quotient",
    "ideal_sum",
    "idealiser_component",
    "idealiser_membership",
    "is_maximal_effective",
    "kernel_basis",
    "lattice_points_box",
    "normal_form",
    "parse_skew",
    "pell_enumerate",
    "pell_fundamental",
    "presentation_R_mod_IB",
    "quotient_table",
    "rational_point_of",
    "reduced_groebner_basis",
    "s_polynomial",
    "s_set_box",
    "smith_normal_form",
    "stabiliser",
    "t_set_box",
    "tor1",
    "tor1_is_zero",
    "unit_ideal",
]
