"""Exact-arithmetic construction and verification of Theta_n-graded Lie
algebras over sl_3 and sl_4."""

from .linalg import Matrix, Rational, Subspace, kernel, rref, solve_span
from .slcore import ThetaSet, Weight, bracket, circ, diamond, root_system, trace_form
from .gmodules import (
    GModule,
    Identification,
    NonIntegralWeight,
    NonThetaConstituent,
    catalog,
    highest_weight_vectors,
    identification,
    isotypic_decompose,
    weight_decompose,
)
from .tensortheta import ThetaMultiset, tensor, theta_component, verify_tables
from .homspaces import hom_space, paper_hom_entries, realize_formula, verify_paper_homs
from .extract import (
    CoordinateData,
    EmbeddedAlgebra,
    example_sl_2n1,
    example_sl_nk,
    extract_coordinates,
)
from .graded import (
    GradedLieAlgebra,
    MissingProduct,
    assemble,
    check_condition_s,
    check_grading,
    check_jacobi,
    roundtrip_defects,
    trivial_data,
)
from .coordalg import (
    ConditionViolated,
    CoordAlgebra,
    build_frak_a,
    build_frak_b,
    split_a_dims,
    verify_section4,
)

__version__ = "0.1.0"
