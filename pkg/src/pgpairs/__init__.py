"""pgpairs: exact invariants and consistency checks for linear sections of
Gr(2,n) and their Pfaffian duals."""

from . import errors
from .chern import (
    ChernData,
    HodgeSummary,
    chi_y_ci,
    euler_characteristic_ci,
    middle_hodge,
    tangent_chern,
    tautological_chern,
    tensor_chern,
)
from .dsl import eval_dsl
from .pairs import (
    PGPair,
    build_pair_report,
    cayley_hypersurface_class,
    cayley_hypersurface_class_dual,
    cayley_trick_poincare,
    check_l_equivalence,
    check_variable_betti_link,
    derive_poincare_y,
    fiber_classes,
    hypersurface_poincare_oracle,
    make_pair,
    motivic_equivalence_status,
    nl_status,
    poincare_x,
    variable_betti,
)
from .ring import LPoly, TPoly, is_palindromic, projective_class, to_poincare
from .schubert import (
    ChowClass,
    ChowRing,
    betti,
    get_ring,
    grassmannian_class,
    hyperplane_section_class,
    lefschetz_shift,
    lr_count,
    sum_even_powers,
)

__version__ = "0.1.0"

__all__ = [
    "ChernData",
    "ChowClass",
    "ChowRing",
    "HodgeSummary",
    "LPoly",
    "PGPair",
    "TPoly",
    "betti",
    "build_pair_report",
    "cayley_hypersurface_class",
    "cayley_hypersurface_class_dual",
    "cayley_trick_poincare",
    "check_l_equivalence",
    "check_variable_betti_link",
    "chi_y_ci",
    "derive_poincare_y",
    "errors",
    "eval_dsl",
    "euler_characteristic_ci",
    "fiber_classes",
    "get_ring",
    "grassmannian_class",
    "hyperplane_section_class",
    "hypersurface_poincare_oracle",
    "is_palindromic",
    "lefschetz_shift",
    "lr_count",
    "make_pair",
    "middle_hodge",
    "motivic_equivalence_status",
    "nl_status",
    "poincare_x",
    "projective_class",
    "sum_even_powers",
    "tangent_chern",
    "tautological_chern",
    "tensor_chern",
    "to_poincare",
    "variable_betti",
]
