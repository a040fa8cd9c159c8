from .build import (
    FIGURE_EIGHT,
    MAX_TB_UNKNOT,
    builtin_front,
    cable_base_front,
    front_with_invariants,
    insert_positive_twists,
    insert_sz_tangles,
    knot_front,
    n_copy,
    positive_torus_front,
    stabilize,
    standard_cable_front,
    twisted_n_copy,
)
from .word import (
    FrontWord,
    component_invariants,
    linking,
    linking_matrix,
    max_strands,
    r_of_component,
    tb_of_component,
    validate,
    writhe,
)

__all__ = [
    "FIGURE_EIGHT",
    "MAX_TB_UNKNOT",
    "FrontWord",
    "builtin_front",
    "cable_base_front",
    "component_invariants",
    "front_with_invariants",
    "insert_positive_twists",
    "insert_sz_tangles",
    "knot_front",
    "linking",
    "linking_matrix",
    "max_strands",
    "n_copy",
    "positive_torus_front",
    "r_of_component",
    "stabilize",
    "standard_cable_front",
    "tb_of_component",
    "twisted_n_copy",
    "validate",
    "writhe",
]
