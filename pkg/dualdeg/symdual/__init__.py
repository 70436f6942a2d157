from .univariate import (
    Provenance,
    UnivariateDual,
    direct_p_value,
    finite_difference_degree,
    level_values,
    lift,
    pi_S,
    read_sym_witness,
    structural_phd,
    write_sym_witness,
)
from .constructions import (
    C_GENERAL,
    central_jump,
    dual_for_profile,
    general_sym_dual,
    interlaced_squares,
    maj_dual,
    product_minimizer,
    spalek_or_dual,
)
from .verify import min_prod_facts_check, square_gap_product, verify_construction, verify_sym_witness
