from .boolfn import (
    BoolFn,
    Family,
    Point,
    all_boolfns,
    compose_functions,
    evaluate,
    flip_block,
    from_callable,
    index_of,
    make_named,
    negate_inputs,
    point_of,
    points,
    random_boolfn,
    read_table,
    weight,
    write_table,
)
from .profile import (
    SymmetricProfile,
    from_profile,
    gamma,
    is_symmetric,
    jumps,
    read_profile,
    reflect_profile,
    threshold_profile,
    to_profile,
    write_profile,
)
from .sensitivity import (
    block_sensitivity,
    block_sensitivity_at,
    block_sensitivity_at_index,
    max_disjoint_blocks,
    sensitive_blocks,
)
