from .witness import DualWitness, read_witness, write_witness
from .approx import (
    ONE_THIRD,
    SymmetricWitness,
    approx_degree,
    best_eps,
    best_eps_symmetric,
    degree_profile,
    low_degree_subsets,
    optimal_dual_witness,
    symmetric_dual_witness,
)
from .verify import verify_witness
