from .composition import (
    ComponentWitnesses,
    ComposedWitness,
    DisagreementSets,
    check_facts,
    compose,
    disagreement_sets,
    find_component_witnesses,
    noise_model_correlation,
    one_sided,
    sgn_tilde,
    verify_composition,
)
from .noise import flip_probability, flip_probability_bound
