from .transform import (
    FourierSpectrum,
    RealCubeFn,
    character,
    correlation,
    dump_spectrum,
    inverse_transform,
    l1_norm,
    level_weights,
    pure_high_degree,
    read_spectrum,
    walsh_transform,
)
