"""Klein-Gordon bound states in a Hulthen potential with position-dependent mass."""

from ._core import (
    BoundState,
    EnergyPair,
    KgsolveError,
    ModelParams,
    OracleLevel,
    QuantumNumbers,
    ShootResult,
    constant_mass_levels,
    delta_prime,
    energy_levels,
    find_levels,
    jacobi,
    jacobi_norm_integral,
    load_table,
    run,
    shoot,
)

__all__ = [
    "BoundState",
    "EnergyPair",
    "KgsolveError",
    "ModelParams",
    "OracleLevel",
    "QuantumNumbers",
    "ShootResult",
    "constant_mass_levels",
    "delta_prime",
    "energy_levels",
    "find_levels",
    "jacobi",
    "jacobi_norm_integral",
    "load_table",
    "run",
    "shoot",
]
