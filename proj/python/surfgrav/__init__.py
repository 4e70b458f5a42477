"""Surface-gap gravity, Newtonian and Yukawa force laws."""

from ._core import (
    ConfigError,
    DomainError,
    Error,
    bind,
    constants,
    detectable_range_fm,
    fit,
    force,
    pion_energy_mev,
    pion_range_fm,
    potential,
    reproduce_paper,
    strength_ratio,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "Error",
    "bind",
    "constants",
    "detectable_range_fm",
    "fit",
    "force",
    "pion_energy_mev",
    "pion_range_fm",
    "potential",
    "reproduce_paper",
    "strength_ratio",
]
