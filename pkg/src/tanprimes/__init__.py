"""Workbench for primes of the form [n^c * tan^theta(log n)].

Certified enumeration of the sequence over its branch windows, two-route
prime counting (direct floors vs. implicit-function inversion), and
desk-scale numerical checks of the supporting machinery: the sawtooth
trigonometric approximation, Weyl/van der Corput inequalities, derivative
tests, and the combinatorial decomposition of von Mangoldt sums.
"""

from .balls import Ball, Params, certified_floor, certified_floor_f, eval_f
from .errors import (
    ConstructionFailed,
    DomainError,
    FloorUndecidable,
    NoConvergence,
    ParamError,
    PrecisionExhausted,
    RangeError,
    ResourceError,
    TanPrimesError,
)

__all__ = [
    "Ball",
    "Params",
    "certified_floor",
    "certified_floor_f",
    "eval_f",
    "TanPrimesError",
    "DomainError",
    "PrecisionExhausted",
    "FloorUndecidable",
    "RangeError",
    "NoConvergence",
    "ResourceError",
    "ConstructionFailed",
    "ParamError",
]

__version__ = "0.1.0"
