"""Möbius functions, zeta transforms and uncertainty properties of locally finite posets."""

from .core import (
    PosetView,
    SupportedFunction,
    convolve_at,
    delta,
    interval_elements,
    lift,
    mobius,
    mobius_column,
    mobius_function,
    mobius_invert,
    support_on_frontier,
    zeta,
    zeta_transform,
)
from .keys import ElementKey, FamilyMismatchError
from .zoo import FamilySpec, build, build_counterexample_P, build_counterexample_Q

__version__ = "0.1.0"
