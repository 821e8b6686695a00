"""Colorful Caratheodory approximations, nearest colorful polytope search and SAT reductions in exact arithmetic."""

__version__ = "0.1.0"

from .errors import (
    ColorfulError,
    DegenerateInstanceError,
    InstanceError,
    InvariantError,
    PreconditionError,
    SizeLimitError,
    StepLimitError,
)
from .model import CARATHEODORY, NCP, ColorClass, ColorfulChoice, Instance, certify, max_multiplicity, validate
