"""Exact computations with weighted Coxeter groups and their Hecke algebras."""
from .core import INF, CoxeterSystem, GroupElement, root_sign
from .errors import (BudgetExceeded, HeckeboundError, InvalidInputError, InvalidSystemError,
                     InvariantViolation, MixedSignError, SequenceInvalid)
from .field import ExactReal, cyclotomic_field
from .hecke import LaurentPoly, enumerate_expansion, max_f_degree, structure_constants
from .incidence import Hyperplane, hyperplane, intersects_interior, is_intersecting_set, separates
from .systems import load_config, named_system, system_from_config

__version__ = "0.1.0"
