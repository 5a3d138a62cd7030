"""tropdual: exact max-plus quadric duality with a classical symbolic oracle."""

__version__ = "0.1.0"

from .errors import InputError, OracleMismatchError, TropdualError, UnsupportedShapeError
from .semiring import NEG_INF, TROP_ONE, TropValue, t_add, t_mul, t_scale, t_sum
from .matrix import TropDetResult, TropMatrix, trop_adjoint, trop_det, trop_minor, trop_scale_matrix

__all__ = [
    "InputError",
    "OracleMismatchError",
    "TropdualError",
    "UnsupportedShapeError",
    "NEG_INF",
    "TROP_ONE",
    "TropValue",
    "t_add",
    "t_mul",
    "t_scale",
    "t_sum",
    "TropDetResult",
    "TropMatrix",
    "trop_adjoint",
    "trop_det",
    "trop_minor",
    "trop_scale_matrix",
]
