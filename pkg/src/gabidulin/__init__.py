"""Gabidulin codes over F_{q^m} and minimal rank-metric list decoding.

The decoder builds the interpolation module of a received word, reduces its
generators with the linearized Euclidean algorithm and sweeps the left
combinations of the two basis rows for right-divisible candidates, returning
every closest codeword.
"""

from .code import GabidulinCode, error_span_poly
from .decoder import (
    DecodeResult,
    InterpolationBasis,
    MinimalBasis,
    ModuleElement,
    check_candidate,
    decode_unique,
    enumerate_distance_t,
    interpolation_module,
    list_decode,
    minimal_basis,
    weighted_qdeg,
)
from .errors import *  # noqa: F401,F403
from .field import FieldCtx, FieldElement, default_modulus
from .kernels import BACKEND, available_backends
from .linalg import expand, moore_matrix, rank_distance, rank_q, solve
from .linpoly import BOTTOM, LinPoly, annihilator, compose, left_divide, q_lagrange, right_divide, root_space
from .oracle import OracleResult, oracle_closest, oracle_within

__version__ = "0.1.0"
