"""Exact BMW algebras of simply laced type via Lawrence-Krammer representations."""

from .hecke import HeckeElement, ParabolicError, eval_signed_word, in_parabolic
from .lkrep import (
    LawrenceKrammer,
    SparseMatrix,
    ThetaSpec,
    build_lk,
    classical_lk,
    theta_character_at,
)
from .rootsys import (
    DynkinType,
    RootSystem,
    build_type,
    enumerate_parabolic,
    parabolic_order,
    weyl_order,
)
from .scalar import Scalar, ScalarDomainError, arith, eval_at, x_value
from .verify import SuiteReport, a2_dimension_check, dims_report, run_suite, seeded_points
from .wordalg import parse_word, reduce_word, rep_image, rep_image_word

__all__ = [
    "DynkinType",
    "HeckeElement",
    "LawrenceKrammer",
    "ParabolicError",
    "RootSystem",
    "Scalar",
    "ScalarDomainError",
    "SparseMatrix",
    "SuiteReport",
    "ThetaSpec",
    "a2_dimension_check",
    "arith",
    "build_lk",
    "build_type",
    "classical_lk",
    "dims_report",
    "enumerate_parabolic",
    "eval_at",
    "eval_signed_word",
    "in_parabolic",
    "parabolic_order",
    "parse_word",
    "reduce_word",
    "rep_image",
    "rep_image_word",
    "run_suite",
    "seeded_points",
    "theta_character_at",
    "weyl_order",
    "x_value",
]
