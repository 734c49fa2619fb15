"""Brute-force ground truth over small prime fields."""

from flagpoly.fforacle.budget import DEFAULT_BUDGET, budget, check_budget, get_budget
from flagpoly.fforacle.flags import (
    interpolate_g_poly,
    oracle_f_parabolic,
    oracle_f_radical,
    oracle_w,
    quotient_map,
)
from flagpoly.fforacle.groups import (
    burnside_sum,
    centralizer_order,
    commutant_basis,
    gl_order_int,
    oracle_k,
    radical_elements,
    verify_lemma1,
)
from flagpoly.fforacle.linalg import (
    SUPPORTED_PRIMES,
    EchelonSubspace,
    enumerate_subspaces,
    identity,
    jordan_type,
    nilpotent_of_type,
    unipotent_of_type,
)

__all__ = [
    "DEFAULT_BUDGET",
    "SUPPORTED_PRIMES",
    "EchelonSubspace",
    "budget",
    "burnside_sum",
    "centralizer_order",
    "check_budget",
    "commutant_basis",
    "enumerate_subspaces",
    "get_budget",
    "gl_order_int",
    "identity",
    "interpolate_g_poly",
    "jordan_type",
    "nilpotent_of_type",
    "oracle_f_parabolic",
    "oracle_f_radical",
    "oracle_k",
    "oracle_w",
    "quotient_map",
    "radical_elements",
    "unipotent_of_type",
    "verify_lemma1",
]
