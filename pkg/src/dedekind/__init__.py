"""Exact Dedekind sums, their reciprocity laws, and tools to verify them."""

from .admissible import (
    AdmissibleWitness,
    NotAdmissible,
    enumerate_theorem1_instances,
    factorize,
    is_admissible,
    sqrt_minus_one,
)
from .core import (
    SumArgs,
    dedekind_sum_fast,
    dedekind_sum_naive,
    kernel_backend,
    normalized_sum,
    sawtooth,
)
from .exact import NotCoprime, Rat, ZeroDenominator, egcd, mod_inverse, rat_normalize
from .identities import (
    CofactorInstance,
    Cor2Branch,
    EqualFractions,
    FactKind,
    InvalidInstance,
    NoBranchApplies,
    NotOdd,
    PreconditionViolated,
    Theorem1Instance,
    ThreeTermWitness,
    classical_fact_residual,
    classical_fact_sides,
    cofactor_expansion_residual,
    cofactor_expansion_sides,
    corollary2_residual,
    corollary2_sides,
    du_zhang_residual,
    du_zhang_sides,
    enumerate_cofactor_instances,
    reciprocity_residual,
    reciprocity_sides,
    theorem1_residual,
    theorem1_sides,
    three_term_residual,
    three_term_sides,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleWitness",
    "CofactorInstance",
    "Cor2Branch",
    "EqualFractions",
    "FactKind",
    "InvalidInstance",
    "NoBranchApplies",
    "NotAdmissible",
    "NotCoprime",
    "NotOdd",
    "PreconditionViolated",
    "Rat",
    "SumArgs",
    "Theorem1Instance",
    "ThreeTermWitness",
    "ZeroDenominator",
    "classical_fact_residual",
    "classical_fact_sides",
    "cofactor_expansion_residual",
    "cofactor_expansion_sides",
    "corollary2_residual",
    "corollary2_sides",
    "dedekind_sum_fast",
    "dedekind_sum_naive",
    "du_zhang_residual",
    "du_zhang_sides",
    "egcd",
    "enumerate_cofactor_instances",
    "enumerate_theorem1_instances",
    "factorize",
    "is_admissible",
    "kernel_backend",
    "mod_inverse",
    "normalized_sum",
    "rat_normalize",
    "reciprocity_residual",
    "reciprocity_sides",
    "sawtooth",
    "sqrt_minus_one",
    "theorem1_residual",
    "theorem1_sides",
    "three_term_residual",
    "three_term_sides",
]
