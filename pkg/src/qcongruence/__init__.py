"""Exact-arithmetic verification of q-supercongruences.

The library checks, at chosen sizes n, primes p and exact rational parameter
points, a family of congruences for double and triple sums of basic
hypergeometric terms modulo powers of cyclotomic polynomials, together with
the summation identities, Chinese-remainder multiplier lemmas, ε-jet limits
and p-adic corollaries that surround them.  All arithmetic is exact; nothing
is ever evaluated in floating point.
"""

from .congruence import (
    CongruenceClaim,
    ModulusCollisionError,
    ParamPoint,
    UndecidableCongruenceError,
    congruent_mod,
    lemma22_multipliers,
    reduce_mod,
    verify_base_DE,
    verify_lemma22,
    verify_relations,
)
from .jet import EpsJet, JetLimitError
from .padic import (
    PadicNum,
    RationalResidue,
    harmonic2,
    morita_gamma,
    pochhammer_rat,
    to_padic,
    verify_classical,
    verify_cor,
    verify_harmonic_identity,
)
from .poly import (
    CoprimalityError,
    QPoly,
    cyclotomic,
    poly_crt,
    poly_gcd,
    poly_xgcd,
)
from .qseries import (
    QMonomial,
    TermSpec,
    q_integer,
    q_pochhammer,
    simplex_sum,
    term,
)
from .ratfun import RatFun
from .theorems import (
    STATEMENT_IDS,
    VerifyReport,
    WindowHypothesisError,
    verify_base_a,
    verify_base_bc,
    verify_chain,
    verify_final_reduction,
    verify_jackson,
    verify_lemma_a,
    verify_limit,
    verify_prior,
    verify_thm_a,
    verify_thm_aa,
    verify_thm_c,
    verify_thm_d,
)

__version__ = "0.1.0"

__all__ = [
    "CongruenceClaim",
    "CoprimalityError",
    "EpsJet",
    "JetLimitError",
    "ModulusCollisionError",
    "PadicNum",
    "ParamPoint",
    "QMonomial",
    "QPoly",
    "RatFun",
    "RationalResidue",
    "STATEMENT_IDS",
    "TermSpec",
    "UndecidableCongruenceError",
    "VerifyReport",
    "WindowHypothesisError",
    "congruent_mod",
    "cyclotomic",
    "harmonic2",
    "lemma22_multipliers",
    "morita_gamma",
    "pochhammer_rat",
    "poly_crt",
    "poly_gcd",
    "poly_xgcd",
    "q_integer",
    "q_pochhammer",
    "reduce_mod",
    "simplex_sum",
    "term",
    "to_padic",
    "verify_base_DE",
    "verify_base_a",
    "verify_base_bc",
    "verify_chain",
    "verify_classical",
    "verify_cor",
    "verify_final_reduction",
    "verify_harmonic_identity",
    "verify_jackson",
    "verify_lemma22",
    "verify_lemma_a",
    "verify_limit",
    "verify_prior",
    "verify_relations",
    "verify_thm_a",
    "verify_thm_aa",
    "verify_thm_c",
    "verify_thm_d",
]
