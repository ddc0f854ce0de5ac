"""Picard ranks of K3 moduli spaces and the lattice theory behind them.

Two independent routes to the same number: the exact closed-form rank
and 1 + dim of a space of vector-valued cusp forms attached to the Weil
representation of the discriminant form of Lambda_g.
"""

from .arith import frac_square_sum, gauss_sum, jacobi, square_count
from .cuspdim import CuspDimReport, dim_cusp, dim_cusp_df, picard_rank_via_cusp
from .lattices import (
    DiscriminantForm,
    Lattice,
    Signature,
    catalog,
    direct_sum,
    discriminant_form,
    e8,
    hyperbolic,
    k3_lattice,
    lambda_lattice,
    make_lattice,
    signature,
    smith_normal_form,
)
from .nl import NLLabel, enumerate_nl, nl_label, projection_oracle
from .rank import RankReport, alpha, beta, picard_rank, rank_table
from .weil import WeilRep, build_weil_rep, traces, verify_relations, weil_rep_of

__all__ = [
    "CuspDimReport",
    "DiscriminantForm",
    "Lattice",
    "NLLabel",
    "RankReport",
    "Signature",
    "WeilRep",
    "alpha",
    "beta",
    "build_weil_rep",
    "catalog",
    "dim_cusp",
    "dim_cusp_df",
    "direct_sum",
    "discriminant_form",
    "e8",
    "enumerate_nl",
    "frac_square_sum",
    "gauss_sum",
    "hyperbolic",
    "jacobi",
    "k3_lattice",
    "lambda_lattice",
    "make_lattice",
    "nl_label",
    "picard_rank",
    "picard_rank_via_cusp",
    "projection_oracle",
    "rank_table",
    "signature",
    "smith_normal_form",
    "square_count",
    "traces",
    "verify_relations",
    "weil_rep_of",
]
