"""Dimensions of vector-valued cusp forms and the Picard-number identity.

The dimension of S_{k,M} for half-integral k > 2 comes from Riemann-Roch
on the modular curve: a main term d*(k+5)/12 on the plus/minus eigenspace
rank, elliptic corrections at the order-4 and order-6 points expressed
through quadratic Gauss sums of the discriminant form, and a parabolic
correction from the T-eigenvalues.  All inputs are exact rationals; the
only floating point is the final evaluation, snapped back to an integer.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    BadSignature,
    HypothesisNotAsserted,
    SnapFailure,
    WeightTooSmall,
)
from .lattices import DiscriminantForm, Lattice, discriminant_form, signature

SNAP_TOL = 1e-6


def _frac1(x: Fraction) -> Fraction:
    return x - x.__floor__()


@dataclass(frozen=True)
class CuspDimReport:
    k: Fraction
    d: int
    dim: int
    parity_ok: bool
    symmetric: bool | None
    boundary_terms: dict = field(default_factory=dict)

    def to_json(self) -> str:
        obj = {
            "k": [self.k.numerator, self.k.denominator],
            "d": self.d,
            "dim": self.dim,
            "parity_ok": self.parity_ok,
            "symmetric": self.symmetric,
            "boundary_terms": self.boundary_terms,
        }
        return json.dumps(obj, sort_keys=True)


def dim_cusp_df(df: DiscriminantForm, k: Fraction) -> CuspDimReport:
    """Riemann-Roch dimension of cusp forms of weight k and type rho.

    Valid for k > 2.  Weights whose parity is incompatible with the
    representation give a flagged zero, not an error.
    """
    k = Fraction(k)
    if k.denominator not in (1, 2):
        raise ValueError(f"weight must be half-integral, got {k}")
    if k <= 2:
        raise WeightTooSmall(f"formula needs weight > 2, got {k}")
    two_k = (2 * k).numerator

    parity = (two_k + df.sig_mod_8) % 4
    if parity == 0:
        symm = True
    elif parity == 2:
        symm = False
    else:
        return CuspDimReport(
            k=k, d=df.cardinality, dim=0, parity_ok=False, symmetric=None
        )
    eps = 1 if symm else -1

    d = df.cardinality
    sqrt_d = math.sqrt(d)
    sig = df.sig_mod_8

    # walk the group once: orbit structure under gamma -> -gamma, the
    # parabolic term, isotropic counts, and the three Gauss sums
    rank_pm = 0
    alpha_t = Fraction(0)
    n_iso = 0
    g1 = 0j
    g2 = 0j
    g3 = 0j
    for exps in df.elements():
        qt = _frac1(df.q(exps) / 2)  # q(gamma)/2 in Q/Z
        phase = 2 * cmath.pi * float(qt)
        g1 += cmath.exp(1j * phase)
        g2 += cmath.exp(2j * phase)
        g3 += cmath.exp(-3j * phase)
        neg = df.neg(exps)
        order_two = neg == exps
        if neg < exps:
            continue  # one representative per pair {gamma, -gamma}
        if order_two and not symm:
            continue  # order-two classes only carry symmetric forms
        rank_pm += 1
        alpha_t += _frac1(-qt)
        n_iso += qt == 0

    main = rank_pm * (k + 5) / 12
    g2_part = g2.real if symm else g2.imag
    e4 = cmath.exp(1j * cmath.pi * (two_k + sig + 1 - eps) / 4)
    term_e4 = (e4 * g2_part).real / (4 * sqrt_d)
    e6 = cmath.exp(1j * cmath.pi * (3 * sig + 2 * two_k - 10) / 12)
    term_e6 = ((e6 * (g1 + eps * g3)).real) / (3 * math.sqrt(3) * sqrt_d)

    value = float(main) + term_e4 - float(alpha_t) - term_e6 - n_iso
    dim = round(value)
    if abs(value - dim) > SNAP_TOL:
        raise SnapFailure(f"dimension {value} is not within {SNAP_TOL} of an integer")
    if dim < 0:
        raise SnapFailure(f"negative dimension {dim} from Riemann-Roch")
    return CuspDimReport(
        k=k,
        d=d,
        dim=dim,
        parity_ok=True,
        symmetric=symm,
        boundary_terms={
            "rank_pm": rank_pm,
            "main": float(main),
            "elliptic_order4": term_e4,
            "elliptic_order6": -term_e6,
            "parabolic": -float(alpha_t),
            "isotropic": -n_iso,
            "raw_value": value,
        },
    )


def dim_cusp(lat: Lattice, k: Fraction) -> CuspDimReport:
    return dim_cusp_df(discriminant_form(lat), k)


def picard_rank_via_cusp(lat: Lattice, *, split_asserted: bool = False) -> int:
    """1 + dim S_{m/2, M} for an even lattice M of signature (p, 2).

    Requires the hermitian slot of the signature to be 2 and the caller to
    assert the U + U(N) orthogonal splitting hypothesis (catalog Lambda_g
    lattices qualify).
    """
    sig = signature(lat)
    if sig.positive != 2:
        raise BadSignature(
            f"need signature (2, p); lattice has ({sig.positive}, {sig.negative})"
        )
    known_split = (lat.name or "").startswith("Lambda_")
    if not (split_asserted or known_split):
        raise HypothesisNotAsserted(
            "caller must assert the U + U(N) orthogonal splitting"
        )
    m = lat.rank
    report = dim_cusp(lat, Fraction(m, 2))
    return 1 + report.dim
