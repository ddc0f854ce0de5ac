"""Noether-Lefschetz divisor bookkeeping on the genus-g K3 moduli side.

A divisor label (g, h, d) carries the discriminant
Delta = d^2 - 4(g-1)(h-1), the norm n = -Delta/(4g-4) of the projected
class, and its coset gamma = d mod 2g-2 in the discriminant group.  The
projection oracle recomputes n from the rank-2 Gram matrix of the span
of the polarization and the extra class, independently of the label
formula.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadGenus, NegativeDiscriminant

CSV_COLUMNS = ["g", "h", "d", "delta", "n_num", "n_den", "gamma", "degenerate"]


@dataclass(frozen=True)
class NLLabel:
    g: int
    h: int
    d: int
    delta: int
    n: Fraction
    gamma: int
    degenerate: bool

    @property
    def n_abs(self) -> Fraction:
        return abs(self.n)

    def csv_row(self) -> list:
        return [
            self.g,
            self.h,
            self.d,
            self.delta,
            self.n.numerator,
            self.n.denominator,
            self.gamma,
            int(self.degenerate),
        ]


def nl_label(g: int, h: int, d: int) -> NLLabel:
    """Label of the divisor D_{h,d}; Delta = 0 is degenerate (Euler class)."""
    if g < 2:
        raise BadGenus(f"genus must be >= 2, got {g}")
    delta = d * d - 4 * (g - 1) * (h - 1)
    if delta < 0:
        raise NegativeDiscriminant(f"Delta({h},{d}) = {delta} < 0 for g = {g}")
    n = Fraction(-delta, 4 * g - 4)
    return NLLabel(
        g=g,
        h=h,
        d=d,
        delta=delta,
        n=n,
        gamma=d % (2 * g - 2),
        degenerate=(delta == 0),
    )


def projection_oracle(g: int, h: int, d: int) -> Fraction:
    """Half-norm of beta projected away from c1(L).

    Works on the abstract rank-2 Gram [[2g-2, d], [d, 2h-2]] of the span
    of c1(L) and beta: x = beta - (d/(2g-2)) c1(L), returns <x,x>/2.
    """
    if g < 2:
        raise BadGenus(f"genus must be >= 2, got {g}")
    c = Fraction(d, 2 * g - 2)
    # <x,x> = beta.beta - 2c*(beta.c1) + c^2*(c1.c1)
    xx = Fraction(2 * h - 2) - 2 * c * d + c * c * (2 * g - 2)
    return xx / 2


def enumerate_nl(g: int, d_max: int, h_max: int) -> list[NLLabel]:
    """All valid labels on the grid 0 <= d <= d_max, 0 <= h <= h_max.

    Sorted by (Delta descending, d, h); degenerate labels included.
    """
    if d_max < 0 or h_max < 0:
        raise ValueError("grid bounds must be nonnegative")
    out = []
    for d in range(d_max + 1):
        for h in range(h_max + 1):
            try:
                out.append(nl_label(g, h, d))
            except NegativeDiscriminant:
                pass
    out.sort(key=lambda lab: (-lab.delta, lab.d, lab.h))
    return out


def labels_to_csv(labels) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for lab in labels:
        writer.writerow(lab.csv_row())
    return buf.getvalue()
