"""Closed-form Picard rank of the genus-g K3 moduli space.

rank = (31g+24)/24 - alpha_g/4 - beta_g/6 - fracsum - sqcount, evaluated
in exact rational arithmetic.  The result must come out an integer >= 1;
anything else signals a transcription bug and raises.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .arith import frac_square_sum, jacobi, square_count
from .errors import BadGenus, BadRange, NonIntegerResult

CSV_COLUMNS = ["g", "alpha", "beta", "fracsum_num", "fracsum_den", "sqcount", "rank"]


def alpha(g: int) -> int:
    """alpha_g: 0 for even g, else the Jacobi symbol (2g-2 / 2g-3)."""
    if g < 2:
        raise BadGenus(f"genus must be >= 2, got {g}")
    if g % 2 == 0:
        return 0
    return jacobi(2 * g - 2, 2 * g - 3)


def beta(g: int) -> int:
    """beta_g with the g mod 3 case split."""
    if g < 2:
        raise BadGenus(f"genus must be >= 2, got {g}")
    j = jacobi(g - 1, 4 * g - 5)
    if g % 3 == 1:
        return j - 1
    return j + jacobi(g - 1, 3)


@dataclass(frozen=True)
class RankReport:
    g: int
    alpha: int
    beta: int
    fracsum: Fraction
    sqcount: int
    rank: int

    def csv_row(self) -> list:
        return [
            self.g,
            self.alpha,
            self.beta,
            self.fracsum.numerator,
            self.fracsum.denominator,
            self.sqcount,
            self.rank,
        ]

    def to_json_obj(self) -> dict:
        return {
            "g": self.g,
            "alpha": self.alpha,
            "beta": self.beta,
            "fracsum": [self.fracsum.numerator, self.fracsum.denominator],
            "sqcount": self.sqcount,
            "rank": self.rank,
        }


def picard_rank(g: int) -> RankReport:
    """Exact term-by-term evaluation of the closed-form rank."""
    a = alpha(g)
    b = beta(g)
    fs = frac_square_sum(g)
    sc = square_count(g)
    value = (
        Fraction(31 * g + 24, 24)
        - Fraction(a, 4)
        - Fraction(b, 6)
        - fs
        - sc
    )
    if value.denominator != 1 or value < 1:
        raise NonIntegerResult(f"rank formula gave {value} at g = {g}")
    return RankReport(g=g, alpha=a, beta=b, fracsum=fs, sqcount=sc, rank=int(value))


def rank_table(g_lo: int, g_hi: int, jobs: int = 1) -> list[RankReport]:
    """Rank reports for g_lo..g_hi inclusive, in genus order.

    Evaluation may run on a thread pool; assembly order is deterministic.
    """
    if g_lo < 2 or g_lo > g_hi:
        raise BadRange(f"need 2 <= g_lo <= g_hi, got ({g_lo}, {g_hi})")
    genera = range(g_lo, g_hi + 1)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(picard_rank, genera))
    return [picard_rank(g) for g in genera]


def table_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rep in reports:
        writer.writerow(rep.csv_row())
    return buf.getvalue()


def table_to_json(reports) -> str:
    return json.dumps([rep.to_json_obj() for rep in reports], sort_keys=True)
