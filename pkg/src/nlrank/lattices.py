"""Even integral lattices, exact invariants, and discriminant forms.

Everything here is exact: Gram matrices are arbitrary-precision integers,
signatures come from rational congruence diagonalization, and discriminant
groups come from an integer Smith normal form with unimodular transforms.
No floating point enters this module.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import BadGenus, BadScale, Degenerate, NotEven, NotSymmetric

Gram = tuple[tuple[int, ...], ...]


def _as_gram(rows) -> Gram:
    return tuple(tuple(int(x) for x in row) for row in rows)


def _int_det(rows: Gram) -> int:
    """Exact determinant of an integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class Lattice:
    """Even nondegenerate lattice given by its integer Gram matrix."""

    gram: Gram
    name: str | None = None

    @property
    def rank(self) -> int:
        return len(self.gram)

    def det(self) -> int:
        return _int_det(self.gram)

    def inner(self, x, y) -> Fraction:
        """Bilinear form on rational coordinate vectors in the lattice basis."""
        total = Fraction(0)
        for i, row in enumerate(self.gram):
            if x[i]:
                total += x[i] * sum(Fraction(row[j]) * y[j] for j in range(self.rank) if y[j])
        return total

    def to_json(self) -> str:
        obj = {"gram": [list(r) for r in self.gram]}
        if self.name is not None:
            obj["name"] = self.name
        return json.dumps(obj, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "Lattice":
        obj = json.loads(text)
        return make_lattice(obj["gram"], name=obj.get("name"))


@dataclass(frozen=True)
class Signature:
    positive: int
    negative: int

    @property
    def rank(self) -> int:
        return self.positive + self.negative


def make_lattice(gram, name: str | None = None) -> Lattice:
    """Validate a Gram matrix and wrap it as a Lattice.

    Raises NotSymmetric / NotEven / Degenerate on bad input.
    """
    g = _as_gram(gram)
    n = len(g)
    if any(len(row) != n for row in g):
        raise NotSymmetric("Gram matrix must be square")
    for i in range(n):
        for j in range(i + 1, n):
            if g[i][j] != g[j][i]:
                raise NotSymmetric(f"gram[{i}][{j}] != gram[{j}][{i}]")
    for i in range(n):
        if g[i][i] % 2 != 0:
            raise NotEven(f"odd diagonal entry gram[{i}][{i}] = {g[i][i]}")
    if n > 0 and _int_det(g) == 0:
        raise Degenerate("Gram matrix is singular")
    return Lattice(g, name)


# Gram matrix of E8 in a root basis (Dynkin diagram in Bourbaki numbering:
# chain 1-3-4-5-6-7-8 with node 2 attached to node 4).
_E8_EDGES = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]


def _e8_gram() -> Gram:
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = 2
    for a, b in _E8_EDGES:
        g[a - 1][b - 1] = -1
        g[b - 1][a - 1] = -1
    return _as_gram(g)


def hyperbolic(scale: int = 1) -> Lattice:
    """U(N): the rank-two lattice [[0, N], [N, 0]]."""
    if scale < 1:
        raise BadScale(f"U(N) needs N >= 1, got {scale}")
    name = "U" if scale == 1 else f"U({scale})"
    return Lattice(((0, scale), (scale, 0)), name)


def e8(negative: bool = False) -> Lattice:
    g = _e8_gram()
    if negative:
        g = tuple(tuple(-x for x in row) for row in g)
    return Lattice(g, "-E8" if negative else "E8")


def direct_sum(*lattices: Lattice, name: str | None = None) -> Lattice:
    """Orthogonal direct sum: block-diagonal Gram matrix."""
    total = sum(lat.rank for lat in lattices)
    g = [[0] * total for _ in range(total)]
    off = 0
    for lat in lattices:
        for i in range(lat.rank):
            for j in range(lat.rank):
                g[off + i][off + j] = lat.gram[i][j]
        off += lat.rank
    return Lattice(_as_gram(g), name)


def k3_lattice() -> Lattice:
    """The K3 lattice U^3 + (-E8)^2 of signature (3,19)."""
    u = hyperbolic()
    return direct_sum(u, u, u, e8(True), e8(True), name="K3")


def lambda_lattice(g: int) -> Lattice:
    """Lambda_g = <w> + U^2 + (-E8)^2 with w.w = 2-2g; rank 21."""
    if g < 2:
        raise BadGenus(f"genus must be >= 2, got {g}")
    w = Lattice(((2 - 2 * g,),), f"<{2 - 2 * g}>")
    u = hyperbolic()
    return direct_sum(w, u, u, e8(True), e8(True), name=f"Lambda_{g}")


def catalog(name: str, *, g: int | None = None, scale: int | None = None) -> Lattice:
    """Named lattices: U, U(N), E8, minusE8, K3, Lambda_g."""
    if name == "U":
        return hyperbolic(1 if scale is None else scale)
    if name == "U(N)":
        return hyperbolic(1 if scale is None else scale)
    if name == "E8":
        return e8(False)
    if name == "minusE8":
        return e8(True)
    if name == "K3":
        return k3_lattice()
    if name == "Lambda_g":
        if g is None:
            raise BadGenus("Lambda_g needs a genus g >= 2")
        return lambda_lattice(g)
    raise KeyError(f"unknown catalog lattice {name!r}")


def signature(lat: Lattice) -> Signature:
    """Exact signature by symmetric congruence diagonalization over Q."""
    n = lat.rank
    a = [[Fraction(x) for x in row] for row in lat.gram]
    pos = neg = 0
    for t in range(n):
        if a[t][t] == 0:
            swap = next((j for j in range(t + 1, n) if a[j][j] != 0), None)
            if swap is not None:
                for r in range(n):
                    a[r][t], a[r][swap] = a[r][swap], a[r][t]
                a[t], a[swap] = a[swap], a[t]
            else:
                # all remaining diagonal entries vanish; grab an off-diagonal
                j = next(j for j in range(t + 1, n) if a[t][j] != 0)
                for r in range(n):
                    a[r][t] += a[r][j]
                for c in range(n):
                    a[t][c] += a[j][c]
        p = a[t][t]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for r in range(t + 1, n):
            f = a[r][t] / p
            if f:
                for c in range(n):
                    a[r][c] -= f * a[t][c]
                for c in range(n):
                    a[c][r] -= f * a[c][t]
    return Signature(pos, neg)


def smith_normal_form(rows: Gram):
    """Smith normal form D = U * M * V with unimodular U, V.

    Returns (divisors, U, V) where divisors is the full diagonal of D
    (positive, each dividing the next).
    """
    n = len(rows)
    a = [list(r) for r in rows]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(n):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def add_row(dst, src, c):
        for k in range(n):
            a[dst][k] += c * a[src][k]
        for k in range(n):
            u[dst][k] += c * u[src][k]

    def add_col(dst, src, c):
        for r in range(n):
            a[r][dst] += c * a[r][src]
        for r in range(n):
            v[r][dst] += c * v[r][src]

    for t in range(n):
        while True:
            piv = None
            for i in range(t, n):
                for j in range(t, n):
                    x = a[i][j]
                    if x != 0 and (piv is None or abs(x) < abs(a[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                break
            if piv != (t, t):
                swap_rows(t, piv[0])
                swap_cols(t, piv[1])
            p = a[t][t]
            clean = True
            for i in range(t + 1, n):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    if a[t][j]:
                        clean = False
            if not clean:
                continue
            bad = next(
                (
                    i
                    for i in range(t + 1, n)
                    if any(a[i][j] % p for j in range(t + 1, n))
                ),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            for k in range(n):
                a[t][k] = -a[t][k]
            for k in range(n):
                u[t][k] = -u[t][k]
    return [a[i][i] for i in range(n)], u, v


def _mod2(x: Fraction) -> Fraction:
    return x - 2 * (x / 2).__floor__()


def _mod1(x: Fraction) -> Fraction:
    return x - x.__floor__()


@dataclass(frozen=True)
class DiscriminantForm:
    """The finite quadratic module (A, q, b) of an even lattice.

    A = M^dual / M with q valued in Q/2Z (stored in [0,2)) and pairing b
    in Q/Z (stored in [0,1)).  Elements are exponent tuples against the
    stored generators, which are rational vectors in the lattice basis.
    """

    orders: tuple[int, ...]
    generators: tuple[tuple[Fraction, ...], ...]
    cardinality: int
    level: int
    sig_mod_8: int
    # pairing matrix of the generators: gen_pairing[i][j] = <g_i, g_j>
    gen_pairing: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def ngens(self) -> int:
        return len(self.orders)

    def elements(self):
        """All group elements as exponent tuples, lexicographic order."""
        return itertools.product(*(range(d) for d in self.orders))

    def neg(self, exps):
        return tuple((-e) % d for e, d in zip(exps, self.orders))

    def vector(self, exps) -> tuple[Fraction, ...]:
        """Coordinates in the lattice basis of a representative in M^dual."""
        nvars = len(self.generators[0]) if self.generators else 0
        out = [Fraction(0)] * nvars
        for e, gen in zip(exps, self.generators):
            if e:
                for i, c in enumerate(gen):
                    out[i] += e * c
        return tuple(out)

    def q(self, exps) -> Fraction:
        """q(gamma) = <gamma, gamma> mod 2, in [0, 2)."""
        total = Fraction(0)
        for i, ei in enumerate(exps):
            if ei:
                row = self.gen_pairing[i]
                total += ei * ei * row[i]
                for j in range(i + 1, len(exps)):
                    if exps[j]:
                        total += 2 * ei * exps[j] * row[j]
        return _mod2(total)

    def b(self, e1, e2) -> Fraction:
        """b(gamma, delta) = <gamma, delta> mod 1, in [0, 1)."""
        total = Fraction(0)
        for i, x in enumerate(e1):
            if x:
                row = self.gen_pairing[i]
                for j, y in enumerate(e2):
                    if y:
                        total += x * y * row[j]
        return _mod1(total)


def discriminant_form(lat: Lattice) -> DiscriminantForm:
    """Discriminant group and quadratic form via Smith normal form.

    With U*G*V = D, the class of the i-th elementary divisor d_i > 1 is
    generated by (column i of V) / d_i, a vector of M^dual in the lattice
    basis.
    """
    n = lat.rank
    divisors, _, v = smith_normal_form(lat.gram)
    orders = []
    gens = []
    for i, d in enumerate(divisors):
        if d > 1:
            orders.append(d)
            gens.append(tuple(Fraction(v[r][i], d) for r in range(n)))
    pairing = tuple(
        tuple(lat.inner(gi, gj) for gj in gens) for gi in gens
    )
    card = 1
    for d in orders:
        card *= d
    sig = signature(lat)
    level = 1
    for i in range(len(gens)):
        level = lcm(level, (pairing[i][i] / 2).denominator)
        for j in range(i + 1, len(gens)):
            level = lcm(level, pairing[i][j].denominator)
    return DiscriminantForm(
        orders=tuple(orders),
        generators=tuple(gens),
        cardinality=card,
        level=level,
        sig_mod_8=(sig.positive - sig.negative) % 8,
        gen_pairing=pairing,
    )
