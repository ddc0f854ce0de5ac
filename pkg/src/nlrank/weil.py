"""Weil representation of Mp2(Z) on the group ring of a discriminant form.

Matrices for the standard generators T and S, the center Z = S^2, and the
diagnostics that tie them to the metaplectic presentation.  Complex double
precision throughout; every downstream consumer snaps to roots of unity or
integers, and group orders stay small enough that 1e-9 tolerances are
comfortable.
"""

from __future__ import annotations

import cmath
import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import SnapFailure, TooLarge
from .lattices import DiscriminantForm, Lattice, discriminant_form

DEFAULT_GROUP_CAP = 4096


def group_cap() -> int:
    return int(os.environ.get("NLRANK_MAX_GROUP", DEFAULT_GROUP_CAP))


def _e(x: Fraction | float) -> complex:
    return cmath.exp(2j * cmath.pi * float(x))


@dataclass(frozen=True)
class WeilRep:
    df: DiscriminantForm
    basis: tuple[tuple[int, ...], ...]
    rhoT: np.ndarray
    rhoS: np.ndarray
    rhoZ: np.ndarray

    @property
    def dimension(self) -> int:
        return self.df.cardinality

    @property
    def sig_mod_8(self) -> int:
        return self.df.sig_mod_8

    @property
    def level(self) -> int:
        return self.df.level

    def matrices_json(self) -> str:
        """JSON export: matrices as nested arrays of [re, im] pairs."""

        def enc(m):
            return [[[z.real, z.imag] for z in row] for row in m.tolist()]

        return json.dumps(
            {"rhoT": enc(self.rhoT), "rhoS": enc(self.rhoS), "rhoZ": enc(self.rhoZ)}
        )


def build_weil_rep(df: DiscriminantForm, cap: int | None = None) -> WeilRep:
    """Matrices of T and S on C[A].

    rhoT is diagonal with entries exp(pi*i*q(gamma)); rhoS has entries
    exp(-2*pi*i*sig/8)/sqrt(|A|) * exp(-2*pi*i*b(gamma,delta)) where sig
    is the lattice signature mod 8.  Basis order is lexicographic in
    generator exponents.
    """
    if cap is None:
        cap = group_cap()
    d = df.cardinality
    if d > cap:
        raise TooLarge(f"group of order {d} exceeds cap {cap}")
    basis = tuple(df.elements())
    rho_t = np.diag([cmath.exp(1j * cmath.pi * float(df.q(g))) for g in basis])
    phase = _e(Fraction(-df.sig_mod_8, 8)) / math.sqrt(d)
    rho_s = np.empty((d, d), dtype=complex)
    for i, gi in enumerate(basis):
        for j in range(i, len(basis)):
            z = phase * _e(-df.b(gi, basis[j]))
            rho_s[i, j] = z
            rho_s[j, i] = z
    return WeilRep(df=df, basis=basis, rhoT=rho_t, rhoS=rho_s, rhoZ=rho_s @ rho_s)


def weil_rep_of(lat: Lattice, cap: int | None = None) -> WeilRep:
    return build_weil_rep(discriminant_form(lat), cap)


def _max_abs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m))) if m.size else 0.0


@dataclass(frozen=True)
class RelationReport:
    maxErrS2Z: float
    maxErrST3: float
    maxErrTN: float
    maxErrUnitary: float
    maxErrZSwap: float
    level: int
    passed: bool


def verify_relations(w: WeilRep, tol: float = 1e-9) -> RelationReport:
    """Check the Mp2(Z) presentation on the constructed matrices.

    S^2 = Z, (ST)^3 = S^2, T^N = 1 for N the level, S unitary, and Z
    permutes e_gamma to a scalar multiple of e_{-gamma}.  Reports errors,
    never raises.
    """
    d = w.dimension
    eye = np.eye(d)
    err_s2z = _max_abs(w.rhoS @ w.rhoS - w.rhoZ)
    st = w.rhoS @ w.rhoT
    err_st3 = _max_abs(np.linalg.matrix_power(st, 3) - w.rhoZ)
    err_tn = _max_abs(np.linalg.matrix_power(w.rhoT, w.level) - eye)
    err_unitary = _max_abs(w.rhoS @ w.rhoS.conj().T - eye)
    index = {g: i for i, g in enumerate(w.basis)}
    err_swap = 0.0
    for i, g in enumerate(w.basis):
        j = index[w.df.neg(g)]
        col = np.abs(w.rhoZ[:, i])
        off = col.copy()
        off[j] = 0.0
        err_swap = max(err_swap, float(np.max(off)) if d > 1 else 0.0)
        err_swap = max(err_swap, abs(col[j] - 1.0))
    passed = all(
        e < tol for e in (err_s2z, err_st3, err_tn, err_unitary, err_swap)
    )
    return RelationReport(
        maxErrS2Z=err_s2z,
        maxErrST3=err_st3,
        maxErrTN=err_tn,
        maxErrUnitary=err_unitary,
        maxErrZSwap=err_swap,
        level=w.level,
        passed=passed,
    )


@dataclass(frozen=True)
class TraceReport:
    trT: complex
    trS: complex
    trST: complex
    # multiplicity of each N-th root of unity exp(2*pi*i*r) on the diagonal
    # of rhoT, keyed by the reduced exponent r in [0,1)
    eigT_multiplicities: dict[Fraction, int]


def traces(w: WeilRep, snap_tol: float = 1e-6) -> TraceReport:
    """Traces of T, S, ST and the exact eigenvalue content of rhoT.

    Each diagonal entry of rhoT is snapped to the nearest N-th root of
    unity (N = level); entries further than snap_tol raise SnapFailure.
    """
    n = w.level
    mult: dict[Fraction, int] = {}
    for i in range(w.dimension):
        z = w.rhoT[i, i]
        angle = cmath.phase(z) / (2 * math.pi)
        k = round(angle * n) % n
        root = _e(Fraction(k, n))
        if abs(z - root) > snap_tol:
            raise SnapFailure(
                f"rhoT diagonal entry {z} is not an {n}-th root of unity"
            )
        key = Fraction(k, n)
        mult[key] = mult.get(key, 0) + 1
    tr_t = complex(np.trace(w.rhoT))
    tr_s = complex(np.trace(w.rhoS))
    tr_st = complex(np.trace(w.rhoS @ w.rhoT))
    return TraceReport(trT=tr_t, trS=tr_s, trST=tr_st, eigT_multiplicities=mult)
