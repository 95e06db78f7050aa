"""Invariant bookkeeping for chain contraction and Q-Gorenstein smoothing.

Contracting a negative chain adds sum_i d_i*(b_i - 2) to K^2, where the
discrepancy vector (d_i) solves the chain's tridiagonal intersection system.
Smoothing a class-T point whose resolution chain has length r and smoothing
dimension d drops the Euler number by r + 1 - d: the contraction removes r
curves and the Milnor fiber of the point contributes Euler number d in place
of the point itself.  The Euler constant is a design commitment validated by
the 12*chi = K^2 + e consistency check on every output and by the pipeline
cross-check against the direct double-cover computation.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .classt import (
    CLASS_T,
    NOT_CLASS_T,
    RATIONAL_DOUBLE_POINT,
    ChainClassification,
    ResolutionChain,
    recognize_class_t,
)
from .covers import SurfaceInvariants
from .lattice import BlownHirzebruch, DivisorClass


def discrepancies(chain: ResolutionChain) -> tuple[Fraction, ...]:
    """Exact solution (d_i) of sum_i d_i (E_i.E_j) = -(b_j - 2) for all j.

    The chain Gram matrix is tridiagonal with diagonal -b_i and unit
    off-diagonals; one forward elimination sweep and one back substitution,
    all in exact rationals.  Valid chains give 0 <= d_i < 1.
    """
    b = chain.b
    r = len(b)
    diag = [Fraction(-bi) for bi in b]
    rhs = [Fraction(2 - bi) for bi in b]
    for i in range(1, r):
        if diag[i - 1] == 0:
            raise RuntimeError(f"internal error: singular chain matrix for {b}")
        diag[i] -= Fraction(1) / diag[i - 1]
        rhs[i] -= rhs[i - 1] / diag[i - 1]
    if diag[-1] == 0:
        raise RuntimeError(f"internal error: singular chain matrix for {b}")
    sol = [Fraction(0)] * r
    sol[-1] = rhs[-1] / diag[-1]
    for i in range(r - 2, -1, -1):
        sol[i] = (rhs[i] - sol[i + 1]) / diag[i]
    out = tuple(sol)
    if not all(0 <= d < 1 for d in out):
        raise RuntimeError(f"internal error: discrepancies {out} out of [0,1) for {b}")
    return out


def k2_correction(chain: ResolutionChain) -> Fraction:
    """Increase of K^2 when the chain contracts: sum_i d_i*(b_i - 2)."""
    return sum(
        (d * (bi - 2) for d, bi in zip(discrepancies(chain), chain.b)),
        start=Fraction(0),
    )


@dataclass(frozen=True)
class ContractionSet:
    """Disjoint negative chains of curve classes in one ambient lattice.

    Construction verifies the plumbing shape (consecutive classes meet once,
    all other pairs are orthogonal, self-intersections are -b_i <= -2) and
    classifies each chain; chains outside class T are rejected.
    """

    surface: BlownHirzebruch
    chains: tuple[tuple[DivisorClass, ...], ...]
    classifications: tuple[ChainClassification, ...] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "chains", tuple(tuple(c) for c in self.chains))
        pair = self.surface.pairing
        classifications = []
        for chain in self.chains:
            if not chain:
                raise ValueError("empty chain in contraction set")
            b = []
            for c in chain:
                self_int = pair(c, c)
                if self_int > -2:
                    raise ValueError(
                        f"chain class with self-intersection {self_int}; need <= -2"
                    )
                b.append(-self_int)
            for i in range(len(chain)):
                for j in range(i + 1, len(chain)):
                    expected = 1 if j == i + 1 else 0
                    got = pair(chain[i], chain[j])
                    if got != expected:
                        raise ValueError(
                            f"chain positions {i} and {j} pair to {got}, expected {expected}"
                        )
            verdict = recognize_class_t(ResolutionChain(tuple(b)))
            if verdict.kind == NOT_CLASS_T:
                raise ValueError(f"chain {b} is not of class T")
            classifications.append(verdict)
        for i in range(len(self.chains)):
            for j in range(i + 1, len(self.chains)):
                for a in self.chains[i]:
                    for c in self.chains[j]:
                        if pair(a, c) != 0:
                            raise ValueError(f"chains {i} and {j} are not disjoint")
        object.__setattr__(self, "classifications", tuple(classifications))


@dataclass(frozen=True)
class ChainContribution:
    """What one contracted-and-smoothed chain does to the invariants."""

    classification: ChainClassification
    discrepancies: tuple[Fraction, ...]
    k2_correction: Fraction
    euler_drop: int


@dataclass(frozen=True)
class SmoothedFiberInvariants:
    fiber: SurfaceInvariants
    contributions: tuple[ChainContribution, ...]


def smoothing_invariants(
    v: SurfaceInvariants, chains: Sequence[ChainClassification]
) -> SmoothedFiberInvariants:
    """Invariants of the general fiber after contracting and smoothing chains.

    chi carries over; K^2 gains each chain's contraction correction; e drops
    by r + 1 - d per chain.  p_g, when present on the input, is carried over
    as an inferred value (reports label it so).  The output must satisfy
    12*chi = K^2 + e, otherwise the chain/d accounting is wrong and the call
    fails.  Rational double point chains contribute nothing and are skipped
    with a warning.
    """
    if v.K2 is None or v.e is None or v.chi is None:
        raise ValueError("smoothing needs K2, e and chi on the input invariants")
    contributions = []
    total_correction = Fraction(0)
    total_drop = 0
    for cls in chains:
        if cls.kind == RATIONAL_DOUBLE_POINT:
            warnings.warn(
                f"rational double point chain {cls.chain.b} has no effect on the "
                f"smoothing invariants; skipping it",
                stacklevel=2,
            )
            continue
        if cls.kind != CLASS_T:
            raise ValueError(f"chain {cls.chain.b} is not of class T")
        disc = discrepancies(cls.chain)
        correction = k2_correction(cls.chain)
        drop = len(cls.chain) + 1 - cls.tdata.d
        contributions.append(
            ChainContribution(
                classification=cls,
                discrepancies=disc,
                k2_correction=correction,
                euler_drop=drop,
            )
        )
        total_correction += correction
        total_drop += drop
    k2_exact = v.K2 + total_correction
    if k2_exact.denominator != 1:
        raise ValueError(f"K^2 correction sums to non-integer {k2_exact}")
    k2 = int(k2_exact)
    e = v.e - total_drop
    if 12 * v.chi != k2 + e:
        raise ValueError(
            f"accounting error: 12*chi = {12 * v.chi} but K^2 + e = {k2 + e}; "
            f"wrong chain/d combination"
        )
    p_g = v.p_g
    q = None if p_g is None else 1 - v.chi + p_g
    fiber = SurfaceInvariants(p_g=p_g, q=q, chi=v.chi, K2=k2, e=e)
    return SmoothedFiberInvariants(fiber=fiber, contributions=tuple(contributions))


def branch_compatibility(
    surface: BlownHirzebruch, branch: DivisorClass, contraction: ContractionSet
) -> bool:
    """True iff the branch class is orthogonal to every contracted class."""
    if contraction.surface != surface:
        raise ValueError("contraction set lives on a different surface")
    pair = surface.pairing
    return all(pair(branch, c) == 0 for chain in contraction.chains for c in chain)
