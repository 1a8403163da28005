"""Vertex couplings of a star graph in their four standard descriptions.

A self-adjoint vertex of degree n is fixed by two n x n matrices (A, B)
through A psi(0) + B psi'(0) = 0, subject to rank (A|B) = n and self-adjoint
A B†. Three reduced descriptions are supported and convert to the general
pair: the block normal form with a Hermitian block, its scale-invariant
special case (energy-independent scattering), and the delta interaction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch
from .numerics import (
    as_complex_matrix,
    hermitian_defect,
    rank_augmented,
    solve_linear,
    unitarity_defect,
)

#: Relative tolerance for hermiticity / rank admissibility checks.
COUPLING_TOL = 1e-12


@dataclass(frozen=True)
class GeneralCoupling:
    """Vertex conditions a @ psi(0) + b @ psi'(0) = 0 with square a, b."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = as_complex_matrix(self.a, "a")
        b = as_complex_matrix(self.b, "b")
        if a.shape != b.shape or a.shape[0] != a.shape[1]:
            raise DimensionMismatch(f"a, b must be square of equal size, got {a.shape}, {b.shape}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return self.a.shape[0]

    def to_general(self) -> "GeneralCoupling":
        return self


@dataclass(frozen=True)
class STForm:
    """Block normal form of vertex conditions.

    The first r lines carry the derivative block [I | t] and the remaining
    n - r lines the value block [-t† | I]; ``s`` is the Hermitian r x r
    block coupling values back into the derivative rows. The line ordering
    is taken as given; no renumbering search is performed.
    """

    s: np.ndarray
    t: np.ndarray

    def __post_init__(self):
        s = as_complex_matrix(self.s, "s")
        t = as_complex_matrix(self.t, "t")
        if s.shape[0] != s.shape[1]:
            raise DimensionMismatch(f"s must be square, got {s.shape}")
        if t.shape[0] != s.shape[0]:
            raise DimensionMismatch(f"t must have {s.shape[0]} rows, got {t.shape}")
        if hermitian_defect(s) > COUPLING_TOL * max(1.0, float(np.abs(s).max(initial=0.0))):
            raise ValueError("s block must be Hermitian")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)

    @property
    def r(self) -> int:
        return self.s.shape[0]

    @property
    def n(self) -> int:
        return self.r + self.t.shape[1]

    def to_general(self) -> GeneralCoupling:
        r, n = self.r, self.n
        a = np.zeros((n, n), dtype=complex)
        b = np.zeros((n, n), dtype=complex)
        a[:r, :r] = -self.s
        a[r:, :r] = self.t.conj().T
        a[r:, r:] = -np.eye(n - r)
        b[:r, :r] = np.eye(r)
        b[:r, r:] = self.t
        return GeneralCoupling(a, b)


@dataclass(frozen=True)
class ScaleInvariantCoupling:
    """Vertex coupling whose zero-potential scattering matrix is energy independent.

    Equivalent to the block normal form with vanishing Hermitian block, so it
    is fully described by the r x (n - r) matrix ``t``.
    """

    t: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "t", as_complex_matrix(self.t, "t"))

    @property
    def r(self) -> int:
        return self.t.shape[0]

    @property
    def n(self) -> int:
        return self.t.shape[0] + self.t.shape[1]

    def st_form(self) -> STForm:
        return STForm(np.zeros((self.r, self.r), dtype=complex), self.t)

    def to_general(self) -> GeneralCoupling:
        return self.st_form().to_general()


@dataclass(frozen=True)
class DeltaCoupling:
    """Delta interaction of strength alpha at a vertex of degree n.

    The wave function is continuous across the vertex and the outward
    derivatives sum to alpha times the common value.
    """

    n: int
    alpha: float

    def __post_init__(self):
        if self.n < 1:
            raise DimensionMismatch("delta coupling needs at least one line")
        if not np.isfinite(self.alpha):
            raise ValueError("alpha must be finite")

    def to_general(self) -> GeneralCoupling:
        n = self.n
        a = np.zeros((n, n), dtype=complex)
        b = np.zeros((n, n), dtype=complex)
        a[0, 0] = -self.alpha
        for i in range(1, n):
            a[i, i - 1] = 1.0
            a[i, i] = -1.0
        b[0, :] = 1.0
        return GeneralCoupling(a, b)


Coupling = GeneralCoupling | STForm | ScaleInvariantCoupling | DeltaCoupling


def to_general(coupling: Coupling) -> GeneralCoupling:
    """Convert any coupling description to its general (a, b) pair."""
    return coupling.to_general()


@dataclass(frozen=True)
class ValidationReport:
    rank: int
    hermitian_defect: float
    ok: bool = field(default=False)


def validate(coupling: Coupling) -> ValidationReport:
    """Check the self-adjointness requirements of a vertex coupling.

    Returns the rank of (a|b), the hermiticity defect of a b†, and whether
    both admissibility requirements hold.
    """
    bc = to_general(coupling)
    rank = rank_augmented(bc.a, bc.b)
    prod = bc.a @ bc.b.conj().T
    scale = max(1.0, float(np.abs(prod).max(initial=0.0)))
    defect = hermitian_defect(prod)
    ok = rank == bc.n and defect <= COUPLING_TOL * scale
    return ValidationReport(rank=rank, hermitian_defect=defect, ok=ok)


def energy_one_form(coupling: Coupling) -> np.ndarray:
    """Unitary matrix of the coupling: its scattering matrix at unit wavenumber.

    Any admissible vertex condition can be rewritten as
    (U - I) psi(0) + i (U + I) psi'(0) = 0 with U unitary; that U is the
    zero-potential scattering matrix evaluated at unit energy (natural units).
    """
    bc = to_general(coupling)
    m_plus = bc.a + 1j * bc.b
    m_minus = bc.a - 1j * bc.b
    u = -solve_linear(m_plus, m_minus)
    defect = unitarity_defect(u)
    if defect > 1e-10:
        raise ValueError(f"coupling is not admissible: unitary form defect {defect:.2e}")
    return u
