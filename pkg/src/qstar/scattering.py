"""On-shell scattering matrices of a star graph with constant line potentials.

Natural units with hbar^2/2m = 1 are used throughout, so the wavenumber on
line j is k_j = sqrt(E - V_j) on the principal branch (positive imaginary
for closed channels). Two routes are provided: the general formula for any
admissible coupling, and the closed form for scale-invariant couplings,
which stays regular at channel thresholds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ClosedInputChannel, DegenerateParameters, ThresholdEnergy
from .numerics import solve_linear
from .vertex import Coupling, DeltaCoupling, ScaleInvariantCoupling, to_general

#: Energies closer than this to a channel threshold are rejected where the
#: general formula degenerates (the wavenumber matrix becomes singular).
THRESHOLD_TOL = 1e-12


@dataclass(frozen=True)
class LineEnvironment:
    """Constant potentials on the n lines of the star graph."""

    potentials: tuple

    def __post_init__(self):
        pots = tuple(float(v) for v in self.potentials)
        if not all(np.isfinite(v) for v in pots):
            raise ValueError("potentials must be finite")
        object.__setattr__(self, "potentials", pots)

    @classmethod
    def coerce(cls, env) -> "LineEnvironment":
        if isinstance(env, cls):
            return env
        return cls(tuple(env))

    @property
    def n(self) -> int:
        return len(self.potentials)

    def channels(self, energy: float) -> "ChannelData":
        v = np.asarray(self.potentials)
        k = np.sqrt((energy - v).astype(complex))
        return ChannelData(energy=float(energy), wavenumbers=k, open_mask=energy > v)


@dataclass(frozen=True)
class ChannelData:
    """Per-line wavenumbers and open/closed bookkeeping at one energy."""

    energy: float
    wavenumbers: np.ndarray
    open_mask: np.ndarray


@dataclass(frozen=True)
class ScatteringMatrix:
    """Complex n x n scattering matrix at one energy.

    Entries on closed channels are the analytic continuation used for
    diagnostics; asymptotic flux into a closed channel is zero.
    """

    matrix: np.ndarray
    channels: ChannelData

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def open_submatrix(self) -> np.ndarray:
        mask = self.channels.open_mask
        return self.matrix[np.ix_(mask, mask)]


def _check_thresholds(env: LineEnvironment, energy: float):
    for j, v in enumerate(env.potentials):
        if abs(energy - v) < THRESHOLD_TOL:
            raise ThresholdEnergy(f"E={energy!r} sits on the threshold of line {j}")


def smatrix_general(coupling: Coupling, env, energy: float) -> ScatteringMatrix:
    """Scattering matrix from the general vertex conditions.

    Evaluates S = -(A D^-1 + i B D)^-1 (A D^-1 - i B D) with
    D = diag(sqrt(k_j)). Threshold energies are rejected because D is
    singular there; sample E = V_j +- 1e-9 instead.
    """
    env = LineEnvironment.coerce(env)
    bc = to_general(coupling)
    if bc.n != env.n:
        raise ValueError(f"coupling degree {bc.n} != number of lines {env.n}")
    _check_thresholds(env, energy)
    ch = env.channels(energy)
    sqrt_k = np.sqrt(ch.wavenumbers)
    ad_inv = bc.a / sqrt_k[np.newaxis, :]
    bd = bc.b * sqrt_k[np.newaxis, :]
    s = -solve_linear(ad_inv + 1j * bd, ad_inv - 1j * bd)
    return ScatteringMatrix(matrix=s, channels=ch)


def smatrix_scale_invariant(coupling: ScaleInvariantCoupling, env, energy: float) -> ScatteringMatrix:
    """Closed-form scattering matrix for a scale-invariant coupling.

    Uses principal fourth roots of 1 - V_j/E, so closed channels come out
    on the correct analytic branch. Unlike the general route this form
    stays finite at channel thresholds (a fourth root just vanishes), and
    threshold energies are deliberately allowed: peak values of the filter
    designs are pinned exactly at those energies. Only E <= 0 is rejected.
    """
    env = LineEnvironment.coerce(env)
    if coupling.n != env.n:
        raise ValueError(f"coupling degree {coupling.n} != number of lines {env.n}")
    if energy <= 0.0:
        raise ThresholdEnergy(f"energy must be positive, got {energy!r}")
    r, n = coupling.r, coupling.n
    t = coupling.t
    v = np.asarray(env.potentials)
    q = np.power((1.0 - v / energy).astype(complex), 0.25)
    q1, q2 = q[:r], q[r:]

    core = np.diag(q1 * q1) + (t * (q2 * q2)[np.newaxis, :]) @ t.conj().T
    right = np.hstack([np.diag(q1), t * q2[np.newaxis, :]])
    left = np.vstack([np.diag(q1), q2[:, np.newaxis] * t.conj().T])
    s = -np.eye(n, dtype=complex) + 2.0 * (left @ solve_linear(core, right))
    return ScatteringMatrix(matrix=s, channels=env.channels(energy))


def smatrix(coupling: Coupling, env, energy: float) -> ScatteringMatrix:
    """Scattering matrix by the most robust route available for the coupling."""
    if isinstance(coupling, ScaleInvariantCoupling):
        return smatrix_scale_invariant(coupling, env, energy)
    return smatrix_general(coupling, env, energy)


def transmission_probability(sm: ScatteringMatrix, source: int, target: int) -> float:
    """Probability of transmission (or reflection if source == target).

    The source line must be open. A closed target carries no asymptotic
    flux, so its probability is reported as zero even though the raw
    matrix entry is retained for diagnostics.
    """
    if not sm.channels.open_mask[source]:
        raise ClosedInputChannel(f"line {source} is closed at E={sm.channels.energy!r}")
    if not sm.channels.open_mask[target]:
        return 0.0
    return float(abs(sm.matrix[target, source]) ** 2)


def pole_energy(family: str, *, a: float, control: float, b: float | None = None) -> float:
    """Resonance pole position on the unphysical sheet for a design family.

    Families: "bandpass3" (needs the second coupling parameter ``b``),
    "dualband4", and "multiband2r"; ``control`` is the potential pinning
    the peak. Raises DegenerateParameters when the denominator is not
    positive.
    """
    if family == "bandpass3":
        if b is None:
            raise ValueError("bandpass3 pole needs parameter b")
        den = b**4 - (1.0 + a * a) ** 2
        num = b**4
    elif family == "dualband4":
        den = 4.0 * a**4 - 1.0
        num = 4.0 * a**4
    elif family == "multiband2r":
        den = a**4 - 1.0
        num = a**4
    else:
        raise ValueError(f"unknown design family {family!r}")
    if den <= 0.0:
        raise DegenerateParameters(f"pole formula degenerate for family {family!r}")
    return num / den * control


def open_channel_unitarity_defect(sm: ScatteringMatrix) -> float:
    """Max-norm deviation of the open-channel block from unitarity."""
    sub = sm.open_submatrix()
    if sub.size == 0:
        return 0.0
    g = sub.conj().T @ sub - np.eye(sub.shape[0])
    return float(np.abs(g).max())
