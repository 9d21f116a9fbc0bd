"""Mode-discretized model of the gravitational field during the hold stage.

Each branch displaces every field mode into a coherent state; the branch
phase comes from the cross term of the squared matter-field coupling.  After
analytic angular reduction (int dOmega e^{i k.dr} = 4 pi sinc(k dr)) the
phase collapses to a 1D radial quadrature,

    phase(r, t) = (G m1 m2 t / hbar) (2/pi) int dk sinc(k r) e^{-k/kCut},

which converges to the Newtonian value G m1 m2 t/(hbar r) as kCut*r -> inf
(damped closed form: int_0^inf sinc(k r) e^{-k/kCut} dk = arctan(kCut r)/r).
A single effective polarization channel is used; with the mode measure tied
to the grid weights (g^2 ~ 1/V cancels against mode counting) the continuum
normalization constant is exactly 1.

The per-mode coherent amplitudes carry the shell-aggregated coupling with
plane-wave factors evaluated along the split axis; they feed the branch
overlap (which-path) estimate, which is astronomically close to 1 here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import CONSTANTS, ExperimentConfig
from .gravphase import BRANCHES, branch_positions
from .spinstate import TwoQubitState


@dataclass(frozen=True)
class FieldModeSet:
    """Radial wavenumber grid with trapezoidal quadrature weights."""

    kGrid: np.ndarray        # strictly increasing, positive, 1/m
    weights: np.ndarray      # trapezoidal dk weights, 1/m
    kCut: float              # exponential UV damping scale, 1/m
    couplingScale: float = 1.0  # continuum normalization (1 by calibration)

    def __post_init__(self):
        k = np.asarray(self.kGrid, dtype=float)
        w = np.asarray(self.weights, dtype=float)
        if k.ndim != 1 or k.size < 2 or w.shape != k.shape:
            raise ValueError("kGrid and weights must be matching 1-D arrays, >= 2 points")
        if not (np.all(k > 0) and np.all(np.diff(k) > 0)):
            raise ValueError("kGrid must be strictly increasing and positive")
        if not np.all(w > 0):
            raise ValueError("weights must be positive")
        if not (np.isfinite(self.kCut) and self.kCut > 0):
            raise ValueError(f"kCut must be positive, got {self.kCut!r}")
        k.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "kGrid", k)
        object.__setattr__(self, "weights", w)

    @property
    def nModes(self) -> int:
        return self.kGrid.size


@dataclass(frozen=True)
class BranchDisplacements:
    """Coherent-state amplitude per mode for one branch, plus its phase."""

    modes: FieldModeSet
    alpha: np.ndarray        # complex amplitude per mode (vacuum initial field)
    branchPhase: float       # secular phase, rad

    def __post_init__(self):
        a = np.asarray(self.alpha, dtype=complex)
        if a.shape != self.modes.kGrid.shape:
            raise ValueError("alpha must have one entry per mode")
        if not np.all(np.isfinite(a.view(float))):
            raise ValueError("alpha contains non-finite entries")
        a.setflags(write=False)
        object.__setattr__(self, "alpha", a)


def build_modes(kMin: float, kMax: float, nModes: int, kCut: float) -> FieldModeSet:
    """Logarithmically spaced radial grid with trapezoidal weights."""
    if not (0 < kMin < kMax):
        raise ValueError(f"need 0 < kMin < kMax, got kMin={kMin!r}, kMax={kMax!r}")
    if nModes < 2:
        raise ValueError(f"nModes must be >= 2, got {nModes}")
    k = np.geomspace(kMin, kMax, nModes)
    w = np.empty_like(k)
    w[1:-1] = (k[2:] - k[:-2]) / 2
    w[0] = (k[1] - k[0]) / 2
    w[-1] = (k[-1] - k[-2]) / 2
    return FieldModeSet(kGrid=k, weights=w, kCut=kCut)


def modes_for_separation(separation: float, nModes: int = 4000,
                         kCutTimesR: float = 2e3) -> FieldModeSet:
    """Grid tuned for separations near ``separation``: kCut = kCutTimesR/r,
    covering k r from 1e-4 (below which the integrand is flat) to 60 (past
    which the damped oscillatory tail contributes < 0.5%)."""
    if separation <= 0:
        raise ValueError(f"separation must be positive, got {separation!r}")
    return build_modes(1e-4 / separation, 60.0 / separation, nModes,
                       kCutTimesR / separation)


def branch_phase(modes: FieldModeSet, config: ExperimentConfig,
                 separation: float, t: float) -> float:
    """Secular phase of one branch from the mode sum (cross term only;
    the position-independent self terms are a global phase)."""
    if separation <= 0:
        raise ValueError(f"separation must be positive, got {separation!r}")
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t!r}")
    k, w = modes.kGrid, modes.weights
    integrand = np.sinc(k * separation / np.pi) * np.exp(-k / modes.kCut)
    quad = float(np.sum(w * integrand))
    pref = CONSTANTS.G * config.m1 * config.m2 * t / CONSTANTS.hbar
    return pref * modes.couplingScale * (2.0 / np.pi) * quad


def newtonian_phase(config: ExperimentConfig, separation: float, t: float) -> float:
    """Continuum target G m1 m2 t / (hbar r)."""
    return CONSTANTS.G * config.m1 * config.m2 * t / (CONSTANTS.hbar * separation)


def _effective_couplings(modes: FieldModeSet, mass: float) -> np.ndarray:
    # Shell-aggregated coupling: gbar^2 = g^2 V (4 pi k^2 w)/(2 pi)^3 with
    # g = m c^2 sqrt(2 pi G/(hbar c^3 k V)); the volume cancels.  Half of the
    # UV damping goes on each coupling so products carry e^{-k/kCut}.
    k, w = modes.kGrid, modes.weights
    return mass * np.sqrt(
        modes.couplingScale * CONSTANTS.G * CONSTANTS.c * k * w / (np.pi * CONSTANTS.hbar)
    ) * np.exp(-k / (2.0 * modes.kCut))


def displacements(modes: FieldModeSet, config: ExperimentConfig,
                  positions: tuple[float, float], t: float) -> BranchDisplacements:
    """Per-mode coherent amplitudes for one branch at time t (vacuum initial
    field): alpha_k = (g1/w_k e^{i k x1} + g2/w_k e^{i k x2})(e^{i w_k t} - 1)."""
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t!r}")
    x1, x2 = positions
    k = modes.kGrid
    omega = CONSTANTS.c * k
    g1 = _effective_couplings(modes, config.m1)
    g2 = _effective_couplings(modes, config.m2)
    alpha = (g1 / omega * np.exp(1j * k * x1) + g2 / omega * np.exp(1j * k * x2)) \
        * (np.exp(1j * omega * t) - 1.0)
    return BranchDisplacements(
        modes=modes,
        alpha=alpha,
        branchPhase=branch_phase(modes, config, abs(x2 - x1), t),
    )


def branch_displacement_set(modes: FieldModeSet, config: ExperimentConfig,
                            t: float) -> dict[str, BranchDisplacements]:
    """Displacements for all four branches at a common time."""
    return {
        b: displacements(modes, config, pos, t)
        for b, pos in branch_positions(config).items()
    }


def branch_overlap(dA: BranchDisplacements, dB: BranchDisplacements) -> complex:
    """Product over modes of the coherent-state overlaps <alpha_A | alpha_B>.

    |<a|b>| = exp(-|a-b|^2/2); the phase is sum Im(conj(a) b).  Magnitude is
    in (0, 1], and 1 exactly for identical branches.
    """
    if dA.modes.kGrid.shape != dB.modes.kGrid.shape or \
            not np.array_equal(dA.modes.kGrid, dB.modes.kGrid):
        raise ValueError("branch displacements built on mismatched mode grids")
    diff2 = float(np.sum(np.abs(dA.alpha - dB.alpha) ** 2))
    # Im(conj(a) b) written so identical branches give exactly zero phase
    phase = float(np.sum(dA.alpha.real * dB.alpha.imag
                         - dA.alpha.imag * dB.alpha.real))
    return complex(np.exp(-0.5 * diff2) * np.exp(1j * phase))


def reduced_mass_state(branches: dict[str, BranchDisplacements]) -> TwoQubitState:
    """Orbital-qubit density matrix after tracing out the field:
    rho_{b b'} = (1/4) e^{i(phi_b - phi_b')} <chi_b' | chi_b>.

    This is 1/4 times a Gram matrix of unit vectors, hence a valid state.
    In the limit of unit overlaps it equals the pure entangled state built
    from the same phase differentials.
    """
    missing = [b for b in BRANCHES if b not in branches]
    if missing:
        raise ValueError(f"missing branches: {missing}")
    rho = np.empty((4, 4), dtype=complex)
    for i, bi in enumerate(BRANCHES):
        for j, bj in enumerate(BRANCHES):
            ov = 1.0 + 0j if i == j else branch_overlap(branches[bj], branches[bi])
            rho[i, j] = 0.25 * np.exp(1j * (branches[bi].branchPhase
                                            - branches[bj].branchPhase)) * ov
    return TwoQubitState(rho)


def dephase_branch_basis(state: TwoQubitState) -> TwoQubitState:
    """Zero every inter-branch coherence (idempotent)."""
    return TwoQubitState(np.diag(np.diag(state.rho)))


def classicalize(branches: dict[str, BranchDisplacements]) -> TwoQubitState:
    """State of the masses if the field is forced classical: all off-diagonal
    terms in the coherent-state basis destroyed, which kills every
    inter-branch coherence of the matter state.  Negativity is exactly 0."""
    return dephase_branch_basis(reduced_mass_state(branches))
