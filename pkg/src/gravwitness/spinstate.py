"""Two-spin state after the interferometers, witness and entanglement measures.

Basis ordering is {uu, ud, du, dd} with sigma_z |u> = +|u>.  The recombined
state for branch differentials (a, b) has amplitudes (1, e^{ia}, e^{ib}, 1)/2;
its entanglement depends only on a + b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_I2 = np.eye(2, dtype=complex)
_SX = np.array([[0, 1], [1, 0]], dtype=complex)
_SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SZ = np.array([[1, 0], [0, -1]], dtype=complex)

PAULIS = {"I": _I2, "X": _SX, "Y": _SY, "Z": _SZ}

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
EIGENVALUE_TOL = 1e-10


@dataclass(frozen=True)
class TwoQubitState:
    """4x4 density matrix in the {uu, ud, du, dd} basis.

    Construction enforces hermiticity (1e-12), unit trace (1e-12) and
    positivity (eigenvalues >= -1e-10).
    """

    rho: np.ndarray

    def __post_init__(self):
        rho = np.array(self.rho, dtype=complex)
        if rho.shape != (4, 4):
            raise ValueError(f"rho must be 4x4, got shape {rho.shape}")
        if not np.all(np.isfinite(rho.view(float))):
            raise ValueError("rho contains non-finite entries")
        herm = np.max(np.abs(rho - rho.conj().T))
        if herm > HERMITICITY_TOL:
            raise ValueError(f"rho not Hermitian: max |rho - rho^dag| = {herm:g}")
        tr = rho.trace()
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"trace(rho) = {tr} differs from 1")
        lo = np.linalg.eigvalsh(rho).min()
        if lo < -EIGENVALUE_TOL:
            raise ValueError(f"rho not positive semidefinite: min eigenvalue {lo:g}")
        rho.setflags(write=False)
        object.__setattr__(self, "rho", rho)

    def purity(self) -> float:
        return float(np.real(np.trace(self.rho @ self.rho)))


@dataclass(frozen=True)
class WitnessSettings:
    """Local z-rotation angles applied to each qubit before measuring."""

    thetaZ1: float = 0.0
    thetaZ2: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.thetaZ1) and math.isfinite(self.thetaZ2)):
            raise ValueError("witness angles must be finite")


@dataclass(frozen=True)
class WitnessResult:
    w: float                      # |<sx sz> - <sy sz>| after the local rotations
    expXZ: float
    expYZ: float
    negativity: float             # of the unrotated state
    entangledByNegativity: bool


def entangled_state(dPhiLR: float, dPhiRL: float) -> TwoQubitState:
    """Pure state with amplitudes (1, e^{i dPhiLR}, e^{i dPhiRL}, 1)/2."""
    if not (math.isfinite(dPhiLR) and math.isfinite(dPhiRL)):
        raise ValueError("phases must be finite")
    v = np.array([1.0, np.exp(1j * dPhiLR), np.exp(1j * dPhiRL), 1.0]) / 2.0
    return TwoQubitState(np.outer(v, v.conj()))


def expectation(state: TwoQubitState, pauli1: str, pauli2: str) -> float:
    """Tr(rho (P1 x P2)) for P in {I, X, Y, Z}; the O(1e-16) imaginary
    residue of the trace is discarded."""
    try:
        p1 = PAULIS[pauli1.upper()]
        p2 = PAULIS[pauli2.upper()]
    except (KeyError, AttributeError):
        raise ValueError(f"invalid Pauli index pair ({pauli1!r}, {pauli2!r}); "
                         "expected I, X, Y or Z") from None
    return float(np.real(np.trace(state.rho @ np.kron(p1, p2))))


def negativity(state: TwoQubitState) -> float:
    """Sum of |negative eigenvalues| of the partial transpose over qubit 2.

    For two qubits this is an exact entanglement criterion: positive iff
    the state is entangled.
    """
    pt = state.rho.reshape(2, 2, 2, 2).swapaxes(1, 3).reshape(4, 4)
    evals = np.linalg.eigvalsh(pt)
    return float(-evals[evals < 0].sum()) + 0.0


def _rotated(state: TwoQubitState, settings: WitnessSettings) -> TwoQubitState:
    rz1 = np.diag([np.exp(-0.5j * settings.thetaZ1), np.exp(0.5j * settings.thetaZ1)])
    rz2 = np.diag([np.exp(-0.5j * settings.thetaZ2), np.exp(0.5j * settings.thetaZ2)])
    u = np.kron(rz1, rz2)
    return TwoQubitState(u @ state.rho @ u.conj().T)


def witness(state: TwoQubitState, settings: WitnessSettings | None = None) -> WitnessResult:
    """Evaluate W = |<sx x sz> - <sy x sz>| after the local z-rotations.

    W > 1 certifies entanglement; the negativity of the unrotated state is
    reported alongside as the exact criterion.
    """
    settings = WitnessSettings() if settings is None else settings
    rotated = _rotated(state, settings)
    exz = expectation(rotated, "X", "Z")
    eyz = expectation(rotated, "Y", "Z")
    neg = negativity(state)
    return WitnessResult(
        w=abs(exz - eyz),
        expXZ=exz,
        expYZ=eyz,
        negativity=neg,
        entangledByNegativity=neg > 1e-9,
    )


def _witness_on_theta_grid(cxz: float, cyz: float, theta1: np.ndarray) -> np.ndarray:
    # Conjugating sigma_x by Rz(t) gives cos(t) sx - sin(t) sy, and sigma_y
    # gives cos(t) sy + sin(t) sx, while sigma_z on qubit 2 is unchanged, so
    # W(t1, t2) = |cos(t1)(cxz - cyz) - sin(t1)(cxz + cyz)| for every t2.
    return np.abs(np.cos(theta1) * (cxz - cyz) - np.sin(theta1) * (cxz + cyz))


def optimize_witness(state: TwoQubitState) -> tuple[WitnessSettings, WitnessResult]:
    """Maximize W over the local z-rotation angles.

    Dense 721x721 grid over [-pi, pi]^2 (the theta2 axis is exactly
    degenerate, see `_witness_on_theta_grid`) followed by golden-section
    refinement of theta1 inside the best grid cell.  Deterministic; the
    returned W is >= the default-settings W.
    """
    cxz = expectation(state, "X", "Z")
    cyz = expectation(state, "Y", "Z")
    theta = np.linspace(-np.pi, np.pi, 721)
    grid = np.broadcast_to(_witness_on_theta_grid(cxz, cyz, theta)[:, None], (721, 721))
    flat = int(np.argmax(grid))
    i1, i2 = divmod(flat, 721)

    lo = theta[max(i1 - 1, 0)]
    hi = theta[min(i1 + 1, 720)]
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    x1 = b - invphi * (b - a)
    x2 = a + invphi * (b - a)
    f = lambda t: float(_witness_on_theta_grid(cxz, cyz, np.asarray(t)))
    f1, f2 = f(x1), f(x2)
    for _ in range(80):
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + invphi * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - invphi * (b - a)
            f1 = f(x1)
    best_theta1 = x1 if f1 >= f2 else x2
    candidates = [(f(theta[i1]), theta[i1]), (f(best_theta1), best_theta1)]
    w_best, theta1_best = max(candidates, key=lambda p: p[0])

    settings = WitnessSettings(thetaZ1=float(theta1_best), thetaZ2=float(theta[i2]))
    return settings, witness(state, settings)


def apply_dephasing(state: TwoQubitState, p1: float, p2: float) -> TwoQubitState:
    """Independent phase-flip channels: per qubit j, Kraus operators
    {sqrt(1-p_j) I, sqrt(p_j) sigma_z}.  Single-qubit coherences scale by
    (1 - 2 p_j); trace is preserved and negativity never increases."""
    for name, p in (("p1", p1), ("p2", p2)):
        if not (isinstance(p, (int, float)) and math.isfinite(p) and 0.0 <= p <= 1.0):
            raise ValueError(f"{name} must lie in [0, 1], got {p!r}")
    z1 = np.kron(_SZ, _I2)
    z2 = np.kron(_I2, _SZ)
    rho = (1 - p1) * state.rho + p1 * (z1 @ state.rho @ z1)
    rho = (1 - p2) * rho + p2 * (z2 @ rho @ z2)
    return TwoQubitState(rho)
