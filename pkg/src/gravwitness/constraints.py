"""Feasibility constraints: Casimir-Polder, induced magnetic coupling,
and the aggregate verdict including the decoherence budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import CONSTANTS, ExperimentConfig, RegimeError
from . import decoherence


@dataclass(frozen=True)
class ConstraintReport:
    vCP: float              # Casimir-Polder potential at closest approach, J
    vGrav: float            # gravitational potential at closest approach, J
    cpRatio: float          # vCP / vGrav
    magRatio: float         # induced-dipole interaction / vGrav
    minSeparation: float    # separation where cpRatio equals the target, m
    feasible: bool
    reasons: tuple[str, ...] = field(default_factory=tuple)


def _dielectric_factor(epsRel: float) -> float:
    return ((epsRel - 1.0) / (epsRel + 2.0)) ** 2


def casimir_polder_potential(config: ExperimentConfig, r: float) -> float:
    """|V_CP(r)| = 23 hbar c R^6 ((eps-1)/(eps+2))^2 / (4 pi r^7).

    The sphere polarizabilities alpha = 4 pi eps0 R^3 (eps-1)/(eps+2) absorb
    the (4 pi eps0)^-2 prefactor of the two-polarizability form, which is the
    unique dimensionally consistent reading.
    """
    if r <= 2 * config.radius:
        raise ValueError(
            f"spheres overlap: separation {r!r} m <= 2*radius {2 * config.radius!r} m"
        )
    return (23.0 * CONSTANTS.hbar * CONSTANTS.c * config.radius**6
            * _dielectric_factor(config.epsRel) / (4.0 * math.pi * r**7))


def gravitational_potential(config: ExperimentConfig, r: float) -> float:
    """|V_grav(r)| = G m1 m2 / r."""
    if r <= 0:
        raise ValueError(f"r must be positive, got {r!r}")
    return CONSTANTS.G * config.m1 * config.m2 / r


def cp_ratio(config: ExperimentConfig, r: float | None = None) -> float:
    """Casimir-Polder to gravitational potential ratio at closest approach
    (or at ``r`` when given)."""
    r = config.d - config.dx if r is None else r
    return casimir_polder_potential(config, r) / gravitational_potential(config, r)


def min_separation(config: ExperimentConfig, targetRatio: float) -> float:
    """Smallest allowed separation: the unique root of cpRatio(r) = target.

    cpRatio falls off as r^-6, so the root is unique; bisection on
    [2*radius, 1 m] run to floating-point convergence (well below the 1e-9 m
    tolerance).
    """
    if not targetRatio > 0:
        raise ValueError(f"targetRatio must be positive, got {targetRatio!r}")
    lo = 2.0 * config.radius * (1.0 + 1e-12)
    hi = 1.0
    f = lambda r: cp_ratio(config, r) - targetRatio
    flo, fhi = f(lo), f(hi)
    if flo < 0 or fhi > 0:
        raise ValueError(
            f"no root in [{lo:g}, {hi:g}] m: cpRatio spans "
            f"[{fhi + targetRatio:g}, {flo + targetRatio:g}]"
        )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def magnetic_interaction_ratio(config: ExperimentConfig, bResidual: float) -> float:
    """Induced-dipole coupling relative to gravity at closest approach.

    Each sphere acquires mu = chi_m (4/3) pi R^3 B / mu0 in the residual
    field; the dipole-dipole energy mu0 mu^2 / (4 pi r^3) is compared to
    G m1 m2 / r.  Scales exactly as chi_m^2.
    """
    if not (math.isfinite(bResidual) and bResidual >= 0):
        raise ValueError(f"bResidual must be >= 0, got {bResidual!r}")
    r = config.d - config.dx
    mu_ind = config.chiM * (4.0 / 3.0) * math.pi * config.radius**3 * bResidual / CONSTANTS.mu0
    u_mag = CONSTANTS.mu0 * mu_ind**2 / (4.0 * math.pi * r**3)
    return u_mag / gravitational_potential(config, r)


def feasibility_report(config: ExperimentConfig, targetRatio: float = 0.1,
                       bResidual: float = 0.0,
                       tauCollFactor: float = 1.0) -> ConstraintReport:
    """Aggregate feasibility: Casimir-Polder and magnetic backgrounds below
    ``targetRatio`` of gravity, and collisional coherence lasting at least
    ``tauCollFactor`` times the full drop tau + 2 tauAcc."""
    r = config.d - config.dx
    vcp = casimir_polder_potential(config, r)
    vg = gravitational_potential(config, r)
    ratio = vcp / vg
    mag = magnetic_interaction_ratio(config, bResidual)
    try:
        min_sep = min_separation(config, targetRatio)
    except ValueError:
        # no bracket: the ratio is on one side of the target everywhere in
        # [contact, 1 m]
        if cp_ratio(config, 2.0 * config.radius * (1.0 + 1e-12)) < targetRatio:
            min_sep = 2.0 * config.radius
        else:
            min_sep = math.inf
    reasons = []
    if ratio > targetRatio:
        reasons.append(f"cpRatio {ratio:.3g} > {targetRatio:g}")
    if mag > targetRatio:
        reasons.append(f"magRatio {mag:.3g} > {targetRatio:g}")
    t_exp = config.tau + 2.0 * config.tauAcc
    try:
        tau_coll = decoherence.collisional_time(config)
        if tau_coll < tauCollFactor * t_exp:
            reasons.append(
                f"tauColl {tau_coll:.3g} s < {tauCollFactor:g} x experiment "
                f"duration {t_exp:.3g} s"
            )
    except RegimeError as err:
        reasons.append(f"decoherence regime: {err}")
    return ConstraintReport(
        vCP=vcp,
        vGrav=vg,
        cpRatio=ratio,
        magRatio=mag,
        minSeparation=min_sep,
        feasible=not reasons,
        reasons=tuple(reasons),
    )
