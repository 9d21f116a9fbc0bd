"""Physical constants, experiment configuration and validation.

All quantities are SI.  A configuration describes two microspheres dropped
through adjacent Stern-Gerlach interferometers: masses, trap separation,
superposition split, hold/split times, magnetic field gradient, sphere
properties and the vacuum/thermal environment.
"""

from __future__ import annotations

import dataclasses
import json
import math
import warnings
from dataclasses import dataclass


class ConfigError(ValueError):
    """Raised when a configuration violates an invariant; lists every violation."""


class RegimeError(ValueError):
    """Raised when an approximation is evaluated outside its validity regime."""


class ConfigConsistencyWarning(UserWarning):
    """Non-fatal inconsistency between redundant configuration parameters."""


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA-2018 recommended values (SI), fixed to 9+ significant digits."""

    G: float = 6.67430e-11          # gravitational constant, m^3 kg^-1 s^-2
    hbar: float = 1.054571817e-34   # reduced Planck constant, J s
    c: float = 299792458.0          # speed of light, m s^-1 (exact)
    kB: float = 1.380649e-23        # Boltzmann constant, J K^-1 (exact)
    muB: float = 9.2740100783e-24   # Bohr magneton, J T^-1
    gE: float = 2.00231930436256    # electron g-factor magnitude
    eps0: float = 8.8541878128e-12  # vacuum permittivity, F m^-1
    mu0: float = 1.25663706212e-6   # vacuum permeability, H m^-1

    def __post_init__(self):
        for f in dataclasses.fields(self):
            v = getattr(self, f.name)
            if not (math.isfinite(v) and v > 0):
                raise ConfigError(f"constant {f.name} must be finite and positive, got {v!r}")


CONSTANTS = PhysicalConstants()

# helium-4 atomic mass: 4.002602 u (CODATA-2018 atomic mass constant)
M_HELIUM4 = 4.002602 * 1.66053906660e-27


@dataclass(frozen=True)
class ExperimentConfig:
    """Full experimental parameter set, SI units throughout.

    ``dx`` may be None, in which case `validate` derives it from the
    split kinematics (dBdx, tauAcc, m1).
    """

    m1: float               # test mass 1, kg
    m2: float               # test mass 2, kg
    d: float                # separation between interferometer centres, m
    dx: float | None        # superposition split of each mass, m
    tau: float              # hold time, s
    tauAcc: float           # split/recombine stage duration, s
    dBdx: float             # magnetic field gradient along the split axis, T/m
    radius: float           # microsphere radius, m
    epsRel: float           # relative dielectric constant
    pressure: float         # residual gas pressure, Pa
    tEnv: float             # environment temperature, K
    tInt: float             # internal temperature, K
    chiM: float             # magnetic susceptibility
    mGas: float             # residual gas particle mass, kg


FIELD_NAMES = tuple(f.name for f in dataclasses.fields(ExperimentConfig))


def paper_defaults() -> ExperimentConfig:
    """Reference scenario: 1e-14 kg spheres, 450 um trap separation,
    250 um split, 2.5 s hold, 0.5 s split stages, 1e6 T/m gradient."""
    return ExperimentConfig(
        m1=1e-14,
        m2=1e-14,
        d=450e-6,
        dx=250e-6,
        tau=2.5,
        tauAcc=0.5,
        dBdx=1e6,
        radius=1e-6,
        epsRel=5.7,
        pressure=1e-15,
        tEnv=0.15,
        tInt=0.15,
        chiM=1e-5,
        mGas=M_HELIUM4,
    )


def _positive(name, value, problems):
    if not (isinstance(value, (int, float)) and math.isfinite(value)):
        problems.append(f"{name} must be a finite number, got {value!r}")
    elif value <= 0:
        problems.append(f"{name} must be > 0, got {value!r}")


def validate(config: ExperimentConfig) -> ExperimentConfig:
    """Check every invariant and return the validated configuration.

    A missing ``dx`` is filled in from the split kinematics.  If ``dx`` is
    given explicitly but disagrees with the kinematic value by more than 1%,
    a ConfigConsistencyWarning is emitted and the explicit value wins.

    Raises ConfigError naming every violated invariant.  Idempotent:
    ``validate(validate(c)) == validate(c)``.
    """
    problems: list[str] = []
    for name in ("m1", "m2", "d", "tau", "tauAcc", "dBdx", "radius",
                 "pressure", "tEnv", "mGas"):
        _positive(name, getattr(config, name), problems)

    for name in ("tInt", "chiM", "epsRel"):
        v = getattr(config, name)
        if not (isinstance(v, (int, float)) and math.isfinite(v)):
            problems.append(f"{name} must be a finite number, got {v!r}")
    if isinstance(config.epsRel, (int, float)) and math.isfinite(config.epsRel):
        if config.epsRel <= 1:
            problems.append(f"epsRel must be > 1, got {config.epsRel!r}")
    if isinstance(config.tInt, (int, float)) and math.isfinite(config.tInt):
        if config.tInt < 0:
            problems.append(f"tInt must be >= 0, got {config.tInt!r}")

    if problems:
        raise ConfigError("; ".join(problems))

    from .gravphase import superposition_size

    dx_kinematic = superposition_size(config.dBdx, config.tauAcc, config.m1)
    dx = config.dx
    if dx is None:
        if config.m1 != config.m2:
            warnings.warn(
                "dx derived from m1 only; the two masses differ so their "
                "kinematic splits would too",
                ConfigConsistencyWarning,
                stacklevel=2,
            )
        dx = dx_kinematic
    else:
        if not (isinstance(dx, (int, float)) and math.isfinite(dx)):
            raise ConfigError(f"dx must be a finite number or None, got {dx!r}")
        if abs(dx - dx_kinematic) > 0.01 * dx_kinematic:
            warnings.warn(
                f"explicit dx={dx:g} m differs from the kinematic value "
                f"{dx_kinematic:g} m by more than 1%; keeping the explicit dx",
                ConfigConsistencyWarning,
                stacklevel=2,
            )

    if not dx > 0:
        problems.append(f"dx must be > 0, got {dx!r}")
    elif not dx < config.d:
        problems.append(f"dx < d violated: dx={dx!r}, d={config.d!r}")
    elif not config.d - dx > 2 * config.radius:
        problems.append(
            f"d - dx > 2*radius violated: closest approach {config.d - dx!r} m "
            f"with radius {config.radius!r} m"
        )
    if problems:
        raise ConfigError("; ".join(problems))

    return dataclasses.replace(config, dx=dx)


def config_to_dict(config: ExperimentConfig) -> dict:
    """Flat key-value mapping with keys exactly matching the field names."""
    return dataclasses.asdict(config)


def config_from_dict(data: dict, base: ExperimentConfig | None = None) -> ExperimentConfig:
    """Build a configuration from a flat mapping.

    Unknown keys are rejected.  Missing keys fall back to ``base``
    (paper defaults when not given); ``dx`` may be null to request the
    kinematic derivation.  The result is validated.
    """
    unknown = sorted(set(data) - set(FIELD_NAMES))
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    for key, value in data.items():
        if key == "dx" and value is None:
            continue
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"config key {key} must be a number, got {value!r}")
    base = paper_defaults() if base is None else base
    return validate(dataclasses.replace(base, **data))


def load_config(path) -> ExperimentConfig:
    """Read a validated configuration from a flat JSON document."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ConfigError("config JSON must be a flat object of key/value pairs")
    return config_from_dict(data)


def config_to_json(config: ExperimentConfig) -> str:
    """Deterministic JSON serialization (field order fixed)."""
    return json.dumps(config_to_dict(config), indent=2)
