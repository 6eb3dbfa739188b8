"""Standing-wave lattice configuration and plane-wave states.

States are labelled by contravariant four-wave-vectors stored in energy
units: ``E`` is the time component times hbar*c, ``cp_*`` the spatial ones.
The metric signature is (+, -, -, -).
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass
from typing import NamedTuple

from .constants import constants, intensity_si, species as lookup_species


class Convention(str, enum.Enum):
    """How the beam wavenumber follows from its wavelength."""

    RECIPROCAL = "reciprocal"  # k = 1/lambda
    ANGULAR = "angular"  # k = 2*pi/lambda


class FormulaMode(str, enum.Enum):
    """Which closed form the forbidden-band report is built from."""

    LITERAL = "literal"
    CHAINED = "chained"


_CONVENTION_ALIASES = {
    "reciprocal": Convention.RECIPROCAL,
    "paper": Convention.RECIPROCAL,
    "paper_reciprocal": Convention.RECIPROCAL,
    "angular": Convention.ANGULAR,
    "standard": Convention.ANGULAR,
    "standard_angular": Convention.ANGULAR,
}

_FORMULA_ALIASES = {
    "literal": FormulaMode.LITERAL,
    "literal_eq26": FormulaMode.LITERAL,
    "chained": FormulaMode.CHAINED,
}


def parse_convention(value: str | Convention) -> Convention:
    if isinstance(value, Convention):
        return value
    try:
        return _CONVENTION_ALIASES[value]
    except KeyError:
        raise ValueError(f"unknown wavenumber convention {value!r}") from None


def parse_formula_mode(value: str | FormulaMode) -> FormulaMode:
    if isinstance(value, FormulaMode):
        return value
    try:
        return _FORMULA_ALIASES[value]
    except KeyError:
        raise ValueError(f"unknown formula mode {value!r}") from None


@dataclass(frozen=True)
class LatticeConfig:
    wavelength_nm: float
    intensity_W_cm2: float
    convention: Convention
    formula_mode: FormulaMode
    species: str
    k_gamma: float  # 1/nm
    omega_gamma: float  # 1/s
    hbar_c_k_gamma: float  # eV
    amplitude_A: float  # V s / m
    beta: float  # eV
    particle_rest_energy: float  # eV
    particle_charge: float  # C

    @property
    def quadratic_scale(self) -> float:
        """q^2 A^2 / (8 M) in eV, the uniform part of the A^2 potential."""
        return 4.0 * self.beta

    @property
    def amplitude_volts(self) -> float:
        """(q/e) * A * c, the amplitude expressed in volts with the charge sign."""
        c = constants()
        return self.particle_charge / c.elementary_charge * self.amplitude_A * c.speed_of_light

    def to_dict(self) -> dict:
        return {
            "wavelength_nm": self.wavelength_nm,
            "intensity_W_cm2": self.intensity_W_cm2,
            "convention": self.convention.value,
            "formula_mode": self.formula_mode.value,
            "species": self.species,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LatticeConfig":
        return make_config(
            data["wavelength_nm"],
            data["intensity_W_cm2"],
            data.get("convention", Convention.RECIPROCAL),
            data.get("formula_mode", FormulaMode.LITERAL),
            data.get("species", "electron"),
        )

    def with_intensity(self, intensity_W_cm2: float) -> "LatticeConfig":
        return make_config(
            self.wavelength_nm, intensity_W_cm2, self.convention, self.formula_mode, self.species
        )


def make_config(
    wavelength_nm: float,
    intensity_W_cm2: float,
    convention: str | Convention = Convention.RECIPROCAL,
    formula_mode: str | FormulaMode = FormulaMode.LITERAL,
    species: str = "electron",
) -> LatticeConfig:
    """Build a lattice configuration and all derived beam quantities.

    The vector-potential amplitude follows from the intensity as
    ``A = sqrt(2 I) / (sqrt(c eps0) * omega)`` with ``omega = c * k``, and
    ``beta = q^2 A^2 / (32 M)``.
    """
    if not (wavelength_nm > 0 and math.isfinite(wavelength_nm)):
        raise ValueError(f"wavelength must be positive, got {wavelength_nm}")
    if not (intensity_W_cm2 >= 0 and math.isfinite(intensity_W_cm2)):
        raise ValueError(f"intensity must be non-negative, got {intensity_W_cm2}")
    convention = parse_convention(convention)
    formula_mode = parse_formula_mode(formula_mode)
    particle = lookup_species(species)
    c = constants()

    k_gamma = 1.0 / wavelength_nm
    if convention is Convention.ANGULAR:
        k_gamma *= 2.0 * math.pi
    omega = c.speed_of_light * k_gamma * 1e9
    amplitude = math.sqrt(2.0 * intensity_si(intensity_W_cm2)) / (
        math.sqrt(c.speed_of_light * c.vacuum_permittivity) * omega
    )
    volts = particle.charge / c.elementary_charge * amplitude * c.speed_of_light
    beta = volts**2 / (32.0 * particle.rest_energy)

    return LatticeConfig(
        wavelength_nm=float(wavelength_nm),
        intensity_W_cm2=float(intensity_W_cm2),
        convention=convention,
        formula_mode=formula_mode,
        species=particle.name,
        k_gamma=k_gamma,
        omega_gamma=omega,
        hbar_c_k_gamma=c.hbar_c * k_gamma,
        amplitude_A=amplitude,
        beta=beta,
        particle_rest_energy=particle.rest_energy,
        particle_charge=particle.charge,
    )


class LatticeTransfer(NamedTuple):
    """Reciprocal-lattice transfer in units of hbar*c*k_gamma per axis."""

    n_E: int
    n_p: int

    def __neg__(self) -> "LatticeTransfer":
        return LatticeTransfer(-self.n_E, -self.n_p)

    def __add__(self, other) -> "LatticeTransfer":  # type: ignore[override]
        return LatticeTransfer(self.n_E + other[0], self.n_p + other[1])

    def __sub__(self, other) -> "LatticeTransfer":
        return LatticeTransfer(self.n_E - other[0], self.n_p - other[1])


@dataclass(frozen=True)
class WaveVector4:
    E: float
    cp_x: float = 0.0
    cp_y: float = 0.0
    cp_z: float = 0.0

    def shifted(self, t: tuple[int, int], config: LatticeConfig) -> "WaveVector4":
        """State reached by adding the physical transfer of ``t``."""
        q = config.hbar_c_k_gamma
        return WaveVector4(self.E + t[0] * q, self.cp_x, self.cp_y, self.cp_z + t[1] * q)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.E, self.cp_x, self.cp_y, self.cp_z)

    def to_dict(self) -> dict:
        return asdict(self)


def stueckelberg_diagonal(k: WaveVector4, config: LatticeConfig) -> float:
    """Unperturbed eigenvalue ``(E^2 - |cp|^2) / (2 M c^2)`` in eV.

    Negative for spacelike labels.
    """
    norm = k.E * k.E - k.cp_x * k.cp_x - k.cp_y * k.cp_y - k.cp_z * k.cp_z
    return norm / (2.0 * config.particle_rest_energy)


def diagonal_difference(k: WaveVector4, t: tuple[int, int], config: LatticeConfig) -> float:
    """``s(k + K(t)) - s(k)`` without cancelling two large numbers."""
    dE = t[0] * config.hbar_c_k_gamma
    dp = t[1] * config.hbar_c_k_gamma
    return (2.0 * k.E * dE + dE * dE - 2.0 * k.cp_z * dp - dp * dp) / (
        2.0 * config.particle_rest_energy
    )


def mass_squared_c4(k: WaveVector4, include_transverse: bool = False) -> float:
    """``E^2 - cp_z^2``; the transverse components count only on request."""
    m2 = k.E * k.E - k.cp_z * k.cp_z
    if include_transverse:
        m2 -= k.cp_x * k.cp_x + k.cp_y * k.cp_y
    return m2
