"""Physical constants (CODATA 2018) and unit conversions.

Spectral quantities are carried in eV throughout the package: energies,
masses as mc^2, momenta as c*p. SI only shows up where the beam intensity
is turned into a vector-potential amplitude.
"""

from __future__ import annotations

from dataclasses import dataclass

# CODATA 2018, frozen on purpose; scipy.constants moves with each release.
_HBAR_SI = 1.054571817e-34  # J s
_SPEED_OF_LIGHT = 299792458.0  # m/s, exact
_ELEMENTARY_CHARGE = 1.602176634e-19  # C, exact
_VACUUM_PERMITTIVITY = 8.8541878128e-12  # F/m
_ELECTRON_REST_ENERGY = 510998.95  # eV


@dataclass(frozen=True)
class PhysicalConstants:
    hbar_c: float  # eV nm
    electron_rest_energy: float  # eV
    elementary_charge: float  # C
    vacuum_permittivity: float  # F/m
    speed_of_light: float  # m/s
    hbar_si: float  # J s


_CONSTANTS = PhysicalConstants(
    hbar_c=_HBAR_SI * _SPEED_OF_LIGHT / _ELEMENTARY_CHARGE * 1e9,
    electron_rest_energy=_ELECTRON_REST_ENERGY,
    elementary_charge=_ELEMENTARY_CHARGE,
    vacuum_permittivity=_VACUUM_PERMITTIVITY,
    speed_of_light=_SPEED_OF_LIGHT,
    hbar_si=_HBAR_SI,
)


@dataclass(frozen=True)
class Species:
    name: str
    rest_energy: float  # eV
    charge: float  # C, signed


SPECIES = {
    "electron": Species("electron", _ELECTRON_REST_ENERGY, -_ELEMENTARY_CHARGE),
    "positron": Species("positron", _ELECTRON_REST_ENERGY, _ELEMENTARY_CHARGE),
    "muon": Species("muon", 105658375.5, -_ELEMENTARY_CHARGE),
    "proton": Species("proton", 938272088.16, _ELEMENTARY_CHARGE),
}


def constants() -> PhysicalConstants:
    """Return the fixed constant set. Same object on every call."""
    return _CONSTANTS


def species(name: str) -> Species:
    try:
        return SPECIES[name]
    except KeyError:
        raise ValueError(
            f"unknown species {name!r}; expected one of {sorted(SPECIES)}"
        ) from None


def intensity_si(intensity_w_per_cm2: float) -> float:
    """Convert an intensity from W/cm^2 to W/m^2."""
    if intensity_w_per_cm2 < 0:
        raise ValueError(f"intensity must be non-negative, got {intensity_w_per_cm2}")
    return intensity_w_per_cm2 * 1e4


def ev_to_joule(value_ev: float) -> float:
    return value_ev * _ELEMENTARY_CHARGE


def joule_to_ev(value_j: float) -> float:
    return value_j / _ELEMENTARY_CHARGE
