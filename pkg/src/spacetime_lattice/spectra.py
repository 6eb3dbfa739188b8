"""Mass shifts to kinetic energies, and the forbidden band."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .constants import constants, intensity_si, joule_to_ev
from .lattice import FormulaMode, LatticeConfig, make_config


class EnergyMode(str, enum.Enum):
    EXACT = "exact"
    QUADRATIC_APPROX = "quadratic_approx"


def mass_to_energy(mass_c2: float, cp_z: float, mode: EnergyMode | str = EnergyMode.EXACT) -> float:
    """Energy of a state with rest energy ``mass_c2`` and momentum ``cp_z`` (eV)."""
    if not mass_c2 > 0:
        raise ValueError(f"mass must be positive, got {mass_c2}")
    mode = EnergyMode(mode)
    if mode is EnergyMode.EXACT:
        return math.hypot(mass_c2, cp_z)
    return mass_c2 + cp_z * cp_z / (2.0 * mass_c2)


def _kinetic_exact(rest: float, shift: float, cp_z: float) -> float:
    """``sqrt((rest + shift)^2 + cp_z^2) - rest`` without the cancellation."""
    m = rest + shift
    return shift + cp_z * cp_z / (math.hypot(m, cp_z) + m)


def gap_term_literal(wavelength_nm: float, intensity_W_cm2: float, rest_energy: float | None = None) -> float:
    """``e^2 I lambda^2 / (16 M c^3 eps0)`` in eV."""
    if not wavelength_nm > 0:
        raise ValueError(f"wavelength must be positive, got {wavelength_nm}")
    c = constants()
    if rest_energy is None:
        rest_energy = c.electron_rest_energy
    mass_kg = rest_energy * c.elementary_charge / c.speed_of_light**2
    lam = wavelength_nm * 1e-9
    value = (
        c.elementary_charge**2
        * intensity_si(intensity_W_cm2)
        * lam**2
        / (16.0 * mass_kg * c.speed_of_light**3 * c.vacuum_permittivity)
    )
    return joule_to_ev(value)


def recoil_literal(wavelength_nm: float, rest_energy: float | None = None) -> float:
    """``hbar^2 / (2 M lambda^2)`` in eV."""
    c = constants()
    if rest_energy is None:
        rest_energy = c.electron_rest_energy
    return (c.hbar_c / wavelength_nm) ** 2 / (2.0 * rest_energy)


@dataclass(frozen=True)
class GapReport:
    E_minus: float
    E_plus: float
    recoil_term: float
    gap_term: float
    beta: float
    formula_mode: FormulaMode
    convention: str
    exact_vs_approx_delta: float
    literal_gap_term: float
    chained_gap_term: float
    config: LatticeConfig

    @property
    def chained_to_literal_ratio(self) -> float:
        if self.literal_gap_term == 0:
            return math.nan
        return self.chained_gap_term / self.literal_gap_term

    def to_dict(self) -> dict:
        return {
            "E_minus_eV": self.E_minus,
            "E_plus_eV": self.E_plus,
            "recoil_term_eV": self.recoil_term,
            "gap_term_eV": self.gap_term,
            "beta_eV": self.beta,
            "formula_mode": self.formula_mode.value,
            "convention": self.convention,
            "exact_vs_approx_delta_eV": self.exact_vs_approx_delta,
            "literal_gap_term_eV": self.literal_gap_term,
            "chained_gap_term_eV": self.chained_gap_term,
            "chained_to_literal_ratio": self.chained_to_literal_ratio,
            "config": self.config.to_dict(),
        }


def forbidden_band(config: LatticeConfig) -> GapReport:
    """Kinetic-energy interval closed to the particle inside the lattice.

    Both closed forms are evaluated. ``literal`` uses the printed combined
    coefficient ``e^2 I lambda^2 / (16 M c^3 eps0)`` together with the
    recoil ``hbar^2 / (2 M lambda^2)``. ``chained`` composes the mass shifts
    ``4 beta -+ 2 beta`` with the intensity-to-amplitude relation and the
    small-momentum expansion, which gives a gap term of ``2 beta``; under the
    reciprocal convention that is exactly twice the literal coefficient.
    """
    rest = config.particle_rest_energy
    literal = gap_term_literal(config.wavelength_nm, config.intensity_W_cm2, rest)
    chained = 2.0 * config.beta
    q = config.hbar_c_k_gamma

    if config.formula_mode is FormulaMode.LITERAL:
        recoil = recoil_literal(config.wavelength_nm, rest)
        gap = literal
    else:
        recoil = q * q / (2.0 * rest)
        gap = chained
    e_minus = recoil + gap
    e_plus = recoil + 3.0 * gap
    # Exact square root against the expansion, at the upper shift where it is largest.
    exact_plus = _kinetic_exact(rest, 3.0 * gap, q)
    delta = exact_plus - (3.0 * gap + q * q / (2.0 * rest))

    return GapReport(
        E_minus=e_minus,
        E_plus=e_plus,
        recoil_term=recoil,
        gap_term=gap,
        beta=config.beta,
        formula_mode=config.formula_mode,
        convention=config.convention.value,
        exact_vs_approx_delta=delta,
        literal_gap_term=literal,
        chained_gap_term=chained,
        config=config,
    )


def gaps(wavelength_nm: float, intensity_W_cm2: float, convention="reciprocal", formula_mode="literal", species="electron") -> GapReport:
    return forbidden_band(make_config(wavelength_nm, intensity_W_cm2, convention, formula_mode, species))
