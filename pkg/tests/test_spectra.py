import math

import pytest
from hypothesis import given, strategies as st

from spacetime_lattice.lattice import make_config
from spacetime_lattice.spectra import (
    EnergyMode,
    forbidden_band,
    gap_term_literal,
    mass_to_energy,
)

M = 510998.95
lam_st = st.floats(10.0, 1e5)
int_st = st.floats(1.0, 1e16)


def test_rest_energy():
    assert mass_to_energy(M, 0.0, EnergyMode.EXACT) == M


def test_recoil_term(example_config):
    q = example_config.hbar_c_k_gamma
    assert mass_to_energy(M, q, "quadratic_approx") - M == pytest.approx(1.10e-7, rel=1e-2)


def test_exact_against_approx(example_config):
    q = example_config.hbar_c_k_gamma
    exact = mass_to_energy(M, q, "exact")
    approx = mass_to_energy(M, q, "quadratic_approx")
    assert abs(exact - approx) < 1e-13 * M


def test_rejects_non_positive_mass():
    with pytest.raises(ValueError):
        mass_to_energy(0.0, 1.0)


def test_gap_term_value():
    assert gap_term_literal(589.0, 3.13e12) == pytest.approx(0.5, rel=1e-2)


def test_gap_term_by_hand():
    e, c, eps0 = 1.602176634e-19, 299792458.0, 8.8541878128e-12
    me = 9.1093837015e-31
    value = e**2 * 3.13e16 * (589e-9) ** 2 / (16 * me * c**3 * eps0) / e
    assert gap_term_literal(589.0, 3.13e12) == pytest.approx(value, rel=1e-9)


def test_gap_term_scaling():
    base = gap_term_literal(589.0, 1e12)
    assert gap_term_literal(589.0, 2e12) == pytest.approx(2 * base, rel=1e-14)
    assert gap_term_literal(1178.0, 1e12) == pytest.approx(4 * base, rel=1e-14)


def test_literal_band_example(example_config):
    report = forbidden_band(example_config)
    assert report.E_minus == pytest.approx(0.5, rel=1e-2)
    assert report.E_plus == pytest.approx(1.5, rel=1e-2)
    assert report.recoil_term == pytest.approx(1.10e-7, rel=1e-2)


def test_zero_intensity_closes_band():
    report = forbidden_band(make_config(589.0, 0.0))
    assert report.E_minus == report.E_plus == report.recoil_term
    assert report.recoil_term == pytest.approx(1.10e-7, rel=1e-2)


def test_chained_band_example():
    report = forbidden_band(make_config(589.0, 3.13e12, formula_mode="chained"))
    assert report.gap_term == pytest.approx(1.0, rel=1e-2)
    assert report.gap_term == pytest.approx(2 * report.beta, rel=1e-15)


@given(lam_st, int_st, st.sampled_from(["literal", "chained"]), st.sampled_from(["reciprocal", "angular"]))
def test_band_structure(lam, intensity, mode, conv):
    report = forbidden_band(make_config(lam, intensity, conv, mode))
    assert report.E_plus >= report.E_minus
    assert report.E_plus - report.E_minus == pytest.approx(2 * report.gap_term, rel=1e-12)


@given(lam_st, int_st)
def test_chained_is_twice_literal(lam, intensity):
    report = forbidden_band(make_config(lam, intensity, "reciprocal"))
    assert report.chained_to_literal_ratio == pytest.approx(2.0, rel=1e-10)


@given(lam_st, int_st, st.floats(1.01, 100.0))
def test_monotone_in_intensity(lam, intensity, factor):
    a = forbidden_band(make_config(lam, intensity))
    b = forbidden_band(make_config(lam, intensity * factor))
    assert b.E_minus >= a.E_minus and b.E_plus >= a.E_plus
    assert b.E_plus - b.E_minus >= a.E_plus - a.E_minus


def test_report_json_fields(example_config):
    doc = forbidden_band(example_config).to_dict()
    for key in ("E_minus_eV", "E_plus_eV", "recoil_term_eV", "gap_term_eV", "beta_eV",
                "formula_mode", "convention", "exact_vs_approx_delta_eV", "config"):
        assert key in doc
    assert abs(doc["exact_vs_approx_delta_eV"]) < 1e-9
