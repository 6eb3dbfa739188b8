import json
import math

import pytest
from hypothesis import given, strategies as st

from spacetime_lattice.constants import constants
from spacetime_lattice.lattice import (
    Convention,
    LatticeConfig,
    WaveVector4,
    diagonal_difference,
    make_config,
    mass_squared_c4,
    stueckelberg_diagonal,
)

M = 510998.95
finite = st.floats(-1e6, 1e6, allow_nan=False)


def test_zero_intensity_has_no_potential():
    cfg = make_config(589.0, 0.0)
    assert cfg.amplitude_A == 0.0
    assert cfg.beta == 0.0


def test_amplitude_scaling():
    a = make_config(589.0, 1e10)
    b = make_config(589.0, 4e10)
    assert b.amplitude_A == pytest.approx(2 * a.amplitude_A, rel=1e-14)
    assert b.beta == pytest.approx(4 * a.beta, rel=1e-14)


def test_lattice_energy_unit_at_589nm():
    cfg = make_config(589.0, 3.13e12)
    assert cfg.hbar_c_k_gamma == pytest.approx(197.3269804 / 589.0, rel=1e-9)
    assert cfg.hbar_c_k_gamma == pytest.approx(0.33502, abs=5e-6)


def test_beta_from_intensity_by_hand():
    # A = sqrt(2I/(c eps0)) / omega, omega = c / lambda; beta = (A c)^2 / (32 M c^2) in eV
    c, eps0 = 299792458.0, 8.8541878128e-12
    lam = 589e-9
    A = math.sqrt(2 * 3.13e16 / (c * eps0)) / (c / lam)
    beta = (A * c) ** 2 / (32 * M)
    cfg = make_config(589.0, 3.13e12)
    assert cfg.amplitude_A == pytest.approx(A, rel=1e-12)
    assert cfg.beta == pytest.approx(beta, rel=1e-12)


@given(st.floats(1.0, 1e5), st.just(0.0) | st.floats(1e-6, 1e16))
def test_config_invariants(lam, intensity):
    for conv in Convention:
        cfg = make_config(lam, intensity, conv)
        assert cfg.k_gamma > 0
        assert cfg.hbar_c_k_gamma == pytest.approx(constants().hbar_c * cfg.k_gamma, rel=1e-12)
        assert cfg.omega_gamma == pytest.approx(constants().speed_of_light * cfg.k_gamma * 1e9, rel=1e-12)
        assert cfg.beta >= 0
        assert (cfg.beta == 0) == (intensity == 0)
    reciprocal = make_config(lam, intensity, "reciprocal")
    angular = make_config(lam, intensity, "angular")
    assert reciprocal.hbar_c_k_gamma * lam == pytest.approx(constants().hbar_c, rel=1e-12)
    assert angular.hbar_c_k_gamma * lam / (2 * math.pi) == pytest.approx(constants().hbar_c, rel=1e-12)


@pytest.mark.parametrize("lam, intensity", [(0.0, 1.0), (-5.0, 1.0), (589.0, -1.0), (math.nan, 1.0)])
def test_make_config_rejects(lam, intensity):
    with pytest.raises(ValueError):
        make_config(lam, intensity)


def test_config_json_round_trip():
    cfg = make_config(589.0, 3.13e12, "angular", "chained", "muon")
    doc = json.loads(json.dumps(cfg.to_dict()))
    assert set(doc) == {"wavelength_nm", "intensity_W_cm2", "convention", "formula_mode", "species"}
    assert LatticeConfig.from_dict(doc) == cfg


def test_convention_aliases():
    assert make_config(589.0, 1.0, "paper") == make_config(589.0, 1.0, "reciprocal")
    assert make_config(589.0, 1.0, "standard") == make_config(589.0, 1.0, "angular")


def test_stueckelberg_examples(example_config):
    assert stueckelberg_diagonal(WaveVector4(M), example_config) == pytest.approx(M / 2, rel=1e-15)
    assert stueckelberg_diagonal(WaveVector4(7.5, 0, 0, 7.5), example_config) == 0.0
    assert stueckelberg_diagonal(WaveVector4(3.0, 0, 0, 4.0), example_config) == pytest.approx(
        -6.849329142e-6, rel=1e-9
    )


def test_mass_squared_examples():
    assert mass_squared_c4(WaveVector4(5.0, 0, 0, 3.0)) == 16.0
    assert mass_squared_c4(WaveVector4(2.5, 0, 0, 2.5)) == 0.0
    q = 0.33502
    assert mass_squared_c4(WaveVector4(M, 0, 0, q)) == pytest.approx(M**2 - q**2, rel=1e-15)
    assert mass_squared_c4(WaveVector4(5.0, 1.0, 2.0, 3.0)) == 16.0
    assert mass_squared_c4(WaveVector4(5.0, 1.0, 2.0, 3.0), include_transverse=True) == 11.0


@given(finite, finite, finite, finite)
def test_stueckelberg_symmetries(E, x, y, z):
    cfg = make_config(589.0, 0.0)
    s = stueckelberg_diagonal(WaveVector4(E, x, y, z), cfg)
    # Reordering the sum moves the rounding; allow for cancellation between terms.
    atol = 1e-12 + 1e-15 * (E * E + x * x + y * y + z * z) / (2 * M)
    for other in [(E, y, z, x), (E, z, x, y), (E, x, y, -z), (-E, x, y, z)]:
        assert stueckelberg_diagonal(WaveVector4(*other), cfg) == pytest.approx(s, rel=1e-12, abs=atol)
    assert 2 * M * stueckelberg_diagonal(WaveVector4(E, 0, 0, z), cfg) == pytest.approx(
        mass_squared_c4(WaveVector4(E, 0, 0, z)), rel=1e-12, abs=1e-9
    )


@given(st.floats(-1e6, 1e6), st.floats(-1e3, 1e3), st.integers(-4, 4), st.integers(-4, 4))
def test_diagonal_difference_matches_subtraction(E, p, a, b):
    cfg = make_config(589.0, 0.0)
    k = WaveVector4(E, 0.0, 0.0, p)
    direct = stueckelberg_diagonal(k.shifted((a, b), cfg), cfg) - stueckelberg_diagonal(k, cfg)
    assert diagonal_difference(k, (a, b), cfg) == pytest.approx(direct, abs=1e-9)
