"""Brute-force matrix elements by integrating over one spacetime unit cell.

This is the independent check on :mod:`spacetime_lattice.coupling`. It
never looks at the closed-form coefficients; it samples the potential
``A sin(omega t) cos(k z)`` on a uniform (t, z) grid, multiplies by the
plane-wave overlap, and sums with the composite trapezoidal rule. The
integrands are trigonometric polynomials, so the sum is exact once the grid
resolves the highest harmonic present.

Cell coordinates are ``theta = omega t`` and ``zeta = k z``, each over one
full period ``[0, 2 pi)``. Plane waves are ``exp(i k_mu x^mu)`` with
signature (+, -, -, -), i.e. ``exp(i (n_E theta - n_p zeta))`` in lattice
units. The x and y integrals are done analytically: they conserve the
transverse momentum.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .coupling import (
    LINEAR_TRANSFERS,
    QUADRATIC_TRANSFERS,
    Channel,
    linear_coupling,
    quadratic_coupling,
)
from .lattice import LatticeConfig, LatticeTransfer, WaveVector4

log = logging.getLogger(__name__)

MIN_POINTS = 8
_COMMENSURATE_TOL = 1e-6


@dataclass(frozen=True)
class QuadratureSpec:
    points_t: int = 512
    points_z: int = 512

    def __post_init__(self):
        for n in (self.points_t, self.points_z):
            if n < MIN_POINTS or n % 2:
                raise ValueError(f"points per axis must be even and >= {MIN_POINTS}, got {n}")

    @property
    def max_exact_harmonic(self) -> int:
        """Largest integrand harmonic the grid integrates without aliasing."""
        return min(self.points_t, self.points_z) - 1


@lru_cache(maxsize=8)
def _cell_grids(points_t: int, points_z: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    theta = 2.0 * np.pi * np.arange(points_t) / points_t
    zeta = 2.0 * np.pi * np.arange(points_z) / points_z
    # A^x(theta, zeta) / A, and A_mu A^mu / A^2 up to the sign convention below.
    wave = np.outer(np.sin(theta), np.cos(zeta))
    return theta, zeta, wave, wave * wave


def _transfer_between(k: WaveVector4, k_prime: WaveVector4, config: LatticeConfig) -> LatticeTransfer | None:
    q = config.hbar_c_k_gamma
    n = []
    for d in ((k_prime.E - k.E) / q, (k_prime.cp_z - k.cp_z) / q):
        r = round(d)
        if abs(d - r) > _COMMENSURATE_TOL:
            return None
        n.append(int(r))
    return LatticeTransfer(*n)


def _potential_grid(k_prime: WaveVector4, config: LatticeConfig, channel: Channel, spec: QuadratureSpec) -> np.ndarray:
    _, _, wave, wave_sq = _cell_grids(spec.points_t, spec.points_z)
    volts = config.amplitude_volts  # (q/e) A c
    rest = config.particle_rest_energy
    if channel is Channel.QUADRATIC:
        # (q^2 / 2M) A^2 sin^2 cos^2, taken with a positive sign as in the
        # quoted expansion rather than the metric-signed A_mu A^mu.
        return (volts * volts / (2.0 * rest)) * wave_sq
    # (i q hbar / M) A^x d/dx^1 acting on exp(i k_mu x^mu): d/dx^1 gives
    # -i k^x, so the operator reduces to (q hbar k^x / M) A^x.
    return (volts * k_prime.cp_x / rest) * wave


def quadrature_coupling(
    k: WaveVector4,
    k_prime: WaveVector4,
    config: LatticeConfig,
    channel: Channel | str,
    spec: QuadratureSpec = QuadratureSpec(),
) -> complex:
    """Cell average of ``conj(psi_k) V psi_k'`` for one channel, in eV.

    Returns exactly zero, without integrating, when the states differ in
    transverse momentum or their (E, cp_z) separation is not a lattice
    vector; the reason is logged at debug level.
    """
    channel = Channel(channel)
    if k.cp_x != k_prime.cp_x or k.cp_y != k_prime.cp_y:
        log.debug("transverse_mismatch: %s -> %s", k, k_prime)
        return 0j
    t = _transfer_between(k, k_prime, config)
    if t is None:
        log.debug("incommensurate: %s -> %s", k, k_prime)
        return 0j
    theta, zeta, _, _ = _cell_grids(spec.points_t, spec.points_z)
    phase_t = np.exp(1j * t.n_E * theta)
    phase_z = np.exp(-1j * t.n_p * zeta)
    v = _potential_grid(k_prime, config, channel, spec)
    total = phase_t @ v @ phase_z
    return complex(total / (spec.points_t * spec.points_z))


def closed_form(k: WaveVector4, t: tuple[int, int], config: LatticeConfig, channel: Channel) -> complex:
    if channel is Channel.QUADRATIC:
        return complex(quadratic_coupling(t, config))
    return linear_coupling(k, t, config)


@dataclass
class ChannelReport:
    channel: Channel
    max_on_inventory_rel_err: float
    max_off_inventory_abs: float
    max_hermiticity_abs: float
    on_inventory: list[LatticeTransfer]
    n_off_inventory: int
    points: int
    seed: int

    def to_dict(self) -> dict:
        return {
            "channel": self.channel.value,
            "max_on_inventory_rel_err": self.max_on_inventory_rel_err,
            "max_off_inventory_abs": self.max_off_inventory_abs,
            "max_hermiticity_abs": self.max_hermiticity_abs,
            "on_inventory_transfers": [list(t) for t in sorted(set(self.on_inventory))],
            "n_off_inventory": self.n_off_inventory,
            "points": self.points,
            "seed": self.seed,
        }


@dataclass
class SelectionReport:
    channels: list[ChannelReport]
    off_inventory_threshold: float  # eV
    on_inventory_rtol: float
    hermiticity_atol: float

    @property
    def passed(self) -> bool:
        return all(
            c.max_on_inventory_rel_err <= self.on_inventory_rtol
            and c.max_off_inventory_abs <= self.off_inventory_threshold
            and c.max_hermiticity_abs <= self.hermiticity_atol
            for c in self.channels
        )

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "off_inventory_threshold_eV": self.off_inventory_threshold,
            "on_inventory_rtol": self.on_inventory_rtol,
            "hermiticity_atol_eV": self.hermiticity_atol,
            "channels": [c.to_dict() for c in self.channels],
        }


def _sample_state(rng: np.random.Generator, q: float) -> WaveVector4:
    # Off-lattice, non-zero transverse momentum so the linear channel is live.
    E, cp_z = rng.uniform(-8.0, 8.0, size=2) * q
    cp_x = rng.uniform(0.5, 2.0) * rng.choice([-1.0, 1.0])
    cp_y = rng.uniform(-1.0, 1.0)
    return WaveVector4(float(E), float(cp_x), float(cp_y), float(cp_z))


def selection_rule_scan(
    config: LatticeConfig,
    n_random: int,
    seed: int = 0,
    spec: QuadratureSpec = QuadratureSpec(),
    on_inventory_rtol: float = 1e-8,
    off_inventory_factor: float = 1e-10,
    hermiticity_atol: float = 1e-12,
) -> SelectionReport:
    """Check every selection rule against the oracle on seeded random states.

    Every inventory transfer of both channels is evaluated once, then
    ``n_random`` random (state, transfer) pairs with transfers drawn from a
    window the grid integrates exactly. Off-inventory magnitudes are compared
    with ``off_inventory_factor * q^2 A^2 / (8M)``.
    """
    if n_random < 1:
        raise ValueError("n_random must be at least 1")
    rng = np.random.default_rng(seed)
    q = config.hbar_c_k_gamma
    reach = min(6, spec.max_exact_harmonic - 2)
    inventories = {Channel.QUADRATIC: set(QUADRATIC_TRANSFERS), Channel.LINEAR: set(LINEAR_TRANSFERS)}
    samples = {ch: [(_sample_state(rng, q), t) for t in sorted(inv)] for ch, inv in inventories.items()}
    for _ in range(n_random):
        ch = Channel.QUADRATIC if rng.random() < 0.5 else Channel.LINEAR
        t = LatticeTransfer(*(int(v) for v in rng.integers(-reach, reach + 1, size=2)))
        samples[ch].append((_sample_state(rng, q), t))

    threshold = off_inventory_factor * config.quadratic_scale
    reports = []
    for ch, items in samples.items():
        max_rel = max_off = max_herm = 0.0
        seen_on, n_off = [], 0
        for k, t in items:
            kp = k.shifted(t, config)
            value = quadrature_coupling(k, kp, config, ch, spec)
            back = quadrature_coupling(kp, k, config, ch, spec)
            max_herm = max(max_herm, abs(value - back.conjugate()))
            exact = closed_form(k, t, config, ch)
            if t in inventories[ch]:
                seen_on.append(t)
                scale = abs(exact)
                err = abs(value - exact) / scale if scale else abs(value)
                max_rel = max(max_rel, err)
            else:
                n_off += 1
                max_off = max(max_off, abs(value))
        reports.append(
            ChannelReport(ch, max_rel, max_off, max_herm, seen_on, n_off, spec.points_t, seed)
        )
    return SelectionReport(reports, threshold, on_inventory_rtol, hermiticity_atol)
