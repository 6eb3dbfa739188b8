"""Closed-form matrix elements of the standing-wave potential.

Transfers are ``(n_E, n_p)`` in units of hbar*c*k_gamma. The term linear in
A only moves a state by ``(+-1, +-1)``; the A^2 term moves it by 0 or 2
units along each axis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .lattice import LatticeConfig, LatticeTransfer, WaveVector4


class Channel(str, enum.Enum):
    LINEAR = "linear_A"
    QUADRATIC = "quadratic_A2"


@dataclass(frozen=True)
class FourierComponent:
    transfer: LatticeTransfer
    coefficient: complex  # eV
    channel: Channel


# Coefficients in units of q^2 A^2 / (8M) = 4 beta.
_QUADRATIC_WEIGHTS: dict[tuple[int, int], float] = {
    (0, 0): 1.0,
    (2, 0): -0.5,
    (-2, 0): -0.5,
    (0, 2): 0.5,
    (0, -2): 0.5,
    (2, 2): -0.25,
    (2, -2): -0.25,
    (-2, 2): -0.25,
    (-2, -2): -0.25,
}

LINEAR_TRANSFERS = (
    LatticeTransfer(1, 1),
    LatticeTransfer(1, -1),
    LatticeTransfer(-1, 1),
    LatticeTransfer(-1, -1),
)
QUADRATIC_TRANSFERS = tuple(LatticeTransfer(*t) for t in _QUADRATIC_WEIGHTS)


def quadratic_coupling(t: tuple[int, int], config: LatticeConfig) -> float:
    """Matrix element of the A^2 term between ``k`` and ``k + K(t)``, in eV.

    Real and even in ``t``: 4b on the diagonal, -2b along energy, +2b along
    momentum, -b on the four diagonals, with b = beta.
    """
    weight = _QUADRATIC_WEIGHTS.get((int(t[0]), int(t[1])))
    if weight is None:
        return 0.0
    return weight * config.quadratic_scale


def linear_prefactor(k: WaveVector4, config: LatticeConfig) -> float:
    """Magnitude ``q hbar k_x A / (4M)`` in eV, signed with the charge."""
    return config.amplitude_volts * k.cp_x / (4.0 * config.particle_rest_energy)


def linear_coupling(k: WaveVector4, t: tuple[int, int], config: LatticeConfig) -> complex:
    """Matrix element of the term linear in A between ``k`` and ``k + K(t)``.

    Purely imaginary: ``+i`` times the prefactor when the transfer raises the
    energy, ``-i`` when it lowers it.
    """
    n_E, n_p = int(t[0]), int(t[1])
    if abs(n_E) != 1 or abs(n_p) != 1:
        return 0j
    return complex(0.0, n_E * linear_prefactor(k, config))


def coupling(
    k: WaveVector4, t: tuple[int, int], config: LatticeConfig, include_linear: bool = True
) -> complex:
    """Total potential matrix element from ``k`` to ``k + K(t)``."""
    value = complex(quadratic_coupling(t, config))
    if include_linear:
        value += linear_coupling(k, t, config)
    return value


def fourier_inventory(
    config: LatticeConfig, include_linear: bool = False, k: WaveVector4 | None = None
) -> list[FourierComponent]:
    """Every transfer with a non-zero coefficient, quadratic channel first."""
    components = [
        FourierComponent(t, complex(quadratic_coupling(t, config)), Channel.QUADRATIC)
        for t in QUADRATIC_TRANSFERS
    ]
    if include_linear and k is not None and k.cp_x != 0.0:
        components += [
            FourierComponent(t, linear_coupling(k, t, config), Channel.LINEAR)
            for t in LINEAR_TRANSFERS
        ]
    return components
