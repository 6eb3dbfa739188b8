"""Brillouin-zone edges in the (E, cp_z) plane."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .lattice import LatticeConfig, LatticeTransfer, WaveVector4, mass_squared_c4

MAX_RANK = 5

# Hard-coded rather than derived: the ordering of ranks 2 and 3 does not
# follow from "smallest |n_E|, |n_p| first" alone.
_ZONE_TABLE: dict[int, tuple[tuple[int, int], ...]] = {
    1: ((1, 0), (-1, 0), (0, 1), (0, -1)),
    2: ((1, 1), (1, -1), (-1, 1), (-1, -1)),
    3: ((2, 0), (-2, 0), (0, 2), (0, -2)),
    4: ((2, 1), (2, -1), (-2, 1), (-2, -1), (1, 2), (1, -2), (-1, 2), (-1, -2)),
    5: ((2, 2), (2, -2), (-2, 2), (-2, -2)),
}


@dataclass(frozen=True)
class ZoneEdgeClass:
    rank: int
    transfers: frozenset[LatticeTransfer]

    def to_dict(self) -> dict:
        return {"rank": self.rank, "transfers": [list(t) for t in sorted(self.transfers)]}


class Axis(str, enum.Enum):
    ENERGY = "energy"
    MOMENTUM = "momentum"


@dataclass(frozen=True)
class EdgeLine:
    """Line ``E = level`` (energy axis) or ``cp_z = level`` (momentum axis)."""

    axis: Axis
    level: float  # eV


def zone_edges(rank: int) -> ZoneEdgeClass:
    if rank not in _ZONE_TABLE:
        raise ValueError(f"zone rank must be in 1..{MAX_RANK}, got {rank}")
    return ZoneEdgeClass(rank, frozenset(LatticeTransfer(*t) for t in _ZONE_TABLE[rank]))


def zone_rank(t: tuple[int, int]) -> int | None:
    """Rank of the zone edge a transfer belongs to, ``None`` beyond rank 5."""
    for rank, transfers in _ZONE_TABLE.items():
        if tuple(t) in transfers:
            return rank
    return None


def default_tolerance(config: LatticeConfig) -> float:
    return 1e-9 * config.hbar_c_k_gamma**2


def is_degenerate(
    k: WaveVector4,
    t: tuple[int, int],
    config: LatticeConfig,
    tolerance: float | None = None,
) -> bool:
    """Whether ``k`` and ``k + K(t)`` share the same ``E^2 - cp_z^2``.

    Evaluated as ``2 (E dE - cp_z dp) + dE^2 - dp^2`` so that large rest
    energies do not swamp the comparison.
    """
    if tolerance is None:
        tolerance = default_tolerance(config)
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    dE = t[0] * config.hbar_c_k_gamma
    dp = t[1] * config.hbar_c_k_gamma
    change = 2.0 * (k.E * dE - k.cp_z * dp) + dE * dE - dp * dp
    return abs(change) <= tolerance


def third_zone_edge_lines(config: LatticeConfig) -> list[EdgeLine]:
    q = config.hbar_c_k_gamma
    return [
        EdgeLine(Axis.ENERGY, q),
        EdgeLine(Axis.ENERGY, -q),
        EdgeLine(Axis.MOMENTUM, q),
        EdgeLine(Axis.MOMENTUM, -q),
    ]


def light_cone_crossings(config: LatticeConfig) -> list[tuple[float, float]]:
    q = config.hbar_c_k_gamma
    return [(q, q), (q, -q), (-q, q), (-q, -q)]


def on_third_zone_edge(k: WaveVector4, config: LatticeConfig, rtol: float = 1e-12) -> bool:
    q = config.hbar_c_k_gamma
    return abs(abs(k.E) - q) <= rtol * q or abs(abs(k.cp_z) - q) <= rtol * q


def edge_partners(k: WaveVector4, config: LatticeConfig) -> list[LatticeTransfer]:
    """Rank-3 and rank-5 transfers taking ``k`` to a degenerate point on the edge frame.

    A generic point of a third-zone edge line has exactly one partner; the
    four light-cone crossings each see the other three.
    """
    partners = []
    for rank in (3, 5):
        for t in sorted(zone_edges(rank).transfers):
            if is_degenerate(k, t, config) and on_third_zone_edge(k.shifted(t, config), config):
                partners.append(t)
    return partners


def is_light_cone(k: WaveVector4, config: LatticeConfig) -> bool:
    return abs(mass_squared_c4(k)) <= default_tolerance(config)
