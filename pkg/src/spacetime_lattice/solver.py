"""Degenerate perturbation theory and the truncated plane-wave eigenproblem.

The Bloch matrix is stored relative to the unperturbed eigenvalue of its
anchor state ``kappa``. Eigenvalues near the particle shell sit around
M c^2 / 2, and the splittings of interest can be many orders of magnitude
smaller, so the shift is kept separate instead of being folded into the
diagonal.
"""

from __future__ import annotations

import csv
import io
import math
from collections import deque
from dataclasses import dataclass, field, replace

import numpy as np

from .brillouin import Axis, EdgeLine, is_light_cone
from .coupling import coupling
from .jacobi import check_hermitian, eigenvalues_hermitian
from .lattice import (
    LatticeConfig,
    LatticeTransfer,
    WaveVector4,
    diagonal_difference,
    stueckelberg_diagonal,
)


@dataclass(frozen=True)
class DegenerateSubspace:
    states: tuple[WaveVector4, ...]
    couplings: np.ndarray

    def __post_init__(self):
        m = check_hermitian(self.couplings)
        if m.shape[0] != len(self.states):
            raise ValueError("coupling matrix size does not match the number of states")


def degenerate_subspace(
    k: WaveVector4,
    transfers,
    config: LatticeConfig,
    include_linear: bool = True,
) -> DegenerateSubspace:
    """Subspace spanned by ``k + K(t)`` for each transfer, with its potential block."""
    transfers = [LatticeTransfer(*t) for t in transfers]
    states = tuple(k.shifted(t, config) for t in transfers)
    n = len(states)
    m = np.zeros((n, n), dtype=complex)
    for i in range(n):
        m[i, i] = coupling(states[i], (0, 0), config, include_linear)
        for j in range(i + 1, n):
            m[i, j] = coupling(states[i], transfers[j] - transfers[i], config, include_linear)
            m[j, i] = m[i, j].conjugate()
    return DegenerateSubspace(states, m)


def degenerate_shifts(sub: DegenerateSubspace) -> np.ndarray:
    """First-order shifts of a degenerate multiplet, ascending."""
    return eigenvalues_hermitian(sub.couplings)


@dataclass
class BlochProblem:
    kappa: WaveVector4
    truncation_N: int
    transfers: list[LatticeTransfer]
    basis: list[WaveVector4]
    reference: float  # unperturbed eigenvalue of kappa, eV
    offsets: np.ndarray  # hamiltonian - reference * identity
    include_linear: bool = True
    _sectors: list[list[int]] | None = field(default=None, repr=False)

    @property
    def hamiltonian(self) -> np.ndarray:
        return self.offsets + self.reference * np.eye(len(self.basis))

    @property
    def anchor(self) -> int:
        return self.transfers.index(LatticeTransfer(0, 0))

    def sectors(self) -> list[list[int]]:
        """Index sets of the blocks left uncoupled by the potential."""
        if self._sectors is None:
            self._sectors = connected_blocks(self.offsets)
        return self._sectors

    def sector_of(self, index: int) -> list[int]:
        for block in self.sectors():
            if index in block:
                return block
        raise IndexError(index)


def connected_blocks(m: np.ndarray) -> list[list[int]]:
    n = m.shape[0]
    linked = (m != 0) | (m.T != 0)
    seen = [False] * n
    blocks = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        block, queue = [], deque([start])
        while queue:
            i = queue.popleft()
            block.append(i)
            for j in np.flatnonzero(linked[i]):
                if not seen[j]:
                    seen[j] = True
                    queue.append(int(j))
        blocks.append(sorted(block))
    return blocks


def build_bloch_problem(
    kappa: WaveVector4, N: int, config: LatticeConfig, include_linear: bool = True
) -> BlochProblem:
    """Plane-wave Hamiltonian on ``kappa + K(n_E, n_p)`` for ``|n_E|, |n_p| <= N``."""
    if N < 1:
        raise ValueError(f"truncation must be at least 1, got {N}")
    transfers = [LatticeTransfer(a, b) for a in range(-N, N + 1) for b in range(-N, N + 1)]
    basis = [kappa.shifted(t, config) for t in transfers]
    n = len(basis)
    h = np.zeros((n, n), dtype=complex)
    for i, (t_i, k_i) in enumerate(zip(transfers, basis)):
        h[i, i] = diagonal_difference(kappa, t_i, config) + coupling(k_i, (0, 0), config, include_linear)
        for j in range(i + 1, n):
            d = transfers[j] - t_i
            if abs(d.n_E) > 2 or abs(d.n_p) > 2:
                continue
            v = coupling(k_i, d, config, include_linear)
            if v != 0:
                h[i, j] = v
                h[j, i] = v.conjugate()
    return BlochProblem(
        kappa=kappa,
        truncation_N=N,
        transfers=transfers,
        basis=basis,
        reference=stueckelberg_diagonal(kappa, config),
        offsets=h,
        include_linear=include_linear,
    )


def bloch_spectrum(problem: BlochProblem, indices: list[int] | None = None) -> np.ndarray:
    """Eigenvalues relative to ``problem.reference``, ascending.

    Uncoupled blocks are diagonalised separately; ``indices`` restricts the
    result to one such block.
    """
    blocks = problem.sectors() if indices is None else [indices]
    values = [eigenvalues_hermitian(problem.offsets[np.ix_(b, b)]) for b in blocks]
    return np.sort(np.concatenate(values))


def physical_pair(
    problem: BlochProblem, target: float = 0.0, partner: tuple[int, int] | None = None
) -> np.ndarray:
    """The two eigenvalues (relative) closest to ``target``.

    Only the block holding the anchor, plus the block of its ``partner``
    when one is named, is searched; the other blocks belong to different
    crystal momenta.
    """
    indices = set(problem.sector_of(problem.anchor))
    if partner is not None:
        indices |= set(problem.sector_of(problem.transfers.index(LatticeTransfer(*partner))))
    indices = sorted(indices)
    if len(indices) < 2:
        raise ValueError("anchor block holds fewer than two states")
    values = np.sort(np.concatenate(
        [eigenvalues_hermitian(problem.offsets[np.ix_(b, b)]) for b in _split(problem, indices)]
    ))
    nearest = np.argsort(np.abs(values - target), kind="stable")[:2]
    return np.sort(values[nearest])


def _split(problem: BlochProblem, indices: list[int]) -> list[list[int]]:
    return [b for b in problem.sectors() if b[0] in indices]


EDGE_LABELS = {"E+": (Axis.ENERGY, 1), "E-": (Axis.ENERGY, -1), "P+": (Axis.MOMENTUM, 1), "P-": (Axis.MOMENTUM, -1)}


def edge_line(label: str, config: LatticeConfig) -> EdgeLine:
    try:
        axis, sign = EDGE_LABELS[label]
    except KeyError:
        raise ValueError(f"unknown edge {label!r}; expected one of {sorted(EDGE_LABELS)}") from None
    return EdgeLine(axis, sign * config.hbar_c_k_gamma)


def edge_point(line: EdgeLine, offset: float, config: LatticeConfig) -> tuple[WaveVector4, LatticeTransfer]:
    """Scan state on ``line`` and the transfer to its mirror partner.

    Momentum edges are parametrised by energy, centred on the positive-energy
    particle shell; energy edges by cp_z, centred on zero.
    """
    sign = 1 if line.level > 0 else -1
    if line.axis is Axis.MOMENTUM:
        shell = math.hypot(config.particle_rest_energy, line.level)
        return WaveVector4(shell + offset, 0.0, 0.0, line.level), LatticeTransfer(0, -2 * sign)
    return WaveVector4(line.level, 0.0, 0.0, offset), LatticeTransfer(-2 * sign, 0)


@dataclass(frozen=True)
class BandRow:
    coordinate: float  # eV, offset along the edge (from the shell energy on momentum edges)
    reference: float  # unperturbed s of the scan state, eV
    lower: float  # numerical eigenvalues relative to reference
    upper: float
    pt_lower: float  # 2x2 prediction relative to reference
    pt_upper: float
    flag: str

    @property
    def s_lower(self) -> float:
        return self.reference + self.lower

    @property
    def s_upper(self) -> float:
        return self.reference + self.upper

    @property
    def splitting(self) -> float:
        return self.upper - self.lower

    @property
    def pt_splitting(self) -> float:
        return self.pt_upper - self.pt_lower


CSV_HEADER = (
    "coordinate_eV",
    "s_lower_eV",
    "s_upper_eV",
    "mass_lower_eV",
    "mass_upper_eV",
    "pt_lower_eV",
    "pt_upper_eV",
    "flag",
)


def implied_mass(s: float, rest_energy: float) -> float:
    """Rest energy m c^2 whose shell carries Stueckelberg eigenvalue ``s``."""
    if s <= 0:
        return math.nan
    return math.sqrt(2.0 * rest_energy * s)


def _fmt(x: float) -> str:
    return "nan" if math.isnan(x) else f"{x:.12g}"


@dataclass
class BandTable:
    edge: EdgeLine
    truncation_N: int
    rest_energy: float
    rows: list[BandRow]

    def nearest_shell_row(self) -> BandRow:
        """Row whose unperturbed scan state lies closest to the particle shell."""
        return min(self.rows, key=lambda r: abs(r.reference - 0.5 * self.rest_energy))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in self.rows:
            writer.writerow(
                [
                    _fmt(r.coordinate),
                    _fmt(r.s_lower),
                    _fmt(r.s_upper),
                    _fmt(implied_mass(r.s_lower, self.rest_energy)),
                    _fmt(implied_mass(r.s_upper, self.rest_energy)),
                    _fmt(r.reference + r.pt_lower),
                    _fmt(r.reference + r.pt_upper),
                    r.flag,
                ]
            )
        return buf.getvalue()


def band_point(
    line: EdgeLine, offset: float, N: int, config: LatticeConfig, include_linear: bool = True
) -> BandRow:
    kappa, partner = edge_point(line, offset, config)
    problem = build_bloch_problem(kappa, N, config, include_linear)
    lower, upper = physical_pair(problem, partner=partner)
    sub = degenerate_subspace(kappa, [(0, 0), partner], config, include_linear)
    # Zero for the mirror pairs scanned here; kept so the 2x2 stays honest off the edge.
    d = diagonal_difference(kappa, partner, config)
    pt = eigenvalues_hermitian(sub.couplings + np.diag([0.0, d]))
    if is_light_cone(kappa, config):
        flag = "light_cone"
    elif line.axis is Axis.ENERGY:
        flag = "off_shell"
    else:
        flag = ""
    return BandRow(
        offset, problem.reference, float(lower), float(upper), float(pt[0]), float(pt[1]), flag
    )


def band_scan(
    line: EdgeLine,
    offsets,
    N: int,
    config: LatticeConfig,
    include_linear: bool = True,
) -> BandTable:
    """Physical eigenvalue pair at each point along a third-zone edge line."""
    if N < 2:
        raise ValueError(f"band scans need truncation >= 2, got {N}")
    offsets = [float(o) for o in offsets]
    if not all(math.isfinite(o) for o in offsets):
        raise ValueError("scan offsets must be finite")
    rows = [band_point(line, o, N, config, include_linear) for o in offsets]
    if line.axis is Axis.MOMENTUM and rows:
        i = min(range(len(rows)), key=lambda j: abs(offsets[j]))
        if not rows[i].flag:
            rows[i] = replace(rows[i], flag="shell")
    return BandTable(line, N, config.particle_rest_energy, rows)
