"""Band structure of a charged particle in a standing-wave spacetime lattice."""

__version__ = "0.1.0"

from .constants import PhysicalConstants, constants, intensity_si
from .lattice import (
    Convention,
    FormulaMode,
    LatticeConfig,
    LatticeTransfer,
    WaveVector4,
    make_config,
    mass_squared_c4,
    stueckelberg_diagonal,
)
from .brillouin import (
    EdgeLine,
    ZoneEdgeClass,
    is_degenerate,
    light_cone_crossings,
    third_zone_edge_lines,
    zone_edges,
)
from .coupling import Channel, FourierComponent, fourier_inventory, linear_coupling, quadratic_coupling
from .jacobi import ConvergenceError, eigenvalues_hermitian
from .solver import (
    BandTable,
    BlochProblem,
    DegenerateSubspace,
    band_scan,
    build_bloch_problem,
    degenerate_shifts,
)
from .spectra import GapReport, forbidden_band, gap_term_literal, mass_to_energy
from .quadrature import QuadratureSpec, quadrature_coupling, selection_rule_scan

__all__ = [
    "BandTable",
    "BlochProblem",
    "Channel",
    "ConvergenceError",
    "Convention",
    "DegenerateSubspace",
    "EdgeLine",
    "FormulaMode",
    "FourierComponent",
    "GapReport",
    "LatticeConfig",
    "LatticeTransfer",
    "PhysicalConstants",
    "QuadratureSpec",
    "WaveVector4",
    "ZoneEdgeClass",
    "band_scan",
    "build_bloch_problem",
    "constants",
    "degenerate_shifts",
    "eigenvalues_hermitian",
    "forbidden_band",
    "fourier_inventory",
    "gap_term_literal",
    "intensity_si",
    "is_degenerate",
    "light_cone_crossings",
    "linear_coupling",
    "make_config",
    "mass_squared_c4",
    "mass_to_energy",
    "quadratic_coupling",
    "quadrature_coupling",
    "selection_rule_scan",
    "stueckelberg_diagonal",
    "third_zone_edge_lines",
    "zone_edges",
]
