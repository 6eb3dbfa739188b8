"""Serialisation of reports: JSON, CSV, SVG and run manifests."""

from __future__ import annotations

import datetime as _dt
import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .lattice import LatticeConfig
from .solver import BandTable

SIGNIFICANT_DIGITS = 12


def round_sig(x: float) -> float:
    if not math.isfinite(x) or x == 0:
        return x
    return float(f"{x:.{SIGNIFICANT_DIGITS}g}")


def _rounded(obj):
    if isinstance(obj, float):
        return round_sig(obj)
    if isinstance(obj, dict):
        return {k: _rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(_rounded(obj), indent=2, allow_nan=True) + "\n"


def atomic_write(path: str | os.PathLike, text: str) -> Path:
    """Write ``text`` to a temporary sibling, then rename it over ``path``."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


@dataclass
class RunManifest:
    command: str
    config_echo: LatticeConfig | None
    tool_version: str = __version__
    timestamp: str = field(
        default_factory=lambda: _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    )
    outputs: list[str] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "config_echo": self.config_echo.to_dict() if self.config_echo else None,
            "tool_version": self.tool_version,
            "timestamp": self.timestamp,
            "outputs": list(self.outputs),
            **self.extra,
        }

    def write(self, path: str | os.PathLike) -> Path:
        return atomic_write(path, dumps(self.to_dict()))


def manifest_path_for(output: str | os.PathLike) -> Path:
    output = Path(output)
    return output.with_name(output.name + ".manifest.json")


# --- SVG ---------------------------------------------------------------

_W, _H = 640, 420
_MARGIN = 60


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    if hi == lo:
        return [lo]
    raw = (hi - lo) / n
    mag = 10 ** math.floor(math.log10(raw))
    step = min((m * mag for m in (1, 2, 5, 10) if m * mag >= raw), default=raw)
    start = math.ceil(lo / step) * step
    out = []
    v = start
    while v <= hi + 1e-12 * abs(step):
        out.append(v)
        v += step
    return out


class _Frame:
    def __init__(self, xlo, xhi, ylo, yhi):
        if xhi == xlo:
            xlo, xhi = xlo - 1, xhi + 1
        if yhi == ylo:
            pad = abs(ylo) * 1e-3 or 1.0
            ylo, yhi = ylo - pad, yhi + pad
        self.xlo, self.xhi, self.ylo, self.yhi = xlo, xhi, ylo, yhi

    def x(self, v):
        return _MARGIN + (v - self.xlo) / (self.xhi - self.xlo) * (_W - 2 * _MARGIN)

    def y(self, v):
        return _H - _MARGIN - (v - self.ylo) / (self.yhi - self.ylo) * (_H - 2 * _MARGIN)

    def axes(self, xlabel: str, ylabel: str, title: str) -> list[str]:
        parts = [
            f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{_W - 2 * _MARGIN}" '
            f'height="{_H - 2 * _MARGIN}" fill="none" stroke="black"/>',
            f'<text x="{_W / 2}" y="{_MARGIN / 2}" text-anchor="middle" font-size="14">{title}</text>',
            f'<text x="{_W / 2}" y="{_H - 15}" text-anchor="middle" font-size="12">{xlabel}</text>',
            f'<text x="15" y="{_H / 2}" text-anchor="middle" font-size="12" '
            f'transform="rotate(-90 15 {_H / 2})">{ylabel}</text>',
        ]
        for v in _ticks(self.xlo, self.xhi):
            px = self.x(v)
            parts.append(f'<line x1="{px:.2f}" y1="{_H - _MARGIN}" x2="{px:.2f}" y2="{_H - _MARGIN + 5}" stroke="black"/>')
            parts.append(f'<text x="{px:.2f}" y="{_H - _MARGIN + 18}" text-anchor="middle" font-size="10">{v:.4g}</text>')
        for v in _ticks(self.ylo, self.yhi):
            py = self.y(v)
            parts.append(f'<line x1="{_MARGIN - 5}" y1="{py:.2f}" x2="{_MARGIN}" y2="{py:.2f}" stroke="black"/>')
            parts.append(f'<text x="{_MARGIN - 8}" y="{py + 3:.2f}" text-anchor="end" font-size="10">{v:.4g}</text>')
        return parts

    def polyline(self, xs, ys, colour: str, dash: str | None = None) -> str:
        pts = " ".join(f"{self.x(a):.2f},{self.y(b):.2f}" for a, b in zip(xs, ys))
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        return f'<polyline points="{pts}" fill="none" stroke="{colour}" stroke-width="1.5"{extra}/>'


def _svg(parts: list[str]) -> str:
    body = "\n".join(parts)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">\n{body}\n</svg>\n'
    )


def band_svg(table: BandTable) -> str:
    """Two numerical branches and the 2x2 prediction, relative to the unperturbed pair.

    The band between the branches at the row nearest the particle shell is
    shaded as the forbidden interval.
    """
    xs = [r.coordinate for r in table.rows]
    lo = [r.lower for r in table.rows]
    hi = [r.upper for r in table.rows]
    plo = [r.pt_lower for r in table.rows]
    phi = [r.pt_upper for r in table.rows]
    ys = lo + hi + plo + phi
    f = _Frame(min(xs), max(xs), min(ys), max(ys))
    xlabel = "E - E_shell (eV)" if table.edge.axis.value == "momentum" else "cp_z (eV)"
    parts = f.axes(xlabel, "eigenvalue - unperturbed (eV)", f"edge {table.edge.axis.value} = {table.edge.level:.6g} eV")
    row = table.nearest_shell_row()
    y0, y1 = f.y(row.upper), f.y(row.lower)
    parts.append(
        f'<rect x="{_MARGIN}" y="{y0:.2f}" width="{_W - 2 * _MARGIN}" height="{max(y1 - y0, 0.5):.2f}" '
        f'fill="#f4b183" fill-opacity="0.4" stroke="none"/>'
    )
    parts.append(f.polyline(xs, lo, "#1f4e79"))
    parts.append(f.polyline(xs, hi, "#c00000"))
    parts.append(f.polyline(xs, plo, "#1f4e79", "4 3"))
    parts.append(f.polyline(xs, phi, "#c00000", "4 3"))
    return _svg(parts)


def zones_svg(hbar_c_k_gamma: float) -> str:
    """Third-zone edge frame in the (cp_z, E) plane with the light cone."""
    q = hbar_c_k_gamma
    f = _Frame(-3 * q, 3 * q, -3 * q, 3 * q)
    parts = f.axes("cp_z (eV)", "E (eV)", "third-zone edges and light cone")
    parts.append(f.polyline([-3 * q, 3 * q], [-3 * q, 3 * q], "#7f7f7f", "3 3"))
    parts.append(f.polyline([-3 * q, 3 * q], [3 * q, -3 * q], "#7f7f7f", "3 3"))
    for level in (q, -q):
        parts.append(f.polyline([-3 * q, 3 * q], [level, level], "#1f4e79"))
        parts.append(f.polyline([level, level], [-3 * q, 3 * q], "#c00000"))
    for a in (q, -q):
        for b in (q, -q):
            parts.append(f'<circle cx="{f.x(a):.2f}" cy="{f.y(b):.2f}" r="4" fill="black"/>')
    return _svg(parts)
