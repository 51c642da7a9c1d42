"""Masked uniform grids, gauge potentials and electric potentials in 2-D.

A grid domain is the set of lattice nodes strictly inside a shape; Dirichlet
conditions are imposed by treating every node outside the mask as zero.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InputDataError

__all__ = [
    "Rectangle",
    "Disk",
    "LShape",
    "Annulus",
    "MaskFile",
    "GridDomain",
    "GaugeSpec",
    "PotentialSpec",
    "build_domain",
    "link_phase",
    "sample_potential",
]


# ---------------------------------------------------------------------------
# shapes

@dataclass(frozen=True)
class Rectangle:
    a: float
    b: float

    def bounding_box(self):
        return (0.0, 0.0, self.a, self.b)

    def contains(self, x, y):
        return (x > 0) & (x < self.a) & (y > 0) & (y < self.b)


@dataclass(frozen=True)
class Disk:
    radius: float

    def bounding_box(self):
        r = self.radius
        return (-r, -r, r, r)

    def contains(self, x, y):
        return x * x + y * y < self.radius**2


@dataclass(frozen=True)
class LShape:
    """[0,a] x [0,b] with the closed cut x cut square removed at the top-right corner."""

    a: float
    b: float
    cut: float

    def bounding_box(self):
        return (0.0, 0.0, self.a, self.b)

    def contains(self, x, y):
        inside = (x > 0) & (x < self.a) & (y > 0) & (y < self.b)
        in_cut = (x >= self.a - self.cut) & (y >= self.b - self.cut)
        return inside & ~in_cut


@dataclass(frozen=True)
class Annulus:
    r_inner: float
    r_outer: float

    def bounding_box(self):
        r = self.r_outer
        return (-r, -r, r, r)

    def contains(self, x, y):
        rr = x * x + y * y
        return (rr > self.r_inner**2) & (rr < self.r_outer**2)


@dataclass(frozen=True)
class MaskFile:
    """CSV of 0/1 rows, row-major: row i is the grid line y = i*h, column j is x = j*h."""

    path: str


Shape = Rectangle | Disk | LShape | Annulus | MaskFile


# ---------------------------------------------------------------------------
# grid domain

@dataclass(frozen=True)
class GridDomain:
    """Uniform grid restricted to the interior of a shape.

    ``mask[ix, iy]`` flags interior nodes; ``index[ix, iy]`` is the interior
    numbering (-1 outside).  Node (ix, iy) sits at
    (origin[0] + ix*h, origin[1] + iy*h).
    """

    h: float
    dims: tuple[int, int]
    origin: tuple[float, float]
    mask: np.ndarray
    index: np.ndarray
    points: np.ndarray  # (n, 2) coordinates of interior nodes

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def measure(self) -> float:
        return self.n * self.h**2

    def node_position(self, k: int) -> tuple[float, float]:
        return (self.points[k, 0], self.points[k, 1])


def _load_csv_array(path: str) -> np.ndarray:
    p = Path(path)
    if not p.is_file():
        raise InputDataError(f"file not found: {path}")
    rows = []
    with p.open(newline="") as fh:
        for row in csv.reader(fh):
            if row:
                rows.append([float(c) for c in row])
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise InputDataError(f"ragged or empty CSV grid: {path}")
    return np.asarray(rows, dtype=float)


def build_domain(shape: Shape, h: float) -> GridDomain:
    """Grid the bounding box of a shape and keep the strictly interior nodes."""
    if not (h > 0):
        raise ValueError(f"grid spacing must be positive, got {h}")

    if isinstance(shape, MaskFile):
        arr = _load_csv_array(shape.path)
        if not np.isin(arr, (0.0, 1.0)).all():
            raise InputDataError(f"mask file must contain only 0/1 entries: {shape.path}")
        # rows are y-lines, columns x-positions
        mask = arr.T.astype(bool)
        if mask[0, :].any() or mask[-1, :].any() or mask[:, 0].any() or mask[:, -1].any():
            raise InputDataError("mask file marks nodes on the bounding-box border as interior")
        nx, ny = mask.shape
        origin = (0.0, 0.0)
    else:
        x0, y0, x1, y1 = shape.bounding_box()
        nx = int(np.floor((x1 - x0) / h + 1e-9)) + 1
        ny = int(np.floor((y1 - y0) / h + 1e-9)) + 1
        xs = x0 + h * np.arange(nx)
        ys = y0 + h * np.arange(ny)
        mask = shape.contains(xs[:, None], ys[None, :])
        origin = (x0, y0)

    n = int(mask.sum())
    if n == 0:
        raise ValueError(f"no interior node for {shape!r} at spacing h={h}")

    index = -np.ones(mask.shape, dtype=np.int64)
    ii, jj = np.nonzero(mask)
    index[ii, jj] = np.arange(n)
    points = np.column_stack([origin[0] + h * ii, origin[1] + h * jj])
    return GridDomain(h=float(h), dims=(mask.shape[0], mask.shape[1]), origin=origin,
                      mask=mask, index=index, points=points)


# ---------------------------------------------------------------------------
# gauge potentials

@dataclass(frozen=True)
class GaugeSpec:
    """Magnetic gauge potential.

    A uniform field B uses the symmetric gauge A = (B/2)(-y, x).  A linear
    gauge shift adds grad chi with chi = c0*x + c1*y + c2*x*y; on its own it
    carries zero magnetic field, combined with ``uniform`` it re-expresses the
    same field in another gauge.
    """

    B: float = 0.0
    chi_coeffs: tuple[float, float, float] = (0.0, 0.0, 0.0)

    @classmethod
    def none(cls) -> "GaugeSpec":
        return cls()

    @classmethod
    def uniform(cls, B: float) -> "GaugeSpec":
        return cls(B=float(B))

    @classmethod
    def linear_gauge_shift(cls, c0: float, c1: float, c2: float = 0.0,
                           B: float = 0.0) -> "GaugeSpec":
        return cls(B=float(B), chi_coeffs=(float(c0), float(c1), float(c2)))

    @property
    def kind(self) -> str:
        if self.chi_coeffs != (0.0, 0.0, 0.0):
            return "linear_gauge_shift"
        return "uniform" if self.B != 0.0 else "none"

    def vector_potential(self, x, y):
        c0, c1, c2 = self.chi_coeffs
        ax = -0.5 * self.B * y + c0 + c2 * y
        ay = 0.5 * self.B * x + c1 + c2 * x
        return ax, ay


def link_phase(gauge: GaugeSpec, p, q, h: float | None = None) -> float:
    """Midpoint-rule phase of the edge p -> q: A(midpoint) . (q - p).

    Exact for linear gauge potentials; antisymmetric under edge reversal.
    When the grid spacing h is given, the nodes must be at distance h.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    d = q - p
    if h is not None and abs(np.hypot(d[0], d[1]) - h) > 1e-9 * h:
        raise ValueError(f"nodes {p} and {q} are not grid-adjacent at spacing {h}")
    mid = 0.5 * (p + q)
    ax, ay = gauge.vector_potential(mid[0], mid[1])
    return float(ax * d[0] + ay * d[1])


# ---------------------------------------------------------------------------
# electric potentials

@dataclass(frozen=True)
class PotentialSpec:
    """Non-negative electric potential: zero, constant, radial quadratic, or grid file."""

    kind: str = "zero"
    c: float = 0.0
    a: float = 0.0
    center: tuple[float, float] = (0.0, 0.0)
    path: str | None = None

    @classmethod
    def zero(cls) -> "PotentialSpec":
        return cls()

    @classmethod
    def constant(cls, c: float) -> "PotentialSpec":
        if c < 0:
            raise ValueError(f"constant potential must be non-negative, got {c}")
        return cls(kind="constant", c=float(c))

    @classmethod
    def radial_quadratic(cls, a: float, center=(0.0, 0.0)) -> "PotentialSpec":
        if a < 0:
            raise ValueError(f"quadratic coefficient must be non-negative, got {a}")
        return cls(kind="radial_quadratic", a=float(a), center=(float(center[0]), float(center[1])))

    @classmethod
    def grid_file(cls, path: str) -> "PotentialSpec":
        return cls(kind="grid_file", path=str(path))

    def sample_on(self, dom: GridDomain) -> np.ndarray:
        """Potential values at all interior nodes of a domain."""
        if self.kind == "zero":
            return np.zeros(dom.n)
        if self.kind == "constant":
            return np.full(dom.n, self.c)
        if self.kind == "radial_quadratic":
            dx = dom.points[:, 0] - self.center[0]
            dy = dom.points[:, 1] - self.center[1]
            return self.a * (dx * dx + dy * dy)
        if self.kind == "grid_file":
            arr = _load_csv_array(self.path)
            vals = arr.T  # rows are y-lines, same layout as mask files
            if vals.shape != dom.dims:
                raise InputDataError(
                    f"potential grid {vals.shape} does not match domain grid {dom.dims}"
                )
            if (vals < 0).any():
                raise InputDataError("grid-file potential contains negative values")
            ii, jj = np.nonzero(dom.mask)
            return vals[ii, jj]
        raise ValueError(f"unknown potential kind {self.kind!r}")


def sample_potential(pot: PotentialSpec, point, dom: GridDomain | None = None) -> float:
    """Potential value at a single point; grid-file potentials require the domain."""
    x, y = float(point[0]), float(point[1])
    if pot.kind == "zero":
        return 0.0
    if pot.kind == "constant":
        return pot.c
    if pot.kind == "radial_quadratic":
        return pot.a * ((x - pot.center[0]) ** 2 + (y - pot.center[1]) ** 2)
    if pot.kind == "grid_file":
        if dom is None:
            raise ValueError("grid-file potentials are defined at grid nodes; pass the domain")
        ix = (x - dom.origin[0]) / dom.h
        iy = (y - dom.origin[1]) / dom.h
        if abs(ix - round(ix)) > 1e-9 or abs(iy - round(iy)) > 1e-9:
            raise ValueError(f"point {point} is not a grid node")
        vals = pot.sample_on(dom)
        k = dom.index[int(round(ix)), int(round(iy))]
        if k < 0:
            raise ValueError(f"point {point} is not an interior node")
        return float(vals[k])
    raise ValueError(f"unknown potential kind {pot.kind!r}")
