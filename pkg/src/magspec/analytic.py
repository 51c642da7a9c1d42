"""Exact Dirichlet Laplacian spectra for boxes and disks, and the Weyl law."""

from __future__ import annotations

import itertools
import math

import numpy as np

from .eigensolve import Spectrum
from .errors import InputDataError, NumericalError
from .specfun import bessel_zero, unit_ball_volume

__all__ = ["box_spectrum", "disk_spectrum", "weyl_eigenvalue"]

_MAX_BOX_COUNT = 10**6
_MAX_DISK_COUNT = 10**4
_MAX_ENUMERATION = 5 * 10**7


def box_spectrum(lengths, count: int) -> Spectrum:
    """First eigenvalues pi^2 sum_i (m_i/L_i)^2, m_i >= 1, with multiplicity."""
    lengths = [float(L) for L in lengths]
    d = len(lengths)
    if not 2 <= d <= 5:
        raise InputDataError(f"box dimension must lie in [2, 5], got {d}")
    if any(L <= 0 for L in lengths):
        raise InputDataError(f"box lengths must be positive, got {lengths}")
    count = int(count)
    if not 1 <= count <= _MAX_BOX_COUNT:
        raise InputDataError(f"count must lie in [1, {_MAX_BOX_COUNT}], got {count}")

    measure = math.prod(lengths)
    # initial cap from the Weyl growth rate, grown until enough modes fit
    base = math.pi**2 * sum(1 / L**2 for L in lengths)
    cap = base + 4 * math.pi**2 * unit_ball_volume(d) ** (-2 / d) * measure ** (-2 / d) \
        * (count ** (2 / d) + d)
    while True:
        ranges = [int(math.floor(L * math.sqrt(cap) / math.pi)) for L in lengths]
        total = math.prod(max(r, 1) for r in ranges)
        if total > _MAX_ENUMERATION:
            raise NumericalError(f"box enumeration bound {total} exceeds the supported size")
        if all(r >= 1 for r in ranges):
            grids = np.meshgrid(*[np.arange(1, r + 1) for r in ranges], indexing="ij", sparse=True)
            vals = sum((math.pi**2 / L**2) * g.astype(float) ** 2 for L, g in zip(lengths, grids))
            vals = np.ravel(vals)
            vals = vals[vals <= cap]
            if vals.size >= count:
                vals.sort()
                return Spectrum(d=d, values=vals[:count], source="analytic", measure=measure)
        cap *= 1.5


def disk_spectrum(R: float, count: int) -> Spectrum:
    """First eigenvalues (j_{n,m}/R)^2 of the disk, angular order n >= 1 doubled."""
    R = float(R)
    if R <= 0:
        raise InputDataError(f"disk radius must be positive, got {R}")
    count = int(count)
    if not 1 <= count <= _MAX_DISK_COUNT:
        raise InputDataError(f"count must lie in [1, {_MAX_DISK_COUNT}], got {count}")

    # zeros j <= X number about X^2/4 with multiplicity
    X = 2.0 * math.sqrt(count) + 10.0
    while True:
        vals = []
        for n in itertools.count():
            if bessel_zero(n, 1) > X:
                break
            mult = 1 if n == 0 else 2
            for m in itertools.count(1):
                z = bessel_zero(n, m)
                if z > X:
                    break
                vals.extend([(z / R) ** 2] * mult)
        if len(vals) >= count:
            vals.sort()
            return Spectrum(d=2, values=np.asarray(vals[:count]), source="analytic",
                            measure=math.pi * R**2)
        X *= 1.2


def weyl_eigenvalue(d: int, measure: float, k: int) -> float:
    """Leading-order eigenvalue growth 4 pi^2 v_d^{-2/d} |Omega|^{-2/d} k^{2/d}."""
    d = int(d)
    if d < 2:
        raise InputDataError(f"dimension must be >= 2, got {d}")
    if measure <= 0:
        raise InputDataError(f"measure must be positive, got {measure}")
    k = int(k)
    if k < 1:
        raise InputDataError(f"index must be >= 1, got {k}")
    return 4 * math.pi**2 * unit_ball_volume(d) ** (-2 / d) * measure ** (-2 / d) * k ** (2 / d)
