"""Perron eigenvalue of nonnegative integer matrices.

Power iteration runs on ``M + I``, which is primitive whenever ``M`` is
irreducible.  For a positive iterate ``x`` the Collatz-Wielandt quotients
``min_i (Mx)_i / x_i`` and ``max_i (Mx)_i / x_i`` bracket the spectral radius,
so when the bracket closes below ``tol`` the estimate is certified.  Reducible
inputs may never close the bracket; there the Rayleigh-style norm ratio is
used once it stabilises, and the result is flagged as uncertified.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NonConvergence

__all__ = ["PerronEstimate", "perron_eigenvalue"]

ITERATION_CAP = 100_000


@dataclass(frozen=True)
class PerronEstimate:
    value: float
    lower: float
    upper: float
    certified: bool
    iterations: int


def perron_eigenvalue(matrix, tol: float = 1e-9, max_iter: int = ITERATION_CAP) -> PerronEstimate:
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("square matrix required")
    if (m < 0).any():
        raise ValueError("nonnegative matrix required")
    n = m.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    shifted = m + np.eye(n)
    x = np.ones(n) / np.sqrt(n)
    prev = None
    stable = 0
    for it in range(1, max_iter + 1):
        y = shifted @ x
        ratios = (m @ x) / x
        lo, hi = float(ratios.min()), float(ratios.max())
        if hi - lo < tol:
            return PerronEstimate((lo + hi) / 2, lo, hi, True, it)
        norm = float(np.linalg.norm(y))
        est = norm - 1.0
        if prev is not None and abs(est - prev) < tol / 10:
            stable += 1
            if stable >= 5:
                return PerronEstimate(est, lo, hi, False, it)
        else:
            stable = 0
        prev = est
        x = y / norm
    raise NonConvergence(f"power iteration did not converge in {max_iter} steps")
