"""Floating-point cross-check: cyclic Jacobi eigenvalues and cluster counting.

Independent of the exact pipeline; it only ever sees floats.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

DEFAULT_SWEEPS = int(os.environ.get("Q2KIT_JACOBI_SWEEPS", 100))
DEFAULT_GAP = 1e-6


class NoConvergence(RuntimeError):
    pass


@dataclass(frozen=True)
class FloatSpectrum:
    eigenvalues: tuple[float, ...]
    sweeps: int = 0

    def clusters(self, gap: float = DEFAULT_GAP) -> list[tuple[float, int]]:
        """Single-linkage clusters along the sorted list as ``(centroid, size)``."""
        if gap <= 0:
            raise ValueError("gap must be positive")
        groups: list[list[float]] = []
        for x in self.eigenvalues:
            if groups and x - groups[-1][-1] < gap:
                groups[-1].append(x)
            else:
                groups.append([x])
        return [(math.fsum(g) / len(g), len(g)) for g in groups]

    def distinct_count(self, gap: float = DEFAULT_GAP) -> int:
        return len(self.clusters(gap))


def distinct_count(s: FloatSpectrum, gap: float = DEFAULT_GAP) -> int:
    return s.distinct_count(gap)


def eigensolve_symmetric(m, max_sweeps: int = DEFAULT_SWEEPS, tol: float = 1e-12) -> FloatSpectrum:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Pairs are visited in row-major order each sweep, so the result is
    bitwise reproducible.  Stops once the off-diagonal Frobenius norm drops
    below ``tol * |m|_F``.
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    if a.ndim != 2 or a.shape != (n, n):
        raise ValueError("matrix must be square")
    if n and np.max(np.abs(a - a.T)) > 1e-12:
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2
    scale = np.linalg.norm(a)
    trace = np.trace(a)
    threshold = tol * scale

    mask = ~np.eye(n, dtype=bool)

    def off(x):
        return float(np.linalg.norm(x[mask]))

    sweeps = 0
    while off(a) > threshold:
        if sweeps >= max_sweeps:
            raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-150 * abs(diff):
                    # theta would overflow; tan of the rotation angle is ~ apq / diff
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
    vals = np.sort(np.diag(a))
    if abs(vals.sum() - trace) > 1e-9 * max(n, 1):
        raise NoConvergence("eigenvalue sum drifted from the trace")
    return FloatSpectrum(tuple(float(v) for v in vals), sweeps)


def parse_numeric_matrix(text: str) -> np.ndarray:
    """Whitespace grid preceded by a ``rows cols`` header line."""
    lines = [ln for ln in text.strip().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header {lines[0]!r}; expected 'rows cols'")
    rows, cols = int(head[0]), int(head[1])
    data = np.array([[float(t) for t in ln.split()] for ln in lines[1:]], dtype=float)
    if data.shape != (rows, cols) and not (rows == 0 and data.size == 0):
        raise ValueError(f"expected a {rows}x{cols} grid, got {data.shape}")
    return data.reshape(rows, cols)


def format_numeric_matrix(a) -> str:
    a = np.asarray(a, dtype=float)
    lines = [f"{a.shape[0]} {a.shape[1]}"] + [" ".join(repr(float(x)) for x in row) for row in a]
    return "\n".join(lines) + "\n"
