"""Distance matrices, the distance signless Laplacian, and its spectrum.

Matrices are ``numpy`` float64 arrays.  Symmetric spectra come from a
cyclic Jacobi eigensolver; dominant eigenvalues of nonnegative
(nonsymmetric) quotient matrices come from power iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph_core import Graph, GraphError
from .thresholds import characteristic_polynomial, largest_real_root

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
EQUITABLE_TOL = 1e-9
PERRON_TOL = 1e-12
PERRON_MAX_ITER = 10**6
PERRON_CROSSCHECK_TOL = 1e-8


class DisconnectedGraphError(GraphError):
    """Distances are undefined on a disconnected graph."""


class ConvergenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order; ``radius`` is the first one."""

    eigenvalues: tuple[float, ...]

    @property
    def radius(self) -> float:
        return self.eigenvalues[0]

    def __len__(self) -> int:
        return len(self.eigenvalues)


@dataclass(frozen=True)
class VertexPartition:
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, blocks: Sequence[Sequence[int]], order: int) -> VertexPartition:
        seen: set[int] = set()
        out = []
        for block in blocks:
            if not block:
                raise ValueError("partition blocks must be non-empty")
            b = tuple(block)
            if seen.intersection(b) or len(set(b)) != len(b):
                raise ValueError("partition blocks overlap")
            seen.update(b)
            out.append(b)
        if seen != set(range(order)):
            raise ValueError(f"partition does not cover 0..{order - 1}")
        return cls(tuple(out))


@dataclass(frozen=True)
class QuotientView:
    matrix: np.ndarray
    equitable: bool
    max_row_sum_deviation: float


def as_square_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Shortest-path distances by one bitmask BFS per source."""
    n = g.order
    adj = g.adjacency
    full = g.full_mask
    d = np.zeros((n, n))
    for src in range(n):
        row = d[src]
        seen = 1 << src
        frontier = seen
        level = 0
        while frontier:
            level += 1
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= adj[low.bit_length() - 1]
                frontier ^= low
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
            w = nxt
            while w:
                low = w & -w
                row[low.bit_length() - 1] = level
                w ^= low
        if seen != full:
            raise DisconnectedGraphError("graph is disconnected; distances are undefined")
    return d


def transmissions(d) -> np.ndarray:
    return as_square_matrix(d).sum(axis=1)


def dsl_matrix(g: Graph) -> np.ndarray:
    """``Diag(Tr) + D`` for a connected graph."""
    d = all_pairs_distances(g)
    return d + np.diag(d.sum(axis=1))


def eigenvalues_symmetric(m, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> Spectrum:
    """Full spectrum of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm is at most
    ``tol * ||m||_F``.
    """
    a_np = as_square_matrix(m)
    n = a_np.shape[0]
    scale = float(np.max(np.abs(a_np)))
    if np.max(np.abs(a_np - a_np.T)) > 1e-12 * scale:
        raise ValueError("matrix is not symmetric")
    a = ((a_np + a_np.T) / 2).tolist()
    fro = math.sqrt(sum(x * x for row in a for x in row))
    target = (tol * fro) ** 2
    for _ in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            row = a[i]
            for j in range(i + 1, n):
                off += row[j] * row[j]
        if 2 * off <= target:
            values = sorted((a[i][i] for i in range(n)), reverse=True)
            return Spectrum(tuple(values))
        for p in range(n - 1):
            ap = a[p]
            for q in range(p + 1, n):
                apq = ap[q]
                if apq == 0.0:
                    continue
                aq = a[q]
                theta = (aq[q] - ap[p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = ap[k]
                    akq = aq[k]
                    ap[k] = c * akp - s * akq
                    aq[k] = s * akp + c * akq
                for row in a:
                    akp = row[p]
                    akq = row[q]
                    row[p] = c * akp - s * akq
                    row[q] = s * akp + c * akq
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def dsl_spectrum(g: Graph) -> Spectrum:
    return eigenvalues_symmetric(dsl_matrix(g))


def dsl_radius(g: Graph) -> float:
    return dsl_spectrum(g).radius


def rayleigh(m, x) -> float:
    a = as_square_matrix(m)
    v = np.asarray(x, dtype=float)
    if v.shape != (a.shape[0],):
        raise ValueError("vector length does not match the matrix order")
    norm = float(v @ v)
    if norm == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    return float(v @ a @ v) / norm


def quotient_matrix(m, partition: VertexPartition | Sequence[Sequence[int]],
                    tol: float = EQUITABLE_TOL) -> QuotientView:
    """Block-average row sums of ``m``; equitable when every block has constant row sums."""
    a = as_square_matrix(m)
    if not isinstance(partition, VertexPartition):
        partition = VertexPartition.of(partition, a.shape[0])
    elif {v for b in partition.blocks for v in b} != set(range(a.shape[0])):
        raise ValueError("partition does not match the matrix order")
    blocks = [list(b) for b in partition.blocks]
    t = len(blocks)
    b = np.zeros((t, t))
    deviation = 0.0
    for i, rows in enumerate(blocks):
        for j, cols in enumerate(blocks):
            sums = a[np.ix_(rows, cols)].sum(axis=1)
            b[i, j] = sums.mean()
            deviation = max(deviation, float(sums.max() - sums.min()))
    return QuotientView(b, deviation <= tol, deviation)


def perron_root(m, tol: float = PERRON_TOL, max_iter: int = PERRON_MAX_ITER) -> float:
    """Dominant eigenvalue of a nonnegative matrix by power iteration from the ones vector.

    Stops when successive Rayleigh quotients ``x^T A x / x^T x`` agree to
    ``tol`` relative.  For order <= 4 the result is checked against the largest
    real root of the characteristic polynomial.
    """
    a = as_square_matrix(m)
    if np.any(a < 0):
        raise ValueError("perron_root needs a nonnegative matrix")
    n = a.shape[0]
    x = np.ones(n) / math.sqrt(n)
    prev = None
    for _ in range(max_iter):
        y = a @ x
        value = float(x @ y)
        if prev is not None and abs(value - prev) < tol * abs(value):
            break
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            value = 0.0
            break
        prev = value
        x = y / norm
    else:
        raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")
    if n <= 4:
        exact = largest_real_root(characteristic_polynomial(a.tolist()))
        if abs(exact - value) > PERRON_CROSSCHECK_TOL * max(1.0, abs(exact)):
            raise ConvergenceError(
                f"power iteration gave {value!r} but the characteristic root is {exact!r}")
    return value
