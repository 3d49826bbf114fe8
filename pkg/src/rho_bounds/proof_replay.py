"""Runtime certificate for the degree-prefix bound.

The bound's proof rescales the adjacency matrix by a diagonal similarity
U = diag(x_1, ..., x_{l-1}, 1, ..., 1) and shows every row sum of
B = U^-1 A U is at most phi_l; the row-sum bound for nonnegative matrices
then gives rho <= phi_l.  This module executes that argument on a concrete
graph: it builds the scaling vector, accumulates the row sums of B straight
from the adjacency relation, and fails loudly if any row exceeds the bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import phi
from .graph_core import DegreeSequence, Graph

ROW_SUM_TOL = 1e-9


class CertificateViolationError(RuntimeError):
    """A scaled row sum exceeded the bound.  This would falsify the
    implementation (or its arithmetic), not the underlying mathematics."""

    def __init__(self, level: int, row: int, row_sum: float, bound: float):
        super().__init__(
            f"row {row} has scaled sum {row_sum!r} > bound {bound!r} "
            f"at level {level}"
        )
        self.level = level
        self.row = row
        self.row_sum = row_sum
        self.bound = bound


@dataclass(frozen=True, slots=True)
class ScalingCertificate:
    """Scaling vector and the row sums it produces, all below ``phi``.

    ``x`` has length level-1 and ``row_sums`` is indexed in the relabeled
    (degree-sorted) vertex order.
    """

    level: int
    x: tuple[float, ...]
    row_sums: tuple[float, ...]
    phi: float
    max_row_sum: float


def scaling_vector(seq: DegreeSequence, level: int) -> tuple[float, ...]:
    """Scaling factors x_i = 1 + (d_i - d_level) / (phi_level + 1), i < level.

    Each factor is at least 1 because the degrees are sorted.  Empty at
    level 1.
    """
    value = phi(seq, level)  # validates the level
    d_level = seq.degrees[level - 1]
    return tuple(
        1.0 + (seq.degrees[i] - d_level) / (value + 1.0) for i in range(level - 1)
    )


def row_sums_scaled(g: Graph, level: int, tol: float = ROW_SUM_TOL) -> ScalingCertificate:
    """Row sums of the rescaled adjacency matrix, asserted against the bound.

    Vertices are relabeled into non-increasing degree order (ties broken by
    original index, so runs are reproducible).  Row i of B sums
    a_ik * w_k / w_i where w is the scaling vector padded with ones; the
    sums are accumulated directly from the neighbor lists without forming B.
    """
    n = g.n
    order = sorted(range(n), key=lambda v: (-len(g.neighbors[v]), v))
    seq = DegreeSequence.from_degrees(len(g.neighbors[v]) for v in order)
    value = phi(seq, level)
    x = scaling_vector(seq, level)

    position = [0] * n
    for pos, v in enumerate(order):
        position[v] = pos
    weight = [1.0] * n
    for pos in range(level - 1):
        weight[pos] = x[pos]

    row_sums = [0.0] * n
    for pos, v in enumerate(order):
        acc = 0.0
        for u in g.neighbors[v]:
            acc += weight[position[u]]
        row_sums[pos] = acc / weight[pos]

    max_row_sum = max(row_sums) if row_sums else 0.0
    for pos, r in enumerate(row_sums):
        if r > value + tol:
            raise CertificateViolationError(level, pos + 1, r, value)
    return ScalingCertificate(level, x, tuple(row_sums), value, max_row_sum)
