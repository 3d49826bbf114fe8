"""Upper bounds for the spectral radius driven by the degree sequence alone.

The central family is ``phi``: for a level l, the bound

    phi_l = (d_l - 1 + sqrt((d_l + 1)^2 + 4 * sum_{i<l} (d_i - d_l))) / 2.

It refines the classical one-number bounds (max degree, Brualdi-Hoffman,
Stanley, Hong, Hong-Shu-Fang) and the Shu-Wu per-level bound, all of which
are implemented here as well.  Every radicand and every comparison between
phi values is formed in exact integer arithmetic; floats appear only in the
final square root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph_core import DegreeSequence

GREATER, EQUAL, LESS = 1, 0, -1

#: Levels are 1-based throughout: level l refers to the l-th largest degree.


def _check_level(seq: DegreeSequence, level: int) -> None:
    if not 1 <= level <= seq.n:
        raise ValueError(f"level {level} out of range 1..{seq.n}")


def phi(seq: DegreeSequence, level: int) -> float:
    """Degree-prefix bound at a level: uses the top ``level`` degrees.

    The excess sum over the prefix, sum_{i<level} (d_i - d_level), equals
    prefix[level-1] - (level-1)*d_level and is kept integral, so the only
    rounding is the single square root.  At level 1 the sum is empty and
    phi equals the maximum degree.
    """
    _check_level(seq, level)
    d = seq.degrees[level - 1]
    excess = seq.prefix[level - 1] - (level - 1) * d
    return (d - 1 + math.sqrt((d + 1) * (d + 1) + 4 * excess)) / 2


def bound_shu_wu(seq: DegreeSequence, level: int) -> float:
    """Shu-Wu bound at a level: overestimates every prefix gap by d_1 - d_level."""
    _check_level(seq, level)
    d = seq.degrees[level - 1]
    gap = (level - 1) * (seq.degrees[0] - d)
    return (d - 1 + math.sqrt((d + 1) * (d + 1) + 4 * gap)) / 2


def bound_hong_shu_fang(seq: DegreeSequence) -> float:
    """Hong-Shu-Fang bound from the minimum degree and edge count.

    Coincides with phi at level n: the full-prefix excess telescopes to
    2m - n*d_n.
    """
    d = seq.degrees[-1]
    n = seq.n
    return (d - 1 + math.sqrt((d + 1) * (d + 1) + 4 * (2 * seq.m - n * d))) / 2


def bound_hong(seq: DegreeSequence) -> float:
    """Hong's bound sqrt(2m - n + 1); tight on stars and complete graphs."""
    return math.sqrt(2 * seq.m - seq.n + 1)


def bound_stanley(m: int) -> float:
    """Stanley's bound (-1 + sqrt(1 + 8m)) / 2 from the edge count alone."""
    if m < 0:
        raise ValueError(f"edge count must be nonnegative, got {m}")
    return (-1 + math.sqrt(1 + 8 * m)) / 2


def bound_brualdi_hoffman(m: int) -> float:
    """Brualdi-Hoffman bound: k-1 for the smallest k with m <= k(k-1)/2."""
    if m < 0:
        raise ValueError(f"edge count must be nonnegative, got {m}")
    k = 1
    while k * (k - 1) // 2 < m:
        k += 1
    return float(k - 1)


def bound_max_degree(seq: DegreeSequence) -> float:
    """Maximum row-sum bound: the largest degree."""
    return float(seq.degrees[0])


def compare_step(seq: DegreeSequence, s: int) -> int:
    """Exact ordering of phi_s versus phi_{s+1}: GREATER, EQUAL, or LESS.

    Equal degrees force equal phi values.  Otherwise the ordering of the
    two phi values matches the ordering of prefix[s] against s(s-1), an
    integer test, so no floating subtraction is involved.
    """
    if not 1 <= s <= seq.n - 1:
        raise ValueError(f"step index {s} out of range 1..{seq.n - 1}")
    if seq.degrees[s - 1] == seq.degrees[s]:
        return EQUAL
    lhs = seq.prefix[s]
    rhs = s * (s - 1)
    return GREATER if lhs > rhs else (EQUAL if lhs == rhs else LESS)


def min_phi(seq: DegreeSequence) -> tuple[float, int | None, frozenset[int]]:
    """Minimum of the phi sequence located structurally, without a scan.

    The pivot is the smallest level l in [3, n] whose full prefix satisfies
    prefix[l] < l(l-1); past it the sequence never decreases again, so
    phi_pivot is minimal.  A level j attains the minimum iff d_j equals
    d_pivot, or d_j equals d_{pivot-1} when prefix[pivot-1] equals
    (pivot-1)(pivot-2) exactly.  When no level qualifies (complete and
    near-complete sequences) the sequence is non-increasing, the minimum is
    phi_n, and the levels with the last degree attain it.

    Returns (value, pivot or None, attaining levels).
    """
    n = seq.n
    degrees = seq.degrees
    prefix = seq.prefix
    pivot = None
    for level in range(3, n + 1):
        if prefix[level] < level * (level - 1):
            pivot = level
            break
    if pivot is None:
        value = phi(seq, n)
        d_min = degrees[-1]
        levels = frozenset(j for j in range(1, n + 1) if degrees[j - 1] == d_min)
        return value, None, levels
    value = phi(seq, pivot)
    d_piv = degrees[pivot - 1]
    attain = {j for j in range(1, n + 1) if degrees[j - 1] == d_piv}
    if prefix[pivot - 1] == (pivot - 1) * (pivot - 2):
        d_prev = degrees[pivot - 2]
        attain.update(j for j in range(1, n + 1) if degrees[j - 1] == d_prev)
    return value, pivot, frozenset(attain)


@dataclass(frozen=True, slots=True)
class PhiSequence:
    """All n phi values with the location of their minimum.

    ``argmin_levels`` and ``pivot`` come from the exact integer tests in
    :func:`min_phi`, not from comparing floats.
    """

    values: tuple[float, ...]
    argmin_levels: frozenset[int]
    pivot: int | None

    @property
    def minimum(self) -> float:
        return self.values[min(self.argmin_levels) - 1]


def phi_sequence(seq: DegreeSequence) -> PhiSequence:
    """Evaluate phi at every level in one prefix-sum pass."""
    values = tuple(phi(seq, level) for level in range(1, seq.n + 1))
    _, pivot, argmin_levels = min_phi(seq)
    return PhiSequence(values, argmin_levels, pivot)


def is_graphical(degrees: list[int] | tuple[int, ...]) -> bool:
    """Erdos-Gallai test: is the sequence the degree sequence of some graph?"""
    ds = sorted(degrees, reverse=True)
    n = len(ds)
    if n == 0 or (ds and ds[-1] < 0):
        return False
    if sum(ds) % 2:
        return False
    if ds and ds[0] >= n:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += ds[k - 1]
        tail = sum(min(d, k) for d in ds[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


@dataclass(frozen=True, slots=True)
class BoundReport:
    """Every bound for one input, with the spectral radius when available."""

    n: int
    m: int
    rho: float | None
    phi_at: tuple[float, ...]
    phi_min: float
    pivot: int | None
    argmin_levels: frozenset[int]
    shu_wu: tuple[float, ...]
    hong_shu_fang: float
    hong: float
    stanley: float
    brualdi_hoffman: float
    max_degree: float
    slack_min: float | None


def bound_report(seq: DegreeSequence, rho: float | None = None) -> BoundReport:
    """Assemble all bounds for a degree sequence; ``rho`` comes from an oracle."""
    phis = phi_sequence(seq)
    return BoundReport(
        n=seq.n,
        m=seq.m,
        rho=rho,
        phi_at=phis.values,
        phi_min=phis.minimum,
        pivot=phis.pivot,
        argmin_levels=phis.argmin_levels,
        shu_wu=tuple(bound_shu_wu(seq, level) for level in range(1, seq.n + 1)),
        hong_shu_fang=bound_hong_shu_fang(seq),
        hong=bound_hong(seq),
        stanley=bound_stanley(seq.m),
        brualdi_hoffman=bound_brualdi_hoffman(seq.m),
        max_degree=bound_max_degree(seq),
        slack_min=(phis.minimum - rho) if rho is not None else None,
    )
