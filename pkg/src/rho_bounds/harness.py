"""Verification campaigns over graph corpora.

A campaign streams graphs from a source (exhaustive enumeration or a file),
filters to connected graphs, runs the enabled checks on each, and aggregates
violations deterministically: results are merged in source order no matter
how many worker processes run, so identical configurations produce
byte-identical reports.
"""

from __future__ import annotations

import math
import multiprocessing
import time
from dataclasses import dataclass, field

from .bounds import (
    GREATER,
    LESS,
    bound_brualdi_hoffman,
    bound_hong,
    bound_hong_shu_fang,
    bound_shu_wu,
    bound_stanley,
    compare_step,
    phi_sequence,
)
from .equality import DOMINATING, REGULAR, classify_equality, tight_levels
from .graph_core import (
    Graph,
    GraphParseError,
    degree_sequence,
    encode_graph6,
    enumerate_connected,
    enumeration_space,
    is_connected,
    parse_edge_list,
    parse_graph6,
)
from .proof_replay import CertificateViolationError, row_sums_scaled
from .spectral_oracle import CHARPOLY_MAX_N, spectral_radius_charpoly, spectral_radius_power

#: Check names in canonical (report) order.  'oracle' cross-validates the
#: two spectral methods and is only meaningful for graphs small enough for
#: the exact characteristic polynomial.
CHECKS = ("soundness", "dominance", "equality", "unimodality", "replay", "oracle")

CSV_COLUMNS = (
    "id", "n", "m", "rho", "phi_min", "pivot", "phi_n", "hong_shu_fang",
    "hong", "stanley", "brualdi_hoffman", "max_degree", "cert_kind",
    "cert_t", "slack_min",
)

DEFAULT_SOUNDNESS_TOL = 1e-9
DEFAULT_EQUALITY_TOL = 1e-6
DOMINANCE_TOL = 1e-12
COMPARATOR_TOL = 1e-9
ORACLE_TOL = 1e-9
TIGHT_TOL = 1e-6

_ENUM_CHUNK = 1 << 15
_FILE_CHUNK = 5000


@dataclass(frozen=True)
class CampaignConfig:
    """What to verify: source, checks, tolerances, and output shape.

    ``tol`` of None means per-check defaults (1e-9 for soundness and
    replay, 1e-6 for equality); a given value overrides all of them.
    """

    source: str                       # 'enumerate' | 'graph6' | 'edgelist'
    n: int | None = None
    path: str | None = None
    checks: tuple[str, ...] = CHECKS
    tol: float | None = None
    output_format: str = "csv"
    jobs: int = 1
    allow_large: bool = False


@dataclass
class CampaignResult:
    graphs_checked: int = 0
    skipped_disconnected: int = 0
    violations: list[tuple[str, str, str]] = field(default_factory=list)
    tight_instances: dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0


@dataclass(frozen=True)
class _CheckParams:
    checks: tuple[str, ...]
    soundness_tol: float
    equality_tol: float
    replay_tol: float
    want_rows: bool


def _params_for(cfg: CampaignConfig, want_rows: bool) -> _CheckParams:
    return _CheckParams(
        checks=cfg.checks,
        soundness_tol=cfg.tol if cfg.tol is not None else DEFAULT_SOUNDNESS_TOL,
        equality_tol=cfg.tol if cfg.tol is not None else DEFAULT_EQUALITY_TOL,
        replay_tol=cfg.tol if cfg.tol is not None else DEFAULT_SOUNDNESS_TOL,
        want_rows=want_rows,
    )


def _validate_config(cfg: CampaignConfig) -> None:
    if cfg.source not in ("enumerate", "graph6", "edgelist"):
        raise ValueError(f"unknown source {cfg.source!r}")
    if cfg.source == "enumerate":
        if cfg.n is None:
            raise ValueError("enumerate source requires n")
    elif cfg.path is None:
        raise ValueError(f"{cfg.source} source requires a path")
    unknown = [c for c in cfg.checks if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; valid checks: {CHECKS}")
    if cfg.tol is not None and cfg.tol <= 0:
        raise ValueError(f"tol must be positive, got {cfg.tol}")
    if cfg.jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {cfg.jobs}")
    if cfg.output_format not in ("csv", "json"):
        raise ValueError(f"unknown output format {cfg.output_format!r}")


# ---------------------------------------------------------------------------
# per-graph examination
# ---------------------------------------------------------------------------

def _examine_graph(g: Graph, p: _CheckParams):
    """Run the enabled checks on one connected graph.

    Returns (row or None, violations, names of checks tight here).
    """
    violations: list[tuple[str, str, str]] = []
    tight: list[str] = []
    seq = degree_sequence(g)
    n = seq.n
    phis = phi_sequence(seq)
    values = phis.values
    checks = p.checks

    gid: str | None = None

    def ident() -> str:
        nonlocal gid
        if gid is None:
            gid = encode_graph6(g)
        return gid

    need_rho = p.want_rows or any(
        c in checks for c in ("soundness", "equality", "replay", "oracle")
    )
    rho = spectral_radius_power(g).rho if need_rho else None

    cert = classify_equality(seq) if n >= 2 else None
    vmin = min(values)

    if "soundness" in checks:
        if rho > vmin + p.soundness_tol:
            level = values.index(vmin) + 1
            violations.append(
                (ident(), "soundness",
                 f"rho={rho!r} exceeds phi_{level}={vmin!r} by {rho - vmin!r}")
            )
        if abs(rho - vmin) <= TIGHT_TOL:
            tight.append("soundness")

    if "dominance" in checks:
        tight_here = False
        d1 = seq.degrees[0]
        for level in range(1, n + 1):
            sw = bound_shu_wu(seq, level)
            v = values[level - 1]
            if v > sw + DOMINANCE_TOL:
                violations.append(
                    (ident(), "dominance",
                     f"phi_{level}={v!r} exceeds shu_wu_{level}={sw!r}")
                )
            # at levels with d_level = d_1 the two formulas coincide; a tie
            # is only notable where the prefix sum could have been smaller
            if v == sw and seq.degrees[level - 1] < d1:
                tight_here = True
        hsf = bound_hong_shu_fang(seq)
        if abs(values[-1] - hsf) > math.ulp(max(abs(hsf), 1.0)):
            violations.append(
                (ident(), "dominance",
                 f"phi_n={values[-1]!r} != hong_shu_fang={hsf!r}")
            )
        if tight_here:
            tight.append("dominance")

    if "equality" in checks and cert is not None:
        numeric = tight_levels(values, rho, p.equality_tol)
        if numeric != cert.predicted_tight_levels:
            violations.append(
                (ident(), "equality",
                 f"predicted {sorted(cert.predicted_tight_levels)} "
                 f"({cert.kind}, t={cert.t}) but numeric tight set is "
                 f"{sorted(numeric)} at rho={rho!r}")
            )
        if cert.predicted_tight_levels:
            tight.append("equality")

    if "unimodality" in checks:
        seen_less = False
        for s in range(1, n):
            ordering = compare_step(seq, s)
            if ordering == LESS:
                seen_less = True
            elif ordering == GREATER and seen_less:
                violations.append(
                    (ident(), "unimodality",
                     f"phi sequence falls at step {s} after having risen")
                )
            diff = values[s - 1] - values[s]
            float_ordering = (
                0 if abs(diff) <= COMPARATOR_TOL else (GREATER if diff > 0 else LESS)
            )
            if float_ordering != ordering:
                violations.append(
                    (ident(), "unimodality",
                     f"integer comparator says {ordering} at step {s} but "
                     f"float difference is {diff!r}")
                )
        scan = frozenset(
            j for j in range(1, n + 1) if values[j - 1] <= vmin + COMPARATOR_TOL
        )
        if scan != phis.argmin_levels or abs(phis.minimum - vmin) > COMPARATOR_TOL:
            violations.append(
                (ident(), "unimodality",
                 f"structural argmin {sorted(phis.argmin_levels)} "
                 f"(pivot {phis.pivot}) != scanned argmin {sorted(scan)}")
            )
        if phis.pivot is None:
            tight.append("unimodality")  # counts pivot-fallback inputs

    if "replay" in checks:
        tight_here = False
        for level in range(1, n + 1):
            try:
                rcert = row_sums_scaled(g, level, p.replay_tol)
            except CertificateViolationError as exc:
                violations.append((ident(), "replay", str(exc)))
                continue
            if rho > rcert.max_row_sum + p.replay_tol:
                violations.append(
                    (ident(), "replay",
                     f"rho={rho!r} exceeds max scaled row sum "
                     f"{rcert.max_row_sum!r} at level {level}")
                )
            # the scaling saturates the top row at every level by
            # construction; a certificate is only notably tight when every
            # row meets the bound, which forces rho(B) = phi at this level
            if all(abs(r - rcert.phi) <= TIGHT_TOL for r in rcert.row_sums):
                tight_here = True
            if cert is not None and level in cert.predicted_tight_levels:
                if cert.kind == REGULAR:
                    rows = enumerate(rcert.row_sums, start=1)
                else:  # DOMINATING with level >= t
                    rows = (
                        (i, r) for i, r in enumerate(rcert.row_sums, start=1)
                        if i >= level
                    )
                for i, r in rows:
                    if abs(r - rcert.phi) > TIGHT_TOL:
                        violations.append(
                            (ident(), "replay",
                             f"predicted-tight level {level} ({cert.kind}) has "
                             f"row {i} sum {r!r} != phi {rcert.phi!r}")
                        )
        if tight_here:
            tight.append("replay")

    if "oracle" in checks and n <= CHARPOLY_MAX_N:
        cp = spectral_radius_charpoly(g)
        if abs(cp.rho - rho) > ORACLE_TOL:
            violations.append(
                (ident(), "oracle",
                 f"power {rho!r} vs charpoly {cp.rho!r} differ by "
                 f"{abs(cp.rho - rho)!r}")
            )
        avg = 2 * seq.m / n
        d1 = seq.degrees[0]
        if rho < avg - ORACLE_TOL or rho > d1 + ORACLE_TOL:
            violations.append(
                (ident(), "oracle",
                 f"rho={rho!r} outside bracket [{avg!r}, {d1}]")
            )
        if abs(cp.rho - rho) <= 1e-12:
            tight.append("oracle")

    row = None
    if p.want_rows:
        row = (
            ident(), n, seq.m, rho, phis.minimum, phis.pivot, values[-1],
            bound_hong_shu_fang(seq), bound_hong(seq), bound_stanley(seq.m),
            bound_brualdi_hoffman(seq.m), float(seq.degrees[0]),
            cert.kind if cert is not None else "",
            cert.t if cert is not None else None,
            (phis.minimum - rho) if rho is not None else None,
        )
    return row, violations, tight


# ---------------------------------------------------------------------------
# chunked execution
# ---------------------------------------------------------------------------

def _make_tasks(cfg: CampaignConfig, params: _CheckParams) -> list[dict]:
    if cfg.source == "enumerate":
        total = enumeration_space(cfg.n)
        tasks = []
        for start in range(0, total, _ENUM_CHUNK):
            tasks.append({
                "kind": "enumerate",
                "n": cfg.n,
                "allow_large": cfg.allow_large,
                "range": (start, min(start + _ENUM_CHUNK, total)),
                "params": params,
            })
        return tasks
    if cfg.source == "graph6":
        with open(cfg.path, "r", encoding="ascii") as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip()]
        if lines and lines[0].strip() == ">>graph6<<":
            lines = lines[1:]
        tasks = []
        for start in range(0, len(lines), _FILE_CHUNK):
            tasks.append({
                "kind": "graph6",
                "lines": lines[start:start + _FILE_CHUNK],
                "first_record": start + 1,
                "params": params,
            })
        return tasks or [{"kind": "graph6", "lines": [], "first_record": 1,
                          "params": params}]
    with open(cfg.path, "r", encoding="ascii") as fh:
        text = fh.read()
    return [{"kind": "edgelist", "text": text, "params": params}]


def _task_graphs(task: dict):
    """Yield (graph, known_connected) for a task."""
    if task["kind"] == "enumerate":
        start, stop = task["range"]
        for g in enumerate_connected(
            task["n"], allow_large=task["allow_large"], mask_range=(start, stop)
        ):
            yield g, True
    elif task["kind"] == "graph6":
        for offset, line in enumerate(task["lines"]):
            record = task["first_record"] + offset
            try:
                yield parse_graph6(line), False
            except GraphParseError as exc:
                raise GraphParseError(f"record {record}: {exc}") from exc
    else:
        yield parse_edge_list(task["text"]), False


def _run_chunk(task: dict) -> dict:
    params: _CheckParams = task["params"]
    rows: list | None = [] if params.want_rows else None
    violations: list[tuple[str, str, str]] = []
    tight_counts = dict.fromkeys(params.checks, 0)
    checked = 0
    skipped = 0
    for g, known_connected in _task_graphs(task):
        if not known_connected and not is_connected(g):
            skipped += 1
            continue
        checked += 1
        row, viols, tight = _examine_graph(g, params)
        if rows is not None:
            rows.append(row)
        violations.extend(viols)
        for name in tight:
            tight_counts[name] += 1
    return {
        "rows": rows,
        "violations": violations,
        "checked": checked,
        "skipped": skipped,
        "tights": tight_counts,
    }


def run_campaign(cfg: CampaignConfig, row_sink=None) -> CampaignResult:
    """Run every enabled check over the configured source.

    ``row_sink`` receives one per-graph row tuple (see CSV_COLUMNS) in
    source order; pass None to skip row generation entirely.  Violations
    and counters are aggregated in source order regardless of ``jobs``.
    """
    _validate_config(cfg)
    started = time.perf_counter()
    params = _params_for(cfg, want_rows=row_sink is not None)
    tasks = _make_tasks(cfg, params)
    result = CampaignResult(tight_instances=dict.fromkeys(cfg.checks, 0))

    if cfg.jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(cfg.jobs) as pool:
            outcomes = pool.imap(_run_chunk, tasks)
            _merge(result, outcomes, row_sink)
    else:
        _merge(result, map(_run_chunk, tasks), row_sink)

    result.wall_time = time.perf_counter() - started
    return result


def _merge(result: CampaignResult, outcomes, row_sink) -> None:
    for out in outcomes:
        if row_sink is not None and out["rows"] is not None:
            for row in out["rows"]:
                row_sink(row)
        result.violations.extend(out["violations"])
        result.graphs_checked += out["checked"]
        result.skipped_disconnected += out["skipped"]
        for name, count in out["tights"].items():
            result.tight_instances[name] += count
