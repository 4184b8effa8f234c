"""Benchmark harness: run the full pipeline over instance files and report.

Per instance the harness measures the reduction (obligatory branches and cut
edges removed), both constructive heuristics, and both exact algorithms under
equal time limits. Results serialize as one line-oriented key=value record per
instance and, optionally, one JSON document per run; both are deterministic
apart from the elapsed_* fields.
"""
from __future__ import annotations

import dataclasses
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from time import perf_counter

from .bound import obligatory_branch_bound
from .decompose import decompose
from .errors import MbvError
from .graph import Graph
from .heuristics import multi_path_expanding, path_expanding
from .io import load_graph
from .solver import SolveOptions, solve_plain, solve_with_decomposition

log = logging.getLogger("mbv.bench")


@dataclass
class Report:
    """One instance's reduction, heuristic, and exact-solve results.

    The top-level bound columns describe the decomposition-enhanced solve;
    the plain_* columns describe the whole-graph solve under the same limits.
    """

    instance: str
    n: int = 0
    m: int = 0
    ob: int = 0
    ce: int = 0
    heur_path: int = 0
    heur_multipath: int = 0
    heur_best: int = 0
    lower_bound: float = 0.0
    upper_bound: int = 0
    gap_percent: float = 0.0
    optimal: bool = False
    plain_lower_bound: float = 0.0
    plain_upper_bound: int = 0
    plain_gap_percent: float = 0.0
    plain_optimal: bool = False
    elapsed: dict = field(default_factory=dict)
    error: str | None = None


def bench_graph(name: str, g: Graph, time_limit: float | None = None) -> Report:
    """Run reduction statistics, both heuristics, and both solvers on one graph."""
    r = Report(instance=name, n=g.n, m=g.m)
    opts = SolveOptions(time_limit=time_limit)

    t = perf_counter()
    lb = obligatory_branch_bound(g)
    r.elapsed["bound"] = perf_counter() - t
    r.ob = lb.value

    t = perf_counter()
    d = decompose(g, lb)
    r.elapsed["decompose"] = perf_counter() - t
    r.ce = len(d.cut_edges)

    t = perf_counter()
    path_tree = path_expanding(g, lb)
    multi_tree = multi_path_expanding(g, lb)
    r.elapsed["heuristics"] = perf_counter() - t
    r.heur_path = path_tree.branches
    r.heur_multipath = multi_tree.branches
    r.heur_best = min(r.heur_path, r.heur_multipath)

    enhanced = solve_with_decomposition(g, opts)
    r.elapsed["enhanced"] = enhanced.elapsed
    r.lower_bound = enhanced.lower_bound
    r.upper_bound = enhanced.upper_bound
    r.gap_percent = enhanced.gap_percent
    r.optimal = enhanced.optimal

    plain = solve_plain(g, opts)
    r.elapsed["plain"] = plain.elapsed
    r.plain_lower_bound = plain.lower_bound
    r.plain_upper_bound = plain.upper_bound
    r.plain_gap_percent = plain.gap_percent
    r.plain_optimal = plain.optimal
    return r


def _bench_path(path: str, time_limit: float | None) -> Report:
    name = Path(path).stem
    try:
        g = load_graph(path)
        return bench_graph(name, g, time_limit)
    except (MbvError, OSError) as exc:
        log.warning("instance %s failed: %s", name, exc)
        return Report(instance=name, error=str(exc))


def bench(paths, time_limit: float | None = None, jobs: int = 1) -> list[Report]:
    """Benchmark every instance file; per-instance errors are recorded, not raised."""
    ordered = sorted(str(p) for p in paths)
    if jobs > 1 and len(ordered) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_bench_path, ordered, [time_limit] * len(ordered)))
    else:
        reports = []
        for p in ordered:
            log.info("benchmarking %s", p)
            reports.append(_bench_path(p, time_limit))
    return reports


def collect_instances(directory: str) -> list[str]:
    """All regular non-hidden files in a directory, sorted."""
    base = Path(directory)
    return sorted(
        str(p) for p in base.iterdir() if p.is_file() and not p.name.startswith(".")
    )


_BOOL = {True: "true", False: "false"}


def to_record(r: Report) -> str:
    """One machine-readable key=value line; elapsed_* fields are timing-dependent."""
    parts = [
        f"instance={r.instance}",
        f"n={r.n}",
        f"m={r.m}",
        f"ob={r.ob}",
        f"ce={r.ce}",
        f"heur_path={r.heur_path}",
        f"heur_multipath={r.heur_multipath}",
        f"heur_best={r.heur_best}",
        f"lower_bound={r.lower_bound:.4f}",
        f"upper_bound={r.upper_bound}",
        f"gap_percent={r.gap_percent:.4f}",
        f"optimal={_BOOL[r.optimal]}",
        f"plain_lower_bound={r.plain_lower_bound:.4f}",
        f"plain_upper_bound={r.plain_upper_bound}",
        f"plain_gap_percent={r.plain_gap_percent:.4f}",
        f"plain_optimal={_BOOL[r.plain_optimal]}",
    ]
    for phase in sorted(r.elapsed):
        parts.append(f"elapsed_{phase}={r.elapsed[phase]:.6f}")
    if r.error is not None:
        escaped = r.error.replace('"', "'")
        parts.append(f'error="{escaped}"')
    return " ".join(parts)


def summarize(reports: list[Report]) -> dict:
    """Aggregate reduction and timing statistics over the successful reports."""
    good = [r for r in reports if r.error is None]
    total_n = sum(r.n for r in good)
    total_m = sum(r.m for r in good)
    return {
        "instances": len(reports),
        "failed": len(reports) - len(good),
        "ob_percent": 100.0 * sum(r.ob for r in good) / total_n if total_n else 0.0,
        "ce_percent": 100.0 * sum(r.ce for r in good) / total_m if total_m else 0.0,
        "optimal": sum(1 for r in good if r.optimal),
        "plain_optimal": sum(1 for r in good if r.plain_optimal),
        "enhanced_time": sum(r.elapsed.get("enhanced", 0.0) for r in good),
        "plain_time": sum(r.elapsed.get("plain", 0.0) for r in good),
    }


def to_json(reports: list[Report]) -> str:
    doc = {
        "reports": [dataclasses.asdict(r) for r in reports],
        "summary": summarize(reports),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


_TABLE_COLUMNS = (
    ("instance", "{:<24}"),
    ("n", "{:>6}"),
    ("m", "{:>6}"),
    ("OB", "{:>5}"),
    ("CE", "{:>5}"),
    ("path", "{:>5}"),
    ("multi", "{:>5}"),
    ("LB", "{:>8}"),
    ("UB", "{:>5}"),
    ("gap%", "{:>6}"),
    ("opt", "{:>4}"),
    ("pLB", "{:>8}"),
    ("pUB", "{:>5}"),
    ("pgap%", "{:>6}"),
    ("popt", "{:>4}"),
)


def render_table(reports: list[Report]) -> str:
    """Human-readable summary table."""
    header = " ".join(fmt.format(name) for name, fmt in _TABLE_COLUMNS)
    lines = [header, "-" * len(header)]
    for r in reports:
        if r.error is not None:
            lines.append(f"{r.instance:<24} error: {r.error}")
            continue
        cells = (
            r.instance,
            r.n,
            r.m,
            r.ob,
            r.ce,
            r.heur_path,
            r.heur_multipath,
            f"{r.lower_bound:.2f}",
            r.upper_bound,
            f"{r.gap_percent:.1f}",
            "yes" if r.optimal else "no",
            f"{r.plain_lower_bound:.2f}",
            r.plain_upper_bound,
            f"{r.plain_gap_percent:.1f}",
            "yes" if r.plain_optimal else "no",
        )
        lines.append(" ".join(fmt.format(c) for (_, fmt), c in zip(_TABLE_COLUMNS, cells)))
    s = summarize(reports)
    lines.append(
        f"instances={s['instances']} failed={s['failed']} "
        f"ob_avg={s['ob_percent']:.1f}% ce_avg={s['ce_percent']:.1f}% "
        f"optimal={s['optimal']} plain_optimal={s['plain_optimal']}"
    )
    return "\n".join(lines) + "\n"
