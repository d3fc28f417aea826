"""Isomorph-free generation of small graphs and nut-graph censuses.

Generation is orderly: adjacency rows are filled one at a time and a partial
graph is kept only if its upper-triangle code is maximal among relabellings
that respect the rows fixed so far. Every isomorphism class therefore appears
exactly once, and no global dedupe table is needed.

The generation tree is cut at a fixed depth into prefixes. Each prefix is an
independent subtask, and census tallies from subtasks merge by addition.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from . import _backend
from .graph import Graph, from_adjacency, write_graph6
from .kernel import Tag, classify

__all__ = [
    "CensusReport",
    "EnumerationBoundError",
    "LongRunRequired",
    "MAX_ALL_ORDER",
    "REGULAR_BOUNDS",
    "enumerate_all",
    "enumerate_regular",
    "census",
    "run_census",
]

MAX_ALL_ORDER = 9
# Largest order accepted for connected rho-regular generation.
REGULAR_BOUNDS = {0: 1, 1: 2, 2: 40, 3: 16, 4: 15, 5: 12, 6: 12}
DEFAULT_REGULAR_BOUND = 11
# (rho, n) pairs that only run with long_run=True.
LONG_RUN = {(4, 15)}
SPLIT_DEPTH = 4

_TAGS = (Tag.NON_SINGULAR, Tag.SINGULAR_NON_CORE, Tag.CORE_NON_NUT, Tag.NUT)


class EnumerationBoundError(ValueError):
    pass


class LongRunRequired(EnumerationBoundError):
    pass


def _check_all(n: int) -> None:
    if not 1 <= n <= MAX_ALL_ORDER:
        raise EnumerationBoundError(
            f"enumerate_all supports 1 <= n <= {MAX_ALL_ORDER}; "
            f"there are over 12 million graphs on 10 vertices"
        )


def _check_regular(rho: int, n: int) -> None:
    if rho < 0 or n < 1:
        raise EnumerationBoundError("need rho >= 0 and n >= 1")
    if rho * n % 2:
        raise EnumerationBoundError(f"rho * n must be even, got {rho} * {n}")
    bound = REGULAR_BOUNDS.get(rho, DEFAULT_REGULAR_BOUND)
    if n > bound:
        raise EnumerationBoundError(f"connected {rho}-regular generation supports n <= {bound}")


def _params(rho: Optional[int], n: int) -> tuple[int, int, bool]:
    if rho is None:
        return 0, n - 1, False
    return rho, rho, True


def _prefixes(n: int, lo: int, hi: int, connected: bool, depth: int) -> list[tuple]:
    return _backend.expand(n, [0] * n, 0, depth, lo, hi, connected)


def _subtasks(rho: Optional[int], n: int, depth: int = SPLIT_DEPTH) -> list[tuple]:
    lo, hi, connected = _params(rho, n)
    depth = min(depth, n)
    return [(n, p, depth, lo, hi, connected) for p in _prefixes(n, lo, hi, connected, depth)]


def _run(task: tuple) -> list[tuple]:
    n, prefix, depth, lo, hi, connected = task
    if depth >= n:
        return [tuple(prefix)]
    return _backend.expand(n, list(prefix), depth, n, lo, hi, connected)


def _stream(rho: Optional[int], n: int) -> Iterator[Graph]:
    for task in _subtasks(rho, n):
        for adj in _run(task):
            yield from_adjacency(adj)


def enumerate_all(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class on n vertices, connected or not."""
    _check_all(n)
    return _stream(None, n)


def enumerate_regular(rho: int, n: int) -> Iterator[Graph]:
    """One graph per isomorphism class of connected rho-regular graphs."""
    _check_regular(rho, n)
    if rho >= n and not (rho == 0 and n == 1):
        return iter(())
    return _stream(rho, n)


@dataclass
class CensusReport:
    order: Optional[int]
    constraint: str
    totals: dict = field(default_factory=lambda: {t: 0 for t in _TAGS})
    trivial: int = 0
    examined: int = 0
    elapsed: float = 0.0
    nuts: list = field(default_factory=list)

    @property
    def nut_count(self) -> int:
        return self.totals[Tag.NUT]

    def merge(self, other: CensusReport) -> None:
        for t in _TAGS:
            self.totals[t] += other.totals[t]
        self.trivial += other.trivial
        self.examined += other.examined
        self.nuts.extend(other.nuts)

    def universe(self) -> str:
        n = "?" if self.order is None else self.order
        if self.constraint == "all":
            return f"all graphs on {n} vertices (connected and disconnected)"
        return f"connected {self.constraint} graphs on {n} vertices"

    def to_table(self) -> str:
        lines = [f"universe\t{self.universe()}", f"examined\t{self.examined}"]
        lines += [f"{t.value}\t{self.totals[t]}" for t in _TAGS]
        lines.append(f"trivial\t{self.trivial}")
        return "\n".join(lines) + "\n"


def _tally(report: CensusReport, adj, keep_nuts: bool) -> None:
    # K1 is kept out of the tags: its 1x1 zero matrix has an all-nonzero
    # kernel, but it is a degenerate case no census is meant to count.
    n = len(adj)
    report.examined += 1
    if n == 1:
        report.trivial += 1
        return
    # Full rank mod p implies full rank over the rationals.
    if _backend.nullity_mod_p(n, adj) == 0:
        report.totals[Tag.NON_SINGULAR] += 1
        return
    g = from_adjacency(adj)
    tag = classify(g).tag
    report.totals[tag] += 1
    if keep_nuts and tag is Tag.NUT:
        report.nuts.append(write_graph6(g))


def census(stream: Iterable[Graph], constraint: str = "all", keep_nuts: bool = False) -> CensusReport:
    """Classify every graph of ``stream`` and tally the tags."""
    t0 = time.perf_counter()
    report = CensusReport(None, constraint)
    for g in stream:
        if report.order is None:
            report.order = g.order
        _tally(report, g.adj, keep_nuts)
    report.elapsed = time.perf_counter() - t0
    return report


def _census_task(args: tuple) -> CensusReport:
    task, constraint, keep_nuts = args
    part = CensusReport(task[0], constraint)
    for adj in _run(task):
        _tally(part, adj, keep_nuts)
    return part


def run_census(
    n: int,
    rho: Optional[int] = None,
    *,
    long_run: bool = False,
    jobs: int = 1,
    keep_nuts: bool = False,
) -> CensusReport:
    """Generate and classify all graphs of order n, or connected rho-regular ones.

    The subtasks share nothing, so ``jobs > 1`` farms them out to worker
    processes; the merged report is identical to the single-process one.
    """
    if rho is None:
        _check_all(n)
        constraint = "all"
    else:
        _check_regular(rho, n)
        if (rho, n) in LONG_RUN and not long_run:
            raise LongRunRequired(f"the census for rho={rho}, n={n} is a long run; pass --long-run (long_run=True) to start it")
        constraint = f"{rho}-regular"
    t0 = time.perf_counter()
    report = CensusReport(n, constraint)
    if rho is None or rho < n or (rho == 0 and n == 1):
        args = [(task, constraint, keep_nuts) for task in _subtasks(rho, n)]
        if jobs > 1 and len(args) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_census_task, args))
        else:
            parts = [_census_task(a) for a in args]
        for part in parts:
            report.merge(part)
    report.elapsed = time.perf_counter() - t0
    return report
