"""Grid sweep checking that exact search on C_n^d returns d(d+1)."""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .bounds import kang_bound, ska_bounds, theorem_value
from .exact import ExactConfig, SizeGuardError, branch_and_bound_rna, brute_force_rna
from .graph import cycle_power

CSV_COLUMNS = ("d", "n", "exact", "formula", "kang", "lower", "elapsed_ms", "status")
MATCH, MISMATCH, SKIPPED = "Match", "MISMATCH", "SKIPPED"


@dataclass
class VerificationRecord:
    d: int
    n: int
    exact: Optional[int]
    formula: int
    witness: str
    kang: int
    lower: int
    elapsed_ms: float
    status: str

    def csv_row(self) -> list:
        return [
            self.d,
            self.n,
            "" if self.exact is None else self.exact,
            self.formula,
            self.kang,
            self.lower,
            f"{self.elapsed_ms:.3f}",
            self.status,
        ]


def verify_point(d: int, n: int, method: str = "brute", guard_n: Optional[int] = None) -> VerificationRecord:
    g = cycle_power(n, d)
    formula = theorem_value(d)
    lower, _ = ska_bounds(d)
    config = ExactConfig()
    if guard_n is not None:
        config.brute_guard_n = config.bnb_guard_n = guard_n
    solve = brute_force_rna if method == "brute" else branch_and_bound_rna
    start = time.perf_counter()
    try:
        rep = solve(g, config=config)
    except SizeGuardError:
        return VerificationRecord(d, n, None, formula, "", kang_bound(g), lower, 0.0, SKIPPED)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    status = MATCH if rep.rna_value == formula else MISMATCH
    return VerificationRecord(d, n, rep.rna_value, formula, str(rep.witness), kang_bound(g), lower, elapsed_ms, status)


def grid(d_values: Iterable[int], n_max: int, n_min: Optional[int] = None) -> list:
    return [(d, n) for d in sorted(d_values) for n in range(max(2 * d + 1, n_min or 0), n_max + 1)]


def _point(args):
    return verify_point(*args)


def sweep(points, method: str = "brute", guard_n: Optional[int] = None, jobs: int = 1) -> Iterator[VerificationRecord]:
    """Yield records in (d, n) order; with jobs > 1 points run in a process pool."""
    tasks = [(d, n, method, guard_n) for d, n in sorted(points)]
    if jobs <= 1:
        yield from map(_point, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_point, tasks)


def write_csv(records: Iterable[VerificationRecord], stream: io.TextIOBase) -> list:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    out = []
    for rec in records:
        writer.writerow(rec.csv_row())
        stream.flush()
        out.append(rec)
    return out
