"""Exhaustive classifier-versus-oracle sweeps over small weight vectors."""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

from .bundles import BundleSpec, RankClass, classify, split_total
from .chern import CasimirInput, casimir_scaling_check, verify_decomposition
from .kostka import count_proper_tableaux
from .shapes import reduced_shape

CHECKS = ("classifier", "decomposition", "scaling", "all")
COLUMNS = ("level", "weights", "k", "p", "lambda", "maximal", "class", "oracle_count", "agree")


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("QKOSTKA_JOBS", "1")))
    except ValueError:
        return 1


def instances(n_max: int, level_max: int, n_min: int = 3) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Non-increasing weight vectors with an even total, by level, then n, then weights descending."""
    for level in range(1, level_max + 1):
        for n in range(n_min, n_max + 1):
            for ws in combinations_with_replacement(range(level, -1, -1), n):
                if sum(ws) % 2 == 0:
                    yield level, ws


def oracle_count(level: int, weights: tuple[int, ...]) -> int:
    """Proper tableaux on the reduced shape, counted directly."""
    ws = tuple(c for c in weights if c)
    if not ws:
        return 1
    kp = split_total(sum(ws), level)
    if kp is None:
        return 0
    return count_proper_tableaux(reduced_shape(level, *kp), ws, level)


@dataclass(frozen=True)
class SweepRow:
    level: int
    weights: tuple[int, ...]
    k: int | None
    p: int | None
    lam: int | None
    maximal: bool
    rank_class: str
    oracle_count: int
    agree: bool
    note: str = ""

    def as_csv(self) -> list:
        def opt(x):
            return "" if x is None else x

        return [
            self.level,
            " ".join(map(str, self.weights)),
            opt(self.k),
            opt(self.p),
            opt(self.lam),
            int(self.maximal),
            self.rank_class,
            self.oracle_count,
            int(self.agree),
        ]


def check_instance(args: tuple[int, tuple[int, ...], str]) -> SweepRow:
    level, ws, check = args
    spec = BundleSpec(level, ws)
    cls = classify(spec)
    count = oracle_count(level, ws)
    agree = cls.rank_class is RankClass.of_count(count)
    notes = []
    if check in ("decomposition", "all") and count == 1 and spec.n >= 4:
        report = verify_decomposition(spec)
        if not report.ok:
            agree = False
            notes.append(report.error or f"{len(report.violations)} curve violations")
    if check in ("scaling", "all"):
        for m in range(1, 5):
            if classify(spec.at(m)).rank_class is not cls.rank_class:
                agree = False
                notes.append(f"class changes at m={m}")
            if not all(casimir_scaling_check(m, CasimirInput(2, (c,))) for c in ws):
                agree = False
                notes.append(f"Casimir scaling fails at m={m}")
    return SweepRow(
        level, ws, cls.k, cls.p, cls.lambda_tail, cls.maximal, cls.rank_class.value, count, agree, "; ".join(notes)
    )


def run_sweep(n_max: int, level_max: int, check: str = "classifier", jobs: int = 1, n_min: int = 3) -> list[SweepRow]:
    if check not in CHECKS:
        raise ValueError(f"unknown check {check!r}; choose from {', '.join(CHECKS)}")
    work = [(level, ws, check) for level, ws in instances(n_max, level_max, n_min)]
    if jobs <= 1:
        return [check_instance(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map keeps input order, so the output does not depend on the worker count
        return list(pool.map(check_instance, work, chunksize=max(1, len(work) // (8 * jobs))))


def rows_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(row.as_csv())
    return buf.getvalue()
