from __future__ import annotations

import itertools
import logging
import time
from multiprocessing import Pool
from typing import List, Optional, Sequence, Tuple

import psutil

from bockstein.calculus.decorated import Decoration, DecoratedValue
from bockstein.calculus.dimtype import (
    DimensionType,
    DomainRangeError,
    add_const,
    boltyanskii_type,
    boxplus,
    dim,
    leq,
    union_bound,
    validate,
)
from bockstein.schemas.certificate import ProblemKind, SearchBounds, SearchReport, WitnessCertificate
from bockstein.services.exotic import check_map_range, decomposition_feasible, map_feasible, map_target_type

log = logging.getLogger("bockstein.search")

# (problem, n, m, первые компоненты, вторые компоненты)
_Task = Tuple[ProblemKind, int, Optional[int], Tuple[DimensionType, ...], Tuple[DimensionType, ...]]


def resolve_workers(requested: int) -> int:
    """0 -> число физических ядер (psutil), минимум 1."""
    if requested > 0:
        return requested
    try:
        return max(1, int(psutil.cpu_count(logical=False) or 1))
    except Exception:
        return 1


def _values_for(q: int, max_value: int) -> List[DecoratedValue]:
    out = [DecoratedValue(q)]
    for v in range(1, max_value + 1):
        out.append(DecoratedValue(v, Decoration.MINUS))
        out.append(DecoratedValue(v, Decoration.PLUS))
    return out


def candidate_types(bounds: SearchBounds) -> List[DimensionType]:
    """Все формально корректные типы в границах (и реализуемые, если требуется), по каноническому ключу."""
    out: List[DimensionType] = []
    for q in range(0, bounds.max_value + 1):
        values = _values_for(q, bounds.max_value)
        for default in values:
            alternatives = [None] + [v for v in values if v != default]
            for choice in itertools.product(alternatives, repeat=len(bounds.primes)):
                ex = {p: v for p, v in zip(bounds.primes, choice) if v is not None}
                D = DimensionType(q, default, tuple(sorted(ex.items())))
                report = validate(D)
                if not report.formal:
                    continue
                if bounds.realizable_only and not report.realizable:
                    continue
                out.append(D)
    out.sort(key=DimensionType.sort_key)
    return out


# --- Быстрые фильтры; сертификат всё равно строится и перепроверяется

def _decomposition_passes(n: int, D1: DimensionType, D2: DimensionType, bound: DimensionType) -> bool:
    # Q-слот: B_n(Q) = n-1 <= q1+q2+1 и q1+q2 <= dim(D1 [+] D2) <= n-2
    if D1.q + D2.q != n - 2:
        return False
    if dim(boxplus(D1, D2)) > n - 2:
        return False
    return leq(bound, union_bound(D1, D2))


def _map_passes(n: int, m: int, D1: DimensionType, D2: DimensionType, bound: DimensionType) -> bool:
    if D1.q + D2.q > n - 2:
        return False
    if dim(D1) != m:
        return False
    if dim(boxplus(D1, add_const(D2, 1))) > n - 1:
        return False
    return leq(bound, union_bound(D1, D2))


def _check_task(task: _Task) -> List[WitnessCertificate]:
    problem, n, m, firsts, seconds = task
    found: List[WitnessCertificate] = []
    if problem == "decomposition":
        bound = boltyanskii_type(n)
        for D1 in firsts:
            for D2 in seconds:
                if _decomposition_passes(n, D1, D2, bound):
                    found.append(decomposition_feasible(n, D1, D2))
    else:
        assert m is not None
        bound = map_target_type(n, m)
        for D1 in firsts:
            for D2 in seconds:
                if _map_passes(n, m, D1, D2, bound):
                    found.append(map_feasible(n, m, D1, D2))
    log.debug("chunk %s n=%s m=%s: %d x %d -> %d", problem, n, m, len(firsts), len(seconds), len(found))
    return [c for c in found if c.valid]


def _chunks(items: Sequence[DimensionType], size: int) -> List[Tuple[DimensionType, ...]]:
    return [tuple(items[i : i + size]) for i in range(0, len(items), size)]


def _run(
    problem: ProblemKind,
    n: int,
    m: Optional[int],
    bounds: SearchBounds,
    workers: int,
    chunk_size: int,
) -> SearchReport:
    candidates = candidate_types(bounds)
    tasks: List[_Task] = [(problem, n, m, chunk, tuple(candidates)) for chunk in _chunks(candidates, max(1, chunk_size))]
    workers = resolve_workers(workers)

    started = time.perf_counter()
    if workers == 1 or len(tasks) <= 1:
        parts = [_check_task(t) for t in tasks]
    else:
        with Pool(processes=min(workers, len(tasks))) as pool:
            parts = pool.map(_check_task, tasks)

    certificates = [c for part in parts for c in part]
    # детерминированный порядок независимо от числа процессов
    certificates.sort(key=lambda c: (c.d1.sort_key(), c.d2.sort_key()))
    took_ms = (time.perf_counter() - started) * 1000.0

    log.info(
        "search %s n=%s m=%s: candidates=%d workers=%d found=%d took=%.1fms",
        problem, n, m, len(candidates), workers, len(certificates), took_ms,
    )
    return SearchReport(
        problem=problem,
        n=n,
        m=m,
        bounds=bounds,
        candidates=len(candidates),
        pairs_checked=len(candidates) ** 2,
        certificates=certificates,
    )


def search_decomposition(
    n: int,
    bounds: Optional[SearchBounds] = None,
    *,
    workers: int = 1,
    chunk_size: int = 64,
) -> SearchReport:
    if n < 2:
        raise DomainRangeError("n", n, ">= 2")
    return _run("decomposition", n, None, bounds or SearchBounds(), workers, chunk_size)


def search_map(
    n: int,
    m: int,
    bounds: Optional[SearchBounds] = None,
    *,
    workers: int = 1,
    chunk_size: int = 64,
) -> SearchReport:
    check_map_range(n, m, min_n=4, max_m_gap=2)
    return _run("map", n, m, bounds or SearchBounds(), workers, chunk_size)


def contains_pair(report: SearchReport, D1: DimensionType, D2: DimensionType) -> bool:
    return any(c.d1 == D1 and c.d2 == D2 for c in report.certificates)

