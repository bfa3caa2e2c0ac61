"""Minimum monotone vertex-set search shared by every parameter.

All six parameters are minimum sizes of vertex sets satisfying a predicate
that is preserved under taking supersets. Searching cardinalities in
ascending order and combinations in lexicographic order therefore yields
the minimum value together with the lexicographically first witness.
"""

import logging
import math
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations

from src.config_manager import SolverConfig
from src.models import Method, ParamResult, SearchStats

logger = logging.getLogger(__name__)

VertexSet = tuple[int, ...]
Predicate = Callable[[VertexSet], bool]

_DEADLINE_CHECK_INTERVAL = 1024


class BudgetExceededError(Exception):
    """The time budget ran out before the minimum was found.

    Attributes:
        parameter: Name of the parameter being searched
        lower_bound: Every smaller cardinality is proven infeasible
        elapsed: Seconds spent before giving up
    """

    def __init__(self, parameter: str, lower_bound: int, elapsed: float):
        super().__init__(
            f"time budget exceeded computing {parameter} "
            f"after {elapsed:.1f}s (value is at least {lower_bound})"
        )
        self.parameter = parameter
        self.lower_bound = lower_bound
        self.elapsed = elapsed


class SearchError(RuntimeError):
    """The predicate rejected the full vertex set."""


@dataclass(frozen=True)
class SearchSettings:
    """Limits applied to a search.

    Attributes:
        time_budget_seconds: Wall-clock budget, measured from the deadline
            being fixed
        workers: Process count for large combination levels
        parallel_threshold: Smallest level size worth fanning out
        max_vertices: Largest order accepted by the solvers
        deadline: Absolute time.time() cutoff shared by every search run with
            these settings; None starts a fresh budget per search
    """

    time_budget_seconds: float = 60.0
    workers: int = 1
    parallel_threshold: int = 200_000
    max_vertices: int = 64
    deadline: float | None = None

    @classmethod
    def from_config(cls, solver: SolverConfig) -> "SearchSettings":
        return cls(
            time_budget_seconds=solver.time_budget_seconds,
            workers=solver.workers,
            parallel_threshold=solver.parallel_threshold,
            max_vertices=solver.max_vertices,
        )

    def with_deadline(self) -> "SearchSettings":
        """Fix the deadline now unless one is already set."""
        if self.deadline is not None:
            return self
        return replace(self, deadline=time.time() + self.time_budget_seconds)


@dataclass(frozen=True)
class AllOf:
    """Conjunction of predicates, evaluated left to right."""

    predicates: tuple[Predicate, ...]

    def __call__(self, vertices: VertexSet) -> bool:
        return all(predicate(vertices) for predicate in self.predicates)


def _scan_level(
    n: int,
    k: int,
    predicate: Predicate,
    deadline: float,
    first: int | None = None,
) -> tuple[VertexSet | None, int, bool]:
    """Scan the k-subsets of range(n), optionally those starting at first.

    Returns:
        (first satisfying set or None, sets examined, timed out)
    """
    if first is None:
        candidates = combinations(range(n), k)
    else:
        candidates = ((first, *rest) for rest in combinations(range(first + 1, n), k - 1))

    examined = 0
    for vertices in candidates:
        examined += 1
        if examined % _DEADLINE_CHECK_INTERVAL == 0 and time.time() > deadline:
            return None, examined, True
        if predicate(vertices):
            return vertices, examined, False
    return None, examined, False


def _scan_chunk(
    args: tuple[int, int, Predicate, float, int],
) -> tuple[VertexSet | None, int, bool]:
    n, k, predicate, deadline, first = args
    return _scan_level(n, k, predicate, deadline, first)


def _parallel_level(
    n: int, k: int, predicate: Predicate, deadline: float, workers: int
) -> tuple[VertexSet | None, int, bool]:
    """Split one level by smallest element and keep the earliest success."""
    chunks = [(n, k, predicate, deadline, first) for first in range(n - k + 1)]
    examined = 0
    timed_out = False
    witness: VertexSet | None = None
    with ProcessPoolExecutor(max_workers=workers) as executor:
        for found, count, chunk_timed_out in executor.map(_scan_chunk, chunks):
            examined += count
            if witness is not None:
                continue
            if found is not None:
                witness = found
            elif chunk_timed_out:
                timed_out = True
                break
    return witness, examined, timed_out and witness is None


def minimal_monotone_set(
    n: int,
    predicate: Predicate,
    lower_bound: int = 1,
    settings: SearchSettings | None = None,
    parameter: str = "custom",
) -> ParamResult:
    """Find the smallest vertex set satisfying a superset-closed predicate.

    Args:
        n: Vertex count; candidate sets are subsets of range(n)
        predicate: Callable on sorted vertex tuples, monotone under supersets
        lower_bound: Smallest cardinality to try (1..n)
        settings: Time budget and parallelism
        parameter: Parameter name used in results, logs and errors

    Returns:
        ParamResult with the minimum cardinality and the lexicographically
        first witness at that cardinality

    Raises:
        ValueError: If lower_bound is outside 1..n
        SearchError: If the predicate rejects the full vertex set
        BudgetExceededError: If the time budget runs out
    """
    settings = settings or SearchSettings()
    if not 1 <= lower_bound <= n:
        raise ValueError(f"lower bound {lower_bound} outside 1..{n}")

    everything = tuple(range(n))
    if not predicate(everything):
        raise SearchError(
            f"predicate for {parameter} is false on the full vertex set of size {n}"
        )

    started = time.time()
    deadline = settings.with_deadline().deadline
    examined = 0

    for k in range(lower_bound, n + 1):
        level_size = math.comb(n, k)
        if time.time() > deadline:
            # Budget spent by earlier levels or by searches sharing the deadline
            witness, count, timed_out = None, 0, True
        elif settings.workers > 1 and level_size >= settings.parallel_threshold:
            logger.debug(
                "Fanning out %s level k=%d (%d sets) over %d workers",
                parameter,
                k,
                level_size,
                settings.workers,
            )
            witness, count, timed_out = _parallel_level(
                n, k, predicate, deadline, settings.workers
            )
        else:
            witness, count, timed_out = _scan_level(n, k, predicate, deadline)
        examined += count

        if timed_out:
            elapsed = time.time() - started
            logger.warning(
                "Budget exceeded for %s at k=%d",
                parameter,
                k,
                extra={"parameter": parameter, "lower_bound": k, "elapsed": elapsed},
            )
            raise BudgetExceededError(parameter, k, elapsed)

        if witness is not None:
            elapsed = time.time() - started
            logger.debug(
                "%s = %d, witness %s",
                parameter,
                k,
                list(witness),
                extra={"parameter": parameter, "value": k, "combinations": examined},
            )
            return ParamResult(
                parameter=parameter,
                value=k,
                witness=witness,
                method=Method.EXACT_SEARCH,
                stats=SearchStats(combinations_examined=examined, elapsed=elapsed),
            )
        logger.debug("No %s set of size %d", parameter, k)

    # Unreachable: the full set satisfies the predicate.
    raise SearchError(f"no {parameter} set found up to size {n}")


def lexicographically_earlier(
    witness: Sequence[int], n: int, limit: int
) -> list[VertexSet]:
    """Up to limit same-size sets that precede witness in search order."""
    earlier = []
    target = tuple(witness)
    for vertices in combinations(range(n), len(target)):
        if vertices >= target or len(earlier) >= limit:
            break
        earlier.append(vertices)
    return earlier
