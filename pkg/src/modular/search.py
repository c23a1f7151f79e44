"""Search for the smallest prime p whose split prime above it gives non-trivial norm classes."""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import structlog
from sympy import isprime

from src.config import get_search_batch_size, get_search_workers
from src.observability.logging import (
    get_search_logger,
    logging_enabled,
    search_logging_enabled,
)
from src.quadratic.characters import t_sum
from src.quadratic.class_group import (
    class_group,
    class_order,
    require_real_prime,
    split_prime_class,
)

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class SearchResult:
    l: int
    limit: int
    strict: bool
    prime: Optional[int]
    candidates_checked: int
    primes_checked: int
    reason: str


def candidates(l: int, limit: int) -> Iterator[int]:
    """p = 24 l k + 1 for k >= 1, up to and including limit."""

    step = 24 * l
    p = step + 1
    while p <= limit:
        yield p
        p += step


def candidate_passes(l: int, p: int, strict: bool) -> bool:
    """Search predicate for a prime candidate p = 1 (mod 24 l).

    Strict mode asks for p != 1 (mod 5) and a non-principal prime above p.
    Otherwise all three norm exponents (p-1)/(6l) t_1, (p-1)/(6l) t_2 and
    (p-1)/(6l) (t_2 - l t_1) must be nonzero modulo the order of that prime.
    """

    beta = split_prime_class(l, p)
    order = class_order(beta)
    if order == 1:
        return False
    if strict:
        return p % 5 != 1
    scale = (p - 1) // (6 * l)
    t1, t2 = t_sum(l, 1), t_sum(l, 2)
    exponents = (scale * t1, scale * t2, scale * (t2 - l * t1))
    return all(value % order != 0 for value in exponents)


def _check_batch(args: Tuple[int, List[int], bool]) -> Optional[int]:
    l, batch, strict = args
    for p in batch:
        if isprime(p) and candidate_passes(l, p, strict):
            return p
    return None


def _batches(l: int, limit: int, size: int) -> Iterator[List[int]]:
    batch: List[int] = []
    for p in candidates(l, limit):
        batch.append(p)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def _search_sequential(l: int, limit: int, strict: bool) -> Tuple[Optional[int], int, int]:
    checked = 0
    primes = 0
    for p in candidates(l, limit):
        checked += 1
        if not isprime(p):
            continue
        primes += 1
        passed = candidate_passes(l, p, strict)
        if search_logging_enabled():
            get_search_logger().debug("prime_search_candidate", l=l, p=p, passed=passed)
        if passed:
            return p, checked, primes
    return None, checked, primes


def _search_parallel(
    l: int, limit: int, strict: bool, workers: int, batch_size: int
) -> Tuple[Optional[int], int, int]:
    batches = list(_batches(l, limit, batch_size))
    checked = sum(len(batch) for batch in batches)
    with multiprocessing.Pool(processes=workers) as pool:
        hits = pool.map(_check_batch, [(l, batch, strict) for batch in batches])
    found = [p for p in hits if p is not None]
    if not found:
        primes = sum(1 for batch in batches for p in batch if isprime(p))
        return None, checked, primes
    best = min(found)
    checked = sum(1 for batch in batches for p in batch if p <= best)
    primes = sum(1 for batch in batches for p in batch if p <= best and isprime(p))
    return best, checked, primes


def search_prime(
    l: int, limit: int, strict: bool = False, workers: Optional[int] = None
) -> SearchResult:
    """Smallest prime p <= limit, p = 1 (mod 24 l), passing the search predicate.

    An exhausted limit is reported in the result, never raised.
    """

    require_real_prime(l)
    if class_group(l).wide_class_number == 1:
        if logging_enabled():
            logger.info("prime_search_skipped", l=l, reason="class_number_one")
        return SearchResult(l, limit, strict, None, 0, 0, "class_number_one")

    workers = get_search_workers() if workers is None else workers
    if workers > 1:
        prime, checked, primes = _search_parallel(
            l, limit, strict, workers, get_search_batch_size()
        )
    else:
        prime, checked, primes = _search_sequential(l, limit, strict)
    reason = "found" if prime is not None else "none_below_limit"
    if logging_enabled():
        logger.info(
            "prime_search_completed",
            l=l,
            limit=limit,
            strict=strict,
            prime=prime,
            candidates_checked=checked,
        )
    return SearchResult(l, limit, strict, prime, checked, primes, reason)
