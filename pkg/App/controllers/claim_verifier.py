import logging
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from App.models import ClaimReport, Mat2, RingId
from App.controllers.quadratic_ring import (
    entry_bound,
    entry_candidate_set,
    euclidean_minimum,
    listed_entries,
    units,
)
from App.controllers.word_repr import reduce_step

logger = logging.getLogger(__name__)


def _ring(ring):
    return ring if isinstance(ring, RingId) else RingId(ring)


def _sorted_entries(ring):
    return sorted(entry_candidate_set(ring), key=lambda z: z.coords)


def _candidates_with(ring, alpha, entries):
    one = ring.one()
    for beta, gamma, delta in product(entries, repeat=3):
        if gamma and alpha * delta - beta * gamma == one:
            yield Mat2(alpha, beta, gamma, delta)


def candidate_matrices(ring):
    """All [[alpha, beta], [gamma, delta]] over the entry set with gamma != 0 and det 1, in lexicographic order."""
    ring = _ring(ring)
    entries = _sorted_entries(ring)
    for alpha in entries:
        yield from _candidates_with(ring, alpha, entries)


def _check_shard(d, alpha_coords):
    ring = RingId(d)
    alpha = ring(*alpha_coords)
    examined = 0
    counterexamples = []
    for matrix in _candidates_with(ring, alpha, _sorted_entries(ring)):
        examined += 1
        _, following = reduce_step(matrix)
        if matrix.norm_max < following.norm_max:
            counterexamples.append((matrix, following))
    return examined, counterexamples


def check_claim(ring, workers=1):
    """Run one reduction step on every candidate and collect the pairs where the matrix norm grows."""
    ring = _ring(ring)
    started = time.perf_counter()
    shards = [alpha.coords for alpha in _sorted_entries(ring)]
    if workers > 1:
        logger.debug("Checking O_%s in %s shards on %s workers", ring.d, len(shards), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_shard, [ring.d] * len(shards), shards))
    else:
        results = [_check_shard(ring.d, coords) for coords in shards]
    examined = sum(count for count, _ in results)
    counterexamples = sorted(
        (pair for _, pairs in results for pair in pairs), key=lambda pair: pair[0].sort_key()
    )
    elapsed_ms = (time.perf_counter() - started) * 1000
    logger.info(
        "O_%s: %s candidates, %s counterexamples, %.1f ms",
        ring.d, examined, len(counterexamples), elapsed_ms,
    )
    return ClaimReport(
        ring=ring,
        candidates_examined=examined,
        counterexamples=tuple(counterexamples),
        elapsed_ms=elapsed_ms,
    )


def verify_entry_table(ring):
    return entry_candidate_set(ring) == listed_entries(ring)


def ring_table(ring):
    ring = _ring(ring)
    entries = _sorted_entries(ring)
    return {
        **ring.get_json(),
        "kappa": str(euclidean_minimum(ring)),
        "entry_bound": str(entry_bound(ring)),
        "units": [u.get_json() for u in sorted(units(ring), key=lambda z: z.coords)],
        "entries": [z.get_json() for z in entries],
        "entry_count": len(entries),
        "matches_table": verify_entry_table(ring),
    }
