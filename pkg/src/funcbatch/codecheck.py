"""Simplex-family constructions and exhaustive checking of the disjoint-recovery property.

A generator matrix serves a batch of t queries with cap r when the queries
admit pairwise-disjoint recovery sets of size at most r.  Restricting the
search to minimal recovery sets loses nothing: any recovery set of size at
most r contains a minimal one of size at most r.  Batches are enumerated as
sorted multisets, since disjoint-assignment existence is invariant under
reordering the queries.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Optional, Sequence

from funcbatch.gf2 import BitVec, GeneratorMatrix, in_span, rank

HOLDS = "holds"
FAILS = "fails"
UNDECIDED = "undecided"


def simplex(k: int) -> GeneratorMatrix:
    """Generator whose columns are all nonzero k-bit vectors in increasing integer order."""
    if not 1 <= k <= 7:
        raise ValueError(f"k must be in 1..7, got {k}")
    return GeneratorMatrix(k, tuple(range(1, 1 << k)))


def double_simplex(k: int) -> GeneratorMatrix:
    """Simplex generator concatenated with itself; length 2^(k+1) - 2."""
    if not 1 <= k <= 6:
        raise ValueError(f"k must be in 1..6, got {k}")
    cols = tuple(range(1, 1 << k))
    return GeneratorMatrix(k, cols + cols)


@dataclass(frozen=True)
class RecoveryCatalog:
    """All minimal recovery sets of size <= r for every nonzero query.

    sets maps a query word to its column-set masks, sorted by size then by
    mask.  Treat instances as immutable once built.
    """

    k: int
    n: int
    r: int
    sets: dict[int, tuple[int, ...]]


def build_catalog(matrix: GeneratorMatrix, r: int) -> RecoveryCatalog:
    """Enumerate minimal recovery sets by size; cost is sum of C(n, s) for s <= r."""
    if r < 1:
        raise ValueError("r must be positive")
    cols = matrix.cols
    found: dict[int, list[int]] = {}
    for size in range(1, min(r, matrix.n) + 1):
        for combo in combinations(range(matrix.n), size):
            total = 0
            for j in combo:
                total ^= cols[j]
            if total == 0:
                continue
            mask = 0
            for j in combo:
                mask |= 1 << j
            # independent columns summing to the query = minimal recovery set
            if size > 1 and rank(matrix, mask) != size:
                continue
            found.setdefault(total, []).append(mask)
    sets = {
        alpha: tuple(sorted(masks, key=lambda m: (m.bit_count(), m)))
        for alpha, masks in found.items()
    }
    return RecoveryCatalog(k=matrix.k, n=matrix.n, r=r, sets=sets)


def _check_batch(catalog: RecoveryCatalog, batch: Sequence[int]) -> None:
    limit = 1 << catalog.k
    for w in batch:
        if not 1 <= w < limit:
            raise ValueError(f"query {w} is not a nonzero {catalog.k}-bit vector")


def find_disjoint_assignment(catalog: RecoveryCatalog, batch: Sequence[int],
                             deterministic: bool = False) -> Optional[list[int]]:
    """Pairwise-disjoint recovery sets for the batch, one mask per query, or None.

    Backtracks over queries ordered by ascending candidate count (original
    order when deterministic, which then yields the lexicographically first
    assignment in catalog order); candidates are tried smallest set first.
    Prunes when the remaining queries' minimum set sizes exceed the free
    columns.
    """
    _check_batch(catalog, batch)
    if not batch:
        return []
    cands = []
    for w in batch:
        options = catalog.sets.get(w, ())
        if not options:
            return None
        cands.append(options)
    order = list(range(len(batch)))
    if not deterministic:
        order.sort(key=lambda i: len(cands[i]))
    min_size = [cands[i][0].bit_count() for i in order]
    suffix_need = [0] * (len(order) + 1)
    for pos in range(len(order) - 1, -1, -1):
        suffix_need[pos] = suffix_need[pos + 1] + min_size[pos]
    chosen: list[int] = [0] * len(batch)
    n = catalog.n

    def extend(pos: int, used: int) -> bool:
        if pos == len(order):
            return True
        if suffix_need[pos] > n - used.bit_count():
            return False
        for mask in cands[order[pos]]:
            if mask & used:
                continue
            chosen[order[pos]] = mask
            if extend(pos + 1, used | mask):
                return True
        return False

    return chosen if extend(0, 0) else None


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification sweep."""

    status: str
    counterexample: Optional[tuple[int, ...]]
    assignments_checked: int
    wall_time: float

    @property
    def holds(self) -> bool:
        return self.status == HOLDS


def _multiset_count(q: int, t: int) -> int:
    return comb(q + t - 1, t)


def _unrank_multiset(index: int, q: int, t: int) -> tuple[int, ...]:
    """Multiset of rank index (lex order) among sorted t-tuples over 1..q."""
    if not 0 <= index < _multiset_count(q, t):
        raise ValueError("rank out of range")
    # sorted multisets over 1..q correspond to strict combinations over 0..q+t-2
    picks = []
    v = 0
    m = q + t - 1
    rem = index
    for i in range(t):
        while True:
            block = comb(m - v - 1, t - i - 1)
            if rem < block:
                picks.append(v)
                v += 1
                break
            rem -= block
            v += 1
    return tuple(picks[i] - i + 1 for i in range(t))


def _rank_multiset(batch: Sequence[int], q: int) -> int:
    """Inverse of _unrank_multiset."""
    t = len(batch)
    m = q + t - 1
    combo = [batch[i] - 1 + i for i in range(t)]
    rem = 0
    prev = -1
    for i, c in enumerate(combo):
        for v in range(prev + 1, c):
            rem += comb(m - v - 1, t - i - 1)
        prev = c
    return rem


def _multisets_from(first: Sequence[int], q: int) -> Iterator[tuple[int, ...]]:
    """Lex successor iteration over sorted multisets, starting at first."""
    cur = list(first)
    while True:
        yield tuple(cur)
        for i in range(len(cur) - 1, -1, -1):
            if cur[i] < q:
                v = cur[i] + 1
                for j in range(i, len(cur)):
                    cur[j] = v
                break
        else:
            return


def _scan_chunk(catalog: RecoveryCatalog, start: int, count: int, q: int, t: int,
                deadline: Optional[float], max_batches: Optional[int],
                ) -> tuple[int, Optional[tuple[int, ...]], bool]:
    """Scan count multisets from rank start; returns (checked, failure, out_of_budget)."""
    checked = 0
    if count <= 0:
        return checked, None, False
    it = _multisets_from(_unrank_multiset(start, q, t), q)
    for _ in range(count):
        if max_batches is not None and checked >= max_batches:
            return checked, None, True
        if deadline is not None and time.monotonic() > deadline:
            return checked, None, True
        batch = next(it)
        checked += 1
        if find_disjoint_assignment(catalog, batch) is None:
            return checked, batch, False
    return checked, None, False


def verify(matrix: GeneratorMatrix, t: int, r: int, *,
           screen: bool = True,
           deterministic: bool = False,
           jobs: int = 1,
           budget_seconds: Optional[float] = None,
           budget_batches: Optional[int] = None) -> Verdict:
    """Decide whether every batch of t queries admits disjoint recovery sets of size <= r.

    Sweeps all multisets of nonzero queries in lex order.  By default a
    quick screen tries uniform batches first, heaviest query first; with
    deterministic=True the screen is skipped and a failing sweep reports the
    lexicographically least counterexample.  Exhausting either budget yields
    an undecided verdict instead of silent truncation.
    """
    if t < 1:
        raise ValueError("t must be positive")
    start_time = time.monotonic()
    deadline = start_time + budget_seconds if budget_seconds is not None else None
    catalog = build_catalog(matrix, r)
    q = (1 << matrix.k) - 1
    checked = 0

    def exhausted() -> bool:
        if budget_batches is not None and checked >= budget_batches:
            return True
        return deadline is not None and time.monotonic() > deadline

    if screen and not deterministic:
        for w in sorted(range(1, q + 1), key=lambda v: (-v.bit_count(), -v)):
            if exhausted():
                return Verdict(UNDECIDED, None, checked, time.monotonic() - start_time)
            batch = (w,) * t
            checked += 1
            if find_disjoint_assignment(catalog, batch) is None:
                return Verdict(FAILS, batch, checked, time.monotonic() - start_time)

    total = _multiset_count(q, t)
    remaining_budget = None if budget_batches is None else max(0, budget_batches - checked)

    if jobs <= 1:
        scanned, failure, cut_off = _scan_chunk(catalog, 0, total, q, t, deadline, remaining_budget)
        checked += scanned
        if failure is not None:
            return Verdict(FAILS, failure, checked, time.monotonic() - start_time)
        if cut_off:
            return Verdict(UNDECIDED, None, checked, time.monotonic() - start_time)
        return Verdict(HOLDS, None, checked, time.monotonic() - start_time)

    # contiguous lex ranges per worker; the earliest failing range carries
    # the lexicographically least counterexample
    chunk = (total + jobs - 1) // jobs
    tasks = []
    for w in range(jobs):
        lo = w * chunk
        if lo >= total:
            break
        size = min(chunk, total - lo)
        share = None if remaining_budget is None else max(0, remaining_budget // jobs)
        tasks.append((lo, size, share))
    results = []
    with ProcessPoolExecutor(max_workers=len(tasks)) as pool:
        futures = [
            pool.submit(_scan_chunk, catalog, lo, size, q, t, deadline, share)
            for (lo, size, share) in tasks
        ]
        for fut in futures:
            results.append(fut.result())
    cut_off_any = False
    failure = None
    for scanned, fail_batch, cut_off in results:
        checked += scanned
        cut_off_any = cut_off_any or cut_off
        if fail_batch is not None and failure is None:
            failure = fail_batch
    elapsed = time.monotonic() - start_time
    if failure is not None:
        return Verdict(FAILS, failure, checked, elapsed)
    if cut_off_any:
        return Verdict(UNDECIDED, None, checked, elapsed)
    return Verdict(HOLDS, None, checked, elapsed)


# query pair -> disjoint recovery sets (as masks) for the [3,2,2,2] code with
# columns (1,0), (0,1), (1,1)
WORKED_EXAMPLE_ROWS: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = (
    ((1, 1), (0b001, 0b110)),
    ((1, 2), (0b001, 0b010)),
    ((1, 3), (0b001, 0b100)),
    ((2, 1), (0b010, 0b001)),
    ((2, 2), (0b101, 0b010)),
    ((2, 3), (0b010, 0b100)),
    ((3, 1), (0b100, 0b001)),
    ((3, 2), (0b100, 0b010)),
    ((3, 3), (0b011, 0b100)),
)


def verify_worked_example() -> bool:
    """Check the canonical [3,2,2,2] recovery table row by row.

    Each row must list disjoint sets of size at most 2 whose spans contain
    the respective queries.
    """
    matrix = simplex(2)
    for queries, masks in WORKED_EXAMPLE_ROWS:
        if masks[0] & masks[1]:
            return False
        for w, mask in zip(queries, masks):
            if mask.bit_count() > 2:
                return False
            if not in_span(matrix, mask, BitVec(w, matrix.k)):
                return False
    return True
