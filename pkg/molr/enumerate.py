"""
molr/enumerate.py
Purpose: Isotopism-class enumeration of k×n t-MOLR.
         2×n classes are grown one rectangle at a time from the 2×n
         1-MOLR (one per cycle type of a derangement); deeper levels append
         one row to every rectangle of each class representative. Children
         are deduplicated by canonical key after every step, so each level
         holds exactly one record per isotopism class.
Created: 2026-10-19
Last Updated: 2026-10-19
"""

from collections import Counter
from dataclasses import dataclass, field, replace
from math import factorial
from multiprocessing import Pool
from pathlib import Path
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .config import EnumerationSettings
from .core import Grid, MolrSet
from .errors import BadDimensions, BudgetExceeded
from .logging import get_logger
from .perms import Perm, cycle_form, derangements, identity
from .records import record_from_class, write_records
from .status import EnumerationStatus
from .symmetry import (
    ClassRecord,
    RegularityFlags,
    autotopism_class,
    canonical_form,
    canonical_key,
    canonical_labelling,
    is_homogeneous,
    paratopism_key,
)

logger = get_logger('enumerate')

FILTER_NONE = "none"
FILTER_STEPWISE_HOMOGENEOUS = "stepwise_homogeneous"
FILTER_STEPWISE_TRANSITIVE = "stepwise_transitive"
FILTERS = (FILTER_NONE, FILTER_STEPWISE_HOMOGENEOUS, FILTER_STEPWISE_TRANSITIVE)

POPULATIONS = (
    "all",
    "homogeneous",
    "transitive",
    "stepwise_homogeneous",
    "stepwise_transitive",
)

ProgressCallback = Callable[[], None]


# ---------------------------------------------------------------------------
# Frontiers and tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtensionFrontier:
    """All surviving isotopism classes at one level, sorted by canonical key."""
    n: int
    k: int
    t: int
    classes: Tuple[ClassRecord, ...]
    filters: Tuple[str, ...] = ()  # filter applied at k=1, 2, ... up to this level

    def __len__(self) -> int:
        return len(self.classes)

    def keys(self) -> List[bytes]:
        return [rec.canonical_key for rec in self.classes]


@dataclass
class LevelSlice:
    """Counts for one k: an aut-order histogram per population plus paratopism classes."""
    k: int
    histograms: Dict[str, Dict[int, int]]
    paratopism: Optional[int] = None

    def total(self, population: str = "all") -> int:
        return sum(self.histograms.get(population, {}).values())

    def regularity(self) -> Tuple[int, int, int, int]:
        return tuple(self.total(p) for p in POPULATIONS[1:])


@dataclass
class CountTable:
    n: int
    t: int
    per_k: Dict[int, LevelSlice] = field(default_factory=dict)

    def isotopism_counts(self) -> Dict[int, int]:
        return {k: s.total() for k, s in sorted(self.per_k.items())}

    def paratopism_counts(self) -> Dict[int, Optional[int]]:
        return {k: s.paratopism for k, s in sorted(self.per_k.items())}


# ---------------------------------------------------------------------------
# Candidate generation
# ---------------------------------------------------------------------------


def _rows_fitting(allowed: List[int]) -> Iterator[Tuple[int, ...]]:
    """Permutations row with bit row[c] set in allowed[c]; most constrained column first."""
    n = len(allowed)
    row = [-1] * n

    def place(used: int, remaining: List[int]) -> Iterator[Tuple[int, ...]]:
        if not remaining:
            yield tuple(row)
            return
        col = min(remaining, key=lambda c: (allowed[c] & ~used).bit_count())
        options = allowed[col] & ~used
        if not options:
            return
        rest = [c for c in remaining if c != col]
        while options:
            bit = options & -options
            options ^= bit
            row[col] = bit.bit_length() - 1
            yield from place(used | bit, rest)
        row[col] = -1

    yield from place(0, list(range(n)))


def row_extensions(m: MolrSet) -> Iterator[MolrSet]:
    """
    Every (k+1)×n t-MOLR obtained by appending one row to each rectangle.

    Column masks keep each rectangle Latin; per-pair masks of used ordered
    pairs keep the rectangles orthogonal.
    """
    n, t = m.n, m.t
    grids = m.grids
    full = (1 << n) - 1
    column_used = [[0] * n for _ in range(t)]
    for q, g in enumerate(grids):
        for row in g:
            for j, v in enumerate(row):
                column_used[q][j] |= 1 << v
    # pair_used[q][p][a]: symbols b already paired with a in rectangles (q, p), q < p
    pair_used = [[[0] * n for _ in range(t)] for _ in range(t)]
    for q in range(t):
        for p in range(q + 1, t):
            masks = pair_used[q][p]
            for row_q, row_p in zip(grids[q], grids[p]):
                for a, b in zip(row_q, row_p):
                    masks[a] |= 1 << b
    new_rows: List[Tuple[int, ...]] = [()] * t

    def fill(p: int) -> Iterator[MolrSet]:
        if p == t:
            yield MolrSet.from_grids(
                (g + (row,) for g, row in zip(grids, new_rows)), n
            )
            return
        allowed = []
        for c in range(n):
            mask = full & ~column_used[p][c]
            for q in range(p):
                mask &= ~pair_used[q][p][new_rows[q][c]]
            allowed.append(mask)
        for row in _rows_fitting(allowed):
            new_rows[p] = row
            yield from fill(p + 1)

    yield from fill(0)


def rect_extensions(m: MolrSet) -> Iterator[MolrSet]:
    """Every 2×n (t+1)-MOLR obtained by adding one rectangle to the normalized 2×n set m."""
    n = m.n
    ident = identity(n)
    seconds = [g[1] for g in m.grids]
    for d in _derangements(n):
        if all(all(a != b for a, b in zip(d, x)) for x in seconds):
            yield MolrSet.from_grids(list(m.grids) + [(ident, d)], n)


_DERANGEMENT_CACHE: Dict[int, List[Perm]] = {}


def _derangements(n: int) -> List[Perm]:
    if n not in _DERANGEMENT_CACHE:
        _DERANGEMENT_CACHE[n] = derangements(n)
    return _DERANGEMENT_CACHE[n]


# ---------------------------------------------------------------------------
# Worker tasks (top level so multiprocessing can pickle them)
# ---------------------------------------------------------------------------

Parent = Tuple[Tuple[Grid, ...], bool, bool]
Child = Tuple[bytes, Tuple[Grid, ...], bool, bool]


def _expand_chunk(task: Tuple[str, int, List[Parent]]) -> List[Child]:
    mode, n, parents = task
    grow = row_extensions if mode == "rows" else rect_extensions
    found: Dict[bytes, Child] = {}
    for grids, sh, st in parents:
        for child in grow(MolrSet.from_grids(grids, n)):
            key, labelled = canonical_labelling(child)
            prev = found.get(key)
            if prev is None:
                found[key] = (key, labelled.grids, sh, st)
            elif (sh and not prev[2]) or (st and not prev[3]):
                found[key] = (key, prev[1], prev[2] or sh, prev[3] or st)
    return list(found.values())


def _classify_chunk(task: Tuple[int, List[Tuple[Grid, ...]]]) -> List[ClassRecord]:
    n, items = task
    return [canonical_form(MolrSet.from_grids(grids, n)) for grids in items]


def _paratopism_chunk(task: Tuple[int, List[Tuple[Grid, ...]]]) -> List[bytes]:
    n, items = task
    return [paratopism_key(MolrSet.from_grids(grids, n)) for grids in items]


def _chunks(items: Sequence, size: int) -> List[Sequence]:
    return [items[i:i + size] for i in range(0, len(items), size)]


def _parallel_map(func: Callable, tasks: List, workers: int) -> Iterator:
    """Map func over tasks, yielding results in task order."""
    if workers <= 1 or len(tasks) <= 1:
        for task in tasks:
            yield func(task)
        return
    with Pool(processes=min(workers, len(tasks))) as pool:
        yield from pool.imap(func, tasks)


# ---------------------------------------------------------------------------
# Level steps
# ---------------------------------------------------------------------------


def _settings(settings: Optional[EnumerationSettings]) -> EnumerationSettings:
    return settings if settings is not None else EnumerationSettings()


def _grow(
    mode: str,
    parents: Sequence[ClassRecord],
    n: int,
    level: int,
    settings: EnumerationSettings,
    status: Optional[EnumerationStatus],
    on_progress: Optional[ProgressCallback],
) -> List[ClassRecord]:
    """Expand parents, merge children by key, classify; sorted by key."""
    payload = [
        (rec.representative.grids, rec.flags.stepwise_homogeneous, rec.flags.stepwise_transitive)
        for rec in parents
    ]
    chunks = _chunks(payload, settings.chunk_size)
    if status:
        status.update(action="extending", level=level, done=0, total=len(payload))

    merged: Dict[bytes, List] = {}
    done = 0
    tasks = [(mode, n, chunk) for chunk in chunks]
    for chunk, result in zip(chunks, _parallel_map(_expand_chunk, tasks, settings.workers)):
        for key, grids, sh, st in result:
            entry = merged.get(key)
            if entry is None:
                merged[key] = [grids, sh, st]
            else:
                entry[1] = entry[1] or sh
                entry[2] = entry[2] or st
        if len(merged) > settings.budget:
            raise BudgetExceeded(level, len(merged))
        done += len(chunk)
        if status:
            status.update(done=done, classes=len(merged))
        if on_progress:
            on_progress()

    keys = sorted(merged)
    if status:
        status.update(action="classifying", done=0, total=len(keys))
    items = [merged[key][0] for key in keys]
    records: List[ClassRecord] = []
    tasks = [(n, chunk) for chunk in _chunks(items, settings.chunk_size)]
    for result in _parallel_map(_classify_chunk, tasks, settings.workers):
        records.extend(result)
        if status:
            status.update(done=len(records))
        if on_progress:
            on_progress()

    out = []
    for key, rec in zip(keys, records):
        assert rec.canonical_key == key, "labelling and canonical form disagree"
        _, sh, st = merged[key]
        out.append(rec.with_flags(
            stepwise_homogeneous=rec.flags.homogeneous and sh,
            stepwise_transitive=rec.flags.transitive and st,
        ))
    return out


def _apply_filter(records: Iterable[ClassRecord], filter: str) -> List[ClassRecord]:
    if filter == FILTER_STEPWISE_HOMOGENEOUS:
        return [r for r in records if r.flags.stepwise_homogeneous]
    if filter == FILTER_STEPWISE_TRANSITIVE:
        return [r for r in records if r.flags.stepwise_transitive]
    return list(records)


def _check_filter(filter: str) -> None:
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}; expected one of {', '.join(FILTERS)}")


def _write_level(frontier: ExtensionFrontier, level_dir: Optional[str]) -> None:
    if not level_dir:
        return
    path = Path(level_dir).expanduser() / f"molr_n{frontier.n}_t{frontier.t}_k{frontier.k}.txt"
    write_records(str(path), (record_from_class(r) for r in frontier.classes))
    logger.info(f"Wrote {len(frontier)} records to {path}")


def trivial_frontier(n: int, t: int) -> ExtensionFrontier:
    """The single class of 1×n t-MOLR (t identity rows)."""
    ident = identity(n)
    rec = canonical_form(MolrSet.from_grids([(ident,)] * t, n))
    return ExtensionFrontier(n, 1, t, (rec,), (FILTER_NONE,))


def seed_classes(
    n: int,
    t: int,
    settings: Optional[EnumerationSettings] = None,
    status: Optional[EnumerationStatus] = None,
    on_progress: Optional[ProgressCallback] = None,
) -> ExtensionFrontier:
    """
    All isotopism classes of 2×n t-MOLR.

    Starts from one 2×n rectangle per derangement cycle type and adds one
    compatible rectangle at a time, deduplicating between steps. Empty when
    no 2×n t-MOLR exists (t > n-1).
    """
    if t < 1 or n < 2:
        raise BadDimensions(f"seeds need t >= 1 and n >= 2 (t={t}, n={n})")
    settings = _settings(settings)
    ident = identity(n)
    forms = sorted({cycle_form(d) for d in _derangements(n)})
    records = [canonical_form(MolrSet.from_grids([(ident, x)], n)) for x in forms]
    records = [
        r.with_flags(stepwise_homogeneous=True, stepwise_transitive=True) for r in records
    ]
    records.sort(key=lambda r: r.canonical_key)
    for size in range(2, t + 1):
        if not records:
            break
        records = _grow("rects", records, n, 2, settings, status, on_progress)
        logger.debug(f"2x{n} {size}-MOLR: {len(records)} classes")
    # 1-row restrictions are trivially stepwise, so the 2-row flags are the plain flags
    records = [
        r.with_flags(
            stepwise_homogeneous=r.flags.homogeneous,
            stepwise_transitive=r.flags.transitive,
        )
        for r in records
    ]
    logger.info(f"Seeded {len(records)} classes of 2x{n} {t}-MOLR")
    return ExtensionFrontier(n, 2, t, tuple(records), (FILTER_NONE, FILTER_NONE))


def extend_frontier(
    f: ExtensionFrontier,
    filter: str = FILTER_NONE,
    settings: Optional[EnumerationSettings] = None,
    status: Optional[EnumerationStatus] = None,
    on_progress: Optional[ProgressCallback] = None,
) -> ExtensionFrontier:
    """
    One row deeper: every class of (k+1)×n t-MOLR extending a class in f.

    A child is stepwise homogeneous (transitive) when it is homogeneous
    (transitive) and some parent it extends is stepwise homogeneous
    (transitive). The filter then drops children lacking the chosen flag.
    """
    _check_filter(filter)
    if f.k >= f.n:
        raise BadDimensions(f"cannot extend {f.k}x{f.n} rectangles")
    settings = _settings(settings)
    level = f.k + 1
    records = _grow("rows", f.classes, f.n, level, settings, status, on_progress) if f.classes else []
    kept = _apply_filter(records, filter)
    if len(kept) > settings.budget:
        raise BudgetExceeded(level, len(kept))
    if status:
        status.finish_level(level, len(kept))
    logger.info(
        f"k={level}: {len(records)} classes of {level}x{f.n} {f.t}-MOLR, {len(kept)} kept ({filter})"
    )
    frontier = ExtensionFrontier(f.n, level, f.t, tuple(kept), f.filters + (filter,))
    _write_level(frontier, settings.level_dir)
    return frontier


def classify_frontier(f: ExtensionFrontier) -> ExtensionFrontier:
    """Recompute homogeneous/transitive flags; stepwise flags never exceed them."""
    out = []
    for rec in f.classes:
        homogeneous = is_homogeneous(rec.representative)
        transitive = len(rec.rect_orbits) == 1
        assert homogeneous or not transitive, "transitive class that is not homogeneous"
        out.append(replace(rec, flags=RegularityFlags(
            homogeneous=homogeneous,
            transitive=transitive,
            stepwise_homogeneous=rec.flags.stepwise_homogeneous and homogeneous,
            stepwise_transitive=rec.flags.stepwise_transitive and transitive,
        )))
    return replace(f, classes=tuple(out))


# ---------------------------------------------------------------------------
# Driving the pipeline
# ---------------------------------------------------------------------------


def enumerate_levels(
    n: int,
    t: int,
    k: int,
    filter: str = FILTER_NONE,
    settings: Optional[EnumerationSettings] = None,
    status: Optional[EnumerationStatus] = None,
    on_progress: Optional[ProgressCallback] = None,
) -> Iterator[ExtensionFrontier]:
    """Yield the frontier for every level 1..k in turn."""
    _check_filter(filter)
    if not (n >= 2 and t >= 1 and 1 <= k <= n):
        raise BadDimensions(f"need n >= 2, t >= 1 and 1 <= k <= n (n={n}, t={t}, k={k})")
    settings = _settings(settings)
    if status:
        status.start()
    frontier = trivial_frontier(n, t)
    yield frontier
    if k == 1:
        return
    seeds = seed_classes(n, t, settings, status, on_progress)
    kept = _apply_filter(seeds.classes, filter)
    if len(kept) > settings.budget:
        raise BudgetExceeded(2, len(kept))
    frontier = replace(seeds, classes=tuple(kept), filters=(FILTER_NONE, filter))
    if status:
        status.finish_level(2, len(frontier))
    _write_level(frontier, settings.level_dir)
    yield frontier
    while frontier.k < k:
        frontier = extend_frontier(frontier, filter, settings, status, on_progress)
        yield frontier


def summarize(
    f: ExtensionFrontier,
    paratopism: bool = True,
    settings: Optional[EnumerationSettings] = None,
) -> LevelSlice:
    histograms: Dict[str, Counter] = {p: Counter() for p in POPULATIONS}
    for rec in f.classes:
        flags = rec.flags
        histograms["all"][rec.aut_order] += 1
        if flags.homogeneous:
            histograms["homogeneous"][rec.aut_order] += 1
        if flags.transitive:
            histograms["transitive"][rec.aut_order] += 1
        if flags.stepwise_homogeneous:
            histograms["stepwise_homogeneous"][rec.aut_order] += 1
        if flags.stepwise_transitive:
            histograms["stepwise_transitive"][rec.aut_order] += 1
    count = None
    if paratopism:
        settings = _settings(settings)
        items = [rec.representative.grids for rec in f.classes]
        keys = set()
        tasks = [(f.n, chunk) for chunk in _chunks(items, settings.chunk_size)]
        for result in _parallel_map(_paratopism_chunk, tasks, settings.workers):
            keys.update(result)
        count = len(keys)
    return LevelSlice(
        f.k,
        {p: dict(sorted(h.items())) for p, h in histograms.items()},
        count,
    )


def enumerate_cell(
    n: int,
    t: int,
    k: int,
    filter: str = FILTER_NONE,
    settings: Optional[EnumerationSettings] = None,
    status: Optional[EnumerationStatus] = None,
    on_progress: Optional[ProgressCallback] = None,
    paratopism: bool = True,
) -> Tuple[LevelSlice, ExtensionFrontier]:
    """Counts for k×n t-MOLR together with the final frontier."""
    frontier = None
    for frontier in enumerate_levels(n, t, k, filter, settings, status, on_progress):
        pass
    table_slice = summarize(frontier, paratopism, settings)
    if status:
        status.complete()
    return table_slice, frontier


def enumerate_table(
    n: int,
    t: int,
    k_max: Optional[int] = None,
    filter: str = FILTER_NONE,
    settings: Optional[EnumerationSettings] = None,
    status: Optional[EnumerationStatus] = None,
    on_progress: Optional[ProgressCallback] = None,
    paratopism: bool = True,
) -> CountTable:
    """Counts for every k from 2 to k_max (default n)."""
    k_max = n if k_max is None else k_max
    table = CountTable(n, t)
    for frontier in enumerate_levels(n, t, k_max, filter, settings, status, on_progress):
        if frontier.k >= 2:
            table.per_k[frontier.k] = summarize(frontier, paratopism, settings)
    if status:
        status.complete()
    return table


# ---------------------------------------------------------------------------
# Stepwise flags of a single set
# ---------------------------------------------------------------------------


def stepwise_flags(m: MolrSet) -> Tuple[bool, bool]:
    """
    (stepwise homogeneous, stepwise transitive) for m.

    A set qualifies when it has the property and deleting some row leaves
    a set that qualifies; 1×n and 2×n sets qualify exactly when they have
    the property.
    """
    memo: Dict[bytes, Tuple[bool, bool]] = {}

    def walk(sub: MolrSet) -> Tuple[bool, bool]:
        rec = autotopism_class(sub)
        if rec.canonical_key in memo:
            return memo[rec.canonical_key]
        homogeneous, transitive = rec.flags.homogeneous, rec.flags.transitive
        if sub.k <= 2 or not (homogeneous or transitive):
            result = (homogeneous, transitive)
        else:
            sh = st = False
            for row in range(sub.k):
                psh, pst = walk(sub.delete_row(row))
                sh = sh or (homogeneous and psh)
                st = st or (transitive and pst)
                if sh == homogeneous and st == transitive:
                    break
            result = (sh, st)
        memo[rec.canonical_key] = result
        return result

    return walk(m)


# ---------------------------------------------------------------------------
# Cross-checks
# ---------------------------------------------------------------------------


def count_normalized_labeled(n: int, t: int, k: int) -> int:
    """
    Number of k×n t-MOLR whose first rows are all the identity, counted
    directly without any isomorph rejection. Equals the sum of
    t!·k!·n!/|Aut| over the isotopism classes.
    """
    ident = identity(n)

    def count(m: MolrSet) -> int:
        if m.k == k:
            return 1
        return sum(count(child) for child in row_extensions(m))

    return count(MolrSet.from_grids([(ident,)] * t, n))


def orbit_sum(frontier: ExtensionFrontier) -> int:
    """Sum of t!·k!·n!/|Aut| over the classes of a frontier."""
    group = factorial(frontier.t) * factorial(frontier.k) * factorial(frontier.n)
    total = 0
    for rec in frontier.classes:
        assert group % rec.aut_order == 0
        total += group // rec.aut_order
    return total


def trisotopism_count(n: int, settings: Optional[EnumerationSettings] = None) -> int:
    """Latin squares of order n up to isotopism and transposition."""
    frontier = None
    for frontier in enumerate_levels(n, 1, n, settings=settings):
        pass
    keys = set()
    for rec in frontier.classes:
        square = rec.representative.rects[0]
        flipped = MolrSet(n, n, (square.transpose(),))
        keys.add(min(rec.canonical_key, canonical_key(flipped)))
    return len(keys)


def is_unimodal(values: Sequence[int]) -> bool:
    i = 0
    while i + 1 < len(values) and values[i] <= values[i + 1]:
        i += 1
    while i + 1 < len(values) and values[i] >= values[i + 1]:
        i += 1
    return i + 1 >= len(values)


def unimodality_notes(tables: Sequence[CountTable]) -> List[str]:
    """Report lines on unimodality of class counts in k (per t) and in t (per k)."""
    notes = []
    for table in tables:
        counts = [c for _, c in sorted(table.isotopism_counts().items()) if c > 0]
        verdict = "unimodal" if is_unimodal(counts) else "not unimodal"
        notes.append(f"n={table.n} t={table.t}: counts over k are {verdict}")
    by_k: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    for table in tables:
        for k, count in table.isotopism_counts().items():
            by_k.setdefault((table.n, k), []).append((table.t, count))
    for (n, k), pairs in sorted(by_k.items()):
        if len(pairs) < 2:
            continue
        counts = [c for _, c in sorted(pairs) if c > 0]
        verdict = "unimodal" if is_unimodal(counts) else "not unimodal"
        notes.append(f"n={n} k={k}: counts over t are {verdict}")
    return notes
