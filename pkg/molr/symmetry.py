"""
molr/symmetry.py
Purpose: Canonical forms under the isotopism group G_{n,k,t}, autotopism
         groups with generators and rectangle orbits, paratopism keys, the
         homogeneous/transitive classifiers and rectangle-orbit queries.
Created: 2026-10-19
Last Updated: 2026-10-19

Canonical search
----------------
Every isotopism that sends a set onto a normalized form is determined by
the row that becomes row 0, the rectangle that becomes rectangle 0, the
row that becomes row 1 and a column permutation; symbol maps are then
forced. Relative to a base row r0 each other row of rectangle q is the
derangement pos_q(row) where pos_q inverts row r0 of q, and a column
permutation acts on these derangements by conjugation. The pivot row
(rectangle 0, row 1) must therefore land on the least cycle-form over all
(r0, q, r) choices, which leaves only the conjugators of that form to try.
Each choice yields a cell stream; the least stream is the canonical
labelling and the choices attaining it are in bijection with Aut(m).

The class representative is a different object: the least normalized set
in the class, compared on its cell stream rectangle by rectangle. A second
search from the canonical labelling tries one base row per row orbit of
Aut, every lead row and the column relabellings that keep the lead row
small, since it opens the stream.
"""

from collections import deque
from dataclasses import dataclass, field, replace
from math import factorial
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .core import (
    Grid,
    Isotopism,
    MolrSet,
    apply_isotopism,
    conjugate_swap,
    validate_molr,
)
from .errors import DimensionMismatch, IndexOutOfRange, NotAnAutotopism
from .logging import get_logger
from .perms import Perm, conjugate, conjugators, cycle_form, identity, inverse

logger = get_logger('symmetry')

Stream = Tuple[Tuple[Perm, ...], ...]


# ---------------------------------------------------------------------------
# Records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegularityFlags:
    homogeneous: bool = False
    transitive: bool = False
    stepwise_homogeneous: bool = False
    stepwise_transitive: bool = False

    def code(self) -> str:
        """Compact form used in record headers, e.g. 'HTsH'; '-' when empty."""
        parts = [
            ("H", self.homogeneous),
            ("T", self.transitive),
            ("sH", self.stepwise_homogeneous),
            ("sT", self.stepwise_transitive),
        ]
        text = "".join(tag for tag, on in parts if on)
        return text or "-"

    def as_dict(self) -> Dict[str, bool]:
        return {
            "homogeneous": self.homogeneous,
            "transitive": self.transitive,
            "stepwise_homogeneous": self.stepwise_homogeneous,
            "stepwise_transitive": self.stepwise_transitive,
        }


@dataclass(frozen=True)
class ClassRecord:
    canonical_key: bytes
    representative: MolrSet
    aut_order: int
    aut_generators: Tuple[Isotopism, ...]
    rect_orbits: Tuple[Tuple[int, ...], ...]
    flags: RegularityFlags = field(default_factory=RegularityFlags)

    @property
    def n(self) -> int:
        return self.representative.n

    @property
    def k(self) -> int:
        return self.representative.k

    @property
    def t(self) -> int:
        return self.representative.t

    def with_flags(self, **changes: bool) -> "ClassRecord":
        return replace(self, flags=replace(self.flags, **changes))


# ---------------------------------------------------------------------------
# Group action
# ---------------------------------------------------------------------------


def apply(g: Isotopism, m: MolrSet) -> MolrSet:
    if (g.t, g.k, g.n) != (m.t, m.k, m.n):
        raise DimensionMismatch(
            f"isotopism acts on (t,k,n)=({g.t},{g.k},{g.n}), set is ({m.t},{m.k},{m.n})"
        )
    return apply_isotopism(g, m)


def group_elements(generators: Sequence[Isotopism], ident: Isotopism) -> List[Isotopism]:
    """Every element of the group generated by generators, identity first."""
    seen = {ident}
    out = [ident]
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for h in generators:
            x = h.compose(g)
            if x not in seen:
                seen.add(x)
                out.append(x)
                queue.append(x)
    return out


def generating_set(elements: Iterable[Isotopism], ident: Isotopism) -> Tuple[List[Isotopism], int]:
    """Greedy generators for the group formed by elements, plus its order."""
    gens: List[Isotopism] = []
    span = {ident}
    for g in elements:
        if g in span:
            continue
        gens.append(g)
        span = set(group_elements(gens, ident))
    return gens, len(span)


def _orbit_blocks(perms: Iterable[Perm], size: int) -> Tuple[Tuple[int, ...], ...]:
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for i in range(size):
            a, b = find(i), find(p[i])
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks: Dict[int, List[int]] = {}
    for i in range(size):
        blocks.setdefault(find(i), []).append(i)
    return tuple(tuple(b) for _, b in sorted(blocks.items()))


def orbits_of(generators: Sequence[Isotopism], t: int) -> Tuple[Tuple[int, ...], ...]:
    """Orbits of the rectangle indices, each sorted, ordered by least member."""
    return _orbit_blocks((g.rect_perm for g in generators), t)


# ---------------------------------------------------------------------------
# Canonical search
# ---------------------------------------------------------------------------


def _key_of(n: int, k: int, t: int, stream: Stream) -> bytes:
    cells = bytearray([n, k, t])
    for section in stream:
        for row in section:
            cells.extend(row)
    return bytes(cells)


def _stream_to_grids(n: int, stream: Stream) -> List[Grid]:
    ident = identity(n)
    return [(ident,) + tuple(section) for section in stream]


def _pivot_search(m: MolrSet, collect_all: bool) -> Tuple[Stream, List[Isotopism]]:
    """
    Least cell stream over all normalizing labellings of m (k >= 2).

    Returns the stream and the isotopisms producing it: all of them when
    collect_all is set, otherwise just the first one found.
    """
    n, k, t = m.n, m.k, m.t
    grids = m.grids

    bases = []
    pivots = []
    form_cache: Dict[Perm, Perm] = {}
    for r0 in range(k):
        pos = [inverse(g[r0]) for g in grids]
        rel = [[tuple(pos[q][s] for s in g[r]) for r in range(k)] for q, g in enumerate(grids)]
        bases.append((pos, rel))
        for q in range(t):
            for r in range(k):
                if r == r0:
                    continue
                f = rel[q][r]
                form = form_cache.get(f)
                if form is None:
                    form = form_cache[f] = cycle_form(f)
                pivots.append((form, r0, q, r))
    target = min(p[0] for p in pivots)

    best: Optional[Stream] = None
    winners: List[Isotopism] = []
    for form, r0, q0, r1 in pivots:
        if form != target:
            continue
        pos, rel = bases[r0]
        own_rows = [r for r in range(k) if r != r0 and r != r1]
        other_rects = [q for q in range(t) if q != q0]
        for pi in conjugators(rel[q0][r1], target):
            own = {r: conjugate(pi, rel[q0][r]) for r in own_rows}
            rest = sorted(own_rows, key=own.__getitem__)
            head = (target,) + tuple(own[r] for r in rest)
            if best is not None and head > best[0]:
                continue
            row_order = [r1] + rest
            moved = {
                q: tuple(conjugate(pi, rel[q][r]) for r in row_order)
                for q in other_rects
            }
            rect_order = sorted(other_rects, key=moved.__getitem__)
            stream: Stream = (head,) + tuple(moved[q] for q in rect_order)
            if best is None or stream < best:
                best = stream
                winners = []
            elif stream > best:
                continue
            if collect_all or not winners:
                winners.append(_witness(m, pi, pos, r0, row_order, q0, rect_order))
    assert best is not None
    return best, winners


def _witness(
    m: MolrSet,
    pi: Perm,
    pos: List[Perm],
    r0: int,
    row_order: List[int],
    q0: int,
    rect_order: List[int],
) -> Isotopism:
    row_perm = [0] * m.k
    row_perm[r0] = 0
    for i, r in enumerate(row_order):
        row_perm[r] = i + 1
    slots = [q0] + rect_order
    rect_perm = inverse(slots)
    sym_perms = tuple(tuple(pi[pos[q][s]] for s in range(m.n)) for q in slots)
    return Isotopism(rect_perm, tuple(row_perm), pi, sym_perms)


def _single_row_witness(m: MolrSet) -> Isotopism:
    return Isotopism(
        identity(m.t),
        (0,),
        identity(m.n),
        tuple(inverse(g[0]) for g in m.grids),
    )


def _single_row_generators(t: int, n: int) -> List[Isotopism]:
    """Generators of Aut of t identity rows: S_t on rectangles, S_n diagonally."""
    gens = []
    ident_n = identity(n)
    if t >= 2:
        swap = (1, 0) + tuple(range(2, t))
        cycle = tuple((q + 1) % t for q in range(t))
        gens.append(Isotopism(swap, (0,), ident_n, (ident_n,) * t))
        if t >= 3:
            gens.append(Isotopism(cycle, (0,), ident_n, (ident_n,) * t))
    if n >= 2:
        swap = (1, 0) + tuple(range(2, n))
        cycle = tuple((j + 1) % n for j in range(n))
        gens.append(Isotopism(identity(t), (0,), swap, (swap,) * t))
        if n >= 3:
            gens.append(Isotopism(identity(t), (0,), cycle, (cycle,) * t))
    return gens


# ---------------------------------------------------------------------------
# Least normalized representative
# ---------------------------------------------------------------------------


def _relative_rows(m: MolrSet, r0: int) -> Tuple[List[Perm], List[List[Perm]]]:
    pos = [inverse(g[r0]) for g in m.grids]
    rel = [[tuple(pos[q][s] for s in g[r]) for r in range(m.k)] for q, g in enumerate(m.grids)]
    return pos, rel


def _normalized_image(
    rel: List[List[Perm]],
    r0: int,
    sigma: Perm,
    k: int,
    t: int,
    lead_at: Optional[Tuple[int, int]] = None,
) -> Tuple[Tuple[Perm, ...], int, List[int], List[int]]:
    """
    Non-identity rows of the normalized set reached with base row r0, column
    relabelling sigma and lead row lead_at = (rectangle, row), read rectangle
    by rectangle. Also returns the lead rectangle, the row order after r0 and
    the order of the other rectangles. Without lead_at the largest relabelled
    row leads.
    """
    rows = {(q, r): conjugate(sigma, rel[q][r]) for q in range(t) for r in range(k) if r != r0}
    q_star, r_star = lead_at if lead_at is not None else max(rows, key=rows.__getitem__)
    rest_rows = sorted(
        (r for r in range(k) if r != r0 and r != r_star),
        key=lambda r: rows[q_star, r],
        reverse=True,
    )
    row_order = [r_star] + rest_rows
    rest_rects = sorted(
        (q for q in range(t) if q != q_star),
        key=lambda q: rows[q, r_star],
        reverse=True,
    )
    stream = tuple(rows[q, r] for q in [q_star] + rest_rects for r in row_order)
    return stream, q_star, row_order, rest_rects


class _MinimalImageSearch:
    """
    Depth-first search for the least normalized set isotopic to m (k >= 2).

    A normalized image is fixed by the base row r0, the lead row (q, r) that
    becomes row 1 of rectangle 0 and a column relabelling sigma. The lead
    must end up above the other rows of its rectangle and above row r of
    every other rectangle. For each base row and lead the search fixes sigma
    one label at a time so that the relabelled lead is built in increasing
    order, and cuts a branch once a row it must beat is forced above it or
    it passes the first row of the best image so far. Only row orbits of
    Aut(m) need a base row.
    """

    def __init__(self, m: MolrSet, row_reps: Sequence[int]):
        self.m = m
        self.n, self.k, self.t = m.n, m.k, m.t
        self.row_reps = list(row_reps)
        r0 = self.row_reps[0]
        ident = identity(self.n)
        _, rel = _relative_rows(m, r0)
        stream, q_star, row_order, _ = _normalized_image(rel, r0, ident, self.k, self.t)
        self.best = stream
        self.best_at: Tuple[int, Perm, Tuple[int, int]] = (r0, ident, (q_star, row_order[0]))

    def run(self) -> Tuple[MolrSet, Isotopism]:
        """The least normalized set and an isotopism mapping m onto it."""
        n, k, t = self.n, self.k, self.t
        for r0 in self.row_reps:
            _, rel = _relative_rows(self.m, r0)
            self.r0, self.rel = r0, rel
            for q_star in range(t):
                for r_star in range(k):
                    if r_star == r0:
                        continue
                    lead = rel[q_star][r_star]
                    if cycle_form(lead) > self.best[0]:
                        continue
                    self.lead, self.lead_at = lead, (q_star, r_star)
                    self.beaten = [rel[q_star][r] for r in range(k) if r not in (r0, r_star)]
                    self.beaten += [rel[q][r_star] for q in range(t) if q != q_star]
                    self.label = [-1] * n   # column -> label
                    self.column = [-1] * n  # label -> column
                    self.prefix: List[int] = []
                    self._place(0)

        r0, sigma, lead_at = self.best_at
        pos, rel = _relative_rows(self.m, r0)
        stream, q_star, row_order, rest_rects = _normalized_image(rel, r0, sigma, k, t, lead_at)
        ident = identity(n)
        grids = [(ident,) + stream[i * (k - 1):(i + 1) * (k - 1)] for i in range(t)]
        representative = MolrSet.from_grids(grids, n)
        w = _witness(self.m, sigma, pos, r0, row_order, q_star, rest_rects)
        assert apply_isotopism(w, self.m) == representative, "witness misses the representative"
        logger.debug(f"least normalized image from base row {r0}, lead {lead_at}")
        return representative, w

    def _assign(self, x: int, v: int) -> None:
        self.label[x] = v
        self.column[v] = x

    def _unassign(self, x: int) -> None:
        self.column[self.label[x]] = -1
        self.label[x] = -1

    def _place(self, j: int) -> None:
        if j == self.n:
            self._leaf()
            return
        if self.column[j] >= 0:
            self._extend(j)
            return
        for x in range(self.n):
            if self.label[x] < 0:
                self._assign(x, j)
                self._extend(j)
                self._unassign(x)

    def _extend(self, j: int) -> None:
        y = self.lead[self.column[j]]
        if self.label[y] >= 0:
            self._try(j, self.label[y])
            return
        # labels 0..j are taken, so y gets a later one
        for v in range(j + 1, self.n):
            if self.column[v] >= 0:
                continue
            if not self._within_best(j, v):
                break
            self._assign(y, v)
            self._try(j, v)
            self._unassign(y)

    def _within_best(self, j: int, v: int) -> bool:
        target = self.best[0]
        for i in range(j):
            if self.prefix[i] != target[i]:
                return self.prefix[i] < target[i]
        return v <= target[j]

    def _try(self, j: int, v: int) -> None:
        if not self._within_best(j, v):
            return
        self.prefix.append(v)
        if self._feasible(j):
            self._place(j + 1)
        self.prefix.pop()

    def _feasible(self, j: int) -> bool:
        """No row the lead must beat exceeds it so far, and pending ones can stay below it."""
        label, column, prefix = self.label, self.column, self.prefix
        bound: Dict[int, int] = {}
        for f in self.beaten:
            for i in range(j + 1):
                x = f[column[i]]
                w = label[x]
                if w < 0:
                    # x must take a label below prefix[i]
                    if prefix[i] < bound.get(x, self.n):
                        bound[x] = prefix[i]
                    break
                if w != prefix[i]:
                    if w > prefix[i]:
                        return False
                    break
        if not bound:
            return True
        free = [v for v in range(self.n) if column[v] < 0]
        for count, b in enumerate(sorted(bound.values()), start=1):
            if sum(1 for v in free if v < b) < count:
                return False
        return True

    def _leaf(self) -> None:
        sigma = tuple(self.label)
        stream = _normalized_image(self.rel, self.r0, sigma, self.k, self.t, self.lead_at)[0]
        if stream < self.best:
            self.best = stream
            self.best_at = (self.r0, sigma, self.lead_at)


def canonical_key(m: MolrSet) -> bytes:
    """Byte string equal for isotopic sets and distinct otherwise."""
    if m.k == 1:
        return bytes([m.n, 1, m.t]) + bytes(identity(m.n)) * m.t
    stream, _ = _pivot_search(m, collect_all=False)
    return _key_of(m.n, m.k, m.t, stream)


def canonical_labelling(m: MolrSet) -> Tuple[bytes, MolrSet]:
    """Canonical key and the labelled set it was read from."""
    if m.k == 1:
        ident = identity(m.n)
        return canonical_key(m), MolrSet.from_grids([(ident,)] * m.t, m.n)
    stream, _ = _pivot_search(m, collect_all=False)
    return _key_of(m.n, m.k, m.t, stream), MolrSet.from_grids(_stream_to_grids(m.n, stream), m.n)


def autotopism_class(m: MolrSet) -> ClassRecord:
    """
    Canonical key, autotopism group and rectangle orbits of m.

    The record's representative is the canonical labelling, which has
    identity first rows but is not necessarily normalized; generators act
    on it. Use canonical_form when the least normalized representative is
    needed.
    """
    n, k, t = m.n, m.k, m.t
    if k == 1:
        key, labelled = canonical_labelling(m)
        gens = _single_row_generators(t, n)
        order = factorial(t) * factorial(n)
        orbits = orbits_of(gens, t)
        return ClassRecord(
            key, labelled, order, tuple(gens), orbits,
            RegularityFlags(True, True, True, True),
        )

    stream, winners = _pivot_search(m, collect_all=True)
    key = _key_of(n, k, t, stream)
    labelled = MolrSet.from_grids(_stream_to_grids(n, stream), n)

    # winners[i] maps m onto the labelling, so winners[i]∘winners[0]⁻¹ fixes it
    back = winners[0].inverse()
    autos = [w.compose(back) for w in winners]
    gens, span = generating_set(autos, Isotopism.identity(t, k, n))
    assert span == len(winners), f"generators span {span}, expected {len(winners)}"

    orbits = orbits_of(gens, t)
    flags = RegularityFlags(
        homogeneous=is_homogeneous(m),
        transitive=len(orbits) == 1,
    )
    logger.debug(f"autotopisms {n}x{k} t={t}: |Aut|={len(winners)}, {len(gens)} generators")
    return ClassRecord(key, labelled, len(winners), tuple(gens), orbits, flags)


def canonical_form(m: MolrSet) -> ClassRecord:
    """
    Canonical key, representative and autotopism group of m.

    The representative is the lexicographically least normalized set in
    the class (cell stream read rectangle by rectangle, row-major);
    generators act on that representative. Stepwise flags are left unset
    (they depend on the construction chain, see enumerate.stepwise_flags).
    """
    rec = autotopism_class(m)
    if m.k == 1:
        return rec
    row_reps = [block[0] for block in _orbit_blocks((g.row_perm for g in rec.aut_generators), m.k)]
    representative, w = _MinimalImageSearch(rec.representative, row_reps).run()
    w_inv = w.inverse()
    gens = tuple(w.compose(g).compose(w_inv) for g in rec.aut_generators)
    return replace(
        rec,
        representative=representative,
        aut_generators=gens,
        rect_orbits=orbits_of(gens, m.t),
    )


# ---------------------------------------------------------------------------
# Paratopism and regularity
# ---------------------------------------------------------------------------


def paratopism_key(m: MolrSet) -> bytes:
    keys = [canonical_key(m)]
    keys.extend(canonical_key(conjugate_swap(m, c)) for c in range(m.t))
    return min(keys)


def is_homogeneous(m: MolrSet) -> bool:
    if m.t == 1:
        return True
    keys = {canonical_key(m.subset([q])) for q in range(m.t)}
    return len(keys) == 1


def is_transitive(rec: ClassRecord) -> bool:
    return len(rec.rect_orbits) == 1


def _orbit_indices(g: Isotopism, start: int) -> List[int]:
    orbit = [start]
    q = g.rect_perm[start]
    while q != start:
        orbit.append(q)
        q = g.rect_perm[q]
    return orbit


def rect_orbit_of(rec: ClassRecord, g: Isotopism, start: int) -> MolrSet:
    rep = rec.representative
    if not 0 <= start < rep.t:
        raise IndexOutOfRange(f"rectangle {start} outside 0..{rep.t - 1}")
    if (g.t, g.k, g.n) != (rep.t, rep.k, rep.n) or apply_isotopism(g, rep) != rep:
        raise NotAnAutotopism("isotopism does not fix the representative")
    return validate_molr([rep.rects[q] for q in _orbit_indices(g, start)])


def _orbit_sets(rec: ClassRecord) -> Dict[FrozenSet[int], List[int]]:
    """Distinct rectangle orbits of single autotopisms, keyed by index set."""
    rep = rec.representative
    ident = Isotopism.identity(rep.t, rep.k, rep.n)
    found: Dict[FrozenSet[int], List[int]] = {}
    for g in group_elements(rec.aut_generators, ident):
        for start in range(rep.t):
            orbit = _orbit_indices(g, start)
            found.setdefault(frozenset(orbit), orbit)
    return found


def is_orbit_of(a: MolrSet, b: MolrSet) -> bool:
    """True iff a is isotopic to the rectangle orbit of some g in Aut(b)."""
    if (a.k, a.n) != (b.k, b.n) or a.t > b.t:
        raise DimensionMismatch(
            f"cannot look for a {a.k}x{a.n} {a.t}-MOLR inside a {b.k}x{b.n} {b.t}-MOLR"
        )
    target = canonical_key(a)
    rec = autotopism_class(b)
    rep = rec.representative
    for indices, orbit in _orbit_sets(rec).items():
        if len(indices) != a.t:
            continue
        if canonical_key(rep.subset(orbit)) == target:
            return True
    return False


def orbit_restrictions(rec: ClassRecord) -> Dict[bytes, Tuple[int, MolrSet]]:
    """
    Distinct sub-MOLR cut out as rectangle orbits of single autotopisms.

    Maps canonical key to (orbit length, one orbit as a MolrSet); orbits of
    length 1 are skipped.
    """
    rep = rec.representative
    out: Dict[bytes, Tuple[int, MolrSet]] = {}
    for indices, orbit in sorted(_orbit_sets(rec).items(), key=lambda kv: sorted(kv[0])):
        if len(orbit) < 2:
            continue
        sub = rep.subset(orbit)
        out.setdefault(canonical_key(sub), (len(orbit), sub))
    return out
