"""
molr/core.py
Purpose: Latin rectangles, MOLR sets and isotopisms; validity and
         orthogonality checks; (S1)-(S3) normalization; the column/symbol
         conjugate used for paratopism; forced completion of (n-1)-row sets.
Created: 2026-10-19
Last Updated: 2026-10-19
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import (
    BadDimensions,
    ColumnRepeat,
    DimensionMismatch,
    IndexOutOfRange,
    NotOrthogonal,
    RowNotPermutation,
)
from .perms import Perm, compose, identity, inverse, is_permutation

Row = Tuple[int, ...]
Grid = Tuple[Row, ...]
GridLike = Sequence[Sequence[int]]


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LatinRectangle:
    """A k×n array over symbols 0..n-1; rows are permutations, columns repeat nothing."""
    n_cols: int
    n_rows: int
    cells: Grid

    @property
    def n(self) -> int:
        return self.n_cols

    @property
    def k(self) -> int:
        return self.n_rows

    def transpose(self) -> "LatinRectangle":
        if self.n_rows != self.n_cols:
            raise BadDimensions("only Latin squares can be transposed")
        return LatinRectangle(self.n_cols, self.n_rows, tuple(zip(*self.cells)))


@dataclass(frozen=True)
class MolrSet:
    """t pairwise orthogonal k×n Latin rectangles, in order."""
    n: int
    k: int
    rects: Tuple[LatinRectangle, ...]

    @property
    def t(self) -> int:
        return len(self.rects)

    @property
    def grids(self) -> Tuple[Grid, ...]:
        return tuple(r.cells for r in self.rects)

    @classmethod
    def from_grids(cls, grids: Iterable[GridLike], n: Optional[int] = None) -> "MolrSet":
        """Build without validation; callers guarantee the invariants."""
        rects = tuple(
            LatinRectangle(len(g[0]), len(g), tuple(tuple(row) for row in g))
            for g in grids
        )
        if n is None:
            n = rects[0].n_cols
        return cls(n, rects[0].n_rows, rects)

    def restrict_rows(self, rows: Sequence[int]) -> "MolrSet":
        """Keep the given rows (in the given order) of every rectangle."""
        return MolrSet.from_grids(
            (tuple(g[r] for r in rows) for g in self.grids), self.n
        )

    def delete_row(self, row: int) -> "MolrSet":
        return self.restrict_rows([r for r in range(self.k) if r != row])

    def subset(self, indices: Sequence[int]) -> "MolrSet":
        return MolrSet(self.n, self.k, tuple(self.rects[i] for i in indices))


@dataclass(frozen=True)
class Isotopism:
    """
    An element of S_t × S_k × S_n × (S_n)^t.

    Rectangle q is moved to slot rect_perm[q]; row i to row_perm[i];
    column j to col_perm[j]; symbols of the rectangle landing in slot p are
    renamed by sym_perms[p].
    """
    rect_perm: Perm
    row_perm: Perm
    col_perm: Perm
    sym_perms: Tuple[Perm, ...]

    @classmethod
    def identity(cls, t: int, k: int, n: int) -> "Isotopism":
        ident = identity(n)
        return cls(identity(t), identity(k), ident, (ident,) * t)

    @property
    def t(self) -> int:
        return len(self.rect_perm)

    @property
    def k(self) -> int:
        return len(self.row_perm)

    @property
    def n(self) -> int:
        return len(self.col_perm)

    def compose(self, other: "Isotopism") -> "Isotopism":
        """self∘other: apply other first."""
        inv_rect = inverse(self.rect_perm)
        return Isotopism(
            compose(self.rect_perm, other.rect_perm),
            compose(self.row_perm, other.row_perm),
            compose(self.col_perm, other.col_perm),
            tuple(
                compose(self.sym_perms[p], other.sym_perms[inv_rect[p]])
                for p in range(self.t)
            ),
        )

    def inverse(self) -> "Isotopism":
        return Isotopism(
            inverse(self.rect_perm),
            inverse(self.row_perm),
            inverse(self.col_perm),
            tuple(inverse(self.sym_perms[self.rect_perm[q]]) for q in range(self.t)),
        )

    def is_identity(self) -> bool:
        return self == Isotopism.identity(self.t, self.k, self.n)

    def is_well_formed(self) -> bool:
        return (
            is_permutation(self.rect_perm, self.t)
            and is_permutation(self.row_perm, self.k)
            and is_permutation(self.col_perm, self.n)
            and len(self.sym_perms) == self.t
            and all(is_permutation(s, self.n) for s in self.sym_perms)
        )


def apply_isotopism(g: Isotopism, m: MolrSet) -> MolrSet:
    """Apply g to m without checking sizes."""
    n, k = m.n, m.k
    grids = m.grids
    inv_rect = inverse(g.rect_perm)
    out = []
    for p in range(m.t):
        src = grids[inv_rect[p]]
        sym = g.sym_perms[p]
        rows: List[List[int]] = [[0] * n for _ in range(k)]
        for i in range(k):
            target = rows[g.row_perm[i]]
            for j, v in enumerate(src[i]):
                target[g.col_perm[j]] = sym[v]
        out.append(rows)
    return MolrSet.from_grids(out, n)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def validate_rectangle(grid: Union[GridLike, LatinRectangle]) -> LatinRectangle:
    """
    Check a symbol grid and return it as a LatinRectangle.

    Raises BadDimensions for empty, ragged or oversized grids, then
    RowNotPermutation for the first bad row, then ColumnRepeat for the first
    repeated symbol scanning columns left to right.
    """
    if isinstance(grid, LatinRectangle):
        grid = grid.cells
    if not grid or not grid[0]:
        raise BadDimensions("grid must have at least one row and one column")
    n = len(grid[0])
    k = len(grid)
    if any(len(row) != n for row in grid):
        raise BadDimensions("grid rows have different lengths")
    if k > n:
        raise BadDimensions(f"a Latin rectangle has at most n rows (k={k}, n={n})")
    for i, row in enumerate(grid):
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in row):
            raise BadDimensions(f"row {i} holds a non-integer entry")
        if not is_permutation(row, n):
            raise RowNotPermutation(i)
    for j in range(n):
        seen = 0
        for i in range(k):
            v = grid[i][j]
            if seen >> v & 1:
                raise ColumnRepeat(j, v)
            seen |= 1 << v
    return LatinRectangle(n, k, tuple(tuple(row) for row in grid))


def _first_repeated_pair(a: Grid, b: Grid) -> Optional[Tuple[int, int]]:
    seen = set()
    for row_a, row_b in zip(a, b):
        for pair in zip(row_a, row_b):
            if pair in seen:
                return pair
            seen.add(pair)
    return None


def are_orthogonal(a: LatinRectangle, b: LatinRectangle) -> bool:
    if (a.n_rows, a.n_cols) != (b.n_rows, b.n_cols):
        raise DimensionMismatch(
            f"cannot superimpose {a.n_rows}×{a.n_cols} and {b.n_rows}×{b.n_cols}"
        )
    return _first_repeated_pair(a.cells, b.cells) is None


def validate_molr(rects: Sequence[Union[GridLike, LatinRectangle]]) -> MolrSet:
    if not rects:
        raise BadDimensions("a MOLR set needs at least one rectangle")
    checked = [validate_rectangle(r) for r in rects]
    shape = (checked[0].n_rows, checked[0].n_cols)
    for r in checked[1:]:
        if (r.n_rows, r.n_cols) != shape:
            raise DimensionMismatch(
                f"rectangles must share one shape; got {shape} and {(r.n_rows, r.n_cols)}"
            )
    for i, j in combinations(range(len(checked)), 2):
        pair = _first_repeated_pair(checked[i].cells, checked[j].cells)
        if pair is not None:
            raise NotOrthogonal(i, j, pair)
    return MolrSet(shape[1], shape[0], tuple(checked))


def is_valid_molr(grids: Sequence[GridLike]) -> bool:
    try:
        validate_molr(grids)
    except (BadDimensions, RowNotPermutation, ColumnRepeat, DimensionMismatch, NotOrthogonal):
        return False
    return True


# ---------------------------------------------------------------------------
# Normalization
# ---------------------------------------------------------------------------


def is_normalized(m: MolrSet) -> bool:
    ident = identity(m.n)
    grids = m.grids
    if any(g[0] != ident for g in grids):
        return False
    if m.k == 1:
        return True
    seconds = [g[1] for g in grids]
    if any(a <= b for a, b in zip(seconds, seconds[1:])):
        return False
    first = grids[0]
    return all(first[i] > first[i + 1] for i in range(1, m.k - 1))


def normalize_with_witness(m: MolrSet) -> Tuple[MolrSet, Isotopism]:
    """
    Normalize m and return the isotopism that maps m onto the result.

    Already-normalized input is returned unchanged with the identity.
    Otherwise: a column permutation makes rectangle 0's first row the
    identity and per-rectangle symbol maps do the same for every first row
    (S1); the lexicographically largest remaining row becomes row 1 of
    rectangle 0, the other rectangles follow by decreasing row 1 (S2) and the
    remaining rows of rectangle 0 decrease (S3).
    """
    n, k, t = m.n, m.k, m.t
    if is_normalized(m):
        return m, Isotopism.identity(t, k, n)

    grids = m.grids
    col = tuple(grids[0][0])
    sym = []
    for g in grids:
        s = [0] * n
        for j, v in enumerate(g[0]):
            s[v] = col[j]
        sym.append(tuple(s))

    def relabel(q: int, r: int) -> Row:
        out = [0] * n
        for j, v in enumerate(grids[q][r]):
            out[col[j]] = sym[q][v]
        return tuple(out)

    if k == 1:
        rect_order = list(range(t))
        row_order = [0]
    else:
        rel = [[relabel(q, r) for r in range(k)] for q in range(t)]
        p_star, r_star = max(
            ((q, r) for q in range(t) for r in range(1, k)),
            key=lambda qr: rel[qr[0]][qr[1]],
        )
        rest_rows = sorted(
            (r for r in range(1, k) if r != r_star),
            key=lambda r: rel[p_star][r],
            reverse=True,
        )
        row_order = [0, r_star] + rest_rows
        rest_rects = sorted(
            (q for q in range(t) if q != p_star),
            key=lambda q: rel[q][r_star],
            reverse=True,
        )
        rect_order = [p_star] + rest_rects
        seconds = [rel[q][r_star] for q in rect_order]
        assert all(a > b for a, b in zip(seconds, seconds[1:])), "S2 tie"
        firsts = [rel[p_star][r] for r in row_order[1:]]
        assert all(a > b for a, b in zip(firsts, firsts[1:])), "S3 tie"

    rect_perm = inverse(rect_order)
    row_perm = inverse(row_order)
    witness = Isotopism(
        rect_perm,
        row_perm,
        col,
        tuple(sym[q] for q in rect_order),
    )
    return apply_isotopism(witness, m), witness


def normalize(m: MolrSet) -> MolrSet:
    return normalize_with_witness(m)[0]


# ---------------------------------------------------------------------------
# Conjugation (column <-> symbol coordinate)
# ---------------------------------------------------------------------------


def conjugate_swap(m: MolrSet, coord: int) -> MolrSet:
    """
    Exchange the column coordinate with rectangle coord's symbol coordinate.

    In the orthogonal-array view each cell is a tuple (row, col, s_0..s_{t-1});
    the swap exchanges col and s_coord. The result is again a valid set and
    the operation is an involution.
    """
    if not 0 <= coord < m.t:
        raise IndexOutOfRange(f"coordinate {coord} outside 0..{m.t - 1}")
    n, k = m.n, m.k
    grids = m.grids
    pivot = grids[coord]
    out = []
    for q, g in enumerate(grids):
        rows = []
        for i in range(k):
            if q == coord:
                rows.append(inverse(pivot[i]))
            else:
                row = [0] * n
                for j, c in enumerate(pivot[i]):
                    row[c] = g[i][j]
                rows.append(tuple(row))
        out.append(rows)
    assert is_valid_molr(out), "conjugate lost Latinness or orthogonality"
    return MolrSet.from_grids(out, n)


# ---------------------------------------------------------------------------
# Forced completion of (n-1)-row sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairViolation:
    """Rectangles i and j both show the ordered pair at the listed cells."""
    i: int
    j: int
    pair: Tuple[int, int]
    cells: Tuple[Tuple[int, int], ...]


def orthogonality_violations(rects: Sequence[LatinRectangle]) -> List[PairViolation]:
    out = []
    for i, j in combinations(range(len(rects)), 2):
        where: dict = {}
        a, b = rects[i].cells, rects[j].cells
        for r, (row_a, row_b) in enumerate(zip(a, b)):
            for c, pair in enumerate(zip(row_a, row_b)):
                where.setdefault(pair, []).append((r, c))
        for pair, cells in sorted(where.items()):
            if len(cells) > 1:
                out.append(PairViolation(i, j, pair, tuple(cells)))
    return out


def forced_completion(m: MolrSet) -> Tuple[Tuple[LatinRectangle, ...], List[PairViolation]]:
    """
    Complete every (n-1)×n rectangle to its unique Latin square.

    The completed squares need not be orthogonal; every repeated pair is
    reported, and each one involves the added last row.
    """
    if m.k != m.n - 1:
        raise BadDimensions(f"forced completion needs k = n-1 (k={m.k}, n={m.n})")
    full = (1 << m.n) - 1
    squares = []
    for g in m.grids:
        last = []
        for j in range(m.n):
            present = 0
            for row in g:
                present |= 1 << row[j]
            last.append((full & ~present).bit_length() - 1)
        squares.append(validate_rectangle(g + (tuple(last),)))
    return tuple(squares), orthogonality_violations(squares)
