"""
molr/geometry.py
Purpose: Incidence structures built from MOLR sets: partial nets, the
         projective completion of an (n-1)-MOLS, plane-axiom checking,
         Sandler-style line deletion, and the two-row bipartite graph with
         its Latin square.
Created: 2026-10-19
Last Updated: 2026-10-19
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .core import Isotopism, LatinRectangle, MolrSet, normalize, validate_molr, validate_rectangle
from .errors import (
    ConcurrentLines,
    IndexOutOfRange,
    InvalidLineSelection,
    LineIsARow,
    NotAFullMolsSet,
    WrongShape,
)
from .logging import get_logger
from .perms import identity

logger = get_logger('geometry')

Tag = Tuple[Hashable, ...]

KIND_PROJECTIVE = "projective"
KIND_AFFINE = "affine"
KIND_HYPERBOLIC = "hyperbolic"
KIND_NONE = "none"

COLUMN_COLOR = "column"


# ---------------------------------------------------------------------------
# Incidence structures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IncidenceStructure:
    """
    Points are 0..len(points)-1, labelled by ``points``; every line is a
    frozenset of point indices with at least 2 members and a provenance tag:
    ("row", i), ("column", j), ("symbol", r, s) or ("infinity",).
    """
    points: Tuple[Hashable, ...]
    lines: Tuple[frozenset, ...]
    tags: Tuple[Tag, ...]
    source: Optional[Tuple[int, int, int]] = None  # (n, k, t) of the generating set

    def __post_init__(self):
        if len(self.lines) != len(self.tags):
            raise ValueError("every line needs exactly one tag")
        if any(len(line) < 2 for line in self.lines):
            raise ValueError("lines must have at least 2 points")
        if len(set(self.lines)) != len(self.lines):
            raise ValueError("identical lines")

    @property
    def n_points(self) -> int:
        return len(self.points)

    def masks(self) -> List[int]:
        out = []
        for line in self.lines:
            mask = 0
            for p in line:
                mask |= 1 << p
            out.append(mask)
        return out

    def families(self) -> Dict[Hashable, List[int]]:
        """Line indices grouped by tag family: row, column, each rectangle, infinity."""
        out: Dict[Hashable, List[int]] = {}
        for idx, tag in enumerate(self.tags):
            family = ("symbol", tag[1]) if tag[0] == "symbol" else (tag[0],)
            out.setdefault(family, []).append(idx)
        return out


def _build(
    points: Sequence[Hashable],
    lines: Iterable[Tuple[Tag, Iterable[int]]],
    source: Optional[Tuple[int, int, int]],
) -> IncidenceStructure:
    """Drop lines of size < 2 and repeated lines, keeping the first tag."""
    kept_lines = []
    kept_tags = []
    seen = set()
    for tag, members in lines:
        line = frozenset(members)
        if len(line) < 2 or line in seen:
            continue
        seen.add(line)
        kept_lines.append(line)
        kept_tags.append(tag)
    return IncidenceStructure(tuple(points), tuple(kept_lines), tuple(kept_tags), source)


def _cell_lines(m: MolrSet) -> List[Tuple[Tag, List[int]]]:
    n, k = m.n, m.k
    lines: List[Tuple[Tag, List[int]]] = []
    for i in range(k):
        lines.append((("row", i), [i * n + j for j in range(n)]))
    for j in range(n):
        lines.append((("column", j), [i * n + j for i in range(k)]))
    for r, rect in enumerate(m.rects):
        for s in range(n):
            cells = [i * n + j for i in range(k) for j in range(n) if rect.cells[i][j] == s]
            lines.append((("symbol", r, s), cells))
    return lines


def partial_net(m: MolrSet) -> IncidenceStructure:
    """Cells as points; row, column and symbol lines (size-1 lines dropped)."""
    points = [(i, j) for i in range(m.k) for j in range(m.n)]
    return _build(points, _cell_lines(m), (m.n, m.k, m.t))


def complete_to_projective(m: MolrSet) -> IncidenceStructure:
    """
    Projective plane of order n from an (n-1)-MOLS: one ideal point per
    parallel class (rows, columns, each square) on every line of that class,
    plus the line at infinity through all ideal points.
    """
    n = m.n
    if m.k != n or m.t != n - 1:
        raise NotAFullMolsSet(f"need an (n-1)-MOLS of order n, got {m.k}x{n} t={m.t}")
    base = n * n
    points: List[Hashable] = [(i, j) for i in range(n) for j in range(n)]
    points += [("ideal", "row"), ("ideal", "column")]
    points += [("ideal", r) for r in range(m.t)]

    def ideal(tag: Tag) -> int:
        if tag[0] == "row":
            return base
        if tag[0] == "column":
            return base + 1
        return base + 2 + tag[1]

    lines = [(tag, cells + [ideal(tag)]) for tag, cells in _cell_lines(m)]
    lines.append((("infinity",), list(range(base, base + n + 1))))
    return _build(points, lines, (n, m.k, m.t))


# ---------------------------------------------------------------------------
# Plane axioms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlaneReport:
    n_points: int
    n_lines: int
    line_sizes: Dict[int, int]
    axioms: Tuple[bool, bool, bool, bool]
    uncovered_pairs: int
    multiply_covered_pairs: int
    collinear_counts: Dict[int, int]  # collinear-with count -> number of points
    p1: bool
    p2: bool
    p3: bool
    kind: str
    resolution_classes: int  # tag families whose lines partition the points
    curvature: Optional[int] = None

    @property
    def is_plane(self) -> bool:
        return all(self.axioms)

    def as_dict(self) -> Dict[str, object]:
        return {
            "points": self.n_points,
            "lines": self.n_lines,
            "line_sizes": dict(self.line_sizes),
            "axioms": list(self.axioms),
            "uncovered_pairs": self.uncovered_pairs,
            "multiply_covered_pairs": self.multiply_covered_pairs,
            "collinear_counts": dict(self.collinear_counts),
            "p1": self.p1,
            "p2": self.p2,
            "p3": self.p3,
            "kind": self.kind,
            "resolution_classes": self.resolution_classes,
            "curvature": self.curvature,
        }


def _has_quadrangle(n_points: int, lines_through: List[int]) -> bool:
    """Four points, no three on a common line."""
    def collinear(a: int, b: int, c: int) -> bool:
        return lines_through[a] & lines_through[b] & lines_through[c] != 0

    chosen: List[int] = []

    def search(start: int) -> bool:
        if len(chosen) == 4:
            return True
        for p in range(start, n_points):
            if all(not collinear(a, b, p) for a, b in combinations(chosen, 2)):
                chosen.append(p)
                if search(p + 1):
                    return True
                chosen.pop()
        return False

    return search(0)


def check_plane(s: IncidenceStructure) -> PlaneReport:
    v = s.n_points
    masks = s.masks()
    full = (1 << v) - 1
    lines_through = [0] * v
    for idx, line in enumerate(s.lines):
        for p in line:
            lines_through[p] |= 1 << idx

    sizes: Dict[int, int] = {}
    for line in s.lines:
        sizes[len(line)] = sizes.get(len(line), 0) + 1

    uncovered = multiple = 0
    for a, b in combinations(range(v), 2):
        shared = (lines_through[a] & lines_through[b]).bit_count()
        if shared == 0:
            uncovered += 1
        elif shared > 1:
            multiple += 1

    collinear: Dict[int, int] = {}
    for p in range(v):
        reach = 0
        bits = lines_through[p]
        idx = 0
        while bits:
            if bits & 1:
                reach |= masks[idx]
            bits >>= 1
            idx += 1
        count = (reach & ~(1 << p)).bit_count()
        collinear[count] = collinear.get(count, 0) + 1

    axiom1 = all(len(line) >= 2 for line in s.lines)
    axiom2 = uncovered == 0 and multiple == 0
    axiom3 = any(mask != full for mask in masks) and v > 0
    axiom4 = _has_quadrangle(v, lines_through)

    p1 = all(a & b for a, b in combinations(masks, 2))
    parallel_counts = []
    for mask in masks:
        for p in range(v):
            if mask >> p & 1:
                continue
            through = lines_through[p]
            count = 0
            idx = 0
            while through:
                if through & 1 and not masks[idx] & mask:
                    count += 1
                through >>= 1
                idx += 1
            parallel_counts.append(count)
    p2 = bool(parallel_counts) and all(c == 1 for c in parallel_counts)
    p3 = bool(parallel_counts) and all(c >= 2 for c in parallel_counts)

    kind = KIND_NONE
    if axiom1 and axiom2 and axiom3 and axiom4:
        if p1:
            kind = KIND_PROJECTIVE
        elif p2:
            kind = KIND_AFFINE
        elif p3:
            kind = KIND_HYPERBOLIC

    resolution = 0
    for members in s.families().values():
        union = 0
        disjoint = True
        for idx in members:
            if union & masks[idx]:
                disjoint = False
            union |= masks[idx]
        if disjoint and union == full:
            resolution += 1

    curvature = None
    if s.source is not None and axiom2:
        n, k, t = s.source
        curvature = t - k

    return PlaneReport(
        n_points=v,
        n_lines=len(s.lines),
        line_sizes=dict(sorted(sizes.items())),
        axioms=(axiom1, axiom2, axiom3, axiom4),
        uncovered_pairs=uncovered,
        multiply_covered_pairs=multiple,
        collinear_counts=dict(sorted(collinear.items())),
        p1=p1,
        p2=p2,
        p3=p3,
        kind=kind,
        resolution_classes=resolution,
        curvature=curvature,
    )


# ---------------------------------------------------------------------------
# Sandler deletion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SandlerResult:
    structure: IncidenceStructure
    report: PlaneReport
    deleted_points: int


def sandler_delete(s: IncidenceStructure, lines: Sequence[int]) -> SandlerResult:
    """
    Delete the chosen lines together with all their points.

    Three lines: s must be projective and the lines must not share a common
    point. Two lines: s must be affine and the lines must meet (parallel
    lines meet on the line at infinity, which makes the three lines of the
    projective closure concurrent). One line: the generalized form on a
    MOLR plane, where the line must not be a row line.
    """
    chosen = list(lines)
    if not chosen or len(set(chosen)) != len(chosen) or len(chosen) > 3:
        raise InvalidLineSelection("choose one, two or three distinct lines")
    for idx in chosen:
        if not 0 <= idx < len(s.lines):
            raise IndexOutOfRange(f"line {idx} outside 0..{len(s.lines) - 1}")

    if len(chosen) == 1:
        if s.tags[chosen[0]][0] == "row":
            raise LineIsARow(f"line {chosen[0]} is a row line")
    else:
        report = check_plane(s)
        needed = KIND_PROJECTIVE if len(chosen) == 3 else KIND_AFFINE
        if report.kind != needed:
            raise InvalidLineSelection(
                f"deleting {len(chosen)} lines needs a {needed} plane, got {report.kind}"
            )
        common = frozenset.intersection(*(s.lines[i] for i in chosen))
        if len(chosen) == 3 and common:
            raise ConcurrentLines(f"lines {chosen} share point {min(common)}")
        if len(chosen) == 2 and not common:
            raise ConcurrentLines(f"lines {chosen} are parallel, so concurrent at infinity")

    removed = frozenset().union(*(s.lines[i] for i in chosen))
    survivors = [p for p in range(s.n_points) if p not in removed]
    renumber = {p: i for i, p in enumerate(survivors)}
    residue = [
        (tag, [renumber[p] for p in line if p not in removed])
        for idx, (tag, line) in enumerate(zip(s.tags, s.lines))
        if idx not in chosen
    ]
    structure = _build([s.points[p] for p in survivors], residue, s.source)
    result = SandlerResult(structure, check_plane(structure), len(removed))
    logger.debug(
        f"deleted {len(chosen)} lines and {len(removed)} points: {result.report.kind}"
    )
    return result


# ---------------------------------------------------------------------------
# Two-row graph and its Latin square
# ---------------------------------------------------------------------------


def two_row_graph(m: MolrSet) -> nx.Graph:
    """
    Bipartite graph on the cells of a 2-row set: (0, j) and (1, j') are
    joined by the column matching when j == j', and by colour q when
    rectangle q has the same symbol at both cells.
    """
    if m.k != 2:
        raise WrongShape(f"two_row_graph needs k = 2, got k = {m.k}")
    n = m.n
    g = nx.Graph()
    for row in (0, 1):
        g.add_nodes_from(((row, j) for j in range(n)), bipartite=row)
    for j in range(n):
        g.add_edge((0, j), (1, j), color=COLUMN_COLOR)
    for q, rect in enumerate(m.rects):
        top, bottom = rect.cells
        where = {s: j for j, s in enumerate(bottom)}
        for j, s in enumerate(top):
            g.add_edge((0, j), (1, where[s]), color=q)
    return g


def latin_square_of(m: MolrSet) -> LatinRectangle:
    """L[j][j'] = colour of edge (0, j)-(1, j'); the column matching gets symbol n-1."""
    if m.k != 2 or m.t != m.n - 1:
        raise WrongShape(f"latin_square_of needs a 2×n (n-1)-MOLR, got {m.k}x{m.n} t={m.t}")
    n = m.n
    g = two_row_graph(m)
    square = [[-1] * n for _ in range(n)]
    for u, v, data in g.edges(data=True):
        top, bottom = (u, v) if u[0] == 0 else (v, u)
        color = data["color"]
        square[top[1]][bottom[1]] = n - 1 if color == COLUMN_COLOR else color
    return validate_rectangle(square)


def molr_from_latin_square(square: LatinRectangle) -> MolrSet:
    """Inverse of latin_square_of up to isotopism: rebuild the normalized 2×n set."""
    n = square.n_cols
    if square.n_rows != n:
        raise WrongShape("need a Latin square")
    ident = identity(n)
    column = [square.cells[j].index(n - 1) for j in range(n)]
    # relabel bottom cells so the column matching becomes j -> j
    bottom_label = {b: j for j, b in enumerate(column)}
    grids = []
    for q in range(n - 1):
        second = [0] * n
        for j in range(n):
            b = square.cells[j].index(q)
            second[bottom_label[b]] = j
        # rectangle q: top row identity, bottom cell bottom_label[b] holds symbol j
        grids.append([ident, tuple(second)])
    return normalize(validate_molr(grids))


def latin_square_isotopism(h: Isotopism) -> Tuple[Isotopism, bool]:
    """
    The isotopism of L(m) induced by an autotopism h of a 2×n (n-1)-MOLR m
    with identity first rows, and whether it relates L to its transpose.

    Columns permute the cells of both rows alike, rectangles permute the
    colours, and the reserved symbol n-1 is fixed. When h swaps the two rows
    the image applies to the transpose: apply(result, L^T) == L.
    """
    n = h.n
    sym = tuple(h.rect_perm) + (n - 1,)
    iso = Isotopism((0,), h.col_perm, h.col_perm, (sym,))
    return iso, h.row_perm != (0, 1)
