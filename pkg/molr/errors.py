"""
molr/errors.py
Purpose: Exception hierarchy shared by the library and the CLI.
         Every domain error derives from MolrError, itself a ValueError,
         so callers that already catch ValueError for bad input keep working.
Created: 2026-10-19
Last Updated: 2026-10-19
"""

from typing import Optional, Tuple


class MolrError(ValueError):
    """Base class for every domain error raised by molr."""


# ---------------------------------------------------------------------------
# Rectangles and sets
# ---------------------------------------------------------------------------


class BadDimensions(MolrError):
    """Grid is empty, ragged, has k > n, or holds a non-integer entry."""


class RowNotPermutation(MolrError):
    def __init__(self, row: int, message: Optional[str] = None):
        self.row = row
        super().__init__(message or f"row {row} is not a permutation of the symbols")


class ColumnRepeat(MolrError):
    def __init__(self, column: int, symbol: int):
        self.column = column
        self.symbol = symbol
        super().__init__(f"symbol {symbol} repeats in column {column}")


class DimensionMismatch(MolrError):
    """Two objects that must share (t, k, n) do not."""


class NotOrthogonal(MolrError):
    def __init__(self, i: int, j: int, pair: Tuple[int, int]):
        self.i = i
        self.j = j
        self.pair = pair
        super().__init__(f"rectangles {i} and {j} repeat the ordered pair {pair}")


class IndexOutOfRange(MolrError):
    pass


# ---------------------------------------------------------------------------
# Symmetry and enumeration
# ---------------------------------------------------------------------------


class NotAnAutotopism(MolrError):
    """The supplied isotopism does not fix the representative."""


class BudgetExceeded(MolrError):
    def __init__(self, level: int, classes: int):
        self.level = level
        self.classes = classes
        super().__init__(
            f"class budget exceeded at k={level}: {classes} classes in the frontier"
        )


# ---------------------------------------------------------------------------
# Galois constructions
# ---------------------------------------------------------------------------


class NotAPrimePower(MolrError):
    pass


class UnsupportedFieldOrder(MolrError):
    pass


class NTooSmall(MolrError):
    pass


class NotGaloisConstruction(MolrError):
    pass


# ---------------------------------------------------------------------------
# Geometry
# ---------------------------------------------------------------------------


class NotAFullMolsSet(MolrError):
    """Projective completion needs an (n-1)-MOLS of order n."""


class ConcurrentLines(MolrError):
    pass


class LineIsARow(MolrError):
    pass


class InvalidLineSelection(MolrError):
    """Wrong number of lines, repeated lines, or a structure of the wrong kind."""


class WrongShape(MolrError):
    pass


# ---------------------------------------------------------------------------
# Record files
# ---------------------------------------------------------------------------


class RecordParseError(MolrError):
    def __init__(self, line_number: int, message: str, source: str = "<input>"):
        self.line_number = line_number
        self.source = source
        super().__init__(f"{source}:{line_number}: {message}")
