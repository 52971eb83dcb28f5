"""
molr/expected.py
Purpose: Reference counts for k×n t-MOLR, kept as data so `molr verify`
         runs offline. Every table is keyed the same way:
         ISOTOPISM_COUNTS[(n, t)][k], AUT_HISTOGRAMS[(n, t, k)][population].
Created: 2026-10-19
Last Updated: 2026-10-19
"""

from typing import Dict, List, Optional, Tuple

Cell = Tuple[int, int, int]  # (n, t, k)
Quadruple = Tuple[int, int, int, int]  # homogeneous, transitive, stepwise hom., stepwise trans.

# ---------------------------------------------------------------------------
# Non-isotopic t-MOLR (tables "non-isotopic t-MOLR for n=4..7")
# ---------------------------------------------------------------------------

ISOTOPISM_COUNTS: Dict[Tuple[int, int], Dict[int, int]] = {
    (4, 2): {2: 3, 3: 2, 4: 1},
    (4, 3): {2: 2, 3: 1, 4: 1},
    (5, 2): {2: 5, 3: 14, 4: 2, 5: 2},
    (5, 3): {2: 4, 3: 1, 4: 1, 5: 1},
    (5, 4): {2: 3, 3: 1, 4: 1, 5: 1},
    (6, 2): {2: 28, 3: 1526, 4: 2036, 5: 85, 6: 0},
    (6, 3): {2: 103, 3: 2572, 4: 513, 5: 7, 6: 0},
    (6, 4): {2: 92, 3: 118, 4: 12, 5: 8, 6: 0},
    (6, 5): {2: 33, 3: 0, 4: 0, 5: 0, 6: 0},
    # n=7: only the cells that are feasible without a cluster
    (7, 2): {2: 100},
    (7, 5): {2: 10626, 3: 22982, 4: 19, 5: 5, 6: 5, 7: 1},
    (7, 6): {2: 1895, 3: 23, 4: 2, 5: 1, 6: 1, 7: 1},
}

# ---------------------------------------------------------------------------
# Paratopism classes (tables "paratopism classes of t-MOLR for n=4..7")
# ---------------------------------------------------------------------------

PARATOPISM_COUNTS: Dict[Tuple[int, int], Dict[int, int]] = {
    (4, 2): {2: 2, 3: 2, 4: 1},
    (4, 3): {2: 2, 3: 1, 4: 1},
    (5, 2): {2: 3, 3: 9, 4: 1, 5: 1},
    (5, 3): {2: 3, 3: 1, 4: 1, 5: 1},
    (5, 4): {2: 2, 3: 1, 4: 1, 5: 1},
    (6, 2): {2: 14, 3: 575, 4: 745, 5: 44, 6: 0},
    (6, 3): {2: 44, 3: 745, 4: 179, 5: 5, 6: 0},
    (6, 4): {2: 33, 3: 44, 4: 5, 5: 5, 6: 0},
    (6, 5): {2: 17, 3: 0, 4: 0, 5: 0, 6: 0},
    (7, 2): {2: 45},
    (7, 5): {2: 1895, 3: 4013, 4: 12, 5: 4, 6: 4, 7: 1},
    (7, 6): {2: 324, 3: 11, 4: 2, 5: 1, 6: 1, 7: 1},
}

# ---------------------------------------------------------------------------
# Regularity (tables "... sorted by increasing regularity"):
# (homogeneous, transitive, stepwise homogeneous, stepwise transitive)
# ---------------------------------------------------------------------------

REGULARITY: Dict[Tuple[int, int], Dict[int, Quadruple]] = {
    (4, 2): {2: (2, 2, 2, 2), 3: (2, 2, 1, 1), 4: (1, 1, 1, 1)},
    (4, 3): {2: (1, 1, 1, 1), 3: (1, 1, 1, 1), 4: (1, 1, 1, 1)},
    (5, 2): {2: (4, 3, 4, 3), 3: (11, 9, 7, 6), 4: (2, 1, 2, 1), 5: (2, 1, 2, 1)},
    # the 3×5..5×5 cells follow the histogram appendix: homogeneous, never transitive
    (5, 3): {2: (3, 2, 3, 2), 3: (1, 0, 0, 0), 4: (1, 0, 0, 0), 5: (1, 0, 0, 0)},
    (5, 4): {2: (2, 2, 2, 2), 3: (1, 1, 1, 1), 4: (1, 1, 1, 1), 5: (1, 1, 1, 1)},
    (6, 2): {
        2: (12, 11, 12, 11),
        3: (280, 170, 158, 103),
        4: (229, 160, 66, 50),
        5: (43, 36, 13, 12),
        6: (0, 0, 0, 0),
    },
    (6, 3): {
        2: (16, 6, 16, 6),
        3: (115, 29, 32, 4),
        4: (62, 39, 4, 1),
        5: (4, 3, 0, 0),
        6: (0, 0, 0, 0),
    },
    (6, 4): {
        2: (9, 8, 9, 8),
        3: (19, 17, 15, 15),
        4: (4, 3, 0, 0),
        5: (4, 4, 0, 0),
        6: (0, 0, 0, 0),
    },
    (6, 5): {2: (2, 2, 2, 2), 3: (0, 0, 0, 0), 4: (0, 0, 0, 0), 5: (0, 0, 0, 0), 6: (0, 0, 0, 0)},
    (7, 2): {2: (42, 29, 42, 29)},
    (7, 5): {
        2: (176, 6, 176, 6),
        3: (49, 42, 48, 42),
        4: (2, 0, 2, 0),
        5: (4, 2, 1, 0),
        6: (5, 3, 1, 0),
        7: (1, 0, 1, 0),
    },
    (7, 6): {
        2: (26, 5, 26, 5),
        3: (7, 7, 6, 4),
        4: (2, 2, 2, 2),
        5: (1, 1, 1, 1),
        6: (1, 1, 1, 1),
        7: (1, 1, 1, 1),
    },
}

# ---------------------------------------------------------------------------
# Autotopism group orders (appendix tables "t-MOLR for n=..."), one histogram
# {|Aut|: classes} per population. A missing population is empty; cells
# with no classes have no entry.
# ---------------------------------------------------------------------------

AUT_HISTOGRAMS: Dict[Cell, Dict[str, Dict[int, int]]] = {
    (4, 2, 2): {
        "all": {8: 1, 16: 2},
        "homogeneous": {16: 2},
        "transitive": {16: 2},
        "stepwise_homogeneous": {16: 2},
        "stepwise_transitive": {16: 2},
    },
    (4, 2, 3): {
        "all": {8: 1, 24: 1},
        "homogeneous": {8: 1, 24: 1},
        "transitive": {8: 1, 24: 1},
        "stepwise_homogeneous": {24: 1},
        "stepwise_transitive": {24: 1},
    },
    (4, 2, 4): {
        "all": {96: 1},
        "homogeneous": {96: 1},
        "transitive": {96: 1},
        "stepwise_homogeneous": {96: 1},
        "stepwise_transitive": {96: 1},
    },
    (4, 3, 2): {
        "all": {16: 1, 48: 1},
        "homogeneous": {48: 1},
        "transitive": {48: 1},
        "stepwise_homogeneous": {48: 1},
        "stepwise_transitive": {48: 1},
    },
    (4, 3, 3): {
        "all": {72: 1},
        "homogeneous": {72: 1},
        "transitive": {72: 1},
        "stepwise_homogeneous": {72: 1},
        "stepwise_transitive": {72: 1},
    },
    (4, 3, 4): {
        "all": {288: 1},
        "homogeneous": {288: 1},
        "transitive": {288: 1},
        "stepwise_homogeneous": {288: 1},
        "stepwise_transitive": {288: 1},
    },
    (5, 2, 2): {
        "all": {2: 1, 4: 2, 10: 1, 20: 1},
        "homogeneous": {4: 2, 10: 1, 20: 1},
        "transitive": {4: 2, 20: 1},
        "stepwise_homogeneous": {4: 2, 10: 1, 20: 1},
        "stepwise_transitive": {4: 2, 20: 1},
    },
    (5, 2, 3): {
        "all": {1: 1, 2: 7, 4: 3, 10: 2, 20: 1},
        "homogeneous": {1: 1, 2: 4, 4: 3, 10: 2, 20: 1},
        "transitive": {2: 4, 4: 3, 10: 1, 20: 1},
        "stepwise_homogeneous": {2: 1, 4: 3, 10: 2, 20: 1},
        "stepwise_transitive": {2: 1, 4: 3, 10: 1, 20: 1},
    },
    (5, 2, 4): {
        "all": {20: 1, 40: 1},
        "homogeneous": {20: 1, 40: 1},
        "transitive": {40: 1},
        "stepwise_homogeneous": {20: 1, 40: 1},
        "stepwise_transitive": {40: 1},
    },
    (5, 2, 5): {
        "all": {100: 1, 200: 1},
        "homogeneous": {100: 1, 200: 1},
        "transitive": {200: 1},
        "stepwise_homogeneous": {100: 1, 200: 1},
        "stepwise_transitive": {200: 1},
    },
    (5, 3, 2): {
        "all": {2: 1, 6: 2, 10: 1},
        "homogeneous": {6: 2, 10: 1},
        "transitive": {6: 2},
        "stepwise_homogeneous": {6: 2, 10: 1},
        "stepwise_transitive": {6: 2},
    },
    (5, 3, 3): {
        "all": {10: 1},
        "homogeneous": {10: 1},
    },
    (5, 3, 4): {
        "all": {20: 1},
        "homogeneous": {20: 1},
    },
    (5, 3, 5): {
        "all": {100: 1},
        "homogeneous": {100: 1},
    },
    (5, 4, 2): {
        "all": {6: 1, 24: 1, 40: 1},
        "homogeneous": {24: 1, 40: 1},
        "transitive": {24: 1, 40: 1},
        "stepwise_homogeneous": {24: 1, 40: 1},
        "stepwise_transitive": {24: 1, 40: 1},
    },
    (5, 4, 3): {
        "all": {40: 1},
        "homogeneous": {40: 1},
        "transitive": {40: 1},
        "stepwise_homogeneous": {40: 1},
        "stepwise_transitive": {40: 1},
    },
    (5, 4, 4): {
        "all": {80: 1},
        "homogeneous": {80: 1},
        "transitive": {80: 1},
        "stepwise_homogeneous": {80: 1},
        "stepwise_transitive": {80: 1},
    },
    (5, 4, 5): {
        "all": {400: 1},
        "homogeneous": {400: 1},
        "transitive": {400: 1},
        "stepwise_homogeneous": {400: 1},
        "stepwise_transitive": {400: 1},
    },
    (6, 2, 2): {
        "all": {1: 1, 2: 7, 4: 7, 6: 1, 8: 3, 12: 6, 24: 2, 72: 1},
        "homogeneous": {2: 3, 4: 2, 8: 3, 12: 1, 24: 2, 72: 1},
        "transitive": {2: 2, 4: 2, 8: 3, 12: 1, 24: 2, 72: 1},
        "stepwise_homogeneous": {2: 3, 4: 2, 8: 3, 12: 1, 24: 2, 72: 1},
        "stepwise_transitive": {2: 2, 4: 2, 8: 3, 12: 1, 24: 2, 72: 1},
    },
    (6, 2, 3): {
        "all": {1: 1155, 2: 252, 3: 18, 4: 59, 6: 19, 8: 8, 12: 11, 24: 3, 216: 1},
        "homogeneous": {1: 89, 2: 117, 3: 1, 4: 40, 6: 13, 8: 8, 12: 8, 24: 3, 216: 1},
        "transitive": {2: 100, 4: 40, 6: 10, 8: 8, 12: 8, 24: 3, 216: 1},
        "stepwise_homogeneous": {1: 43, 2: 63, 3: 1, 4: 26, 6: 9, 8: 8, 12: 4, 24: 3, 216: 1},
        "stepwise_transitive": {2: 52, 4: 26, 6: 9, 8: 8, 12: 4, 24: 3, 216: 1},
    },
    (6, 2, 4): {
        "all": {1: 1425, 2: 425, 3: 30, 4: 78, 6: 35, 8: 16, 12: 21, 16: 1, 24: 3, 48: 2},
        "homogeneous": {1: 36, 2: 112, 3: 5, 4: 31, 6: 11, 8: 16, 12: 12, 16: 1, 24: 3, 48: 2},
        "transitive": {2: 92, 4: 29, 6: 9, 8: 15, 12: 9, 16: 1, 24: 3, 48: 2},
        "stepwise_homogeneous": {1: 7, 2: 27, 3: 1, 4: 11, 6: 3, 8: 8, 12: 6, 24: 2, 48: 1},
        "stepwise_transitive": {2: 22, 4: 10, 6: 3, 8: 6, 12: 6, 24: 2, 48: 1},
    },
    (6, 2, 5): {
        "all": {1: 5, 2: 25, 3: 2, 4: 26, 6: 4, 8: 11, 12: 7, 16: 2, 24: 1, 48: 2},
        "homogeneous": {2: 10, 4: 13, 6: 3, 8: 6, 12: 7, 16: 2, 48: 2},
        "transitive": {2: 6, 4: 11, 6: 2, 8: 6, 12: 7, 16: 2, 48: 2},
        "stepwise_homogeneous": {2: 2, 6: 1, 8: 4, 12: 2, 16: 2, 48: 2},
        "stepwise_transitive": {2: 1, 6: 1, 8: 4, 12: 2, 16: 2, 48: 2},
    },
    (6, 3, 2): {
        "all": {1: 24, 2: 25, 4: 26, 6: 2, 8: 7, 12: 13, 24: 4, 36: 1, 72: 1},
        "homogeneous": {1: 3, 2: 4, 4: 3, 12: 3, 24: 1, 36: 1, 72: 1},
        "transitive": {12: 3, 24: 1, 36: 1, 72: 1},
        "stepwise_homogeneous": {1: 3, 2: 4, 4: 3, 12: 3, 24: 1, 36: 1, 72: 1},
        "stepwise_transitive": {12: 3, 24: 1, 36: 1, 72: 1},
    },
    (6, 3, 3): {
        "all": {1: 1980, 2: 442, 3: 54, 4: 27, 6: 55, 12: 6, 18: 4, 36: 4},
        "homogeneous": {1: 41, 2: 32, 3: 11, 4: 2, 6: 18, 12: 3, 18: 4, 36: 4},
        "transitive": {3: 6, 6: 13, 12: 2, 18: 4, 36: 4},
        "stepwise_homogeneous": {1: 11, 2: 11, 3: 2, 4: 2, 6: 2, 12: 1, 18: 1, 36: 2},
        "stepwise_transitive": {12: 1, 18: 1, 36: 2},
    },
    (6, 3, 4): {
        "all": {1: 93, 2: 194, 3: 96, 4: 37, 6: 64, 8: 3, 9: 2, 12: 11, 18: 9, 24: 1, 36: 3},
        "homogeneous": {1: 1, 2: 8, 3: 11, 4: 1, 6: 23, 9: 2, 12: 3, 18: 9, 24: 1, 36: 3},
        "transitive": {3: 3, 6: 18, 9: 2, 12: 3, 18: 9, 24: 1, 36: 3},
        "stepwise_homogeneous": {6: 3, 36: 1},
        "stepwise_transitive": {36: 1},
    },
    (6, 3, 5): {
        "all": {3: 2, 6: 2, 9: 1, 18: 2},
        "homogeneous": {6: 1, 9: 1, 18: 2},
        "transitive": {9: 1, 18: 2},
    },
    (6, 4, 2): {
        "all": {1: 14, 2: 18, 3: 1, 4: 28, 8: 8, 12: 10, 16: 2, 18: 1, 24: 4, 36: 4, 48: 2},
        "homogeneous": {2: 1, 4: 2, 8: 2, 16: 2, 48: 2},
        "transitive": {4: 2, 8: 2, 16: 2, 48: 2},
        "stepwise_homogeneous": {2: 1, 4: 2, 8: 2, 16: 2, 48: 2},
        "stepwise_transitive": {4: 2, 8: 2, 16: 2, 48: 2},
    },
    (6, 4, 3): {
        "all": {1: 16, 2: 38, 3: 5, 4: 22, 6: 10, 8: 6, 12: 9, 16: 2, 18: 4, 24: 1, 36: 3, 48: 1, 144: 1},
        "homogeneous": {4: 5, 6: 1, 8: 6, 12: 2, 16: 2, 24: 1, 48: 1, 144: 1},
        "transitive": {4: 5, 8: 6, 12: 1, 16: 2, 24: 1, 48: 1, 144: 1},
        "stepwise_homogeneous": {4: 3, 8: 6, 12: 1, 16: 2, 24: 1, 48: 1, 144: 1},
        "stepwise_transitive": {4: 3, 8: 6, 12: 1, 16: 2, 24: 1, 48: 1, 144: 1},
    },
    (6, 4, 4): {
        "all": {3: 2, 6: 2, 9: 2, 12: 1, 18: 3, 24: 1, 72: 1},
        "homogeneous": {9: 1, 12: 1, 24: 1, 72: 1},
        "transitive": {12: 1, 24: 1, 72: 1},
    },
    (6, 4, 5): {
        "all": {6: 1, 9: 2, 18: 1, 24: 1, 36: 1, 72: 2},
        "homogeneous": {24: 1, 36: 1, 72: 2},
        "transitive": {24: 1, 36: 1, 72: 2},
    },
    (6, 5, 2): {
        "all": {1: 1, 2: 5, 4: 6, 6: 1, 8: 7, 12: 1, 16: 2, 20: 1, 24: 3, 36: 2, 48: 1, 72: 2, 240: 1},
        "homogeneous": {20: 1, 240: 1},
        "transitive": {20: 1, 240: 1},
        "stepwise_homogeneous": {20: 1, 240: 1},
        "stepwise_transitive": {20: 1, 240: 1},
    },
    (7, 2, 2): {
        "all": {1: 21, 2: 55, 4: 18, 14: 2, 24: 1, 28: 1, 48: 2},
        "homogeneous": {1: 3, 2: 16, 4: 18, 14: 2, 28: 1, 48: 2},
        "transitive": {2: 8, 4: 18, 28: 1, 48: 2},
        "stepwise_homogeneous": {1: 3, 2: 16, 4: 18, 14: 2, 28: 1, 48: 2},
        "stepwise_transitive": {2: 8, 4: 18, 28: 1, 48: 2},
    },
    (7, 5, 2): {
        "all": {1: 9590, 2: 957, 4: 48, 5: 4, 8: 24, 10: 2, 14: 1},
        "homogeneous": {1: 122, 2: 37, 4: 4, 5: 4, 8: 6, 10: 2, 14: 1},
        "transitive": {5: 4, 10: 2},
        "stepwise_homogeneous": {1: 122, 2: 37, 4: 4, 5: 4, 8: 6, 10: 2, 14: 1},
        "stepwise_transitive": {5: 4, 10: 2},
    },
    (7, 5, 3): {
        "all": {1: 21848, 2: 1039, 3: 39, 5: 30, 6: 7, 7: 1, 10: 12, 14: 1, 21: 5},
        "homogeneous": {1: 3, 2: 1, 5: 30, 10: 12, 14: 1, 21: 2},
        "transitive": {5: 30, 10: 12},
        "stepwise_homogeneous": {1: 2, 2: 1, 5: 30, 10: 12, 14: 1, 21: 2},
        "stepwise_transitive": {5: 30, 10: 12},
    },
    (7, 5, 4): {
        "all": {1: 2, 2: 4, 4: 8, 8: 3, 14: 1, 21: 1},
        "homogeneous": {14: 1, 21: 1},
        "stepwise_homogeneous": {14: 1, 21: 1},
    },
    (7, 5, 5): {
        "all": {4: 2, 14: 1, 20: 2},
        "homogeneous": {4: 1, 14: 1, 20: 2},
        "transitive": {20: 2},
        "stepwise_homogeneous": {14: 1},
    },
    (7, 5, 6): {
        "all": {20: 1, 24: 1, 42: 1, 120: 2},
        "homogeneous": {20: 1, 24: 1, 42: 1, 120: 2},
        "transitive": {20: 1, 120: 2},
        "stepwise_homogeneous": {42: 1},
    },
    (7, 5, 7): {
        "all": {294: 1},
        "homogeneous": {294: 1},
        "stepwise_homogeneous": {294: 1},
    },
    (7, 6, 2): {
        "all": {1: 1505, 2: 328, 3: 2, 4: 29, 5: 4, 6: 5, 8: 14, 10: 2, 12: 1, 16: 2, 48: 2, 84: 1},
        "homogeneous": {1: 7, 2: 7, 3: 1, 4: 1, 5: 1, 6: 2, 10: 1, 12: 1, 16: 2, 48: 2, 84: 1},
        "transitive": {6: 1, 12: 1, 48: 2, 84: 1},
        "stepwise_homogeneous": {1: 7, 2: 7, 3: 1, 4: 1, 5: 1, 6: 2, 10: 1, 12: 1, 16: 2, 48: 2, 84: 1},
        "stepwise_transitive": {6: 1, 12: 1, 48: 2, 84: 1},
    },
    (7, 6, 3): {
        "all": {1: 8, 2: 4, 3: 1, 6: 5, 12: 1, 21: 1, 84: 1, 126: 2},
        "homogeneous": {6: 3, 12: 1, 84: 1, 126: 2},
        "transitive": {6: 3, 12: 1, 84: 1, 126: 2},
        "stepwise_homogeneous": {6: 2, 12: 1, 84: 1, 126: 2},
        "stepwise_transitive": {12: 1, 84: 1, 126: 2},
    },
    (7, 6, 4): {
        "all": {84: 1, 126: 1},
        "homogeneous": {84: 1, 126: 1},
        "transitive": {84: 1, 126: 1},
        "stepwise_homogeneous": {84: 1, 126: 1},
        "stepwise_transitive": {84: 1, 126: 1},
    },
    (7, 6, 5): {
        "all": {84: 1},
        "homogeneous": {84: 1},
        "transitive": {84: 1},
        "stepwise_homogeneous": {84: 1},
        "stepwise_transitive": {84: 1},
    },
    (7, 6, 6): {
        "all": {252: 1},
        "homogeneous": {252: 1},
        "transitive": {252: 1},
        "stepwise_homogeneous": {252: 1},
        "stepwise_transitive": {252: 1},
    },
    (7, 6, 7): {
        "all": {1764: 1},
        "homogeneous": {1764: 1},
        "transitive": {1764: 1},
        "stepwise_homogeneous": {1764: 1},
        "stepwise_transitive": {1764: 1},
    },
}

# ---------------------------------------------------------------------------
# Stepwise census for n=8 and n=9 (reference only, not recomputed)
# ---------------------------------------------------------------------------

# (stepwise homogeneous, stepwise transitive) for k = 2..8
STEPWISE_CENSUS_8: Dict[int, Dict[int, Tuple[int, int]]] = {
    2: {2: (186, 99), 3: (446443, 45429), 4: (4432284, 1097655), 5: (3826527, 2569679),
        6: (242732, 206612), 7: (484, 305), 8: (70, 13)},
    3: {2: (11565, 66), 3: (9144025, 7627), 4: (178502, 41505), 5: (628, 75),
        6: (111, 32), 7: (10, 6), 8: (7, 3)},
    4: {2: (216950, 152), 3: (1648723, 4284), 4: (3547, 712), 5: (58, 20),
        6: (4, 0), 7: (3, 0), 8: (3, 0)},
    5: {2: (509622, 19), 3: (2652, 0), 4: (267, 0), 5: (2, 0), 6: (1, 0), 7: (1, 0), 8: (1, 0)},
    6: {2: (91013, 109), 3: (975, 908), 4: (155, 146), 5: (1, 0), 6: (1, 0), 7: (1, 0), 8: (1, 0)},
    7: {2: (4538, 5), 3: (2, 2), 4: (2, 2), 5: (1, 1), 6: (1, 1), 7: (1, 1), 8: (1, 1)},
}

# stepwise transitive classes for k = 2..9
STEPWISE_TRANSITIVE_9: Dict[int, Dict[int, int]] = {
    2: dict(zip(range(2, 10), (126, 1418577, 560524587, 20019499500, 67480364637,
                                5872237985, 14940988, 28955))),
    3: dict(zip(range(2, 10), (202, 72836, 1746912, 0, 0, 0, 0, 0))),
    4: dict(zip(range(2, 10), (1067, 356680, 2640163, 645453, 1816, 31, 7, 5))),
    5: dict(zip(range(2, 10), (17, 0, 0, 0, 0, 0, 0, 0))),
    6: dict(zip(range(2, 10), (543, 21620, 244, 33, 16, 1, 1, 1))),
    7: dict(zip(range(2, 10), (39, 1532, 300, 0, 0, 0, 0, 0))),
    8: dict(zip(range(2, 10), (54, 48, 27, 22, 16, 9, 7, 5))),
}

# ---------------------------------------------------------------------------
# Galois (n-1)-MOLS autotopism orders
# ---------------------------------------------------------------------------

GALOIS_AUT_ORDERS: Dict[int, int] = {4: 288, 5: 400, 7: 1764, 8: 9408, 9: 10368}


def table_keys(n: Optional[int] = None) -> List[Tuple[int, int]]:
    """The (n, t) pairs with embedded counts, optionally for one n."""
    return sorted(key for key in ISOTOPISM_COUNTS if n is None or key[0] == n)


def histogram(n: int, t: int, k: int, population: str = "all") -> Dict[int, int]:
    return AUT_HISTOGRAMS.get((n, t, k), {}).get(population, {})


def expected_table(n: int, t: int) -> Dict[str, object]:
    """Everything known for one (n, t), in a JSON-friendly shape."""
    if (n, t) not in ISOTOPISM_COUNTS:
        raise KeyError(f"no embedded table for n={n}, t={t}")
    ks = sorted(ISOTOPISM_COUNTS[(n, t)])
    return {
        "n": n,
        "t": t,
        "isotopism": dict(ISOTOPISM_COUNTS[(n, t)]),
        "paratopism": dict(PARATOPISM_COUNTS.get((n, t), {})),
        "regularity": {k: REGULARITY.get((n, t), {}).get(k) for k in ks},
        "histograms": {k: AUT_HISTOGRAMS[(n, t, k)] for k in ks if (n, t, k) in AUT_HISTOGRAMS},
    }
