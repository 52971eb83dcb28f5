"""
molr/verify.py
Purpose: Recompute reference tables and diff them against molr.expected.
         A suite returns every mismatching cell; an empty list means the
         recomputation agrees exactly.
Created: 2026-10-19
Last Updated: 2026-10-19
"""

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from .config import EnumerationSettings
from .core import forced_completion
from .enumerate import POPULATIONS, enumerate_table
from .errors import MolrError
from .expected import (
    AUT_HISTOGRAMS,
    GALOIS_AUT_ORDERS,
    ISOTOPISM_COUNTS,
    PARATOPISM_COUNTS,
    REGULARITY,
    table_keys,
)
from .fixtures import FIXTURES
from .galois import galois_mols, stepwise_truncation
from .logging import get_logger
from .status import EnumerationStatus
from .symmetry import autotopism_class

logger = get_logger('verify')

SUITES = ("n4", "n5", "n6", "n7-selected", "galois", "fixtures")
GALOIS_ORDERS = (3, 4, 5, 7, 8)


@dataclass(frozen=True)
class Mismatch:
    cell: str
    expected: Any
    got: Any

    def as_dict(self) -> Dict[str, Any]:
        return {"cell": self.cell, "expected": self.expected, "got": self.got}


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    mismatches: List[Mismatch] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def check(self, cell: str, expected: Any, got: Any) -> None:
        self.checked += 1
        if expected != got:
            logger.warning(f"{self.name}: {cell} expected {expected!r}, got {got!r}")
            self.mismatches.append(Mismatch(cell, expected, got))


# ---------------------------------------------------------------------------
# Count tables
# ---------------------------------------------------------------------------


def _verify_tables(
    result: SuiteResult,
    n: int,
    settings: Optional[EnumerationSettings],
    status: Optional[EnumerationStatus],
    on_progress: Optional[Callable[[], None]],
) -> None:
    for key in table_keys(n):
        t = key[1]
        ks = sorted(ISOTOPISM_COUNTS[key])
        table = enumerate_table(n, t, max(ks), settings=settings, status=status,
                                on_progress=on_progress, paratopism=True)
        for k in ks:
            level = table.per_k[k]
            prefix = f"n={n} t={t} k={k}"
            result.check(f"{prefix} isotopism", ISOTOPISM_COUNTS[key][k], level.total())
            if k in PARATOPISM_COUNTS.get(key, {}):
                result.check(f"{prefix} paratopism", PARATOPISM_COUNTS[key][k], level.paratopism)
            if k in REGULARITY.get(key, {}):
                result.check(f"{prefix} regularity", REGULARITY[key][k], level.regularity())
            if (n, t, k) in AUT_HISTOGRAMS:
                for population in POPULATIONS:
                    expected = AUT_HISTOGRAMS[(n, t, k)].get(population, {})
                    got = level.histograms.get(population, {})
                    result.check(f"{prefix} {population}", expected, got)
        logger.info(f"n={n} t={t}: {result.checked} checks, {len(result.mismatches)} mismatches so far")


# ---------------------------------------------------------------------------
# Galois chains and fixtures
# ---------------------------------------------------------------------------


def _verify_galois(result: SuiteResult) -> None:
    for n in GALOIS_ORDERS:
        try:
            m = galois_mols(n)
            chain = stepwise_truncation(m)
        except MolrError as e:
            result.check(f"GF({n}) chain", "stepwise transitive", str(e))
            continue
        result.check(f"GF({n}) chain length", n - 1, len(chain))
        if n in GALOIS_AUT_ORDERS:
            result.check(f"GF({n}) aut", GALOIS_AUT_ORDERS[n], autotopism_class(m).aut_order)


def _verify_fixtures(result: SuiteResult) -> None:
    for name, fixture in FIXTURES.items():
        try:
            m = fixture.molrset()
        except MolrError as e:
            result.check(f"{name} valid", True, str(e))
            continue
        result.check(f"{name} valid", True, True)
        if fixture.aut is not None or fixture.transitive is not None:
            rec = autotopism_class(m)
            if fixture.aut is not None:
                result.check(f"{name} aut", fixture.aut, rec.aut_order)
            if fixture.transitive is not None:
                result.check(f"{name} transitive", fixture.transitive, rec.flags.transitive)
        if m.k == m.n - 1:
            _, violations = forced_completion(m)
            last = m.n - 1
            stray = [v for v in violations if all(r != last for r, _ in v.cells)]
            result.check(f"{name} completion fails", True, bool(violations))
            result.check(f"{name} violations off the last row", 0, len(stray))


def run_suite(
    name: str,
    settings: Optional[EnumerationSettings] = None,
    status: Optional[EnumerationStatus] = None,
    on_progress: Optional[Callable[[], None]] = None,
) -> SuiteResult:
    """Run one named suite; raises ValueError for an unknown name."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    result = SuiteResult(name)
    started = time.time()
    logger.info(f"Running suite {name}")
    if name == "galois":
        _verify_galois(result)
    elif name == "fixtures":
        _verify_fixtures(result)
    else:
        n = 7 if name == "n7-selected" else int(name[1:])
        _verify_tables(result, n, settings, status, on_progress)
    result.elapsed = time.time() - started
    logger.info(f"Suite {name}: {result.checked} checks, {len(result.mismatches)} mismatches")
    return result
