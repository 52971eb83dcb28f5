"""
molr/fixtures.py
Purpose: Published MOLS/MOLR examples with their known autotopism orders.
         Each rectangle is stored as one digit string per row; `molrset()`
         validates and builds the set, `record_text()` renders it in the
         record file format.
Created: 2026-10-19
Last Updated: 2026-10-19
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .core import MolrSet, validate_molr
from .records import MolrRecord, format_record


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    rects: Tuple[Tuple[str, ...], ...]
    aut: Optional[int] = None
    transitive: Optional[bool] = None

    def grids(self) -> List[List[List[int]]]:
        return [[[int(ch) for ch in row] for row in rect] for rect in self.rects]

    def molrset(self) -> MolrSet:
        return _build(self.name)

    def record_text(self) -> str:
        return format_record(MolrRecord(self.molrset(), self.aut))


def _square(rows: str) -> Tuple[str, ...]:
    return tuple(rows.split())


_GALOIS_9 = (
    "012345678 876210345 768021534 687102453 543678210 435867021 354786102 201453786 120534867",
    "012345678 768021534 543678210 201453786 354786102 120534867 876210345 435867021 687102453",
    "012345678 687102453 201453786 354786102 435867021 768021534 120534867 876210345 543678210",
    "012345678 543678210 354786102 435867021 876210345 687102453 768021534 120534867 201453786",
    "012345678 435867021 120534867 768021534 687102453 354786102 201453786 543678210 876210345",
    "012345678 354786102 876210345 120534867 768021534 201453786 543678210 687102453 435867021",
    "012345678 201453786 435867021 876210345 120534867 543678210 687102453 768021534 354786102",
    "012345678 120534867 687102453 543678210 201453786 876210345 435867021 354786102 768021534",
)

FIXTURES: Dict[str, Fixture] = {
    f.name: f
    for f in (
        Fixture(
            "transitive9",
            "The unique stepwise transitive 6-MOLS of order 9",
            tuple(_square(s) for s in (
                "012345678 876532410 708416532 620187354 584623701 435701826 341078265 267850143 153264087",
                "012345678 785426301 176038245 203654187 348710562 651287034 824563710 430172856 567801423",
                "012345678 658073142 847621350 475812063 730268415 564130287 286704531 103586724 321457806",
                "012345678 307681524 654872013 168503742 271054836 723468105 530126487 845217360 486730251",
                "012345678 264718035 380567421 547230816 853176240 106824753 478651302 621403587 735082164",
                "012345678 140867253 265783104 831476520 426501387 387052461 753210846 578634012 604128735",
            )),
            aut=432,
            transitive=True,
        ),
        Fixture(
            "transitive8",
            "A transitive 3-MOLS of order 8 with an autotopism group of order 48",
            tuple(_square(s) for s in (
                "01234567 76543210 67452301 54761032 45670123 32107654 20316475 13025746",
                "01234567 67452301 54761032 23016745 10325476 76543210 42170653 35607124",
                "01234567 10325476 32107654 76543210 54761032 45670123 63052741 27416305",
            )),
            aut=48,
            transitive=True,
        ),
        Fixture(
            "incomplete9x10",
            "A 3-MOLR of size 9x10 whose forced 10x10 completion fails only in the last row",
            tuple(_square(s) for s in (
                "0123456789 9876543102 8935710264 7640329851 6754182093 5461908327 4507261938 3012894675 2389675410",
                "0123456789 8965072431 4706231895 5389140276 2431809567 1042367958 9270685143 6897523014 3514798602",
                "0123456789 4532691870 9670842513 1904538627 3086217954 7259183046 8415970362 2368705491 6847029135",
            )),
        ),
        Fixture(
            "galois9",
            "The 8-MOLS of order 9 from the Galois plane",
            tuple(_square(s) for s in _GALOIS_9),
            aut=10368,
            transitive=True,
        ),
        Fixture(
            "aut31104",
            "An 8-MOLS of order 9 with an autotopism group of order 31104",
            tuple(_square(s) for s in (
                _GALOIS_9[0],
                _GALOIS_9[1],
                "012345678 687102453 120534867 543678210 435867021 876210345 201453786 768021534 354786102",
                _GALOIS_9[3],
                "012345678 435867021 201453786 876210345 687102453 543678210 120534867 354786102 768021534",
                _GALOIS_9[5],
                "012345678 201453786 687102453 354786102 120534867 768021534 435867021 543678210 876210345",
                "012345678 120534867 435867021 768021534 201453786 354786102 687102453 876210345 543678210",
            )),
            aut=31104,
        ),
        Fixture(
            "hall384",
            "An 8-MOLS of order 9 from the Hall plane, autotopism group of order 384",
            tuple(_square(s) for s in (
                "012345678 876534210 781620354 608712435 543267801 435178062 354086127 267801543 120453786",
                "012345678 768453102 354067281 543278016 186720435 670812543 827601354 435186720 201534867",
                "012345678 654021387 476583120 120856743 837102564 201764835 568437201 783210456 345678012",
                "012345678 547210836 638102745 874563201 765438012 386021457 201874563 120657384 453786120",
                "012345678 485102763 120758436 367021584 201684357 758436120 673210845 846573012 534867201",
                "012345678 321687054 867431502 235104867 450876123 143250786 786523410 504768231 678012345",
                "012345678 230876541 503214867 451687320 324051786 867503214 145768032 678432105 786120453",
                "012345678 103768425 245876013 786430152 678513240 524687301 430152786 351024867 867201534",
            )),
            aut=384,
        ),
        Fixture(
            "dualhall384",
            "An 8-MOLS of order 9 from the dual Hall plane, autotopism group of order 384",
            tuple(_square(s) for s in (
                "012345678 876532410 784653201 648107352 501824763 425710836 350286147 263071584 137468025",
                "012345678 785621304 651784032 273450816 328176540 830267451 146508723 407813265 564032187",
                "012345678 608754231 126437850 731862405 847510326 574628013 263071584 350286147 485103762",
                "012345678 560873142 348210765 107638524 483067251 256401387 675124830 834752016 721586403",
                "012345678 457106823 230578146 365014287 674283015 103852764 728460351 581637402 846721530",
                "012345678 321487056 875062314 584726130 230651487 768134502 407813265 146508723 653270841",
                "012345678 234018765 403126587 856271043 165702834 647583120 581637402 728460351 370854216",
                "012345678 143260587 567801423 420583761 756438102 381076245 834752016 675124830 208617354",
            )),
            aut=384,
        ),
        Fixture(
            "hall3456",
            "An 8-MOLS of order 9 from the Hall plane, autotopism group of order 3456",
            tuple(_square(s) for s in (
                _GALOIS_9[0],
                "012345678 785124063 201638457 346570812 634852701 578013246 120467385 857206134 463781520",
                "012345678 634852701 120467385 578013246 785124063 346570812 201638457 463781520 857206134",
                _GALOIS_9[3],
                "012345678 458036127 673512840 201784365 367401582 120658734 845273016 736820451 584167203",
                "012345678 367401582 845273016 120658734 458036127 201784365 673512840 584167203 736820451",
                "012345678 201567834 537804261 864231507 120783456 753426180 486150723 648072315 375618042",
                "012345678 120783456 486150723 753426180 201567834 864231507 537804261 375618042 648072315",
            )),
            aut=3456,
        ),
    )
}

# The 8-MOLS of order 9, one per known autotopism order
ORDER_NINE_PLANES = ("galois9", "aut31104", "hall384", "dualhall384", "hall3456")


@lru_cache(maxsize=None)
def _build(name: str) -> MolrSet:
    return validate_molr(FIXTURES[name].grids())


def load_fixture(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(sorted(FIXTURES))}")
