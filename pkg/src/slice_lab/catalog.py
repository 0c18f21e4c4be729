"""Fixed catalog of hyperplanes in R^4 with the outcomes stated for them.

The instances straddle each stated condition: the a >= 3 threshold for
``a x + y + z + t = 0``, the ``b + 2 <= a`` split for ``a x + b y + z + t``,
and the two conditions ``a >= b + c + 1`` and ``b >= c + 1`` for the general
``a x + b y + c z + t``. Every face is read off at ``t = -1/2``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from slice_lab.faces import face_at, zonotope_verdict
from slice_lab.geometry import make_slice
from slice_lab.report import shape_class


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    normal: tuple[int, ...]
    predicted: str
    expected_verdict: Optional[str]
    expected_face: Optional[str]


@dataclass(frozen=True)
class CatalogRow:
    label: str
    normal: tuple[int, ...]
    predicted_class: str
    computed_verdict: str
    computed_face_class: str
    match: bool

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "normal": list(self.normal),
            "predicted_class": self.predicted_class,
            "computed_verdict": self.computed_verdict,
            "computed_face_class": self.computed_face_class,
            "match": self.match,
        }


CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry("Ex 3.1", (1, 1, 1, 1), "triangle face, not a zonoid", "NotZonoid", "Triangle"),
    CatalogEntry("Ex 4.2, a=2", (2, 1, 1, 1), "pentagon faces, not a zonoid", "NotZonoid", "Pentagon"),
    CatalogEntry("Ex 4.2, a=3", (3, 1, 1, 1), "rhombus face, parallelotope (zonotope)", "Zonotope", "Parallelogram"),
    CatalogEntry("Ex 4.2, a=4", (4, 1, 1, 1), "parallelogram face, parallelotope (zonotope)", "Zonotope", "Parallelogram"),
    CatalogEntry("Ex 4.3, a=2", (2, 2, 1, 1), "trapezium face, not a zonoid", "NotZonoid", "Trapezium"),
    CatalogEntry("Ex 4.4, (a,b)=(4,2)", (4, 2, 1, 1), "parallelogram face, parallelotope", "Zonotope", "Parallelogram"),
    CatalogEntry("Ex 4.4, (a,b)=(3,2)", (3, 2, 1, 1), "pentagon face, not a zonoid", "NotZonoid", "Pentagon"),
    CatalogEntry("Ex 4.1, (a,b,c)=(5,2,1)", (5, 2, 1, 1), "a >= b+c+1: zonotope", "Zonotope", "Parallelogram"),
    CatalogEntry("Ex 4.1, (a,b,c)=(6,3,2)", (6, 3, 2, 1), "a >= b+c+1: zonotope", "Zonotope", "Parallelogram"),
    CatalogEntry("Ex 4.5, (a,b,c)=(3,2,2)", (3, 2, 2, 1), "(i) and (ii) fail: pentagon face, not a zonoid", "NotZonoid", "Pentagon"),
    CatalogEntry("Ex 4.5, (a,b,c)=(5,4,3)", (5, 4, 3, 1), "(i) fails, (ii) holds: hexagon face, zonoid unknown", None, "Hexagon"),
)


def evaluate(entry: CatalogEntry) -> CatalogRow:
    s = make_slice(entry.normal)
    verdict = zonotope_verdict(s).verdict.value
    face = shape_class(face_at(s, 3, -1))
    ok = (entry.expected_verdict in (None, verdict)) and (entry.expected_face in (None, face))
    return CatalogRow(entry.label, entry.normal, entry.predicted, verdict, face, ok)


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("SLICE_LAB_THREADS", "1")))
    except ValueError:
        return 1


def run_catalog(entries=CATALOG) -> list[CatalogRow]:
    with ThreadPoolExecutor(max_workers=thread_cap()) as pool:
        return list(pool.map(evaluate, entries))
