"""Point sets with provenance metadata, bounding boxes and normalization."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Sequence, Tuple

from .errors import DuplicatePoint, EmptySet
from .geometry import Point


class GridBounds(NamedTuple):
    width: int   # max x - min x
    height: int  # max y - min y


class Kind(str, Enum):
    PR = "PR"
    SKL_BASELINE = "SKL_BASELINE"
    SKL_OPTIMIZED = "SKL_OPTIMIZED"
    ES_BASELINE = "ES_BASELINE"
    ES_OPTIMIZED = "ES_OPTIMIZED"


@dataclass(frozen=True)
class ConstructionParams:
    kind: Kind
    r: Optional[int] = None
    k: Optional[int] = None
    l: Optional[int] = None
    t: Optional[int] = None
    last_step_unit_separation: bool = True

    def __post_init__(self):
        if self.kind is Kind.PR:
            if self.r is None or self.r < 0 or self.k is not None \
                    or self.l is not None or self.t is not None:
                raise ValueError("PR takes exactly r >= 0")
        elif self.kind in (Kind.SKL_BASELINE, Kind.SKL_OPTIMIZED):
            if self.k is None or self.l is None or self.k < 2 or self.l < 2 \
                    or self.r is not None or self.t is not None:
                raise ValueError("SKL takes exactly k, l >= 2")
        else:
            if self.t is None or self.t < 2 or self.r is not None \
                    or self.k is not None or self.l is not None:
                raise ValueError("ES takes exactly t >= 2")

    def label(self) -> str:
        if self.kind is Kind.PR:
            return f"{self.kind.value} r={self.r}"
        if self.kind in (Kind.SKL_BASELINE, Kind.SKL_OPTIMIZED):
            return f"{self.kind.value} k={self.k} l={self.l}"
        return f"{self.kind.value} t={self.t}"


# (start, stop, label) index ranges marking the blocks of a composed set
Span = Tuple[int, int, str]


@dataclass(frozen=True)
class PointSet:
    points: Tuple[Point, ...]
    params: Optional[ConstructionParams] = None
    component_spans: Optional[Tuple[Span, ...]] = None

    def __post_init__(self):
        pts = tuple(Point(int(p[0]), int(p[1])) for p in self.points)
        if len(set(pts)) != len(pts):
            seen = set()
            for p in pts:
                if p in seen:
                    raise DuplicatePoint(f"duplicate point {p}")
                seen.add(p)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def bounding_box(s: PointSet | Sequence[Point]) -> GridBounds:
    """Exact width/height of the axis-aligned bounding box."""
    pts = list(s)
    if not pts:
        raise EmptySet("bounding_box of an empty set")
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    return GridBounds(max(xs) - min(xs), max(ys) - min(ys))


def normalize(s: PointSet) -> PointSet:
    """Translate so that min x = min y = 0; the order type is unchanged."""
    if not s.points:
        raise EmptySet("normalize of an empty set")
    mx = min(p.x for p in s.points)
    my = min(p.y for p in s.points)
    if mx == 0 and my == 0:
        return s
    pts = tuple(Point(p.x - mx, p.y - my) for p in s.points)
    return PointSet(pts, params=s.params, component_spans=s.component_spans)
