"""Instances, colorful choices and general-position checks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import InstanceError
from .numeric import HullCertificate, Vector, affinely_independent, origin_in_hull, vec

CARATHEODORY = "caratheodory"
NCP = "ncp"
KINDS = (CARATHEODORY, NCP)

# (class id, point index within that class)
Ref = tuple


@dataclass(frozen=True)
class ColorClass:
    id: int
    points: tuple

    def __post_init__(self):
        if not self.points:
            raise InstanceError("class %d is empty" % self.id)
        d = len(self.points[0])
        if any(len(p) != d for p in self.points):
            raise InstanceError("class %d mixes dimensions" % self.id)

    def refs(self) -> list[Ref]:
        return [(self.id, i) for i in range(len(self.points))]


@dataclass(frozen=True)
class Instance:
    dimension: int
    classes: tuple
    kind: str = CARATHEODORY
    _by_id: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InstanceError("unknown kind %r" % self.kind)
        ids = [c.id for c in self.classes]
        if len(set(ids)) != len(ids):
            raise InstanceError("duplicate class ids")
        object.__setattr__(self, "_by_id", {c.id: c for c in self.classes})

    @classmethod
    def from_points(cls, classes: Iterable[Iterable], kind: str = CARATHEODORY, dimension: Optional[int] = None):
        """Build from nested lists of coordinates; class ids are 0, 1, ..."""
        built = []
        for i, pts in enumerate(classes):
            built.append(ColorClass(i, tuple(vec(p) for p in pts)))
        if dimension is None:
            dimension = len(built[0].points[0]) if built else 0
        return cls(dimension, tuple(built), kind)

    def cls(self, class_id: int) -> ColorClass:
        return self._by_id[class_id]

    def point(self, ref: Ref) -> Vector:
        return self._by_id[ref[0]].points[ref[1]]

    def points(self, refs: Iterable[Ref]) -> list[Vector]:
        return [self.point(r) for r in refs]

    def head(self, count: int) -> "Instance":
        """The instance restricted to its first ``count`` classes."""
        if count > len(self.classes):
            raise InstanceError("instance has %d classes, need %d" % (len(self.classes), count))
        return Instance(self.dimension, self.classes[:count], self.kind)


@dataclass(frozen=True)
class ColorfulChoice:
    """A set of selected points; ``certificate`` is aligned with ``selections``."""

    selections: tuple
    certificate: Optional[HullCertificate] = None

    @property
    def m(self) -> int:
        return max(self.counts().values(), default=0)

    def counts(self) -> Counter:
        return Counter(cid for cid, _ in self.selections)

    def colors(self) -> set:
        return {cid for cid, _ in self.selections}

    def __len__(self):
        return len(self.selections)


def certify(instance: Instance, refs: Iterable[Ref]) -> ColorfulChoice:
    """Canonicalise refs (sorted, unique) and attach a fresh hull certificate."""
    sel = tuple(sorted(set(refs)))
    return ColorfulChoice(sel, origin_in_hull(instance.points(sel)))


def max_multiplicity(choice: ColorfulChoice, instance: Optional[Instance] = None) -> int:
    if instance is not None:
        for cid, idx in choice.selections:
            if cid not in instance._by_id or not 0 <= idx < len(instance.cls(cid).points):
                raise InstanceError("selection %r not in instance" % ((cid, idx),))
    return choice.m


@dataclass(frozen=True)
class Violation:
    severity: str  # "error" or "warning"
    message: str
    class_id: Optional[int] = None
    certificate: Optional[HullCertificate] = None


def validate(instance: Instance) -> list[Violation]:
    out = []
    d = instance.dimension
    for c in instance.classes:
        bad = [i for i, p in enumerate(c.points) if len(p) != d]
        if bad:
            out.append(Violation("error", "class %d has points of wrong dimension" % c.id, c.id))
            continue
        if instance.kind == CARATHEODORY:
            cert = origin_in_hull(c.points)
            if not cert.inside:
                out.append(Violation("error", "class %d hull excludes origin" % c.id, c.id, cert))
        dup = [p for p, k in Counter(c.points).items() if k > 1]
        if dup:
            out.append(Violation("warning", "class %d has %d duplicated points" % (c.id, len(dup)), c.id))
    return out


@dataclass(frozen=True)
class GeneralPositionReport:
    ok: bool
    witness: Optional[tuple] = None
    reason: str = ""


def check_general_position(points: Sequence[Vector]) -> GeneralPositionReport:
    """No k+2 points in a k-flat, and no proper subset with 0 in its hull.

    Witnesses are index tuples into ``points``.
    """
    n = len(points)
    if n == 0:
        return GeneralPositionReport(True)
    d = len(points[0])
    if n > d + 2:
        raise ValueError("check_general_position expects at most d+2 points")
    if not affinely_independent(points):
        # smallest affinely dependent subset: s points lying in an (s-2)-flat
        for s in range(2, n + 1):
            for sub in combinations(range(n), s):
                if not affinely_independent([points[i] for i in sub]):
                    return GeneralPositionReport(False, sub, "%d points in a %d-flat" % (s, s - 2))
    # affinely independent: an origin combination, if any, is unique, so the
    # subsets holding 0 are exactly the supersets of its support
    cert = origin_in_hull(points)
    if cert.inside:
        supp = tuple(cert.support())
        if len(supp) < n:
            return GeneralPositionReport(False, supp, "proper subset contains the origin")
    return GeneralPositionReport(True)
