"""Seeded instance generation and the JSON file formats."""

from __future__ import annotations

import json
import re
from typing import Any

from .errors import InstanceError
from .model import CARATHEODORY, KINDS, NCP, ColorClass, Instance
from .numeric import Rational, q, rank

MASK64 = (1 << 64) - 1


class SplitMix64:
    """Steele, Lea and Flood's splitmix64; the stream is fixed by the seed."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] by rejection."""
        span = hi - lo + 1
        limit = (1 << 64) - (1 << 64) % span
        while True:
            x = self.next()
            if x < limit:
                return lo + x % span

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(0, i)
            items[i], items[j] = items[j], items[i]


def _simplex_around_origin(rng: SplitMix64, d: int, radius: int) -> list:
    # (d+1) p_i - sum p keeps integers and puts the centroid at the origin
    while True:
        pts = [[rng.randint(-radius, radius) for _ in range(d)] for _ in range(d + 1)]
        total = [sum(p[k] for p in pts) for k in range(d)]
        shifted = [tuple(q((d + 1) * p[k] - total[k]) for k in range(d)) for p in pts]
        diffs = [tuple(a - b for a, b in zip(p, shifted[0])) for p in shifted[1:]]
        if rank(diffs) == d:
            return shifted


def generate(seed: int, d: int, classes: int, points_per_class: int, kind: str = CARATHEODORY, radius: int = 10) -> Instance:
    """Random instance with small integer coordinates.

    Caratheodory kind: each class is a full-dimensional simplex with centroid
    at the origin plus extra uniform points, shuffled. NCP kind: uniform
    points with no origin requirement.
    """
    if d < 1 or classes < 1 or points_per_class < 1:
        raise InstanceError("dimension, class count and class size must be positive")
    if kind not in KINDS:
        raise InstanceError("unknown kind %r" % kind)
    if kind == CARATHEODORY and points_per_class < d + 1:
        raise InstanceError("Caratheodory classes need at least d+1 points")
    rng = SplitMix64(seed)
    spread = radius * (d + 1)
    built = []
    for cid in range(classes):
        if kind == CARATHEODORY:
            pts = _simplex_around_origin(rng, d, radius)
            extra = points_per_class - (d + 1)
        else:
            pts = []
            extra = points_per_class
        for _ in range(extra):
            pts.append(tuple(q(rng.randint(-spread, spread)) for _ in range(d)))
        rng.shuffle(pts)
        built.append(ColorClass(cid, tuple(pts)))
    return Instance(d, tuple(built), kind)


def fmt(x) -> str:
    x = q(x)
    return "%d/%d" % (x.numerator, x.denominator)


def fmt_vector(v) -> list:
    return [fmt(x) for x in v]


def parse_rational(s) -> Rational:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise InstanceError("rational must be a string or integer, got %r" % (s,))
    try:
        return q(s.strip() if isinstance(s, str) else s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InstanceError("bad rational %r" % (s,)) from exc


def instance_to_dict(instance: Instance) -> dict:
    return {
        "dimension": instance.dimension,
        "kind": instance.kind,
        "classes": [{"id": c.id, "points": [fmt_vector(p) for p in c.points]} for c in instance.classes],
    }


def instance_from_dict(data: Any) -> Instance:
    try:
        d = data["dimension"]
        kind = data.get("kind", CARATHEODORY)
        raw = data["classes"]
    except (KeyError, TypeError, AttributeError) as exc:
        raise InstanceError("instance JSON needs dimension and classes") from exc
    if not isinstance(d, int) or d < 0:
        raise InstanceError("dimension must be a non-negative integer")
    built = []
    for c in raw:
        pts = tuple(tuple(parse_rational(x) for x in p) for p in c["points"])
        if any(len(p) != d for p in pts):
            raise InstanceError("class %r has points of the wrong dimension" % c.get("id"))
        built.append(ColorClass(int(c["id"]), pts))
    return Instance(d, tuple(built), kind)


_SCALAR = r'(?:"[^"\\\[\]]*"|-?\d+(?:\.\d+)?|true|false|null)'
_FLAT = re.compile(r"\[\s*(%s(?:,\s*%s)*)\s*\]" % (_SCALAR, _SCALAR))
_SEP = re.compile(r",\n\s*")


def _one_line(m) -> str:
    # only whitespace between scalars changes; strings hold no raw newlines
    return "[" + _SEP.sub(", ", m.group(1)) + "]"


def dumps(obj: Any) -> str:
    """Canonical JSON text: insertion-ordered keys, two-space indent, innermost
    arrays on one line, trailing newline."""
    return _FLAT.sub(_one_line, json.dumps(obj, indent=2, ensure_ascii=False)) + "\n"


def write_json(path: str, obj: Any) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(obj))


def read_json(path: str) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def save_instance(path: str, instance: Instance) -> None:
    write_json(path, instance_to_dict(instance))


def load_instance(path: str) -> Instance:
    try:
        data = read_json(path)
    except json.JSONDecodeError as exc:
        raise InstanceError("%s: %s" % (path, exc)) from exc
    return instance_from_dict(data)


__all__ = [
    "SplitMix64", "generate", "fmt", "fmt_vector", "parse_rational", "instance_to_dict",
    "instance_from_dict", "dumps", "write_json", "read_json", "save_instance", "load_instance", "NCP",
]
