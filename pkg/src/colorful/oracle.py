"""Exhaustive ground truth for small instances."""

from __future__ import annotations

from itertools import combinations, product
from math import comb, prod
from typing import NamedTuple, Optional

from .errors import SizeLimitError
from .model import ColorfulChoice, Instance
from .numeric import HullCertificate, origin_in_hull

MAX_POINTS = 40
MAX_DIMENSION = 8


def search_size(instance: Instance, m: int) -> int:
    return prod(comb(len(c.points), min(m, len(c.points))) for c in instance.classes)


def within_limits(instance: Instance, m: int = 1, budget: Optional[int] = None) -> bool:
    total = sum(len(c.points) for c in instance.classes)
    if total > MAX_POINTS or instance.dimension > MAX_DIMENSION:
        return False
    return budget is None or search_size(instance, m) <= budget


def brute_force_choice(instance: Instance, m: int = 1, enforce_limits: bool = True) -> Optional[ColorfulChoice]:
    """First m-colorful choice (lexicographic) whose hull holds the origin.

    Only choices taking min(m, |P_i|) points from every class are tried:
    adding points never removes the origin from a hull, so these maximal
    choices succeed whenever anything does.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if enforce_limits and not within_limits(instance, m):
        raise SizeLimitError("brute force limited to %d points in dimension <= %d" % (MAX_POINTS, MAX_DIMENSION))
    per_class = [list(combinations(c.refs(), min(m, len(c.points)))) for c in instance.classes]
    for combo in product(*per_class):
        sel = tuple(r for part in combo for r in part)
        cert = origin_in_hull(instance.points(sel))
        if cert.inside:
            return ColorfulChoice(tuple(sorted(sel)), cert)
    return None


class Verification(NamedTuple):
    ok: bool
    multiplicity: int
    certificate: HullCertificate


def verify_choice(instance: Instance, choice: ColorfulChoice, m: int) -> Verification:
    """Recompute multiplicity and hull membership from scratch."""
    sel = tuple(choice.selections)
    known = all(
        any(c.id == cid for c in instance.classes) and 0 <= idx < len(instance.cls(cid).points)
        for cid, idx in sel
    )
    if not sel or not known or len(set(sel)) != len(sel):
        return Verification(False, choice.m, None)
    cert = origin_in_hull(instance.points(sel))
    mult = ColorfulChoice(sel).m
    return Verification(cert.inside and mult <= m, mult, cert)
