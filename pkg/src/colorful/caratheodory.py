"""Constructive Caratheodory: shrink a set holding the origin to a simplex around it."""

from __future__ import annotations

from math import lcm
from typing import NamedTuple, Sequence

from .errors import DegenerateInstanceError, PreconditionError
from .model import check_general_position
from .numeric import INSIDE, ONE, HullCertificate, Vector, null_space_vector, origin_in_hull, q


class Pruned(NamedTuple):
    indices: tuple
    certificate: HullCertificate  # coefficients aligned with indices, all > 0


def prune(points: Sequence[Vector], enforce_size: bool = True) -> Pruned:
    """Subset of at most d+1 affinely independent points with 0 strictly inside.

    Starts from a basic LP solution and walks along affine dependencies of the
    support until none is left. The result is in general position: its lifted
    points are independent, so the origin combination is unique and has full
    support.
    """
    n = len(points)
    if n == 0:
        raise PreconditionError("cannot prune an empty set")
    d = len(points[0])
    if enforce_size and n > 4 * (d + 1):
        raise PreconditionError("prune takes at most 4(d+1) = %d points, got %d" % (4 * (d + 1), n))
    cert = origin_in_hull(points)
    if not cert.inside:
        raise PreconditionError("origin is not in the convex hull")
    lam = {i: c for i, c in enumerate(cert.coefficients) if c > 0}

    while True:
        supp = sorted(lam)
        g = null_space_vector([tuple(points[i]) + (ONE,) for i in supp])
        if g is None:
            break
        if not any(x > 0 for x in g):
            g = tuple(-x for x in g)
        t = min(lam[i] / x for i, x in zip(supp, g) if x > 0)
        for i, x in zip(supp, g):
            lam[i] -= t * x
        lam = {i: c for i, c in lam.items() if c > 0}

    supp = tuple(sorted(lam))
    return Pruned(supp, HullCertificate(INSIDE, coefficients=tuple(lam[i] for i in supp)))


class Repaired(NamedTuple):
    points: list
    indices: tuple  # which input points survive, in order
    perturbed: bool
    delta: object = None


def perturb(points: Sequence[Vector], delta) -> list:
    """p_i + delta * (i, i^2, ..., i^d) with i counted from 1."""
    out = []
    for i, p in enumerate(points, start=1):
        out.append(tuple(c + delta * i ** (k + 1) for k, c in enumerate(p)))
    return out


def _initial_delta(points: Sequence[Vector]):
    den = 1
    mag = 1
    for p in points:
        for c in p:
            den = lcm(den, int(c.denominator))
            mag = max(mag, abs(int(c.numerator)))
    n = len(points)
    d = len(points[0]) if points else 0
    return q(1) / (den * mag * (n + 1) ** (d + 1))


def repair_general_position(points: Sequence[Vector], halvings: int = 20) -> Repaired:
    """Return points unchanged if in general position, else a repaired version.

    An exact pruned subset is tried first; rational perturbation is the last
    resort and is flagged in the result.
    """
    points = list(points)
    if len(points) <= len(points[0]) + 2 and check_general_position(points).ok:
        return Repaired(points, tuple(range(len(points))), False)
    cert = origin_in_hull(points)
    if not cert.inside:
        raise PreconditionError("origin is not in the convex hull")
    idx, _ = prune(points, enforce_size=False)
    sub = [points[i] for i in idx]
    if check_general_position(sub).ok:
        return Repaired(sub, idx, False)
    delta = _initial_delta(sub)
    for _ in range(halvings + 1):
        moved = perturb(sub, delta)
        if origin_in_hull(moved).inside and check_general_position(moved).ok:
            return Repaired(moved, idx, True, delta)
        delta /= 2
    raise DegenerateInstanceError("no perturbation in the schedule restored general position")


__all__ = ["Pruned", "prune", "Repaired", "perturb", "repair_general_position"]
