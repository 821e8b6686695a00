"""Representatives of a pruned set and the single-representative replacement."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ..errors import InvariantError, PreconditionError
from ..numeric import (
    Vector,
    combination,
    is_zero,
    origin_in_hull,
    project_complement,
    rank,
    solve_linear,
    transpose,
)


def _positive_weights(points: Sequence[Vector], coefficients=None) -> tuple:
    if coefficients is None:
        cert = origin_in_hull(points)
        if not cert.inside:
            raise PreconditionError("origin is not in the convex hull")
        coefficients = cert.coefficients
    if len(coefficients) != len(points):
        raise PreconditionError("coefficients do not match the points")
    if any(c <= 0 for c in coefficients):
        raise PreconditionError("set is not in general position (zero hull coefficient)")
    return tuple(coefficients)


def line_in_cone(points: Sequence[Vector], part1: Sequence[int], part2: Sequence[int], coefficients=None) -> Vector:
    """v != 0 with v in pos(part1) and -v in pos(part2).

    ``coefficients`` is the strictly positive origin combination of ``points``;
    it is computed when omitted.
    """
    n = len(points)
    if not 2 <= n <= len(points[0]) + 1:
        raise PreconditionError("need 2 <= |P| <= d+1 points, got %d" % n)
    if not part1 or not part2 or sorted(list(part1) + list(part2)) != list(range(n)):
        raise PreconditionError("parts must partition the point set into two non-empty sets")
    lam = _positive_weights(points, coefficients)
    d = len(points[0])
    v = combination([lam[i] for i in part1], [points[i] for i in part1], d)
    if is_zero(v):
        raise PreconditionError("set is not in general position (a part holds the origin)")
    return v


@dataclass(frozen=True)
class Representatives:
    reps: tuple
    partition: tuple
    coefficients: tuple  # the strictly positive origin combination used


def representatives(points: Sequence[Vector], partition: Sequence[Sequence[int]], coefficients=None) -> Representatives:
    """One point c'_j = sum_{c in C_j} lam_c c per part.

    Each c'_j lies in pos(C_j) minus the origin, the c'_j sum to zero, and they
    span a space of dimension exactly len(partition) - 1.
    """
    m = len(partition)
    if m < 2:
        raise PreconditionError("representatives need at least two parts")
    flat = sorted(i for part in partition for i in part)
    if flat != list(range(len(points))) or any(not part for part in partition):
        raise PreconditionError("partition must cover the points disjointly with non-empty parts")
    lam = _positive_weights(points, coefficients)
    d = len(points[0])
    reps = tuple(combination([lam[i] for i in part], [points[i] for i in part], d) for part in partition)
    if any(is_zero(r) for r in reps):
        raise PreconditionError("a representative vanished; set is not in general position")
    if rank(list(reps)) != m - 1:
        raise PreconditionError("representatives do not span dimension m-1")
    return Representatives(reps, tuple(tuple(p) for p in partition), lam)


def replace_representative(reps, Q: Sequence[Vector], weights: Optional[Sequence] = None) -> int:
    """Index i with 0 in conv(Q u reps minus c'_i).

    ``weights`` is a convex combination of Q whose image in lsp(reps)^perp is
    the origin. It is computed from the orthogonal projection when omitted.
    """
    if isinstance(reps, Representatives):
        reps = reps.reps
    reps = list(reps)
    k = len(reps)
    d = len(reps[0])
    if weights is None:
        proj, _ = project_complement(Q, reps)
        cert = origin_in_hull(proj)
        if not cert.inside:
            raise PreconditionError("projection of Q does not contain the origin")
        weights = cert.coefficients
    target = tuple(-c for c in combination(weights, Q, d))
    for j in range(k):
        others = reps[:j] + reps[j + 1:]
        alpha = solve_linear(transpose(others), target)
        if alpha is None or any(a < 0 for a in alpha):
            continue
        if not origin_in_hull(list(Q) + others).inside:
            raise InvariantError("replacement %d failed re-verification" % j)
        return j
    raise PreconditionError("no representative can be replaced; preconditions violated")


__all__ = ["line_in_cone", "Representatives", "representatives", "replace_representative"]
