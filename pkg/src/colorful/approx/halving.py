"""Two simple ceil((d+1)/2)-style approximations.

``half_linalg`` splits every pruned class in two, turns each split into a line
through the origin and picks halves by the signs of a linear dependency among
those lines. ``half_dimreduce`` uses one split per level to drop a dimension.
"""

from __future__ import annotations

from typing import Sequence

from ..caratheodory import prune
from ..errors import InvariantError, PreconditionError
from ..model import ColorfulChoice, Instance, certify
from ..numeric import combination, complement_basis, coordinates_in, dot, null_space_vector, origin_in_hull, primitive_scale
from .representatives import line_in_cone


def split_in_half(count: int) -> tuple[list[int], list[int]]:
    """First ceil(count/2) positions and the rest."""
    h = (count + 1) // 2
    return list(range(h)), list(range(h, count))


def sign_select(groups) -> list:
    """Pick one half per group so the union holds the origin.

    ``groups`` is a list of (refs, points, weights, part1, part2) with
    ``weights`` strictly positive origin weights of ``points``. Needs more
    groups than the ambient dimension.
    """
    lines = [line_in_cone(pts, p1, p2, lam) for _, pts, lam, p1, p2 in groups]
    mu = null_space_vector(lines)
    if mu is None:
        raise PreconditionError("need more groups than dimensions")
    chosen = []
    for (refs, _, _, p1, p2), m in zip(groups, mu):
        part = p1 if m > 0 else p2
        chosen.extend(refs[i] for i in part)
    return chosen


def half_linalg(instance: Instance) -> ColorfulChoice:
    """ceil((d+1)/2)-colorful choice from the first d+1 classes."""
    d = instance.dimension
    inst = instance.head(d + 1)
    groups = []
    for c in inst.classes:
        idx, cert = prune(c.points)
        if len(idx) == 1:
            return certify(instance, [(c.id, idx[0])])
        pts = [c.points[i] for i in idx]
        p1, p2 = split_in_half(len(idx))
        groups.append(([(c.id, i) for i in idx], pts, cert.coefficients, p1, p2))
    choice = certify(instance, sign_select(groups))
    if not choice.certificate.inside:
        raise InvariantError("half_linalg lost the origin")
    return choice


def _dimreduce(groups: list, coords: dict) -> list:
    # groups: list of ref lists; coords: ref -> point in the current space
    refs = groups[0]
    pts = [coords[r] for r in refs]
    idx, cert = prune(pts, enforce_size=False)
    if len(idx) == 1 or len(groups) == 1:
        return [refs[i] for i in idx]
    kept = [refs[i] for i in idx]
    kept_pts = [pts[i] for i in idx]
    p1, p2 = split_in_half(len(idx))
    v = line_in_cone(kept_pts, p1, p2, cert.coefficients)
    d = len(v)
    comp = complement_basis([v], d)
    rest = [r for g in groups[1:] for r in g]
    # only cones matter below, so each lowered point is rescaled to a
    # primitive integer vector to keep coefficient growth in check
    lowered, scale = {}, {}
    for r, p in zip(rest, coordinates_in([coords[r] for r in rest], comp)):
        scale[r] = primitive_scale(p)
        lowered[r] = tuple(scale[r] * x for x in p)
    sub = _dimreduce(groups[1:], lowered)
    # where does conv(sub) meet the line through v?
    w = origin_in_hull([lowered[r] for r in sub])
    if not w.inside:
        raise InvariantError("lower-dimensional choice misses the origin")
    x = combination([c * scale[r] for c, r in zip(w.coefficients, sub)], [coords[r] for r in sub], d)
    if dot(x, v) >= 0:
        part = p2  # x in pos(v), -v in pos(part2)
    else:
        part = p1
    return sub + [kept[i] for i in part]


def half_dimreduce(instance: Instance) -> ColorfulChoice:
    """(ceil(d/2)+1)-colorful choice from the first floor(d/2)+1 classes."""
    d = instance.dimension
    inst = instance.head(d // 2 + 1)
    for c in inst.classes:
        if len(c.points) > 4 * (d + 1):
            raise PreconditionError("class %d has more than 4(d+1) points" % c.id)
    groups = [c.refs() for c in inst.classes]
    coords = {r: inst.point(r) for g in groups for r in g}
    choice = certify(instance, _dimreduce(groups, coords))
    if not choice.certificate.inside:
        raise InvariantError("half_dimreduce lost the origin")
    return choice
