"""Two-class approximation: most of P plus a small piece of Q."""

from __future__ import annotations

from typing import Optional

from ..caratheodory import prune
from ..errors import InvariantError, PreconditionError
from ..model import ColorfulChoice, Instance, certify
from ..numeric import complement_basis, coordinates_in, origin_in_hull
from .rebalance import balanced_partition
from .representatives import replace_representative, representatives


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def stated_bound(d: int, k: int) -> int:
    """max{ceil((d+1)(1-1/k)), d-k+1}."""
    return max(_ceil_div((d + 1) * (k - 1), k), d - k + 1)


def achieved_bound(d: int, k: int) -> int:
    """Guarantee of the construction for a pruned P of d+1 points.

    Removing the smallest of k near-equal parts leaves (d+1) - floor((d+1)/k)
    points of P. Q is pruned in the (d-k+1)-dimensional complement, which
    leaves up to d-k+2 of its points.
    """
    return max((d + 1) - (d + 1) // k, d - k + 2)


def best_k(d: int, bound=achieved_bound) -> int:
    """Smallest k in [2, d+1] minimising ``bound``."""
    return min(range(2, d + 2), key=lambda k: (bound(d, k), k))


def two_color(instance: Instance, k: Optional[int] = None) -> ColorfulChoice:
    """Colorful choice from the first two classes with m well below d+1."""
    d = instance.dimension
    inst = instance.head(2)
    P, Q = inst.classes
    for c in (P, Q):
        if len(c.points) > 4 * (d + 1):
            raise PreconditionError("class %d has more than 4(d+1) points" % c.id)
    idxP, certP = prune(P.points)
    if len(idxP) == 1:
        return certify(instance, [(P.id, idxP[0])])
    idxQ, _ = prune(Q.points)
    if len(idxQ) == 1:
        return certify(instance, [(Q.id, idxQ[0])])
    if k is None:
        k = best_k(d)
    if not 2 <= k <= d + 1:
        raise PreconditionError("k must lie in [2, d+1]")
    s = len(idxP)
    k = min(k, s)
    refsP = [(P.id, i) for i in idxP]
    ptsP = [P.points[i] for i in idxP]
    parts = balanced_partition(refsP, k)
    reps = representatives(ptsP, parts, certP.coefficients)
    comp = complement_basis(reps.reps, d)
    lowered = coordinates_in(Q.points, comp)
    sub, cert = prune(lowered, enforce_size=False)
    chosenQ = [(Q.id, i) for i in sub]
    i = replace_representative(reps, [Q.points[t] for t in sub], cert.coefficients)
    keep = [refsP[t] for j, part in enumerate(parts) if j != i for t in part]
    choice = certify(instance, keep + chosenQ)
    if not choice.certificate.inside:
        raise InvariantError("two_color lost the origin")
    return choice
