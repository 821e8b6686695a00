"""Rebalancing approximation driven by a feasible (M, D, d0) parameter triple.

The temporary set C starts as the pruned first class. Each round splits C into
k color-balanced parts, solves a smaller instance built from light classes in
the space orthogonal to the representatives, swaps it in for one part and
prunes again, until no class has more than M(j) points in C.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import isqrt
from typing import Optional

from ..caratheodory import prune
from ..errors import InvariantError, PreconditionError
from ..model import CARATHEODORY, ColorClass, ColorfulChoice, Instance, certify
from ..numeric import Rational, complement_basis, coordinates_in, origin_in_hull, q
from .representatives import replace_representative, representatives


@dataclass(frozen=True)
class ParameterFunctions:
    """M(j), D(j) tabulated for j = 0 .. len-1, and the brute-force threshold d0."""

    M: tuple
    D: tuple
    d0: int

    def terminal(self, j: int) -> bool:
        # no round can run at depth j: base case, or pruning P_1 already suffices
        return self.D[j] <= self.d0 or self.M[j] >= self.D[j] + 1


def check_feasible(params: ParameterFunctions, d: int, maxdepth: Optional[int] = None) -> list[str]:
    M, D, d0 = params.M, params.D, params.d0
    out = []
    if not M or len(M) != len(D):
        return ["M and D must be non-empty and of equal length"]
    last = len(M) - 1 if maxdepth is None else min(maxdepth, len(M) - 1)
    if any(m < 1 for m in M[: last + 1]):
        out.append("M must be positive")
    if any(x < 0 for x in D[: last + 1]):
        out.append("D must be non-negative")
    for j in range(last):
        if not M[j] > M[j + 1]:
            out.append("condition 1: M not strictly decreasing at j=%d" % j)
        if not D[j] > D[j + 1]:
            out.append("condition 1: D not strictly decreasing at j=%d" % j)
    if D[0] != d:
        out.append("condition 2: D(0) = %d but d = %d" % (D[0], d))
    for j in range(last + 1):
        if params.terminal(j):
            continue
        if j + 1 >= len(M):
            out.append("condition 3: depth %d has D(j) > d0 but no next level" % j)
            continue
        gap = M[j] - M[j + 1]
        step = D[j] - D[j + 1]
        if gap <= 0:
            continue  # already reported under condition 1
        lo = (D[j] + 1) // gap
        if not lo <= step <= M[j]:
            out.append("condition 3 at j=%d: %d <= %d <= %d fails" % (j, lo, step, M[j]))
    return out


def _ceil(x: Rational) -> int:
    return int(-((-x.numerator) // x.denominator))


def _ceil_sqrt(x: Rational) -> int:
    """Smallest integer n >= 0 with n*n >= x, exactly."""
    if x <= 0:
        return 0
    n = isqrt(int(x.numerator // x.denominator))
    while n * n < x:
        n += 1
    return n


def epsilon_params(d: int, epsilon, d0: Optional[int] = None) -> ParameterFunctions:
    """M(j) = ceil(eps (1-eps)^(j/2) (d+1)), D(j) = ceil((1-eps)^j (d+1)) - 1.

    M is evaluated exactly through its square. Depths are tabulated up to the
    first terminal one.
    """
    eps = q(epsilon)
    if not 0 < eps < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    if d0 is None:
        d0 = max(_ceil(4 * (1 + eps) / eps ** 3), 8)
    M, D = [], []
    j = 0
    while True:
        shrink = (1 - eps) ** j
        M.append(_ceil_sqrt(eps * eps * shrink * (d + 1) ** 2))
        D.append(_ceil(shrink * (d + 1)) - 1)
        params = ParameterFunctions(tuple(M), tuple(D), d0)
        if params.terminal(j):
            break
        j += 1
    bad = check_feasible(params, d)
    if bad:
        raise PreconditionError("epsilon parameters infeasible for d=%d: %s" % (d, "; ".join(bad)))
    return params


def balanced_partition(refs: list, k: int) -> list[list[int]]:
    """Deal positions of refs (sorted by class id) round-robin into k parts."""
    order = sorted(range(len(refs)), key=lambda i: refs[i])
    parts = [[] for _ in range(k)]
    for t, i in enumerate(order):
        parts[t % k].append(i)
    return parts


def _base_case(groups: list, coords: dict, method: str) -> list:
    from ..ncp import local_search
    from ..oracle import brute_force_choice, within_limits

    classes = tuple(ColorClass(cid, tuple(coords[r] for r in refs)) for cid, refs in groups)
    dim = len(next(iter(coords.values())))
    tmp = Instance(dim, classes, CARATHEODORY)
    lookup = dict(groups)
    if method == "brute" or (method == "auto" and within_limits(tmp, 1)):
        choice = brute_force_choice(tmp, 1)
        if choice is None:
            raise InvariantError("no perfect colorful choice in base case")
        sel = choice.selections
    else:
        trace = local_search(tmp)
        if trace.final_cost != 0:
            raise InvariantError("colorful walk stopped away from the origin")
        sel = trace.final
    return [lookup[cid][i] for cid, i in sel]


class _Run:
    def __init__(self, params: ParameterFunctions, base: str):
        self.params = params
        self.base = base
        self.rounds = Counter()

    def solve(self, groups: list, coords: dict, j: int) -> list:
        """groups: [(class id, refs)] sorted by id; coords: ref -> point in R^D(j)."""
        p = self.params
        dim = p.D[j]
        if dim <= p.d0:
            return _base_case(groups, coords, self.base)
        first = groups[0][0]
        refs0 = groups[0][1]
        idx, cert = prune([coords[r] for r in refs0], enforce_size=False)
        C = [refs0[i] for i in idx]
        lam = cert.coefficients
        Mj = p.M[j]
        while True:
            counts = Counter(cid for cid, _ in C)
            if max(counts.values()) <= Mj:
                return C
            self.rounds[j] += 1
            d2 = p.D[j + 1]
            k = dim - d2 + 1
            parts = balanced_partition(C, k)
            pts = [coords[r] for r in C]
            reps = representatives(pts, parts, lam)
            light_cap = Mj - p.M[j + 1]
            light = [(cid, refs) for cid, refs in groups if counts.get(cid, 0) <= light_cap][: d2 + 1]
            if len(light) < d2 + 1:
                raise InvariantError("only %d light classes at depth %d, need %d" % (len(light), j, d2 + 1))
            comp = complement_basis(reps.reps, dim)
            if len(comp) != d2:
                raise InvariantError("complement has dimension %d, expected %d" % (len(comp), d2))
            sub_refs = [r for _, refs in light for r in refs]
            lowered = dict(zip(sub_refs, coordinates_in([coords[r] for r in sub_refs], comp)))
            Q = self.solve(light, lowered, j + 1)
            w = origin_in_hull([lowered[r] for r in Q])
            if not w.inside:
                raise InvariantError("recursive choice misses the origin after projection")
            i = replace_representative(reps, [coords[r] for r in Q], w.coefficients)
            dropped = {C[t] for t in parts[i]}
            merged = sorted((set(C) - dropped) | set(Q))
            idx, cert = prune([coords[r] for r in merged], enforce_size=False)
            newC = [merged[t] for t in idx]
            lam = cert.coefficients
            # (alpha) origin inside, (beta) other classes <= M(j), (gamma) P_1 shrinks
            new_counts = Counter(cid for cid, _ in newC)
            if not origin_in_hull([coords[r] for r in newC]).inside:
                raise InvariantError("invariant alpha failed at depth %d" % j)
            if any(c > Mj for cid, c in new_counts.items() if cid != first):
                raise InvariantError("invariant beta failed at depth %d" % j)
            if not new_counts.get(first, 0) < counts[first]:
                raise InvariantError("invariant gamma failed at depth %d" % j)
            C = newC


def rebalance(instance: Instance, params: ParameterFunctions, base: str = "auto", stats: Optional[dict] = None) -> ColorfulChoice:
    """M(0)-colorful choice from the first d+1 classes.

    ``base`` selects the perfect-choice solver used at depths with D(j) <= d0:
    "brute" (exhaustive), "walk" (colorful nearest-point walk) or "auto"
    (brute force when within the enumeration budget).
    """
    d = instance.dimension
    bad = check_feasible(params, d)
    if bad:
        raise PreconditionError("; ".join(bad))
    inst = instance.head(d + 1)
    for c in inst.classes:
        if len(c.points) > 4 * (d + 1):
            raise PreconditionError("class %d has more than 4(d+1) points" % c.id)
    groups = sorted((c.id, c.refs()) for c in inst.classes)
    coords = {r: inst.point(r) for _, refs in groups for r in refs}
    run = _Run(params, base)
    refs = run.solve(groups, coords, 0)
    if stats is not None:
        stats["rounds"] = dict(run.rounds)
    choice = certify(instance, refs)
    if not choice.certificate.inside:
        raise InvariantError("rebalance lost the origin")
    return choice
