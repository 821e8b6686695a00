"""Exact origin-in-hull and cone-membership tests (phase-1 simplex, Bland's rule)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .linalg import ONE, ZERO, Vector, combination, dot, is_zero


INSIDE = "inside"
OUTSIDE = "outside"


@dataclass(frozen=True)
class HullCertificate:
    """Witness for 0 in conv(S) (convex coefficients) or 0 not in conv(S) (separator).

    ``coefficients`` is aligned with the tested point list. ``separator`` s
    satisfies <s, p> > 0 for every tested p.
    """

    kind: str
    coefficients: Optional[tuple] = None
    separator: Optional[Vector] = None
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def inside(self) -> bool:
        return self.kind == INSIDE

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coefficients or ()) if c > 0]

    def check(self, points: Sequence[Vector]) -> bool:
        """Re-verify the certificate against points with exact arithmetic."""
        if self.kind == INSIDE:
            lam = self.coefficients
            if lam is None or len(lam) != len(points):
                return False
            if any(c < 0 for c in lam) or sum(lam, ZERO) != 1:
                return False
            d = len(points[0]) if points else 0
            return is_zero(combination(lam, points, d))
        if self.separator is None:
            return False
        return all(dot(self.separator, p) > 0 for p in points)


def _phase1(A: Sequence[Sequence], b: Sequence):
    """Feasibility of A x = b, x >= 0.

    Returns (x, None) when feasible, otherwise (None, y) with y^T A <= 0 and
    y^T b > 0 (a Farkas certificate).
    """
    r = len(A)
    n = len(A[0]) if r else 0
    width = n + r
    signs = [ONE if bi >= 0 else -ONE for bi in b]
    T = []
    for i in range(r):
        s = signs[i]
        row = [s * a for a in A[i]] + [ZERO] * r + [s * b[i]]
        row[n + i] = ONE
        T.append(row)
    basis = [n + i for i in range(r)]
    z = [ZERO] * (width + 1)
    for j in list(range(n)) + [width]:
        z[j] = -sum((T[i][j] for i in range(r)), ZERO)

    # Dantzig's rule, switching to Bland's rule for good after a run of
    # degenerate pivots so that cycling is impossible
    stalled = 0
    while True:
        if stalled < 2 * width:
            enter = min(range(width), key=z.__getitem__)
            if z[enter] >= 0:
                enter = None
        else:
            enter = next((j for j in range(width) if z[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(r):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise RuntimeError("phase-1 LP unbounded")
        stalled = stalled + 1 if best == 0 else 0
        inv = 1 / T[leave][enter]
        prow = [a * inv for a in T[leave]]
        T[leave] = prow
        support = [j for j, c in enumerate(prow) if c]
        for row in T + [z]:
            if row is prow:
                continue
            f = row[enter]
            if f:
                for j in support:
                    row[j] -= f * prow[j]
        basis[leave] = enter

    if z[width] == 0:
        x = [ZERO] * n
        for i, bv in enumerate(basis):
            if bv < n:
                x[bv] = T[i][width]
        return tuple(x), None
    # phase-1 duals on the sign-normalised rows are 1 - reduced cost of the
    # artificial; they satisfy y'^T A' <= 0 < y'^T b'
    y = tuple(signs[i] * (ONE - z[n + i]) for i in range(r))
    return None, y


def origin_in_hull(points: Sequence[Vector]) -> HullCertificate:
    """Decide 0 in conv(points) exactly, with a certificate either way."""
    n = len(points)
    if n == 0:
        raise ValueError("need at least one point")
    d = len(points[0])
    A = [[p[k] for p in points] for k in range(d)] + [[ONE] * n]
    b = [ZERO] * d + [ONE]
    lam, y = _phase1(A, b)
    if lam is not None:
        return HullCertificate(INSIDE, coefficients=lam)
    # <y_p, p> + y_1 <= 0 for all p and y_1 > 0, so -y_p separates strictly
    return HullCertificate(OUTSIDE, separator=tuple(-y[k] for k in range(d)))


def cone_coefficients(target: Vector, generators: Sequence[Vector]) -> Optional[tuple]:
    """Nonnegative mu with sum mu_i g_i = target, or None if target not in pos(G)."""
    if not generators:
        return () if is_zero(target) else None
    d = len(target)
    if d == 0:
        return tuple(ZERO for _ in generators)
    A = [[g[k] for g in generators] for k in range(d)]
    mu, _ = _phase1(A, list(target))
    return mu
