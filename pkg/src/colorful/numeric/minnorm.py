"""Wolfe's minimum-norm-point algorithm in exact arithmetic."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .linalg import ONE, ZERO, Rational, Vector, combination, dot, norm2, solve_linear


class MinNormResult(NamedTuple):
    point: Vector
    sq_distance: Rational
    # convex weights aligned with the input points; zero off the final corral
    weights: tuple


def _affine_minimizer(S: list[int], gram) -> tuple:
    # argmin |sum a_i p_i|^2 s.t. sum a_i = 1, via the KKT system [G 1; 1^T 0]
    k = len(S)
    rows = []
    for a in S:
        rows.append([gram(a, b) for b in S] + [ONE])
    rows.append([ONE] * k + [ZERO])
    sol = solve_linear(rows, [ZERO] * k + [ONE])
    if sol is None:
        raise RuntimeError("corral lost affine independence")
    return sol[:k]


def min_norm_point(points: Sequence[Vector], max_iter: int = 100000) -> MinNormResult:
    """Nearest point of conv(points) to the origin and its squared distance."""
    n = len(points)
    if n == 0:
        raise ValueError("need at least one point")
    d = len(points[0])
    norms = [norm2(p) for p in points]
    cache = {}

    def gram(a, b):
        key = (a, b) if a <= b else (b, a)
        if key not in cache:
            cache[key] = dot(points[a], points[b])
        return cache[key]

    first = min(range(n), key=lambda i: (norms[i], i))
    S = [first]
    lam = [ONE]
    x = points[first]

    for _ in range(max_iter):
        xx = norm2(x)
        if xx == 0:
            break
        vals = [dot(x, p) for p in points]
        j = min(range(n), key=lambda i: (vals[i], i))
        if vals[j] >= xx or j in S:
            break
        S.append(j)
        lam.append(ZERO)
        while True:
            alpha = _affine_minimizer(S, gram)
            if all(a > 0 for a in alpha):
                lam = list(alpha)
                x = combination(lam, [points[i] for i in S], d)
                break
            theta = None
            for a, l in zip(alpha, lam):
                if a <= 0:
                    t = l / (l - a)
                    if theta is None or t < theta:
                        theta = t
            lam = [theta * a + (1 - theta) * l for a, l in zip(alpha, lam)]
            keep = [i for i, l in enumerate(lam) if l > 0]
            S = [S[i] for i in keep]
            lam = [lam[i] for i in keep]
            x = combination(lam, [points[i] for i in S], d)
    else:
        raise RuntimeError("Wolfe iteration limit reached")

    weights = [ZERO] * n
    for i, l in zip(S, lam):
        weights[i] = l
    return MinNormResult(tuple(x), norm2(x), tuple(weights))
