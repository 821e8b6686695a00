"""Exact rational vectors and Gaussian elimination.

Vectors are plain tuples of ``gmpy2.mpq``; matrices are lists of such rows.
Pivoting is always leftmost column first, smallest row index first, so every
routine here is deterministic bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from gmpy2 import mpq

Rational = type(mpq())
Vector = tuple
Matrix = list

ZERO = mpq(0)
ONE = mpq(1)


def q(x) -> Rational:
    """Coerce an int, str ("a/b"), Fraction or mpq to an exact rational."""
    if isinstance(x, Rational):
        return x
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact input")
    return mpq(x)


def vec(xs: Iterable) -> Vector:
    return tuple(q(x) for x in xs)


def zeros(d: int) -> Vector:
    return (ZERO,) * d


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def dot(u: Vector, v: Vector) -> Rational:
    s = ZERO
    for a, b in zip(u, v):
        s += a * b
    return s


def norm2(v: Vector) -> Rational:
    return dot(v, v)


def is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


def combination(coeffs: Sequence, points: Sequence[Vector], d: Optional[int] = None) -> Vector:
    """Return sum_i coeffs[i] * points[i]."""
    if d is None:
        d = len(points[0]) if points else 0
    acc = [ZERO] * d
    for c, p in zip(coeffs, points):
        if c == 0:
            continue
        for k in range(d):
            acc[k] += c * p[k]
    return tuple(acc)


def transpose(rows: Sequence[Sequence]) -> Matrix:
    if not rows:
        return []
    return [tuple(col) for col in zip(*rows)]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = [list(map(q, r)) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        row_r = [a * inv for a in m[r]]
        m[r] = row_r
        # entries left of c in the pivot row are already zero
        support = [j for j in range(c, ncols) if row_r[j]]
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    row_i = m[i]
                    for j in support:
                        row_i[j] -= f * row_r[j]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    return len(rref(vectors)[1])


def solve_linear(A: Sequence[Sequence], b: Sequence) -> Optional[Vector]:
    """Solve A x = b exactly.

    Returns None when the system is inconsistent. Underdetermined systems get
    their free variables set to zero.
    """
    if len(A) != len(b):
        raise ValueError("A has %d rows but b has %d entries" % (len(A), len(b)))
    ncols = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    if not aug:
        return zeros(ncols)
    R, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for i, c in enumerate(pivots):
        x[c] = R[i][ncols]
    return tuple(x)


def kernel_basis(A: Sequence[Sequence], ncols: Optional[int] = None) -> list[Vector]:
    """Basis of {x : A x = 0}, one vector per free column (free entry = 1)."""
    if ncols is None:
        ncols = len(A[0]) if A else 0
    if not A:
        return [tuple(ONE if j == i else ZERO for j in range(ncols)) for i in range(ncols)]
    R, pivots = rref(A)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        x = [ZERO] * ncols
        x[f] = ONE
        for i, c in enumerate(pivots):
            x[c] = -R[i][f]
        basis.append(tuple(x))
    return basis


def null_space_vector(points: Sequence[Vector]) -> Optional[Vector]:
    """Nonzero mu with sum mu_i v_i = 0, or None if the v_i are independent."""
    if not points:
        raise ValueError("need at least one point")
    d = len(points[0])
    cols = transpose(points) if d else []
    ker = kernel_basis(cols, ncols=len(points))
    return ker[0] if ker else None


def independent_subset(vectors: Sequence[Vector]) -> list[int]:
    """Indices of a maximal linearly independent subset, greedy in input order."""
    if not vectors:
        return []
    d = len(vectors[0])
    if d == 0:
        return []
    _, pivots = rref(transpose(vectors))
    return pivots


def primitive_scale(v: Vector) -> Rational:
    """Positive s with s*v a primitive integer vector (1 for the zero vector)."""
    if is_zero(v):
        return ONE
    den = lcm(*(x.denominator for x in v))
    g = gcd(*(int(x * den) for x in v))
    return mpq(den, g)


def primitive(v: Vector) -> Vector:
    s = primitive_scale(v)
    return tuple(s * x for x in v)


def complement_basis(basis: Sequence[Vector], d: int) -> list[Vector]:
    """Integer basis of lsp(basis)^perp (not orthogonalised)."""
    rows = [b for b in basis if not is_zero(b)]
    return [primitive(w) for w in kernel_basis(rows, ncols=d)]


def project_complement(points: Sequence[Vector], basis: Sequence[Vector]) -> tuple[list[Vector], list[Vector]]:
    """Orthogonal projection of points onto lsp(basis)^perp.

    Returns the projected points in ambient coordinates together with a
    rational basis of the complement, for use with :func:`coordinates_in`.
    """
    if not basis or all(is_zero(b) for b in basis):
        raise ValueError("basis must span a subspace of dimension >= 1")
    d = len(basis[0])
    idx = independent_subset(basis)
    B = [basis[i] for i in idx]
    gram = [[dot(u, v) for v in B] for u in B]
    out = []
    for p in points:
        y = solve_linear(gram, [dot(u, p) for u in B])
        out.append(sub(p, combination(y, B, d)))
    return out, complement_basis(B, d)


def coordinates_in(points: Sequence[Vector], comp: Sequence[Vector]) -> list[Vector]:
    """Map points to Q^r via p -> (<w, p>)_w.

    For comp a basis of lsp(C)^perp this is a linear map whose kernel is
    exactly lsp(C), so hull membership of the origin is preserved both ways
    for the projected points.
    """
    return [tuple(dot(w, p) for w in comp) for p in points]


def affinely_independent(points: Sequence[Vector]) -> bool:
    if not points:
        return True
    lifted = [tuple(p) + (ONE,) for p in points]
    return rank(lifted) == len(points)
