import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from colorful.numeric import (
    cone_coefficients,
    combination,
    complement_basis,
    coordinates_in,
    dot,
    is_zero,
    min_norm_point,
    null_space_vector,
    origin_in_hull,
    primitive,
    primitive_scale,
    project_complement,
    q,
    rank,
    solve_linear,
    vec,
)

small = st.integers(-6, 6)


def points(n, d):
    return st.lists(st.tuples(*[small] * d).map(vec), min_size=n, max_size=n)


def rand_points(rng, n, d, lo=-9, hi=9):
    return [vec(rng.randint(lo, hi) for _ in range(d)) for _ in range(n)]


class TestSolveLinear:
    def test_identity(self):
        assert solve_linear([[1, 0], [0, 1]], [3, 4]) == (3, 4)

    def test_inconsistent(self):
        assert solve_linear([[1, 1], [2, 2]], [1, 3]) is None

    def test_underdetermined_free_zero(self):
        assert solve_linear([[1, 1], [2, 2]], [1, 2]) == (1, 0)

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            q(0.5)

    def test_fraction_and_string_inputs(self):
        assert q(Fraction(3, 4)) == q("3/4")

    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(points(n, n), points(1, n))))
    def test_solution_satisfies_system(self, data):
        rows, (b,) = data
        x = solve_linear(rows, b)
        if x is not None:
            assert all(dot(r, x) == bi for r, bi in zip(rows, b))
        else:
            # inconsistent: b is outside the column space
            assert rank([tuple(r) + (bi,) for r, bi in zip(rows, b)]) > rank(rows)


class TestNullSpace:
    def test_independent(self):
        assert null_space_vector([vec([1, 0]), vec([0, 1])]) is None

    def test_collinear_pair(self):
        mu = null_space_vector([vec([1, 0]), vec([2, 0])])
        assert mu[0] == -2 * mu[1] and mu[1] != 0

    @given(st.integers(1, 4).flatmap(lambda d: points(d + 2, d)))
    def test_d_plus_two_points(self, pts):
        mu = null_space_vector(pts)
        assert mu is not None and any(m != 0 for m in mu)
        assert is_zero(combination(mu, pts))


class TestProjection:
    def test_axis(self):
        proj, _ = project_complement([vec([1, 1])], [vec([1, 0])])
        assert proj == [vec([0, 1])]

    def test_two_axes(self):
        proj, _ = project_complement([vec([2, 3, 5])], [vec([1, 0, 0]), vec([0, 1, 0])])
        assert proj == [vec([0, 0, 5])]

    def test_zero_basis_rejected(self):
        with pytest.raises(ValueError):
            project_complement([vec([1, 1])], [vec([0, 0])])

    def test_random_postconditions_and_idempotence(self):
        rng = random.Random(7)
        for _ in range(50):
            pts = rand_points(rng, 3, 4)
            basis = rand_points(rng, 2, 4)
            if rank(basis) == 0:
                continue
            proj, comp = project_complement(pts, basis)
            for p, pp in zip(pts, proj):
                assert all(dot(pp, b) == 0 for b in basis)
                diff = tuple(a - b for a, b in zip(p, pp))
                assert rank(list(basis) + [diff]) == rank(basis)
            assert project_complement(proj, basis)[0] == proj
            assert len(comp) == 4 - rank(basis)
            assert all(dot(c, b) == 0 for c in comp for b in basis)

    def test_coordinates_preserve_origin_membership(self):
        rng = random.Random(11)
        for _ in range(30):
            pts = rand_points(rng, 4, 3)
            v = rand_points(rng, 1, 3)
            if is_zero(v[0]):
                continue
            comp = complement_basis(v, 3)
            low = coordinates_in(pts, comp)
            proj, _ = project_complement(pts, v)
            assert origin_in_hull(low).inside == origin_in_hull(proj).inside


class TestOriginInHull:
    def test_symmetric_pair(self):
        cert = origin_in_hull([vec([1, 0]), vec([-1, 0])])
        assert cert.inside and cert.coefficients == (q("1/2"), q("1/2"))

    def test_outside_with_separator(self):
        pts = [vec([1, 0]), vec([0, 1])]
        cert = origin_in_hull(pts)
        assert not cert.inside
        assert all(dot(cert.separator, p) > 0 for p in pts)

    def test_single_origin_point(self):
        cert = origin_in_hull([vec([0, 0, 0])])
        assert cert.inside and cert.coefficients == (1,)

    @given(st.integers(1, 4).flatmap(lambda d: st.integers(1, d + 3).flatmap(lambda n: points(n, d))))
    def test_certificates_are_exact(self, pts):
        cert = origin_in_hull(pts)
        assert cert.check(pts)
        if cert.inside:
            assert sum(cert.coefficients) == 1 and min(cert.coefficients) >= 0
            assert is_zero(combination(cert.coefficients, pts))
        else:
            assert min(dot(cert.separator, p) for p in pts) > 0

    def test_matches_subset_oracle_ten_points_r3(self):
        rng = random.Random(3)
        for _ in range(40):
            pts = rand_points(rng, 10, 3)
            pts = [tuple(c + 4 for c in p) for p in pts]  # shift so both answers occur
            assert origin_in_hull(pts).inside == oracles.contains_origin(pts)

    def test_cone_coefficients(self):
        gens = [vec([1, 0]), vec([0, 1])]
        assert cone_coefficients(vec([2, 3]), gens) == (2, 3)
        assert cone_coefficients(vec([-1, 0]), gens) is None


class TestMinNorm:
    def test_segment(self):
        res = min_norm_point([vec([1, -1]), vec([1, 1])])
        assert res.point == vec([1, 0]) and res.sq_distance == 1

    def test_origin_vertex(self):
        res = min_norm_point([vec([0, 0]), vec([5, 7])])
        assert res.point == vec([0, 0]) and res.sq_distance == 0

    def test_weights_reproduce_point(self):
        pts = [vec([3, 1]), vec([1, 3]), vec([4, 4])]
        res = min_norm_point(pts)
        assert combination(res.weights, pts) == res.point
        assert res.sq_distance == q(8)

    def test_six_points_plane_vs_face_oracle(self):
        rng = random.Random(5)
        for _ in range(40):
            pts = rand_points(rng, 6, 2, -3, 9)
            assert min_norm_point(pts).sq_distance == oracles.min_sq_distance(pts)

    @given(st.integers(1, 4).flatmap(lambda d: st.integers(1, d + 3).flatmap(lambda n: points(n, d))))
    def test_zero_iff_inside(self, pts):
        assert (min_norm_point(pts).sq_distance == 0) == origin_in_hull(pts).inside

    @given(st.integers(1, 3).flatmap(lambda d: st.integers(1, 5).flatmap(lambda n: points(n, d))))
    def test_optimality_condition(self, pts):
        res = min_norm_point(pts)
        assert all(dot(res.point, p) >= res.sq_distance for p in pts)

    def test_deterministic(self):
        rng = random.Random(9)
        pts = rand_points(rng, 7, 3)
        assert min_norm_point(pts) == min_norm_point(list(pts))


class TestPrimitive:
    def test_clears_denominators_and_gcd(self):
        assert primitive(vec(["1/2", "-3/4", 0])) == vec([2, -3, 0])
        assert primitive(vec([6, -9])) == vec([2, -3])

    def test_zero_vector(self):
        assert primitive_scale(vec([0, 0])) == 1

    @given(points(1, 3))
    def test_positive_multiple(self, pts):
        v = pts[0]
        s = primitive_scale(v)
        assert s > 0 and primitive(v) == tuple(s * x for x in v)

    def test_complement_basis_is_integral(self):
        for w in complement_basis([vec(["1/3", "2/7", -5])], 3):
            assert all(x.denominator == 1 for x in w) and dot(w, vec(["1/3", "2/7", -5])) == 0
