import pytest

import oracles
from colorful.errors import PreconditionError, SizeLimitError, StepLimitError
from colorful.io import generate
from colorful.model import NCP, Instance
from colorful.ncp import global_optimum, local_search, local_search_step, ncp_cost
from colorful.numeric import min_norm_point, origin_in_hull
from colorful.reductions import WeightedFormula, build_l_ncp, decode, encode, unsatisfied_weight

TWO_CLAUSE = WeightedFormula.of(3, [((1, -2), 3), ((2, 3), 6)])


def as_ncp(inst):
    return Instance(inst.dimension, inst.classes, NCP)


class TestCost:
    def test_single_point(self):
        inst = Instance.from_points([[[3, 4]]], kind=NCP)
        assert ncp_cost(((0, 0),), inst) == 25

    def test_origin_inside(self):
        inst = Instance.from_points([[[1, 0]], [[-1, 1]], [[-1, -1]]], kind=NCP)
        assert ncp_cost(((0, 0), (1, 0), (2, 0)), inst) == 0

    def test_two_clause_assignment(self):
        rmap = build_l_ncp(TWO_CLAUSE)
        assert ncp_cost(encode(rmap, (0, 1, 0)), rmap.instance) == 9

    def test_needs_one_point_per_class(self):
        inst = Instance.from_points([[[1]], [[2]]], kind=NCP)
        with pytest.raises(PreconditionError):
            ncp_cost(((0, 0),), inst)

    def test_zero_iff_inside(self):
        for seed in range(40):
            inst = generate(seed, 2 + seed % 3, 3 + seed % 2, 3, kind=NCP)
            sel = tuple((c.id, 0) for c in inst.classes)
            zero = ncp_cost(sel, inst) == 0
            assert zero == origin_in_hull(inst.points(sel)).inside


class TestLocalSearch:
    def test_hand_case(self):
        inst = Instance.from_points([[[1]], [[2], [-1]]], kind=NCP)
        new, swap = local_search_step(((0, 0), (1, 0)), inst)
        assert new == ((0, 0), (1, 1)) and swap.cost == 0

    def test_already_optimal(self):
        inst = Instance.from_points([[[1]], [[2], [-1]]], kind=NCP)
        assert local_search_step(((0, 0), (1, 1)), inst) is None

    def test_random_steps_strictly_decrease(self):
        for seed in range(15):
            inst = generate(seed, 3, 4, 4, kind=NCP)
            sel = tuple((c.id, 0) for c in inst.classes)
            step = local_search_step(sel, inst)
            if step is None:
                continue
            new, swap = step
            assert ncp_cost(new, inst) == swap.cost < ncp_cost(sel, inst)

    def test_caratheodory_instances_reach_zero(self):
        for seed in range(30):
            d = 1 + seed % 4
            inst = generate(seed, d, d + 1, d + 2)
            trace = local_search(as_ncp(inst))
            assert trace.final_cost == 0

    def test_singletons_take_no_steps(self):
        inst = Instance.from_points([[[1, 2]], [[3, 1]]], kind=NCP)
        trace = local_search(inst)
        assert trace.steps == [] and trace.final == trace.initial

    def test_trace_costs_decrease_and_end_locally_optimal(self):
        inst = generate(6, 3, 4, 4, kind=NCP)
        trace = local_search(inst)
        costs = [trace.initial_cost] + [s.cost for s in trace.steps]
        assert all(a > b for a, b in zip(costs, costs[1:]))
        final = trace.final
        for pos, (cid, i) in enumerate(final):
            for j in range(len(inst.cls(cid).points)):
                other = final[:pos] + ((cid, j),) + final[pos + 1:]
                assert ncp_cost(other, inst) >= trace.final_cost

    def test_best_pivot_matches_first_at_optimum(self):
        inst = generate(2, 2, 3, 4, kind=NCP)
        a, b = local_search(inst), local_search(inst, pivot="best")
        for t in (a, b):
            assert local_search_step(t.final, inst) is None

    def test_step_limit(self):
        inst = Instance.from_points([[[1]], [[2], [-1]]], kind=NCP)
        with pytest.raises(StepLimitError) as err:
            local_search(inst, max_steps=0)
        assert err.value.trace.steps == []

    def test_two_clause_local_optimum_is_flip_optimal(self):
        rmap = build_l_ncp(TWO_CLAUSE)
        trace = local_search(rmap.instance)
        x = decode(rmap, trace.final)
        base = unsatisfied_weight(TWO_CLAUSE, x)
        for i in range(3):
            y = list(x)
            y[i] ^= 1
            assert unsatisfied_weight(TWO_CLAUSE, y) >= base


class TestGlobal:
    def test_origin_points(self):
        inst = Instance.from_points([[[1, 1], [0, 0]], [[0, 0]], [[2, 0], [0, 0]]], kind=NCP)
        sel, cost = global_optimum(inst)
        assert cost == 0 and sel == ((0, 0), (1, 0), (2, 0))  # first zero in lexicographic order

    def test_two_clause_zero(self):
        rmap = build_l_ncp(TWO_CLAUSE)
        sel, cost = global_optimum(rmap.instance)
        assert cost == 0 and unsatisfied_weight(TWO_CLAUSE, decode(rmap, sel)) == 0

    def test_matches_nested_oracle(self):
        for seed in range(12):
            inst = generate(seed, 2, 3, 3, kind=NCP)
            _, cost = global_optimum(inst)
            assert cost == oracles.global_min_nested([c.points for c in inst.classes])

    def test_size_limit(self):
        inst = generate(0, 1, 7, 10, kind=NCP)
        with pytest.raises(SizeLimitError):
            global_optimum(inst)

    def test_min_norm_agrees_with_cost(self):
        inst = generate(1, 3, 3, 3, kind=NCP)
        sel, cost = global_optimum(inst)
        assert min_norm_point(inst.points(sel)).sq_distance == cost
