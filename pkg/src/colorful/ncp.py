"""Nearest colorful polytope: exact cost, single-swap local search, exhaustive optimum."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Optional

from .errors import PreconditionError, SizeLimitError, StepLimitError
from .model import ColorfulChoice, Instance
from .numeric import ZERO, dot, min_norm_point, norm2

FIRST = "first"
BEST = "best"


def _points(instance: Instance, sel) -> list:
    return [instance.point(r) for r in sel]


def _check_perfect(instance: Instance, sel) -> tuple:
    sel = tuple(sel)
    ids = [c.id for c in instance.classes]
    if [cid for cid, _ in sel] != ids:
        raise PreconditionError("expected exactly one point per class, in class order")
    for cid, i in sel:
        if not 0 <= i < len(instance.cls(cid).points):
            raise PreconditionError("index %d out of range for class %d" % (i, cid))
    return sel


def _selections(choice) -> tuple:
    if isinstance(choice, ColorfulChoice):
        return tuple(choice.selections)
    return tuple(tuple(r) for r in choice)


def ncp_cost(choice, instance: Instance):
    """Squared distance from the origin to the hull of the chosen points."""
    sel = _check_perfect(instance, _selections(choice))
    return min_norm_point(_points(instance, sel)).sq_distance


@dataclass(frozen=True)
class Swap:
    class_id: int
    out_index: int
    in_index: int
    cost: object  # squared distance after the swap


@dataclass
class LocalSearchTrace:
    initial: tuple
    final: tuple
    steps: list = field(default_factory=list)
    initial_cost: object = None
    final_cost: object = None


def _swapped(sel: tuple, pos: int, new_index: int) -> tuple:
    cid = sel[pos][0]
    return sel[:pos] + ((cid, new_index),) + sel[pos + 1:]


def local_search_step(choice, instance: Instance, pivot: str = FIRST, _cost=None) -> Optional[tuple]:
    """One improving swap, or None at a local optimum.

    Classes whose point carries zero weight in the nearest point x are tried
    first with points strictly beyond the hyperplane through x normal to x.
    If none of those improves, the whole swap neighborhood is scanned in
    (class id, point index) order. With ``pivot="best"`` the full neighborhood
    is scanned and the cheapest swap wins. Returns (new selections, Swap).
    """
    sel = _check_perfect(instance, _selections(choice))
    pts = _points(instance, sel)
    res = min_norm_point(pts)
    cost = res.sq_distance
    if cost == 0:
        return None

    def attempt(pos, j):
        new = _swapped(sel, pos, j)
        c = min_norm_point(_points(instance, new)).sq_distance
        return new, Swap(sel[pos][0], sel[pos][1], j, c)

    if pivot == BEST:
        best = None
        for pos, (cid, i) in enumerate(sel):
            for j in range(len(instance.cls(cid).points)):
                if j == i:
                    continue
                new, sw = attempt(pos, j)
                if sw.cost < cost and (best is None or sw.cost < best[1].cost):
                    best = (new, sw)
        return best
    if pivot != FIRST:
        raise ValueError("unknown pivot rule %r" % pivot)

    x = res.point
    xx = norm2(x)
    tried = set()
    for pos, (cid, i) in enumerate(sel):
        if res.weights[pos] > 0:
            continue
        for j, p in enumerate(instance.cls(cid).points):
            if j == i or not dot(x, p) < xx:
                continue
            tried.add((pos, j))
            new, sw = attempt(pos, j)
            if sw.cost < cost:
                return new, sw
    for pos, (cid, i) in enumerate(sel):
        for j in range(len(instance.cls(cid).points)):
            if j == i or (pos, j) in tried:
                continue
            new, sw = attempt(pos, j)
            if sw.cost < cost:
                return new, sw
    return None


def base_solution(instance: Instance) -> tuple:
    return tuple((c.id, 0) for c in instance.classes)


def local_search(instance: Instance, start=None, max_steps: int = 10 ** 6, pivot: str = FIRST) -> LocalSearchTrace:
    sel = base_solution(instance) if start is None else _check_perfect(instance, _selections(start))
    cost = min_norm_point(_points(instance, sel)).sq_distance
    trace = LocalSearchTrace(sel, sel, [], cost, cost)
    while True:
        step = local_search_step(sel, instance, pivot)
        if step is None:
            return trace
        if len(trace.steps) >= max_steps:
            raise StepLimitError("local search exceeded %d steps" % max_steps, trace)
        sel, sw = step
        trace.steps.append(sw)
        trace.final = sel
        trace.final_cost = sw.cost


def global_optimum(instance: Instance, limit: int = 10 ** 6) -> tuple:
    """(lexicographically first optimal selections, squared distance)."""
    sizes = [len(c.points) for c in instance.classes]
    if prod(sizes) > limit:
        raise SizeLimitError("%d colorful choices exceed the limit %d" % (prod(sizes), limit))
    ids = [c.id for c in instance.classes]
    best = None
    for combo in product(*(range(s) for s in sizes)):
        sel = tuple(zip(ids, combo))
        c = min_norm_point(_points(instance, sel)).sq_distance
        if best is None or c < best[1]:
            best = (sel, c)
            if c == ZERO:
                break
    return best
