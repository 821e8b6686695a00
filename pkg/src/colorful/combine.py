"""Exact perfect colorful choices from many classes by repeated halving."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .approx.halving import sign_select
from .caratheodory import prune
from .errors import InvariantError, PreconditionError
from .model import ColorfulChoice, Instance, certify


def ceil_log2(n: int) -> int:
    return (n - 1).bit_length()


def required_classes(d: int) -> int:
    return d * d * (ceil_log2(d + 1) + 1) + 1


def _split_evenly(refs: list) -> tuple[list[int], list[int]]:
    # alternate over points sorted by (color, index): every color splits evenly
    order = sorted(range(len(refs)), key=lambda i: refs[i])
    return order[0::2], order[1::2]


def combine_halve(choices: Sequence[ColorfulChoice], instance: Instance) -> ColorfulChoice:
    """Combine d+1 color-disjoint m-colorful choices into a ceil(m/2)-colorful one."""
    d = instance.dimension
    if len(choices) != d + 1:
        raise PreconditionError("combine_halve takes d+1 = %d choices, got %d" % (d + 1, len(choices)))
    seen = set()
    for ch in choices:
        cols = ch.colors()
        if not ch.selections or cols & seen:
            raise PreconditionError("choices must be non-empty and use disjoint colors")
        seen |= cols
    groups = []
    for ch in choices:
        refs = list(ch.selections)
        idx, cert = prune(instance.points(refs), enforce_size=False)
        if len(idx) == 1:
            return certify(instance, [refs[idx[0]]])
        kept = [refs[i] for i in idx]
        p1, p2 = _split_evenly(kept)
        groups.append((kept, instance.points(kept), cert.coefficients, p1, p2))
    out = certify(instance, sign_select(groups))
    if not out.certificate.inside:
        raise InvariantError("combine_halve lost the origin")
    return out


@dataclass
class CombineArray:
    """Levels of stored choices; level i holds ceil-halved guarantee c_i."""

    levels: list = field(default_factory=list)
    guarantees: list = field(default_factory=list)
    stores: list = field(default_factory=list)  # (level, m) per store, in order
    combines: int = 0

    @classmethod
    def empty(cls, d: int) -> "CombineArray":
        k = ceil_log2(d + 1) + 2
        c = [d + 1]
        for _ in range(k - 1):
            c.append((c[-1] + 1) // 2)
        return cls([deque() for _ in range(k)], c)

    def store(self, level: int, choice: ColorfulChoice) -> None:
        if level >= len(self.levels):
            raise InvariantError("combine array overflow at level %d" % level)
        if choice.m > self.guarantees[level]:
            raise InvariantError("level %d holds a %d-colorful set, guarantee %d" % (level, choice.m, self.guarantees[level]))
        self.levels[level].append(choice)
        self.stores.append((level, choice.m))

    def colors_disjoint(self) -> bool:
        seen = set()
        for lvl in self.levels:
            for ch in lvl:
                if ch.colors() & seen:
                    return False
                seen |= ch.colors()
        return True


def _pruned_class(instance: Instance, cid: int) -> ColorfulChoice:
    refs = instance.cls(cid).refs()
    idx, _ = prune(instance.points(refs), enforce_size=False)
    return certify(instance, [refs[i] for i in idx])


def find_perfect(instance: Instance, array: Optional[CombineArray] = None) -> ColorfulChoice:
    """Perfect colorful choice containing the origin, given d^2(ceil(log(d+1))+1)+1 classes.

    Pass an empty ``CombineArray`` to inspect the run afterwards.
    """
    d = instance.dimension
    n = len(instance.classes)
    if n < required_classes(d):
        raise PreconditionError("need at least %d classes in dimension %d, got %d" % (required_classes(d), d, n))
    A = CombineArray.empty(d)
    if array is not None:
        array.levels, array.guarantees, array.stores, array.combines = A.levels, A.guarantees, A.stores, 0
        A = array
    for c in instance.classes:
        ch = _pruned_class(instance, c.id)
        if len(ch) == 1:
            return ch
        A.store(0, ch)
    while True:
        ready = [i for i, lvl in enumerate(A.levels) if len(lvl) >= d + 1]
        if not ready:
            raise PreconditionError("no level holds d+1 sets; cannot make progress")
        i = max(ready)
        taken = [A.levels[i].popleft() for _ in range(d + 1)]
        combined = combine_halve(taken, instance)
        A.combines += 1
        refs = list(combined.selections)
        idx, _ = prune(instance.points(refs), enforce_size=False)
        result = certify(instance, [refs[t] for t in idx])
        if result.m == 1:
            if not result.certificate.inside:
                raise InvariantError("perfect choice misses the origin")
            return result
        A.store(i + 1, result)
        # colors shed along the way go back to level 0 as whole classes
        used = set().union(*(ch.colors() for ch in taken))
        for cid in sorted(used - result.colors()):
            A.store(0, _pruned_class(instance, cid))
