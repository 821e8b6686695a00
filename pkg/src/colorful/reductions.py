"""Weighted 2SAT and 3SAT formulas turned into nearest-colorful-polytope instances.

Variable x_i becomes a two-point class {p_i, pbar_i}; clause j owns coordinate
j. A true literal pulls its coordinate down to -n w_j, and the helper
singletons H_1 .. H_{d+1} (plus H'_1 .. H'_d for 3SAT) supply just enough
mass that the distance of a choice equals the weight its assignment leaves
unsatisfied.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, TextIO

from .errors import InstanceError, PreconditionError
from .model import NCP, ColorClass, ColorfulChoice, Instance
from .numeric import ONE, ZERO, Rational, combination, q

MAX2SAT = "2sat"
SAT3 = "3sat"


@dataclass(frozen=True)
class WeightedFormula:
    n: int
    clauses: tuple  # ((literal, ...), weight); literal +i is x_i, -i is not x_i
    kind: str = MAX2SAT

    def __post_init__(self):
        if self.kind not in (MAX2SAT, SAT3):
            raise InstanceError("unknown formula kind %r" % self.kind)
        if self.n < 1:
            raise InstanceError("formula needs at least one variable")
        width = 2 if self.kind == MAX2SAT else 3
        for lits, w in self.clauses:
            if not 1 <= len(lits) <= width:
                raise InstanceError("clause %r has %d literals, %s allows 1..%d" % (lits, len(lits), self.kind, width))
            if any(l == 0 or abs(l) > self.n for l in lits):
                raise InstanceError("clause %r mentions an unknown variable" % (lits,))
            if not isinstance(w, int) or w < 1:
                raise InstanceError("clause weights must be positive integers")
            if self.kind == SAT3 and w != 1:
                raise InstanceError("3SAT clauses carry weight 1")

    @classmethod
    def of(cls, n: int, clauses: Iterable, kind: str = MAX2SAT) -> "WeightedFormula":
        return cls(n, tuple((tuple(lits), int(w)) for lits, w in clauses), kind)

    @property
    def d(self) -> int:
        return len(self.clauses)


def satisfies(literal: int, variable: int, value: int) -> bool:
    return abs(literal) == variable and (literal > 0) == bool(value)


def true_literals(lits: Sequence[int], assignment: Sequence[int]) -> int:
    """Number of distinct variables whose value satisfies the clause."""
    return len({abs(l) for l in lits if (l > 0) == bool(assignment[abs(l) - 1])})


def unsatisfied_weight(f: WeightedFormula, assignment: Sequence[int]) -> int:
    if len(assignment) != f.n:
        raise PreconditionError("assignment has %d values for %d variables" % (len(assignment), f.n))
    return sum(w for lits, w in f.clauses if true_literals(lits, assignment) == 0)


def read_wcnf(fh: TextIO, kind: str = MAX2SAT) -> WeightedFormula:
    """DIMACS WCNF: header "p wcnf n d [top]", clause lines "w l1 l2 ... 0"."""
    n = None
    expected = None
    clauses = []
    for lineno, raw in enumerate(fh, 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        if tok[0] == "p":
            if len(tok) < 4 or tok[1] != "wcnf":
                raise InstanceError("line %d: expected 'p wcnf n d [top]'" % lineno)
            n, expected = int(tok[2]), int(tok[3])
            continue
        if n is None:
            raise InstanceError("line %d: clause before the header" % lineno)
        try:
            nums = [int(t) for t in tok]
        except ValueError as exc:
            raise InstanceError("line %d: %s" % (lineno, exc)) from exc
        if len(nums) < 2 or nums[-1] != 0:
            raise InstanceError("line %d: clause must end with 0" % lineno)
        clauses.append((tuple(nums[1:-1]), nums[0]))
    if n is None:
        raise InstanceError("missing 'p wcnf' header")
    if expected is not None and expected != len(clauses):
        raise InstanceError("header announces %d clauses, found %d" % (expected, len(clauses)))
    return WeightedFormula.of(n, clauses, kind)


def write_wcnf(f: WeightedFormula) -> str:
    top = sum(w for _, w in f.clauses) + 1
    lines = ["p wcnf %d %d %d" % (f.n, f.d, top)]
    for lits, w in f.clauses:
        lines.append(" ".join(str(x) for x in (w, *lits, 0)))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ReductionMap:
    formula: WeightedFormula
    instance: Instance
    variable_classes: tuple  # class id of x_i at position i-1; point 0 is p_i, point 1 is pbar_i
    helper_classes: tuple  # H_1 .. H_{d+1}
    prime_helper_classes: tuple = ()  # H'_1 .. H'_d (3SAT only)


def _variable_point(f: WeightedFormula, i: int, value: int) -> tuple:
    n = f.n
    return tuple(q(-n * w) if any(satisfies(l, i, value) for l in lits) else q(w) for lits, w in f.clauses)


def _helper_points(f: WeightedFormula, big) -> list:
    d = f.d
    ws = [q(w) for _, w in f.clauses]
    out = []
    for j in range(d):
        out.append(tuple((d + 1) * (big - q(d) / (d + 1)) * ws[j] if k == j else ws[k] for k in range(d)))
    out.append(tuple(ws))
    return out


def _build(f: WeightedFormula, prime: bool) -> ReductionMap:
    if f.d < 1:
        raise PreconditionError("formula has no clauses")
    n, d = f.n, f.d
    classes = []
    for i in range(1, n + 1):
        classes.append(ColorClass(i - 1, (_variable_point(f, i, 1), _variable_point(f, i, 0))))
    for j, h in enumerate(_helper_points(f, q(n + 2))):
        classes.append(ColorClass(n + j, (h,)))
    helpers = tuple(range(n, n + d + 1))
    primes = ()
    if prime:
        top = (d + 1) * (q(2 * n + 2) - q(d) / (d + 1))
        for i in range(d):
            h = tuple(top if j == i else ONE for j in range(d))
            classes.append(ColorClass(n + d + 1 + i, (h,)))
        primes = tuple(range(n + d + 1, n + 2 * d + 1))
    inst = Instance(d, tuple(classes), NCP)
    return ReductionMap(f, inst, tuple(range(n)), helpers, primes)


def build_l_ncp(f: WeightedFormula) -> ReductionMap:
    """Local-search instance for weighted Max-2SAT."""
    if f.kind != MAX2SAT:
        raise PreconditionError("build_l_ncp expects a 2SAT formula")
    return _build(f, prime=False)


def build_g_ncp(f: WeightedFormula) -> ReductionMap:
    """Global-optimum instance for 3SAT (all weights 1)."""
    if any(w != 1 for _, w in f.clauses) or any(len(lits) > 3 for lits, _ in f.clauses):
        raise PreconditionError("build_g_ncp expects a 3-CNF with unit weights")
    if f.kind != SAT3:
        f = WeightedFormula(f.n, f.clauses, SAT3)
    return _build(f, prime=True)


def _selections(choice) -> tuple:
    return tuple(choice.selections) if isinstance(choice, ColorfulChoice) else tuple(choice)


def decode(rmap: ReductionMap, choice) -> tuple:
    """Assignment x_i = 1 iff p_i is selected."""
    picked = {}
    for cid, idx in _selections(choice):
        picked.setdefault(cid, idx)
    out = []
    for i, cid in enumerate(rmap.variable_classes, 1):
        if cid not in picked:
            raise PreconditionError("variable x_%d has no selected point" % i)
        out.append(1 if picked[cid] == 0 else 0)
    return tuple(out)


def encode(rmap: ReductionMap, assignment: Sequence[int]) -> tuple:
    """The perfect colorful choice of an assignment (helpers are forced)."""
    if len(assignment) != len(rmap.variable_classes):
        raise PreconditionError("assignment length does not match the formula")
    sel = [(cid, 0 if v else 1) for cid, v in zip(rmap.variable_classes, assignment)]
    sel += [(cid, 0) for cid in rmap.helper_classes + rmap.prime_helper_classes]
    return tuple(sel)


def clause_levels(f: WeightedFormula, assignment: Sequence[int]) -> list:
    """A_k as lists of clause positions, k = 0 .. 3."""
    levels = [[], [], [], []]
    for j, (lits, _) in enumerate(f.clauses):
        levels[true_literals(lits, assignment)].append(j)
    return levels


def helper_weights(rmap: ReductionMap, assignment: Sequence[int]) -> dict:
    """Convex weights on helper class ids for the point h.

    Each clause in A_2 puts 1/(d+1) on its H_j, each clause in A_3 puts
    1/(d+1) on its H'_j, and H_{d+1} takes the rest.
    """
    d = rmap.formula.d
    A = clause_levels(rmap.formula, assignment)
    if A[3] and not rmap.prime_helper_classes:
        raise PreconditionError("clauses with three true literals need the 3SAT helpers")
    w = {cid: ZERO for cid in rmap.helper_classes + rmap.prime_helper_classes}
    for j in A[2]:
        w[rmap.helper_classes[j]] += q(1) / (d + 1)
    for j in A[3]:
        w[rmap.prime_helper_classes[j]] += q(1) / (d + 1)
    w[rmap.helper_classes[d]] += 1 - q(len(A[2]) + len(A[3])) / (d + 1)
    return w


def helper_combination(rmap: ReductionMap, choice) -> tuple:
    """The point h in the hull of the helpers for the choice's assignment."""
    x = decode(rmap, choice)
    w = helper_weights(rmap, x)
    ids = sorted(w)
    pts = [rmap.instance.cls(cid).points[0] for cid in ids]
    return combination([w[c] for c in ids], pts, rmap.formula.d)


def witness_point(rmap: ReductionMap, choice) -> tuple:
    """(sum of the chosen variable points + h) / (n+1)."""
    x = decode(rmap, choice)
    n = rmap.formula.n
    pts = [rmap.instance.cls(cid).points[0 if v else 1] for cid, v in zip(rmap.variable_classes, x)]
    pts.append(helper_combination(rmap, choice))
    return combination([q(1) / (n + 1)] * (n + 1), pts, rmap.formula.d)


def formula_to_dict(f: WeightedFormula) -> dict:
    return {"kind": f.kind, "n": f.n, "clauses": [{"literals": list(l), "weight": w} for l, w in f.clauses]}


def map_to_dict(rmap: ReductionMap) -> dict:
    return {
        "formula": formula_to_dict(rmap.formula),
        "variable_classes": [
            {"variable": i, "class": cid, "true_index": 0, "false_index": 1}
            for i, cid in enumerate(rmap.variable_classes, 1)
        ],
        "helper_classes": list(rmap.helper_classes),
        "prime_helper_classes": list(rmap.prime_helper_classes),
    }


def map_from_dict(data: dict, instance: Instance) -> ReductionMap:
    fd = data["formula"]
    f = WeightedFormula.of(fd["n"], [(c["literals"], c["weight"]) for c in fd["clauses"]], fd["kind"])
    return ReductionMap(
        f,
        instance,
        tuple(v["class"] for v in data["variable_classes"]),
        tuple(data["helper_classes"]),
        tuple(data.get("prime_helper_classes", ())),
    )
