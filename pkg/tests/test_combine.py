import pytest

import oracles
from colorful.approx import half_linalg
from colorful.caratheodory import prune
from colorful.combine import CombineArray, combine_halve, find_perfect, required_classes
from colorful.errors import PreconditionError
from colorful.io import generate
from colorful.model import ColorClass, Instance, certify
from colorful.numeric import vec


def pruned_choices(inst, ids):
    out = []
    for cid in ids:
        refs = inst.cls(cid).refs()
        idx, _ = prune(inst.points(refs))
        out.append(certify(inst, [refs[i] for i in idx]))
    return out


def relabel(inst, offset):
    return tuple(ColorClass(c.id + offset, c.points) for c in inst.classes)


def test_required_classes():
    assert [required_classes(d) for d in (2, 3, 4)] == [13, 28, 65]


def test_perfect_inputs_stay_perfect():
    inst = generate(0, 2, 9, 3)
    # three 1-colorful choices, each a perfect choice over its own three classes
    perfect = []
    for block in range(3):
        sub = Instance(2, inst.classes[3 * block: 3 * block + 3])
        ch = oracles.any_colorful_choice([c.points for c in sub.classes])
        perfect.append(certify(inst, [(sub.classes[i].id, j) for i, part in enumerate(ch) for j in part]))
    out = combine_halve(perfect, inst)
    assert out.m == 1 and out.certificate.inside


def test_d2_three_2colorful():
    for seed in range(10):
        a, b, c = (generate(seed * 3 + t, 2, 3, 3) for t in range(3))
        inst = Instance(2, relabel(a, 0) + relabel(b, 3) + relabel(c, 6))
        choices = []
        for off in (0, 3, 6):
            sub = Instance(2, inst.classes[off: off + 3])
            choices.append(certify(inst, half_linalg(sub).selections))
        out = combine_halve(choices, inst)
        assert out.m == 1 and out.certificate.inside
        assert oracles.contains_origin(inst.points(out.selections))


def test_d4_five_4colorful():
    inst = generate(1, 4, 5, 5)
    choices = pruned_choices(inst, range(5))
    assert max(ch.m for ch in choices) <= 5
    # split each class's pruned set: a single class is a (<= 5)-colorful choice
    out = combine_halve(choices, inst)
    assert out.m <= 3 and out.certificate.inside


def test_d4_four_colorful_inputs_give_two():
    big = generate(2, 4, 25, 5)
    choices = []
    for block in range(5):
        sub = Instance(4, big.classes[5 * block: 5 * block + 5])
        ch = half_linalg(sub)
        assert ch.m <= 3
        choices.append(certify(big, ch.selections))
    out = combine_halve(choices, big)
    assert out.m <= 2 and out.certificate.inside


def test_overlapping_colors_rejected():
    inst = generate(0, 2, 3, 3)
    ch = pruned_choices(inst, [0])[0]
    with pytest.raises(PreconditionError):
        combine_halve([ch, ch, ch], inst)


def test_wrong_count_rejected():
    inst = generate(0, 2, 3, 3)
    with pytest.raises(PreconditionError):
        combine_halve(pruned_choices(inst, [0, 1]), inst)


def test_origin_class_immediate():
    inst = generate(0, 2, 13, 3)
    classes = list(inst.classes)
    classes[5] = ColorClass(5, (vec([0, 0]),) + classes[5].points[1:])
    inst = Instance(2, tuple(classes))
    ch = find_perfect(inst)
    assert ch.selections == ((5, 0),)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_find_perfect(d):
    for seed in range(3):
        inst = generate(seed, d, required_classes(d), d + 1)
        arr = CombineArray()
        ch = find_perfect(inst, arr)
        assert ch.m == 1 and ch.certificate.inside
        assert oracles.contains_origin(inst.points(ch.selections))
        for level, m in arr.stores:
            assert m <= arr.guarantees[level]
        assert arr.colors_disjoint()


def test_guarantees_halve():
    arr = CombineArray.empty(7)
    assert arr.guarantees == [8, 4, 2, 1, 1]
    assert len(arr.levels) == 3 + 2


def test_too_few_classes():
    with pytest.raises(PreconditionError):
        find_perfect(generate(0, 2, 12, 3))
