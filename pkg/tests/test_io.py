import json

import pytest

from colorful.errors import InstanceError
from colorful.io import SplitMix64, dumps, generate, instance_from_dict, instance_to_dict, load_instance, save_instance
from colorful.model import NCP, validate


def test_splitmix_reference_stream():
    # published test vector for seed 1234567
    rng = SplitMix64(1234567)
    assert [rng.next() for _ in range(3)] == [6457827717110365317, 3203168211198807973, 9817491932198370423]


def test_randint_range():
    rng = SplitMix64(5)
    xs = [rng.randint(-3, 3) for _ in range(500)]
    assert min(xs) == -3 and max(xs) == 3


def test_generated_instance_validates():
    inst = generate(1, 2, 3, 3)
    assert validate(inst) == []
    assert all(abs(x) <= 2 ** 16 for c in inst.classes for p in c.points for x in p)


def test_ncp_kind():
    inst = generate(1, 3, 4, 2, kind=NCP)
    assert inst.kind == NCP and all(len(c.points) == 2 for c in inst.classes)


def test_same_seed_same_bytes():
    a = dumps(instance_to_dict(generate(42, 4, 5, 7)))
    b = dumps(instance_to_dict(generate(42, 4, 5, 7)))
    assert a == b and a != dumps(instance_to_dict(generate(43, 4, 5, 7)))


def test_too_few_points():
    with pytest.raises(InstanceError):
        generate(0, 3, 2, 3)


def test_round_trip(tmp_path):
    inst = generate(3, 3, 4, 5)
    path = tmp_path / "i.json"
    save_instance(str(path), inst)
    assert load_instance(str(path)) == inst
    text = path.read_text()
    assert text.endswith("\n") and '"dimension": 3' in text


def test_rationals_are_strings():
    d = instance_to_dict(generate(0, 1, 1, 2))
    assert all(isinstance(x, str) and "/" in x for p in d["classes"][0]["points"] for x in p)


def test_bad_documents():
    with pytest.raises(InstanceError):
        instance_from_dict({"classes": []})
    with pytest.raises(InstanceError):
        instance_from_dict({"dimension": 2, "classes": [{"id": 0, "points": [["1"]]}]})
    with pytest.raises(InstanceError):
        instance_from_dict({"dimension": 1, "classes": [{"id": 0, "points": [[0.5]]}]})
    with pytest.raises(InstanceError):
        instance_from_dict({"dimension": 1, "classes": [{"id": 0, "points": [["1/0"]]}]})


def test_dumps_keeps_strings_intact():
    obj = {"a": ["x,y", "p ]"], "b": [["1/2", "3/1"]]}
    assert json.loads(dumps(obj)) == obj
