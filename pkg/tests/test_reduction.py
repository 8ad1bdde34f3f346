import random

import pytest

from conftest import random_cubical_labels
from hamcube.errors import SchemaError
from hamcube.hampath import CubicalInstance
from hamcube import reduction
from hamcube.puzzle import (
    apply_permutation,
    compose,
    identity_permutation,
    make_solved,
)


EXAMPLE = CubicalInstance(("011", "110", "111", "100", "000"))


def test_sides_and_budget():
    assert reduction.square_side(EXAMPLE) == 30
    assert reduction.cube_side(EXAMPLE) == 36
    assert reduction.budget(EXAMPLE) == 9
    small = CubicalInstance(("1", "0"))
    assert reduction.square_side(small) == 12    # 2 * (max(1, 2) + 4)
    assert reduction.cube_side(small) == 14      # 6*2 + 2*1


def test_a_word_hits_one_bits_only():
    word = reduction.a_word(EXAMPLE, 2, "square")      # l_2 = 110
    assert [(m.axis, m.index) for m in word] == [("x", 1), ("x", 2)]
    word = reduction.a_word(EXAMPLE, 5, "cube_stm")    # l_5 = 000
    assert word == []


def test_t_equals_composed_factors():
    rng = random.Random(11)
    for kind in ("square", "cube_sqtm"):
        m = rng.randint(1, 4)
        n = rng.randint(2, min(5, 2**m))
        inst = CubicalInstance(random_cubical_labels(rng, n, m))
        t = reduction.build_t(inst, kind)
        acc = reduction.build_a(inst, 1, kind)
        for i in range(1, n + 1):
            acc = compose(acc, reduction.build_b(inst, i, kind))
        assert t == acc


def test_square_b_is_involution():
    b = reduction.build_b(EXAMPLE, 3, "square")
    assert compose(b, b) == identity_permutation("square", 30)


def test_cube_b_has_order_four():
    b = reduction.build_b(EXAMPLE, 3, "cube_stm")
    b2 = compose(b, b)
    assert compose(b2, b2) == identity_permutation("cube", 36)
    assert b2 != identity_permutation("cube", 36)


def test_reduce_instance_invariant():
    for kind in ("square", "cube_stm", "cube_sqtm"):
        ri = reduction.reduce_instance(EXAMPLE, kind, group_variant=False)
        c0 = make_solved(ri.puzzle_kind, ri.side)
        assert ri.configuration == apply_permutation(ri.transformation, c0)
        assert ri.k == 9


def test_group_variant_payloads():
    rg = reduction.reduce_instance(EXAMPLE, "square", group_variant=True)
    doc = reduction.reduced_to_json(rg)
    assert doc["transformation"] is not None and doc["configuration"] is None
    rn = reduction.reduce_instance(EXAMPLE, "square", group_variant=False)
    doc = reduction.reduced_to_json(rn)
    assert doc["transformation"] is None and doc["configuration"] is not None


def test_reduced_json_roundtrip():
    for group in (True, False):
        ri = reduction.reduce_instance(EXAMPLE, "cube_sqtm", group)
        back = reduction.reduced_from_json(reduction.reduced_to_json(ri))
        assert back.kind == ri.kind and back.side == ri.side and back.k == ri.k
        if group:
            assert back.transformation == ri.transformation
        else:
            assert back.configuration == ri.configuration


def test_reduced_from_json_validation():
    ri = reduction.reduce_instance(EXAMPLE, "square", group_variant=False)
    doc = reduction.reduced_to_json(ri)
    bad = dict(doc, configuration=None)
    with pytest.raises(SchemaError):
        reduction.reduced_from_json(bad)
    bad = dict(doc, side=28)
    with pytest.raises(SchemaError):
        reduction.reduced_from_json(bad)
    bad = dict(doc, kind="pyraminx")
    with pytest.raises(SchemaError):
        reduction.reduced_from_json(bad)


def test_degenerate_single_label():
    ri = reduction.reduce_instance(
        CubicalInstance(("00",)), "square", group_variant=False
    )
    assert ri.k == 1
    with pytest.raises(SchemaError):
        reduction.reduce_instance(
            CubicalInstance(("01",)), "square", group_variant=False
        )


def test_metric_mapping():
    assert reduction.KIND_INFO["square"] == ("square", "flip")
    assert reduction.KIND_INFO["cube_stm"] == ("cube", "stm")
    assert reduction.KIND_INFO["cube_sqtm"] == ("cube", "sqtm")
    with pytest.raises(ValueError):
        reduction.reduce_instance(EXAMPLE, "dodecahedron", False)
