import random

import numpy as np
import pytest

from hamcube.errors import SchemaError
from hamcube import puzzle
from hamcube.puzzle import (
    Move,
    apply_moves,
    apply_permutation,
    compose,
    config_from_json,
    config_to_json,
    coord_values,
    enumerate_moves,
    geometry,
    identity_permutation,
    invert,
    is_solved,
    make_solved,
    parse_move,
    parse_sequence,
    permutation_from_json,
    permutation_to_json,
    word_to_permutation,
)


def test_coord_values():
    assert list(coord_values(4)) == [-2, -1, 1, 2]
    assert list(coord_values(5)) == [-2, -1, 0, 1, 2]


def test_token_roundtrip():
    for token, kind in (("x:-3", "square"), ("y:12", "square"),
                       ("z:4:ccw", "cube"), ("x:-1:half", "cube")):
        mv = parse_move(token, kind, 30)
        assert mv.token == token


def test_bad_tokens():
    for token in ("x:03", "q:1", "x:1:cw:extra", "x:+1", "x:1.0", "", "x 1"):
        with pytest.raises(SchemaError):
            parse_move(token, "square", 8)
    with pytest.raises(SchemaError):
        parse_move("x:1", "cube", 8)        # missing rotation
    with pytest.raises(SchemaError):
        parse_move("x:1:cw", "square", 8)   # rotation on a flip puzzle
    with pytest.raises(SchemaError):
        parse_move("z:1", "square", 8)


def test_zero_index_only_on_odd_sides():
    assert parse_move("x:0:cw", "cube", 5).index == 0
    with pytest.raises(SchemaError):
        parse_move("x:0:cw", "cube", 6)


def test_enumerate_moves_counts():
    assert len(enumerate_moves("square", 8, "flip")) == 2 * 8
    assert len(enumerate_moves("cube", 8, "stm")) == 9 * 8
    assert len(enumerate_moves("cube", 8, "sqtm")) == 6 * 8
    with pytest.raises(ValueError):
        enumerate_moves("cube", 8, "flip")


def test_sticker_counts():
    assert geometry("square", 6).size == 2 * 36 + 4 * 6
    assert geometry("cube", 6).size == 6 * 36


def test_flip_is_involution_and_quarter_turns_invert():
    rng = random.Random(1)
    for kind, metric in (("square", "flip"), ("cube", "stm")):
        side = 6
        moves = enumerate_moves(kind, side, metric)
        word = [rng.choice(moves) for _ in range(12)]
        inv_word = [m.inverse() for m in reversed(word)]
        assert word_to_permutation(word + inv_word, kind, side).is_identity()


def test_word_permutation_matches_direct_application():
    rng = random.Random(2)
    for kind, metric, side in (("square", "flip", 6), ("cube", "sqtm", 5)):
        moves = enumerate_moves(kind, side, metric)
        word = [rng.choice(moves) for _ in range(15)]
        c0 = make_solved(kind, side)
        by_moves = apply_moves(c0, word)
        by_perm = apply_permutation(word_to_permutation(word, kind, side), c0)
        assert by_moves == by_perm


def test_compose_invert_group_laws():
    rng = random.Random(3)
    side = 4
    moves = enumerate_moves("cube", side, "stm")
    p = word_to_permutation([rng.choice(moves) for _ in range(6)], "cube", side)
    q = word_to_permutation([rng.choice(moves) for _ in range(6)], "cube", side)
    e = identity_permutation("cube", side)
    assert compose(p, invert(p)) == e
    assert compose(e, p) == p
    # composition order: q acts first
    c0 = make_solved("cube", side)
    assert apply_permutation(compose(p, q), c0) == apply_permutation(
        p, apply_permutation(q, c0)
    )


def test_is_solved_accepts_reorientations():
    # turning every slice of an axis rotates the whole cube
    side = 2
    word = [Move("x", -1, "cw"), Move("x", 1, "cw")]
    c = apply_moves(make_solved("cube", side), word)
    assert is_solved(c)
    assert c != make_solved("cube", side)
    assert not is_solved(apply_moves(make_solved("cube", side), [Move("x", 1, "cw")]))


def test_square_flip_semantics():
    # y:i exchanges top stickers of row i with bottom stickers of row i, x negated
    side = 6
    g = geometry("square", side)
    c = apply_moves(make_solved("square", side), [Move("y", 2)])
    top = c.face_colors("+z")
    bot = c.face_colors("-z")
    for ui, x in enumerate(g.coords):
        for vi, y in enumerate(g.coords):
            if y == 2:
                assert top[ui, vi] == "B" and bot[ui, vi] == "R"
            else:
                assert top[ui, vi] == "R" and bot[ui, vi] == "B"


def test_cube_slice_turn_sends_top_of_y_face_to_x_face():
    # a clockwise z turn carries the +y sticker at (x, z) = (j, h) to the
    # +x face at (y, z) = (-j, h)
    side = 8
    h, j = 3, 2
    g = geometry("cube", side)
    src_id = g.ids_of(
        np.array([[j, g.amax, h]]), np.array([[0, 1, 0]])
    )[0]
    dst_id = g.ids_of(
        np.array([[g.amax, -j, h]]), np.array([[1, 0, 0]])
    )[0]
    src, dst = g.move_pairs(Move("z", h, "cw"))
    mapping = dict(zip(src.tolist(), dst.tolist()))
    assert mapping[int(src_id)] == int(dst_id)


def test_config_json_roundtrip():
    rng = random.Random(4)
    for kind, metric, side in (("square", "flip", 4), ("cube", "stm", 3)):
        moves = enumerate_moves(kind, side, metric)
        c = apply_moves(
            make_solved(kind, side), [rng.choice(moves) for _ in range(8)]
        )
        assert config_from_json(config_to_json(c)) == c


def test_permutation_json_roundtrip_and_validation():
    p = word_to_permutation([Move("x", 1)], "square", 4)
    assert permutation_from_json(permutation_to_json(p)) == p
    doc = permutation_to_json(p)
    doc["map"][0] = doc["map"][1]
    with pytest.raises(SchemaError):
        permutation_from_json(doc)


def test_parse_sequence():
    seq = parse_sequence("y:1 x:-2", "square", 6)
    assert [m.token for m in seq] == ["y:1", "x:-2"]
    assert parse_sequence("", "square", 6) == []
    assert puzzle.format_sequence(seq) == "y:1 x:-2"
