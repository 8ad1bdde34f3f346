"""Build the transformations a_i, b_i, t and emit puzzle instances from a
cubical Hamiltonian-path instance.

For labels l_1..l_n of length m the Square instance has side
``2 * (max(m, n) + 2n)`` and the Cube instance has side ``6n + 2m``; the
move budget is ``k = 2n - 1`` in both cases.  The transformation is
``t = a_1 o b_1 o ... o b_n`` (rightmost factor first) with
``a_i`` the product of column flips / clockwise x turns at the one-bits of
``l_i`` and ``b_i`` the conjugate of the row flip ``y_i`` (Square) or the
clockwise z turn of slice ``m + i`` (Cube) by ``a_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import SchemaError
from .hampath import CubicalInstance, cubical_to_json, parse_cubical
from . import puzzle
from .puzzle import (
    CUBE,
    SQUARE,
    METRIC_FLIP,
    METRIC_SQTM,
    METRIC_STM,
    Move,
    PuzzleConfig,
    StickerPermutation,
    apply_permutation,
    make_solved,
    word_to_permutation,
)

KIND_SQUARE = "square"
KIND_CUBE_STM = "cube_stm"
KIND_CUBE_SQTM = "cube_sqtm"
INSTANCE_KINDS = (KIND_SQUARE, KIND_CUBE_STM, KIND_CUBE_SQTM)

# instance kind -> (puzzle kind, move metric)
KIND_INFO = {
    KIND_SQUARE: (SQUARE, METRIC_FLIP),
    KIND_CUBE_STM: (CUBE, METRIC_STM),
    KIND_CUBE_SQTM: (CUBE, METRIC_SQTM),
}


def square_side(inst: CubicalInstance) -> int:
    return 2 * (max(inst.m, inst.n) + 2 * inst.n)


def cube_side(inst: CubicalInstance) -> int:
    return 6 * inst.n + 2 * inst.m


def budget(inst: CubicalInstance) -> int:
    return 2 * inst.n - 1


def instance_side(inst: CubicalInstance, kind: str) -> int:
    return square_side(inst) if kind == KIND_SQUARE else cube_side(inst)


# ---------------------------------------------------------------------------
# Defining move words (application order: first move first)
# ---------------------------------------------------------------------------

def a_word(inst: CubicalInstance, i: int, kind: str) -> list[Move]:
    rot = None if kind == KIND_SQUARE else "cw"
    return [
        Move("x", j, rot) for j in range(1, inst.m + 1) if inst.bit(i, j)
    ]


def a_inverse_word(inst: CubicalInstance, i: int, kind: str) -> list[Move]:
    return [mv.inverse() for mv in reversed(a_word(inst, i, kind))]


def b_word(inst: CubicalInstance, i: int, kind: str) -> list[Move]:
    if kind == KIND_SQUARE:
        mid = Move("y", i)
    else:
        mid = Move("z", inst.m + i, "cw")
    return a_word(inst, i, kind) + [mid] + a_inverse_word(inst, i, kind)


def t_word(inst: CubicalInstance, kind: str) -> list[Move]:
    word: list[Move] = []
    for i in range(inst.n, 0, -1):   # rightmost factor b_n applies first
        word.extend(b_word(inst, i, kind))
    word.extend(a_word(inst, 1, kind))
    return word


def _puzzle_kind(kind: str) -> str:
    if kind not in KIND_INFO:
        raise ValueError(f"unknown instance kind {kind!r}")
    return KIND_INFO[kind][0]


def build_a(inst: CubicalInstance, i: int, kind: str) -> StickerPermutation:
    if not 1 <= i <= inst.n:
        raise ValueError(f"index {i} out of range 1..{inst.n}")
    side = instance_side(inst, kind)
    return word_to_permutation(a_word(inst, i, kind), _puzzle_kind(kind), side)


def build_b(inst: CubicalInstance, i: int, kind: str) -> StickerPermutation:
    if not 1 <= i <= inst.n:
        raise ValueError(f"index {i} out of range 1..{inst.n}")
    side = instance_side(inst, kind)
    return word_to_permutation(b_word(inst, i, kind), _puzzle_kind(kind), side)


def build_t(inst: CubicalInstance, kind: str) -> StickerPermutation:
    side = instance_side(inst, kind)
    return word_to_permutation(t_word(inst, kind), _puzzle_kind(kind), side)


# ---------------------------------------------------------------------------
# Reduced instances
# ---------------------------------------------------------------------------

@dataclass
class ReducedInstance:
    kind: str                      # square | cube_stm | cube_sqtm
    group: bool
    side: int
    k: int
    transformation: StickerPermutation | None
    configuration: PuzzleConfig | None
    source: CubicalInstance
    # Defining move word, kept for test introspection; not serialized.
    word: list[Move] | None = field(default=None, compare=False, repr=False)

    @property
    def puzzle_kind(self) -> str:
        return KIND_INFO[self.kind][0]

    @property
    def metric(self) -> str:
        return KIND_INFO[self.kind][1]


def reduce_instance(
    inst: CubicalInstance, kind: str, group_variant: bool
) -> ReducedInstance:
    """Emit the (t, k) or (C_t, k) instance for the given target."""
    if kind not in KIND_INFO:
        raise ValueError(f"unknown instance kind {kind!r}")
    if len(inst.labels) == 1:
        # Degenerate n = 1 instance, accepted for testing.
        if set(inst.labels[0]) != {"0"}:
            raise SchemaError("a single-label instance must be all zeros")
    else:
        inst.validate()
    pk = _puzzle_kind(kind)
    side = instance_side(inst, kind)
    word = t_word(inst, kind)
    t = word_to_permutation(word, pk, side)
    config = apply_permutation(t, make_solved(pk, side))
    return ReducedInstance(
        kind=kind,
        group=group_variant,
        side=side,
        k=budget(inst),
        transformation=t,
        configuration=None if group_variant else config,
        source=inst,
        word=word,
    )


def reduced_to_json(ri: ReducedInstance) -> dict:
    return {
        "kind": ri.kind,
        "group": ri.group,
        "side": ri.side,
        "k": ri.k,
        "transformation": (
            puzzle.permutation_to_json(ri.transformation)
            if ri.group and ri.transformation is not None
            else None
        ),
        "configuration": (
            puzzle.config_to_json(ri.configuration)
            if ri.configuration is not None
            else None
        ),
        "source": cubical_to_json(ri.source),
    }


def reduced_from_json(doc: dict) -> ReducedInstance:
    try:
        kind = doc["kind"]
        group = bool(doc["group"])
        side = int(doc["side"])
        k = int(doc["k"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad reduced instance document: {exc}") from None
    if kind not in KIND_INFO:
        raise SchemaError(f"unknown instance kind {kind!r}")
    source = parse_cubical(doc.get("source", {}))
    t_doc = doc.get("transformation")
    c_doc = doc.get("configuration")
    transformation = puzzle.permutation_from_json(t_doc) if t_doc else None
    configuration = puzzle.config_from_json(c_doc) if c_doc else None
    if transformation is None and configuration is None:
        raise SchemaError(
            "reduced instance carries neither a transformation nor a configuration"
        )
    if group and transformation is None:
        raise SchemaError("group instance requires a transformation")
    if not group and configuration is None:
        raise SchemaError("non-group instance requires a configuration")
    for obj in (transformation, configuration):
        if obj is not None and (obj.kind, obj.side) != (KIND_INFO[kind][0], side):
            raise SchemaError("payload dimensions disagree with instance header")
    return ReducedInstance(
        kind=kind,
        group=group,
        side=side,
        k=k,
        transformation=transformation,
        configuration=configuration,
        source=source,
    )
