"""Turn Hamiltonian-path orderings into exact (2n-1)-move solutions,
verify candidate solutions, and profile solutions with the proof-side
diagnostics (row-flip parities, Z/O/T/M slice classification, unused-index
witnesses, paired-sticker tracking)."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import SchemaError
from .hampath import CubicalInstance
from .reduction import KIND_SQUARE, ReducedInstance
from .puzzle import (
    METRIC_SQTM,
    Move,
    PuzzleGeometry,
    apply_moves,
    compose,
    geometry,
    is_solved,
    word_to_permutation,
)


@dataclass(frozen=True)
class PathCertificate:
    """An ordering i_1..i_n (1-based) of the instance labels."""

    ordering: tuple

    def validate(self, inst: CubicalInstance):
        n = inst.n
        if sorted(self.ordering) != list(range(1, n + 1)):
            raise ValueError("ordering is not a permutation of 1..n")
        if self.ordering[0] != 1 or self.ordering[-1] != n:
            raise ValueError("ordering must start at 1 and end at n")
        for a, b in zip(self.ordering, self.ordering[1:]):
            if _hamming(inst.labels[a - 1], inst.labels[b - 1]) != 1:
                raise ValueError(
                    f"labels {a} and {b} are not at Hamming distance one"
                )


def _hamming(a: str, b: str) -> int:
    return sum(x != y for x, y in zip(a, b))


def _diff_bit(a: str, b: str) -> int:
    """1-based position of the unique differing bit."""
    (j,) = [p + 1 for p, (x, y) in enumerate(zip(a, b)) if x != y]
    return j


def certificate_to_json(cert: PathCertificate) -> dict:
    return {"ordering": list(cert.ordering)}


def certificate_from_json(doc: dict) -> PathCertificate:
    try:
        ordering = tuple(int(i) for i in doc["ordering"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad certificate document: {exc}") from None
    return PathCertificate(ordering)


# ---------------------------------------------------------------------------
# Synthesis
# ---------------------------------------------------------------------------

def synthesize_square_solution(
    inst: CubicalInstance, cert: PathCertificate
) -> list[Move]:
    """The 2n-1 flips y_{i_1}, x_{j_1}, ..., x_{j_{n-1}}, y_{i_n} that undo
    the Square transformation, in application order."""
    if inst.n == 1:
        return [Move("y", 1)]
    cert.validate(inst)
    moves: list[Move] = []
    order = cert.ordering
    for p, i in enumerate(order):
        moves.append(Move("y", i))
        if p + 1 < len(order):
            j = _diff_bit(inst.labels[i - 1], inst.labels[order[p + 1] - 1])
            moves.append(Move("x", j))
    return moves


def synthesize_cube_solution(
    inst: CubicalInstance, cert: PathCertificate, metric: str = METRIC_SQTM
) -> list[Move]:
    """The 2n-1 quarter turns undoing the Cube transformation.

    Every z move is a counterclockwise turn of slice m + i_p; each x move
    direction depends on which label carries the 1 at the differing bit.
    The sequence is legal SQTM (and hence legal STM).
    """
    if inst.n == 1:
        return [Move("z", inst.m + 1, "ccw")]
    cert.validate(inst)
    moves: list[Move] = []
    order = cert.ordering
    for p, i in enumerate(order):
        moves.append(Move("z", inst.m + i, "ccw"))
        if p + 1 < len(order):
            nxt = order[p + 1]
            j = _diff_bit(inst.labels[i - 1], inst.labels[nxt - 1])
            s_p = inst.bit(i, j) - inst.bit(nxt, j)
            # emitted move is (x_j)^(-s_p); the generator x_j is clockwise
            moves.append(Move("x", j, "cw" if s_p == -1 else "ccw"))
    return moves


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reasons: tuple = ()
    length: int = 0


def verify_solution(ri: ReducedInstance, moves: list[Move]) -> Verdict:
    """Check a move sequence against a reduced instance.

    Group instances accept iff the sequence composed after t is the
    identity; non-group instances accept iff the final configuration has
    six distinct monochromatic faces.  Budget and metric legality are
    always enforced.
    """
    g = geometry(ri.puzzle_kind, ri.side)
    reasons = []
    for mv in moves:
        try:
            g.check_move(mv, ri.metric)
        except ValueError:
            reasons.append("illegal-move")
            break
    if "illegal-move" not in reasons:
        if len(moves) > ri.k:
            reasons.append("length-exceeded")
        if ri.group:
            seq = word_to_permutation(moves, ri.puzzle_kind, ri.side)
            if not compose(seq, ri.transformation).is_identity():
                reasons.append("not-solved")
        else:
            final = apply_moves(ri.configuration, moves)
            if not is_solved(final):
                reasons.append("not-solved")
    return Verdict(accepted=not reasons, reasons=tuple(reasons), length=len(moves))


# ---------------------------------------------------------------------------
# Diagnostics
# ---------------------------------------------------------------------------

@dataclass
class SolutionProfile:
    """Observational counts over a move sequence.

    ``index_counts`` maps (axis, |index|) to a move count.  For Square
    instances ``row_flip_counts`` maps each signed row index that occurs to
    its count.  For Cube instances the i in 1..n are partitioned into
    Z/O/T/M by how many index-(m+i) moves occur, and the J / vertical-face /
    other move counts of the counting argument are recorded.
    """

    length: int
    index_counts: dict = field(default_factory=dict)
    row_flip_counts: dict = field(default_factory=dict)
    zotm: dict = field(default_factory=dict)
    c_O: int = 0
    c_T: int = 0
    c_M: int = 0
    c_J: int = 0
    c_vertical: int = 0
    c_other: int = 0
    unused_index: int | None = None

    @property
    def Z(self):
        return {i for i, c in self.zotm.items() if c == 0}

    @property
    def O(self):
        return {i for i, c in self.zotm.items() if c == 1}

    @property
    def T(self):
        return {i for i, c in self.zotm.items() if c == 2}

    @property
    def M(self):
        return {i for i, c in self.zotm.items() if c >= 3}


def analyze_solution(ri: ReducedInstance, moves: list[Move]) -> SolutionProfile:
    n, m = ri.source.n, ri.source.m
    prof = SolutionProfile(length=len(moves))
    for mv in moves:
        key = (mv.axis, abs(mv.index))
        prof.index_counts[key] = prof.index_counts.get(key, 0) + 1
    if ri.kind == KIND_SQUARE:
        for mv in moves:
            if mv.axis == "y":
                prof.row_flip_counts[mv.index] = (
                    prof.row_flip_counts.get(mv.index, 0) + 1
                )
        lo = max(m, n)
        candidates = range(lo + 1, lo + 2 * n + 1)
    else:
        amax = ri.side // 2
        abs_counts: dict = {}
        for mv in moves:
            abs_counts[abs(mv.index)] = abs_counts.get(abs(mv.index), 0) + 1
        for i in range(1, n + 1):
            prof.zotm[i] = abs_counts.get(m + i, 0)
        for mv in moves:
            v = abs(mv.index)
            if m + 1 <= v <= m + n:
                c = prof.zotm[v - m]
                if c == 1:
                    prof.c_O += 1
                elif c == 2:
                    prof.c_T += 1
                else:
                    prof.c_M += 1
            elif 1 <= v <= m:
                prof.c_J += 1
            elif v == amax and mv.axis in "xy":
                prof.c_vertical += 1
            else:
                prof.c_other += 1
        candidates = range(m + n + 1, m + 3 * n + 1)
    used = {abs(mv.index) for mv in moves}
    for u in candidates:
        if u not in used:
            prof.unused_index = u
            break
    return prof


# ---------------------------------------------------------------------------
# Paired-sticker tracking (Cube lower-bound machinery, used as a diagnostic)
# ---------------------------------------------------------------------------

def paired_sticker_ids(
    geom: PuzzleGeometry, p1: int, p2: int, q: int
) -> list[tuple[int, int]]:
    """All (id_a, id_b) pairs that are (p1, p2, q)-paired.

    Two stickers are paired when they sit on the same face, in the same
    quadrant, on the same signed index-q slice, with in-face coordinate
    magnitudes {q, p1} and {q, p2}.
    """
    pairs = []
    for face in geom.faces:
        grid = geom.face_grid_ids(face)
        if grid.ndim != 2:
            continue
        for su in (1, -1):
            for sv in (1, -1):
                for qa, pa in ((0, 1), (1, 0)):
                    # coordinate with magnitude q on axis qa, p1/p2 on pa
                    uv1 = [0, 0]
                    uv2 = [0, 0]
                    uv1[qa] = uv2[qa] = q * (su if qa == 0 else sv)
                    uv1[pa] = p1 * (su if pa == 0 else sv)
                    uv2[pa] = p2 * (su if pa == 0 else sv)
                    ids = []
                    for u, v in (uv1, uv2):
                        from .puzzle import coord_index, is_valid_coord

                        if not (
                            is_valid_coord(geom.side, u)
                            and is_valid_coord(geom.side, v)
                        ):
                            ids = []
                            break
                        ids.append(
                            int(
                                grid[
                                    int(coord_index(geom.side, u)),
                                    int(coord_index(geom.side, v)),
                                ]
                            )
                        )
                    if len(ids) == 2:
                        pairs.append((ids[0], ids[1]))
    return pairs


def are_paired(
    geom: PuzzleGeometry, id_a: int, id_b: int, p1: int, p2: int, q: int
) -> bool:
    fa, ua, va = geom.sticker_uv(id_a)
    fb, ub, vb = geom.sticker_uv(id_b)
    if fa != fb or va is None or vb is None:
        return False
    if (np.sign(ua), np.sign(va)) != (np.sign(ub), np.sign(vb)):
        return False
    for qa in (0, 1):
        ca = (ua, va)
        cb = (ub, vb)
        if ca[qa] == cb[qa] and abs(ca[qa]) == q:
            mags = {abs(ca[1 - qa]), abs(cb[1 - qa])}
            if mags == {p1, p2}:
                return True
    return False


def track_paired(
    geom: PuzzleGeometry,
    id_a: int,
    id_b: int,
    p1: int,
    p2: int,
    q: int,
    moves: list[Move],
) -> list[int]:
    """Replay ``moves`` on a paired sticker pair.

    Returns the indices of moves after which the pair stopped being paired
    even though the move was exempt from breaking it (i.e. violations of
    pairing invariance; an empty list means conformance).  Moves
    of index p1 or p2 that touch one of the stickers may legitimately break
    or restore the pairing and are skipped.
    """
    violations = []
    cur_a, cur_b = id_a, id_b
    paired = are_paired(geom, cur_a, cur_b, p1, p2, q)
    for step, mv in enumerate(moves):
        src, dst = geom.move_pairs(mv)
        lookup = dict(zip(src.tolist(), dst.tolist()))
        touches = cur_a in lookup or cur_b in lookup
        exempt = abs(mv.index) in (p1, p2) and touches
        cur_a = lookup.get(cur_a, cur_a)
        cur_b = lookup.get(cur_b, cur_b)
        now = are_paired(geom, cur_a, cur_b, p1, p2, q)
        if paired and not exempt and not now:
            violations.append(step)
        paired = now
    return violations
