"""Sticker-level models of the n x n Rubik's Square and n x n x n Rubik's Cube.

Coordinate scheme
-----------------
The puzzle is axis-aligned and centered at the origin.  For odd side
``s = 2a + 1`` cubie coordinates range over ``{-a, ..., a}``; for even side
``s = 2a`` they range over ``{-a, ..., -1} u {1, ..., a}`` (zero is skipped).
Under this scheme a move preserves every sticker's multiset of absolute
coordinate values.

A sticker is addressed by its face and two in-face coordinates ``(u, v)``:

* ``+z`` / ``-z`` faces use ``(x, y)``,
* ``+x`` / ``-x`` faces use ``(y, z)``,
* ``+y`` / ``-y`` faces use ``(x, z)``.

The Square is the ``n x n x 1`` puzzle; its four side faces are ``s x 1``
strips carrying a single in-face coordinate (``y`` for the ``+-x`` faces,
``x`` for the ``+-y`` faces).

Canonical sticker numbering
---------------------------
Cube: faces in the order ``+x, -x, +y, -y, +z, -z``, each face an ``s * s``
block ordered by increasing ``u`` then increasing ``v`` (``id = face_offset +
u_index * s + v_index``).  Square: ``+z`` and ``-z`` blocks of ``s * s``
first, then the ``+x, -x, +y, -y`` strips of ``s`` stickers each, ordered by
increasing ``u``.  This numbering is stable and is the one used by the
permutation JSON format.

Move conventions
----------------
Square moves are row flips (``y`` moves) and column flips (``x`` moves); a
flip is a 180-degree rotation of the row/column about its long axis and is
its own inverse.  Cube moves rotate one slice; ``cw`` / ``ccw`` are defined
looking from the positive end of the rotation axis.  Move tokens:
``<axis>:<index>`` for the Square, ``<axis>:<index>:<rot>`` for the Cube.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import SchemaError

SQUARE = "square"
CUBE = "cube"

METRIC_FLIP = "flip"
METRIC_STM = "stm"
METRIC_SQTM = "sqtm"

COLORS = "RBGWYO"
COLOR_INDEX = {c: i for i, c in enumerate(COLORS)}

CUBE_FACES = ("+x", "-x", "+y", "-y", "+z", "-z")
SQUARE_FACES = ("+z", "-z", "+x", "-x", "+y", "-y")

# Canonical solved face colors.  The Square's side-face order is a fixed
# documented choice (only top red / bottom blue is externally constrained).
CUBE_SOLVED = {"+x": "O", "-x": "R", "+y": "G", "-y": "Y", "+z": "W", "-z": "B"}
SQUARE_SOLVED = {"+z": "R", "-z": "B", "+x": "G", "-x": "O", "+y": "Y", "-y": "W"}

_AXES = "xyz"

_TOKEN_RE = re.compile(r"^([xyz]):(-?(?:0|[1-9][0-9]*))(?::(cw|ccw|half))?$")


@dataclass(frozen=True, order=True)
class Move:
    """A single puzzle move.

    ``rot`` is None for Square flips and one of ``cw``/``ccw``/``half`` for
    Cube slice turns.
    """

    axis: str
    index: int
    rot: str | None = None

    @property
    def token(self) -> str:
        if self.rot is None:
            return f"{self.axis}:{self.index}"
        return f"{self.axis}:{self.index}:{self.rot}"

    def inverse(self) -> "Move":
        if self.rot == "cw":
            return Move(self.axis, self.index, "ccw")
        if self.rot == "ccw":
            return Move(self.axis, self.index, "cw")
        return self  # flips and half turns are involutions

    def __str__(self) -> str:
        return self.token


def coord_values(side: int) -> np.ndarray:
    """All cubie coordinate values for one axis, in increasing order."""
    a = side // 2
    if side % 2 == 1:
        return np.arange(-a, a + 1)
    return np.concatenate([np.arange(-a, 0), np.arange(1, a + 1)])


def coord_index(side: int, c: np.ndarray | int):
    """Dense 0-based index of coordinate value ``c``."""
    a = side // 2
    if side % 2 == 1:
        return c + a
    return np.where(np.asarray(c) < 0, c + a, c + a - 1)


def is_valid_coord(side: int, c: int) -> bool:
    a = side // 2
    if side % 2 == 1:
        return -a <= c <= a
    return c != 0 and -a <= c <= a


class PuzzleGeometry:
    """Sticker tables and move mechanics for a fixed (kind, side).

    Instances are cached; obtain them through :func:`geometry`.
    """

    def __init__(self, kind: str, side: int):
        if kind not in (SQUARE, CUBE):
            raise ValueError(f"unknown puzzle kind {kind!r}")
        if side < 2:
            raise ValueError("side must be at least 2")
        self.kind = kind
        self.side = side
        self.amax = side // 2 if side % 2 == 0 else (side - 1) // 2
        self.coords = coord_values(side)
        self.faces = CUBE_FACES if kind == CUBE else SQUARE_FACES
        self._build_tables()
        self._slice_cache: dict[tuple[int, int], np.ndarray] = {}
        self._pair_cache: dict[Move, tuple[np.ndarray, np.ndarray]] = {}

    # -- construction ---------------------------------------------------

    def _build_tables(self):
        s = self.side
        a = self.amax
        cs = self.coords
        chunks_pos = []
        chunks_nrm = []
        self.face_offset = {}
        self.face_size = {}
        offset = 0
        for face in self.faces:
            sign = 1 if face[0] == "+" else -1
            axis = _AXES.index(face[1])
            if self.kind == CUBE or face[1] == "z":
                uaxis, vaxis = _face_axes(face)
                uu, vv = np.meshgrid(cs, cs, indexing="ij")
                count = s * s
                pos = np.zeros((count, 3), dtype=np.int32)
                pos[:, uaxis] = uu.ravel()
                pos[:, vaxis] = vv.ravel()
                if self.kind == CUBE:
                    pos[:, axis] = sign * a
            else:
                # Square side strip: one in-face coordinate.
                uaxis = 1 if face[1] == "x" else 0
                count = s
                pos = np.zeros((count, 3), dtype=np.int32)
                pos[:, uaxis] = cs
                pos[:, axis] = sign * a
            nrm = np.zeros((count, 3), dtype=np.int32)
            nrm[:, axis] = sign
            chunks_pos.append(pos)
            chunks_nrm.append(nrm)
            self.face_offset[face] = offset
            self.face_size[face] = count
            offset += count
        self.size = offset
        self.pos = np.concatenate(chunks_pos)
        self.nrm = np.concatenate(chunks_nrm)

    # -- lookups --------------------------------------------------------

    def ids_of(self, pos: np.ndarray, nrm: np.ndarray) -> np.ndarray:
        """Vectorized (position, normal) -> sticker id."""
        s = self.side
        out = np.empty(len(pos), dtype=np.int64)
        for face in self.faces:
            sign = 1 if face[0] == "+" else -1
            axis = _AXES.index(face[1])
            mask = nrm[:, axis] == sign
            if not mask.any():
                continue
            p = pos[mask]
            if self.kind == CUBE or face[1] == "z":
                uaxis, vaxis = _face_axes(face)
                uidx = coord_index(s, p[:, uaxis])
                vidx = coord_index(s, p[:, vaxis])
                out[mask] = self.face_offset[face] + uidx * s + vidx
            else:
                uaxis = 1 if face[1] == "x" else 0
                out[mask] = self.face_offset[face] + coord_index(s, p[:, uaxis])
        return out

    def sticker_face(self, sid: int) -> str:
        for face in self.faces:
            off = self.face_offset[face]
            if off <= sid < off + self.face_size[face]:
                return face
        raise ValueError(f"sticker id {sid} out of range")

    def sticker_uv(self, sid: int) -> tuple[str, int, int | None]:
        """Return (face, u, v); v is None on Square side strips."""
        face = self.sticker_face(sid)
        pos = self.pos[sid]
        if self.kind == CUBE or face[1] == "z":
            uaxis, vaxis = _face_axes(face)
            return face, int(pos[uaxis]), int(pos[vaxis])
        uaxis = 1 if face[1] == "x" else 0
        return face, int(pos[uaxis]), None

    def face_grid_ids(self, face: str) -> np.ndarray:
        """Sticker ids of a face as an (s, s) grid (or (s,) strip)."""
        off = self.face_offset[face]
        n = self.face_size[face]
        ids = np.arange(off, off + n)
        if n == self.side * self.side:
            return ids.reshape(self.side, self.side)
        return ids

    def slice_ids(self, axis: int, index: int) -> np.ndarray:
        key = (axis, index)
        got = self._slice_cache.get(key)
        if got is None:
            got = np.nonzero(self.pos[:, axis] == index)[0]
            self._slice_cache[key] = got
        return got

    # -- moves ----------------------------------------------------------

    def check_move(self, move: Move, metric: str | None = None):
        if self.kind == SQUARE:
            if move.axis not in "xy" or move.rot is not None:
                raise ValueError(f"move {move.token} is not a Square move")
        else:
            if move.rot not in ("cw", "ccw", "half"):
                raise ValueError(f"move {move.token} is not a Cube move")
        if not is_valid_coord(self.side, move.index):
            raise ValueError(
                f"move index {move.index} invalid for side {self.side}"
            )
        if metric is not None and move.rot == "half" and metric == METRIC_SQTM:
            raise ValueError(f"half turn {move.token} is not an SQTM move")

    def move_pairs(self, move: Move) -> tuple[np.ndarray, np.ndarray]:
        """Source and destination sticker ids of a move (identity elsewhere)."""
        got = self._pair_cache.get(move)
        if got is not None:
            return got
        self.check_move(move)
        axis = _AXES.index(move.axis)
        src = self.slice_ids(axis, move.index)
        pos = self.pos[src].copy()
        nrm = self.nrm[src].copy()
        if self.kind == SQUARE:
            # 180-degree flip about the row/column's long axis.
            for k in range(3):
                if k != axis:
                    pos[:, k] *= -1
                    nrm[:, k] *= -1
        else:
            _rotate(pos, axis, move.rot)
            _rotate(nrm, axis, move.rot)
        dst = self.ids_of(pos, nrm)
        self._pair_cache[move] = (src, dst)
        return src, dst


def _face_axes(face: str) -> tuple[int, int]:
    return {"x": (1, 2), "y": (0, 2), "z": (0, 1)}[face[1]]


def _rotate(vecs: np.ndarray, axis: int, rot: str):
    """In-place rotation of (x,y,z) integer vectors about ``axis``.

    ``cw``/``ccw`` are quarter turns as seen from the positive axis end.
    """
    p = (axis + 1) % 3
    q = (axis + 2) % 3
    vp = vecs[:, p].copy()
    vq = vecs[:, q].copy()
    if rot == "cw":
        vecs[:, p] = vq
        vecs[:, q] = -vp
    elif rot == "ccw":
        vecs[:, p] = -vq
        vecs[:, q] = vp
    elif rot == "half":
        vecs[:, p] = -vp
        vecs[:, q] = -vq
    else:
        raise ValueError(f"unknown rotation {rot!r}")


@lru_cache(maxsize=8)
def geometry(kind: str, side: int) -> PuzzleGeometry:
    return PuzzleGeometry(kind, side)


# ---------------------------------------------------------------------------
# Permutations and configurations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StickerPermutation:
    """Bijection on the sticker positions of a fixed (kind, side).

    ``mapping[i]`` is the position the sticker starting at position ``i``
    moves to.
    """

    kind: str
    side: int
    mapping: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.mapping)
        if m.shape != (geometry(self.kind, self.side).size,):
            raise ValueError("mapping length does not match puzzle size")

    def __eq__(self, other):
        return (
            isinstance(other, StickerPermutation)
            and self.kind == other.kind
            and self.side == other.side
            and np.array_equal(self.mapping, other.mapping)
        )

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.mapping, np.arange(len(self.mapping))))


@dataclass(frozen=True)
class PuzzleConfig:
    """Assignment of a color to every sticker position.

    ``colors[i]`` is the index into :data:`COLORS` of the color at sticker
    position ``i`` of the canonical numbering.
    """

    kind: str
    side: int
    colors: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.colors)
        if c.shape != (geometry(self.kind, self.side).size,):
            raise ValueError("color array length does not match puzzle size")

    def __eq__(self, other):
        return (
            isinstance(other, PuzzleConfig)
            and self.kind == other.kind
            and self.side == other.side
            and np.array_equal(self.colors, other.colors)
        )

    def face_colors(self, face: str) -> np.ndarray:
        """Color-letter array of one face, shaped like its id grid."""
        g = geometry(self.kind, self.side)
        ids = g.face_grid_ids(face)
        return np.array(list(COLORS))[self.colors[ids]]


def identity_permutation(kind: str, side: int) -> StickerPermutation:
    return StickerPermutation(kind, side, np.arange(geometry(kind, side).size))


def make_solved(kind: str, side: int) -> PuzzleConfig:
    """The canonical solved configuration C0."""
    if side < 2:
        raise ValueError("side must be at least 2")
    g = geometry(kind, side)
    solved = CUBE_SOLVED if kind == CUBE else SQUARE_SOLVED
    colors = np.empty(g.size, dtype=np.uint8)
    for face in g.faces:
        off = g.face_offset[face]
        colors[off:off + g.face_size[face]] = COLOR_INDEX[solved[face]]
    return PuzzleConfig(kind, side, colors)


def enumerate_moves(kind: str, side: int, metric: str) -> list[Move]:
    """All legal moves, sorted by token."""
    if metric == METRIC_FLIP:
        if kind != SQUARE:
            raise ValueError("flip metric applies to the Square only")
        moves = [Move(ax, int(i)) for ax in "xy" for i in coord_values(side)]
    elif metric in (METRIC_STM, METRIC_SQTM):
        if kind != CUBE:
            raise ValueError(f"{metric} metric applies to the Cube only")
        rots = ("cw", "ccw", "half") if metric == METRIC_STM else ("cw", "ccw")
        moves = [
            Move(ax, int(i), r)
            for ax in "xyz"
            for i in coord_values(side)
            for r in rots
        ]
    else:
        raise ValueError(f"unknown metric {metric!r}")
    return sorted(moves, key=lambda m: m.token)


def move_to_permutation(move: Move, kind: str, side: int) -> StickerPermutation:
    return word_to_permutation([move], kind, side)


def word_to_permutation(moves, kind: str, side: int) -> StickerPermutation:
    """Permutation enacted by applying ``moves`` in order (first one first)."""
    g = geometry(kind, side)
    cur = np.arange(g.size)
    inv = np.arange(g.size)
    for mv in moves:
        src, dst = g.move_pairs(mv)
        origs = inv[src]
        cur[origs] = dst
        inv[dst] = origs
    return StickerPermutation(kind, side, cur)


def compose(p: StickerPermutation, q: StickerPermutation) -> StickerPermutation:
    """p after q: ``(p o q)(pos) = p(q(pos))`` (right factor acts first)."""
    if (p.kind, p.side) != (q.kind, q.side):
        raise ValueError("cannot compose permutations of different puzzles")
    return StickerPermutation(p.kind, p.side, p.mapping[q.mapping])


def invert(p: StickerPermutation) -> StickerPermutation:
    inv = np.empty_like(p.mapping)
    inv[p.mapping] = np.arange(len(p.mapping))
    return StickerPermutation(p.kind, p.side, inv)


def apply_permutation(p: StickerPermutation, config: PuzzleConfig) -> PuzzleConfig:
    """Color at ``p(pos)`` of the result equals color at ``pos`` of the input."""
    if (p.kind, p.side) != (config.kind, config.side):
        raise ValueError("permutation and configuration dimensions differ")
    out = np.empty_like(config.colors)
    out[p.mapping] = config.colors
    return PuzzleConfig(config.kind, config.side, out)


def apply_moves(config: PuzzleConfig, moves) -> PuzzleConfig:
    """Apply a move sequence to a configuration, first move first."""
    g = geometry(config.kind, config.side)
    colors = config.colors.copy()
    for mv in moves:
        src, dst = g.move_pairs(mv)
        colors[dst] = colors[src]
    return PuzzleConfig(config.kind, config.side, colors)


def is_solved(config: PuzzleConfig) -> bool:
    """True iff every face is monochromatic and the six colors are distinct."""
    g = geometry(config.kind, config.side)
    seen = []
    for face in g.faces:
        off = g.face_offset[face]
        block = config.colors[off:off + g.face_size[face]]
        if not (block == block[0]).all():
            return False
        seen.append(int(block[0]))
    return len(set(seen)) == 6


# ---------------------------------------------------------------------------
# Move tokens
# ---------------------------------------------------------------------------

def parse_move(token: str, kind: str, side: int) -> Move:
    m = _TOKEN_RE.match(token)
    if not m:
        raise SchemaError(f"malformed move token {token!r}")
    axis, index, rot = m.group(1), int(m.group(2)), m.group(3)
    if kind == SQUARE:
        if rot is not None or axis == "z":
            raise SchemaError(f"{token!r} is not a Square move token")
        move = Move(axis, index)
    else:
        if rot is None:
            raise SchemaError(f"{token!r} is missing a Cube rotation amount")
        move = Move(axis, index, rot)
    if not is_valid_coord(side, index):
        raise SchemaError(f"move index {index} out of range for side {side}")
    return move


def format_move(move: Move) -> str:
    return move.token


def parse_sequence(text: str, kind: str, side: int) -> list[Move]:
    """Parse one line of space-separated move tokens."""
    text = text.strip()
    if not text:
        return []
    return [parse_move(tok, kind, side) for tok in text.split(" ")]


def format_sequence(moves) -> str:
    return " ".join(m.token for m in moves)


# ---------------------------------------------------------------------------
# JSON formats
# ---------------------------------------------------------------------------

def config_to_json(config: PuzzleConfig) -> dict:
    g = geometry(config.kind, config.side)
    faces = {}
    for face in g.faces:
        grid = config.face_colors(face)
        if grid.ndim == 2:
            faces[face] = [list(row) for row in grid]
        else:
            faces[face] = list(grid)
    return {"kind": config.kind, "side": config.side, "faces": faces}


def config_from_json(doc: dict) -> PuzzleConfig:
    try:
        kind = doc["kind"]
        side = int(doc["side"])
        faces = doc["faces"]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad configuration document: {exc}") from None
    if kind not in (SQUARE, CUBE):
        raise SchemaError(f"unknown puzzle kind {kind!r}")
    g = geometry(kind, side)
    colors = np.empty(g.size, dtype=np.uint8)
    for face in g.faces:
        if face not in faces:
            raise SchemaError(f"missing face {face!r}")
        flat = np.asarray(faces[face]).ravel()
        if len(flat) != g.face_size[face]:
            raise SchemaError(f"face {face!r} has wrong size")
        try:
            codes = [COLOR_INDEX[c] for c in flat]
        except KeyError as exc:
            raise SchemaError(f"unknown color code {exc}") from None
        off = g.face_offset[face]
        colors[off:off + g.face_size[face]] = codes
    return PuzzleConfig(kind, side, colors)


def permutation_to_json(p: StickerPermutation) -> dict:
    return {"kind": p.kind, "side": p.side, "map": [int(j) for j in p.mapping]}


def permutation_from_json(doc: dict) -> StickerPermutation:
    try:
        kind = doc["kind"]
        side = int(doc["side"])
        mapping = np.asarray(doc["map"], dtype=np.int64)
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad permutation document: {exc}") from None
    g = geometry(kind, side)
    if mapping.shape != (g.size,) or not np.array_equal(
        np.sort(mapping), np.arange(g.size)
    ):
        raise SchemaError("permutation map is not a bijection on sticker ids")
    return StickerPermutation(kind, side, mapping)
