"""Closed-form color predictions for reduced configurations, plus renderers.

``predict_square_cb`` / ``predict_cube_cb`` give the coloring of the
intermediate configuration C_b = (b_1 o ... o b_n)(C_0) directly from the
input labels; ``predict_ct`` then carries it to the emitted configuration
C_t = a_1(C_b).  Square predictions cover the top and bottom faces (the
side strips are left unpredicted); Cube predictions cover all six faces.

Renderers accept anything exposing ``kind``, ``side`` and
``face_colors(face)``: both :class:`~hamcube.puzzle.PuzzleConfig` and
:class:`PredictedColoring`.  Unpredicted stickers render as ``.`` (ascii),
gray (svg, png).
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.etree import ElementTree as ET

import numpy as np

from .hampath import CubicalInstance
from .reduction import KIND_SQUARE, a_word, instance_side
from .puzzle import (
    COLOR_INDEX,
    COLORS,
    CUBE,
    SQUARE,
    PuzzleConfig,
    geometry,
)

UNKNOWN = 255


@dataclass(frozen=True)
class PredictedColoring:
    """A partial assignment of colors to sticker positions.

    ``colors[i]`` is a :data:`COLORS` index or :data:`UNKNOWN` at positions
    the prediction does not cover.
    """

    kind: str
    side: int
    colors: np.ndarray

    def face_colors(self, face: str) -> np.ndarray:
        """Color letters of one face, ``.`` where not predicted."""
        g = geometry(self.kind, self.side)
        ids = g.face_grid_ids(face)
        letters = np.array(list(COLORS) + ["."])
        vals = self.colors[ids]
        return letters[np.where(vals == UNKNOWN, len(COLORS), vals)]

    @property
    def coverage(self) -> float:
        return float(np.mean(self.colors != UNKNOWN))

    def matches(self, config: PuzzleConfig) -> bool:
        return not self.mismatches(config)

    def mismatches(self, config: PuzzleConfig) -> list[int]:
        """Sticker ids where a covered prediction disagrees with ``config``."""
        if (config.kind, config.side) != (self.kind, self.side):
            raise ValueError("configuration dimensions differ from prediction")
        covered = self.colors != UNKNOWN
        bad = covered & (self.colors != config.colors)
        return [int(i) for i in np.nonzero(bad)[0]]


def _bit(inst: CubicalInstance, i: int, j: int) -> int:
    """Bit j of label i, or -1 when the label has no bit j."""
    if 1 <= j <= inst.m:
        return inst.bit(i, j)
    return -1


def predict_square_cb(inst: CubicalInstance) -> PredictedColoring:
    """Top and bottom coloring of the Square's intermediate configuration.

    A cubie at (column c, row r) is top-blue (bottom-red) iff 1 <= r <= n
    and bit |c| of the row label is zero or absent; otherwise it keeps top
    red, bottom blue.
    """
    side = instance_side(inst, KIND_SQUARE)
    g = geometry(SQUARE, side)
    colors = np.full(g.size, UNKNOWN, dtype=np.uint8)
    R, B = COLOR_INDEX["R"], COLOR_INDEX["B"]
    for face, base, flipped in (("+z", R, B), ("-z", B, R)):
        ids = g.face_grid_ids(face)
        for ui, c in enumerate(g.coords):
            for vi, r in enumerate(g.coords):
                blue_up = 1 <= r <= inst.n and _bit(inst, r, abs(c)) != 1
                colors[ids[ui, vi]] = flipped if blue_up else base
    return PredictedColoring(SQUARE, side, colors)


def predict_cube_cb(inst: CubicalInstance) -> PredictedColoring:
    """Six-face coloring of the Cube's intermediate configuration.

    The one-bits of label i show up at row m+i: as red on white (+z face,
    mirrored to y = -(m+i)), orange on blue (-z), white gaps in the green
    band (+x) and blue gaps in the yellow band (-x); the zero/absent bits
    show up as red on green (+y) and orange on yellow (-y).  The green and
    yellow bands of the x faces sit at z between m+1 and m+n.
    """
    side = instance_side(inst, "cube_stm")
    g = geometry(CUBE, side)
    n, m = inst.n, inst.m
    colors = np.full(g.size, UNKNOWN, dtype=np.uint8)

    def band_row(z: int) -> int:
        """The i with z = m + i, or 0 when z is outside the band."""
        return z - m if m + 1 <= z <= m + n else 0

    for face in g.faces:
        ids = g.face_grid_ids(face)
        for ui, u in enumerate(g.coords):
            for vi, v in enumerate(g.coords):
                if face in ("+z", "-z"):
                    # (u, v) = (x, y); marks at y = -(m+i), x = one-bit j
                    i = band_row(-v)
                    mark = i != 0 and _bit(inst, i, u) == 1
                    if face == "+z":
                        c = "R" if mark else "W"
                    else:
                        c = "O" if mark else "B"
                elif face in ("+y", "-y"):
                    # (u, v) = (x, z); marks at z = m+i, x = zero/absent bit
                    i = band_row(v)
                    mark = i != 0 and _bit(inst, i, u) != 1
                    if face == "+y":
                        c = "R" if mark else "G"
                    else:
                        c = "O" if mark else "Y"
                else:
                    # (u, v) = (y, z); band rows at z = m+i, one-bits at y = -j
                    i = band_row(v)
                    if i == 0:
                        c = "O" if face == "+x" else "R"
                    elif _bit(inst, i, -u) == 1:
                        c = "W" if face == "+x" else "B"
                    else:
                        c = "G" if face == "+x" else "Y"
                colors[ids[ui, vi]] = COLOR_INDEX[c]
    return PredictedColoring(CUBE, side, colors)


def predict_ct(inst: CubicalInstance, kind: str) -> PredictedColoring:
    """Coloring of the emitted configuration C_t = a_1(C_b)."""
    if kind == KIND_SQUARE:
        pred = predict_square_cb(inst)
    else:
        pred = predict_cube_cb(inst)
    g = geometry(pred.kind, pred.side)
    colors = pred.colors.copy()
    for mv in a_word(inst, 1, kind):
        src, dst = g.move_pairs(mv)
        colors[dst] = colors[src]
    return PredictedColoring(pred.kind, pred.side, colors)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _face_rows(obj, face: str) -> list[list[str]]:
    """Display rows of one face: v descending, u ascending; strips one row."""
    grid = np.asarray(obj.face_colors(face))
    if grid.ndim == 1:
        return [list(grid)]
    return [list(grid[:, vi]) for vi in range(grid.shape[1] - 1, -1, -1)]


def render_ascii(obj) -> str:
    """One labeled block of rows per face."""
    g = geometry(obj.kind, obj.side)
    lines = []
    for face in g.faces:
        lines.append(f"{face}:")
        for row in _face_rows(obj, face):
            lines.append("".join(row))
    return "\n".join(lines) + "\n"


_RGB = {
    "R": (200, 30, 30),
    "B": (30, 60, 200),
    "G": (30, 160, 60),
    "W": (240, 240, 240),
    "Y": (235, 210, 40),
    "O": (240, 130, 30),
    ".": (150, 150, 150),
}


def _svg_color(letter: str) -> str:
    r, g, b = _RGB[letter]
    return f"#{r:02x}{g:02x}{b:02x}"


def render_svg(obj, cell: int = 12, gap: int = 1) -> str:
    """Deterministic SVG: face blocks left to right in canonical face order."""
    g = geometry(obj.kind, obj.side)
    blocks = [(face, _face_rows(obj, face)) for face in g.faces]
    x0 = 0
    height = max(len(rows) for _, rows in blocks) * cell
    root = ET.Element("svg", xmlns="http://www.w3.org/2000/svg")
    for face, rows in blocks:
        for ri, row in enumerate(rows):
            for ci, letter in enumerate(row):
                ET.SubElement(
                    root,
                    "rect",
                    x=str(x0 + ci * cell),
                    y=str(ri * cell),
                    width=str(cell),
                    height=str(cell),
                    fill=_svg_color(letter),
                    stroke="#000000",
                )
        x0 += len(rows[0]) * cell + gap * cell
    root.set("width", str(x0 - gap * cell))
    root.set("height", str(height))
    return ET.tostring(root, encoding="unicode")


def render_png(obj, path: str):
    """Render the face blocks to a PNG file with matplotlib."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    g = geometry(obj.kind, obj.side)
    fig, axes = plt.subplots(1, len(g.faces), figsize=(3 * len(g.faces), 3))
    for ax, face in zip(np.atleast_1d(axes), g.faces):
        rows = _face_rows(obj, face)
        img = np.array(
            [[_RGB[letter] for letter in row] for row in rows], dtype=np.uint8
        )
        ax.imshow(img, interpolation="nearest")
        ax.set_title(face)
        ax.set_xticks([])
        ax.set_yticks([])
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)
