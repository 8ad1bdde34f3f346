"""Exhaustive optimal solvers.

Breadth-first search over sticker states with an optional redundancy prune,
in a unidirectional flavor (lexicographically least optimal solution) and a
bidirectional flavor (optimal length, deterministic tie-break).  Both the
configuration problem (reach any configuration with six distinct
monochromatic faces) and the group problem (compose to the identity) run on
the same machinery: a group state is the inverse of the accumulated
permutation stored as an array, which updates under a move exactly like a
color array.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

import numpy as np

from .errors import CapacityError
from .puzzle import (
    METRIC_SQTM,
    Move,
    PuzzleConfig,
    StickerPermutation,
    enumerate_moves,
    geometry,
    invert,
)
from .reduction import ReducedInstance


@dataclass(frozen=True)
class SearchBudget:
    max_depth: int
    node_limit: int = 10**7
    strategy: str = "uni"          # uni | bi


def _pruned(prev: Move | None, nxt: Move, metric: str) -> bool:
    """True when ``prev`` immediately followed by ``nxt`` is redundant.

    Consecutive moves of the same slice merge into at most one move, except
    in SQTM where two equal quarter turns stand in for the banned half turn
    and must be kept.
    """
    if prev is None or prev.axis != nxt.axis or prev.index != nxt.index:
        return False
    if metric == METRIC_SQTM:
        return nxt.rot != prev.rot
    return True


def _perm_dtype(size: int):
    """Narrowest unsigned dtype able to index ``size`` sticker positions."""
    if size <= 2**8:
        return np.uint8
    if size <= 2**16:
        return np.uint16
    return np.uint32


def _solved_color_arrays(kind: str, side: int) -> list[np.ndarray]:
    """All 720 configurations with six distinct monochromatic faces."""
    g = geometry(kind, side)
    out = []
    for perm in itertools.permutations(range(6)):
        arr = np.empty(g.size, dtype=np.uint8)
        for ci, face in zip(perm, g.faces):
            off = g.face_offset[face]
            arr[off:off + g.face_size[face]] = ci
        out.append(arr)
    return out


def _path_forward(visited: dict, key: bytes) -> list[Move]:
    mvs = []
    while True:
        parent, mv, _ = visited[key]
        if mv is None:
            break
        mvs.append(mv)
        key = parent
    return mvs[::-1]


def _path_backward(visited: dict, key: bytes) -> list[Move]:
    mvs = []
    while True:
        parent, mv, _ = visited[key]
        if mv is None:
            break
        mvs.append(mv)
        key = parent
    return mvs


def _search_uni(state0, goal_keys, moves, pairs, budget, prune, metric):
    start_key = state0.tobytes()
    if start_key in goal_keys:
        return []
    visited = {start_key: (None, None, 0)}
    frontier = [(start_key, state0)]
    for depth in range(1, budget.max_depth + 1):
        new = []
        for key, arr in frontier:
            prev = visited[key][1]
            for mi, mv in enumerate(moves):
                if prune and _pruned(prev, mv, metric):
                    continue
                src, dst = pairs[mi]
                out = arr.copy()
                out[dst] = arr[src]
                k = out.tobytes()
                if k in visited:
                    continue
                visited[k] = (key, mv, depth)
                if k in goal_keys:
                    return _path_forward(visited, k)
                new.append((k, out))
                if len(visited) > budget.node_limit:
                    raise CapacityError(
                        f"search exceeded {budget.node_limit} states"
                    )
        if not new:
            return None
        frontier = new
    return None


def _search_bi(state0, goal_arrays, moves, pairs_f, pairs_b, budget, prune, metric):
    start_key = state0.tobytes()
    vf = {start_key: (None, None, 0)}
    ff = [(start_key, state0)]
    vb = {}
    fb = []
    for garr in goal_arrays:
        k = garr.tobytes()
        if k not in vb:
            vb[k] = (None, None, 0)
            fb.append((k, garr))
    if start_key in vb:
        return []
    df = db = 0
    best_len = None
    meets: list[bytes] = []

    def expand_forward():
        nonlocal ff, best_len, meets
        depth = df + 1
        new = []
        for key, arr in ff:
            prev = vf[key][1]
            for mi, mv in enumerate(moves):
                if prune and _pruned(prev, mv, metric):
                    continue
                src, dst = pairs_f[mi]
                out = arr.copy()
                out[dst] = arr[src]
                k = out.tobytes()
                if k in vf:
                    continue
                vf[k] = (key, mv, depth)
                new.append((k, out))
                hit = vb.get(k)
                if hit is not None:
                    total = depth + hit[2]
                    if best_len is None or total < best_len:
                        best_len, meets = total, [k]
                    elif total == best_len:
                        meets.append(k)
        ff = new

    def expand_backward():
        nonlocal fb, best_len, meets
        depth = db + 1
        new = []
        for key, arr in fb:
            nxt = vb[key][1]    # first move of the suffix hanging off key
            for mi, mv in enumerate(moves):
                if prune and nxt is not None and _pruned(mv, nxt, metric):
                    continue
                src, dst = pairs_b[mi]
                out = arr.copy()
                out[dst] = arr[src]
                k = out.tobytes()
                if k in vb:
                    continue
                vb[k] = (key, mv, depth)
                new.append((k, out))
                hit = vf.get(k)
                if hit is not None:
                    total = hit[2] + depth
                    if best_len is None or total < best_len:
                        best_len, meets = total, [k]
                    elif total == best_len:
                        meets.append(k)
        fb = new

    while True:
        bound = budget.max_depth if best_len is None else best_len
        if df + db >= bound:
            break
        if not ff or not fb:
            break
        if len(ff) <= len(fb):
            expand_forward()
            df += 1
        else:
            expand_backward()
            db += 1
        if len(vf) + len(vb) > budget.node_limit:
            raise CapacityError(f"search exceeded {budget.node_limit} states")

    if best_len is None or best_len > budget.max_depth:
        return None
    candidates = [
        _path_forward(vf, k) + _path_backward(vb, k) for k in set(meets)
    ]
    return min(candidates, key=lambda ms: tuple(m.token for m in ms))


def solve_optimal(
    start: PuzzleConfig | StickerPermutation,
    metric: str,
    budget: SearchBudget,
    prune: bool = True,
) -> list[Move] | None:
    """Shortest move sequence solving ``start``, or None beyond ``max_depth``.

    A :class:`PuzzleConfig` start poses the configuration problem; a
    :class:`StickerPermutation` start poses the group problem (find a word
    whose permutation composed after the start is the identity).
    """
    if isinstance(start, StickerPermutation):
        group = True
    elif isinstance(start, PuzzleConfig):
        group = False
    else:
        raise TypeError(f"cannot solve a {type(start).__name__}")
    kind, side = start.kind, start.side
    g = geometry(kind, side)
    moves = enumerate_moves(kind, side, metric)
    pairs = [g.move_pairs(m) for m in moves]
    if group:
        dt = _perm_dtype(g.size)
        state0 = invert(start).mapping.astype(dt)
        goal_arrays = [np.arange(g.size, dtype=dt)]
    else:
        state0 = start.colors.astype(np.uint8)
        goal_arrays = _solved_color_arrays(kind, side)
    if budget.strategy == "uni":
        goal_keys = {a.tobytes() for a in goal_arrays}
        return _search_uni(state0, goal_keys, moves, pairs, budget, prune, metric)
    if budget.strategy == "bi":
        pairs_b = [g.move_pairs(m.inverse()) for m in moves]
        return _search_bi(
            state0, goal_arrays, moves, pairs, pairs_b, budget, prune, metric
        )
    raise ValueError(f"unknown search strategy {budget.strategy!r}")


def decide(ri: ReducedInstance, budget: SearchBudget | None = None) -> bool:
    """Is the reduced instance solvable within its move budget k."""
    if budget is None:
        budget = SearchBudget(max_depth=ri.k, strategy="bi")
    else:
        budget = replace(budget, max_depth=min(budget.max_depth, ri.k))
    start = ri.transformation if ri.group else ri.configuration
    return solve_optimal(start, ri.metric, budget) is not None


# ---------------------------------------------------------------------------
# Distance tables (independent oracle for small group instances)
# ---------------------------------------------------------------------------

def distance_table(
    kind: str,
    side: int,
    metric: str,
    max_depth: int,
    node_limit: int = 10**7,
) -> dict:
    """Map every group state within ``max_depth`` of the identity to its
    exact distance.  Keys are produced by :func:`scramble_key`."""
    g = geometry(kind, side)
    moves = enumerate_moves(kind, side, metric)
    pairs = [g.move_pairs(m) for m in moves]
    state0 = np.arange(g.size, dtype=_perm_dtype(g.size))
    table = {state0.tobytes(): 0}
    frontier = [(state0, None)]
    for depth in range(1, max_depth + 1):
        new = []
        for arr, prev in frontier:
            for mi, mv in enumerate(moves):
                if _pruned(prev, mv, metric):
                    continue
                src, dst = pairs[mi]
                out = arr.copy()
                out[dst] = arr[src]
                k = out.tobytes()
                if k in table:
                    continue
                table[k] = depth
                new.append((out, mv))
                if len(table) > node_limit:
                    raise CapacityError(f"table exceeded {node_limit} states")
        if not new:
            break
        frontier = new
    return table


def scramble_key(perm: StickerPermutation) -> bytes:
    """Lookup key of a scramble permutation in a distance table."""
    size = len(perm.mapping)
    return invert(perm).mapping.astype(_perm_dtype(size)).tobytes()
