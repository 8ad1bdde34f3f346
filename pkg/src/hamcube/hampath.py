"""Grid graphs, the cycle-to-path gadget, bitstring labelings and
exhaustive Hamiltonicity oracles.

A grid graph is a finite induced subgraph of the infinite square lattice:
its edge set is exactly the pairs of vertices at Euclidean distance one.
A cubical instance is an ordered list of distinct equal-length bitstrings
whose last entry is all zeros; two labels are adjacent iff their Hamming
distance is one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapacityError, SchemaError

DEFAULT_PATH_BOUND = 20
DEFAULT_CYCLE_BOUND = 30


@dataclass(frozen=True)
class GridGraph:
    vertices: frozenset

    def __len__(self):
        return len(self.vertices)

    def neighbors(self, v):
        x, y = v
        return [
            w
            for w in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1))
            if w in self.vertices
        ]

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def edges(self):
        out = []
        for v in self.vertices:
            for w in self.neighbors(v):
                if v < w:
                    out.append((v, w))
        return sorted(out)

    def min_degree(self) -> int:
        return min((self.degree(v) for v in self.vertices), default=0)


@dataclass(frozen=True)
class PromiseGridInstance:
    graph: GridGraph
    s_vertex: tuple
    t_vertex: tuple

    def __post_init__(self):
        if self.s_vertex == self.t_vertex:
            raise ValueError("s and t must be distinct")
        if (
            self.s_vertex not in self.graph.vertices
            or self.t_vertex not in self.graph.vertices
        ):
            raise ValueError("s and t must be vertices of the graph")


@dataclass(frozen=True)
class CubicalInstance:
    labels: tuple

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.labels[0])

    def bit(self, i: int, j: int) -> int:
        """Bit j (1-based) of label l_i (1-based)."""
        return int(self.labels[i - 1][j - 1])

    def validate(self):
        """Raise SchemaError on any structural violation."""
        for problem in structural_problems(self):
            raise SchemaError(problem)


def structural_problems(inst: CubicalInstance) -> list:
    problems = []
    labels = inst.labels
    if len(labels) < 2:
        problems.append("instance must contain at least two labels")
    if any(set(l) - {"0", "1"} for l in labels):
        problems.append("labels must consist of '0'/'1' characters only")
    if len({len(l) for l in labels}) > 1:
        problems.append("labels must all have the same length")
    elif labels and len(labels[0]) < 1:
        problems.append("labels must be nonempty")
    if len(set(labels)) != len(labels):
        problems.append("labels must be distinct")
    if labels and set(labels[-1]) != {"0"}:
        problems.append("the last label must be all zeros")
    return problems


@dataclass
class ValidationReport:
    problems: list = field(default_factory=list)
    endpoints_ok: bool | None = None

    @property
    def structurally_valid(self) -> bool:
        return not self.problems

    @property
    def ok(self) -> bool:
        return self.structurally_valid and self.endpoints_ok is not False


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def parse_grid_graph(doc: dict) -> GridGraph:
    try:
        raw = doc["vertices"]
    except (KeyError, TypeError):
        raise SchemaError("grid graph document needs a 'vertices' key") from None
    verts = []
    for entry in raw:
        if (
            not isinstance(entry, (list, tuple))
            or len(entry) != 2
            or not all(isinstance(c, int) for c in entry)
        ):
            raise SchemaError(f"bad vertex {entry!r}: expected [x, y] integers")
        verts.append((entry[0], entry[1]))
    if len(set(verts)) != len(verts):
        raise SchemaError("duplicate vertices in grid graph")
    return GridGraph(frozenset(verts))


def grid_graph_to_json(g: GridGraph) -> dict:
    return {"vertices": [list(v) for v in sorted(g.vertices)]}


def parse_promise_grid(doc: dict) -> PromiseGridInstance:
    g = parse_grid_graph(doc)
    try:
        s = tuple(doc["s"])
        t = tuple(doc["t"])
    except (KeyError, TypeError):
        raise SchemaError("promise instance needs 's' and 't' keys") from None
    try:
        return PromiseGridInstance(g, s, t)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def promise_grid_to_json(inst: PromiseGridInstance) -> dict:
    doc = grid_graph_to_json(inst.graph)
    doc["s"] = list(inst.s_vertex)
    doc["t"] = list(inst.t_vertex)
    return doc


def parse_cubical(doc: dict) -> CubicalInstance:
    try:
        labels = tuple(doc["labels"])
    except (KeyError, TypeError):
        raise SchemaError("cubical document needs a 'labels' key") from None
    inst = CubicalInstance(labels)
    inst.validate()
    return inst


def cubical_to_json(inst: CubicalInstance) -> dict:
    return {"labels": list(inst.labels)}


# ---------------------------------------------------------------------------
# Cycle -> promise path gadget
# ---------------------------------------------------------------------------

def cycle_to_path(g: GridGraph) -> PromiseGridInstance:
    """Attach a four-vertex gadget above the top-left edge of ``g``.

    With ``u`` the leftmost vertex of the top row and ``u'`` its right
    neighbor, the added vertices are ``a = u+(0,1)``, ``v = u+(0,2)``,
    ``b = u'+(0,1)`` and ``v' = u'+(0,2)``.  The result has a Hamiltonian
    path iff ``g`` has a Hamiltonian cycle, and any such path runs
    ``v - a - u ... u' - b - v'``.
    """
    if not g.vertices:
        raise ValueError("graph must be nonempty")
    if g.min_degree() < 2:
        raise ValueError("graph must have no vertices of degree 0 or 1")
    top_y = max(y for _, y in g.vertices)
    u = min(v for v in g.vertices if v[1] == top_y)
    u2 = (u[0] + 1, u[1])
    if u2 not in g.vertices:
        raise ValueError("top-left vertex has no right neighbor")
    added = {
        (u[0], u[1] + 1),
        (u[0], u[1] + 2),
        (u2[0], u2[1] + 1),
        (u2[0], u2[1] + 2),
    }
    graph = GridGraph(g.vertices | added)
    return PromiseGridInstance(graph, (u[0], u[1] + 2), (u2[0], u2[1] + 2))


# ---------------------------------------------------------------------------
# Grid -> cubical labeling
# ---------------------------------------------------------------------------

def _prefix_labels(count: int) -> list:
    """The monotone labels 00..0, 10..0, ..., 11..1 of length count-1."""
    width = count - 1
    return ["1" * i + "0" * (width - i) for i in range(count)]


def vertex_order(inst: PromiseGridInstance) -> list:
    """s first, t last, interior vertices row-major (y desc, then x asc)."""
    interior = sorted(
        (v for v in inst.graph.vertices if v not in (inst.s_vertex, inst.t_vertex)),
        key=lambda v: (-v[1], v[0]),
    )
    return [inst.s_vertex] + interior + [inst.t_vertex]


def grid_to_cubical(inst: PromiseGridInstance) -> CubicalInstance:
    """Label the vertices with bitstrings so Hamming-1 pairs are exactly
    the lattice edges, normalized so the last label is all zeros."""
    verts = inst.graph.vertices
    ys = sorted({y for _, y in verts}, reverse=True)   # top row first
    xs = sorted({x for x, _ in verts})                 # left column first
    y_min, y_max = min(ys), max(ys)
    x_min, x_max = min(xs), max(xs)
    m_r = y_max - y_min + 1
    m_c = x_max - x_min + 1
    row_label = _prefix_labels(m_r)    # indexed by y_max - y
    col_label = _prefix_labels(m_c)    # indexed by x - x_min
    order = vertex_order(inst)
    raw = [row_label[y_max - y] + col_label[x - x_min] for x, y in order]
    last = raw[-1]
    labels = tuple(
        "".join("1" if a != b else "0" for a, b in zip(lab, last)) for lab in raw
    )
    if len(labels[0]) < 1:
        raise ValueError("graph spans a single cell; labeling would be empty")
    return CubicalInstance(labels)


# ---------------------------------------------------------------------------
# Exhaustive oracles
# ---------------------------------------------------------------------------

def _adjacency(labels) -> list:
    ints = [int(l, 2) for l in labels]
    n = len(ints)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if (ints[i] ^ ints[j]).bit_count() == 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def find_ham_path(
    inst: CubicalInstance, bound: int = DEFAULT_PATH_BOUND, use_memo: bool = True
):
    """Lexicographically least ordering i_1..i_n (1-based) of the labels
    with i_1 = 1, i_n = n and consecutive Hamming distance one, or None.

    ``use_memo=False`` selects the plain backtracking fallback; both
    variants agree wherever both run.
    """
    n = inst.n
    if n > bound:
        raise CapacityError(f"instance size {n} exceeds exhaustive bound {bound}")
    adj = _adjacency(inst.labels)
    start, end = 0, n - 1
    full = (1 << n) - 1
    dead: set = set()

    def feasible(v: int, rem: int) -> bool:
        """Can a path from v cover exactly rem and end at ``end``?"""
        if rem == 0:
            return v == end
        if v == end:
            return False
        if use_memo and (v, rem) in dead:
            return False
        cand = adj[v] & rem
        while cand:
            w = (cand & -cand).bit_length() - 1
            if feasible(w, rem & ~(1 << w)):
                return True
            cand &= cand - 1
        if use_memo:
            dead.add((v, rem))
        return False

    if not feasible(start, full & ~1):
        return None
    ordering = [start]
    v, rem = start, full & ~1
    while rem:
        cand = adj[v] & rem
        while cand:
            w = (cand & -cand).bit_length() - 1
            if feasible(w, rem & ~(1 << w)):
                ordering.append(w)
                v, rem = w, rem & ~(1 << w)
                break
            cand &= cand - 1
    return tuple(i + 1 for i in ordering)


def _all_ham_path_endpoint_sets(labels) -> set:
    """Endpoint pairs {i, j} (0-based) over all Hamiltonian paths."""
    n = len(labels)
    adj = _adjacency(labels)
    full = (1 << n) - 1
    found = set()

    def extend(v: int, rem: int, start: int):
        if rem == 0:
            found.add(frozenset((start, v)))
            return
        cand = adj[v] & rem
        while cand:
            w = (cand & -cand).bit_length() - 1
            extend(w, rem & ~(1 << w), start)
            cand &= cand - 1

    for start in range(n):
        extend(start, full & ~(1 << start), start)
    return found


def validate_promise(
    inst: CubicalInstance, check_endpoints: bool = False, bound: int = 12
) -> ValidationReport:
    """Structural checks plus, optionally, the exhaustive endpoint promise:
    every Hamiltonian path must run between l_1 and l_n."""
    report = ValidationReport(problems=structural_problems(inst))
    if check_endpoints and report.structurally_valid:
        if inst.n > bound:
            raise CapacityError(
                f"endpoint check on {inst.n} labels exceeds bound {bound}"
            )
        pairs = _all_ham_path_endpoint_sets(inst.labels)
        want = frozenset((0, inst.n - 1))
        report.endpoints_ok = all(p == want for p in pairs)
    return report


def find_ham_cycle(g: GridGraph, bound: int = DEFAULT_CYCLE_BOUND):
    """A Hamiltonian cycle of the grid graph as a vertex list, or None."""
    n = len(g.vertices)
    if n > bound:
        raise CapacityError(f"graph size {n} exceeds exhaustive bound {bound}")
    if n < 3:
        return None
    verts = sorted(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    adj = [sorted(index[w] for w in g.neighbors(v)) for v in verts]
    full = (1 << n) - 1
    path = [0]

    def extend(v: int, rem: int):
        if rem == 0:
            return 0 in adj[v]
        for w in adj[v]:
            if rem & (1 << w):
                path.append(w)
                if extend(w, rem & ~(1 << w)):
                    return True
                path.pop()
        return False

    if extend(0, full & ~1):
        return [verts[i] for i in path]
    return None
