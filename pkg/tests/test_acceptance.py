"""Acceptance suite: ten criteria, one printed pass/fail line each.

Expected values are either fixed known constants of the worked example,
direct structural assertions, or computed here by an independent oracle
(simulation, brute-force enumeration, or full breadth-first search).
"""

import itertools
import random
import time

from conftest import random_cubical_labels, random_grid_vertices, random_path_labels

from hamcube import certificates, coloring, hampath, reduction, solver
from hamcube.hampath import CubicalInstance, GridGraph
from hamcube.puzzle import apply_moves, make_solved
from hamcube.solver import SearchBudget


def report(num: int, desc: str, ok: bool):
    print(f"[criterion {num:02d}] {'PASS' if ok else 'FAIL'}: {desc}")
    assert ok, f"criterion {num} failed: {desc}"


EXAMPLE = ("011", "110", "111", "100", "000")


def test_criterion_01_worked_example():
    # known constants: Square side 30, Cube side 36, budget k = 9 for n=5, m=3
    t0 = time.perf_counter()
    inst = CubicalInstance(EXAMPLE)
    rs = reduction.reduce_instance(inst, "square", group_variant=False)
    rc = reduction.reduce_instance(inst, "cube_sqtm", group_variant=False)
    elapsed = time.perf_counter() - t0
    ok = (
        rs.side == 30
        and rc.side == 36
        and rs.k == 9
        and rc.k == 9
        and elapsed < 1.0
    )
    report(1, f"worked example sides 30/36, k=9, {elapsed:.3f}s < 1s", ok)


def test_criterion_02_coloring_prediction():
    # oracle: sticker simulator; closed-form C_b prediction, 100 instances
    rng = random.Random(2026)
    t0 = time.perf_counter()
    ok = True
    for _ in range(100):
        m = rng.randint(1, 8)
        n = rng.randint(2, min(8, 2**m))
        inst = CubicalInstance(random_cubical_labels(rng, n, m))
        word_sq = []
        word_cu = []
        for i in range(1, n + 1):
            word_sq.extend(reduction.b_word(inst, i, "square"))
            word_cu.extend(reduction.b_word(inst, i, "cube_sqtm"))
        cb_sq = apply_moves(
            make_solved("square", reduction.square_side(inst)), word_sq
        )
        cb_cu = apply_moves(make_solved("cube", reduction.cube_side(inst)), word_cu)
        pred_sq = coloring.predict_square_cb(inst)
        pred_cu = coloring.predict_cube_cb(inst)
        ok = (
            ok
            and pred_sq.matches(cb_sq)
            and pred_cu.coverage == 1.0
            and pred_cu.matches(cb_cu)
        )
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 30.0
    report(2, f"C_b coloring equality on 100 instances, {elapsed:.1f}s < 30s", ok)


def test_criterion_03_forward_direction_at_scale():
    # synthesized solutions have length 2n-1 and verify, 50 instances
    rng = random.Random(33)
    t0 = time.perf_counter()
    sizes = [(40, 40), (40, 40)]
    while len(sizes) < 50:
        n = rng.randint(2, 40)
        m_lo = max(1, (2 * n - 1).bit_length() - 1)
        sizes.append((n, rng.randint(max(1, m_lo), 40)))
    ok = True
    for n, m in sizes:
        inst = CubicalInstance(random_path_labels(rng, n, m))
        cert = certificates.PathCertificate(tuple(range(1, n + 1)))
        sq = certificates.synthesize_square_solution(inst, cert)
        cu = certificates.synthesize_cube_solution(inst, cert)
        ok = ok and len(sq) == 2 * n - 1 and len(cu) == 2 * n - 1
        for kind, moves in (
            ("square", sq),
            ("cube_sqtm", cu),
            ("cube_stm", cu),
        ):
            for group in (False, True):
                ri = reduction.reduce_instance(inst, kind, group_variant=group)
                ok = ok and certificates.verify_solution(ri, moves).accepted
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 60.0
    report(
        3,
        f"50 yes-instances up to n=40, m=40 verified, {elapsed:.1f}s < 60s",
        ok,
    )


def test_criterion_04_answer_preservation_yes():
    # oracle: exhaustive search says YES within k on reduced yes-instances
    t0 = time.perf_counter()
    sq = reduction.reduce_instance(
        CubicalInstance(("1", "0")), "square", group_variant=False
    )
    ok = sq.side == 12 and sq.k == 3
    ok = ok and solver.decide(sq, SearchBudget(sq.k, strategy="bi"))
    t_sq = time.perf_counter() - t0
    ok = ok and t_sq < 10.0

    t0 = time.perf_counter()
    cu = reduction.reduce_instance(
        CubicalInstance(("10", "00")), "cube_sqtm", group_variant=False
    )
    ok = ok and cu.side == 16 and cu.k == 3
    ok = ok and solver.decide(cu, SearchBudget(cu.k, strategy="bi"))
    t_cu = time.perf_counter() - t0
    ok = ok and t_cu < 600.0
    report(
        4,
        f"yes side: Square 12 in {t_sq:.1f}s < 10s, Cube 16 in {t_cu:.1f}s < 10min",
        ok,
    )


def test_criterion_05_answer_preservation_no():
    # oracle: exhaustive search says NO within k on reduced no-instances
    inst = CubicalInstance(("11", "00"))
    t0 = time.perf_counter()
    sq = reduction.reduce_instance(inst, "square", group_variant=False)
    ok = sq.side == 12 and sq.k == 3
    ok = ok and not solver.decide(sq, SearchBudget(sq.k, strategy="uni"))
    t_sq = time.perf_counter() - t0
    ok = ok and t_sq < 60.0

    t0 = time.perf_counter()
    cu = reduction.reduce_instance(inst, "cube_stm", group_variant=False)
    ok = ok and cu.side == 16 and cu.k == 3
    ok = ok and not solver.decide(cu, SearchBudget(cu.k, strategy="bi"))
    t_cu = time.perf_counter() - t0
    ok = ok and t_cu < 900.0
    report(
        5,
        f"no side: Square 12 in {t_sq:.1f}s < 60s, Cube STM 16 in {t_cu:.1f}s < 15min",
        ok,
    )


def test_criterion_06_gadget_equivalence():
    # oracle: brute-force cycle existence == gadget path existence, 3x3 subgraphs
    t0 = time.perf_counter()
    cells = [(x, y) for x in range(3) for y in range(3)]
    checked = 0
    ok = True
    for bits in range(1 << 9):
        verts = frozenset(c for i, c in enumerate(cells) if bits >> i & 1)
        if len(verts) < 4:
            continue
        g = GridGraph(verts)
        if g.min_degree() < 2:
            continue
        has_cycle = hampath.find_ham_cycle(g) is not None
        inst = hampath.grid_to_cubical(hampath.cycle_to_path(g))
        has_path = hampath.find_ham_path(inst) is not None
        ok = ok and has_cycle == has_path
        checked += 1
    elapsed = time.perf_counter() - t0
    ok = ok and checked > 0 and elapsed < 60.0
    report(
        6,
        f"gadget equivalence on {checked} subgraphs, {elapsed:.1f}s < 60s",
        ok,
    )


def test_criterion_07_labeling_correctness():
    # Hamming-1 adjacency of labels == lattice adjacency, 200 graphs
    rng = random.Random(7)
    ok = True
    done = 0
    while done < 200:
        verts = random_grid_vertices(rng, 4, 4, rng.randint(2, 12))
        ordered = sorted(verts)
        inst = hampath.PromiseGridInstance(GridGraph(verts), ordered[0], ordered[1])
        cub = hampath.grid_to_cubical(inst)
        order = hampath.vertex_order(inst)
        for a in range(len(order)):
            for b in range(a + 1, len(order)):
                ham = sum(
                    x != y for x, y in zip(cub.labels[a], cub.labels[b])
                )
                (xa, ya), (xb, yb) = order[a], order[b]
                lattice = abs(xa - xb) + abs(ya - yb) == 1
                ok = ok and (ham == 1) == lattice
        done += 1
    report(7, "label adjacency == lattice adjacency on 200 graphs", ok)


def test_criterion_08_commutativity():
    # b_i o b_j == b_j o b_i as sticker permutations, 1000 triples
    from hamcube.puzzle import compose

    rng = random.Random(88)
    t0 = time.perf_counter()
    ok = True
    for trial in range(1000):
        kind = "square" if trial % 2 == 0 else "cube_stm"
        m = rng.randint(1, 6)
        n = rng.randint(2, min(6, 2**m))
        inst = CubicalInstance(random_cubical_labels(rng, n, m))
        i = rng.randint(1, n)
        j = rng.randint(1, n)
        bi = reduction.build_b(inst, i, kind)
        bj = reduction.build_b(inst, j, kind)
        ok = ok and compose(bi, bj) == compose(bj, bi)
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 30.0
    report(8, f"b_i/b_j commute on 1000 triples, {elapsed:.1f}s < 30s", ok)


def test_criterion_09_row_flip_parity():
    # optimal Square solutions flip row i an odd number of times iff 1 <= i <= n
    from hamcube.puzzle import coord_values

    inst = CubicalInstance(("1", "0"))
    ok = True
    solved_any = False
    for group in (False, True):
        ri = reduction.reduce_instance(inst, "square", group_variant=group)
        start = ri.transformation if group else ri.configuration
        for strategy in ("uni", "bi"):
            sol = solver.solve_optimal(
                start, ri.metric, SearchBudget(ri.k, strategy=strategy)
            )
            if sol is None:
                ok = False
                continue
            solved_any = True
            counts = {}
            for mv in sol:
                if mv.axis == "y":
                    counts[mv.index] = counts.get(mv.index, 0) + 1
            for i in coord_values(ri.side):
                want_odd = 1 <= i <= inst.n
                ok = ok and counts.get(int(i), 0) % 2 == want_odd
    report(9, "row-flip parity on all returned optimal solutions", ok and solved_any)


def test_criterion_10_oracle_optimality():
    # oracle: a full breadth-first distance table built independently of the solver
    from hamcube.puzzle import enumerate_moves, word_to_permutation

    rng = random.Random(1010)
    t0 = time.perf_counter()
    ok = True
    cases = (
        ("square", 6, "flip", 5),
        ("cube", 4, "stm", 4),
    )
    for kind, side, metric, depth in cases:
        table = solver.distance_table(kind, side, metric, depth)
        moves = enumerate_moves(kind, side, metric)
        for _ in range(100):
            word = [rng.choice(moves) for _ in range(rng.randint(1, depth))]
            t = word_to_permutation(word, kind, side)
            true_dist = table[solver.scramble_key(t)]
            sol = solver.solve_optimal(t, metric, SearchBudget(depth, strategy="bi"))
            ok = ok and sol is not None and len(sol) == true_dist
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 300.0
    report(
        10,
        f"200 scramble optima match BFS distance, {elapsed:.1f}s < 5min",
        ok,
    )
