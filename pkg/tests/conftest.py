"""Shared generators for seeded-random property tests."""

import random


def random_cubical_labels(rng: random.Random, n: int, m: int) -> tuple:
    """n distinct length-m labels, the last all zeros."""
    assert n - 1 <= 2**m - 1
    pool = rng.sample(range(1, 2**m), n - 1)
    return tuple(format(v, f"0{m}b") for v in pool) + ("0" * m,)


def random_path_labels(rng: random.Random, n: int, m: int) -> tuple:
    """Labels whose identity ordering is a Hamiltonian path ending at zero."""
    assert 2**m >= n
    while True:
        labels = ["0" * m]
        used = {labels[0]}
        stuck = False
        while len(labels) < n:
            cur = labels[-1]
            for j in rng.sample(range(m), m):
                nxt = cur[:j] + ("1" if cur[j] == "0" else "0") + cur[j + 1:]
                if nxt not in used:
                    labels.append(nxt)
                    used.add(nxt)
                    break
            else:
                stuck = True
                break
        if not stuck:
            labels.reverse()
            return tuple(labels)


def random_grid_vertices(rng: random.Random, width: int, height: int, count: int):
    cells = [(x, y) for x in range(width) for y in range(height)]
    return frozenset(rng.sample(cells, count))
