"""Toolkit for Rubik's Square / Rubik's Cube puzzles built from Hamiltonian
path instances: simulators, polynomial-time instance builders, certificate
synthesis, closed-form coloring predictors and exhaustive oracle solvers."""

from .errors import CapacityError, SchemaError
from .puzzle import (
    CUBE,
    SQUARE,
    METRIC_FLIP,
    METRIC_SQTM,
    METRIC_STM,
    Move,
    PuzzleConfig,
    StickerPermutation,
    apply_moves,
    apply_permutation,
    compose,
    enumerate_moves,
    format_sequence,
    geometry,
    invert,
    is_solved,
    make_solved,
    parse_move,
    parse_sequence,
    word_to_permutation,
)
from .hampath import (
    CubicalInstance,
    GridGraph,
    PromiseGridInstance,
    cycle_to_path,
    find_ham_cycle,
    find_ham_path,
    grid_to_cubical,
    validate_promise,
)
from .reduction import (
    KIND_CUBE_SQTM,
    KIND_CUBE_STM,
    KIND_SQUARE,
    ReducedInstance,
    reduce_instance,
    reduced_from_json,
    reduced_to_json,
)
from .certificates import (
    PathCertificate,
    analyze_solution,
    synthesize_cube_solution,
    synthesize_square_solution,
    verify_solution,
)
from .solver import SearchBudget, decide, distance_table, scramble_key, solve_optimal
from .coloring import (
    PredictedColoring,
    predict_cube_cb,
    predict_ct,
    predict_square_cb,
    render_ascii,
    render_png,
    render_svg,
)

__version__ = "0.1.0"
