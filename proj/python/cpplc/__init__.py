"""Python bindings for the CPP-LC solver core."""

from ._core import (
    Algorithm,
    Direction,
    Instance,
    ShortestPaths,
    SolveResult,
    all_pairs_shortest_paths,
    dp_cost,
    dp_directions,
    evaluate_directed,
    exact_optimum,
    expand_walk,
    format_instance,
    format_solution,
    generate,
    greedy_construct,
    parse_instance,
    parse_solution,
    read_instance,
    solve,
    validate,
    write_instance,
)

__all__ = [
    "Algorithm",
    "Direction",
    "Instance",
    "ShortestPaths",
    "SolveResult",
    "all_pairs_shortest_paths",
    "dp_cost",
    "dp_directions",
    "evaluate_directed",
    "exact_optimum",
    "expand_walk",
    "format_instance",
    "format_solution",
    "generate",
    "greedy_construct",
    "parse_instance",
    "parse_solution",
    "read_instance",
    "solve",
    "validate",
    "write_instance",
]
