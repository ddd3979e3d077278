import os
from itertools import permutations
from pathlib import Path

import pytest

import cpplc

DATA = Path(os.environ.get("CPPLC_TEST_DATA_DIR", Path(__file__).resolve().parents[1] / "data"))

FOUR_NODE_EDGES = [(1, 2, 2, 100), (2, 3, 1, 20), (1, 4, 1, 10), (3, 4, 10, 5)]


@pytest.fixture
def four_node():
    inst = cpplc.Instance(4, FOUR_NODE_EDGES, 0.0)
    return inst, cpplc.all_pairs_shortest_paths(inst)


def test_golden_costs(four_node):
    inst, sp = four_node
    assert cpplc.dp_cost(inst, sp, [1, 2, 3, 4]) == pytest.approx(275, rel=1e-12)
    assert cpplc.dp_cost(inst, sp, [1, 2, 4, 3]) == pytest.approx(325, rel=1e-12)
    cost, steps = cpplc.dp_directions(inst, sp, [1, 2, 3, 4])
    assert cost == 275
    assert [d for _, d in steps] == [1, 1, 1, 2]
    assert cpplc.evaluate_directed(inst, sp, steps) == pytest.approx(275)
    assert cpplc.expand_walk(inst, sp, steps).startswith("(1,2),(2,3)")


def test_file_matches_inline_instance(four_node):
    inst, _ = four_node
    assert cpplc.read_instance(DATA / "four_node.cpplc") == inst
    assert cpplc.parse_instance(cpplc.format_instance(inst)) == inst


def test_solvers_reach_optimum(four_node):
    inst, sp = four_node
    best = min(cpplc.dp_cost(inst, sp, list(p)) for p in permutations([1, 2, 3, 4]))
    assert cpplc.exact_optimum(inst, sp).best_cost == best
    for alg in (cpplc.Algorithm.ILS, cpplc.Algorithm.VNS, cpplc.Algorithm.EA, cpplc.Algorithm.ACO):
        r = cpplc.solve(inst, sp, alg, seed=2, iters=20)
        assert r.best_cost == best
        assert sorted(r.order) == [1, 2, 3, 4]
        assert all(b <= a for a, b in zip(r.history, r.history[1:]))


def test_solution_text_round_trip(four_node):
    inst, sp = four_node
    cost, steps = cpplc.dp_directions(inst, sp, [1, 2, 3, 4])
    text = cpplc.format_solution(cost, steps)
    assert text.startswith("CPPLC-SOL 1\ncost 275.000000\n")
    assert cpplc.parse_solution(text) == (275.0, steps)


def test_generator_is_seeded():
    a = cpplc.generate(n=9, eulerian=True, seed=4)
    b = cpplc.generate(n=9, eulerian=True, seed=4)
    assert a == b
    assert cpplc.validate(a) == []
    degree = {}
    for u, v, _, _ in a.edges:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    assert all(d % 2 == 0 for d in degree.values())


def test_errors_surface_as_value_error(four_node):
    inst, sp = four_node
    with pytest.raises(ValueError):
        cpplc.dp_cost(inst, sp, [1, 1, 2, 3])
    with pytest.raises(ValueError, match="unsupported version"):
        cpplc.parse_instance("CPPLC 2\n2 1 0\n1 2 1 1\n")
