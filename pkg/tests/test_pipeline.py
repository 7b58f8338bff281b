"""Coloring -> counter machine -> permutation subset-sum pipeline tests.

Golden vectors were produced by running the transforms and cross-checking
verdicts with the brute-force solvers.
"""

import pytest

from redkit.errors import ValidationError
from redkit.families import graphs_upto, named_graph
from redkit.instances import (REQUIRED, ColoringInstance,
                              CounterMachineInstance)
from redkit.oracles import solve, solve_coloring, solve_counter_machine
from redkit.pipeline import (coloring_blocks, is_run, red_cm_to_perm_ss,
                             red_coloring_to_cm)
from redkit.witness import Witness, all_witnesses


def _to_cm(graph):
    return red_coloring_to_cm.apply(
        graph, Witness.zero(red_coloring_to_cm.witness_len(graph)))


def test_is_run_predicate():
    assert is_run(())
    assert is_run(((1,), (-1,)))
    assert is_run(((1, 0), (0, 1), (-1, 0), (0, -1)))
    assert not is_run(((1,), (1,)))          # counter leaves {0,1}
    assert not is_run(((-1,),))              # dips below zero
    assert not is_run(((1,),))               # does not return to zero


def test_single_vertex_machine_frozen():
    cm = _to_cm(ColoringInstance(1, (), ((0,),)))
    assert cm.dimension == 10                # 3*1 + 7 with one color slot set
    assert len(cm.vectors) == 8
    # introduce block: one optional vector per color, each bumping the
    # color cell and the shared step counter, then a required step-down
    assert cm.vectors[0] == (1, 0, 0, 1, 0, 0, 0, 0, 0, 0)
    assert cm.vectors[1] == (0, 1, 0, 1, 0, 0, 0, 0, 0, 0)
    assert cm.vectors[2] == (0, 0, 1, 1, 0, 0, 0, 0, 0, 0)
    assert cm.vectors[3] == (0, 0, 0, -1, 0, 0, 0, 0, 0, 0)
    assert cm.flags[:4] == ("O", "O", "O", "R")
    # forget block mirrors the introduce block with the color cell lowered
    assert cm.vectors[4:8] == tuple(
        tuple(-c if j < 3 else c for j, c in enumerate(v))
        for v in cm.vectors[0:4])
    assert solve(cm).answer


def test_single_edge_machine_structure():
    cm = _to_cm(ColoringInstance(2, ((0, 1),), ((0, 1),)))
    assert cm.dimension == 13                # 3*2 + 7
    assert len(cm.vectors) == 32
    required = tuple(i for i, f in enumerate(cm.flags) if f == REQUIRED)
    assert required == (3, 7, 14, 15, 22, 23, 27, 31)
    step = 6                                 # shared step-counter coordinate
    # edge block: six color-pair options each retiring both endpoint cells
    # and setting a distinct pair cell, followed by step bookkeeping, then
    # the six exact inverses so the machine can restore the colors
    for i in range(8, 14):
        v = cm.vectors[i]
        assert v[step] == 1
        assert sorted(v[:6]).count(-1) == 2
        assert v[7:].count(1) == 1
        assert cm.vectors[i + 8] == tuple(-c for c in v)
    assert [cm.vectors[i][step] for i in required] == [-1, -1, -1, 1, 1, -1, -1, -1]
    assert solve(cm).answer


@pytest.mark.parametrize("name,dim,count,answer", [
    ("k3", 16, 72, True),
    ("k4", 19, 128, False),
    ("c5", 16, 120, True),
    ("p4", 13, 80, True),
])
def test_named_graph_machines(name, dim, count, answer):
    graph = named_graph(name)
    cm = _to_cm(graph)
    assert cm.dimension == dim
    assert len(cm.vectors) == count
    assert solve_counter_machine(cm).answer is answer
    assert solve_coloring(graph).answer is answer


def test_all_small_graphs_agree():
    for graph in graphs_upto(4):
        assert solve(_to_cm(graph)).answer is solve(graph).answer, graph


def test_rejects_broken_decomposition():
    bad = ColoringInstance(2, ((0, 1),), ((0,), (1,)))
    with pytest.raises(ValidationError):
        coloring_blocks(bad)
    with pytest.raises(ValidationError):
        red_coloring_to_cm.apply(
            bad, Witness.zero(red_coloring_to_cm.witness_len(bad)))


def test_cm_to_perm_ss_round_trip():
    cm = CounterMachineInstance(1, ((1,), (-1,)), (REQUIRED, REQUIRED))
    assert red_cm_to_perm_ss.witness_len(cm) == 2
    sol = solve(cm)
    assert sol.answer
    wit = red_cm_to_perm_ss.synthesize(cm, sol.solution)
    assert wit.value == 2                    # counter trajectory 1, then 0
    target = red_cm_to_perm_ss.apply(cm, wit)
    assert len(target.elements) == 2
    assert solve(target).answer


def test_cm_to_perm_ss_no_instance_all_witnesses():
    cm = CounterMachineInstance(1, ((1,), (1,)), (REQUIRED, REQUIRED))
    assert not solve(cm).answer
    L = red_cm_to_perm_ss.witness_len(cm)
    for wit in all_witnesses(L):
        assert not solve(red_cm_to_perm_ss.apply(cm, wit)).answer


def test_cm_to_perm_ss_empty_machine():
    cm = CounterMachineInstance(1, (), ())
    out = red_cm_to_perm_ss.apply(
        cm, Witness.zero(red_cm_to_perm_ss.witness_len(cm)))
    assert out.elements == ()
    assert solve(out).answer


def test_full_pipeline_on_single_vertex():
    from redkit.reductions import chain
    pipe = chain(red_coloring_to_cm, red_cm_to_perm_ss)
    graph = ColoringInstance(1, (), ((0,),))
    wit = pipe.synthesize(graph, solve(graph).solution)
    assert solve(pipe.apply(graph, wit)).answer


def test_full_pipeline_target_is_well_formed():
    # larger graphs overflow the group oracle's element guard, so only
    # validate the chained image structurally
    from redkit.instances import validate
    from redkit.reductions import chain
    pipe = chain(red_coloring_to_cm, red_cm_to_perm_ss)
    graph = named_graph("k3")
    wit = pipe.synthesize(graph, solve(graph).solution)
    target = pipe.apply(graph, wit)
    assert validate(target) == []
    assert target.kind == "group_subset_sum"
