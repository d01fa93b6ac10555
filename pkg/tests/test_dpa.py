"""Tests for the bidirected (power assignment) approximation algorithm."""

import random

import pytest

from dualcut import (
    Cut,
    DPAInstance,
    LiveInstance,
    PowerSolution,
    SSCInstance,
    ScriptedAdvisor,
    Star,
    StarSolution,
    approx_dpa,
    are_star_disjoint,
    build_rotation_cycle,
    check_feasible,
    contract_perfect,
    dpa_to_ssc,
    exact_dpa,
    find_perfect_two_cuts,
    gen_random_bidirected,
    gen_random_dpa,
    is_internal_cut,
    is_perfect,
    mscs_to_ssc,
)
from dualcut.graphs import Digraph


def S(i, src, *sinks):
    return Star(i, src, frozenset(sinks))


def sides(report):
    return [
        tuple(sorted(sorted(c.side) for c in it.cuts)) for it in report.iterations
    ]


def test_rotation_cycle_requires_bidirected_and_three_vertices():
    li = LiveInstance.from_instance(mscs_to_ssc(Digraph(3, [(1, 2), (2, 3), (3, 1)])))
    with pytest.raises(ValueError):
        build_rotation_cycle(li)
    li2 = LiveInstance.from_instance(mscs_to_ssc(Digraph(2, [(1, 2), (2, 1)])))
    with pytest.raises(ValueError):
        build_rotation_cycle(li2)


def test_rotation_cycle_invariants_on_random_instances():
    rng = random.Random(11)
    for trial in range(120):
        inst = gen_random_bidirected(3 + trial % 5, 0.8, 1 + trial % 3, seed=trial).instance
        li = LiveInstance.from_instance(inst)
        advisor = ScriptedAdvisor([rng.randrange(0, 6) for _ in range(8)])
        rc = build_rotation_cycle(li, advisor)
        g = li.digraph()
        cyc = rc.cycle_vertices
        assert len(cyc) == len(set(cyc)) >= 2
        assert cyc[0] == rc.path_end
        assert (rc.path_end == rc.pivot_end) == (len(cyc) == 2)
        for a, b in zip(cyc, cyc[1:] + (cyc[0],)):
            assert g.has_arc(a, b) and g.has_arc(b, a)
        leaves = {v for v in g.vertices() if len(g.neighbors(v)) == 1}
        for end in (rc.path_end, rc.pivot_end):
            assert end not in leaves
            for w in g.neighbors(end):
                assert w in cyc or w in leaves


def test_two_vertex_degenerate_pair():
    inst = mscs_to_ssc(Digraph(2, [(1, 2), (2, 1)]))
    report = approx_dpa(inst)
    assert report.cost == 2
    assert sides(report) == [([1], [2])]


def test_hub_star_with_two_leaf_sinks():
    inst = SSCInstance(4, [S(0, 1, 2, 3, 4), S(1, 2, 1), S(2, 3, 1), S(3, 4, 1)])
    report = approx_dpa(inst)
    assert report.cost == 4
    # One round: the two smallest leaf sinks become singleton cuts.
    assert sides(report) == [([2], [3])]


def test_two_cycle_center_with_matching_star():
    inst = SSCInstance(3, [S(0, 1, 2), S(1, 1, 3), S(2, 2, 1), S(3, 3, 1)])
    report = approx_dpa(inst)
    assert report.cost == 4
    assert [sorted(it.selected) for it in report.iterations] == [[0, 2], [1, 3]]
    assert sides(report) == [([1, 3], [2]), ([1, 2], [3])]


def test_center_star_reaching_leaf_and_cycle():
    # Triangle 1-2-3 with pendant 4 at 3; the star at 3 spans both kinds of sink.
    inst = SSCInstance(4, [
        S(0, 3, 1, 4), S(1, 3, 2), S(2, 1, 2), S(3, 1, 3),
        S(4, 2, 1), S(5, 2, 3), S(6, 4, 3),
    ])
    report = approx_dpa(inst)
    assert report.cost == 4
    assert [sorted(it.selected) for it in report.iterations] == [[0, 2, 5, 6]]
    assert sides(report) == [([1, 2, 3], [4])]


def test_cycle_stars_fallback():
    # Pendant at 1 instead: no center star qualifies, so the round uses the
    # rotation cycle's own arcs.
    inst = SSCInstance(4, [
        S(0, 1, 2, 4), S(1, 1, 3), S(2, 2, 1), S(3, 2, 3),
        S(4, 3, 1), S(5, 3, 2), S(6, 4, 1),
    ])
    report = approx_dpa(inst)
    assert report.cost == 4
    assert [sorted(it.selected) for it in report.iterations] == [[0, 3, 4, 6]]
    assert sides(report) == [([2], [3])]


def test_power_instance_run_is_consistent():
    for seed in range(40):
        d = gen_random_dpa(2 + seed % 6, 0.4, seed=seed).instance
        report = approx_dpa(d)
        assert report.problem == "dpa" and report.selection_kind == "power"
        power = PowerSolution(report.selected)
        assert check_feasible(d, power)
        assert power.cost == report.cost
        derived, mapping = dpa_to_ssc(d)
        assert report.selected_stars is not None
        assert check_feasible(derived, StarSolution(report.selected_stars))
        assert {mapping[v] for v in report.selected} == set(report.selected_stars)
        assert report.cost <= 2 * exact_dpa(d).optimum  # sanity, not the bound


def test_rejects_unusable_inputs():
    with pytest.raises(ValueError):
        approx_dpa(mscs_to_ssc(Digraph(3, [(1, 2), (2, 3), (3, 1)])))
    with pytest.raises(TypeError):
        approx_dpa(42)


def test_round_outputs_satisfy_contracts():
    rng = random.Random(12)
    for trial in range(80):
        inst = gen_random_bidirected(2 + trial % 6, 0.8, 1 + trial % 3, seed=500 + trial).instance
        li = LiveInstance.from_instance(inst)
        advisor = ScriptedAdvisor([rng.randrange(0, 6) for _ in range(12)])
        while li.current_count > 1:
            q, (s1, s2) = find_perfect_two_cuts(li, advisor)
            assert is_perfect(li, q)
            assert is_internal_cut(li, q, s1) and is_internal_cut(li, q, s2)
            assert are_star_disjoint(li, s1, s2)
            li, _rec = contract_perfect(
                li, q, (Cut(li.lift(s1)), Cut(li.lift(s2)))
            )
