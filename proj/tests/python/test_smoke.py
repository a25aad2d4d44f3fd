"""Smoke tests for the python module against frozen small cases."""

import pytest

import alignh

F1 = alignh.CnfFormula(3, [[1, 2, 3], [-1, -2, -3]])


def test_sat_reduction_and_solve():
    inst, smap = alignh.sat_to_wsa(F1)
    assert len(inst.e) == 6
    assert len(inst.f) == 5
    assert alignh.decide_weight_one(inst)

    res = alignh.solve_pwsa(inst)
    assert res.found
    assert res.weight == "1"
    assert res.partition_bits == "01111"

    asg = alignh.decode_assignment(res.partition_bits, smap, inst)
    assert asg is not None
    assert alignh.evaluate(F1, asg)
    # the canonical alignment of that assignment packs copies differently
    canonical = alignh.witness_from_assignment(smap, asg, inst)
    assert canonical == "11011"
    assert alignh.decode_assignment(canonical, smap, inst) == asg


def test_unsat_decides_false():
    f = alignh.CnfFormula(2, [[1, 2], [-1, 2], [1, -2], [-1, -2]])
    inst, _ = alignh.sat_to_wsa(f)
    assert not alignh.decide_weight_one(inst)
    assert not alignh.solve_pwsa(inst).found


def test_pwsa_unique_sizes():
    inst, _ = alignh.sat_to_pwsa_unique(F1)
    assert len(inst.e) == 12  # 6 occurrences + a dummy pair per variable
    assert len(inst.f) == 5


def test_vertex_cover_roundtrip():
    g = alignh.Graph(3, [(1, 2), (2, 3), (1, 3)])
    inst, vmap = alignh.vc_to_wsa(g, 2)
    assert len(inst.e) == 9
    assert len(inst.f) == 7

    res = alignh.solve_pwsa(inst)
    assert res.found
    cover = alignh.decode_cover(res.links, vmap)
    assert len(cover) <= 2
    assert alignh.is_vertex_cover(g, cover)

    assert alignh.brute_force_min_cover(g) is not None
    assert not alignh.decide_weight_one(alignh.vc_to_wsa(g, 1)[0])


def test_alignment_helpers():
    inst, _ = alignh.sat_to_wsa(F1)
    res = alignh.solve_pwsa(inst)
    valid, message = alignh.check_alignment(inst, res.links)
    assert valid and message == ""
    assert alignh.alignment_weight(inst, res.links) == "1"
    assert alignh.encode_partition(inst, res.links) == "01111"
    matrix = alignh.encode_matrix(inst, res.links)
    assert len(matrix) == 30
    assert matrix.count("1") == 6


def test_distances():
    assert alignh.hamming_distance("01010101", "10101010") == 8
    assert alignh.edit_distance("01010101", "10101010") == 2
    assert alignh.edit_distance("01010101", "10101010", transpositions=True) == 2
    with pytest.raises(ValueError):
        alignh.hamming_distance("01", "011")


def test_corruption():
    w = "1110011010"
    assert alignh.corrupt(w, 0) == w
    bent = alignh.corrupt(w, 3, strategy="random", seed=5)
    assert len(bent) == len(w)
    assert alignh.hamming_distance(w, bent) == 3
    block = alignh.corrupt("11100", 1, strategy="adversarial", target=(0, 5))
    assert block == "01100"


def test_experiment():
    report = alignh.run_experiment(F1, amplify_var=1, amplify_copies=4,
                                   budget=0, trials=5, seed=1)
    assert report["success_rate"] == 1.0
    assert report["witness_length"] == 13
    assert report["csv"].startswith("# formula:")
    assert len(report["rows"]) == 5
    assert all(row["success"] for row in report["rows"])


def test_block_pattern():
    f = alignh.amplify_sat_dummy_clauses(F1, 1, 2)
    inst, smap = alignh.sat_to_wsa(f)
    pattern = alignh.ideal_block_pattern(smap, 1)
    assert pattern.true_pattern == "11100"
    assert pattern.false_pattern == "00111"
    assert pattern.copy_positions() == [0, 1, 3, 4]
    assert alignh.majority_decode("10100", pattern)


def test_instance_serialization():
    inst, smap = alignh.sat_to_wsa(F1)
    text = alignh.serialize_instance(inst, sat_map=smap)
    back = alignh.parse_instance(text)
    assert back.sat_map is not None
    assert back.vc_map is None
    assert back.serialize() == text
    assert len(back.instance.e) == 6


def test_dimacs_roundtrip():
    f = alignh.parse_cnf("p cnf 2 2\n1 2 0\n-1 -2 0\n")
    assert f.num_vars == 2
    assert alignh.parse_cnf(alignh.to_cnf(f)).clauses == f.clauses
    g = alignh.parse_graph("p edge 3 2\ne 1 2\ne 2 3\n")
    assert g.num_edges() == 2
    assert alignh.parse_graph(alignh.to_graph(g)).edges == g.edges
