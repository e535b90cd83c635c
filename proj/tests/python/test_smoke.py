import json

import pytest

import ramseycat as rc


def test_chain_ramsey_instance():
    cat = rc.chains(6)
    holds = rc.check_arrow(cat, "embedding", "chain2", "chain3", "chain6", 2, 1)
    assert holds["holds"] is True
    fails = rc.check_arrow(cat, "embedding", "chain2", "chain3", "chain5", 2, 1)
    assert fails["holds"] is False
    assert fails["certificate"]["coloring"]
    oracle = rc.check_arrow_oracle(cat, "embedding", "chain2", "chain3", "chain5", 2, 1)
    assert oracle["holds"] is False


def test_hom_counts_and_rigidity():
    cat = rc.chains(4)
    assert cat.hom_size("chain2", "chain4") == 6
    assert cat.aut_size("chain3") == 1
    assert cat.all_mono()
    assert cat.is_directed() == "yes"


def test_degrees_and_aut_factor():
    pair = rc.example_two_object_pair()
    report = rc.degree_exact(pair, "A")
    assert report["value"] == "2"

    aut2 = rc.example_aut2()
    factored = rc.verify_aut_factor(aut2, "A")
    assert factored["ok"] is True
    assert factored["t"] == "2"
    assert factored["t_structural"] == "1"
    assert factored["aut"] == 2


def test_multiplicativity():
    pair = rc.example_two_object_pair()
    result = rc.verify_multiplicativity(pair, pair, "A", "A")
    assert result["ok"] is True
    assert result["t_product"] == "4"

    unit = rc.example_one_object()
    result = rc.verify_multiplicativity(pair, unit, "A", "A")
    assert result["ok"] is True
    assert result["t_product"] == result["t1"]


def test_constructions_round_trip():
    pair = rc.example_two_object_pair()
    op = rc.opposite(pair)
    assert op.hom_size("B", "A") == 2
    back = rc.opposite(op)
    assert json.loads(back.to_json()) == json.loads(pair.to_json())

    prod = rc.product(pair, pair)
    assert prod.object_count() == 4
    assert prod.hom_size("(A,A)", "(B,B)") == 4

    sl = rc.slice(rc.chains(3), "chain1")
    assert sl.object_count() == 1 + 2 + 3


def test_category_from_json_and_validation():
    data = {
        "objects": ["X"],
        "morphisms": [{"id": "id_X", "dom": "X", "cod": "X"}],
        "identities": {"X": "id_X"},
        "compose": [["id_X", "id_X", "id_X"]],
    }
    report = rc.validate_category(data)
    assert report["accepted"] is True
    cat = rc.category_from_json(data)
    assert cat.object_count() == 1

    broken = dict(data)
    broken["identities"] = {}
    report = rc.validate_category(broken)
    assert report["accepted"] is False


def test_structures_and_rigid_surjections():
    assert rc.count_embeddings(
        json.dumps(rc.chain_structure(2)), json.dumps(rc.chain_structure(4))
    ) == 6
    for n in range(2, 9):
        assert rc.rigid_surjections_count(n, 2) == 2 ** (n - 1) - 1
    rs = rc.rigid_surjection_chains(4)
    assert not rs.all_mono()
    assert rc.opposite(rs).all_mono()


def test_engine_rejects_non_mono_views():
    rs = rc.rigid_surjection_chains(3)
    with pytest.raises(Exception):
        rc.check_arrow(rs, "embedding", "chain1", "chain1", "chain2", 2, 1)
