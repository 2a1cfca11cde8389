import json

import pytest

import meshforge


def test_gen_ade_counts():
    q = meshforge.gen_ade_dict("A", 5, 2)
    assert len(q["vertices"]) == 5
    assert len(q["arrows"]) == 8
    odd = meshforge.gen_ade_dict("E", 8, 3)
    assert len(odd["vertices"]) == 16


def test_validate_and_canonical():
    text = meshforge.gen_ade("A", 3, 1)
    ok, violations = meshforge.validate(text)
    assert ok and violations == []
    assert meshforge.canonical(text) == meshforge.canonical(meshforge.gen_ade("A", 3, 3))
    assert meshforge.canonical(text) != meshforge.canonical(meshforge.gen_ade("A", 3, 2))


def test_h0_golden_values():
    for n, expected in [(2, 4), (3, 10), (4, 20)]:
        out = meshforge.h0_dims("A", n, 2)
        assert out["dim"] == expected
        assert out["stabilized"]


def test_ext_table_and_duality_on_fixture():
    conifold = meshforge.fixture("conifold")
    table = meshforge.ext_table(conifold)
    assert table["duality"]
    assert table["dims"][(2, "+", "-")] == 1
    assert (1, "+", "-") not in table["dims"]


def test_koszul_matches_dual_numbers():
    # k[x]/x^2 passed through the stable-algebra dump of the chain fixture
    alg = meshforge.stable_algebra_json(meshforge.fixture("a2_dim0"))
    out = meshforge.koszul_cohomology(alg, W=12, deg_hi=3)
    assert out["totals"][0] == 2
    assert out["totals"][1] == 2  # the two stable arrows


def test_bad_family_raises():
    with pytest.raises(meshforge.MeshforgeError):
        meshforge.gen_ade("Q", 1, 0)


def test_cli_in_process():
    code, out, err = meshforge.run_cli(["dg", "--family", "A", "--index", "2", "--dim", "2", "--h0"])
    assert code == 0
    assert json.loads(out)["h0"]["dim"] == 4
