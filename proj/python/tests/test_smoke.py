import json

import pytest

import gcface


def test_fvector_of_three_ones():
    assert gcface.f_vector([1, 1, 1]) == [7, 11, 6, 1]
    assert gcface.f_polynomial([1, 1, 1]) == "t^3 + 6t^2 + 11t + 7"
    assert gcface.f_vector([5]) == [1]


def test_big_coefficients_are_python_ints():
    f = gcface.f_vector([1] * 8)
    assert f[0] == 3000736
    assert sum((-1) ** i * c for i, c in enumerate(f)) == 1


def test_faces_match_brute_force():
    fast = gcface.faces([2, 1])
    slow = gcface.brute_force_faces([2, 1])
    assert fast == slow
    assert sorted(f["dim"] for f in fast) == [0, 0, 0, 1, 1, 1, 2]
    assert gcface.edge_count([2, 1]) == 10


def test_isomorphism_report():
    report = gcface.verify_isomorphism("2,1,0")
    assert report["format"] == "gcface.iso-report/1"
    assert report["passed"]
    assert report["diagram_faces"] == 25


def test_pde_reports():
    for s in (1, 2, 3):
        assert gcface.verify_main_pde(s, 6)["passed"]
        assert gcface.verify_gkt_pde(s, 6)["residual_terms"] == 0
    with pytest.raises(ValueError):
        gcface.verify_main_pde(0, 6)


def test_cli_in_process():
    code, out, _ = gcface.run_cli(["fvector", "--k", "2,1", "--format", "json"])
    assert code == 0
    assert json.loads(out)["f_vector"] == ["3", "3", "1"]
    code, _, err = gcface.run_cli(["faces", "--k", "1,1,1,1,1,1"])
    assert code == 2
    assert "fvector" in err
