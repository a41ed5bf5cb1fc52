import math

import pytest

import pentatile


def test_fangle_eval():
    # (5/6 - 2/f) at f = 24
    assert pentatile.fangle_eval(5, 6, -2, 1, 24) == (3, 4)


def test_angle_rows():
    iii2 = pentatile.angle_system("III2")
    assert iii2["alpha"] == "2/3"
    assert iii2["theta1"] == "5/6 - 2/f"
    ii = pentatile.angle_system("II")
    assert "theta1" not in ii
    assert ii["theta_sum"] == "2/3 + 8/f"


def test_avc_and_hypothesis():
    assert len(pentatile.compute_avc("III2", 24)) == 8
    assert len(pentatile.compute_avc("III2", 36)) == 6
    with pytest.raises(pentatile.HypothesisViolated):
        pentatile.compute_avc("III1", 18)


def test_family_tables():
    assert len(pentatile.vertex_family_table()) == 24
    assert len(pentatile.theta_alpha_family_table()) == 8
    assert pentatile.theta_alpha_admissible_f() == [24, 36, 60]


def test_quadratics():
    L, M, N = pentatile.lmn(3 * math.pi / 4, math.pi / 4, math.pi / 2, math.pi)
    assert abs(L - 2) < 1e-12 and abs(M) < 1e-12 and abs(N) < 1e-12
    P, Q, R = pentatile.pqr(3 * math.pi / 5, math.pi / 5, 2 * math.pi / 5, 6 * math.pi / 5)
    assert abs(P) < 1e-12
    assert abs(-R / Q - 1 / math.tan(3 * math.pi / 5)) < 1e-12


def test_propagation_and_minimal():
    table = pentatile.propagation_table()
    assert all(cell == [] for cell in table["II"])
    assert table["III2"][2] == ["III2"] and table["III2"][3] == ["III3"]
    assert pentatile.minimal_case_f("a2b2c") == (True, [12])
    assert pentatile.minimal_case_f("a3bc") == (True, [12])


def test_theorem_report():
    r = pentatile.theorem_report()
    assert r["schema"] == 1
    assert r["ok"] is True
    assert len(r["certificates"]) == 10
    bad = pentatile.theorem_report(1e-30)
    assert bad["ok"] is False


def test_render():
    md = pentatile.render_table("figure7")
    assert md.startswith("|")
    with pytest.raises(ValueError):
        pentatile.render_table("nope")
