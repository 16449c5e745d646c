"""Smoke tests for the python bindings."""

from fractions import Fraction

import cosetwalk as cw


def F(s):
    return Fraction(s)


def test_permutations():
    # right action: 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2
    assert cw.compose_cycles("(1 2)", "(2 3)", 3) == "(1 3 2)"
    assert cw.inverse_cycles("(1 2 3)", 3) == "(1 3 2)"
    assert cw.type_of("()", 10, 4) == 4
    assert cw.type_of("(1 5)(2 6)(3 7)(4 8)", 10, 4) == 0


def test_groups_and_cosets():
    assert cw.group_order(5, ["(1 2)", "(1 2 3 4 5)"]) == 120
    dec = cw.double_cosets(4, ["(1 2)", "(1 2 3 4)"], ["(1 2)", "(3 4)"])
    assert dec["count"] == 3
    assert sorted(dec["sizes"]) == [4, 4, 16]


def test_skewed_matrix_example():
    m = cw.skewed_matrix(10, 4)
    assert m[4][0] == "1"
    assert m[0][4] == "1/15"
    assert m[0][3] == "8/15"
    assert m[2][1] == "8/15"
    for row in m:
        assert sum(F(x) for x in row) == 1


def test_spectrum_and_stationary():
    spec = cw.predicted_spectrum(10, 4)
    assert spec["eigenvalues"] == ["1", "-2/3", "2/5", "-1/5", "1/15"]
    assert spec["stationary"] == ["1/14", "8/21", "3/7", "4/35", "1/210"]
    assert cw.stationary(cw.skewed_matrix(10, 4)) == spec["stationary"]
    for lam in spec["eigenvalues"]:
        assert cw.verify_eigenvalue(cw.skewed_matrix(10, 4), lam)
    assert not cw.verify_eigenvalue(cw.skewed_matrix(10, 4), "1/2")


def test_lumping_verdicts():
    sym4 = ["(1 2)", "(1 2 3 4)"]
    h = ["(1 2)", "(3 4)"]
    # A class function lumps.
    transpositions = ["(1 2)", "(1 3)", "(1 4)", "(2 3)", "(2 4)", "(3 4)"]
    verdict = cw.check_lumping(4, sym4, h, [(t, "1") for t in transpositions])
    assert verdict["lumps"]
    # A single type-1 indicator does not.
    verdict = cw.check_lumping(4, sym4, h, [("(2 3)", "1")])
    assert not verdict["lumps"]
    assert "witness" in verdict


def test_convergence_report():
    theta = ["0", "4/7", "2/7", "4/35", "1/35"]
    report = cw.convergence_report(cw.skewed_matrix(10, 4), theta, t_max=3)
    nonzero = [(l, c) for l, c in report["coefficients"] if c != "0"]
    assert nonzero == [("-1/5", "1/3")]
    assert report["chi_square"][0] == "1/3"
    assert F(report["chi_square"][2]) == F("1/3") / 625


def test_simulation_determinism():
    a = cw.simulate(10, 4, steps=500, seed=7)
    b = cw.simulate(10, 4, steps=500, seed=7)
    assert a == b
    assert len(a) == 501
    assert a[0] == 4 and a[1] == 0  # identity start must drop to type 0
    assert all(z <= 4 - x for x, z in zip(a, a[1:]))


def test_verify_paper():
    assert all(check["pass"] for check in cw.verify_paper())
