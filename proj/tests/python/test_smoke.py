import pytest

import homlie


def test_builtins_and_qnumbers():
    assert set(homlie.builtin_names()) >= {"w22q", "wittq", "wittsuperq", "example49"}
    assert homlie.q_bracket(2) == "(q + q^-1)"
    assert homlie.q_brace(2) == "(q + 1)"
    assert "algebra wittq" in homlie.presentation("wittq")


def test_axioms():
    assert homlie.check_axioms("wittq", (-3, 3))["passed"]
    r = homlie.check_multiplicative("wittq", (-3, 3))
    assert not r["passed"] and r["witnesses"]


def test_stable_solve():
    r = homlie.stable_solve("wittq", "biderivation", s=0, window=(-4, 4))
    assert r["dim"] == 1
    assert homlie.stable_solve("wittq", "alpha-biderivation", s=0, window=(-4, 4))["dim"] == 0
    (basis,) = r["basis"]
    assert all(len(inputs) == 2 for inputs, _ in basis)


def test_classify_and_commuting():
    r = homlie.classify("w22q", "biderivation", 0, 0, ["phi_ad", "phi_0"], window=(-3, 3))
    assert r["dim"] == 2 and r["residual_dim"] == 0
    fam = homlie.commuting_maps("wittsuperq", parity=1, window=(-4, 4), degrees=(-2, 2))
    assert fam["rule"] == ["f(L_m) = lambda G_{m-1}", "f(G_m) = 0"]
    pts = homlie.corollaries("w22q", "automorphism", window=(-4, 4), degrees=(-1, 1))
    assert [p for p, ok in pts if ok] == ["lambda = 1, mu = 0"]


def test_errors():
    with pytest.raises(ValueError):
        homlie.check_axioms("nope")
    with pytest.raises(ValueError):
        homlie.stable_solve("wittq", "no-such-class")
