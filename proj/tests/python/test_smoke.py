import pytest

import plateau


def test_gen_poly_c2_n6():
    assert plateau.gen_poly("C2", 2, 6) == [1, 0, 2, 0, 3, 0, 2]
    assert plateau.gen_poly_via_propositions("C2", 2, 6) == [1, 0, 2, 0, 3, 0, 2]


def test_appendix_big_integers():
    g = plateau.gen_poly("D", 3, 180)
    assert g[99] == 616946472137940526877139072
    assert g[180] == 6054249652811609019026768290053459869736960


def test_enumeration_matches_theorem():
    dist = plateau.enumerate_distribution("D", 3, 6, workers=2)
    g = plateau.gen_poly("D", 3, 6)
    assert dist == {6 - t: c for t, c in enumerate(g) if c}


def test_special_counts_and_annotation():
    c = plateau.special_counts("C2", 2, 6)
    assert c["bent"] == 2
    assert c["printed"][0]["label"] == "printed-corollary (inconsistent at v=1)"


def test_plateau_and_walsh():
    assert plateau.plateau_s("D", 3, 3, [1, 2]) == 2
    w = plateau.walsh_spectrum("C1", 2, 5, [1, 0])
    assert w == {"s": 1, "support_size": 16, "magnitudes_ok": True, "parseval_ok": True}


def test_factor_and_weights():
    f = plateau.factor(3, 180)
    assert f["v"] == 2 and f["sr_degrees"] == [2, 4, 4, 8]
    rows = dict(plateau.weight_enumerator("C2", 6))
    assert rows[32] == 654 and sum(rows.values()) == 1024


def test_errors():
    with pytest.raises(plateau.UsageError):
        plateau.gen_poly("C2", 2, 7)
    with pytest.raises(ValueError):
        plateau.gen_poly("D", 4, 3)
    with pytest.raises(plateau.BudgetExceeded):
        plateau.enumerate_distribution("D", 3, 12, budget=10)
