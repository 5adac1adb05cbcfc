import random
from fractions import Fraction as F

import pytest

from psbv.engine import (
    A_FORM,
    B_FORM,
    C_FORM,
    CONSTRAINTS,
    DEFAULT_TABLE,
    admissible_theta,
    chain_max_exponent,
    check_lemma5_admissibility,
    t_choice_exponent,
    theta_closed_form,
)
from psbv.errors import ValidationError

G0 = F(865, 886)


def grid_gammas(k=50):
    # exact rationals strictly inside (865/886, 1)
    return [G0 + (1 - G0) * F(i, k + 1) for i in range(1, k + 1)]


def random_admissible_points(rng, k):
    pts = []
    for _ in range(k):
        g = G0 + (1 - G0) * F(rng.randint(1, 999), 1000)
        th = theta_closed_form(g) * F(rng.randint(1, 999), 1000)
        pts.append((g, th))
    return pts


def test_theta_at_99_100():
    rep = admissible_theta(F(99, 100))
    assert rep.theta_max == F(607, 5500)
    assert rep.binding_constraint == "(37)"
    assert rep.theta_max == theta_closed_form(F(99, 100))


def test_theta_at_lower_endpoint_is_empty():
    assert admissible_theta(G0).theta_max is None
    assert theta_closed_form(G0) == 0


def test_theta_limit_at_one():
    rep = admissible_theta(1)
    assert rep.theta_max == F(21, 110)
    # (36) and (37) coincide at gamma = 1
    assert {rep.binding_constraint, *rep.co_binding} == {"(36)", "(37)"}


@pytest.mark.parametrize("g", grid_gammas())
def test_theta_equals_closed_form_on_grid(g):
    rep = admissible_theta(g)
    assert rep.theta_max == F(443, 55) * g - F(173, 22)
    assert rep.binding_constraint == "(37)"
    assert rep.co_binding == ()


def test_slacks_at_theta_max():
    rep = admissible_theta(F(49, 50))
    zero = [name for name, s in rep.slacks if s == 0]
    assert zero == ["(37) gamma > 865/886 + 55/443 theta"]
    assert all(s > 0 for _, s in rep.slacks if _ not in zero)


@pytest.mark.parametrize("g", [F(1, 2), F(9, 10), F(97, 100), F(865, 887), F(8651, 8860)])
def test_theta_positive_iff_above_threshold(g):
    assert (admissible_theta(g).theta_max is not None) == (g > G0)


def test_theta_positive_iff_random():
    rng = random.Random(3)
    for _ in range(200):
        g = F(rng.randint(1, 10**6), 10**6)
        assert (admissible_theta(g).theta_max is not None) == (g > G0)


def test_gamma_out_of_range_rejected():
    for g in (0, F(-1, 2), F(3, 2)):
        with pytest.raises(ValidationError):
            admissible_theta(g)


def test_report_deterministic():
    a, b = admissible_theta(F(123, 125)), admissible_theta(F(123, 125))
    assert repr(a.to_dict()) == repr(b.to_dict())


def test_lemma5_admissible_point():
    res = check_lemma5_admissibility(F(49, 50), F(41, 1375))
    assert all(ok for _, ok, _ in res)
    a = A_FORM(F(49, 50), F(41, 1375))
    assert a == F(31, 3) * F(49, 50) - F(19, 2) - F(41, 1375) > 0


def test_lemma5_corner_gamma_one():
    # a = 5/6 and b = 13/220 > 0 here; only the strict c < 1 fails
    a, b, c = A_FORM(1, 0), B_FORM(1, 0), C_FORM(1, 0)
    assert (a, b, c) == (F(5, 6), F(13, 220), 1)
    res = {name: (ok, s) for name, ok, s in check_lemma5_admissibility(1, 0)}
    assert res["(10) b > 0"] == (True, F(13, 220))
    assert res["(10) c < 1"] == (False, 0)
    assert [n for n, (ok, _) in res.items() if not ok] == ["(10) c < 1"]


def test_lemma5_half_fails_12():
    res = {name: ok for name, ok, _ in check_lemma5_admissibility(F(1, 2), 0)}
    assert res["(12) 1 - a < c/2"] is False


def test_constraint_list_names():
    groups = {c.group for c in CONSTRAINTS}
    assert groups == {"(9)", "(10)", "(11)", "(12)", "(26)", "(36)", "(37)", "(38-nonempty)", "(18)"}


def test_s1_binding_term_identity():
    rng = random.Random(11)
    for g, th in random_admissible_points(rng, 5):
        res = chain_max_exponent(DEFAULT_TABLE, "S1", g, th, A_FORM(g, th))
        assert res.max_exponent == 1
        assert res.argmax == 2
        assert all(e <= 1 for e in res.exponents)


def test_s1_binding_identity_holds_everywhere():
    # the identity is symbolic, so it holds off the admissible region too
    rng = random.Random(5)
    for _ in range(20):
        g, th = F(rng.randint(1, 99), 100), F(rng.randint(-50, 50), 100)
        form = DEFAULT_TABLE.s1_terms[2].form
        assert form(g, th, A_FORM(g, th)) == 1


def test_s2_single_term():
    term = DEFAULT_TABLE.s2_terms[5]
    assert term.label == "N^(3-2g)"
    for g in (F(1, 2), F(3, 4), F(49, 50), F(1)):
        assert term.form(g, 0, 0) == (3 - 2 * g) / 2 <= 1


def test_s2_interior_point():
    g = F(49, 50)
    th = theta_closed_form(g) * F(9, 10)
    mu = (B_FORM(g, th) + C_FORM(g, th)) / 2
    res = chain_max_exponent(DEFAULT_TABLE, "S2", g, th, mu)
    assert res.max_exponent < 1
    assert len(res.exponents) == 9


def test_s2_grid_bounded_by_one():
    for g in (F(9771, 10000), F(49, 50), F(99, 100), F(999, 1000)):
        tm = theta_closed_form(g)
        for i in range(1, 11):
            th = tm * F(i, 11)
            b, c = B_FORM(g, th), C_FORM(g, th)
            for j in range(10):
                mu = b + (c - b) * F(j, 9)
                assert chain_max_exponent(DEFAULT_TABLE, "S2", g, th, mu).max_exponent <= 1


def test_s2_edges_are_tight():
    g, th = F(49, 50), F(1, 100)
    at_b = chain_max_exponent(DEFAULT_TABLE, "S2", g, th, B_FORM(g, th))
    at_c = chain_max_exponent(DEFAULT_TABLE, "S2", g, th, C_FORM(g, th))
    assert at_b.max_exponent == 1 and at_b.argmax == 2
    assert at_c.max_exponent == 1 and at_c.argmax == 6


def test_chain_range_errors():
    g, th = F(49, 50), F(1, 100)
    with pytest.raises(ValidationError, match=r"\(34\)"):
        chain_max_exponent(DEFAULT_TABLE, "S1", g, th, A_FORM(g, th) + F(1, 10**6))
    with pytest.raises(ValidationError, match=r"\(38\) b"):
        chain_max_exponent(DEFAULT_TABLE, "S2", g, th, B_FORM(g, th) - F(1, 10**6))
    with pytest.raises(ValidationError, match=r"\(38\) c"):
        chain_max_exponent(DEFAULT_TABLE, "S2", g, th, g + F(1, 10**6))
    with pytest.raises(ValidationError):
        chain_max_exponent(DEFAULT_TABLE, "S3", g, th, 0)


def test_t_choice_examples():
    assert t_choice_exponent(1, 0, 0, 1) == F(-14, 69)
    g = F(47, 50)
    assert t_choice_exponent(g, 0, 0, 0) == (13 * g + 194) / 207


def test_t_choice_balances_terms():
    rng = random.Random(7)
    for _ in range(5):
        g, th = F(rng.randint(1, 999), 1000), F(rng.randint(0, 999), 5000)
        k, mu = F(rng.randint(0, 999), 1000), F(rng.randint(0, 999), 1000)
        T = t_choice_exponent(g, th, k, mu)
        tknm = T + k + 1 + mu
        other = -F(13, 194) * T + F(401, 194) * k + F(13, 194) * g + 2 - F(55, 194) * mu + F(55, 194) * th
        assert tknm == other


def test_t_form_matches_t_choice_at_k_max():
    g, th, mu = F(49, 50), F(1, 100), F(1, 3)
    assert DEFAULT_TABLE.t_form(g, th, mu) == t_choice_exponent(g, th, 1 - g, mu)
