from wpolys.intcomb import w_number
from wpolys.polyring import DivisionWitness, QLaurent, XPoly
from wpolys.wpoly import (
    b_poly,
    lemma_congruence_check,
    q_w_poly,
    q_w_poly_alt,
    schroder_poly,
    w_alpha_poly,
)


def test_w_alpha_poly_frozen():
    assert str(w_alpha_poly(3, 1)) == "1 + 5*x + 5*x^2"
    assert w_alpha_poly(3, 2) == XPoly((1, 25, 25))
    assert w_alpha_poly(4, 1) == XPoly((1, 9, 21, 14))
    for alpha in (1, 2, 5):
        assert w_alpha_poly(1, alpha) == XPoly((1,))
    for n in range(1, 15):
        for alpha in (1, 2, 3):
            p = w_alpha_poly(n, alpha)
            assert p.degree() == n - 1
            assert p.coeffs == tuple(w_number(n, k) ** alpha
                                     for k in range(1, n + 1))


def test_schroder_equality():
    assert schroder_poly(1) == XPoly((1,))
    assert schroder_poly(2) == XPoly((1, 2))
    assert schroder_poly(3) == XPoly((1, 5, 5))
    for n in range(1, 16):
        assert schroder_poly(n) == w_alpha_poly(n, 1)


def test_w_symmetry():
    # w_n(-1-x) = (-1)^(n-1) w_n(x)
    for n in range(1, 21):
        p = w_alpha_poly(n, 1)
        flipped = p.affine_subst(-1, -1)
        assert flipped == (p if (n - 1) % 2 == 0 else -p)


def test_w_squared_alternating_identity():
    # (2x+1) sum_{k=1}^n k(k+1)(2k+1)(-1)^(n-k) w_k(x)^2
    #   = n(n+1)(n+2) w_n(x) w_{n+1}(x)
    two_x_one = XPoly((1, 2))
    for n in range(1, 11):
        total = XPoly()
        for k in range(1, n + 1):
            term = w_alpha_poly(k, 1) ** 2 * (k * (k + 1) * (2 * k + 1))
            total = total + (term if (n - k) % 2 == 0 else -term)
        lhs = two_x_one * total
        rhs = w_alpha_poly(n, 1) * w_alpha_poly(n + 1, 1) * (n * (n + 1) * (n + 2))
        assert lhs == rhs


def test_w_even_index_divisible():
    two_x_one = XPoly((1, 2))
    for j in range(1, 9):
        quot = w_alpha_poly(2 * j, 1).divexact(two_x_one)
        assert isinstance(quot, XPoly)
        assert quot * two_x_one == w_alpha_poly(2 * j, 1)
    # odd indices evaluate to the odd Catalan-like value at -1/2, so they
    # are never divisible
    assert isinstance(w_alpha_poly(3, 1).divexact(two_x_one), DivisionWitness)


def test_q_w_poly_frozen():
    assert str(q_w_poly(1, 1)) == "q^2*(1)"
    assert str(q_w_poly(2, 1)) == "q^2*(x) + q^3*(1) + q^4*(x)"
    assert q_w_poly(1, 3) == QLaurent.monomial(1, 0, 6)
    for alpha in (1, 2, 4):
        assert q_w_poly(1, alpha) == QLaurent.monomial(1, 0, 2 * alpha)
    v = q_w_poly(3, 1)
    assert v.x_degree() == 2
    assert v.min_q_exp() >= 0


def test_q_w_poly_bridge_to_integers():
    for k in range(1, 13):
        for alpha in (1, 2, 3):
            assert q_w_poly(k, alpha).eval_q_one() == w_alpha_poly(k, alpha)


def test_q_w_poly_alt_form_agrees():
    for k in range(1, 9):
        for alpha in (1, 2):
            assert q_w_poly_alt(k, alpha) == q_w_poly(k, alpha)


def test_b_poly_frozen():
    assert b_poly(0, 1, 3, 1) == QLaurent.parse("q^1*(-1) + q^3*(-1)")
    v = b_poly(1, 1, 4, 2)
    assert not v.is_zero()
    assert v.x_degree() <= 1 * 4 + (4 - 1) - 1


def test_b_poly_rejects_bad_domain():
    for bad in ((0, 0, 3, 1), (0, 2, 3, 1), (0, 1, 2, 1), (-1, 1, 3, 1),
                (0, 1, 3, 0)):
        try:
            b_poly(*bad)
            assert False, f"b_poly{bad} should be rejected"
        except ValueError:
            pass


def test_lemma_congruence_first_pair_only():
    verdicts = lemma_congruence_check(0, 1, 3, 1)
    assert [v.params["eq"] for v in verdicts] == [1, 2]
    assert all(v.passed and v.witness is None for v in verdicts)
    assert all(v.statement == "lemma-23" for v in verdicts)


def test_lemma_congruence_both_pairs():
    verdicts = lemma_congruence_check(1, 1, 4, 1)
    assert [v.params["eq"] for v in verdicts] == [1, 2, 3, 4]
    assert all(v.passed for v in verdicts)


def test_lemma_congruence_second_pair_only():
    verdicts = lemma_congruence_check(0, 0, 4, 1)
    assert [v.params["eq"] for v in verdicts] == [3, 4]
    assert all(v.passed for v in verdicts)


def test_lemma_congruence_rejects():
    for bad in ((0, 0, 3, 1), (0, 2, 3, 1), (-1, 1, 4, 1), (0, 1, 2, 1)):
        try:
            lemma_congruence_check(*bad)
            assert False, f"lemma_congruence_check{bad} should be rejected"
        except ValueError:
            pass
