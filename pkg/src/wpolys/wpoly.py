"""The w polynomial family, its q-analogue in two equivalent forms, and the
block polynomials used by the congruence lemmas."""

from __future__ import annotations

import math
from functools import cache

from .intcomb import binomial_general, narayana_number, w_number
from .polyring import QLaurent, XPoly
from .qobjects import cyclotomic, q_binomial, q_binomial_poly
from .verdicts import Verdict


@cache
def w_alpha_poly(n, alpha):
    """Sum of w(n,j)^alpha * x^(j-1) over j = 1..n."""
    if n < 1 or alpha < 1:
        raise ValueError("w_alpha_poly needs n, alpha >= 1")
    return XPoly([w_number(n, j) ** alpha for j in range(1, n + 1)])


def schroder_poly(n):
    """Little Schroder polynomial, built from the Narayana row; equals
    w_alpha_poly(n, 1) after expansion."""
    if n < 1:
        raise ValueError("schroder_poly needs n >= 1")
    xp1 = XPoly((1, 1))
    acc = XPoly()
    for k in range(1, n + 1):
        term = XPoly([0] * (k - 1) + [narayana_number(n, k)])
        acc = acc + term * xp1 ** (n - k)
    return acc


def _defining_base(k, j):
    # The j-th coefficient base of the defining q-analogue form; built from
    # QLaurent binomials so out-of-range j vanishes instead of erroring.
    return (q_binomial(k - 1, j - 1) * q_binomial(k + j, j)
            - q_binomial(k, j) * q_binomial(k + j, j - 1))


@cache
def q_w_poly(k, alpha):
    """q-analogue of w_alpha_poly(k, alpha): for each j in 1..k the base
    qbinom(k-1,j-1)qbinom(k+j,j) - qbinom(k,j)qbinom(k+j,j-1), raised to
    alpha, shifted by q^(alpha*(C(j+1,2)-(k+1)(j-1))), attached to x^(j-1).
    """
    if k < 1 or alpha < 1:
        raise ValueError("q_w_poly needs k, alpha >= 1")
    # guard: the sum's support really is j in [1, k]
    assert _defining_base(k, 0).is_zero() and _defining_base(k, k + 1).is_zero()
    slices = []
    for j in range(1, k + 1):
        base = (q_binomial_poly(k - 1, j - 1) * q_binomial_poly(k + j, j)
                - q_binomial_poly(k, j) * q_binomial_poly(k + j, j - 1))
        shift = alpha * (math.comb(j + 1, 2) - (k + 1) * (j - 1))
        slices.append((shift, (base ** alpha).coeffs))
    return QLaurent(slices)


def _alt_base(k, j):
    first = (q_binomial(k - 1, j - 1) * q_binomial(-k - 1, j)).shift_q(k + 1)
    second = q_binomial(k, j) * q_binomial(-k - 2, j - 1)
    return first + second


def q_w_poly_alt(k, alpha):
    """The same q-analogue assembled from the reflected negative-top form:
    sum over j of (-1)^(alpha*j) q^(alpha*j^2) (q^(k+1)qbinom(k-1,j-1)
    qbinom(-k-1,j) + qbinom(k,j)qbinom(-k-2,j-1))^alpha x^(j-1)."""
    if k < 1 or alpha < 1:
        raise ValueError("q_w_poly_alt needs k, alpha >= 1")
    assert _alt_base(k, 0).is_zero() and _alt_base(k, k + 1).is_zero()
    acc = QLaurent.zero()
    for j in range(1, k + 1):
        term = _alt_base(k, j) ** alpha
        if (alpha * j) & 1:
            term = -term
        term = term.shift_q(alpha * j * j)
        acc = acc + term * QLaurent.monomial(1, x_degree=j - 1)
    return acc


def _block_base(b, d, t):
    first = (q_binomial(b - 1, t - 1) * q_binomial(d - b - 1, t)).shift_q(b + 1)
    second = q_binomial(b, t) * q_binomial(d - b - 2, t - 1)
    return first + second


@cache
def b_poly(a, b, d, alpha):
    """Block polynomial over s in [0,a], t in [1,d-1]: the t-base above to
    the alpha, signed by (-1)^(alpha(sd+t)), scaled by
    (C(a,s)C(-a-1,s))^alpha q^(alpha t^2), attached to x^(sd+t-1)."""
    if a < 0 or alpha < 1:
        raise ValueError("b_poly needs a >= 0 and alpha >= 1")
    if d <= 2 or not 1 <= b <= d - 2:
        raise ValueError(f"b_poly needs d > 2 and 1 <= b <= d-2, got b={b}, d={d}")
    # guards: support truncation is genuine vanishing, not convention
    assert binomial_general(a, -1) == 0 and binomial_general(a, a + 1) == 0
    assert _block_base(b, d, 0).is_zero() and _block_base(b, d, d).is_zero()
    acc = QLaurent.zero()
    for s in range(a + 1):
        cfac = (binomial_general(a, s) * binomial_general(-a - 1, s)) ** alpha
        for t in range(1, d):
            base = _block_base(b, d, t)
            if base.is_zero():
                continue
            term = (base ** alpha) * cfac
            if (alpha * (s * d + t)) & 1:
                term = -term
            term = term.shift_q(alpha * t * t)
            acc = acc + term * QLaurent.monomial(1, x_degree=s * d + t - 1)
    return acc


def lemma_congruence_check(a, b, d, alpha):
    """Check the block congruences for the q-analogues modulo cyclotomic(d).

    Two pairs apply depending on (b, d):
      eq 1/2 (d > 2, 1 <= b <= d-2):   w_{ad+b}     = B_{a,b,d}
                                       w_{ad+d-b-1} = q^(-alpha(2b+1)) B_{a,b,d}
      eq 3/4 (d > 3, 0 <= b <= d-3):   w_{ad+b+1}   = B_{a,b+1,d}
                                       w_{ad+d-b-2} = q^(-alpha(2b+3)) B_{a,b+1,d}

    Returns one Verdict per applicable congruence.
    """
    if a < 0 or alpha < 1 or d <= 2:
        raise ValueError("need a >= 0, alpha >= 1, d > 2")
    first_pair = 1 <= b <= d - 2
    second_pair = d > 3 and 0 <= b <= d - 3
    if not (first_pair or second_pair):
        raise ValueError(f"(b={b}, d={d}) fits neither congruence pair")
    checks = []
    if first_pair:
        checks.append((1, a * d + b, b, 0))
        checks.append((2, a * d + d - b - 1, b, -alpha * (2 * b + 1)))
    if second_pair:
        checks.append((3, a * d + b + 1, b + 1, 0))
        checks.append((4, a * d + d - b - 2, b + 1, -alpha * (2 * b + 3)))
    phi = cyclotomic(d)
    out = []
    for eq, widx, bidx, shift in checks:
        diff = q_w_poly(widx, alpha) - b_poly(a, bidx, d, alpha).shift_q(shift)
        rem = diff.rem_monic_cyclic(phi, d)
        ok = rem.is_zero()
        out.append(Verdict(
            "lemma-23",
            {"a": a, "b": b, "d": d, "alpha": alpha, "eq": eq},
            ok, None if ok else str(rem)))
    return out
