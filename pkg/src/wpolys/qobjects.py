"""q-integers, Gaussian binomials, cyclotomic polynomials, and the classical
facts connecting them (the [n] factorization, q-Lucas reduction, and the
q -> q^2 behaviour of cyclotomics)."""

from __future__ import annotations

import math
from functools import cache

from .intcomb import divisors, mobius
from .polyring import DivisionWitness, QLaurent, QPoly


def q_integer(n):
    """[n] = (1 - q^n)/(1 - q) as a QLaurent; negative n gives -q^n*[-n]."""
    if n == 0:
        return QLaurent.zero()
    if n > 0:
        return QLaurent.from_qpoly(QPoly([1] * n))
    return QLaurent(((n, (-1,) * (-n)),))


@cache
def _qbinom_poly(n, k):
    if not 0 <= k <= n:
        raise ValueError(f"_qbinom_poly needs 0 <= k <= n, got ({n}, {k})")
    k = min(k, n - k)
    if k == 0:
        return QPoly([1])
    num = _qbinom_poly(n, k - 1) * QPoly([1] * (n - k + 1))
    quot = num.divexact(QPoly([1] * k))
    assert not isinstance(quot, DivisionWitness)
    return quot


def q_binomial_poly(n, k):
    """Gaussian binomial for 0 <= k <= n, as a plain QPoly."""
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial_poly needs 0 <= k <= n, got ({n}, {k})")
    return _qbinom_poly(n, k)


def q_binomial(n, k):
    """Gaussian binomial with any integer top.

    Zero for k < 0 or (n >= 0 and k > n).  Negative tops reflect:
    qbinom(-a, k) = (-1)^k q^(-ak - C(k,2)) qbinom(a+k-1, k), which brings in
    negative q exponents, hence the QLaurent return type.
    """
    if k < 0:
        return QLaurent.zero()
    if k == 0:
        return QLaurent.one()
    if n >= 0:
        if k > n:
            return QLaurent.zero()
        return QLaurent.from_qpoly(_qbinom_poly(n, k))
    base = _qbinom_poly(-n + k - 1, k)
    if k & 1:
        base = -base
    return QLaurent.from_qpoly(base, q_shift=n * k - math.comb(k, 2))


class CyclotomicCache:
    """Memo table d -> cyclotomic polynomial; entries immutable once stored.

    Safe for concurrent use: lookups never block, a racing recompute just
    produces the same value and setdefault keeps one copy.
    """

    def __init__(self):
        self._table: dict[int, QPoly] = {}

    def get(self, d):
        if d <= 0:
            raise ValueError("cyclotomic index must be positive")
        hit = self._table.get(d)
        if hit is not None:
            return hit
        num = QPoly([1])
        den = QPoly([1])
        for e in divisors(d):
            mu = mobius(d // e)
            if mu == 0:
                continue
            factor = QPoly([-1] + [0] * (e - 1) + [1])
            if mu == 1:
                num = num * factor
            else:
                den = den * factor
        phi = num.divexact(den)
        assert not isinstance(phi, DivisionWitness)
        assert phi.is_monic()
        assert d == 1 or phi.coeff(0) == 1
        return self._table.setdefault(d, phi)


_CYCLOTOMIC = CyclotomicCache()


def cyclotomic(d):
    return _CYCLOTOMIC.get(d)


def qint_factorization_check(n):
    """[n] = product of cyclotomic(d) over divisors d > 1 of n."""
    if n < 2:
        raise ValueError("factorization check needs n >= 2")
    prod = QPoly([1])
    for d in divisors(n):
        if d > 1:
            prod = prod * cyclotomic(d)
    return prod == QPoly([1] * n)


def q_lucas_check(d, a, b, s, t):
    """qbinom(ad+b, sd+t) = C(a,s) * qbinom(b, t) mod cyclotomic(d)."""
    if d <= 1:
        raise ValueError("q-Lucas reduction needs d > 1")
    if a < 0 or s < 0:
        raise ValueError("a and s must be nonnegative")
    if not (0 <= b < d and 0 <= t < d):
        raise ValueError("b and t must lie in [0, d-1]")
    diff = q_binomial(a * d + b, s * d + t) - math.comb(a, s) * q_binomial(b, t)
    return diff.rem_monic_cyclic(cyclotomic(d), d).is_zero()


def lemma31_check(d):
    """Behaviour of cyclotomic(d) under q -> q^2.

    Odd d > 1: cyclotomic(d) divides cyclotomic(d) at q^2.
    Even d: cyclotomic(d) at q^2 equals cyclotomic(2d) exactly.
    """
    if d <= 1:
        raise ValueError("needs d > 1")
    doubled = cyclotomic(d).subst_q_squared()
    if d % 2 == 0:
        return doubled == cyclotomic(2 * d)
    return not isinstance(doubled.divexact(cyclotomic(d)), DivisionWitness)
