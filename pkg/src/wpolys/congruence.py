"""Builds the theorem sums, decides the divisibility and integrality claims,
and sweeps statements over parameter grids with deterministic reporting."""

from __future__ import annotations

import math
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from functools import cache

from .intcomb import lcm_range, rising_factorial, w_identity_suite
from .polyring import DivisionWitness, QLaurent, QPoly, XPoly
from .qobjects import cyclotomic, lemma31_check, q_binomial, q_lucas_check
from .verdicts import Verdict
from .wpoly import lemma_congruence_check, q_w_poly, w_alpha_poly


class GridError(ValueError):
    """Malformed grid request: unknown statement, bad range, bad name."""


def _qint_qpoly(n):
    # [n] for n >= 0 as a QPoly; the modulus form of the q-integer.
    return QPoly([1] * n)


@cache
def _w_power(k, alpha, m):
    if m == 1:
        return q_w_poly(k, alpha)
    half = _w_power(k, alpha, m // 2)
    out = half * half
    if m & 1:
        out = out * q_w_poly(k, alpha)
    return out


@cache
def _w_power_q2(k, alpha, m):
    return _w_power(k, alpha, m).subst_q_squared()


@cache
def _w_run(k, alpha, m, count):
    # product of w_j^alpha to the m over j = k .. k+count-1
    if count == 1:
        return _w_power(k, alpha, m)
    return _w_run(k, alpha, m, count - 1) * _w_power(k + count - 1, alpha, m)


@cache
def _wx_power(k, alpha, m):
    return w_alpha_poly(k, alpha) ** m


@cache
def _wx_run(k, alpha, m, count):
    if count == 1:
        return _wx_power(k, alpha, m)
    return _wx_run(k, alpha, m, count - 1) * _wx_power(k + count - 1, alpha, m)


def _check_positive(**kwargs):
    for name, value in kwargs.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


class _Accumulator:
    """Mutable x-outer slice table for summing many QLaurent terms."""

    __slots__ = ("table",)

    def __init__(self):
        self.table: dict[int, list] = {}

    def add(self, value):
        for d, s in enumerate(value._slices):
            if s is None:
                continue
            qmin, cs = s
            cur = self.table.get(d)
            if cur is None:
                self.table[d] = [qmin, list(cs)]
                continue
            lo = min(cur[0], qmin)
            hi = max(cur[0] + len(cur[1]), qmin + len(cs))
            run = cur[1]
            if lo != cur[0] or hi != cur[0] + len(run):
                grown = [0] * (hi - lo)
                grown[cur[0] - lo:cur[0] - lo + len(run)] = run
                run = grown
                cur[0] = lo
                cur[1] = run
            off = qmin - lo
            seg = run[off:off + len(cs)]
            run[off:off + len(cs)] = [x + y for x, y in zip(seg, cs)]

    def value(self):
        if not self.table:
            return QLaurent.zero()
        nx = max(self.table) + 1
        return QLaurent(tuple(
            tuple(self.table[d]) if d in self.table else None
            for d in range(nx)))


def qsum_plain(n, alpha, m, r):
    """Sum over k = 0..n-1 of [k(k+1)]^r [2k+1] q^((n-1-k)(alpha*m+1))
    times the m-th power of the q-analogue w-polynomial."""
    _check_positive(n=n, alpha=alpha, m=m, r=r)
    acc = _Accumulator()
    for k in range(n):
        if k == 0:
            continue  # [0] = 0
        term = (_w_power(k, alpha, m)
                .mul_qint_power(k * (k + 1), r)
                .mul_qint_power(2 * k + 1))
        acc.add(term.shift_q((n - 1 - k) * (alpha * m + 1)))
    return acc.value()


def qsum_alternating(n, alpha, m, r):
    """Alternating variant: (-1)^k, the k(k+1) weight taken at q^2, the
    w-polynomial at q^2, and shift exponent (n-1-k)(2*alpha*m+1)."""
    _check_positive(n=n, alpha=alpha, m=m, r=r)
    acc = _Accumulator()
    for k in range(n):
        if k == 0:
            continue
        term = (_w_power_q2(k, alpha, m)
                .mul_qint_power(k * (k + 1), r, stride=2)
                .mul_qint_power(2 * k + 1))
        term = term.shift_q((n - 1 - k) * (2 * alpha * m + 1))
        acc.add(-term if k & 1 else term)
    return acc.value()


def qsum_product(n, alpha, m, r):
    """Neighbour-product variant: weights [k(k+2)]^r [2(k+1)], summand
    (w_k w_{k+1})^m, shift exponent (n-2-k)(2*alpha*m+1)."""
    _check_positive(n=n, alpha=alpha, m=m, r=r)
    acc = _Accumulator()
    for k in range(n):
        if k == 0:
            continue  # [k(k+2)] = 0
        term = (_w_run(k, alpha, m, 2)
                .mul_qint_power(k * (k + 2), r)
                .mul_qint_power(2 * (k + 1)))
        acc.add(term.shift_q((n - 2 - k) * (2 * alpha * m + 1)))
    return acc.value()


def qsum_general(n, alpha, beta, m, r):
    """Window variant: rising-factorial weights [(k)_b (k+b+1)_b]^r [2(k+b)],
    summand the product of 2*beta consecutive w powers, shift exponent
    (n-2*beta-k)(2*beta*alpha*m+1)."""
    _check_positive(n=n, alpha=alpha, beta=beta, m=m, r=r)
    acc = _Accumulator()
    for k in range(n):
        ww = rising_factorial(k, beta) * rising_factorial(k + beta + 1, beta)
        if ww == 0:
            continue  # only k = 0
        term = (_w_run(k, alpha, m, 2 * beta)
                .mul_qint_power(ww, r)
                .mul_qint_power(2 * (k + beta)))
        acc.add(term.shift_q((n - 2 * beta - k) * (2 * beta * alpha * m + 1)))
    return acc.value()


def verify_divisible_by_qn(value, n, statement="mod-qn", params=None):
    """Pass iff the remainder of value mod [n] is zero."""
    if n < 2:
        raise ValueError("modulus [n] needs n >= 2")
    rem = value.rem_monic_cyclic(_qint_qpoly(n), n)
    ok = rem.is_zero()
    return Verdict(statement, dict(params or {"n": n}), ok,
                   None if ok else str(rem))


def verify_cyclotomic_product(value, n, statement="cyclotomic-product",
                              params=None):
    """Factor-wise divisibility: cyclotomic(d) for odd divisors d > 1 of n,
    cyclotomic(2d) (the q^2 image of cyclotomic(d)) for even divisors."""
    if n < 2:
        raise ValueError("cyclotomic product needs n >= 2")
    witness = None
    for d in _cyclotomic_product_factors(n):
        rem = value.rem_monic_cyclic(cyclotomic(d), d)
        if not rem.is_zero():
            witness = f"d={d}: {rem}"
            break
    return Verdict(statement, dict(params or {"n": n}), witness is None,
                   witness)


def _cyclotomic_product_factors(n):
    # Divisor d of n contributes Phi_d(q) when odd, Phi_d(q^2) = Phi_2d(q)
    # when even.
    from .intcomb import divisors
    out = []
    for d in divisors(n):
        if d > 1:
            out.append(d if d % 2 else 2 * d)
    return out


def _int_plain_quotient(n, alpha, m, r, sign, fault=False):
    acc = XPoly()
    for k in range(1, n + 1):
        c = k ** r * (k + 1) ** r * (2 * k + 1)
        if sign == "alternating" and k & 1:
            c = -c
        acc = acc + _wx_power(k, alpha, m) * c
    if fault:
        acc = acc + 1
    return (acc * math.gcd(2, n)).divexact(n * (n + 1) * (n + 2))


def int_sum_plain_quotient(n, alpha, m, r, sign="plus"):
    """The integer-side quotient polynomial, or the obstruction witness.

    Builds gcd(2,n) times the weighted sum of w powers at q = 1 and divides
    by n(n+1)(n+2) exactly.
    """
    _check_positive(n=n, alpha=alpha, m=m, r=r)
    if sign not in ("plus", "alternating"):
        raise ValueError(f"sign must be plus or alternating, got {sign!r}")
    return _int_plain_quotient(n, alpha, m, r, sign)


def int_sum_plain(n, alpha, m, r, sign="plus"):
    quot = int_sum_plain_quotient(n, alpha, m, r, sign)
    statement = "thm-int-plain" if sign == "plus" else "thm-int-alternating"
    params = {"n": n, "alpha": alpha, "m": m, "r": r}
    if isinstance(quot, DivisionWitness):
        return Verdict(statement, params, False, str(quot))
    return Verdict(statement, params, True, None)


def _int_lcm_quotient(n, alpha, beta, m, r, fault=False):
    acc = XPoly()
    for k in range(1, n + 1):
        c = (rising_factorial(k, beta) ** r
             * rising_factorial(k + beta + 1, beta) ** r
             * (k + beta))
        acc = acc + _wx_run(k, alpha, m, 2 * beta) * c
    if fault:
        acc = acc + 1
    return (acc * 2).divexact(lcm_range(n, n + 2 * beta + 1))


def int_sum_lcm_quotient(n, alpha, beta, m, r):
    """Quotient of twice the windowed sum by lcm(n..n+2*beta+1), or the
    obstruction witness."""
    _check_positive(n=n, alpha=alpha, beta=beta, m=m, r=r)
    return _int_lcm_quotient(n, alpha, beta, m, r)


def int_sum_lcm(n, alpha, beta, m, r):
    quot = int_sum_lcm_quotient(n, alpha, beta, m, r)
    params = {"n": n, "alpha": alpha, "beta": beta, "m": m, "r": r}
    if isinstance(quot, DivisionWitness):
        return Verdict("thm-int-lcm", params, False, str(quot))
    return Verdict("thm-int-lcm", params, True, None)


_TWO_X_PLUS_ONE = XPoly((1, 2))


def _conjecture_quotient(variant, n, alpha, m, fault=False):
    if variant == "c52_eq14_even_n":
        if alpha <= 1:
            raise ValueError("this variant is stated for alpha > 1")
        if n % 2:
            raise ValueError("this variant is stated for even n")
        acc = XPoly()
        for k in range(1, n + 1):
            c = k * (k + 1) * (2 * k + 1)
            acc = acc + _wx_power(k, alpha, m) * (-c if k & 1 else c)
        if fault:
            acc = acc + 1
        return acc.divexact(n * (n + 1) * (n + 2))
    if variant == "c54_ii":
        if alpha != 1:
            raise ValueError("this variant is stated for alpha = 1")
        acc = XPoly()
        for k in range(1, n + 1):
            acc = acc + _wx_run(k, 1, m, 2) * (k * (k + 1) * (k + 2))
        if fault:
            acc = acc + 1
        quot = acc.divexact(_TWO_X_PLUS_ONE ** m)
        if isinstance(quot, DivisionWitness):
            return quot
        return (quot * (2 * math.gcd(2, n))).divexact(n * (n + 1) * (n + 2))
    if variant == "c54_iii":
        if alpha != 1 or m != 1:
            raise ValueError("this variant fixes alpha = m = 1")
        if n % 2:
            raise ValueError("this variant is stated for even n")
        acc = XPoly()
        for k in range(1, n + 1):
            acc = acc + _wx_run(k, 1, 1, 2) * (k * (k + 1) * (k + 2))
        if fault:
            acc = acc + 1
        quot = acc.divexact(_TWO_X_PLUS_ONE ** 3)
        if isinstance(quot, DivisionWitness):
            return quot
        return (quot * 4).divexact(n * (n + 1) * (n + 2))
    raise ValueError(f"unknown conjecture variant {variant!r}")


_CONJECTURE_IDS = {
    "c52_eq14_even_n": "conj-52-even",
    "c54_ii": "conj-54-ii",
    "c54_iii": "conj-54-iii",
}


def conjecture_quotient(variant, n, alpha=1, m=1):
    """Quotient polynomial for a conjecture instance, or the obstruction."""
    _check_positive(n=n, m=m)
    return _conjecture_quotient(variant, n, alpha, m)


def conjecture_checks(variant, n, alpha=1, m=1):
    """Empirical check of one conjecture instance; the Verdict is tagged
    with status conjecture-empirical to keep it apart from proved facts."""
    quot = conjecture_quotient(variant, n, alpha, m)
    statement = _CONJECTURE_IDS[variant]
    if variant == "c52_eq14_even_n":
        params = {"n": n, "alpha": alpha, "m": m}
    elif variant == "c54_ii":
        params = {"n": n, "m": m}
    else:
        params = {"n": n}
    if isinstance(quot, DivisionWitness):
        return Verdict(statement, params, False, str(quot),
                       status="conjecture-empirical")
    return Verdict(statement, params, True, None,
                   status="conjecture-empirical")


@dataclass(frozen=True)
class GridSpec:
    """A statement id plus inclusive parameter ranges to sweep.

    ranges is an ordered tuple of (name, lo, hi); missing names take the
    statement's defaults.  count and seed only matter for the sampled
    q-Lucas statement.  inject_fault adds one to the assembled value (test
    hook for witness soundness); only divisibility statements support it.
    """

    statement: str
    ranges: tuple = ()
    workers: int = 0
    inject_fault: bool = False
    count: int = 500
    seed: int = 0
    timing: bool = False


def _run_qsum_plain(p, fault):
    value = qsum_plain(p["n"], p["alpha"], p["m"], p["r"])
    if fault:
        value = value + QLaurent.one()
    return [verify_divisible_by_qn(value, p["n"], "thm-qsum-plain", p)]


def _run_qsum_alternating(p, fault):
    value = qsum_alternating(p["n"], p["alpha"], p["m"], p["r"])
    if fault:
        value = value + QLaurent.one()
    return [verify_cyclotomic_product(value, p["n"], "thm-qsum-alternating", p)]


def _run_qsum_product(p, fault):
    value = qsum_product(p["n"], p["alpha"], p["m"], p["r"])
    if fault:
        value = value + QLaurent.one()
    return [verify_divisible_by_qn(value, p["n"], "thm-qsum-product", p)]


def _run_qsum_general(p, fault):
    value = qsum_general(p["n"], p["alpha"], p["beta"], p["m"], p["r"])
    if fault:
        value = value + QLaurent.one()
    return [verify_divisible_by_qn(value, p["n"], "thm-qsum-general", p)]


def _run_int_plain(sign):
    def run(p, fault):
        quot = _int_plain_quotient(p["n"], p["alpha"], p["m"], p["r"], sign,
                                   fault)
        statement = ("thm-int-plain" if sign == "plus"
                     else "thm-int-alternating")
        if isinstance(quot, DivisionWitness):
            return [Verdict(statement, p, False, str(quot))]
        return [Verdict(statement, p, True, None)]
    return run


def _run_int_lcm(p, fault):
    quot = _int_lcm_quotient(p["n"], p["alpha"], p["beta"], p["m"], p["r"],
                             fault)
    if isinstance(quot, DivisionWitness):
        return [Verdict("thm-int-lcm", p, False, str(quot))]
    return [Verdict("thm-int-lcm", p, True, None)]


def _run_conjecture(variant):
    def run(p, fault):
        quot = _conjecture_quotient(variant, p["n"], p.get("alpha", 1),
                                    p.get("m", 1), fault)
        statement = _CONJECTURE_IDS[variant]
        if isinstance(quot, DivisionWitness):
            return [Verdict(statement, p, False, str(quot),
                            status="conjecture-empirical")]
        return [Verdict(statement, p, True, None,
                        status="conjecture-empirical")]
    return run


def _run_lemma23(p, fault):
    return lemma_congruence_check(p["a"], p["b"], p["d"], p["alpha"])


def _run_lemma31(p, fault):
    ok = lemma31_check(p["d"])
    witness = None
    if not ok:
        doubled = cyclotomic(p["d"]).subst_q_squared()
        witness = f"q^2 image of cyclotomic({p['d']}) is {doubled}"
    return [Verdict("lemma-31", p, ok, witness)]


def _run_qlucas(p, fault):
    ok = q_lucas_check(p["d"], p["a"], p["b"], p["s"], p["t"])
    witness = None
    if not ok:
        diff = (q_binomial(p["a"] * p["d"] + p["b"], p["s"] * p["d"] + p["t"])
                - math.comb(p["a"], p["s"]) * q_binomial(p["b"], p["t"]))
        witness = str(diff.rem_monic_cyclic(cyclotomic(p["d"]), p["d"]))
    return [Verdict("lemma-qlucas", p, ok, witness)]


def _run_identity_suite(p, fault):
    reports = w_identity_suite(p["n"], p["m"], p["b"])
    bad = [r for r in reports if not r.holds]
    ok = not bad
    witness = None if ok else "; ".join(
        f"{r.identity}: lhs={r.lhs} rhs={r.rhs}" for r in bad)
    return [Verdict("identity-suite", p, ok, witness)]


@dataclass(frozen=True)
class _Statement:
    # params: (name, minimum, default (lo, hi) or None when required)
    params: tuple
    runner: object
    fault_ok: bool = True
    cell_filter: object = None
    sampled: bool = False


def _lemma23_valid(p):
    b, d = p["b"], p["d"]
    return (1 <= b <= d - 2) or (d > 3 and 0 <= b <= d - 3)


_QSUM_PARAMS = (("n", 2, None), ("alpha", 1, (1, 1)), ("m", 1, (1, 1)),
                ("r", 1, (1, 1)))
_INT_PARAMS = (("n", 1, None), ("alpha", 1, (1, 1)), ("m", 1, (1, 1)),
               ("r", 1, (1, 1)))

STATEMENTS = {
    "thm-qsum-plain": _Statement(_QSUM_PARAMS, _run_qsum_plain),
    "thm-qsum-alternating": _Statement(_QSUM_PARAMS, _run_qsum_alternating),
    "thm-qsum-product": _Statement(_QSUM_PARAMS, _run_qsum_product),
    "thm-qsum-general": _Statement(
        (("n", 2, None), ("alpha", 1, (1, 1)), ("beta", 1, (1, 1)),
         ("m", 1, (1, 1)), ("r", 1, (1, 1))),
        _run_qsum_general),
    "thm-int-plain": _Statement(_INT_PARAMS, _run_int_plain("plus")),
    "thm-int-alternating": _Statement(_INT_PARAMS,
                                      _run_int_plain("alternating")),
    "thm-int-lcm": _Statement(
        (("n", 1, None), ("alpha", 1, (1, 1)), ("beta", 1, (1, 1)),
         ("m", 1, (1, 1)), ("r", 1, (1, 1))),
        _run_int_lcm),
    "lemma-23": _Statement(
        (("a", 0, (0, 3)), ("b", 0, (0, 8)), ("d", 3, (3, 10)),
         ("alpha", 1, (1, 2))),
        _run_lemma23, fault_ok=False, cell_filter=_lemma23_valid),
    "lemma-31": _Statement((("d", 2, (2, 30)),), _run_lemma31,
                           fault_ok=False),
    "lemma-qlucas": _Statement(
        (("d", 2, (2, 12)), ("a", 0, (0, 4))),
        _run_qlucas, fault_ok=False, sampled=True),
    "identity-suite": _Statement(
        (("n", 1, None), ("m", 1, (1, 1)), ("b", 0, (0, 12))),
        _run_identity_suite, fault_ok=False,
        cell_filter=lambda p: p["m"] <= p["n"]),
    "conj-52-even": _Statement(
        (("n", 1, None), ("alpha", 2, (2, 2)), ("m", 1, (1, 1))),
        _run_conjecture("c52_eq14_even_n"),
        cell_filter=lambda p: p["n"] % 2 == 0),
    "conj-54-ii": _Statement(
        (("n", 1, None), ("m", 1, (1, 1))),
        _run_conjecture("c54_ii")),
    "conj-54-iii": _Statement(
        (("n", 1, None),),
        _run_conjecture("c54_iii"),
        cell_filter=lambda p: p["n"] % 2 == 0),
}


def _resolve_ranges(spec, schema):
    given = {}
    for name, lo, hi in spec.ranges:
        if name in given:
            raise GridError(f"range for {name!r} given twice")
        given[name] = (lo, hi)
    known = {entry[0] for entry in schema.params}
    for name in given:
        if name not in known:
            raise GridError(
                f"statement {spec.statement!r} takes no parameter {name!r}")
    resolved = []
    for name, minimum, default in schema.params:
        if name in given:
            lo, hi = given[name]
        elif default is not None:
            lo, hi = default
        else:
            raise GridError(
                f"statement {spec.statement!r} requires a range for {name!r}")
        if lo > hi:
            raise GridError(f"empty range {lo}..{hi} for {name!r}")
        if lo < minimum:
            raise GridError(
                f"{name!r} must be >= {minimum} for {spec.statement!r}")
        resolved.append((name, lo, hi))
    return resolved


def _enumerate_cells(spec, schema):
    if schema.sampled:
        bounds = dict((name, (lo, hi))
                      for name, lo, hi in _resolve_ranges(spec, schema))
        rng = random.Random(spec.seed)
        cells = []
        for _ in range(spec.count):
            d = rng.randint(*bounds["d"])
            a = rng.randint(*bounds["a"])
            cells.append({
                "d": d,
                "a": a,
                "b": rng.randint(0, d - 1),
                "s": rng.randint(0, a + 1),
                "t": rng.randint(0, d - 1),
            })
        return cells
    resolved = _resolve_ranges(spec, schema)
    cells = [{}]
    for name, lo, hi in resolved:
        cells = [dict(c, **{name: v}) for c in cells for v in range(lo, hi + 1)]
    if schema.cell_filter is not None:
        cells = [c for c in cells if schema.cell_filter(c)]
    return cells


def grid_verify(spec):
    """Run one statement over its parameter grid.

    Cells are enumerated lexicographically in schema order and results keep
    that order whatever the worker count, so reports are reproducible.
    """
    schema = STATEMENTS.get(spec.statement)
    if schema is None:
        catalog = ", ".join(sorted(STATEMENTS))
        raise GridError(
            f"unknown statement {spec.statement!r}; catalog: {catalog}")
    if spec.inject_fault and not schema.fault_ok:
        raise GridError(
            f"statement {spec.statement!r} does not support fault injection")
    if spec.count < 0:
        raise GridError("count must be nonnegative")
    cells = _enumerate_cells(spec, schema)

    def run_cell(params):
        if spec.timing:
            t0 = time.perf_counter_ns()
            verdicts = schema.runner(params, spec.inject_fault)
            elapsed = (time.perf_counter_ns() - t0) // 1_000_000
            return [replace(v, elapsed_ms=elapsed) for v in verdicts]
        return schema.runner(params, spec.inject_fault)

    workers = spec.workers if spec.workers > 0 else (os.cpu_count() or 1)
    if workers == 1 or len(cells) <= 1:
        chunks = [run_cell(c) for c in cells]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(run_cell, cells))
    return [v for chunk in chunks for v in chunk]
