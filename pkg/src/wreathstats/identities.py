"""Identity catalog: brute-force distribution polynomials versus closed forms.

Each catalog entry builds the left side by enumerating colored permutations
(or sequences, or biwords) and summing exact monomials, builds the right
side from the q-series constructors, and compares the two within the
truncation caps fixed by the entry.  All comparisons are exact; there is no
tolerance anywhere.  A failing comparison reports the first mismatching
monomial in the context's lexicographic order.

Infinite sums are handled by grading: both sides of every identity are
graded by the truncation variables (powers of t, or the extracted power of
u), so a capped comparison checks each retained coefficient completely.
"""

from __future__ import annotations

import itertools
import time
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .group import (
    BudgetExceededError,
    enumerate_group,
    group_order,
    raw_statistics,
    skew_inverse,
    statistics,
)
from .encoding import enumerate_sequences, is_compatible, partitions_in_box, \
    pi_of, lambda_of, sequence_from
from .biwords import (
    column_multiset,
    column_realization_count,
    enumerate_biwords,
    from_triple,
    to_triple,
)
from .qseries import (
    MultiPoly,
    SeriesContext,
    bracket_two_param,
    coefficient_of,
    divide_exact,
    double_pochhammer,
    exp_series,
    hat_factorial,
    hat_multinomial,
    monomial_text,
    pochhammer,
    q_factorial,
    q_int,
    reciprocal,
    substitute,
)

__all__ = [
    "CATALOG",
    "DEFAULT_MAX_ELEMENTS",
    "DEFAULT_MAX_TERMS",
    "VerificationReport",
    "dist_polynomial",
    "selftest_localization",
    "verify_identity",
]

DEFAULT_MAX_ELEMENTS = 10 ** 7
DEFAULT_MAX_TERMS = 10 ** 6

_DIRECT_STATS = {"des": 3, "maj": 4, "length": 1, "col": 6, "fmaj": 5}
_INVERSE_STATS = {"ides": 3, "imaj": 4, "icol": 6, "ifmaj": 5}


@dataclass
class Budget:
    max_elements: int = DEFAULT_MAX_ELEMENTS
    max_terms: int = DEFAULT_MAX_TERMS


def dist_polynomial(ctx, r, n, stats, max_elements=DEFAULT_MAX_ELEMENTS):
    """Sum over the whole group of the monomial assigned by ``stats``.

    ``stats`` maps statistic names (des, maj, length, col, fmaj and their
    inverse-element variants ides, imaj, icol, ifmaj) to context variables.
    Inverse statistics are taken from the true group inverse.
    """
    plan = []
    need_inverse = False
    for stat, var in stats.items():
        if stat in _DIRECT_STATS:
            plan.append((False, _DIRECT_STATS[stat], ctx.index(var)))
        elif stat in _INVERSE_STATS:
            plan.append((True, _INVERSE_STATS[stat], ctx.index(var)))
            need_inverse = True
        else:
            raise ValueError(f"unknown statistic {stat!r}")
    if max_elements is not None and group_order(r, n) > max_elements:
        raise BudgetExceededError(
            f"group of order {group_order(r, n)} exceeds budget {max_elements}")
    nvars = len(ctx.variables)
    acc = {}
    for sigma in itertools.permutations(range(1, n + 1)):
        inv_sigma = [0] * n
        for i, v in enumerate(sigma):
            inv_sigma[v - 1] = i + 1
        inv_sigma = tuple(inv_sigma)
        for colors in itertools.product(range(r), repeat=n):
            rec = raw_statistics(r, sigma, colors)
            irec = None
            if need_inverse:
                icolors = tuple((r - colors[s - 1]) % r for s in inv_sigma)
                irec = raw_statistics(r, inv_sigma, icolors)
            exps = [0] * nvars
            for use_inverse, stat_idx, var_idx in plan:
                exps[var_idx] += (irec if use_inverse else rec)[stat_idx]
            key = tuple(exps)
            acc[key] = acc.get(key, 0) + 1
    return MultiPoly(ctx, acc)


@dataclass
class VerificationReport:
    """Outcome of one catalog entry run."""

    identity: str
    params: dict
    passed: bool
    mismatch: dict | None
    millis: int
    lhs_terms: int
    rhs_terms: int
    corrupted_monomial: str | None = None

    def to_json_dict(self):
        out = {
            "identity": self.identity,
            "params": dict(self.params),
            "pass": self.passed,
            "millis": self.millis,
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
        }
        if self.mismatch is not None:
            out["mismatch"] = dict(self.mismatch)
        return out


def _bump_min_term(poly):
    """Add 1 to the lexicographically first coefficient; returns (poly, monomial)."""
    terms = dict(poly.terms)
    key = min(terms) if terms else (0,) * len(poly.ctx.variables)
    terms[key] = terms.get(key, 0) + 1
    return MultiPoly(poly.ctx, terms), monomial_text(poly.ctx, key)


def verify_identity(name, corrupt=None, max_elements=DEFAULT_MAX_ELEMENTS,
                    max_terms=DEFAULT_MAX_TERMS, **params):
    """Run one catalog entry and report the outcome.

    ``corrupt`` ("lhs" or "rhs") bumps one coefficient of the first
    polynomial comparison before checking, for harness self-tests; the
    bumped monomial is recorded on the report.
    """
    try:
        func, defaults = CATALOG[name]
    except KeyError:
        raise ValueError(f"unknown identity {name!r}") from None
    if corrupt not in (None, "lhs", "rhs"):
        raise ValueError("corrupt must be None, 'lhs' or 'rhs'")
    merged = dict(defaults)
    for key, value in params.items():
        if key not in defaults:
            raise ValueError(f"identity {name!r} does not take parameter {key!r}")
        if value is not None:
            merged[key] = value
    for key, value in merged.items():
        if key.endswith("max") or key.endswith("cap"):
            if value == 0:
                warnings.warn(f"{name}: cap {key}=0 compares only the constant term",
                              stacklevel=2)
    budget = Budget(max_elements=max_elements, max_terms=max_terms)
    start = time.perf_counter()
    lhs_terms = rhs_terms = 0
    mismatch = None
    corrupted = None
    pending = corrupt
    for case in func(budget, **merged):
        if case[0] == "poly":
            _, label, lhs, rhs = case
            if pending:
                if pending == "lhs":
                    lhs, corrupted = _bump_min_term(lhs)
                else:
                    rhs, corrupted = _bump_min_term(rhs)
                pending = None
            lhs_terms += len(lhs)
            rhs_terms += len(rhs)
            if lhs_terms > budget.max_terms or rhs_terms > budget.max_terms:
                raise BudgetExceededError(
                    f"{name}: term count exceeds budget {budget.max_terms}")
            diff = lhs - rhs
            if not diff.is_zero:
                exps = min(diff.terms)
                mismatch = {
                    "case": label,
                    "monomial": monomial_text(lhs.ctx, exps),
                    "lhs_coeff": str(lhs.terms.get(exps, 0)),
                    "rhs_coeff": str(rhs.terms.get(exps, 0)),
                }
                break
        else:
            _, label, ok, detail = case
            if not ok:
                mismatch = {"case": label, "detail": detail}
                break
    millis = int(round((time.perf_counter() - start) * 1000))
    return VerificationReport(identity=name, params=merged,
                              passed=mismatch is None, mismatch=mismatch,
                              millis=millis, lhs_terms=lhs_terms,
                              rhs_terms=rhs_terms, corrupted_monomial=corrupted)


# -- small shared helpers ----------------------------------------------------


def _color_twist(ctx, r):
    """The color marker ``a`` times the q-integer of r-1 in base ``a*p``."""
    a = MultiPoly.variable(ctx, "a")
    ap = MultiPoly.monomial(ctx, 1, a=1, p=1)
    return a * q_int(ctx, r - 1, ap)


def _weak_compositions(n, parts):
    """Weak compositions of n into exactly ``parts`` nonnegative parts."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for head in range(n + 1):
        for tail in _weak_compositions(n - head, parts - 1):
            yield (head,) + tail


# -- catalog entries ---------------------------------------------------------


def _length_gf(budget, r, n):
    ctx = SeriesContext(("p",))
    lhs = dist_polynomial(ctx, r, n, {"length": "p"}, budget.max_elements)
    rhs = hat_factorial(ctx, n, q_int(ctx, r - 1, "p"), "p")
    yield ("poly", f"r={r} n={n}", lhs, rhs)


def _ell_col(budget, r, n):
    ctx = SeriesContext(("p", "a"))
    lhs = dist_polynomial(ctx, r, n, {"length": "p", "col": "a"},
                          budget.max_elements)
    rhs = q_factorial(ctx, n, "p")
    one = MultiPoly.constant(ctx, 1)
    twist = _color_twist(ctx, r)
    for i in range(1, n + 1):
        rhs = rhs * (one + MultiPoly.monomial(ctx, 1, p=i) * twist)
    yield ("poly", f"r={r} n={n}", lhs, rhs)


def _projection(budget, r, n):
    if r < 2:
        raise ValueError("projection needs r >= 2")
    ctx = SeriesContext(("p", "a"))
    buckets = {}
    for gamma in enumerate_group(r, n, budget.max_elements):
        flat = tuple(1 if c else 0 for c in gamma.colors)
        key = (gamma.sigma, flat)
        rec = raw_statistics(r, gamma.sigma, gamma.colors)
        flat_rec = raw_statistics(2, gamma.sigma, flat)
        if rec[2] != flat_rec[2]:
            yield ("fact", f"descents of {gamma}", False,
                   f"{rec[2]} vs {flat_rec[2]} after forgetting colors")
            return
        inv_sigma = tuple(sorted(range(1, n + 1), key=lambda v: gamma.sigma[v - 1]))
        # true inverses of the element and of its color-forgetting image
        icolors = tuple((r - gamma.colors[s - 1]) % r for s in inv_sigma)
        iflat = tuple((2 - flat[s - 1]) % 2 for s in inv_sigma)
        if raw_statistics(r, inv_sigma, icolors)[2] != raw_statistics(2, inv_sigma, iflat)[2]:
            yield ("fact", f"inverse descents of {gamma}", False,
                   "descent sets of the inverses differ after forgetting colors")
            return
        entry = buckets.setdefault(key, {})
        exps = (rec[1], rec[6])
        entry[exps] = entry.get(exps, 0) + 1
    yield ("fact", f"descent preservation r={r} n={n}", True, None)
    twist = _color_twist(ctx, r)
    for sigma in itertools.permutations(range(1, n + 1)):
        for flat in itertools.product(range(2), repeat=n):
            rec = raw_statistics(2, sigma, flat)
            neg = sum(flat)
            lhs = MultiPoly(ctx, buckets.get((sigma, flat), {}))
            rhs = MultiPoly.monomial(ctx, 1, p=rec[1]) * twist ** neg
            label = f"fiber over sigma={sigma} signs={flat} (r={r})"
            yield ("poly", label, lhs, rhs)


def _desmaj(budget, r, n, tmax):
    ctx = SeriesContext(("t", "q"), (tmax, None))
    buckets = {}
    for f in enumerate_sequences(r, n, max_cap=tmax, restrict_n0=True,
                                 max_elements=budget.max_elements):
        gamma = pi_of(f)
        key = (gamma.sigma, gamma.colors)
        top = max(f.values, default=0)
        exps = (top, top * n - sum(f.values))
        entry = buckets.setdefault(key, {})
        entry[exps] = entry.get(exps, 0) + 1
    t = MultiPoly.variable(ctx, "t")
    denom = reciprocal(pochhammer(ctx, t, "q", n))
    for gamma in enumerate_group(r, n, budget.max_elements):
        rec = statistics(gamma)
        lhs = MultiPoly(ctx, buckets.get((gamma.sigma, gamma.colors), {}))
        rhs = MultiPoly.monomial(ctx, 1, t=rec.des, q=rec.maj) * denom
        yield ("poly", f"sequences sorting to {gamma} (r={r})", lhs, rhs)


def _keylem(budget, r, n, parts_max=4):
    ctx = SeriesContext(("p", "a"))
    twist = _color_twist(ctx, r)
    for nparts in range(1, parts_max + 1):
        for comp in _weak_compositions(n, nparts):
            acc = {}
            for f in enumerate_sequences(r, n, composition=comp,
                                          max_elements=budget.max_elements):
                rec = raw_statistics(r, *_pi_raw(f))
                exps = (rec[1], rec[6])
                acc[exps] = acc.get(exps, 0) + 1
            lhs = MultiPoly(ctx, acc)
            rhs = hat_multinomial(ctx, comp, twist, "p")
            yield ("poly", f"composition {comp} (r={r})", lhs, rhs)


def _pi_raw(f):
    """(sigma, colors) of the sorted permutation, skipping object creation."""
    gamma = pi_of(f)
    return gamma.sigma, gamma.colors


def _theorem_A_cases(budget, r, n, tmax):
    ctx = SeriesContext(("t", "q", "p", "a", "u"), (tmax, None, None, None, n))
    twist = _color_twist(ctx, r)
    dist = dist_polynomial(ctx, r, n,
                           {"des": "t", "maj": "q", "length": "p", "col": "a"},
                           budget.max_elements)
    t = MultiPoly.variable(ctx, "t")
    lhs = dist * reciprocal(pochhammer(ctx, t, "q", n + 1))
    plain = exp_series(ctx, "p", "u", n, p_var="p")
    hatted = exp_series(ctx, "hat", "u", n, p_var="p", a_expr=twist)
    nfact = q_factorial(ctx, n, "p")
    rhs = MultiPoly.zero(ctx)
    clearing = MultiPoly.constant(ctx, 1)
    for k in range(tmax + 1):
        qk = MultiPoly.monomial(ctx, 1, q=k, u=1)
        prod = substitute(hatted, "u", qk)
        for i in range(k):
            prod = prod * substitute(plain, "u", MultiPoly.monomial(ctx, 1, q=i, u=1))
        term = divide_exact(coefficient_of(prod, "u", n), clearing)
        rhs = rhs + MultiPoly.monomial(ctx, 1, t=k) * term
        clearing = clearing * nfact
    return f"r={r} n={n} tmax={tmax}", lhs, rhs


def _theorem_A(budget, r, n, tmax):
    yield ("poly", *_theorem_A_cases(budget, r, n, tmax))


def _theorem_B_rhs_term(ctx, r, n, k1, k2):
    u = MultiPoly.variable(ctx, "u")
    first = double_pochhammer(ctx, u, "q1", "q2", k1 + 1, k2 + 1)
    marked = MultiPoly.monomial(ctx, 1, a=1, b=1) \
        * bracket_two_param(ctx, r - 1, "a", "b") * u
    second = double_pochhammer(ctx, marked, "q1", "q2", k1, k2)
    return coefficient_of(reciprocal(first * second), "u", n)


def _theorem_B_cases(budget, r, n, t1max, t2max):
    ctx = SeriesContext(("t1", "t2", "q1", "q2", "a", "b", "u"),
                        (t1max, t2max, None, None, None, None, n))
    dist = dist_polynomial(ctx, r, n,
                           {"des": "t1", "ides": "t2", "maj": "q1",
                            "imaj": "q2", "col": "a", "icol": "b"},
                           budget.max_elements)
    t1 = MultiPoly.variable(ctx, "t1")
    t2 = MultiPoly.variable(ctx, "t2")
    lhs = dist * reciprocal(pochhammer(ctx, t1, "q1", n + 1)) \
        * reciprocal(pochhammer(ctx, t2, "q2", n + 1))
    rhs = MultiPoly.zero(ctx)
    for k1 in range(t1max + 1):
        for k2 in range(t2max + 1):
            term = _theorem_B_rhs_term(ctx, r, n, k1, k2)
            rhs = rhs + MultiPoly.monomial(ctx, 1, t1=k1, t2=k2) * term
    return ctx, f"r={r} n={n} t1max={t1max} t2max={t2max}", lhs, rhs


def _theorem_B(budget, r, n, t1max, t2max):
    _, label, lhs, rhs = _theorem_B_cases(budget, r, n, t1max, t2max)
    yield ("poly", label, lhs, rhs)


def _gg1(budget, n, tmax):
    label, lhs, rhs = _theorem_A_cases(budget, 1, n, tmax)
    yield ("fact", f"color marker inert at n={n}",
           lhs.degree("a") <= 0 and rhs.degree("a") <= 0,
           "uncolored specialization produced color-marker exponents")
    yield ("poly", label, lhs, rhs)


def _gg2(budget, n, t1max, t2max):
    _, label, lhs, rhs = _theorem_B_cases(budget, 1, n, t1max, t2max)
    inert = all(lhs.degree(v) <= 0 and rhs.degree(v) <= 0 for v in ("a", "b"))
    yield ("fact", f"color markers inert at n={n}", inert,
           "uncolored specialization produced color-marker exponents")
    yield ("poly", label, lhs, rhs)


def _chow_gessel(budget, r, n, tmax):
    ctx = SeriesContext(("t", "q", "a"), (tmax, None, None))
    dist = dist_polynomial(ctx, r, n, {"des": "t", "maj": "q", "col": "a"},
                           budget.max_elements)
    t = MultiPoly.variable(ctx, "t")
    a = MultiPoly.variable(ctx, "a")
    lhs = dist * reciprocal(pochhammer(ctx, t, "q", n + 1))
    rhs = MultiPoly.zero(ctx)
    twist = a * q_int(ctx, r - 1, "a")
    for k in range(tmax + 1):
        base = q_int(ctx, k + 1, "q") + twist * q_int(ctx, k, "q")
        rhs = rhs + MultiPoly.monomial(ctx, 1, t=k) * base ** n
    yield ("poly", f"r={r} n={n} tmax={tmax}", lhs, rhs)


def _carlitz(budget, r, n, tmax):
    ctx = SeriesContext(("t", "q"), (tmax, None))
    dist = dist_polynomial(ctx, r, n, {"des": "t", "fmaj": "q"},
                           budget.max_elements)
    t = MultiPoly.variable(ctx, "t")
    qr = MultiPoly.monomial(ctx, 1, q=r)
    lhs = dist * reciprocal(pochhammer(ctx, t, qr, n + 1))
    rhs = MultiPoly.zero(ctx)
    for k in range(tmax + 1):
        rhs = rhs + MultiPoly.monomial(ctx, 1, t=k) * q_int(ctx, r * k + 1, "q") ** n
    yield ("poly", f"r={r} n={n} tmax={tmax}", lhs, rhs)


def _reiner(budget, r, nmax):
    for n in range(nmax + 1):
        tcap = n + 1
        ctx = SeriesContext(("t", "p", "u"), (tcap, None, n))
        lhs = dist_polynomial(ctx, r, n, {"des": "t", "length": "p"},
                              budget.max_elements)
        hat_param = q_int(ctx, r - 1, "p")
        plain = exp_series(ctx, "p", "u", n, p_var="p")
        hatted = exp_series(ctx, "hat", "u", n, p_var="p", a_expr=hat_param)
        one = MultiPoly.constant(ctx, 1)
        shrink = one - MultiPoly.variable(ctx, "t")
        scaled = shrink * MultiPoly.variable(ctx, "u")
        plain_v = substitute(plain, "u", scaled)
        hat_v = substitute(hatted, "u", scaled)
        nfact = q_factorial(ctx, n, "p")
        rhs = MultiPoly.zero(ctx)
        power = MultiPoly.constant(ctx, 1)
        clearing = MultiPoly.constant(ctx, 1)
        for j in range(tcap + 1):
            term = divide_exact(coefficient_of(hat_v * power, "u", n), clearing)
            rhs = rhs + MultiPoly.monomial(ctx, 1, t=j) * term
            power = power * plain_v
            clearing = clearing * nfact
        rhs = shrink * rhs
        yield ("poly", f"r={r} n={n}", lhs, rhs)


def _brenti(budget, r, nmax):
    tcap = nmax + 1
    ctx = SeriesContext(("u", "t", "a"), (nmax, tcap, None))
    lhs = MultiPoly.zero(ctx)
    for n in range(nmax + 1):
        dist = dist_polynomial(ctx, r, n, {"des": "t", "col": "a"},
                               budget.max_elements)
        lhs = lhs + dist * MultiPoly.monomial(ctx, Fraction(1, factorial(n)), u=n)
    one = MultiPoly.constant(ctx, 1)
    t = MultiPoly.variable(ctx, "t")
    a = MultiPoly.variable(ctx, "a")
    shrink = one - t
    classical = exp_series(ctx, "classical", "u", nmax)
    lift = one + a * q_int(ctx, r - 1, "a")
    outer = substitute(classical, "u", shrink * MultiPoly.variable(ctx, "u"))
    inner = substitute(classical, "u", lift * shrink * MultiPoly.variable(ctx, "u"))
    rhs = shrink * outer * reciprocal(one - t * inner)
    yield ("poly", f"r={r} nmax={nmax}", lhs, rhs)


def _gessel_roselle(budget, r, ucap, pcap, qcap):
    ctx = SeriesContext(("u", "p", "q"), (ucap, pcap, qcap))
    u = MultiPoly.variable(ctx, "u")
    series = reciprocal(double_pochhammer(ctx, u, "p", "q", None, None))
    p = MultiPoly.variable(ctx, "p")
    for n in range(ucap + 1):
        lhs = dist_polynomial(ctx, r, n, {"maj": "q", "length": "p"},
                              budget.max_elements)
        clear = pochhammer(ctx, MultiPoly.variable(ctx, "q"), "q", n) \
            * pochhammer(ctx, -(p * q_int(ctx, r - 1, "p")), "p", n) \
            * pochhammer(ctx, p, "p", n)
        rhs = coefficient_of(series, "u", n) * clear
        yield ("poly", f"r={r} n={n}", lhs, rhs)


def _adin_roichman(budget, r, ucap, qcap):
    ctx = SeriesContext(("u", "q1", "q2"), (ucap, qcap, qcap))
    u = MultiPoly.variable(ctx, "u")
    b1 = MultiPoly.monomial(ctx, 1, q1=r)
    b2 = MultiPoly.monomial(ctx, 1, q2=r)
    first = double_pochhammer(ctx, u, b1, b2, None, None)
    marked = MultiPoly.monomial(ctx, 1, q1=1, q2=1) \
        * bracket_two_param(ctx, r - 1, "q1", "q2") * u
    second = double_pochhammer(ctx, marked, b1, b2, None, None)
    series = reciprocal(first * second)
    for n in range(ucap + 1):
        lhs = dist_polynomial(ctx, r, n, {"fmaj": "q1", "ifmaj": "q2"},
                              budget.max_elements)
        clear = pochhammer(ctx, b1, b1, n) * pochhammer(ctx, b2, b2, n)
        rhs = coefficient_of(series, "u", n) * clear
        yield ("poly", f"r={r} n={n}", lhs, rhs)


def _bijection_stats(budget, r, n, cap):
    checked = 0
    for f in enumerate_sequences(r, n, max_cap=cap, restrict_n0=True,
                                 max_elements=budget.max_elements):
        gamma = pi_of(f)
        lam = lambda_of(f)
        rec = statistics(gamma)
        back = sequence_from(gamma, lam)
        if back != f:
            yield ("fact", f"round trip of {f}", False, f"came back as {back}")
            return
        if max(f.values, default=0) != lam.max_part + rec.des:
            yield ("fact", f"max relation at {f}", False,
                   f"max {max(f.values, default=0)} vs {lam.max_part} + {rec.des}")
            return
        if sum(f.values) != lam.weight + n * rec.des - rec.maj:
            yield ("fact", f"sum relation at {f}", False,
                   f"{sum(f.values)} vs {lam.weight} + {n}*{rec.des} - {rec.maj}")
            return
        sorted_vals = [f.values[s - 1] for s in gamma.sigma]
        if any(i in rec.des_set and sorted_vals[i - 1] >= sorted_vals[i]
               for i in range(1, n)):
            yield ("fact", f"descent forces growth at {f}", False, None)
            return
        checked += 1
    yield ("fact", f"sequence side r={r} n={n} cap={cap} ({checked} sequences)",
           True, None)
    checked = 0
    for gamma in enumerate_group(r, n, budget.max_elements):
        for lam in partitions_in_box(n, cap):
            f = sequence_from(gamma, lam)
            if not f.in_n0:
                yield ("fact", f"image of ({gamma}, {lam})", False,
                       "left the zero-forces-uncolored set")
                return
            if pi_of(f) != gamma or lambda_of(f) != lam:
                yield ("fact", f"round trip of ({gamma}, {lam})", False, None)
                return
            checked += 1
    yield ("fact", f"pair side r={r} n={n} cap={cap} ({checked} pairs)",
           True, None)


def _biword_count(budget, r, n, cap_f, cap_g):
    words = list(enumerate_biwords(r, n, cap_f, cap_g,
                                   max_elements=budget.max_elements))
    triples = [to_triple(b) for b in words]
    if len(set((t.gamma, t.lam, t.mu) for t in triples)) != len(words):
        yield ("fact", "injectivity", False, "two biwords shared a triple")
        return
    for b, t in zip(words, triples):
        if from_triple(t) != b:
            yield ("fact", f"round trip of {b}", False, None)
            return
    expected = set()
    for gamma in enumerate_group(r, n, budget.max_elements):
        skew = skew_inverse(gamma)
        for lam in partitions_in_box(n, cap_g):
            if not is_compatible(lam, skew):
                continue
            for mu in partitions_in_box(n, cap_f):
                if is_compatible(mu, gamma):
                    expected.add((gamma, lam, mu))
    got = set((t.gamma, t.lam, t.mu) for t in triples)
    yield ("fact", f"image is every compatible triple (r={r} n={n})",
           got == expected,
           f"{len(got)} triples reached vs {len(expected)} expected")
    groups = {}
    for b in words:
        key = column_multiset(b)
        groups[key] = groups.get(key, 0) + 1
    for key, count in sorted(groups.items()):
        want = column_realization_count(key, r)
        if count != want:
            yield ("fact", f"column multiset {key}", False,
                   f"{count} biwords vs multinomial {want}")
            return
    yield ("fact", f"column multiset counts (r={r} n={n})", True, None)
    ctx = SeriesContext(("q1", "q2", "a", "b", "u"),
                        (None, None, None, None, n))
    one = MultiPoly.constant(ctx, 1)
    for k1 in range(cap_f + 1):
        for k2 in range(cap_g + 1):
            actual = sum(1 for b in words
                         if max(b.f.values, default=0) <= k1
                         and b.g.max_part <= k2)
            term = _theorem_B_rhs_term(ctx, r, n, k1, k2)
            for var in ("q1", "q2", "a", "b"):
                term = substitute(term, var, one)
            predicted = term.constant_term
            yield ("fact", f"count at caps ({k1},{k2})", actual == predicted,
                   f"{actual} biwords vs coefficient {predicted}")


CATALOG = {
    "length_gf": (_length_gf, {"r": 2, "n": 3}),
    "ell_col": (_ell_col, {"r": 2, "n": 3}),
    "projection": (_projection, {"r": 3, "n": 2}),
    "desmaj": (_desmaj, {"r": 2, "n": 2, "tmax": 3}),
    "keylem": (_keylem, {"r": 2, "n": 3, "parts_max": 4}),
    "theorem_A": (_theorem_A, {"r": 2, "n": 2, "tmax": 3}),
    "theorem_B": (_theorem_B, {"r": 2, "n": 2, "t1max": 2, "t2max": 2}),
    "chow_gessel": (_chow_gessel, {"r": 2, "n": 2, "tmax": 3}),
    "carlitz": (_carlitz, {"r": 2, "n": 2, "tmax": 3}),
    "reiner": (_reiner, {"r": 2, "nmax": 3}),
    "brenti": (_brenti, {"r": 2, "nmax": 3}),
    "gessel_roselle": (_gessel_roselle, {"r": 2, "ucap": 3, "pcap": 6, "qcap": 6}),
    "adin_roichman": (_adin_roichman, {"r": 2, "ucap": 2, "qcap": 6}),
    "gg1": (_gg1, {"n": 3, "tmax": 3}),
    "gg2": (_gg2, {"n": 2, "t1max": 2, "t2max": 2}),
    "bijection_stats": (_bijection_stats, {"r": 2, "n": 3, "cap": 2}),
    "biword_count": (_biword_count, {"r": 2, "n": 2, "cap_f": 2, "cap_g": 2}),
}


def selftest_localization(entries=None):
    """Corrupt one coefficient per side and check the mismatch is localized.

    Returns a list of (identity, ok) pairs; ok means the clean run passed,
    both corrupted runs failed, and each reported exactly the corrupted
    monomial.
    """
    if entries is None:
        entries = [
            ("length_gf", {"r": 2, "n": 2}),
            ("chow_gessel", {"r": 2, "n": 2, "tmax": 3}),
            ("keylem", {"r": 2, "n": 2}),
        ]
    results = []
    for name, params in entries:
        ok = verify_identity(name, **params).passed
        for side in ("lhs", "rhs"):
            report = verify_identity(name, corrupt=side, **params)
            ok = ok and not report.passed and report.mismatch is not None \
                and report.mismatch.get("monomial") == report.corrupted_monomial
        results.append((name, ok))
    return results
