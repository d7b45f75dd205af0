"""Exact sparse multivariate polynomials with per-variable truncation caps.

Polynomials live in a :class:`SeriesContext` that fixes an ordered variable
list and an optional exponent cap per variable.  Every operation truncates
eagerly: a term whose exponent exceeds a cap is dropped.  That is exact
arithmetic in the quotient ring modulo the monomial ideal generated by the
capped powers, so sums and products of truncated values agree with the
truncations of the exact results.

Coefficients are arbitrary-precision rationals (plain ``int`` whenever the
denominator is one); there is no floating point anywhere.  On top of the
ring the module provides the q-analogue constructors used by the identity
checks: Pochhammer products, double Pochhammer products with optional
infinite legs, q-integers and factorials, the hatted factorial and
multinomial, the two-parameter bracket, and exponential series.
"""

from __future__ import annotations

from fractions import Fraction

ALLOWED_VARIABLES = ("u", "t", "q", "p", "a", "b", "t1", "t2", "q1", "q2")

_DIVISION_STEP_LIMIT = 10**6


class ContextMismatchError(ValueError):
    """Two polynomials from different contexts met in a binary operation."""


class NonUnitError(ValueError):
    """Reciprocal requested for a series whose constant term is not 1."""


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a remainder.

    The callers only divide quantities that are exactly divisible by
    construction, so raising this signals an internal bug rather than a
    user error.
    """


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class SeriesContext:
    """Ordered variable list with per-variable exponent caps (None = uncapped)."""

    __slots__ = ("variables", "caps", "_index")

    def __init__(self, variables, caps=None):
        variables = tuple(variables)
        for v in variables:
            if v not in ALLOWED_VARIABLES:
                raise ValueError(f"unknown variable name {v!r}")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        if caps is None:
            caps = (None,) * len(variables)
        caps = tuple(caps)
        if len(caps) != len(variables):
            raise ValueError("caps must match variables")
        for c in caps:
            if c is not None and (not isinstance(c, int) or c < 0):
                raise ValueError(f"invalid cap {c!r}")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "caps", caps)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(variables)})

    def __setattr__(self, name, value):
        raise AttributeError("SeriesContext is immutable")

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"variable {name!r} not in context") from None

    def cap(self, name):
        return self.caps[self.index(name)]

    @property
    def capped_indices(self):
        return tuple(i for i, c in enumerate(self.caps) if c is not None)

    def __eq__(self, other):
        return (isinstance(other, SeriesContext)
                and self.variables == other.variables
                and self.caps == other.caps)

    def __hash__(self):
        return hash((self.variables, self.caps))

    def __repr__(self):
        caps = ", ".join(f"{v}<={c}" if c is not None else v
                         for v, c in zip(self.variables, self.caps))
        return f"SeriesContext({caps})"


class MultiPoly:
    """Sparse polynomial over the rationals, truncated to its context's caps.

    Treat instances as immutable values: every operation returns a new
    polynomial and never mutates its operands.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        self.ctx = ctx
        clean = {}
        if terms:
            caps = ctx.caps
            nv = len(ctx.variables)
            for exps, coeff in terms.items():
                if len(exps) != nv:
                    raise ValueError("exponent vector has wrong length")
                if any(c is not None and e > c for e, c in zip(exps, caps)):
                    continue
                coeff = _norm_coeff(coeff)
                if coeff:
                    clean[exps] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx)

    @classmethod
    def constant(cls, ctx, value):
        return cls(ctx, {(0,) * len(ctx.variables): value})

    @classmethod
    def variable(cls, ctx, name, exponent=1):
        exps = [0] * len(ctx.variables)
        exps[ctx.index(name)] = exponent
        return cls(ctx, {tuple(exps): 1})

    @classmethod
    def monomial(cls, ctx, coeff, **exponents):
        exps = [0] * len(ctx.variables)
        for name, e in exponents.items():
            exps[ctx.index(name)] = e
        return cls(ctx, {tuple(exps): coeff})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def constant_term(self):
        return self.terms.get((0,) * len(self.ctx.variables), 0)

    def coefficient(self, **exponents):
        exps = [0] * len(self.ctx.variables)
        for name, e in exponents.items():
            exps[self.ctx.index(name)] = e
        return self.terms.get(tuple(exps), 0)

    def degree(self, name):
        """Largest exponent of ``name`` present, -1 for the zero polynomial."""
        i = self.ctx.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.ctx, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        return "MultiPoly(" + "; ".join(self.to_lines()[:4]) + ("; ..." if len(self.terms) > 4 else "") + ")"

    def _check_ctx(self, other):
        if self.ctx != other.ctx:
            raise ContextMismatchError(
                f"operands live in different contexts: {self.ctx} vs {other.ctx}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.ctx, other)
        self._check_ctx(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return MultiPoly(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.ctx, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly.zero(self.ctx)
            return MultiPoly(self.ctx, {e: c * other for e, c in self.terms.items()})
        self._check_ctx(other)
        capped = self.ctx.capped_indices
        if capped and len(self.terms) * len(other.terms) > 4096:
            return self._mul_bucketed(other, capped)
        caps = self.ctx.caps
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                if any(caps[i] is not None and exps[i] > caps[i] for i in capped):
                    continue
                out[exps] = out.get(exps, 0) + ca * cb
        return MultiPoly(self.ctx, out)

    def _mul_bucketed(self, other, capped):
        # Group terms by their capped-exponent profile so whole bucket pairs
        # that would overflow a cap are skipped without touching their terms.
        caps = [self.ctx.caps[i] for i in capped]

        def buckets(poly):
            grouped = {}
            for exps, coeff in poly.terms.items():
                grouped.setdefault(tuple(exps[i] for i in capped), []).append((exps, coeff))
            return grouped

        ba, bb = buckets(self), buckets(other)
        out = {}
        for pa, terms_a in ba.items():
            for pb, terms_b in bb.items():
                if any(x + y > c for x, y, c in zip(pa, pb, caps)):
                    continue
                for ea, ca in terms_a:
                    for eb, cb in terms_b:
                        exps = tuple(x + y for x, y in zip(ea, eb))
                        out[exps] = out.get(exps, 0) + ca * cb
        return MultiPoly(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(self.ctx, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- serialization -----------------------------------------------------

    def to_lines(self):
        """Sorted text form, one ``"<num>/<den> : <monomial>"`` line per term."""
        lines = []
        for exps in sorted(self.terms):
            coeff = Fraction(self.terms[exps])
            mono = " ".join(f"{v}^{e}" for v, e in zip(self.ctx.variables, exps) if e)
            lines.append(f"{coeff.numerator}/{coeff.denominator} : {mono or '1'}")
        return lines

    def to_json_obj(self):
        out = []
        for exps in sorted(self.terms):
            coeff = Fraction(self.terms[exps])
            out.append({
                "coeff": f"{coeff.numerator}/{coeff.denominator}",
                "exps": {v: e for v, e in zip(self.ctx.variables, exps) if e},
            })
        return out


def monomial_text(ctx, exps):
    """Human-readable form of one exponent vector, ``"1"`` for the constant."""
    return " ".join(f"{v}^{e}" for v, e in zip(ctx.variables, exps) if e) or "1"


# -- truncated-series operations ------------------------------------------


def coefficient_of(poly, name, exponent):
    """Polynomial coefficient of ``name**exponent`` (the variable is removed)."""
    i = poly.ctx.index(name)
    out = {}
    for exps, coeff in poly.terms.items():
        if exps[i] == exponent:
            e = list(exps)
            e[i] = 0
            out[tuple(e)] = coeff
    return MultiPoly(poly.ctx, out)


def reciprocal(x):
    """Multiplicative inverse of ``x`` within the context's caps.

    Requires constant term 1, and every non-constant term of ``x`` must
    involve at least one finitely capped variable; the geometric expansion
    then terminates because each power gains capped degree.
    """
    ctx = x.ctx
    if x.constant_term != 1:
        raise NonUnitError("reciprocal needs constant term 1")
    z = MultiPoly.constant(ctx, 1) - x
    capped = ctx.capped_indices
    for exps in z.terms:
        if not any(exps[i] for i in capped):
            raise NonUnitError(
                "reciprocal does not terminate: term "
                f"{monomial_text(ctx, exps)} has no finitely capped variable")
    bound = sum(ctx.caps[i] for i in capped) if capped else 0
    result = MultiPoly.constant(ctx, 1)
    power = MultiPoly.constant(ctx, 1)
    for _ in range(bound):
        power = power * z
        if power.is_zero:
            break
        result = result + power
    return result


def substitute(x, name, value):
    """Exact composition substituting ``value`` for the variable ``name``."""
    ctx = x.ctx
    if value.ctx != ctx:
        raise ContextMismatchError("substitution value lives in a different context")
    i = ctx.index(name)
    by_exp = {}
    for exps, coeff in x.terms.items():
        e = list(exps)
        e[i] = 0
        by_exp.setdefault(exps[i], {})[tuple(e)] = coeff
    result = MultiPoly.zero(ctx)
    power = MultiPoly.constant(ctx, 1)
    current = 0
    for e in sorted(by_exp):
        while current < e:
            power = power * value
            current += 1
        result = result + MultiPoly(ctx, by_exp[e]) * power
    return result


def divide_exact(num, den):
    """Exact polynomial quotient ``num / den``.

    Both operands must be exact polynomials (terms must not have been lost
    to caps), otherwise the division is meaningless.  Raises
    :class:`InexactDivisionError` if ``den`` does not divide ``num``.
    """
    if den.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    num._check_ctx(den)
    ctx = num.ctx
    den_min = min(den.terms)
    den_coeff = den.terms[den_min]
    quotient = {}
    rem = dict(num.terms)
    for _ in range(_DIVISION_STEP_LIMIT):
        if not rem:
            return MultiPoly(ctx, quotient)
        rmin = min(rem)
        qexp = tuple(x - y for x, y in zip(rmin, den_min))
        if any(e < 0 for e in qexp):
            raise InexactDivisionError(
                f"monomial {monomial_text(ctx, rmin)} is not divisible")
        qcoeff = _norm_coeff(Fraction(rem[rmin]) / den_coeff)
        quotient[qexp] = qcoeff
        for exps, coeff in den.terms.items():
            target = tuple(x + y for x, y in zip(qexp, exps))
            val = rem.get(target, 0) - qcoeff * coeff
            if val:
                rem[target] = val
            else:
                rem.pop(target, None)
    raise InexactDivisionError("division did not terminate")


# -- q-analogue constructors ----------------------------------------------


def _as_poly(ctx, base):
    if isinstance(base, str):
        return MultiPoly.variable(ctx, base)
    if isinstance(base, MultiPoly):
        if base.ctx != ctx:
            raise ContextMismatchError("base lives in a different context")
        return base
    raise TypeError("base must be a variable name or a MultiPoly")


def pochhammer(ctx, a_expr, base, n):
    """Product ``(1 - a) (1 - a*b) ... (1 - a*b^(n-1))`` for ``b = base``."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    b = _as_poly(ctx, base)
    a = _as_poly(ctx, a_expr) if isinstance(a_expr, str) else a_expr
    result = MultiPoly.constant(ctx, 1)
    scale = a
    for _ in range(n):
        result = result * (MultiPoly.constant(ctx, 1) - scale)
        scale = scale * b
    return result


def double_pochhammer(ctx, a_expr, p_base, q_base, n, m):
    """Double product ``prod_{1<=i<=n, 1<=j<=m} (1 - a * p^(i-1) * q^(j-1))``.

    ``n`` or ``m`` may be None for an infinite leg, in which case factors are
    included until they are identically 1 within the caps.  ``n == 0`` or
    ``m == 0`` gives 1.
    """
    pb = _as_poly(ctx, p_base)
    qb = _as_poly(ctx, q_base)
    a = _as_poly(ctx, a_expr) if isinstance(a_expr, str) else a_expr
    capped = ctx.capped_indices
    if not a.is_zero:
        for leg, b in (("first", pb), ("second", qb)) if (n is None or m is None) else ():
            if (leg == "first" and n is None) or (leg == "second" and m is None):
                for exps in b.terms:
                    if not any(exps[i] for i in capped):
                        raise ValueError(
                            f"infinite {leg} leg needs finite caps on its base variables")
    if n == 0 or m == 0:
        return MultiPoly.constant(ctx, 1)
    result = MultiPoly.constant(ctx, 1)
    row = a
    i = 0
    while n is None or i < n:
        if row.is_zero:
            break
        term = row
        j = 0
        while m is None or j < m:
            if term.is_zero:
                break
            result = result * (MultiPoly.constant(ctx, 1) - term)
            term = term * qb
            j += 1
        row = row * pb
        i += 1
    return result


def q_int(ctx, n, base):
    """q-integer ``1 + b + ... + b^(n-1)``; 0 for ``n == 0``."""
    if n < 0:
        raise ValueError("q-integer of a negative integer")
    b = _as_poly(ctx, base)
    result = MultiPoly.zero(ctx)
    power = MultiPoly.constant(ctx, 1)
    for _ in range(n):
        result = result + power
        power = power * b
    return result


def q_factorial(ctx, n, base):
    """q-factorial, the product of the q-integers 1..n; 1 for ``n == 0``."""
    result = MultiPoly.constant(ctx, 1)
    for i in range(1, n + 1):
        result = result * q_int(ctx, i, base)
    return result


def hat_factorial(ctx, n, a_expr, p_var):
    """Hatted factorial ``(-a*p; p)_n`` times the q-factorial of ``n``."""
    p = _as_poly(ctx, p_var)
    shifted = -(a_expr * p)
    return pochhammer(ctx, shifted, p, n) * q_factorial(ctx, n, p_var)


def bracket_two_param(ctx, m, a_var, b_var):
    """Two-parameter bracket ``sum_{h=0}^{m-1} a^h b^(m-1-h)``; 0 for ``m == 0``."""
    if m < 0:
        raise ValueError("bracket of a negative integer")
    a = _as_poly(ctx, a_var)
    b = _as_poly(ctx, b_var)
    result = MultiPoly.zero(ctx)
    for h in range(m):
        result = result + a ** h * b ** (m - 1 - h)
    return result


def hat_multinomial(ctx, parts, a_expr, p_var):
    """Hatted multinomial coefficient for the composition ``parts``.

    The first part carries the hat: the hatted factorial of the total is
    divided by the hatted factorial of ``parts[0]`` and the plain
    q-factorials of the remaining parts.  The division is exact; a
    remainder would be an internal bug.
    """
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        raise ValueError("composition parts must be nonnegative")
    total = sum(parts)
    num = hat_factorial(ctx, total, a_expr, p_var)
    den = hat_factorial(ctx, parts[0], a_expr, p_var) if parts else MultiPoly.constant(ctx, 1)
    for p in parts[1:]:
        den = den * q_factorial(ctx, p, p_var)
    return divide_exact(num, den)


def exp_series(ctx, kind, u_var, cap_u, p_var=None, a_expr=None):
    """Truncated exponential series in ``u_var`` up to degree ``cap_u``.

    kind "classical" returns ``sum u^m / m!`` with rational coefficients.
    The q-analogues cannot carry their reciprocal-factorial coefficients in
    a polynomial ring, so they come back multiplied through by the largest
    denominator: kind "p" returns the series times the q-factorial of
    ``cap_u`` (coefficient of ``u^m`` is the exact quotient of the two
    q-factorials), and kind "hat" returns the hatted series times the
    hatted factorial of ``cap_u``.  Callers cancel the clearing factor when
    they extract coefficients.
    """
    if cap_u is None or cap_u < 0:
        raise ValueError("exp_series needs a finite nonnegative u cap")
    one = MultiPoly.constant(ctx, 1)
    if kind == "classical":
        result = MultiPoly.zero(ctx)
        fact = 1
        for m in range(cap_u + 1):
            if m:
                fact *= m
            result = result + MultiPoly.monomial(ctx, Fraction(1, fact), **{u_var: m})
        return result
    if kind not in ("p", "hat"):
        raise ValueError(f"unknown exponential kind {kind!r}")
    if p_var is None:
        raise ValueError("q-analogue exponentials need p_var")
    p = _as_poly(ctx, p_var)
    # suffix[m] = factor for degrees m+1 .. cap_u, so coefficient of u^m is
    # the clearing factor divided by the degree-m factorial, with no division.
    coeff = one
    result = MultiPoly.monomial(ctx, 1, **{u_var: cap_u})
    for m in range(cap_u, 0, -1):
        step = q_int(ctx, m, p_var)
        if kind == "hat":
            if a_expr is None:
                raise ValueError("hat exponential needs a_expr")
            step = step * (one + a_expr * p ** m)
        coeff = coeff * step
        result = result + coeff * MultiPoly.monomial(ctx, 1, **{u_var: m - 1})
    return result
