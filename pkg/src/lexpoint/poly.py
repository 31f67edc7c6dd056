"""Sparse multivariate polynomials under lex order with x1 < x2 < ... < xn.

The last variable is the most significant one, so exponent tuples compare by
their reversed form.  Terms are stored in descending order, which makes the
leading term the first entry and rendering canonical.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Sequence

from .errors import ArityMismatch, FieldMismatch, LevelOutOfRange, LexpointError
from .field import Field, Scalar

Monomial = tuple  # tuple[int, ...] of length nvars


def lex_key(m: Monomial):
    """Sort key: ascending in lex order with the last variable dominant."""
    return m[::-1]


def lex_compare(a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as a <, =, > b in the lex order."""
    if len(a) != len(b):
        raise ArityMismatch(f"monomial lengths differ: {len(a)} vs {len(b)}")
    ka, kb = a[::-1], b[::-1]
    if ka < kb:
        return -1
    return 1 if ka > kb else 0


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))

def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))

def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))

def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def render_monomial(m: Monomial, var_offset: int = 0) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1 + var_offset}")
        elif e > 1:
            parts.append(f"x{i + 1 + var_offset}^{e}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: Field, nvars: int, terms: Mapping[Monomial, Scalar]):
        clean = {}
        for m, c in terms.items():
            if len(m) != nvars:
                raise ArityMismatch(f"monomial {m} has length != {nvars}")
            if c:
                clean[tuple(m)] = c
        self.field = field
        self.nvars = nvars
        # descending order; first key is the leading monomial
        self.terms = {m: clean[m] for m in sorted(clean, key=lex_key, reverse=True)}

    # ---------- constructors ----------

    @classmethod
    def zero(cls, field: Field, nvars: int) -> "Polynomial":
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field: Field, nvars: int, c: Scalar) -> "Polynomial":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, field: Field, nvars: int) -> "Polynomial":
        return cls.constant(field, nvars, field.one())

    @classmethod
    def variable(cls, field: Field, nvars: int, var: int) -> "Polynomial":
        """The polynomial x_{var+1} (0-based variable index)."""
        e = [0] * nvars
        e[var] = 1
        return cls(field, nvars, {tuple(e): field.one()})

    @classmethod
    def univariate(cls, field: Field, nvars: int, var: int,
                   coeffs: Sequence[Scalar]) -> "Polynomial":
        """sum coeffs[k] * x_{var+1}^k embedded into nvars variables."""
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                e = [0] * nvars
                e[var] = k
                terms[tuple(e)] = c
        return cls(field, nvars, terms)

    # ---------- basic queries ----------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def lm(self) -> Monomial:
        if not self.terms:
            raise LexpointError("zero polynomial has no leading monomial")
        return next(iter(self.terms))

    def lc(self) -> Scalar:
        return self.terms[self.lm()]

    def lt(self):
        m = self.lm()
        return m, self.terms[m]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial) and self.nvars == other.nvars
                and self.field == other.field and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.field, self.nvars, tuple(self.terms.items())))

    def __repr__(self) -> str:
        return f"Polynomial({self.render()})"

    def _check_compatible(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ArityMismatch(f"nvars {self.nvars} vs {other.nvars}")
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    # ---------- arithmetic ----------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        F = self.field
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(res.get(m, F.zero()), c)
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Polynomial(F, self.nvars, res)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        F = self.field
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = F.sub(res.get(m, F.zero()), c)
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Polynomial(F, self.nvars, res)

    def __neg__(self) -> "Polynomial":
        F = self.field
        return Polynomial(F, self.nvars, {m: F.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        F = self.field
        res: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = F.add(res.get(m, F.zero()), F.mul(c1, c2))
                if s:
                    res[m] = s
                else:
                    res.pop(m, None)
        return Polynomial(F, self.nvars, res)

    def mul_term(self, coeff: Scalar, mono: Optional[Monomial] = None) -> "Polynomial":
        F = self.field
        if not coeff:
            return Polynomial.zero(F, self.nvars)
        res = {}
        for m, c in self.terms.items():
            key = monomial_mul(m, mono) if mono is not None else m
            res[key] = F.mul(c, coeff)
        return Polynomial(F, self.nvars, res)

    def scale(self, coeff: Scalar) -> "Polynomial":
        return self.mul_term(coeff)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.lc()
        if lc == self.field.one():
            return self
        return self.mul_term(self.field.invert(lc))

    # ---------- evaluation and substitution ----------

    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        if len(point) != self.nvars:
            raise ArityMismatch(f"point has {len(point)} coords, poly {self.nvars}")
        F = self.field
        total = F.zero()
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = F.mul(v, F.pow(x, e))
            total = F.add(total, v)
        return total

    def specialize_prefix(self, values: Sequence[Scalar]) -> "Polynomial":
        """Substitute the first len(values) variables; result lives in the rest."""
        k = len(values)
        if k > self.nvars:
            raise ArityMismatch("more values than variables")
        F = self.field
        res: dict = {}
        for m, c in self.terms.items():
            v = c
            for x, e in zip(values, m[:k]):
                if e:
                    v = F.mul(v, F.pow(x, e))
            if not v:
                continue
            suffix = m[k:]
            s = F.add(res.get(suffix, F.zero()), v)
            if s:
                res[suffix] = s
            else:
                res.pop(suffix, None)
        return Polynomial(F, self.nvars - k, res)

    def embed(self, nvars: int) -> "Polynomial":
        """Lift into a ring with more variables (zero-padded exponents)."""
        if nvars < self.nvars:
            raise ArityMismatch("cannot embed into fewer variables")
        if nvars == self.nvars:
            return self
        pad = (0,) * (nvars - self.nvars)
        return Polynomial(self.field, nvars, {m + pad: c for m, c in self.terms.items()})

    # ---------- partial leading data ----------

    def leading_data(self, t: int):
        """LC_t and LM_t of the polynomial viewed over k[x1..xt].

        Returns (coefficient polynomial in t variables, exponent tuple of the
        leading monomial in the remaining nvars - t variables).
        """
        if not self.terms:
            raise LexpointError("zero polynomial has no leading data")
        if not 0 <= t <= self.nvars - 1:
            raise LevelOutOfRange(f"level {t} out of range for {self.nvars} variables")
        lead_suffix = None
        for m in self.terms:  # descending, so the first suffix seen is maximal
            lead_suffix = m[t:]
            break
        coeff_terms = {m[:t]: c for m, c in self.terms.items() if m[t:] == lead_suffix}
        return Polynomial(self.field, t, coeff_terms), lead_suffix

    # ---------- rendering ----------

    def render(self, var_offset: int = 0) -> str:
        if not self.terms:
            return "0"
        F = self.field
        one = F.one()
        parts = []
        for i, (m, c) in enumerate(self.terms.items()):
            mono = render_monomial(m, var_offset)
            negative = F.kind == "Q" and c < 0
            mag = -c if negative else c
            if mono == "1":
                body = F.render(mag)
            elif mag == one:
                body = mono
            else:
                body = f"{F.render(mag)}*{mono}"
            if i == 0:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)


def normal_form(f: Polynomial, divisors: Sequence[Polynomial]) -> Polynomial:
    """Remainder of f under multivariate division by the list of divisors.

    Deterministic: the greatest reducible monomial is reduced first, using the
    first divisor in list order whose leading monomial divides it.
    """
    F = f.field
    for g in divisors:
        f._check_compatible(g)
        if not g:
            raise LexpointError("zero divisor in normal_form")
    lead = [(g.lm(), g.lc(), g) for g in divisors]
    work = dict(f.terms)
    remainder: dict = {}
    while work:
        m = max(work, key=lex_key)
        c = work.pop(m)
        for lm_g, lc_g, g in lead:
            if monomial_divides(lm_g, m):
                q = F.div(c, lc_g)
                shift = monomial_div(m, lm_g)
                for mg, cg in g.terms.items():
                    if mg == lm_g:
                        continue
                    key = monomial_mul(mg, shift)
                    s = F.sub(work.get(key, F.zero()), F.mul(q, cg))
                    if s:
                        work[key] = s
                    else:
                        work.pop(key, None)
                break
        else:
            remainder[m] = c
    return Polynomial(F, f.nvars, remainder)


def exact_divide(f: Polynomial, g: Polynomial) -> Optional[Polynomial]:
    """Quotient f/g when g divides f exactly, else None."""
    if not g:
        raise LexpointError("division by the zero polynomial")
    f._check_compatible(g)
    F = f.field
    lm_g, lc_g = g.lt()
    quo: dict = {}
    work = dict(f.terms)
    while work:
        m = max(work, key=lex_key)
        if not monomial_divides(lm_g, m):
            return None
        c = F.div(work[m], lc_g)
        shift = monomial_div(m, lm_g)
        quo[shift] = c
        for mg, cg in g.terms.items():
            key = monomial_mul(mg, shift)
            s = F.sub(work.get(key, F.zero()), F.mul(c, cg))
            if s:
                work[key] = s
            else:
                work.pop(key, None)
    return Polynomial(F, f.nvars, quo)


def product_of_linear(field: Field, nvars: int, var: int,
                      roots: Iterable[Scalar]) -> Polynomial:
    """prod (x_{var+1} - r) over the given roots, as an nvars polynomial."""
    coeffs = [field.one()]
    for r in roots:
        nr = field.neg(r)
        nxt = [field.zero()] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] = field.add(nxt[k + 1], c)
            nxt[k] = field.add(nxt[k], field.mul(c, nr))
        coeffs = nxt
    return Polynomial.univariate(field, nvars, var, coeffs)
