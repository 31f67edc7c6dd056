"""Iterated Lagrange interpolation and the per-index basis generators.

The operator interpolates a polynomial-valued function given on the chains
through a family of supports U_1, ..., U_t, with excess families U'_1, ...,
U'_t contributing vanishing factors and padding exponents.  Two
implementations are kept: the production recursion (shared univariate bases
per prefix) and an expanded sum over chains used as a cross-check.

A prefix chain may have no extension inside the next support ("dead chain").
The plain empty-support interpolation would return 0 there, which silently
breaks the leading-monomial telescoping; when a reference monomial is
supplied, dead chains are padded with it instead.  All points over a dead
prefix project into the excess family, so the vanishing factors already
cover them and the stand-in is sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ArityMismatch, FieldMismatch, InputError, InterpolationError
from .field import Field, Scalar
from .points import Point, PointSet
from .poly import (Monomial, Polynomial, exact_divide, normal_form,
                   product_of_linear)
from .decomp import IndexRecord


@dataclass(frozen=True)
class LagrangeBasis:
    support: Tuple[Scalar, ...]
    polys: Dict[Scalar, Polynomial]     # univariate, nvars = 1


def _lagrange_coeff_lists(field: Field, support: Sequence[Scalar]):
    """Coefficient lists (ascending degree) of the Lagrange basis on support."""
    u = len(support)
    if u != len(set(support)):
        raise InputError("duplicate support values in Lagrange basis")
    if u == 0:
        raise InputError("empty Lagrange support")
    one, zero = field.one(), field.zero()
    # master = prod (x - a), ascending coefficients
    master = [one]
    for a in support:
        na = field.neg(a)
        nxt = [zero] * (len(master) + 1)
        for k, c in enumerate(master):
            nxt[k + 1] = field.add(nxt[k + 1], c)
            nxt[k] = field.add(nxt[k], field.mul(c, na))
        master = nxt
    out = {}
    for a in support:
        # synthetic division: master = (x - a) * q
        q = [zero] * u
        q[u - 1] = master[u]
        for k in range(u - 1, 0, -1):
            q[k - 1] = field.add(master[k], field.mul(a, q[k]))
        denom = zero
        for c in reversed(q):
            denom = field.add(field.mul(denom, a), c)
        inv = field.invert(denom)
        out[a] = [field.mul(c, inv) for c in q]
    return out


def lagrange_basis(field: Field, support: Sequence[Scalar]) -> LagrangeBasis:
    """The univariate Lagrange basis: l_a(b) = 1 if a == b else 0."""
    coeffs = _lagrange_coeff_lists(field, support)
    polys = {a: Polynomial.univariate(field, 1, 0, cs) for a, cs in coeffs.items()}
    return LagrangeBasis(tuple(support), polys)


class InterpFamilies:
    """Supports U_1..U_t and excess sets U'_1..U'_t, with U_i and U'_i disjoint."""

    __slots__ = ("supports", "excess", "field", "depth")

    def __init__(self, supports: Sequence[PointSet], excess: Sequence[PointSet]):
        if len(supports) != len(excess) or not supports:
            raise InputError("supports and excess families must pair up")
        field = supports[0].field
        for i, (u, up) in enumerate(zip(supports, excess), start=1):
            if u.dim != i or up.dim != i:
                raise ArityMismatch(f"family at level {i} has wrong dimension")
            if u.field != field or up.field != field:
                raise FieldMismatch("mixed fields in interpolation families")
            if set(u.points) & set(up.points):
                raise InputError(f"support and excess overlap at level {i}")
        self.supports = tuple(supports)
        self.excess = tuple(excess)
        self.field = field
        self.depth = len(supports)

    def extensions(self, level: int) -> Dict[Point, List[Scalar]]:
        """Last coordinates of support points grouped by length-(level-1) prefix."""
        out: Dict[Point, List[Scalar]] = {}
        for p in self.supports[level - 1].points:
            out.setdefault(p[:-1], []).append(p[-1])
        return out

    def excess_extensions(self, level: int) -> Dict[Point, List[Scalar]]:
        out: Dict[Point, List[Scalar]] = {}
        for p in self.excess[level - 1].points:
            out.setdefault(p[:-1], []).append(p[-1])
        return out

    def chains(self, upto: Optional[int] = None) -> List[Point]:
        """All prefixes (a_1..a_k) with every partial prefix inside its support."""
        t = self.depth if upto is None else upto
        exts = [self.extensions(k) for k in range(1, t + 1)]
        out: List[Point] = []

        def walk(k: int, prefix: Point):
            if k > t:
                out.append(prefix)
                return
            for b in exts[k - 1].get(prefix, []):
                walk(k + 1, prefix + (b,))

        walk(1, ())
        return out

    def degrees(self) -> Tuple[int, ...]:
        """d_k = max number of excess extensions over the live (k-1)-chains."""
        ds = []
        for k in range(1, self.depth + 1):
            exc = self.excess_extensions(k)
            prefixes = self.chains(upto=k - 1)
            ds.append(max((len(exc.get(a, [])) for a in prefixes), default=0))
        return tuple(ds)


def _check_values(fams: InterpFamilies, values, nvars: int,
                  reference_lm: Optional[Monomial]):
    field = fams.field
    t = fams.depth
    for chain in fams.chains():
        if chain not in values:
            raise InterpolationError(f"no value supplied for prefix {chain}")
        v = values[chain]
        if v.nvars != nvars or v.field != field:
            raise InterpolationError("value polynomial in the wrong ring")
        for m in v.terms:
            if any(m[:t]):
                raise InterpolationError(
                    "value polynomial uses an interpolation variable")
        if reference_lm is not None:
            if not v or v.lm() != reference_lm or v.lc() != field.one():
                raise InterpolationError(
                    "values must be monic with the reference leading monomial")


def _reference_monomials(ds: Tuple[int, ...], reference_lm: Optional[Monomial],
                         nvars: int) -> Optional[List[Monomial]]:
    """ref[k] = X_{k+1}^{d_{k+1}} ... X_t^{d_t} * reference, for k = 1..t."""
    if reference_lm is None:
        return None
    t = len(ds)
    refs: List[Monomial] = [()] * (t + 1)
    refs[t] = tuple(reference_lm)
    for k in range(t - 1, 0, -1):
        e = list(refs[k + 1])
        e[k] = ds[k]            # exponent of X_{k+1}
        refs[k] = tuple(e)
    return refs


def _resolve_degrees(fams: InterpFamilies,
                     degrees: Optional[Sequence[int]]) -> Tuple[int, ...]:
    computed = fams.degrees()
    if degrees is None:
        return computed
    degrees = tuple(degrees)
    if len(degrees) != fams.depth or any(
            d < c for d, c in zip(degrees, computed)):
        raise InterpolationError(
            f"padding degrees {degrees} below the family maxima {computed}")
    return degrees


def iterated_interpolate(fams: InterpFamilies, values: Dict[Point, Polynomial],
                         reference_lm: Optional[Monomial] = None,
                         degrees: Optional[Sequence[int]] = None,
                         nvars: Optional[int] = None) -> Polynomial:
    """Recursive form: each level interpolates the level below along one variable.

    `degrees` overrides the per-level padding exponents; sub-interpolations
    of a larger construction must inherit the enclosing degrees.  `values`
    may be empty (every chain dead) only when a reference monomial is given.
    """
    if not values and (reference_lm is None or nvars is None):
        raise InterpolationError("no values to interpolate")
    if nvars is None:
        nvars = next(iter(values.values())).nvars
    _check_values(fams, values, nvars, reference_lm)
    field = fams.field
    t = fams.depth
    ds = _resolve_degrees(fams, degrees)
    refs = _reference_monomials(ds, reference_lm, nvars)
    exts = [fams.extensions(k) for k in range(1, t + 1)]
    excs = [fams.excess_extensions(k) for k in range(1, t + 1)]
    basis_cache: Dict[Tuple[Scalar, ...], Dict[Scalar, list]] = {}

    def univ(support: Tuple[Scalar, ...]) -> Dict[Scalar, list]:
        if support not in basis_cache:
            basis_cache[support] = _lagrange_coeff_lists(field, support)
        return basis_cache[support]

    def level_factor(k: int, prefix: Point, core: Polynomial) -> Polynomial:
        exc = excs[k - 1].get(prefix, [])
        pad = ds[k - 1] - len(exc)
        out = core
        if exc:
            out = out * product_of_linear(field, nvars, k - 1, exc)
        if pad:
            e = [0] * nvars
            e[k - 1] = pad
            out = out.mul_term(field.one(), tuple(e))
        return out

    def build(k: int, prefix: Point) -> Polynomial:
        support = tuple(exts[k - 1].get(prefix, []))
        if not support:
            if refs is None:
                core = Polynomial.zero(field, nvars)
            else:
                core = Polynomial(field, nvars, {refs[k]: field.one()})
            return level_factor(k, prefix, core)
        basis = univ(support)
        core = Polynomial.zero(field, nvars)
        for b in support:
            sub = values[prefix + (b,)] if k == t else build(k + 1, prefix + (b,))
            ell = Polynomial.univariate(field, nvars, k - 1, basis[b])
            core = core + ell * sub
        return level_factor(k, prefix, core)

    return build(1, ())


def interpolate_expanded(fams: InterpFamilies, values: Dict[Point, Polynomial],
                         reference_lm: Optional[Monomial] = None,
                         degrees: Optional[Sequence[int]] = None,
                         nvars: Optional[int] = None) -> Polynomial:
    """Expanded form: one explicit term per chain, summed directly."""
    if not values and (reference_lm is None or nvars is None):
        raise InterpolationError("no values to interpolate")
    if nvars is None:
        nvars = next(iter(values.values())).nvars
    _check_values(fams, values, nvars, reference_lm)
    field = fams.field
    t = fams.depth
    ds = _resolve_degrees(fams, degrees)
    refs = _reference_monomials(ds, reference_lm, nvars)
    exts = [fams.extensions(k) for k in range(1, t + 1)]
    excs = [fams.excess_extensions(k) for k in range(1, t + 1)]
    basis_cache: Dict[Tuple[Scalar, ...], Dict[Scalar, list]] = {}

    def univ(support):
        if support not in basis_cache:
            basis_cache[support] = _lagrange_coeff_lists(field, support)
        return basis_cache[support]

    total = Polynomial.zero(field, nvars)

    def pad_poly(k: int, prefix: Point) -> Polynomial:
        exc = excs[k - 1].get(prefix, [])
        pad = ds[k - 1] - len(exc)
        out = Polynomial.one(field, nvars)
        if exc:
            out = out * product_of_linear(field, nvars, k - 1, exc)
        if pad:
            e = [0] * nvars
            e[k - 1] = pad
            out = out.mul_term(field.one(), tuple(e))
        return out

    def walk(k: int, prefix: Point, acc: Polynomial):
        nonlocal total
        support = tuple(exts[k - 1].get(prefix, []))
        factor = pad_poly(k, prefix)
        if not support:
            if refs is not None:
                ref = Polynomial(field, nvars, {refs[k]: field.one()})
                total = total + acc * factor * ref
            return
        basis = univ(support)
        for b in support:
            ell = Polynomial.univariate(field, nvars, k - 1, basis[b])
            piece = acc * factor * ell
            if k == t:
                total = total + piece * values[prefix + (b,)]
            else:
                walk(k + 1, prefix + (b,), piece)

    walk(1, (), Polynomial.one(field, nvars))
    return total


def fiber_value(V: PointSet, alpha: Point, i_n: int) -> Polynomial:
    """X_n-padded product over the fiber of V above the (n-1)-prefix alpha."""
    field, n = V.field, V.dim
    last = [p[-1] for p in V.points if p[: n - 1] == tuple(alpha)]
    if len(last) > i_n:
        raise InterpolationError(
            f"fiber over {tuple(alpha)} larger than the index {i_n}")
    prod = product_of_linear(field, n, n - 1, last)
    pad = i_n - len(last)
    if pad:
        e = [0] * n
        e[n - 1] = pad
        prod = prod.mul_term(field.one(), tuple(e))
    return prod


def generator_families(rec: IndexRecord) -> InterpFamilies:
    return InterpFamilies(rec.s_families, rec.s_prime_families)


def build_generator(V: PointSet, rec: IndexRecord, *,
                    expanded: bool = False) -> Polynomial:
    """The monic basis generator attached to one index record.

    Leading monomial is X^idx; the polynomial vanishes on all of V.
    """
    n = V.dim
    if rec.block.field != V.field or rec.block.dim != n:
        raise FieldMismatch("record does not belong to this point set")
    idx = rec.idx
    fams = generator_families(rec)
    ds = fams.degrees()
    if ds != tuple(idx[: n - 1]):
        raise InterpolationError(
            f"family degrees {ds} disagree with the index {idx}")
    i_n = idx[-1]
    values = {chain: fiber_value(V, chain, i_n) for chain in fams.chains()}
    ref = (0,) * (n - 1) + (i_n,)
    op = interpolate_expanded if expanded else iterated_interpolate
    g = op(fams, values, reference_lm=ref)
    if not g or g.lm() != tuple(idx) or g.lc() != V.field.one():
        raise InterpolationError(
            f"generator for {idx} came out with leading term "
            f"{g.lt() if g else 0}")
    return g


def evaluation_cofactor(rec: IndexRecord, alpha: Point, t: int) -> Scalar:
    """The scalar factor relating g(alpha, X) to the prefix interpolant.

    Product over j <= t of alpha_j^(i_j - |S'_j[prefix]|) times the
    differences to the excess extensions.  Zero exactly when some prefix of
    alpha falls into an excess family or hits a padded zero coordinate.
    """
    field = rec.block.field
    if not 1 <= t <= len(alpha):
        raise ArityMismatch("cofactor level exceeds the prefix length")
    out = field.one()
    for j in range(1, t + 1):
        prefix = tuple(alpha[: j - 1])
        exc = [p[-1] for p in rec.s_prime_families[j - 1].points
               if p[:-1] == prefix]
        pad = rec.idx[j - 1] - len(exc)
        aj = alpha[j - 1]
        if pad:
            out = field.mul(out, field.pow(aj, pad))
        for b in exc:
            out = field.mul(out, field.sub(aj, b))
        # a zero factor always precedes any level with an excess overshoot,
        # where the pad exponent would go negative
        if not out:
            return out
    return out


def prefix_interpolant(V: PointSet, rec: IndexRecord, alpha: Point) -> Polynomial:
    """Interpolant of the levels above t for a fixed live prefix alpha.

    Built from the suffix families (points of S_j / S'_j extending alpha with
    the first t coordinates dropped), in the ring of the remaining n - t
    variables.  The padding degrees are inherited from the record so the
    result matches what the full construction computes under that prefix.
    """
    n = V.dim
    t = len(alpha)
    field = V.field
    alpha = tuple(alpha)
    if t >= n:
        raise ArityMismatch("prefix must leave at least one free variable")
    m = n - t
    i_n = rec.idx[-1]

    def shifted_fiber(prefix: Point) -> Polynomial:
        last = [p[-1] for p in V.points if p[: n - 1] == prefix]
        if len(last) > i_n:
            raise InterpolationError(
                f"fiber over {prefix} larger than the index {i_n}")
        prod = product_of_linear(field, m, m - 1, last)
        pad = i_n - len(last)
        if pad:
            e = [0] * m
            e[m - 1] = pad
            prod = prod.mul_term(field.one(), tuple(e))
        return prod

    if t == n - 1:
        return shifted_fiber(alpha)

    def chop(ps: PointSet, level: int) -> PointSet:
        pts = [p[t:] for p in ps.points if p[:t] == alpha]
        return PointSet(field, level - t, pts)

    sub_supports = [chop(rec.s_families[j - 1], j) for j in range(t + 1, n)]
    sub_excess = [chop(rec.s_prime_families[j - 1], j) for j in range(t + 1, n)]
    fams = InterpFamilies(sub_supports, sub_excess)
    values = {chain: shifted_fiber(alpha + chain) for chain in fams.chains()}
    ref = (0,) * (m - 1) + (i_n,)
    return iterated_interpolate(fams, values, reference_lm=ref,
                                degrees=rec.idx[t: n - 1], nvars=m)


@dataclass
class StructureReport:
    divisibility: bool
    membership: Dict[int, bool]
    coefficient_membership: Dict[Tuple[int, int], bool]

    @property
    def passed(self) -> bool:
        return (self.divisibility and all(self.membership.values())
                and all(self.coefficient_membership.values()))


def structure_certificate(g: Polynomial, rec: IndexRecord,
                          lower_gbs: Sequence) -> StructureReport:
    """Certify the structural containments of one generator.

    lower_gbs[t-1] must be a Groebner basis of the ideal of the level-t
    projection, for t = 1 .. n-1.
    """
    from .oracle import buchberger

    n = g.nvars
    if len(lower_gbs) < n - 1:
        raise InputError("need lower bases up to level n-1")
    lc1, _ = g.leading_data(1)
    divisibility = exact_divide(g, lc1.embed(n)) is not None
    membership: Dict[int, bool] = {}
    coefficient_membership: Dict[Tuple[int, int], bool] = {}
    for t in range(2, n):
        lct, _ = g.leading_data(t)
        gens = [lct.embed(n)] + [p.embed(n) for p in lower_gbs[t - 2].polys]
        basis = buchberger(gens).polys
        membership[t] = not normal_form(g, basis)
        for tp in range(t + 1, n):
            lctp, _ = g.leading_data(tp)
            coefficient_membership[(t, tp)] = not normal_form(
                lctp.embed(n), basis)
    return StructureReport(divisibility, membership, coefficient_membership)
