"""Independent correctness oracles.

Buchberger-Moller builds the reduced basis of a vanishing ideal by linear
algebra over point evaluations; Buchberger completion and the S-polynomial
test certify Groebner bases from first principles.  These exist to be
obviously correct, not fast.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import InputError
from .field import Field, Scalar
from .points import PointSet
from .poly import (Monomial, Polynomial, lex_key, monomial_div,
                   monomial_divides, monomial_lcm, monomial_mul, normal_form)
from .gblex import GroebnerBasis, REDUCED, _sorted_by_lm


@dataclass(frozen=True)
class EvaluationMatrix:
    rows: Tuple[Tuple[Scalar, ...], ...]    # points
    cols: Tuple[Monomial, ...]              # ascending lex
    entries: Tuple[Tuple[Scalar, ...], ...]  # entries[r][c] = cols[c] at rows[r]


def evaluate_monomial(field: Field, mono: Monomial, point: Sequence[Scalar]) -> Scalar:
    v = field.one()
    for x, e in zip(point, mono):
        if e:
            v = field.mul(v, field.pow(x, e))
    return v


def evaluation_matrix(V: PointSet, monomials: Sequence[Monomial]) -> EvaluationMatrix:
    cols = tuple(sorted(monomials, key=lex_key))
    entries = tuple(
        tuple(evaluate_monomial(V.field, m, p) for m in cols) for p in V.points)
    return EvaluationMatrix(tuple(V.points), cols, entries)


def buchberger_moller(V: PointSet) -> GroebnerBasis:
    """Reduced lex basis of I(V) by an ascending monomial scan.

    A candidate whose evaluation vector depends on those of the accepted
    standard monomials yields a basis polynomial; an independent one becomes
    standard and its variable multiples become new candidates.
    """
    if not V.points:
        raise InputError("empty point set has no vanishing ideal basis")
    field, n = V.field, V.dim
    pts = V.points
    zero, one = field.zero(), field.one()

    root = (0,) * n
    heap = [(lex_key(root), root)]
    seen = {root}
    basis: List[Polynomial] = []
    basis_lms: List[Monomial] = []
    rows: List[Tuple[int, List[Scalar], dict]] = []  # (pivot, vector, combo)
    std_count = 0

    while heap:
        _, m = heapq.heappop(heap)
        if any(monomial_divides(lm, m) for lm in basis_lms):
            continue
        vec = [evaluate_monomial(field, m, p) for p in pts]
        combo = {m: one}
        for pivot, rvec, rcombo in rows:
            c = vec[pivot]
            if not c:
                continue
            fac = field.div(c, rvec[pivot])
            for i, rv in enumerate(rvec):
                if rv:
                    vec[i] = field.sub(vec[i], field.mul(fac, rv))
            for mm, rc in rcombo.items():
                s = field.sub(combo.get(mm, zero), field.mul(fac, rc))
                if s:
                    combo[mm] = s
                else:
                    combo.pop(mm, None)
        pivot = next((i for i, c in enumerate(vec) if c), None)
        if pivot is None:
            poly = Polynomial(field, n, combo)
            basis.append(poly)
            basis_lms.append(m)
        else:
            rows.append((pivot, vec, combo))
            std_count += 1
            for var in range(n):
                up = m[:var] + (m[var] + 1,) + m[var + 1:]
                if up not in seen:
                    seen.add(up)
                    heapq.heappush(heap, (lex_key(up), up))

    if std_count != len(pts):
        raise InputError(
            f"evaluation rank {std_count} disagrees with point count {len(pts)}")
    return GroebnerBasis(n, field, _sorted_by_lm(basis), REDUCED)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lm_f, lc_f = f.lt()
    lm_g, lc_g = g.lt()
    lcm = monomial_lcm(lm_f, lm_g)
    F = f.field
    left = f.mul_term(F.invert(lc_f), monomial_div(lcm, lm_f))
    right = g.mul_term(F.invert(lc_g), monomial_div(lcm, lm_g))
    return left - right


def buchberger(F: Sequence[Polynomial]) -> GroebnerBasis:
    """Reduced lex basis of the ideal generated by F, by S-polynomial completion."""
    gens = [f.monic() for f in F if f]
    if not gens:
        raise InputError("Buchberger completion needs a nonzero generator")
    field, n = gens[0].field, gens[0].nvars
    G = list(gens)
    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    while pairs:
        i, j = min(pairs, key=lambda p: lex_key(
            monomial_lcm(G[p[0]].lm(), G[p[1]].lm())))
        pairs.discard((i, j))
        lm_i, lm_j = G[i].lm(), G[j].lm()
        if monomial_lcm(lm_i, lm_j) == monomial_mul(lm_i, lm_j):
            continue  # coprime leading monomials reduce to zero
        r = normal_form(s_polynomial(G[i], G[j]), G)
        if r:
            G.append(r.monic())
            k = len(G) - 1
            pairs.update((i2, k) for i2 in range(k))
    # minimize, then inter-reduce
    G.sort(key=lambda p: lex_key(p.lm()))
    minimal: List[Polynomial] = []
    for g in G:
        if not any(monomial_divides(h.lm(), g.lm()) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(normal_form(g, others).monic() if others else g)
    return GroebnerBasis(n, field, _sorted_by_lm(reduced), REDUCED)


def is_groebner_basis(polys: Sequence[Polynomial]) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    ps = [p for p in polys]
    if any(not p for p in ps):
        raise InputError("zero polynomial in Groebner test")
    for j in range(len(ps)):
        for i in range(j):
            if normal_form(s_polynomial(ps[i], ps[j]), ps):
                return False
    return True
