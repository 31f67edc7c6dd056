"""Assembly of the minimal lex Groebner basis of a vanishing ideal.

The basis of an n-variable point set is the union of one interpolated
generator per index record with the (embedded) basis of the projected point
set in one variable less.  Reduction to the unique reduced basis and the
standard-monomial staircase live here too.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import InputError, LexpointError, NonZeroDimensional
from .field import Field
from .points import PointSet
from .poly import (Monomial, Polynomial, lex_key, monomial_divides,
                   normal_form, product_of_linear)
from .decomp import generator_records
from .interp import build_generator

MINIMAL = "minimal"
REDUCED = "reduced"


@dataclass(frozen=True)
class GroebnerBasis:
    nvars: int
    field: Field
    polys: Tuple[Polynomial, ...]
    flavor: str

    def __post_init__(self):
        if self.flavor not in (MINIMAL, REDUCED):
            raise LexpointError(f"unknown basis flavor {self.flavor!r}")
        lms = []
        for p in self.polys:
            if p.nvars != self.nvars or p.field != self.field:
                raise LexpointError("basis polynomial in the wrong ring")
            if not p or p.lc() != self.field.one():
                raise LexpointError("basis polynomials must be monic")
            lms.append(p.lm())
        if lms != sorted(lms, key=lex_key):
            raise LexpointError("basis polynomials must be sorted by leading monomial")
        for i, a in enumerate(lms):
            for j, b in enumerate(lms):
                if i != j and monomial_divides(a, b):
                    raise LexpointError(
                        f"leading monomial {a} divides {b}: basis not minimal")

    def leading_monomials(self) -> List[Monomial]:
        return [p.lm() for p in self.polys]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)


def _sorted_by_lm(polys: Sequence[Polynomial]) -> Tuple[Polynomial, ...]:
    return tuple(sorted(polys, key=lambda p: lex_key(p.lm())))


def groebner_tower(V: PointSet, jobs: int = 1) -> List[GroebnerBasis]:
    """Minimal bases of all projections: entry t-1 is the basis at level t."""
    if not V.points:
        raise InputError("empty point set has no Groebner basis")
    field = V.field
    p1 = V.project(1)
    base = product_of_linear(field, 1, 0, [p[0] for p in p1.points]).monic()
    tower = [GroebnerBasis(1, field, (base,), MINIMAL)]
    for m in range(2, V.dim + 1):
        pm = V.project(m)
        records = generator_records(pm)
        if jobs > 1 and len(records) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                gens = list(pool.map(build_generator, [pm] * len(records), records))
        else:
            gens = [build_generator(pm, rec) for rec in records]
        lower = [p.embed(m) for p in tower[-1].polys]
        tower.append(GroebnerBasis(m, field, _sorted_by_lm(gens + lower), MINIMAL))
    return tower


def groebner_basis(V: PointSet, jobs: int = 1) -> GroebnerBasis:
    """Minimal monic lex Groebner basis of the vanishing ideal of V."""
    return groebner_tower(V, jobs=jobs)[-1]


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced basis: every tail reduced against the other elements."""
    polys = list(gb.polys)
    reduced = []
    for i, g in enumerate(polys):
        others = polys[:i] + polys[i + 1:]
        reduced.append(normal_form(g, others) if others else g)
    return GroebnerBasis(gb.nvars, gb.field, _sorted_by_lm(reduced), REDUCED)


def standard_monomials(gb: GroebnerBasis) -> List[Monomial]:
    """Monomials outside the leading-term ideal, ascending in lex order."""
    n = gb.nvars
    lms = gb.leading_monomials()
    for var in range(n):
        if not any(m[var] and all(e == 0 for k, e in enumerate(m) if k != var)
                   for m in lms):
            raise NonZeroDimensional(
                f"no pure power of x{var + 1} among the leading monomials")
    root = (0,) * n
    if any(m == root for m in lms):
        return []
    std = []
    seen = {root}
    queue = [root]
    while queue:
        m = queue.pop()
        if any(monomial_divides(lm, m) for lm in lms):
            continue
        std.append(m)
        for var in range(n):
            up = m[:var] + (m[var] + 1,) + m[var + 1:]
            if up not in seen:
                seen.add(up)
                queue.append(up)
    return sorted(std, key=lex_key)
