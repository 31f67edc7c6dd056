"""Consumers of the structure theory: specialization and triangular cells.

Specializing the first variables of a basis must commute with taking leading
terms; the report records the vanishing pattern per polynomial and compares
the surviving images against an independently computed fiber basis.

Triangular decomposition repeatedly peels the minimal-index block: the block
lifts the cells of its projection (fibers over a block prefix are
equi-cardinal), the complement recurses at full dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import ArityMismatch, FieldMismatch, InputError, LevelOutOfRange
from .field import Scalar
from .points import Point, PointSet
from .poly import Polynomial, lex_key, monomial_divides, product_of_linear
from .decomp import enumerate_indices
from .gblex import GroebnerBasis, groebner_basis, reduce_basis
from .interp import InterpFamilies, iterated_interpolate


@dataclass
class SpecializationReport:
    level: int
    alpha: Tuple[Scalar, ...]
    per_polynomial: List[Tuple[bool, bool]]   # (LT_level vanishes, image vanishes)
    stable: bool
    fiber_gb_match: Optional[bool]
    unit_ideal: Optional[bool]

    def to_json(self, field) -> dict:
        return {
            "level": self.level,
            "alpha": [field.render(a) for a in self.alpha],
            "perPolynomial": [
                {"ltVanishes": lt, "imageVanishes": img}
                for lt, img in self.per_polynomial
            ],
            "stable": self.stable,
            "fiberGBMatch": self.fiber_gb_match,
            "unitIdeal": self.unit_ideal,
        }


def specialize(gb: GroebnerBasis, alpha: Sequence[Scalar], level: int,
               V: Optional[PointSet] = None):
    """Substitute alpha for the first `level` variables of every basis element.

    When the source point set is supplied and alpha is one of its projected
    points, the surviving images are compared against the basis of the fiber.
    """
    n = gb.nvars
    if not 1 <= level <= n - 1:
        raise LevelOutOfRange(f"specialization level {level} outside [1, {n - 1}]")
    alpha = tuple(alpha)
    if len(alpha) != level:
        raise ArityMismatch(f"alpha needs {level} coordinates")
    if V is not None and (V.field != gb.field or V.dim != n):
        raise FieldMismatch("point set does not match the basis")
    field = gb.field

    images = [g.specialize_prefix(alpha) for g in gb.polys]
    per = []
    for g, img in zip(gb.polys, images):
        lc_t, _ = g.leading_data(level)
        lt_vanishes = not lc_t.evaluate(alpha)
        per.append((lt_vanishes, not img))
    stable = all(a == b for a, b in per)

    fiber_gb_match: Optional[bool] = None
    unit_ideal: Optional[bool] = None
    if V is not None:
        suffixes = [p[level:] for p in V.points if p[:level] == alpha]
        if suffixes:
            fiber_ps = PointSet(field, n - level, suffixes)
            fiber_gb = reduce_basis(groebner_basis(fiber_ps))
            nonzero = [img for img in images if img]
            vanish = all(not img.evaluate(s) for img in nonzero for s in suffixes)
            lms = sorted({img.lm() for img in nonzero}, key=lex_key)
            minimal_lms = [m for m in lms
                           if not any(monomial_divides(o, m) and o != m
                                      for o in lms)]
            fiber_gb_match = (vanish and
                              minimal_lms == fiber_gb.leading_monomials())
        else:
            zeros = (0,) * (n - level)
            unit_ideal = any(
                img and set(img.terms) == {zeros} for img in images)
    return images, SpecializationReport(
        level=level, alpha=alpha, per_polynomial=per, stable=stable,
        fiber_gb_match=fiber_gb_match, unit_ideal=unit_ideal)


@dataclass
class TriangularCell:
    points: PointSet
    tower: Tuple[Polynomial, ...]        # n polynomials, all in n variables
    main_degrees: Tuple[int, ...]

    def to_json(self) -> dict:
        from .points import point_set_to_json
        return {
            "points": point_set_to_json(self.points)["points"],
            "tower": [t.render() for t in self.tower],
            "degrees": list(self.main_degrees),
        }


def _lift_cells(W: PointSet, i_n: int) -> List[TriangularCell]:
    """Cells of a single-block set: lift each cell of the projection."""
    field, n = W.field, W.dim
    cells = []
    fiber_last = {}
    for p in W.points:
        fiber_last.setdefault(p[: n - 1], []).append(p[-1])
    for last in fiber_last.values():
        if len(last) != i_n:
            raise InputError("block fibers are not equi-cardinal")
    for sub in triangular_decompose(W.project(n - 1)):
        base = set(sub.points.points)
        lifted = [p for p in W.points if p[: n - 1] in base]
        supports = [sub.points.project(j) for j in range(1, n - 1)]
        supports.append(sub.points)
        empties = [PointSet(field, j, []) for j in range(1, n)]
        fams = InterpFamilies(supports, empties)
        values = {
            alpha: product_of_linear(field, n, n - 1, fiber_last[alpha])
            for alpha in sub.points.points
        }
        ref = (0,) * (n - 1) + (i_n,)
        t_n = iterated_interpolate(fams, values, reference_lm=ref)
        tower = tuple(t.embed(n) for t in sub.tower) + (t_n,)
        cells.append(TriangularCell(
            points=PointSet(field, n, lifted),
            tower=tower,
            main_degrees=sub.main_degrees + (i_n,),
        ))
    return cells


def triangular_decompose(V: PointSet) -> List[TriangularCell]:
    """Partition V into cells whose towers have pure-power leading monomials."""
    if not V.points:
        raise InputError("empty point set has no triangular decomposition")
    field, n = V.field, V.dim
    if n == 1:
        t1 = product_of_linear(field, 1, 0, [p[0] for p in V.points])
        return [TriangularCell(V, (t1,), (len(V),))]
    records = enumerate_indices(V).records
    rec = records[0]
    cells = _lift_cells(rec.block, rec.idx[-1])
    if len(records) > 1:
        cells.extend(triangular_decompose(V.difference(rec.block)))
    return cells
