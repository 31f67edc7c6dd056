"""Finite point sets with k-rational coordinates, projections and fibers.

Point order is preserved from the input but is never semantically relevant;
equality of point sets ignores order.
"""

from __future__ import annotations

import json
import warnings
from typing import Sequence, Union

from .errors import (ArityMismatch, DuplicatePoint, InputError,
                     LevelOutOfRange, SmallFieldWarning)
from .field import Field, Scalar, field_from_spec, parse_scalar

Point = tuple  # tuple[Scalar, ...]


class PointSet:
    __slots__ = ("field", "dim", "points")

    def __init__(self, field: Field, dim: int, points: Sequence[Point]):
        pts = []
        seen = set()
        for p in points:
            p = tuple(p)
            if len(p) != dim:
                raise ArityMismatch(f"point {p} does not have {dim} coordinates")
            if p in seen:
                raise DuplicatePoint(f"duplicate point {p}")
            seen.add(p)
            pts.append(p)
        self.field = field
        self.dim = dim
        self.points = tuple(pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in set(self.points)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PointSet) and self.field == other.field
                and self.dim == other.dim
                and frozenset(self.points) == frozenset(other.points))

    def __hash__(self) -> int:
        return hash((self.field, self.dim, frozenset(self.points)))

    def __repr__(self) -> str:
        return f"PointSet({self.field}, dim={self.dim}, {len(self)} points)"

    def project(self, level: int) -> "PointSet":
        """Forget all but the first `level` coordinates, dropping duplicates."""
        if not 1 <= level <= self.dim:
            raise LevelOutOfRange(f"projection level {level} outside [1, {self.dim}]")
        seen = {}
        for p in self.points:
            seen.setdefault(p[:level], None)
        return PointSet(self.field, level, list(seen))

    def fiber(self, alpha: Sequence[Scalar]) -> list:
        """Points whose first len(alpha) = dim - 1 coordinates equal alpha."""
        alpha = tuple(alpha)
        if len(alpha) != self.dim - 1:
            raise ArityMismatch(
                f"fiber prefix has {len(alpha)} coords, expected {self.dim - 1}")
        return [p for p in self.points if p[:-1] == alpha]

    def restrict(self, keep) -> "PointSet":
        """Subset of points (given as an iterable), preserving input order."""
        keep = set(tuple(p) for p in keep)
        return PointSet(self.field, self.dim, [p for p in self.points if p in keep])

    def difference(self, other: "PointSet") -> "PointSet":
        drop = set(other.points)
        return PointSet(self.field, self.dim,
                        [p for p in self.points if p not in drop])


def project(ps: PointSet, level: int) -> PointSet:
    return ps.project(level)


def fiber(ps: PointSet, alpha: Sequence[Scalar]) -> list:
    return ps.fiber(alpha)


def load_point_set(document: Union[str, dict]) -> PointSet:
    """Parse and validate the JSON point-set document.

    Schema: {"field": "Q" | "Fp:<p>", "n": <int>, "points": [["<scalar>", ...], ...]}
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise InputError("point-set document must be a JSON object")
    for key in ("field", "n", "points"):
        if key not in document:
            raise InputError(f"missing key {key!r} in point-set document")
    field = field_from_spec(document["field"])
    n = document["n"]
    if not isinstance(n, int) or n < 1:
        raise InputError(f"bad variable count: {n!r}")
    raw = document["points"]
    if not isinstance(raw, list) or not raw:
        raise InputError("'points' must be a nonempty list")
    points = []
    for entry in raw:
        if not isinstance(entry, list) or len(entry) != n:
            raise ArityMismatch(f"point {entry!r} does not have {n} coordinates")
        points.append(tuple(parse_scalar(str(c), field) for c in entry))
    ps = PointSet(field, n, points)
    if field.kind == "Fp" and field.p <= len(ps):
        warnings.warn(
            f"field GF({field.p}) has no more elements than the point count "
            f"{len(ps)}; the degree bound d(I) < |k| fails",
            SmallFieldWarning, stacklevel=2)
    return ps


def point_set_to_json(ps: PointSet) -> dict:
    return {
        "field": ps.field.spec_string(),
        "n": ps.dim,
        "points": [[ps.field.render(c) for c in p] for p in ps.points],
    }


def render_point(field: Field, p: Point) -> list:
    return [field.render(c) for c in p]
