"""Combinatorial decomposition of a point set by iterated fiber counts.

Each level j from n down to 2 scores every point by how many "excess"
projections share its length-(j-1) prefix; the distinct scores attained on
the current block become the candidate indices i_j.  Every surviving
multi-index (i_1, ..., i_n) gets a record holding its block and the kept /
excess projection families S_j, S'_j that drive the interpolation.

Scores always count intersections with the excess family S'_j; the kept
family S_j only delimits the next level's threshold split.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import ArityMismatch, InputError, NothingToDelete
from .points import Point, PointSet


@dataclass(frozen=True)
class IndexRecord:
    idx: Tuple[int, ...]                        # (i_1, ..., i_n)
    s_families: Tuple[PointSet, ...]            # S_1 .. S_{n-1}
    s_prime_families: Tuple[PointSet, ...]      # S'_1 .. S'_{n-1}
    block: PointSet


@dataclass(frozen=True)
class Decomposition:
    source: PointSet
    records: Tuple[IndexRecord, ...]


@dataclass
class DeletionReport:
    passed: bool
    failures: List[str]


def fiber_score(sprime: PointSet, y: Sequence) -> int:
    """Number of points of sprime sharing y's first (dim(sprime) - 1) coords."""
    j = sprime.dim
    if len(y) < j - 1:
        raise ArityMismatch(f"point {tuple(y)} shorter than {j - 1} coordinates")
    prefix = tuple(y)[: j - 1]
    return sum(1 for s in sprime.points if s[: j - 1] == prefix)


def _project_points(field, pts: Sequence[Point], level: int) -> PointSet:
    seen: Dict[Point, None] = {}
    for p in pts:
        seen.setdefault(p[:level], None)
    return PointSet(field, level, list(seen))


def _prefix_counts(pts: Sequence[Point], k: int) -> Dict[Point, int]:
    counts: Dict[Point, int] = {}
    for p in pts:
        key = p[:k]
        counts[key] = counts.get(key, 0) + 1
    return counts


def level_scores(ps: PointSet, s_prime_families: Sequence[PointSet],
                 j: int) -> Dict[Point, int]:
    """Score of every point of ps at level j.

    Level dim(ps) counts full fibers of ps itself; lower levels count against
    the excess family S'_j.
    """
    if j == ps.dim:
        counts = _prefix_counts(ps.points, j - 1)
    else:
        counts = _prefix_counts(s_prime_families[j - 1].points, j - 1)
    return {p: counts.get(p[: j - 1], 0) for p in ps.points}


def enumerate_indices(V: PointSet) -> Decomposition:
    """All index records of V, ascending in (i_2, ..., i_n) with i_n dominant."""
    n = V.dim
    if n < 2:
        raise InputError("decomposition requires at least 2 variables")
    if not V.points:
        raise InputError("decomposition of an empty point set")
    field = V.field
    records: List[IndexRecord] = []

    def descend(j: int, block: List[Point], s_map: Dict[int, PointSet],
                sp_map: Dict[int, PointSet], suffix: Tuple[int, ...]):
        if j == 1:
            i_1 = len(sp_map[1])
            idx = (i_1,) + suffix
            rec = IndexRecord(
                idx=idx,
                s_families=tuple(s_map[k] for k in range(1, n)),
                s_prime_families=tuple(sp_map[k] for k in range(1, n)),
                block=PointSet(field, n, block),
            )
            records.append(rec)
            return
        scores = level_scores(V, [sp_map.get(k) for k in range(1, n)], j) \
            if j < n else level_scores(V, (), n)
        for i_j in sorted({scores[p] for p in block}):
            new_block = [p for p in block if scores[p] == i_j]
            above = [p for p in V.points if scores[p] > i_j]
            beloweq = [p for p in V.points if scores[p] <= i_j]
            s_map2 = dict(s_map)
            sp_map2 = dict(sp_map)
            s_map2[j - 1] = _project_points(field, beloweq, j - 1)
            sp_map2[j - 1] = _project_points(field, above, j - 1)
            descend(j - 1, new_block, s_map2, sp_map2, (i_j,) + suffix)

    descend(n, list(V.points), {}, {}, ())
    return Decomposition(V, tuple(records))


def families_for_index(V: PointSet, suffix: Sequence[int]) -> IndexRecord:
    """Run the construction along a prescribed (i_2, ..., i_n).

    Unlike enumerate_indices the block may come out empty; the S / S'
    families are still well defined at every level.
    """
    n = V.dim
    if n < 2:
        raise InputError("decomposition requires at least 2 variables")
    if len(suffix) != n - 1:
        raise ArityMismatch(f"index suffix needs {n - 1} entries")
    field = V.field
    s_map: Dict[int, PointSet] = {}
    sp_map: Dict[int, PointSet] = {}
    block = list(V.points)
    for j in range(n, 1, -1):
        i_j = suffix[j - 2]
        scores = level_scores(V, [sp_map.get(k) for k in range(1, n)], j) \
            if j < n else level_scores(V, (), n)
        block = [p for p in block if scores[p] == i_j]
        above = [p for p in V.points if scores[p] > i_j]
        beloweq = [p for p in V.points if scores[p] <= i_j]
        s_map[j - 1] = _project_points(field, beloweq, j - 1)
        sp_map[j - 1] = _project_points(field, above, j - 1)
    idx = (len(sp_map[1]),) + tuple(suffix)
    return IndexRecord(
        idx=idx,
        s_families=tuple(s_map[k] for k in range(1, n)),
        s_prime_families=tuple(sp_map[k] for k in range(1, n)),
        block=PointSet(field, n, block),
    )


def record_scores(V: PointSet, rec: IndexRecord, j: int) -> Dict[Point, int]:
    """Level-j scores of all points of V under the record's families."""
    return level_scores(V, rec.s_prime_families, j)


def tilde_block(V: PointSet, rec: IndexRecord, down_to: int) -> List[Point]:
    """Points whose score equals the record's index at every level >= down_to."""
    n = V.dim
    pts = list(V.points)
    for j in range(n, down_to - 1, -1):
        scores = record_scores(V, rec, j)
        pts = [p for p in pts if scores[p] == rec.idx[j - 1]]
    return pts


def excess_block(V: PointSet, rec: IndexRecord, level: int) -> List[Point]:
    """Points matching the index above `level` but exceeding it at `level`."""
    scores = record_scores(V, rec, level)
    pts = tilde_block(V, rec, level + 1) if level < V.dim else list(V.points)
    return [p for p in pts if scores[p] > rec.idx[level - 1]]


def minimal_monomial_exponents(V: PointSet) -> List[Tuple[int, ...]]:
    """Exponent vectors of the minimal monomial basis of LM(I(V)).

    Nested fiber-depth analysis: the monomials of x_n-degree d are the
    minimal monomials of the ideal of the deeper-than-d column set, pruned by
    the ideal of the at-least-d column set; degree-0 monomials recurse
    through the projection.  Works over any field since only coordinate
    equality matters.

    Note the records of enumerate_indices can miss some of these exponents:
    a depth-d column pattern may be witnessed by no point whose own column
    depth is exactly d.  Basis assembly therefore enumerates indices here.
    """
    if not V.points:
        raise InputError("empty point set")
    field = V.field
    cache: Dict[Tuple[int, frozenset], List[Tuple[int, ...]]] = {}

    def rec(ps: PointSet) -> List[Tuple[int, ...]]:
        key = (ps.dim, frozenset(ps.points))
        if key in cache:
            return cache[key]
        m = ps.dim
        if m == 1:
            out = [(len(ps),)]
        else:
            out = [e + (0,) for e in rec(ps.project(m - 1))]
            depths = _prefix_counts(ps.points, m - 1)
            for d in sorted(set(depths.values())):
                over = [a for a, c in depths.items() if c > d]
                if not over:
                    out.append((0,) * (m - 1) + (d,))
                    continue
                atleast = [a for a, c in depths.items() if c >= d]
                exclude = rec(PointSet(field, m - 1, atleast))
                for e in rec(PointSet(field, m - 1, over)):
                    if not any(all(x <= y for x, y in zip(q, e))
                               for q in exclude):
                        out.append(e + (d,))
        out.sort(key=lambda e: e[::-1])
        cache[key] = out
        return out

    return rec(V)


def generator_records(V: PointSet) -> List[IndexRecord]:
    """One record per minimal monomial involving the top variable.

    The families come from the threshold construction along each index; the
    block may be empty for indices that enumerate_indices does not witness.
    """
    records = []
    for e in minimal_monomial_exponents(V):
        if e[-1] == 0:
            continue
        rec = families_for_index(V, e[1:])
        if rec.idx != e:
            raise InputError(
                f"family construction yields {rec.idx} for minimal monomial {e}")
        records.append(rec)
    return records


def check_deletion_invariants(V: PointSet, dec: Decomposition) -> DeletionReport:
    """Recompute the decomposition after deleting the minimal block.

    Verifies the disjoint-union description of the projected complement and
    the inclusion / equality relations between the excess families of V and
    of the complement's projection.
    """
    if len(dec.records) <= 1:
        raise NothingToDelete("single-record decomposition has nothing to delete")
    n = V.dim
    field = V.field
    rec = dec.records[0]
    failures: List[str] = []

    W = rec.block
    Wprime = V.difference(W)
    Yprime = Wprime.project(n - 1)
    yset = set(Yprime.points)

    # disjoint union of projected excess blocks
    parts = [("level_n", {p[: n - 1] for p in excess_block(V, rec, n)})]
    for lv in range(n - 1, 1, -1):
        parts.append((f"level_{lv}", {p[: n - 1]
                                      for p in excess_block(V, rec, lv)}))
    union = set()
    for name, part in parts:
        overlap = union & part
        if overlap:
            failures.append(f"projected excess blocks overlap at {name}: "
                            f"{sorted(overlap)[:1]}")
        union |= part
    if union != yset:
        diff = (union ^ yset)
        failures.append(f"projected complement mismatch, e.g. {sorted(diff)[:1]}")

    if n >= 3:
        yrec = families_for_index(Yprime, rec.idx[1: n - 1])
        # inclusion of excess families
        for lv in range(1, n - 1):
            sv = set(rec.s_prime_families[lv - 1].points)
            sy = set(yrec.s_prime_families[lv - 1].points)
            if not sv <= sy:
                bad = sorted(sv - sy)[:1]
                failures.append(f"excess family at level {lv} not contained "
                                f"after deletion: {bad}")
        # equality of the level-1 excess families
        lhs = set(rec.s_prime_families[0].points)
        rhs = set(yrec.s_prime_families[0].points)
        if lhs != rhs:
            failures.append(f"first projections differ: {sorted(lhs ^ rhs)[:1]}")

    return DeletionReport(passed=not failures, failures=failures)
