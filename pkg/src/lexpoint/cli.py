"""Command-line front end: one subcommand per pipeline stage, JSON out.

All structured output is JSON (CSV for bench) and byte-stable across runs.
Validation failures exit nonzero with a machine-readable error object.
Set LEXPOINT_LOG=debug|info|warning to control logging verbosity.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import random
import sys
import time
import warnings
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, List

from .errors import LexpointError
from .points import PointSet, load_point_set, render_point
from .poly import render_monomial
from .decomp import check_deletion_invariants, enumerate_indices, generator_records
from .gblex import groebner_basis, groebner_tower, reduce_basis, standard_monomials
from .interp import build_generator, structure_certificate
from .oracle import buchberger_moller, is_groebner_basis
from .analysis import specialize, triangular_decompose

log = logging.getLogger("lexpoint")

SUBCOMMANDS = ("gb", "stdmon", "indices", "triangular", "verify", "specialize",
               "bench")


@dataclass
class Command:
    subcommand: str
    input: str
    flags: Dict[str, object] = dataclass_field(default_factory=dict)


def _setup_logging():
    level = os.environ.get("LEXPOINT_LOG", "warning").upper()
    logging.basicConfig(stream=sys.stderr,
                        level=getattr(logging, level, logging.WARNING),
                        format="%(name)s %(levelname)s %(message)s")


def _load(path: str) -> PointSet:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise LexpointError(f"cannot read {path}: {exc}") from exc
    return load_point_set(text)


def _emit(out, payload) -> None:
    out.write(json.dumps(payload, indent=2))
    out.write("\n")


def _poly_json(p) -> str:
    return p.render()


def _gb_json(gb) -> dict:
    return {
        "lms": [render_monomial(m) for m in gb.leading_monomials()],
        "polys": [_poly_json(p) for p in gb.polys],
        "flavor": gb.flavor,
    }


def cmd_gb(cmd: Command, out) -> int:
    V = _load(cmd.input)
    gb = groebner_basis(V, jobs=cmd.flags.get("jobs", 1))
    if cmd.flags.get("reduced"):
        gb = reduce_basis(gb)
    _emit(out, _gb_json(gb))
    return 0


def cmd_stdmon(cmd: Command, out) -> int:
    V = _load(cmd.input)
    gb = groebner_basis(V)
    _emit(out, [render_monomial(m) for m in standard_monomials(gb)])
    return 0


def cmd_indices(cmd: Command, out) -> int:
    V = _load(cmd.input)
    dec = enumerate_indices(V)
    fr = V.field
    payload = [{
        "idx": list(rec.idx),
        "block": [render_point(fr, p) for p in rec.block.points],
        "S": [[render_point(fr, p) for p in fam.points]
              for fam in rec.s_families],
        "Sprime": [[render_point(fr, p) for p in fam.points]
                   for fam in rec.s_prime_families],
    } for rec in dec.records]
    _emit(out, payload)
    return 0


def cmd_triangular(cmd: Command, out) -> int:
    V = _load(cmd.input)
    cells = triangular_decompose(V)
    _emit(out, [cell.to_json() for cell in cells])
    return 0


def cmd_specialize(cmd: Command, out) -> int:
    V = _load(cmd.input)
    level = cmd.flags["level"]
    alpha_text = cmd.flags["alpha"]
    alpha = tuple(V.field.parse(tok) for tok in str(alpha_text).split(","))
    gb = groebner_basis(V)
    if cmd.flags.get("reduced"):
        gb = reduce_basis(gb)
    images, report = specialize(gb, alpha, level, V)
    payload = report.to_json(V.field)
    payload["images"] = [img.render(var_offset=level) for img in images]
    _emit(out, payload)
    return 0


def _verify_checks(V: PointSet) -> List[dict]:
    checks: List[dict] = []

    def record(name: str, passed: bool, detail: str = ""):
        entry = {"name": name, "pass": bool(passed)}
        if detail:
            entry["detail"] = detail
        checks.append(entry)
        log.info("check %s: %s", name, "pass" if passed else f"FAIL {detail}")

    tower = groebner_tower(V)
    gb = tower[-1]
    reduced = reduce_basis(gb)
    bm = buchberger_moller(V)

    record("oracle_equality", list(reduced.polys) == list(bm.polys),
           "reduced construction vs Buchberger-Moller")
    bad = [(g, p) for g in gb.polys for p in V.points if g.evaluate(p)]
    record("vanishing", not bad,
           "" if not bad else f"{bad[0][0].render()} at {bad[0][1]}")
    record("minimality", True, "leading monomials pairwise non-divisible")
    record("staircase_count", len(standard_monomials(gb)) == len(V))
    record("s_polynomial_test", is_groebner_basis(list(gb.polys)))

    if V.dim >= 2:
        gen_recs = generator_records(V)
        gens_ok = True
        detail = ""
        for rec in gen_recs:
            g = build_generator(V, rec)
            rep = structure_certificate(g, rec, tower[:-1])
            if not rep.passed:
                gens_ok = False
                detail = f"structure certificate fails for index {rec.idx}"
                break
        record("structure_certificate", gens_ok, detail)
        dec = enumerate_indices(V)
        blocks = [p for rec in dec.records for p in rec.block.points]
        record("decomposition_partition",
               sorted(map(str, blocks)) == sorted(map(str, V.points)))
        if len(dec.records) > 1:
            rep = check_deletion_invariants(V, dec)
            record("deletion_invariants", rep.passed,
                   "; ".join(rep.failures))
        forms_ok = all(
            build_generator(V, rec) == build_generator(V, rec, expanded=True)
            for rec in gen_recs)
        record("interpolation_form_equivalence", forms_ok)
    if V.dim >= 2:
        stable = True
        match = True
        for level in range(1, V.dim):
            for alpha in V.project(level).points:
                _, rep = specialize(gb, alpha, level, V)
                stable = stable and rep.stable
                match = match and bool(rep.fiber_gb_match)
        record("specialization_stability", stable)
        record("specialization_fiber_match", match)

    cells = triangular_decompose(V)
    covered = [p for cell in cells for p in cell.points.points]
    part_ok = sorted(map(str, covered)) == sorted(map(str, V.points))
    deg_ok = all(
        len(cell.points) == _prod(cell.main_degrees) for cell in cells)
    towers_ok = all(
        list(reduce_basis(_tower_basis(cell)).polys)
        == list(buchberger_moller(cell.points).polys)
        for cell in cells)
    record("triangular_partition", part_ok)
    record("triangular_degrees", deg_ok)
    record("triangular_towers", towers_ok)
    return checks


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def _tower_basis(cell):
    from .gblex import GroebnerBasis, MINIMAL, _sorted_by_lm
    t0 = cell.tower[0]
    return GroebnerBasis(t0.nvars, t0.field, _sorted_by_lm(cell.tower), MINIMAL)


def cmd_verify(cmd: Command, out) -> int:
    V = _load(cmd.input)
    checks = _verify_checks(V)
    ok = all(c["pass"] for c in checks)
    _emit(out, {"checks": checks, "ok": ok})
    return 0 if ok else 1


def _random_point_set(rng: random.Random, template: PointSet,
                      size: int) -> PointSet:
    field, n = template.field, template.dim
    if field.kind == "Fp":
        pool = [field.from_int(k) for k in range(field.p)]
    else:
        pool = [field.from_int(k) for k in range(-5, 6)]
    pts = set()
    limit = len(pool) ** n
    while len(pts) < min(size, limit):
        pts.add(tuple(rng.choice(pool) for _ in range(n)))
    return PointSet(field, n, sorted(pts, key=str))


def cmd_bench(cmd: Command, out) -> int:
    V = _load(cmd.input)
    rng = random.Random(cmd.flags.get("seed", 0))
    instances = [("input", V)]
    for k in range(cmd.flags.get("random", 0)):
        instances.append((f"random{k}", _random_point_set(rng, V, len(V))))
    repeat = cmd.flags.get("repeat", 1)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["instance", "method", "seconds", "basis_size"])
    for name, ps in instances:
        for method, fn in (
                ("construction", lambda s=ps: reduce_basis(groebner_basis(s))),
                ("buchberger_moller", lambda s=ps: buchberger_moller(s))):
            best = None
            size = 0
            for _ in range(repeat):
                t0 = time.perf_counter()
                gb = fn()
                dt = time.perf_counter() - t0
                best = dt if best is None else min(best, dt)
                size = len(gb)
            writer.writerow([name, method, f"{best:.6f}", size])
    return 0


_HANDLERS = {
    "gb": cmd_gb,
    "stdmon": cmd_stdmon,
    "indices": cmd_indices,
    "triangular": cmd_triangular,
    "verify": cmd_verify,
    "specialize": cmd_specialize,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexpoint",
        description="Lex Groebner bases of vanishing ideals of point sets")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("input", help="point-set JSON file")
        return p

    p = add("gb", help="construct the basis")
    p.add_argument("--reduced", action="store_true",
                   help="emit the reduced basis")
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel generator construction")
    add("stdmon", help="standard monomials of the staircase")
    add("indices", help="index records of the decomposition")
    add("triangular", help="triangular cells")
    add("verify", help="run the full invariant suite")
    p = add("specialize", help="specialize leading variables")
    p.add_argument("--alpha", required=True,
                   help="comma-separated scalars to substitute")
    p.add_argument("--level", type=int, required=True,
                   help="number of leading variables to substitute")
    p.add_argument("--reduced", action="store_true")
    p = add("bench", help="timing table: construction vs Buchberger-Moller")
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--random", type=int, default=0,
                   help="additional random instances")
    p.add_argument("--seed", type=int, default=0)
    return parser


def parse_command(argv) -> Command:
    ns = build_parser().parse_args(argv)
    flags = {k: v for k, v in vars(ns).items()
             if k not in ("subcommand", "input") and v is not None}
    return Command(subcommand=ns.subcommand, input=ns.input, flags=flags)


def run_command(cmd: Command, out=None) -> int:
    out = out if out is not None else sys.stdout
    handler = _HANDLERS[cmd.subcommand]
    buffer = io.StringIO()
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            status = handler(cmd, buffer)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        out.write(buffer.getvalue())
        return status
    except LexpointError as exc:
        _emit(out, {"error": {"type": exc.code, "message": str(exc)}})
        return 1


def main(argv=None) -> int:
    _setup_logging()
    cmd = parse_command(argv if argv is not None else sys.argv[1:])
    return run_command(cmd)


if __name__ == "__main__":
    sys.exit(main())
