"""Command-line front end.

Subcommands: build (graphs/complexes to JSON), invariants (full report with
a content-addressed Betti cache), verify (claim catalog), scan (conjecture
grids). Exit codes: 0 ok, 1 usage, 2 guard violation, 3 void result,
4 claim refuted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import claims
from .complexes import (
    SimplicialComplex,
    alexander_dual,
    canonical_json,
    clique_complex,
    complex_from_json,
    complex_to_json,
    cover_complex,
    dimension,
    f_vector,
    is_pure,
)
from .errors import GuardExceeded, VoidComplexError
from .graphs import FamilySpec, build_family, graph_from_json
from .homology import RATIONALS, GF2, Field, parse_field
from .resolution import (
    betti_hochster,
    eagon_reiner_check,
    hilbert_from_fvector,
    is_cm_ab,
    is_cm_reisner,
    is_gorenstein,
    linear_resolution_degree,
)
from .structure import is_fat_forest, is_pure_shellable, is_vertex_decomposable

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_VOID = 3
EXIT_REFUTED = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with 2; the contract says 1
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_input_args(p):
    p.add_argument("--input", help="graph or complex JSON file")
    p.add_argument("--family", help="family id: P L S C W C2 L2 Kmn K2xKn Grid")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int, help="cover degree (facets miss an independent k-set)")
    p.add_argument("--dual", action="store_true", help="take the Alexander dual")
    p.add_argument("--clique", action="store_true", help="take the clique complex instead")


def _add_common(p):
    p.add_argument("--format", choices=("json", "tsv", "pretty"), default="json")
    p.add_argument("--field", default="Q", help="Q, GF(2), GF(p), or 'both' where allowed")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-ground", type=int, default=22)
    p.add_argument("--override-guards", action="store_true")
    p.add_argument("-o", "--output", help="write to file instead of stdout")


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text + "\n")
    else:
        print(text)


def _load_complex(args) -> SimplicialComplex:
    if args.input:
        obj = json.loads(Path(args.input).read_text())
        if "facets" in obj:
            if args.dual:
                return alexander_dual(complex_from_json(obj))
            return complex_from_json(obj)
        g = graph_from_json(obj)
    elif args.family:
        g = build_family(FamilySpec(args.family, n=args.n, m=args.m))
    else:
        raise ValueError("need --input FILE or --family ID")
    if args.clique:
        c = clique_complex(g)
    else:
        if args.k is None:
            raise ValueError("need --k for a cover complex (or pass --clique)")
        c = cover_complex(g, args.k)
    return alexander_dual(c) if args.dual else c


def cmd_build(args) -> int:
    c = _load_complex(args)
    _emit(args, json.dumps(complex_to_json(c), sort_keys=True))
    return EXIT_VOID if c.is_void else EXIT_OK


# ---------------------------------------------------------------------------
# invariants


def _cache_dir(args) -> Path | None:
    if getattr(args, "no_cache", False):
        return None
    d = getattr(args, "cache_dir", None) or os.environ.get("SRLAB_CACHE_DIR")
    if not d:
        return None
    p = Path(d)
    p.mkdir(parents=True, exist_ok=True)
    return p


def _betti_cached(c, field, args):
    cache = _cache_dir(args)
    key = None
    if cache is not None:
        digest = hashlib.sha256(f"{canonical_json(c)}|{field}|betti.v1".encode()).hexdigest()
        key = cache / f"{digest}.json"
        if key.exists():
            from .resolution import GradedBettiTable

            return GradedBettiTable.from_json(json.loads(key.read_text()))
    t = betti_hochster(c, field, max_ground=args.max_ground, override=args.override_guards, workers=args.workers)
    if key is not None:
        key.write_text(json.dumps(t.to_json(), sort_keys=True))
    return t


def invariants_report(c: SimplicialComplex, field: Field, args) -> dict:
    if c.is_void:
        raise VoidComplexError("void complex has no ring invariants")
    fv = f_vector(c, override=args.override_guards)
    t = _betti_cached(c, field, args)
    reisner = is_cm_reisner(c, field, override=args.override_guards)
    report = {
        "complex": complex_to_json(c),
        "field": str(field),
        "dimension": int(dimension(c)),
        "pure": is_pure(c),
        "fVector": list(fv),
        "hilbert": hilbert_from_fvector(fv, c.n).to_json(),
        "betti": t.to_json(),
        "linearDegree": linear_resolution_degree(t),
        "cmReisner": reisner.cm,
        "cmAuslanderBuchsbaum": is_cm_ab(c, field, table=t),
        "gorenstein": is_gorenstein(c, field, table=t),
    }
    er = eagon_reiner_check(c, field, max_ground=args.max_ground, override=args.override_guards)
    report["eagonReiner"] = {
        "linearDegree": er.linear_degree,
        "dualCm": er.dual_cm,
        "dualVoid": er.dual_void,
        "consistent": er.consistent,
    }
    for name, fn, kwargs in (
        ("fatForest", is_fat_forest, {}),
        ("vertexDecomposable", is_vertex_decomposable, {}),
        ("shellable", is_pure_shellable, {}),
    ):
        try:
            if name in ("vertexDecomposable", "shellable") and not is_pure(c):
                report[name] = {"verdict": None, "note": "only defined for pure complexes"}
                continue
            v = fn(c, **kwargs)
            entry = {"verdict": v.holds}
            if name == "shellable" and v.holds:
                entry["order"] = v.witness
            if name == "fatForest" and v.holds:
                _, decomp = v.witness
                entry["simplexDims"] = list(decomp.simplex_dims)
                entry["overlapDims"] = list(decomp.overlap_dims)
            report[name] = entry
        except GuardExceeded as e:
            report[name] = {"verdict": None, "note": str(e)}
    return report


def cmd_invariants(args) -> int:
    c = _load_complex(args)
    if c.is_void:
        _emit(args, json.dumps({"complex": complex_to_json(c), "note": "void complex"}))
        return EXIT_VOID
    field = parse_field(args.field)
    report = invariants_report(c, field, args)
    if args.format == "json":
        _emit(args, json.dumps(report, sort_keys=True))
    else:
        lines = [
            f"ground set      {c.n}",
            f"facets          {len(c.facets)}",
            f"f-vector        {report['fVector']}",
            f"field           {report['field']}",
            f"betti           {report['betti']['entries']}",
            f"linear degree   {report['linearDegree']}",
            f"CM (links)      {report['cmReisner']}",
            f"CM (pd)         {report['cmAuslanderBuchsbaum']}",
            f"gorenstein      {report['gorenstein']}",
            f"fat forest      {report['fatForest'].get('verdict')}",
            f"vertex decomp.  {report['vertexDecomposable'].get('verdict')}",
            f"shellable       {report['shellable'].get('verdict')}",
        ]
        _emit(args, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify / scan


def _fields_arg(s: str):
    if s.lower() == "both":
        return (RATIONALS, GF2)
    return (parse_field(s),)


def cmd_verify(args) -> int:
    fields = _fields_arg(args.field)
    if args.claim:
        results = [claims.verify_claim(args.claim, field=f) for f in fields]
    elif args.all:
        results = claims.verify_all(fields=fields)
    else:
        raise ValueError("need --claim ID or --all")
    payload = {
        "results": [r.to_json() for r in results],
        "byClaim": claims.cross_field_summary(results),
        "discrepancies": [d.to_json() for d in claims.discrepancy_report()] if args.all else [],
    }
    if args.format == "json":
        _emit(args, json.dumps(payload, sort_keys=True))
    elif args.format == "tsv":
        rows = ["claim\tfield\tstatus\tseconds"]
        rows += [f"{r.claim_id}\t{r.field}\t{r.status}\t{r.seconds:.3f}" for r in results]
        _emit(args, "\n".join(rows))
    else:
        for r in results:
            expect = "" if claims.CLAIMS[r.claim_id].expect_confirmed else "  (refutation on record)"
            _emit(args, f"{r.status:10s} [{r.field:5s}] {r.claim_id}{expect}")
    return EXIT_REFUTED if claims.has_unexpected_refutation(results) else EXIT_OK


def cmd_scan(args) -> int:
    fields = _fields_arg(args.field)
    scanner = {"Ln": claims.scan_conjecture_Ln, "L2n": claims.scan_conjecture_L2n}.get(args.conjecture)
    if scanner is None:
        raise ValueError("conjecture must be Ln or L2n")
    rep = scanner(
        (args.kmin, args.kmax),
        (args.nmin, args.nmax),
        fields,
        max_ground=args.max_ground,
        workers=args.workers,
    )
    if args.format == "json":
        _emit(args, json.dumps(rep.to_json(), sort_keys=True))
    elif args.format == "tsv":
        rows = ["k\tn\tfield\tlinear\tcm\tdual_linear\tdual_cm"]
        for c in rep.cells:
            rows.append(
                f"{c.k}\t{c.n}\t{c.field}\t{c.linear_degree}\t{c.cm}\t{c.dual_linear_degree}\t{c.dual_cm}"
            )
        _emit(args, "\n".join(rows))
    else:
        _emit(args, f"conjecture {rep.conjecture}: {rep.status}, {len(rep.cells)} cells, "
                    f"{len(rep.counterexamples)} counterexamples, {rep.seconds:.1f}s")
        for note in rep.notes:
            _emit(args, f"note: {note}")
    return EXIT_OK  # conjecture scans never affect the exit code


# ---------------------------------------------------------------------------


def make_parser() -> _Parser:
    p = _Parser(prog="srlab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a complex and print its JSON")
    _add_input_args(b)
    _add_common(b)
    b.set_defaults(fn=cmd_build)

    i = sub.add_parser("invariants", help="full invariant report for one complex")
    _add_input_args(i)
    _add_common(i)
    i.add_argument("--cache-dir", help="Betti cache directory (or env SRLAB_CACHE_DIR)")
    i.add_argument("--no-cache", action="store_true")
    i.set_defaults(fn=cmd_invariants)

    v = sub.add_parser("verify", help="run claim records against the oracle")
    v.add_argument("--claim", help="claim id")
    v.add_argument("--all", action="store_true")
    _add_common(v)
    v.set_defaults(fn=cmd_verify)

    s = sub.add_parser("scan", help="conjecture scan grids")
    s.add_argument("--conjecture", required=True, choices=("Ln", "L2n"))
    s.add_argument("--kmin", type=int, default=2)
    s.add_argument("--kmax", type=int, default=4)
    s.add_argument("--nmin", type=int, default=3)
    s.add_argument("--nmax", type=int, default=12)
    _add_common(s)
    s.set_defaults(fn=cmd_scan)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.fn(args)
    except GuardExceeded as e:
        print(f"guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, KeyError, VoidComplexError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
