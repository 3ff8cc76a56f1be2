"""Command line front end: ``polysep generate|analyze|verify|batch``.

Exit codes of ``verify`` and ``batch``: 0 PASS/VACUOUS, 1 input error,
2 FAIL, 3 CONTRADICTION.
"""

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .exact import GeometryError
from .generators import FAMILIES, NAMED_BASES, CatalogSpec, builtin_catalog, realize
from .graphs import vertex_connectivity
from .lattice import is_simplicial, polytope_graph
from .theorems import THEOREMS, TheoremError, Verdict, full_verification, worst
from .vrep import (
    VRepDocument,
    VRepParseError,
    check_expected,
    dump,
    load,
    loads,
    report_document,
    write_report,
)

EXIT = {Verdict.PASS: 0, Verdict.VACUOUS: 0, Verdict.FAIL: 2, Verdict.CONTRADICTION: 3}
EXIT_INPUT = 1


def _spec_from_args(args) -> CatalogSpec:
    base = None
    if args.base is not None:
        if args.base in NAMED_BASES:
            base = NAMED_BASES[args.base]
        elif ":" in args.base:
            fam, dim = args.base.split(":", 1)
            base = CatalogSpec(fam, d=int(dim))
        else:
            raise ValueError("unknown base %r (use %s or family:dim)"
                             % (args.base, ", ".join(NAMED_BASES)))
    return CatalogSpec(args.family, d=args.dim or 0, n=args.n or 0, seed=args.seed,
                       base=base, name=args.name or "")


def cmd_generate(args) -> int:
    try:
        spec = _spec_from_args(args)
        p = realize(spec)
    except (ValueError, GeometryError) as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_INPUT
    doc = VRepDocument.from_polytope(p, name=spec.label)
    if args.out in (None, "-"):
        sys.stdout.write(doc.to_json())
    else:
        try:
            dump(doc, args.out)
        except OSError as err:
            print("error: cannot write %s: %s" % (args.out, err), file=sys.stderr)
            return EXIT_INPUT
        print("%s: d=%d n=%d -> %s" % (spec.label, p.d, p.n, args.out))
    return 0


def _load_polytope(path, strict=True):
    doc = load(path)
    return doc, doc.to_polytope(strict=strict)


def analysis_line(p, kappa) -> str:
    f = ",".join(str(c) for c in p.f_vector())
    return "d=%d n=%d f=(%s) simplicial=%s κ=%d" % (
        p.d, p.n, f, str(is_simplicial(p)).lower(), kappa)


def cmd_analyze(args) -> int:
    try:
        doc, p = _load_polytope(args.input, strict=not args.lenient)
    except (OSError, VRepParseError, GeometryError) as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_INPUT
    g = polytope_graph(p)
    kappa = vertex_connectivity(g)
    degrees = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    print(analysis_line(p, kappa))
    print("degrees=%s" % degrees)
    if args.report:
        write_report({"name": doc.name, "d": p.d, "n": p.n, "f_vector": list(p.f_vector()),
                      "simplicial": is_simplicial(p), "degrees": degrees,
                      "connectivity": kappa, "input_digest": doc.digest()}, args.report)
    return 0


def _theorem_selection(values):
    chosen = set()
    for value in values or ["all"]:
        for item in value.split(","):
            item = item.strip()
            if item == "all":
                chosen.update(THEOREMS)
            elif item in THEOREMS:
                chosen.add(item)
            else:
                raise ValueError("unknown theorem %r" % item)
    return tuple(t for t in THEOREMS if t in chosen)


def cmd_verify(args) -> int:
    try:
        theorems = _theorem_selection(args.theorems)
        doc, p = _load_polytope(args.input, strict=not args.lenient)
    except (OSError, ValueError, GeometryError) as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_INPUT
    start = time.perf_counter()
    try:
        summary = full_verification(p, seed=args.seed, lemma1_samples=args.lemma1_samples,
                                    exhaustive_lemma1=args.exhaustive_lemma1,
                                    theorems=theorems)
    except (GeometryError, TheoremError) as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_INPUT
    elapsed = time.perf_counter() - start
    mismatches = check_expected(doc.expected, summary)
    verdict = summary.overall
    if mismatches:
        verdict = worst([verdict, Verdict.FAIL])

    print(analysis_line(p, summary.connectivity))
    print("d-separators=%d  theorems=%s" % (summary.num_d_separators, ",".join(theorems)))
    if summary.corollary4 is not None:
        print("corollary4=%s" % summary.corollary4.verdict.value)
    for rep in summary.reports:
        if rep.witness:
            print("  %s: %s" % (list(rep.separator.vertex_set), rep.witness))
    for m in mismatches:
        print("  expected %s" % m)
    print("verdict=%s" % verdict.value)
    if args.report:
        write_report(report_document(summary, doc.digest(), elapsed, [args.seed],
                                     {"verdict": verdict.value, "expected_mismatches": mismatches}),
                     args.report)
    return EXIT[verdict]


def _catalog_entries(args):
    entries = []
    if args.builtin or not args.catalog:
        entries += [s.to_dict() for s in builtin_catalog()]
    if args.catalog:
        with open(args.catalog, encoding="utf-8") as fh:
            data = json.load(fh)
        entries += data["entries"] if isinstance(data, dict) else data
    return entries


def _entry_label(entry) -> str:
    if "points" in entry:
        return entry.get("name") or "points"
    try:
        return CatalogSpec.from_dict(entry).label
    except (KeyError, ValueError):
        return entry.get("name") or entry.get("family", "?")


def run_entry(entry: dict, seed: int = 0) -> dict:
    """Verify one catalog entry; errors are captured in the returned row."""
    row = {"name": _entry_label(entry), "d": None, "n": None, "kappa": None,
           "d_separators": None, "verdict": "ERROR", "error": ""}
    try:
        if "points" in entry:
            doc = loads(json.dumps(entry))
            p = doc.to_polytope()
            expected = doc.expected
        else:
            p = realize(entry)
            expected = {}
        summary = full_verification(p, seed=seed)
    except (ValueError, KeyError, GeometryError, TheoremError) as err:
        row["error"] = str(err)
        return row
    verdict = summary.overall
    if check_expected(expected, summary):
        verdict = worst([verdict, Verdict.FAIL])
    row.update(d=p.d, n=p.n, kappa=summary.connectivity,
               d_separators=summary.num_d_separators, verdict=verdict.value,
               summary=summary.to_dict())
    return row


def run_batch(entries, jobs: int = 1, seed: int = 0) -> list:
    if jobs <= 1:
        return [run_entry(e, seed) for e in entries]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_entry, entries, [seed] * len(entries)))


def format_table(rows) -> str:
    lines = ["%-28s %3s %3s %5s %6s  %s" % ("name", "d", "n", "kappa", "#dsep", "verdict")]
    for r in rows:
        cells = ["-" if r[k] is None else str(r[k]) for k in ("d", "n", "kappa", "d_separators")]
        verdict = r["verdict"] + ("  " + r["error"] if r["error"] else "")
        lines.append("%-28s %3s %3s %5s %6s  %s" % (r["name"], *cells, verdict))
    return "\n".join(lines)


def batch_exit_code(rows) -> int:
    codes = [EXIT_INPUT if r["verdict"] == "ERROR" else EXIT[Verdict(r["verdict"])] for r in rows]
    return max(codes, default=0)


def cmd_batch(args) -> int:
    try:
        entries = _catalog_entries(args)
    except (OSError, ValueError, KeyError) as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_INPUT
    rows = run_batch(entries, args.jobs, args.seed)
    print(format_table(rows))
    if args.report_dir:
        os.makedirs(args.report_dir, exist_ok=True)
        for i, row in enumerate(rows):
            path = os.path.join(args.report_dir, "%03d_%s.json" % (i, _slug(row["name"])))
            write_report(dict(row, seeds=[args.seed]), path)
    return batch_exit_code(rows)


def _slug(name: str) -> str:
    return "".join(c if c.isalnum() else "_" for c in name).strip("_")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polysep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a catalog polytope as a V-representation")
    gen.add_argument("family", choices=FAMILIES)
    gen.add_argument("--dim", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--base", help="triangle, square, pentagon or family:dim")
    gen.add_argument("--name")
    gen.add_argument("-o", "--out", help="output path (default stdout)")
    gen.set_defaults(func=cmd_generate)

    ana = sub.add_parser("analyze", help="print f-vector, degrees and connectivity")
    ana.add_argument("input")
    ana.add_argument("--report")
    ana.add_argument("--lenient", action="store_true", help="drop non-vertex points")
    ana.set_defaults(func=cmd_analyze)

    ver = sub.add_parser("verify", help="run the theorem checks")
    ver.add_argument("input")
    ver.add_argument("--theorems", action="append",
                     help="comma list of %s or all" % ",".join(THEOREMS))
    ver.add_argument("--exhaustive-lemma1", action="store_true")
    ver.add_argument("--lemma1-samples", type=int, default=10)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--report")
    ver.add_argument("--lenient", action="store_true", help="drop non-vertex points")
    ver.set_defaults(func=cmd_verify)

    bat = sub.add_parser("batch", help="verify a whole catalog")
    bat.add_argument("catalog", nargs="?")
    bat.add_argument("--builtin", action="store_true")
    bat.add_argument("--jobs", type=int, default=1)
    bat.add_argument("--seed", type=int, default=0)
    bat.add_argument("--report-dir")
    bat.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
