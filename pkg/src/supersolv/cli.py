"""``supersolv`` command line: analyze one group or sweep the catalog.

Exit status: 0 success, 1 input or budget error, 2 theorem violation (the
deciders disagree or a proven statement failed, i.e. an implementation bug).
"""
from __future__ import annotations

import argparse
import concurrent.futures
import csv
import io
import json
import logging
import random
import sys
import time

from . import __version__, kernels
from .catalog import catalog_entry, factorization_cases, parse_group, standard_catalog
from .config import settings
from .criteria import criteria_report, describe, is_supersoluble_chief, supersoluble_witnesses
from .errors import SupersolvError, TheoremViolation
from .structure import frattini, is_elementary_abelian, maschke_decompose, primes_of
from .subgroups import normal_subgroups
from .tcc import corollary1_verify, corollary2_verify, lemma1_replay, tcc_permutable

log = logging.getLogger("supersolv")

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2
FRATTINI_MAX_ORDER = 60


def strip_timing(obj):
    """Drop every ``timing`` key, recursively; what remains must be deterministic."""
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k != "timing"}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


def structural_checks(G) -> dict:
    """Proof-step invariants on one group: Hall-based witnesses, Frattini
    monotonicity over normal subgroups, Maschke splitting."""
    out: dict = {"hall_witnesses": {}, "frattini_checked": 0, "maschke": []}
    if G.order > 1 and is_supersoluble_chief(G):
        out["hall_witnesses"] = {str(p): describe(G, M) for p, M in supersoluble_witnesses(G).items()}
    phi = frattini(G)
    normals = normal_subgroups(G)
    if G.order <= FRATTINI_MAX_ORDER:
        for P in normals:
            if not frattini(P).issubset(phi):
                raise TheoremViolation(f"Frattini of a normal subgroup of order {P.order} escapes Frattini(G)")
            out["frattini_checked"] += 1
    for P in normals:
        primes = primes_of(P)
        if len(primes) != 1 or not is_elementary_abelian(P, primes[0]):
            continue
        if not P.intersection(phi).is_trivial():
            continue
        dec = maschke_decompose(G, P)
        out["maschke"].append({"order": P.order, "components": [N.order for N in dec.components]})
    return out


def _group_task(idx: int, maximal_only: bool) -> dict:
    entry = standard_catalog()[idx]
    try:
        rep = criteria_report(entry.group, entry.name, maximal_only=maximal_only)
        record = rep.to_json()
        violation = None
        if rep.errors:
            return {"record": record, "checks": None, "violation": None, "error": "; ".join(rep.errors.values())}
        if not rep.agrees:
            violation = f"{entry.name}: deciders disagree"
        checks = structural_checks(entry.group)
    except TheoremViolation as exc:
        return {"record": None, "checks": None, "violation": f"{entry.name}: {exc}", "error": None}
    except SupersolvError as exc:
        return {"record": None, "checks": None, "violation": None, "error": f"{entry.name}: {exc}"}
    return {"record": record, "checks": checks, "violation": violation, "error": None}


def _case_task(idx: int) -> dict:
    case = factorization_cases()[idx]
    try:
        t0 = time.perf_counter()
        if case.kind == "totally_permutable":
            verdict = corollary1_verify(case).to_json()
        else:
            verdict = corollary2_verify(case).to_json()
            verdict["lemma1_h_checked"] = 0
            if verdict["permutable"]:
                verdict["lemma1_h_checked"] = lemma1_replay(case.H, case.K)
            verdict["tcc_symmetric"] = tcc_permutable(case.K, case.H).holds == verdict["permutable"]
        verdict["timing"] = {"seconds": time.perf_counter() - t0}
    except TheoremViolation as exc:
        return {"record": None, "violation": f"{case.name}/{case.kind}: {exc}", "error": None}
    except SupersolvError as exc:
        return {"record": None, "violation": None, "error": f"{case.name}/{case.kind}: {exc}"}
    return {"record": verdict, "violation": None, "error": None}


def _run_tasks(tasks, jobs: int, seed: int):
    """Run (fn, args) tasks, returning results in task order regardless of jobs."""
    order = list(range(len(tasks)))
    random.Random(seed).shuffle(order)
    results = [None] * len(tasks)
    if jobs <= 1:
        for i in order:
            fn, args = tasks[i]
            results[i] = fn(*args)
        return results
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = {pool.submit(tasks[i][0], *tasks[i][1]): i for i in order}
        for fut in concurrent.futures.as_completed(futures):
            results[futures[fut]] = fut.result()
    return results


def run_sweep(max_order: int = 100, jobs: int = 1, seed: int = 0, maximal_only: bool = False) -> dict:
    """The full catalog harness; returns the JSON-ready sweep report."""
    t0 = time.perf_counter()
    entries = [i for i, e in enumerate(standard_catalog()) if e.group.order <= max_order]
    cases = factorization_cases()
    case_ids = [i for i, c in enumerate(cases) if c.G.order <= max_order]
    tasks = [(_group_task, (i, maximal_only)) for i in entries]
    tasks += [(_case_task, (i,)) for i in case_ids]
    results = _run_tasks(tasks, jobs, seed)
    group_results, case_results = results[: len(entries)], results[len(entries) :]

    violations = [r["violation"] for r in results if r["violation"]]
    errors = [r["error"] for r in results if r["error"]]
    groups = [r["record"] for r in group_results if r["record"] is not None]
    checks = [
        {"group_id": r["record"]["group_id"], **r["checks"]}
        for r in group_results
        if r["record"] is not None and r["checks"] is not None
    ]
    factorizations = [r["record"] for r in case_results if r["record"] is not None]
    agreements = sum(
        1 for g in groups if g["verdict_chief"] == g["verdict_huppert"] == g["verdict_thm1"] is not None
    )
    summary = {
        "groups_checked": len(entries),
        "agreements": agreements,
        "supersoluble": sum(1 for g in groups if g["verdict_chief"]),
        "witnesses_emitted": sum(len(g["witnesses"]) for g in groups),
        "hall_witnesses_verified": sum(len(c["hall_witnesses"]) for c in checks),
        "frattini_pairs_checked": sum(c["frattini_checked"] for c in checks),
        "maschke_decompositions": sum(len(c["maschke"]) for c in checks),
        "factorization_cases": len(factorizations),
        "corollary1_hypotheses_satisfied": sum(
            1 for f in factorizations if f["kind"] == "totally_permutable" and f["hypotheses_hold"]
        ),
        "corollary2_hypotheses_satisfied": sum(
            1 for f in factorizations if f["kind"] == "tcc" and f["hypotheses_hold"]
        ),
        "lemma1_h_checked": sum(f.get("lemma1_h_checked", 0) for f in factorizations),
        "tcc_asymmetric_cases": [f["case"] for f in factorizations if f.get("tcc_symmetric") is False],
        "violations": violations,
        "errors": errors,
    }
    config = {
        "max_order": max_order,
        "seed": seed,
        "maximal_only": maximal_only,
        "caps": settings.snapshot(),
    }
    return {
        "tool": "supersolv",
        "version": __version__,
        "config": config,
        "groups": groups,
        "structural_checks": checks,
        "factorizations": factorizations,
        "summary": summary,
        "timing": {"total_seconds": time.perf_counter() - t0, "jobs": jobs, "backend": kernels.BACKEND},
    }


def sweep_status(report: dict) -> int:
    s = report["summary"]
    if s["violations"] or s["agreements"] < s["groups_checked"] - len(s["errors"]):
        return EXIT_VIOLATION
    if s["errors"]:
        return EXIT_INPUT
    return EXIT_OK


def _csv_text(records: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["group_id", "order", "verdict_chief", "verdict_huppert", "verdict_thm1", "witnesses"])
    for r in records:
        w.writerow([r["group_id"], r["order"], r["verdict_chief"], r["verdict_huppert"], r["verdict_thm1"], len(r["witnesses"])])
    return buf.getvalue()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(source: str):
    try:
        return source, catalog_entry(source).group
    except KeyError:
        pass
    with open(source) as fh:
        return source, parse_group(fh.read())


def cmd_analyze(args) -> int:
    source = args.catalog or args.source
    if not source:
        log.error("give a group file or --catalog NAME")
        return EXIT_INPUT
    try:
        group_id, G = _load(source)
        rep = criteria_report(G, group_id, maximal_only=args.maximal_only)
    except TheoremViolation as exc:
        log.error("theorem violation: %s", exc)
        return EXIT_VIOLATION
    except (SupersolvError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    record = rep.to_json(witnesses=args.witnesses)
    if args.csv:
        sys.stdout.write(_csv_text([record]))
        if args.out:
            _emit(_dump(record), args.out)
    else:
        _emit(_dump(record), args.out)
    if rep.errors:
        return EXIT_INPUT
    return EXIT_OK if rep.agrees else EXIT_VIOLATION


def cmd_sweep(args) -> int:
    report = run_sweep(args.max_order, args.jobs, args.seed, args.maximal_only)
    if args.csv:
        sys.stdout.write(_csv_text(report["groups"]))
        if args.out:
            _emit(_dump(report), args.out)
    else:
        _emit(_dump(report), args.out)
    status = sweep_status(report)
    s = report["summary"]
    log.info(
        "%d groups, %d agreements, %d violations, %d errors",
        s["groups_checked"], s["agreements"], len(s["violations"]), len(s["errors"]),
    )
    for v in s["violations"]:
        log.error("violation: %s", v)
    for e in s["errors"]:
        log.error("error: %s", e)
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="supersolv", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("--csv", action="store_true", help="print a CSV summary to stdout")
    common.add_argument("--maximal-only", action="store_true",
                        help="restrict the per-prime search to maximal subgroups")

    a = sub.add_parser("analyze", parents=[common], help="run the three deciders on one group")
    a.add_argument("source", nargs="?", help="group file")
    a.add_argument("--catalog", metavar="NAME|FILE", help="catalog group name or group file")
    a.add_argument("--witnesses", action="store_true", help="include index-p witnesses")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sweep", parents=[common], help="check every catalog group and factorization")
    s.add_argument("--max-order", type=int, default=100)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--seed", type=int, default=0, help="shuffles work submission order only")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
