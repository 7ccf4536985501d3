"""``diagharm`` command line.

Every verb prints one JSON document (or a plain table) on stdout.  Exit
status is 0 when everything holds, 1 when a checked property fails and 2 on
bad usage.
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys

from . import dyck, harmonics
from .mvpoly import is_diagonal_harmonic, random_poly
from .operators import OpGen, commutator_check, harmonic_preservation_check, vandermonde, EWordCache
from .partitions import Partition, cell_stats, hook_stats, partitions_of, staircase, z_mu
from .qtpoly import QtLaurent
from .symfunc import expansion_to_json, schur_to_power

log = logging.getLogger("diagharm")

DEFAULT_MAX_N = 10
HEAVY_MAX_N = 6

SUITES = ("commutators", "harmonicity", "sl2", "musum", "allen")
HEAVY_SUITES = {"sl2", "allen"}


class UsageError(Exception):
    pass


class PropertyFailure(Exception):
    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


def _bidegree(text: str) -> tuple[int, int]:
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b but got {text!r}") from None
    return a, b


def _partition(text: str) -> Partition:
    try:
        parts = [int(v) for v in text.replace(" ", "").split(",") if v]
        return Partition.from_any(parts)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _check_n(n: int, args, heavy: bool = False) -> None:
    limit = args.max_n if args.max_n is not None else (HEAVY_MAX_N if heavy else DEFAULT_MAX_N)
    if not 1 <= n <= limit:
        raise UsageError(f"n={n} outside 1..{limit} (raise the cap with --max-n)")


def poly_json(p: QtLaurent) -> list[dict]:
    return [{"a": et, "b": eq, "coef": c} for (eq, et), c in p.sorted_terms()]


def grid_table(grid: dict) -> str:
    if not grid:
        return "(empty)"
    amax = max(a for a, _ in grid)
    bmax = max(b for _, b in grid)
    width = max(len(str(v)) for v in grid.values()) + 1
    head = "t\\q " + "".join(f"{b:>{width}}" for b in range(bmax + 1))
    rows = [head]
    for a in range(amax, -1, -1):
        cells = "".join(f"{grid.get((a, b), '.'):>{width}}" for b in range(bmax + 1))
        rows.append(f"{a:>3} " + cells)
    return "\n".join(rows)


# -- verbs --------------------------------------------------------------------

def cmd_qtcatalan(args):
    _check_n(args.n, args)
    poly = dyck.qt_catalan(args.n, args.stat)
    grid = dyck.coefficient_grid(args.n, args.stat)
    payload = {
        "n": args.n,
        "stat": args.stat,
        "catalan": dyck.catalan_number(args.n),
        "grid": dyck.grid_to_json(grid),
        "terms": poly_json(poly),
        "polynomial": str(poly),
    }
    table = f"c_{args.n}(q,t) = {poly}\n\n{grid_table(grid)}"
    return payload, table


def cmd_starters(args):
    n, method = args.n, args.method
    if method in ("qseries", "moments") and n < 2:
        raise UsageError(f"--method {method} needs n >= 2")
    _check_n(n, args, heavy=(method == "kernel"))
    payload = {"n": n, "method": method}
    if method == "grid":
        sg = harmonics.starter_grid_from_catalan(n)
        payload["total"] = sg.total
        payload["b"] = [{"u": u, "v": v, "count": k} for (u, v), k in sg.b.items()]
        payload["c"] = [{"r": r, "count": k} for r, k in sg.c.items()]
    elif method in ("qseries", "moments"):
        c = harmonics.starter_counts_qseries(n) if method == "qseries" else harmonics.starter_count_moments(n)
        payload["total"] = sum(c.values())
        payload["c"] = [{"r": r, "count": k} for r, k in sorted(c.items())]
        if method == "qseries":
            payload["series"] = [{"e": e, "coef": k} for (e, _), k in harmonics.starter_series(n).sorted_terms()]
    else:
        space = harmonics.get_space(n, cache=_cache(args))
        sts = space.all_starters()
        payload["total"] = len(sts)
        payload["starters"] = [
            {
                "u": s.bidegree[0],
                "v": s.bidegree[1],
                "length": s.length,
                "description": s.describe(),
                **s.to_json(),
                "poly": s.v0.to_json(),
            }
            for s in sts
        ]
    lines = [f"{method}: {payload['total']} string starters for n={n}"]
    for item in payload.get("b", []):
        lines.append(f"  ({item['u']},{item['v']}): {item['count']}")
    for item in payload.get("c", []):
        lines.append(f"  length {item['r']}: {item['count']}")
    for item in payload.get("starters", []):
        lines.append(f"  ({item['u']},{item['v']}) length {item['length']}: {item['description']}")
    return payload, "\n".join(lines)


def cmd_basis(args):
    n = args.n
    _check_n(n, args, heavy=True)
    if args.allen:
        res = harmonics.allen_basis(n, order=args.order)
        payload = {
            "n": n,
            "construction": "allen",
            "order": args.order,
            "count": len(res.elements),
            "elements": [e.to_json() for e in res.elements],
            "failures": [{"a": f.bidegree[0], "b": f.bidegree[1], "achieved": f.achieved, "target": f.target} for f in res.failures],
        }
        lines = [f"{len(res.elements)} elements from co-partitions"]
        lines += [f"  ({e.bidegree[0]},{e.bidegree[1]}) lambda={list(e.copartition)}" for e in res.elements]
        if res.failures:
            raise PropertyFailure("; ".join(str(f) for f in res.failures), payload)
        return payload, "\n".join(lines)
    space = harmonics.get_space(n, cache=_cache(args))
    if args.bidegree is not None:
        a, b = args.bidegree
        if a < 0 or b < 0 or a + b > space.N:
            raise UsageError(f"bi-degree {(a, b)} outside 0 <= a+b <= {space.N}")
        bidegrees = [args.bidegree]
    else:
        bidegrees = [bd for bd in space.bidegrees()]
    spans = []
    for a, b in bidegrees:
        span = space.span(a, b)
        if args.bidegree is None and not span.dim:
            continue
        spans.append({
            "a": a,
            "b": b,
            "dim": span.dim,
            "candidates": [list(w) for w, _ in span.candidates],
            "selected": [list(w) for w in span.selected_words],
        })
    payload = {"n": n, "construction": "words", "count": sum(s["dim"] for s in spans), "bidegrees": spans}
    lines = [f"{payload['count']} basis elements"]
    for s in spans:
        words = ", ".join(" ".join(f"E{r}" for r in w) or "Delta" for w in s["selected"])
        lines.append(f"  ({s['a']},{s['b']}) dim {s['dim']}: {words}")
    return payload, "\n".join(lines)


def _generators(limit: int = 2):
    for kind in ("E", "F"):
        for r in range(limit + 1):
            for s in range(limit + 1 - r):
                if r + s:
                    yield OpGen(kind, r, s)


def suite_commutators(n, rng):
    polys = [random_poly(n, rng, nterms=4, max_exp=3) for _ in range(3)]
    failed = []
    checked = 0
    gens = list(_generators())
    for g1 in gens:
        for g2 in gens:
            for P in polys:
                checked += 1
                if not commutator_check(g1, g2, P):
                    failed.append(f"[{g1}, {g2}]")
                    break
    return {"checked": checked, "failures": failed}


def suite_harmonicity(n, rng):
    words = EWordCache(vandermonde(n))
    inputs = [words(())]
    for _ in range(3):
        mu = [rng.randint(1, max(1, n - 1)) for _ in range(rng.randint(1, 2))]
        P = words(mu)
        if P:
            inputs.append(P)
    failed = []
    checked = 0
    for P in inputs:
        if not is_diagonal_harmonic(P):
            failed.append("E-word image not harmonic")
            continue
        for g in _generators():
            checked += 1
            if not harmonic_preservation_check(g, P):
                failed.append(f"{g} on degree {P.total_degree()}")
    return {"checked": checked, "failures": failed}


def suite_sl2(n, rng):
    rep = harmonics.verify_sl2_decomposition(n)
    return {"checked": len(rep.strings), "failures": rep.failures, "strings": rep.to_json()["strings"], "total_rank": rep.total_rank}


def suite_musum(n, rng):
    rep = harmonics.musum_catalan(n)
    fails = [f"mismatch at q={q}, t={t}" for q, t in rep.mismatches]
    return {"checked": rep.points_checked, "failures": fails, "skipped": [list(p) for p in rep.skipped]}


def suite_allen(n, rng):
    res = harmonics.allen_basis(n)
    fails = [str(f) for f in res.failures]
    if not fails and res.grid() != dyck.coefficient_grid(n):
        fails.append("Allen grid differs from the q,t-Catalan grid")
    return {"checked": len(res.elements), "failures": fails}


def cmd_verify(args):
    n = args.n
    suites = SUITES if args.suite == "all" else (args.suite,)
    _check_n(n, args, heavy=any(s in HEAVY_SUITES for s in suites))
    if "commutators" in suites and n > 5 and args.max_n is None:
        raise UsageError("the commutator suite is capped at n=5")
    report = {}
    ok = True
    for name in suites:
        rng = random.Random(args.seed)
        res = globals()[f"suite_{name}"](n, rng)
        res["pass"] = not res["failures"]
        ok &= res["pass"]
        report[name] = res
        log.info("suite %s: %s", name, "pass" if res["pass"] else "FAIL")
    payload = {"n": n, "seed": args.seed, "pass": ok, "suites": report}
    table = "\n".join(
        f"{name:12s} {'pass' if r['pass'] else 'FAIL'}  ({r['checked']} checks)" for name, r in report.items()
    )
    if not ok:
        raise PropertyFailure("verification failed", payload)
    return payload, table


def cmd_musum(args):
    _check_n(args.n, args)
    rep = harmonics.musum_catalan(args.n)
    payload = rep.to_json()
    table = f"mu-sum vs c_{args.n}: {'equal' if rep.ok else 'DIFFERENT'} at {rep.points_checked} points"
    if not rep.ok:
        raise PropertyFailure("mu-sum differs from the q,t-Catalan", payload)
    return payload, table


def cmd_dyck(args):
    _check_n(args.n, args)
    paths = dyck.enumerate_paths(args.n)
    rows = []
    for p in paths:
        rows.append({
            "d": list(p.d),
            "area": p.area(),
            "bounce": p.bounce(),
            "dinv": p.dinv(),
            "copartition": list(p.copartition()),
        })
    payload = {"n": args.n, "count": len(rows), "paths": rows}
    lines = [f"{'d':<{3 * args.n + 2}} area bounce dinv  copartition"]
    for r in rows:
        lines.append(f"{str(r['d']):<{3 * args.n + 2}} {r['area']:>4} {r['bounce']:>6} {r['dinv']:>4}  {r['copartition']}")
    return payload, "\n".join(lines)


def cmd_partitions(args):
    if args.stats is not None:
        mu = args.stats
        h = hook_stats(mu)
        payload = {
            "mu": list(mu),
            "conjugate": list(mu.conjugate()),
            "z": z_mu(mu),
            "cells": [
                {"cell": list(c.cell), "arm": c.arm, "leg": c.leg, "coarm": c.coarm, "coleg": c.coleg}
                for c in cell_stats(mu)
            ],
            "n_mu": h.n_mu,
            "n_mu_conj": h.n_mu_conj,
            "T": h.T_mu.to_json(),
            "B": h.B_mu.to_json(),
            "Pi": h.Pi_mu.to_json(),
            "w": h.w_mu.to_json(),
        }
        table = "\n".join([
            f"mu = {list(mu)}, conjugate {list(mu.conjugate())}, z = {payload['z']}",
            f"T = {h.T_mu}", f"B = {h.B_mu}", f"Pi = {h.Pi_mu}", f"w = {h.w_mu}",
        ])
        return payload, table
    if args.schur is not None:
        exp = schur_to_power(args.schur)
        payload = {"lambda": list(args.schur), "expansion": expansion_to_json(exp)}
        table = "\n".join(f"{c} p{list(mu)}" for mu, c in exp.items() if c)
        return payload, table
    if args.n is None:
        raise UsageError("give a size, --stats MU or --schur LAMBDA")
    if args.n < 0:
        raise UsageError("size must be nonnegative")
    inside = staircase(args.inside) if args.inside is not None else None
    parts = partitions_of(args.n, max_part=args.max_part, length=args.length, inside=inside)
    payload = {"n": args.n, "count": len(parts), "partitions": [list(p) for p in parts]}
    return payload, "\n".join(str(list(p)) for p in parts) or "(none)"


def _cache(args):
    if args.cache_dir:
        return harmonics.ResultCache(args.cache_dir)
    return harmonics.ResultCache.from_env()


# -- wiring -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", help=f"persist per-bidegree results here (default ${harmonics.CACHE_ENV})")
    common.add_argument("--max-n", type=int, help="override the size cap")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="diagharm", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("qtcatalan", parents=[common], help="q,t-Catalan polynomial and its grid")
    p.add_argument("n", type=int)
    p.add_argument("--stat", choices=("bounce", "dinv"), default="bounce")
    p.set_defaults(func=cmd_qtcatalan)

    p = sub.add_parser("starters", parents=[common], help="count sl(2) string starters")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=("grid", "qseries", "moments", "kernel"), default="grid")
    p.set_defaults(func=cmd_starters)

    p = sub.add_parser("basis", parents=[common], help="bi-homogeneous basis of the alternants")
    p.add_argument("n", type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--bidegree", type=_bidegree, metavar="A,B")
    g.add_argument("--all", action="store_true")
    p.add_argument("--allen", action="store_true", help="build from co-partition Schur expansions")
    p.add_argument("--order", choices=harmonics.LAMBDA_ORDERS, default="decreasing-lex")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("verify", parents=[common], help="run property suites")
    p.add_argument("n", type=int)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("musum", parents=[common], help="hook-product sum against the q,t-Catalan")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_musum)

    p = sub.add_parser("dyck", parents=[common], help="Dyck paths with area, bounce and dinv")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_dyck)

    p = sub.add_parser("partitions", parents=[common], help="partitions, hook data, Schur expansions")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--max-part", type=int)
    p.add_argument("--length", type=int)
    p.add_argument("--inside", type=int, metavar="M", help="fit inside the staircase [M, ..., 1]")
    p.add_argument("--stats", type=_partition, metavar="MU")
    p.add_argument("--schur", type=_partition, metavar="LAMBDA")
    p.set_defaults(func=cmd_partitions)
    return parser


def render(verb: str, args, payload, table: str, status: int) -> str:
    if args.format == "table":
        return table
    params = {
        k: (list(v) if isinstance(v, tuple) else v)
        for k, v in sorted(vars(args).items())
        if k not in ("func", "verb", "cache_dir", "format", "verbose")
    }
    doc = {"command": verb, "params": params, "payload": payload, "status": status}
    return json.dumps(doc, sort_keys=True, indent=2)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(name)s: %(message)s")
    try:
        payload, table = args.func(args)
        status = 0
    except UsageError as err:
        print(f"diagharm {args.verb}: {err}", file=sys.stderr)
        return 2
    except PropertyFailure as err:
        print(f"diagharm {args.verb}: {err}", file=sys.stderr)
        if err.payload is not None:
            print(render(args.verb, args, err.payload, json.dumps(err.payload, indent=2), 1))
        return 1
    print(render(args.verb, args, payload, table, status))
    return 0


if __name__ == "__main__":
    sys.exit(main())
