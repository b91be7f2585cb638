"""Command line interface.

Subcommands: ``frieze``, ``universal``, ``cluster-search``, ``tube-check``
and ``verify``.  Exit status is 0 on success, 1 when a check fails (a
report is printed) and 2 for malformed input.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys

from . import kernels
from .arith import ZZ, LaurentPolynomial, LaurentRing, MalformedInputError, SpecializationError
from .cluster import (
    InvalidTubeError,
    LaurentPhenomenonError,
    TubeSpec,
    bfs_find,
    d_vector,
    main_theorem_check,
    rs_identity_check,
    specialization_check,
    tube_frieze,
    tube_roots,
)
from .frieze import (
    Frieze,
    FriezeError,
    chebyshev_extend,
    growth_coefficient,
    minimal_period,
    verify_unimodularity,
)
from .schema import (
    dumps,
    encode,
    load_document,
    parse_cluster_problem,
    parse_frieze_descriptor,
)
from .universal import (
    continuant,
    cyclic_growth_poly,
    monomial_expansion,
    splitting_identity_check,
    universal_growth,
    universal_quiddity,
    z_names,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
DEFAULT_SEARCH_DEPTH = 8
DEFAULT_SPECIALIZATION_DEPTH = 8
DEFAULT_ROWS = 6


class InputError(Exception):
    pass


def _fmt(value, names=None):
    if isinstance(value, LaurentPolynomial):
        return value.to_text(names)
    return str(value)


def render_frieze(rows, mode: str = "text", names=None) -> str:
    """Render frieze rows 1..d (each in column order j = 1..r).

    Text mode draws the staggered diamond picture: row ``i`` is rotated to
    start at column ``1 - (i - 1) // 2`` and even rows are shifted half a
    cell to the right.  JSON mode emits the rows as they are.
    """
    if not rows:
        raise ValueError("nothing to render")
    if mode == "json":
        return dumps({"rows": [[encode(v) for v in row] for row in rows]})
    r = len(rows[0])
    shown = []
    for i, row in enumerate(rows, start=1):
        start = 1 - (i - 1) // 2
        shown.append([_fmt(row[(j - 1) % r], names) for j in range(start, start + r)])
    width = max(len(s) for row in shown for s in row) + 3
    width += width % 2
    lines = []
    for i, row in enumerate(shown, start=1):
        pad = "" if i % 2 else " " * (width // 2)
        lines.append((pad + "".join(s.center(width) for s in row)).rstrip())
    return "\n".join(lines)


# -- frieze ------------------------------------------------------------------------


def _parse_quiddity(text):
    out = []
    for k, part in enumerate(text.split(",")):
        try:
            out.append(int(part.strip()))
        except ValueError:
            raise MalformedInputError(f"--quiddity entry {part.strip()!r} is not an integer", f"entry {k + 1}") from None
    return out


def _frieze_report(f, depth, fmt, names=None, declared=False):
    rows = f.rows(depth)
    r = f.period if declared else minimal_period(f)
    growth = {}
    k = 1
    # s_1 is always reported, deeper levels only when their rows are shown
    while k == 1 or r * k <= depth:
        growth[k] = growth_coefficient(f, k, declared_period=declared)
        k += 1
    problems = []
    if f.ring is ZZ:
        for i, row in enumerate(rows, start=1):
            for j, v in enumerate(row, start=1):
                if v <= 0:
                    problems.append(f"a[{i},{j}] = {v} is not positive")
    if fmt == "json":
        doc = {
            "ring": f.ring.name,
            "quiddity": [encode(v) for v in f.quiddity],
            "depth": depth,
            "period": f.period,
            "minimal_period": minimal_period(f),
            "rows": [[encode(v) for v in row] for row in rows],
            "growth": {str(k): encode(v) for k, v in growth.items()},
            "positivity_violations": problems,
        }
        if isinstance(f.ring, LaurentRing):
            doc = {"ring": "laurent", "vars": f.ring.nvars, **{k: v for k, v in doc.items() if k != "ring"}}
        out = dumps(doc)
    else:
        lines = [render_frieze(rows, "text", names)]
        for k, v in growth.items():
            lines.append(f"s_{k} = {_fmt(v, names)}")
        lines.extend(f"not an integer frieze: {p}" for p in problems)
        out = "\n".join(lines)
    return (EXIT_FAIL if problems else EXIT_OK), out


def cmd_frieze(args):
    if args.input:
        desc = parse_frieze_descriptor(load_document(args.input))
        ring, quiddity, depth = desc.ring, desc.quiddity, desc.depth
    elif args.quiddity:
        ring, quiddity, depth = ZZ, _parse_quiddity(args.quiddity), None
    else:
        raise InputError("frieze needs --quiddity or --input")
    if args.rows is not None:
        depth = args.rows
    if depth is None:
        depth = DEFAULT_ROWS
    if depth < 1:
        raise InputError("--rows must be positive")
    try:
        f = Frieze(quiddity, ring)
        return _frieze_report(f, depth, args.format, declared=args.declared_period)
    except FriezeError as exc:
        return EXIT_FAIL, f"frieze error: {exc}"


# -- universal -----------------------------------------------------------------------


def cmd_universal(args):
    r = args.rank
    if r < 1:
        raise InputError("--rank must be positive")
    names = z_names(r)
    if args.growth is not None:
        if args.growth < 1:
            raise InputError("--growth must be positive")
        s = universal_growth(args.growth, r)
        if args.format == "json":
            return EXIT_OK, dumps({"rank": r, "k": args.growth, "growth": s.to_json(), "text": s.to_text(names)})
        return EXIT_OK, s.to_text(names)
    f = Frieze(universal_quiddity(r))
    depth = args.rows if args.rows is not None else DEFAULT_ROWS
    if depth < 1:
        raise InputError("--rows must be positive")
    return _frieze_report(f, depth, args.format, names)


# -- cluster -------------------------------------------------------------------------


def _search_depth(args, problem):
    if args.depth is not None:
        if args.depth < 0:
            raise InputError("--depth must be nonnegative")
        return args.depth
    if problem.max_depth is not None:
        return problem.max_depth
    return DEFAULT_SEARCH_DEPTH


def cmd_cluster_search(args):
    problem = parse_cluster_problem(load_document(args.input))
    targets = list(dict.fromkeys(list(problem.targets) + [b for t in problem.tubes for b in t.mouth]))
    if not targets:
        raise InputError("no targets: give \"targets\" or \"tubes\"")
    depth = _search_depth(args, problem)
    res = bfs_find(problem.B, targets, depth)
    status = EXIT_OK if res.complete else EXIT_FAIL
    if args.format == "json":
        doc = {
            "B": problem.B,
            "max_depth": depth,
            "found": [
                {"d": list(dv), "depth": res.depths[dv], "path": list(res.paths[dv]),
                 "variable": res.found[dv].to_json()}
                for dv in sorted(res.found)
            ],
            "missing": [list(m) for m in res.missing],
            "seeds_visited": res.seeds_visited,
        }
        return status, dumps(doc)
    lines = []
    for dv in sorted(res.found):
        path = ",".join(map(str, res.paths[dv])) or "(initial)"
        lines.append(f"d = {dv}  depth {res.depths[dv]}  path {path}")
        lines.append(f"  {res.found[dv].to_fraction_text()}")
    for m in res.missing:
        lines.append(f"missing: {m} not reached within depth {depth}")
    lines.append(f"seeds visited: {res.seeds_visited}")
    return status, "\n".join(lines)


def _tube_variables(problem, depth):
    """Mouth variables per tube, searching the exchange graph where not supplied."""
    wanted = [b for t in problem.tubes if t.variables is None for b in t.mouth]
    found = {}
    if wanted:
        res = bfs_find(problem.B, wanted, depth)
        if not res.complete:
            return None, [f"mouth root {m} not reached within depth {depth}" for m in res.missing]
        found = res.found
    out, problems = [], []
    for t, tube in enumerate(problem.tubes, start=1):
        if tube.variables is None:
            out.append([found[b] for b in tube.mouth])
            continue
        for b, v in zip(tube.mouth, tube.variables):
            if d_vector(v) != b:
                problems.append(f"tube {t}: supplied variable has d-vector {d_vector(v)}, expected {b}")
        out.append(tube.variables)
    return out, problems


def _parse_point(text, n):
    try:
        point = [int(x.strip()) for x in text.split(",")]
    except ValueError:
        raise InputError(f"--specialize expects integers, got {text!r}") from None
    if len(point) != n:
        raise InputError(f"--specialize needs {n} values, got {len(point)}")
    return point


def run_tube_check(problem, depth, point=None, spec_depth=DEFAULT_SPECIALIZATION_DEPTH):
    """Run every tube check; returns ``(ok, document, text lines)``."""
    if not problem.tubes:
        raise InputError("tube-check needs at least one tube")
    lines = []
    problems = []
    for t, tube in enumerate(problem.tubes, start=1):
        try:
            tube_roots(TubeSpec(tuple(tube.mouth), tube.delta))
        except InvalidTubeError as exc:
            problems.append(f"tube {t}: {exc}")
    deltas = {tube.delta for tube in problem.tubes}
    if len(deltas) > 1:
        problems.append(f"tubes disagree on delta: {sorted(deltas)}")
    doc = {"B": problem.B, "max_depth": depth, "tubes": []}
    if problems:
        doc.update(ok=False, verdict="invalid tubes", problems=problems)
        return False, doc, problems
    variables, vproblems = _tube_variables(problem, depth)
    if vproblems:
        doc.update(ok=False, verdict="mouth variables unavailable", problems=vproblems)
        return False, doc, vproblems
    friezes = [tube_frieze(vs) for vs in variables]
    report = main_theorem_check(friezes)
    rs_ok = {}
    for t, f in enumerate(friezes, start=1):
        if f.period >= 2:
            rs_ok[t] = rs_identity_check(f).ok
    ok = report.ok and all(rs_ok.values())
    for t, (tube, vs, f) in enumerate(zip(problem.tubes, variables, friezes), start=1):
        entry = {
            "mouth": [list(b) for b in tube.mouth],
            "delta": list(tube.delta),
            "variables": [v.to_json() for v in vs],
        }
        lines.append(f"tube {t} (rank {f.period})")
        for b, v in zip(tube.mouth, vs):
            lines.append(f"  X{b} = {v.to_fraction_text()}")
        if t - 1 < len(report.tubes) and len(report.tubes) == len(friezes):
            v = report.tubes[t - 1]
            entry["growth"] = v.growth.to_json()
            entry["x_delta"] = v.x_delta.to_json()
        if t in rs_ok:
            entry["rs_identity"] = rs_ok[t]
            lines.append(f"  RS identity: {'pass' if rs_ok[t] else 'FAIL'}")
        doc["tubes"].append(entry)
    if report.common is not None:
        doc["x_delta"] = report.common.to_json()
        lines.append(f"X_delta = {report.common.to_fraction_text()}")
    if ok:
        verdict = "all tubes share X_delta"
    else:
        verdict = "counterexample found"
        lines.extend(report.mismatches)
        lines.extend(f"tube {t}: RS identity fails" for t, v in rs_ok.items() if not v)
    doc["problems"] = list(report.mismatches)
    if point is not None:
        sr = specialization_check(variables, point, spec_depth, report.common)
        doc["specialization"] = {
            "point": [str(x) for x in point],
            "depth": spec_depth,
            "ok": sr.ok,
            "quiddities": [[str(x) for x in q] for q in sr.quiddities],
            "growth": [str(g) for g in sr.growth],
            "x_delta": str(sr.x_delta_value),
            "violations": sr.violations,
        }
        lines.append(f"specialization at {tuple(point)}: quiddities "
                     + "; ".join(",".join(str(x) for x in q) for q in sr.quiddities))
        if sr.ok:
            lines.append(f"  entries are positive integers to depth {spec_depth}; growth coefficient {sr.x_delta_value}")
        else:
            lines.extend(f"  {v}" for v in sr.violations)
            ok = False
    lines.append(f"verdict: {verdict}")
    doc["verdict"] = verdict
    doc["ok"] = ok
    return ok, doc, lines


def cmd_tube_check(args):
    problem = parse_cluster_problem(load_document(args.input))
    depth = _search_depth(args, problem)
    point = _parse_point(args.specialize, len(problem.B)) if args.specialize else None
    spec_depth = args.rows if args.rows is not None else DEFAULT_SPECIALIZATION_DEPTH
    try:
        ok, doc, lines = run_tube_check(problem, depth, point, spec_depth)
    except SpecializationError as exc:
        return EXIT_FAIL, f"specialization error: {exc}"
    out = dumps(doc) if args.format == "json" else "\n".join(lines)
    return (EXIT_OK if ok else EXIT_FAIL), out


# -- verify -----------------------------------------------------------------------------


def _builtin_checks():
    def golden():
        a = Frieze([6, 20])
        b = Frieze([3, 5, 9])
        return (a.rows(5)[1:] == [(119, 119), (708, 2360), (14041, 14041), (83538, 278460)]
                and b.rows(3)[1:] == [(14, 44, 26), (123, 127, 121)])

    def growth():
        ok = True
        for q in ([6, 20], [3, 5, 9]):
            f = Frieze(q)
            ok &= growth_coefficient(f) == 118
            ok &= growth_coefficient(f, 2) == chebyshev_extend(118, 2)[2] == 13922
        return ok

    def unimodular():
        return all(verify_unimodularity(Frieze(q), 3 * len(q)).ok
                   for q in ([2], [3, 4], [2, 3, 5], [2, 2, 2, 7], [9, 2, 3, 4, 5]))

    def expansions():
        return all(monomial_expansion(1, i) == continuant(1, i) for i in range(9)) and all(
            cyclic_growth_poly(1, i) == continuant(1, i) - continuant(2, i - 2, nvars=max(i, 1))
            for i in range(2, 9))

    def splitting():
        return all(splitting_identity_check(i, 1, l) for i in range(1, 9) for l in range(1, i + 1))

    def independence():
        return all(universal_growth(1, r) is not None for r in range(1, 5))

    def chebyshev():
        for r in range(1, 4):
            s1, s2, s3 = (universal_growth(k, r) for k in (1, 2, 3))
            if s3 != s1 * s2 - s1 or s2 != s1 * s1 - 2:
                return False
        return True

    return [
        ("golden friezes (6,20) and (3,5,9)", golden),
        ("growth coefficients s_1 = 118, s_2 = 13922", growth),
        ("unimodularity of sample integer friezes", unimodular),
        ("continuant and cyclic monomial expansions", expansions),
        ("continuant splitting identity, i <= 8", splitting),
        ("column independence of universal s_1, r <= 4", independence),
        ("Chebyshev relation of universal growth, r <= 3", chebyshev),
    ]


def cmd_verify(args):
    results = []
    for name, check in _builtin_checks():
        try:
            ok = bool(check())
        except Exception as exc:  # a crash is a failed check, reported with its reason
            ok, name = False, f"{name} ({type(exc).__name__}: {exc})"
        results.append((name, ok))
    if args.input:
        problem = parse_cluster_problem(load_document(args.input))
        try:
            ok, _, _ = run_tube_check(problem, _search_depth(args, problem))
        except (FriezeError, LaurentPhenomenonError, SpecializationError):
            ok = False
        results.append((f"tube check on {args.input}", ok))
    all_ok = all(ok for _, ok in results)
    if args.format == "json":
        out = dumps({"backend": kernels.BACKEND, "ok": all_ok,
                     "checks": [{"name": n, "ok": ok} for n, ok in results]})
    else:
        out = "\n".join(f"{'PASS' if ok else 'FAIL'}  {n}" for n, ok in results)
    return (EXIT_OK if all_ok else EXIT_FAIL), out


# -- driver ---------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="friezegrowth", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, metavar="COMMAND")

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("frieze", help="compute a periodic frieze from its quiddity row")
    sp.add_argument("--quiddity", help="comma separated integers")
    sp.add_argument("--input", help="JSON frieze descriptor (path or inline)")
    sp.add_argument("--rows", type=int, help=f"number of rows (default {DEFAULT_ROWS})")
    sp.add_argument("--declared-period", action="store_true",
                    help="use the quiddity length instead of the minimal period for s_k")
    fmt(sp)
    sp.set_defaults(func=cmd_frieze)

    sp = sub.add_parser("universal", help="universal frieze entries and growth polynomials")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--growth", type=int, help="print the growth coefficient s_k")
    sp.add_argument("--rows", type=int, help=f"number of rows (default {DEFAULT_ROWS})")
    fmt(sp)
    sp.set_defaults(func=cmd_universal)

    sp = sub.add_parser("cluster-search", help="find cluster variables with given d-vectors")
    sp.add_argument("--input", required=True)
    sp.add_argument("--depth", type=int, help="mutation depth bound")
    fmt(sp)
    sp.set_defaults(func=cmd_cluster_search)

    sp = sub.add_parser("tube-check", help="check that all tube friezes share X_delta")
    sp.add_argument("--input", required=True)
    sp.add_argument("--depth", type=int, help="mutation depth bound")
    sp.add_argument("--specialize", help="comma separated integers, one per initial variable")
    sp.add_argument("--rows", type=int, help="depth of the specialization check (default 8)")
    fmt(sp)
    sp.set_defaults(func=cmd_tube_check)

    sp = sub.add_parser("verify", help="run the built-in identity checks")
    sp.add_argument("--input", help="also run tube-check on this cluster problem")
    sp.add_argument("--depth", type=int)
    fmt(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv) -> tuple[int, str]:
    """Execute one command; returns the exit status and the text to print."""
    parser = build_parser()
    err = io.StringIO()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else EXIT_INPUT), err.getvalue().rstrip()
    try:
        return args.func(args)
    except (MalformedInputError, InputError) as exc:
        return EXIT_INPUT, f"error: {exc}"


def main(argv=None) -> int:
    status, out = run(sys.argv[1:] if argv is None else argv)
    if out:
        print(out, file=sys.stderr if status == EXIT_INPUT else sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
