"""Command-line front end.  Every subcommand prints one JSON document on stdout.

Exit codes: 0 success, 1 verification failure, 2 malformed input, 3 bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import bposet, chimatroid, complexes, strata
from .errors import BoundExceededError, ImmvarError
from .exactalg import parse_scalar, scalar_to_json
from .immanant import Matrix, generic_matrix, immanant, parametric_equations
from .instance import Instance, SpecError, load_instance
from .permgrp import rho
from .suites import SUITES, run_suite
from .symtensor import apply_idempotent, coords_in_basis, decomposable, dim_formula, rank_of_image

EXIT_OK, EXIT_FAIL, EXIT_SPEC, EXIT_BOUND = 0, 1, 2, 3


_INT_ARRAY = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def _dump(obj) -> str:
    """Indented, key-sorted JSON with integer arrays kept on one line."""
    text = json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)
    return _INT_ARRAY.sub(lambda m: "[" + ", ".join(v.strip() for v in m.group(1).split(",")) + "]", text)


def _index(text: str, k: int | None = None, name: str = "index") -> tuple:
    try:
        parts = text.replace(",", " ").split()
        if len(parts) == 1 and len(parts[0]) > 1:
            parts = list(parts[0])
        x = tuple(int(p) for p in parts)
    except ValueError:
        raise SpecError(f"{name}: cannot read multi-index {text!r}") from None
    if k is not None and len(x) != k:
        raise SpecError(f"{name}: expected {k} entries, got {len(x)}")
    return x


def _read_json(path: str, name: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise SpecError(f"{name}: {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"{name}: {path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _factors(path: str, inst: Instance) -> list[list]:
    data = _read_json(path, "--factors")
    if not isinstance(data, list) or len(data) != inst.k:
        raise SpecError(f"--factors: expected a list of {inst.k} vectors")
    out = []
    for i, v in enumerate(data):
        if not isinstance(v, list) or len(v) != inst.n:
            raise SpecError(f"--factors[{i}]: expected a vector of length {inst.n}")
        try:
            out.append([parse_scalar(c) for c in v])
        except (ValueError, TypeError) as exc:
            raise SpecError(f"--factors[{i}]: {exc}") from None
    return out


def _poset(inst: Instance):
    return bposet.build(inst.chi, inst.n, inst.bound("work", None), enum_bound=inst.bound("enumeration", None))


def _lists(xs) -> list:
    return [list(x) for x in xs]


def cmd_poset(args, inst: Instance) -> int:
    P = _poset(inst)
    lattice, witness = P.is_lattice()
    out = {
        "size": len(P),
        "covers": len(P.covers()),
        "graded": P.graded,
        "minimal": _lists(P.minimal()),
        "maximal": _lists(P.maximal()),
        "lattice": lattice,
        "distributive": P.is_distributive() if lattice else False,
    }
    if witness:
        out["lattice_witness"] = {
            key: (_lists(val) if isinstance(val, list) else val) for key, val in witness.items()
        }
    if P.graded:
        coeffs = bposet.rank_generating(P)
        out["rank_polynomial"] = bposet.format_qpoly(coeffs)
        out["rank_coefficients"] = list(coeffs)
        out["rank_symmetric"] = bposet.is_rank_symmetric(P)
    if args.dot:
        Path(args.dot).write_text(P.to_dot())
    if args.json:
        Path(args.json).write_text(P.to_json())
    print(_dump(out))
    return EXIT_OK


def cmd_polya(args, inst: Instance) -> int:
    coeffs = bposet.polya_rank_generating(inst.group, inst.k, inst.n)
    print(_dump({"polynomial": bposet.format_qpoly(coeffs), "coefficients": list(coeffs)}))
    return EXIT_OK


def cmd_witt(args) -> int:
    if args.k < 1 or args.n < 1:
        raise SpecError("witt: k and n must be positive")
    print(_dump({"k": args.k, "n": args.n, "count": bposet.witt_count(args.k, args.n)}))
    return EXIT_OK


def cmd_dim(args, inst: Instance) -> int:
    d = dim_formula(inst.chi, inst.n)
    r = rank_of_image(inst.chi, inst.n, inst.bound("enumeration", None))
    print(_dump({"dim_formula": d, "rank_of_image": r, "agree": d == r}))
    return EXIT_OK


def cmd_immanant(args, inst: Instance) -> int:
    if args.matrix:
        rows = _read_json(args.matrix, "--matrix")
        try:
            M = Matrix.of([[parse_scalar(c) for c in row] for row in rows])
        except (ValueError, TypeError) as exc:
            raise SpecError(f"--matrix: {exc}") from None
    else:
        M = generic_matrix(inst.n, inst.k)
    x = _index(args.x, inst.k, "--x")
    y = _index(args.y, inst.k, "--y")
    try:
        val = immanant(inst.chi, x, y, M)
    except (ValueError, IndexError) as exc:
        raise SpecError(str(exc)) from None
    value = str(val) if not args.matrix else scalar_to_json(val)
    print(_dump({"x": list(x), "y": list(y), "symbolic": not args.matrix, "value": value}))
    return EXIT_OK


def cmd_equations(args, inst: Instance) -> int:
    if args.stratum:
        if not inst.chi.is_trivial():
            raise SpecError("--stratum: strata equations need the trivial character")
        x = _index(args.stratum, inst.k, "--stratum")
        eqs = strata.stratum_equations(inst.group, inst.k, inst.n, x, _poset(inst))
        out = {"stratum": list(x), "dimension": rho(x)}
    else:
        eqs = parametric_equations(inst.chi, inst.n, inst.bound("enumeration", None))
        out = {}
    out["equations"] = [{"index": list(z), "polynomial": str(p)} for z, p in sorted(eqs.items())]
    print(_dump(out))
    return EXIT_OK


def cmd_matroid_check(args, inst: Instance) -> int:
    P = _poset(inst)
    if args.subset:
        data = _read_json(args.subset, "--subset")
        try:
            X = sorted({tuple(int(v) for v in x) for x in data})
        except (TypeError, ValueError):
            raise SpecError("--subset: expected a list of multi-indices") from None
        bad = [x for x in X if x not in P]
        if bad:
            raise SpecError(f"--subset: {list(bad[0])} is not an element of B")
    else:
        X = chimatroid.projected_support(inst.chi, _factors(args.factors, inst))
    verdict = chimatroid.is_chi_matroid(P, X, inst.bound("relabel", chimatroid.RELABEL_BOUND))
    out = verdict.to_dict()
    out["subset"] = _lists(X)
    print(_dump(out))
    return EXIT_OK


def cmd_support(args, inst: Instance) -> int:
    v = apply_idempotent(inst.chi, decomposable(_factors(args.factors, inst)))
    if v.is_zero():
        print(_dump({"support": [], "zero": True}))
        return EXIT_OK
    coords = coords_in_basis(inst.chi, v)
    print(_dump({
        "support": _lists(sorted(coords)),
        "coordinates": [{"index": list(x), "value": scalar_to_json(c)} for x, c in sorted(coords.items())],
        "zero": False,
    }))
    return EXIT_OK


def cmd_mobius(args, inst: Instance) -> int:
    P = _poset(inst)
    x, y = _index(args.x, inst.k, "--x"), _index(args.y, inst.k, "--y")
    for z, name in ((x, "--x"), (y, "--y")):
        if z not in P:
            raise SpecError(f"{name}: {list(z)} is not an element of B")
    if not P.leq(x, y):
        raise SpecError(f"{list(x)} is not below {list(y)}")
    print(_dump({"x": list(x), "y": list(y), "mobius": P.mobius(x, y)}))
    return EXIT_OK


def cmd_shell(args, inst: Instance) -> int:
    P = _poset(inst)
    if args.interval:
        x, y = (_index(t, inst.k, "--interval") for t in args.interval)
        if x not in P or y not in P or not P.leq(x, y):
            raise SpecError("--interval: endpoints must be comparable elements of B")
        C = complexes.closed_interval_complex(P, x, y)
    else:
        C = complexes.order_complex(P)
    cap = args.cap if args.cap is not None else inst.bound("facet_cap", complexes.FACET_CAP)
    budget = inst.bound("step_budget", complexes.STEP_BUDGET)
    result = complexes.shellable(C, cap, budget)
    out = {"facets": len(C), "pure": C.is_pure(), "shelling": result.to_dict()}
    try:
        out["f_vector"] = list(complexes.f_vector(C))
        out["reduced_euler_characteristic"] = complexes.euler_characteristic(C)
    except BoundExceededError:
        out["f_vector"] = None
    print(_dump(out))
    return EXIT_OK


def cmd_chow(args, inst: Instance) -> int:
    if not inst.chi.is_trivial():
        raise SpecError("chow: needs the trivial character")
    gens = strata.chow_generators(inst.group, inst.k, inst.n, _poset(inst))
    hp = strata.hp_upper_bound(inst.group, inst.k, inst.n)
    print(_dump({
        "generators": [{"index": list(x), "dimension": d} for x, d in gens],
        "generators_note": "generators, possibly redundant",
        "hp_upper_bound": bposet.format_qpoly(hp),
        "hp_upper_bound_coefficients": list(hp),
    }))
    return EXIT_OK


def _colour(text: str, ok: bool) -> str:
    if os.environ.get("NO_COLOR") is not None or not sys.stdout.isatty():
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def cmd_verify(args) -> int:
    names = [args.suite] if args.suite else list(SUITES)
    for name in names:
        if name not in SUITES:
            raise SpecError(f"--suite: unknown suite {name!r} (known: {', '.join(SUITES)})")
    if args.parallel and len(names) > 1:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(run_suite, names, [args.seed] * len(names)))
    else:
        results = [run_suite(name, args.seed) for name in names]
    ok = all(r.ok for r in results)
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        detail = f" ({r.failure})" if r.failure else ""
        print(_colour(f"{status} {r.name}: {r.checked} checks{detail}", r.ok), file=sys.stderr)
    print(_dump({"seed": args.seed, "ok": ok, "suites": [r.to_dict() for r in results]}))
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="immvar", description="Exact computations for immanant varieties.")
    p.add_argument("--parallel", action="store_true", help="run independent suites in worker processes")
    sub = p.add_subparsers(dest="command", required=True)

    def with_spec(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("spec", help="instance JSON file")
        return sp

    sp = with_spec("poset", "build B_chi(k,n) and report its structure")
    sp.add_argument("--dot", help="write the Hasse diagram as Graphviz DOT")
    sp.add_argument("--json", help="write elements, covers and ranks as JSON")
    with_spec("polya", "Polya rank-generating polynomial")
    sp = sub.add_parser("witt", help="number of Lyndon words")
    sp.add_argument("k", type=int)
    sp.add_argument("n", type=int)
    with_spec("dim", "dimension formula against an exact rank computation")
    sp = with_spec("immanant", "chi_{x,y}-immanant of a matrix (generic n x k when --matrix is absent)")
    sp.add_argument("--matrix", help="JSON list of rows; entries are ints or rational strings")
    sp.add_argument("--x", required=True, help="row multi-index, e.g. 112")
    sp.add_argument("--y", required=True, help="column multi-index, e.g. 123")
    sp = with_spec("equations", "parametric equations, or stratum equations with --stratum")
    sp.add_argument("--stratum", help="element x of B; restrict to the closed stratum of x")
    sp = with_spec("matroid-check", "chi-matroid verdict for a subset or a projected decomposable point")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--subset", help="JSON list of elements of B")
    group.add_argument("--factors", help="JSON list of k factor vectors of length n")
    sp = with_spec("support", "support of the projected decomposable point")
    sp.add_argument("--factors", required=True, help="JSON list of k factor vectors of length n")
    sp = with_spec("mobius", "Mobius function of B")
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)
    sp = with_spec("shell", "shelling search on the order complex of B or of an interval")
    sp.add_argument("--interval", nargs=2, metavar=("X", "Y"))
    sp.add_argument("--cap", type=int, help="facet cap for exhaustive search")
    with_spec("chow", "strata generators with dimensions and the HP bound")
    sp = sub.add_parser("verify", help="run invariant suites")
    sp.add_argument("--suite", help="one suite name; all suites when omitted")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--parallel", action="store_true", default=argparse.SUPPRESS)
    return p


COMMANDS = {
    "poset": cmd_poset,
    "polya": cmd_polya,
    "dim": cmd_dim,
    "immanant": cmd_immanant,
    "equations": cmd_equations,
    "matroid-check": cmd_matroid_check,
    "support": cmd_support,
    "mobius": cmd_mobius,
    "shell": cmd_shell,
    "chow": cmd_chow,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_SPEC if exc.code else EXIT_OK
    try:
        if args.command == "witt":
            return cmd_witt(args)
        if args.command == "verify":
            return cmd_verify(args)
        inst = load_instance(args.spec)
        return COMMANDS[args.command](args, inst)
    except BoundExceededError as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (SpecError, ImmvarError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC


if __name__ == "__main__":
    sys.exit(main())
