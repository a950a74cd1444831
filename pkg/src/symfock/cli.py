"""Command-line front end: basis expansion, identity sweeps, KP checking.

Machine-readable output is line-delimited JSON on stdout; human-readable
summaries go to stderr.  Exit codes: 0 success/verified, 1 mathematical
counterexample, 2 usage or input error.  SF_THREADS caps the worker pool
used by `verify` (default: available parallelism).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bases import (
    complete_h,
    dual_schur,
    elementary_e,
    hall_littlewood_oracle,
    hall_littlewood_row,
    q_coefficient,
    schur,
    schur_oracle,
    expand_in_variables,
    varpoly_to_json,
)
from .kp import is_tau, omega_apply, search_negative_control, tensor_to_json
from .partitions import as_partition
from .symfunc import SymFunc, symfunc_from_json, symfunc_to_json
from .verify import DEFAULT_OPTIONS, SUITE_NAMES, SweepOptions, run_suite
from .vertex import basis_via_vertex, generating_coefficient_direct

ROW_BASES = ("h", "e", "q")
PARTITION_BASES = ("schur", "hl", "dualschur")


class UsageError(Exception):
    pass


def _parse_partition(text: str):
    text = text.strip()
    if text in ("", "-", "[]"):
        return ()
    text = text.strip("[]")
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"bad partition syntax: {text!r} (expected e.g. 3,1)") from None
    if parts == (0,):
        return ()
    try:
        return as_partition(parts)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_charges(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise UsageError(f"bad charge list: {text!r} (expected e.g. -2,-1,0,1,2)") from None


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad rational: {text!r}") from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _note(msg: str) -> None:
    sys.stderr.write(msg + "\n")


# ---------------------------------------------------------------------------
# expand


def _cmd_expand(args) -> int:
    basis = args.basis
    la = _parse_partition(args.partition)
    route = args.route
    if basis in ROW_BASES:
        if len(la) > 1:
            raise UsageError(f"basis {basis!r} takes a single index k, got {list(la)}")
        k = la[0] if la else 0
        if route not in ("det", "oracle"):
            raise UsageError(f"basis {basis!r} supports routes det, oracle")
        f = {"h": complete_h, "e": elementary_e, "q": q_coefficient}[basis](k)
        if route == "oracle":
            return _emit_varpoly(f, args, la=(k,) if k else ())
        _emit(symfunc_to_json(f))
        return 0
    if basis not in PARTITION_BASES:
        raise UsageError(f"unknown basis {basis!r}")
    kind = {"schur": "schur", "hl": "hall_littlewood", "dualschur": "dual_schur"}[basis]
    routes = {
        "schur": ("det", "vertex", "generating", "oracle"),
        "hl": ("vertex", "generating", "oracle"),
        "dualschur": ("det", "vertex", "generating"),
    }[basis]
    if route not in routes:
        raise UsageError(f"basis {basis!r} supports routes {', '.join(routes)}")
    if route == "oracle":
        n = args.n if args.n is not None else max(sum(la), 1)
        if n < len(la):
            raise UsageError(f"oracle route needs n >= len(la) = {len(la)}")
        oracle = schur_oracle if basis == "schur" else hall_littlewood_oracle
        _emit(varpoly_to_json(oracle(la, n), n))
        return 0
    if route == "det":
        f = schur(la) if basis == "schur" else dual_schur(la)
    elif route == "vertex":
        f = basis_via_vertex(kind, la)
    else:
        f = generating_coefficient_direct(kind, la)
    _emit(symfunc_to_json(f))
    return 0


def _emit_varpoly(f: SymFunc, args, la) -> int:
    n = args.n if args.n is not None else max(f.degree(), 1)
    _emit(varpoly_to_json(expand_in_variables(f, n), n))
    return 0


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args) -> int:
    suite = args.suite
    if suite not in SUITE_NAMES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    base = DEFAULT_OPTIONS[suite]
    opts = SweepOptions(
        max_degree=args.max_degree if args.max_degree is not None else base.max_degree,
        max_mode=args.max_mode if args.max_mode is not None else base.max_mode,
        charges=_parse_charges(args.charges) if args.charges else base.charges,
        betas=tuple(_parse_fraction(b) for b in args.beta) if args.beta else base.betas,
        corrupt=args.corrupt,
    )
    total = 0
    for result in run_suite(suite, opts):
        total += 1
        if result.ok:
            _emit({"suite": result.suite, "identity": result.name, "status": "ok"})
        else:
            _emit(
                {
                    "suite": result.suite,
                    "identity": result.name,
                    "status": "fail",
                    "witness": result.witness,
                }
            )
            _note(f"FAIL {result.suite}:{result.name}")
            return 1
    _note(f"{suite}: {total} identities verified")
    return 0


# ---------------------------------------------------------------------------
# kp


def _cmd_kp(args) -> int:
    sources = [s for s in (args.schur, args.dualschur, args.file) if s is not None]
    if len(sources) != 1:
        raise UsageError("exactly one of --schur, --dualschur, --file is required")
    if args.schur is not None:
        tau = schur(_parse_partition(args.schur))
        label = f"schur[{args.schur}]"
    elif args.dualschur is not None:
        tau = dual_schur(_parse_partition(args.dualschur))
        label = f"dualschur[{args.dualschur}]"
    else:
        try:
            with open(args.file, "r", encoding="utf-8") as fh:
                payload = json.load(fh)
            tau = symfunc_from_json(payload)
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from None
        except (json.JSONDecodeError, ValueError) as exc:
            raise UsageError(f"malformed tau file {args.file}: {exc}") from None
        label = args.file
    state = omega_apply(tau, tau, deformed=args.deformed)
    if state.is_zero():
        _emit({"tau": True, "source": label, "deformed": args.deformed})
        _note("TAU")
        return 0
    _emit(tensor_to_json(state))
    _note(f"NOT A TAU FUNCTION: {label}")
    return 1


def _cmd_kp_search(args) -> int:
    found = search_negative_control(args.degree_bound)
    if found is None:
        _emit({"found": False})
        _note("search space exhausted, no counterexample")
        return 0
    tau, state = found
    _emit({"found": True, "tau": symfunc_to_json(tau), "witness": tensor_to_json(state)})
    _note("found a certified non-tau combination")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symfock",
        description="Exact Q(t) symmetric functions, vertex operators, and KP checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="expand a basis element as JSON")
    p_expand.add_argument("basis", choices=ROW_BASES + PARTITION_BASES)
    p_expand.add_argument("partition", help="comma-separated parts, e.g. 3,1 (index k for h/e/q)")
    p_expand.add_argument("--route", default="det", help="det | vertex | generating | oracle")
    p_expand.add_argument("-n", type=int, default=None, help="variable count for the oracle route")
    p_expand.set_defaults(func=_cmd_expand)

    p_verify = sub.add_parser("verify", help="run one identity sweep")
    p_verify.add_argument("suite", help="|".join(SUITE_NAMES))
    p_verify.add_argument("--max-degree", type=int, default=None)
    p_verify.add_argument("--max-mode", type=int, default=None)
    p_verify.add_argument("--charges", default=None, help="comma-separated, e.g. --charges=-2,-1,0,1,2")
    p_verify.add_argument("--beta", action="append", default=None, help="repeatable rational")
    p_verify.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    p_verify.set_defaults(func=_cmd_verify)

    p_kp = sub.add_parser("kp", help="check the bilinear identity for a tau candidate")
    p_kp.add_argument("--schur", default=None, metavar="PARTITION")
    p_kp.add_argument("--dualschur", default=None, metavar="PARTITION")
    p_kp.add_argument("--file", default=None, help="tau as symmetric-function JSON")
    p_kp.add_argument("--deformed", action="store_true")
    p_kp.set_defaults(func=_cmd_kp)

    p_search = sub.add_parser("kp-search", help="search small Schur combinations violating KP")
    p_search.add_argument("--degree-bound", type=int, default=4)
    p_search.set_defaults(func=_cmd_kp_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        _note(f"error: {exc}")
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
