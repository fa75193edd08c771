"""Command-line front end: compute inverses, verify catalog identities on
supplied instances, run seeded fuzz campaigns, reproduce the fixed worked
instance.  JSON in, JSON report out (stdout); diagnostics go to stderr.

Exit codes partition outcomes:
  0 pass, 1 conclusion failed / not certified, 2 input or parameter error,
  3 requested inverse kind does not exist for the input,
  4 hypotheses not met, 5 generator integrity failure during fuzzing.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .linalg import DimensionError, TolerancePolicy, rel_residual, frobenius
from .inverses import (
    InverseNotDefinedError,
    core_inverse,
    drazin,
    group_inverse,
    index,
    is_star_dmp,
    moore_penrose,
    one_three,
    pseudo_core,
    spectral_idempotent,
)
from .theorems import THEOREM_SYMBOLS, reproduce_example_3_3, run_check
from .generators import MAX_BLOCK_DIM, MAX_DIM, instance_for, trial_seed
from .matrixio import (
    dumps_report,
    load_json,
    matrix_to_obj,
    parse_instance,
    parse_matrix,
)

_INVERSE_FNS = {
    "moore_penrose": moore_penrose,
    "one_three": one_three,
    "group": group_inverse,
    "drazin": drazin,
    "core": core_inverse,
    "pseudo_core": pseudo_core,
}

_KIND_ALIASES = {
    "mp": "moore_penrose",
    "pinv": "moore_penrose",
    "one3": "one_three",
    "pcore": "pseudo_core",
}

_COMPUTE_KINDS = tuple(_INVERSE_FNS) + ("index", "spectral_idempotent", "star_dmp")

_DEFAULT_FUZZ_DIMS = {
    "L2_5a": (3, 3), "L2_5b": (3, 3),
    "T4_1": (3, 3), "C4_2": (3, 3), "T4_3": (3, 3),
    "C4_4": (3, 3), "T4_5": (3, 3), "C4_6": (3, 3),
}


def _policy_args(parser):
    parser.add_argument("--rank-tol", type=float, default=None,
                        help="relative singular-value cutoff for rank")
    parser.add_argument("--eq-tol", type=float, default=None,
                        help="relative Frobenius threshold for equality")
    parser.add_argument("--res-tol", type=float, default=None,
                        help="certificate acceptance threshold")


def _policy_from(args) -> TolerancePolicy:
    kwargs = {}
    if args.rank_tol is not None:
        kwargs["rank_rel_tol"] = args.rank_tol
    if args.eq_tol is not None:
        kwargs["eq_rel_tol"] = args.eq_tol
    if args.res_tol is not None:
        kwargs["residual_tol"] = args.res_tol
    return TolerancePolicy(**kwargs)


def _policy_obj(tol: TolerancePolicy) -> dict:
    return {
        "rank_rel_tol": tol.rank_rel_tol,
        "eq_rel_tol": tol.eq_rel_tol,
        "residual_tol": tol.residual_tol,
    }


def _check_obj(check) -> dict:
    return {"label": check.label, "value": check.value, "pass": check.passed}


def _report_obj(report, with_witnesses=True) -> dict:
    out = {
        "theorem_id": report.theorem_id,
        "verdict": report.verdict,
        "hypothesis_checks": [_check_obj(c) for c in report.hypothesis_checks],
        "conclusion_checks": [_check_obj(c) for c in report.conclusion_checks],
    }
    if with_witnesses:
        out["witnesses"] = report.witnesses
    return out


def _emit(report: dict) -> None:
    sys.stdout.write(dumps_report(report) + "\n")


def _fail(message: str, code: int = 2) -> int:
    sys.stderr.write(f"error: {message}\n")
    return code


def _parse_dims(args, theorem):
    if getattr(args, "dims", None):
        parts = args.dims.split(",")
        try:
            dims = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"--dims must be integers, got {args.dims!r}")
        if len(dims) not in (1, 2):
            raise ValueError("--dims takes one or two comma-separated integers")
        return dims
    if getattr(args, "dim", None):
        return (args.dim,)
    return _DEFAULT_FUZZ_DIMS.get(theorem, (4,))


# ---------------------------------------------------------------------------
# compute


def cmd_compute(args) -> int:
    tol = _policy_from(args)
    kind = _KIND_ALIASES.get(args.kind, args.kind)
    if kind not in _COMPUTE_KINDS:
        return _fail(f"unknown kind {args.kind!r}; choose from "
                     f"{sorted(_COMPUTE_KINDS + tuple(_KIND_ALIASES))}")
    try:
        A = parse_matrix(load_json(args.input))
    except (OSError, ValueError) as exc:
        return _fail(str(exc))

    report = {
        "command": "compute",
        "version": __version__,
        "kind": kind,
        "policy": _policy_obj(tol),
        "input": args.input,
    }
    try:
        if kind == "index":
            report["result"] = index(A, tol)
            _emit(report)
            return 0
        if kind == "star_dmp":
            flag, witness = is_star_dmp(A, tol)
            report["result"] = {"is_star_dmp": flag, "witness_exponent": witness}
            _emit(report)
            return 0
        if kind == "spectral_idempotent":
            P = spectral_idempotent(A, tol)
            residuals = {
                "idempotent": rel_residual(P @ P, P),
                "commutes": frobenius(P @ A - A @ P) / max(
                    1.0, frobenius(P) * frobenius(A)),
            }
            report["result"] = matrix_to_obj(P)
            report["residuals"] = residuals
            certified = max(residuals.values()) <= tol.residual_tol
            report["certified"] = certified
            _emit(report)
            return 0 if certified else 1
        result = _INVERSE_FNS[kind](A, tol)
    except InverseNotDefinedError as exc:
        sys.stderr.write(f"error: {exc}\n")
        report["error"] = str(exc)
        _emit(report)
        return 3
    except (DimensionError, ValueError) as exc:
        return _fail(str(exc))
    report["result"] = matrix_to_obj(result.inverse)
    report["residuals"] = result.residuals
    report["index_used"] = result.index_used
    report["certified"] = result.certified(tol)
    _emit(report)
    return 0 if result.certified(tol) else 1


# ---------------------------------------------------------------------------
# verify


_VERDICT_EXIT = {"pass": 0, "fail": 1, "hypotheses_not_met": 4}


def cmd_verify(args) -> int:
    tol = _policy_from(args)
    theorem = args.theorem
    if theorem not in THEOREM_SYMBOLS:
        return _fail(f"unknown theorem id {theorem!r}; known: "
                     f"{sorted(THEOREM_SYMBOLS)}")
    symbols = THEOREM_SYMBOLS[theorem]
    instance = {}
    if symbols:
        if not args.input:
            return _fail(f"{theorem} requires --input with symbols {list(symbols)}")
        try:
            instance = parse_instance(load_json(args.input), symbols)
        except (OSError, ValueError) as exc:
            return _fail(str(exc))
    try:
        report = run_check(theorem, instance, tol)
    except (DimensionError, ValueError, KeyError) as exc:
        return _fail(str(exc))
    out = {
        "command": "verify",
        "version": __version__,
        "theorem": theorem,
        "policy": _policy_obj(tol),
        "input": args.input,
        "report": _report_obj(report),
    }
    _emit(out)
    return _VERDICT_EXIT[report.verdict]


# ---------------------------------------------------------------------------
# fuzz


def cmd_fuzz(args) -> int:
    tol = _policy_from(args)
    theorem = args.theorem
    if theorem not in THEOREM_SYMBOLS:
        return _fail(f"unknown theorem id {theorem!r}; known: "
                     f"{sorted(THEOREM_SYMBOLS)}")
    if args.trials < 1:
        return _fail(f"--trials must be >= 1, got {args.trials}")
    try:
        dims = _parse_dims(args, theorem)
        if any(d < 1 for d in dims):
            raise ValueError(f"dimensions must be positive, got {dims}")
        cap = MAX_BLOCK_DIM if len(dims) == 2 else MAX_DIM
        if any(d > cap for d in dims):
            raise ValueError(f"dimensions capped at {cap} for this theorem")
    except ValueError as exc:
        return _fail(str(exc))

    started = time.perf_counter()
    results = []
    summary = {"pass": 0, "fail": 0, "hypotheses_not_met": 0, "degenerate": 0}
    for trial in range(args.trials):
        seed = trial_seed(args.seed, trial)
        try:
            instance = instance_for(theorem, dims, seed)
            report = run_check(theorem, instance.matrices, tol)
        except ValueError as exc:
            return _fail(f"trial {trial}: {exc}")
        summary[report.verdict] += 1
        if instance.degenerate:
            summary["degenerate"] += 1
        results.append({
            "trial": trial,
            "verdict": report.verdict,
            "degenerate": instance.degenerate,
            "hypothesis_checks": [_check_obj(c) for c in report.hypothesis_checks],
            "conclusion_checks": [_check_obj(c) for c in report.conclusion_checks],
        })
    elapsed = time.perf_counter() - started

    out = {
        "command": "fuzz",
        "version": __version__,
        "theorem": theorem,
        "policy": _policy_obj(tol),
        "dims": list(dims),
        "trials": args.trials,
        "seed": args.seed,
        "results": results,
        "summary": summary,
    }
    _emit(out)
    sys.stderr.write(f"fuzz {theorem}: {summary} in {elapsed:.2f}s\n")
    if summary["hypotheses_not_met"]:
        return 5
    if summary["fail"]:
        return 1
    return 0


# ---------------------------------------------------------------------------
# example33


def cmd_example33(args) -> int:
    tol = _policy_from(args)
    report = reproduce_example_3_3(tol)
    out = {
        "command": "example33",
        "version": __version__,
        "policy": _policy_obj(tol),
        "report": _report_obj(report),
    }
    _emit(out)
    for check in report.conclusion_checks:
        marker = "ok" if check.passed else "FAIL"
        sys.stderr.write(f"  [{marker}] {check.label}: {check.value}\n")
    sys.stderr.write(f"note: {report.witnesses['note']}\n")
    return 0 if report.verdict == "pass" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geninv",
        description="Generalized inverses of dense complex matrices with "
                    "certificates, plus a verifier for a catalog of additive "
                    "and block-matrix pseudo-core identities.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute one inverse kind (or index, "
                                       "spectral idempotent, star-DMP test)")
    p.add_argument("--kind", required=True)
    p.add_argument("--input", required=True, help="matrix JSON file")
    _policy_args(p)
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("verify", help="verify one catalog identity on a "
                                      "supplied instance")
    p.add_argument("--theorem", required=True)
    p.add_argument("--input", help="instance JSON file keyed by symbol names")
    _policy_args(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("fuzz", help="run a seeded campaign of generated "
                                    "instances through one identity")
    p.add_argument("--theorem", required=True)
    p.add_argument("--dim", type=int, help="dimension for single-matrix results")
    p.add_argument("--dims", help="comma-separated block dimensions, e.g. 3,2")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    _policy_args(p)
    p.set_defaults(fn=cmd_fuzz)

    p = sub.add_parser("example33", help="reproduce the fixed 2x2 worked "
                                         "instance and its discrepancy notes")
    _policy_args(p)
    p.set_defaults(fn=cmd_example33)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BrokenPipeError:
        return 2


if __name__ == "__main__":
    sys.exit(main())
