"""Command-line front end.

Subcommands: hilbert, coeffs, verify, betti.  Problem files are JSON; the
schema is documented in the README and validated before any computation.
Output is a human table by default or JSON with --json; JSON output is
byte-deterministic for fixed input and encodes lengths and coefficients as
decimal strings.

Exit codes: 0 success (verify: overall pass), 1 internal inconsistency,
2 schema error, 3 hypothesis failure (suppressed by --force), 4 fit
instability.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import ParseError, RingContext, is_prime, parse_polynomial
from .graded import diagonal_cokernel
from .hilbert import FitInstabilityError, HilbertDataset, chern_sign, cm_test
from .ideals import Ideal, NotFiniteLengthError
from .resolutions import en_betti
from .verifier import (ProblemInstance, check_hypotheses, hilbert_samuel,
                       run_verification)

__all__ = ["main", "SchemaError", "load_problem", "build_instance"]

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_SCHEMA = 2
EXIT_HYPOTHESIS = 3
EXIT_FIT = 4

_ALLOWED_KEYS = {"characteristic", "variables", "monomial_order", "ideals",
                 "parameters", "max_power"}
_ORDERS = {"grevlex", "lex"}


class SchemaError(ValueError):
    """Raised when a problem file does not match the documented schema."""


def load_problem(path: str) -> dict:
    """Read and schema-validate a problem file (no algebra yet)."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            raw = json.load(handle)
    except OSError as exc:
        raise SchemaError(f"cannot read problem file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise SchemaError("problem file must be a JSON object")
    unknown = set(raw) - _ALLOWED_KEYS
    if unknown:
        raise SchemaError(f"unknown keys: {sorted(unknown)}")
    for key in ("variables", "ideals", "parameters"):
        if key not in raw:
            raise SchemaError(f"missing required key {key!r}")

    characteristic = raw.get("characteristic", 32003)
    if not isinstance(characteristic, int) or not is_prime(characteristic):
        raise SchemaError("characteristic must be a prime integer")

    variables = raw["variables"]
    if (not isinstance(variables, list) or not variables
            or not all(isinstance(v, str) for v in variables)):
        raise SchemaError("variables must be a nonempty list of strings")

    order = raw.get("monomial_order", "grevlex")
    if order not in _ORDERS:
        raise SchemaError(f"monomial_order must be one of {sorted(_ORDERS)}")

    ideals = raw["ideals"]
    if (not isinstance(ideals, list) or not ideals
            or not all(isinstance(block, list) and block
                       and all(isinstance(s, str) for s in block)
                       for block in ideals)):
        raise SchemaError("ideals must be a nonempty list of nonempty "
                          "lists of polynomial strings")

    parameters = raw["parameters"]
    if (not isinstance(parameters, list) or not parameters
            or not all(isinstance(s, str) for s in parameters)):
        raise SchemaError("parameters must be a nonempty list of "
                          "polynomial strings")

    max_power = raw.get("max_power")
    if max_power is not None and (not isinstance(max_power, int)
                                  or max_power < 1):
        raise SchemaError("max_power must be a positive integer")

    return {
        "characteristic": characteristic,
        "variables": variables,
        "monomial_order": order,
        "ideals": ideals,
        "parameters": parameters,
        "max_power": max_power,
    }


class HypothesisFailure(ValueError):
    """Raised when instance construction hits a hypothesis-level violation."""


def build_instance(problem: dict) -> ProblemInstance:
    """Parse polynomials and assemble the instance.

    Inhomogeneous generators or parameters are hypothesis-level failures
    (the graded machinery cannot run on them), reported before any ideal is
    built.
    """
    try:
        ctx = RingContext(problem["variables"], problem["characteristic"],
                          problem["monomial_order"])
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    try:
        ideal_polys = [[parse_polynomial(text, ctx) for text in block]
                       for block in problem["ideals"]]
        parameters = [parse_polynomial(text, ctx)
                      for text in problem["parameters"]]
    except ParseError as exc:
        raise SchemaError(f"polynomial syntax: {exc}") from exc
    for block in ideal_polys:
        for g in block:
            if not g.is_homogeneous():
                raise HypothesisFailure(
                    f"generators_homogeneous: generator {g} is not homogeneous")
    for f in parameters:
        if f.is_zero() or not f.is_homogeneous() or f.degree() < 1:
            raise HypothesisFailure(
                f"parameters_homogeneous: parameter {f} must be nonzero "
                "homogeneous of degree >= 1")
    ideals = [Ideal(ctx, block) for block in ideal_polys]
    return ProblemInstance(ctx, ideals, parameters,
                           max_power=problem["max_power"])


def _emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _gate_hypotheses(inst, force: bool):
    """Returns (fragment, exit_code or None)."""
    fragment = check_hypotheses(inst)
    if fragment["all_pass"]:
        return fragment, None
    failing = [c["name"] for c in fragment["checks"] if not c["passed"]]
    if force:
        print(f"warning: hypothesis checks skipped by --force "
              f"(failing: {', '.join(failing)})", file=sys.stderr)
        return fragment, None
    print(f"hypothesis failure: {', '.join(failing)}", file=sys.stderr)
    return fragment, EXIT_HYPOTHESIS


def _collect_values(inst, jobs: int) -> dict:
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {n: pool.submit(hilbert_samuel, inst.core, inst.J, n)
                       for n in range(1, inst.max_power + 1)}
            return {n: futures[n].result() for n in sorted(futures)}
    return {n: hilbert_samuel(inst.core, inst.J, n)
            for n in range(1, inst.max_power + 1)}


def _load_and_build(args) -> ProblemInstance:
    problem = load_problem(args.file)
    if args.max_power is not None:
        problem["max_power"] = args.max_power
    return build_instance(problem)


def cmd_hilbert(args) -> int:
    inst = _load_and_build(args)
    _, gate = _gate_hypotheses(inst, args.force)
    if gate is not None:
        return gate
    values = _collect_values(inst, args.jobs)
    if args.json:
        _emit_json([{"n": n, "length": str(values[n])} for n in sorted(values)])
    else:
        print(f"{'n':>4}  {'H(K,n)':>12}")
        for n in sorted(values):
            print(f"{n:>4}  {values[n]:>12}")
    return EXIT_OK


def cmd_coeffs(args) -> int:
    inst = _load_and_build(args)
    _, gate = _gate_hypotheses(inst, args.force)
    if gate is not None:
        return gate
    values = _collect_values(inst, args.jobs)
    dataset = HilbertDataset.fit(values, inst.d)
    model = diagonal_cokernel(inst.ideals)
    cm = cm_test(dataset.coefficients[0], values[1])
    e1 = dataset.coefficients[1] if len(dataset.coefficients) > 1 else 0
    payload = {
        "e": [str(c) for c in dataset.coefficients],
        "n0": dataset.n0,
        "cm": cm.is_cm,
        "chern_sign": chern_sign(e1),
        "lambda_L": str(model.length),
    }
    if args.json:
        _emit_json(payload)
    else:
        print("e:          " + ", ".join(payload["e"]))
        print(f"n0:         {payload['n0']}")
        print(f"cm:         {payload['cm']}")
        print(f"chern_sign: {payload['chern_sign']}")
        print(f"lambda_L:   {payload['lambda_L']}")
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = _load_and_build(args)
    fragment, gate = _gate_hypotheses(inst, args.force)
    if gate is not None:
        report = {"hypotheses": fragment, "overall": "hypothesis_failure"}
        if args.json:
            _emit_json(report)
        return gate
    values = _collect_values(inst, args.jobs)
    report = run_verification(inst, force=args.force, hilbert_values=values)
    if args.json:
        _emit_json(report)
    else:
        _print_report(report)
    return EXIT_OK if report.get("overall") == "pass" else EXIT_INTERNAL


def _print_report(report: dict) -> None:
    print(f"ring: F_{report['characteristic']}"
          f"[{', '.join(report['variables'])}], d={report['d']}, "
          f"g={report['g']}")
    print(f"hypotheses: "
          f"{'pass' if report['hypotheses']['all_pass'] else 'FAIL'}")
    if "lambda_L" in report:
        print(f"lambda(L) = {report['lambda_L']}, "
              f"annihilated: {report['annihilates']}")
        print("e = (" + ", ".join(report["hilbert"]["e"]) + "), "
              f"n0 = {report['hilbert']['n0']}")
        print(f"cm: {report['cm']['is_cm']}, "
              f"chern_sign: {report['chern_sign']}")
        for identity in report["identities"]:
            print(f"  {identity['name']:<24} {identity['status']}")
    print(f"overall: {report.get('overall')}")


def cmd_betti(args) -> int:
    if args.d < 1 or args.n < 1:
        print("betti: need --d >= 1 and --n >= 1", file=sys.stderr)
        return EXIT_SCHEMA
    betti = [1] + [en_betti(args.n, args.d, i) for i in range(1, args.d + 1)]
    euler = sum(b if i % 2 == 0 else -b for i, b in enumerate(betti))
    if args.json:
        _emit_json({"d": args.d, "n": args.n,
                    "betti": [str(b) for b in betti], "euler": str(euler)})
    else:
        print(f"{'i':>4}  {'beta_i':>12}")
        for i, b in enumerate(betti):
            print(f"{i:>4}  {b:>12}")
        print(f"Euler characteristic: {euler}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chernlab",
        description="Hilbert-Samuel functions and Chern numbers of parameter "
                    "ideals in intersections of Cohen-Macaulay ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("file", help="problem file (JSON)")
        p.add_argument("--max-power", type=int, default=None,
                       help="override the sampling window 1..N")
        p.add_argument("--json", action="store_true",
                       help="emit machine-readable JSON")
        p.add_argument("--force", action="store_true",
                       help="proceed despite hypothesis failures")
        p.add_argument("--jobs", type=int, default=1,
                       help="parallel processes for the per-n lengths")

    p_hilbert = sub.add_parser("hilbert",
                               help="table of Hilbert-Samuel values H(K, n)")
    add_common(p_hilbert)
    p_hilbert.set_defaults(func=cmd_hilbert)

    p_coeffs = sub.add_parser("coeffs",
                              help="fitted Hilbert coefficients and verdicts")
    add_common(p_coeffs)
    p_coeffs.set_defaults(func=cmd_coeffs)

    p_verify = sub.add_parser("verify",
                              help="full identity verification report")
    add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_betti = sub.add_parser("betti",
                             help="Betti numbers of S/J^n for a complete "
                                  "intersection of height d")
    p_betti.add_argument("--d", type=int, required=True)
    p_betti.add_argument("--n", type=int, required=True)
    p_betti.add_argument("--json", action="store_true")
    p_betti.set_defaults(func=cmd_betti)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_power", None) is not None and args.max_power < 1:
        print("max-power must be at least 1", file=sys.stderr)
        return EXIT_SCHEMA
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except HypothesisFailure as exc:
        print(f"hypothesis failure: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except FitInstabilityError as exc:
        print(f"fit instability: {exc}", file=sys.stderr)
        return EXIT_FIT
    except (NotFiniteLengthError, ValueError, RuntimeError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
