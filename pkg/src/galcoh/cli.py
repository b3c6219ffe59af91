"""JSON-in/JSON-out command line front end.

Exit codes: 0 computed verdict (yes or no), 2 input error (the message
names the offending JSON path), 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import deciders, extension as ext, gmod, matverify, nonab, schemas
from .errors import GalcohError, SchemaError, SearchBudgetExceeded
from .schemas import SCHEMA_VERSION


def _run_cohomology(payload, args):
    module = schemas.parse_module(
        schemas._get(payload, "module", ".payload", dict), ".payload.module"
    )
    degree = schemas._get(payload, "degree", ".payload", int)
    if degree not in (0, 1, 2):
        raise SchemaError(".payload.degree", "degree must be 0, 1 or 2")
    h = gmod.cohomology(module, degree)
    return {
        "degree": degree,
        "invariant_factors": list(h.invariant_factors),
        "generators": [g.to_json() for g in h.generators],
    }


def _run_delta(payload, args):
    E = schemas.parse_extension(
        schemas._get(payload, "extension", ".payload", dict), ".payload.extension"
    )
    c = schemas.parse_cocycle1(
        schemas._get(payload, "cocycle", ".payload", dict),
        ".payload.cocycle",
        E.Gbar,
    )
    z = ext.connecting_delta(E, c)
    h2 = gmod.cohomology(E.module, 2)
    return {
        "cocycle2": z.to_json(),
        "class": list(h2.class_of(z)),
        "h2_invariant_factors": list(h2.invariant_factors),
        "lifts": ext.lifts_to_cocycle(E, c) is not None,
    }


def _run_neutral(payload, args):
    A = schemas.parse_gamma_group(
        schemas._get(payload, "coefficients", ".payload", dict),
        ".payload.coefficients",
    )
    z = schemas.parse_twisted2(
        schemas._get(payload, "cocycle2", ".payload", dict),
        ".payload.cocycle2",
        A,
    )
    witness = nonab.is_neutral2(A, z, budget=args.budget)
    if witness is None:
        return {"neutral": False}
    return {"neutral": True, "witness": list(witness)}


def _run_decide_model(payload, args):
    E = schemas.parse_extension(
        schemas._get(payload, "extension", ".payload", dict), ".payload.extension"
    )
    A = schemas.parse_gamma_group(
        schemas._get(payload, "aut_group", ".payload", dict), ".payload.aut_group"
    )
    kappa = schemas.parse_kappa(
        schemas._get(payload, "kappa", ".payload", dict), ".payload.kappa", E, A
    )
    c = schemas.parse_cocycle1(
        schemas._get(payload, "cocycle", ".payload", dict), ".payload.cocycle", E.Gbar
    )
    try:
        p = deciders.ModelExistenceProblem(E, A, kappa, c)
    except (GalcohError, ValueError) as e:
        raise SchemaError(".payload", str(e))
    return deciders.decide_model_existence(p, budget=args.budget).to_json()


def _run_decide_tits(payload, args):
    E = schemas.parse_extension(
        schemas._get(payload, "extension", ".payload", dict), ".payload.extension"
    )
    A = schemas.parse_gamma_group(
        schemas._get(payload, "aut_group", ".payload", dict), ".payload.aut_group"
    )
    kappa = schemas.parse_kappa(
        schemas._get(payload, "kappa", ".payload", dict), ".payload.kappa", E, A
    )
    c = schemas.parse_cocycle1(
        schemas._get(payload, "cocycle", ".payload", dict), ".payload.cocycle", E.Gbar
    )
    return deciders.decide_tits(E, kappa, c, budget=args.budget).to_json()


def _run_decide_hxh(payload, args):
    s1 = schemas.parse_gamma_group(
        schemas._get(payload, "sigma1", ".payload", dict), ".payload.sigma1"
    )
    s2 = schemas.parse_gamma_group(
        schemas._get(payload, "sigma2", ".payload", dict), ".payload.sigma2"
    )
    if s1.group != s2.group:
        raise SchemaError(".payload.sigma2.group", "both actions must share one group")
    if s1.gamma != s2.gamma:
        raise SchemaError(".payload.sigma2.gamma", "both actions must share one gamma")
    return deciders.decide_hxh(s1.group, s1, s2).to_json()


def _run_decide_gu(payload, args):
    E = schemas.parse_extension(
        schemas._get(payload, "extension", ".payload", dict), ".payload.extension"
    )
    c = schemas.parse_cocycle1(
        schemas._get(payload, "cocycle", ".payload", dict), ".payload.cocycle", E.Gbar
    )
    return deciders.decide_gu(E, c).to_json()


def _run_verify_example(payload, args):
    samples = schemas._get(payload, "samples", ".payload", int, required=False, default=100)
    if samples < 1:
        raise SchemaError(".payload.samples", "must be a positive integer")
    checks = matverify.verify_example(seed=args.seed, samples=samples)
    return {
        "seed": args.seed,
        "samples": samples,
        "checks": checks,
        "all_passed": all(c["passed"] for c in checks),
    }


_RUNNERS = {
    "cohomology": _run_cohomology,
    "delta": _run_delta,
    "neutral": _run_neutral,
    "decide-model": _run_decide_model,
    "decide-tits": _run_decide_tits,
    "decide-hxh": _run_decide_hxh,
    "decide-gu": _run_decide_gu,
    "verify-example": _run_verify_example,
}


def _render_text(kind, result):
    lines = [f"kind: {kind}"]
    if kind == "verify-example":
        for c in result["checks"]:
            status = "PASS" if c["passed"] else "FAIL"
            detail = f"  ({c['detail']})" if c.get("detail") else ""
            lines.append(f"{status} {c['check']}{detail}")
        lines.append(f"all passed: {result['all_passed']}")
    elif "answer" in result:
        lines.append(f"answer: {result['answer']}")
        lines.append(f"certificate: {json.dumps(result['certificate'], sort_keys=True)}")
        for h in result.get("assumed_hypotheses", []):
            lines.append(f"assumed: {h}")
    else:
        for k in sorted(result):
            lines.append(f"{k}: {json.dumps(result[k], sort_keys=True)}")
    return "\n".join(lines) + "\n"


def build_parser():
    parser = argparse.ArgumentParser(
        prog="galcoh",
        description="Finite Galois-cohomology computations and deciders "
        "over JSON problem files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for kind in schemas.KINDS:
        p = sub.add_parser(kind, help=f"run a {kind} problem")
        if kind != "verify-example":
            p.add_argument("--input", required=True, help="path to the JSON problem file")
        else:
            p.add_argument("--input", help="optional JSON problem file")
        p.add_argument("--output", default="-", help="output path, - for stdout")
        p.add_argument("--budget", type=int, default=None, help="search node budget")
        p.add_argument("--seed", type=int, default=0, help="random seed")
        p.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    kind = args.command
    try:
        if getattr(args, "input", None):
            try:
                with open(args.input) as fh:
                    obj = json.load(fh)
            except OSError as e:
                print(f"error: cannot read input: {e}", file=sys.stderr)
                return 2
            except json.JSONDecodeError as e:
                print(f"error: .: invalid JSON ({e})", file=sys.stderr)
                return 2
            file_kind, payload, hyps = schemas.parse_problem(obj)
            if file_kind != kind:
                raise SchemaError(
                    ".kind", f"problem file has kind {file_kind!r}, command is {kind!r}"
                )
        else:
            payload, hyps = {}, []
        result = _RUNNERS[kind](payload, args)
    except SchemaError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SearchBudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except GalcohError as e:
        print(f"error: .payload: {e}", file=sys.stderr)
        return 2

    if hyps:
        existing = result.setdefault("assumed_hypotheses", [])
        existing.extend(h for h in hyps if h not in existing)
    envelope = {"schema_version": SCHEMA_VERSION, "kind": kind, "result": result}
    if args.format == "json":
        text = json.dumps(envelope, sort_keys=True, indent=2) + "\n"
    else:
        text = _render_text(kind, result)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
