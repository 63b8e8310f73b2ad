"""Command line entry point: `isogeny-descent <subcommand>`."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from sympy import divisors

from .elliptic_curves import Curve, count_points, frobenius_trace, group_structure, torsion_basis
from .finite_fields import GF
from .experiment_harness import EXPERIMENTS, ConfigError, SweepConfig, emit_report, quat_golden_lines, run_experiment
from .isogenies import defined_over_levels, velu
from .phi_checker import PhiInstanceError, check_phi, load_instance
from .quaternions import conjugation_example_report


def _coeff(v):
    """An int or a coefficient list (low degree first)."""
    if isinstance(v, str):
        v = json.loads(v)
    return v


def _curve(args) -> Curve:
    return Curve.from_ints(args.p, _coeff(args.a), _coeff(args.b), args.k)


def _elt(x) -> list[int]:
    return list(x.c)


def _curve_record(E: Curve) -> dict:
    gs = group_structure(E)
    return {"p": E.p, "k": E.field.k, "a": _elt(E.a), "b": _elt(E.b),
            "count": count_points(E), "trace": frobenius_trace(E), "structure": [gs.a, gs.ab]}


def _print(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_count(args) -> int:
    E = _curve(args)
    rec = _curve_record(E)
    if args.exhaustive:
        rec["count_exhaustive"] = count_points(E, mode="exhaustive")
    _print(rec)
    return 0


def cmd_structure(args) -> int:
    E = _curve(args)
    rec = _curve_record(E)
    gs = group_structure(E)
    rec["generators"] = [None if P.x is None else [_elt(P.x), _elt(P.y)] for P in gs.generators]
    _print(rec)
    return 0


def cmd_torsion_basis(args) -> int:
    E = _curve(args)
    B = torsion_basis(E, args.n)
    rec = _curve_record(E)
    rec.update({"n": args.n, "field_degree": B.field.k,
                "P": [_elt(B.P.x), _elt(B.P.y)], "Q": [_elt(B.Q.x), _elt(B.Q.y)]})
    _print(rec)
    return 0


def cmd_velu(args) -> int:
    if args.input:
        with open(args.input) as fh:
            data = json.load(fh)
    else:
        data = {"p": args.p, "k": args.k, "a": _coeff(args.a), "b": _coeff(args.b),
                "kernel_x": _coeff(args.kernel_x), "kernel_y": _coeff(args.kernel_y),
                "kernel_k": args.kernel_k or args.k}
    p, k = int(data["p"]), int(data.get("k", 1))
    E = Curve.from_ints(p, data["a"], data["b"], k)
    K = GF(p, int(data.get("kernel_k", k)))
    P = E.over(K)(K(data["kernel_x"]), K(data["kernel_y"]))
    f = velu(E, P)
    levels = [j for j in divisors(f.field.k) if j % E.field.k == 0 or E.field.k % j == 0]
    _print({"degree": f.degree,
            "codomain": {"a": _elt(f.codomain.a), "b": _elt(f.codomain.b), "k": f.codomain.field.k},
            "defined_over": defined_over_levels(f, levels)})
    return 0


def cmd_quat_example(args) -> int:
    _print(conjugation_example_report(args.p, args.n))
    return 0


def cmd_quat_golden(args) -> int:
    lines = quat_golden_lines()
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_check_phi(args) -> int:
    try:
        inst = load_instance(args.instance)
    except PhiInstanceError as exc:
        _print({"error": str(exc)})
        return 2
    _print(check_phi(inst).as_dict())
    return 0


def cmd_experiment(args) -> int:
    try:
        cfg = SweepConfig.from_json(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    records = run_experiment(args.name, cfg)
    summary = emit_report(records, args.out, sys.stderr)
    return 1 if any(s["fatal"] for s in summary.values()) else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="isogeny-descent")
    sub = ap.add_subparsers(dest="command", required=True)

    def curve_args(sp):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--k", type=int, default=1)
        sp.add_argument("--a", default="0", help="int or JSON coefficient list")
        sp.add_argument("--b", default="0", help="int or JSON coefficient list")

    sp = sub.add_parser("count", help="point count and trace")
    curve_args(sp)
    sp.add_argument("--exhaustive", action="store_true", help="also count by enumeration")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("structure", help="group invariants and generators")
    curve_args(sp)
    sp.set_defaults(func=cmd_structure)

    sp = sub.add_parser("torsion-basis", help="canonical basis of E[n]")
    curve_args(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_torsion_basis)

    sp = sub.add_parser("velu", help="isogeny with a given kernel generator")
    sp.add_argument("--input", help="JSON file {p, k, a, b, kernel_x, kernel_y[, kernel_k]}")
    sp.add_argument("--p", type=int)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--a", default="0")
    sp.add_argument("--b", default="0")
    sp.add_argument("--kernel-x", dest="kernel_x")
    sp.add_argument("--kernel-y", dest="kernel_y")
    sp.add_argument("--kernel-k", dest="kernel_k", type=int, help="degree of the kernel point's field")
    sp.set_defaults(func=cmd_velu)

    sp = sub.add_parser("quat-example", help="conjugation of j by 1 + n i")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_quat_example)

    sp = sub.add_parser("quat-golden", help="conjugation reports for p in {11, 19, 23}, n in 5..7")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_quat_golden)

    sp = sub.add_parser("check-phi", help="evaluate the descent hypotheses on an instance file")
    sp.add_argument("--instance", required=True)
    sp.set_defaults(func=cmd_check_phi)

    sp = sub.add_parser("experiment", help="run a sweep and write JSON lines")
    sp.add_argument("--name", required=True, choices=list(EXPERIMENTS) + ["all"])
    sp.add_argument("--config")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_experiment)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "velu" and not args.input and (args.p is None or args.kernel_x is None):
        build_parser().error("velu needs --input or --p/--kernel-x/--kernel-y")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
