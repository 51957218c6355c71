"""Command-line front end: normal forms, verification, spectra, listings.

Exit codes: 0 all requested checks pass, 1 a verification failed,
2 usage, parse or evaluation error.  Output is deterministic: repeated
identical invocations emit byte-identical text, and JSON reports use the
fixed key set {command, dims, mu_mode, results, status}, key-sorted.
Timings are kept out of reports for exactly that reason.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import relations, states
from .dsl import ParseError, parse_eval, render
from .scalars import ArityMismatchError


def _mu_values(text: str) -> Tuple[Fraction, ...]:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"bad deformation values: {text!r}")
    return tuple(Fraction(p) for p in parts)


def _mu_mode(mu: Optional[Tuple[Fraction, ...]]) -> str:
    if mu is None:
        return "parametric"
    return "numeric:" + ",".join(str(v) for v in mu)


Outcome = Tuple[int, dict, List[str]]


def _cmd_nf(args: argparse.Namespace) -> Outcome:
    op = parse_eval(args.expr, args.dims)
    if args.mu is not None:
        if len(args.mu) != args.dims:
            raise ArityMismatchError(
                f"need {args.dims} deformation values, got {len(args.mu)}")
        op = op.substitute_params(args.mu)
    normal = render(op)
    report = {
        "command": "nf",
        "dims": args.dims,
        "mu_mode": _mu_mode(args.mu),
        "results": [{"expr": args.expr, "normal_form": normal}],
        "status": "ok",
    }
    return 0, report, [normal]


def _cmd_verify(args: argparse.Namespace) -> Outcome:
    mode = "numeric" if args.mu is not None else "parametric"
    if args.family == "all":
        if args.perturb:
            raise ValueError("--perturb needs a single family")
        family_ids = relations.FAMILIES
    else:
        family_ids = (args.family,)
    reports = [
        relations.check(fid, mode, args.mu, perturb=args.perturb)
        for fid in family_ids
    ]
    lines: List[str] = []
    results = []
    for rep in reports:
        flag = "ok  " if rep.passed else "FAIL"
        lines.append(f"{flag} {rep.family:<18} {len(rep.identities):3d} identities")
        rows = []
        for ir in rep.identities:
            if not ir.passed:
                lines.append(f"       residual ({ir.residual_terms} terms): "
                             f"{ir.label}")
            rows.append({
                "label": ir.label,
                "passed": ir.passed,
                "residual_terms": ir.residual_terms,
                "residual": "0" if ir.passed else str(ir.residual),
            })
        results.append({
            "family": rep.family,
            "passed": rep.passed,
            "identities": rows,
        })
    passed = all(rep.passed for rep in reports)
    lines.append(f"status: {'pass' if passed else 'fail'}")
    report = {
        "command": "verify",
        "dims": None,
        "mu_mode": _mu_mode(args.mu),
        "results": results,
        "status": "pass" if passed else "fail",
    }
    return (0 if passed else 1), report, lines


def _cmd_spectrum(args: argparse.Namespace) -> Outcome:
    table = states.spectrum_table(args.dims, args.mu, args.levels)
    lines = ["level  energy  degeneracy"]
    rows = []
    for row in table.rows:
        energy = str(row.energy.as_fraction())
        lines.append(f"{row.level:<6d} {energy:<7} {row.degeneracy}")
        rows.append({
            "level": row.level,
            "energy": energy,
            "degeneracy": row.degeneracy,
        })
    if not table.admissible:
        lines.append("warning: inadmissible deformation values "
                     "(some ladder coefficient c_k <= 0)")
    report = {
        "command": "spectrum",
        "dims": args.dims,
        "mu_mode": _mu_mode(args.mu),
        "results": [{"admissible": table.admissible, "rows": rows}],
        "status": "ok",
    }
    return 0, report, lines


def _cmd_list_relations(args: argparse.Namespace) -> Outcome:
    lines = [f"{fid}: {relations.DESCRIPTIONS[fid]}"
             for fid in relations.FAMILIES]
    results = [{"family": fid, "description": relations.DESCRIPTIONS[fid]}
               for fid in relations.FAMILIES]
    report = {
        "command": "list-relations",
        "dims": None,
        "mu_mode": "parametric",
        "results": results,
        "status": "ok",
    }
    return 0, report, lines


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dunklweyl",
        description="Exact operator algebra of the deformed oscillator: "
                    "normal forms, identity verification, spectra.")
    sub = parser.add_subparsers(dest="command", required=True)

    nf = sub.add_parser("nf", help="normal form of an operator expression")
    nf.add_argument("expr")
    nf.add_argument("--dims", type=int, default=2)
    nf.add_argument("--mu", type=_mu_values, default=None,
                    help="substitute exact rational deformation values v1,v2,..")
    nf.add_argument("--format", choices=("text", "json"), default="text")

    verify = sub.add_parser("verify", help="check an identity family")
    verify.add_argument("family", help="family id or 'all'")
    group = verify.add_mutually_exclusive_group()
    group.add_argument("--parametric", action="store_true",
                       help="symbolic deformation parameters (default)")
    group.add_argument("--mu", type=_mu_values, default=None)
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--perturb", action="store_true",
                        help="negative control: break one structure constant")

    spectrum = sub.add_parser("spectrum", help="exact energy levels")
    spectrum.add_argument("--dims", type=int, choices=(1, 2), required=True)
    spectrum.add_argument("--mu", type=_mu_values, required=True)
    spectrum.add_argument("--levels", type=int, default=6)
    spectrum.add_argument("--format", choices=("text", "json"), default="text")

    sub.add_parser("list-relations", help="list identity families")
    return parser


_DISPATCH = {
    "nf": _cmd_nf,
    "verify": _cmd_verify,
    "spectrum": _cmd_spectrum,
    "list-relations": _cmd_list_relations,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "format", "text") == "json":
        emit_json = True
    else:
        emit_json = False
    try:
        code, report, lines = _DISPATCH[args.command](args)
    except (ParseError, ArityMismatchError, KeyError, ValueError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return 2
    if emit_json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
