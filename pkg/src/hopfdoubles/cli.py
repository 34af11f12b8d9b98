"""Command line front end.  Exit status is 0 iff every emitted check passes."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cartan import SL2, SL3, B2, load_datum
from .doubles import (DRIN_KINDS, build_quasi_double, example, group_double, presentation_to_hopf,
                      twist_pair, verify_presentation)
from .errors import HopfDoublesError, InputError
from .hopf import (FiniteDimHopf, GroupCocycle3, named_group, twisted_function_algebra, verify_hopf_axioms,
                   verify_quasi_axioms, verify_rmatrix)
from .ncalg import PresentedAlgebra
from .pairing import GradedPair
from .report import Report
from .scalar import FieldSpec, format_scalar, q_power
from .twist import verify_heis_is_twist

DATUMS = {"sl2": SL2, "sl3": SL3, "b2": B2}


def _emit(args, text_lines, obj, ok=True):
    if args.json:
        print(json.dumps(obj, indent=2, default=str))
    else:
        for line in text_lines:
            print(line)
    return 0 if ok else 1


def _emit_report(args, rep: Report):
    return _emit(args, rep.lines(), rep.to_json(), rep.ok)


def _check_field(args, fld):
    if args.field and FieldSpec.parse(args.field) != fld:
        raise InputError(f"--field {args.field} does not match the field {fld} of this object")


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"parse error in {path}: {exc}") from exc


def _datum(text):
    if text.lower() in DATUMS:
        return DATUMS[text.lower()]
    return load_datum(text)


# ---------------------------------------------------------------- subcommands

def cmd_verify(args):
    target = args.target
    if target.endswith(".json") or os.path.exists(target):
        obj = _load_json(target)
        if not isinstance(obj, dict):
            raise InputError(f"{target}: expected a JSON object")
        if "m" in obj and "delta" in obj:
            H = FiniteDimHopf.from_json(obj)
            _check_field(args, H.field)
            rep = verify_quasi_axioms(H) if H.phi is not None else verify_hopf_axioms(H)
            if H.R is not None:
                rep.merge(verify_rmatrix(H))
            return _emit_report(args, rep)
        if "generators" in obj:
            A = PresentedAlgebra.from_json(obj)
            _check_field(args, A.field)
            conf = A.check_local_confluence(args.maxdeg)
            return _emit(args, conf.lines(), {"ok": conf.ok, "failures": conf.failures}, conf.ok)
        raise InputError(f"{target}: neither a structure-constant table nor a presentation")
    D = example(target)
    _check_field(args, D.algebra.field)
    rep = verify_presentation(D)
    if args.finite and D.kind in DRIN_KINDS:
        H = presentation_to_hopf(D)
        rep.merge(verify_quasi_axioms(H) if H.phi is not None else verify_hopf_axioms(H), "finite: ")
    return _emit_report(args, rep)


def cmd_relations(args):
    D = example(args.example)
    A = D.algebra
    return _emit(args, A.rule_lines(), A.to_json())


def cmd_normal_form(args):
    D = example(args.example)
    A = D.algebra
    _check_field(args, A.field)
    p = A.normal_form(A.parse(args.expr))
    text = A.format(p.terms)
    from .ncalg import terms_to_json
    return _emit(args, [text], {"input": args.expr, "normal_form": text, "terms": terms_to_json(A, p.terms)})


def cmd_serre(args):
    datum = _datum(args.datum)
    try:
        deg = tuple(int(x) for x in args.degree.split(","))
    except ValueError:
        raise InputError(f"bad degree {args.degree!r}") from None
    if len(deg) != datum.rank:
        raise InputError(f"degree needs {datum.rank} entries")
    pair = GradedPair.from_cartan(datum)
    out, obj = [], {"degree": list(deg)}
    for side in ("right", "left"):
        polys = pair.radical_basis(deg, side)
        obj[side] = [p.algebra.format(p.terms) for p in polys]
        out.append(f"{'B' if side == 'right' else 'C'}-side radical, dimension {len(polys)}")
        out.extend("  " + s for s in obj[side])
    return _emit(args, out, obj)


def _parse_lambda(text):
    text = text.strip()
    if text in ("1",):
        return q_power(0)
    if text == "q":
        return q_power(1)
    if text.startswith("q^"):
        try:
            return q_power(int(text[2:].strip("()")))
        except ValueError:
            pass
    raise InputError(f"cannot parse --lambda {text!r} (use q^n)")


def cmd_verma(args):
    from .rep import format_weight, verma
    D = example("uq-sl2" if args.which == "uq" else "dq-sl2")
    lam = _parse_lambda(args.lam)
    M = verma(D, lam, args.trunc)
    rep = M.check_relations()
    lines = [f"Verma module {M.name} over {D.name}, basis F^m v for m <= {args.trunc}"]
    rows = []
    for j, lab in enumerate(M.labels):
        e = M.action["E"][j]
        eimg = " + ".join(f"({format_scalar(c)})*{M.labels[i]}" for i, c in sorted(e.items())) or "0"
        lines.append(f"  K.{lab} = q^{format_weight(M.weights[j])} {lab}    E.{lab} = {eimg}")
        rows.append({"basis": lab, "weight": format_scalar(M.weights[j]),
                     "E": {M.labels[i]: format_scalar(c) for i, c in e.items()}})
    lines.extend(rep.lines())
    return _emit(args, lines, {"module": M.name, "rows": rows, "report": rep.to_json()}, rep.ok)


def cmd_clebsch_gordan(args):
    from .rep import clebsch_gordan, format_decomposition
    ws = clebsch_gordan(args.n, args.m, args.trunc)
    expected = [args.m + args.n - 2 * k for k in range(args.n + 1)]
    ok = ws == expected
    return _emit(args, [format_decomposition(ws)], {"n": args.n, "m": args.m, "weights": ws, "ok": ok}, ok)


def cmd_twist_check(args):
    drin, heis = twist_pair(args.example)
    return _emit_report(args, verify_heis_is_twist(drin, heis, args.maxdeg))


def cmd_group_double(args):
    G = named_group(args.group)
    kind = {"drin": "drinfeld", "heis": "heisenberg"}[args.kind]
    if args.omega:
        omega = GroupCocycle3.from_json(G, _load_json(args.omega))
        if args.field:
            _check_field(args, omega.field)
        D = build_quasi_double(twisted_function_algebra(G, omega), kind=kind)
    else:
        D = group_double(G, kind)
    rep = Report(f"{D.name}")
    if kind == "drinfeld":
        H = presentation_to_hopf(D)
        rep.note(f"dimension {H.dim}")
        rep.merge(verify_quasi_axioms(H) if H.phi is not None else verify_hopf_axioms(H))
    else:
        rep.merge(verify_presentation(D))
    lines = rep.lines() + ["relations:"] + ["  " + s for s in D.algebra.rule_lines()]
    obj = rep.to_json()
    obj["algebra"] = D.algebra.to_json()
    return _emit(args, lines, obj, rep.ok)


def cmd_confluence(args):
    D = example(args.example)
    conf = D.algebra.check_local_confluence(args.maxdeg)
    return _emit(args, conf.lines(), {"ok": conf.ok, "checked": conf.checked, "failures": conf.failures}, conf.ok)


# ---------------------------------------------------------------- parser

def build_parser():
    p = argparse.ArgumentParser(prog="hopfdoubles", description="Braided Drinfeld and Heisenberg doubles")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--field", help="rationals | q | cyclotomic:N")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="verify a table, a presentation or an example")
    s.add_argument("target")
    s.add_argument("--maxdeg", type=int, default=4)
    s.add_argument("--finite", action="store_true", help="also expand finite doubles to structure tensors")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("relations", parents=[common], help="print the rewrite rules")
    s.add_argument("example")
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("normal-form", parents=[common], help="reduce an expression")
    s.add_argument("example")
    s.add_argument("expr")
    s.set_defaults(func=cmd_normal_form)

    s = sub.add_parser("serre", parents=[common], help="radical of the pairing in one degree")
    s.add_argument("datum", help="sl2 | sl3 | b2 | datum.json")
    s.add_argument("--degree", required=True)
    s.set_defaults(func=cmd_serre)

    s = sub.add_parser("verma", parents=[common], help="Verma module action table")
    s.add_argument("which", choices=["uq", "dq"])
    s.add_argument("--lambda", dest="lam", default="1")
    s.add_argument("--trunc", type=int, default=5)
    s.set_defaults(func=cmd_verma)

    s = sub.add_parser("clebsch-gordan", parents=[common], help="decompose L(n) acting on M(m)")
    s.add_argument("n", type=int)
    s.add_argument("m", type=int)
    s.add_argument("--trunc", type=int, default=None)
    s.set_defaults(func=cmd_clebsch_gordan)

    s = sub.add_parser("twist-check", parents=[common], help="Heisenberg product as a twist of the Drinfeld one")
    s.add_argument("example")
    s.add_argument("--maxdeg", type=int, default=3)
    s.set_defaults(func=cmd_twist_check)

    s = sub.add_parser("group-double", parents=[common], help="double of a finite group, optionally twisted")
    s.add_argument("group")
    s.add_argument("--omega", help="3-cocycle JSON")
    s.add_argument("--kind", choices=["drin", "heis"], default="drin")
    s.set_defaults(func=cmd_group_double)

    s = sub.add_parser("confluence", parents=[common], help="resolve overlap ambiguities")
    s.add_argument("example")
    s.add_argument("--maxdeg", type=int, default=4)
    s.set_defaults(func=cmd_confluence)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HopfDoublesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
