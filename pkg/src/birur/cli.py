"""Command line front end.

Input is a text file (or stdin): the first two nonblank lines are the
system polynomials P and Q, any further lines are extra polynomials F
for the sign/split/radical commands.  Output is a JSON document on
stdout; identical input and flags produce byte-identical output.

Exit codes: 0 success, 2 unreadable input, 3 degenerate system or bad
parameter (reported as a structured JSON error).
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import (BadParameter, BirurError, EmptyVariety,
                     NotZeroDimensional, ParseError)
from .parsing import emit_polynomial, parse_polynomial
from .subresultants import resultant_RTS
from .rur import (find_separating_form, rur_candidate, separation_witness,
                  verify_rur)
from .isolation import isolate_boxes
from .query import rur_of_radical, sign_at_all, split_by_sign

SCHEMA = "birur/1"


@dataclass
class ParsedSystem:
    P: object
    Q: object
    fs: list = field(default_factory=list)
    form: Optional[int] = None
    mode: str = "deterministic"
    seed: int = 0
    trials: int = 20
    max_width: Optional[Fraction] = None
    fmt: str = "json"


def _q(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _poly(u):
    return [_q(c) for c in u.coeffs]


def _upoly_str(u, var="T"):
    if not u:
        return "0"
    out = []
    for e in range(u.degree, -1, -1):
        c = u.coeffs[e]
        if not c:
            continue
        mono = var if e == 1 else (f"{var}^{e}" if e else "")
        mag = abs(c)
        if not mono:
            body = _q(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_q(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(out)


def _rur_fields(r):
    return {
        "a": _q(r.a),
        "d_input": r.d_input,
        "f": _poly(r.f),
        "f1": _poly(r.f1),
        "fx": _poly(r.fX),
        "fy": _poly(r.fY),
        "multiplicity_sum": r.multiplicity_sum,
    }


def _box_fields(b):
    return {
        "root_index": b.root_index,
        "multiplicity": b.multiplicity,
        "x": [_q(b.x.lo), _q(b.x.hi)],
        "y": [_q(b.y.lo), _q(b.y.hi)],
    }


def _solve_rur(system):
    P, Q = system.P, system.Q
    rts = resultant_RTS(P, Q)
    if system.form is not None:
        r = rur_candidate(P, Q, system.form, rts=rts)
        n = separation_witness(P, Q, rts=rts)
        if not verify_rur(r, P, Q, distinct_count=n):
            raise BadParameter(
                f"separating form override {system.form} fails verification")
        return r
    a = find_separating_form(P, Q, mode=system.mode, seed=system.seed,
                             trials=system.trials, rts=rts)
    return rur_candidate(P, Q, a, rts=rts)


def run(command, system):
    """Execute one command against a parsed system; returns the output document."""
    r = _solve_rur(system)
    doc = {"schema": SCHEMA, "command": command}
    if command == "rur":
        doc.update(_rur_fields(r))
    elif command == "solve":
        boxes = isolate_boxes(r, max_width=system.max_width)
        doc.update(_rur_fields(r))
        doc["real_count"] = len(boxes)
        doc["boxes"] = [_box_fields(b) for b in boxes]
    elif command == "sign":
        doc.update(_rur_fields(r))
        reports = []
        for F in system.fs:
            rep = sign_at_all(r, F)
            reports.append({"polynomial": emit_polynomial(F),
                            "signs": list(rep.signs),
                            "method": rep.method})
        doc["reports"] = reports
    elif command == "split":
        doc.update(_rur_fields(r))
        reports = []
        for F in system.fs:
            s = split_by_sign(r, F)
            reports.append({"polynomial": emit_polynomial(F),
                            "f_zero": _poly(s.f_zero),
                            "f_nonzero": _poly(s.f_nonzero)})
        doc["reports"] = reports
    elif command == "radical":
        for F in system.fs:
            r = rur_of_radical(r, system.P, system.Q, F)
        doc["constraints"] = [emit_polynomial(F) for F in system.fs]
        doc.update(_rur_fields(r))
    else:
        raise BadParameter(f"unknown command {command!r}")
    return doc


def _render_text(doc):
    lines = [f"command: {doc['command']}"]

    def upoly(key):
        from .unipoly import UPoly
        return UPoly(tuple(Fraction(s) for s in doc[key]))

    if "a" in doc:
        lines.append(f"a = {doc['a']}")
        for key, label in (("f", "f"), ("f1", "f1"), ("fx", "fx"), ("fy", "fy")):
            lines.append(f"{label} = {_upoly_str(upoly(key))}")
        lines.append(f"multiplicity sum = {doc['multiplicity_sum']}")
    for b in doc.get("boxes", ()):
        lines.append(f"root {b['root_index']} (mult {b['multiplicity']}): "
                     f"x in [{b['x'][0]}, {b['x'][1]}], "
                     f"y in [{b['y'][0]}, {b['y'][1]}]")
    for rep in doc.get("reports", ()):
        if "signs" in rep:
            lines.append(f"{rep['polynomial']}: signs "
                         + " ".join(str(s) for s in rep["signs"]))
        else:
            from .unipoly import UPoly
            fz = UPoly(tuple(Fraction(s) for s in rep["f_zero"]))
            fn = UPoly(tuple(Fraction(s) for s in rep["f_nonzero"]))
            lines.append(f"{rep['polynomial']}: f_zero = {_upoly_str(fz)}, "
                         f"f_nonzero = {_upoly_str(fn)}")
    if "constraints" in doc:
        lines.append("constraints: " + "; ".join(doc["constraints"]))
    return "\n".join(lines) + "\n"


def _error_doc(code, message, **extra):
    err = {"code": code, "message": message}
    err.update(extra)
    return {"schema": SCHEMA, "error": err}


def _emit(doc, fmt, out):
    if fmt == "text" and "error" not in doc:
        out.write(_render_text(doc))
    else:
        out.write(json.dumps(doc, indent=2) + "\n")


def _read_system(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    polys = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            polys.append(parse_polynomial(line))
        except ParseError as e:
            raise _InputError("parse-error", str(e), line=lineno)
    if len(polys) < 2:
        raise _InputError("input", "need at least two polynomial lines (P and Q)")
    return polys[0], polys[1], polys[2:]


class _InputError(Exception):
    def __init__(self, code, message, **extra):
        super().__init__(message)
        self.code = code
        self.message = message
        self.extra = extra


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="birur",
        description="Exact real solving of two bivariate integer polynomials.")
    ap.add_argument("command",
                    choices=["solve", "rur", "sign", "split", "radical"])
    ap.add_argument("file", nargs="?", default="-",
                    help="input file; '-' or omitted reads stdin")
    ap.add_argument("--form", type=int, default=None,
                    help="use X + form*Y as the separating form (verified)")
    ap.add_argument("--mode", choices=["det", "rand"], default="det")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--max-width", type=Fraction, default=None,
                    help="refine boxes below this width (rational, e.g. 1/1000000)")
    group = ap.add_mutually_exclusive_group()
    group.add_argument("--json", dest="fmt", action="store_const",
                       const="json", default="json")
    group.add_argument("--text", dest="fmt", action="store_const", const="text")
    args = ap.parse_args(argv)

    out = sys.stdout
    try:
        P, Q, fs = _read_system(args.file)
    except _InputError as e:
        _emit(_error_doc(e.code, e.message, **e.extra), args.fmt, out)
        return 2
    except OSError as e:
        _emit(_error_doc("input", str(e)), args.fmt, out)
        return 2

    if args.command in ("sign", "split", "radical") and not fs:
        _emit(_error_doc("input", f"{args.command} needs at least one extra "
                         "polynomial line after P and Q"), args.fmt, out)
        return 2

    system = ParsedSystem(P=P, Q=Q, fs=fs, form=args.form,
                          mode={"det": "deterministic", "rand": "randomized"}[args.mode],
                          seed=args.seed, trials=args.trials,
                          max_width=args.max_width, fmt=args.fmt)
    try:
        doc = run(args.command, system)
    except NotZeroDimensional as e:
        _emit(_error_doc("not-zero-dimensional", str(e)), args.fmt, out)
        return 3
    except EmptyVariety as e:
        _emit(_error_doc("empty-variety", str(e)), args.fmt, out)
        return 3
    except BadParameter as e:
        _emit(_error_doc("bad-parameter", str(e)), args.fmt, out)
        return 3
    except BirurError as e:
        _emit(_error_doc("error", str(e)), args.fmt, out)
        return 3
    _emit(doc, args.fmt, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
