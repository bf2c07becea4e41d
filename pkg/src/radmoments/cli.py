"""Command-line front end.

Usage::

    radmoments ho --dim 3 --N 2 --K 0 --p 2 4 --method closed
    radmoments ho --dim 3 --N 0 --K 0 --p-real -1.5
    radmoments hydrogen --n 2 --l 1 --power -2 --format json
    radmoments table ho --dim 3 --N 0 --K 0 --p-min 0 --p-max 4 --out ho.csv
    radmoments verify --jobs 4

Exit codes: 0 ok, 1 verification failure, 2 invalid state, 3 divergent
moment, 4 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import hydrogen as hy
from . import oscillator as ho
from .errors import DivergentMoment, InvalidState
from .exact import ExactValue, as_rational, to_float
from .oracle import ho_expval_oracle, ho_expval_quadrature, hydrogen_expval_oracle
from .records import OutputRecord, format_float, render
from .verify import run_verification

EXIT_OK, EXIT_VERIFY, EXIT_STATE, EXIT_DIVERGENT, EXIT_IO = 0, 1, 2, 3, 4

HO_METHODS = ("closed", "dual-hahn", "recurrence", "inversion", "oracle-exact")
HYDROGEN_METHODS = ("closed", "recurrence", "oracle-exact")


def _ho_state_fields(state: ho.OscillatorState) -> dict:
    return {"n": state.n_dim, "N": state.N, "K": state.K}


def _hydrogen_state_fields(state: hy.HydrogenState) -> dict:
    return {"n": state.n, "l": state.l, "Z": state.Z, "a0": state.a0}


def _record(system, fields, p, method, value, flags, float_only) -> OutputRecord:
    value = ExactValue.coerce(value)
    return OutputRecord(
        system, fields, str(p), method, None if float_only else value, format_float(to_float(value)), tuple(flags)
    )


def ho_records(state, ps, method="closed", mode="derived", float_only=False) -> list[OutputRecord]:
    fields = _ho_state_fields(state)
    flags = list(ho._state_flags(state))
    if mode == "paper-literal":
        flags.append("paper-literal-mode")
    out = []
    if method == "recurrence" and ps:
        table = {r.p: r.exact for r in ho.expval_recurrence_range(state, min(ps), max(ps), mode)}
    for p in ps:
        if method == "closed":
            value = ho.expval_closed(state, p)
        elif method == "dual-hahn":
            value = ho.expval_dual_hahn(state, p)
        elif method == "recurrence":
            value = table[p]
        elif method == "inversion":
            value = ho.inversion_partner(state, -p - 2)
        elif method == "oracle-exact":
            value = ho_expval_oracle(state, p)
        else:
            raise ValueError(f"unknown method {method!r}")
        out.append(_record("ho", fields, p, method, value, flags, float_only))
    return out


def ho_real_records(state, ps, method="closed") -> list[OutputRecord]:
    fields = _ho_state_fields(state)
    flags = tuple(ho._state_flags(state))
    out = []
    for p in ps:
        if method == "oracle-quadrature":
            x = ho_expval_quadrature(state, p)
        else:
            x = ho.expval_closed_real(state, p)
        out.append(OutputRecord("ho", fields, repr(float(p)), method, None, format_float(x), flags))
    return out


def hydrogen_records(state, powers, method="closed", mode="consistent", float_only=False) -> list[OutputRecord]:
    fields = _hydrogen_state_fields(state)
    flags = ("paper-literal-mode",) if mode == "paper-literal" else ()
    out = []
    kp = {}
    if method == "recurrence" and powers and max(powers) >= 1:
        kp = dict(hy.kramers_pasternack_range(state, max(powers)))
    for q in powers:
        if not state.converges(q):
            raise DivergentMoment(f"<r^{q}> diverges for l={state.l}: need power >= {-2 * state.l - 2}")
        if method == "oracle-exact":
            value, tag = hydrogen_expval_oracle(state, q), "oracle-exact"
        elif method == "recurrence" and q >= 1:
            value, tag = kp[q], "recurrence"
        elif q >= -1:
            value, tag = hy.expval_pos(state, q + 1), "closed" if method != "recurrence" else "recurrence"
        else:
            value = hy.expval_neg(state, -q - 2, mode)
            tag = "inversion" if mode == "consistent" else "closed"
        out.append(_record("hydrogen", fields, q, tag, value, flags, float_only))
    return out


def _add_format(p):
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--float-only", action="store_true", help="omit exact values")


def _add_ho_state(p):
    p.add_argument("--dim", type=int, required=True, help="dimension n")
    p.add_argument("--N", type=int, required=True, help="principal quantum number")
    p.add_argument("--K", type=int, required=True, help="hyperangular quantum number")


def _add_hydrogen_state(p):
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--Z", type=as_rational, default=as_rational(1), help="nuclear charge (rational)")
    p.add_argument("--a0", type=as_rational, default=as_rational(1), help="Bohr radius (rational)")


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("expected LO..HI")
    return int(lo), int(hi)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="radmoments", description="Exact radial moments <r^p>.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ho", help="oscillator moments")
    _add_ho_state(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--p", type=int, nargs="+", help="integer powers")
    group.add_argument("--p-real", type=float, nargs="+", help="real powers (float path)")
    p.add_argument("--method", choices=HO_METHODS + ("oracle-quadrature",), default="closed")
    p.add_argument("--mode", choices=("derived", "paper-literal"), default="derived")
    _add_format(p)

    p = sub.add_parser("hydrogen", help="hydrogen moments")
    _add_hydrogen_state(p)
    p.add_argument("--power", type=int, nargs="+", required=True)
    p.add_argument("--method", choices=HYDROGEN_METHODS, default="closed")
    p.add_argument("--mode", choices=("consistent", "paper-literal"), default="consistent")
    _add_format(p)

    p = sub.add_parser("verify", help="run the cross-validation sweep")
    p.add_argument("--dim-max", type=int, default=6)
    p.add_argument("--N-max", type=int, default=12)
    p.add_argument("--p-range", type=_parse_range, default=(-6, 10), help="LO..HI (default -6..10)")
    p.add_argument("--hydrogen-n-max", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)

    table = sub.add_parser("table", help="write a table of moments to a file")
    tsub = table.add_subparsers(dest="system", required=True)
    for name in ("ho", "hydrogen"):
        t = tsub.add_parser(name)
        if name == "ho":
            _add_ho_state(t)
            t.add_argument("--method", choices=HO_METHODS, default="closed")
            t.add_argument("--mode", choices=("derived", "paper-literal"), default="derived")
        else:
            _add_hydrogen_state(t)
            t.add_argument("--method", choices=HYDROGEN_METHODS, default="closed")
            t.add_argument("--mode", choices=("consistent", "paper-literal"), default="consistent")
        t.add_argument("--p-min", type=int, required=True)
        t.add_argument("--p-max", type=int, required=True)
        t.add_argument("--out", type=Path, required=True)
        t.add_argument("--format", choices=("csv", "json"), default="csv")
        t.add_argument("--float-only", action="store_true")
    return parser


def _records_for(args) -> list[OutputRecord]:
    if args.command == "ho":
        state = ho.OscillatorState(args.dim, args.N, args.K)
        if args.p_real is not None:
            method = args.method if args.method == "oracle-quadrature" else "closed"
            return ho_real_records(state, args.p_real, method)
        if args.method == "oracle-quadrature":
            return ho_real_records(state, [float(p) for p in args.p], "oracle-quadrature")
        return ho_records(state, args.p, args.method, args.mode, args.float_only)
    if args.command == "hydrogen":
        state = hy.HydrogenState(args.n, args.l, args.Z, args.a0)
        return hydrogen_records(state, args.power, args.method, args.mode, args.float_only)
    ps = list(range(args.p_min, args.p_max + 1))
    if args.system == "ho":
        state = ho.OscillatorState(args.dim, args.N, args.K)
        return ho_records(state, ps, args.method, args.mode, args.float_only)
    state = hy.HydrogenState(args.n, args.l, args.Z, args.a0)
    return hydrogen_records(state, ps, args.method, args.mode, args.float_only)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        report = run_verification(args.dim_max, args.N_max, args.p_range, args.hydrogen_n_max, args.jobs)
        sys.stdout.write(report.render())
        return EXIT_OK if report.ok else EXIT_VERIFY
    try:
        records = _records_for(args)
    except InvalidState as exc:
        print(f"invalid state: {exc}", file=sys.stderr)
        return EXIT_STATE
    except DivergentMoment as exc:
        print(f"divergent moment: {exc}", file=sys.stderr)
        return EXIT_DIVERGENT
    if args.command == "table":
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(render(records, args.format))
        except OSError as exc:
            print(f"cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
        return EXIT_OK
    sys.stdout.write(render(records, args.format))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
