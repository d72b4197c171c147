"""Command-line front end.

Subcommands: region, validate, loads, closed-form, figure, sweep.
Rationals are accepted as 'p/q' strings and emitted exactly; CSV renders a
decimal when possible plus the exact numerator/denominator columns.

Exit codes: 0 success, 2 invalid parameters (the message names the violated
precondition), 1 internal failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .association import SCHEME_ALIASES, Scheme, assign, scheme_tau
from .figures import FIGURES, build_figure
from .loads import closed_form, finite_prelogs, formulas, message_ledger
from .rationals import parse_ratio, ratio_to_csv, ratio_to_json
from .regions import achievable_region, boundary_polyline
from .topology import (HEX, SECTORED, WYNER, build_hex, build_hex_torus,
                       build_sectored_hex, build_sectored_hex_torus,
                       build_wyner)
from .validation import validate

MODELS = {"wyner": WYNER, "hex": HEX, "sectorized": SECTORED}


def _add_model_size(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", required=True, choices=sorted(MODELS))
    p.add_argument("--K", type=int, help="number of cells (wyner)")
    p.add_argument("--radius", type=int, help="hex ball radius (hex/sectorized)")
    p.add_argument("--tiling", help="MxM whole-subnet torus (hex/sectorized), e.g. 2x2")


def _build_network(args, scheme: Scheme):
    model = MODELS[args.model]
    if model == WYNER:
        if args.K is None:
            raise ValueError("the wyner model needs --K")
        return build_wyner(args.K, args.L)
    if args.tiling:
        m = args.tiling.lower().split("x")
        if len(m) != 2 or m[0] != m[1] or not m[0].isdigit():
            raise ValueError("--tiling must look like 2x2")
        copies = int(m[0])
        # no-coop has no master lattice; any positive spacing gives a valid torus
        tau = max(1, scheme_tau(model, scheme, args.D))
        builder = build_hex_torus if model == HEX else build_sectored_hex_torus
        return builder(tau, copies, args.L)
    if args.radius is None:
        raise ValueError("hex models need --radius or --tiling")
    builder = build_hex if model == HEX else build_sectored_hex
    return builder(args.radius, args.L)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _polyline_csv(series: list[tuple[str, list]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["series", "point", "s_f", "s_s", "s_f_num", "s_f_den", "s_s_num", "s_s_den"])
    for label, pts in series:
        for i, p in enumerate(pts):
            w.writerow([label, i, ratio_to_csv(p.s_f), ratio_to_csv(p.s_s),
                        p.s_f.numerator, p.s_f.denominator,
                        p.s_s.numerator, p.s_s.denominator])
    return buf.getvalue()


def cmd_region(args) -> int:
    model = MODELS[args.model]
    mu_tx, mu_rx = parse_ratio(args.mu_tx), parse_ratio(args.mu_rx)
    region = achievable_region(model, args.D, args.L, mu_tx, mu_rx)
    if args.format == "csv":
        _emit(args, _polyline_csv([("region", boundary_polyline(region))]))
    else:
        _emit(args, json.dumps(region.to_json_dict(model, args.D, args.L, mu_tx, mu_rx),
                               indent=2) + "\n")
    return 0


def cmd_validate(args) -> int:
    scheme = SCHEME_ALIASES[args.scheme]
    net = _build_network(args, scheme)
    assoc = assign(net, args.D, scheme)
    subnets, report = validate(net, assoc)
    out = report.to_json_dict()
    out["n_subnets"] = len(subnets)
    out["masters"] = [s.master for s in subnets]
    _emit(args, json.dumps(out, indent=2) + "\n")
    return 0


def cmd_loads(args) -> int:
    scheme = SCHEME_ALIASES[args.scheme]
    net = _build_network(args, scheme)
    assoc = assign(net, args.D, scheme)
    subnets, report = validate(net, assoc)
    if not report.ok:
        raise ValueError(f"association failed validation: {report.violations[:3]}")
    ledger = message_ledger(net, assoc, subnets)
    cf = closed_form(net.model, scheme, args.D, args.L)
    fin_tx, fin_rx = finite_prelogs(ledger, net)
    out = {
        "ledger": ledger.to_json_dict(),
        "closed_form": cf.to_json_dict(),
        "finite": {"mu_tx": ratio_to_json(fin_tx), "mu_rx": ratio_to_json(fin_rx)},
        "exact_match": ledger.mu_tx == cf.mu_tx and ledger.mu_rx == cf.mu_rx,
    }
    _emit(args, json.dumps(out, indent=2) + "\n")
    return 0


def cmd_closed_form(args) -> int:
    scheme = SCHEME_ALIASES[args.scheme]
    cf = closed_form(MODELS[args.model], scheme, args.D, args.L)
    _emit(args, json.dumps(cf.to_json_dict(), indent=2) + "\n")
    return 0


def cmd_figure(args) -> int:
    series = build_figure(args.which)
    _emit(args, _polyline_csv(series))
    return 0


def _parse_range(spec: str, step: int) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..")
        return list(range(int(lo), int(hi) + 1, step))
    return [int(spec)]


def cmd_sweep(args) -> int:
    model = MODELS[args.model]
    rows = []
    for d in _parse_range(args.D_range, args.step):
        try:
            closed_form(model, Scheme.BOTH_COMP_RX, d, args.L)  # validates D for the model
            cols: dict[str, Fraction] = {}
            f = formulas(model, d, args.L)
            cols["s_max"] = f["s_max"]
            cols["s_f_both"] = f["s_f_both"]
            cols["s_s_both"] = f["s_s_both"]
            cols["mu_r_tx"] = f["mu_r_tx"]
            cols["mu_r_rx"] = f["mu_r_rx"]
            cols["mu_s_rx"] = f["mu_s_rx"]
            if model != SECTORED:
                cols["mu_t_tx"] = f["mu_t_tx"]
                cols["mu_t_rx"] = f["mu_t_rx"]
            rows.append((d, cols))
        except ValueError:
            continue
    if not rows:
        raise ValueError("no valid D in the sweep range for this model")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    names = list(rows[0][1])
    w.writerow(["D"] + names)
    for d, cols in rows:
        w.writerow([d] + [ratio_to_csv(cols[n]) for n in names])
    _emit(args, buf.getvalue())
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mgnet", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("region", help="achievable MG region for given prelog budgets")
    p.add_argument("--model", required=True, choices=sorted(MODELS))
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--mu-tx", dest="mu_tx", required=True)
    p.add_argument("--mu-rx", dest="mu_rx", required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("validate", help="check an association's structural preconditions")
    _add_model_size(p)
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--L", type=int, default=1)
    p.add_argument("--scheme", required=True, choices=sorted(SCHEME_ALIASES))
    p.add_argument("--out")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("loads", help="message ledger vs closed form")
    _add_model_size(p)
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--scheme", required=True, choices=sorted(SCHEME_ALIASES))
    p.add_argument("--out")
    p.set_defaults(func=cmd_loads)

    p = sub.add_parser("closed-form", help="closed-form MG pair and prelogs")
    p.add_argument("--model", required=True, choices=sorted(MODELS))
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--scheme", required=True, choices=sorted(SCHEME_ALIASES))
    p.add_argument("--out")
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("figure", help="emit a reference-figure dataset as CSV")
    p.add_argument("--which", required=True, choices=sorted(FIGURES))
    p.add_argument("--out")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("sweep", help="closed forms over a D grid")
    p.add_argument("--model", required=True, choices=sorted(MODELS))
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--D", dest="D_range", required=True, help="single value or a..b")
    p.add_argument("--step", type=int, default=2)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv: list[str] | None = None) -> int:
    os.environ.get("MGNET_SEED")  # accepted for harness compatibility; output is deterministic
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
