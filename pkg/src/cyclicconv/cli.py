"""Command line front end.

Exit status: 0 success, 2 usage error, 3 data error, 4 parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .convcode import (CodeError, DecodingFailure, WidthMismatch, check_basic_reduced,
                       distance_checks, encode, weight_param_search)
from .dcc import ParameterOutOfRange, dcc_build, dump_params, load_params
from .gf import FieldError, field_build, prime_power
from .harness import (ErrorModel, StreamFile, StreamFormatError, inject, read_stream,
                      simulate, write_stream)
from .windec import DecoderConfig, decode_stream

EXIT_USAGE, EXIT_DATA, EXIT_PARAM = 2, 3, 4


class DataError(Exception):
    pass


def _load_code(path):
    try:
        return load_params(Path(path).read_text())
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise DataError(f"bad code record {path}: {exc}") from None


def _load_stream(path, code, roles):
    s = read_stream(path)
    if s.role not in roles:
        raise DataError(f"{path}: expected role {'/'.join(roles)}, got {s.role}")
    if not s.matches(code):
        raise DataError(f"{path}: stream header does not match the code")
    return s


def _summary(code) -> str:
    dl = " ".join(str(d) for d in code.stack_distances)
    return f"d_l = {dl}, d = {code.d_formula}, dfree = {code.dfree}"


def cmd_build_code(args):
    p, e = prime_power(args.q)
    mod = [int(c) for c in args.modulus.split(",")] if args.modulus else None
    F = field_build(p, e, mod, args.alpha)
    code = dcc_build(F, args.k, args.m)
    Path(args.out).write_text(dump_params(code))
    print(f"n = {code.n}, k = {code.k}, m = {code.m}, alpha = {F.alpha}")
    print(_summary(code))


def cmd_encode(args):
    code = _load_code(args.code)
    s = _load_stream(args.inp, code, ("message",))
    write_stream(args.out, StreamFile.for_code(code, "codeword", encode(s.blocks, code.encoder)))


def _model(args, code):
    return ErrorModel(kind=args.model, rate=args.rate,
                      cap=args.cap if args.cap is not None else code.d_formula // 2,
                      window=code.m + 1, burst_len=args.burst_len, seed=args.seed)


def cmd_corrupt(args):
    code = _load_code(args.code)
    s = _load_stream(args.inp, code, ("codeword", "received"))
    received, err = inject(s.blocks, _model(args, code), code.field)
    write_stream(args.out, StreamFile.for_code(code, "received", received))
    if args.errors:
        write_stream(args.errors, StreamFile.for_code(code, "errors", err))
    print(f"symbol errors = {sum(1 for b in err for x in b if x)}")


def _cycle_json(cy, verbose):
    out = cy.outcome
    rec = {"j": cy.j, "level": out.level_used, "u_hat": list(cy.u_hat[0]),
           "rs_decodes": out.rs_decodes, "error_detected": out.error_detected}
    if verbose:
        rec.update({
            "V": list(cy.V), "S": list(cy.S), "w": list(cy.w), "v_hat": list(cy.v_hat[0]),
            "x0_hat": list(out.x0_hat),
            "levels": [{"l": t.level, "rs_ok": t.rs_ok,
                        "x_hat": None if t.message is None else list(t.message),
                        "w": None if t.partial is None else list(t.partial),
                        "distance": t.distance, "threshold": t.threshold,
                        "accepted": t.accepted} for t in out.trace],
        })
        if out.best_effort:
            rec["best_effort"] = True
    return rec


def cmd_decode(args):
    code = _load_code(args.code)
    s = _load_stream(args.inp, code, ("received", "codeword"))
    config = DecoderConfig(fallback=not args.strict, step2_list=args.step2_list)
    report = decode_stream(s.blocks, code, config)
    write_stream(args.out, StreamFile.for_code(code, "codeword", report.decoded))
    msgs = [x for b in report.messages for x in b]
    doc = {
        "d": code.d_formula,
        "radius": code.d_formula // 2,
        "N": code.m + 1,
        "messages": [list(b) for b in report.messages],
        "u_hat": " ".join(str(x) for x in msgs),
        "window_distances": report.window_distances,
        "detection_flags": report.detection_flags,
        "detected_windows": [j for j, f in enumerate(report.detection_flags) if f],
        "fallback_cycles": report.fallback_cycles,
        "cycles": [_cycle_json(cy, args.verbose) for cy in report.cycles],
    }
    if args.report:
        Path(args.report).write_text(json.dumps(doc, indent=1) + "\n")
    print(f"u_hat = {doc['u_hat']}")
    if doc["detected_windows"]:
        print(f"detected windows = {' '.join(map(str, doc['detected_windows']))}")


def cmd_analyze(args):
    code = _load_code(args.code)
    print(f"q = {code.q}, n = {code.n}, k = {code.k}, m = {code.m}, alpha = {code.field.alpha}")
    print(_summary(code))
    br = check_basic_reduced(code.encoder)
    yes = {True: "yes", False: "no"}
    fi = " ".join(map(str, br.forney_indices)) if br.reduced else "-"
    print(f"basic = {yes[br.basic]}, reduced = {yes[br.reduced]}, "
          f"forney indices = {fi}, degree = {br.degree}")
    if args.enumerate_d:
        print(f"enumerated d (L=1, N={code.m + 1}) = {weight_param_search(code.encoder, code.m + 1)}")
    if args.dfree_cap is not None:
        rep = distance_checks(code.encoder, args.dfree_cap, code.d_formula)
        print(f"dfree upper bound (deg <= {args.dfree_cap}) = {rep.dfree_upper}")
        print(f"column distances = {' '.join(map(str, rep.column_distances))}")


def cmd_simulate(args):
    code = _load_code(args.code)
    res = simulate(code, args.trials, _model(args, code), args.length,
                   DecoderConfig(step2_list=args.step2_list))
    print(f"trials = {res.trials}, blocks = {res.blocks}")
    print(f"sliding block error rate = {res.sliding_block_error_rate:.6f} "
          f"({res.sliding_block_errors}), frames = {res.sliding_frame_errors}")
    print(f"blockwise RS block error rate = {res.baseline_block_error_rate:.6f} "
          f"({res.baseline_block_errors}), frames = {res.baseline_frame_errors}")
    print(f"detected frames = {res.detected_frames}")


def _add_model_args(p):
    p.add_argument("--model", choices=("iid", "burst", "capped"), default="iid")
    p.add_argument("--rate", type=float, default=0.05)
    p.add_argument("--cap", type=int, default=None, help="window cap (default floor(d/2))")
    p.add_argument("--burst-len", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)


def build_parser():
    ap = argparse.ArgumentParser(prog="cyclicconv", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-code", help="construct a doubly cyclic code record")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--modulus", help="comma separated coefficients, constant term first")
    p.add_argument("--alpha", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build_code)

    p = sub.add_parser("encode")
    p.add_argument("--code", required=True)
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("corrupt")
    p.add_argument("--code", required=True)
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--errors", help="also write the error pattern here")
    _add_model_args(p)
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("decode")
    p.add_argument("--code", required=True)
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--report")
    p.add_argument("--strict", action="store_true", help="fail instead of best-effort fallback")
    p.add_argument("--step2-list", action="store_true", help="list-decode each level")
    p.add_argument("--verbose", action="store_true", help="full per-cycle trace in the report")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("analyze")
    p.add_argument("--code", required=True)
    p.add_argument("--enumerate-d", action="store_true")
    p.add_argument("--dfree-cap", type=int)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("simulate")
    p.add_argument("--code", required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--length", type=int, default=20, help="message blocks per trial")
    p.add_argument("--step2-list", action="store_true")
    _add_model_args(p)
    p.set_defaults(func=cmd_simulate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (DataError, StreamFormatError, WidthMismatch, DecodingFailure, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (ParameterOutOfRange, FieldError, CodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    return 0


if __name__ == "__main__":
    sys.exit(main())
