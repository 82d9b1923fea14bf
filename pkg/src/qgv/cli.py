"""Command-line interface: list | eval | verify | limits | pi.

Exit codes: 0 success, 2 pole or failed checks, 3 numerical
ill-conditioning, 64 usage errors (unknown ids, bad arity, bad flags).
Rationals cross the boundary as "p/q" strings.  QGV_SEED overrides
--seed when set.  Nothing is written outside stdout/stderr and --out.
"""

import argparse
import json
import os
import sys

import mpmath
from gmpy2 import mpq

from .errors import (
    ArityError,
    NumericallyIllConditioned,
    PoleError,
    QgvError,
    UnknownIdentity,
)
from .identities import EvalPoint, eval_side, get_identity, list_identities
from .numerics import format_rational, rational
from .verifier import (
    DECAY_WINDOW,
    LIMIT_CHAINS,
    SampleConfig,
    decay_ratios,
    gamma_2f1_check,
    gamma_2f1_threshold,
    limit_check,
    pi_check,
    pi_threshold,
    run_suite,
)

EXIT_OK = 0
EXIT_CHECK = 2
EXIT_ILL = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_rational(text, flag):
    try:
        return rational(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ArityError(f"{flag} expects a rational like 3/5, got {text!r}")


def cmd_list(args):
    rows = [
        (d.qid, d.kind, d.arity_string(), d.summary) for d in list_identities()
    ]
    if args.format == "json":
        payload = [
            {"id": r[0], "kind": r[1], "arity": r[2], "summary": r[3]}
            for r in rows
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return EXIT_OK
    w0 = max(len(r[0]) for r in rows)
    w1 = max(len(r[1]) for r in rows)
    w2 = max(len(r[2]) for r in rows)
    lines = [f"{'ID':<{w0}}  {'KIND':<{w1}}  {'ARITY':<{w2}}  SUMMARY"]
    for r in rows:
        lines.append(f"{r[0]:<{w0}}  {r[1]:<{w1}}  {r[2]:<{w2}}  {r[3]}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_eval(args):
    desc = get_identity(args.id)
    point = EvalPoint(
        s=None if args.s is None else _parse_rational(args.s, "--s"),
        x=None if args.x is None else _parse_rational(args.x, "--x"),
        extras=tuple(_parse_rational(e, "--extra") for e in args.extra or ()),
    )
    value = eval_side(args.id, args.side, args.n, args.ell, args.k, point)
    _emit(format_rational(value) + "\n", args.out)
    return EXIT_OK


def _format_result_row(r, widths):
    w0, w1 = widths
    nstr = "-" if r.qid in LIMIT_CHAINS or r.n is None else str(r.n)
    ell = "-" if r.ell is None else str(r.ell)
    k = "-" if r.k is None else str(r.k)
    cx = ""
    if r.counterexample is not None:
        d = r.counterexample.to_dict()
        cx = f" counterexample s={d['s']} x={d['x']} lhs={d['lhs']} rhs={d['rhs']}"
        if "extras" in d:
            cx += f" extras={d['extras']}"
    note = f" {r.note}" if r.note else ""
    return (
        f"{r.qid:<{w0}} {nstr:>3} {ell:>3} {k:>3} {r.status:<{w1}} "
        f"{r.trials:>6}{note}{cx}"
    )


def _report_text(report):
    results = report.results
    w0 = max([len(r.qid) for r in results] + [8])
    w1 = 7
    lines = [
        f"qgv {report.version} suite: mode={report.mode} seed={report.seed} "
        f"config={report.config}",
        f"{'ID':<{w0}} {'n':>3} {'ell':>3} {'k':>3} {'STATUS':<{w1}} {'POINTS':>6}",
    ]
    for r in results:
        lines.append(_format_result_row(r, (w0, w1)))
    s = report.summary()
    lines.append(
        f"summary: pass={s['pass']} fail={s['fail']} skipped={s['skipped']} "
        f"duration={report.duration_seconds:.2f}s"
    )
    return "\n".join(lines) + "\n"


def cmd_verify(args):
    ids = None if args.all else args.ids
    if not args.all and not ids:
        raise ArityError("give identity ids or --all")
    cfg = SampleConfig(seed=args.seed, bitsize=args.bitsize)
    report = run_suite(
        cfg,
        n_max=args.n_max,
        ell_max=args.ell_max,
        trials=args.trials,
        mode=args.mode,
        ids=ids,
        precision_bits=args.precision,
    )
    if args.format == "json":
        _emit(json.dumps(report.to_dict(), indent=2) + "\n", args.out)
    else:
        _emit(_report_text(report), args.out)
    return EXIT_OK if report.summary()["fail"] == 0 else EXIT_CHECK


def cmd_limits(args):
    chains = [args.chain] if args.chain else list(LIMIT_CHAINS)
    for chain in chains:
        if chain not in LIMIT_CHAINS:
            raise UnknownIdentity(f"unknown chain {chain!r}; known: "
                                  + ", ".join(LIMIT_CHAINS))
    lo, hi = args.window
    eps_list = (mpq(1, 10 ** 4), mpq(1, 10 ** 5))
    lines = []
    all_ok = True
    for chain in chains:
        q_id, c_id = LIMIT_CHAINS[chain]
        residuals = limit_check(
            q_id,
            c_id,
            args.n,
            args.ell,
            _parse_rational(args.x_tilde, "--x-tilde"),
            eps_list,
            args.precision,
        )
        (rl, rr), = decay_ratios(residuals)
        ok = lo < rl < hi and lo < rr < hi
        all_ok = all_ok and ok
        lines.append(
            f"{chain}: n={args.n} ell={args.ell} x_tilde={args.x_tilde}"
        )
        for eps, l, r in residuals:
            lines.append(
                f"  eps={mpmath.nstr(eps, 3)}  |lhs_q - lhs_cl|="
                f"{mpmath.nstr(l, 8)}  |rhs_q - rhs_cl|={mpmath.nstr(r, 8)}"
            )
        lines.append(
            f"  decay ratios: lhs={rl:.3f} rhs={rr:.3f} "
            f"(window {lo}..{hi}: {'ok' if ok else 'outside'})"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all_ok else EXIT_CHECK


def cmd_pi(args):
    resid = pi_check(args.precision, args.max_terms)
    thr = pi_threshold(args.precision)
    lines = [
        f"pi series partial-sum residual at {args.precision} bits: "
        f"{mpmath.nstr(resid, 10)}",
        f"threshold: {mpmath.nstr(thr, 6)} "
        f"({'ok' if resid < thr else 'exceeded'})",
    ]
    checks = gamma_2f1_check(args.precision)
    gthr = gamma_2f1_threshold(args.precision)
    gok = all(r < gthr for _, r in checks)
    for x, r in checks:
        lines.append(
            f"gamma-ratio 2F1 residual at x={x}: {mpmath.nstr(r, 8)}"
        )
    lines.append(
        f"gamma-ratio threshold: {mpmath.nstr(gthr, 6)} "
        f"({'ok' if gok else 'exceeded'})"
    )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if resid < thr and gok else EXIT_CHECK


def _window(text):
    try:
        lo, hi = text.split(",")
        return float(lo), float(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("window must be LO,HI")


def build_parser():
    parser = _Parser(prog="qgv", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="print the identity catalog")
    p_list.add_argument("--format", choices=("text", "json"), default="text")
    p_list.add_argument("--out")
    p_list.set_defaults(fn=cmd_list)

    p_eval = sub.add_parser("eval", help="evaluate one side exactly")
    p_eval.add_argument("id")
    p_eval.add_argument("side", choices=("lhs", "rhs"))
    p_eval.add_argument("--n", type=int)
    p_eval.add_argument("--ell", type=int)
    p_eval.add_argument("--k", type=int)
    p_eval.add_argument("--s", help='q^(1/2) as "p/q"')
    p_eval.add_argument("--x", help='x as "p/q"')
    p_eval.add_argument(
        "--extra", action="append", help="extra parameter (repeatable)"
    )
    p_eval.add_argument("--out")
    p_eval.set_defaults(fn=cmd_eval)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("ids", nargs="*")
    p_verify.add_argument("--all", action="store_true")
    p_verify.add_argument("--mode", choices=("sample", "certify"), default="sample")
    p_verify.add_argument("--n-max", type=int, default=6)
    p_verify.add_argument("--ell-max", type=int, default=4)
    p_verify.add_argument("--trials", type=int, default=20)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--bitsize", type=int, default=16)
    p_verify.add_argument("--precision", type=int, default=256)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--out")
    p_verify.set_defaults(fn=cmd_verify)

    p_limits = sub.add_parser("limits", help="q -> 1 limit decay checks")
    p_limits.add_argument("--chain", help="QID:CLASSICALID, e.g. THM1:PROP3")
    p_limits.add_argument("--n", type=int, default=2)
    p_limits.add_argument("--ell", type=int, default=1)
    p_limits.add_argument("--x-tilde", default="1/5")
    p_limits.add_argument("--precision", type=int, default=256)
    p_limits.add_argument(
        "--window",
        type=_window,
        default=DECAY_WINDOW,
        help="accepted decay-ratio window LO,HI (default 5,20)",
    )
    p_limits.add_argument("--out")
    p_limits.set_defaults(fn=cmd_limits)

    p_pi = sub.add_parser("pi", help="pi series partial-sum check")
    p_pi.add_argument("--precision", type=int, default=128)
    p_pi.add_argument("--max-terms", type=int, default=200)
    p_pi.add_argument("--out")
    p_pi.set_defaults(fn=cmd_pi)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    seed_env = os.environ.get("QGV_SEED")
    if seed_env is not None and hasattr(args, "seed"):
        try:
            args.seed = int(seed_env)
        except ValueError:
            sys.stderr.write(f"qgv: invalid QGV_SEED {seed_env!r}\n")
            return EXIT_USAGE
    if getattr(args, "precision", 256) < 64 and args.command in ("limits", "pi"):
        sys.stderr.write("qgv: precision must be at least 64 bits\n")
        return EXIT_USAGE
    try:
        return args.fn(args)
    except NumericallyIllConditioned as exc:
        sys.stderr.write(f"qgv: ill-conditioned: {exc}\n")
        return EXIT_ILL
    except PoleError as exc:
        factor = f" (factor: {exc.factor})" if exc.factor else ""
        sys.stderr.write(f"qgv: pole: {exc}{factor}\n")
        return EXIT_CHECK
    except (ArityError, UnknownIdentity, ValueError) as exc:
        sys.stderr.write(f"qgv: {exc}\n")
        return EXIT_USAGE
    except QgvError as exc:
        sys.stderr.write(f"qgv: {exc}\n")
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
