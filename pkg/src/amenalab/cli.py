"""Command-line runner: ``amenalab SUBCOMMAND [options]``.

Exit codes: 0 every check passed, 1 a check failed, 2 bad input,
3 an internal invariant was breached.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import finite
from .actions import acts_injectively, fibers, injective_partition
from .convolution import (FinFunc, ast_invariance_check, bounded_indicator_verdict, convolve,
                          indicator_sweep, partial_action)
from .folner import VARIANTS, folner_sweep, measure_series
from .greens import RELATIONS, green_classes
from .measures import (TRANSFER_MODES, WeightVector, fair_check_finite, singleton_mass_ranges,
                       solve_fair_classes, transfer_check)
from .paradox import BUILTINS, paradox_certificate
from .registry import FAMILY_NAMES, resolve
from .semigroup import AmenalabError, LiteralError, Side
from .sets import parse_set
from .table1 import build_rows, render_text

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

LITERALS = """element literals:
  free:k       words over a, b, ...          abba
  freecomm:k   vectors                       (2,0,1)   (k = 1: a bare integer)
  natmul       positive integers             12
  bicyclic     q^j p^k, or any word in p, q  q^2 p   1
  polycyclic   words in p, q, P = p^-1, Q = q^-1, 0, 1    QPq
  munn         (p,q,r), or a word in x, X = x^-1          (0,1,0)   xX
  zmin         integers                      -3
  finite       table indices or labels       2   e11
  S^0 / S^1    the adjoined element is 'zero' / 'one'
  S*T          pairs                         <a, 2>
set literals:
  all | single:LIT | list:LIT;LIT | prefix:W | proper-prefix:W | ideal:LIT |
  left-ideal:LIT | column:K | row:J | interval:LO..HI
ranges:
  7 | 2..200 | 10..100:10 | 3,5,8
"""


class InvariantBreach(AmenalabError):
    pass


class CheckFailed(Exception):
    """Carries a finished report whose checks did not all pass."""

    def __init__(self, payload):
        self.payload = payload


# -- helpers -------------------------------------------------------------

def parse_range(text: str) -> list[int]:
    try:
        if "," in text:
            values = [int(v) for v in text.split(",")]
        elif ".." in text:
            lo, _, rest = text.partition("..")
            hi, _, step = rest.partition(":")
            values = list(range(int(lo), int(hi) + 1, int(step) if step else 1))
        else:
            values = [int(text)]
    except ValueError:
        raise LiteralError(f"bad range {text!r}") from None
    if not values or any(b <= a for a, b in zip(values, values[1:])) or values[0] < 0:
        raise LiteralError(f"range {text!r} must be non-empty, non-negative and increasing")
    return values


def to_jsonable(obj):
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, Side):
        return obj.value
    return obj


def dump_json(payload) -> str:
    return json.dumps(to_jsonable(payload), indent=2, ensure_ascii=False) + "\n"


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise LiteralError(f"cannot read {path}: {exc.strerror}") from None


def _family(args):
    if getattr(args, "table", None):
        return finite.read_table(args.table)
    if not args.family:
        raise LiteralError("--family (or --table) is required")
    return resolve(args.family)


def _weights(S, args, prefix: str = "") -> WeightVector:
    path = getattr(args, f"{prefix}weights", None)
    if path:
        return WeightVector.parse(S, _read(path))
    dirac = getattr(args, f"{prefix}dirac", None)
    if dirac:
        return WeightVector.dirac(S, S.parse(dirac))
    return WeightVector.uniform(S)


def _sides(side: str) -> list[str]:
    return ["left", "right"] if side == "both" else [side]


def _finfunc(S, path: str) -> FinFunc:
    return FinFunc.parse(S, _read(path))


# -- subcommands ---------------------------------------------------------

def cmd_mul(args):
    S = _family(args)
    xs = [S.parse(t) for t in args.elements]
    out = xs[0]
    for x in xs[1:]:
        out = S.mul(out, x)
    report = {"family": S.name, "factors": [S.format(x) for x in xs], "product": S.format(out)}
    if args.involution:
        report["involution"] = S.format(S.involution(out))
    return report, S.format(out) + "\n"


def cmd_green(args):
    S = _family(args)
    rels = RELATIONS if args.rel == "all" else [args.rel.upper()]
    report = {"family": S.name, "relations": [green_classes(S, r).to_json() for r in rels]}
    text = "".join(f"{r['relation']}: " + " | ".join("{" + ", ".join(c) + "}" for c in r["classes"]) + "\n"
                   for r in report["relations"])
    return report, text


def _subset(S, args):
    return parse_set(S, args.set).restrict(S, args.n)


def cmd_injective(args):
    S = _family(args)
    s, A = S.parse(args.element), _subset(S, args)
    ok, pair = acts_injectively(S, s, A, args.side)
    report = {"family": S.name, "element": args.element, "side": args.side, "size": len(A),
              "injective": ok}
    if pair:
        report["witness"] = [S.format(pair[0]), S.format(pair[1])]
        report["image"] = S.format(S.act(s, pair[0], args.side))
    text = "injective\n" if ok else f"not injective: {report['witness'][0]} and {report['witness'][1]} " \
                                    f"both map to {report['image']}\n"
    if not ok:
        raise CheckFailed((report, text))
    return report, text


def cmd_fibers(args):
    S = _family(args)
    fp = fibers(S, S.parse(args.element), _subset(S, args), args.side)
    report = {"family": S.name, **fp.to_json()}
    text = "".join(f"{f['image']} <- {{{', '.join(f['members'])}}}\n" for f in report["fibers"])
    return report, text + f"max fiber {fp.max_fiber}\n"


def cmd_partition(args):
    S = _family(args)
    s, A = S.parse(args.element), _subset(S, args)
    parts = injective_partition(S, s, A, args.side)
    expected = fibers(S, s, A, args.side).max_fiber
    if len(parts) != expected or not all(acts_injectively(S, s, p, args.side)[0] for p in parts):
        raise InvariantBreach("greedy partition does not match the largest fiber")
    report = {"family": S.name, "element": args.element, "side": args.side,
              "parts": [p.format() for p in parts]}
    return report, "".join("{" + ", ".join(p) + "}\n" for p in report["parts"])


def cmd_folner_sweep(args):
    S = _family(args)
    A = parse_set(S, args.set)
    series = folner_sweep(S, S.parse(args.element), A, parse_range(args.n), args.variant,
                          args.side, threshold=Fraction(args.threshold or "1/20"), exact=args.exact)
    report = {"family": S.name, "element": series.element, "side": args.side, "variant": args.variant,
              "records": [{"n": r.n, "window_size": r.window_size, "symdiff": r.symdiff,
                           "ratio": r.ratio} for r in series.records],
              "summary": series.summary()}
    text = "".join(f"n={r.n} |F|={r.window_size} symdiff={r.symdiff} ratio={r.ratio} "
                   f"({float(r.ratio):.6f})\n" for r in series.records)
    if args.format == "csv":
        text = series.to_csv()
    if args.threshold and not series.summary()["below_threshold"]:
        raise CheckFailed((report, text))
    return report, text


def cmd_measure_series(args):
    S = _family(args)
    series = measure_series(parse_set(S, args.set), S, parse_range(args.n))
    report = {"family": S.name, "set": args.set, "series": [{"n": n, "value": v} for n, v in series]}
    if args.format == "csv":
        text = "n,num,den\n" + "".join(f"{n},{v.numerator},{v.denominator}\n" for n, v in series)
    else:
        text = "".join(f"n={n} {v} ({float(v):.6f})\n" for n, v in series)
    return report, text


def cmd_fair_check(args):
    S = _family(args)
    w = _weights(S, args)
    verdicts = [fair_check_finite(S, w, side).to_json() for side in _sides(args.side)]
    report = {"family": S.name, "verdicts": verdicts}
    text = "".join(f"{v['side']}: {'pass' if v['pass'] else 'fail'}"
                   + (f" ({v['witness']['s']}·{v['witness']['a']} = {v['witness']['product']}, "
                      f"masses {v['values'][0]} vs {v['values'][1]})" if not v["pass"] else "")
                   + "\n" for v in verdicts)
    if not all(v["pass"] for v in verdicts):
        raise CheckFailed((report, text))
    return report, text


def cmd_fair_solve(args):
    S = _family(args)
    report = {"family": S.name, "classes": {side: [c.format() for c in solve_fair_classes(S, side)]
                                            for side in _sides(args.side)}}
    text = "".join(f"{side}: {len(cs)} classes " + " | ".join("{" + ", ".join(c) + "}" for c in cs) + "\n"
                   for side, cs in report["classes"].items())
    return report, text


def cmd_transfer(args):
    S = _family(args)
    w = _weights(S, args)
    kwargs = {}
    if args.mode == "product":
        if not args.other:
            raise LiteralError("--other is required for product transfers")
        T = resolve(args.other)
        kwargs = {"other": T, "other_weights": _weights(T, args, "other_")}
    elif args.mode == "restrict":
        if not args.subset:
            raise LiteralError("--subset is required for restriction")
        kwargs = {"subset": [S.parse(t) for t in args.subset.split(";") if t.strip()]}
    result = transfer_check(S, w, args.mode, args.side, **kwargs)
    report = {"family": result.semigroup.name, "mode": args.mode, "weights": result.weights.to_json(),
              "verdict": result.verdict.to_json()}
    text = result.weights.to_text() + f"{result.verdict.side.value}: " \
        f"{'pass' if result.verdict.passed else 'fail'}\n"
    if not result.verdict.passed:
        raise CheckFailed((report, text))
    return report, text


def cmd_paradox_cert(args):
    cert = paradox_certificate(args.builtin, args.radius)
    report = {**cert.to_json(), "report": cert.report()}
    if not cert.verified:
        raise CheckFailed((report, cert.report()))
    return report, cert.report()


def cmd_convolve(args):
    S = _family(args)
    h = convolve(S, _finfunc(S, args.f), _finfunc(S, args.g))
    return {"family": S.name, "result": h.to_json()}, \
        "".join(f"{k} {v}\n" for k, v in h.to_json().items())


def cmd_partial_action(args):
    S = _family(args)
    s = S.parse(args.element)
    if args.f:
        res = partial_action(S, s, _finfunc(S, args.f), args.side)
        report = {"family": S.name, **res.to_json()}
        return report, "".join(f"{k} {v}\n" for k, v in res.values.to_json().items()) + res.verdict + "\n"
    A = parse_set(S, args.set)
    sweep = indicator_sweep(S, s, A, parse_range(args.n), args.side)
    report = {"family": S.name, "element": args.element, "set": args.set,
              "sweep": [{"n": r.window, "max_fiber": r.max_fiber, "verdict": r.verdict,
                         "support_size": len(r.image_of_support)} for r in sweep]}
    chain = bounded_indicator_verdict(S, s, A.restrict(S, parse_range(args.n)[-1]), args.side)
    report["partition_check"] = chain.to_json()
    if not chain.consistent:
        raise InvariantBreach("fiber, partition and convolution views disagree")
    text = "".join(f"n={r.window} max_fiber={r.max_fiber} verdict={r.verdict}\n" for r in sweep)
    return report, text


def cmd_ast_check(args):
    S = _family(args)
    w = _weights(S, args)
    elems = [S.parse(args.element)] if args.element else list(S.elements())
    funcs = [_finfunc(S, args.f)] if args.f else [FinFunc.delta(S, a) for a in S.elements()]
    rows = []
    for side in _sides(args.side):
        for s in elems:
            for f in funcs:
                r = ast_invariance_check(S, w, f, s, side)
                rows.append({"side": side, "element": S.format(s), "f": f.to_json(),
                             "equal": r.equal, "acted": r.acted, "original": r.original,
                             "guaranteed": r.guaranteed})
    failed = [r for r in rows if not r["equal"]]
    report = {"family": S.name, "checks": len(rows), "failed": len(failed), "results": rows}
    text = f"{len(rows) - len(failed)}/{len(rows)} equal\n" + "".join(
        f"{r['side']} s={r['element']}: {r['acted']} != {r['original']}\n" for r in failed)
    if failed:
        raise CheckFailed((report, text))
    return report, text


def cmd_table1(args):
    rows = build_rows()
    report = {"rows": [r.to_json() for r in rows]}
    text = render_text(rows)
    if any(r.status == "fail" for r in rows):
        raise CheckFailed((report, text))
    return report, text


def cmd_forced_mass(args):
    entries = []
    for S in finite.catalog():
        for side in _sides(args.side):
            forced = [r.element for r in singleton_mass_ranges(S, side) if r.least > 0]
            entries.append({"family": S.name, "side": side, "classes": len(solve_fair_classes(S, side)),
                            "forced_positive": forced})
    report = {"note": "finite carriers only; says nothing about infinite semigroups",
              "entries": entries}
    text = "".join(f"{e['family']} {e['side']}: {e['classes']} classes, forced positive mass on "
                   f"{len(e['forced_positive'])} elements\n" for e in entries)
    return report, text


# -- parser --------------------------------------------------------------

def _common(p, family=True):
    if family:
        p.add_argument("--family", help="family spec, e.g. bicyclic, free:2, cyclic:3^0, left-zero:2*right-zero:3")
        p.add_argument("--table", help="Cayley table file (first line n, then n rows)")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.add_argument("--seed", type=int, help="RNG seed (default: config, then $AMENALAB_SEED, then 0)")
    p.add_argument("--config", help="file of key = value lines supplying option defaults")


def _side(p, both=False):
    choices = ("left", "right", "both") if both else ("left", "right")
    p.add_argument("--side", choices=choices, default="both" if both else "left")


def _set_args(p, default="all"):
    p.add_argument("--element", required=True)
    p.add_argument("--set", default=default, help="set literal (see --help of the main command)")
    p.add_argument("--n", type=int, default=3, help="window index the set is cut to")


COMMANDS = {
    "mul": cmd_mul, "green": cmd_green, "injective": cmd_injective, "fibers": cmd_fibers,
    "partition": cmd_partition, "folner-sweep": cmd_folner_sweep, "measure-series": cmd_measure_series,
    "fair-check": cmd_fair_check, "fair-solve": cmd_fair_solve, "transfer": cmd_transfer,
    "paradox-cert": cmd_paradox_cert, "convolve": cmd_convolve, "partial-action": cmd_partial_action,
    "ast-check": cmd_ast_check, "table1": cmd_table1, "forced-mass": cmd_forced_mass,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amenalab", description="Fair amenability experiments on semigroups.",
        epilog="families: " + ", ".join(FAMILY_NAMES) + "\n\n" + LITERALS,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("mul", help="multiply element literals left to right")
    _common(p)
    p.add_argument("elements", nargs="+")
    p.add_argument("--involution", action="store_true", help="also print the involution of the product")

    p = sub.add_parser("green", help="Green's classes of a finite semigroup")
    _common(p)
    p.add_argument("--rel", default="all", choices=("L", "R", "H", "D", "all"))

    for name, text in (("injective", "does s act injectively on A"), ("fibers", "fibers of x -> sx on A"),
                       ("partition", "greedy injective partition of A")):
        p = sub.add_parser(name, help=text)
        _common(p)
        _set_args(p)
        _side(p)

    p = sub.add_parser("folner-sweep", help="exact Følner ratios over a range of windows")
    _common(p)
    p.add_argument("--element", required=True)
    p.add_argument("--set", default="all")
    p.add_argument("--n", default="1..10", help="range of window indices")
    p.add_argument("--variant", choices=VARIANTS, default=VARIANTS[0])
    p.add_argument("--threshold", help="fail unless the last ratio is at most this rational")
    p.add_argument("--exact", action="store_true", help="enumerate windows even if a closed form exists")
    _side(p)

    p = sub.add_parser("measure-series", help="|A n F_n| / |F_n| over a range")
    _common(p)
    p.add_argument("--set", required=True)
    p.add_argument("--n", default="1..10")

    p = sub.add_parser("fair-check", help="check w(sa) = w(a) on a finite semigroup")
    _common(p)
    p.add_argument("--weights", help="file of 'element num/den' lines (default: uniform)")
    p.add_argument("--dirac", help="use the Dirac mass at this element")
    _side(p, both=True)

    p = sub.add_parser("fair-solve", help="classes on which fairly invariant weights are constant")
    _common(p)
    _side(p, both=True)

    p = sub.add_parser("transfer", help="move weights along a construction and re-check")
    _common(p)
    p.add_argument("--mode", choices=TRANSFER_MODES, required=True)
    p.add_argument("--weights")
    p.add_argument("--dirac")
    p.add_argument("--other", help="second factor for product transfers")
    p.add_argument("--other-weights", dest="other_weights")
    p.add_argument("--subset", help="subsemigroup for restriction, as LIT;LIT;...")
    _side(p)

    p = sub.add_parser("paradox-cert", help="verify a built-in paradoxical decomposition")
    _common(p, family=False)
    p.add_argument("--builtin", choices=sorted(BUILTINS), required=True)
    p.add_argument("--radius", type=int, default=8)

    p = sub.add_parser("convolve", help="f * g for finitely supported functions")
    _common(p)
    p.add_argument("--f", required=True, help="file of 'element rational' lines")
    p.add_argument("--g", required=True)

    p = sub.add_parser("partial-action", help="s * f, or s * chi_A along a window sweep")
    _common(p)
    p.add_argument("--element", required=True)
    p.add_argument("--f", help="function file; otherwise --set is used")
    p.add_argument("--set", default="all")
    p.add_argument("--n", default="1..6")
    _side(p)

    p = sub.add_parser("ast-check", help="integral of s * f equals integral of f")
    _common(p)
    p.add_argument("--weights")
    p.add_argument("--dirac")
    p.add_argument("--element", help="default: every element")
    p.add_argument("--f", help="default: every point mass")
    _side(p, both=True)

    p = sub.add_parser("table1", help="checks behind the summary table of examples")
    _common(p, family=False)

    p = sub.add_parser("forced-mass", help="elements every fairly invariant vector must weigh (finite catalog)")
    _common(p, family=False)
    _side(p, both=True)
    return parser


def read_config(path: str) -> dict:
    out = {}
    for line in _read(path).splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise LiteralError(f"config lines look like 'key = value': {line!r}")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def resolve_seed(args, config: dict) -> int:
    for value in (args.seed, config.get("seed"), os.environ.get("AMENALAB_SEED")):
        if value is not None:
            try:
                return int(value)
            except ValueError:
                raise LiteralError(f"bad seed {value!r}") from None
    return 0


def parse_args(parser, argv):
    args = parser.parse_args(argv)
    config = read_config(args.config) if args.config else {}
    if config:
        # config values only fill options left at their defaults on the command line
        sub = parser._subparsers._group_actions[0].choices[args.command]
        known = {a.dest: a for a in sub._actions}
        given = {a.dest for a in sub._actions for opt in a.option_strings
                 for tok in argv if tok == opt or tok.startswith(opt + "=")}
        for key, value in config.items():
            if key in known and key not in given and key != "seed":
                action = known[key]
                setattr(args, key, action.type(value) if action.type else value)
    return args, config


def _emit(payload, args) -> None:
    report, text = payload
    body = dump_json(report) if args.format == "json" else text
    if args.output:
        Path(args.output).write_text(body)
    else:
        sys.stdout.write(body)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args, config = parse_args(parser, argv)
        seed = resolve_seed(args, config)
    except (LiteralError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        report, text = COMMANDS[args.command](args)
    except CheckFailed as exc:
        report, text = exc.payload
        _emit((_with_seed(report, seed), text), args)
        return EXIT_CHECK
    except InvariantBreach as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (AmenalabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # anything else is a bug, not bad input
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    _emit((_with_seed(report, seed), text), args)
    return EXIT_OK


def _with_seed(report: dict, seed: int) -> dict:
    return {"seed": seed, **report}


if __name__ == "__main__":
    sys.exit(main())
