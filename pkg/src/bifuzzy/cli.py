"""Command line: validate carriers, score and rank alternatives, audit axioms, elicit.

Exit codes: 0 success, 1 parse/validation error, 2 dimension/scale error,
3 internal error, 4 an axiom suite failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .axioms import (
    bind,
    demo_handle,
    elicit_bicapacity,
    elicit_capacity,
    run_characterization_suite,
    run_demo_suite,
)
from .core import BIPOLAR, EPS
from .errors import BifuzzyError, DimensionMismatch, ValidationError
from .formats import (
    dumps_carrier,
    fingerprint,
    load_alternatives,
    load_bicapacity,
    load_capacity,
    render_value,
    save_carrier,
    write_rows,
)

EXIT_OK, EXIT_INVALID, EXIT_DOMAIN, EXIT_INTERNAL, EXIT_SUITE_FAILED = 0, 1, 2, 3, 4

INTEGRALS = ("choquet", "shilkret", "sugeno")
DEMOS = ("mean", "max")
POLARITIES = ("classic", "negative", "symmetric", "bipolar")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _load_carrier(path, polarity):
    return load_bicapacity(path) if polarity == "bipolar" else load_capacity(path)


def _handle(args):
    if args.variant != "neutral" and args.polarity != "bipolar":
        raise ValidationError("--variant right/left applies only with --polarity bipolar")
    carrier = _load_carrier(args.carrier, args.polarity)
    return bind(args.integral, args.polarity, carrier, args.variant), carrier


def _evaluate(args):
    G, carrier = _handle(args)
    table = load_alternatives(args.alternatives)
    if len(table) and table.n != G.n:
        raise DimensionMismatch(f"alternatives have {table.n} criteria, carrier has {G.n}")
    if args.polarity == "bipolar":
        table.check_scale(BIPOLAR)
    values = [G(row) for row in table.rows]
    return G, carrier, table, values


def _metadata(args, carrier):
    return {
        "integral": args.integral,
        "polarity": args.polarity,
        "variant": args.variant,
        "carrier_sha256": fingerprint(carrier),
        "tolerance": EPS,
    }


def cmd_score(args) -> int:
    _, carrier, table, values = _evaluate(args)
    if args.format == "json":
        doc = _metadata(args, carrier)
        doc["rows"] = [{"id": i, "value": float(render_value(v))} for i, v in zip(table.ids, values)]
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(write_rows([(i, render_value(v)) for i, v in zip(table.ids, values)],
                                    ("id", "value")))
    return EXIT_OK


def rank_values(ids, values):
    """(rank, id, value) sorted by value descending; ties keep input order and share a rank."""
    order = sorted(range(len(ids)), key=lambda k: -values[k])
    out = []
    for pos, k in enumerate(order):
        if pos and values[k] == values[order[pos - 1]]:
            rank = out[-1][0]
        else:
            rank = pos + 1
        out.append((rank, ids[k], values[k]))
    return out


def cmd_rank(args) -> int:
    _, carrier, table, values = _evaluate(args)
    ranking = rank_values(table.ids, values)
    if args.format == "json":
        doc = _metadata(args, carrier)
        doc["ranking"] = [{"rank": r, "id": i, "value": float(render_value(v))} for r, i, v in ranking]
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(write_rows([(r, i, render_value(v)) for r, i, v in ranking],
                                    ("rank", "id", "value")))
    return EXIT_OK


def _render_suite(result, fmt) -> str:
    if fmt == "json":
        return json.dumps(result.to_dict(), indent=2) + "\n"
    lines = [f"suite: {result.name}"]
    for r in result.reports:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status} {r.axiom}: checked={r.checked} violations={r.violation_count}")
        if r.violations:
            v = r.violations[0]
            lines.append(f"  witness (trial {v.trial}): {json.dumps(v.witness)}"
                         f" lhs={v.lhs!r} rhs={v.rhs!r} gap={v.gap!r}")
    rt = {True: "true", False: "false", None: "n/a"}[result.roundtrip]
    lines.append(f"exact-roundtrip: {rt}")
    lines.append(f"result: {'PASS' if result.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def cmd_check_axioms(args) -> int:
    if args.integral in DEMOS:
        n = args.n
        if args.carrier:
            n = _load_carrier(args.carrier, "bipolar" if args.polarity == "bipolar" else "classic").n
        result = run_demo_suite(demo_handle(args.integral, n), args.trials, args.seed, args.eps)
    else:
        if args.carrier is None:
            raise ValidationError("--carrier is required for built-in integrals")
        if args.variant != "neutral" and args.polarity != "bipolar":
            raise ValidationError("--variant right/left applies only with --polarity bipolar")
        carrier = _load_carrier(args.carrier, args.polarity)
        result = run_characterization_suite(args.integral, carrier, args.trials, args.seed,
                                            args.eps, polarity=args.polarity, variant=args.variant)
    sys.stdout.write(_render_suite(result, args.format))
    return EXIT_OK if result.passed else EXIT_SUITE_FAILED


def cmd_elicit(args) -> int:
    G, carrier = _handle(args)
    elicited = elicit_bicapacity(G) if args.polarity == "bipolar" else elicit_capacity(G)
    save_carrier(elicited, args.out)
    exact = elicited == carrier and dumps_carrier(elicited) == dumps_carrier(carrier)
    print(f"exact-roundtrip: {'true' if exact else 'false'}")
    return EXIT_OK if exact else EXIT_INTERNAL


def cmd_validate(args) -> int:
    carrier = _load_carrier(args.carrier, "bipolar" if args.bipolar else "classic")
    kind = "bi-capacity" if args.bipolar else "capacity"
    print(f"valid {kind} on {carrier.n} criteria, sha256 {fingerprint(carrier)}")
    return EXIT_OK


def _integral_flags(p, integrals=INTEGRALS, carrier_required=True):
    p.add_argument("--carrier", required=carrier_required, help="capacity or bi-capacity JSON file")
    p.add_argument("--integral", required=True, choices=integrals)
    p.add_argument("--polarity", default="classic", choices=POLARITIES)
    p.add_argument("--variant", default="neutral", choices=("neutral", "right", "left"),
                   help="tie rule of the bipolar maximum (bipolar Shilkret/Sugeno only)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bifuzzy", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="validate a carrier file")
    p.add_argument("carrier")
    p.add_argument("--bipolar", action="store_true", help="the file holds a bi-capacity")
    p.set_defaults(func=cmd_validate)

    for name, func, helptext in (("score", cmd_score, "score alternatives"),
                                 ("rank", cmd_rank, "rank alternatives by score")):
        p = sub.add_parser(name, help=helptext)
        _integral_flags(p)
        p.add_argument("--alternatives", required=True, help="CSV with header id,c1,...,cn")
        p.add_argument("--format", default="table", choices=("table", "json"))
        p.set_defaults(func=func)

    p = sub.add_parser("check-axioms", help="run the characterization suite of an integral")
    _integral_flags(p, INTEGRALS + DEMOS, carrier_required=False)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--eps", type=float, default=EPS)
    p.add_argument("--n", type=int, default=3, help="criterion count for mean/max without a carrier")
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.set_defaults(func=cmd_check_axioms)

    p = sub.add_parser("elicit", help="recover the carrier from an integral via indicators")
    _integral_flags(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_elicit)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:  # usage errors, --help, --version
        return e.code if isinstance(e.code, int) else EXIT_INVALID
    try:
        return args.func(args)
    except BifuzzyError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as e:  # noqa: BLE001
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
