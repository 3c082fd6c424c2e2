"""Command-line front end for the solver, the constructors, and the tables.

Subcommands
-----------
dlog       solve a^x = b over the p-adic integers and print the level trace
teich      digits of the multiplicative (Teichmuller) lift of a residue
proot      stable primitive roots of one prime or a range of primes
structure  invariant factors of the unit group mod n
quotient   structure of the unit group modulo k-th powers
special    analyze a base/target pair and its multiplication permutation
tables     print one of the built-in worked tables

Exit codes
----------
0    success; for ``dlog`` the equation is solvable
2    ``dlog``: provably unsolvable (the failing level is reported)
3    ``dlog``: existence cannot be decided at the working precision
64   usage error (unparseable or missing flags)
65   domain error; stderr carries a machine-readable reason code

Output is human-oriented by default; ``--format json`` emits one JSON
object per row with sorted keys and fixed separators, so identical inputs
produce byte-identical output.  Digit lists are least-significant-first.
For ``dlog``, ``-N`` asks for that many digits of the p-adic exponent; the
level climb extends itself until they are pinned.

The environment variable PADLOG_MAX_MODULUS overrides the built-in
brute-force caps used by the residue search and the pair analyzer.
"""

import argparse
import json
import sys

import sympy

from .errors import AIsOne, NotInRange, PadlogError, UnknownTable, UnsolvableError
from .padic import PAdicInt
from .primroot import all_stable_roots
from .quotient import power_map_report
from .residue import group_structure, order_mod
from .solver import solve_by_lifting, solve_log_ratio, solve_units
from .special import analyze_pair, cycle_decomposition
from .teichmuller import teichmuller_lift

EX_OK = 0
EX_UNSOLVABLE = 2
EX_UNDETERMINED = 3
EX_USAGE = 64
EX_DOMAIN = 65

#: primes of the classical stable-root table, in its printed order
TABLE_PRIMES = (5, 13, 17, 29, 37, 41, 7, 11, 19, 23, 31, 43)

#: how many extra levels one climb attempt adds before re-checking
_CLIMB_ROUNDS = 64


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage failures exit with code 64."""

    def error(self, message):
        self.exit(EX_USAGE, "%s: error: %s\n" % (self.prog, message))


# ---------------------------------------------------------------------------
# output plumbing


def _print_json(records):
    for rec in records:
        print(json.dumps(rec, sort_keys=True, separators=(",", ":")))


def _emit(args, records, human_lines):
    if args.format == "json":
        _print_json(records)
    else:
        for line in human_lines:
            print(line)


def _digit_list(value, base, count):
    """First ``count`` base-p digits of ``value`` (empty when count is 0)."""
    if count <= 0:
        return []
    return list(PAdicInt.from_integer(value, base, count).digits)


def _csv(digits):
    return ",".join(str(d) for d in digits)


def _power_sum(digits, base):
    if not digits:
        return "0"
    return PAdicInt(base, tuple(digits)).power_sum()


def _bracket(factors):
    return "[%s]" % ",".join(str(f) for f in factors)


# ---------------------------------------------------------------------------
# dlog


def _climbing_trace(a, b, p, want_digits):
    """Lifting trace extended until ``want_digits`` digits are pinned.

    Pure torsion bases (a = -1) never pin more digits, so they get a fixed
    short climb; everything else grows one digit per level once the orders
    start multiplying by p, so the loop terminates.
    """
    n_max = want_digits + 2
    if a == -1:
        return solve_by_lifting(a, b, p, n_max)
    for _ in range(_CLIMB_ROUNDS):
        trace = solve_by_lifting(a, b, p, n_max)
        if trace.verdict == "unsolvable" or len(trace.digits) >= want_digits:
            return trace
        n_max += want_digits - len(trace.digits)
    return trace


def _dlog_lift(args):
    trace = _climbing_trace(args.a, args.b, args.p, args.N)
    digits = list(trace.digits[: args.N])
    records = []
    human = []
    for row in trace.rows:
        records.append(
            {
                "n": row.n,
                "x_n": row.x_n,
                "digits": _digit_list(row.x_n, args.p, row.digit_count),
                "verdict": "solvable",
            }
        )
        human.append("n=%-3d x_n=%-12d order=%d" % (row.n, row.x_n, row.order))
    summary = {
        "digits": digits,
        "failing_level": trace.failing_level,
        "p": args.p,
        "power_sum": _power_sum(digits, args.p),
        "precision": len(digits),
        "verdict": trace.verdict,
        "x": trace.x,
    }
    records.append(summary)
    if trace.verdict == "solvable":
        if digits:
            human.append("x = %s@%d^%d" % (_csv(digits), args.p, len(digits)))
            human.append("  = %s" % _power_sum(digits, args.p))
        human.append("x_n -> %d, verdict: solvable" % trace.x)
        code = EX_OK
    else:
        if digits:
            human.append("pinned digits: %s" % _csv(digits))
        human.append("verdict: unsolvable at level %d" % trace.failing_level)
        code = EX_UNSOLVABLE
    _emit(args, records, human)
    return code


def _dlog_log(args):
    result = solve_log_ratio(args.a, args.b, args.p, args.N)
    x = result.x
    record = {
        "depth_a": result.depth_a,
        "digits": list(x.digits),
        "p": args.p,
        "power_sum": x.power_sum(),
        "precision": x.precision,
        "verdict": "solvable",
    }
    human = [
        "x = %s" % x.format_digits(),
        "  = %s" % x.power_sum(),
        "depth(a) = %d, guard digits spent = %d"
        % (result.depth_a, result.precision_loss),
    ]
    _emit(args, [record], human)
    return EX_OK


def _dlog_units(args):
    sol = solve_units(args.a, args.b, args.p, args.N)
    principal = (
        list(sol.principal_exponent.digits)
        if sol.principal_exponent is not None
        else None
    )
    record = {
        "depth_a": sol.depth_a,
        "digits": principal,
        "p": args.p,
        "precision": sol.precision,
        "reason": sol.reason,
        "torsion_modulus": sol.torsion_modulus,
        "torsion_residue": sol.torsion_residue,
        "verdict": sol.verdict,
        "x": sol.x,
    }
    human = []
    if sol.torsion_modulus > 1:
        human.append(
            "torsion: x = %d (mod %d)" % (sol.torsion_residue, sol.torsion_modulus)
        )
    if principal is not None:
        human.append("principal exponent digits: %s" % _csv(principal))
    if sol.x is not None:
        human.append("x = %d" % sol.x)
    human.append("verdict: %s" % sol.verdict)
    if sol.reason:
        human.append("reason: %s" % sol.reason)
    _emit(args, [record], human)
    return EX_OK if sol.verdict == "solvable" else EX_UNDETERMINED


def cmd_dlog(args):
    if args.a == 1:
        raise AIsOne("powers of 1 cannot reach anything but 1")
    method = args.method
    if method == "auto":
        method = "lift"
    try:
        if method == "lift":
            return _dlog_lift(args)
        if method == "log":
            return _dlog_log(args)
        return _dlog_units(args)
    except UnsolvableError as exc:
        record = {
            "failing_level": exc.failing_level,
            "reason": str(exc),
            "verdict": "unsolvable",
        }
        human = ["verdict: unsolvable (%s)" % exc]
        _emit(args, [record], human)
        return EX_UNSOLVABLE


# ---------------------------------------------------------------------------
# the constructors


def cmd_teich(args):
    if not 1 <= args.a0 <= args.p - 1:
        raise NotInRange("a0 must lie in [1, p-1], got %d" % args.a0)
    lift = teichmuller_lift(args.a0, args.p, args.N)
    digits = list(lift.digits)
    record = {
        "a0": args.a0,
        "digits": digits,
        "p": args.p,
        "precision": args.N,
    }
    human = [_csv(digits), "= %s" % _power_sum(digits, args.p)]
    _emit(args, [record], human)
    return EX_OK


def cmd_proot(args):
    last = args.through if args.through is not None else args.p
    if last < args.p:
        raise NotInRange("--through must be >= p, got %d < %d" % (last, args.p))
    records = []
    human = []
    for q in range(args.p, last + 1):
        if not sympy.isprime(q):
            continue
        roots = all_stable_roots(q, full=args.full)
        records.append({"p": q, "roots": roots})
        human.append("%d: %s" % (q, " ".join(str(r) for r in roots)))
    _emit(args, records, human)
    return EX_OK


def cmd_structure(args):
    s = group_structure(args.n)
    record = {
        "cyclic_order": s.cyclic_order,
        "factors": list(s.factors),
        "n": args.n,
    }
    human = [_bracket(s.factors)]
    _emit(args, [record], human)
    return EX_OK


def cmd_quotient(args):
    rep = power_map_report(args.p, args.k)
    record = {
        "cokernel": list(rep.codomain_mod_image.factors),
        "d1": rep.d1,
        "d2": rep.d2,
        "image_finite": list(rep.image.finite.factors),
        "image_unit_scale": rep.image.unit_scale,
        "image_z_scale": rep.image.z_scale,
        "k": args.k,
        "kernel": list(rep.kernel.factors),
        "m": rep.m,
        "p": args.p,
    }
    human = [
        _bracket(rep.codomain_mod_image.factors),
        "kernel: %s" % _bracket(rep.kernel.factors),
        "image: z_scale=%s unit_scale=%s finite=%s"
        % (
            rep.image.z_scale,
            rep.image.unit_scale,
            _bracket(rep.image.finite.factors),
        ),
    ]
    _emit(args, [record], human)
    return EX_OK


def cmd_special(args):
    rep = analyze_pair(args.a, args.b, args.p, args.n)
    record = {
        "a": rep.a,
        "b": rep.b,
        "failed_condition": rep.failed_condition,
        "is_special": rep.is_special,
        "max_possible": rep.max_possible,
        "n": rep.n,
        "ord_a": rep.ord_a,
        "p": rep.p,
        "x_o": rep.x_o,
        "x_order": rep.x_order,
    }
    human = ["special: %s" % ("yes" if rep.is_special else "no")]
    if rep.failed_condition:
        human.append("failed condition: %s" % rep.failed_condition)
    if rep.ord_a is not None:
        human.append("ord(a) = %d" % rep.ord_a)
    if rep.x_o is not None:
        human.append("x_o = %d" % rep.x_o)
    if rep.x_order is not None:
        human.append(
            "order of x_o = %d (max possible %d)" % (rep.x_order, rep.max_possible)
        )
    records = [record]
    if args.cycles:
        if rep.x_o is None:
            raise NotInRange("no multiplier to decompose: the pair has no dlog")
        dec = cycle_decomposition(rep.x_o, rep.ord_a)
        records.append(
            {
                "cycles": dec.compact(),
                "modulus": dec.modulus,
                "x": dec.x,
            }
        )
        human.append("cycles: %s" % dec.compact())
    _emit(args, records, human)
    return EX_OK


# ---------------------------------------------------------------------------
# tables


def _dlog_rows(a, b, p, n_max, n_min=1):
    trace = solve_by_lifting(a, b, p, n_max)
    records = []
    human = []
    for row in trace.rows:
        if row.n < n_min:
            continue
        records.append(
            {
                "n": row.n,
                "x_n": row.x_n,
                "digits": _digit_list(row.x_n, p, row.digit_count),
                "verdict": "solvable",
            }
        )
        human.append("n=%-3d x_n=%d" % (row.n, row.x_n))
    return records, human


def _table_gauss_proots():
    records = []
    human = []
    for q in TABLE_PRIMES:
        roots = all_stable_roots(q)
        records.append({"p": q, "roots": roots})
        human.append("%d: %s" % (q, " ".join(str(r) for r in roots)))
    return records, human


def _table_order_2_mod_5n():
    records = []
    human = []
    for n in range(1, 11):
        order = order_mod(2, 5**n)
        records.append({"n": n, "order": order})
        human.append("n=%-3d order=%d" % (n, order))
    return records, human


def _table_special_x_order():
    records = []
    human = []
    for n in range(5, 11):
        rep = analyze_pair(-3, 5, 2, n)
        records.append(
            {
                "max": rep.max_possible,
                "n": n,
                "ord_a": rep.ord_a,
                "order": rep.x_order,
                "x_o": rep.x_o,
            }
        )
        human.append(
            "n=%-3d x_o=%-4d ord(a)=%-4d order=%-3d max=%d"
            % (n, rep.x_o, rep.ord_a, rep.x_order, rep.max_possible)
        )
    return records, human


def _table_special_cycles():
    records = []
    human = []
    for n in range(3, 8):
        rep = analyze_pair(-3, 5, 2, n)
        dec = cycle_decomposition(rep.x_o, rep.ord_a)
        records.append(
            {
                "cycles": dec.compact(),
                "modulus": rep.ord_a,
                "n": n,
                "x_o": rep.x_o,
            }
        )
        human.append("n=%d: %s" % (n, dec.compact()))
    return records, human


TABLES = {
    "gauss-proots": _table_gauss_proots,
    "order-2-mod-5n": _table_order_2_mod_5n,
    "neg3-pow-5-mod-2n": lambda: _dlog_rows(-3, 5, 2, 10),
    "sq-pair-mod-2n": lambda: _dlog_rows(9, 25, 2, 20, n_min=5),
    "neg2-pow-3-mod-5n": lambda: _dlog_rows(-2, 3, 5, 10),
    "neg4-pow-6-mod-5n": lambda: _dlog_rows(-4, 6, 5, 10),
    "special-x-order": _table_special_x_order,
    "special-cycles": _table_special_cycles,
}


def cmd_tables(args):
    try:
        builder = TABLES[args.name]
    except KeyError:
        raise UnknownTable(
            "no table named %r; known tables: %s"
            % (args.name, ", ".join(sorted(TABLES)))
        ) from None
    records, human = builder()
    _emit(args, records, human)
    return EX_OK


# ---------------------------------------------------------------------------
# parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("human", "json"),
        default="human",
        help="output style: human text or one JSON object per line",
    )

    parser = _Parser(
        prog="padlog",
        description="exact p-adic discrete logarithms, digit constructions, "
        "and the worked tables",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_dlog = sub.add_parser(
        "dlog", parents=[common], help="solve a^x = b over the p-adic integers"
    )
    p_dlog.add_argument("-p", type=int, required=True, help="prime base of Z_p")
    p_dlog.add_argument("-a", type=int, required=True, help="base of the power")
    p_dlog.add_argument("-b", type=int, required=True, help="target value")
    p_dlog.add_argument(
        "-N", type=int, default=12, help="digits of the exponent to pin (default 12)"
    )
    p_dlog.add_argument(
        "--method",
        choices=("lift", "log", "units", "auto"),
        default="auto",
        help="lift: level-by-level; log: log-ratio for principal units; "
        "units: torsion/principal split; auto: lift",
    )
    p_dlog.set_defaults(func=cmd_dlog)

    p_teich = sub.add_parser(
        "teich", parents=[common], help="digits of the multiplicative lift"
    )
    p_teich.add_argument("-p", type=int, required=True, help="odd prime (or 2)")
    p_teich.add_argument(
        "-a0", type=int, required=True, help="residue to lift, in [1, p-1]"
    )
    p_teich.add_argument(
        "-N", type=int, default=12, help="digits to compute (default 12)"
    )
    p_teich.set_defaults(func=cmd_teich)

    p_proot = sub.add_parser(
        "proot", parents=[common], help="stable primitive roots of a prime"
    )
    p_proot.add_argument("-p", type=int, required=True, help="first (or only) prime")
    p_proot.add_argument(
        "--through",
        type=int,
        default=None,
        help="also list every prime up to this bound",
    )
    p_proot.add_argument(
        "--full",
        action="store_true",
        help="list every stable root instead of one per mirror pair",
    )
    p_proot.set_defaults(func=cmd_proot)

    p_structure = sub.add_parser(
        "structure", parents=[common], help="invariant factors of the unit group mod n"
    )
    p_structure.add_argument("n", type=int, help="modulus, n >= 2")
    p_structure.set_defaults(func=cmd_structure)

    p_quotient = sub.add_parser(
        "quotient", parents=[common], help="unit group modulo k-th powers"
    )
    p_quotient.add_argument("-p", type=int, required=True, help="prime")
    p_quotient.add_argument("-k", type=int, required=True, help="power exponent")
    p_quotient.set_defaults(func=cmd_quotient)

    p_special = sub.add_parser(
        "special", parents=[common], help="analyze a base/target pair at one level"
    )
    p_special.add_argument("-a", type=int, required=True, help="base of the power")
    p_special.add_argument("-b", type=int, required=True, help="target value")
    p_special.add_argument("-p", type=int, required=True, help="prime")
    p_special.add_argument("-n", type=int, required=True, help="level (mod p^n)")
    p_special.add_argument(
        "--cycles",
        action="store_true",
        help="also print the multiplication-permutation cycles",
    )
    p_special.set_defaults(func=cmd_special)

    p_tables = sub.add_parser(
        "tables", parents=[common], help="print one of the built-in worked tables"
    )
    p_tables.add_argument(
        "name", help="table name; try an unknown name to see the list"
    )
    p_tables.set_defaults(func=cmd_tables)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PadlogError as exc:
        print("error (%s): %s" % (exc.code, exc), file=sys.stderr)
        return EX_DOMAIN
    except ValueError as exc:
        print("error (usage): %s" % exc, file=sys.stderr)
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
