"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
3 requested basis does not exist.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from gnbmul.analysis import classify, comparison_table, scan, scan_csv
from gnbmul.arith import Element
from gnbmul.gnb_core import DEFAULT_T_MAX, GnbNotFoundError, build_params, smallest_type
from gnbmul.matrix import cn_upper_bound, count_ones, matrix_for_bit, mult_matrix_c0, render
from gnbmul.netlist import NetlistError, export_text, import_text, simulate
from gnbmul.synth import METHODS, SpaceComplexityWarning, applicable_methods, synthesize
from gnbmul.verify import DEFAULT_RANDOM, EXHAUSTIVE_MAX_K, verify_field

EXIT_FAIL, EXIT_USAGE, EXIT_NO_BASIS = 1, 2, 3
EXHAUSTIVE_LIMIT_K = 10


class UsageError(Exception):
    pass


def _params(k: int, T: int | None, t_max: int = DEFAULT_T_MAX):
    if k < 2:
        raise UsageError(f"--k must be >= 2, got {k}")
    if T is None:
        T = smallest_type(k, t_max)
        if T is None:
            raise GnbNotFoundError(k, None, f"no type T <= {t_max} satisfies the existence conditions")
    elif T < 1:
        raise UsageError(f"--type must be >= 1, got {T}")
    return build_params(k, T)


def cmd_info(args) -> int:
    p = _params(args.k, args.type, args.t_max)
    m0 = mult_matrix_c0(p)
    c_n = count_ones(m0)
    bound = cn_upper_bound(p.k, p.T)
    smallest = smallest_type(p.k, args.t_max)
    print(f"k={p.k} type={p.T}")
    print(f"p={p.p}")
    print(f"s={p.s}")
    print(f"lambda={p.lam}")
    print(f"C_N={c_n}")
    print(f"bound C_N <= {bound}: {'ok' if c_n <= bound else 'VIOLATED'}")
    print(f"smallest_type={smallest} classification={classify(smallest)}")
    return 0


def cmd_matrix(args) -> int:
    p = _params(args.k, args.type)
    if not 0 <= args.bit < p.k:
        raise UsageError(f"--bit must be in [0, {p.k}), got {args.bit}")
    sys.stdout.write(render(matrix_for_bit(mult_matrix_c0(p), args.bit), args.format))
    return 0


def _check_method(p, method: str) -> None:
    if method not in applicable_methods(p.T, p.k):
        raise UsageError(f"method {method} does not apply to k={p.k} type={p.T}; "
                         f"choose from {applicable_methods(p.T, p.k)}")


def cmd_synth(args) -> int:
    p = _params(args.k, args.type)
    _check_method(p, args.method)
    text = export_text(synthesize(p, args.method))
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return 0


def cmd_simulate(args) -> int:
    try:
        n = import_text(Path(args.netlist).read_text())
    except OSError as e:
        raise UsageError(f"cannot read {args.netlist}: {e.strerror}") from None
    except NetlistError as e:
        raise UsageError(f"{args.netlist}: {e}") from None
    try:
        a = Element.from_hex(args.a, n.k)
        b = Element.from_hex(args.b, n.k)
    except ValueError as e:
        raise UsageError(str(e)) from None
    print(simulate(n, a, b).to_hex())
    return 0


def cmd_verify(args) -> int:
    p = _params(args.k, args.type)
    methods = applicable_methods(p.T, p.k) if args.method == "all" else [args.method]
    for m in methods:
        _check_method(p, m)
    if args.exhaustive:
        if p.k > EXHAUSTIVE_LIMIT_K:
            raise UsageError(f"--exhaustive is limited to k <= {EXHAUSTIVE_LIMIT_K}")
        exhaustive = True
    elif args.random is not None:
        if args.random < 1:
            raise UsageError("--random needs a positive count")
        exhaustive = False
    else:
        exhaustive = p.k <= EXHAUSTIVE_MAX_K
    count = args.random or DEFAULT_RANDOM
    vectors = f"exhaustive({1 << 2 * p.k})" if exhaustive else f"random({count})"
    print(f"# k={p.k} type={p.T} vectors={vectors} seed={args.seed}")

    field, reports = verify_field(p, methods, exhaustive, count, args.seed)
    ok = True
    for c in field:
        print(c.line())
        ok &= c.ok
    for r in reports:
        for c in r.checks:
            print(c.line())
        print(r.summary())
        ok &= r.ok
    return 0 if ok else EXIT_FAIL


def cmd_compare(args) -> int:
    p = _params(args.k, args.type)
    if p.T % 2 == 0:
        raise UsageError("compare covers odd-type bases only")
    c_n = count_ones(mult_matrix_c0(p))
    rows = comparison_table(p.k, p.T, c_n)
    print(f"# k={p.k} type={p.T} C_N={c_n}")
    print("method,and,xor,delay")
    for r in rows:
        print(f"{r.method},{r.and_count},{r.xor_count},{r.delay_str()}")
    ours = rows[-1].xor_count
    if ours > min(r.xor_count for r in rows[:-1]):
        print(f"# note: ours is not the smallest XOR count here (k={p.k} < 2T+1={2 * p.T + 1})")
    return 0


def cmd_scan(args) -> int:
    if not 2 <= args.k_from <= args.k_to:
        raise UsageError("need 2 <= --from <= --to")
    if args.t_max < 1:
        raise UsageError("--t-max must be positive")
    sys.stdout.write(scan_csv(scan(args.k_from, args.k_to, args.t_max, args.cn), args.odd_only))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gnbmul", description="Gaussian normal basis multiplier toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def field_args(sp, type_required=True):
        sp.add_argument("--k", type=int, required=True, help="extension degree")
        sp.add_argument("--type", type=int, required=type_required, help="GNB type T")

    sp = sub.add_parser("info", help="basis parameters")
    field_args(sp, type_required=False)
    sp.add_argument("--t-max", type=int, default=DEFAULT_T_MAX)
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("matrix", help="print a multiplication matrix")
    field_args(sp)
    sp.add_argument("--bit", type=int, default=0)
    sp.add_argument("--format", choices=("ascii", "csv"), default="ascii")
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("synth", help="write a GNBMUL v1 netlist")
    field_args(sp)
    sp.add_argument("--method", choices=sorted(METHODS), required=True)
    sp.add_argument("--out", required=True, help="output path, or - for stdout")
    sp.set_defaults(func=cmd_synth)

    sp = sub.add_parser("simulate", help="evaluate a netlist on one input pair")
    sp.add_argument("--netlist", required=True)
    sp.add_argument("--a", required=True, help="hex, bit 0 = a_0")
    sp.add_argument("--b", required=True, help="hex, bit 0 = b_0")
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("verify", help="check circuits against reference arithmetic")
    field_args(sp)
    sp.add_argument("--method", choices=sorted(METHODS) + ["all"], default="all")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--exhaustive", action="store_true")
    g.add_argument("--random", type=int, metavar="N")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("compare", help="closed-form cost comparison")
    field_args(sp)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("scan", help="CSV survey of smallest GNB types")
    sp.add_argument("--from", dest="k_from", type=int, required=True)
    sp.add_argument("--to", dest="k_to", type=int, required=True)
    sp.add_argument("--odd-only", action="store_true")
    sp.add_argument("--t-max", type=int, default=DEFAULT_T_MAX)
    sp.add_argument("--cn", action="store_true", help="also compute C_N per field")
    sp.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", SpaceComplexityWarning)
            code = args.func(args)
        for w in caught:
            print(f"gnbmul: warning: {w.message}", file=sys.stderr)
        return code
    except UsageError as e:
        print(f"gnbmul: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GnbNotFoundError as e:
        print(f"gnbmul: {e}", file=sys.stderr)
        return EXIT_NO_BASIS


if __name__ == "__main__":
    sys.exit(main())
