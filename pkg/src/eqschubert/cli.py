"""Command line front end: ``eqschubert <subcommand> ...`` or ``python -m eqschubert``."""
import argparse
import sys

from .chevalley import quantum_chevalley_gb
from .giambelli import giambelli_class
from .kostant import classical_product_oracle
from .partitions import Partition
from .pieri import eq_quantum_pieri, grassmann_pieri
from .structure import lift_twist, pw_lift
from .tables import format_class
from .typeweyl import FlagShape, Perm, build_root_system, build_type_a

__all__ = ["main", "run", "build_parser"]


class UsageError(ValueError):
    pass


def _ints(text):
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _shape(n, flag):
    return FlagShape.type_a(n, flag) if flag else FlagShape.full(build_type_a(n))


def _perm(text, size):
    w = Perm.parse(text, size)
    if len(w) != size:
        raise UsageError(f"{text} is not a permutation of 1..{size}")
    return w


def _cmd_pieri(args):
    space = _shape(args.n, args.flag)
    u = _perm(args.u, args.n + 1)
    if not space.is_min_rep(u):
        raise UsageError(f"{u} is not a minimal coset representative for {space}")
    return eq_quantum_pieri(space, args.i, args.p, u)


def _cmd_grassmann(args):
    nu = Partition.parse(args.nu, args.m, args.nplus1)
    return grassmann_pieri(args.m, args.nplus1 - 1, args.p, nu)


def _cmd_chevalley(args):
    if args.type:
        rs = build_root_system(args.type)
        if args.u == "id":
            u = rs.identity()
        else:
            u = rs.from_word(list(_ints(args.u)))
    else:
        if args.n is None:
            raise UsageError("give --n (type A) or --type")
        rs = build_type_a(args.n)
        u = _perm(args.u, args.n + 1)
    if not 1 <= args.i <= rs.n:
        raise UsageError(f"need 1 <= i <= {rs.n}")
    return quantum_chevalley_gb(rs, args.i, u)


def _cmd_classical(args):
    space = _shape(args.n, args.flag)
    u = _perm(args.u, args.n + 1)
    v = _perm(args.v, args.n + 1)
    for w in (u, v):
        if not space.is_min_rep(w):
            raise UsageError(f"{w} is not a minimal coset representative for {space}")
    return classical_product_oracle(space, u, v)


def _cmd_giambelli(args):
    lam = Partition.parse(args.lam, args.m, args.nplus1)
    return giambelli_class(lam)


def _cmd_lift(args):
    space = _shape(args.n, args.flag)
    lam = args.lam
    if len(lam) == space.n:
        lam = tuple(lam[s - 1] for s in space.steps)
    elif len(lam) != space.k:
        raise UsageError(f"--lambda needs {space.k} or {space.n} entries")
    lam_b = pw_lift(space, lam)
    twist = lift_twist(space, lam_b)
    rs = space.rs
    levi = sorted(space.delta_p)
    kept = [a for a in levi if sum(rs.cartan[a - 1][t] * c for t, c in enumerate(lam_b)) == 0]
    lines = [
        f"space {space}",
        f"lambda_P {','.join(map(str, lam))}",
        f"lambda_B {','.join(map(str, lam_b))}",
        f"levi {','.join(map(str, levi)) or '-'}",
        f"levi' {','.join(map(str, kept)) or '-'}",
        f"twist {twist}",
    ]
    return "\n".join(lines)


def _cmd_verify(args):
    from .verify import SUITES, run_suite

    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        res = run_suite(name, max_n=args.max_n, jobs=args.jobs)
        print(res.summary())
        for note in res.notes:
            print(f"  {note}")
        for msg in res.failures[:args.show]:
            print(f"  {msg}")
        ok = ok and res.ok
    return ok


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "latex", "table"), default="plain",
                     help="output format (table is the snapshot format)")

    parser = argparse.ArgumentParser(
        prog="eqschubert",
        description="Equivariant quantum Schubert calculus on type-A flag varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pieri", parents=[fmt], help="sigma^{c[n_i,p]} * sigma^u on a partial flag")
    p.add_argument("--n", type=int, required=True, help="rank; the flag lives in C^{n+1}")
    p.add_argument("--flag", type=_ints, required=True, help="steps n_1,...,n_k")
    p.add_argument("--i", type=int, required=True, help="step index i; the special class is c[n_i,p]")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--u", required=True, help="one-line permutation such as [3715246]")
    p.set_defaults(func=_cmd_pieri)

    p = sub.add_parser("grassmann", parents=[fmt], help="sigma^{1^p} * sigma^nu on Gr(m, n+1)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--nplus1", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--nu", required=True, help="partition such as (4,2,1)")
    p.set_defaults(func=_cmd_grassmann)

    p = sub.add_parser("chevalley", parents=[fmt], help="divisor product on G/B")
    p.add_argument("--n", type=int)
    p.add_argument("--type", help="root system such as B3 or G2 (u is then a reduced word)")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--u", required=True)
    p.set_defaults(func=_cmd_chevalley)

    p = sub.add_parser("classical", parents=[fmt], help="equivariant product by localization")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--flag", type=_ints, default=None)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.set_defaults(func=_cmd_classical)

    p = sub.add_parser("giambelli", parents=[fmt], help="evaluate the determinant for sigma^lambda")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--nplus1", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=_cmd_giambelli)

    p = sub.add_parser("lift", help="Peterson-Woodward lift of a quantum degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--flag", type=_ints, default=None)
    p.add_argument("--lambda", dest="lam", type=_ints, required=True)
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--show", type=int, default=10, help="failure lines to print")
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv=None, out=None):
    """Run the command line and return the exit code."""
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        from .verify import SUITES

        if args.suite != "all" and args.suite not in SUITES:
            parser.print_usage(sys.stderr)
            print(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}",
                  file=sys.stderr)
            return 2
        return 0 if args.func(args) else 1
    try:
        result = args.func(args)
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, str):
        print(result, file=out)
    else:
        text = format_class(result, args.format)
        print(text.rstrip("\n"), file=out)
    return 0


def main(argv=None):
    try:
        code = run(argv)
    except SystemExit as exc:
        code = exc.code
    sys.exit(code)
