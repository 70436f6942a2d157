import argparse
import sys
from fractions import Fraction
from logging import Logger
from typing import Callable

from config.settings import Config
from dualdeg.andor import check_facts, compose, find_component_witnesses, verify_composition
from dualdeg.boolfn import (
    BoolFn,
    Family,
    SymmetricProfile,
    block_sensitivity,
    is_symmetric,
    make_named,
    read_table,
    threshold_profile,
    to_profile,
    write_table,
)
from dualdeg.checks import VerificationReport
from dualdeg.cli.config import REPORT_FORMATS, RunConfig
from dualdeg.cli.report import Report
from dualdeg.cli.suite import run_suite, run_tolerance_check
from dualdeg.dualcore import ONE_THIRD, approx_degree, optimal_dual_witness, verify_witness, write_witness
from dualdeg.errors import DualDegError, PreconditionError
from dualdeg.markov import (
    certificate_at_one,
    certificate_at_zero,
    derivative_bound_check,
    higher_certificate,
    trig_identity_suite,
)
from dualdeg.numeric import format_rational, parse_rational
from dualdeg.symdual import (
    dual_for_profile,
    general_sym_dual,
    maj_dual,
    spalek_or_dual,
    verify_construction,
    verify_sym_witness,
    write_sym_witness,
)
from dualdeg.utils.logger import set_level, setup_logger

logger: Logger = setup_logger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
CONSTRUCTIONS = ("auto", "spalek", "maj", "general")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except PreconditionError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _family(text: str) -> Family:
    try:
        return Family(text.upper())
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"unknown family {text!r}, expected one of "
                                         f"{[family.value for family in Family]}") from e


def _function(args: argparse.Namespace) -> BoolFn:
    if getattr(args, "table", None):
        return read_table(args.table)
    return make_named(args.fn, n=args.n, t=args.t, M=args.M, N=args.N)


def _profile(family: Family, n: int, t: int | None) -> SymmetricProfile:
    """Symmetric profiles straight from the family, without building a 2^n table."""
    if family is Family.PARITY:
        return SymmetricProfile(n=n, values=tuple(-1 if i % 2 else 1 for i in range(n + 1)))
    if family is Family.ANDOR:
        raise PreconditionError("AND-OR is not symmetric")
    threshold = {Family.OR: 1, Family.AND: n, Family.MAJ: (n + 1) // 2, Family.THRESHOLD: t}[family]
    if threshold is None or not 1 <= threshold <= n:
        raise PreconditionError(f"threshold t must satisfy 1 <= t <= n, got t={threshold}, n={n}")
    return threshold_profile(n, threshold)


def cmd_fn(args: argparse.Namespace, config: RunConfig, report: Report) -> None:
    f = _function(args)
    section = VerificationReport(subject=f"function {f.label}", scope="fn")
    bs = block_sensitivity(f)
    symmetric = is_symmetric(f)
    section.add("block_sensitivity", "bs(f) is at most n", bs <= f.n, bs, f.n)
    report.add(section)
    print(f"{f.label}: n={f.n}, bs={bs}, symmetric={'yes' if symmetric else 'no'}")
    if symmetric:
        print(f"profile: {' '.join(str(v) for v in to_profile(f).values)}")
    if args.out:
        write_table(f, args.out)


def cmd_degree(args: argparse.Namespace, config: RunConfig, report: Report) -> None:
    f = _function(args)
    degree = approx_degree(f, args.eps)
    section = VerificationReport(subject=f"deg_{format_rational(args.eps)}({f.label})", scope="degree")
    section.add("approx_degree", "smallest d with best_eps(f, d) <= eps", True, degree)
    report.add(section)
    print(degree)


def cmd_dual(args: argparse.Namespace, config: RunConfig, report: Report) -> None:
    f = _function(args)
    witness = optimal_dual_witness(f, args.d)
    section = verify_witness(witness, f, args.d, args.eps)
    report.add(section)
    print(f"correlation {format_rational(witness.claimed_correlation)} at d={args.d} for {f.label}")
    if args.out:
        write_witness(witness, args.out)


def cmd_andor(args: argparse.Namespace, config: RunConfig, report: Report) -> None:
    components = find_component_witnesses(args.M, args.N)
    composed = compose(components.outer, components.inner, args.M, args.N)
    section = verify_composition(composed)
    section.add("components", "chosen [d, d', eps, delta]", True,
                [components.d, components.d_inner, components.eps, components.delta])
    report.add(section)
    report.add(check_facts(components.outer, components.inner))
    print(f"AND_{args.M} o OR_{args.N}: d={components.d}, d'={components.d_inner}, "
          f"eps={format_rational(components.eps)}, delta={format_rational(components.delta)}")


def cmd_symdual(args: argparse.Namespace, config: RunConfig, report: Report) -> None:
    profile = _profile(args.family, args.n, args.t)
    builders: dict[str, Callable] = {
        "auto": lambda: dual_for_profile(profile),
        "spalek": lambda: spalek_or_dual(args.n, profile),
        "maj": lambda: maj_dual(args.n, args.t, profile),
        "general": lambda: general_sym_dual(args.n, args.t, profile),
    }
    Q = builders[args.construction]()
    report.add(verify_sym_witness(Q, profile, Q.claimed_phd, args.eps))
    report.add(verify_construction(Q, profile))
    print(f"{Q.provenance.construction} dual on n={Q.n}: ratio {format_rational(Q.ratio(profile))}, "
          f"phd {Q.claimed_phd}")
    if args.out:
        write_sym_witness(Q, args.out)


def cmd_markov(args: argparse.Namespace, config: RunConfig, report: Report) -> None:
    if args.x0 is not None:
        report.add(derivative_bound_check(args.n, args.x0, args.grid or 2 * args.n + 2, config.precision))
        return
    if args.higher:
        certificate = higher_certificate(args.n, args.k, config.precision)
    elif args.at == "one":
        certificate = certificate_at_one(args.n, config.precision)
    else:
        certificate = certificate_at_zero(args.n, config.precision)
    section = VerificationReport(subject=certificate.report.subject, scope=certificate.report.scope)
    section.extend(certificate.report)
    run_tolerance_check(section, certificate, config.tolerance_exponent)
    report.add(section)


def cmd_trig(args: argparse.Namespace, config: RunConfig, report: Report) -> None:
    report.add(trig_identity_suite(args.nmax, config.precision))


def cmd_suite(args: argparse.Namespace, config: RunConfig, report: Report) -> None:
    for section in run_suite(config, quick=args.quick):
        report.add(section)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=int, default=None, help="precision in bits for AP arithmetic")
    common.add_argument("--tol-exp", type=int, default=None, help="residual tolerance is 2^TOL_EXP")
    common.add_argument("--report", default=None, help="write the report to this path")
    common.add_argument("--format", choices=REPORT_FORMATS, default=None, help="report format")
    common.add_argument("--log-level", choices=LOG_LEVELS, default=None, help="level for the dualdeg loggers")

    function = argparse.ArgumentParser(add_help=False)
    function.add_argument("--fn", type=_family, default=Family.OR, help="OR, AND, MAJ, THRESHOLD, PARITY or ANDOR")
    function.add_argument("--n", type=int, default=None)
    function.add_argument("--t", type=int, default=None)
    function.add_argument("--M", type=int, default=None)
    function.add_argument("--N", type=int, default=None)
    function.add_argument("--table", default=None, help="read the truth table from a file instead")

    parser = argparse.ArgumentParser(prog="dualdeg", description="Approximate degree and its dual certificates.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {Config.get_version()}")
    commands = parser.add_subparsers(dest="command", required=True)

    fn = commands.add_parser("fn", parents=[common, function], help="describe a Boolean function")
    fn.add_argument("--out", default=None, help="write the truth table here")
    fn.set_defaults(handler=cmd_fn)

    degree = commands.add_parser("degree", parents=[common, function], help="eps-approximate degree")
    degree.add_argument("--eps", type=_rational, default=ONE_THIRD)
    degree.set_defaults(handler=cmd_degree)

    dual = commands.add_parser("dual", parents=[common, function], help="optimal dual witness at degree d")
    dual.add_argument("--d", type=int, required=True)
    dual.add_argument("--eps", type=_rational, default=ONE_THIRD, help="correlation the witness must beat")
    dual.add_argument("--out", default=None, help="write the witness here")
    dual.set_defaults(handler=cmd_dual)

    andor = commands.add_parser("andor", parents=[common], help="dual witness for AND_M o OR_N")
    andor.add_argument("--M", type=int, required=True)
    andor.add_argument("--N", type=int, required=True)
    andor.set_defaults(handler=cmd_andor)

    symdual = commands.add_parser("symdual", parents=[common], help="explicit symmetric dual witness")
    symdual.add_argument("--n", type=int, required=True)
    symdual.add_argument("--t", type=int, default=None)
    symdual.add_argument("--family", type=_family, default=Family.THRESHOLD)
    symdual.add_argument("--construction", choices=CONSTRUCTIONS, default="auto")
    symdual.add_argument("--eps", type=_rational, default=Fraction(0), help="ratio the witness must beat")
    symdual.add_argument("--out", default=None, help="write the witness here")
    symdual.set_defaults(handler=cmd_symdual)

    markov = commands.add_parser("markov", parents=[common], help="Markov certificates and derivative bounds")
    markov.add_argument("--n", type=int, required=True)
    markov.add_argument("--at", choices=("zero", "one"), default="one")
    markov.add_argument("--higher", action="store_true", help="k-th derivative at 1")
    markov.add_argument("--k", type=int, default=1)
    markov.add_argument("--x0", type=_rational, default=None, help="bound p'(x0) on a rational grid instead")
    markov.add_argument("--grid", type=int, default=None, help="grid points for --x0 (default 2n + 2)")
    markov.set_defaults(handler=cmd_markov)

    trig = commands.add_parser("trig", parents=[common], help="trigonometric identity suite")
    trig.add_argument("--nmax", type=int, default=50)
    trig.set_defaults(handler=cmd_trig)

    suite = commands.add_parser("suite", parents=[common], help="acceptance suite")
    suite.add_argument("--quick", action="store_true", help="reduced ranges")
    suite.set_defaults(handler=cmd_suite)
    return parser


def run(argv: list[str] | None = None) -> int:
    """Exit code 0 when every check passes, 1 when one fails, 2 on usage errors."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    if args.log_level:
        set_level(args.log_level)
    try:
        config = RunConfig.from_config().with_flags(precision=args.prec, tolerance_exponent=args.tol_exp,
                                                    report_path=args.report, report_format=args.format)
        report = Report(config=config, command=args.command)
        args.handler(args, config, report)
    except PreconditionError as e:
        print(f"dualdeg {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DualDegError as e:
        logger.error(f"dualdeg {args.command} stopped: {e}")
        return EXIT_FAILED

    report.write()
    if args.command not in ("degree", "fn"):
        for line in report.summary_lines():
            print(line)
    return EXIT_OK if report.passed else EXIT_FAILED
