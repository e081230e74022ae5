"""
CLI module for the weighted zero-sum laboratory
Reports go to stdout (or --out FILE); logs and progress go to stderr
"""
import argparse
import sys
from datetime import datetime

from wzslab.config import (
    API_HOST,
    API_PORT,
    DEFAULT_K_MAX,
    DEFAULT_LENGTH_BOUND,
    DEFAULT_OMEGA_CAP,
    DEFAULT_SEMINORMAL_BOUND,
    ORDER_CAP,
    OUTPUT_FORMATS,
    SWEEP_MAX_N,
    WEIGHT_SPECS,
    RunConfig,
)
from wzslab.errors import WzsError
from wzslab.logger import format_duration, logger
from wzslab.output import write_report
from wzslab.parse_module import parse_discriminant
from wzslab.system_info import print_system_info

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ACCEPTANCE = 3

class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1"""

    def error(self, message):
        self.print_usage(sys.stderr)
        logger.error(f"{self.prog}: {message}")
        sys.exit(EXIT_USAGE)

def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--group', '-g', default='3', help='Group spec, e.g. "3" or "2,4" (default: 3)')
    common.add_argument('--weights', '-w', choices=WEIGHT_SPECS, default='pm',
                        help='Weight set (default: pm)')
    common.add_argument('--format', '-f', dest='output_format', choices=OUTPUT_FORMATS, default='json',
                        help='Output format (default: json)')
    common.add_argument('--out', '-o', default=None, help='Write the report to FILE instead of stdout')
    common.add_argument('--threads', type=int, default=None,
                        help='Worker threads (default: $WZS_THREADS or 1)')
    common.add_argument('--length-bound', type=int, default=DEFAULT_LENGTH_BOUND,
                        help=f'Length bound for bounded invariants (default: {DEFAULT_LENGTH_BOUND})')
    common.add_argument('--omega-cap', type=int, default=DEFAULT_OMEGA_CAP,
                        help=f'Max atoms in an omega product (default: {DEFAULT_OMEGA_CAP})')
    common.add_argument('--k-max', type=int, default=DEFAULT_K_MAX,
                        help=f'Largest k in the U_k table (default: {DEFAULT_K_MAX})')
    common.add_argument('--search-bound', type=int, default=DEFAULT_SEMINORMAL_BOUND,
                        help=f'Witness length for seminormality (default: {DEFAULT_SEMINORMAL_BOUND})')
    common.add_argument('--order-cap', type=int, default=ORDER_CAP,
                        help=f'Largest group order accepted (default: {ORDER_CAP})')
    common.add_argument('--verbose', '-v', action='store_true', help='Verbose output')
    common.add_argument('--quiet', '-q', action='store_true', help='Only errors on stderr')
    return common

def create_parser():
    """Create argument parser for CLI"""
    common = _common_options()
    parser = _Parser(
        prog='wzslab',
        description='Weighted zero-sum laboratory - monoids of Γ-weighted zero-sum sequences',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Atoms of the plus-minus weighted monoid over C3
  python -m wzslab atoms --group 3 --weights pm

  # Davenport constants, Δ, c, ω and the U_k table over C5
  python -m wzslab invariants --group 5 --k-max 4 --length-bound 20 --format text

  # Sets of lengths of one sequence
  python -m wzslab lengths --group 5 --seq "[(1)^5,(4)^5]"

  # Seminormality and class semigroup over C2+C4
  python -m wzslab seminormal --group 2,4 --weights aut
  python -m wzslab class-semigroup --group 2,4

  # Quadratic forms of discriminant -23
  python -m wzslab qform classgroup --disc -23
  python -m wzslab qform check --disc -23 --n 4
  python -m wzslab qform sweep --disc -23 --max-n 5000 --format csv --out report.csv

  # Acceptance suite and HTTP server
  python -m wzslab acceptance --only A05-seminormal
  python -m wzslab serve --port 8000
"""
    )
    subparsers = parser.add_subparsers(dest='command', help='Command to execute')

    subparsers.add_parser('atoms', parents=[common], help='List the atoms of B_Γ(G)')
    subparsers.add_parser('invariants', parents=[common], help='Global invariants at their bounds')
    lengths = subparsers.add_parser('lengths', parents=[common], help='Set of lengths of one sequence')
    lengths.add_argument('--seq', '-s', required=True, help='Sequence literal, e.g. "[(1)^5,(4)^5]"')
    subparsers.add_parser('seminormal', parents=[common], help='Seminormality verdict with witness')
    subparsers.add_parser('class-semigroup', parents=[common], help='Class semigroup of B_Γ(G) in F(G)')
    subparsers.add_parser('structure', parents=[common], help='Krull / weakly Krull verdict with witness')

    qform = subparsers.add_parser('qform', help='Binary quadratic forms and the transfer')
    qform_sub = qform.add_subparsers(dest='qform_command', help='Quadratic form command')
    for name, text in (('classgroup', 'Form class group'), ('check', 'Representation of one n'),
                       ('sweep', 'Transfer against brute force for all admissible n')):
        sub = qform_sub.add_parser(name, parents=[common], help=text)
        sub.add_argument('--disc', '-d', required=True, help='Negative discriminant')
        if name == 'check':
            sub.add_argument('--n', type=int, required=True, help='Positive integer to test')
        if name == 'sweep':
            sub.add_argument('--max-n', dest='sweep_max_n', type=int, default=SWEEP_MAX_N,
                             help=f'Largest n (default: {SWEEP_MAX_N})')

    acceptance = subparsers.add_parser('acceptance', parents=[common], help='Run the acceptance suite')
    acceptance.add_argument('--only', action='append', default=None, metavar='ID',
                            help='Run only this check id (repeatable)')

    serve = subparsers.add_parser('serve', help='Start the HTTP API')
    serve.add_argument('--host', default=API_HOST, help=f'Bind address (default: {API_HOST})')
    serve.add_argument('--port', type=int, default=API_PORT, help=f'Port (default: {API_PORT})')
    serve.add_argument('--verbose', '-v', action='store_true', help='Verbose output')
    serve.add_argument('--quiet', '-q', action='store_true', help='Only errors on stderr')

    return parser

def run_command(args):
    """Build the report for args and write it; returns the exit code"""
    from wzslab.cli_module import commands
    from wzslab.cli_module.acceptance import CHECK_IDS, run_acceptance

    config = RunConfig.from_args(args)
    command = args.command
    if command == 'acceptance':
        unknown = sorted(set(args.only or []) - set(CHECK_IDS))
        if unknown:
            logger.error(f"unknown acceptance ids: {', '.join(unknown)}")
            return EXIT_USAGE
        report, passed = run_acceptance(only=args.only, threads=config.threads)
        write_report(report, config.output_format, args.out)
        return EXIT_OK if passed else EXIT_ACCEPTANCE
    if command == 'qform':
        if not args.qform_command:
            logger.error("qform needs a subcommand: classgroup, check or sweep")
            return EXIT_USAGE
        disc = parse_discriminant(args.disc)
        report = commands.cmd_qform(args.qform_command, config, disc, getattr(args, 'n', None))
    elif command == 'lengths':
        report = commands.cmd_lengths(config, args.seq)
    else:
        builders = {
            'atoms': commands.cmd_atoms,
            'invariants': commands.cmd_invariants,
            'seminormal': commands.cmd_seminormal,
            'class-semigroup': commands.cmd_class_semigroup,
            'structure': commands.cmd_structure,
        }
        report = builders[command](config)
    write_report(report, config.output_format, args.out)
    return EXIT_OK

def run_serve(args):
    import uvicorn
    from wzslab.api.server import app
    logger.info(f"Serving on http://{args.host}:{args.port}")
    uvicorn.run(app, host=args.host, port=args.port, log_level="debug" if args.verbose else "warning")
    return EXIT_OK

def main(argv=None):
    """Main CLI entry point"""
    parser = create_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    logger.verbose = getattr(args, "verbose", False)
    logger.quiet = getattr(args, "quiet", False) and not logger.verbose
    if logger.verbose:
        print_system_info(logger)
    start_time = datetime.now()
    try:
        if args.command == 'serve':
            return run_serve(args)
        code = run_command(args)
    except WzsError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except KeyboardInterrupt:
        logger.warning("Interrupted by user")
        return EXIT_USAGE
    logger.debug(f"{args.command} finished in {format_duration((datetime.now() - start_time).total_seconds())}")
    return code

if __name__ == '__main__':
    sys.exit(main())
