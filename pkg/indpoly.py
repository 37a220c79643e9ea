#!/usr/bin/env python3
"""
Command-line entry point for the independence-polynomial toolkit.

Usage:
    python indpoly.py analyze "zykov(K(127), rep(3, K(7)))"
    python indpoly.py poly "star(P(7))"
    python indpoly.py oracle "P(5)"
    python indpoly.py verify centipede-even --n-max 8
    python indpoly.py search trees --n-max 9 --property unimodal

Exit codes: 0 success, 2 parse/range/graph error, 3 capacity,
4 verification failure or conjecture violation, 1 anything else.
"""

import argparse
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from dotenv import load_dotenv

from src.errors import IndPolyError
from src.reports import error_payload, render
from src.toolkit import IndPolyToolkit

EXIT_VIOLATION = 4

EXPRESSION_HELP = """
Expressions:
  atoms        K(n) Kbar(n) P(n) C(n) Kmulti(n1, ..., np) K1n(n) S(n) W(n)
               Tri(n) TriK2(n) KnJ3K7(n) H T1 T2
               graph{n; u-v, ...}  file("edges.txt")
  combinators  union(e, ...) zykov(e, ...) star(e) rep(k, e) zrep(k, e)
               ej(e1, u, e2, v)   u is a vertex of e1, v a vertex of e2;
                                  e1's vertices come first in the result
  Kmulti accepts runs: Kmulti(3*120) is 120 parts of size 3.
"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='indpoly',
        description='Independence polynomials: exact computation, shape analysis and conjecture search.',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EXPRESSION_HELP,
    )
    parser.add_argument('--config', '-c', type=str, default=None, help='Path to configuration file')
    parser.add_argument('--format', choices=['text', 'json'], default=None, help='Report format')
    parser.add_argument('--verbose', '-v', action='store_true', help='Debug logging and tracebacks')

    # --format may also follow the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['text', 'json'], default=argparse.SUPPRESS, help='Report format')

    sub = parser.add_subparsers(dest='command', required=True)

    for name, helptext in [('analyze', 'Full report: polynomial, shape and structural flags'),
                           ('poly', 'Coefficients of I(G;x)'),
                           ('oracle', 'Stable-set counts by brute-force enumeration')]:
        p = sub.add_parser(name, help=helptext, parents=[common],
                           formatter_class=argparse.RawDescriptionHelpFormatter, epilog=EXPRESSION_HELP)
        p.add_argument('expression', help='Graph expression')
        if name == 'oracle':
            p.add_argument('--max-oracle-vertices', type=int, default=None,
                           help='Refuse graphs larger than this (default: 26)')

    p = sub.add_parser('verify', parents=[common], help='Check a named identity for every n up to --n-max')
    p.add_argument('identity', help='star, centipede-even, centipede-odd, spider-closed-form, spider-mode, '
                                    'lemma1, zykov-m, spider-log-concave, centipede-log-concave, '
                                    'star-alpha3, hamidoune, zykov-power-log-concave')
    p.add_argument('--n-max', type=int, required=True)
    p.add_argument('--seed', type=int, default=None, help='Seed for the random inputs')

    p = sub.add_parser('search', parents=[common], help='Search trees for unimodality or log-concavity violations')
    p.add_argument('kind', choices=['trees', 'star-trees'])
    p.add_argument('--n-max', type=int, required=True)
    p.add_argument('--mode', choices=['exhaustive', 'sample'], default='exhaustive')
    p.add_argument('--property', dest='prop', choices=['unimodal', 'log-concave'], default='unimodal')
    p.add_argument('--seed', type=int, default=None, help='Seed for sample mode')
    p.add_argument('--workers', type=int, default=None, help='Worker processes (default: 1)')
    return parser


def run(args: argparse.Namespace) -> int:
    overrides = {
        'report': {'format': args.format},
        'oracle': {'max_vertices': getattr(args, 'max_oracle_vertices', None)},
        'search': {'workers': getattr(args, 'workers', None)},
    }
    if args.command == 'verify':
        overrides['verify'] = {'seed': args.seed}
    if args.verbose:
        overrides['logging'] = {'level': 'DEBUG'}

    toolkit = IndPolyToolkit(config_path=args.config, overrides=overrides)
    fmt = toolkit.report_format

    if args.command == 'analyze':
        report = toolkit.cmd_analyze(args.expression)
    elif args.command == 'poly':
        report = toolkit.cmd_poly(args.expression)
    elif args.command == 'oracle':
        report = toolkit.cmd_oracle(args.expression)
    elif args.command == 'verify':
        report = toolkit.cmd_verify(args.identity, args.n_max)
    else:
        report = toolkit.cmd_search(args.kind, args.n_max, args.mode, args.prop, args.seed)

    print(render(report, fmt))
    if args.command in ('verify', 'search') and not report.ok:
        return EXIT_VIOLATION
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    # Load environment variables
    load_dotenv()

    json_errors = args.format == 'json'
    try:
        return run(args)
    except IndPolyError as e:
        if json_errors:
            print(error_payload(e))
        else:
            print(f"Error [{e.code}]: {e.message}", file=sys.stderr)
        if args.verbose:
            import traceback
            traceback.print_exc()
        return e.exit_code
    except Exception as e:
        if json_errors:
            print(error_payload(e))
        else:
            print(f"Error: {e}", file=sys.stderr)
        if args.verbose:
            import traceback
            traceback.print_exc()
        return 1


if __name__ == '__main__':
    sys.exit(main())
