import errorhandler
import argparse
import logging
import sys
import os

from harness.components.Harness import Harness

LOGGERS = ['GEOMETRY', 'PROFILES', 'SYMMETRIZATION', 'BONNESEN', 'EQUALITY', 'ORACLE', 'HARNESS']

def pair_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(dest='A', type=str)
    parser.add_argument(dest='B', type=str)
    parser.add_argument('--alpha', type=float, required=True)
    parser.add_argument('--beta', type=float, required=True)

if __name__ == '__main__':
    arg_parser = argparse.ArgumentParser(prog='bonnesen')
    arg_parser.add_argument('--eps-eq', dest='eps_eq', type=float, default=None)
    arg_parser.add_argument('--eps-wit', dest='eps_wit', type=float, default=None)
    arg_parser.add_argument('--debug', action=argparse.BooleanOptionalAction)
    commands = arg_parser.add_subparsers(dest='command', required=True)

    vol_parser = commands.add_parser('vol')
    vol_parser.add_argument(dest='body', type=str)
    vol_parser.add_argument('--oracle', type=int, default=None)

    sum_parser = commands.add_parser('sum')
    pair_arguments(sum_parser)
    sum_parser.add_argument('-o', '--output', type=str, default=None)

    bound_parser = commands.add_parser('bound')
    pair_arguments(bound_parser)
    bound_parser.add_argument('--u', type=str, required=True)
    bound_parser.add_argument('--mode', choices=['section', 'projection'], required=True)

    symmetrize_parser = commands.add_parser('symmetrize')
    symmetrize_parser.add_argument(dest='body', type=str)
    symmetrize_parser.add_argument('--u', type=str, required=True)
    symmetrize_parser.add_argument('--method', choices=['steiner', 'schwarz'], required=True)
    symmetrize_parser.add_argument('--grid', type=int, default=40)
    symmetrize_parser.add_argument('--slices', type=int, default=64)
    symmetrize_parser.add_argument('--ring', type=int, default=64)
    symmetrize_parser.add_argument('-o', '--output', type=str, default=None)

    classify_parser = commands.add_parser('classify')
    pair_arguments(classify_parser)
    classify_parser.add_argument('--u', type=str, required=True)
    classify_parser.add_argument('--mode', choices=['section', 'projection'], required=True)

    generator_parser = commands.add_parser('gen-equality')
    generator_parser.add_argument('--kind', choices=['homothety', 'section-stretch', 'projection-stretch'], required=True)
    generator_parser.add_argument('--seed', type=int, required=True)
    generator_parser.add_argument('--dim', type=int, required=True)
    generator_parser.add_argument('-o', '--output', type=str, default=None)

    fuzz_parser = commands.add_parser('fuzz')
    fuzz_parser.add_argument('--trials', type=int, required=True)
    fuzz_parser.add_argument('--dim', type=int, required=True)
    fuzz_parser.add_argument('--seed', type=int, required=True)
    fuzz_parser.add_argument('--mode', choices=['section', 'projection', 'both'], required=True)
    fuzz_parser.add_argument('--report', type=str, default=None)
    fuzz_parser.add_argument('--csv', type=str, default=None)
    fuzz_parser.add_argument('--workers', type=int, default=1)
    args = arg_parser.parse_args()

    if os.path.isfile(f'{args.command}.debug.log'): os.remove(f'{args.command}.debug.log')

    error_handler = errorhandler.ErrorHandler()
    handler = logging.FileHandler(filename=f'{args.command}.debug.log', encoding='utf-8') if args.debug else logging.StreamHandler(stream=sys.stderr)
    handler.setFormatter(logging.Formatter(fmt='[%(name)s %(levelname)s]: %(message)s'))

    for name in LOGGERS:
        logging.getLogger(name).setLevel(logging.DEBUG if args.debug else logging.INFO)
        logging.getLogger(name).addHandler(handler)

    with Harness(args) as harness:
      code = harness.run(error_handler)

    sys.exit(code)
