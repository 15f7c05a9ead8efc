"""
Basic Permutation Groups Toolkit - Main Entry Point
Analyzes transitive groups, their subgroup lattices and symmetric graphs
"""

import argparse
import logging
import sys
import time

from src import config
from src.cli import (Report, cmd_analyze_graph, cmd_analyze_group, cmd_catalog, cmd_constant,
                     cmd_reduce, load_graph, load_graph_group, load_group)
from src.errors import CapExceededError, ToolkitError

EXIT_OK = 0
EXIT_ERROR = 2
EXIT_PARTIAL = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Basic Permutation Groups Toolkit',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python app.py analyze-group groups/d8.txt               # Lattices, components, O'Nan-Scott type
  python app.py analyze-group --catalog s_4 --alpha 1     # Built-in group, base point 1
  python app.py analyze-graph --graph-catalog petersen --aut --s 4
  python app.py analyze-graph graphs/c5.txt groups/d10.txt
  python app.py reduce --graph-catalog dodecahedron --aut --s 2
  python app.py reduce --graph-catalog cycle_6 --group-catalog d_12 --mode distance
  python app.py constant --cutoff 10000000                # Interval for sum 1/(d phi(d))
  python app.py catalog                                   # Built-in graph and group names
        """
    )
    parser.add_argument('--enum-cap', type=int, default=None,
                        help=f'Element enumeration cap (Default: BP_ENUM_CAP or {config.ENUM_CAP})')
    parser.add_argument('--graph-max', type=int, default=None,
                        help=f'Largest graph for automorphism search (Default: BP_GRAPH_MAX or {config.GRAPH_MAX})')
    parser.add_argument('--timing', action='store_true',
                        help='Add wall-clock timing to the report')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for progress, -vv for debug output on stderr')

    sub = parser.add_subparsers(dest='command', required=True)

    group_cmd = sub.add_parser('analyze-group', help='Analyze a transitive permutation group')
    group_cmd.add_argument('group_file', nargs='?', default=None, help='Group file')
    group_cmd.add_argument('--catalog', type=str, default=None, help='Built-in group name')
    group_cmd.add_argument('--alpha', type=int, default=1, help='Base point, 1-based (Default: 1)')

    for name, text in (('analyze-graph', 'Symmetry properties of a graph under a group'),
                       ('reduce', 'Reduce to a quasiprimitive or primitive quotient')):
        cmd = sub.add_parser(name, help=text)
        cmd.add_argument('graph_file', nargs='?', default=None, help='Graph file')
        cmd.add_argument('group_file', nargs='?', default=None, help='Group file')
        cmd.add_argument('--graph-catalog', type=str, default=None, help='Built-in graph name')
        cmd.add_argument('--group-catalog', type=str, default=None, help='Built-in group name')
        cmd.add_argument('--aut', action='store_true',
                         help='Use the computed automorphism group of the graph')
        cmd.add_argument('--s', type=int, default=2 if name == 'reduce' else config.MAX_ARC_LENGTH,
                         help='Arc length s')
        if name == 'reduce':
            cmd.add_argument('--explore-all', action='store_true',
                             help='Report the quotient of every candidate normal subgroup')
            cmd.add_argument('--mode', choices=['quasiprimitive', 'distance'],
                             default='quasiprimitive', help='Reduction pipeline (Default: quasiprimitive)')

    constant_cmd = sub.add_parser('constant', help='Enclose the density constant')
    constant_cmd.add_argument('--cutoff', type=int, default=10 ** 6, help='Summation cutoff D')

    sub.add_parser('catalog', help='List built-in graphs and groups')
    return parser


def apply_caps(args: argparse.Namespace):
    """Flags win over environment variables, which config has already read."""
    if args.enum_cap is not None:
        config.ENUM_CAP = args.enum_cap
    if args.graph_max is not None:
        config.GRAPH_MAX = args.graph_max


def run(args: argparse.Namespace, report: Report) -> Report:
    if args.command == 'analyze-group':
        G = load_group(report, args.group_file, args.catalog)
        return cmd_analyze_group(report, G, alpha=args.alpha - 1)
    if args.command in ('analyze-graph', 'reduce'):
        graph = load_graph(report, args.graph_file, args.graph_catalog)
        G = load_graph_group(report, graph, args.group_file, args.group_catalog, args.aut)
        if args.command == 'analyze-graph':
            return cmd_analyze_graph(report, graph, G, args.s)
        return cmd_reduce(report, graph, G, args.s, args.explore_all, args.mode)
    if args.command == 'constant':
        return cmd_constant(report, args.cutoff)
    return cmd_catalog(report)


def _check_sources(parser: argparse.ArgumentParser, args: argparse.Namespace):
    if args.command == 'analyze-group' and (args.group_file is None) == (args.catalog is None):
        parser.error('analyze-group needs exactly one of GROUP_FILE or --catalog')
    if args.command in ('analyze-graph', 'reduce'):
        if (args.graph_file is None) == (args.graph_catalog is None):
            parser.error(f'{args.command} needs exactly one of GRAPH_FILE or --graph-catalog')
        if args.group_file is not None and args.group_catalog is not None:
            parser.error('give a group file or --group-catalog, not both')


def main(argv=None) -> int:
    """Main Program"""
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_sources(parser, args)

    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format='%(levelname)s: %(message)s', stream=sys.stderr)
    apply_caps(args)

    arguments = {k: v for k, v in sorted(vars(args).items())
                 if k not in ('verbose', 'timing', 'group_file', 'graph_file')}
    report = Report(command=args.command, arguments=arguments)

    # Banner
    print("=" * 60, file=sys.stderr)
    print(f"  Basic Permutation Groups Toolkit - {args.command}", file=sys.stderr)
    print("=" * 60, file=sys.stderr)

    start = time.perf_counter()
    status = EXIT_OK
    try:
        run(args, report)
    except CapExceededError as e:
        report.omit(args.command, str(e))
        print(f"[Main] ✗ cap exceeded: {e}", file=sys.stderr)
    except ToolkitError as e:
        print(f"[Main] ✗ {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"[Main] ✗ cannot read input: {e}", file=sys.stderr)
        return EXIT_ERROR

    if args.timing:
        report.timing = {"seconds": round(time.perf_counter() - start, 6)}
    if report.partial:
        status = EXIT_PARTIAL
    for line in report.summary_lines():
        print(f"[Main]   {line}", file=sys.stderr)
    print(report.to_json())
    return status


if __name__ == '__main__':
    sys.exit(main())
