#!/usr/bin/env python3

"""
Command Line Interface
----------------------
Instance generation, theorem verification campaigns, norm evaluation and
permutation averages from the command line.

Exit status: 0 when every check passes, 1 when a verification fails,
2 on invalid input.
"""

import argparse
import contextlib
import json
import sys
from typing import List, Optional

from ..analysis.data_storage import NumpyEncoder, load_space, save_json
from ..analysis.reporting import write_reports
from ..combinat.averages import AverageMethod, estimate_average, ks_bounds
from ..generation.generated_space import Variant
from ..musielak import MusielakSpace
from ..orlicz import OrliczFactory
from ..utils.instances import Instance, InstanceKind, generate_campaign, generate_instance
from ..verification_engine import THEOREMS, VerificationEngine

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INVALID = 2

# printed norms carry 12 significant digits
PRINT_RTOL = 1e-13


def _fmt(value: float) -> str:
    return f"{value:#.12g}"


def parse_args(argv: Optional[List[str]] = None):
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        description="Musielak-Orlicz norms generated by combinatorial matrix averages",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-q', '--quiet', action='store_true', help='Suppress progress output')

    # gen
    gen = subparsers.add_parser('gen', parents=[common], help='Generate an instance file',
                                formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    gen_group = gen.add_argument_group('Instance Options')
    gen_group.add_argument('--n', type=int, required=True, help='Number of rows')
    gen_group.add_argument('--N', type=int, help='Number of columns (defaults to n)')
    gen_group.add_argument('--kind', type=str.lower, default='random_normalized',
                           choices=['random_normalized', 'power_rows'], help='Instance kind')
    gen_group.add_argument('--seed', type=int, default=0, help='Random seed')
    gen_group.add_argument('--variant', type=str.lower, default='rowsum', choices=['rowsum', 'scaled'],
                           help='Row scaling of power_rows instances')
    gen_group.add_argument('--exponents', type=float, nargs='+', help='Fixed exponents for power_rows')
    gen.add_argument('-o', '--out', type=str, help='Output file (stdout if omitted)')

    # verify
    verify = subparsers.add_parser('verify', parents=[common], help='Verify a theorem on instances',
                                   formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    verify.add_argument('theorem', type=str.lower, choices=THEOREMS, help='Inequality to verify')
    source_group = verify.add_argument_group('Instance Source')
    source_group.add_argument('--instance', type=str, help='Instance JSON file')
    source_group.add_argument('--campaign', type=int, default=1, help='Random instances per size')
    source_group.add_argument('--n', type=int, nargs='+', default=[4], help='Sizes of campaign instances')
    source_group.add_argument('--N', type=int, help='Columns of campaign instances (lemma5.1)')
    source_group.add_argument('--kind', type=str.lower, choices=['random_normalized', 'power_rows'],
                              help='Campaign instance kind (power_rows for thm4.1, random_normalized otherwise)')
    source_group.add_argument('--seed', type=int, default=0, help='Campaign seed')
    check_group = verify.add_argument_group('Verification Options')
    check_group.add_argument('--method', type=str.lower, default='exact', choices=['exact', 'mc', 'bounds'],
                             help='Permutation average method')
    check_group.add_argument('--trials', type=int, default=100_000, help='Monte Carlo trials')
    check_group.add_argument('--samples', type=int, default=1000, help='Boundary points for lemma3.1')
    check_group.add_argument('--side', type=str.lower, default='primal', choices=['primal', 'dual'],
                             help='Ball checked by lemma3.1')
    check_group.add_argument('--workers', type=int, help='Worker threads for the campaign')
    output_group = verify.add_argument_group('Output Options')
    output_group.add_argument('-o', '--out', type=str, help='Report file (stdout if omitted)')
    output_group.add_argument('--format', type=str.lower, default='json', choices=['json', 'csv'],
                              help='Report format')

    # norm
    norm = subparsers.add_parser('norm', parents=[common], help='Luxemburg norm of a vector',
                                 formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    norm.add_argument('x', type=float, nargs='+', help='Vector entries')
    space_group = norm.add_argument_group('Space')
    space_group.add_argument('--function', action='append', dest='functions',
                             help="Orlicz function per coordinate: 'linear', 'power:P[:C]' or "
                                  "'weights:w1,w2,...[@scale]'; a single function is used for every coordinate")
    space_group.add_argument('--space', type=str, help='Space JSON file')
    space_group.add_argument('--dual', action='store_true', help='Also print the dual-norm interval')

    # average
    average = subparsers.add_parser('average', parents=[common], help='Permutation average of an instance',
                                    formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    average.add_argument('--instance', type=str, required=True, help='Instance JSON file')
    average.add_argument('--method', type=str.lower, default='exact', choices=['exact', 'mc', 'bounds'],
                         help='Average method')
    average.add_argument('--trials', type=int, default=100_000, help='Monte Carlo trials')
    average.add_argument('--seed', type=int, default=0, help='Monte Carlo seed')
    average.add_argument('--workers', type=int, help='Worker threads')

    return parser.parse_args(argv)


@contextlib.contextmanager
def _output(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, 'w') as f:
            yield f


def cmd_gen(args) -> int:
    """Write one generated instance as JSON."""
    instance = generate_instance(args.n, args.N, InstanceKind.parse(args.kind), args.seed,
                                 Variant.parse(args.variant), exponents=args.exponents)
    if args.out:
        save_json(instance.to_dict(), args.out)
        if not args.quiet:
            print(f"Wrote {instance.kind.value} instance n={instance.n} N={instance.N} to {args.out}",
                  file=sys.stderr)
    else:
        sys.stdout.write(json.dumps(instance.to_dict(), cls=NumpyEncoder, indent=2) + "\n")
    return EXIT_PASS


def _campaign_instances(args) -> List[Instance]:
    if args.instance:
        return [Instance.load(args.instance)]
    kind = args.kind or ('power_rows' if args.theorem == 'thm4.1' else 'random_normalized')
    variant = Variant.SCALED_BY_N if args.theorem == 'thm3.3' else Variant.ROWSUM_NORMALIZED
    columns = args.N if args.theorem == 'lemma5.1' else None
    return generate_campaign(args.campaign, args.n, InstanceKind.parse(kind), args.seed,
                             columns=columns, variant=variant)


def cmd_verify(args) -> int:
    """Verify a theorem and write one report line per instance plus a summary line."""
    instances = _campaign_instances(args)
    engine = VerificationEngine(verbose=not args.quiet, workers=args.workers)
    verify_config = {
        'method': args.method,
        'trials': args.trials,
        'samples': args.samples,
        'side': args.side,
    }
    reports = engine.batch_verify(instances, args.theorem, verify_config)
    with _output(args.out) as out:
        write_reports(reports, out, args.format, theorem=args.theorem)
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def _norm_space(args) -> MusielakSpace:
    if args.space and args.functions:
        raise ValueError("use either --space or --function, not both")
    if args.space:
        return load_space(args.space)
    if not args.functions:
        raise ValueError("a space is required: pass --space FILE or --function SPEC")
    functions = [OrliczFactory.from_spec(spec) for spec in args.functions]
    if len(functions) == 1:
        return MusielakSpace.orlicz(functions[0], len(args.x))
    return MusielakSpace(functions)


def cmd_norm(args) -> int:
    """Print the Luxemburg norm (and optionally the dual-norm interval) of x."""
    space = _norm_space(args)
    print(_fmt(space.luxemburg_norm(args.x, rtol=PRINT_RTOL)))
    if args.dual:
        lower, upper = space.dual_norm_estimate(args.x)
        print(f"{_fmt(lower)} {_fmt(upper)}")
    return EXIT_PASS


def cmd_average(args) -> int:
    """Print the permutation average of an instance."""
    instance = Instance.load(args.instance)
    method = AverageMethod.parse(args.method)
    if method is AverageMethod.BOUNDS:
        lower, upper = ks_bounds(instance.x, instance.matrix)
        print(f"{_fmt(lower)} {_fmt(upper)}")
        return EXIT_PASS

    estimate = estimate_average(instance.x, instance.matrix, method, trials=args.trials,
                                seed=args.seed, workers=args.workers)
    if method is AverageMethod.EXACT:
        print(_fmt(estimate.value))
    else:
        print(f"{_fmt(estimate.value)} {_fmt(estimate.half_width)}")
    return EXIT_PASS


COMMANDS = {
    'gen': cmd_gen,
    'verify': cmd_verify,
    'norm': cmd_norm,
    'average': cmd_average,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the command-line interface."""
    args = parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, RuntimeError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
