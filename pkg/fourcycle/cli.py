"""
Command line interface::

    fourcycle construct --s 2 --h 1 --c 3 --out system.json
    fourcycle verify system.json
    fourcycle spectrum --s 3 --h 1 --check
    fourcycle bound --v 17 --s 2
    fourcycle decompose --s 4 --t 1

Exit codes: 0 when everything verified, 1 when a verification failed or a
check ran out of time, 2 for invalid arguments.
"""
import argparse
import logging
import sys
from math import floor

from .checker import check_spectrum
from .colouring import build, case_for, chromatic_bounds, spectrum_range
from .decomposer import decompose, one_factor
from .exceptions import ConstructionError, ImproperlyConfigured, SerializationError
from .serializer import deserialize, serialize
from .verifier import upper_bound, verify_all

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _print_report(report, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    print(report.summary(), file=out)
    for failure in report.failures:
        print('  %s' % (failure, ), file=err)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_construct(args):
    colsys = build(args.s, args.h, args.c)
    document = serialize(colsys)
    report = verify_all(colsys)
    if args.out == '-':
        sys.stdout.write(document.decode('utf-8') + '\n')
        # keep stdout a clean document
        return _print_report(report, out=sys.stderr)
    with open(args.out, 'wb') as f:
        f.write(document)
    print('wrote %s: v=%d, %d blocks, c=%d (%s case)' % (
        args.out, colsys.params.v, len(colsys.system), colsys.c, colsys.construction_case))
    return _print_report(report)


def cmd_verify(args):
    with open(args.file, 'rb') as f:
        colsys = deserialize(f.read())
    s = colsys.params.s if args.s is None else args.s
    report = verify_all(colsys, s=s, c=args.c)
    print('%s: v=%d, %d blocks, s=%d, c=%d' % (
        args.file, colsys.params.v, len(colsys.system), s, colsys.c if args.c is None else args.c))
    return _print_report(report)


def cmd_spectrum(args):
    spectrum = spectrum_range(args.s, args.h)
    lower, constructed, proved = chromatic_bounds(args.s, args.h)
    print(' '.join(str(c) for c in spectrum))
    for c in spectrum:
        print('%d %s' % (c, case_for(args.s, c)))
    print('lower index %d, constructed up to %d, proved upper bound %d' % (lower, constructed, proved))
    if not args.check:
        return EXIT_OK

    code = EXIT_OK
    for result in check_spectrum(args.s, args.h, timeout=args.timeout, workers=args.workers):
        if result.passed:
            print('%d PASS' % result.c)
            continue
        code = EXIT_FAILED
        print('%d FAIL' % result.c)
        print('  c=%d: %s' % (result.c, result.error or result.report.first_failure()), file=sys.stderr)
    return code


def cmd_bound(args):
    bound = upper_bound(args.v, args.s)
    print('%s (floor %d)' % (bound, floor(bound)))
    return EXIT_OK


def cmd_decompose(args):
    decomposition = decompose(args.s, args.t)
    print('K_%d - I, I = %s' % (2 * args.s, ' '.join('%d-%d' % p for p in one_factor(args.s))))
    cycles = list(decomposition.cycles())
    n3 = len(decomposition.triangles)
    print('triangles: %d' % n3)
    for m, cycle in cycles[:n3]:
        print('C_%d = (%s)' % (m, ','.join(map(str, cycle))))
    print('quadrilaterals: %d' % len(decomposition.quads))
    for m, cycle in cycles[n3:]:
        print('C_%d = (%s)' % (m, ','.join(map(str, cycle))))
    return EXIT_OK


def _positive(value):
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError('expected a positive integer, got %r' % value)
    return number


def make_parser():
    parser = argparse.ArgumentParser(
        prog='fourcycle',
        description='Equitable block colourings of 4-cycle systems of order 1+8k.')
    parser.add_argument('-v', '--verbose', action='store_true', help='log construction steps')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    p = commands.add_parser('construct', help='build a coloured system and write it as JSON')
    p.add_argument('--s', type=_positive, required=True)
    p.add_argument('--h', type=_positive, required=True)
    p.add_argument('--c', type=_positive, required=True)
    p.add_argument('--out', default='-', help='output file, - for standard output')
    p.set_defaults(func=cmd_construct)

    p = commands.add_parser('verify', help='verify a JSON document')
    p.add_argument('file')
    p.add_argument('--s', type=_positive)
    p.add_argument('--c', type=_positive)
    p.set_defaults(func=cmd_verify)

    p = commands.add_parser('spectrum', help='list the colour counts reached for (s, h)')
    p.add_argument('--s', type=_positive, required=True)
    p.add_argument('--h', type=_positive, required=True)
    p.add_argument('--check', action='store_true', help='build and verify every colour count')
    p.add_argument('--timeout', type=float, default=None, help='seconds allowed per colour count')
    p.add_argument('--workers', type=_positive, default=None)
    p.set_defaults(func=cmd_spectrum)

    p = commands.add_parser('bound', help='upper bound on the number of colours')
    p.add_argument('--v', type=_positive, required=True)
    p.add_argument('--s', type=_positive, required=True)
    p.set_defaults(func=cmd_bound)

    p = commands.add_parser('decompose', help='decompose K_2s - I into triangles and quadrilaterals')
    p.add_argument('--s', type=_positive, required=True)
    p.add_argument('--t', type=_positive, required=True)
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        return args.func(args)
    except (ImproperlyConfigured, ConstructionError, SerializationError) as e:
        print('%s: error: %s' % (parser.prog, e), file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print('%s: error: %s' % (parser.prog, e), file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
