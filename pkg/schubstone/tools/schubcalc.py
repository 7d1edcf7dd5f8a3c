import argparse
import logging
import sys
from dataclasses import dataclass

import schubstone as ss
from schubstone.errors import SchubstoneError, InternalError


LOG_LEVELS = ['debug', 'info', 'warning', 'error']


def arg_type(func, what):
    """Wrap a parser so domain parse errors become argparse usage errors."""
    def convert(text):
        try:
            return func(text)
        except (SchubstoneError, ValueError) as e:
            raise argparse.ArgumentTypeError(f'invalid {what} "{text}": {e}')
    convert.__name__ = what
    return convert


perm_arg = arg_type(ss.Permutation.parse, 'permutation')
index_arg = arg_type(ss.ElemIndex.parse, 'index')
format_arg = arg_type(ss.OutputFormat.by_name, 'format')
method_arg = arg_type(ss.StanleyMethod.by_name, 'method')


@dataclass(frozen=True)
class StanleyResult:
    expansion: ss.StableExpansion
    report: ss.StabilityReport
    check: str = None

    def to_json(self):
        result = self.expansion.to_json()
        result.update(self.report.to_json())
        if self.check is not None:
            result['check'] = self.check
        return result

    def __str__(self):
        text = f'{self.expansion}\n{self.report}'
        if self.check is not None:
            text += f'\ncheck: {self.check}'
        return text


@dataclass(frozen=True)
class ElemResult:
    expansion: ss.SchubertExpansion
    stability: ss.ElemStability = None

    def to_json(self):
        result = self.expansion.to_json()
        if self.stability is not None:
            result['stability'] = self.stability.to_json()
        return result

    def __str__(self):
        if self.stability is None:
            return str(self.expansion)
        return f'{self.expansion}\n{self.stability}'


def cmd_poly(args):
    return ss.schubert_bjs(args.perm)


def cmd_product(args):
    return ss.product_expand(args.perms, args.engine)


def cmd_stanley(args, parser):
    method = args.method
    if len(args.perms) < 2:
        parser.error('stanley needs at least two permutations')
    if method.max_factors is not None and len(args.perms) > method.max_factors:
        parser.error(f'method {method.name} supports at most {method.max_factors} factors')

    expansion = method.expand(args.perms, verify=args.verify, assume_no_gap=args.assume_no_gap, engine=args.engine)
    check = None
    if args.check:
        check = cross_check(method, expansion, args.perms, args.engine)
    return StanleyResult(expansion, ss.stability_report(expansion), check)


def cross_check(method, expansion, perms, engine):
    """Compare against the other method; mt results are compared on the padded pair they record."""
    if method is ss.METHOD_TRANSITION and (len(perms) != 2 or not any(w.is_grassmannian for w in perms)):
        return 'skipped (mt needs two factors, one Grassmannian)'
    via_mt = expansion if method is ss.METHOD_MT else ss.METHOD_MT.expand(perms)
    if via_mt.factors == expansion.factors and method is ss.METHOD_TRANSITION:
        via_transition = expansion
    else:
        via_transition = ss.METHOD_TRANSITION.expand(via_mt.factors, engine=engine)
    if dict(via_mt.terms) != dict(via_transition.terms):
        raise InternalError(f'methods mt and transition disagree on {" x ".join(map(str, via_mt.factors))}')
    other = ss.METHOD_MT if method is ss.METHOD_TRANSITION else ss.METHOD_TRANSITION
    if via_mt.padding > 0:
        return f'agrees with {other.name} on the padded pair {" x ".join(map(str, via_mt.factors))}'
    return f'agrees with {other.name}'


def cmd_mt_tree(args):
    m = args.m if args.m is not None else max(len(args.u.code), 1)
    return ss.mt_tree(ss.cross(args.w, args.u, m), m)


def cmd_elem(args, parser):
    if args.elem_command == 'expand':
        stability = ss.elem_stability(args.index) if args.stability else None
        return ElemResult(ss.elem_to_schubert(args.index), stability)
    if args.elem_command == 'pieri':
        return ss.pieri(args.r, args.k, args.perm)
    if args.elem_command == 'to-elem':
        return ss.schubert_to_elem(args.perm, args.n)
    if args.elem_command == 'kostka':
        return ss.kostka_matrix(args.n)
    if args.elem_command == 'basis':
        return ss.basis_report(args.n)
    if args.elem_command == 'pieri-stability':
        return ss.pieri_stability(args.i, args.j, args.perm)
    parser.error('missing elem command')


def cmd_perm(args):
    return ss.perm_report(args.perm)


def cmd_verify(args):
    return ss.run_golden(args.only)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-f', '--format', type=format_arg, default='text', help='output format: text, json or dot (default text)')
    common.add_argument('-l', '--loglevel', default='warning', choices=LOG_LEVELS, help='Log level (default warning)')

    parser = argparse.ArgumentParser(prog='schubcalc', description='Exact Schubert calculus: products, stable expansions, MT-trees')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('poly', parents=[common], help='print the Schubert polynomial S_w')
    p.add_argument('perm', type=perm_arg)

    p = sub.add_parser('product', parents=[common], help='expand a product of Schubert polynomials')
    p.add_argument('perms', type=perm_arg, nargs='+')
    p.add_argument('--engine', choices=ss.ENGINES, default='polynomial', help='polynomial (default) or monk')

    p = sub.add_parser('stanley', parents=[common], help='stable expansion of a product of Stanley symmetric functions')
    p.add_argument('perms', type=perm_arg, nargs='+')
    p.add_argument('--method', type=method_arg, default='transition', help='transition (default) or mt')
    p.add_argument('--assume-no-gap', action='store_true', help='stop at the first level without new terms')
    p.add_argument('--verify', action='store_true', help='recompute one level past the bound')
    p.add_argument('--check', action='store_true', help='cross-check against the other method')
    p.add_argument('--engine', choices=ss.ENGINES, default='monk', help='product engine for the transition method (default monk)')

    p = sub.add_parser('mt-tree', parents=[common], help='MT-tree rooted at w x u')
    p.add_argument('w', type=perm_arg)
    p.add_argument('u', type=perm_arg)
    p.add_argument('-m', type=int, help='number of variables (default: code length of u)')

    p = sub.add_parser('elem', help='elementary monomials e_I')
    elem = p.add_subparsers(dest='elem_command', metavar='elem_command')
    elem.required = True
    q = elem.add_parser('expand', parents=[common], help='expand e_I in Schubert polynomials')
    q.add_argument('index', type=index_arg)
    q.add_argument('--stability', action='store_true', help='run the strong stability diagnostic')
    q = elem.add_parser('pieri', parents=[common], help='e_r^k * S_w by the Pieri rule')
    q.add_argument('r', type=int)
    q.add_argument('k', type=int)
    q.add_argument('perm', type=perm_arg)
    q = elem.add_parser('to-elem', parents=[common], help='expand S_v in the e_J basis')
    q.add_argument('perm', type=perm_arg)
    q.add_argument('-n', type=int, required=True)
    q = elem.add_parser('kostka', parents=[common], help='Schubert-Kostka matrix and its inverse')
    q.add_argument('-n', type=int, required=True)
    q = elem.add_parser('basis', parents=[common], help='rank checks of the three bases')
    q.add_argument('-n', type=int, required=True)
    q = elem.add_parser('pieri-stability', parents=[common], help='levels of e_i^(j+k) * S_(1^k x w)')
    q.add_argument('i', type=int)
    q.add_argument('j', type=int)
    q.add_argument('perm', type=perm_arg)

    p = sub.add_parser('perm', parents=[common], help='code, diagram and statistics of a permutation')
    p.add_argument('perm', type=perm_arg)

    p = sub.add_parser('verify', parents=[common], help='run the golden reproduction checks')
    p.add_argument('suite', choices=['paper-examples', 'golden'], help='paper-examples (golden is an alias)')
    p.add_argument('--only', nargs='+', metavar='CHECK', help='run only the named checks')

    return parser


COMMANDS = {
    'poly': lambda args, parser: cmd_poly(args),
    'product': lambda args, parser: cmd_product(args),
    'stanley': cmd_stanley,
    'mt-tree': lambda args, parser: cmd_mt_tree(args),
    'elem': cmd_elem,
    'perm': lambda args, parser: cmd_perm(args),
    'verify': lambda args, parser: cmd_verify(args),
}


def run(argv, out=None):
    """Run the CLI and return the exit status (0 success, 1 domain error, 2 usage error)."""
    if out is None:
        out = sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        ss.logger.setLevel(getattr(logging, args.loglevel.upper()))

        try:
            result = COMMANDS[args.command](args, parser)
        except (SchubstoneError, ValueError) as e:
            print(f'error: {e}', file=sys.stderr)
            return 1

        if not args.format.supports(result):
            parser.error(f'format {args.format.name} is not available for {args.command}')
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    args.format.write(result, out)
    if args.command == 'verify' and not result.passed:
        return 1
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
