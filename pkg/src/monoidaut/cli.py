"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
JSON output uses sorted keys so identical flags give identical bytes.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from sympy import isprime

from . import monoid_aut as ma
from . import oracle as orc
from . import residue as rc
from . import structure as st
from . import unit_aut as ua
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
_DEFAULT_FORMAT = {'count': 'text', 'list': 'json', 'structure': 'json', 'ring': 'csv',
                   'verify': 'json', 'order': 'text', 'decompose': 'text'}


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _context(args, required: bool = True) -> rc.ModulusContext | None:
    if args.p is None and args.e is None and not required:
        return None
    if args.p is None or args.e is None:
        raise UsageError('--p and --e are required')
    if not isprime(args.p):
        raise UsageError(f'--p {args.p} is not prime')
    if args.e < 1:
        raise UsageError('--e must be at least 1')
    try:
        return rc.ModulusContext(args.p, args.e)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _need_oracle_room(ctx, args):
    if ctx.modulus > args.bound:
        raise UsageError(f'modulus {ctx.modulus} is above the oracle bound {args.bound}')


# --- commands -----------------------------------------------------------------

def cmd_count(args, out) -> int:
    ctx = _context(args)
    report = {'p': ctx.p, 'e': ctx.e, 'unit': ua.unit_aut_count(ctx),
              'monoid': ma.monoid_aut_count(ctx)}
    if args.oracle:
        _need_oracle_room(ctx, args)
        report['oracle_unit'] = len(orc.brute_monoid_automorphisms(orc.unit_group_table(ctx.p, ctx.e)))
        report['oracle_monoid'] = len(orc.brute_monoid_automorphisms(orc.monoid_table(ctx.p, ctx.e)))
        report['oracle_match'] = (report['oracle_unit'] == report['unit']
                                  and report['oracle_monoid'] == report['monoid'])
    if args.format == 'json':
        print(_dump(report), file=out)
    elif args.format == 'csv':
        w = csv.writer(out, lineterminator='\n')
        w.writerow(list(report))
        w.writerow([str(v).lower() if isinstance(v, bool) else v for v in report.values()])
    else:
        line = f"unit:{report['unit']} monoid:{report['monoid']}"
        if args.oracle:
            line += (f" oracle-unit:{report['oracle_unit']} oracle-monoid:{report['oracle_monoid']}"
                     f" oracle-match:{str(report['oracle_match']).lower()}")
        print(line, file=out)
    return EXIT_OK if report.get('oracle_match', True) else EXIT_FAIL


def _unit_generators(ctx) -> list[int]:
    if ctx.unit_group_order == 1:
        return []
    if ctx.is_two_adic:
        return [ctx.modulus - 1, 5]
    return [rc.primitive_root(ctx).value]


def cmd_list(args, out) -> int:
    ctx = _context(args)
    n = ctx.modulus
    if args.which == 'units':
        params = list(ua.enumerate_unit_auts(ctx))
        gens = _unit_generators(ctx)
        image = ua.unit_aut_image
        describe = lambda phi: {**phi.as_dict(), 'id': ua.is_identity(phi)}
        full = lambda phi: ua.unit_aut_map(phi).tolist()
    else:
        params = ma.enumerate_monoid_auts(ctx)
        gens = _unit_generators(ctx) + [ctx.p % n]
        image = ma.monoid_aut_image
        describe = lambda psi: psi.as_dict()
        full = lambda psi: ma.monoid_aut_map(psi).tolist()
    rows = []
    for x in params:
        row = {'params': describe(x),
               'image_of_generators': {str(g): image(x, g) for g in gens}}
        if n <= args.bound:
            row['full_map'] = full(x)
        rows.append(row)
    if args.format == 'csv':
        w = csv.writer(out, lineterminator='\n')
        w.writerow(['index', 'params', *(f'image_of_{g}' for g in gens)])
        for i, row in enumerate(rows):
            w.writerow([i, _dump(row['params']), *row['image_of_generators'].values()])
    elif args.format == 'text':
        for i, row in enumerate(rows):
            imgs = ' '.join(f'{g}->{v}' for g, v in row['image_of_generators'].items())
            print(f"{i}: {_dump(row['params'])} {imgs}", file=out)
    else:
        for row in rows:
            print(_dump(row), file=out)
    return EXIT_OK


_MONOID_NAMES = {'trivial': 'trivial', 'klein': 'Klein'}


def cmd_structure(args, out) -> int:
    ctx = _context(args)
    p, e = ctx.p, ctx.e
    if args.which == 'units':
        if p == 2 and e == 3:
            w = st.groups_isomorphic(st.unit_aut_table(ctx), st.symmetric_s3())
            report = {'regime': 'U_8', 'decomposition': 'S3', 'verified': w is not None,
                      'order': 6, 'witness_sample': w.sample() if w else []}
        elif p == 2 and e >= 4:
            if e > 9:
                raise UsageError('unit-group structure certification is limited to e <= 9')
            rep = st.verify_dihedral_case() if e == 4 else st.verify_structure_theorem(e)
            report = {'regime': 'two_adic', 'decomposition': rep.description,
                      'verified': rep.ok, 'order': 1 << (e - 1), 'checks': rep.checks,
                      'values': rep.values,
                      'witness_sample': rep.witness.sample() if rep.witness else []}
        else:
            N = ctx.unit_group_order
            order = ua.unit_aut_count(ctx)
            if order > st.DEFAULT_ISO_BOUND:
                raise UsageError('automorphism group above the table bound')
            target = ma._unit_group_mod(N) if N > 2 else st.trivial_group()
            w = st.groups_isomorphic(st.unit_aut_table(ctx), target)
            report = {'regime': 'cyclic', 'decomposition': f'U_{N}' if N > 2 else 'trivial',
                      'verified': w is not None, 'order': order,
                      'witness_sample': w.sample() if w else []}
    else:
        try:
            rep = ma.regime_iso(ctx)
        except rc.BoundExceeded as exc:
            raise UsageError(str(exc)) from None
        report = {'regime': rep.regime,
                  'decomposition': _MONOID_NAMES.get(rep.regime, rep.target_description),
                  'target_description': rep.target_description, 'verified': rep.ok,
                  'order': rep.order, 'checks': rep.checks,
                  'witness_sample': rep.witness.sample() if rep.witness else []}
    if args.format == 'text':
        status = 'verified' if report['verified'] else 'FAILED'
        print(f"{report['decomposition']} (order {report['order']}): {status}", file=out)
        for a, b in report['witness_sample']:
            print(f'  {a} -> {b}', file=out)
    else:
        report['witness_sample'] = [list(x) for x in report['witness_sample']]
        print(_dump(report), file=out)
    return EXIT_OK if report['verified'] else EXIT_FAIL


def cmd_ring(args, out) -> int:
    ctx = _context(args)
    params = ma.enumerate_monoid_auts(ctx)
    if not 0 <= args.phi < len(params):
        raise UsageError(f'--phi must be in [0, {len(params)})')
    try:
        ring = ma.induced_ring(params[args.phi], bound=args.bound)
    except rc.BoundExceeded as exc:
        raise UsageError(str(exc)) from None
    psi = params[args.phi]
    if args.format == 'json':
        print(_dump({'phi_index': args.phi, 'params': psi.as_dict(),
                     'add_table': ring.add.tolist(), 'checks': ring.checks, 'ok': ring.ok}),
              file=out)
    else:
        out.write(ring.to_csv())
        summary = ', '.join(f'{k}={v}' for k, v in ring.checks.items())
        print(f'psi index {args.phi} {_dump(psi.as_dict())}: ring axioms and isomorphism '
              f'{"pass" if ring.ok else "FAIL"} ({summary})', file=sys.stderr)
    return EXIT_OK if ring.ok else EXIT_FAIL


def cmd_verify(args, out) -> int:
    ctx = _context(args, required=False)
    res = run_suite(args.suite, ctx, bound=args.bound, seed=args.seed)
    summary = res.as_dict()
    if args.format == 'text':
        print(f"{summary['suite']}: {summary['cases']} cases, {len(summary['failures'])} failures",
              file=out)
        for f in summary['failures']:
            print(f'  FAIL {f}', file=out)
    else:
        print(_dump(summary), file=out)
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_order(args, out) -> int:
    ctx = _context(args)
    if args.a is None:
        raise UsageError('--a is required')
    a = args.a % ctx.modulus
    if not ctx.is_unit(a):
        raise UsageError(f'{args.a} is not a unit mod {ctx.modulus}')
    report = {'a': a, 'modulus': ctx.modulus, 'order': rc.unit_order(a, ctx)}
    ok = True
    if args.oracle:
        _need_oracle_room(ctx, args)
        G = orc.unit_group_table(ctx.p, ctx.e)
        report['oracle_order'] = orc.brute_order(G, G.index_of[a])
        ok = report['oracle_order'] == report['order']
        report['oracle_match'] = ok
    if args.format == 'json':
        print(_dump(report), file=out)
    else:
        print(' '.join(f'{k}:{str(v).lower() if isinstance(v, bool) else v}'
                       for k, v in report.items()), file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_decompose(args, out) -> int:
    ctx = _context(args)
    if args.a is None:
        raise UsageError('--a is required')
    x = args.a % ctx.modulus
    form = rc.padic_decompose(ctx.residue(x))
    u, r = form.canonical()
    report = {'a': x, 'modulus': ctx.modulus, 'u': u, 'r': r}
    if not form.is_zero:
        dec = rc.unit_decompose(r, ctx)
        if isinstance(dec, rc.TwoAdicDecomposition):
            report['unit_part'] = {'form': '(-1)^v 5^w', 'v': dec.v, 'w': dec.w}
        else:
            report['unit_part'] = {'form': 'g^k', 'g': dec.g, 'k': dec.k}
    if args.format == 'json':
        print(_dump(report), file=out)
    else:
        line = f'{x} = {ctx.p}^{u} * {r} mod {ctx.modulus}'
        up = report.get('unit_part')
        if up and up['form'] == 'g^k':
            line += f"; {r} = {up['g']}^{up['k']}"
        elif up:
            line += f"; {r} = (-1)^{up['v']} 5^{up['w']}"
        print(line, file=out)
    return EXIT_OK


COMMANDS = {'count': cmd_count, 'list': cmd_list, 'structure': cmd_structure,
            'ring': cmd_ring, 'verify': cmd_verify, 'order': cmd_order,
            'decompose': cmd_decompose}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--p', type=int)
    common.add_argument('--e', type=int)
    common.add_argument('--format', choices=('json', 'csv', 'text'))
    common.add_argument('--oracle', action='store_true',
                        help='also run the brute-force oracle and compare')
    common.add_argument('--bound', type=int, default=rc.DEFAULT_ORACLE_BOUND,
                        help='largest modulus for oracle runs and full tables')
    common.add_argument('--seed', type=int, default=0)

    parser = argparse.ArgumentParser(prog='monoidaut', parents=[common],
                                     description='Automorphisms of (Z/p^eZ, .) and of its unit group.')
    sub = parser.add_subparsers(dest='command', required=True)
    sub.add_parser('count', parents=[common], help='automorphism group orders')
    p_list = sub.add_parser('list', parents=[common], help='one automorphism per line')
    p_list.add_argument('--which', choices=('units', 'monoid'), default='units')
    p_struct = sub.add_parser('structure', parents=[common], help='certified decomposition')
    p_struct.add_argument('--which', choices=('units', 'monoid'), default='units')
    p_ring = sub.add_parser('ring', parents=[common], help='transported addition table')
    p_ring.add_argument('--phi', type=int, default=0, help='index in enumeration order')
    p_verify = sub.add_parser('verify', parents=[common], help='run a verification suite')
    p_verify.add_argument('--suite', choices=SUITES, default='all')
    for name in ('order', 'decompose'):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument('--a', type=int)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    if args.format is None:
        args.format = _DEFAULT_FORMAT[args.command]
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f'monoidaut {args.command}: error: {exc}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
