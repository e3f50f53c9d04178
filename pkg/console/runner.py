"""
Command-line front end.

``run(argv)`` parses a subcommand, executes it and returns the exit code
with its Report. Exit codes: 0 OK, 1 mathematical negative (not confluent,
unequal words, failed identity, uncertified), 2 usage or parse error,
3 fuel or bound exhausted.
"""
from __future__ import annotations

import argparse
import logging
from pathlib import Path

from branchings.confluence import Confluent, NotConfluent, Unknown, decide_confluence
from coherence.expressions import boundary3, cells_of, format_expr
from coherence.filling import fill_sphere
from coherence.squier import squier_completion
from coherence.standard import TableError, parse_table, standard_coherent_presentation
from coherence.transfer import TransferError, parse_transfer_map, transfer_homotopy_basis
from completion.knuth_bendix import knuth_bendix
from completion.reduction import metivier_squier_reduce
from homology.enumeration import EnumerationBoundExceeded, enumerate_monoid, sample_elements
from homology.export import boundary_matrices, chain_products, export_matrices
from homology.resolution import Resolution
from homology.ring import Combination, format_module
from homology.verification import verify_identities
from presentations.cells import Polygraph
from presentations.exceptions import PolygraphError
from presentations.parser import parse_polygraph, parse_word, parse_zigzag, serialize_polygraph
from presentations.validators import validate
from rewriting.exceptions import FuelExhausted, NotCertified
from rewriting.interpretations import check_interpretation_certificate, parse_certificate
from rewriting.normalize import Strategy, normalize
from rewriting.word_problem import certify_termination, word_eq
from .journal import log_run
from .reports import FAIL, PARTIAL, OutcomeSerializer, Report, RuleSerializer, ThreeCellSerializer

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_EXHAUSTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    """Flags accepted before and after the subcommand; the subcommand copy keeps earlier values."""
    flags = argparse.ArgumentParser(add_help=False)
    defaults = {'default': argparse.SUPPRESS} if suppress else {}
    flags.add_argument('--json', action='store_true', help='machine-readable JSON report', **defaults)
    flags.add_argument('--pump-bound', type=int, help='largest pumped instance examined', **defaults)
    flags.add_argument('--seed', type=int, help='seed for sampled checks', **defaults)
    return flags


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=True)

    certified = argparse.ArgumentParser(add_help=False)
    certified.add_argument('--cert', default=None, help='interpretation certificate file')
    certified.add_argument('--accept-sampled', action='store_true',
                           help='accept termination evidence that is only sampled')

    parser = _Parser(prog='squier', parents=[_global_flags(suppress=False)])
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    p = sub.add_parser('check', parents=[common], help='parse and validate a presentation')
    p.add_argument('file')

    p = sub.add_parser('nf', parents=[common], help='normal form of a word')
    p.add_argument('file')
    p.add_argument('word')
    p.add_argument('--strategy', choices=[s.value for s in Strategy], default=Strategy.LEFTMOST.value)
    p.add_argument('--fuel', type=int, default=None)

    p = sub.add_parser('eq', parents=[common, certified], help='decide equality of two words')
    p.add_argument('file')
    p.add_argument('w1')
    p.add_argument('w2')

    p = sub.add_parser('cp', parents=[common, certified], help='critical branchings and confluence')
    p.add_argument('file')
    p.add_argument('--resolve', action='store_true', help='print the resolving paths')

    p = sub.add_parser('complete', parents=[common], help='Knuth-Bendix completion')
    p.add_argument('file')
    p.add_argument('--max-rules', type=int, default=None)

    p = sub.add_parser('reduce', parents=[common, certified], help='Métivier-Squier reduction')
    p.add_argument('file')

    p = sub.add_parser('cohere', parents=[common, certified], help='Squier completion')
    p.add_argument('file')

    p = sub.add_parser('fill', parents=[common, certified], help='fill a 2-sphere with 3-cells')
    p.add_argument('file')
    p.add_argument('zigzag1')
    p.add_argument('zigzag2')

    p = sub.add_parser('std', parents=[common], help='standard coherent presentation of a finite monoid')
    p.add_argument('table')

    p = sub.add_parser('transfer', parents=[common], help='transfer a homotopy basis')
    p.add_argument('sigma')
    p.add_argument('xi')
    p.add_argument('mapfile')

    p = sub.add_parser('homology', parents=[common, certified], help='partial free resolution checks')
    p.add_argument('file')
    p.add_argument('--export', default=None, metavar='DIR')
    p.add_argument('--bound', type=int, default=None, help='monoid enumeration bound')
    p.add_argument('--samples', type=int, default=None)
    p.add_argument('--fuel', type=int, default=None)

    p = sub.add_parser('cert', parents=[common], help='check an interpretation certificate')
    p.add_argument('file')
    p.add_argument('certfile')
    p.add_argument('--sample-bound', type=int, default=None)
    return parser


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding='utf-8')
    except OSError as exc:
        raise UsageError(f'cannot read {path}: {exc.strerror or exc}') from None


def _load(path: str) -> Polygraph:
    return parse_polygraph(_read(path))


def _certificate(args):
    cert = getattr(args, 'cert', None)
    return parse_certificate(_read(cert)) if cert else None


def _certification(args) -> dict:
    return {'certificate': _certificate(args), 'accept_sampled': getattr(args, 'accept_sampled', False)}


def _rules(rules) -> list:
    return RuleSerializer(rules, many=True).data


def _cells(cells) -> list:
    return ThreeCellSerializer(cells, many=True).data


# ── Subcommands ──────────────────────────────────────────────────────────────

def cmd_check(args, r: Report) -> int:
    p = _load(args.file)
    verdict = certify_termination(p, pump_bound=args.pump_bound)
    r.add('kind', p.kind)
    r.add('generators', list(p.generator_names))
    r.add('rules', _rules(p.rules))
    r.add('pumped', [family.stem for family in p.pumped])
    r.add('three_cells', _cells(p.three_cells))
    r.add('termination', 'certified' if verdict.certified else f'not certified ({verdict.witness})')
    r.say(f'{len(p.generators)} generators, {len(p.rules)} rules, '
          f'{len(p.pumped)} pumped families, {len(p.three_cells)} 3-cells')
    r.say(f'termination ({verdict.method}): '
          + ('certified' if verdict.certified else f'not certified: {verdict.witness}'))
    return EXIT_OK


def cmd_nf(args, r: Report) -> int:
    p = _load(args.file)
    word = parse_word(p, args.word)
    nf, path = normalize(p, word, Strategy(args.strategy), args.fuel, args.pump_bound)
    r.add('word', str(word)).add('normal_form', str(nf)).add('path', str(path)).add('steps', len(path))
    r.say(f'normal form: {nf}')
    r.say(f'path ({len(path)} steps): {path}')
    return EXIT_OK


def cmd_eq(args, r: Report) -> int:
    p = _load(args.file)
    u, v = parse_word(p, args.w1), parse_word(p, args.w2)
    equal = word_eq(p, u, v, pump_bound=args.pump_bound, **_certification(args))
    nf_u, _ = normalize(p, u, pump_bound=args.pump_bound)
    nf_v, _ = normalize(p, v, pump_bound=args.pump_bound)
    r.add('equal', equal).add('normal_forms', [str(nf_u), str(nf_v)])
    if equal:
        r.say(f'EQUAL (normal form: {nf_u})')
        return EXIT_OK
    r.status = FAIL
    r.say(f'NOT EQUAL (normal forms: {nf_u} / {nf_v})')
    return EXIT_NEGATIVE


def cmd_cp(args, r: Report) -> int:
    p = _load(args.file)
    report = decide_confluence(p, pump_bound=args.pump_bound, **_certification(args))
    r.add('termination', report.termination.method)
    r.add('truncated', report.truncated)
    r.add('branchings', OutcomeSerializer(report.outcomes, many=True).data)
    r.say(f'{len(report.outcomes)} critical branchings'
          + (' (pumped instances up to the pump bound)' if report.truncated else ''))
    for outcome in report.outcomes:
        r.say(f'  ({outcome.branching.step1}, {outcome.branching.step2}) on "{outcome.branching.source}": {outcome}')
        if args.resolve and isinstance(outcome, Confluent):
            r.say(f'    f: {outcome.resolution.left}')
            r.say(f'    g: {outcome.resolution.right}')
    if any(isinstance(o, NotConfluent) for o in report.outcomes):
        r.status = FAIL
        return EXIT_NEGATIVE
    if any(isinstance(o, Unknown) for o in report.outcomes):
        r.status = PARTIAL
        return EXIT_EXHAUSTED
    return EXIT_OK


def cmd_complete(args, r: Report) -> int:
    p = _load(args.file)
    result = knuth_bendix(p, max_rules=args.max_rules)
    r.add('status', result.status.value)
    r.add('added', _rules(result.added))
    r.add('trace', [f'{entry.branching}: {entry.outcome}' for entry in result.trace])
    r.add('presentation', serialize_polygraph(result.polygraph))
    noun = 'rule' if len(result.added) == 1 else 'rules'
    summary = f'added {len(result.added)} {noun}'
    if result.added:
        summary += ': ' + '; '.join(str(rule) for rule in result.added)
    r.say(summary)
    if not result.completed:
        r.status = PARTIAL
        r.say(f'FuelExhausted: {result.reason}')
        return EXIT_EXHAUSTED
    r.say(serialize_polygraph(result.polygraph))
    return EXIT_OK


def cmd_reduce(args, r: Report) -> int:
    p = _load(args.file)
    result = metivier_squier_reduce(p, **_certification(args))
    r.add('trace', [str(move) for move in result.trace])
    r.add('presentation', serialize_polygraph(result.polygraph))
    r.say(f'{len(result.trace)} Tietze moves')
    r.lines.extend(f'  {move}' for move in result.trace)
    r.say(serialize_polygraph(result.polygraph))
    return EXIT_OK


def _completion(args, p: Polygraph):
    return squier_completion(p, pump_bound=args.pump_bound, **_certification(args))


def cmd_cohere(args, r: Report) -> int:
    cp = _completion(args, _load(args.file))
    r.add('three_cells', _cells(cp.cells))
    r.say(f'{len(cp.cells)} 3-cells')
    r.say(serialize_polygraph(cp.polygraph))
    return EXIT_OK


def cmd_fill(args, r: Report) -> int:
    p = _load(args.file)
    f, g = parse_zigzag(p, args.zigzag1), parse_zigzag(p, args.zigzag2)
    cp = _completion(args, p)
    expr = fill_sphere(cp, f, g)
    source, target = boundary3(expr)
    used = sorted(cells_of(expr))
    r.add('expression', format_expr(expr)).add('cells', used)
    r.add('boundary_checked', source == f.reduced() and target == g.reduced())
    r.say(format_expr(expr))
    r.say(f'uses: {", ".join(used) or "no generating 3-cell"}')
    return EXIT_OK


def cmd_std(args, r: Report) -> int:
    p = standard_coherent_presentation(parse_table(_read(args.table)))
    r.add('generators', len(p.generators)).add('rules', len(p.rules)).add('three_cells', len(p.three_cells))
    r.add('presentation', serialize_polygraph(p))
    r.say(f'{len(p.generators)} generators, {len(p.rules)} 2-cells, {len(p.three_cells)} 3-cells')
    r.say(serialize_polygraph(p))
    return EXIT_OK


def cmd_transfer(args, r: Report) -> int:
    sigma, xi = _load(args.sigma), _load(args.xi)
    data = parse_transfer_map(_read(args.mapfile), sigma, xi)
    gamma = list(sigma.three_cells) or _completion(args, sigma).cells
    cells = transfer_homotopy_basis(sigma.without_three_cells(), xi, data, gamma)
    problems = validate(xi.with_three_cells(cells))
    r.add('three_cells', _cells(cells)).add('problems', problems)
    r.say(f'{len(cells)} 3-cells over {args.xi}')
    r.lines.extend(f'  {cell.name}: {cell.source} === {cell.target}' for cell in cells)
    if problems:
        r.status = FAIL
        r.lines.extend(problems)
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_homology(args, r: Report) -> int:
    p = _load(args.file)
    cp = squier_completion(p, pump_bound=args.pump_bound, fuel=args.fuel, **_certification(args))
    res = Resolution(p.without_three_cells(), cp, fuel=args.fuel, pump_bound=args.pump_bound)
    sample, exhaustive = sample_elements(res.ring, args.bound, args.samples, args.seed)
    verification = verify_identities(res, sample, exhaustive)
    r.add('elements', len(sample)).add('exhaustive', exhaustive).add('reduced', verification.reduced)
    r.add('d3', {cell.name: format_module(res.d3(_basis(res, cell.name))) for cell in cp.cells})
    r.add('identities', verification.identities)
    r.say(f'{len(sample)} elements ({"all" if exhaustive else "sampled"})')
    r.lines.extend(f'  d3[{name}] = {image}' for name, image in r.sections['d3'].items())
    r.lines.extend(f'  {name}: {verdict}' for name, verdict in verification.identities.items())

    if args.export:
        try:
            elements = enumerate_monoid(res.ring, args.bound)
        except EnumerationBoundExceeded as exc:
            elements = None
            r.say(f'integer matrices skipped: {exc}')
        written = export_matrices(res, args.export, elements)
        r.add('exported', [path.name for path in written])
        if elements is not None:
            products = chain_products(boundary_matrices(res, elements))
            r.add('matrix_products', {k: 'ok' if v else 'FAIL' for k, v in products.items()})
            if not all(products.values()):
                r.status = FAIL
                return EXIT_NEGATIVE
    if not verification.passed:
        r.status = FAIL
        return EXIT_NEGATIVE
    return EXIT_OK


def _basis(res: Resolution, cell: str) -> Combination:
    return Combination.basis((res.ring.one, cell))


def cmd_cert(args, r: Report) -> int:
    p = _load(args.file)
    cert = parse_certificate(_read(args.certfile))
    report = check_interpretation_certificate(p, cert, args.sample_bound, args.pump_bound)
    r.add('verdict', report.verdict).add('sample_bound', report.sample_bound)
    r.add('failures', [str(f) for f in report.failures]).add('missing', report.missing)
    r.say(f'{report.verdict} (n <= {report.sample_bound})')
    r.lines.extend(f'  {failure}' for failure in report.failures)
    if report.missing:
        r.say(f'  no interpretation for {", ".join(report.missing)}')
    if not report.passed:
        r.status = FAIL
        return EXIT_NEGATIVE
    return EXIT_OK


COMMANDS = {
    'check': cmd_check, 'nf': cmd_nf, 'eq': cmd_eq, 'cp': cmd_cp, 'complete': cmd_complete,
    'reduce': cmd_reduce, 'cohere': cmd_cohere, 'fill': cmd_fill, 'std': cmd_std,
    'transfer': cmd_transfer, 'homology': cmd_homology, 'cert': cmd_cert,
}


def run(argv: list[str]) -> tuple[int, Report]:
    argv = list(argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        report = Report('usage', FAIL, {'error': str(exc)}, [f'error: {exc}'])
        log_run(argv, report.status, EXIT_USAGE)
        return EXIT_USAGE, report

    report = Report(' '.join([args.command, *argv[argv.index(args.command) + 1:]]))
    report.machine = args.json
    try:
        code = COMMANDS[args.command](args, report)
    except (UsageError, PolygraphError, TableError, TransferError) as exc:
        code = EXIT_USAGE
        report.status = FAIL
        report.add('error', str(exc)).say(f'error: {exc}')
    except (FuelExhausted, EnumerationBoundExceeded) as exc:
        code = EXIT_EXHAUSTED
        report.status = PARTIAL
        report.add('error', str(exc)).say(f'exhausted: {exc}')
    except NotCertified as exc:
        code = EXIT_NEGATIVE
        report.status = FAIL
        witness = str(exc.witness) if exc.witness is not None else ''
        report.add('error', str(exc)).add('witness', witness)
        report.say(f'not certified: {exc}' + (f' ({witness})' if witness else ''))
    logger.info(f'squier {" ".join(argv)} -> {code}')
    log_run(argv, report.status, code)
    return code, report
