import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from console.reports import FAIL, OK, PARTIAL, format_report
from console.runner import EXIT_EXHAUSTED, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, run
from presentations.library import fixture_path

IDENTITY_MAP = """
F: a => a
F: mu => 1 * mu * 1
G: a => a
G: mu => 1 * mu * 1
tau: a => id(a)
"""


def fixture(name):
    return str(fixture_path(name))


class RunnerTestCase(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.journal = Path(self.tmp.name) / 'runs.log'
        override = override_settings(RUN_JOURNAL=str(self.journal))
        override.enable()
        self.addCleanup(override.disable)


class CommandTests(RunnerTestCase):

    def test_check(self):
        code, report = run(['check', fixture('b3plus')])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report.lines[0], '3 generators, 4 rules, 0 pumped families, 0 3-cells')
        self.assertEqual(report.sections['termination'], 'certified')

    def test_nf(self):
        code, report = run(['nf', fixture('aa'), 'a a a', '--strategy', 'rightmost'])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report.sections['path'], 'a * mu * 1 . 1 * mu * 1')

    def test_cp_b3plus(self):
        code, report = run(['cp', fixture('b3plus')])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report.lines[0], '4 critical branchings')
        self.assertEqual([b['outcome'] for b in report.sections['branchings']], ['Confluent'] * 4)

    def test_cp_not_confluent(self):
        code, report = run(['cp', fixture('xyx')])
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertEqual(report.status, FAIL)
        self.assertEqual(report.sections['branchings'][0]['normal_forms'], ['y y y x', 'x y y y'])

    def test_eq(self):
        code, report = run(['eq', fixture('b3plus'), 's t s', 't s t'])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report.lines, ['EQUAL (normal form: a s)'])

    def test_sq_words_differ(self):
        code, report = run(['eq', fixture('sq'), 'y x', '1', '--cert', fixture('sq.cert'), '--accept-sampled'])
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertEqual(report.lines, ['NOT EQUAL (normal forms: y x / 1)'])

    def test_sq_needs_certificate(self):
        code, report = run(['eq', fixture('sq'), 'y x', '1'])
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertEqual(report.sections['witness'], 'rule beta is not decreasing')

    def test_complete(self):
        code, report = run(['complete', fixture('xyx')])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report.lines[0], 'added 1 rule: beta: y y y x => x y y y')

    def test_complete_on_convergent_input(self):
        code, report = run(['complete', fixture('b3plus')])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report.lines[0], 'added 0 rules')

    def test_complete_diverges(self):
        code, report = run(['complete', fixture('lp'), '--max-rules', '6'])
        self.assertEqual(code, EXIT_EXHAUSTED)
        self.assertEqual(report.status, PARTIAL)
        self.assertEqual(report.lines[-1], 'FuelExhausted: rule limit 6 reached')

    def test_reduce(self):
        code, report = run(['reduce', fixture('aa_aaa')])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report.lines[0], '1 Tietze moves')

    def test_cohere(self):
        code, report = run(['cohere', fixture('xyx_completed')])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report.lines[0], '2 3-cells')
        self.assertEqual([cell['name'] for cell in report.sections['three_cells']], ['A', 'B'])

    def test_cohere_two_copies(self):
        code, report = run(['cohere', fixture('s2'), '--cert', fixture('s2.cert'), '--accept-sampled',
                            '--pump-bound', '4'])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report.lines[0], '10 3-cells')

    def test_fill(self):
        code, report = run(['fill', fixture('aa'), '1 * mu * a . 1 * mu * 1', 'a * mu * 1 . 1 * mu * 1'])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report.sections['cells'], ['A'])
        self.assertTrue(report.sections['boundary_checked'])

    def test_fill_identity_sphere(self):
        code, report = run(['fill', fixture('aa'), 'id(1)', 'id(1)'])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report.sections['expression'], 'id(1)')
        self.assertEqual(report.sections['cells'], [])

    def test_std(self):
        code, report = run(['std', fixture('two_element.table')])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report.lines[0], '2 generators, 5 2-cells, 12 3-cells')
        code, _ = run(['std', fixture('nonassociative.table')])
        self.assertEqual(code, EXIT_USAGE)

    def test_transfer(self):
        mapfile = Path(self.tmp.name) / 'identity.map'
        mapfile.write_text(IDENTITY_MAP, encoding='utf-8')
        aa = fixture('aa')
        code, report = run(['transfer', aa, aa, str(mapfile)])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report.lines[0], f'2 3-cells over {aa}')
        self.assertEqual(report.sections['problems'], [])

    def test_cert(self):
        code, _ = run(['cert', fixture('sq'), fixture('sq.cert')])
        self.assertEqual(code, EXIT_OK)
        code, report = run(['cert', fixture('sq'), fixture('sq_literal.cert')])
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertTrue(report.sections['failures'])

    def test_homology(self):
        out = Path(self.tmp.name) / 'matrices'
        code, report = run(['homology', fixture('aa'), '--export', str(out)])
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report.sections['exhaustive'])
        self.assertEqual(report.sections['d3'], {'A': '(-1*1 + 1*a)[mu]'})
        self.assertEqual(report.sections['matrix_products'], {'d1d2': 'ok', 'd2d3': 'ok'})
        self.assertTrue((out / 'd3.txt').is_file())


class SurfaceTests(RunnerTestCase):

    def test_usage_errors(self):
        for argv in ([], ['nf'], ['frobnicate', 'x'], ['check', '/no/such/file.pg']):
            with self.subTest(argv=argv):
                code, report = run(argv)
                self.assertEqual(code, EXIT_USAGE)
                self.assertEqual(report.status, FAIL)

    def test_parse_error(self):
        code, report = run(['nf', fixture('b3plus'), 's q'])
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn('error', report.sections)

    def test_json_output(self):
        code, report = run(['homology', fixture('aa'), '--json'])
        payload = json.loads(format_report(report, report.machine))
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(payload['status'], OK)
        self.assertEqual(set(payload['sections']['identities'].values()), {'ok'})

    def test_global_flags_before_subcommand(self):
        _, report = run(['--json', 'cp', fixture('b3plus')])
        self.assertTrue(report.machine)
        _, report = run(['cp', fixture('b3plus')])
        self.assertFalse(report.machine)

    def test_output_is_deterministic(self):
        argv = ['cp', fixture('b3plus'), '--resolve', '--json']
        first = format_report(run(argv)[1], machine=True)
        self.assertEqual(first, format_report(run(argv)[1], machine=True))

    def test_human_output(self):
        _, report = run(['eq', fixture('b3plus'), 's t s', 't s t'])
        text = format_report(report)
        self.assertEqual(text.splitlines()[-1], 'EQUAL (normal form: a s)')
        self.assertTrue(text.splitlines()[0].endswith(': OK'))

    def test_journal(self):
        run(['eq', fixture('b3plus'), 's t', 't s'])
        entries = [json.loads(line) for line in self.journal.read_text(encoding='utf-8').splitlines()]
        self.assertEqual(len(entries), 1)
        self.assertEqual(entries[0]['exit_code'], EXIT_NEGATIVE)
        self.assertEqual(entries[0]['status'], FAIL)
        self.assertEqual(entries[0]['argv'][0], 'eq')


class ManagementCommandTests(RunnerTestCase):

    def test_call_command(self):
        out = StringIO()
        call_command('squier', 'eq', fixture('b3plus'), 's t s', 't s t', stdout=out)
        self.assertIn('EQUAL (normal form: a s)', out.getvalue())

    def test_negative_exit_code(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('squier', 'cp', fixture('xyx'), stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, EXIT_NEGATIVE)
