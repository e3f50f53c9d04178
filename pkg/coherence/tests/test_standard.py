from django.test import SimpleTestCase

from coherence.standard import TableError, parse_table, standard_coherent_presentation
from presentations.library import fixture_text
from presentations.validators import validate


class TableTests(SimpleTestCase):

    def test_two_element_table(self):
        table = parse_table(fixture_text('two_element.table'))
        self.assertEqual(table.elements, ('1', 'a'))
        self.assertEqual(table.mult('a', 'a'), 'a')
        self.assertEqual(table.find_unit(), '1')

    def test_nonassociative_table(self):
        with self.assertRaisesMessage(TableError, 'not associative'):
            parse_table(fixture_text('nonassociative.table'))

    def test_malformed_tables(self):
        cases = {
            'no header': '1: 1',
            'short row': 'elements: 1 a\n1: 1 a\na: a',
            'missing row': 'elements: 1 a\n1: 1 a',
            'unknown entry': 'elements: 1 a\n1: 1 a\na: a b',
            'no unit': 'elements: a b\na: a a\nb: b b',
        }
        for label, text in cases.items():
            with self.subTest(label), self.assertRaises(TableError):
                parse_table(text)


class StandardPresentationTests(SimpleTestCase):

    def test_counts(self):
        for name, counts in (('two_element', (2, 5, 12)), ('trivial', (1, 2, 3))):
            with self.subTest(table=name):
                p = standard_coherent_presentation(parse_table(fixture_text(f'{name}.table')))
                self.assertEqual((len(p.generators), len(p.rules), len(p.three_cells)), counts)
                self.assertEqual(validate(p), [])

    def test_cells(self):
        p = standard_coherent_presentation(parse_table(fixture_text('two_element.table')))
        rule = p.rule('gamma_a_1')
        self.assertEqual((str(rule.lhs), str(rule.rhs)), ('hat_a hat_1', 'hat_a'))
        self.assertEqual(str(p.rule('iota').rhs), '1')
        alpha = p.three_cell('alpha_a_a_a')
        self.assertEqual(str(alpha.source), '1 * gamma_a_a * hat_a . 1 * gamma_a_a * 1')
        self.assertEqual(str(alpha.target), 'hat_a * gamma_a_a * 1 . 1 * gamma_a_a * 1')
        self.assertTrue(p.three_cell('lambda_a').target.is_identity)
