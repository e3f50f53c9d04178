from django.test import SimpleTestCase

from presentations.exceptions import ParseError
from presentations.library import fixture_text, load_fixture
from rewriting.interpretations import (
    StarMap, check_interpretation_certificate, format_certificate, parse_certificate,
)
from rewriting.word_problem import certify_termination

SQ = load_fixture('sq')


class CertificateTests(SimpleTestCase):

    def test_sq_certificate_passes_sampled(self):
        report = check_interpretation_certificate(SQ, parse_certificate(fixture_text('sq.cert')),
                                                  sample_bound=16, pump_bound=4)
        self.assertTrue(report.passed)
        self.assertEqual(report.verdict, 'PASS(sampled)')

    def test_literal_certificate_fails_on_gamma(self):
        report = check_interpretation_certificate(SQ, parse_certificate(fixture_text('sq_literal.cert')))
        self.assertEqual(report.verdict, 'FAIL')
        failure = report.failures[0]
        self.assertEqual((failure.rule, failure.n), ('gamma', 0))

    def test_missing_generator(self):
        cert = parse_certificate('x: n+1 | 0\na: n | 3^n')
        report = check_interpretation_certificate(SQ, cert)
        self.assertEqual(report.missing, ['b', 't', 'y'])
        self.assertFalse(report.passed)

    def test_evaluate(self):
        cert = parse_certificate(fixture_text('sq.cert'))
        # (x a)_*(n) = n+1 and ∂(x a)(n) = 0 + 3^(n+1)
        self.assertEqual(cert.evaluate(SQ.word('x a'), 2), (3, 27))

    def test_format_roundtrip(self):
        cert = parse_certificate('a: 2n+1 | 1 + 2*3^n\nb: 4 | 0')
        self.assertEqual(format_certificate(cert), 'a: 2n+1 | 1 + 2*3^n\nb: 4 | 0')
        self.assertEqual(cert.maps['b'].star, StarMap(0, 4))

    def test_bad_base(self):
        with self.assertRaisesMessage(ParseError, 'base 5'):
            parse_certificate('a: n | 5^n')

    def test_bad_line(self):
        with self.assertRaises(ParseError):
            parse_certificate('a n 3^n')


class CertifyTerminationTests(SimpleTestCase):

    def test_sampled_certificate_needs_acknowledgement(self):
        cert = parse_certificate(fixture_text('sq.cert'))
        verdict = certify_termination(SQ, certificate=cert)
        self.assertFalse(verdict.certified)
        self.assertEqual(verdict.witness, 'sampled certificate not acknowledged')
        self.assertTrue(certify_termination(SQ, certificate=cert, accept_sampled=True).certified)

    def test_deglex_failure_names_rule(self):
        verdict = certify_termination(SQ)
        self.assertFalse(verdict.certified)
        self.assertEqual(verdict.witness, 'rule beta is not decreasing')
