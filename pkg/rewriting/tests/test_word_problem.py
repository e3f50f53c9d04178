from django.test import SimpleTestCase

from presentations.exceptions import PolygraphError
from presentations.library import fixture_text, load_fixture
from rewriting.exceptions import NotCertified
from rewriting.interpretations import parse_certificate
from rewriting.paths import RewriteStep, ZigZag
from rewriting.word_problem import word_eq


class WordEqTests(SimpleTestCase):

    def test_b3plus_braid_relation(self):
        p = load_fixture('b3plus')
        self.assertTrue(word_eq(p, p.word('s t s'), p.word('t s t')))
        self.assertFalse(word_eq(p, p.word('s t'), p.word('t s')))

    def test_sq_with_certificate(self):
        p = load_fixture('sq')
        cert = parse_certificate(fixture_text('sq.cert'))
        self.assertFalse(word_eq(p, p.word('y x'), p.word('1'), certificate=cert, accept_sampled=True))
        self.assertTrue(word_eq(p, p.word('x y'), p.word('1'), certificate=cert, accept_sampled=True))

    def test_sq_without_certificate_is_refused(self):
        p = load_fixture('sq')
        with self.assertRaises(NotCertified) as ctx:
            word_eq(p, p.word('x y'), p.word('1'))
        self.assertEqual(ctx.exception.witness, 'rule beta is not decreasing')

    def test_not_confluent_is_refused(self):
        p = load_fixture('xyx')
        with self.assertRaises(NotCertified) as ctx:
            word_eq(p, p.word('x y x y x'), p.word('y y y x'))
        self.assertEqual(str(ctx.exception.witness.nf1), 'y y y x')

    def test_assume_convergent_skips_checks(self):
        p = load_fixture('xyx')
        self.assertTrue(word_eq(p, p.word('x y x'), p.word('y y'), assume_convergent=True))


class ZigZagTests(SimpleTestCase):

    def setUp(self):
        self.p = load_fixture('b3plus')
        beta = self.p.rule('beta')
        self.step = RewriteStep(self.p.word('1'), beta, self.p.word('s'))

    def test_inverse_and_reduce(self):
        z = ZigZag(self.step.source, (self.step,))
        loop = z.then(z.inverse())
        self.assertEqual(len(loop), 2)
        self.assertTrue(loop.reduced().is_identity)
        self.assertTrue(loop.equivalent(ZigZag.identity(self.step.source)))

    def test_whisker(self):
        z = ZigZag(self.step.source, (self.step,)).whisker(self.p.word('a'), self.p.word('t'))
        self.assertEqual(str(z), 'a * beta * s t')
        self.assertEqual(str(z.target), 'a a s t')

    def test_steps_must_chain(self):
        with self.assertRaises(PolygraphError):
            ZigZag(self.p.word('a s'), (self.step,))

    def test_words(self):
        z = ZigZag(self.step.source, (self.step,))
        self.assertEqual([str(w) for w in z.words()], ['s t s', 'a s'])
