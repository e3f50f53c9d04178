from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from branchings.confluence import Confluent, NotConfluent, decide_confluence, resolve_branching
from branchings.critical import enumerate_critical_branchings
from branchings.local import BranchingKind, LocalBranching, classify_local_branching, close_local_branching
from coherence.families import f_path
from presentations.exceptions import PolygraphError
from presentations.library import fixture_text, load_fixture
from rewriting.exceptions import NotCertified
from rewriting.interpretations import check_interpretation_certificate, parse_certificate
from rewriting.paths import ZigZag
from rewriting.redexes import find_redexes, step_at


class LocalBranchingTests(SimpleTestCase):

    def setUp(self):
        self.p = load_fixture('b3plus')
        self.word = self.p.word('s t s t')

    def test_classification(self):
        beta = self.p.rule('beta')
        first, second = step_at(self.word, beta, 0), step_at(self.word, beta, 2)
        self.assertIs(classify_local_branching(first, first), BranchingKind.ASPHERICAL)
        self.assertIs(classify_local_branching(first, second), BranchingKind.PEIFFER)
        alpha = step_at(self.p.word('s t a'), self.p.rule('alpha'), 1)
        other = step_at(self.p.word('s t a'), beta, 0)
        self.assertIs(classify_local_branching(other, alpha), BranchingKind.OVERLAPPING)

    def test_peiffer_square_closes(self):
        beta = self.p.rule('beta')
        f, g = step_at(self.word, beta, 0), step_at(self.word, beta, 2)
        f_prime, g_prime = close_local_branching(f, g)
        self.assertEqual(str(f_prime.target), 'a a')
        self.assertEqual(f_prime.target, g_prime.target)
        self.assertEqual(str(f_prime), 'a * beta * 1')

    def test_overlapping_branching_is_not_closed(self):
        beta, alpha = self.p.rule('beta'), self.p.rule('alpha')
        word = self.p.word('s t a')
        with self.assertRaises(PolygraphError):
            close_local_branching(step_at(word, beta, 0), step_at(word, alpha, 1))

    def test_key_ignores_step_order(self):
        beta = self.p.rule('beta')
        f, g = step_at(self.word, beta, 0), step_at(self.word, beta, 2)
        self.assertEqual(LocalBranching(f, g).key, LocalBranching(g, f).key)

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_independent_branchings_close(self, data):
        p = load_fixture(data.draw(st.sampled_from(['b3plus', 'xyx_completed', 'aa'])))
        word = p.word(data.draw(st.lists(st.sampled_from(p.generator_names), min_size=2, max_size=8)))
        redexes = find_redexes(p, word)
        if not redexes:
            return
        f = data.draw(st.sampled_from(redexes)).step(word)
        g = data.draw(st.sampled_from(redexes)).step(word)
        if classify_local_branching(f, g) is BranchingKind.OVERLAPPING:
            return
        f_prime, g_prime = close_local_branching(f, g)
        self.assertEqual((f_prime.source, g_prime.source), (f.target, g.target))
        self.assertEqual(f_prime.target, g_prime.target)
        # same rules on both sides, up to exchange
        self.assertEqual(sorted([f.rule.name, *(s.rule.name for s in f_prime.steps)]),
                         sorted([g.rule.name, *(s.rule.name for s in g_prime.steps)]))


class CriticalBranchingTests(SimpleTestCase):

    def test_b3plus_has_four_confluent_branchings(self):
        report = decide_confluence(load_fixture('b3plus'))
        self.assertTrue(report.confluent)
        self.assertEqual([str(o.branching.source) for o in report.outcomes],
                         ['s t a', 's a s t', 's a s a s', 's a s a a'])
        self.assertEqual([str(o.resolution.join) for o in report.outcomes],
                         ['a a', 'a a t', 'a a a s', 'a a a a'])

    def test_xyx_is_not_confluent(self):
        report = decide_confluence(load_fixture('xyx'))
        self.assertEqual(len(report.outcomes), 1)
        outcome = report.outcomes[0]
        self.assertIsInstance(outcome, NotConfluent)
        self.assertEqual((str(outcome.nf1), str(outcome.nf2)), ('y y y x', 'x y y y'))

    def test_aa_has_one_branching(self):
        branchings = enumerate_critical_branchings(load_fixture('aa'))
        self.assertEqual(len(branchings), 1)
        self.assertEqual(str(branchings[0].source), 'a a a')
        self.assertEqual(branchings[0].union, (0, 3))

    def test_inclusion_branchings(self):
        branchings = enumerate_critical_branchings(load_fixture('aa_aaa'))
        sources = {str(b.source) for b in branchings}
        self.assertIn('a a a', sources)
        self.assertTrue(all(b.kind is BranchingKind.OVERLAPPING for b in branchings))

    def test_resolution_paths(self):
        p = load_fixture('b3plus')
        outcome = resolve_branching(p, enumerate_critical_branchings(p)[0])
        self.assertIsInstance(outcome, Confluent)
        self.assertEqual(str(outcome.resolution.left), '1 * beta * a')
        self.assertEqual(str(outcome.resolution.right), 's * alpha * 1 . 1 * gamma * 1')

    def test_termination_must_be_certified(self):
        with self.assertRaises(NotCertified):
            decide_confluence(load_fixture('sq'))


class SqBranchingTests(SimpleTestCase):
    """The branchings (beta tⁿ b, x alpha[n]) of the infinite presentation."""

    def setUp(self):
        self.sq = load_fixture('sq')
        self.cert = parse_certificate(fixture_text('sq.cert'))

    def test_every_branching_joins_at_x(self):
        report = decide_confluence(self.sq, certificate=self.cert, accept_sampled=True, pump_bound=4)
        self.assertTrue(report.truncated)
        self.assertEqual(len(report.outcomes), 5)
        for n, outcome in enumerate(report.outcomes):
            with self.subTest(n=n):
                self.assertIsInstance(outcome, Confluent)
                self.assertEqual(outcome.branching.step1.rule.name, 'beta')
                self.assertEqual(outcome.branching.step2.rule.name, f'alpha[{n}]')
                self.assertEqual(str(outcome.resolution.join), 'x')

    def test_beta_side_follows_f_path(self):
        report = decide_confluence(self.sq, certificate=self.cert, accept_sampled=True, pump_bound=3)
        for n, outcome in enumerate(report.outcomes):
            with self.subTest(n=n):
                # f_n, then alpha[n+1] x
                alpha = self.sq.rule(f'alpha[{n + 1}]')
                last = step_at(alpha.lhs + self.sq.word('x'), alpha, 0)
                expected = f_path(self.sq, n).then(ZigZag(last.source, (last,)))
                self.assertEqual(outcome.resolution.left, expected)


class TwoCopyBranchingTests(SimpleTestCase):
    """s2 carries one copy of the beta/gamma/delta/epsilon rules per x_i around the shared alpha[n]."""

    def setUp(self):
        self.s2 = load_fixture('s2')
        self.cert = parse_certificate(fixture_text('s2.cert'))

    def test_certificate_passes_sampled(self):
        report = check_interpretation_certificate(self.s2, self.cert, sample_bound=16, pump_bound=4)
        self.assertEqual(report.verdict, 'PASS(sampled)')

    def test_every_branching_joins_at_its_own_x(self):
        report = decide_confluence(self.s2, certificate=self.cert, accept_sampled=True, pump_bound=4)
        self.assertTrue(report.confluent)
        self.assertEqual(len(report.outcomes), 10)
        pairs = set()
        for outcome in report.outcomes:
            first, second = outcome.branching.step1.rule.name, outcome.branching.step2.rule.name
            with self.subTest(pair=(first, second)):
                self.assertIsInstance(outcome, Confluent)
                self.assertEqual(str(outcome.resolution.join), 'x' + first[-1])
            pairs.add((first, second))
        self.assertEqual(pairs, {(f'beta{i}', f'alpha[{n}]') for i in (1, 2) for n in range(5)})

    def test_pump_bound_sets_the_count(self):
        for bound in (0, 2, 6):
            with self.subTest(pump_bound=bound):
                report = decide_confluence(self.s2, certificate=self.cert, accept_sampled=True,
                                           pump_bound=bound)
                self.assertEqual(len(report.outcomes), 2 * (bound + 1))
