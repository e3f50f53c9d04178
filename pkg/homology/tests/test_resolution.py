from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from coherence.expressions import boundary3
from coherence.filling import fill_sphere
from coherence.squier import squier_completion
from homology.brackets import bracket_2cell, bracket_3cell, fox_bracket
from homology.enumeration import enumerate_monoid, random_normal_forms
from homology.resolution import Resolution
from homology.ring import Combination, MonoidRing
from homology.verification import verify_identities
from presentations.exceptions import PolygraphError
from presentations.library import load_fixture
from presentations.parser import parse_polygraph
from rewriting.normalize import normalize
from rewriting.paths import ZigZag
from rewriting.redexes import find_redexes

AA = load_fixture('aa')
CONVERGENT = {name: load_fixture(name) for name in ('aa', 'b3plus', 'xyx_completed')}
COMPLETIONS = {name: squier_completion(p) for name, p in CONVERGENT.items()}


def random_zigzag(p, word, moves):
    """Walk from ``word``: even moves rewrite forward, odd moves undo the last step taken."""
    path = ZigZag.identity(word)
    for move in moves:
        if move % 2 and path.steps and path.steps[-1].forward:
            last = path.steps[-1]
            path = path.then(ZigZag(last.target, (last.inverse(),)))
            continue
        redexes = find_redexes(p, path.target)
        if not redexes:
            break
        step = redexes[(move // 2) % len(redexes)].step(path.target)
        path = path.then(ZigZag(step.source, (step,)))
    return path


class BoundaryMapTests(SimpleTestCase):

    def setUp(self):
        self.res = Resolution(AA, COMPLETIONS['aa'])
        self.one, self.a = self.res.ring.one, AA.word('a')

    def test_d1(self):
        self.assertEqual(self.res.d1(Combination.basis((self.one, 'a'))),
                         Combination({self.a: 1, self.one: -1}))
        self.assertEqual(self.res.d1(Combination.zero()), 0)

    def test_d2(self):
        self.assertEqual(self.res.d2(Combination.basis((self.one, 'mu'))),
                         Combination.basis((self.a, 'a')))

    def test_d3(self):
        self.assertEqual(self.res.d3(Combination.basis((self.one, 'A'))),
                         Combination({(self.a, 'mu'): 1, (self.one, 'mu'): -1}))

    def test_contracting_homotopy(self):
        self.assertEqual(self.res.i0(1), self.res.ring.unit())
        self.assertEqual(self.res.i1(self.res.ring.element(self.a)), Combination.basis((self.one, 'a')))
        self.assertEqual(self.res.i2(Combination.basis((self.a, 'a'))), Combination.basis((self.one, 'mu')))

    def test_i3_needs_completion(self):
        with self.assertRaises(PolygraphError):
            Resolution(AA).i3(Combination.basis((self.one, 'mu')))

    def test_unknown_cell(self):
        with self.assertRaises(PolygraphError):
            self.res.d3(Combination.basis((self.one, 'Z')))

    def test_family_recurrence(self):
        # a t^(n+1) => c t^n, n <= 5, against the rule-free ring and the core a t => c
        act = load_fixture('act')
        free = MonoidRing(parse_polygraph('monoid\ngenerators: a c t\nrules:'))
        core = MonoidRing(parse_polygraph('monoid\ngenerators: a c t\nrules:\n  alpha0: a t => c'))
        for n in range(5):
            with self.subTest(n=n):
                step = Combination({(act.word('1'), f'alpha{n + 1}'): 1, (act.word('1'), f'alpha{n}'): -1})
                over_free = Resolution(act, ring=free).d2(step)
                expected = Combination({
                    (act.word(' '.join(['a', *['t'] * (n + 1)])), 't'): 1,
                    (act.word(' '.join(['c', *['t'] * n])), 't'): -1,
                })
                self.assertEqual(over_free, expected)
                self.assertEqual(Resolution(act, ring=core).d2(step), 0)


class IdentityTests(SimpleTestCase):

    def test_aa_exhaustive(self):
        res = Resolution(AA, COMPLETIONS['aa'])
        report = verify_identities(res, enumerate_monoid(res.ring), exhaustive=True)
        self.assertTrue(report.passed, report.identities)
        self.assertEqual(set(report.identities.values()), {'ok'})
        self.assertEqual(len(report.checks), 7)

    def test_sampled(self):
        for name in ('b3plus', 'xyx_completed'):
            with self.subTest(fixture=name):
                res = Resolution(CONVERGENT[name], COMPLETIONS[name])
                report = verify_identities(res, random_normal_forms(res.ring, 50, seed=0))
                self.assertTrue(report.passed, report.identities)
                self.assertTrue(report.reduced)

    def test_length_two_without_completion(self):
        res = Resolution(CONVERGENT['b3plus'])
        report = verify_identities(res, random_normal_forms(res.ring, 10, seed=0))
        self.assertNotIn('d3i3', report.checks)
        self.assertTrue(report.passed)


class FlippedD1(Resolution):
    def d1(self, m):
        return -super().d1(m)


class FlippedD2(Resolution):
    def d2(self, m):
        return -super().d2(m)


class FlippedD3(Resolution):
    def d3(self, m):
        return -super().d3(m)


class MutationTests(SimpleTestCase):

    def test_sign_flips_are_caught(self):
        cases = {FlippedD1: 'd1i1', FlippedD2: 'd2i2', FlippedD3: 'd3i3'}
        for cls, identity in cases.items():
            with self.subTest(map=cls.__name__):
                res = cls(AA, COMPLETIONS['aa'])
                report = verify_identities(res, enumerate_monoid(res.ring), exhaustive=True)
                self.assertFalse(report.passed)
                self.assertTrue(report.checks[identity].witness)
                self.assertTrue(report.checks[identity].verdict.startswith('FAIL at '))


class LinearizationPropertyTests(SimpleTestCase):

    def _word(self, data, p, max_size):
        return p.word(data.draw(st.lists(st.sampled_from(p.generator_names), max_size=max_size)))

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_d1_of_fox_bracket(self, data):
        name = data.draw(st.sampled_from(sorted(CONVERGENT)))
        res = Resolution(CONVERGENT[name])
        w = self._word(data, res.p, 10)
        self.assertEqual(res.d1(fox_bracket(res.ring, w)), res.ring.element(w) - res.ring.unit())

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_d2_of_2cell_bracket(self, data):
        name = data.draw(st.sampled_from(sorted(CONVERGENT)))
        res = Resolution(CONVERGENT[name])
        f = random_zigzag(res.p, self._word(data, res.p, 8),
                          data.draw(st.lists(st.integers(min_value=0, max_value=9), max_size=6)))
        self.assertEqual(res.d2(bracket_2cell(res.ring, f)),
                         fox_bracket(res.ring, f.source) - fox_bracket(res.ring, f.target))

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_d3_of_3cell_bracket(self, data):
        name = data.draw(st.sampled_from(sorted(CONVERGENT)))
        cp = COMPLETIONS[name]
        res = Resolution(cp.base, cp)
        word = self._word(data, res.p, 6)
        moves = st.lists(st.integers(min_value=0, max_value=9), max_size=4)
        f = random_zigzag(res.p, word, data.draw(moves))
        g = random_zigzag(res.p, word, data.draw(moves))
        f = f.then(normalize(res.p, f.target)[1])
        g = g.then(normalize(res.p, g.target)[1])
        e = fill_sphere(cp, f, g)
        source, target = boundary3(e)
        self.assertEqual(res.d3(bracket_3cell(res.ring, e)),
                         bracket_2cell(res.ring, source) - bracket_2cell(res.ring, target))
