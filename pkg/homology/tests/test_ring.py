from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from homology.brackets import fox_bracket
from homology.enumeration import EnumerationBoundExceeded, enumerate_monoid, random_normal_forms, sample_elements
from homology.ring import Combination, MonoidRing, format_module, format_ring
from presentations.exceptions import PolygraphError
from presentations.library import load_fixture
from presentations.parser import parse_polygraph

AA = load_fixture('aa')
B3PLUS = load_fixture('b3plus')


class CombinationTests(SimpleTestCase):

    def test_zero_coefficients_are_dropped(self):
        c = Combination([('u', 2), ('v', 1), ('u', -2)])
        self.assertEqual(c, Combination.basis('v'))
        self.assertEqual(c - c, 0)
        self.assertFalse(c - c)

    def test_scalar_multiple(self):
        self.assertEqual(3 * Combination.basis('u'), Combination({'u': 3}))


class MonoidRingTests(SimpleTestCase):

    def setUp(self):
        self.ring = MonoidRing(AA)
        self.a = AA.word('a')

    def test_mult_uses_normal_forms(self):
        self.assertEqual(self.ring.mult(self.a, self.a), self.a)
        self.assertEqual(self.ring.mult(self.ring.one, self.a), self.a)

    def test_times(self):
        r = self.ring.element(self.a) - self.ring.unit()
        # (a - 1)(a - 1) = a - 2a + 1 = 1 - a
        self.assertEqual(self.ring.times(r, r), self.ring.unit() - self.ring.element(self.a))

    def test_epsilon(self):
        r = 3 * self.ring.element(self.a) - 2 * self.ring.unit()
        self.assertEqual(self.ring.epsilon(r), 1)
        self.assertEqual(self.ring.epsilon(Combination.zero()), 0)

    def test_format(self):
        self.assertEqual(format_ring(self.ring.element(self.a) - self.ring.unit()), '-1*1 + 1*a')
        self.assertEqual(format_ring(Combination.zero()), '0')
        m = Combination({(self.a, 'mu'): 1, (self.ring.one, 'mu'): -1})
        self.assertEqual(format_module(m), '(-1*1 + 1*a)[mu]')

    def test_category_presentations_are_refused(self):
        p = parse_polygraph('category\nobjects: X Y\ngenerators: f: X -> Y\nrules:')
        with self.assertRaises(PolygraphError):
            MonoidRing(p)

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_mult_is_associative_and_unital(self, data):
        ring = MonoidRing(B3PLUS)
        words = st.lists(st.sampled_from(B3PLUS.generator_names), max_size=6).map(B3PLUS.word)
        u, v, w = (ring.nf(data.draw(words)) for _ in range(3))
        self.assertEqual(ring.mult(ring.mult(u, v), w), ring.mult(u, ring.mult(v, w)))
        self.assertEqual(ring.mult(ring.one, u), u)
        self.assertEqual(ring.mult(u, ring.one), u)


class FoxBracketTests(SimpleTestCase):

    def test_aaa(self):
        ring = MonoidRing(AA)
        a = AA.word('a')
        self.assertEqual(fox_bracket(ring, AA.word('a a a')),
                         Combination({(ring.one, 'a'): 1, (a, 'a'): 2}))
        self.assertEqual(fox_bracket(ring, ring.one), 0)


class EnumerationTests(SimpleTestCase):

    def test_aa_has_two_elements(self):
        self.assertEqual([str(u) for u in enumerate_monoid(MonoidRing(AA))], ['1', 'a'])

    def test_infinite_monoid_exceeds_bound(self):
        with self.assertRaises(EnumerationBoundExceeded) as ctx:
            enumerate_monoid(MonoidRing(B3PLUS), bound=10)
        self.assertEqual(len(ctx.exception.partial), 10)

    def test_sampling_is_seeded(self):
        ring = MonoidRing(B3PLUS)
        first = random_normal_forms(ring, 20, seed=7)
        self.assertEqual(first, random_normal_forms(ring, 20, seed=7))
        self.assertEqual(first[0], ring.one)

    def test_sample_elements(self):
        elements, exhaustive = sample_elements(MonoidRing(AA), bound=10)
        self.assertTrue(exhaustive)
        self.assertEqual(len(elements), 2)
        elements, exhaustive = sample_elements(MonoidRing(B3PLUS), bound=10, samples=5, seed=1)
        self.assertFalse(exhaustive)
        self.assertLessEqual(len(elements), 5)
