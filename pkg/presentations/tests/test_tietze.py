from django.test import SimpleTestCase

from presentations.exceptions import TietzeError
from presentations.library import load_fixture
from presentations.tietze import AddGen, AddRule, RemoveGen, RemoveRule, RenameRule, substitute, tietze_apply
from rewriting.paths import RewriteStep, ZigZag


def single(p, name, left='1', right='1'):
    step = RewriteStep(p.word(left), p.rule(name), p.word(right))
    return ZigZag(step.source, (step,))


class TietzeTests(SimpleTestCase):

    def setUp(self):
        self.p = load_fixture('aa_aaa')

    def test_add_rule_with_witness(self):
        # a a a => a a => a, through mu twice
        witness = single(self.p, 'mu', right='a').then(single(self.p, 'mu'))
        q = tietze_apply(self.p, AddRule(self.p.word('a a a'), self.p.word('a'), witness, name='kappa'))
        self.assertEqual(str(q.rule('kappa')), 'kappa: a a a => a')

    def test_add_rule_gets_fresh_greek_name(self):
        witness = single(self.p, 'mu', right='a').then(single(self.p, 'mu'))
        q = tietze_apply(self.p, AddRule(self.p.word('a a a'), self.p.word('a'), witness))
        self.assertEqual(q.rules[-1].name, 'alpha')

    def test_add_rule_rejects_wrong_witness(self):
        witness = single(self.p, 'mu')
        with self.assertRaisesMessage(TietzeError, 'witness goes from'):
            tietze_apply(self.p, AddRule(self.p.word('a a a'), self.p.word('a'), witness))

    def test_remove_rule(self):
        witness = single(self.p, 'mu', right='a').then(single(self.p, 'mu'))
        q = tietze_apply(self.p, RemoveRule('nu', witness))
        self.assertEqual([r.name for r in q.rules], ['mu'])

    def test_remove_rule_cannot_use_itself(self):
        with self.assertRaisesMessage(TietzeError, 'witness uses removed rule'):
            tietze_apply(self.p, RemoveRule('nu', single(self.p, 'nu')))

    def test_rename_rule_keeps_its_slot(self):
        q = tietze_apply(self.p, RenameRule('mu', 'kappa'))
        self.assertEqual([str(r) for r in q.rules], ['kappa: a a => a', 'nu: a a a => a'])
        with self.assertRaisesMessage(TietzeError, 'rule name "nu" is taken'):
            tietze_apply(self.p, RenameRule('mu', 'nu'))
        with self.assertRaisesMessage(TietzeError, 'unknown rule'):
            tietze_apply(self.p, RenameRule('omega', 'kappa'))

    def test_add_and_remove_generator(self):
        p = load_fixture('b3plus')
        q = tietze_apply(p, AddGen('u', p.word('s a'), rule='omega'))
        self.assertEqual(q.order, ('a', 's', 't', 'u'))
        self.assertEqual(str(q.rule('omega')), 'omega: s a => u')
        back = tietze_apply(q, RemoveGen('u', 'omega'))
        self.assertEqual(back.generator_names, p.generator_names)
        self.assertEqual(back.rules, p.rules)

    def test_remove_generator_substitutes_its_word(self):
        p = load_fixture('b3plus')
        q = tietze_apply(p, AddGen('u', p.word('s a'), rule='omega'))
        self.assertEqual(str(substitute(q.word('u a u'), 'u', q.word('s a'))), 's a a s a')

    def test_remove_pump_letter_rejected(self):
        p = load_fixture('sq')
        p = tietze_apply(p, AddGen('u', p.word('t'), rule='omega'))
        back = single(p, 'omega').inverse()
        q = tietze_apply(p, AddRule(p.word('u'), p.word('t'), back, name='psi'))
        with self.assertRaisesMessage(TietzeError, 'pumped rule alpha still uses t'):
            tietze_apply(q, RemoveGen('t', 'psi'))

    def test_add_existing_generator(self):
        with self.assertRaisesMessage(TietzeError, 'already exists'):
            tietze_apply(self.p, AddGen('a', self.p.word('a a')))
