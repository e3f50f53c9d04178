"""
The 2-cells relating the infinite presentation Sq (rules alpha[n]) to the
finite one S̃q (rule alpha = alpha[0]), and the transfer data between them.

Both presentations share beta: xa ⇒ atx, gamma: xt ⇒ tx, delta: xb ⇒ bx and
epsilon: xy ⇒ 1, so the paths below are built by rule name in either one.
"""
from __future__ import annotations

from presentations.cells import Polygraph, Word
from rewriting.paths import RewriteStep, ZigZag
from .transfer import TransferData, TwoFunctor


def _step(p: Polygraph, left: str, rule: str, right: str) -> ZigZag:
    step = RewriteStep(p.word(left), p.rule(rule), p.word(right))
    return ZigZag(step.source, (step,))


def _t(n: int) -> str:
    return ' '.join(['t'] * n) or '1'


def _join(*parts: str) -> str:
    return ' '.join(part for part in parts if part != '1') or '1'


def gamma_path(p: Polygraph, n: int) -> ZigZag:
    """γ_n: x tⁿ ⇒ tⁿ x, with γ_0 = 1_x and γ_{n+1} = γ tⁿ ⋆₁ t γ_n."""
    path = ZigZag.identity(p.word('x'))
    for k in range(n):
        # path is γ_k; whisker it behind one more t
        path = _step(p, '1', 'gamma', _t(k)).then(path.whisker(p.word('t'), Word.identity()))
    return path


def f_path(p: Polygraph, n: int) -> ZigZag:
    """f_n: x a tⁿ b ⇒ a tⁿ⁺¹ b x, as β tⁿ b ⋆₁ at γ_n b ⋆₁ a tⁿ⁺¹ δ."""
    return (_step(p, '1', 'beta', _join(_t(n), 'b'))
            .then(gamma_path(p, n).whisker(p.word('a t'), p.word('b')))
            .then(_step(p, _join('a', _t(n + 1)), 'delta', '1')))


def g_path(p: Polygraph, n: int) -> ZigZag:
    """g_n: x a tⁿ b y ⇒ a tⁿ⁺¹ b, as f_n y ⋆₁ a tⁿ⁺¹ b ε."""
    return (f_path(p, n).whisker(Word.identity(), p.word('y'))
            .then(_step(p, _join('a', _t(n + 1), 'b'), 'epsilon', '1')))


def pi_alpha(p: Polygraph, n: int) -> ZigZag:
    """
    π(α_n): a tⁿ b ⇒ 1 in S̃q, with π(α_0) = α and
    π(α_{n+1}) = g_n⁻ ⋆₁ x π(α_n) y ⋆₁ ε.
    """
    path = _step(p, '1', 'alpha', '1')
    for k in range(n):
        path = (g_path(p, k).inverse()
                .then(path.whisker(p.word('x'), p.word('y')))
                .then(_step(p, '1', 'epsilon', '1')))
    return path


def sq_transfer_data(sq: Polygraph, sq_tilde: Polygraph, n_max: int) -> TransferData:
    """
    F = π: Sq → S̃q on the instances alpha[n], n ≤ n_max, and G the inclusion
    sending alpha to alpha[0]; both are the identity on generators and τ is trivial.
    """
    shared = ('beta', 'gamma', 'delta', 'epsilon')
    inclusion = TwoFunctor.identity(sq_tilde, 'G')
    f_rule = {name: inclusion.rule[name] for name in shared}
    f_rule.update({f'alpha[{n}]': pi_alpha(sq_tilde, n) for n in range(n_max + 1)})
    g_rule = {name: _step(sq, '1', name, '1') for name in shared}
    g_rule['alpha'] = _step(sq, '1', 'alpha[0]', '1')
    return TransferData(
        f_gen=dict(inclusion.gen),
        f_rule=f_rule,
        g_gen={g.name: sq.word([g.name]) for g in sq.generators},
        g_rule=g_rule,
        tau={g.name: ZigZag.identity(sq_tilde.word([g.name])) for g in sq_tilde.generators},
    )
