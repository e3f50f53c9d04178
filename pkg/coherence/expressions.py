"""
Composite 3-cells of a (3,1)-polygraph as expression trees.

Boundaries are computed structurally and returned freely reduced: formal
identities are erased and adjacent step / inverse-step pairs cancelled.
Exchange moves of the free (2,1)-category are not applied when checking
composability; ``Exchange`` makes a Peiffer square explicit instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from presentations.cells import ThreeCell, Word
from presentations.exceptions import PolygraphError
from rewriting.paths import RewriteStep, ZigZag


class IllComposedError(PolygraphError):
    """``path`` leads from the root to the offending subterm."""

    def __init__(self, reason: str, path: tuple[str, ...] = ()):
        self.reason = reason
        self.path = path
        where = '/'.join(path) or 'root'
        super().__init__(f'{reason} (at {where})')


@dataclass(frozen=True)
class Gen:
    cell: ThreeCell


@dataclass(frozen=True)
class Inv:
    expr: 'ThreeCellExpr'


@dataclass(frozen=True)
class Whisker:
    left: Word
    expr: 'ThreeCellExpr'
    right: Word


@dataclass(frozen=True)
class Comp1:
    """pre ⋆₁ expr ⋆₁ post, with 2-cells on either side."""
    pre: ZigZag
    expr: 'ThreeCellExpr'
    post: ZigZag


@dataclass(frozen=True)
class Comp2:
    first: 'ThreeCellExpr'
    second: 'ThreeCellExpr'


@dataclass(frozen=True)
class Id2:
    path: ZigZag


@dataclass(frozen=True)
class Exchange:
    """The square f ⋆₁ g′ ⇛ g ⋆₁ f′ of two independent steps."""
    f: RewriteStep
    g: RewriteStep


ThreeCellExpr = Union[Gen, Inv, Whisker, Comp1, Comp2, Id2, Exchange]


def _child(expr: ThreeCellExpr, label: str) -> tuple[ZigZag, ZigZag]:
    try:
        return boundary3(expr)
    except IllComposedError as exc:
        raise IllComposedError(exc.reason, (label, *exc.path)) from None


@lru_cache(maxsize=65536)
def boundary3(e: ThreeCellExpr) -> tuple[ZigZag, ZigZag]:
    """(source, target) 2-cells of ``e``."""
    if isinstance(e, Gen):
        return e.cell.source.reduced(), e.cell.target.reduced()
    if isinstance(e, Id2):
        path = e.path.reduced()
        return path, path
    if isinstance(e, Inv):
        source, target = _child(e.expr, 'inv')
        return target, source
    if isinstance(e, Whisker):
        source, target = _child(e.expr, 'whisker')
        try:
            return source.whisker(e.left, e.right), target.whisker(e.left, e.right)
        except PolygraphError as exc:
            raise IllComposedError(str(exc)) from None
    if isinstance(e, Comp1):
        source, target = _child(e.expr, 'comp1')
        if e.pre.target != source.source or e.post.source != source.target:
            raise IllComposedError(
                f'2-cells end at "{e.pre.target}" and start at "{e.post.source}" '
                f'around a 3-cell on "{source.source}" => "{source.target}"'
            )
        return (e.pre.then(source).then(e.post).reduced(),
                e.pre.then(target).then(e.post).reduced())
    if isinstance(e, Comp2):
        source, middle = _child(e.first, 'first')
        other, target = _child(e.second, 'second')
        if not middle.equivalent(other):
            raise IllComposedError(f'target "{middle}" is not the source "{other}"')
        return source, target
    if isinstance(e, Exchange):
        from branchings.local import close_local_branching

        try:
            f_prime, g_prime = close_local_branching(e.f, e.g)
        except PolygraphError as exc:
            raise IllComposedError(str(exc)) from None
        return (ZigZag(e.f.source, (e.f, *f_prime.steps)),
                ZigZag(e.g.source, (e.g, *g_prime.steps)))
    raise IllComposedError(f'not a 3-cell expression: {e!r}')


def cells_of(e: ThreeCellExpr) -> set[str]:
    """Names of the generating 3-cells occurring in ``e``."""
    if isinstance(e, Gen):
        return {e.cell.name}
    if isinstance(e, (Inv, Whisker, Comp1)):
        return cells_of(e.expr)
    if isinstance(e, Comp2):
        return cells_of(e.first) | cells_of(e.second)
    return set()


def compose2(exprs) -> ThreeCellExpr:
    """Left-nested ⋆₂ composite of a nonempty sequence."""
    exprs = list(exprs)
    result = exprs[0]
    for expr in exprs[1:]:
        result = Comp2(result, expr)
    return result


def format_expr(e: ThreeCellExpr) -> str:
    if isinstance(e, Gen):
        return e.cell.name
    if isinstance(e, Inv):
        return f'inv({format_expr(e.expr)})'
    if isinstance(e, Whisker):
        return f'({e.left} * {format_expr(e.expr)} * {e.right})'
    if isinstance(e, Comp1):
        parts = [str(z) for z in (e.pre,) if z.steps]
        parts.append(format_expr(e.expr))
        parts.extend(str(z) for z in (e.post,) if z.steps)
        return parts[0] if len(parts) == 1 else f'({" . ".join(parts)})'
    if isinstance(e, Comp2):
        return f'({format_expr(e.first)} ; {format_expr(e.second)})'
    if isinstance(e, Id2):
        # an empty path already prints as id(w)
        return str(e.path) if not e.path.steps else f'id({e.path})'
    return f'exchange({e.f}, {e.g})'
