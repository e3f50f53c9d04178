"""
Invariant checks for polygraphs. ``validate`` never raises: it returns one
diagnostic string per violation, naming the invariant and the offending cell.
"""
from .cells import Polygraph, Word


def _word_errors(p: Polygraph, word: Word) -> list[str]:
    errors = []
    for i, letter in enumerate(word.letters):
        if not p.has_generator(letter):
            errors.append(f'unknown generator "{letter}"')
            continue
        gen = p.generator(letter)
        if (gen.source, gen.target) != (word.objects[i], word.objects[i + 1]):
            errors.append(f'"{letter}" is not composable in "{word}"')
    return errors


def validate(p: Polygraph) -> list[str]:
    diagnostics = []

    if len(set(p.zero_cells)) != len(p.zero_cells):
        diagnostics.append('0-cells: duplicate name')
    names = p.generator_names
    for name in sorted({n for n in names if names.count(n) > 1}):
        diagnostics.append(f'generator {name}: duplicate name')
    for gen in p.generators:
        for obj in (gen.source, gen.target):
            if obj not in p.zero_cells:
                diagnostics.append(f'generator {gen.name}: unknown 0-cell {obj}')

    if p.order is not None and sorted(p.order) != sorted(names):
        diagnostics.append('order: does not cover every generator exactly once')

    seen_rules = set()
    for rule in p.rules:
        if rule.name in seen_rules:
            diagnostics.append(f'rule {rule.name}: duplicate name')
        seen_rules.add(rule.name)
        if not rule.lhs.letters:
            diagnostics.append(f'rule {rule.name}: lhs is an identity')
        for error in _word_errors(p, rule.lhs) + _word_errors(p, rule.rhs):
            diagnostics.append(f'rule {rule.name}: {error}')
        if (rule.lhs.source, rule.lhs.target) != (rule.rhs.source, rule.rhs.target):
            diagnostics.append(f'rule {rule.name}: lhs and rhs not parallel')

    for family in p.pumped:
        if family.stem in seen_rules:
            diagnostics.append(f'pumped rule {family.stem}: duplicate name')
        seen_rules.add(family.stem)
        if not p.has_generator(family.pump):
            diagnostics.append(f'pumped rule {family.stem}: unknown pump letter {family.pump}')
            continue
        if not p.generator(family.pump).is_loop:
            diagnostics.append(f'pumped rule {family.stem}: pump letter {family.pump} is not a loop')
            continue
        try:
            instances = [family.instance(0), family.instance(1)]
        except ValueError as exc:
            diagnostics.append(f'pumped rule {family.stem}: {exc}')
            continue
        if not instances[0].lhs.letters:
            diagnostics.append(f'pumped rule {family.stem}: instance 0 has an identity lhs')
        for rule in instances:
            if (rule.lhs.source, rule.lhs.target) != (rule.rhs.source, rule.rhs.target):
                diagnostics.append(f'pumped rule {family.stem}: instances not parallel')
                break

    for cell in p.three_cells:
        if not cell.is_parallel():
            diagnostics.append(f'3-cell {cell.name}: boundary not parallel')
        for step in (*cell.source.steps, *cell.target.steps):
            if not p.has_rule(step.rule):
                diagnostics.append(f'3-cell {cell.name}: unknown rule {step.rule.name}')
                break
    return diagnostics
