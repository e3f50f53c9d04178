"""
Matrices of the boundary maps.

Over a finite monoid, d_k expands to an integer matrix whose columns are
the basis elements u[c] of ZM[Σₖ] (cell-major: all u for the first cell,
then the next) and whose rows are those of ZM[Σₖ₋₁]. The symbolic form
lists, per generating cell, its image as ``coef*word`` terms and works
for infinite monoids too.
"""
from __future__ import annotations

import logging
from pathlib import Path

import numpy as np

from presentations.cells import Word
from .resolution import Resolution
from .ring import Combination, format_ring, word_text

logger = logging.getLogger(__name__)


def _bases(res: Resolution, elements: list[Word]) -> list[list]:
    def module(cells):
        return [(u, c) for c in cells for u in elements]

    return [list(elements), module(res.generators), module(res.rules), module(res.cells)]


def _maps(res: Resolution):
    return {1: res.d1, 2: res.d2, 3: res.d3}


def boundary_matrices(res: Resolution, elements: list[Word]) -> dict[int, np.ndarray]:
    """Integer matrices of d₁, d₂, d₃ over the listed elements of a finite monoid."""
    bases = _bases(res, elements)
    matrices = {}
    for k, d in _maps(res).items():
        rows = {key: i for i, key in enumerate(bases[k - 1])}
        matrix = np.zeros((len(bases[k - 1]), len(bases[k])), dtype=object)
        for j, key in enumerate(bases[k]):
            for image_key, c in d(Combination.basis(key)):
                matrix[rows[image_key], j] = c
        matrices[k] = matrix
    return matrices


def chain_products(matrices: dict[int, np.ndarray]) -> dict[str, bool]:
    """Whether d₁·d₂ and d₂·d₃ vanish as integer matrices."""
    def vanishes(a: np.ndarray, b: np.ndarray) -> bool:
        if 0 in a.shape or 0 in b.shape:
            return True
        return bool((a.dot(b) == 0).all())

    return {'d1d2': vanishes(matrices[1], matrices[2]), 'd2d3': vanishes(matrices[2], matrices[3])}


def symbolic_images(res: Resolution) -> dict[int, list[str]]:
    """Lines ``cell -> image`` with ZM coefficients grouped by cell of Σₖ₋₁."""
    cells = {1: res.generators, 2: res.rules, 3: res.cells}
    lines = {}
    for k, d in _maps(res).items():
        lines[k] = []
        for cell in cells[k]:
            image = d(Combination.basis((res.ring.one, cell)))
            if k == 1:
                lines[k].append(f'{cell} -> {format_ring(image)}')
                continue
            by_cell: dict[str, list] = {}
            for (u, target), c in image:
                by_cell.setdefault(target, []).append((u, c))
            terms = [f'[{target}]: {format_ring(Combination(by_cell[target]))}'
                     for target in cells[k - 1] if target in by_cell]
            lines[k].append(f'{cell} -> ' + ('; '.join(terms) if terms else '0'))
    return lines


def _legend(basis: list) -> str:
    return ' '.join(word_text(key) if isinstance(key, Word) else f'{word_text(key[0])}[{key[1]}]'
                    for key in basis)


def export_matrices(res: Resolution, directory: Path | str, elements: list[Word] | None = None) -> list[Path]:
    """
    Write d1.txt … d3.txt (when ``elements`` lists a finite monoid) and the
    symbolic d1_zm.txt … d3_zm.txt into ``directory``.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    if elements is not None:
        bases = _bases(res, elements)
        for k, matrix in boundary_matrices(res, elements).items():
            path = directory / f'd{k}.txt'
            header = '\n'.join([
                f'd{k}: {matrix.shape[0]} x {matrix.shape[1]}',
                f'rows: {_legend(bases[k - 1])}',
                f'cols: {_legend(bases[k])}',
            ])
            np.savetxt(path, matrix, fmt='%d', header=header)
            written.append(path)
    for k, lines in symbolic_images(res).items():
        path = directory / f'd{k}_zm.txt'
        path.write_text('\n'.join(lines) + '\n', encoding='utf-8')
        written.append(path)
    logger.info(f'Exported {len(written)} matrix files to {directory}')
    return written
