"""
    @file:              presentation.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the Presentation class and the construction of the edge-path presentation of
                        the fundamental group of a complex from a maximal tree: one generator per edge outside the tree,
                        one relation per 2-simplex.
"""

import logging
from typing import Dict, FrozenSet, Optional, Tuple

from attrs import field, frozen
import numpy as np

from ..errors import ComplexError
from .complex import Complex, Simplex, Vertex
from .paths import SimplicialPath, maximal_tree, optional_basepoint, tree_path

logger = logging.getLogger(__name__)

Letter = Tuple[str, int]
Word = Tuple[Letter, ...]


def _as_word(word) -> Word:
    return tuple((str(label), int(power)) for label, power in word)


def _as_edges(edges) -> Tuple[Tuple[Vertex, Vertex], ...]:
    return tuple(tuple(e) for e in edges)


def invert_word(word: Word) -> Word:
    """
    Inverse of a word in the free group.

    Parameters
    ----------
    word : Word
        Letters (label, +1 or -1).

    Returns
    -------
    inverse : Word
        Reversed word with opposite powers.
    """
    return tuple((label, -power) for label, power in reversed(word))


@frozen
class Presentation:
    """
    A finite presentation <generators | relations> with one based loop per generator and, for presentations built
    from a tree, the non-tree edge each generator crosses. Words are tuples of letters (label, +1 or -1), read so that
    evaluating a word left to right composes transports along the expanded loop.
    """
    generators: Tuple[str, ...] = field(converter=tuple)
    relations: Tuple[Word, ...] = field(converter=lambda rs: tuple(_as_word(r) for r in rs))
    generator_loops: Tuple[SimplicialPath, ...] = field(converter=tuple, factory=tuple)
    basepoint: Optional[Vertex] = field(default=None)
    generator_edges: Tuple[Tuple[Vertex, Vertex], ...] = field(converter=_as_edges, factory=tuple)

    def __attrs_post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ComplexError("Generator labels must be distinct.")
        known = set(self.generators)
        for relation in self.relations:
            for label, power in relation:
                if label not in known or power not in (1, -1):
                    raise ComplexError(f"Relation letter ({label}, {power}) is not a generator or its inverse.")
        if self.generator_loops:
            if len(self.generator_loops) != len(self.generators):
                raise ComplexError("One generator loop per generator is required.")
            for loop in self.generator_loops:
                if loop.start != self.basepoint or loop.end != self.basepoint:
                    raise ComplexError(f"Generator loop {loop.vertices} is not based at {self.basepoint}.")
        if self.generator_edges and len(self.generator_edges) != len(self.generators):
            raise ComplexError("One generator edge per generator is required.")

    @property
    def loops_by_label(self) -> Dict[str, SimplicialPath]:
        """
        Generator loops indexed by label.

        Returns
        -------
        loops : Dict[str, SimplicialPath]
            Label to loop.
        """
        return dict(zip(self.generators, self.generator_loops))

    def expand_word(self, word: Word) -> SimplicialPath:
        """
        Loop at the basepoint represented by a word: generator loops concatenated in reversed letter order, inverse
        letters running their loop backwards.

        Parameters
        ----------
        word : Word
            Word over the generators.

        Returns
        -------
        loop : SimplicialPath
            Based loop.
        """
        if not self.generator_loops:
            raise ComplexError("This presentation carries no generator loops.")

        loops = self.loops_by_label
        path = SimplicialPath((self.basepoint,))
        for label, power in reversed(_as_word(word)):
            if label not in loops:
                raise ComplexError(f"Unknown generator {label}.")
            loop = loops[label]
            path = path.concat(loop if power == 1 else loop.reversed())

        return path

    def abelianized_relation_matrix(self) -> np.ndarray:
        """
        Exponent sums of the generators in each relation.

        Returns
        -------
        matrix : np.ndarray
            Integer matrix of shape (relations, generators).
        """
        position = {label: i for i, label in enumerate(self.generators)}
        matrix = np.zeros((len(self.relations), len(self.generators)), dtype=int)
        for r, relation in enumerate(self.relations):
            for label, power in relation:
                matrix[r, position[label]] += power

        return matrix


def presentation_from_tree(
        x: Complex,
        tree: Optional[FrozenSet[Simplex]] = None,
        basepoint: Optional[Vertex] = None
) -> Presentation:
    """
    Edge-path presentation of the fundamental group. Generator g{i} is the i-th edge {a, b}, a < b, outside the tree,
    with loop (tree path to a) * (a, b) * (tree path back). The relation of a 2-simplex lists its non-tree boundary
    steps in reverse traversal order of its positively oriented boundary.

    Parameters
    ----------
    x : Complex
        Connected complex.
    tree : Optional[FrozenSet[Simplex]]
        Maximal tree, the breadth-first tree by default.
    basepoint : Optional[Vertex]
        Basepoint, the least vertex by default.

    Returns
    -------
    presentation : Presentation
        Presentation with generator loops.
    """
    basepoint = optional_basepoint(x, basepoint)
    tree = maximal_tree(x) if tree is None else frozenset(tuple(sorted(e)) for e in tree)

    generator_edges = [e for e in x.edges if e not in tree]
    labels = {edge: f"g{i}" for i, edge in enumerate(generator_edges)}
    loops = [
        tree_path(tree, basepoint, a).concat(SimplicialPath((a, b))).concat(tree_path(tree, b, basepoint))
        for a, b in generator_edges
    ]

    relations = []
    for triangle in x.simplices_of_dimension(2):
        a, b, c = x.oriented_vertices(triangle)
        letters = []
        for p, q in ((a, b), (b, c), (c, a)):
            edge = tuple(sorted((p, q)))
            if edge in labels:
                letters.append((labels[edge], 1 if (p, q) == edge else -1))
        relations.append(tuple(reversed(letters)))

    logger.debug(f"Presentation with {len(generator_edges)} generators and {len(relations)} relations.")

    return Presentation(
        generators=tuple(labels[e] for e in generator_edges),
        relations=tuple(relations),
        generator_loops=tuple(loops),
        basepoint=basepoint,
        generator_edges=tuple(generator_edges)
    )


