"""
    @file:              loop_generator.py
    @Author:            Maxence Larose

    @Creation Date:     01/2022
    @Last modification: 10/2026

    @Description:       This file contains the TreeLoopGenerator class. This class is used to iterate on the edges
                        of a complex lying outside a maximal tree and to obtain, for each of them, the loop made of
                        the edge followed by the tree path back to its first vertex. The TreeLoopGenerator class
                        inherits from the Generator abstract class.
"""

from collections.abc import Generator
import logging
from typing import FrozenSet, Optional, Tuple

from .complex import Complex, Simplex
from .paths import SimplicialPath, maximal_tree, tree_path

logger = logging.getLogger(__name__)


class TreeLoopGenerator(Generator):
    """
    A class used to iterate on the non-tree edges {x, y}, x < y, of a complex and obtain the loops
    (x, y) * (tree path from y to x). The TreeLoopGenerator class inherits from the Generator abstract class.
    """

    def __init__(
            self,
            complex_: Complex,
            tree: Optional[FrozenSet[Simplex]] = None,
            verbose: bool = False
    ):
        """
        Used to initialize the tree and the list of non-tree edges.

        Parameters
        ----------
        complex_ : Complex
            Connected complex.
        tree : Optional[FrozenSet[Simplex]]
            Maximal tree. Defaults to the breadth-first tree of the complex.
        verbose : bool
            True to log progress at INFO level. (default = False)
        """
        self._tree = maximal_tree(complex_) if tree is None else frozenset(tuple(sorted(e)) for e in tree)
        self._edges = [e for e in complex_.edges if e not in self._tree]
        self._verbose = verbose
        self.current_index = 0

    @property
    def tree(self) -> FrozenSet[Simplex]:
        """
        Maximal tree.

        Returns
        -------
        tree : FrozenSet[Simplex]
            Tree edges.
        """
        return self._tree

    def __len__(self) -> int:
        """
        Total number of non-tree edges.

        Returns
        -------
        length: int
            Number of non-tree edges.
        """
        return len(self._edges)

    def send(self, _) -> Tuple[Simplex, SimplicialPath]:
        """
        Resumes the execution and sends a value into the generator function. This method returns the next non-tree edge
        with its loop and updates the current index or raises StopIteration (via the self.throw method) once every edge
        has been generated.

        Returns
        -------
        (edge, loop): Tuple[Simplex, SimplicialPath]
            Non-tree edge and its loop based at its first vertex.
        """
        if self.current_index == 0 and self._verbose:
            logger.info(f"Generating loops for {len(self)} edges outside the maximal tree...")
        if self.current_index == len(self):
            if self._verbose:
                logger.info("Done.")
            self.throw()

        x, y = self._edges[self.current_index]
        loop = SimplicialPath((x, y)).concat(tree_path(self._tree, y, x))

        self.current_index += 1

        return (x, y), loop

    def throw(self, typ=StopIteration, value=None, traceback=None) -> None:
        """
        Raises an exception of type typ.
        """
        raise typ
