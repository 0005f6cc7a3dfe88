"""
    @file:              sequence.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the RepSequence class, a finite sequence of almost representations of one
                        presentation with decreasing defects, checked for asymptotic behavior up to its length.
"""

import logging
from typing import List, Tuple

from attrs import field, frozen

from ..errors import MismatchError
from .almost_rep import AlmostRep, closeness, defect, embed

logger = logging.getLogger(__name__)


@frozen(eq=False)
class RepSequence:
    """
    Almost representations of a common presentation with non-decreasing ranks. Terms of different ranks are compared
    after the corner embedding into the larger rank.
    """
    terms: Tuple[AlmostRep, ...] = field(converter=tuple)
    defects: Tuple[float, ...] = field(init=False)

    def __attrs_post_init__(self):
        if not self.terms:
            raise MismatchError("A sequence has at least one term.")
        generators = self.terms[0].generators
        for previous, term in zip(self.terms, self.terms[1:]):
            if term.generators != generators:
                raise MismatchError("All terms of a sequence share their presentation.")
            if term.rank < previous.rank:
                raise MismatchError(f"Ranks must not decrease, got {previous.rank} then {term.rank}.")
        object.__setattr__(self, "defects", tuple(defect(term) for term in self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def is_asymptotic(self, tol: float = 1e-12) -> bool:
        """
        Whether the defects decrease, within tol, from term to term and the last one is below the first. Only the
        stored terms are checked.

        Parameters
        ----------
        tol : float
            Slack on each comparison.

        Returns
        -------
        asymptotic : bool
            True if the defects decay over the stored terms.
        """
        decreasing = all(b <= a + tol for a, b in zip(self.defects, self.defects[1:]))
        decaying = len(self.defects) == 1 or self.defects[-1] < self.defects[0]
        logger.debug(f"Sequence defects {[round(d, 6) for d in self.defects]}.")

        return decreasing and decaying

    def cauchy_table(self) -> List[Tuple[int, int, float]]:
        """
        Closeness of consecutive terms after embedding both into the larger rank.

        Returns
        -------
        table : List[Tuple[int, int, float]]
            Rows (i, i + 1, closeness).
        """
        table = []
        for i, (a, b) in enumerate(zip(self.terms, self.terms[1:])):
            n = max(a.rank, b.rank)
            table.append((i, i + 1, closeness(embed(a, n), embed(b, n))))

        return table
