"""
    @file:              almost_rep.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the AlmostRep class, unitary images of the generators of a finite
                        presentation, with word evaluation, defect and closeness measurements, substitution along a
                        map of presentations, direct sums and the clock and shift pair.
"""

import logging
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from attrs import field, frozen
import numpy as np
from scipy import linalg

from ..errors import MismatchError, PreconditionError
from ..matrixcore import dagger, op_norm, unitarity_residual
from ..simplicial import Presentation, Word, invert_word

logger = logging.getLogger(__name__)

UNITARITY_TOL = 1e-8

ConjugateFactor = Tuple[Word, int, int]


def _as_images(images: Mapping) -> Dict[str, np.ndarray]:
    return {str(label): np.asarray(image, dtype=complex) for label, image in images.items()}


@frozen(eq=False)
class AlmostRep:
    """
    Unitary images of the generators of a presentation. The images determine a homomorphism on the free group; the
    relations are only sent close to the identity.
    """
    presentation: Presentation
    images: Dict[str, np.ndarray] = field(converter=_as_images)

    def __attrs_post_init__(self):
        if set(self.images) != set(self.presentation.generators):
            raise MismatchError(
                f"Images are given for {sorted(self.images)}, the generators are {list(self.presentation.generators)}."
            )
        shapes = {image.shape for image in self.images.values()}
        if len(shapes) > 1:
            raise MismatchError(f"Generator images have different shapes {sorted(shapes)}.")
        for label, image in self.images.items():
            if image.ndim != 2 or image.shape[0] != image.shape[1]:
                raise MismatchError(f"The image of {label} is not a square matrix.")
            residual = unitarity_residual(image)
            if residual > UNITARITY_TOL:
                raise PreconditionError(f"The image of {label} is not unitary, ||uu* - 1|| = {residual:.3g}.")

    @property
    def rank(self) -> int:
        if self.images:
            return next(iter(self.images.values())).shape[0]
        return 0

    @property
    def generators(self) -> Tuple[str, ...]:
        return self.presentation.generators


def evaluate_word(phi: AlmostRep, word: Word) -> np.ndarray:
    """
    Image of a word of the free group, the product of generator images and their adjoints taken left to right.

    Parameters
    ----------
    phi : AlmostRep
        Almost representation.
    word : Word
        Letters (label, +1 or -1).

    Returns
    -------
    image : np.ndarray
        Unitary matrix.
    """
    result = np.eye(phi.rank, dtype=complex)
    for label, power in word:
        if label not in phi.images:
            raise MismatchError(f"Unknown generator {label}.")
        image = phi.images[label]
        result = result @ (image if power > 0 else dagger(image))

    return result


def defect(phi: AlmostRep) -> float:
    """
    Largest ||phi(r) - id|| over the relations.

    Parameters
    ----------
    phi : AlmostRep
        Almost representation.

    Returns
    -------
    defect : float
        Defect, zero for a presentation without relations.
    """
    identity = np.eye(phi.rank)
    return max((op_norm(evaluate_word(phi, r) - identity) for r in phi.presentation.relations), default=0.0)


def closeness(phi: AlmostRep, psi: AlmostRep) -> float:
    """
    Largest distance ||phi(g) - psi(g)|| over the generators.

    Parameters
    ----------
    phi : AlmostRep
        First almost representation.
    psi : AlmostRep
        Second almost representation, on the same generators and of the same rank.

    Returns
    -------
    distance : float
        Closeness.
    """
    if phi.generators != psi.generators:
        raise MismatchError("Closeness compares almost representations of the same presentation.")
    if phi.rank != psi.rank:
        raise MismatchError(f"Ranks differ: {phi.rank} against {psi.rank}. Embed the smaller one first.")

    return max((op_norm(phi.images[g] - psi.images[g]) for g in phi.generators), default=0.0)


def reduce_word(word: Word) -> Word:
    """
    Free reduction of a word.

    Parameters
    ----------
    word : Word
        Letters (label, +1 or -1).

    Returns
    -------
    reduced : Word
        Word without adjacent inverse letters.
    """
    stack: List[Tuple[str, int]] = []
    for letter in word:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(tuple(letter))

    return tuple(stack)


class SubstitutionReport(NamedTuple):
    rep: AlmostRep
    defect: float
    bound: Optional[float]


def _substitute_word(substitution: Mapping[str, Word], word: Word) -> Word:
    expanded: List[Tuple[str, int]] = []
    for label, power in word:
        image = tuple(substitution[label])
        expanded.extend(image if power > 0 else invert_word(image))

    return tuple(expanded)


def _check_certificate(
        source: Presentation,
        substitution: Mapping[str, Word],
        relation: Word,
        factors: Sequence[ConjugateFactor]
) -> None:
    product: List[Tuple[str, int]] = []
    for conjugator, index, power in factors:
        r = source.relations[index]
        product.extend(tuple(conjugator) + (r if power > 0 else invert_word(r)) + invert_word(tuple(conjugator)))
    if reduce_word(product) != reduce_word(_substitute_word(substitution, relation)):
        raise PreconditionError(f"The conjugate decomposition given for {relation} does not reduce to its image.")


def substitute(
        phi: AlmostRep,
        substitution: Mapping[str, Word],
        target: Presentation,
        certificates: Optional[Mapping[int, Sequence[ConjugateFactor]]] = None
) -> SubstitutionReport:
    """
    Pulls an almost representation of <L | R> back along a substitution sending each generator of the target
    presentation <L' | R'> to a word over L. Conjugate decompositions of the substituted relations, given as lists of
    (conjugator word, relation index, power), are verified by free reduction and yield the bound
    max_r' (number of factors) * defect(phi).

    Parameters
    ----------
    phi : AlmostRep
        Almost representation of the source presentation.
    substitution : Mapping[str, Word]
        Word over the source generators for each target generator.
    target : Presentation
        Target presentation.
    certificates : Optional[Mapping[int, Sequence[ConjugateFactor]]]
        Conjugate decomposition per target relation index.

    Returns
    -------
    report : SubstitutionReport
        Substituted almost representation, its measured defect and the certified bound when every relation has a
        decomposition.
    """
    missing = set(target.generators) - set(substitution)
    if missing:
        raise MismatchError(f"No word given for the target generators {sorted(missing)}.")

    images = {label: evaluate_word(phi, tuple(substitution[label])) for label in target.generators}
    rep = AlmostRep(presentation=target, images=images)
    measured = defect(rep)

    bound = None
    if certificates is not None:
        for index, factors in certificates.items():
            _check_certificate(phi.presentation, substitution, target.relations[index], factors)
        if set(certificates) >= set(range(len(target.relations))):
            bound = max((len(f) for f in certificates.values()), default=0) * defect(phi)

    logger.debug(f"Substituted almost representation has defect {measured:.3g}.")

    return SubstitutionReport(rep=rep, defect=measured, bound=bound)


def substitution_closeness(
        phi: AlmostRep,
        psi: AlmostRep,
        substitution: Mapping[str, Word],
        target: Presentation
) -> float:
    """
    Closeness of two almost representations after substitution along the same map of presentations.

    Parameters
    ----------
    phi : AlmostRep
        First almost representation.
    psi : AlmostRep
        Second almost representation.
    substitution : Mapping[str, Word]
        Word over the source generators for each target generator.
    target : Presentation
        Target presentation.

    Returns
    -------
    distance : float
        Closeness of the substituted almost representations.
    """
    return closeness(substitute(phi, substitution, target).rep, substitute(psi, substitution, target).rep)


def rep_direct_sum(phi: AlmostRep, psi: AlmostRep) -> AlmostRep:
    """
    Blockwise direct sum of two almost representations of the same presentation.

    Parameters
    ----------
    phi : AlmostRep
        Upper block.
    psi : AlmostRep
        Lower block.

    Returns
    -------
    sum : AlmostRep
        Almost representation of rank phi.rank + psi.rank.
    """
    if phi.generators != psi.generators:
        raise MismatchError("Direct sums combine almost representations of the same presentation.")

    return AlmostRep(
        presentation=phi.presentation,
        images={g: linalg.block_diag(phi.images[g], psi.images[g]) for g in phi.generators}
    )


def embed(phi: AlmostRep, n: int) -> AlmostRep:
    """
    Corner embedding into rank n, each image padded by the identity.

    Parameters
    ----------
    phi : AlmostRep
        Almost representation.
    n : int
        Target rank, at least the rank of phi.

    Returns
    -------
    embedded : AlmostRep
        Almost representation of rank n.
    """
    if n < phi.rank:
        raise MismatchError(f"Cannot embed rank {phi.rank} into rank {n}.")

    return AlmostRep(
        presentation=phi.presentation,
        images={g: linalg.block_diag(phi.images[g], np.eye(n - phi.rank)) for g in phi.generators}
    )


def commutator_presentation() -> Presentation:
    """
    The presentation <u, v | u v u^-1 v^-1> of Z^2.

    Returns
    -------
    presentation : Presentation
        Two generators and one relation, without generator loops.
    """
    return Presentation(generators=("u", "v"), relations=((("u", 1), ("v", 1), ("u", -1), ("v", -1)),))


def clock_shift(k: int) -> AlmostRep:
    """
    Clock and shift pair on C^k: u the cyclic shift and v = diag(1, w, ..., w^(k-1)) with w = exp(2 pi i / k). They
    satisfy uv = w vu, so the commutator relation has defect 2 sin(pi / k).

    Parameters
    ----------
    k : int
        Rank, at least 2.

    Returns
    -------
    phi : AlmostRep
        Almost representation of Z^2.
    """
    if k < 2:
        raise PreconditionError(f"The clock and shift pair needs k >= 2, got {k}.")

    omega = np.exp(2j * np.pi / k)
    shift = np.roll(np.eye(k, dtype=complex), -1, axis=0)
    clock = np.diag(omega ** np.arange(k))

    return AlmostRep(presentation=commutator_presentation(), images={"u": shift, "v": clock})
