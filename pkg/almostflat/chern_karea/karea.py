"""
    @file:              karea.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the (c, eps)-flatness check of a bundle on a weighted family of loops and
                        the KAreaProbe, a sequence of ever flatter bundles with a common non-zero Chern number.
"""

import logging
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from attrs import field, frozen

from ..bundle import CocycleBundle, flatness_audit
from ..config import DEFAULT_SETTINGS, Settings
from ..fixtures import torus_complex, torus_substitution
from ..quasirep import clock_shift, rep_to_bundle, substitute
from ..simplicial import SimplicialPath, presentation_from_tree
from ..transport import loop_defect
from .chern import chern_number, face_loops

logger = logging.getLogger(__name__)

WeightedLoop = Tuple[SimplicialPath, float]
TORUS_TREE = tuple((0, v) for v in range(1, 7))


class LoopCheck(NamedTuple):
    loop: SimplicialPath
    defect: float
    allowed: float


class CFlatReport(NamedTuple):
    passed: bool
    rows: List[LoopCheck]
    failing: Optional[SimplicialPath]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "failing": list(self.failing.vertices) if self.failing is not None else None,
            "loops": [{"loop": list(r.loop.vertices), "defect": r.defect, "allowed": r.allowed} for r in self.rows]
        }


def c_flat_check(bundle: CocycleBundle, loops: Iterable[WeightedLoop], eps: float, tol: float = 1e-9) -> CFlatReport:
    """
    Checks ||T_loop - id|| <= c(loop) eps on every weighted loop.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle.
    loops : Iterable[WeightedLoop]
        Closed paths with their weights c.
    eps : float
        Flatness parameter.
    tol : float
        Slack on each comparison.

    Returns
    -------
    report : CFlatReport
        Per-loop table and the first failing loop.
    """
    rows = [LoopCheck(loop, loop_defect(bundle, loop), weight * eps) for loop, weight in loops]
    failing = next((row.loop for row in rows if row.defect > row.allowed + tol), None)

    return CFlatReport(passed=failing is None, rows=rows, failing=failing)


@frozen
class ProbeTerm:
    bundle: CocycleBundle = field(eq=False)
    epsilon: float
    chern: int


@frozen
class KAreaProbe:
    """
    Bundles over one complex with their flatness and Chern number, and the weighted loops (c, eps)-flatness is checked
    on.
    """
    terms: Tuple[ProbeTerm, ...] = field(converter=tuple)
    loops: Tuple[WeightedLoop, ...] = field(converter=tuple)


class ProbeVerdict(NamedTuple):
    witness: bool
    depth: int
    chern: Optional[int]
    rows: List[dict]

    def to_dict(self) -> dict:
        return {"witness": self.witness, "depth": self.depth, "chern": self.chern, "terms": self.rows}


def probe_verdict(probe: KAreaProbe) -> ProbeVerdict:
    """
    The probe witnesses infinite K-area to its length when the Chern numbers agree and are non-zero, the flatness
    strictly decreases and every term is (c, eps)-flat on the loops.

    Parameters
    ----------
    probe : KAreaProbe
        Probe.

    Returns
    -------
    verdict : ProbeVerdict
        Verdict and one row (eps, chern, pass) per term.
    """
    rows = []
    for term in probe.terms:
        report = c_flat_check(term.bundle, probe.loops, term.epsilon)
        rows.append({"epsilon": term.epsilon, "chern": term.chern, "pass": report.passed})

    cherns = {term.chern for term in probe.terms}
    chern = next(iter(cherns)) if len(cherns) == 1 else None
    decreasing = all(b.epsilon < a.epsilon for a, b in zip(probe.terms, probe.terms[1:]))
    witness = bool(probe.terms) and chern not in (None, 0) and decreasing and all(row["pass"] for row in rows)
    logger.info(f"Probe of {len(probe.terms)} terms: witness = {witness}.")

    return ProbeVerdict(witness=witness, depth=len(probe.terms) if witness else 0, chern=chern, rows=rows)


def clock_shift_torus_bundle(
        k: int,
        depth: int = DEFAULT_SETTINGS.lattice_depth,
        settings: Settings = DEFAULT_SETTINGS
) -> CocycleBundle:
    """
    Bundle over the 7-vertex torus obtained from the clock and shift pair of rank k, each generator of the edge-path
    presentation of the star tree at 0 being sent to v^a u^b for its class (a, b).

    Parameters
    ----------
    k : int
        Rank.
    depth : int
        Lattice depth.
    settings : Settings
        Extension thresholds.

    Returns
    -------
    bundle : CocycleBundle
        Torus bundle of Chern number 1.
    """
    torus = torus_complex()
    presentation = presentation_from_tree(torus, tree=frozenset(TORUS_TREE), basepoint=0)
    phi = substitute(clock_shift(k), torus_substitution(presentation), presentation).rep

    return rep_to_bundle(phi, torus, TORUS_TREE, presentation, depth=depth, settings=settings)


def clock_shift_probe(
        ks: Sequence[int],
        depth: int = DEFAULT_SETTINGS.lattice_depth,
        settings: Settings = DEFAULT_SETTINGS
) -> KAreaProbe:
    """
    Probe made of the clock and shift torus bundles of the given ranks, checked on the face loops with weight c(1).

    Parameters
    ----------
    ks : Sequence[int]
        Ranks, increasing.
    depth : int
        Lattice depth.
    settings : Settings
        Thresholds.

    Returns
    -------
    probe : KAreaProbe
        Probe over the torus.
    """
    terms = []
    for k in ks:
        bundle = clock_shift_torus_bundle(k, depth=depth, settings=settings)
        terms.append(ProbeTerm(bundle, flatness_audit(bundle).epsilon, chern_number(bundle, settings=settings)))
        logger.debug(f"Clock and shift torus bundle k = {k}: flatness {terms[-1].epsilon:.4g}.")

    return KAreaProbe(terms=terms, loops=face_loops(torus_complex()))
