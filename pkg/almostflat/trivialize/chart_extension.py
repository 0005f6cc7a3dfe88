"""
    @file:              chart_extension.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the skeleton-by-skeleton extension of a family of per-simplex unitary
                        maps. The boundary values of each new simplex are read from its faces through a boundary
                        rule and the map is extended over the simplex with the unitary extension.
"""

from collections import defaultdict
import logging
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

import numpy as np

from ..bundle import CocycleBundle
from ..config import DEFAULT_SETTINGS, Settings
from ..errors import PreconditionError
from ..matrixcore import dagger
from ..sampled import ExtensionMethod, SampledUnitaryMap, unitary_extend
from ..simplicial import Simplex, Vertex, boundary_indices, lattice_index, lattice_points, tree_path
from ..transport import path_transport

logger = logging.getLogger(__name__)

BoundaryRule = Callable[[Mapping[Simplex, SampledUnitaryMap], Simplex, Simplex, List[int]], np.ndarray]


def boundary_sources(simplex: Simplex, depth: int) -> Dict[Simplex, Tuple[List[int], List[int]]]:
    """
    Groups the boundary lattice points of a simplex by the smallest face containing them.

    Parameters
    ----------
    simplex : Simplex
        Simplex of dimension at least one.
    depth : int
        Lattice depth.

    Returns
    -------
    sources : Dict[Simplex, Tuple[List[int], List[int]]]
        For each proper face, the positions of its points in the boundary list of the simplex and in the face's own
        lattice.
    """
    k = len(simplex) - 1
    lattice = lattice_points(k, depth)
    sources: Dict[Simplex, Tuple[List[int], List[int]]] = defaultdict(lambda: ([], []))
    for storage, full in enumerate(boundary_indices(k, depth)):
        p = lattice[full]
        face = tuple(v for v, c in zip(simplex, p) if c > 0)
        coords = tuple(c for c in p if c > 0)
        sources[face][0].append(storage)
        sources[face][1].append(lattice_index(len(face) - 1, depth)[coords])

    return dict(sources)


def extend_family(
        simplices: Iterable[Simplex],
        depth: int,
        family: Mapping[Simplex, SampledUnitaryMap],
        rule: BoundaryRule,
        methods: Sequence[ExtensionMethod] = (ExtensionMethod.SERIES,),
        settings: Settings = DEFAULT_SETTINGS
) -> Dict[Simplex, SampledUnitaryMap]:
    """
    Extends a family of maps over the given simplices in dimension-major, then lexicographic, order. The boundary value
    of a simplex at a point of the face tau is rule(family, tau, simplex, positions in the lattice of tau), family
    holding every map extended so far. Extension methods
    are tried in order, the last failure being raised.

    Parameters
    ----------
    simplices : Iterable[Simplex]
        Simplices of dimension at least one to extend over. Their faces must be in the family or in this list.
    depth : int
        Lattice depth.
    family : Mapping[Simplex, SampledUnitaryMap]
        Maps already known, on vertices at least.
    rule : BoundaryRule
        Boundary rule.
    methods : Sequence[ExtensionMethod]
        Extension methods to try.
    settings : Settings
        Extension thresholds.

    Returns
    -------
    family : Dict[Simplex, SampledUnitaryMap]
        The input family together with the new maps.
    """
    family = dict(family)
    for simplex in sorted(simplices, key=lambda s: (len(s), s)):
        values = None
        for face, (storage, positions) in boundary_sources(simplex, depth).items():
            face_values = rule(family, face, simplex, positions)
            if values is None:
                values = np.empty((len(boundary_indices(len(simplex) - 1, depth)),) + face_values.shape[1:], complex)
            values[storage] = face_values
        boundary = SampledUnitaryMap(simplex, depth, values, boundary_only=True)

        error = None
        for method in methods:
            try:
                family[simplex] = unitary_extend(boundary, method=method, settings=settings)
                break
            except PreconditionError as e:
                error = e
        else:
            raise error

    return family


def vertex_charts(
        bundle: CocycleBundle,
        tree: Iterable[Simplex],
        basepoint: Vertex
) -> Dict[Simplex, SampledUnitaryMap]:
    """
    Vertex charts of a global trivialization: the identity at the basepoint and the tree-path transport from the
    basepoint at every other vertex.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle over a connected complex.
    tree : Iterable[Simplex]
        Maximal tree.
    basepoint : Vertex
        Basepoint.

    Returns
    -------
    charts : Dict[Simplex, SampledUnitaryMap]
        Single-value maps on the vertices.
    """
    tree = list(tree)
    return {
        (v,): SampledUnitaryMap((v,), bundle.depth, path_transport(bundle, tree_path(tree, basepoint, v)).matrix[None])
        for v in bundle.base.vertices
    }


def trivialization_rule(bundle: CocycleBundle) -> BoundaryRule:
    """
    Boundary rule of global trivializations, x -> psi(tau, sigma)(x)* G_tau(x) on the face tau.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle.

    Returns
    -------
    rule : BoundaryRule
        Boundary rule.
    """
    def rule(charts, face: Simplex, simplex: Simplex, positions: List[int]) -> np.ndarray:
        return dagger(bundle.transitions[(face, simplex)].values[positions]) @ charts[face].values[positions]

    return rule


def global_charts(
        bundle: CocycleBundle,
        tree: Iterable[Simplex],
        basepoint: Vertex,
        methods: Sequence[ExtensionMethod] = (ExtensionMethod.SERIES,),
        settings: Settings = DEFAULT_SETTINGS
) -> Dict[Simplex, SampledUnitaryMap]:
    """
    Charts of a global trivialization: tree-transported vertex charts extended over every simplex of positive dimension.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle over a connected complex.
    tree : Iterable[Simplex]
        Maximal tree.
    basepoint : Vertex
        Basepoint.
    methods : Sequence[ExtensionMethod]
        Extension methods to try.
    settings : Settings
        Extension thresholds.

    Returns
    -------
    charts : Dict[Simplex, SampledUnitaryMap]
        One chart per simplex.
    """
    simplices = [s for s in bundle.base.simplices if len(s) > 1]

    return extend_family(
        simplices, bundle.depth, vertex_charts(bundle, tree, basepoint), trivialization_rule(bundle), methods, settings
    )
