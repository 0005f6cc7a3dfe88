"""
    @file:              complex.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the Complex class, a finite abstract simplicial complex closed under
                        faces with optional orientation data on its top simplices, and the operations building
                        complexes from faces: face closure, skeleta, subcomplexes, barycentric subdivision with its
                        barycenter map and last vertex map, open stars and simplicial maps.
"""

from functools import cached_property
from itertools import combinations
import logging
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from attrs import field, frozen
import networkx as nx
import numpy as np

from ..errors import ComplexError

logger = logging.getLogger(__name__)

Vertex = Hashable
Simplex = Tuple[Vertex, ...]


def simplex_key(simplex: Simplex) -> Tuple[int, Simplex]:
    """
    Sort key of simplices: dimension first, then lexicographic.

    Parameters
    ----------
    simplex : Simplex
        Sorted vertex tuple.

    Returns
    -------
    key : Tuple[int, Simplex]
        Sort key.
    """
    return len(simplex), simplex


def proper_faces(simplex: Simplex) -> List[Simplex]:
    """
    Non-empty proper faces of a simplex, dimension-major then lexicographic.

    Parameters
    ----------
    simplex : Simplex
        Sorted vertex tuple.

    Returns
    -------
    faces : List[Simplex]
        Proper faces.
    """
    return [face for size in range(1, len(simplex)) for face in combinations(simplex, size)]


def permutation_sign(order: Sequence[Vertex]) -> int:
    """
    Sign of the permutation taking the sorted order of the given vertices to the given order.

    Parameters
    ----------
    order : Sequence[Vertex]
        Distinct vertices.

    Returns
    -------
    sign : int
        +1 or -1.
    """
    ranks = [sorted(order).index(v) for v in order]
    inversions = sum(1 for i, j in combinations(range(len(ranks)), 2) if ranks[i] > ranks[j])

    return -1 if inversions % 2 else 1


@frozen(slots=False)
class Complex:
    """
    A finite abstract simplicial complex. Simplices are sorted vertex tuples, stored dimension-major then
    lexicographically. The optional orientation maps top simplices to +1 when their sorted vertex order is positively
    oriented and to -1 otherwise.
    """
    vertices: Tuple[Vertex, ...]
    simplices: Tuple[Simplex, ...]
    orientation: Optional[Tuple[Tuple[Simplex, int], ...]] = field(default=None)

    def __attrs_post_init__(self):
        present = set(self.simplices)
        for simplex in self.simplices:
            for face in proper_faces(simplex):
                if face not in present:
                    raise ComplexError(f"Simplex {simplex} has face {face} missing from the complex.")
        for v in self.vertices:
            if (v,) not in present:
                raise ComplexError(f"Vertex {v} is not a simplex of the complex.")
        if self.orientation is not None:
            for simplex, sign in self.orientation:
                if simplex not in present or sign not in (1, -1):
                    raise ComplexError(f"Invalid orientation entry ({simplex}, {sign}).")
            for edge, signs in self._induced_edge_orientations().items():
                if len(signs) > 2 or (len(signs) == 2 and signs[0] == signs[1]):
                    raise ComplexError(f"Edge {edge} borders oriented triangles inducing the orientations {signs}.")

    def _induced_edge_orientations(self) -> Dict[Simplex, List[int]]:
        # +1 when an oriented triangle runs along the edge in increasing vertex order
        induced: Dict[Simplex, List[int]] = {}
        for simplex, sign in self.orientation or ():
            if len(simplex) != 3:
                continue
            a, b, c = simplex if sign == 1 else (simplex[1], simplex[0], simplex[2])
            for x, y in ((a, b), (b, c), (c, a)):
                induced.setdefault(tuple(sorted((x, y))), []).append(1 if x < y else -1)

        return induced

    def __contains__(self, simplex: Iterable[Vertex]) -> bool:
        return tuple(sorted(simplex)) in self.simplex_set

    def __len__(self) -> int:
        return len(self.simplices)

    @cached_property
    def simplex_set(self) -> frozenset:
        """
        Simplices as a set.

        Returns
        -------
        simplices : frozenset
            Set of sorted vertex tuples.
        """
        return frozenset(self.simplices)

    @property
    def dimension(self) -> int:
        """
        Dimension of the complex, -1 when empty.

        Returns
        -------
        dimension : int
            Largest simplex dimension.
        """
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def simplices_of_dimension(self, k: int) -> List[Simplex]:
        """
        Simplices of dimension k in lexicographic order.

        Parameters
        ----------
        k : int
            Dimension.

        Returns
        -------
        simplices : List[Simplex]
            The k-simplices.
        """
        return [s for s in self.simplices if len(s) == k + 1]

    @property
    def edges(self) -> List[Simplex]:
        """
        The 1-simplices.

        Returns
        -------
        edges : List[Simplex]
            Edges in lexicographic order.
        """
        return self.simplices_of_dimension(1)

    def faces_in(self, simplex: Simplex) -> List[Simplex]:
        """
        Every face of a simplex of the complex, itself included.

        Parameters
        ----------
        simplex : Simplex
            A simplex of the complex.

        Returns
        -------
        faces : List[Simplex]
            Faces, dimension-major.
        """
        simplex = self.require(simplex)
        return proper_faces(simplex) + [simplex]

    def require(self, simplex: Iterable[Vertex]) -> Simplex:
        """
        Sorted form of a simplex, raising if it is not in the complex.

        Parameters
        ----------
        simplex : Iterable[Vertex]
            Vertices of a simplex.

        Returns
        -------
        simplex : Simplex
            Sorted vertex tuple.
        """
        simplex = tuple(sorted(simplex))
        if simplex not in self.simplex_set:
            raise ComplexError(f"{simplex} is not a simplex of the complex.")

        return simplex

    def euler_characteristic(self) -> int:
        """
        Alternating count of simplices.

        Returns
        -------
        chi : int
            Euler characteristic.
        """
        return sum((-1) ** (len(s) - 1) for s in self.simplices)

    def orientation_of(self, simplex: Simplex) -> Optional[int]:
        """
        Orientation sign of a top simplex, None without orientation data.

        Parameters
        ----------
        simplex : Simplex
            A top simplex.

        Returns
        -------
        sign : Optional[int]
            +1, -1 or None.
        """
        if self.orientation is None:
            return None

        return dict(self.orientation).get(tuple(sorted(simplex)))

    def oriented_vertices(self, simplex: Simplex) -> Simplex:
        """
        Vertices of a simplex listed in its positive orientation (sorted order when no orientation is stored).

        Parameters
        ----------
        simplex : Simplex
            A simplex of the complex.

        Returns
        -------
        vertices : Simplex
            Positively ordered vertices.
        """
        simplex = self.require(simplex)
        if self.orientation_of(simplex) == -1:
            return (simplex[1], simplex[0]) + simplex[2:]

        return simplex

    def is_closed_oriented_surface(self) -> bool:
        """
        Whether the complex is a closed oriented surface: pure of dimension 2, oriented, every edge in exactly two
        triangles inducing opposite orientations on it.

        Returns
        -------
        surface : bool
            True for closed oriented surfaces.
        """
        if self.dimension != 2 or self.orientation is None:
            return False

        triangles = self.simplices_of_dimension(2)
        if any(self.orientation_of(t) is None for t in triangles):
            return False

        induced = self._induced_edge_orientations()

        return all(len(induced.get(e, ())) == 2 for e in self.edges)

    def graph(self) -> nx.Graph:
        """
        The 1-skeleton as a networkx graph. Nodes and edges are inserted in sorted order, so neighbor iteration is
        sorted as well.

        Returns
        -------
        graph : nx.Graph
            Vertex-edge graph.
        """
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)

        return graph

    def is_connected(self) -> bool:
        """
        Whether the 1-skeleton is connected.

        Returns
        -------
        connected : bool
            True if connected.
        """
        return len(self.vertices) > 0 and nx.is_connected(self.graph())

    def subcomplex(self, simplices: Iterable[Iterable[Vertex]]) -> "Complex":
        """
        The smallest subcomplex containing the given simplices of this complex.

        Parameters
        ----------
        simplices : Iterable[Iterable[Vertex]]
            Simplices of the complex.

        Returns
        -------
        subcomplex : Complex
            Face closure, with the orientation restricted to the kept simplices.
        """
        return build_complex([self.require(s) for s in simplices], orientation=self.orientation)

    def full_subcomplex(self, vertices: Iterable[Vertex]) -> "Complex":
        """
        Subcomplex of all simplices spanned by the given vertices.

        Parameters
        ----------
        vertices : Iterable[Vertex]
            Vertex subset.

        Returns
        -------
        subcomplex : Complex
            Full subcomplex.
        """
        kept = set(vertices)
        return build_complex([s for s in self.simplices if set(s) <= kept], orientation=self.orientation)


def build_complex(
        faces: Iterable[Iterable[Vertex]],
        vertices: Optional[Iterable[Vertex]] = None,
        orientation: Optional[Iterable[Tuple[Simplex, int]]] = None
) -> Complex:
    """
    Face closure of a list of faces.

    Parameters
    ----------
    faces : Iterable[Iterable[Vertex]]
        Non-empty vertex subsets.
    vertices : Optional[Iterable[Vertex]]
        Declared vertices. Faces may only use declared vertices; declared vertices outside every face become
        0-simplices. Defaults to the vertices of the faces.
    orientation : Optional[Iterable[Tuple[Simplex, int]]]
        Orientation signs of top simplices relative to their sorted order. Entries on simplices absent from the
        closure are dropped.

    Returns
    -------
    complex : Complex
        Closed complex with deterministic simplex order.
    """
    closure = set()
    for face in faces:
        face = list(face)
        if not face:
            raise ComplexError("Faces must be non-empty.")
        if len(set(face)) != len(face):
            raise ComplexError(f"Face {face} repeats a vertex.")
        face = tuple(sorted(face))
        for size in range(1, len(face) + 1):
            closure.update(combinations(face, size))

    used = {s[0] for s in closure if len(s) == 1}
    if vertices is not None:
        declared = set(vertices)
        undeclared = used - declared
        if undeclared:
            raise ComplexError(f"Faces use undeclared vertices {sorted(undeclared)}.")
        closure.update((v,) for v in declared)
        used = declared

    kept_orientation = None
    if orientation is not None:
        kept_orientation = tuple(sorted(
            ((tuple(sorted(s)), int(sign)) for s, sign in orientation if tuple(sorted(s)) in closure),
            key=lambda item: simplex_key(item[0])
        ))

    return Complex(
        vertices=tuple(sorted(used)),
        simplices=tuple(sorted(closure, key=simplex_key)),
        orientation=kept_orientation
    )


def skeleton(x: Complex, k: int) -> Complex:
    """
    The k-skeleton: same vertices, simplices of dimension at most k.

    Parameters
    ----------
    x : Complex
        Complex.
    k : int
        Non-negative dimension.

    Returns
    -------
    skeleton : Complex
        The k-skeleton.
    """
    if k < 0:
        raise ComplexError(f"Skeleton dimension must be non-negative, got {k}.")

    simplices = tuple(s for s in x.simplices if len(s) <= k + 1)
    orientation = None
    if x.orientation is not None:
        orientation = tuple((s, sign) for s, sign in x.orientation if len(s) <= k + 1) or None

    return Complex(vertices=x.vertices, simplices=simplices, orientation=orientation)


class BarycenterMap:
    """
    The affine homeomorphism from the barycentric subdivision S(X) to X. A vertex sigma of S(X) goes to the barycenter
    of sigma and simplices of S(X) are mapped affinely into the union of their vertices.
    """

    def __init__(
            self,
            base: Complex
    ):
        """
        Constructor of the class BarycenterMap.

        Parameters
        ----------
        base : Complex
            The complex X being subdivided.
        """
        self._base = base

    @property
    def base(self) -> Complex:
        """
        Subdivided complex.

        Returns
        -------
        base : Complex
            The complex X.
        """
        return self._base

    def __call__(
            self,
            chain: Simplex,
            coords: Sequence[float]
    ) -> Tuple[Simplex, np.ndarray]:
        """
        Image of a point of |S(X)|.

        Parameters
        ----------
        chain : Simplex
            Simplex of S(X), a sorted tuple of simplices of X forming a chain.
        coords : Sequence[float]
            Barycentric weights on the chain's vertices (any common scale).

        Returns
        -------
        (simplex, weights) : Tuple[Simplex, np.ndarray]
            The largest simplex of the chain and the barycentric weights of the image point on its vertices, with the
            same total as coords.
        """
        top = max(chain, key=len)
        weights = np.zeros(len(top))
        for member, weight in zip(chain, coords):
            for v in member:
                weights[top.index(v)] += weight / len(member)

        return top, weights

    @staticmethod
    def inverse(
            simplex: Simplex,
            coords: Sequence[float]
    ) -> Tuple[Simplex, np.ndarray]:
        """
        Preimage of a point of |simplex|: the chain of S(X) containing it and the weights on that chain.

        Parameters
        ----------
        simplex : Simplex
            Simplex of X.
        coords : Sequence[float]
            Barycentric weights on the simplex's vertices.

        Returns
        -------
        (chain, weights) : Tuple[Simplex, np.ndarray]
            Sorted chain of faces of the simplex and weights on it, with the same total as coords.
        """
        coords = np.asarray(coords, dtype=float)
        order = sorted((i for i in range(len(simplex)) if coords[i] > 0), key=lambda i: (-coords[i], i))
        lambdas = [coords[i] for i in order] + [0.0]
        members = [tuple(sorted(simplex[i] for i in order[:j + 1])) for j in range(len(order))]
        mus = {members[j]: (j + 1) * (lambdas[j] - lambdas[j + 1]) for j in range(len(order))}
        chain = tuple(sorted(members))

        return chain, np.array([mus[member] for member in chain])


def barycentric_subdivide(x: Complex) -> Tuple[Complex, BarycenterMap]:
    """
    Barycentric subdivision S(X): vertices are the simplices of X, simplices are the chains of simplices of X.

    Parameters
    ----------
    x : Complex
        Complex to subdivide.

    Returns
    -------
    (subdivision, barycenter_map) : Tuple[Complex, BarycenterMap]
        S(X) and the affine homeomorphism |S(X)| -> |X|.
    """
    supersets: Dict[Simplex, List[Simplex]] = {s: [] for s in x.simplices}
    for s in x.simplices:
        for face in proper_faces(s):
            supersets[face].append(s)

    chains = []
    stack = [(s,) for s in x.simplices]
    while stack:
        chain = stack.pop()
        chains.append(tuple(sorted(chain)))
        for bigger in supersets[chain[-1]]:
            stack.append(chain + (bigger,))

    subdivision = Complex(
        vertices=tuple(sorted(x.simplices)),
        simplices=tuple(sorted(chains, key=simplex_key)),
        orientation=_subdivided_orientation(x)
    )
    logger.debug(f"Subdivided a complex with {len(x)} simplices into {len(subdivision)} simplices.")

    return subdivision, BarycenterMap(x)


def _subdivided_orientation(x: Complex) -> Optional[Tuple[Tuple[Simplex, int], ...]]:
    if x.orientation is None:
        return None

    entries = []
    barycenter_map = BarycenterMap(x)
    for top, _ in x.orientation:
        positive = x.oriented_vertices(top)
        frame = np.eye(len(top))[[top.index(v) for v in positive]]
        for chain in _flags(top):
            corners = np.array([barycenter_map(chain, np.eye(len(chain))[i])[1] for i in range(len(chain))])
            # orientation of the affine image compared to the positive frame of the top simplex
            sign = np.sign(np.linalg.det((corners[1:] - corners[0]) @ np.linalg.pinv(frame[1:] - frame[0])))
            entries.append((chain, int(sign)))

    return tuple(sorted(entries, key=lambda item: simplex_key(item[0])))


def _flags(top: Simplex) -> List[Simplex]:
    flags = []
    for order in _permutations(top):
        flags.append(tuple(sorted(tuple(sorted(order[:j + 1])) for j in range(len(order)))))

    return flags


def _permutations(top: Simplex) -> List[Tuple[Vertex, ...]]:
    if len(top) <= 1:
        return [tuple(top)]

    return [(v,) + rest for v in top for rest in _permutations(tuple(u for u in top if u != v))]


def star_subcomplex(x: Complex, sigma: Simplex) -> Complex:
    """
    Subcomplex of S(X) spanned by the simplices of X meeting sigma, a neighborhood of |sigma| retracting onto it.

    Parameters
    ----------
    x : Complex
        Complex.
    sigma : Simplex
        A simplex of X.

    Returns
    -------
    star : Complex
        Full subcomplex of S(X) on {rho in X : rho and sigma intersect}.
    """
    sigma = x.require(sigma)
    subdivision, _ = barycentric_subdivide(x)
    meeting = [rho for rho in x.simplices if set(rho) & set(sigma)]

    return subdivision.full_subcomplex(meeting)


class SimplicialMap:
    """
    A vertex map between complexes carrying simplices to simplices.
    """

    def __init__(
            self,
            source: Complex,
            target: Complex,
            vertex_map: Mapping[Vertex, Vertex]
    ):
        """
        Constructor of the class SimplicialMap.

        Parameters
        ----------
        source : Complex
            Domain complex.
        target : Complex
            Codomain complex.
        vertex_map : Mapping[Vertex, Vertex]
            Image of every source vertex.
        """
        missing = [v for v in source.vertices if v not in vertex_map]
        if missing:
            raise ComplexError(f"Vertex map is undefined on {missing}.")

        self._source = source
        self._target = target
        self._vertex_map = dict(vertex_map)

        for simplex in source.simplices:
            image = self.image(simplex)
            if image not in target.simplex_set:
                raise ComplexError(f"Vertex map is not simplicial: {simplex} goes to {image}.")

    @property
    def source(self) -> Complex:
        """
        Domain complex.

        Returns
        -------
        source : Complex
            Domain.
        """
        return self._source

    @property
    def target(self) -> Complex:
        """
        Codomain complex.

        Returns
        -------
        target : Complex
            Codomain.
        """
        return self._target

    def __call__(self, v: Vertex) -> Vertex:
        return self._vertex_map[v]

    def image(self, simplex: Simplex) -> Simplex:
        """
        Image simplex (sorted, duplicates collapsed).

        Parameters
        ----------
        simplex : Simplex
            Source simplex.

        Returns
        -------
        image : Simplex
            Target simplex.
        """
        return tuple(sorted({self._vertex_map[v] for v in simplex}))

    def push_coords(
            self,
            simplex: Simplex,
            coords: Sequence[int]
    ) -> Tuple[int, ...]:
        """
        Image of a lattice point: coordinates of collapsed vertices add up.

        Parameters
        ----------
        simplex : Simplex
            Source simplex.
        coords : Sequence[int]
            Barycentric numerators on the source simplex.

        Returns
        -------
        coords : Tuple[int, ...]
            Barycentric numerators on the image simplex.
        """
        image = self.image(simplex)
        pushed = [0] * len(image)
        for v, c in zip(simplex, coords):
            pushed[image.index(self._vertex_map[v])] += c

        return tuple(pushed)

    def is_nondegenerate(self) -> bool:
        """
        Whether no simplex is collapsed.

        Returns
        -------
        nondegenerate : bool
            True if injective on every simplex.
        """
        return all(len(self.image(s)) == len(s) for s in self._source.simplices)

    def compose(self, other: "SimplicialMap") -> "SimplicialMap":
        """
        The composite self after other.

        Parameters
        ----------
        other : SimplicialMap
            Map whose target is the source of self.

        Returns
        -------
        composite : SimplicialMap
            self o other.
        """
        return SimplicialMap(
            source=other.source,
            target=self._target,
            vertex_map={v: self._vertex_map[other(v)] for v in other.source.vertices}
        )

    @classmethod
    def identity(cls, x: Complex) -> "SimplicialMap":
        """
        Identity map of a complex.

        Parameters
        ----------
        x : Complex
            Complex.

        Returns
        -------
        identity : SimplicialMap
            Identity.
        """
        return cls(source=x, target=x, vertex_map={v: v for v in x.vertices})


def last_vertex_map(x: Complex) -> SimplicialMap:
    """
    The last vertex map S(X) -> X sending the barycenter of sigma to the largest vertex of sigma. It is a simplicial
    approximation of the barycenter map, so pulling a bundle back along it is a second way to move the bundle to the
    subdivision.

    Parameters
    ----------
    x : Complex
        Complex.

    Returns
    -------
    last_vertex : SimplicialMap
        Map from the barycentric subdivision of x to x.
    """
    subdivision, _ = barycentric_subdivide(x)

    return SimplicialMap(source=subdivision, target=x, vertex_map={sigma: max(sigma) for sigma in x.simplices})
