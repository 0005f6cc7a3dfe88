"""
    @file:              paths.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains simplicial paths, maximal trees and contraction witnesses. A contraction
                        witness is a list of elementary moves turning a loop into the constant loop; backtrack moves are
                        free and the number of triangle moves bounds the homotopical complexity of the loop.
"""

from enum import Enum
import heapq
import logging
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

from attrs import field, frozen
import networkx as nx

from ..errors import ComplexError
from .complex import Complex, Simplex, Vertex

logger = logging.getLogger(__name__)

Edge = Tuple[Vertex, Vertex]


@frozen
class SimplicialPath:
    """
    A tuple of vertices in which consecutive vertices span an edge or repeat.
    """
    vertices: Tuple[Vertex, ...] = field(converter=tuple)

    def __attrs_post_init__(self):
        if not self.vertices:
            raise ComplexError("A simplicial path has at least one vertex.")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def start(self) -> Vertex:
        """
        First vertex.

        Returns
        -------
        start : Vertex
            v_0.
        """
        return self.vertices[0]

    @property
    def end(self) -> Vertex:
        """
        Last vertex.

        Returns
        -------
        end : Vertex
            v_k.
        """
        return self.vertices[-1]

    @property
    def is_closed(self) -> bool:
        """
        Whether the path ends where it starts.

        Returns
        -------
        closed : bool
            True for loops.
        """
        return self.start == self.end

    def steps(self) -> List[Edge]:
        """
        Consecutive vertex pairs, repeated vertices skipped.

        Returns
        -------
        steps : List[Edge]
            Directed steps (a, b) with a != b.
        """
        return [(a, b) for a, b in zip(self.vertices, self.vertices[1:]) if a != b]

    def validate(self, x: Complex) -> "SimplicialPath":
        """
        Checks that every step is an edge of a complex.

        Parameters
        ----------
        x : Complex
            Complex containing the path.

        Returns
        -------
        path : SimplicialPath
            The path itself.
        """
        if (self.start,) not in x.simplex_set:
            raise ComplexError(f"Path starts at {self.start}, which is not a vertex.")
        for a, b in self.steps():
            if tuple(sorted((a, b))) not in x.simplex_set:
                raise ComplexError(f"Path step ({a}, {b}) is not an edge.")

        return self

    def concat(self, other: "SimplicialPath") -> "SimplicialPath":
        """
        Concatenation self * other, running self first.

        Parameters
        ----------
        other : SimplicialPath
            Path starting where self ends.

        Returns
        -------
        path : SimplicialPath
            Concatenated path.
        """
        if other.start != self.end:
            raise ComplexError(f"Cannot concatenate a path ending at {self.end} with one starting at {other.start}.")

        return SimplicialPath(self.vertices + other.vertices[1:])

    def reversed(self) -> "SimplicialPath":
        """
        Path run backwards.

        Returns
        -------
        path : SimplicialPath
            Reversed path.
        """
        return SimplicialPath(self.vertices[::-1])

    def reduced(self) -> "SimplicialPath":
        """
        Path with repeated consecutive vertices collapsed.

        Returns
        -------
        path : SimplicialPath
            Path without stutters.
        """
        kept = [self.vertices[0]]
        for v in self.vertices[1:]:
            if v != kept[-1]:
                kept.append(v)

        return SimplicialPath(kept)


class MoveKind(Enum):
    BACKTRACK_INSERT = "backtrack_insert"
    BACKTRACK_DELETE = "backtrack_delete"
    TRIANGLE_INSERT = "triangle_insert"
    TRIANGLE_DELETE = "triangle_delete"


@frozen
class Move:
    """
    An elementary loop move. Backtracks replace the vertex at `position` by (v0, v1, v0) or the reverse; triangle moves
    replace it by (v0, v1, v2, v0) or the reverse.
    """
    kind: MoveKind = field(converter=MoveKind)
    vertices: Tuple[Vertex, ...] = field(converter=tuple)
    position: int = field(default=0)

    @property
    def is_triangle(self) -> bool:
        """
        Whether this move counts towards complexity.

        Returns
        -------
        triangle : bool
            True for triangle moves.
        """
        return self.kind in (MoveKind.TRIANGLE_INSERT, MoveKind.TRIANGLE_DELETE)

    @property
    def pattern(self) -> Tuple[Vertex, ...]:
        """
        The closed vertex pattern the move inserts or deletes.

        Returns
        -------
        pattern : Tuple[Vertex, ...]
            (v0, v1, v0) or (v0, v1, v2, v0).
        """
        return self.vertices + (self.vertices[0],)

    def apply(self, loop: Tuple[Vertex, ...], x: Complex) -> Tuple[Vertex, ...]:
        """
        Applies the move to a loop.

        Parameters
        ----------
        loop : Tuple[Vertex, ...]
            Loop vertices.
        x : Complex
            Complex in which the move happens.

        Returns
        -------
        loop : Tuple[Vertex, ...]
            Moved loop.
        """
        expected = 2 if self.kind in (MoveKind.BACKTRACK_INSERT, MoveKind.BACKTRACK_DELETE) else 3
        if len(self.vertices) != expected or len(set(self.vertices)) != expected:
            raise ComplexError(f"Move {self.kind.value} needs {expected} distinct vertices, got {self.vertices}.")
        if tuple(sorted(self.vertices)) not in x.simplex_set:
            raise ComplexError(f"Move {self.kind.value} cites {self.vertices}, which is not a simplex.")

        i = self.position
        if self.kind in (MoveKind.BACKTRACK_INSERT, MoveKind.TRIANGLE_INSERT):
            if not 0 <= i < len(loop) or loop[i] != self.vertices[0]:
                raise ComplexError(f"Cannot insert {self.pattern} at position {i} of {loop}.")
            return loop[:i] + self.pattern + loop[i + 1:]

        width = len(self.pattern)
        if i < 0 or loop[i:i + width] != self.pattern:
            raise ComplexError(f"Cannot delete {self.pattern} at position {i} of {loop}.")

        return loop[:i + 1] + loop[i + width:]


@frozen
class ContractionWitness:
    """
    A sequence of moves contracting a loop to its basepoint.
    """
    moves: Tuple[Move, ...] = field(converter=tuple, factory=tuple)

    @property
    def complexity(self) -> int:
        """
        Number of triangle moves, an upper bound on the homotopical complexity of the witnessed loop.

        Returns
        -------
        complexity : int
            Triangle move count.
        """
        return sum(1 for move in self.moves if move.is_triangle)

    def __add__(self, other: "ContractionWitness") -> "ContractionWitness":
        return ContractionWitness(self.moves + other.moves)


class WitnessReport(NamedTuple):
    valid: bool
    complexity: int
    final_loop: Tuple[Vertex, ...]


def apply_witness(loop: SimplicialPath, witness: ContractionWitness, x: Complex) -> WitnessReport:
    """
    Replays a witness on a loop. Repeated consecutive vertices are collapsed first, they do not affect transport.

    Parameters
    ----------
    loop : SimplicialPath
        Closed path in x.
    witness : ContractionWitness
        Moves to replay.
    x : Complex
        Complex in which the loop lives.

    Returns
    -------
    report : WitnessReport
        Valid if the moves end on the constant loop, with the triangle move count.
    """
    if not loop.is_closed:
        raise ComplexError(f"Witnessed path {loop.vertices} is not closed.")
    loop.validate(x)

    current = loop.reduced().vertices
    for move in witness.moves:
        current = move.apply(current, x)

    return WitnessReport(valid=len(current) == 1, complexity=witness.complexity, final_loop=current)


def maximal_tree(x: Complex) -> FrozenSet[Simplex]:
    """
    Breadth-first spanning tree from the least vertex, neighbors visited in sorted order.

    Parameters
    ----------
    x : Complex
        Connected complex.

    Returns
    -------
    tree : FrozenSet[Simplex]
        Tree edges as sorted vertex pairs.
    """
    if not x.is_connected():
        raise ComplexError("A maximal tree needs a connected complex.")

    tree = frozenset(tuple(sorted(e)) for e in nx.bfs_edges(x.graph(), x.vertices[0], sort_neighbors=sorted))
    logger.debug(f"Maximal tree with {len(tree)} edges on {len(x.vertices)} vertices.")

    return tree


def tree_path(tree: Iterable[Simplex], a: Vertex, b: Vertex) -> SimplicialPath:
    """
    Unique path from a to b inside a tree.

    Parameters
    ----------
    tree : Iterable[Simplex]
        Tree edges.
    a : Vertex
        Start.
    b : Vertex
        End.

    Returns
    -------
    path : SimplicialPath
        Tree path.
    """
    graph = nx.Graph()
    graph.add_nodes_from((a, b))
    graph.add_edges_from(tree)
    try:
        return SimplicialPath(nx.shortest_path(graph, a, b))
    except nx.NetworkXNoPath as e:
        raise ComplexError(f"No tree path from {a} to {b}.") from e


def free_reduce(loop: Tuple[Vertex, ...]) -> Tuple[Tuple[Vertex, ...], List[Move]]:
    """
    Removes backtracks (a, b, a) until none is left.

    Parameters
    ----------
    loop : Tuple[Vertex, ...]
        Loop vertices without stutters.

    Returns
    -------
    (loop, moves) : Tuple[Tuple[Vertex, ...], List[Move]]
        Reduced loop and the backtrack deletions performed, in order.
    """
    stack: List[Vertex] = []
    moves = []
    for v in loop:
        if len(stack) >= 2 and stack[-2] == v:
            moves.append(Move(MoveKind.BACKTRACK_DELETE, (v, stack[-1]), len(stack) - 2))
            stack.pop()
        else:
            stack.append(v)

    return tuple(stack), moves


def contraction_witness_in_tree(loop: SimplicialPath, x: Complex) -> ContractionWitness:
    """
    Witness made of backtrack deletions only, for loops contained in a tree.

    Parameters
    ----------
    loop : SimplicialPath
        Closed path whose steps lie in a tree of x.
    x : Complex
        Complex.

    Returns
    -------
    witness : ContractionWitness
        Complexity zero witness.
    """
    reduced, moves = free_reduce(loop.reduced().vertices)
    if len(reduced) != 1:
        raise ComplexError(f"Loop {loop.vertices} does not reduce to a point by backtracks.")

    return ContractionWitness(moves)


def _triangle_apexes(x: Complex) -> Dict[Simplex, List[Vertex]]:
    apexes: Dict[Simplex, List[Vertex]] = {e: [] for e in x.edges}
    for triangle in x.simplices_of_dimension(2):
        for i, c in enumerate(triangle):
            apexes[triangle[:i] + triangle[i + 1:]].append(c)

    return apexes


def _macro_neighbors(
        loop: Tuple[Vertex, ...],
        apexes: Dict[Simplex, List[Vertex]],
        max_length: int
) -> Iterable[Tuple[Tuple[Vertex, ...], List[Move]]]:
    for i in range(len(loop) - 1):
        a, b = loop[i], loop[i + 1]
        if len(loop) + 1 <= max_length:
            for c in apexes[tuple(sorted((a, b)))]:
                # (a, b) -> (a, c, b)
                yield loop[:i + 1] + (c,) + loop[i + 1:], [
                    Move(MoveKind.TRIANGLE_INSERT, (a, c, b), i),
                    Move(MoveKind.BACKTRACK_DELETE, (b, a), i + 2)
                ]
        if i + 2 < len(loop):
            c, b = loop[i + 1], loop[i + 2]
            if a != b and c in apexes.get(tuple(sorted((a, b))), ()):
                # (a, c, b) -> (a, b)
                yield loop[:i + 1] + loop[i + 2:], [
                    Move(MoveKind.TRIANGLE_INSERT, (a, b, c), i),
                    Move(MoveKind.BACKTRACK_DELETE, (c, a), i + 2),
                    Move(MoveKind.BACKTRACK_DELETE, (b, c), i + 1)
                ]


def bfs_contraction_witness(
        loop: SimplicialPath,
        x: Complex,
        max_states: int = 50000,
        extra_length: int = 2
) -> ContractionWitness:
    """
    Searches for a witness with the fewest triangle moves among free-reduced loops no longer than the input plus
    extra_length. Each search step replaces an edge by the two other sides of a triangle or the reverse, followed by
    free reduction.

    Parameters
    ----------
    loop : SimplicialPath
        Closed path in x.
    x : Complex
        Complex.
    max_states : int
        Number of visited loops after which the search gives up.
    extra_length : int
        Allowed growth of the loop during the search.

    Returns
    -------
    witness : ContractionWitness
        A valid witness.
    """
    if not loop.is_closed:
        raise ComplexError(f"Path {loop.vertices} is not closed.")
    loop.validate(x)

    start, moves = free_reduce(loop.reduced().vertices)
    max_length = len(start) + extra_length
    apexes = _triangle_apexes(x)

    visited: Dict[Tuple[Vertex, ...], int] = {start: 0}
    queue: List[Tuple[int, int, int, Tuple[Vertex, ...], Tuple[Move, ...]]] = [(0, len(start), 0, start, ())]
    counter = 0
    while queue:
        cost, _, _, current, path_moves = heapq.heappop(queue)
        if len(current) == 1:
            logger.debug(f"Contraction witness of complexity {cost} found after visiting {len(visited)} loops.")
            return ContractionWitness(tuple(moves) + path_moves)
        if visited.get(current, cost) < cost:
            continue

        for neighbor, macro in _macro_neighbors(current, apexes, max_length):
            reduced, reductions = free_reduce(neighbor)
            if visited.get(reduced, cost + 2) <= cost + 1:
                continue
            visited[reduced] = cost + 1
            if len(visited) > max_states:
                raise ComplexError(f"No contraction witness found for {loop.vertices} within {max_states} loops.")
            counter += 1
            heapq.heappush(queue, (cost + 1, len(reduced), counter, reduced, path_moves + tuple(macro + reductions)))

    raise ComplexError(f"Loop {loop.vertices} admits no contraction witness in the searched range.")


def face_loop(x: Complex, triangle: Simplex) -> SimplicialPath:
    """
    Boundary loop of a 2-simplex in its positive orientation, based at its first oriented vertex.

    Parameters
    ----------
    x : Complex
        Complex.
    triangle : Simplex
        A 2-simplex of x.

    Returns
    -------
    loop : SimplicialPath
        (a, b, c, a).
    """
    a, b, c = x.oriented_vertices(triangle)
    return SimplicialPath((a, b, c, a))


def face_witness(x: Complex, triangle: Simplex) -> ContractionWitness:
    """
    The one-move witness deleting the boundary of a 2-simplex.

    Parameters
    ----------
    x : Complex
        Complex.
    triangle : Simplex
        A 2-simplex of x.

    Returns
    -------
    witness : ContractionWitness
        Complexity one witness of face_loop(x, triangle).
    """
    return ContractionWitness((Move(MoveKind.TRIANGLE_DELETE, x.oriented_vertices(triangle), 0),))


def optional_basepoint(x: Complex, basepoint: Optional[Vertex]) -> Vertex:
    """
    The given basepoint, checked, or the least vertex.

    Parameters
    ----------
    x : Complex
        Complex.
    basepoint : Optional[Vertex]
        Requested basepoint.

    Returns
    -------
    basepoint : Vertex
        A vertex of x.
    """
    if basepoint is None:
        return x.vertices[0]
    if (basepoint,) not in x.simplex_set:
        raise ComplexError(f"Basepoint {basepoint} is not a vertex.")

    return basepoint
