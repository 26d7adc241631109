# clarcube/cube.py
# ================
#
# Copying
# -------
#
# Copyright (c) 2026 clarcube authors and contributors.
#
# This file is part of the *clarcube* project.
#
# Clarcube is a free software project. You can redistribute it and/or
# modify it following the terms of the MIT License.
#
# This software project is distributed *as is*, WITHOUT WARRANTY OF ANY
# KIND; including but not limited to the WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE and NONINFRINGEMENT.
#
# You should have received a copy of the MIT License along with
# *clarcube*. If not, see <http://opensource.org/licenses/MIT>.
#
"""Induced hypercubes of simple graphs.

The :class:`SimpleGraph` container works on vertices ``0 .. n - 1`` so that
resonance graphs, Fibonacci cubes and graphs read from JSON documents are all
handled alike.

"""
import typing as ty
import logging

from collections import Counter, deque

import networkx as nx

from clarcube.errors import LimitError, ValidationError
from clarcube.poly import IntPolynomial
from clarcube.typeset import ISOMORPHISM_BOUND, MAX_CUBES, MEDIAN_BOUND


log = logging.getLogger(__name__)

#: Largest order of a generated Fibonacci cube.
FIBONACCI_BOUND = 20

_EXHAUSTED = object()


class SimpleGraph(object):
    """An immutable simple graph on the vertices ``0 .. n - 1``.


    :param n: The number of vertices.
    :type n: int

    :param edges: Pairs of vertex ids.
    :type edges: ~typing.Iterable[~typing.Tuple[int, int]]


    :raises ~clarcube.errors.ValidationError: On a negative vertex count, an
                                              out of range vertex, a loop or a
                                              repeated edge.

    """

    __slots__ = ("n", "adjacency", "_neighbors")

    def __init__(self, n: int, edges: ty.Iterable[ty.Tuple[int, int]] = ()):
        """Constructor for :class:`clarcube.cube.SimpleGraph`."""
        if n < 0:
            raise ValidationError("vertex count must be non-negative.", n)

        neighbors = [set() for _ in range(n)]
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValidationError(f"edge {(i, j)} leaves the vertex range.", (i, j))
            if i == j:
                raise ValidationError(f"loop on vertex {i}.", (i, j))
            if j in neighbors[i]:
                raise ValidationError(f"edge {(i, j)} is repeated.", (i, j))
            neighbors[i].add(j)
            neighbors[j].add(i)

        self.n = n
        #: Sorted neighbors of every vertex.
        self.adjacency: ty.Tuple[ty.Tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in neighbors
        )
        self._neighbors = tuple(frozenset(s) for s in neighbors)

    def __eq__(self, other: ty.Any) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash(self.adjacency)

    def __repr__(self) -> str:
        return f"<SimpleGraph n={self.n} m={self.num_edges}>"

    @property
    def edges(self) -> ty.List[ty.Tuple[int, int]]:
        """Edges as ``(i, j)`` pairs with ``i < j``, sorted."""
        return [(i, j) for i in range(self.n) for j in self.adjacency[i] if i < j]

    @property
    def num_edges(self) -> int:
        """The number of edges."""
        return sum(len(a) for a in self.adjacency) // 2

    def neighbors(self, v: int) -> ty.FrozenSet[int]:
        """The neighbor set of a vertex."""
        return self._neighbors[v]

    def has_edge(self, i: int, j: int) -> bool:
        """Whether ``i`` and ``j`` are adjacent."""
        return j in self._neighbors[i]

    def to_json(self) -> ty.Dict[str, ty.Any]:
        """Serialize as ``{"n": n, "edges": [[i, j], ...]}``."""
        return {"n": self.n, "edges": [[i, j] for i, j in self.edges]}

    @classmethod
    def from_json(cls, data: ty.Mapping[str, ty.Any]) -> "SimpleGraph":
        """Read a JSON graph document.

        Both ``{"n": n, "edges": [[i, j], ...]}`` and resonance graph exports
        ``{"vertices": n, "edges": [[i, j, "q r"], ...]}`` are accepted; extra
        items of an edge entry are ignored.


        :param data: The decoded JSON document.
        :type data: ~typing.Mapping[str, ~typing.Any]


        :returns: The graph.
        :rtype: ~clarcube.cube.SimpleGraph


        :raises ~clarcube.errors.ValidationError: On a malformed document.

        """
        try:
            n = data["n"] if "n" in data else data["vertices"]
            edges = [(int(e[0]), int(e[1])) for e in data.get("edges", ())]
            return cls(int(n), edges)
        except (KeyError, IndexError, TypeError, ValueError) as e:
            if isinstance(e, ValidationError):
                raise
            raise ValidationError(f"malformed graph document: {e!r}.", data)

    def to_networkx(self) -> nx.Graph:
        """Convert into a :class:`networkx.Graph`."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph


class HypercubeEmbedding(ty.NamedTuple):
    """A set of vertices inducing a ``dim``-dimensional hypercube."""

    vertices: ty.Tuple[int, ...]
    dim: int

    def within(self, other: "HypercubeEmbedding") -> bool:
        """Containment order of hypercubes."""
        return set(self.vertices) <= set(other.vertices)

    def to_json(self) -> ty.Dict[str, ty.Any]:
        return {"dim": self.dim, "vertices": list(self.vertices)}


def _popcount(x: int) -> int:
    return bin(x).count("1")


def is_induced_hypercube(
    graph: SimpleGraph, vertices: ty.Iterable[int]
) -> ty.Optional[ty.Dict[int, int]]:
    """Decide whether a vertex set induces a hypercube.

    The smallest vertex is labelled ``0``, its neighbors get one bit each, and
    every other vertex gets the union of the labels of its neighbors one step
    closer to the smallest vertex. The set induces ``Q_n`` iff this labelling
    is a bijection onto ``n``-bit words where every induced edge joins words
    at Hamming distance one and every vertex has ``n`` induced neighbors.


    :param graph: The host graph.
    :type graph: ~clarcube.cube.SimpleGraph

    :param vertices: The candidate vertex set.
    :type vertices: ~typing.Iterable[int]


    :returns: The binary labelling of every vertex, or ``None``.
    :rtype: ~typing.Optional[~typing.Dict[int, int]]

    """
    members = set(vertices)
    size = len(members)
    if size == 0 or size & (size - 1):
        return None
    dim = size.bit_length() - 1

    inner = {v: graph.neighbors(v) & members for v in members}
    if any(len(nbrs) != dim for nbrs in inner.values()):
        return None

    root = min(members)
    distance = {root: 0}
    labels = {root: 0}
    for bit, v in enumerate(sorted(inner[root])):
        distance[v] = 1
        labels[v] = 1 << bit

    queue = deque(sorted(inner[root]))
    while queue:
        v = queue.popleft()
        for w in sorted(inner[v]):
            if w not in distance:
                distance[w] = distance[v] + 1
                queue.append(w)
                labels[w] = 0
            if distance[w] == distance[v] + 1:
                labels[w] |= labels[v]

    if len(labels) != size or len(set(labels.values())) != size:
        return None
    for v, nbrs in inner.items():
        if _popcount(labels[v]) != distance[v]:
            return None
        if any(_popcount(labels[v] ^ labels[w]) != 1 for w in nbrs):
            return None
    return labels


def _assignments(
    order: ty.Sequence[int],
    candidates: ty.Callable[[int, ty.Dict[int, int], ty.Set[int]], ty.List[int]],
) -> ty.Iterator[ty.Dict[int, int]]:
    # Iterative backtracking; ``candidates`` must only return unused targets
    # consistent with the current partial mapping.
    if not order:
        yield {}
        return

    mapping: ty.Dict[int, int] = {}
    used: ty.Set[int] = set()
    stack = [iter(candidates(order[0], mapping, used))]
    while stack:
        pos = len(stack) - 1
        v = order[pos]
        if v in mapping:
            used.discard(mapping.pop(v))
        c = next(stack[-1], _EXHAUSTED)
        if c is _EXHAUSTED:
            stack.pop()
            continue
        mapping[v] = c
        used.add(c)
        if pos + 1 == len(order):
            yield dict(mapping)
        else:
            stack.append(iter(candidates(order[pos + 1], mapping, used)))


def _bfs_order(graph: SimpleGraph, members: ty.AbstractSet[int], root: int) -> ty.List[int]:
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in graph.adjacency[v]:
            if w in members and w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def _extend(graph: SimpleGraph, base: ty.FrozenSet[int]) -> ty.Iterator[ty.FrozenSet[int]]:
    v0 = min(base)
    order = _bfs_order(graph, base, v0)

    for w in graph.adjacency[v0]:
        if w in base:
            continue

        def _candidates(s: int, mapping: ty.Dict[int, int], used: ty.Set[int]) -> ty.List[int]:
            if s == v0:
                return [w]
            pool = set(graph.neighbors(s)) - base - used
            for t in graph.neighbors(s):
                if t in mapping:
                    pool &= graph.neighbors(mapping[t])
            return sorted(pool)

        for mapping in _assignments(order, _candidates):
            candidate = base | frozenset(mapping.values())
            if is_induced_hypercube(graph, candidate) is not None:
                yield candidate


def enumerate_induced_hypercubes(
    graph: SimpleGraph, limit: int = MAX_CUBES
) -> ty.Dict[int, ty.List[HypercubeEmbedding]]:
    """Find every vertex set inducing a hypercube.

    Dimension ``n`` is built from dimension ``n - 1``: a ``Q_n`` splits into
    two copies of ``Q_(n-1)`` joined by a perfect matching, and the copy
    holding its smallest vertex ``v0`` is found at the previous level. Each
    ``Q_(n-1)`` is therefore extended through every neighbor of ``v0`` outside
    of it, mapping the rest of it in breadth-first order onto neighbors that
    agree with the vertices mapped so far. Candidates are validated as induced
    hypercubes and deduplicated by vertex set.


    :param graph: The graph.
    :type graph: ~clarcube.cube.SimpleGraph

    :param limit: The maximum number of hypercubes, all dimensions together.
    :type limit: int


    :returns: The hypercubes by dimension, each list sorted by vertex tuple.
              Dimension ``0`` lists the vertices and dimension ``1`` the edges.
    :rtype: ~typing.Dict[int, ~typing.List[~clarcube.cube.HypercubeEmbedding]]


    :raises ~clarcube.errors.LimitError: When there are more than ``limit``
                                         hypercubes.

    """
    if graph.n > limit:
        raise LimitError("induced hypercubes", limit)

    result: ty.Dict[int, ty.List[HypercubeEmbedding]] = {}
    level = [frozenset((v,)) for v in range(graph.n)]
    total = 0
    dim = 0
    while level:
        total += len(level)
        if total > limit:
            raise LimitError("induced hypercubes", limit)
        result[dim] = [HypercubeEmbedding(tuple(sorted(s)), dim) for s in level]
        result[dim].sort()
        log.debug(f"Found {len(level)} induced hypercubes of dimension {dim}.")

        found: ty.Dict[ty.FrozenSet[int], None] = {}
        for base in level:
            for cube in _extend(graph, base):
                found.setdefault(cube)
                if total + len(found) > limit:
                    raise LimitError("induced hypercubes", limit)
        level = sorted(found, key=lambda s: tuple(sorted(s)))
        dim += 1

    return result


def cube_polynomial(graph: SimpleGraph, limit: int = MAX_CUBES) -> IntPolynomial:
    """The cube polynomial, counting induced hypercubes by dimension.


    :param graph: The graph.
    :type graph: ~clarcube.cube.SimpleGraph

    :param limit: The maximum number of hypercubes.
    :type limit: int


    :returns: ``sum(alpha_i * x ** i)``, the zero polynomial for an empty
              graph.
    :rtype: ~clarcube.poly.IntPolynomial

    """
    cubes = enumerate_induced_hypercubes(graph, limit=limit)
    return IntPolynomial.from_counts({d: len(c) for d, c in cubes.items()})


def maximal_hypercubes(
    graph: SimpleGraph,
    limit: int = MAX_CUBES,
    cubes: ty.Optional[ty.Mapping[int, ty.Sequence[HypercubeEmbedding]]] = None,
) -> ty.List[HypercubeEmbedding]:
    """List the induced hypercubes contained in no other induced hypercube.


    :param graph: The graph.
    :type graph: ~clarcube.cube.SimpleGraph

    :param limit: The maximum number of hypercubes.
    :type limit: int

    :param cubes: Already enumerated hypercubes of the graph, if any.
    :type cubes: ~typing.Optional[~typing.Mapping[int,
                 ~typing.Sequence[~clarcube.cube.HypercubeEmbedding]]]


    :returns: The maximal elements of the containment order, by dimension then
              vertex tuple.
    :rtype: ~typing.List[~clarcube.cube.HypercubeEmbedding]

    """
    if cubes is None:
        cubes = enumerate_induced_hypercubes(graph, limit=limit)

    # Larger cubes by vertex, to test containment from the smallest vertex.
    larger: ty.Dict[int, ty.List[ty.Tuple[int, ty.FrozenSet[int]]]] = {}
    for dim, embeddings in cubes.items():
        for e in embeddings:
            members = frozenset(e.vertices)
            for v in e.vertices:
                larger.setdefault(v, []).append((dim, members))

    maximal = []
    for dim in sorted(cubes):
        for e in cubes[dim]:
            members = set(e.vertices)
            if not any(
                d > dim and members <= other for d, other in larger[e.vertices[0]]
            ):
                maximal.append(e)
    return maximal


def is_median_graph(
    graph: SimpleGraph, bound: int = MEDIAN_BOUND
) -> ty.Tuple[bool, ty.Optional[ty.Tuple[int, int, int]]]:
    """Decide whether a graph is a median graph, that is whether every triple
    of vertices has exactly one vertex lying on shortest paths between each
    pair of the triple.


    :param graph: A connected graph.
    :type graph: ~clarcube.cube.SimpleGraph

    :param bound: The largest accepted number of vertices.
    :type bound: int


    :returns: ``(True, None)`` or ``(False, (u, v, w))`` with a triple of
              distinct vertices without a unique median.
    :rtype: ~typing.Tuple[bool, ~typing.Optional[~typing.Tuple[int, int, int]]]


    :raises ~clarcube.errors.LimitError: When the graph has more than
                                         ``bound`` vertices.

    :raises ~clarcube.errors.ValidationError: When the graph is empty or
                                              disconnected.

    """
    if graph.n > bound:
        raise LimitError("vertices for the median check", bound)
    if graph.n == 0:
        raise ValidationError("the empty graph is not connected.")

    distance = dict(nx.all_pairs_shortest_path_length(graph.to_networkx()))
    if len(distance[0]) != graph.n:
        raise ValidationError("graph is disconnected.", sorted(distance[0]))

    n = graph.n
    interval = [[0] * n for _ in range(n)]
    for u in range(n):
        du = distance[u]
        for v in range(u, n):
            d = du[v]
            dv = distance[v]
            mask = 0
            for w in range(n):
                if du[w] + dv[w] == d:
                    mask |= 1 << w
            interval[u][v] = interval[v][u] = mask

    for u in range(n):
        for v in range(u + 1, n):
            uv = interval[u][v]
            for w in range(v + 1, n):
                if _popcount(uv & interval[v][w] & interval[u][w]) != 1:
                    return False, (u, v, w)
    return True, None


def fibonacci_strings(n: int) -> ty.List[int]:
    """The ``n``-bit words without two consecutive ``1`` bits, increasing."""
    return [x for x in range(1 << n) if not x & (x >> 1)]


def fibonacci_cube(n: int, bound: int = FIBONACCI_BOUND) -> SimpleGraph:
    """Build the Fibonacci cube ``Γ_n``: binary strings of length ``n`` with no
    two consecutive ones, adjacent when they differ in exactly one position.
    Vertex ``i`` is the ``i``-th string in numerical order.


    :param n: The string length.
    :type n: int

    :param bound: The largest accepted string length.
    :type bound: int


    :returns: ``Γ_n``; ``Γ_0`` is a single vertex.
    :rtype: ~clarcube.cube.SimpleGraph


    :raises ValueError: When ``n`` is negative.

    :raises ~clarcube.errors.LimitError: When ``n`` is over ``bound``.

    """
    if n < 0:
        raise ValueError("string length must be non-negative.")
    if n > bound:
        raise LimitError("bits in a Fibonacci cube string", bound)

    words = fibonacci_strings(n)
    index = {x: i for i, x in enumerate(words)}
    edges = []
    for x in words:
        for bit in range(n):
            y = x ^ (1 << bit)
            if y > x and y in index:
                edges.append((index[x], index[y]))
    return SimpleGraph(len(words), edges)


def hypercube_graph(n: int) -> SimpleGraph:
    """Build the hypercube ``Q_n`` on the ``n``-bit words."""
    if n < 0:
        raise ValueError("dimension must be non-negative.")
    return SimpleGraph(
        1 << n,
        ((x, x | (1 << bit)) for x in range(1 << n) for bit in range(n) if not x >> bit & 1),
    )


def _refine_colors(
    g1: SimpleGraph, g2: SimpleGraph
) -> ty.Tuple[ty.List[int], ty.List[int]]:
    # Color refinement over a palette shared by both graphs.
    c1 = [len(a) for a in g1.adjacency]
    c2 = [len(a) for a in g2.adjacency]
    classes = len(set(c1) | set(c2))
    while True:
        s1 = [(c1[v], tuple(sorted(c1[u] for u in g1.adjacency[v]))) for v in range(g1.n)]
        s2 = [(c2[v], tuple(sorted(c2[u] for u in g2.adjacency[v]))) for v in range(g2.n)]
        palette = {s: i for i, s in enumerate(sorted(set(s1) | set(s2)))}
        c1 = [palette[s] for s in s1]
        c2 = [palette[s] for s in s2]
        if len(palette) == classes:
            return c1, c2
        classes = len(palette)


def find_isomorphism(
    g1: SimpleGraph, g2: SimpleGraph, bound: int = ISOMORPHISM_BOUND
) -> ty.Optional[ty.Dict[int, int]]:
    """Look for an isomorphism between two graphs.

    Vertex colors are refined from degrees until stable, then vertices of
    ``g1`` are mapped in breadth-first order onto same-colored vertices of
    ``g2`` that keep adjacency and non-adjacency with everything mapped so far.


    :param g1: The first graph.
    :type g1: ~clarcube.cube.SimpleGraph

    :param g2: The second graph.
    :type g2: ~clarcube.cube.SimpleGraph

    :param bound: The largest accepted number of vertices.
    :type bound: int


    :returns: A vertex mapping from ``g1`` onto ``g2``, or ``None``.
    :rtype: ~typing.Optional[~typing.Dict[int, int]]


    :raises ~clarcube.errors.LimitError: When a graph has more than ``bound``
                                         vertices.

    """
    if g1.n > bound or g2.n > bound:
        raise LimitError("vertices for the isomorphism check", bound)
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return None
    if sorted(map(len, g1.adjacency)) != sorted(map(len, g2.adjacency)):
        return None

    c1, c2 = _refine_colors(g1, g2)
    frequency = Counter(c1)
    if frequency != Counter(c2):
        return None

    order: ty.List[int] = []
    placed: ty.Set[int] = set()
    for root in sorted(range(g1.n), key=lambda v: (frequency[c1[v]], v)):
        if root not in placed:
            component = _bfs_order(g1, frozenset(range(g1.n)), root)
            order.extend(component)
            placed.update(component)

    by_color: ty.Dict[int, ty.List[int]] = {}
    for v in range(g2.n):
        by_color.setdefault(c2[v], []).append(v)

    def _candidates(v: int, mapping: ty.Dict[int, int], used: ty.Set[int]) -> ty.List[int]:
        images = [mapping[u] for u in g1.adjacency[v] if u in mapping]
        return [
            c
            for c in by_color[c1[v]]
            if c not in used
            and all(g2.has_edge(c, x) for x in images)
            and sum(1 for x in g2.adjacency[c] if x in used) == len(images)
        ]

    return next(_assignments(order, _candidates), None)


def graph_isomorphic(
    g1: SimpleGraph, g2: SimpleGraph, bound: int = ISOMORPHISM_BOUND
) -> bool:
    """Whether two graphs are isomorphic, see :func:`find_isomorphism`."""
    return find_isomorphism(g1, g2, bound=bound) is not None
