# clarcube/resonance.py
# =====================
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
"""Resonance graphs and their sextet orientation.

Two perfect matchings are adjacent in the resonance graph when their symmetric
difference is the edge set of a single hexagon. The edge is oriented from the
matching where that hexagon is a proper sextet to the one where it is an
improper sextet.

"""
import itertools
import typing as ty
import logging

import networkx as nx

from clarcube.cube import HypercubeEmbedding, SimpleGraph
from clarcube.errors import InternalError, LimitError, VerificationError
from clarcube.hexsys import Hexagon, HexagonalSystem
from clarcube.matching import (
    PerfectMatching,
    SextetClass,
    alternating_hexagons,
    classify,
    enumerate_perfect_matchings,
)
from clarcube.typeset import MAX_CUBES, MAX_MATCHINGS, EdgeSet


log = logging.getLogger(__name__)

#: An edge ``(i, j, hexagon)`` of a resonance graph, or an arc ``tail -> head``.
LabeledEdge = ty.Tuple[int, int, Hexagon]


class ResonanceGraph(object):
    """The resonance graph of a hexagonal system.


    :param system: The host system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param matchings: All perfect matchings of the system; vertex ``i`` is
                      ``matchings[i]``.
    :type matchings: ~typing.Sequence[~clarcube.matching.PerfectMatching]

    :param adjacency: For every vertex, its ``(neighbor, hexagon)`` pairs.
    :type adjacency: ~typing.Mapping[int, ~typing.Iterable[~typing.Tuple[int,
                     ~clarcube.hexsys.Hexagon]]]

    """

    __slots__ = ("system", "matchings", "adjacency", "index")

    def __init__(
        self,
        system: HexagonalSystem,
        matchings: ty.Sequence[PerfectMatching],
        adjacency: ty.Mapping[int, ty.Iterable[ty.Tuple[int, Hexagon]]],
    ):
        """Constructor for :class:`clarcube.resonance.ResonanceGraph`."""
        self.system = system
        self.matchings: ty.Tuple[PerfectMatching, ...] = tuple(matchings)
        self.adjacency: ty.Dict[int, ty.Tuple[ty.Tuple[int, Hexagon], ...]] = {
            m.id: tuple(sorted(adjacency.get(m.id, ()))) for m in self.matchings
        }
        #: Vertex id of every matching edge set.
        self.index: ty.Dict[EdgeSet, int] = {m.edges: m.id for m in self.matchings}

    def __repr__(self) -> str:
        return f"<ResonanceGraph n={len(self.matchings)} m={self.num_edges}>"

    def __len__(self) -> int:
        return len(self.matchings)

    @property
    def edges(self) -> ty.List[LabeledEdge]:
        """Labelled edges ``(i, j, hexagon)`` with ``i < j``, sorted."""
        return [
            (i, j, h) for i, nbrs in sorted(self.adjacency.items()) for j, h in nbrs if i < j
        ]

    @property
    def num_edges(self) -> int:
        """The number of edges, the first Herndon number of the system."""
        return sum(len(nbrs) for nbrs in self.adjacency.values()) // 2

    def label(self, i: int, j: int) -> Hexagon:
        """The hexagon labelling the edge ``ij``.


        :raises KeyError: When ``i`` and ``j`` are not adjacent.

        """
        for k, h in self.adjacency[i]:
            if k == j:
                return h
        raise KeyError((i, j))

    def to_graph(self) -> SimpleGraph:
        """The underlying unlabelled graph."""
        return SimpleGraph(len(self.matchings), ((i, j) for i, j, _ in self.edges))


class DirectedResonanceGraph(object):
    """A resonance graph with one direction given to every edge.


    :param graph: The undirected resonance graph.
    :type graph: ~clarcube.resonance.ResonanceGraph

    :param arcs: Arcs ``(tail, head, hexagon)``.
    :type arcs: ~typing.Iterable[~clarcube.resonance.LabeledEdge]

    """

    __slots__ = ("graph", "arcs", "successors", "predecessors")

    def __init__(self, graph: ResonanceGraph, arcs: ty.Iterable[LabeledEdge]):
        """Constructor for :class:`clarcube.resonance.DirectedResonanceGraph`."""
        self.graph = graph
        self.arcs: ty.Tuple[LabeledEdge, ...] = tuple(sorted(arcs))
        self.successors: ty.Dict[int, ty.List[ty.Tuple[int, Hexagon]]] = {
            m.id: [] for m in graph.matchings
        }
        self.predecessors: ty.Dict[int, ty.List[ty.Tuple[int, Hexagon]]] = {
            m.id: [] for m in graph.matchings
        }
        for tail, head, h in self.arcs:
            self.successors[tail].append((head, h))
            self.predecessors[head].append((tail, h))

    def __repr__(self) -> str:
        return f"<DirectedResonanceGraph n={len(self.graph)} arcs={len(self.arcs)}>"

    @property
    def matchings(self) -> ty.Tuple[PerfectMatching, ...]:
        return self.graph.matchings

    def sources(self, vertices: ty.Optional[ty.Iterable[int]] = None) -> ty.List[int]:
        """Vertices without incoming arc from inside ``vertices`` (all vertices
        by default).

        """
        members = set(self.successors if vertices is None else vertices)
        return sorted(
            v for v in members if not any(t in members for t, _ in self.predecessors[v])
        )

    def sinks(self, vertices: ty.Optional[ty.Iterable[int]] = None) -> ty.List[int]:
        """Vertices without outgoing arc towards ``vertices`` (all vertices by
        default).

        """
        members = set(self.successors if vertices is None else vertices)
        return sorted(
            v for v in members if not any(h in members for h, _ in self.successors[v])
        )

    def to_networkx(self) -> nx.DiGraph:
        """Convert into a :class:`networkx.DiGraph`."""
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(len(self.graph)))
        digraph.add_edges_from((t, h) for t, h, _ in self.arcs)
        return digraph


def build_resonance_graph(
    system: HexagonalSystem,
    limit: int = MAX_MATCHINGS,
    matchings: ty.Optional[ty.Sequence[PerfectMatching]] = None,
) -> ResonanceGraph:
    """Build the resonance graph of a system.

    Rather than comparing all pairs of matchings, every alternating hexagon of
    every matching is flipped and the result looked up.


    :param system: The (generalized) hexagonal system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param limit: The maximum number of perfect matchings.
    :type limit: int

    :param matchings: Already enumerated matchings of the system, if any.
    :type matchings: ~typing.Optional[~typing.Sequence[
                     ~clarcube.matching.PerfectMatching]]


    :returns: The resonance graph, empty when the system is not Kekuléan.
    :rtype: ~clarcube.resonance.ResonanceGraph


    :raises ~clarcube.errors.LimitError: When the system has more than
                                         ``limit`` perfect matchings.

    """
    if matchings is None:
        matchings = enumerate_perfect_matchings(system, limit=limit)

    index = {m.edges: m.id for m in matchings}
    adjacency: ty.Dict[int, ty.List[ty.Tuple[int, Hexagon]]] = {}
    for m in matchings:
        for h, _ in alternating_hexagons(system, m):
            j = index.get(m.edges ^ h.edges)
            if j is None:
                raise InternalError(
                    f"flipping hexagon {tuple(h.cell)} of matching {m.id} "
                    "gave no perfect matching."
                )
            adjacency.setdefault(m.id, []).append((j, h))

    graph = ResonanceGraph(system, matchings, adjacency)
    log.debug(f"Built {graph!r} for {system!r}.")
    return graph


def orient(graph: ResonanceGraph) -> DirectedResonanceGraph:
    """Direct every edge from the matching where its hexagon is a proper
    sextet to the matching where it is an improper one.


    :param graph: The resonance graph.
    :type graph: ~clarcube.resonance.ResonanceGraph


    :returns: The directed resonance graph.
    :rtype: ~clarcube.resonance.DirectedResonanceGraph


    :raises ~clarcube.errors.InternalError: When a labelling hexagon is not a
                                            proper sextet at exactly one end.

    """
    arcs = []
    for i, j, h in graph.edges:
        ci = classify(h, graph.matchings[i].edges)
        cj = classify(h, graph.matchings[j].edges)
        if ci is SextetClass.PROPER and cj is SextetClass.IMPROPER:
            arcs.append((i, j, h))
        elif ci is SextetClass.IMPROPER and cj is SextetClass.PROPER:
            arcs.append((j, i, h))
        else:
            raise InternalError(
                f"hexagon {tuple(h.cell)} is {ci} in {i} and {cj} in {j}."
            )
    return DirectedResonanceGraph(graph, arcs)


def assert_acyclic(digraph: DirectedResonanceGraph) -> ty.List[int]:
    """Check that a directed resonance graph has no directed cycle.


    :param digraph: The directed resonance graph.
    :type digraph: ~clarcube.resonance.DirectedResonanceGraph


    :returns: The lexicographically smallest topological order of the
              vertices.
    :rtype: ~typing.List[int]


    :raises ~clarcube.errors.VerificationError: With the vertices of a directed
                                                cycle as witness.

    """
    g = digraph.to_networkx()
    try:
        return list(nx.lexicographical_topological_sort(g))
    except nx.NetworkXUnfeasible:
        cycle = [u for u, _ in nx.find_cycle(g)]
        raise VerificationError("directed resonance graph has a cycle.", cycle)


def _labeled(
    graph: ty.Union[ResonanceGraph, DirectedResonanceGraph]
) -> ty.Tuple[bool, int, ty.Sequence[LabeledEdge]]:
    if isinstance(graph, DirectedResonanceGraph):
        return True, len(graph.graph), graph.arcs
    return False, len(graph), graph.edges


def export_dot(
    graph: ty.Union[ResonanceGraph, DirectedResonanceGraph],
    path: ty.Optional[str] = None,
) -> str:
    """Render a resonance graph in the DOT language. Vertex ``i`` is named
    ``m<i>`` and every edge is labelled with its hexagon cell ``(q,r)``.


    :param graph: A resonance graph, rendered as a ``digraph`` when directed.
    :type graph: ~typing.Union[~clarcube.resonance.ResonanceGraph,
                 ~clarcube.resonance.DirectedResonanceGraph]

    :param path: A file to write the document to.
    :type path: ~typing.Optional[str]


    :returns: The DOT document.
    :rtype: str

    """
    directed, n, edges = _labeled(graph)
    connector = "->" if directed else "--"

    lines = [f"{'digraph' if directed else 'graph'} resonance {{"]
    lines.extend(f"  m{i};" for i in range(n))
    lines.extend(
        f'  m{i} {connector} m{j} [label="({h.cell.q},{h.cell.r})"];'
        for i, j, h in edges
    )
    lines.append("}")
    text = "\n".join(lines) + "\n"

    if path is not None:
        with open(path, "w") as f:
            f.write(text)
        log.info(f"Wrote DOT graph to {path}.")
    return text


def export_json(
    graph: ty.Union[ResonanceGraph, DirectedResonanceGraph]
) -> ty.Dict[str, ty.Any]:
    """Serialize as ``{"vertices": n, "edges": [[i, j, "q r"], ...]}``; arcs go
    from ``i`` to ``j``.

    """
    _, n, edges = _labeled(graph)
    return {"vertices": n, "edges": [[i, j, h.label] for i, j, h in edges]}


def source_hypercubes(
    digraph: DirectedResonanceGraph, limit: int = MAX_CUBES
) -> ty.Dict[int, ty.List[HypercubeEmbedding]]:
    """Enumerate the induced hypercubes of a resonance graph from their
    sources: every hypercube is generated once, by the matching ``M0`` where
    all its hexagons are proper sextets, as ``M0`` flipped along every subset
    of a set of out-arc hexagons of ``M0``.


    :param digraph: The directed resonance graph.
    :type digraph: ~clarcube.resonance.DirectedResonanceGraph

    :param limit: The maximum number of hypercubes.
    :type limit: int


    :returns: Hypercubes by dimension, each list sorted by vertex tuple.
    :rtype: ~typing.Dict[int, ~typing.List[~clarcube.cube.HypercubeEmbedding]]


    :raises ~clarcube.errors.LimitError: When there are more than ``limit``
                                         hypercubes.

    :raises ~clarcube.errors.InternalError: When flipping out-arc hexagons
                                            does not give a perfect matching.

    """
    graph = digraph.graph
    result: ty.Dict[int, ty.List[HypercubeEmbedding]] = {}
    total = 0
    for m in graph.matchings:
        hexagons = [h for _, h in digraph.successors[m.id]]
        for dim in range(len(hexagons) + 1):
            for chosen in itertools.combinations(hexagons, dim):
                vertices = []
                for k in range(dim + 1):
                    for flipped in itertools.combinations(chosen, k):
                        edges = m.edges
                        for h in flipped:
                            edges = edges ^ h.edges
                        try:
                            vertices.append(graph.index[edges])
                        except KeyError:
                            raise InternalError(
                                f"out-arcs of matching {m.id} are not disjoint."
                            )
                total += 1
                if total > limit:
                    raise LimitError("induced hypercubes", limit)
                result.setdefault(dim, []).append(
                    HypercubeEmbedding(tuple(sorted(vertices)), dim)
                )

    for embeddings in result.values():
        embeddings.sort()
    return result
