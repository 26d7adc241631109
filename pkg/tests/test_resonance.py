# tests/test_resonance.py
# =======================
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
"""Test cases for :mod:`clarcube.resonance`."""
import pytest
import networkx as nx

import clarcube


@pytest.fixture
def pyrene_graph(pyrene):
    return clarcube.resonance.build_resonance_graph(pyrene)


class TestBuildResonanceGraph(object):
    """Test cases for :func:`clarcube.resonance.build_resonance_graph`."""

    # fmt: off
    @pytest.mark.parametrize(
        "name,vertices,edges",
        [
            ("benzene", 2, 1),
            ("naphthalene", 3, 2),
            ("pyrene", 6, 6),
            ("coronene", 20, 32),
        ],
    )
    # fmt: on
    def test_sizes(self, name, vertices, edges):
        graph = clarcube.resonance.build_resonance_graph(clarcube.hexsys.catalog(name))
        assert len(graph) == vertices
        assert graph.num_edges == edges
        assert len(graph.edges) == edges

    def test_edges_differ_by_one_hexagon(self, small_system):
        """Adjacent matchings differ exactly on the labelling hexagon."""
        graph = clarcube.resonance.build_resonance_graph(small_system)
        for i, j, h in graph.edges:
            assert i < j
            assert graph.matchings[i].edges ^ graph.matchings[j].edges == h.edges
            assert graph.label(j, i) == h

    def test_connected(self, small_system):
        graph = clarcube.resonance.build_resonance_graph(small_system)
        assert nx.is_connected(graph.to_graph().to_networkx())

    def test_label_of_non_edge(self, pyrene_graph):
        i, j, _ = pyrene_graph.edges[0]
        with pytest.raises(KeyError):
            pyrene_graph.label(i, i)

    def test_not_kekulean_is_empty(self, lone_vertex):
        graph = clarcube.resonance.build_resonance_graph(lone_vertex)
        assert len(graph) == 0
        assert graph.num_edges == 0

    def test_limit(self, pyrene):
        with pytest.raises(clarcube.errors.LimitError):
            clarcube.resonance.build_resonance_graph(pyrene, limit=5)


class TestOrient(object):
    """Test cases for :func:`clarcube.resonance.orient` and
    :func:`clarcube.resonance.assert_acyclic`.

    """

    def test_benzene_arc(self, benzene):
        """The arc leaves the matching holding the right vertical edge."""
        graph = clarcube.resonance.build_resonance_graph(benzene)
        digraph = clarcube.resonance.orient(graph)
        ((tail, head, h),) = digraph.arcs
        assert h.right_vertical in graph.matchings[tail].edges
        assert h.left_vertical in graph.matchings[head].edges
        assert clarcube.resonance.assert_acyclic(digraph) == [tail, head]

    def test_pyrene(self, pyrene_graph):
        digraph = clarcube.resonance.orient(pyrene_graph)
        assert len(digraph.arcs) == 6
        assert len(digraph.sources()) == 1
        assert len(digraph.sinks()) == 1
        assert len(clarcube.resonance.assert_acyclic(digraph)) == 6

    def test_coronene(self, coronene):
        digraph = clarcube.resonance.orient(
            clarcube.resonance.build_resonance_graph(coronene)
        )
        assert len(digraph.arcs) == 32
        order = clarcube.resonance.assert_acyclic(digraph)
        assert sorted(order) == list(range(20))
        position = {v: i for i, v in enumerate(order)}
        assert all(position[t] < position[h] for t, h, _ in digraph.arcs)

    def test_every_edge_gets_one_direction(self, small_system):
        graph = clarcube.resonance.build_resonance_graph(small_system)
        digraph = clarcube.resonance.orient(graph)
        undirected = {(min(t, h), max(t, h), x) for t, h, x in digraph.arcs}
        assert undirected == set(graph.edges)

    def test_flipped_square_has_a_cycle(self, pyrene_graph):
        """Reversing both arcs at a middle vertex of a square makes a directed
        cycle, reported as witness.

        """
        digraph = clarcube.resonance.orient(pyrene_graph)
        (square,) = clarcube.resonance.source_hypercubes(digraph)[2]
        (source,) = digraph.sources(square.vertices)
        (sink,) = digraph.sinks(square.vertices)
        middle = min(set(square.vertices) - {source, sink})

        arcs = []
        for tail, head, h in digraph.arcs:
            if middle in (tail, head) and {tail, head} <= set(square.vertices):
                arcs.append((head, tail, h))
            else:
                arcs.append((tail, head, h))
        corrupted = clarcube.resonance.DirectedResonanceGraph(pyrene_graph, arcs)

        with pytest.raises(clarcube.errors.VerificationError) as exc:
            clarcube.resonance.assert_acyclic(corrupted)
        assert sorted(exc.value.witness) == sorted(square.vertices)


class TestSourceHypercubes(object):
    """Test cases for :func:`clarcube.resonance.source_hypercubes`."""

    @pytest.mark.parametrize("name", ["pyrene", "triphenylene", "coronene"])
    def test_matches_generic_enumeration(self, name):
        """Generating hypercubes from their sources finds them all."""
        graph = clarcube.resonance.build_resonance_graph(clarcube.hexsys.catalog(name))
        fast = clarcube.resonance.source_hypercubes(clarcube.resonance.orient(graph))
        slow = clarcube.cube.enumerate_induced_hypercubes(graph.to_graph())
        assert fast == slow

    @pytest.mark.parametrize("seed", range(20))
    def test_random_catafusenes(self, seed):
        system = clarcube.hexsys.catalog("random_cata", n=3 + seed % 6, seed=seed)
        graph = clarcube.resonance.build_resonance_graph(system)
        fast = clarcube.resonance.source_hypercubes(clarcube.resonance.orient(graph))
        assert fast == clarcube.cube.enumerate_induced_hypercubes(graph.to_graph())


class TestExport(object):
    """Test cases for :func:`clarcube.resonance.export_dot` and
    :func:`clarcube.resonance.export_json`.

    """

    def test_benzene_dot(self, benzene):
        graph = clarcube.resonance.build_resonance_graph(benzene)
        assert clarcube.resonance.export_dot(graph) == (
            "graph resonance {\n"
            "  m0;\n"
            "  m1;\n"
            '  m0 -- m1 [label="(0,0)"];\n'
            "}\n"
        )

    def test_empty_dot(self, lone_vertex):
        graph = clarcube.resonance.build_resonance_graph(lone_vertex)
        assert clarcube.resonance.export_dot(graph) == "graph resonance {\n}\n"

    def test_directed_dot_to_file(self, tmp_path, pyrene_graph):
        path = tmp_path / "pyrene.dot"
        text = clarcube.resonance.export_dot(
            clarcube.resonance.orient(pyrene_graph), str(path)
        )
        assert path.read_text() == text
        assert text.startswith("digraph resonance {\n")
        assert text.count(" -> ") == 6
        assert text.count(";\n") == 12

    def test_json(self, pyrene_graph):
        data = clarcube.resonance.export_json(pyrene_graph)
        assert data["vertices"] == 6
        assert len(data["edges"]) == 6
        for i, j, label in data["edges"]:
            q, r = map(int, label.split())
            assert pyrene_graph.label(i, j).cell == (q, r)
