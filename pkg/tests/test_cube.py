# tests/test_cube.py
# ==================
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
"""Test cases for :mod:`clarcube.cube`."""
import math

import pytest

from hypothesis import given, settings, strategies as st

import clarcube


def cycle(n):
    return clarcube.cube.SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return clarcube.cube.SimpleGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def relabel(graph, permutation):
    return clarcube.cube.SimpleGraph(
        graph.n, [(permutation[i], permutation[j]) for i, j in graph.edges]
    )


#: K_{2,3}: vertices 0 and 1 against 2, 3 and 4.
K23 = clarcube.cube.SimpleGraph(5, [(i, j) for i in (0, 1) for j in (2, 3, 4)])
#: A claw, K_{1,3}.
CLAW = clarcube.cube.SimpleGraph(4, [(0, 1), (0, 2), (0, 3)])


class TestSimpleGraph(object):
    """Test cases for :class:`clarcube.cube.SimpleGraph`."""

    # fmt: off
    @pytest.mark.parametrize(
        "n,edges",
        [
            (-1, []),
            (2, [(0, 2)]),
            (2, [(1, 1)]),
            (2, [(0, 1), (1, 0)]),
        ],
    )
    # fmt: on
    def test_invalid(self, n, edges):
        with pytest.raises(clarcube.errors.ValidationError):
            clarcube.cube.SimpleGraph(n, edges)

    def test_edges_sorted(self):
        graph = clarcube.cube.SimpleGraph(3, [(2, 1), (1, 0)])
        assert graph.edges == [(0, 1), (1, 2)]
        assert graph.num_edges == 2
        assert graph.neighbors(1) == {0, 2}
        assert graph.has_edge(2, 1)
        assert not graph.has_edge(0, 2)

    def test_json(self, lib_path):
        import json

        with open(lib_path("square.json")) as f:
            graph = clarcube.cube.SimpleGraph.from_json(json.load(f))
        assert graph == cycle(4)
        assert graph.to_json() == {"n": 4, "edges": [[0, 1], [0, 3], [1, 2], [2, 3]]}

    def test_json_resonance_export(self):
        """Resonance graph exports are read as plain graphs."""
        data = {"vertices": 2, "edges": [[0, 1, "0 0"]]}
        assert clarcube.cube.SimpleGraph.from_json(data) == complete(2)

    @pytest.mark.parametrize(
        "data", [{}, {"n": "x"}, {"n": 2, "edges": [[0]]}, {"n": 2, "edges": [[0, 5]]}]
    )
    def test_json_malformed(self, data):
        with pytest.raises(clarcube.errors.ValidationError):
            clarcube.cube.SimpleGraph.from_json(data)


class TestInducedHypercubes(object):
    """Test cases for :func:`clarcube.cube.enumerate_induced_hypercubes` and
    :func:`clarcube.cube.cube_polynomial`.

    """

    # fmt: off
    @pytest.mark.parametrize(
        "graph,expected",
        [
            (clarcube.cube.SimpleGraph(0), []),
            (clarcube.cube.SimpleGraph(1), [1]),
            (complete(2), [2, 1]),
            (cycle(4), [4, 4, 1]),
            (cycle(6), [6, 6]),
            (complete(4), [4, 6]),
            (CLAW, [4, 3]),
            (K23, [5, 6, 3]),
            (clarcube.cube.hypercube_graph(3), [8, 12, 6, 1]),
            (clarcube.cube.fibonacci_cube(3), [5, 5, 1]),
            (clarcube.cube.fibonacci_cube(4), [8, 10, 3]),
        ],
    )
    # fmt: on
    def test_cube_polynomial(self, graph, expected):
        assert clarcube.cube.cube_polynomial(graph).coeffs == tuple(expected)

    @pytest.mark.parametrize("n", range(5))
    def test_hypercube(self, n):
        """``Q_n`` has ``C(n, k) 2^(n - k)`` induced ``Q_k``."""
        graph = clarcube.cube.hypercube_graph(n)
        expected = [math.comb(n, k) * 2 ** (n - k) for k in range(n + 1)]
        assert clarcube.cube.cube_polynomial(graph).coeffs == tuple(expected)

    def test_embeddings(self):
        cubes = clarcube.cube.enumerate_induced_hypercubes(cycle(4))
        assert cubes[2] == [clarcube.cube.HypercubeEmbedding((0, 1, 2, 3), 2)]
        assert [e.vertices for e in cubes[1]] == [(0, 1), (0, 3), (1, 2), (2, 3)]
        assert cubes[0][0].to_json() == {"dim": 0, "vertices": [0]}

    def test_limit(self):
        with pytest.raises(clarcube.errors.LimitError):
            clarcube.cube.enumerate_induced_hypercubes(clarcube.cube.hypercube_graph(3), limit=20)

    @settings(max_examples=20, deadline=None)
    @given(data=st.data())
    def test_relabeling_invariance(self, data):
        """The cube polynomial does not depend on vertex names."""
        graph = clarcube.cube.fibonacci_cube(5)
        permutation = data.draw(st.permutations(range(graph.n)))
        assert clarcube.cube.cube_polynomial(
            relabel(graph, permutation)
        ) == clarcube.cube.cube_polynomial(graph)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_fibonacci_cube_polynomial(self, n):
        """The cube polynomial of ``Γ_n`` reads ``C(n - k + 1, k)`` in powers
        of ``x + 1``.

        """
        b = [math.comb(n - k + 1, k) for k in range(n + 1)]
        assert clarcube.cube.cube_polynomial(
            clarcube.cube.fibonacci_cube(n)
        ) == clarcube.poly.from_shifted(b)


class TestIsInducedHypercube(object):
    """Test cases for :func:`clarcube.cube.is_induced_hypercube`."""

    def test_square(self):
        labels = clarcube.cube.is_induced_hypercube(cycle(4), [0, 1, 2, 3])
        assert sorted(labels.values()) == [0, 1, 2, 3]
        assert labels[0] == 0
        assert labels[2] == 3

    @pytest.mark.parametrize(
        "graph,vertices",
        [
            (cycle(4), [0, 1, 2]),
            (cycle(4), [0, 2]),
            (complete(4), [0, 1, 2, 3]),
            (cycle(6), [0, 1, 2, 3]),
            (cycle(4), []),
        ],
    )
    def test_not_a_hypercube(self, graph, vertices):
        assert clarcube.cube.is_induced_hypercube(graph, vertices) is None


class TestMaximalHypercubes(object):
    """Test cases for :func:`clarcube.cube.maximal_hypercubes`."""

    def test_square(self):
        (cube,) = clarcube.cube.maximal_hypercubes(cycle(4))
        assert cube.dim == 2

    def test_complete(self):
        maximal = clarcube.cube.maximal_hypercubes(complete(4))
        assert [e.dim for e in maximal] == [1] * 6

    def test_isolated_vertex(self):
        graph = clarcube.cube.SimpleGraph(3, [(0, 1)])
        assert clarcube.cube.maximal_hypercubes(graph) == [
            clarcube.cube.HypercubeEmbedding((2,), 0),
            clarcube.cube.HypercubeEmbedding((0, 1), 1),
        ]


class TestMedianGraph(object):
    """Test cases for :func:`clarcube.cube.is_median_graph`."""

    @pytest.mark.parametrize(
        "graph",
        [
            clarcube.cube.SimpleGraph(1),
            complete(2),
            cycle(4),
            CLAW,
            clarcube.cube.hypercube_graph(3),
            clarcube.cube.fibonacci_cube(5),
        ],
    )
    def test_median(self, graph):
        assert clarcube.cube.is_median_graph(graph) == (True, None)

    @pytest.mark.parametrize("graph", [complete(3), cycle(6), K23])
    def test_not_median(self, graph):
        median, triple = clarcube.cube.is_median_graph(graph)
        assert not median
        assert len(set(triple)) == 3

    def test_errors(self):
        with pytest.raises(clarcube.errors.ValidationError):
            clarcube.cube.is_median_graph(clarcube.cube.SimpleGraph(0))
        with pytest.raises(clarcube.errors.ValidationError):
            clarcube.cube.is_median_graph(clarcube.cube.SimpleGraph(2))
        with pytest.raises(clarcube.errors.LimitError):
            clarcube.cube.is_median_graph(cycle(4), bound=3)


class TestFibonacciCube(object):
    """Test cases for :func:`clarcube.cube.fibonacci_cube`."""

    # fmt: off
    @pytest.mark.parametrize(
        "n,vertices,edges",
        [
            (0, 1, 0),
            (1, 2, 1),
            (2, 3, 2),
            (3, 5, 5),
            (4, 8, 10),
        ],
    )
    # fmt: on
    def test_sizes(self, n, vertices, edges):
        graph = clarcube.cube.fibonacci_cube(n)
        assert graph.n == vertices
        assert graph.num_edges == edges

    def test_strings(self):
        assert clarcube.cube.fibonacci_strings(3) == [0b000, 0b001, 0b010, 0b100, 0b101]

    def test_errors(self):
        with pytest.raises(ValueError):
            clarcube.cube.fibonacci_cube(-1)
        with pytest.raises(clarcube.errors.LimitError):
            clarcube.cube.fibonacci_cube(9, bound=8)


class TestIsomorphism(object):
    """Test cases for :func:`clarcube.cube.find_isomorphism` and
    :func:`clarcube.cube.graph_isomorphic`.

    """

    def test_trivial(self):
        assert clarcube.cube.graph_isomorphic(complete(2), clarcube.cube.fibonacci_cube(1))

    def test_same_degrees(self):
        """A hexagon and two triangles share their degree sequence."""
        triangles = clarcube.cube.SimpleGraph(
            6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        )
        assert not clarcube.cube.graph_isomorphic(cycle(6), triangles)

    def test_different_sizes(self):
        assert not clarcube.cube.graph_isomorphic(cycle(4), cycle(5))
        assert not clarcube.cube.graph_isomorphic(cycle(4), CLAW)

    @settings(max_examples=20, deadline=None)
    @given(data=st.data())
    def test_mapping_preserves_edges(self, data):
        graph = clarcube.cube.fibonacci_cube(5)
        permutation = data.draw(st.permutations(range(graph.n)))
        other = relabel(graph, permutation)

        mapping = clarcube.cube.find_isomorphism(graph, other)
        assert sorted(mapping.values()) == list(range(graph.n))
        assert sorted(
            tuple(sorted((mapping[i], mapping[j]))) for i, j in graph.edges
        ) == other.edges

    def test_zigzag_resonance_graph(self):
        """The resonance graph of a fibonacene is a Fibonacci cube."""
        system = clarcube.hexsys.catalog("zigzag", n=4)
        graph = clarcube.resonance.build_resonance_graph(system).to_graph()
        assert clarcube.cube.graph_isomorphic(graph, clarcube.cube.fibonacci_cube(4))

    def test_bound(self):
        with pytest.raises(clarcube.errors.LimitError):
            clarcube.cube.find_isomorphism(cycle(4), cycle(4), bound=3)
