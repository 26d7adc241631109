# clarcube/typeset.py
# ===================
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
import typing as ty


#: A lattice vertex ``(u, v)`` in scaled Cartesian units: ``u`` counts
#: half-widths of a hexagon and ``v`` counts half edge lengths.
Vertex = ty.Tuple[int, int]
#: An undirected edge stored as a sorted pair of vertices.
Edge = ty.Tuple[Vertex, Vertex]
#: An edge set, e.g. a perfect matching.
EdgeSet = ty.FrozenSet[Edge]

#: Default cap on the number of perfect matchings of a system.
MAX_MATCHINGS = 100000
#: Default cap on the number of Clar covers of a system.
MAX_COVERS = 100000
#: Default cap on the number of induced hypercubes of a graph.
MAX_CUBES = 10 ** 6
#: Largest graph accepted by the median graph check.
MEDIAN_BOUND = 300
#: Largest graph accepted by the isomorphism check.
ISOMORPHISM_BOUND = 2000
#: Largest number of covers compared pairwise by the poset check.
POSET_BOUND = 500
#: Largest number of covers for the cubic-time poset axioms check.
AXIOM_BOUND = 200
#: Largest fibonacene verified.
FIBONACENE_BOUND = 8


def edge(a: Vertex, b: Vertex) -> Edge:
    """Build the canonical (sorted) form of the edge joining two vertices.


    :param a: One end of the edge.
    :type a: ~clarcube.typeset.Vertex

    :param b: The other end of the edge.
    :type b: ~clarcube.typeset.Vertex


    :returns: The edge with its smallest end first.
    :rtype: ~clarcube.typeset.Edge

    """
    return (a, b) if a <= b else (b, a)


class Limits(ty.NamedTuple):
    """Resource caps shared by the enumeration kernels and the verification
    engine. Every field falls back to the module default of the kernel it
    guards.

    """

    #: Maximum number of perfect matchings enumerated for one system.
    max_matchings: int = MAX_MATCHINGS
    #: Maximum number of Clar covers enumerated for one system.
    max_covers: int = MAX_COVERS
    #: Maximum number of induced hypercubes enumerated for one graph.
    max_cubes: int = MAX_CUBES
    #: Maximum vertex count accepted by the median-graph triple check.
    median_bound: int = MEDIAN_BOUND
    #: Maximum vertex count accepted by the isomorphism test.
    isomorphism_bound: int = ISOMORPHISM_BOUND
    #: Maximum number of covers for the pairwise poset comparison.
    poset_bound: int = POSET_BOUND
    #: Maximum number of covers for the cubic-time poset axioms check.
    axiom_bound: int = AXIOM_BOUND
    #: Largest fibonacene verified.
    fibonacene_bound: int = FIBONACENE_BOUND
