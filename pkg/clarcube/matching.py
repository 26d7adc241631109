# clarcube/matching.py
# ====================
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
"""Kekulé structures (perfect matchings) and sextets."""
import enum
import typing as ty
import logging

from collections import Counter

from clarcube.errors import LimitError
from clarcube.hexsys import Hexagon, HexagonalSystem
from clarcube.typeset import MAX_MATCHINGS, Edge, EdgeSet, edge


log = logging.getLogger(__name__)


class SextetClass(enum.Enum):
    """Side of the matched vertical edge of an alternating hexagon."""

    #: The right vertical edge is matched.
    PROPER = "proper"
    #: The left vertical edge is matched.
    IMPROPER = "improper"


class PerfectMatching(ty.NamedTuple):
    """A Kekulé structure of a system with its enumeration index."""

    id: int
    edges: EdgeSet

    def to_json(self) -> ty.List[ty.List[ty.List[int]]]:
        """The matching as a sorted list of ``[[u, v], [u2, v2]]`` edges."""
        return [[list(a), list(b)] for a, b in sorted(self.edges)]


def iter_perfect_matchings(system: HexagonalSystem) -> ty.Iterator[EdgeSet]:
    """Lazily generate the perfect matchings of a system in canonical order:
    the smallest uncovered vertex is matched first, trying its neighbors in
    sorted order.

    The empty system yields exactly one, empty, perfect matching.


    :param system: The (generalized) hexagonal system.
    :type system: ~clarcube.hexsys.HexagonalSystem


    :returns: Edge sets of the perfect matchings.
    :rtype: ~typing.Iterator[~clarcube.typeset.EdgeSet]

    """
    adjacency = system.adjacency
    order = sorted(system.vertices)
    covered = set()
    chosen: ty.List[Edge] = []

    def _search(i: int) -> ty.Iterator[EdgeSet]:
        while i < len(order) and order[i] in covered:
            i += 1
        if i == len(order):
            yield frozenset(chosen)
            return

        v = order[i]
        covered.add(v)
        for w in adjacency[v]:
            if w in covered:
                continue
            covered.add(w)
            chosen.append(edge(v, w))
            yield from _search(i + 1)
            chosen.pop()
            covered.discard(w)
        covered.discard(v)

    return _search(0)


def has_perfect_matching(system: HexagonalSystem) -> bool:
    """Whether the system is Kekuléan (the empty system is)."""
    return next(iter_perfect_matchings(system), None) is not None


def enumerate_perfect_matchings(
    system: HexagonalSystem, limit: int = MAX_MATCHINGS
) -> ty.List[PerfectMatching]:
    """List all the perfect matchings of a system. Indices follow the
    canonical order of :func:`iter_perfect_matchings`.


    :param system: The (generalized) hexagonal system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param limit: The maximum number of matchings to enumerate.
    :type limit: int


    :returns: The perfect matchings, ``id`` being the position in the list.
    :rtype: ~typing.List[~clarcube.matching.PerfectMatching]


    :raises ~clarcube.errors.LimitError: When the system has more than
                                         ``limit`` perfect matchings.

    """
    matchings = []
    for edges in iter_perfect_matchings(system):
        if len(matchings) == limit:
            raise LimitError("perfect matchings", limit)
        matchings.append(PerfectMatching(len(matchings), edges))

    log.debug(f"Enumerated {len(matchings)} perfect matchings of {system!r}.")
    return matchings


def kekule_count(system: HexagonalSystem, limit: int = MAX_MATCHINGS) -> int:
    """Count the perfect matchings of a system."""
    return len(enumerate_perfect_matchings(system, limit=limit))


def classify(hexagon: Hexagon, edges: EdgeSet) -> ty.Optional[SextetClass]:
    """Classify a hexagon against a perfect matching.


    :param hexagon: The hexagon.
    :type hexagon: ~clarcube.hexsys.Hexagon

    :param edges: Edge set of a perfect matching.
    :type edges: ~clarcube.typeset.EdgeSet


    :returns: ``None`` when the hexagon is not alternating, otherwise the side
              of its matched vertical edge.
    :rtype: ~typing.Optional[~clarcube.matching.SextetClass]

    """
    inside = edges & hexagon.edges
    # Three pairwise disjoint edges always cover a 6-cycle.
    if len(inside) != 3:
        return None
    if hexagon.right_vertical in inside:
        return SextetClass.PROPER
    return SextetClass.IMPROPER


def alternating_hexagons(
    system: HexagonalSystem, matching: PerfectMatching
) -> ty.List[ty.Tuple[Hexagon, SextetClass]]:
    """List the hexagons of a system that are alternating in a matching.


    :param system: The host system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param matching: A perfect matching of the system.
    :type matching: ~clarcube.matching.PerfectMatching


    :returns: Every alternating hexagon with its sextet class, in hexagon
              order.
    :rtype: ~typing.List[~typing.Tuple[~clarcube.hexsys.Hexagon,
            ~clarcube.matching.SextetClass]]

    """
    result = []
    for h in system.hexagons:
        cls = classify(h, matching.edges)
        if cls is not None:
            result.append((h, cls))
    return result


def proper_sextet_histogram(
    system: HexagonalSystem, limit: int = MAX_MATCHINGS
) -> ty.Dict[int, int]:
    """Count the perfect matchings by number of proper sextets.


    :param system: The (generalized) hexagonal system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param limit: The maximum number of matchings to enumerate.
    :type limit: int


    :returns: A mapping ``i -> a(H, i)`` sorted by ``i``; values sum up to the
              Kekulé count.
    :rtype: ~typing.Dict[int, int]

    """
    counts = Counter(
        sum(
            cls is SextetClass.PROPER
            for _, cls in alternating_hexagons(system, matching)
        )
        for matching in enumerate_perfect_matchings(system, limit=limit)
    )
    return dict(sorted(counts.items()))
