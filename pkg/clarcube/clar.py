# clarcube/clar.py
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
"""Clar covers, sextet patterns and the Clar covering polynomial.

A Clar cover is a spanning subgraph whose components are hexagons and single
edges. The Clar covering polynomial ``ζ(H, x)`` counts them by number of
hexagons. By convention the empty system has the single empty cover, so
``ζ = 1``, and a system without perfect matching has none, so ``ζ = 0``.

"""
import typing as ty
import logging

from clarcube.errors import LimitError, NotKekuleanError, ValidationError
from clarcube.hexsys import Hexagon, HexagonalSystem, delete_sextet_pattern
from clarcube.matching import has_perfect_matching, iter_perfect_matchings
from clarcube.poly import IntPolynomial
from clarcube.typeset import MAX_COVERS, EdgeSet, Vertex


log = logging.getLogger(__name__)


class ClarCover(ty.NamedTuple):
    """A Clar cover: pairwise disjoint hexagons, sorted, and the isolated
    edges covering every other vertex.

    """

    hexagons: ty.Tuple[Hexagon, ...]
    isolated_edges: EdgeSet

    @classmethod
    def of(cls, hexagons: ty.Iterable[Hexagon], edges: ty.Iterable) -> "ClarCover":
        """Build a cover in canonical form."""
        return cls(tuple(sorted(hexagons)), frozenset(edges))

    @property
    def size(self) -> int:
        """The number of hexagons."""
        return len(self.hexagons)

    @property
    def vertices(self) -> ty.FrozenSet[Vertex]:
        """The vertices spanned by the cover."""
        spanned = set()
        for h in self.hexagons:
            spanned.update(h.ring)
        for a, b in self.isolated_edges:
            spanned.add(a)
            spanned.add(b)
        return frozenset(spanned)

    def to_json(self) -> ty.Dict[str, ty.Any]:
        """Serialize as ``{"hexagons": [[q, r], ...], "edges": [[[u, v],
        [u2, v2]], ...]}``.

        """
        return {
            "hexagons": [[h.cell.q, h.cell.r] for h in self.hexagons],
            "edges": [[list(a), list(b)] for a, b in sorted(self.isolated_edges)],
        }


class SextetPattern(ty.NamedTuple):
    """Pairwise disjoint hexagons whose deletion leaves a graph with a perfect
    matching (a resonant set).

    """

    hexagons: ty.Tuple[Hexagon, ...]

    @property
    def size(self) -> int:
        return len(self.hexagons)

    def to_json(self) -> ty.List[ty.List[int]]:
        return [[h.cell.q, h.cell.r] for h in self.hexagons]


def cover_to_json(cover: ClarCover) -> ty.Dict[str, ty.Any]:
    """See :meth:`ClarCover.to_json`."""
    return cover.to_json()


def disjoint_hexagon_sets(system: HexagonalSystem) -> ty.Iterator[ty.Tuple[Hexagon, ...]]:
    """Generate every set of pairwise vertex-disjoint hexagons of a system,
    the empty one included, each once as a tuple sorted by cell.

    """
    hexagons = system.hexagons
    chosen: ty.List[Hexagon] = []
    used: ty.Set[Vertex] = set()

    def _search(start: int) -> ty.Iterator[ty.Tuple[Hexagon, ...]]:
        yield tuple(chosen)
        for i in range(start, len(hexagons)):
            h = hexagons[i]
            if used.isdisjoint(h.ring):
                chosen.append(h)
                used.update(h.ring)
                yield from _search(i + 1)
                chosen.pop()
                used.difference_update(h.ring)

    return _search(0)


def enumerate_clar_covers(
    system: HexagonalSystem, limit: int = MAX_COVERS
) -> ty.Dict[int, ty.List[ClarCover]]:
    """Enumerate the Clar covers of a system by number of hexagons: for every
    set of disjoint hexagons, every perfect matching of what remains once they
    are deleted.


    :param system: The (generalized) hexagonal system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param limit: The maximum number of covers.
    :type limit: int


    :returns: The covers with ``k`` hexagons for every ``k`` having some.
    :rtype: ~typing.Dict[int, ~typing.List[~clarcube.clar.ClarCover]]


    :raises ~clarcube.errors.LimitError: When there are more than ``limit``
                                         covers.

    """
    covers: ty.Dict[int, ty.List[ClarCover]] = {}
    total = 0
    for pattern in disjoint_hexagon_sets(system):
        rest = delete_sextet_pattern(system, pattern)
        for edges in iter_perfect_matchings(rest):
            total += 1
            if total > limit:
                raise LimitError("Clar covers", limit)
            covers.setdefault(len(pattern), []).append(ClarCover(pattern, edges))

    log.debug(f"Enumerated {total} Clar covers of {system!r}.")
    return dict(sorted(covers.items()))


def zz_polynomial(system: HexagonalSystem, limit: int = MAX_COVERS) -> IntPolynomial:
    """The Clar covering polynomial ``ζ(H, x)``.


    :param system: The (generalized) hexagonal system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param limit: The maximum number of covers.
    :type limit: int


    :returns: The polynomial whose coefficient ``k`` counts the Clar covers
              with ``k`` hexagons.
    :rtype: ~clarcube.poly.IntPolynomial

    """
    covers = enumerate_clar_covers(system, limit=limit)
    return IntPolynomial.from_counts({k: len(c) for k, c in covers.items()})


def clar_number(system: HexagonalSystem, limit: int = MAX_COVERS) -> int:
    """The Clar number: the largest number of hexagons of a Clar cover.


    :raises ~clarcube.errors.NotKekuleanError: When the system has no Clar
                                               cover.

    """
    zeta = zz_polynomial(system, limit=limit)
    if zeta.is_zero:
        raise NotKekuleanError(f"{system!r} has no Clar cover.")
    return zeta.degree


def enumerate_sextet_patterns(
    system: HexagonalSystem, limit: int = MAX_COVERS
) -> ty.List[SextetPattern]:
    """List the sextet patterns of a system, the empty one first when the
    system is Kekuléan.


    :raises ~clarcube.errors.LimitError: When there are more than ``limit``
                                         patterns.

    """
    patterns = []
    for hexagons in disjoint_hexagon_sets(system):
        if has_perfect_matching(delete_sextet_pattern(system, hexagons)):
            if len(patterns) == limit:
                raise LimitError("sextet patterns", limit)
            patterns.append(SextetPattern(hexagons))
    return patterns


def sextet_polynomial(system: HexagonalSystem, limit: int = MAX_COVERS) -> IntPolynomial:
    """The sextet polynomial, counting sextet patterns by size."""
    counts: ty.Dict[int, int] = {}
    for pattern in enumerate_sextet_patterns(system, limit=limit):
        counts[pattern.size] = counts.get(pattern.size, 0) + 1
    return IntPolynomial.from_counts(counts)


def clar_cover_leq(cover: ClarCover, other: ClarCover) -> bool:
    """Compare two Clar covers of a system: ``cover <= other`` when the
    hexagons of ``cover`` belong to ``other`` and, apart from edges inside the
    hexagons of ``other``, both covers have the same isolated edges.


    :param cover: A Clar cover.
    :type cover: ~clarcube.clar.ClarCover

    :param other: A Clar cover of the same system.
    :type other: ~clarcube.clar.ClarCover


    :returns: Whether ``cover <= other``.
    :rtype: bool


    :raises ~clarcube.errors.ValidationError: When the covers do not span the
                                              same vertices.

    """
    if cover.vertices != other.vertices:
        raise ValidationError("covers of different systems.", (cover, other))
    if not set(cover.hexagons) <= set(other.hexagons):
        return False

    inside = set()
    for h in other.hexagons:
        inside.update(h.edges)
    outside = {e for e in cover.isolated_edges if e not in inside}
    return outside == set(other.isolated_edges)


def is_maximal_cover(system: HexagonalSystem, cover: ClarCover) -> bool:
    """Whether no hexagon outside of a cover alternates along its isolated
    edges.

    """
    chosen = set(cover.hexagons)
    return not any(
        len(h.edges & cover.isolated_edges) == 3
        for h in system.hexagons
        if h not in chosen
    )


def maximal_clar_covers(
    system: HexagonalSystem,
    limit: int = MAX_COVERS,
    covers: ty.Optional[ty.Mapping[int, ty.Sequence[ClarCover]]] = None,
) -> ty.List[ClarCover]:
    """List the maximal Clar covers of a system, those without alternating
    hexagon.


    :param system: The (generalized) hexagonal system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param limit: The maximum number of covers.
    :type limit: int

    :param covers: Already enumerated covers of the system, if any.
    :type covers: ~typing.Optional[~typing.Mapping[int,
                  ~typing.Sequence[~clarcube.clar.ClarCover]]]


    :returns: The maximal covers, in enumeration order.
    :rtype: ~typing.List[~clarcube.clar.ClarCover]

    """
    if covers is None:
        covers = enumerate_clar_covers(system, limit=limit)
    return [c for k in sorted(covers) for c in covers[k] if is_maximal_cover(system, c)]
