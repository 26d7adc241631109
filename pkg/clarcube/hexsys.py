# clarcube/hexsys.py
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
"""Hexagonal systems embedded in the integer hexagonal lattice.

A cell ``(q, r)`` given in axial coordinates is drawn as a pointy-top hexagon
centered on ``(2q + r, 3r)``. Lattice vertices use a scaled Cartesian frame
where one horizontal unit is ``√3/2`` and one vertical unit is ``1/2``, so
that every vertex of the lattice has integer coordinates and every hexagon has
exactly two vertical edges.

::

                  (0, 2)
                 /      \\
          (-1, 1)        (1, 1)
             |      c       |
          (-1,-1)        (1,-1)
                 \\      /
                  (0,-2)

"""
import random
import typing as ty
import logging

import networkx as nx

from clarcube.errors import HexParseError, ValidationError
from clarcube.typeset import Edge, Vertex, edge
from clarcube.callable import retry


log = logging.getLogger(__name__)

#: Offsets of the six ring vertices from the cell center, starting with the
#: top end of the right vertical edge and going clockwise.
RING_OFFSETS = ((1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1), (0, 2))

#: Axial steps towards the six neighboring cells, counter-clockwise from east.
AXIAL_DIRECTIONS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

#: Number of chains drawn by :func:`random_cata` before giving up.
RANDOM_CATA_RETRIES = 1000


class HexCell(ty.NamedTuple):
    """A cell of the hexagonal lattice in axial coordinates."""

    q: int
    r: int

    @property
    def center(self) -> Vertex:
        """The center of the cell in lattice units."""
        return (2 * self.q + self.r, 3 * self.r)

    @property
    def ring(self) -> ty.Tuple[Vertex, ...]:
        """The six ring vertices, following :data:`RING_OFFSETS`."""
        u, v = self.center
        return tuple((u + du, v + dv) for du, dv in RING_OFFSETS)

    @property
    def neighbors(self) -> ty.Tuple["HexCell", ...]:
        """The six cells sharing an edge with this one."""
        return tuple(HexCell(self.q + dq, self.r + dr) for dq, dr in AXIAL_DIRECTIONS)

    def mirror(self) -> "HexCell":
        """Reflect the cell across the vertical axis ``u = 0``."""
        return HexCell(-self.q - self.r, self.r)


class Hexagon(ty.NamedTuple):
    """A hexagon (ring) of a system together with its two vertical edges.

    Hexagons are ordered by cell so that sorted collections of hexagons follow
    the lexicographic order of their ``(q, r)`` coordinates.

    """

    cell: HexCell
    ring: ty.Tuple[Vertex, ...]
    edges: ty.FrozenSet[Edge]
    left_vertical: Edge
    right_vertical: Edge

    @classmethod
    def of(cls, cell: HexCell) -> "Hexagon":
        """Build the hexagon drawn for a lattice cell.


        :param cell: The lattice cell.
        :type cell: ~clarcube.hexsys.HexCell


        :returns: The hexagon with its ring, edges and vertical edges.
        :rtype: ~clarcube.hexsys.Hexagon

        """
        ring = cell.ring
        cycle = _ring_edges(ring)
        return cls(
            cell=cell,
            ring=ring,
            edges=frozenset(cycle),
            left_vertical=cycle[3],
            right_vertical=cycle[0],
        )

    @property
    def vertices(self) -> ty.FrozenSet[Vertex]:
        """The six vertices of the ring."""
        return frozenset(self.ring)

    @property
    def perfect_matchings(self) -> ty.Tuple[ty.FrozenSet[Edge], ty.FrozenSet[Edge]]:
        """The two perfect matchings of the ring; the first one holds the right
        vertical edge.

        """
        cycle = _ring_edges(self.ring)
        return frozenset(cycle[0::2]), frozenset(cycle[1::2])

    @property
    def label(self) -> str:
        """The ``"q r"`` label used in graph exports."""
        return f"{self.cell.q} {self.cell.r}"


def _ring_edges(ring: ty.Sequence[Vertex]) -> ty.List[Edge]:
    return [edge(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]


def mirror_vertex(vertex: Vertex) -> Vertex:
    """Reflect a lattice vertex across the vertical axis ``u = 0``."""
    return (-vertex[0], vertex[1])


def mirror_edge(e: Edge) -> Edge:
    """Reflect an edge across the vertical axis ``u = 0``."""
    return edge(mirror_vertex(e[0]), mirror_vertex(e[1]))


class HexagonalSystem(object):
    """A (generalized) hexagonal system: a subgraph of the hexagonal lattice
    together with the lattice cells whose ring it fully contains.

    Instances are immutable. Plain systems are built with
    :meth:`~clarcube.hexsys.HexagonalSystem.from_cells`; generalized systems
    come out of :func:`delete_hexagon` and :func:`delete_sextet_pattern`.


    :param cells: Candidate cells. Only cells whose full ring is part of the
                  graph are kept as hexagons.
    :type cells: ~typing.Iterable[~clarcube.hexsys.HexCell]

    :param vertices: The vertex set.
    :type vertices: ~typing.Iterable[~clarcube.typeset.Vertex]

    :param edges: The edge set, as canonical sorted pairs.
    :type edges: ~typing.Iterable[~clarcube.typeset.Edge]

    :param generalized: Whether the system is a generalized one.
    :type generalized: bool


    :raises ~clarcube.errors.ValidationError: When the graph is not a simple
                                              subgraph of the lattice.

    """

    __slots__ = ("cells", "vertices", "edges", "hexagons", "generalized", "_adjacency")

    def __init__(
        self,
        cells: ty.Iterable[HexCell],
        vertices: ty.Iterable[Vertex],
        edges: ty.Iterable[Edge],
        generalized: bool = True,
    ):
        """Constructor for :class:`clarcube.hexsys.HexagonalSystem`."""
        self.vertices: ty.FrozenSet[Vertex] = frozenset(vertices)
        self.edges: ty.FrozenSet[Edge] = frozenset(edge(*e) for e in edges)
        self.generalized = generalized

        adjacency = {v: [] for v in self.vertices}
        for a, b in self.edges:
            if a == b or a not in adjacency or b not in adjacency:
                raise ValidationError(f"edge {(a, b)} is not a simple edge.", (a, b))
            adjacency[a].append(b)
            adjacency[b].append(a)
        for v, nbrs in adjacency.items():
            if len(nbrs) > 3:
                raise ValidationError(f"vertex {v} has degree {len(nbrs)}.", v)
        self._adjacency = {v: tuple(sorted(nbrs)) for v, nbrs in adjacency.items()}

        hexagons = (Hexagon.of(HexCell(*c)) for c in set(cells))
        self.hexagons: ty.Tuple[Hexagon, ...] = tuple(
            sorted(h for h in hexagons if h.edges <= self.edges)
        )
        self.cells: ty.FrozenSet[HexCell] = frozenset(h.cell for h in self.hexagons)

    def __eq__(self, other: ty.Any) -> bool:
        if not isinstance(other, HexagonalSystem):
            return NotImplemented
        return (
            self.cells == other.cells
            and self.vertices == other.vertices
            and self.edges == other.edges
            and self.generalized == other.generalized
        )

    def __hash__(self) -> int:
        return hash((self.cells, self.vertices, self.edges, self.generalized))

    def __repr__(self) -> str:
        kind = "generalized " if self.generalized else ""
        return (
            f"<{kind}HexagonalSystem |V|={len(self.vertices)} |E|={len(self.edges)}"
            f" hexagons={len(self.hexagons)}>"
        )

    @classmethod
    def from_cells(cls, cells: ty.Iterable[ty.Tuple[int, int]]) -> "HexagonalSystem":
        """Build the hexagonal system formed by a set of lattice cells.


        :param cells: The cells, duplicates are collapsed.
        :type cells: ~typing.Iterable[~typing.Tuple[int, int]]


        :returns: The system made of the union of the cells' rings.
        :rtype: ~clarcube.hexsys.HexagonalSystem


        :raises ~clarcube.errors.ValidationError: When no cell is given or when
                                                  cells form several parts.

        """
        cells = {HexCell(*c) for c in cells}
        if not cells:
            raise ValidationError("a hexagonal system needs at least one cell.")

        graph = nx.Graph()
        graph.add_nodes_from(cells)
        graph.add_edges_from((c, n) for c in cells for n in c.neighbors if n in cells)
        parts = [min(part) for part in nx.connected_components(graph)]
        if len(parts) > 1:
            parts.sort()
            raise ValidationError(
                f"cells form {len(parts)} disconnected parts, e.g. "
                + ", ".join(f"({c.q},{c.r})" for c in parts)
                + ".",
                parts,
            )

        vertices = set()
        edges = set()
        for c in cells:
            ring = c.ring
            vertices.update(ring)
            edges.update(_ring_edges(ring))

        # An annulus of cells leaves a face that is not a cell.
        generalized = len(edges) != len(vertices) + len(cells) - 1
        if generalized:
            log.warning(
                "Cell set encloses a hole; treating it as a generalized system."
            )

        return cls(cells, vertices, edges, generalized=generalized)

    @property
    def adjacency(self) -> ty.Mapping[Vertex, ty.Tuple[Vertex, ...]]:
        """Sorted neighbors of every vertex."""
        return self._adjacency

    @property
    def is_empty(self) -> bool:
        """Whether the system has no vertex."""
        return not self.vertices

    def hexagon(self, cell: ty.Tuple[int, int]) -> Hexagon:
        """Get the hexagon of the system drawn on the given cell.


        :param cell: Axial coordinates of the hexagon.
        :type cell: ~typing.Tuple[int, int]


        :returns: The matching hexagon.
        :rtype: ~clarcube.hexsys.Hexagon


        :raises KeyError: When the cell is not a hexagon of the system.

        """
        cell = HexCell(*cell)
        for h in self.hexagons:
            if h.cell == cell:
                return h
        raise KeyError(cell)


def parse_hex_file(text: str) -> HexagonalSystem:
    """Read a ``.hex`` document listing one ``q r`` cell per line. Blank lines
    and ``#`` comments are ignored.


    :param text: The document content.
    :type text: str


    :returns: The hexagonal system formed by the listed cells.
    :rtype: ~clarcube.hexsys.HexagonalSystem


    :raises ~clarcube.errors.HexParseError: On a malformed line.

    :raises ~clarcube.errors.ValidationError: When the cells are disconnected.

    """
    cells = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue

        fields = line.split()
        if len(fields) != 2:
            raise HexParseError(f"expected two integers, got {line!r}.", lineno)
        try:
            cells.append(HexCell(int(fields[0]), int(fields[1])))
        except ValueError:
            raise HexParseError(f"expected two integers, got {line!r}.", lineno)

    log.debug(f"Read {len(cells)} cells.")
    return HexagonalSystem.from_cells(cells)


def serialize(system: HexagonalSystem) -> str:
    """Write the ``.hex`` document of a system, cells sorted by ``(q, r)``.


    :param system: The system to describe.
    :type system: ~clarcube.hexsys.HexagonalSystem


    :returns: The document content.
    :rtype: str


    :raises ValueError: When the system is not the union of its cells, which is
                        the case of most systems obtained by deletion.

    """
    rebuilt_vertices = set()
    rebuilt_edges = set()
    for h in system.hexagons:
        rebuilt_vertices.update(h.ring)
        rebuilt_edges.update(h.edges)
    if (
        not system.cells
        or rebuilt_vertices != system.vertices
        or rebuilt_edges != system.edges
    ):
        raise ValueError("system cannot be described by its cells alone.")

    return "".join(f"{c.q} {c.r}\n" for c in sorted(system.cells))


def mirror(system: HexagonalSystem) -> HexagonalSystem:
    """Reflect a system across the vertical axis ``u = 0``. Right vertical
    edges become left vertical edges and conversely.


    :param system: The system to reflect.
    :type system: ~clarcube.hexsys.HexagonalSystem


    :returns: The mirror image.
    :rtype: ~clarcube.hexsys.HexagonalSystem

    """
    return HexagonalSystem(
        (c.mirror() for c in system.cells),
        (mirror_vertex(v) for v in system.vertices),
        (mirror_edge(e) for e in system.edges),
        generalized=system.generalized,
    )


def _remove_vertices(
    system: HexagonalSystem, gone: ty.AbstractSet[Vertex]
) -> HexagonalSystem:
    return HexagonalSystem(
        (h.cell for h in system.hexagons if not h.vertices & gone),
        system.vertices - gone,
        (e for e in system.edges if e[0] not in gone and e[1] not in gone),
        generalized=True,
    )


def delete_hexagon(system: HexagonalSystem, hexagon: Hexagon) -> HexagonalSystem:
    """Remove the six vertices of a hexagon and all their incident edges.


    :param system: The host system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param hexagon: A hexagon of the system.
    :type hexagon: ~clarcube.hexsys.Hexagon


    :returns: The generalized system ``H - h``, possibly empty or disconnected.
    :rtype: ~clarcube.hexsys.HexagonalSystem


    :raises ValueError: When the hexagon does not belong to the system.

    """
    if hexagon not in system.hexagons:
        raise ValueError(f"hexagon {tuple(hexagon.cell)} is not in the system.")
    return _remove_vertices(system, hexagon.vertices)


def delete_sextet_pattern(
    system: HexagonalSystem, pattern: ty.Iterable[Hexagon]
) -> HexagonalSystem:
    """Remove all the vertices of a set of pairwise disjoint hexagons.


    :param system: The host system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param pattern: Pairwise vertex-disjoint hexagons of the system.
    :type pattern: ~typing.Iterable[~clarcube.hexsys.Hexagon]


    :returns: The generalized system ``H - R``, ``H`` itself when ``R`` is
              empty.
    :rtype: ~clarcube.hexsys.HexagonalSystem


    :raises ValueError: When a hexagon is foreign to the system or when two
                        hexagons overlap.

    """
    gone = set()
    for h in pattern:
        if h not in system.hexagons:
            raise ValueError(f"hexagon {tuple(h.cell)} is not in the system.")
        if gone & h.vertices:
            raise ValueError(f"hexagon {tuple(h.cell)} overlaps the pattern.")
        gone.update(h.vertices)
    if not gone:
        return system
    return _remove_vertices(system, gone)


def _walk(steps: ty.Iterable[int], n: int) -> ty.List[HexCell]:
    cells = [HexCell(0, 0)]
    for step in steps:
        if len(cells) == n:
            break
        dq, dr = AXIAL_DIRECTIONS[step % 6]
        cells.append(HexCell(cells[-1].q + dq, cells[-1].r + dr))
    return cells


@retry(ValidationError, attempts=RANDOM_CATA_RETRIES)
def _random_chain(n: int, rng: random.Random) -> ty.List[HexCell]:
    heading = 0
    cells = [HexCell(0, 0)]
    taken = set(cells)
    while len(cells) < n:
        if len(cells) > 1:
            # -1/+1 annelate angularly, 0 linearly.
            heading = (heading + rng.choice((-1, 0, 1))) % 6
        dq, dr = AXIAL_DIRECTIONS[heading]
        cell = HexCell(cells[-1].q + dq, cells[-1].r + dr)
        if cell in taken or any(
            c in taken and c != cells[-1] for c in cell.neighbors
        ):
            raise ValidationError(f"chain runs into itself at {tuple(cell)}.", cell)
        cells.append(cell)
        taken.add(cell)
    return cells


#: Fixed members of the catalog, as axial cells.
CATALOG = {
    "benzene": ((0, 0),),
    "naphthalene": ((0, 0), (1, 0)),
    "anthracene": ((0, 0), (1, 0), (2, 0)),
    "phenanthrene": ((0, 0), (1, 0), (1, 1)),
    "triphenylene": ((0, 0), (1, 0), (-1, 1), (0, -1)),
    "pyrene": ((0, 0), (1, 0), (0, 1), (1, -1)),
    "coronene": ((0, 0), (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)),
}

#: Catalog families parametrized by a number of hexagons.
FAMILIES = ("linear", "zigzag", "random_cata")


def catalog(
    name: str, n: ty.Optional[int] = None, seed: ty.Optional[int] = None
) -> HexagonalSystem:
    """Build a named hexagonal system.

    Fixed molecules are listed in :data:`CATALOG`. The families are:

    - ``linear``: the linear chain (acene) of ``n`` hexagons;
    - ``zigzag``: the chain of ``n`` hexagons where every inner hexagon is
      angularly annelated, alternating sides (a fibonacene);
    - ``random_cata``: a chain of ``n`` hexagons with uniformly drawn linear
      or angular annelations, drawn again when it runs into itself.


    :param name: A name from :data:`CATALOG` or :data:`FAMILIES`.
    :type name: str

    :param n: The number of hexagons of a family member.
    :type n: ~typing.Optional[int]

    :param seed: Seed of the random chain generator.
    :type seed: ~typing.Optional[int]


    :returns: The named system.
    :rtype: ~clarcube.hexsys.HexagonalSystem


    :raises ~clarcube.errors.ValidationError: On an unknown name, a missing
                                              or non-positive ``n``, or when no
                                              random chain could be placed.

    """
    if name in CATALOG:
        return HexagonalSystem.from_cells(CATALOG[name])
    if name not in FAMILIES:
        raise ValidationError(f"unknown catalog name {name!r}.", name)
    if n is None or n < 1:
        raise ValidationError(f"{name} needs a positive number of hexagons.", n)

    if name == "linear":
        cells = [HexCell(i, 0) for i in range(n)]
    elif name == "zigzag":
        cells = _walk((i % 2 for i in range(n)), n)
    else:
        cells = _random_chain(n, random.Random(seed))

    log.debug(f"Catalog {name}({n}): {sorted(cells)}.")
    return HexagonalSystem.from_cells(cells)
