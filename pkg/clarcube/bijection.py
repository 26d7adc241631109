# clarcube/bijection.py
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
"""Correspondence between Clar covers and induced hypercubes of the resonance
graph, and the checks built upon it.

A Clar cover ``C`` with ``k`` hexagons is sent to the set of perfect matchings
containing its isolated edges and alternating along its hexagons, which
induces a ``k``-cube of the resonance graph. The way back goes through the
unique source of a hypercube under the sextet orientation.

Every ``verify_*`` function returns a :class:`VerificationReport`; a failed
check never raises but lands in the report with a witness.

"""
import math
import time
import typing as ty
import logging
import itertools

from collections import Counter
from functools import cached_property

import networkx as nx

from clarcube.clar import (
    ClarCover,
    clar_cover_leq,
    disjoint_hexagon_sets,
    enumerate_clar_covers,
    enumerate_sextet_patterns,
    maximal_clar_covers,
    sextet_polynomial,
    zz_polynomial,
)
from clarcube.cube import (
    HypercubeEmbedding,
    SimpleGraph,
    cube_polynomial,
    enumerate_induced_hypercubes,
    fibonacci_cube,
    graph_isomorphic,
    is_induced_hypercube,
    is_median_graph,
    maximal_hypercubes,
)
from clarcube.errors import LimitError, ValidationError, VerificationError
from clarcube.hexsys import (
    HexagonalSystem,
    catalog,
    delete_sextet_pattern,
    mirror,
    mirror_edge,
)
from clarcube.matching import (
    PerfectMatching,
    SextetClass,
    alternating_hexagons,
    classify,
    enumerate_perfect_matchings,
    proper_sextet_histogram,
)
from clarcube.poly import (
    IntPolynomial,
    count_real_roots,
    derivative,
    evaluate,
    from_shifted,
    is_unimodal,
    rational_roots,
    theta,
    to_shifted,
)
from clarcube.resonance import (
    DirectedResonanceGraph,
    ResonanceGraph,
    assert_acyclic,
    build_resonance_graph,
    orient,
    source_hypercubes,
)
from clarcube.typeset import Limits


log = logging.getLogger(__name__)


class Check(ty.NamedTuple):
    """Outcome of a single named check."""

    name: str
    passed: bool
    witness: ty.Any = None
    ms: float = 0.0

    def to_json(self) -> ty.Dict[str, ty.Any]:
        return {"name": self.name, "pass": self.passed, "witness": self.witness, "ms": self.ms}


class VerificationReport(object):
    """Checks run on one system, sorted by name.


    :param system: A name for the checked system.
    :type system: str

    :param checks: The checks.
    :type checks: ~typing.Iterable[~clarcube.bijection.Check]

    """

    __slots__ = ("system", "checks")

    def __init__(self, system: str, checks: ty.Iterable[Check] = ()):
        """Constructor for :class:`clarcube.bijection.VerificationReport`."""
        self.system = system
        self.checks: ty.List[Check] = sorted(checks, key=lambda c: c.name)

    def __repr__(self) -> str:
        state = "passed" if self.passed else f"{len(self.failures)} failed"
        return f"<VerificationReport {self.system} checks={len(self.checks)} {state}>"

    def __iter__(self) -> ty.Iterator[Check]:
        return iter(self.checks)

    def __len__(self) -> int:
        return len(self.checks)

    def __getitem__(self, name: str) -> Check:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> ty.List[Check]:
        return [c for c in self.checks if not c.passed]

    def merge(self, *others: "VerificationReport") -> "VerificationReport":
        """Gather the checks of several reports on the same system."""
        return VerificationReport(
            self.system, itertools.chain(self.checks, *(o.checks for o in others))
        )

    def to_json(self) -> ty.Dict[str, ty.Any]:
        """Serialize as ``{"system": str, "checks": [{"name": str, "pass":
        bool, "witness": object, "ms": number}, ...]}``.

        """
        return {"system": self.system, "checks": [c.to_json() for c in self.checks]}


def _require(condition: bool, message: str, witness: ty.Any = None):
    if not condition:
        raise VerificationError(message, witness)


def _check(name: str, fn: ty.Callable[[], ty.Any]) -> Check:
    start = time.perf_counter()
    try:
        witness = fn()
        passed = True
    except VerificationError as e:
        witness = e.witness if e.witness is not None else str(e)
        passed = False
    ms = round((time.perf_counter() - start) * 1000, 3)

    if passed:
        log.info(f"Check {name}: passed.")
    else:
        log.warning(f"Check {name}: failed with {witness!r}.")
    return Check(name, passed, witness, ms)


_NOT_KEKULEAN = {"kekulean": False}


class SystemAnalysis(object):
    """Objects derived from a system, computed once on first use and shared
    by the checks.


    :param system: The (generalized) hexagonal system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param limits: Resource caps.
    :type limits: ~clarcube.typeset.Limits

    :param name: The name used in reports.
    :type name: ~typing.Optional[str]

    """

    def __init__(
        self,
        system: HexagonalSystem,
        limits: ty.Optional[Limits] = None,
        name: ty.Optional[str] = None,
    ):
        """Constructor for :class:`clarcube.bijection.SystemAnalysis`."""
        self.system = system
        self.limits = limits or Limits()
        self.name = name or repr(system)

    @cached_property
    def matchings(self) -> ty.List[PerfectMatching]:
        return enumerate_perfect_matchings(self.system, limit=self.limits.max_matchings)

    @cached_property
    def resonance_graph(self) -> ResonanceGraph:
        return build_resonance_graph(self.system, matchings=self.matchings)

    @cached_property
    def digraph(self) -> DirectedResonanceGraph:
        return orient(self.resonance_graph)

    @cached_property
    def graph(self) -> SimpleGraph:
        return self.resonance_graph.to_graph()

    @cached_property
    def covers(self) -> ty.Dict[int, ty.List[ClarCover]]:
        return enumerate_clar_covers(self.system, limit=self.limits.max_covers)

    @cached_property
    def all_covers(self) -> ty.List[ClarCover]:
        return [c for k in sorted(self.covers) for c in self.covers[k]]

    @cached_property
    def zeta(self) -> IntPolynomial:
        return IntPolynomial.from_counts({k: len(c) for k, c in self.covers.items()})

    @cached_property
    def cubes(self) -> ty.Dict[int, ty.List[HypercubeEmbedding]]:
        return enumerate_induced_hypercubes(self.graph, limit=self.limits.max_cubes)

    @cached_property
    def all_cubes(self) -> ty.List[HypercubeEmbedding]:
        return [e for d in sorted(self.cubes) for e in self.cubes[d]]

    @cached_property
    def cube_polynomial(self) -> IntPolynomial:
        return IntPolynomial.from_counts({d: len(e) for d, e in self.cubes.items()})

    @cached_property
    def images(self) -> ty.Dict[ClarCover, HypercubeEmbedding]:
        """The forward map on every Clar cover."""
        return {
            c: clar_cover_to_hypercube(self.system, self.resonance_graph, c)
            for c in self.all_covers
        }

    def inverse(self, cube: HypercubeEmbedding) -> ClarCover:
        """The inverse map on an induced hypercube."""
        return hypercube_to_clar_cover(
            self.system, self.resonance_graph, cube, digraph=self.digraph
        )


def _analysis(
    system: HexagonalSystem,
    limits: ty.Optional[Limits],
    analysis: ty.Optional[SystemAnalysis],
) -> SystemAnalysis:
    return analysis if analysis is not None else SystemAnalysis(system, limits)


def _validate_cover(system: HexagonalSystem, cover: ClarCover):
    hexagons = set(system.hexagons)
    spanned = []
    for h in cover.hexagons:
        if h not in hexagons:
            raise ValidationError(f"hexagon {tuple(h.cell)} is not in the system.", h)
        spanned.extend(h.ring)
    for e in cover.isolated_edges:
        if e not in system.edges:
            raise ValidationError(f"edge {e} is not in the system.", e)
        spanned.extend(e)
    if len(spanned) != len(set(spanned)) or set(spanned) != system.vertices:
        raise ValidationError("components do not partition the vertices.", cover)


def clar_cover_to_hypercube(
    system: HexagonalSystem, graph: ResonanceGraph, cover: ClarCover
) -> HypercubeEmbedding:
    """Send a Clar cover to the perfect matchings that contain its isolated
    edges and alternate along each of its hexagons.


    :param system: The host system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param graph: The resonance graph of the system.
    :type graph: ~clarcube.resonance.ResonanceGraph

    :param cover: A Clar cover of the system.
    :type cover: ~clarcube.clar.ClarCover


    :returns: The image, of dimension the number of hexagons of the cover.
    :rtype: ~clarcube.cube.HypercubeEmbedding


    :raises ~clarcube.errors.ValidationError: When ``cover`` is not a Clar
                                              cover of ``system``.

    """
    _validate_cover(system, cover)
    vertices = tuple(
        m.id
        for m in graph.matchings
        if cover.isolated_edges <= m.edges
        and all(classify(h, m.edges) is not None for h in cover.hexagons)
    )
    return HypercubeEmbedding(vertices, cover.size)


def hypercube_to_clar_cover(
    system: HexagonalSystem,
    graph: ResonanceGraph,
    cube: HypercubeEmbedding,
    digraph: ty.Optional[DirectedResonanceGraph] = None,
) -> ClarCover:
    """Recover the Clar cover of an induced hypercube from its source ``M0``:
    the hexagons are the labels of the arcs leaving ``M0`` inside the cube and
    the isolated edges the rest of ``M0``.


    :param system: The host system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param graph: The resonance graph of the system.
    :type graph: ~clarcube.resonance.ResonanceGraph

    :param cube: An induced hypercube of ``graph``.
    :type cube: ~clarcube.cube.HypercubeEmbedding

    :param digraph: The orientation of ``graph``, computed when missing.
    :type digraph: ~typing.Optional[~clarcube.resonance.DirectedResonanceGraph]


    :returns: The Clar cover whose image is ``cube``.
    :rtype: ~clarcube.clar.ClarCover


    :raises ~clarcube.errors.VerificationError: When the cube does not have
                                                exactly one source, or when
                                                the source has the wrong number
                                                of arcs inside the cube.

    """
    if digraph is None:
        digraph = orient(graph)

    sources = digraph.sources(cube.vertices)
    _require(
        len(sources) == 1,
        f"hypercube has {len(sources)} sources.",
        {"cube": cube.to_json(), "sources": sources},
    )

    source = sources[0]
    members = set(cube.vertices)
    hexagons = [h for head, h in digraph.successors[source] if head in members]
    _require(
        len(hexagons) == cube.dim,
        f"source has {len(hexagons)} arcs inside a {cube.dim}-cube.",
        {"cube": cube.to_json(), "source": source},
    )

    inside = set()
    for h in hexagons:
        inside.update(h.edges)
    edges = graph.matchings[source].edges - inside
    return ClarCover.of(hexagons, edges)


def verify_identity(
    system: HexagonalSystem,
    limits: ty.Optional[Limits] = None,
    analysis: ty.Optional[SystemAnalysis] = None,
) -> VerificationReport:
    """Check that the Clar covering polynomial of a system equals the cube
    polynomial of its resonance graph, and that the forward and inverse maps
    are inverse bijections between covers and hypercubes of every dimension.


    :param system: The (generalized) hexagonal system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param limits: Resource caps.
    :type limits: ~typing.Optional[~clarcube.typeset.Limits]

    :param analysis: Shared computations on ``system``, if any.
    :type analysis: ~typing.Optional[~clarcube.bijection.SystemAnalysis]


    :returns: The ``identity*`` checks.
    :rtype: ~clarcube.bijection.VerificationReport

    """
    a = _analysis(system, limits, analysis)

    def _identity():
        witness = {"zeta": str(a.zeta), "cube": str(a.cube_polynomial)}
        _require(a.zeta == a.cube_polynomial, "polynomials differ.", witness)
        return witness

    def _dimensions():
        for k in sorted(set(a.covers) | set(a.cubes)):
            covers, cubes = len(a.covers.get(k, ())), len(a.cubes.get(k, ()))
            _require(
                covers == cubes,
                f"{covers} covers but {cubes} cubes of dimension {k}.",
                {"dimension": k, "covers": covers, "cubes": cubes},
            )

    def _forward():
        seen: ty.Dict[ty.Tuple[int, ...], ClarCover] = {}
        for cover, image in a.images.items():
            _require(
                len(image.vertices) == 1 << cover.size
                and is_induced_hypercube(a.graph, image.vertices) is not None,
                "image is not a hypercube.",
                {"cover": cover.to_json(), "image": image.to_json()},
            )
            _require(
                image.vertices not in seen,
                "two covers share their image.",
                {"covers": [seen.get(image.vertices, cover).to_json(), cover.to_json()]},
            )
            seen[image.vertices] = cover

    def _cover_roundtrip():
        for cover, image in a.images.items():
            back = a.inverse(image)
            _require(
                back == cover,
                "inverse image differs.",
                {"cover": cover.to_json(), "back": back.to_json()},
            )

    def _cube_roundtrip():
        for cube in a.all_cubes:
            back = clar_cover_to_hypercube(system, a.resonance_graph, a.inverse(cube))
            _require(
                back == cube,
                "image of the inverse image differs.",
                {"cube": cube.to_json(), "back": back.to_json()},
            )

    def _labeling():
        for cover, image in a.images.items():
            words = {
                v: tuple(
                    classify(h, a.matchings[v].edges) is SextetClass.PROPER
                    for h in cover.hexagons
                )
                for v in image.vertices
            }
            _require(
                len(set(words.values())) == 1 << cover.size,
                "sextet words are not all distinct.",
                {"cover": cover.to_json()},
            )
            for u, v in itertools.combinations(image.vertices, 2):
                hamming = sum(x != y for x, y in zip(words[u], words[v]))
                _require(
                    a.graph.has_edge(u, v) == (hamming == 1),
                    "sextet words do not label a hypercube.",
                    {"cover": cover.to_json(), "pair": [u, v]},
                )

    def _clar_formulas():
        if a.zeta.is_zero:
            return _NOT_KEKULEAN
        clar = a.zeta.degree
        top = max(a.cubes)
        formulas, largest = len(a.covers[clar]), len(a.cubes[top])
        witness = {"clar_number": clar, "top_dimension": top, "formulas": formulas, "largest": largest}
        _require(clar == top and formulas == largest, "Clar formulas do not match.", witness)
        return witness

    def _resonant_sets():
        patterns: ty.Dict[int, ty.Set[ty.FrozenSet]] = {}
        for p in enumerate_sextet_patterns(system, limit=a.limits.max_covers):
            patterns.setdefault(p.size, set()).add(frozenset(p.hexagons))
        for dim, cubes in a.cubes.items():
            found = {frozenset(a.inverse(e).hexagons) for e in cubes}
            expected = patterns.get(dim, set())
            _require(
                found == expected,
                f"hexagon sets of {dim}-cubes are not the resonant sets.",
                {"dimension": dim, "cubes": len(found), "patterns": len(expected)},
            )

    return VerificationReport(
        a.name,
        [
            _check("identity", _identity),
            _check("identity-clar-formulas", _clar_formulas),
            _check("identity-cover-roundtrip", _cover_roundtrip),
            _check("identity-cube-roundtrip", _cube_roundtrip),
            _check("identity-dimensions", _dimensions),
            _check("identity-forward-injective", _forward),
            _check("identity-labeling", _labeling),
            _check("identity-resonant-sets", _resonant_sets),
        ],
    )


def verify_poset_isomorphism(
    system: HexagonalSystem,
    limits: ty.Optional[Limits] = None,
    analysis: ty.Optional[SystemAnalysis] = None,
) -> VerificationReport:
    """Check that the forward map is an order isomorphism from Clar covers
    onto induced hypercubes ordered by containment, and that maximal covers
    are those without alternating hexagon.


    :param system: The (generalized) hexagonal system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param limits: Resource caps.
    :type limits: ~typing.Optional[~clarcube.typeset.Limits]

    :param analysis: Shared computations on ``system``, if any.
    :type analysis: ~typing.Optional[~clarcube.bijection.SystemAnalysis]


    :returns: The ``poset*`` checks.
    :rtype: ~clarcube.bijection.VerificationReport


    :raises ~clarcube.errors.LimitError: When the system has more covers than
                                         the poset bound.

    """
    a = _analysis(system, limits, analysis)
    covers = a.all_covers
    if len(covers) > a.limits.poset_bound:
        raise LimitError("Clar covers for the poset check", a.limits.poset_bound)

    images = [frozenset(a.images[c].vertices) for c in covers]
    leq = [[clar_cover_leq(c, d) for d in covers] for c in covers]

    def _order():
        for i, j in itertools.product(range(len(covers)), repeat=2):
            contained = images[i] <= images[j]
            _require(
                leq[i][j] == contained,
                "forward map does not preserve the order.",
                {
                    "cover": covers[i].to_json(),
                    "other": covers[j].to_json(),
                    "leq": leq[i][j],
                    "contained": contained,
                },
            )

    def _axioms():
        n = len(covers)
        if n > a.limits.axiom_bound:
            return {"skipped": n}
        for i in range(n):
            _require(leq[i][i], "order is not reflexive.", covers[i].to_json())
            for j in range(n):
                if i != j and leq[i][j]:
                    _require(
                        not leq[j][i],
                        "order is not antisymmetric.",
                        [covers[i].to_json(), covers[j].to_json()],
                    )
                    for k in range(n):
                        _require(
                            not leq[j][k] or leq[i][k],
                            "order is not transitive.",
                            [covers[i].to_json(), covers[j].to_json(), covers[k].to_json()],
                        )

    def _maximal():
        by_cover = maximal_clar_covers(system, covers=a.covers)
        by_cube = maximal_hypercubes(a.graph, cubes=a.cubes)
        witness = {"covers": len(by_cover), "cubes": len(by_cube)}
        _require(
            {a.images[c] for c in by_cover} == set(by_cube),
            "maximal covers are not sent onto maximal hypercubes.",
            witness,
        )

        chosen = set(by_cover)
        for i, c in enumerate(covers):
            dominated = any(leq[i][j] and i != j for j in range(len(covers)))
            _require(
                (c in chosen) != dominated,
                "maximal covers are not the ones without alternating hexagon.",
                c.to_json(),
            )
        return witness

    return VerificationReport(
        a.name,
        [
            _check("poset-axioms", _axioms),
            _check("poset-maximal", _maximal),
            _check("poset-order", _order),
        ],
    )


def verify_derivative(
    system: HexagonalSystem,
    s: int = 1,
    limits: ty.Optional[Limits] = None,
    analysis: ty.Optional[SystemAnalysis] = None,
) -> VerificationReport:
    """Check the derivative identity ``ζ^(s)(H) = s! * sum(ζ(H - R))`` over the
    sets ``R`` of ``s`` pairwise disjoint hexagons. Sets whose deletion leaves
    no perfect matching contribute ``0``, so the sum runs over the sextet
    patterns of size ``s``. For ``s = 1`` this is the sum over hexagons.


    :param system: The (generalized) hexagonal system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param s: The derivation order.
    :type s: int

    :param limits: Resource caps.
    :type limits: ~typing.Optional[~clarcube.typeset.Limits]

    :param analysis: Shared computations on ``system``, if any.
    :type analysis: ~typing.Optional[~clarcube.bijection.SystemAnalysis]


    :returns: The ``derivative-<s>`` check, both sides as witness.
    :rtype: ~clarcube.bijection.VerificationReport


    :raises ValueError: When ``s`` is not positive.

    :raises ~clarcube.errors.ValidationError: When ``s`` is over the Clar
                                              number plus one.

    """
    if s < 1:
        raise ValueError("derivation order must be positive.")
    a = _analysis(system, limits, analysis)
    if not a.zeta.is_zero and s > a.zeta.degree + 1:
        raise ValidationError(
            f"derivation order {s} is over the Clar number plus one.", s
        )

    def _derivative():
        lhs = derivative(a.zeta, s)
        rhs = IntPolynomial()
        patterns = 0
        for hexagons in disjoint_hexagon_sets(system):
            if len(hexagons) != s:
                continue
            term = zz_polynomial(
                delete_sextet_pattern(system, hexagons), limit=a.limits.max_covers
            )
            if not term.is_zero:
                patterns += 1
                rhs = rhs + term
        rhs = rhs * math.factorial(s)

        witness = {"s": s, "lhs": str(lhs), "rhs": str(rhs), "patterns": patterns}
        _require(lhs == rhs, "derivative identity does not hold.", witness)
        return witness

    return VerificationReport(a.name, [_check(f"derivative-{s}", _derivative)])


def _fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def verify_fibonacene(n: int, limits: ty.Optional[Limits] = None) -> VerificationReport:
    """Check the fibonacene ``zigzag(n)`` against the Fibonacci cube ``Γ_n``.

    Besides the isomorphism of the resonance graph with ``Γ_n`` and the
    equality of polynomials, both closed forms ``sum(c(k) * (x + 1) ** k)``
    are tried for ``c(k) = C(n - k, k)`` and ``c(k) = C(n - k + 1, k)``. Only
    the latter is required; whether the former holds is reported.


    :param n: The number of hexagons.
    :type n: int

    :param limits: Resource caps.
    :type limits: ~typing.Optional[~clarcube.typeset.Limits]


    :returns: The ``fibonacene*`` checks.
    :rtype: ~clarcube.bijection.VerificationReport


    :raises ValueError: When ``n`` is not positive.

    :raises ~clarcube.errors.LimitError: When ``n`` is over the fibonacene
                                         bound.

    """
    limits = limits or Limits()
    if n < 1:
        raise ValueError("a fibonacene has at least one hexagon.")
    if n > limits.fibonacene_bound:
        raise LimitError("hexagons in a fibonacene", limits.fibonacene_bound)

    system = catalog("zigzag", n)
    a = SystemAnalysis(system, limits, name=f"zigzag({n})")
    gamma = fibonacci_cube(n)

    def _isomorphism():
        _require(
            graph_isomorphic(a.graph, gamma, bound=limits.isomorphism_bound),
            "resonance graph is not the Fibonacci cube.",
            {"resonance": a.graph.to_json(), "fibonacci": gamma.to_json()},
        )

    def _polynomial():
        other = cube_polynomial(gamma, limit=limits.max_cubes)
        witness = {"zeta": str(a.zeta), "cube": str(other)}
        _require(a.zeta == other, "polynomials differ.", witness)
        return witness

    def _kekule():
        expected = _fibonacci(n + 2)
        witness = {"kekule": len(a.matchings), "fibonacci": expected}
        _require(len(a.matchings) == expected, "Kekulé count is not F(n+2).", witness)
        return witness

    def _binomial():
        printed = from_shifted(math.comb(n - k, k) for k in range(n + 1))
        corrected = from_shifted(math.comb(n - k + 1, k) for k in range(n + 1))
        witness = {"printed": printed == a.zeta, "corrected": corrected == a.zeta}
        if printed != a.zeta:
            log.warning(f"zigzag({n}): C(n-k, k) closed form gives {printed}, not {a.zeta}.")
        _require(corrected == a.zeta, "closed form does not match.", witness)
        return witness

    def _sextet():
        found = sextet_polynomial(system, limit=limits.max_covers)
        printed = IntPolynomial(math.comb(n - k, k) for k in range(n + 1))
        corrected = IntPolynomial(math.comb(n - k + 1, k) for k in range(n + 1))
        witness = {"sextet": str(found), "printed": printed == found, "corrected": corrected == found}
        _require(corrected == found, "sextet polynomial does not match.", witness)
        return witness

    return VerificationReport(
        a.name,
        [
            _check("fibonacene-binomial", _binomial),
            _check("fibonacene-isomorphism", _isomorphism),
            _check("fibonacene-kekule", _kekule),
            _check("fibonacene-polynomial", _polynomial),
            _check("fibonacene-sextet", _sextet),
        ],
    )


def verify_median_and_expansion(
    system: HexagonalSystem,
    limits: ty.Optional[Limits] = None,
    analysis: ty.Optional[SystemAnalysis] = None,
) -> VerificationReport:
    """Check that the resonance graph is a median graph and the consequences
    on its cube polynomial: positive coefficients in powers of ``(x + 1)``
    that count matchings by proper sextets, value ``1`` at ``-1`` and a
    strictly decreasing upper half. Unimodality of ``ζ`` is only reported.


    :param system: The (generalized) hexagonal system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param limits: Resource caps.
    :type limits: ~typing.Optional[~clarcube.typeset.Limits]

    :param analysis: Shared computations on ``system``, if any.
    :type analysis: ~typing.Optional[~clarcube.bijection.SystemAnalysis]


    :returns: The median and expansion checks.
    :rtype: ~clarcube.bijection.VerificationReport


    :raises ~clarcube.errors.LimitError: When the resonance graph is over the
                                         median check bound.

    """
    a = _analysis(system, limits, analysis)
    if len(a.matchings) > a.limits.median_bound:
        raise LimitError("vertices for the median check", a.limits.median_bound)

    def _median():
        if not a.matchings:
            return _NOT_KEKULEAN
        parts = sorted(sorted(p) for p in nx.connected_components(a.graph.to_networkx()))
        _require(len(parts) == 1, "resonance graph is disconnected.", {"components": parts})
        ok, triple = is_median_graph(a.graph, bound=a.limits.median_bound)
        _require(ok, "a triple has no unique median.", list(triple or ()))

    def _positive():
        if not a.matchings:
            return _NOT_KEKULEAN
        b = list(to_shifted(a.cube_polynomial))
        witness = {"b": b, "theta": theta(b)}
        _require(b[0] == 1 and all(c > 0 for c in b), "shifted coefficients are not positive.", witness)
        return witness

    def _sextets():
        if not a.matchings:
            return _NOT_KEKULEAN
        b = list(to_shifted(a.cube_polynomial))
        histogram = proper_sextet_histogram(system, limit=a.limits.max_matchings)
        dense = [histogram.get(i, 0) for i in range(max(histogram) + 1)]
        witness = {"b": b, "proper": dense}
        _require(b == dense, "shifted coefficients do not count proper sextets.", witness)
        return witness

    def _zeta_at_minus_one():
        if not a.matchings:
            return _NOT_KEKULEAN
        value = evaluate(a.zeta, -1)
        _require(value == 1, f"ζ(-1) = {value}.", {"value": value})

    def _alternating_sum():
        if not a.matchings:
            return _NOT_KEKULEAN
        value = evaluate(a.cube_polynomial, -1)
        _require(value == 1, f"C(-1) = {value}.", {"value": value})

    def _monotone_tail():
        alpha = a.cube_polynomial.coeffs
        top = len(alpha) - 1
        for i in range(top // 2, top):
            _require(
                alpha[i] > alpha[i + 1],
                "upper coefficients are not decreasing.",
                {"alpha": list(alpha), "index": i},
            )

    def _unimodality():
        ok, index = is_unimodal(a.zeta)
        if not ok:
            log.warning(f"{a.name}: ζ = {a.zeta} is not unimodal at degree {index}.")
        return {"unimodal": ok, "index": index}

    return VerificationReport(
        a.name,
        [
            _check("cube-alternating-sum", _alternating_sum),
            _check("expansion-positive", _positive),
            _check("expansion-sextets", _sextets),
            _check("median", _median),
            _check("monotone-tail", _monotone_tail),
            _check("unimodality", _unimodality),
            _check("zeta-at-minus-one", _zeta_at_minus_one),
        ],
    )


def verify_orientation(
    system: HexagonalSystem,
    limits: ty.Optional[Limits] = None,
    analysis: ty.Optional[SystemAnalysis] = None,
) -> VerificationReport:
    """Check the sextet orientation of the resonance graph: no directed cycle,
    one source and one sink per induced hypercube, disjoint proper (and
    improper) sextets, opposite labels on induced squares, reversal under
    reflection and agreement of the source-based hypercube enumeration with
    the generic one.


    :param system: The (generalized) hexagonal system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param limits: Resource caps.
    :type limits: ~typing.Optional[~clarcube.typeset.Limits]

    :param analysis: Shared computations on ``system``, if any.
    :type analysis: ~typing.Optional[~clarcube.bijection.SystemAnalysis]


    :returns: The ``orientation*`` checks.
    :rtype: ~clarcube.bijection.VerificationReport

    """
    a = _analysis(system, limits, analysis)

    def _acyclic():
        return {"order": len(assert_acyclic(a.digraph))}

    def _cube_ends():
        for cube in a.all_cubes:
            sources = a.digraph.sources(cube.vertices)
            sinks = a.digraph.sinks(cube.vertices)
            _require(
                len(sources) == 1 and len(sinks) == 1,
                "hypercube without a unique source and sink.",
                {"cube": cube.to_json(), "sources": sources, "sinks": sinks},
            )

    def _disjoint_sextets():
        for m in a.matchings:
            for cls in SextetClass:
                rings = [h.ring for h, c in alternating_hexagons(system, m) if c is cls]
                spanned = [v for ring in rings for v in ring]
                _require(
                    len(spanned) == len(set(spanned)),
                    f"{cls.value} sextets overlap.",
                    {"matching": m.id, "class": cls.value},
                )

    def _four_cycles():
        rg = a.resonance_graph
        for square in a.cubes.get(2, ()):
            v0 = square.vertices[0]
            members = set(square.vertices)
            n1, n2 = sorted(a.graph.neighbors(v0) & members)
            (opposite,) = members - {v0, n1, n2}
            h1, h2 = rg.label(v0, n1), rg.label(v0, n2)
            _require(
                rg.label(n2, opposite) == h1
                and rg.label(n1, opposite) == h2
                and h1.vertices.isdisjoint(h2.vertices),
                "square labels are not two disjoint hexagons.",
                square.to_json(),
            )

    def _mirror():
        mirrored = mirror(system)
        mgraph = orient(build_resonance_graph(mirrored, limit=a.limits.max_matchings))
        image = {
            m.id: mgraph.graph.index.get(frozenset(mirror_edge(e) for e in m.edges))
            for m in a.matchings
        }
        _require(None not in image.values(), "reflection loses a matching.")

        arcs = {(t, h) for t, h, _ in mgraph.arcs}
        _require(len(arcs) == len(a.digraph.arcs), "reflection changes the arc count.")
        for tail, head, h in a.digraph.arcs:
            _require(
                (image[head], image[tail]) in arcs,
                "reflection does not reverse an arc.",
                {"arc": [tail, head], "hexagon": h.label},
            )

        improper = Counter(
            sum(c is SextetClass.IMPROPER for _, c in alternating_hexagons(system, m))
            for m in a.matchings
        )
        proper = proper_sextet_histogram(mirrored, limit=a.limits.max_matchings)
        _require(
            dict(improper) == proper,
            "improper sextets do not reflect into proper sextets.",
            {"improper": dict(sorted(improper.items())), "mirror_proper": proper},
        )

    def _fast_path():
        fast = source_hypercubes(a.digraph, limit=a.limits.max_cubes)
        _require(
            fast == a.cubes,
            "source-based enumeration disagrees.",
            {
                "fast": {d: len(e) for d, e in fast.items()},
                "generic": {d: len(e) for d, e in a.cubes.items()},
            },
        )

    return VerificationReport(
        a.name,
        [
            _check("orientation-acyclic", _acyclic),
            _check("orientation-cube-ends", _cube_ends),
            _check("orientation-disjoint-sextets", _disjoint_sextets),
            _check("orientation-fast-path", _fast_path),
            _check("orientation-four-cycles", _four_cycles),
            _check("orientation-mirror", _mirror),
        ],
    )


def verify_roots(
    system: HexagonalSystem,
    limits: ty.Optional[Limits] = None,
    analysis: ty.Optional[SystemAnalysis] = None,
) -> VerificationReport:
    """Check the real roots of ``ζ``: none in ``[-1, +inf)``, at least one in
    ``[-2, -1)`` when the system has two perfect matchings or more, and every
    rational root of the form ``-(t + 1) / t``.


    :param system: The (generalized) hexagonal system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param limits: Resource caps.
    :type limits: ~typing.Optional[~clarcube.typeset.Limits]

    :param analysis: Shared computations on ``system``, if any.
    :type analysis: ~typing.Optional[~clarcube.bijection.SystemAnalysis]


    :returns: The ``roots*`` checks.
    :rtype: ~clarcube.bijection.VerificationReport

    """
    a = _analysis(system, limits, analysis)

    def _right():
        if a.zeta.is_zero:
            return _NOT_KEKULEAN
        count = count_real_roots(a.zeta, -1, None, closed_lo=True)
        _require(count == 0, f"{count} roots in [-1, +inf).", {"count": count})

    def _interval():
        if a.zeta.is_zero:
            return _NOT_KEKULEAN
        if len(a.matchings) < 2:
            return {"kekule": len(a.matchings)}
        count = count_real_roots(a.zeta, -2, -1, closed_lo=True, closed_hi=False)
        _require(count >= 1, "no root in [-2, -1).", {"count": count})
        return {"count": count}

    def _rational():
        if a.zeta.is_zero:
            return _NOT_KEKULEAN
        roots = rational_roots(a.zeta)
        witness = [{"root": str(r.value), "t": r.t} for r in roots]
        _require(all(r.t is not None for r in roots), "a rational root is not -(t+1)/t.", witness)
        return witness

    return VerificationReport(
        a.name,
        [
            _check("roots-interval", _interval),
            _check("roots-rational-form", _rational),
            _check("roots-right-of-minus-one", _right),
        ],
    )


def verify_all(
    system: HexagonalSystem,
    limits: ty.Optional[Limits] = None,
    name: ty.Optional[str] = None,
) -> VerificationReport:
    """Run the identity, orientation, poset, median and root checks on a
    system. The poset and median checks are skipped, with a warning and a
    ``skipped`` witness, when the system is over their bound.


    :param system: The (generalized) hexagonal system.
    :type system: ~clarcube.hexsys.HexagonalSystem

    :param limits: Resource caps.
    :type limits: ~typing.Optional[~clarcube.typeset.Limits]

    :param name: The name used in the report.
    :type name: ~typing.Optional[str]


    :returns: The merged report.
    :rtype: ~clarcube.bijection.VerificationReport

    """
    a = SystemAnalysis(system, limits, name=name)
    reports = [
        verify_identity(system, analysis=a),
        verify_orientation(system, analysis=a),
        verify_roots(system, analysis=a),
    ]

    for label, run in (
        ("poset", verify_poset_isomorphism),
        ("median", verify_median_and_expansion),
    ):
        try:
            reports.append(run(system, analysis=a))
        except LimitError as e:
            log.warning(f"{a.name}: {label} checks skipped, {e}")
            reports.append(
                VerificationReport(a.name, [Check(label, True, {"skipped": str(e)})])
            )

    return reports[0].merge(*reports[1:])
