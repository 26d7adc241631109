# tests/test_bijection.py
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
"""Test cases for :mod:`clarcube.bijection`."""
import pytest

import clarcube


#: Six hexagons around a hole.
CORONOID = "1 0\n0 1\n-1 1\n-1 0\n0 -1\n1 -1\n"


def _names(report):
    return [c.name for c in report]


class TestForwardMap(object):
    """Test cases for :func:`clarcube.bijection.clar_cover_to_hypercube` and
    its inverse.

    """

    def test_pyrene_top_cover(self, pyrene):
        graph = clarcube.resonance.build_resonance_graph(pyrene)
        (cover,) = clarcube.clar.enumerate_clar_covers(pyrene)[2]
        image = clarcube.bijection.clar_cover_to_hypercube(pyrene, graph, cover)
        assert image.dim == 2
        assert len(image.vertices) == 4
        assert clarcube.cube.is_induced_hypercube(graph.to_graph(), image.vertices) is not None

    def test_matching_is_a_vertex(self, benzene):
        graph = clarcube.resonance.build_resonance_graph(benzene)
        for cover in clarcube.clar.enumerate_clar_covers(benzene)[0]:
            image = clarcube.bijection.clar_cover_to_hypercube(benzene, graph, cover)
            assert image.dim == 0
            assert len(image.vertices) == 1

    def test_inverse(self, pyrene):
        graph = clarcube.resonance.build_resonance_graph(pyrene)
        (cover,) = clarcube.clar.enumerate_clar_covers(pyrene)[2]
        (square,) = clarcube.cube.enumerate_induced_hypercubes(graph.to_graph())[2]
        back = clarcube.bijection.hypercube_to_clar_cover(pyrene, graph, square)
        assert back == cover
        assert [tuple(h.cell) for h in back.hexagons] == [(0, 1), (1, -1)]
        assert len(back.isolated_edges) == 2

    def test_invalid_cover(self, benzene):
        graph = clarcube.resonance.build_resonance_graph(benzene)
        with pytest.raises(clarcube.errors.ValidationError):
            clarcube.bijection.clar_cover_to_hypercube(
                benzene, graph, clarcube.clar.ClarCover.of((), ())
            )


class TestVerifyIdentity(object):
    """Test cases for :func:`clarcube.bijection.verify_identity`."""

    @pytest.mark.parametrize("name", ["benzene", "pyrene", "coronene"])
    def test_passes(self, name):
        report = clarcube.bijection.verify_identity(clarcube.hexsys.catalog(name))
        assert report.passed, report.failures
        assert report["identity"].witness["zeta"] == report["identity"].witness["cube"]

    def test_small_catalog(self, small_system):
        assert clarcube.bijection.verify_identity(small_system).passed

    # fmt: off
    @pytest.mark.parametrize(
        "name,n,seed",
        [
            ("linear", 3, None),
            ("linear", 5, None),
            ("zigzag", 5, None),
            ("random_cata", 5, 1),
            ("random_cata", 6, 7),
        ],
    )
    # fmt: on
    def test_families(self, name, n, seed):
        system = clarcube.hexsys.catalog(name, n=n, seed=seed)
        assert clarcube.bijection.verify_identity(system).passed

    def test_check_names(self, benzene):
        report = clarcube.bijection.verify_identity(benzene)
        # fmt: off
        assert _names(report) == [
            "identity",
            "identity-clar-formulas",
            "identity-cover-roundtrip",
            "identity-cube-roundtrip",
            "identity-dimensions",
            "identity-forward-injective",
            "identity-labeling",
            "identity-resonant-sets",
        ]
        # fmt: on

    def test_clar_formulas(self, coronene):
        report = clarcube.bijection.verify_identity(coronene)
        assert report["identity-clar-formulas"].witness == {
            "clar_number": 3,
            "top_dimension": 3,
            "formulas": 2,
            "largest": 2,
        }

    def test_shared_analysis(self, pyrene):
        """Reports built on the same analysis carry its name."""
        analysis = clarcube.bijection.SystemAnalysis(pyrene, name="pyrene")
        report = clarcube.bijection.verify_identity(pyrene, analysis=analysis)
        assert report.system == "pyrene"
        assert analysis.zeta == analysis.cube_polynomial


class TestVerifyPoset(object):
    """Test cases for :func:`clarcube.bijection.verify_poset_isomorphism`."""

    def test_pyrene(self, pyrene):
        report = clarcube.bijection.verify_poset_isomorphism(pyrene)
        assert report.passed, report.failures
        assert _names(report) == ["poset-axioms", "poset-maximal", "poset-order"]

    def test_over_bound(self, pyrene):
        limits = clarcube.typeset.Limits(poset_bound=5)
        with pytest.raises(clarcube.errors.LimitError):
            clarcube.bijection.verify_poset_isomorphism(pyrene, limits=limits)

    def test_axioms_skipped(self, pyrene):
        limits = clarcube.typeset.Limits(axiom_bound=5)
        report = clarcube.bijection.verify_poset_isomorphism(pyrene, limits=limits)
        assert report["poset-axioms"].passed
        assert report["poset-axioms"].witness == {"skipped": 13}


class TestVerifyDerivative(object):
    """Test cases for :func:`clarcube.bijection.verify_derivative`."""

    def test_coronene(self, coronene):
        report = clarcube.bijection.verify_derivative(coronene)
        check = report["derivative-1"]
        assert check.passed, check.witness
        assert check.witness["lhs"] == "6x^2 + 30x + 32"
        assert check.witness["rhs"] == check.witness["lhs"]

    @pytest.mark.parametrize("s", [1, 2])
    def test_pyrene(self, pyrene, s):
        assert clarcube.bijection.verify_derivative(pyrene, s=s).passed

    def test_second_derivative_of_pyrene(self, pyrene):
        """Only the two outer hexagons are disjoint and resonant together."""
        check = clarcube.bijection.verify_derivative(pyrene, s=2)["derivative-2"]
        assert check.witness["lhs"] == "2"
        assert check.witness["patterns"] == 1

    def test_order_is_positive(self, pyrene):
        with pytest.raises(ValueError):
            clarcube.bijection.verify_derivative(pyrene, s=0)

    def test_order_over_clar_number(self, benzene):
        assert clarcube.bijection.verify_derivative(benzene, s=2).passed
        with pytest.raises(clarcube.errors.ValidationError):
            clarcube.bijection.verify_derivative(benzene, s=3)


class TestVerifyFibonacene(object):
    """Test cases for :func:`clarcube.bijection.verify_fibonacene`."""

    @pytest.mark.parametrize("n", range(1, 9))
    def test_passes(self, n):
        report = clarcube.bijection.verify_fibonacene(n)
        assert report.passed, report.failures
        assert report.system == f"zigzag({n})"

    def test_kekule_count(self):
        report = clarcube.bijection.verify_fibonacene(4)
        assert report["fibonacene-kekule"].witness == {"kekule": 8, "fibonacci": 8}

    def test_printed_closed_form(self):
        """The ``C(n - k, k)`` form is reported, not required."""
        witness = clarcube.bijection.verify_fibonacene(3)["fibonacene-binomial"].witness
        assert witness == {"printed": False, "corrected": True}

    def test_bounds(self):
        with pytest.raises(ValueError):
            clarcube.bijection.verify_fibonacene(0)
        with pytest.raises(clarcube.errors.LimitError):
            clarcube.bijection.verify_fibonacene(9)


class TestVerifyMedian(object):
    """Test cases for :func:`clarcube.bijection.verify_median_and_expansion`."""

    def test_pyrene(self, pyrene):
        report = clarcube.bijection.verify_median_and_expansion(pyrene)
        assert report.passed, report.failures
        assert report["expansion-sextets"].witness == {"b": [1, 4, 1], "proper": [1, 4, 1]}
        assert report["unimodality"].witness == {"unimodal": True, "index": None}

    def test_over_bound(self, pyrene):
        limits = clarcube.typeset.Limits(median_bound=2)
        with pytest.raises(clarcube.errors.LimitError):
            clarcube.bijection.verify_median_and_expansion(pyrene, limits=limits)


class TestVerifyOrientation(object):
    """Test cases for :func:`clarcube.bijection.verify_orientation`."""

    @pytest.mark.parametrize("name", ["naphthalene", "pyrene", "coronene"])
    def test_passes(self, name):
        report = clarcube.bijection.verify_orientation(clarcube.hexsys.catalog(name))
        assert report.passed, report.failures

    def test_acyclic_witness(self, pyrene):
        report = clarcube.bijection.verify_orientation(pyrene)
        assert report["orientation-acyclic"].witness == {"order": 6}


class TestVerifyRoots(object):
    """Test cases for :func:`clarcube.bijection.verify_roots`."""

    def test_coronene(self, coronene):
        report = clarcube.bijection.verify_roots(coronene)
        assert report.passed, report.failures
        assert report["roots-interval"].witness == {"count": 2}
        assert report["roots-rational-form"].witness == [{"root": "-2", "t": 1}]

    def test_benzene(self, benzene):
        """``x + 2`` has its root at ``-2 = -(1 + 1) / 1``."""
        report = clarcube.bijection.verify_roots(benzene)
        assert report.passed
        assert report["roots-rational-form"].witness == [{"root": "-2", "t": 1}]

    def test_not_kekulean(self, lone_vertex):
        report = clarcube.bijection.verify_roots(lone_vertex)
        assert report.passed
        assert {c.witness["kekulean"] for c in report} == {False}


class TestVerifyAll(object):
    """Test cases for :func:`clarcube.bijection.verify_all` and the reports."""

    def test_pyrene(self, pyrene):
        report = clarcube.bijection.verify_all(pyrene, name="pyrene")
        assert report.passed, report.failures
        assert report.system == "pyrene"
        assert _names(report) == sorted(_names(report))
        assert "poset-order" in _names(report)
        assert "median" in _names(report)

    # fmt: off
    @pytest.mark.parametrize(
        "limits,skipped",
        [
            (clarcube.typeset.Limits(poset_bound=1), "poset"),
            (clarcube.typeset.Limits(median_bound=2), "median"),
        ],
    )
    # fmt: on
    def test_skipped(self, pyrene, limits, skipped):
        """Checks over their bound pass with a ``skipped`` witness."""
        report = clarcube.bijection.verify_all(pyrene, limits=limits)
        assert report.passed
        assert "skipped" in report[skipped].witness

    def test_to_json(self, benzene):
        data = clarcube.bijection.verify_all(benzene, name="benzene").to_json()
        assert data["system"] == "benzene"
        for check in data["checks"]:
            assert set(check) == {"name", "pass", "witness", "ms"}
            assert check["pass"] is True

    def test_merge_and_lookup(self, benzene):
        a = clarcube.bijection.VerificationReport("x", [clarcube.bijection.Check("b", True)])
        b = clarcube.bijection.VerificationReport("x", [clarcube.bijection.Check("a", False, 1)])
        merged = a.merge(b)
        assert _names(merged) == ["a", "b"]
        assert not merged.passed
        assert merged.failures == [clarcube.bijection.Check("a", False, 1)]
        with pytest.raises(KeyError):
            merged["c"]

    def test_coronoid(self):
        """A ring of six hexagons around a hole has a disconnected resonance
        graph: the median check fails and the report is still produced.

        """
        coronoid = clarcube.hexsys.parse_hex_file(CORONOID)
        report = clarcube.bijection.verify_all(coronoid, name="coronoid")
        assert not report.passed
        median = report["median"]
        assert not median.passed
        assert len(median.witness["components"]) > 1
        assert sorted(v for part in median.witness["components"] for v in part) == list(
            range(clarcube.matching.kekule_count(coronoid))
        )


#: Every catalog molecule, the chains up to eight hexagons and seeded random
#: catafusenes.
# fmt: off
ACCEPTANCE = (
    [(name, None, None) for name in clarcube.hexsys.CATALOG]
    + [(family, n, None) for family in ("linear", "zigzag") for n in range(1, 9)]
    + [("random_cata", 3 + seed % 6, seed) for seed in range(20)]
)
# fmt: on


class TestCatalogAcceptance(object):
    """Run every check on the whole catalog."""

    @pytest.mark.parametrize("name,n,seed", ACCEPTANCE)
    def test_verify_all(self, name, n, seed):
        system = clarcube.hexsys.catalog(name, n=n, seed=seed)
        analysis = clarcube.bijection.SystemAnalysis(system)
        report = clarcube.bijection.verify_all(system)
        for s in (1, 2):
            report = report.merge(
                clarcube.bijection.verify_derivative(system, s=s, analysis=analysis)
            )
        assert report.passed, report.failures
        assert "poset" not in _names(report)
        assert "median" not in _names(report)
        assert report["orientation-fast-path"].passed
        assert report["roots-right-of-minus-one"].passed
