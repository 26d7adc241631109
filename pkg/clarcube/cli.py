# clarcube/cli.py
# ===============
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
"""The ``clarcube`` command line.

Results are written to the standard output (or ``--out``), diagnostics to the
standard error. The exit status is ``0`` on success, ``1`` when a verification
fails or a computation cannot complete, and ``2`` on usage or input errors.

"""
import sys
import json
import typing as ty
import logging
import argparse

from abc import ABC

from clarcube import __version__
from clarcube.bijection import (
    SystemAnalysis,
    VerificationReport,
    verify_all,
    verify_derivative,
    verify_fibonacene,
)
from clarcube.clar import clar_number, enumerate_clar_covers, sextet_polynomial
from clarcube.cube import (
    SimpleGraph,
    cube_polynomial,
    enumerate_induced_hypercubes,
    maximal_hypercubes,
)
from clarcube.errors import ClarcubeError, HexParseError, NotKekuleanError, ValidationError
from clarcube.hexsys import CATALOG, FAMILIES, HexagonalSystem, catalog, parse_hex_file, serialize
from clarcube.matching import enumerate_perfect_matchings
from clarcube.poly import (
    IntPolynomial,
    ShiftedCoefficients,
    count_real_roots,
    rational_roots,
    to_shifted,
)
from clarcube.resonance import build_resonance_graph, export_dot, export_json, orient
from clarcube.task.abc import ArgumentTask
from clarcube.typeset import Limits


log = logging.getLogger(__name__)

#: Exit status on success.
EXIT_OK = 0
#: Exit status when a verification fails or a computation cannot complete.
EXIT_FAILURE = 1
#: Exit status on usage and input errors.
EXIT_USAGE = 2


def shifted_str(b: ShiftedCoefficients) -> str:
    """Render shifted coefficients as ``2(x+1)^3 + 9(x+1)^2 + 8(x+1) + 1``."""
    terms = []
    for i in range(len(b) - 1, -1, -1):
        c = b[i]
        if c == 0:
            continue
        power = "" if i == 0 else "(x+1)" if i == 1 else f"(x+1)^{i}"
        mag = abs(c)
        body = str(mag) if i == 0 else power if mag == 1 else f"{mag}{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) or "0"


class Command(ArgumentTask, ABC):
    """Base of the ``clarcube`` subcommands."""

    #: Whether the command reads a hexagonal system.
    takes_system = True

    @property
    def arguments(self) -> ty.Iterable[ty.Tuple[ty.Sequence, ty.Mapping]]:
        arguments = []
        if self.takes_system:
            arguments.extend(
                [
                    (("--input",), {"metavar": "FILE", "help": "read a .hex file."}),
                    (
                        ("--name",),
                        {
                            "metavar": "NAME",
                            "help": "use a catalog system: "
                            + ", ".join((*CATALOG, *FAMILIES))
                            + ".",
                        },
                    ),
                    (("--n",), {"type": int, "help": "hexagons of a catalog family."}),
                    (("--seed",), {"type": int, "help": "seed of random_cata."}),
                ]
            )
        arguments.extend(
            [
                (
                    ("--format",),
                    {"choices": ("text", "json"), "default": "text", "help": "output format."},
                ),
                (("--out",), {"metavar": "FILE", "help": "write the result to a file."}),
                (
                    ("--max-matchings",),
                    {"type": int, "default": Limits().max_matchings, "help": "perfect matchings cap."},
                ),
                (
                    ("--max-covers",),
                    {"type": int, "default": Limits().max_covers, "help": "Clar covers cap."},
                ),
                (
                    ("--max-cubes",),
                    {"type": int, "default": Limits().max_cubes, "help": "induced hypercubes cap."},
                ),
            ]
        )
        return arguments

    def on_argparse(self):
        if self.takes_system and bool(self.opts.input) == bool(self.opts.name):
            self.parser.error("exactly one of --input and --name is required.")

    @property
    def limits(self) -> Limits:
        return Limits(
            max_matchings=self.opts.max_matchings,
            max_covers=self.opts.max_covers,
            max_cubes=self.opts.max_cubes,
        )

    @property
    def system_name(self) -> str:
        if self.opts.input:
            return self.opts.input
        if self.opts.n is not None:
            return f"{self.opts.name}({self.opts.n})"
        return self.opts.name

    def load_system(self) -> HexagonalSystem:
        """Read the system selected on the command line."""
        if self.opts.input:
            with open(self.opts.input) as f:
                return parse_hex_file(f.read())
        return catalog(self.opts.name, n=self.opts.n, seed=self.opts.seed)

    def emit(self, payload: ty.Any, text: str):
        """Write a result in the requested format."""
        if self.opts.format == "json":
            out = json.dumps(payload, separators=(",", ":"), sort_keys=True, default=str)
        else:
            out = text
        if not out.endswith("\n"):
            out += "\n"

        if self.opts.out:
            with open(self.opts.out, "w") as f:
                f.write(out)
            log.info(f"Wrote result to {self.opts.out}.")
        else:
            sys.stdout.write(out)

    def emit_report(self, report: VerificationReport) -> int:
        lines = [f"system: {report.system}"]
        for check in report:
            state = "PASS" if check.passed else "FAIL"
            line = f"{state} {check.name} ({check.ms} ms)"
            if check.witness is not None:
                line += f": {json.dumps(check.witness, sort_keys=True, default=str)}"
            lines.append(line)
        lines.append("all checks passed." if report.passed else f"{len(report.failures)} checks failed.")
        self.emit(report.to_json(), "\n".join(lines))
        return EXIT_OK if report.passed else EXIT_FAILURE


class _BasisMixin(object):
    __slots__ = ()

    basis_argument = (
        ("--basis",),
        {
            "choices": ("std", "shifted"),
            "default": "std",
            "help": "monomials or powers of (x+1).",
        },
    )

    def emit_polynomial(self, p: IntPolynomial):
        if self.opts.basis == "shifted":
            b = to_shifted(p)
            self.emit(b.to_json(), shifted_str(b))
        else:
            self.emit(p.to_json(), str(p))


class Info(Command):
    """Describe a hexagonal system."""

    def __call__(self) -> int:
        system = self.load_system()
        matchings = enumerate_perfect_matchings(system, limit=self.limits.max_matchings)
        try:
            clar: ty.Optional[int] = clar_number(system, limit=self.limits.max_covers)
        except NotKekuleanError:
            clar = None

        payload = {
            "system": self.system_name,
            "vertices": len(system.vertices),
            "edges": len(system.edges),
            "hexagons": [[h.cell.q, h.cell.r] for h in system.hexagons],
            "generalized": system.generalized,
            "kekule": str(len(matchings)),
            "clar": clar,
        }
        text = "\n".join(
            [
                f"system: {self.system_name}",
                f"vertices: {len(system.vertices)}",
                f"edges: {len(system.edges)}",
                f"hexagons: {len(system.hexagons)}",
                f"generalized: {str(system.generalized).lower()}",
                f"kekule: {len(matchings)}",
                f"clar: {'none' if clar is None else clar}",
            ]
        )
        self.emit(payload, text)
        return EXIT_OK


class Kekule(Command):
    """Count (and list) the Kekulé structures of a system."""

    @property
    def arguments(self):
        return [
            *super().arguments,
            (("--list",), {"action": "store_true", "help": "list the matchings."}),
        ]

    def __call__(self) -> int:
        matchings = enumerate_perfect_matchings(
            self.load_system(), limit=self.limits.max_matchings
        )
        payload: ty.Dict[str, ty.Any] = {"kekule": str(len(matchings))}
        lines = [str(len(matchings))]
        if self.opts.list:
            payload["matchings"] = [m.to_json() for m in matchings]
            lines.extend(f"m{m.id}: {m.to_json()}" for m in matchings)
        self.emit(payload, "\n".join(lines))
        return EXIT_OK


class Zz(_BasisMixin, Command):
    """Compute the Clar covering polynomial of a system."""

    @property
    def arguments(self):
        return [
            *super().arguments,
            self.basis_argument,
            (("--list",), {"action": "store_true", "help": "list the Clar covers."}),
        ]

    def __call__(self) -> int:
        covers = enumerate_clar_covers(self.load_system(), limit=self.limits.max_covers)
        zeta = IntPolynomial.from_counts({k: len(c) for k, c in covers.items()})
        if self.opts.list:
            payload = {
                **zeta.to_json(),
                "covers": [c.to_json() for k in sorted(covers) for c in covers[k]],
            }
            text = "\n".join(
                [str(zeta)]
                + [json.dumps(c.to_json()) for k in sorted(covers) for c in covers[k]]
            )
            self.emit(payload, text)
        else:
            self.emit_polynomial(zeta)
        return EXIT_OK


class Sextet(Command):
    """Compute the sextet polynomial of a system."""

    def __call__(self) -> int:
        p = sextet_polynomial(self.load_system(), limit=self.limits.max_covers)
        self.emit(p.to_json(), str(p))
        return EXIT_OK


class Resonance(Command):
    """Build the resonance graph of a system."""

    @property
    def arguments(self):
        return [
            *super().arguments,
            (("--directed",), {"action": "store_true", "help": "orient the edges."}),
            (("--dot",), {"metavar": "PATH", "help": "write the graph in DOT."}),
        ]

    def __call__(self) -> int:
        graph = build_resonance_graph(self.load_system(), limit=self.limits.max_matchings)
        target = orient(graph) if self.opts.directed else graph
        if self.opts.dot:
            export_dot(target, self.opts.dot)

        payload = export_json(target)
        text = f"vertices: {len(graph)}\nedges: {graph.num_edges}"
        self.emit(payload, text)
        return EXIT_OK


class Cube(_BasisMixin, Command):
    """Compute the cube polynomial of a resonance graph or a JSON graph."""

    @property
    def arguments(self):
        return [
            *super().arguments,
            self.basis_argument,
            (("--graph",), {"metavar": "FILE", "help": "read a JSON graph instead."}),
            (
                ("--maximal",),
                {"action": "store_true", "help": "list the maximal hypercubes."},
            ),
        ]

    def on_argparse(self):
        sources = [self.opts.input, self.opts.name, self.opts.graph]
        if sum(1 for s in sources if s) != 1:
            self.parser.error("exactly one of --input, --name and --graph is required.")

    def load_graph(self) -> SimpleGraph:
        if self.opts.graph:
            with open(self.opts.graph) as f:
                return SimpleGraph.from_json(json.load(f))
        system = self.load_system()
        return build_resonance_graph(system, limit=self.limits.max_matchings).to_graph()

    def __call__(self) -> int:
        graph = self.load_graph()
        if not self.opts.maximal:
            self.emit_polynomial(cube_polynomial(graph, limit=self.limits.max_cubes))
            return EXIT_OK

        cubes = enumerate_induced_hypercubes(graph, limit=self.limits.max_cubes)
        p = IntPolynomial.from_counts({d: len(e) for d, e in cubes.items()})
        maximal = maximal_hypercubes(graph, cubes=cubes)
        payload = {**p.to_json(), "maximal": [e.to_json() for e in maximal]}
        text = "\n".join([str(p)] + [f"Q{e.dim}: {list(e.vertices)}" for e in maximal])
        self.emit(payload, text)
        return EXIT_OK


class Verify(Command):
    """Run the identity, poset, orientation, median and root checks."""

    def __call__(self) -> int:
        report = verify_all(self.load_system(), limits=self.limits, name=self.system_name)
        return self.emit_report(report)


class Roots(Command):
    """Locate the roots of the Clar covering polynomial."""

    def __call__(self) -> int:
        zeta = IntPolynomial.from_counts(
            {
                k: len(c)
                for k, c in enumerate_clar_covers(
                    self.load_system(), limit=self.limits.max_covers
                ).items()
            }
        )
        if zeta.is_zero:
            raise NotKekuleanError(f"{self.system_name} has no Clar cover.")

        roots = rational_roots(zeta)
        right = count_real_roots(zeta, -1, None, closed_lo=True)
        interval = count_real_roots(zeta, -2, -1, closed_lo=True, closed_hi=False)
        payload = {
            "zeta": zeta.to_json(),
            "rational": [{"root": str(r.value), "t": r.t} for r in roots],
            "right_of_minus_one": right,
            "minus_two_to_minus_one": interval,
        }
        lines = [f"zeta: {zeta}"]
        lines.extend(
            f"rational root {r.value}" + ("" if r.t is None else f" (t = {r.t})")
            for r in roots
        )
        lines.append(f"real roots in [-1, +inf): {right}")
        lines.append(f"real roots in [-2, -1): {interval}")
        self.emit(payload, "\n".join(lines))
        return EXIT_OK


class DerivativeCheck(Command):
    """Check the derivative identity of the Clar covering polynomial."""

    @property
    def arguments(self):
        return [
            *super().arguments,
            (("--s",), {"type": int, "default": 1, "help": "derivation order."}),
        ]

    def __call__(self) -> int:
        system = self.load_system()
        analysis = SystemAnalysis(system, self.limits, name=self.system_name)
        return self.emit_report(verify_derivative(system, self.opts.s, analysis=analysis))


class Fibonacci(Command):
    """Check a fibonacene against the Fibonacci cube."""

    takes_system = False

    @property
    def arguments(self):
        return [
            *super().arguments,
            (("--n",), {"type": int, "required": True, "help": "number of hexagons."}),
        ]

    def __call__(self) -> int:
        return self.emit_report(verify_fibonacene(self.opts.n, limits=self.limits))


class Catalog(Command):
    """List the catalog, or print a catalog system as a .hex document."""

    takes_system = False

    @property
    def arguments(self):
        return [
            *super().arguments,
            (("--name",), {"metavar": "NAME", "help": "the system to print."}),
            (("--n",), {"type": int, "help": "hexagons of a catalog family."}),
            (("--seed",), {"type": int, "help": "seed of random_cata."}),
        ]

    def __call__(self) -> int:
        if not self.opts.name:
            names = [*CATALOG, *FAMILIES]
            self.emit({"names": names}, "\n".join(names))
            return EXIT_OK

        system = catalog(self.opts.name, n=self.opts.n, seed=self.opts.seed)
        text = serialize(system)
        self.emit({"cells": [[c.q, c.r] for c in sorted(system.cells)]}, text)
        return EXIT_OK


#: Subcommands in help order.
COMMANDS: ty.Tuple[ty.Type[Command], ...] = (
    Info,
    Kekule,
    Zz,
    Sextet,
    Resonance,
    Cube,
    Verify,
    Roots,
    DerivativeCheck,
    Fibonacci,
    Catalog,
)


def build_parser() -> ty.Tuple[argparse.ArgumentParser, ty.Dict[str, argparse.ArgumentParser]]:
    """Build the top-level parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog="clarcube",
        description="Clar covering polynomials and cube polynomials of resonance graphs.",
    )
    parser.add_argument(
        "-V", "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug messages.")
    parser.add_argument("-q", "--quiet", action="store_true", help="only log errors.")

    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True
    parsers = {}
    for cls in COMMANDS:
        task = cls()
        sub = commands.add_parser(task.name, help=task.description, description=task.description)
        task.configure(sub)
        sub.set_defaults(task=task)
        parsers[task.name] = sub
    return parser, parsers


def main(argv: ty.Optional[ty.Sequence[str]] = None) -> int:
    """Run the ``clarcube`` command line.


    :param argv: The arguments, ``sys.argv[1:]`` by default.
    :type argv: ~typing.Optional[~typing.Sequence[str]]


    :returns: The exit status.
    :rtype: int

    """
    parser, parsers = build_parser()
    try:
        opts = parser.parse_args(argv)
    except SystemExit as e:
        return e.code or EXIT_OK

    level = logging.DEBUG if opts.verbose else logging.ERROR if opts.quiet else logging.WARNING
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )
    logging.getLogger("clarcube").setLevel(level)

    task: Command = opts.task
    try:
        task.use(opts, parsers[opts.command])
        return task.run()
    except SystemExit as e:
        return e.code or EXIT_OK
    except (HexParseError, ValidationError, OSError, ValueError) as e:
        log.error(f"{task.name}: {e}")
        return EXIT_USAGE
    except ClarcubeError as e:
        log.error(f"{task.name}: {e}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
