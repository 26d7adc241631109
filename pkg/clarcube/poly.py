# clarcube/poly.py
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
"""Exact integer-coefficient polynomials.

Everything in this module is computed with Python integers and
:class:`~fractions.Fraction`; there is no floating point arithmetic.

"""
import math
import typing as ty
import operator

from fractions import Fraction


#: An exact rational argument.
Rational = ty.Union[int, Fraction]


class IntPolynomial(object):
    """A dense polynomial with arbitrary precision integer coefficients.
    ``coeffs[i]`` is the coefficient of ``x^i``; trailing zeros are dropped so
    that the zero polynomial has no coefficient at all.


    :param coeffs: Coefficients by increasing degree.
    :type coeffs: ~typing.Iterable[int]


    :raises TypeError: When a coefficient is not an integer.

    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: ty.Iterable[int] = ()):
        """Constructor for :class:`clarcube.poly.IntPolynomial`."""
        coeffs = [operator.index(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs: ty.Tuple[int, ...] = tuple(coeffs)

    @classmethod
    def from_counts(cls, counts: ty.Mapping[int, int]) -> "IntPolynomial":
        """Build the generating polynomial of a ``degree -> count`` mapping."""
        size = max(counts, default=-1) + 1
        return cls(counts.get(i, 0) for i in range(size))

    def __eq__(self, other: ty.Any) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"

        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "x" if i == 1 else f"x^{i}"
                body = power if mag == 1 else f"{mag}{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        """Coefficient of ``x^i``, zero beyond the degree."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other: ty.Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        size = max(len(self), len(other))
        return IntPolynomial(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __sub__(self, other: ty.Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: ty.Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        product = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return IntPolynomial(product)

    __rmul__ = __mul__

    def __call__(self, x0: Rational) -> Rational:
        return evaluate(self, x0)

    @property
    def degree(self) -> int:
        """The degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero polynomial."""
        return not self.coeffs

    @property
    def leading(self) -> int:
        """The leading coefficient, ``0`` for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def to_json(self) -> ty.Dict[str, ty.List[str]]:
        """Serialize as ``{"coeffs": ["20", "32", ...]}`` (decimal strings)."""
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: ty.Mapping[str, ty.Sequence[str]]) -> "IntPolynomial":
        """Read back the output of :meth:`to_json`."""
        return cls(int(c) for c in data["coeffs"])


class ShiftedCoefficients(object):
    """Coefficients ``b`` of a polynomial in the basis of the powers of
    ``(x + 1)``: ``p(x) = sum(b[i] * (x + 1) ** i)``.


    :param b: Coefficients by increasing power of ``(x + 1)``.
    :type b: ~typing.Iterable[int]

    """

    __slots__ = ("b",)

    def __init__(self, b: ty.Iterable[int] = ()):
        """Constructor for :class:`clarcube.poly.ShiftedCoefficients`."""
        b = [operator.index(c) for c in b]
        while b and b[-1] == 0:
            b.pop()
        self.b: ty.Tuple[int, ...] = tuple(b)

    def __eq__(self, other: ty.Any) -> bool:
        if isinstance(other, ShiftedCoefficients):
            return self.b == other.b
        if isinstance(other, (list, tuple)):
            return list(self.b) == list(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.b)

    def __repr__(self) -> str:
        return f"ShiftedCoefficients({list(self.b)})"

    def __iter__(self) -> ty.Iterator[int]:
        return iter(self.b)

    def __len__(self) -> int:
        return len(self.b)

    def __getitem__(self, i: int) -> int:
        return self.b[i]

    def to_json(self) -> ty.Dict[str, ty.List[str]]:
        """Serialize as ``{"shifted": ["1", "8", ...]}`` (decimal strings)."""
        return {"shifted": [str(c) for c in self.b]}


class RationalRoot(ty.NamedTuple):
    """A rational root, with ``t`` set when it reads ``-(t + 1) / t`` for an
    integer ``t >= 1``.

    """

    value: Fraction
    t: ty.Optional[int]


def evaluate(p: IntPolynomial, x0: Rational) -> Rational:
    """Evaluate a polynomial exactly (Horner scheme).


    :param p: The polynomial.
    :type p: ~clarcube.poly.IntPolynomial

    :param x0: An integer or a fraction.
    :type x0: ~typing.Union[int, ~fractions.Fraction]


    :returns: ``p(x0)``, an integer when ``x0`` is one.
    :rtype: ~typing.Union[int, ~fractions.Fraction]

    """
    value = 0
    for c in reversed(p.coeffs):
        value = value * x0 + c
    return value


def derivative(p: IntPolynomial, s: int = 1) -> IntPolynomial:
    """The ``s``-th formal derivative of a polynomial.


    :param p: The polynomial.
    :type p: ~clarcube.poly.IntPolynomial

    :param s: The derivation order.
    :type s: int


    :returns: ``p`` derived ``s`` times; ``p`` itself when ``s`` is ``0``.
    :rtype: ~clarcube.poly.IntPolynomial


    :raises ValueError: When ``s`` is negative.

    """
    if s < 0:
        raise ValueError("derivation order must be non-negative.")
    return IntPolynomial(math.perm(k, s) * p[k] for k in range(s, len(p)))


def to_shifted(p: IntPolynomial) -> ShiftedCoefficients:
    """Rewrite a polynomial in powers of ``(x + 1)`` by binomial inversion:
    ``b[j] = sum((-1) ** (k - j) * C(k, j) * p[k])``.

    """
    n = len(p)
    return ShiftedCoefficients(
        sum((-1) ** (k - j) * math.comb(k, j) * p[k] for k in range(j, n))
        for j in range(n)
    )


def from_shifted(b: ty.Union[ShiftedCoefficients, ty.Iterable[int]]) -> IntPolynomial:
    """Expand ``sum(b[k] * (x + 1) ** k)`` back to the monomial basis:
    ``p[i] = sum(b[k] * C(k, i))``.

    """
    b = list(b)
    return IntPolynomial(
        sum(b[k] * math.comb(k, i) for k in range(i, len(b))) for i in range(len(b))
    )


def theta(b: ty.Union[ShiftedCoefficients, ty.Iterable[int]]) -> ty.List[int]:
    """Scale shifted coefficients by factorials, ``i! * b[i]``."""
    return [math.factorial(i) * c for i, c in enumerate(b)]


def is_unimodal(p: IntPolynomial) -> ty.Tuple[bool, ty.Optional[int]]:
    """Tell whether the coefficients weakly rise then weakly fall.


    :param p: The polynomial.
    :type p: ~clarcube.poly.IntPolynomial


    :returns: ``(True, None)`` or ``(False, i)`` where ``i`` is the degree at
              which coefficients start rising again after a fall.
    :rtype: ~typing.Tuple[bool, ~typing.Optional[int]]

    """
    falling = False
    c = p.coeffs
    for i in range(len(c) - 1):
        if c[i + 1] < c[i]:
            falling = True
        elif c[i + 1] > c[i] and falling:
            return False, i
    return True, None


def _divisors(n: int) -> ty.List[int]:
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _t_of(root: Fraction) -> ty.Optional[int]:
    if root >= -1:
        return None
    t = 1 / (-1 - root)
    return int(t) if t.denominator == 1 else None


def rational_roots(p: IntPolynomial) -> ty.List[RationalRoot]:
    """Find the distinct rational roots of a polynomial with the rational root
    theorem: a root ``a/b`` in lowest terms has ``a`` dividing the lowest
    non-zero coefficient and ``b`` dividing the leading one.


    :param p: A non-zero polynomial.
    :type p: ~clarcube.poly.IntPolynomial


    :returns: The roots in increasing order, each verified by exact
              evaluation.
    :rtype: ~typing.List[~clarcube.poly.RationalRoot]


    :raises ValueError: On the zero polynomial.

    """
    if p.is_zero:
        raise ValueError("the zero polynomial vanishes everywhere.")

    roots = set()
    coeffs = list(p.coeffs)
    if coeffs[0] == 0:
        roots.add(Fraction(0))
        while coeffs[0] == 0:
            coeffs.pop(0)

    reduced = IntPolynomial(coeffs)
    for num in _divisors(abs(coeffs[0])):
        for den in _divisors(abs(coeffs[-1])):
            for candidate in (Fraction(num, den), Fraction(-num, den)):
                if candidate not in roots and evaluate(reduced, candidate) == 0:
                    roots.add(candidate)

    return [RationalRoot(r, _t_of(r)) for r in sorted(roots)]


# Rational polynomials used by the Sturm machinery are plain lists of
# fractions by increasing degree, without trailing zeros.


def _qtrim(a: ty.List[Fraction]) -> ty.List[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _qrem(a: ty.Sequence[Fraction], b: ty.Sequence[Fraction]) -> ty.List[Fraction]:
    rem = list(a)
    while len(rem) >= len(b):
        factor = rem[-1] / b[-1]
        shift = len(rem) - len(b)
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem.pop()
        _qtrim(rem)
    return rem


def _qquo(a: ty.Sequence[Fraction], b: ty.Sequence[Fraction]) -> ty.List[Fraction]:
    rem = list(a)
    quo = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(rem) >= len(b):
        factor = rem[-1] / b[-1]
        shift = len(rem) - len(b)
        quo[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem.pop()
        _qtrim(rem)
    return _qtrim(quo)


def _qderive(a: ty.Sequence[Fraction]) -> ty.List[Fraction]:
    return _qtrim([k * a[k] for k in range(1, len(a))])


def _qgcd(a: ty.Sequence[Fraction], b: ty.Sequence[Fraction]) -> ty.List[Fraction]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _qrem(a, b)
    return [c / a[-1] for c in a]


def _qeval(a: ty.Sequence[Fraction], x0: Fraction) -> Fraction:
    value = Fraction(0)
    for c in reversed(a):
        value = value * x0 + c
    return value


def sturm_sequence(p: IntPolynomial) -> ty.List[ty.List[Fraction]]:
    """Build the Sturm sequence of the square-free part of a polynomial.

    The square-free part ``p / gcd(p, p')`` has the same distinct roots as
    ``p``, so root counts computed from this sequence ignore multiplicities.


    :param p: A non-constant polynomial.
    :type p: ~clarcube.poly.IntPolynomial


    :returns: The sequence, each member being a list of fractions by
              increasing degree.
    :rtype: ~typing.List[~typing.List[~fractions.Fraction]]

    """
    f = [Fraction(c) for c in p.coeffs]
    f = _qquo(f, _qgcd(f, _qderive(f)))

    chain = [f, _qderive(f)]
    while True:
        rem = _qrem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _variations(signs: ty.Iterable[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign(x: Rational) -> int:
    return (x > 0) - (x < 0)


def _variations_at(chain: ty.Sequence[ty.Sequence[Fraction]], x0: Fraction) -> int:
    return _variations(_sign(_qeval(a, x0)) for a in chain)


def _variations_at_infinity(
    chain: ty.Sequence[ty.Sequence[Fraction]], positive: bool
) -> int:
    return _variations(
        _sign(a[-1]) * (1 if positive or len(a) % 2 == 1 else -1) for a in chain
    )


def count_real_roots(
    p: IntPolynomial,
    lo: ty.Optional[Rational] = None,
    hi: ty.Optional[Rational] = None,
    closed_lo: bool = True,
    closed_hi: bool = True,
) -> int:
    """Count the distinct real roots of a polynomial within an interval using
    Sturm's theorem: for a square-free polynomial, ``V(lo) - V(hi)`` is the
    number of roots in ``(lo, hi]``, ``V`` being the number of sign variations
    along the Sturm sequence. Closed and open ends are then settled by exact
    evaluation.


    :param p: A non-zero polynomial.
    :type p: ~clarcube.poly.IntPolynomial

    :param lo: Lower end, ``None`` for minus infinity.
    :type lo: ~typing.Optional[~typing.Union[int, ~fractions.Fraction]]

    :param hi: Upper end, ``None`` for plus infinity.
    :type hi: ~typing.Optional[~typing.Union[int, ~fractions.Fraction]]

    :param closed_lo: Whether ``lo`` belongs to the interval.
    :type closed_lo: bool

    :param closed_hi: Whether ``hi`` belongs to the interval.
    :type closed_hi: bool


    :returns: The number of distinct roots in the interval.
    :rtype: int


    :raises ValueError: On the zero polynomial or when ``lo > hi``.

    """
    if p.is_zero:
        raise ValueError("the zero polynomial vanishes everywhere.")
    if lo is not None and hi is not None and lo > hi:
        raise ValueError("empty interval: lo > hi.")
    if p.degree == 0:
        return 0

    chain = sturm_sequence(p)
    v_lo = (
        _variations_at_infinity(chain, positive=False)
        if lo is None
        else _variations_at(chain, Fraction(lo))
    )
    v_hi = (
        _variations_at_infinity(chain, positive=True)
        if hi is None
        else _variations_at(chain, Fraction(hi))
    )

    count = v_lo - v_hi
    if lo is not None and closed_lo and evaluate(p, Fraction(lo)) == 0:
        count += 1
    if hi is not None and not closed_hi and evaluate(p, Fraction(hi)) == 0:
        count -= 1
    return count
