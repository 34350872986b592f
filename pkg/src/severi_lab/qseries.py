"""Exact truncated q-series over the rationals.

A :class:`QSeries` holds the coefficients of ``q^0 .. q^N`` as
:class:`fractions.Fraction` values together with the precision ``N``.
Binary operations truncate to the smaller precision; reading a coefficient
past the precision raises instead of returning zero.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "QSeries",
    "divisor_sum",
    "eisenstein",
    "theta",
    "e4_infinity",
    "constant",
    "qs_add",
    "qs_sub",
    "qs_mul",
    "qs_scale",
    "qs_derive",
    "qs_substitute_power",
    "qs_parity_part",
    "qs_coeff",
    "format_rational",
    "parse_rational",
]

DEFAULT_PRECISION = 200


def divisor_sum(k: int, n: int) -> int:
    """Return sigma_k(n), the sum of d**k over the positive divisors d of n."""
    if n < 1:
        raise ValueError(f"divisor_sum is undefined for n={n}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    total = 0
    root = math.isqrt(n)
    for d in range(1, root + 1):
        if n % d == 0:
            e = n // d
            total += d**k
            if e != d:
                total += e**k
    return total


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact coefficient")


class QSeries:
    """Truncated power series ``sum_{n<=N} a_n q^n`` with rational ``a_n``.

    Instances are immutable. ``coeffs`` always has length ``precision + 1``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, precision: int | None = None):
        cs = [_as_fraction(c) for c in coeffs]
        if precision is None:
            if not cs:
                raise ValueError("empty coefficient list needs an explicit precision")
            precision = len(cs) - 1
        if precision < 0:
            raise ValueError("precision must be nonnegative")
        if len(cs) > precision + 1:
            cs = cs[: precision + 1]
        elif len(cs) < precision + 1:
            cs.extend([Fraction(0)] * (precision + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @property
    def precision(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return qs_coeff(self, n)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        head = ", ".join(format_rational(c) for c in self._coeffs[:6])
        tail = ", ..." if len(self._coeffs) > 6 else ""
        return f"QSeries([{head}{tail}], precision={self.precision})"

    def truncate(self, precision: int) -> QSeries:
        if precision > self.precision:
            raise ValueError(
                f"cannot extend precision {self.precision} to {precision}"
            )
        return QSeries(self._coeffs[: precision + 1], precision)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def first_difference(self, other: QSeries, exponents=None):
        """First exponent where ``self`` and ``other`` disagree, or None.

        Returns ``(n, self[n], other[n])``; only the common precision is compared.
        """
        top = min(self.precision, other.precision)
        rng = range(top + 1) if exponents is None else (n for n in exponents if n <= top)
        for n in rng:
            if self._coeffs[n] != other._coeffs[n]:
                return n, self._coeffs[n], other._coeffs[n]
        return None

    # operators delegate to the qs_* functions
    def __add__(self, other):
        if isinstance(other, QSeries):
            return qs_add(self, other)
        return qs_add(self, constant(other, self.precision))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, QSeries):
            return qs_sub(self, other)
        return qs_sub(self, constant(other, self.precision))

    def __rsub__(self, other):
        return qs_sub(constant(other, self.precision), self)

    def __neg__(self):
        return qs_scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return qs_mul(self, other)
        return qs_scale(other, self)

    __rmul__ = __mul__

    # serialization
    def to_dict(self) -> dict:
        return {
            "precision": self.precision,
            "coeffs": [format_rational(c) for c in self._coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> QSeries:
        precision = int(data["precision"])
        coeffs = [parse_rational(s) for s in data["coeffs"]]
        if len(coeffs) != precision + 1:
            raise ValueError(
                f"expected {precision + 1} coefficients, got {len(coeffs)}"
            )
        return cls(coeffs, precision)

    @classmethod
    def from_json(cls, text: str) -> QSeries:
        return cls.from_dict(json.loads(text))


def format_rational(x: Fraction) -> str:
    """Exact decimal string: ``"5"`` for integers, ``"-7/3"`` otherwise."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not an exact rational: {s!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {s!r}")
    return Fraction(n, d)


def constant(c, precision: int) -> QSeries:
    return QSeries([c], precision)


def qs_coeff(f: QSeries, n: int) -> Fraction:
    """Coefficient of q^n; out-of-range exponents raise IndexError."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("exponent must be an int")
    if n < 0 or n > f.precision:
        raise IndexError(f"q^{n} is outside precision {f.precision}")
    return f.coeffs[n]


def qs_add(f: QSeries, g: QSeries) -> QSeries:
    N = min(f.precision, g.precision)
    return QSeries([a + b for a, b in zip(f.coeffs[: N + 1], g.coeffs[: N + 1])], N)


def qs_sub(f: QSeries, g: QSeries) -> QSeries:
    N = min(f.precision, g.precision)
    return QSeries([a - b for a, b in zip(f.coeffs[: N + 1], g.coeffs[: N + 1])], N)


def qs_scale(c, f: QSeries) -> QSeries:
    c = _as_fraction(c)
    return QSeries([c * a for a in f.coeffs], f.precision)


def _common_denominator(cs: Sequence[Fraction]) -> int:
    den = 1
    for c in cs:
        den = math.lcm(den, c.denominator)
    return den


def qs_mul(f: QSeries, g: QSeries) -> QSeries:
    N = min(f.precision, g.precision)
    a = f.coeffs[: N + 1]
    b = g.coeffs[: N + 1]
    # clear denominators so the convolution runs on Python ints
    da = _common_denominator(a)
    db = _common_denominator(b)
    ia = [int(x * da) for x in a]
    ib = [int(x * db) for x in b]
    nz = [(i, x) for i, x in enumerate(ia) if x]
    out = [0] * (N + 1)
    for j, y in enumerate(ib):
        if not y:
            continue
        for i, x in nz:
            k = i + j
            if k > N:
                break
            out[k] += x * y
    den = da * db
    return QSeries([Fraction(c, den) for c in out], N)


def qs_derive(f: QSeries) -> QSeries:
    """Apply ``D = q d/dq``."""
    return QSeries([n * a for n, a in enumerate(f.coeffs)], f.precision)


def qs_substitute_power(f: QSeries, m: int, precision: int | None = None) -> QSeries:
    """Return ``f(q^m)``.

    By default the precision of ``f`` is kept. A larger ``precision`` may be
    requested as long as it does not exceed ``m*(N+1) - 1``, the last exponent
    that ``f``'s known coefficients determine.
    """
    if m < 1:
        raise ValueError(f"substitution power must be positive, got {m}")
    N = f.precision
    if precision is None:
        precision = N
    elif precision > m * (N + 1) - 1:
        raise ValueError(
            f"f(q^{m}) is only determined up to q^{m * (N + 1) - 1}"
        )
    out = [Fraction(0)] * (precision + 1)
    for n in range(0, precision // m + 1):
        out[m * n] = f.coeffs[n]
    return QSeries(out, precision)


def qs_parity_part(f: QSeries, parity: str) -> QSeries:
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    keep = 0 if parity == "even" else 1
    zero = Fraction(0)
    return QSeries(
        [a if n % 2 == keep else zero for n, a in enumerate(f.coeffs)], f.precision
    )


_EISENSTEIN = {2: (-24, 1), 4: (240, 3), 6: (-504, 5)}


@lru_cache(maxsize=64)
def eisenstein(weight: int, precision: int = DEFAULT_PRECISION) -> QSeries:
    """Normalized Eisenstein series E2, E4 or E6 up to q^precision."""
    try:
        scale, k = _EISENSTEIN[weight]
    except KeyError:
        raise ValueError(f"unsupported Eisenstein weight {weight}") from None
    if precision < 0:
        raise ValueError("precision must be nonnegative")
    cs = [1] + [scale * divisor_sum(k, n) for n in range(1, precision + 1)]
    return QSeries(cs, precision)


@lru_cache(maxsize=64)
def theta(precision: int = DEFAULT_PRECISION) -> QSeries:
    """Jacobi theta ``1 + 2 sum_{n>=1} q^{n^2}``."""
    if precision < 0:
        raise ValueError("precision must be nonnegative")
    cs = [0] * (precision + 1)
    cs[0] = 1
    n = 1
    while n * n <= precision:
        cs[n * n] = 2
        n += 1
    return QSeries(cs, precision)


@lru_cache(maxsize=64)
def e4_infinity(precision: int = DEFAULT_PRECISION) -> QSeries:
    """``(E4(q) - E4(q^2)) / 240``: coefficient ``sigma3(n) - sigma3(n/2)``."""
    if precision < 0:
        raise ValueError("precision must be nonnegative")
    cs = [0] * (precision + 1)
    for n in range(1, precision + 1):
        c = divisor_sum(3, n)
        if n % 2 == 0:
            c -= divisor_sum(3, n // 2)
        cs[n] = c
    return QSeries(cs, precision)
