"""Generating functions for Severi curves of bisections and their checks.

The Noether-Lefschetz series ``phi`` splits as

    phi = -1 + psi_sec + psi_ex + psi_no  (constant bookkeeping included)

where ``psi_sec`` carries four times the summed plane-curve degrees of the
branch maps. The conjectural degree series refine ``psi_sec`` one bundle type
at a time, and everything here is cross-checked against the lattice counts
in :mod:`severi_lab.e8`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import e8
from .e8 import ORDINARY, WEIERSTRASS, E8Vector
from .qseries import (
    DEFAULT_PRECISION,
    QSeries,
    constant,
    divisor_sum,
    e4_infinity,
    eisenstein,
    qs_coeff,
    qs_derive,
    qs_parity_part,
    qs_substitute_power,
    theta,
)
from .report import CheckReport

TYPES = (ORDINARY, WEIERSTRASS)


class IntegrityError(ArithmeticError):
    """A coefficient that must be a nonnegative (even) integer is not."""


def _check_type(kind: str) -> None:
    if kind not in TYPES:
        raise ValueError(f"unknown bisection type {kind!r}")


def is_admissible(g: int, kind: str) -> bool:
    _check_type(kind)
    if g < 0:
        return False
    return kind == ORDINARY or g % 2 == 0


def _sub(f: QSeries, m: int, precision: int) -> QSeries:
    return qs_substitute_power(f.truncate(precision // m), m, precision)


# -- series -------------------------------------------------------------------


@lru_cache(maxsize=32)
def nl_series_phi(precision: int = DEFAULT_PRECISION) -> QSeries:
    """``-E2 E4^2 / 3 - 2 E4 E6 / 3``."""
    E2 = eisenstein(2, precision)
    E4 = eisenstein(4, precision)
    E6 = eisenstein(6, precision)
    return Fraction(-1, 3) * (E2 * E4 * E4) - Fraction(2, 3) * (E4 * E6)


@lru_cache(maxsize=32)
def excess_correction(precision: int = DEFAULT_PRECISION) -> QSeries:
    """``1 - E4(q^2)``."""
    return 1 - _sub(eisenstein(4, precision), 2, precision)


@lru_cache(maxsize=32)
def nodal_correction(precision: int = DEFAULT_PRECISION) -> QSeries:
    """``12 (theta - 1) E4(q^2)``, i.e. ``24 sum_k q^{k^2} E4(q^2)``."""
    return 12 * (theta(precision) - 1) * _sub(eisenstein(4, precision), 2, precision)


@lru_cache(maxsize=32)
def section_series(precision: int = DEFAULT_PRECISION) -> QSeries:
    return (
        nl_series_phi(precision)
        + 1
        - excess_correction(precision)
        - nodal_correction(precision)
    )


def _e2_q2(precision: int) -> QSeries:
    return _sub(eisenstein(2, precision), 2, precision)


@lru_cache(maxsize=32)
def degree_series(kind: str, precision: int = DEFAULT_PRECISION) -> QSeries:
    """Series whose ``q^{g+2}`` coefficient is twice the conjectural degree.

    ordinary:     ``D E4inf - E4inf E2(q^2)``
    Weierstrass:  ``(D E4(q^4) - E4(q^4) E2(q^2) - 12 (theta(q^2) - 1)) / 2``
    """
    _check_type(kind)
    E2q2 = _e2_q2(precision)
    if kind == ORDINARY:
        f = e4_infinity(precision)
        return qs_derive(f) - f * E2q2
    E4q4 = _sub(eisenstein(4, precision), 4, precision)
    thq2 = _sub(theta(precision), 2, precision)
    return Fraction(1, 2) * (qs_derive(E4q4) - E4q4 * E2q2 - 12 * (thq2 - 1))


@lru_cache(maxsize=32)
def simple_telltale_series(kind: str, precision: int = DEFAULT_PRECISION) -> QSeries:
    """``E4inf`` (ordinary) or ``E4(q^4)/2 + 1/2`` (Weierstrass)."""
    _check_type(kind)
    if kind == ORDINARY:
        return e4_infinity(precision)
    return Fraction(1, 2) * _sub(eisenstein(4, precision), 4, precision) + Fraction(1, 2)


def _precision_for(exponent: int) -> int:
    return max(exponent, 8)


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise IntegrityError(f"{what} is not an integer: {x}")
    return x.numerator


def conjectural_degree(g: int, kind: str) -> int:
    """Half the ``q^{g+2}`` coefficient of :func:`degree_series`."""
    _check_type(kind)
    if not is_admissible(g, kind):
        raise ValueError(f"genus {g} is not admissible for {kind} bundles")
    c = qs_coeff(degree_series(kind, _precision_for(g + 2)), g + 2)
    c = _integral(c, f"degree coefficient at q^{g + 2}")
    if c < 0 or c % 2:
        raise IntegrityError(f"degree coefficient {c} at q^{g + 2} is negative or odd")
    return c // 2


def simple_telltale_count(g: int, kind: str) -> int:
    _check_type(kind)
    if g + 2 < 0:
        return 0
    c = qs_coeff(simple_telltale_series(kind, _precision_for(g + 2)), g + 2)
    return _integral(c, "simple telltale count")


def nonsimple_telltale_count(g: int, m: int, kind: str) -> int:
    """Telltales ``s1 + s2 + m N``: 12 times the simple count of genus ``g - 2m``."""
    _check_type(kind)
    if m < 1:
        raise ValueError("fiber multiplicity must be positive")
    k = g + 2 - 2 * m
    if k < 0:
        return 0
    c = qs_coeff(simple_telltale_series(kind, _precision_for(k)), k)
    return 12 * _integral(c, "nonsimple telltale count")


def _is_square(m: int) -> bool:
    r = math.isqrt(m)
    return r * r == m


def multiplicity(m: int, doubled_section: bool = False) -> int:
    """Conjectured intersection multiplicity of a telltale ``s1 + s2 + m N``."""
    if m < 1:
        raise ValueError("m must be positive")
    s = divisor_sum(1, m)
    if not doubled_section:
        return 2 * s
    if m <= 1:
        raise ValueError("doubled-section telltales need m >= 2")
    return s - 1 if _is_square(m) else s


def telltale_degree_sum(g: int, kind: str) -> int:
    """``(g+1) * simple + sum_m multiplicity * nonsimple`` for one bundle.

    For Weierstrass bundles the 12 telltales ``2s + mN`` at ``m = (g+2)/2``
    use the doubled-section multiplicity (and vanish when ``m = 1``).
    """
    total = (g + 1) * simple_telltale_count(g, kind)
    for m in range(1, (g + 2) // 2 + 1):
        count = nonsimple_telltale_count(g, m, kind)
        if not count:
            continue
        if kind == WEIERSTRASS and 2 * m == g + 2:
            # 12 of these are doubled sections; the rest are ordinary pairs
            doubled = 12
            if m > 1:
                total += doubled * multiplicity(m, doubled_section=True)
            total += (count - doubled) * multiplicity(m)
        else:
            total += count * multiplicity(m)
    return total


# -- rows ---------------------------------------------------------------------


def _bound_inputs(g: int, kind: str) -> tuple[int, int]:
    if kind == WEIERSTRASS and g % 4 == 0:
        h = g - 1
    else:
        h = g
    return h, e8.count_bisection_classes(g, h, kind)


def height_degree_total(n: int) -> int:
    """``psi_sec`` coefficient at ``q^{n+2}`` divided by 4: the degree sum at height ``n``."""
    if n + 2 < 0:
        raise ValueError("height must be at least -2")
    c = qs_coeff(section_series(_precision_for(n + 2)), n + 2)
    c = _integral(c, "section series coefficient")
    if c % 4:
        raise IntegrityError(f"section coefficient {c} at q^{n + 2} is not divisible by 4")
    return c // 4


def rigorous_degree_bound(g: int, kind: str) -> int:
    """Floor of (degree sum at height h) / (number of genus g bundles of height h).

    All bundles of one genus and type share the degree, so the true degree is
    an integer no larger than this rational bound.
    """
    if not is_admissible(g, kind):
        raise ValueError(f"genus {g} is not admissible for {kind} bundles")
    h, count = _bound_inputs(g, kind)
    if count == 0:
        raise IntegrityError(f"no {kind} bundles of genus {g} at height {h}")
    return height_degree_total(h) // count


def plane_genus(d: int) -> int:
    """Arithmetic genus ``(d-1)(d-2)/2`` of a plane curve of degree ``d >= 1``; 0 for d = 0."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return 0
    return (d - 1) * (d - 2) // 2


def genus_bound(g: int, kind: str) -> int:
    return plane_genus(rigorous_degree_bound(g, kind))


@dataclass(frozen=True)
class DegreeRow:
    g: int
    type: str
    conjectural_degree: int
    simple_telltales: int
    nonsimple_telltales: dict[int, int] = field(default_factory=dict)
    rigorous_degree_bound: int = 0
    genus_bound: int = 0

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "type": self.type,
            "degree": self.conjectural_degree,
            "simple": self.simple_telltales,
            "nonsimple": {str(m): c for m, c in self.nonsimple_telltales.items()},
            "bound": self.rigorous_degree_bound,
            "genus_bound": self.genus_bound,
        }


def degree_row(g: int, kind: str) -> DegreeRow:
    if kind == WEIERSTRASS and g == 0:
        # empty Severi variety: the only candidates are doubled sections at m = 1
        return DegreeRow(g=0, type=kind, conjectural_degree=0, simple_telltales=0,
                         nonsimple_telltales={1: 0})
    return DegreeRow(
        g=g,
        type=kind,
        conjectural_degree=conjectural_degree(g, kind),
        simple_telltales=simple_telltale_count(g, kind),
        nonsimple_telltales={
            m: nonsimple_telltale_count(g, m, kind) for m in range(1, (g + 2) // 2 + 1)
        },
        rigorous_degree_bound=rigorous_degree_bound(g, kind),
        genus_bound=genus_bound(g, kind),
    )


def degree_table(g_max: int) -> list[DegreeRow]:
    rows = []
    for g in range(g_max + 1):
        for kind in TYPES:
            if is_admissible(g, kind):
                rows.append(degree_row(g, kind))
    return rows


# -- checks -------------------------------------------------------------------


def verify_ramanujan(precision: int = DEFAULT_PRECISION) -> CheckReport:
    E2 = eisenstein(2, precision)
    E4 = eisenstein(4, precision)
    E6 = eisenstein(6, precision)
    lhs = qs_derive(E4)
    rhs = Fraction(1, 3) * (E2 * E4 - E6)
    return CheckReport.from_discrepancy("ramanujan", precision, rhs.first_difference(lhs))


def verify_e4inf_definition(precision: int = DEFAULT_PRECISION) -> CheckReport:
    E4 = eisenstein(4, precision)
    built = Fraction(1, 240) * (E4 - _sub(E4, 2, precision))
    return CheckReport.from_discrepancy(
        "e4inf_definition", precision, built.first_difference(e4_infinity(precision))
    )


def verify_e4inf_class_identity(precision: int = DEFAULT_PRECISION) -> CheckReport:
    """``2 E4inf = (E4 - E4(q^4))_odd / 120 + (E4 - E4(q^4))_even / 135``."""
    E4 = eisenstein(4, precision)
    diff = E4 - _sub(E4, 4, precision)
    rhs = Fraction(1, 120) * qs_parity_part(diff, "odd") + Fraction(1, 135) * qs_parity_part(
        diff, "even"
    )
    lhs = 2 * e4_infinity(precision)
    return CheckReport.from_discrepancy(
        "e4inf_identity", precision, lhs.first_difference(rhs)
    )


def genus_part(f: QSeries) -> QSeries:
    """Drop the ``q^0`` and ``q^1`` terms, which sit at genus -2 and -1."""
    return QSeries((0, 0) + f.coeffs[2:], f.precision)


def phi_q2_expression(precision: int, genus_only: bool = True) -> QSeries:
    """Degree series and corrections assembled in ``q^2``-variables.

    With ``genus_only`` the degree series keep only genus >= 0 terms; the
    literal assembly also carries the Weierstrass series' constant ``-1/2``,
    which shifts the result by ``-E4(q^4)``.
    """
    N = precision
    E4 = eisenstein(4, N)
    E4q4 = _sub(E4, 4, N)
    thq2 = _sub(theta(N), 2, N)
    ordinary = degree_series(ORDINARY, N)
    wei_twice = 2 * degree_series(WEIERSTRASS, N)
    if genus_only:
        ordinary = genus_part(ordinary)
        wei_twice = genus_part(wei_twice)
    return (
        2 * (E4 - E4q4) * ordinary
        + E4q4 * wei_twice
        + (1 - E4q4)
        + 12 * E4q4 * (thq2 - 1)
        - 1
    )


def phi_q2_short_form(precision: int) -> QSeries:
    """``2(E4 - E4(q^4))(D E4inf - E4inf E2(q^2)) + E4(q^4)(D E4(q^4) - E4(q^4) E2(q^2))``."""
    N = precision
    E4 = eisenstein(4, N)
    E4q4 = _sub(E4, 4, N)
    return 2 * (E4 - E4q4) * degree_series(ORDINARY, N) + E4q4 * (
        qs_derive(E4q4) - E4q4 * _e2_q2(N)
    )


def verify_phi_decomposition(precision: int = DEFAULT_PRECISION) -> CheckReport:
    """Even coefficients of ``phi(q^2)`` against the degree-series assemblies.

    Passes when both the short form and the genus-restricted component
    assembly agree with ``phi(q^2)`` on every even exponent. The literal
    assembly is compared too and its offset reported in ``detail``.
    """
    if precision < 4:
        raise ValueError("precision must be at least 4")
    lhs = _sub(nl_series_phi(precision // 2), 2, precision)
    evens = range(0, precision + 1, 2)
    disc = lhs.first_difference(phi_q2_short_form(precision), evens)
    if disc is None:
        disc = lhs.first_difference(phi_q2_expression(precision), evens)
    literal = phi_q2_expression(precision, genus_only=False)
    E4q4 = _sub(eisenstein(4, precision), 4, precision)
    literal_offset_is_e4q4 = (
        lhs.first_difference(literal + E4q4, evens) is None
    )
    odd = lhs.first_difference(phi_q2_expression(precision), range(1, precision + 1, 2))
    return CheckReport.from_discrepancy(
        "phi_decomposition",
        precision,
        disc,
        odd_terms_agree=odd is None,
        literal_assembly_agrees=lhs.first_difference(literal, evens) is None,
        literal_assembly_offset_is_minus_e4_q4=literal_offset_is_e4q4,
    )


def verify_degree_consistency(kind: str, precision: int = DEFAULT_PRECISION) -> CheckReport:
    """Degree series coefficient vs telltale accounting for every admissible g."""
    _check_type(kind)
    series = degree_series(kind, precision)
    disc = None
    for g in range(0, precision - 1):
        if not is_admissible(g, kind):
            continue
        expected = qs_coeff(series, g + 2)
        got = telltale_degree_sum(g, kind)
        if expected != got:
            disc = (g + 2, expected, got)
            break
    return CheckReport.from_discrepancy(f"degree_consistency[{kind}]", precision, disc)


def representative(kind: str, m: int) -> E8Vector:
    """A projection class for ``m = g + 2``: 2-primitive for ordinary, zero for Weierstrass."""
    if kind == WEIERSTRASS:
        return E8Vector.zero()
    # root if m is odd, a norm 4 vector (2-primitive) if m is even
    return E8Vector((2, 2, 0, 0, 0, 0, 0, 0)) if m % 2 else E8Vector((4, 0, 0, 0, 0, 0, 0, 0))


def verify_telltales_against_lattice(
    g_max: int, kind: str, direct: bool = True
) -> CheckReport:
    """Simple telltale series vs pair counts on the lattice.

    ``direct`` also runs the candidate scan, independent of the class table.
    """
    _check_type(kind)
    disc = None
    checked = []
    for g in range(g_max + 1):
        if kind == WEIERSTRASS and g % 2:
            continue
        m = g + 2
        w = representative(kind, m)
        series = simple_telltale_count(g, kind)
        lattice = e8.count_pair_decompositions(w, m)
        if series != lattice:
            disc = (g, series, lattice)
            break
        if direct:
            scan = e8.count_pair_decompositions_direct(w, m)
            if scan != lattice:
                disc = (g, lattice, scan)
                break
        checked.append(g)
    return CheckReport.from_discrepancy(
        f"telltales_vs_lattice[{kind}]", g_max + 2, disc, genera=checked
    )


def height_sum_terms(n: int) -> list[tuple[int, str, int, int]]:
    """``(g, type, bundle count, conjectural degree)`` for every bundle type at height n."""
    terms = []
    for g in range(0, 2 * n + 3):
        for kind in TYPES:
            if not is_admissible(g, kind):
                continue
            count = e8.count_bisection_classes(g, n, kind)
            if count:
                terms.append((g, kind, count, conjectural_degree(g, kind)))
    return terms


def height_degree_sum_check(n: int) -> CheckReport:
    if n < 0:
        raise ValueError("height must be nonnegative")
    expected = height_degree_total(n)
    terms = height_sum_terms(n)
    got = sum(c * d for _, _, c, d in terms)
    disc = None if expected == got else (n + 2, expected, got)
    return CheckReport.from_discrepancy(
        f"height_sum[{n}]",
        n + 2,
        disc,
        terms=[list(t) for t in terms],
    )


def verify_bound_dominance(g_max: int = 40) -> CheckReport:
    disc = None
    for g in range(g_max + 1):
        for kind in TYPES:
            if not is_admissible(g, kind):
                continue
            deg = conjectural_degree(g, kind)
            bound = rigorous_degree_bound(g, kind)
            if deg > bound:
                disc = (g, bound, deg)
                break
        if disc:
            break
    return CheckReport.from_discrepancy("bound_dominance", g_max + 2, disc)


def growth_constant(g_max: int = 40) -> dict:
    """Explicit constants behind ``genus_bound(g) <= C g^12`` on ``1 <= g <= g_max``.

    ``C_deg`` is the smallest constant with ``bound(g) <= C_deg g^6`` on the
    range; then ``(d-1)(d-2)/2 < d^2/2`` gives ``C = C_deg^2 / 2``.
    """
    c_deg = Fraction(0)
    rows = []
    for g in range(1, g_max + 1):
        for kind in TYPES:
            if not is_admissible(g, kind):
                continue
            b = rigorous_degree_bound(g, kind)
            c_deg = max(c_deg, Fraction(b, g**6))
            rows.append((g, kind, b, plane_genus(b)))
    C = c_deg * c_deg / 2
    holds = all(gb <= C * g**12 for g, _, _, gb in rows)
    return {"C_deg": c_deg, "C": C, "holds": holds, "rows": rows}
