"""Named verification checks, run in a fixed order."""

from __future__ import annotations

from typing import Callable

from . import e8, severi
from .report import CheckReport

CHECK_NAMES = (
    "ramanujan",
    "theta_e4",
    "class_uniformity",
    "transitivity",
    "e4inf_identity",
    "phi_decomposition",
    "degree_consistency",
    "telltales_vs_lattice",
    "height_sums",
    "bound_dominance",
)

TELLTALE_G_MAX = 10
HEIGHT_N_MAX = 6
BOUND_G_MAX = 40


def _telltales(precision: int, norm_cap: int) -> list[CheckReport]:
    # the ordinary representative needs norm 2(g+2) <= cap
    g_max = min(TELLTALE_G_MAX, norm_cap // 2 - 2)
    return [severi.verify_telltales_against_lattice(g_max, k) for k in severi.TYPES]


def _height_sums(precision: int, norm_cap: int) -> list[CheckReport]:
    return [
        severi.height_degree_sum_check(n)
        for n in range(0, min(HEIGHT_N_MAX, precision - 2) + 1)
    ]


CHECKS: dict[str, Callable[[int, int], list[CheckReport]]] = {
    "ramanujan": lambda p, c: [severi.verify_ramanujan(p)],
    "theta_e4": lambda p, c: [e8.verify_theta_counts(c)],
    "class_uniformity": lambda p, c: [e8.verify_class_uniformity(c)],
    "transitivity": lambda p, c: [e8.verify_transitivity()],
    "e4inf_identity": lambda p, c: [
        severi.verify_e4inf_definition(p),
        severi.verify_e4inf_class_identity(p),
    ],
    "phi_decomposition": lambda p, c: [severi.verify_phi_decomposition(p)],
    "degree_consistency": lambda p, c: [
        severi.verify_degree_consistency(k, p) for k in severi.TYPES
    ],
    "telltales_vs_lattice": _telltales,
    "height_sums": _height_sums,
    "bound_dominance": lambda p, c: [severi.verify_bound_dominance(BOUND_G_MAX)],
}


def run_checks(names, precision: int, norm_cap: int) -> list[CheckReport]:
    """Run the named checks in declaration order ("all" expands to every check)."""
    wanted = set(CHECK_NAMES) if "all" in names else set(names)
    unknown = wanted - set(CHECK_NAMES)
    if unknown:
        raise KeyError(", ".join(sorted(unknown)))
    reports = []
    for name in CHECK_NAMES:
        if name in wanted:
            reports.extend(CHECKS[name](precision, norm_cap))
    return reports
