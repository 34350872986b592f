"""Brute-force E8 lattice data.

Vectors are stored in doubled coordinates ``d_i = 2 v_i`` so half-integer
points are plain integers. Norms here are positive definite (``v.v``); the
negative definite E8(-1) values are the negatives of these.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterator, NamedTuple, Sequence

import numpy as np

from . import _kernels
from .qseries import divisor_sum
from .report import CheckReport

ZERO = "zero"
ROOT = "root"
NORM4 = "norm4"
ORDINARY = "ordinary"
WEIERSTRASS = "weierstrass"


class NoDecompositionError(ValueError):
    """No split ``u = v + w`` with the requested ``4 v.w`` exists."""


@dataclass(frozen=True, order=True)
class E8Vector:
    doubled: tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(x) for x in self.doubled)
        if len(d) != 8:
            raise ValueError("E8 vectors have 8 coordinates")
        if len({x & 1 for x in d}) != 1:
            raise ValueError(f"mixed integer/half-integer coordinates: {d}")
        if sum(d) % 4:
            raise ValueError(f"coordinate sum is not even: {d}")
        object.__setattr__(self, "doubled", d)

    @classmethod
    def from_coords(cls, coords: Sequence) -> E8Vector:
        doubled = []
        for c in coords:
            x = Fraction(c) * 2
            if x.denominator != 1:
                raise ValueError(f"{c} is not an integer or half-integer")
            doubled.append(int(x))
        return cls(tuple(doubled))

    @classmethod
    def zero(cls) -> E8Vector:
        return cls((0,) * 8)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    @property
    def norm(self) -> int:
        return norm(self)

    def is_half_integer(self) -> bool:
        return self.doubled[0] & 1 == 1

    def __add__(self, other: E8Vector) -> E8Vector:
        return E8Vector(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: E8Vector) -> E8Vector:
        return E8Vector(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self) -> E8Vector:
        return E8Vector(tuple(-a for a in self.doubled))

    def __rmul__(self, k: int) -> E8Vector:
        if not isinstance(k, int):
            return NotImplemented
        return E8Vector(tuple(k * a for a in self.doubled))

    def __repr__(self) -> str:
        return "E8Vector(" + ", ".join(str(c) for c in self.coords) + ")"

    def to_dict(self) -> dict:
        return {"doubled": True, "vector": list(self.doubled)}

    @classmethod
    def from_dict(cls, data: dict) -> E8Vector:
        if data.get("doubled") is not True:
            raise ValueError("expected a doubled-coordinate vector")
        return cls(tuple(data["vector"]))


def norm(v: E8Vector) -> int:
    sq = sum(x * x for x in v.doubled)
    # the invariants force sq = 0 mod 8
    return sq // 4


def dot(u: E8Vector, v: E8Vector) -> Fraction:
    return Fraction(sum(a * b for a, b in zip(u.doubled, v.doubled)), 4)


def _to_array(vs: Sequence[E8Vector]) -> np.ndarray:
    if not len(vs):
        return np.zeros((0, 8), np.int64)
    return np.array([v.doubled for v in vs], dtype=np.int64)


def _from_array(a: np.ndarray) -> list[E8Vector]:
    return [E8Vector(tuple(int(x) for x in row)) for row in a]


# -- enumeration -------------------------------------------------------------


def _check_norm(n: int) -> None:
    if n < 0 or n % 2:
        raise ValueError(f"E8 is even: no vectors of norm {n}")


def enumerate_norm_array(n: int) -> np.ndarray:
    """Doubled coordinates of all vectors of norm ``n``, lexicographically sorted."""
    _check_norm(n)
    return _kernels.exact_norm_array(n)


def enumerate_norm(n: int) -> list[E8Vector]:
    return _from_array(enumerate_norm_array(n))


def iter_norm(n: int) -> Iterator[E8Vector]:
    """Lazily yield the vectors of norm ``n`` in the same order as enumerate_norm.

    Pure Python; used for streaming and for early-exit searches.
    """
    _check_norm(n)
    target = 4 * n
    top = _isqrt(target)
    d = [0] * 8

    def rec(k, rem, s, parity):
        if k == 7:
            t = _isqrt(rem)
            if t * t != rem or (t - parity) % 2:
                return
            for x in ((-t, t) if t else (0,)):
                if (s + x) % 4 == 0:
                    d[7] = x
                    yield E8Vector(tuple(d))
            return
        t = _isqrt(rem)
        if (t - parity) % 2:
            t -= 1
        for x in range(-t, t + 1, 2):
            d[k] = x
            yield from rec(k + 1, rem - x * x, s + x, parity)

    for first in range(-top, top + 1):
        d[0] = first
        yield from rec(1, target - first * first, first, first & 1)


def _isqrt(x: int) -> int:
    return math.isqrt(x) if x >= 0 else -1


def stream_norm(n: int, out: IO[str]) -> int:
    """Write one JSON vector per line; returns the number written."""
    count = 0
    for v in iter_norm(n):
        out.write(json.dumps(v.to_dict()) + "\n")
        count += 1
    return count


def roots() -> list[E8Vector]:
    return enumerate_norm(2)


# The norm 4 shapes up to permutation and overall sign, doubled.
NORM4_SHAPES = (
    (4, 0, 0, 0, 0, 0, 0, 0),
    (2, 2, 2, 2, 0, 0, 0, 0),
    (2, 2, 2, -2, 0, 0, 0, 0),
    (2, 2, -2, -2, 0, 0, 0, 0),
    (3, 1, 1, 1, 1, 1, 1, -1),
    (3, 1, 1, 1, 1, -1, -1, -1),
    (3, 1, 1, -1, -1, -1, -1, -1),
    (3, -1, -1, -1, -1, -1, -1, -1),
)


def norm4_shapes_check() -> CheckReport:
    """Every norm 4 vector is +-(a permutation of a listed shape) and a sum of two roots."""
    vs = enumerate_norm_array(4)
    rs = enumerate_norm_array(2)
    shapes = {tuple(sorted(s)) for s in NORM4_SHAPES}
    disc = None
    for i, row in enumerate(vs):
        key = tuple(sorted(int(x) for x in row))
        neg = tuple(sorted(-int(x) for x in row))
        if key not in shapes and neg not in shapes:
            disc = (i, "listed shape", list(map(int, row)))
            break
    # v = r + (v - r) with both roots  <=>  v.r = 2  <=>  sum d e = 8
    dots = vs @ rs.T
    hits = dots == 8
    witnesses = {}
    if disc is None:
        has = hits.any(axis=1)
        if not has.all():
            i = int(np.argmin(has))
            disc = (i, "sum of two roots", list(map(int, vs[i])))
        else:
            first = hits.argmax(axis=1)
            for i in range(len(vs)):
                r = rs[first[i]]
                witnesses[tuple(int(x) for x in vs[i])] = (
                    tuple(int(x) for x in r),
                    tuple(int(x) for x in vs[i] - r),
                )
    return CheckReport.from_discrepancy(
        "norm4_shapes",
        4,
        disc,
        norm4_count=len(vs),
        root_count=len(rs),
        witnesses=len(witnesses),
    )


def root_pair_witness(v: E8Vector) -> tuple[E8Vector, E8Vector]:
    """Two roots summing to the norm 4 vector ``v``."""
    if norm(v) != 4:
        raise ValueError("expected a norm 4 vector")
    rs = enumerate_norm_array(2)
    a = np.array(v.doubled, dtype=np.int64)
    idx = np.flatnonzero(rs @ a == 8)
    r = E8Vector(tuple(int(x) for x in rs[idx[0]]))
    return r, v - r


# -- reflections ---------------------------------------------------------------


def reflect(v: E8Vector, r: E8Vector) -> E8Vector:
    if norm(r) != 2:
        raise ValueError("reflection mirror must be a root")
    k = dot(v, r)
    # dot is an integer on E8
    k = int(k)
    return E8Vector(tuple(a - k * b for a, b in zip(v.doubled, r.doubled)))


def orbit(seed: E8Vector, generators: Sequence[E8Vector] | None = None) -> set[E8Vector]:
    """Closure of ``seed`` under the reflections in ``generators`` (default: all roots)."""
    gens = _to_array(generators) if generators is not None else enumerate_norm_array(2)
    if len(gens) and not np.all((gens * gens).sum(axis=1) == 8):
        raise ValueError("generators must be roots")
    seen = {seed.doubled}
    frontier = np.array([seed.doubled], dtype=np.int64)
    while len(frontier):
        k = (frontier @ gens.T) // 4
        images = frontier[:, None, :] - k[:, :, None] * gens[None, :, :]
        images = np.unique(images.reshape(-1, 8), axis=0)
        fresh = [tuple(int(x) for x in row) for row in images]
        fresh = [t for t in fresh if t not in seen]
        seen.update(fresh)
        frontier = np.array(fresh, dtype=np.int64).reshape(-1, 8)
    return {E8Vector(t) for t in seen}


# -- E8 / 2E8 ----------------------------------------------------------------

# simple roots (doubled): one half-integer vector and seven integer ones
SIMPLE_ROOTS = np.array(
    [
        [1, -1, -1, -1, -1, -1, -1, 1],
        [2, 2, 0, 0, 0, 0, 0, 0],
        [-2, 2, 0, 0, 0, 0, 0, 0],
        [0, -2, 2, 0, 0, 0, 0, 0],
        [0, 0, -2, 2, 0, 0, 0, 0],
        [0, 0, 0, -2, 2, 0, 0, 0],
        [0, 0, 0, 0, -2, 2, 0, 0],
        [0, 0, 0, 0, 0, -2, 2, 0],
    ],
    dtype=np.int64,
)


def _dual_basis() -> np.ndarray:
    gram = (SIMPLE_ROOTS @ SIMPLE_ROOTS.T) // 4
    inv = np.rint(np.linalg.inv(gram.astype(float))).astype(np.int64)
    if not np.array_equal(gram @ inv, np.eye(8, dtype=np.int64)):
        raise RuntimeError("simple-root Gram matrix is not unimodular")
    return inv @ SIMPLE_ROOTS


DUAL_BASIS = _dual_basis()


def basis_coordinates(v: E8Vector) -> tuple[int, ...]:
    """Integer coefficients of ``v`` in the simple-root basis."""
    a = np.array(v.doubled, dtype=np.int64)
    raw = DUAL_BASIS @ a
    if np.any(raw % 4):
        raise RuntimeError(f"non-integral basis coordinates for {v}")
    return tuple(int(x) for x in raw // 4)


@dataclass(frozen=True, order=True)
class ClassId:
    bits: int
    parity: str

    def __post_init__(self):
        if not 0 <= self.bits < 256:
            raise ValueError("class bits must fit in 8 bits")
        if self.parity not in (ZERO, ROOT, NORM4):
            raise ValueError(f"unknown parity {self.parity!r}")
        if (self.bits == 0) != (self.parity == ZERO):
            raise ValueError("only the zero class has parity 'zero'")


def class_id(v: E8Vector) -> ClassId:
    bits = 0
    for j, c in enumerate(basis_coordinates(v)):
        bits |= (c & 1) << j
    if bits == 0:
        return ClassId(0, ZERO)
    return ClassId(bits, ROOT if norm(v) % 4 == 2 else NORM4)


def is_two_divisible(v: E8Vector) -> bool:
    return class_id(v).bits == 0


class ClassCounts(NamedTuple):
    zero: int
    root: int
    norm4: int


def class_representatives() -> dict[int, E8Vector]:
    """Map each class bit pattern to its first minimal-norm vector."""
    reps = {0: E8Vector.zero()}
    for n in (2, 4):
        for v in enumerate_norm(n):
            reps.setdefault(class_id(v).bits, v)
    return reps


def classify_classes() -> ClassCounts:
    """Partition E8/2E8 by the norm of a minimal representative."""
    reps = class_representatives()
    if len(reps) != 256:
        raise RuntimeError(f"norms 0, 2, 4 reach only {len(reps)} classes")
    root = sum(1 for b, v in reps.items() if b and norm(v) == 2)
    norm4 = sum(1 for b, v in reps.items() if b and norm(v) == 4)
    return ClassCounts(1, root, norm4)


_table_cache: dict[str, np.ndarray] = {}


def norm_class_table(max_norm: int) -> np.ndarray:
    """``table[k, c]`` = number of vectors of norm ``2k`` in class ``c``, ``2k <= max_norm``."""
    half = max_norm // 2
    cached = _table_cache.get("table")
    if cached is None or cached.shape[0] <= half:
        cached = _kernels.norm_class_histogram(max(half, 2), DUAL_BASIS)
        _table_cache["table"] = cached
    return cached[: half + 1]


def norm_counts(max_norm: int) -> np.ndarray:
    """``counts[k]`` = number of vectors of norm ``2k``."""
    return norm_class_table(max_norm).sum(axis=1)


def count_norm_in_class(n: int, cls: ClassId | int) -> int:
    _check_norm(n)
    bits = cls.bits if isinstance(cls, ClassId) else int(cls)
    return int(norm_class_table(n)[n // 2, bits])


# -- pair decompositions -------------------------------------------------------


def count_pair_decompositions(w: E8Vector, m: int) -> int:
    """Unordered pairs {u1, u2} with u1 + u2 = w and 4 u1.u2 = w.w - 2m.

    With ``v = 2 u1 - w`` the condition becomes ``v.v = 2m`` and ``v = w`` in
    E8/2E8, so the ordered count is a class count. ``v -> -v`` swaps u1 and
    u2; its only fixed point is ``v = 0``, impossible for ``m > 0``, so the
    unordered count is exactly half.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if (norm(w) - 2 * m) % 4:
        return 0
    ordered = count_norm_in_class(2 * m, class_id(w))
    return ordered // 2


def count_pair_decompositions_direct(w: E8Vector, m: int) -> int:
    """Same count as count_pair_decompositions, by scanning candidate u1."""
    if m < 1:
        raise ValueError("m must be positive")
    wn = norm(w)
    if (wn - 2 * m) % 4:
        return 0
    # u1.u1 + u2.u2 = (w.w + 2m) / 2 bounds the search
    bound = (wn + 2 * m) // 2
    wa = np.array(w.doubled, dtype=np.int64)
    target = wn - 2 * m
    ordered = 0
    for n in range(0, bound + 1, 2):
        us = enumerate_norm_array(n) if n else np.zeros((1, 8), np.int64)
        # 4 u1.(w - u1) in doubled coordinates
        val = us @ wa - (us * us).sum(axis=1)
        ordered += int(np.count_nonzero(val == target))
    return ordered // 2


def decomposition_witness(u: E8Vector, m: int) -> tuple[E8Vector, E8Vector]:
    """First ``(v, w)`` with ``v + w = u`` and ``4 v.w = u.u - 2m``.

    Candidates ``v`` are scanned by increasing norm, lexicographically within a
    norm. A split exists iff some vector of norm ``2m`` is congruent to ``u``
    mod 2E8; for 2-divisible ``u`` and ``m = 2 (mod 4)`` there is none.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    un = norm(u)
    if (un - 2 * m) % 4:
        raise ValueError(f"parity mismatch: u.u = {un}, m = {m}")
    ua = np.array(u.doubled, dtype=np.int64)
    target = un - 2 * m
    bound = (un + 2 * m) // 2
    for n in range(0, bound + 1, 2):
        vs = enumerate_norm_array(n) if n else np.zeros((1, 8), np.int64)
        val = vs @ ua - (vs * vs).sum(axis=1)
        hit = np.flatnonzero(val == target)
        if len(hit):
            v = E8Vector(tuple(int(x) for x in vs[hit[0]]))
            return v, u - v
    raise NoDecompositionError(f"no decomposition of {u} with m = {m}")


# -- bisection bookkeeping -----------------------------------------------------


def _e4_coefficient(k: int) -> int:
    return 1 if k == 0 else 240 * divisor_sum(3, k)


def count_bisection_classes(g: int, n: int, kind: str = "all") -> int:
    """Vectors of norm ``2(2n + 2 - g)``, split by 2-divisibility.

    Counts come from the theta series of E8 (the tests compare them with the
    brute-force table). Weierstrass classes are the 2-divisible vectors.
    """
    k = 2 * n + 2 - g
    if k < 0:
        raise ValueError(f"no bisection classes with g={g}, n={n}")
    total = _e4_coefficient(k)
    wei = _e4_coefficient(k // 4) if k % 4 == 0 else 0
    if kind == "all":
        return total
    if kind == WEIERSTRASS:
        return wei
    if kind == ORDINARY:
        return total - wei
    raise ValueError(f"unknown bisection type {kind!r}")


class MinHeight(NamedTuple):
    delta: int
    witness: E8Vector


def _first_in_class(n: int, bits: int) -> E8Vector | None:
    if n == 0:
        return E8Vector.zero() if bits == 0 else None
    if bits == 0:
        # 2E8: double a vector of norm n/4
        if n % 8:
            return None
        return 2 * next(iter_norm(n // 4))
    for v in iter_norm(n):
        if class_id(v).bits == bits:
            return v
    return None


def min_height_delta(g: int, kind: str) -> MinHeight:
    """Height defect for genus ``g`` bisection bundles of the given type.

    A height ``g - delta`` zero section exists iff the class of the bundle's
    projection holds a vector of norm ``2g + 4 - 4 delta``; the smallest
    such ``delta`` in {0, 1} is returned with that vector.
    """
    if g < 0:
        raise ValueError("genus must be nonnegative")
    if kind == WEIERSTRASS:
        if g % 2:
            raise ValueError("Weierstrass bundles have even genus")
        bits = 0
    elif kind == ORDINARY:
        rep = (2, 2, 0, 0, 0, 0, 0, 0) if g % 2 else (2, 2, 2, 2, 0, 0, 0, 0)
        bits = class_id(E8Vector(rep)).bits
    else:
        raise ValueError(f"unknown bisection type {kind!r}")
    for delta in (0, 1):
        w = _first_in_class(2 * g + 4 - 4 * delta, bits)
        if w is not None:
            return MinHeight(delta, w)
    raise RuntimeError(f"no admissible height for g={g}, {kind}")


def expected_delta(g: int, kind: str) -> int:
    return int(kind == WEIERSTRASS and g % 4 == 0)


# -- lattice checks -------------------------------------------------------------


def verify_theta_counts(max_norm: int) -> CheckReport:
    """Vectors of norm 2n against the ``q^n`` coefficient of E4, for ``2n <= max_norm``."""
    from .qseries import eisenstein

    counts = norm_counts(max_norm)
    E4 = eisenstein(4, max_norm // 2)
    disc = None
    for n in range(max_norm // 2 + 1):
        if counts[n] != E4[n]:
            disc = (2 * n, E4[n], int(counts[n]))
            break
    return CheckReport.from_discrepancy(
        "theta_e4", max_norm, disc, counts=[int(c) for c in counts]
    )


def _class_parities() -> np.ndarray:
    parity = np.empty(256, dtype=object)
    for bits, v in class_representatives().items():
        parity[bits] = ZERO if bits == 0 else (ROOT if norm(v) == 2 else NORM4)
    return parity


def verify_class_uniformity(max_norm: int) -> CheckReport:
    """At each norm, classes of the matching parity hold equally many vectors and others none."""
    table = norm_class_table(max_norm)
    parity = _class_parities()
    root = parity == ROOT
    norm4 = parity == NORM4
    counts = ClassCounts(1, int(root.sum()), int(norm4.sum()))
    disc = None
    per_class = []
    for k in range(1, table.shape[0]):
        row = table[k]
        live = root if (2 * k) % 4 == 2 else norm4
        dead = ~live
        # 2E8 only reaches norms divisible by 8
        dead[0] = (2 * k) % 8 != 0
        vals = set(int(x) for x in row[live])
        if len(vals) != 1 or row[dead].any():
            disc = (2 * k, "uniform on one parity type", sorted(vals))
            break
        (u,) = vals
        if u * int(live.sum()) + int(row[0]) != int(row.sum()):
            disc = (2 * k, int(row.sum()), u * int(live.sum()) + int(row[0]))
            break
        per_class.append(u)
    if disc is None and counts != (1, 120, 135):
        disc = (0, (1, 120, 135), tuple(counts))
    return CheckReport.from_discrepancy(
        "class_uniformity",
        max_norm,
        disc,
        classes=list(counts),
        per_class=per_class,
    )


def verify_transitivity() -> CheckReport:
    """Reflection orbits of one root and one norm 4 vector exhaust their norms."""
    gens = roots()
    root_orbit = orbit(E8Vector((2, 2, 0, 0, 0, 0, 0, 0)), gens)
    n4_orbit = orbit(E8Vector((4, 0, 0, 0, 0, 0, 0, 0)), gens)
    disc = None
    if root_orbit != set(gens):
        disc = (2, 240, len(root_orbit))
    elif n4_orbit != set(enumerate_norm(4)):
        disc = (4, 2160, len(n4_orbit))
    else:
        shapes = norm4_shapes_check()
        disc = shapes.first_discrepancy
    return CheckReport.from_discrepancy(
        "transitivity",
        4,
        disc,
        root_orbit=len(root_orbit),
        norm4_orbit=len(n4_orbit),
    )
