import io
import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from severi_lab import e8
from severi_lab.e8 import E8Vector
from severi_lab.qseries import divisor_sum

ROOT = E8Vector((2, 2, 0, 0, 0, 0, 0, 0))
HALF_ROOT = E8Vector((1, -1, -1, -1, -1, -1, -1, 1))
NORM4 = E8Vector((4, 0, 0, 0, 0, 0, 0, 0))


@st.composite
def lattice_vectors(draw, bound=3):
    # integer-sum-even or half-integer-sum-even, sampled in doubled coordinates
    half = draw(st.booleans())
    xs = [draw(st.integers(-bound, bound)) for _ in range(8)]
    d = [2 * x + (1 if half else 0) for x in xs]
    if sum(d) % 4:
        d[7] += 2
    return E8Vector(tuple(d))


roots_strategy = st.sampled_from(e8.roots())


def test_rejects_invalid_coordinates():
    with pytest.raises(ValueError):
        E8Vector((2, 0, 0, 0, 0, 0, 0, 0))  # odd coordinate sum
    with pytest.raises(ValueError):
        E8Vector((1, 2, 0, 0, 0, 0, 0, 1))  # mixed parity
    with pytest.raises(ValueError):
        E8Vector((2, 2, 0))
    with pytest.raises(ValueError):
        E8Vector.from_coords([Fraction(1, 3)] + [0] * 7)


def test_norm_examples():
    assert E8Vector.from_coords([1, 1, 0, 0, 0, 0, 0, 0]).norm == 2
    assert HALF_ROOT.norm == 2
    assert NORM4.norm == 4
    assert E8Vector.zero().norm == 0


@given(lattice_vectors(), lattice_vectors())
def test_dot_is_integral_and_even_norm(u, v):
    assert e8.dot(u, v).denominator == 1
    assert u.norm % 2 == 0
    assert (u + v).norm == u.norm + v.norm + 2 * e8.dot(u, v)


@given(lattice_vectors())
def test_vector_dict_round_trip(v):
    assert E8Vector.from_dict(json.loads(json.dumps(v.to_dict()))) == v


def test_small_norm_counts():
    assert len(e8.roots()) == 240
    assert len(e8.enumerate_norm(4)) == 2160
    assert len(e8.enumerate_norm(6)) == 6720


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_lazy_iterator_matches_kernel_order(n):
    assert list(e8.iter_norm(n)) == e8.enumerate_norm(n)


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_enumeration_is_sorted_and_unique(n):
    a = e8.enumerate_norm_array(n)
    rows = [tuple(r) for r in a.tolist()]
    assert rows == sorted(set(rows))
    assert (a * a).sum(axis=1).tolist() == [4 * n] * len(a)


def test_stream_writes_json_lines():
    buf = io.StringIO()
    count = e8.stream_norm(2, buf)
    lines = buf.getvalue().splitlines()
    assert count == len(lines) == 240
    assert json.loads(lines[0]) == {"doubled": True, "vector": [-2, -2, 0, 0, 0, 0, 0, 0]}


def test_theta_series_up_to_cap():
    counts = e8.norm_counts(60)
    assert counts[0] == 1
    for k in range(1, 31):
        assert counts[k] == 240 * divisor_sum(3, k)


def test_norm4_shapes_and_root_pairs():
    assert e8.norm4_shapes_check().passed
    for v in e8.enumerate_norm(4)[::97]:
        a, b = e8.root_pair_witness(v)
        assert a.norm == b.norm == 2 and a + b == v


@given(lattice_vectors(), roots_strategy)
def test_reflection_is_isometric_involution(v, r):
    w = e8.reflect(v, r)
    assert w.norm == v.norm
    assert e8.reflect(w, r) == v
    assert e8.reflect(r, r) == -r


def test_reflection_orbits():
    assert len(e8.orbit(ROOT)) == 240
    assert len(e8.orbit(NORM4)) == 2160
    assert e8.verify_transitivity().passed


def test_simple_root_basis_is_unimodular():
    assert round(abs(np.linalg.det(e8.SIMPLE_ROOTS.astype(float)))) == 2**8


@given(lattice_vectors())
def test_basis_coordinates_reconstruct(v):
    c = np.array(e8.basis_coordinates(v))
    assert (c @ e8.SIMPLE_ROOTS).tolist() == list(v.doubled)


@given(lattice_vectors(), lattice_vectors())
def test_class_is_invariant_under_2e8(v, t):
    assert e8.class_id(v + 2 * t).bits == e8.class_id(v).bits


@given(lattice_vectors())
def test_class_parity_follows_norm(v):
    cid = e8.class_id(v)
    if cid.bits:
        assert cid.parity == (e8.ROOT if v.norm % 4 == 2 else e8.NORM4)
    else:
        assert v.norm % 8 == 0


def test_class_partition():
    assert tuple(e8.classify_classes()) == (1, 120, 135)
    assert len(e8.class_representatives()) == 256


def test_class_uniformity():
    rep = e8.verify_class_uniformity(40)
    assert rep.passed


def test_two_divisible():
    assert e8.is_two_divisible(2 * ROOT)
    assert not e8.is_two_divisible(ROOT)
    assert not e8.is_two_divisible(NORM4)


@pytest.mark.parametrize(
    "w,m,expected",
    [(ROOT, 3, 28), (E8Vector.zero(), 4, 120), (NORM4, 4, 64), (ROOT, 1, 1)],
)
def test_pair_counts(w, m, expected):
    assert e8.count_pair_decompositions(w, m) == expected
    assert e8.count_pair_decompositions_direct(w, m) == expected


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([E8Vector.zero(), ROOT, NORM4, HALF_ROOT]), st.integers(1, 7))
def test_pair_count_routes_agree(w, m):
    assert e8.count_pair_decompositions(w, m) == e8.count_pair_decompositions_direct(w, m)


def test_decomposition_witness():
    v, w = e8.decomposition_witness(NORM4, 2)
    assert v + w == NORM4 and 4 * e8.dot(v, w) == NORM4.norm - 4
    assert e8.decomposition_witness(ROOT, 1) == (E8Vector.zero(), ROOT)


def test_two_divisible_vector_with_m_2_mod_4_has_no_split():
    with pytest.raises(e8.NoDecompositionError):
        e8.decomposition_witness(E8Vector.zero(), 2)
    with pytest.raises(e8.NoDecompositionError):
        e8.decomposition_witness(2 * ROOT, 2)


def test_bisection_class_counts():
    assert e8.count_bisection_classes(0, 1, e8.WEIERSTRASS) == 240
    with pytest.raises(ValueError):
        e8.count_bisection_classes(5, 1)


@pytest.mark.parametrize("g", range(0, 12))
@pytest.mark.parametrize("n", range(0, 6))
def test_bisection_counts_against_lattice(g, n):
    k = 2 * n + 2 - g
    if k < 0:
        return
    table = e8.norm_class_table(2 * k)
    total = int(table[k].sum())
    wei = int(table[k, 0])
    assert e8.count_bisection_classes(g, n) == total
    assert e8.count_bisection_classes(g, n, e8.WEIERSTRASS) == wei
    assert e8.count_bisection_classes(g, n, e8.ORDINARY) == total - wei


@pytest.mark.parametrize("g", range(0, 12))
def test_min_height_rule(g):
    for kind in (e8.ORDINARY, e8.WEIERSTRASS):
        if kind == e8.WEIERSTRASS and g % 2:
            continue
        mh = e8.min_height_delta(g, kind)
        assert mh.delta == e8.expected_delta(g, kind)
        assert mh.witness.norm == 2 * g + 4 - 4 * mh.delta


def test_norm_cap_validation():
    with pytest.raises(ValueError):
        e8.enumerate_norm(3)
