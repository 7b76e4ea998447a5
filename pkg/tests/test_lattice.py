from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import coset_group, frac_part, quotient_classes
from towerlab.lattice import (
    LatticeError,
    canonicalize,
    contains,
    coordinates,
    det,
    generates,
    hermite_rows,
    index,
    int_det,
    invariant_factors,
    is_primitive,
    qvec,
    quotient_type,
    same_type,
    solve_left,
    standard,
    unit_vector,
    vec,
)

HALF5 = canonicalize(5, [qvec(2, (1, 1, 1, 0, 0))])


def test_index_and_membership_half_lattice():
    assert index(HALF5) == 2
    assert contains(HALF5, vec(5, 4, 2, 1, 9))
    assert contains(HALF5, qvec(2, (3, 3, 1, 2, 4)))
    assert not contains(HALF5, qvec(2, (1, 0, 0, 0, 0)))
    assert is_primitive(HALF5, vec(5, 4, 2, 1, 9))


def test_doubled_vector_is_not_primitive():
    assert not is_primitive(HALF5, vec(2, 2, 2, 0, 0))
    assert is_primitive(HALF5, qvec(2, (1, 1, 1, 0, 0)))


def test_primitive_rejects_non_members_and_zero():
    with pytest.raises(LatticeError):
        is_primitive(HALF5, qvec(2, (1, 0, 0, 0, 0)))
    with pytest.raises(LatticeError):
        is_primitive(HALF5, vec(0, 0, 0, 0, 0))


def test_equality_ignores_presentation():
    a = canonicalize(4, [qvec(2, (1, 1, 1, 0))])
    b = canonicalize(4, [qvec(2, (3, -1, 1, 2)), qvec(2, (1, 1, 1, 0))])
    assert a == b
    assert a != standard(4)


def test_dimension_errors():
    with pytest.raises(LatticeError):
        canonicalize(0)
    with pytest.raises(LatticeError):
        canonicalize(3, [vec(1, 2)])
    with pytest.raises(LatticeError):
        coordinates(HALF5, vec(1, 2, 3))


def test_hermite_form_shape():
    h = hermite_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], 3)
    for i, row in enumerate(h):
        assert row[i] > 0 and all(x == 0 for x in row[:i])
        for j in range(i):
            assert 0 <= h[j][i] < row[i]


def test_det_and_solve():
    rows = [vec(2, 1, 0), vec(0, 1, 0), qvec(3, (1, 1, 1))]
    assert det(rows) == Fraction(2, 3)
    x = vec(7, 2, Fraction(5, 3))
    c = solve_left(rows, x)
    assert tuple(sum(c[j] * rows[j][k] for j in range(3)) for k in range(3)) == x
    with pytest.raises(LatticeError):
        solve_left([vec(1, 2), vec(2, 4)], vec(1, 1))


@given(st.lists(st.lists(st.integers(-20, 20), min_size=4, max_size=4), min_size=4, max_size=4))
def test_int_det_matches_fraction_elimination(m):
    # cofactor expansion as the reference
    def cof(a):
        if len(a) == 1:
            return a[0][0]
        return sum((-1) ** j * a[0][j] * cof([r[:j] + r[j + 1:] for r in a[1:]]) for j in range(len(a)))

    assert int_det(m) == cof(m)


def test_invariant_factors():
    assert invariant_factors([[2, 0], [0, 3]]) == [1, 6]
    assert invariant_factors([[2, 0], [0, 2]]) == [2, 2]
    with pytest.raises(LatticeError):
        invariant_factors([[1, 2], [2, 4]])


def test_generates():
    gens = [unit_vector(5, i) for i in range(4)] + [qvec(2, (1, 1, 1, 0, 0))]
    assert not generates(HALF5, gens)
    gens = [qvec(2, (1, 1, 1, 0, 0)), unit_vector(5, 1), unit_vector(5, 2), unit_vector(5, 3), unit_vector(5, 4)]
    assert generates(HALF5, gens)


def test_quotient_type_of_cubic_chart():
    # chart 3 of the (5,4,2,1,9)-subdivision of the half lattice
    gens = [unit_vector(5, 0), unit_vector(5, 1), vec(5, 4, 2, 1, 9), unit_vector(5, 3), unit_vector(5, 4)]
    t = quotient_type(HALF5, gens)
    assert t.kind == "cyclic" and t.order == 4
    assert same_type(t, 4, (1, 2, 1, 3, 3))
    assert not same_type(t, 4, (1, 1, 1, 3, 3))


def test_quotient_type_smooth_and_noncyclic():
    L = standard(2)
    assert quotient_type(L, [vec(1, 0), vec(0, 1)]).kind == "smooth"
    t = quotient_type(L, [vec(2, 0), vec(0, 2)])
    assert t.kind == "non-cyclic" and t.invariants == (2, 2)
    assert str(t).startswith("non-cyclic")


# -- properties against the coset-enumeration oracle --------------------------

dims = st.integers(1, 5)


@st.composite
def small_lattices(draw):
    d = draw(dims)
    k = draw(st.integers(1, 2))
    dens = [draw(st.integers(2, 60))] if k == 1 else [draw(st.integers(2, 7)) for _ in range(2)]
    gens = [tuple(Fraction(draw(st.integers(-den, 2 * den)), den) for _ in range(d)) for den in dens]
    return d, gens


@settings(max_examples=200, deadline=None)
@given(small_lattices(), st.data())
def test_index_and_membership_match_cosets(lat, data):
    d, gens = lat
    L = canonicalize(d, gens)
    group = coset_group(d, gens)
    assert index(L) == len(group)
    den = max(Fraction(x).denominator for g in gens for x in g)
    x = tuple(Fraction(data.draw(st.integers(-5 * den, 5 * den)), den) for _ in range(d))
    assert contains(L, x) == (frac_part(x) in group)


@settings(max_examples=100, deadline=None)
@given(small_lattices(), st.lists(st.integers(-3, 3), min_size=2, max_size=2), st.lists(st.integers(-4, 4), min_size=5, max_size=5))
def test_integer_combinations_are_members(lat, coeffs, shift):
    d, gens = lat
    L = canonicalize(d, gens)
    x = tuple(sum((c * g[i] for c, g in zip(coeffs, gens)), Fraction(0)) + shift[i] for i in range(d))
    assert contains(L, x)


@settings(max_examples=100, deadline=None)
@given(small_lattices())
def test_canonical_basis_is_presentation_independent(lat):
    d, gens = lat
    doubled = gens + [tuple(2 * x for x in gens[0])] + [tuple(a + 1 for a in gens[-1])]
    assert canonicalize(d, gens) == canonicalize(d, doubled)


@settings(max_examples=100, deadline=None)
@given(small_lattices(), st.data())
def test_quotient_type_matches_full_enumeration(lat, data):
    d, gens = lat
    L = canonicalize(d, gens)
    # an integer cone: scaled unit vectors plus one positive row
    rows = [tuple(Fraction(int(i == j) * data.draw(st.integers(1, 3))) for j in range(d)) for i in range(d)]
    t = quotient_type(L, rows)
    classes = quotient_classes(rows, L.canonical_basis, t.order if t.kind != "non-cyclic" else 1)
    if t.kind == "cyclic":
        assert len(classes) == t.order
        best = min(e for e in classes if gcd(t.order, *e) == 1)
        assert t.weights == best
    elif t.kind == "smooth":
        assert t.order == 1
