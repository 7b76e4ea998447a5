from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from towerlab.cone import reverse_tower, tower
from towerlab.lattice import canonicalize, qvec, vec
from towerlab.poly import support
from towerlab.tworay import (
    DiscrepancyLedger,
    TwoRayData,
    TwoRayError,
    criterion_T,
    discrepancy_over_X,
    elephant_T,
    exceptional_cube,
    kawamata_Fcube,
    nef_check,
    pullback_coeff,
    theorem12_verify,
)

E2 = canonicalize(4, [qvec(2, (0, 1, 1, 1))])
E2_TOWER = tower(E2, vec(3, 2, 1, 4), qvec(2, (2, 3, 1, 3)))
E2_DATA = TwoRayData(a=2, n=2, p=6, q=Fraction(2), c0=Fraction(2), q0=Fraction(1), Ecube=Fraction(1, 6), Fcube=Fraction(36, 5))


def test_criterion_on_e2():
    # -(2*2/4)(1/6) + (2*1/216)(36/5) = -1/6 + 1/15
    assert criterion_T(E2_DATA) == Fraction(-1, 10)
    assert nef_check(E2_DATA)


def test_elephant_form_agrees_when_c0_is_a():
    assert elephant_T(2, 2, Fraction(2), 6, Fraction(1, 6), Fraction(36, 5)) == criterion_T(E2_DATA)


def test_nef_fails_when_c0_exceeds_a_q0():
    d = TwoRayData(2, 2, 6, Fraction(2), Fraction(3), Fraction(1), Fraction(1, 6), Fraction(36, 5))
    assert not nef_check(d)


def test_data_validation():
    with pytest.raises(TwoRayError):
        TwoRayData(0, 2, 6, Fraction(2), Fraction(2), Fraction(1), Fraction(1, 6), Fraction(1))
    with pytest.raises(TwoRayError):
        TwoRayData(2, 2, 6, Fraction(0), Fraction(2), Fraction(1), Fraction(1, 6), Fraction(1))


def test_exceptional_cube_of_e2_hypersurface():
    phi = support(4, "x4^2 + x1^3 + x2^4 + x3^8")
    from towerlab.poly import wt

    assert exceptional_cube(vec(3, 2, 1, 4), 2, [wt(vec(3, 2, 1, 4), phi)]) == Fraction(1, 6)


def test_exceptional_cube_of_smooth_point_blowup():
    # the ordinary blowup of a smooth threefold point has E^3 = 1
    assert exceptional_cube(vec(1, 1, 1), 1, []) == 1


def test_kawamata_cube():
    assert kawamata_Fcube(5, 1, 2, 3) == Fraction(25, 6)
    # Kawamata blowup of 1/p(1,-1,1) with weights (1,p-1,1)/p has cube p^2/(p-1)
    assert kawamata_Fcube(3, 1, 2, 1) == Fraction(9, 2)


def test_pullback_coefficients():
    w = E2_TOWER.weight()
    assert pullback_coeff(w, 0) == Fraction(1, 3)
    assert pullback_coeff(w, support(4, "x2 + x3*x4")) == Fraction(2, 6)
    with pytest.raises(TwoRayError):
        pullback_coeff(w, 7)


def test_e2_ledger_and_theorem():
    t = E2_TOWER
    r = reverse_tower(t)
    assert pullback_coeff(r.weight(), r.chart) == Fraction(4, 3)
    # a(E,X) = 1, a(F,Y) = 1/6 and v2 has weight 1/3 on v1, so a(F,X) = 1/2
    orig = discrepancy_over_X(t, Fraction(1), (Fraction(1, 6), Fraction(1, 3)), ("E", "F"))
    # reversed: a(F,X) = 1/2, a(E,Y') = 1/3 and v1 has weight 4/3 on v2
    rev = discrepancy_over_X(r, Fraction(1, 2), (Fraction(1, 3), Fraction(4, 3)), ("F", "E"))
    assert orig.entries == {"E": Fraction(1), "F": Fraction(1, 2)}
    assert rev.entries == orig.entries
    assert theorem12_verify(orig, rev, "cE2", 2, 3, Fraction(1, 3))
    assert not theorem12_verify(orig, rev, "cE2", 2, 2, Fraction(1, 3))


def test_theorem_rejects_mismatched_ledgers():
    a = DiscrepancyLedger({"E": Fraction(1), "F": Fraction(1, 2)})
    b = DiscrepancyLedger({"E": Fraction(1), "F": Fraction(1, 3)})
    assert not theorem12_verify(a, b, "other", 2, 2, Fraction(1, 2))
    with pytest.raises(TwoRayError):
        theorem12_verify(a, DiscrepancyLedger({"E": Fraction(1)}), "other", 2, 2, Fraction(1))
    with pytest.raises(TwoRayError):
        theorem12_verify(a, a, "bogus", 2, 2, Fraction(1))
    with pytest.raises(TwoRayError):
        DiscrepancyLedger({"E": Fraction(0)})


@given(st.integers(1, 12), st.integers(1, 12), st.integers(1, 12), st.integers(2, 9))
def test_other_case_split(a1, a2, extra, n):
    a = a1 + a2
    orig = DiscrepancyLedger({"E": Fraction(a, n), "F": Fraction(a1, n)})
    assert theorem12_verify(orig, orig, "other", n, n, Fraction(a2, n))
    assert not theorem12_verify(orig, orig, "other", n, n, Fraction(a2 + extra, n))
    assert not theorem12_verify(orig, orig, "other", n, n + 1, Fraction(a2, n))


@given(
    st.integers(1, 9), st.integers(1, 9), st.integers(1, 30),
    st.fractions(min_value=Fraction(1, 50), max_value=5),
    st.fractions(min_value=Fraction(1, 50), max_value=5),
)
def test_criterion_is_linear_in_q0(a, n, p, E3, F3):
    base = TwoRayData(a, n, p, Fraction(1), Fraction(1), Fraction(1), E3, F3)
    double = TwoRayData(a, n, p, Fraction(1), Fraction(1), Fraction(2), E3, F3)
    assert criterion_T(double) - criterion_T(base) == F3 / p**3
