import random
from fractions import Fraction

import pytest

from chevalley import (RationalField, build, delta_exponent, grade,
                       instability_ratio_sq, m_of, root_vector)
from chevalley.grading import CocharRational


def test_grade_sl2():
    rs = build("A1")
    rep = grade(rs, (1,))  # lam = coroot
    assert rep.dims == {-2: 1, 2: 1}
    assert rep.dim_at(0) == 1
    assert rep.dim_at(2) == 1
    total = sum(rep.dims.values()) + rs.rank
    assert total == rs.dim()


def test_grade_sl3_regular():
    rs = build("A2")
    rep = grade(rs, (1, 1))
    assert {i: rep.dim_at(i) for i in (-2, -1, 0, 1, 2)} == {-2: 1, -1: 2, 0: 2, 1: 2, 2: 1}


def test_grade_dimension_totals():
    rng = random.Random(21)
    for t in ["A3", "B3", "C3", "D4", "F4", "G2"]:
        rs = build(t)
        for _ in range(10):
            lam = tuple(rng.randint(-3, 3) for _ in range(rs.rank))
            rep = grade(rs, lam)
            assert sum(rep.dims.values()) + rs.rank == rs.dim()


def test_grade_zero_cocharacter():
    for t in ["A2", "G2"]:
        rs = build(t)
        rep = grade(rs, (0,) * rs.rank)
        assert rep.dims == {0: len(rs.roots)}
        assert rep.dim_at(0) == rs.dim()


def test_grade_rejects_non_integral():
    rs = build("A2")
    with pytest.raises(ValueError):
        grade(rs, (Fraction(1, 2), 0))


def test_grade_weyl_equivariance():
    rng = random.Random(4)
    for t in ["A3", "B3", "G2"]:
        rs = build(t)
        for _ in range(25):
            lam = tuple(rng.randint(-3, 3) for _ in range(rs.rank))
            dims = sorted(grade(rs, lam).dims.values())
            w_lam = lam
            for _ in range(rng.randint(1, 4)):
                w_lam = rs.reflect_cochar(rng.randrange(rs.rank), w_lam)
            assert sorted(grade(rs, w_lam).dims.values()) == dims


def test_m_of_examples():
    q = RationalField()
    sl2 = build("A1")
    assert m_of(sl2, root_vector(sl2, q, sl2.simple_roots[0]), (1,)) == 2

    sl3 = build("A2")
    theta = sl3.root_index[(1, 1)]
    assert m_of(sl3, root_vector(sl3, q, theta), (1, 1)) == 2
    Y = root_vector(sl3, q, sl3.simple_roots[0]) + root_vector(sl3, q, sl3.simple_roots[1])
    assert m_of(sl3, Y, (1, 1)) == 1
    assert instability_ratio_sq(sl3, Y, (1, 1)) == Fraction(1, 2)


def test_m_of_errors():
    q = RationalField()
    rs = build("A2")
    from chevalley.lie import LieElement

    with pytest.raises(ValueError):
        m_of(rs, LieElement(q), (1, 1))
    # negative root support is outside the unipotent radical
    neg = rs.root_index[(-1, 0)]
    with pytest.raises(ValueError):
        m_of(rs, root_vector(rs, q, neg), (1, 1))


def test_delta_exponent_examples():
    sl2 = build("A1")
    assert delta_exponent(sl2, (1,), 1, None, (1,)) == 2
    assert delta_exponent(sl2, (1,), 1, None, (0,)) == 0

    sl3 = build("A2")
    assert delta_exponent(sl3, (1, 1), 1, 2, (1, 0)) == 1
    with pytest.raises(ValueError):
        delta_exponent(sl3, (1, 1), 0, None, (1, 0))
    with pytest.raises(ValueError):
        delta_exponent(sl3, (1, 1), 2, 2, (1, 0))


def test_delta_telescoping_identity():
    # delta_{lam,(1,k)} delta_{lam,(k,k+1)} delta_{lam,k+1} = delta_{lam,1}
    rng = random.Random(8)
    for t in ["A3", "B2", "C3", "G2"]:
        rs = build(t)
        for _ in range(40):
            lam = tuple(rng.randint(-3, 3) for _ in range(rs.rank))
            v = tuple(rng.randint(-3, 3) for _ in range(rs.rank))
            k = rng.randint(2, 5)
            e = (delta_exponent(rs, lam, 1, k, v)
                 + delta_exponent(rs, lam, k, k + 1, v)
                 + delta_exponent(rs, lam, k + 1, None, v))
            assert e == delta_exponent(rs, lam, 1, None, v)


def test_cochar_rational_primitivity():
    rs = build("A2")
    mu = CocharRational.of(rs, (Fraction(1, 2), Fraction(1, 2)))
    assert not mu.is_integral()
    lam, scale = mu.primitive_multiple()
    assert lam == (1, 1) and scale == 2
    assert CocharRational.of(rs, lam).is_primitive()
    assert not CocharRational.of(rs, (2, 2)).is_primitive()
    assert mu.norm_sq == Fraction(1, 2)
