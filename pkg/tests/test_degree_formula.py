import dataclasses
import itertools

import pytest

from chowdeg.chern import segre_number
from chowdeg.degree_formula import (MorphismDatum, check_degree_formula, compose, evenness_check,
                                    legal_morphisms, product_morphism)
from chowdeg.errors import ModelError, UnknownIndexError
from chowdeg.varieties import (involution_variety, point, product, projective_space, quadric,
                               severi_brauer)


def test_identity_on_sb2():
    X = severi_brauer(2)
    v = check_degree_formula(MorphismDatum(X, X, 1))
    assert v.applicable and v.holds
    assert (v.lhs_mod2, v.rhs_mod2) == (1, 1)
    assert v.sY_over_nY == v.sX_over_nX == -5
    assert v.n_ratio == 1


def test_conic_to_point():
    v = check_degree_formula(MorphismDatum(quadric(1, True), point(), 0))
    assert v.holds and v.lhs_mod2 == 0 == v.rhs_mod2
    assert v.n_ratio == 2 and v.sY_over_nY == -1


def test_degree_three_self_map_of_p1():
    P1 = projective_space(1)
    v = check_degree_formula(MorphismDatum(P1, P1, 3))
    assert v.holds and v.lhs_mod2 == v.rhs_mod2 == 0


def test_wrong_degree_is_detected():
    X = severi_brauer(2)
    v = check_degree_formula(MorphismDatum(X, X, 2))
    assert v.applicable and not v.holds


def test_divisibility_failure_is_inapplicable():
    v = check_degree_formula(MorphismDatum(projective_space(1), severi_brauer(1), 1))
    assert not v.applicable and not v.holds
    assert "does not divide" in v.reason


def test_preconditions():
    X = severi_brauer(1)
    with pytest.raises(UnknownIndexError):
        check_degree_formula(MorphismDatum(involution_variety(2), point(), 0))
    with pytest.raises(ModelError):
        check_degree_formula(MorphismDatum(X, X, None))
    with pytest.raises(ModelError):
        check_degree_formula(MorphismDatum(dataclasses.replace(X, complete=False), X, 1))


def test_datum_invariants():
    with pytest.raises(ModelError):
        MorphismDatum(projective_space(2), projective_space(1), 1)
    with pytest.raises(ModelError):
        MorphismDatum(point(), point(), -1)
    MorphismDatum(projective_space(2), projective_space(1), 0)
    MorphismDatum(projective_space(2), projective_space(1), None)


def test_product_morphism():
    P1 = projective_space(1)
    m = product_morphism(MorphismDatum(P1, P1, 2), MorphismDatum(P1, P1, 3))
    assert m.degree == 6
    assert m.source.dim == 2
    X = severi_brauer(2)
    m = product_morphism(MorphismDatum(P1, P1, 4), MorphismDatum(X, X, 1))
    assert m.degree == 4
    m = product_morphism(MorphismDatum(P1, P1, 0), MorphismDatum(P1, P1, 5))
    assert m.degree == 0
    with pytest.raises(ModelError):
        product_morphism(MorphismDatum(P1, P1, None), MorphismDatum(P1, P1, 1))


def test_evenness_check():
    assert evenness_check(projective_space(5))
    assert segre_number(projective_space(5)) == -252
    assert evenness_check(severi_brauer(3))
    with pytest.raises(ModelError):
        evenness_check(point())
    with pytest.raises(ModelError):
        evenness_check(quadric(0, False))


def test_legal_morphisms_all_hold():
    data = list(legal_morphisms())
    assert len(data) >= 200
    for m in data:
        assert m.target.index and m.source.index % m.target.index == 0
        v = check_degree_formula(m)
        assert v.applicable and v.holds, (m.source.name, m.target.name, m.degree)


def test_products_are_consistent_with_multiplicativity():
    basics = [MorphismDatum(projective_space(1), projective_space(1), d) for d in range(4)]
    basics += [MorphismDatum(severi_brauer(1), severi_brauer(1), 1),
               MorphismDatum(quadric(1, True), point(), 0),
               MorphismDatum(quadric(2, True), quadric(2, True), 1)]
    for m1, m2 in itertools.product(basics, repeat=2):
        m = product_morphism(m1, m2)
        if m.source.index is None or m.target.index is None:
            continue
        v = check_degree_formula(m)
        assert v.segre_source == segre_number(m1.source) * segre_number(m2.source)
        assert v.segre_target == segre_number(m1.target) * segre_number(m2.target)
        assert v.holds


def test_composition_closure():
    models = [point(), projective_space(1), projective_space(2), severi_brauer(1), severi_brauer(2),
              quadric(1, True), quadric(2, True), quadric(3, True), quadric(2, False)]
    checked = 0
    for Z, Y, X in itertools.product(models, repeat=3):
        if Y.index % X.index or Z.index % Y.index:
            continue
        for a, b in itertools.product(range(4), repeat=2):
            try:
                zy, yx = MorphismDatum(Z, Y, a), MorphismDatum(Y, X, b)
                zx = compose(zy, yx)
            except ModelError:
                continue
            if check_degree_formula(zy).holds and check_degree_formula(yx).holds:
                assert check_degree_formula(zx).holds
                checked += 1
    assert checked > 100
