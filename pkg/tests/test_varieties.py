import dataclasses
import itertools

import pytest

from chowdeg.arith import binomial, v2
from chowdeg.chern import segre_number
from chowdeg.errors import ModelError
from chowdeg.graded_ring import degree_eval
from chowdeg.varieties import (catalogue, involution_variety, point, product, projective_space,
                               quadric, severi_brauer)


def test_projective_space():
    assert projective_space(0).dim == 0
    assert segre_number(projective_space(0)) == 1
    assert segre_number(projective_space(1)) == -2
    assert segre_number(projective_space(2)) == binomial(-3, 2) == 6
    P = projective_space(4)
    assert P.index == 1 and P.has_rational_point and P.smooth and P.complete


def test_severi_brauer():
    X = severi_brauer(1)
    assert (X.dim, X.index, segre_number(X)) == (1, 2, -2)
    assert not X.has_rational_point and X.integral
    assert segre_number(severi_brauer(2)) == -binomial(6, 3) == -20
    assert v2(segre_number(severi_brauer(3))) == 3
    with pytest.raises(ModelError):
        severi_brauer(0)


def test_quadric():
    C = quadric(1, anisotropic=True)
    assert segre_number(C) == -2 and C.index == 2 and not C.has_rational_point
    Q0 = quadric(0, anisotropic=False)
    assert Q0.dim == 0 and degree_eval(Q0.ring.one()) == 2 and not Q0.integral
    assert quadric(0, anisotropic=True).integral
    s = segre_number(quadric(3, anisotropic=True))
    assert s == -10 and s % 4 == 2
    S = quadric(4, anisotropic=False)
    assert S.index == 1 and S.has_rational_point
    assert S.ring.degree_functional[(4,)] == 2


def test_involution_variety():
    X = involution_variety(2)
    assert X.dim == 2 and segre_number(X) == 2 * binomial(5, 2) - 4 * binomial(4, 1) == 4
    X = involution_variety(3)
    assert segre_number(X) == 2 * 1716 - 4 * 792 == 264
    assert v2(264) == 3
    assert X.index is None and X.index_two_adic == 3
    assert involution_variety(1).dim == 0
    with pytest.raises(ModelError):
        involution_variety(0)


def test_product_examples():
    P1 = projective_space(1)
    assert segre_number(product(P1, P1)) == 4
    for X in (severi_brauer(2), quadric(3, True), involution_variety(2)):
        assert segre_number(product(X, point())) == segre_number(X)
        assert product(X, point()).ring == X.ring
    X = product(projective_space(2), quadric(1, anisotropic=True))
    assert segre_number(X) == 6 * -2 == -12
    assert X.index == 2 and X.index_two_adic == 1
    assert X.ring.degree_functional[(2, 1)] == 2


def test_product_index_rules():
    sb = severi_brauer(1)
    assert product(sb, sb).index is None
    assert product(sb, sb).index_two_adic is None
    assert product(sb, projective_space(3)).index == 2
    assert product(projective_space(1), projective_space(2)).index == 1
    assert product(involution_variety(2), projective_space(1)).index_two_adic == 2


def test_product_integrality():
    assert product(quadric(0, True), quadric(0, True)).integral is False
    assert product(projective_space(0), quadric(2, True)).integral
    assert product(quadric(1, False), severi_brauer(1)).integral


def test_model_invariants_enforced():
    P = projective_space(2)
    with pytest.raises(ModelError):
        dataclasses.replace(P, index=2)  # rational point forces index 1
    with pytest.raises(ModelError):
        dataclasses.replace(severi_brauer(2), index_two_adic=1)
    with pytest.raises(ModelError):
        dataclasses.replace(P, dim=3)


@pytest.mark.parametrize("n", range(1, 11))
def test_families(n):
    assert segre_number(severi_brauer(n)) == -binomial(2 ** (n + 1) - 2, 2 ** n - 1)
    assert v2(segre_number(severi_brauer(n))) == n
    assert segre_number(quadric(2 ** n - 1, anisotropic=True)) % 4 == 2
    if n >= 2:
        assert v2(segre_number(involution_variety(n))) == n


def test_evenness_of_catalogue():
    for X in catalogue(10):
        if X.dim >= 1 and X.integral:
            assert segre_number(X) % 2 == 0, X.name


def test_product_commutative_and_associative():
    models = [projective_space(1), quadric(2, True), severi_brauer(1), involution_variety(2)]
    for X, Y in itertools.product(models, repeat=2):
        XY, YX = product(X, Y), product(Y, X)
        assert segre_number(XY) == segre_number(YX)
        assert sorted(XY.ring.degree_functional.values()) == sorted(YX.ring.degree_functional.values())
    for X, Y, Z in itertools.combinations(models, 3):
        left, right = product(product(X, Y), Z), product(X, product(Y, Z))
        assert segre_number(left) == segre_number(right)
        assert dict(left.ring.degree_functional) == dict(right.ring.degree_functional)
        assert left.ring.blocks == right.ring.blocks
