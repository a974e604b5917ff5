"""Morphism data with a degree, and the mod-2 degree formula checker.

A morphism is represented only by its source, target and degree
(``f_*[Y] = deg f * [X]``). The checker compares, in Z/2,

    (n_Y / n_X) * (s_Y / n_Y)   and   deg f * (s_X / n_X).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .chern import segre_number
from .errors import ModelError, UnknownIndexError
from .graded_ring import degree_eval
from .varieties import (VarietyModel, catalogue, point, product, projective_space, quadric,
                        severi_brauer)


@dataclass(frozen=True)
class MorphismDatum:
    source: VarietyModel
    target: VarietyModel
    degree: Optional[int]

    def __post_init__(self):
        if self.degree is None:
            return
        if self.source.dim > self.target.dim and self.degree != 0:
            raise ModelError(
                f"{self.source.name} -> {self.target.name}: source of larger dimension forces degree 0")
        if self.source.dim == 0 == self.target.dim and self.degree < 0:
            raise ModelError("a morphism of zero-dimensional schemes has nonnegative degree")


@dataclass(frozen=True)
class FormulaVerdict:
    lhs_mod2: Optional[int]
    rhs_mod2: Optional[int]
    n_ratio: Optional[int]
    sY_over_nY: Optional[int]
    sX_over_nX: Optional[int]
    holds: bool
    applicable: bool
    reason: str = ""
    segre_source: Optional[int] = None
    segre_target: Optional[int] = None


def _require(m: MorphismDatum):
    for X in (m.source, m.target):
        if not X.complete:
            raise ModelError(f"{X.name} is not complete")
        if X.index is None:
            raise UnknownIndexError(f"index of {X.name} is unknown")
    if m.degree is None:
        raise ModelError(f"{m.source.name} -> {m.target.name} has no degree")


def check_degree_formula(m: MorphismDatum) -> FormulaVerdict:
    """Evaluate both sides of the degree formula for ``m``.

    Divisibility failures (``n_X | n_Y``, ``n_Y | s_Y``, ``n_X | s_X``) mean the
    model data is wrong, so they come back as inapplicable verdicts rather
    than exceptions.
    """
    _require(m)
    n_y, n_x = m.source.index, m.target.index
    s_y, s_x = segre_number(m.source), segre_number(m.target)

    def inapplicable(reason):
        return FormulaVerdict(None, None, None, None, None, holds=False, applicable=False,
                              reason=reason, segre_source=s_y, segre_target=s_x)

    if n_y % n_x:
        return inapplicable(f"n_X={n_x} does not divide n_Y={n_y}")
    if s_y % n_y:
        return inapplicable(f"n_Y={n_y} does not divide s_Y={s_y}")
    if s_x % n_x:
        return inapplicable(f"n_X={n_x} does not divide s_X={s_x}")
    ratio, q_y, q_x = n_y // n_x, s_y // n_y, s_x // n_x
    lhs = (ratio * q_y) % 2
    rhs = (m.degree * q_x) % 2
    return FormulaVerdict(lhs, rhs, ratio, q_y, q_x, holds=lhs == rhs, applicable=True,
                          segre_source=s_y, segre_target=s_x)


def product_morphism(m1: MorphismDatum, m2: MorphismDatum) -> MorphismDatum:
    """``f1 x f2`` has degree ``deg f1 * deg f2``."""
    if m1.degree is None or m2.degree is None:
        raise ModelError("product_morphism: both factors need a degree")
    return MorphismDatum(product(m1.source, m2.source), product(m1.target, m2.target),
                         m1.degree * m2.degree)


def compose(inner: MorphismDatum, outer: MorphismDatum) -> MorphismDatum:
    """``outer o inner``; degrees multiply."""
    if inner.degree is None or outer.degree is None:
        raise ModelError("compose: both maps need a degree")
    return MorphismDatum(inner.source, outer.target, inner.degree * outer.degree)


def evenness_check(X: VarietyModel) -> bool:
    """True iff the Segre number of a complete integral positive-dimensional X is even."""
    if not X.complete:
        raise ModelError(f"{X.name} is not complete")
    if not X.integral:
        raise ModelError(f"{X.name} is not integral")
    if X.dim < 1:
        raise ModelError(f"{X.name} has dimension 0")
    return segre_number(X) % 2 == 0


def legal_morphisms() -> Iterator[MorphismDatum]:
    """Deterministic supply of morphism data that exist for actual varieties.

    Covers identities, constant maps and projections (degree 0), structure
    maps to the point, self-maps of P^1 of degree 0..5, the isomorphism
    between the quaternion Severi-Brauer curve and the anisotropic conic,
    graph factorisations (degree 1 onto the source, degree d onto the
    target) and products of all of these.
    """
    base = [X for X in catalogue(6) if X.index is not None]
    pt = point()
    p1 = projective_space(1)
    basic = []
    for X in base:
        basic.append(MorphismDatum(X, X, 1))
        if X.dim > 0:
            basic.append(MorphismDatum(X, pt, 0))
    for d in range(6):
        basic.append(MorphismDatum(p1, p1, d))
    # constant maps onto a rational point of a positive-dimensional target
    for Y in base:
        for X in base:
            if X.has_rational_point and X.dim > 0 and Y.dim > 0 and Y.dim <= 2 and X.dim <= 2:
                basic.append(MorphismDatum(Y, X, 0))
    conic = quadric(1, anisotropic=True)
    sb1 = severi_brauer(1)
    basic.append(MorphismDatum(sb1, conic, 1))
    basic.append(MorphismDatum(conic, sb1, 1))
    yield from basic

    # graph of a degree-d rational map P^n -> P^n of the form x -> x^d: Z ~ P^n
    for n in (1, 2, 3):
        pn = projective_space(n)
        for d in range(1, 4):
            yield MorphismDatum(pn, pn, 1)
            yield MorphismDatum(pn, pn, d ** n)

    # projections X x Y -> X: degree 0 when dim Y > 0, else the length of Y
    small = [X for X in base if X.dim <= 3]
    for X in small:
        for Y in small:
            if Y.has_rational_point:
                length = degree_eval(Y.ring.one()) if Y.dim == 0 else 0
                yield MorphismDatum(product(X, Y), X, length)

    # products of basic maps, bounded total dimension
    factors = [m for m in basic if m.source.dim <= 3]
    factors += [MorphismDatum(severi_brauer(2), severi_brauer(2), 1)]
    for i, m1 in enumerate(factors):
        for m2 in factors[i:]:
            if m1.source.dim + m2.source.dim > 3:
                continue
            m = product_morphism(m1, m2)
            if m.source.index is not None and m.target.index is not None:
                yield m
