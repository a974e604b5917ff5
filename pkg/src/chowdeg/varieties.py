"""Catalogue of formal variety models and their products.

Twisted forms (Severi-Brauer varieties, anisotropic quadrics, involution
varieties) reuse the Chow-ring model of their split form; only the degree
functional and the index data differ.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import graded_ring as gr
from .arith import v2
from .chern import TotalClass, chern_tangent_projective, chern_tangent_quadric
from .errors import ModelError
from .graded_ring import RingSpec


@dataclass(frozen=True, eq=False)
class VarietyModel:
    name: str
    dim: int
    ring: RingSpec = field(repr=False)
    chern_tangent: TotalClass = field(repr=False)
    index: Optional[int]
    index_two_adic: Optional[int]
    complete: bool = True
    smooth: bool = True
    integral: bool = True
    has_rational_point: bool = False

    def __post_init__(self):
        if self.ring.truncation_dim != self.dim:
            raise ModelError(f"{self.name}: ring truncation {self.ring.truncation_dim} != dim {self.dim}")
        if self.chern_tangent.spec != self.ring:
            raise ModelError(f"{self.name}: tangent class lives in another ring")
        if self.index is not None:
            if self.index < 1:
                raise ModelError(f"{self.name}: index must be positive")
            if self.has_rational_point and self.index != 1:
                raise ModelError(f"{self.name}: rational point forces index 1")
            if self.index_two_adic is not None and v2(self.index) != self.index_two_adic:
                raise ModelError(f"{self.name}: v2(index) != index_two_adic")


def _hyperplane_ring(dim: int, top_degree: int) -> RingSpec:
    if dim == 0:
        return RingSpec((), 0, {(): top_degree})
    return RingSpec([("h", 1, dim)], dim, {(dim,): top_degree})


def projective_space(n: int) -> VarietyModel:
    if n < 0:
        raise ModelError("projective_space: n must be nonnegative")
    ring = _hyperplane_ring(n, 1)
    return VarietyModel(
        name=f"P({n})", dim=n, ring=ring, chern_tangent=chern_tangent_projective(n, ring),
        index=1, index_two_adic=0, has_rational_point=True)


def point() -> VarietyModel:
    return projective_space(0)


def severi_brauer(n: int) -> VarietyModel:
    """Severi-Brauer variety of a division algebra of degree ``2**n``."""
    if n < 1:
        raise ModelError("severi_brauer: n must be at least 1")
    dim = 2 ** n - 1
    ring = _hyperplane_ring(dim, 1)
    return VarietyModel(
        name=f"SB({n})", dim=dim, ring=ring, chern_tangent=chern_tangent_projective(dim, ring),
        index=2 ** n, index_two_adic=n)


def quadric(d: int, anisotropic: bool) -> VarietyModel:
    """Smooth projective quadric of dimension d, with ``deg(h**d) = 2``.

    For ``d == 0`` the split model is a pair of rational points (not
    integral) and the anisotropic one is a point of degree 2.
    """
    if d < 0:
        raise ModelError("quadric: d must be nonnegative")
    ring = _hyperplane_ring(d, 2)
    kind = "aniso" if anisotropic else "split"
    return VarietyModel(
        name=f"Q({d},{kind})", dim=d, ring=ring, chern_tangent=chern_tangent_quadric(d, ring),
        index=2 if anisotropic else 1, index_two_adic=1 if anisotropic else 0,
        integral=anisotropic or d > 0, has_rational_point=not anisotropic)


def involution_variety(n: int) -> VarietyModel:
    """Involution variety of a degree-``2**n`` algebra with quadratic pair.

    Only ``v2(index) = n`` is recorded; the odd part of the index is unknown.
    """
    if n < 1:
        raise ModelError("involution_variety: n must be at least 1")
    dim = 2 ** n - 2
    ring = _hyperplane_ring(dim, 2)
    return VarietyModel(
        name=f"Inv({n})", dim=dim, ring=ring, chern_tangent=chern_tangent_quadric(dim, ring),
        index=None, index_two_adic=n)


def _is_rational_point(X: VarietyModel) -> bool:
    return X.dim == 0 and X.has_rational_point and X.integral


def product(X: VarietyModel, Y: VarietyModel) -> VarietyModel:
    ring = gr.tensor(X.ring, Y.ring)
    tangent = X.chern_tangent.include(ring, 0) * Y.chern_tangent.include(ring, X.ring.nvars)
    if Y.has_rational_point:
        index, two_adic = X.index, X.index_two_adic
    elif X.has_rational_point:
        index, two_adic = Y.index, Y.index_two_adic
    else:
        index = two_adic = None
    # positive-dimensional catalogue models are geometrically integral;
    # a zero-dimensional factor keeps the product integral only if it is a rational point
    integral = (X.integral and Y.integral
                and (X.dim > 0 or _is_rational_point(X))
                and (Y.dim > 0 or _is_rational_point(Y)))
    return VarietyModel(
        name=f"{X.name} * {Y.name}", dim=X.dim + Y.dim, ring=ring, chern_tangent=tangent,
        index=index, index_two_adic=two_adic,
        complete=X.complete and Y.complete, smooth=X.smooth and Y.smooth,
        integral=integral, has_rational_point=X.has_rational_point and Y.has_rational_point)


def catalogue(max_dim: int) -> Iterator[VarietyModel]:
    """Every basic catalogue model of dimension at most ``max_dim``, in a fixed order."""
    for n in range(max_dim + 1):
        yield projective_space(n)
    for d in range(max_dim + 1):
        yield quadric(d, anisotropic=False)
        yield quadric(d, anisotropic=True)
    n = 1
    while 2 ** n - 1 <= max_dim:
        yield severi_brauer(n)
        n += 1
    n = 1
    while 2 ** n - 2 <= max_dim:
        yield involution_variety(n)
        n += 1
