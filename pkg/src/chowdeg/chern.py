"""Total Chern classes and the Segre-class/number formulas built on them.

Bundles only ever appear through their total Chern class. A class may carry
a factorisation ``prod f_i ** a_i`` (all ``f_i`` sparse), in which case the
opposite class is obtained by flipping exponents instead of inverting a
dense series.
"""
from __future__ import annotations

from typing import Sequence

from . import graded_ring as gr
from .errors import ModelError, SpecMismatchError
from .graded_ring import RingElement, RingSpec


class TotalClass:
    """A ring element with constant term 1."""

    __slots__ = ("value", "factors")

    def __init__(self, value: RingElement, factors: Sequence[tuple[RingElement, int]] | None = None):
        if value.constant_term != 1:
            raise ValueError(f"total class must have constant term 1, got {value!r}")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "factors", None if factors is None else tuple(factors))

    def __setattr__(self, name, value):
        raise AttributeError("TotalClass is immutable")

    @classmethod
    def from_factors(cls, spec: RingSpec, factors: Sequence[tuple[RingElement, int]]) -> "TotalClass":
        factors = tuple((f, a) for f, a in factors if a)
        return cls(gr.expand_power_product(spec, factors), factors)

    @property
    def spec(self) -> RingSpec:
        return self.value.spec

    def __mul__(self, other: "TotalClass") -> "TotalClass":
        # Whitney sum
        if self.spec != other.spec:
            raise SpecMismatchError("TotalClass product across rings")
        factors = None
        if self.factors is not None and other.factors is not None:
            factors = self.factors + other.factors
        return TotalClass(self.value * other.value, factors)

    def __eq__(self, other):
        if isinstance(other, TotalClass):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"TotalClass({self.value!r})"

    def c(self, k: int) -> RingElement:
        """The k-th Chern class."""
        return self.value.component(k)

    def include(self, target: RingSpec, offset: int) -> "TotalClass":
        value = gr.include(self.value, target, offset)
        factors = None
        if self.factors is not None:
            factors = tuple((gr.include(f, target, offset), a) for f, a in self.factors)
        return TotalClass(value, factors)


def _hyperplane(ring: RingSpec) -> RingElement:
    return ring.gen(0)


def chern_tangent_projective(n: int, ring: RingSpec) -> TotalClass:
    """``c(T_{P^n}) = (1 + h) ** (n + 1)``."""
    if n == 0:
        return TotalClass(ring.one(), ())
    if ring.truncation_dim != n:
        raise ModelError(f"ring {ring!r} is not a model of P^{n}")
    return TotalClass.from_factors(ring, [(1 + _hyperplane(ring), n + 1)])


def chern_tangent_quadric(d: int, ring: RingSpec) -> TotalClass:
    """``c(T_Q) = (1 + h) ** (d + 2) / (1 + 2h)`` for a quadric of dimension d."""
    if d == 0:
        return TotalClass(ring.one(), ())
    if ring.truncation_dim != d:
        raise ModelError(f"ring {ring!r} is not a model of a {d}-dimensional quadric")
    h = _hyperplane(ring)
    return TotalClass.from_factors(ring, [(1 + h, d + 2), (1 + 2 * h, -1)])


def negate_class(c: TotalClass) -> TotalClass:
    """``c(-E)``, the inverse of ``c(E)`` (Whitney: ``c(E) c(-E) = 1``)."""
    if c.factors is not None:
        return TotalClass.from_factors(c.spec, [(f, -a) for f, a in c.factors])
    return TotalClass(gr.invert_unit(c.value))


def fundamental_class(X) -> RingElement:
    return X.ring.one()


def sq_class(X) -> RingElement:
    """``c(-T_X) [X]`` for a smooth model."""
    if not X.smooth:
        raise ModelError(f"{X.name} is not smooth")
    return negate_class(X.chern_tangent).value * fundamental_class(X)


def diagonal_normal_class(X) -> TotalClass:
    """Normal bundle of the diagonal in ``X x X``, i.e. ``c(T_X)`` on ``X``.

    The factorisation is dropped on purpose so that :func:`segre_fixed`
    goes through the generic series inverse.
    """
    return TotalClass(X.chern_tangent.value)


def segre_fixed(normal: TotalClass) -> RingElement:
    """``c(-N) [Y^G]`` for a fixed locus regularly embedded with normal class N."""
    return negate_class(normal).value * normal.spec.one()


def segre_number(X) -> int:
    """``deg c_dim(-T_X)``."""
    if not X.complete:
        raise ModelError(f"{X.name} is not complete")
    return gr.degree_eval(sq_class(X))
