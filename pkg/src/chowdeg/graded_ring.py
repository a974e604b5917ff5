"""Truncated multigraded integer rings with a degree functional.

A :class:`RingSpec` is ``Z[x_1, ..., x_r]`` modulo the monomial ideal spanned by

* ``x_i ** (nilpotency_i + 1)`` for every variable,
* monomials whose part in some variable block has codimension above that
  block's truncation (a block is one factor of a product), and
* every monomial of weighted codimension greater than ``truncation_dim``,

together with a degree map defined on the top-codimension monomials. It
models the subring of a Chow ring generated by a few classes of known
codimension. Elements are sparse maps from exponent vectors to nonzero
integers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvariantViolation, NonUnitError, SpecMismatchError

Monomial = tuple


@dataclass(frozen=True)
class Variable:
    name: str
    codim: int
    nilpotency: int  # x ** (nilpotency + 1) == 0
    block: int = 0

    def __post_init__(self):
        if self.codim < 1:
            raise ValueError(f"variable {self.name!r}: codim must be positive")
        if self.nilpotency < 0:
            raise ValueError(f"variable {self.name!r}: negative nilpotency")


class RingSpec:
    """Immutable description of a truncated ring model and its degree map.

    ``variables`` accepts :class:`Variable` objects or ``(name, codim)`` /
    ``(name, codim, nilpotency)`` tuples; the nilpotency defaults to the
    largest exponent the truncation allows. ``blocks`` gives the truncation
    of each variable block and defaults to a single block. ``degree_functional``
    must be given on every top-codimension monomial that survives the relations.
    """

    __slots__ = ("variables", "truncation_dim", "degree_functional", "blocks", "_hash")

    def __init__(self, variables: Iterable, truncation_dim: int,
                 degree_functional: Mapping[Monomial, int], blocks: Sequence[int] | None = None):
        if truncation_dim < 0:
            raise ValueError("truncation_dim must be nonnegative")
        blocks = (truncation_dim,) if blocks is None else tuple(blocks)
        if any(b < 0 for b in blocks):
            raise ValueError("block truncations must be nonnegative")
        vs = []
        for v in variables:
            if not isinstance(v, Variable):
                name, codim, *rest = v
                v = Variable(name, codim, rest[0] if rest else truncation_dim // codim)
            vs.append(v)
        if any(not 0 <= v.block < len(blocks) for v in vs):
            raise ValueError("variable assigned to a nonexistent block")
        if any(a.block > b.block for a, b in zip(vs, vs[1:])):
            raise ValueError("variables of a block must be contiguous and in block order")
        if len(blocks) > 1 and sum(blocks) != truncation_dim:
            raise ValueError("block truncations must add up to truncation_dim")
        names = [v.name for v in vs]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "variables", tuple(vs))
        object.__setattr__(self, "truncation_dim", truncation_dim)
        object.__setattr__(self, "blocks", None if blocks == (truncation_dim,) else blocks)

        functional = {}
        for mono, value in degree_functional.items():
            mono = tuple(mono)
            if len(mono) != len(vs):
                raise ValueError(f"degree functional key {mono} has wrong length")
            if self.codim(mono) != truncation_dim:
                raise ValueError(
                    f"degree functional key {mono} has codimension {self.codim(mono)}, "
                    f"expected {truncation_dim}")
            functional[mono] = int(value)
        for mono in self.top_monomials():
            if mono not in functional:
                raise ValueError(f"degree functional undefined on top monomial {mono}")
        object.__setattr__(self, "degree_functional", MappingProxyType(functional))
        object.__setattr__(self, "_hash", hash(
            (self.variables, truncation_dim, self.blocks, frozenset(functional.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("RingSpec is immutable")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, RingSpec):
            return NotImplemented
        return (self.variables == other.variables
                and self.truncation_dim == other.truncation_dim
                and self.blocks == other.blocks
                and dict(self.degree_functional) == dict(other.degree_functional))

    def __hash__(self):
        return self._hash

    def __repr__(self):
        vs = ", ".join(f"{v.name}:{v.codim}" for v in self.variables)
        return f"RingSpec([{vs}], dim={self.truncation_dim})"

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def names(self) -> tuple:
        return tuple(v.name for v in self.variables)

    @property
    def zero_monomial(self) -> Monomial:
        return (0,) * len(self.variables)

    def codim(self, mono: Sequence[int]) -> int:
        return sum(e * v.codim for e, v in zip(mono, self.variables))

    def admissible(self, mono: Sequence[int]) -> bool:
        """True if the monomial is nonzero in the ring."""
        total = 0
        if self.blocks is None:
            for e, v in zip(mono, self.variables):
                if e > v.nilpotency:
                    return False
                total += e * v.codim
            return total <= self.truncation_dim
        used = [0] * len(self.blocks)
        for e, v in zip(mono, self.variables):
            if e > v.nilpotency:
                return False
            used[v.block] += e * v.codim
        return (sum(used) <= self.truncation_dim
                and all(u <= b for u, b in zip(used, self.blocks)))

    def top_monomials(self) -> Iterator[Monomial]:
        """Admissible monomials of codimension exactly ``truncation_dim``."""
        return monomials_of_codim(self.variables, self.truncation_dim, self.blocks)

    def monomials(self) -> Iterator[Monomial]:
        """Every admissible monomial, i.e. a Z-basis of the ring."""
        for k in range(self.truncation_dim + 1):
            yield from monomials_of_codim(self.variables, k, self.blocks)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no variable {name!r} in {self!r}") from None

    # element constructors
    def element(self, coeffs: Mapping[Monomial, int]) -> "RingElement":
        return RingElement(self, coeffs)

    def constant(self, c: int) -> "RingElement":
        return RingElement._make(self, {self.zero_monomial: c} if c else {})

    def one(self) -> "RingElement":
        return self.constant(1)

    def zero(self) -> "RingElement":
        return RingElement._make(self, {})

    def gen(self, name: str | int = 0) -> "RingElement":
        i = name if isinstance(name, int) else self.index(name)
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return RingElement(self, {mono: 1})


def monomials_of_codim(variables: Sequence[Variable], k: int,
                       blocks: Sequence[int] | None = None) -> Iterator[Monomial]:
    """Exponent vectors of weighted codimension ``k`` within the nilpotency and block bounds."""
    budget = list(blocks) if blocks else [k]

    def rec(i, remaining):
        if i == len(variables):
            if remaining == 0:
                yield ()
            return
        v = variables[i]
        b = v.block if blocks else 0
        top = min(v.nilpotency, remaining // v.codim, budget[b] // v.codim)
        for e in range(top + 1):
            budget[b] -= e * v.codim
            for tail in rec(i + 1, remaining - e * v.codim):
                yield (e,) + tail
            budget[b] += e * v.codim
    return rec(0, k)


def _mul_dicts(spec: RingSpec, a: Mapping, b: Mapping, out: dict, scale: int = 1) -> None:
    # out += scale * a * b, dropping monomials killed by the relations
    admissible = spec.admissible
    for ma, ca in a.items():
        ca *= scale
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            if admissible(m):
                c = out.get(m, 0) + ca * cb
                if c:
                    out[m] = c
                else:
                    del out[m]


class RingElement:
    """An element of a :class:`RingSpec`; immutable, supports ``+ - * **``."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: RingSpec, coeffs: Mapping[Monomial, int] | None = None):
        clean = {}
        for mono, c in (coeffs or {}).items():
            mono = tuple(mono)
            if len(mono) != spec.nvars or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for {spec!r}")
            c = int(c)
            if c and spec.admissible(mono):
                clean[mono] = clean.get(mono, 0) + c
        RingElement._init(self, spec, {m: c for m, c in clean.items() if c})

    def _init(self, spec, coeffs):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", MappingProxyType(coeffs))

    @classmethod
    def _make(cls, spec, coeffs):
        obj = cls.__new__(cls)
        obj._init(spec, coeffs)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise SpecMismatchError(f"{self.spec!r} vs {other.spec!r}")
            return other
        if isinstance(other, int):
            return self.spec.constant(other)
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return RingElement._make(self.spec, out)

    __radd__ = __add__

    def __neg__(self):
        return RingElement._make(self.spec, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self.spec.zero()
            return RingElement._make(self.spec, {m: c * other for m, c in self.coeffs.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        _mul_dicts(self.spec, self.coeffs, other.coeffs, out)
        return RingElement._make(self.spec, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return power(self, e)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.spec.constant(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.spec == other.spec and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash((self.spec, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    # inspection
    @property
    def constant_term(self) -> int:
        return self.coeffs.get(self.spec.zero_monomial, 0)

    def coefficient(self, mono: Sequence[int]) -> int:
        return self.coeffs.get(tuple(mono), 0)

    def components(self) -> list[dict]:
        """Homogeneous components, indexed by codimension ``0..truncation_dim``."""
        comps = [dict() for _ in range(self.spec.truncation_dim + 1)]
        for m, c in self.coeffs.items():
            comps[self.spec.codim(m)][m] = c
        return comps

    def component(self, k: int) -> "RingElement":
        return RingElement._make(
            self.spec, {m: c for m, c in self.coeffs.items() if self.spec.codim(m) == k})

    def degree(self) -> int:
        return degree_eval(self)

    def inverse(self) -> "RingElement":
        return invert_unit(self)

    def euler(self) -> "RingElement":
        """Apply the grading derivation: multiply each codim-k part by k."""
        codim = self.spec.codim
        return RingElement._make(
            self.spec, {m: c * codim(m) for m, c in self.coeffs.items() if codim(m)})

    def monomial_str(self, mono) -> str:
        parts = []
        for e, v in zip(mono, self.spec.variables):
            if e == 1:
                parts.append(v.name)
            elif e > 1:
                parts.append(f"{v.name}^{e}")
        return "*".join(parts) or "1"

    def sorted_terms(self) -> list:
        """Terms ordered by codimension, then exponent vector (descending)."""
        codim = self.spec.codim
        return sorted(self.coeffs.items(), key=lambda t: (codim(t[0]), tuple(-e for e in t[0])))

    def __repr__(self):
        terms = self.sorted_terms()
        if not terms:
            return "0"
        out = ""
        for i, (m, c) in enumerate(terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            ms = self.monomial_str(m)
            body = str(mag) if ms == "1" else (ms if mag == 1 else f"{mag}*{ms}")
            if i == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += f" {sign} {body}"
        return out


def add(x: RingElement, y: RingElement) -> RingElement:
    if not isinstance(y, RingElement) or (x.spec is not y.spec and x.spec != y.spec):
        raise SpecMismatchError("add: operands live in different rings")
    return x + y


def mul(x: RingElement, y: RingElement) -> RingElement:
    if not isinstance(y, RingElement) or (x.spec is not y.spec and x.spec != y.spec):
        raise SpecMismatchError("mul: operands live in different rings")
    return x * y


def invert_unit(x: RingElement) -> RingElement:
    """Multiplicative inverse of an element with constant term ``+1`` or ``-1``.

    Uses the degree-by-degree recursion
    ``y_0 = 1/x_0``, ``y_m = -(1/x_0) * sum_{j>=1} x_j * y_{m-j}``.
    """
    c0 = x.constant_term
    if c0 not in (1, -1):
        raise NonUnitError(f"constant term {c0} is not a unit in Z")
    spec = x.spec
    comps = x.components()
    nonzero = [(j, comps[j]) for j in range(1, len(comps)) if comps[j]]
    y = [{spec.zero_monomial: c0}]
    for m in range(1, spec.truncation_dim + 1):
        acc: dict = {}
        for j, xj in nonzero:
            if j > m:
                break
            if y[m - j]:
                _mul_dicts(spec, xj, y[m - j], acc, scale=-c0)
        y.append(acc)
    out = {}
    for comp in y:
        out.update(comp)
    return RingElement._make(spec, out)


def expand_power_product(spec: RingSpec, factors: Sequence[tuple[RingElement, int]]) -> RingElement:
    """Expand ``prod f_i ** a_i`` for factors with constant term 1.

    With ``E`` the grading derivation, ``g = prod f_i ** a_i`` satisfies
    ``F * E(g) = P * g`` where ``F = prod f_i`` and
    ``P = sum_i a_i * E(f_i) * prod_{j != i} f_j``. Reading off the codim-k
    part gives ``k g_k = sum_{j>=1} (P_j - (k - j) F_j) g_{k-j}``, which is
    linear in the dimension when the factors are sparse.
    """
    one = spec.one()
    factors = [(f, int(a)) for f, a in factors if a]
    for f, _ in factors:
        if f.spec != spec:
            raise SpecMismatchError("expand_power_product: factor from another ring")
        if f.constant_term != 1:
            raise NonUnitError("expand_power_product: factors need constant term 1")
    if not factors:
        return one
    big_f = one
    for f, _ in factors:
        big_f = big_f * f
    big_p = spec.zero()
    for i, (f, a) in enumerate(factors):
        term = f.euler() * a
        for j, (g, _) in enumerate(factors):
            if j != i:
                term = term * g
        big_p = big_p + term
    fc = big_f.components()
    pc = big_p.components()
    steps = [j for j in range(1, spec.truncation_dim + 1) if fc[j] or pc[j]]

    g = [{spec.zero_monomial: 1}]
    for k in range(1, spec.truncation_dim + 1):
        acc: dict = {}
        for j in steps:
            if j > k:
                break
            prev = g[k - j]
            if not prev:
                continue
            if pc[j]:
                _mul_dicts(spec, pc[j], prev, acc)
            if fc[j] and k != j:
                _mul_dicts(spec, fc[j], prev, acc, scale=-(k - j))
        comp = {}
        for m, c in acc.items():
            q, r = divmod(c, k)
            if r:
                raise InvariantViolation(f"non-integral coefficient at codim {k}")
            comp[m] = q
        g.append(comp)
    out = {}
    for comp in g:
        out.update(comp)
    return RingElement._make(spec, out)


def power(x: RingElement, e: int) -> RingElement:
    """``x ** e``; negative ``e`` requires a unit constant term."""
    spec = x.spec
    if e == 0:
        return spec.one()
    c0 = x.constant_term
    if c0 in (1, -1):
        sign = c0 ** (e % 2)
        base = x if c0 == 1 else -x
        return expand_power_product(spec, [(base, e)]) * sign
    if e < 0:
        raise NonUnitError(f"negative power of non-unit (constant term {c0})")
    result = spec.one()
    while e:
        if e & 1:
            result = result * x
        x = x * x
        e >>= 1
    return result


def degree_eval(x: RingElement) -> int:
    """Apply the degree functional; components below top codimension give 0."""
    spec = x.spec
    top = spec.truncation_dim
    functional = spec.degree_functional
    return sum(c * functional[m] for m, c in x.coeffs.items() if spec.codim(m) == top)


def tensor(a: RingSpec, b: RingSpec) -> RingSpec:
    """Ring model of a product; variables of ``b`` are renamed on collision."""
    left = _compact_blocks(a)
    right_vars = _compact_blocks(b)
    left_blocks = tuple(t for t, _ in left)
    right_blocks = tuple(t for t, _ in right_vars)
    variables = [v for _, vs in left for v in vs]
    taken = set(a.names)
    right = []
    for v in (v for _, vs in right_vars for v in vs):
        name = v.name
        if name in taken:
            k = 2
            while f"{name}{k}" in taken or f"{name}{k}" in b.names:
                k += 1
            name = f"{name}{k}"
        taken.add(name)
        right.append(Variable(name, v.codim, v.nilpotency, v.block + len(left_blocks)))
    functional = {
        ma + mb: fa * fb
        for (ma, fa), (mb, fb) in itertools.product(
            a.degree_functional.items(), b.degree_functional.items())
    }
    # monomial keys follow variable order, which compaction preserves
    return RingSpec(variables + right, a.truncation_dim + b.truncation_dim, functional,
                    blocks=left_blocks + right_blocks)


def _compact_blocks(spec: RingSpec) -> list:
    """``[(truncation, variables renumbered to that block)]``, skipping empty blocks."""
    blocks = spec.blocks or (spec.truncation_dim,)
    out = []
    for i, t in enumerate(blocks):
        vs = [v for v in spec.variables if v.block == i]
        if vs:
            out.append((t, [Variable(v.name, v.codim, v.nilpotency, len(out)) for v in vs]))
    return out


def include(x: RingElement, target: RingSpec, offset: int) -> RingElement:
    """Map ``x`` into ``target`` with its variables starting at position ``offset``."""
    if offset < 0 or offset + x.spec.nvars > target.nvars:
        raise ValueError("include: target ring too small")
    before = (0,) * offset
    after = (0,) * (target.nvars - offset - x.spec.nvars)
    return RingElement(target, {before + m + after: c for m, c in x.coeffs.items()})
