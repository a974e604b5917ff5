"""Strong 2-incompressibility certificates and per-family reports.

The only criterion available is sufficient, not necessary: if ``s_X / n_X``
is odd then X is strongly 2-incompressible. Anything else is reported as
inconclusive, never as compressible.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional

from .arith import INFINITY, Valuation, binomial, v2, vp_binomial_kummer
from .chern import segre_number
from .errors import InvariantViolation, ModelError, UnknownIndexError
from .varieties import VarietyModel, involution_variety, quadric, severi_brauer


class Conclusion(str, enum.Enum):
    STRONGLY_2_INCOMPRESSIBLE = "strongly_2_incompressible"
    INCONCLUSIVE = "inconclusive"


class Family(str, enum.Enum):
    SB = "sb"
    QUADRIC = "quadric"
    INVOLUTION = "involution"


@dataclass(frozen=True)
class Certificate:
    variety: VarietyModel
    segre: int
    v2_segre: Valuation
    v2_index: int
    criterion_odd_quotient: bool
    conclusion: Conclusion


def certify(X: VarietyModel) -> Certificate:
    if not X.complete:
        raise ModelError(f"{X.name} is not complete")
    if not X.integral:
        raise ModelError(f"{X.name} is not integral")
    if X.index_two_adic is None:
        raise UnknownIndexError(f"2-adic valuation of the index of {X.name} is unknown")
    s = segre_number(X)
    vs = v2(s)
    vi = X.index_two_adic
    # the index divides the Segre number
    if vs is not INFINITY and vi > vs:
        raise InvariantViolation(f"{X.name}: v2(index)={vi} exceeds v2(segre)={vs}")
    odd = vs == vi
    return Certificate(X, s, vs, vi, odd,
                       Conclusion.STRONGLY_2_INCOMPRESSIBLE if odd else Conclusion.INCONCLUSIVE)


def _binom0(a: int, k: int) -> int:
    return binomial(a, k) if k >= 0 else 0


def sb_closed_form(n: int) -> int:
    return -binomial(2 ** (n + 1) - 2, 2 ** n - 1)


def quadric_closed_form(n: int) -> int:
    """Closed form for the anisotropic quadric of dimension ``2**n - 1``.

    It comes from ``(1 + h) ** (-2**n - 1)``, which agrees with ``c(-T_X)``
    only modulo 2, so it matches the Segre number only modulo 4.
    """
    return -2 * binomial(2 ** (n + 1) - 1, 2 ** n - 1)


def involution_closed_form(n: int) -> int:
    return (2 * _binom0(2 ** (n + 1) - 3, 2 ** n - 2)
            - 4 * _binom0(2 ** (n + 1) - 4, 2 ** n - 3))


@dataclass(frozen=True)
class FamilyRow:
    family: Family
    n: int
    dim: int
    segre: int
    v2_segre: Valuation
    v2_index: int
    conclusion: Conclusion
    closed_form: int
    closed_form_modulus: Optional[int]  # None means exact comparison
    closed_form_match: bool
    certificate: Certificate


_FAMILIES: dict[Family, tuple[Callable[[int], VarietyModel], Callable[[int], int], Optional[int]]] = {
    Family.SB: (severi_brauer, sb_closed_form, None),
    Family.QUADRIC: (lambda n: quadric(2 ** n - 1, anisotropic=True), quadric_closed_form, 4),
    Family.INVOLUTION: (involution_variety, involution_closed_form, None),
}


def family_member(family: Family | str, n: int) -> VarietyModel:
    return _FAMILIES[Family(family)][0](n)


def family_row(family: Family | str, n: int) -> FamilyRow:
    family = Family(family)
    build, closed, modulus = _FAMILIES[family]
    X = build(n)
    cert = certify(X)
    expected = closed(n)
    if modulus is None:
        match = cert.segre == expected
    else:
        match = (cert.segre - expected) % modulus == 0
    if not match:
        raise InvariantViolation(
            f"{family.value} n={n}: Chern calculus gives {cert.segre}, closed form {expected}")
    if family is Family.SB:
        carries = vp_binomial_kummer(2 ** n - 1, 2 ** n - 1, 2)
        if carries != cert.v2_segre:
            raise InvariantViolation(f"sb n={n}: Kummer carries {carries} != v2 {cert.v2_segre}")
    return FamilyRow(family, n, X.dim, cert.segre, cert.v2_segre, cert.v2_index,
                     cert.conclusion, expected, modulus, match, cert)


def family_report(family: Family | str, n_max: int) -> list[FamilyRow]:
    """Rows ``n = 1..n_max``, each cross-checked against the closed form.

    Raises :class:`InvariantViolation` on any disagreement between the two
    computation paths.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return [family_row(family, n) for n in range(1, n_max + 1)]


def witt_index_bound(d: int) -> int:
    """Upper bound ``d - 2**n`` on the first Witt index, largest ``2**n <= d - 1``."""
    if d < 3:
        raise ValueError("witt_index_bound: d must be at least 3")
    return d - (1 << ((d - 1).bit_length() - 1))
