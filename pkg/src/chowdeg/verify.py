"""Invariant suites behind ``chowdeg verify``.

Every suite is deterministic (fixed seeds) and returns a :class:`SuiteResult`;
exceptions raised inside a suite count as failures instead of propagating.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import graded_ring as gr
from .arith import binomial, vp, vp_binomial_kummer, vp_binomial_legendre
from .chern import diagonal_normal_class, negate_class, segre_fixed, segre_number, sq_class
from .degree_formula import check_degree_formula, evenness_check, legal_morphisms
from .graded_ring import RingSpec
from .incompressibility import Family, family_report, witt_index_bound
from .varieties import catalogue, product
from .varspec import MAX_DIM, MAX_EXP_PARAM, Inv, P, Product, Q, SB, canonical, parse_variety_spec


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str):
        self.checks += 1
        if not ok:
            self.failures.append(message)


def random_unit(rng: random.Random, spec: RingSpec, lo=-9, hi=9) -> gr.RingElement:
    coeffs = {m: rng.randint(lo, hi) for m in spec.monomials() if any(m)}
    coeffs[spec.zero_monomial] = rng.choice((1, -1))
    return spec.element(coeffs)


def random_spec(rng: random.Random, max_trunc: int = 12) -> RingSpec:
    """A small random ring; all-ones degree functional (unused by inversion)."""
    trunc = rng.randint(0, max_trunc)
    variables = []
    for i in range(rng.randint(1, 3)):
        codim = rng.randint(1, 3)
        variables.append(gr.Variable(f"x{i}", codim, rng.randint(0, trunc // codim)))
    functional = {m: 1 for m in gr.monomials_of_codim(variables, trunc)}
    return RingSpec(variables, trunc, functional)


def random_ast(rng: random.Random, depth: int = 5):
    if depth <= 1 or rng.random() < 0.4:
        kind = rng.randrange(4)
        if kind == 0:
            return P(rng.randint(0, MAX_DIM))
        if kind == 1:
            return Q(rng.randint(0, MAX_DIM), rng.choice(("split", "aniso")))
        if kind == 2:
            return SB(rng.randint(1, MAX_EXP_PARAM))
        return Inv(rng.randint(1, MAX_EXP_PARAM))
    return Product(random_ast(rng, depth - 1), random_ast(rng, depth - 1))


def small_catalogue_pairs(max_total: int):
    models = list(catalogue(max_total))
    for i, X in enumerate(models):
        for Y in models[i:]:
            if X.dim + Y.dim <= max_total:
                yield X, Y


def suite_binomial(r: SuiteResult):
    for m in range(1, 65):
        for k in range(1, 65):
            r.check(binomial(-m, k) == (-1) ** k * binomial(m + k - 1, k), f"reflection m={m} k={k}")
    for a in range(-64, 65):
        for k in range(1, 65):
            r.check(binomial(a, k) == binomial(a - 1, k - 1) + binomial(a - 1, k), f"pascal a={a} k={k}")


def suite_kummer(r: SuiteResult):
    for p in (2, 3, 5):
        for a in range(201):
            for b in range(201):
                k = vp_binomial_kummer(a, b, p)
                r.check(k == vp(binomial(a + b, a), p) == vp_binomial_legendre(a, b, p),
                        f"kummer a={a} b={b} p={p}")


def suite_series_inverse(r: SuiteResult, count: int = 1000):
    rng = random.Random(20100301)
    for i in range(count):
        spec = random_spec(rng)
        x = random_unit(rng, spec)
        r.check(x * x.inverse() == 1, f"series inverse #{i}: {x!r}")


def suite_whitney(r: SuiteResult):
    models = list(catalogue(12))
    models += [product(X, Y) for X, Y in small_catalogue_pairs(6)]
    for X in models:
        c = X.chern_tangent.value
        inv = c.inverse()
        r.check(c * inv == 1, f"whitney c*c^-1 != 1 for {X.name}")
        r.check(negate_class(X.chern_tangent).value == inv, f"factored vs series inverse for {X.name}")


def suite_multiplicativity(r: SuiteResult):
    for X, Y in small_catalogue_pairs(8):
        r.check(segre_number(product(X, Y)) == segre_number(X) * segre_number(Y),
                f"multiplicativity {X.name} x {Y.name}")


def suite_class_consistency(r: SuiteResult):
    for X in catalogue(8):
        r.check(segre_fixed(diagonal_normal_class(X)) == sq_class(X), f"segre_fixed != sq for {X.name}")


def suite_families(r: SuiteResult):
    for family in Family:
        rows = family_report(family, 12)
        for row in rows:
            r.check(row.closed_form_match, f"{family.value} n={row.n} closed form")
            if family is Family.QUADRIC:
                r.check(row.segre % 4 == 2, f"quadric n={row.n} not 2 mod 4")
            elif family is Family.SB or row.n >= 2:
                r.check(row.v2_segre == row.n, f"{family.value} n={row.n} v2={row.v2_segre}")
            r.check(row.conclusion.value == "strongly_2_incompressible", f"{family.value} n={row.n}")


def suite_evenness(r: SuiteResult):
    models = [X for X in catalogue(12) if X.dim >= 1]
    models += [product(X, Y) for X, Y in small_catalogue_pairs(8)]
    for X in models:
        if X.integral and X.complete and X.dim >= 1:
            r.check(evenness_check(X), f"odd Segre number for {X.name}")


def suite_degree_formula(r: SuiteResult):
    for m in legal_morphisms():
        verdict = check_degree_formula(m)
        r.check(verdict.applicable and verdict.holds,
                f"{m.source.name} -> {m.target.name} (deg {m.degree}): {verdict}")


def suite_parser_roundtrip(r: SuiteResult, count: int = 1000):
    rng = random.Random(1729)
    for i in range(count):
        ast = random_ast(rng)
        text = canonical(ast)
        r.check(parse_variety_spec(text) == ast, f"round trip #{i}: {text}")


def suite_witt(r: SuiteResult):
    for n in range(1, 11):
        r.check(witt_index_bound(2 ** n + 1) == 1, f"witt bound n={n}")


SUITES: dict[str, Callable[[SuiteResult], None]] = {
    "binomial": suite_binomial,
    "kummer": suite_kummer,
    "series-inverse": suite_series_inverse,
    "whitney": suite_whitney,
    "multiplicativity": suite_multiplicativity,
    "class-consistency": suite_class_consistency,
    "families": suite_families,
    "evenness": suite_evenness,
    "degree-formula": suite_degree_formula,
    "parser-roundtrip": suite_parser_roundtrip,
    "witt": suite_witt,
}


def run_suite(name: str) -> SuiteResult:
    result = SuiteResult(name)
    try:
        SUITES[name](result)
    except Exception as exc:  # a crashing suite is a failing suite
        result.failures.append(f"{type(exc).__name__}: {exc}")
    return result


def run_suites(names=None) -> list[SuiteResult]:
    if names is None:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    return [run_suite(n) for n in names]
