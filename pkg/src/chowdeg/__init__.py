"""Exact Segre-number calculus on truncated Chow-ring models.

Computes ``deg c_dim(-T_X)`` for projective spaces, quadrics, Severi-Brauer
and involution varieties (and their products), checks the mod-2 degree
formula on morphism data, and certifies strong 2-incompressibility when
``s_X / n_X`` is odd.
"""
from .arith import INFINITY, binomial, v2, vp, vp_binomial_kummer
from .chern import (TotalClass, chern_tangent_projective, chern_tangent_quadric,
                    diagonal_normal_class, negate_class, segre_fixed, segre_number, sq_class)
from .degree_formula import (FormulaVerdict, MorphismDatum, check_degree_formula, evenness_check,
                             product_morphism)
from .graded_ring import RingElement, RingSpec, degree_eval, invert_unit, power, tensor
from .incompressibility import Certificate, certify, family_report, witt_index_bound
from .varieties import (VarietyModel, involution_variety, point, product, projective_space, quadric,
                        severi_brauer)
from .varspec import model_from_spec, parse_variety_spec

__version__ = "0.1.0"
