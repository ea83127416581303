"""Brauer algebras of dihedral type I_2^n realized inside Brauer diagrams of type A_{n-1}."""

from .diagram import (
    BrauerDiagram,
    DiagramSet,
    deserialize,
    enumerate_monoid,
    equals_up_to_delta,
    generator_e,
    generator_r,
    identity,
    multiply,
    op_involution,
    serialize,
)
from .dihedral import DihedralElement, coset_representatives, enumerate_group, standard_subgroups
from .embedding import (
    check_normal_form_injectivity,
    image_rank,
    orbit,
    orbit_report,
    phi_generators,
    phi_word,
    solve_theta,
    verify_presentation,
)
from .particle import BoxSpec, classify_relation, closed_form, simulate, unfold
from .presentation import GeneratorWord, Relation, ThetaParameters, normal_forms, relation_schema
from .roots import AdmissibleSet, Root, act_e, act_r, e_beta, e_hat, height, symmetry_profile, top_of

__all__ = [
    "BrauerDiagram",
    "DiagramSet",
    "deserialize",
    "enumerate_monoid",
    "equals_up_to_delta",
    "generator_e",
    "generator_r",
    "identity",
    "multiply",
    "op_involution",
    "serialize",
    "DihedralElement",
    "coset_representatives",
    "enumerate_group",
    "standard_subgroups",
    "check_normal_form_injectivity",
    "image_rank",
    "orbit",
    "orbit_report",
    "phi_generators",
    "phi_word",
    "solve_theta",
    "verify_presentation",
    "BoxSpec",
    "classify_relation",
    "closed_form",
    "simulate",
    "unfold",
    "GeneratorWord",
    "Relation",
    "ThetaParameters",
    "normal_forms",
    "relation_schema",
    "AdmissibleSet",
    "Root",
    "act_e",
    "act_r",
    "e_beta",
    "e_hat",
    "height",
    "symmetry_profile",
    "top_of",
]

__version__ = "0.1.0"
