"""Finite monoids, right acts, indecomposable components and flatness checks."""

from .act import (
    ActMorphism,
    FiniteAct,
    RightCongruence,
    amalgamated_coproduct,
    cofree_act,
    congruence_closure,
    coproduct_act,
    enumerate_acts,
    enumerate_right_congruences,
    enumerate_subacts,
    homomorphisms,
    product_act,
    pushout,
    quotient_act,
    rees_quotient,
    regular_act,
    subact_generated,
    validate_act,
    zero_act,
    zeros_of_act,
)
from .decomposition import (
    Decomposition,
    Scheme,
    components,
    is_indecomposable,
    power_act_indecomposable,
    shortest_scheme,
    two_step_connect,
)
from .flatness import (
    EMPTY,
    equalizer_act,
    product_comparison,
    tensor_product,
    theta_flatness_verdict,
    theta_tensor,
)
from .injectivity import homomorphism_extends, is_injective, is_injective_rel_cyclic
from .monoid import (
    FiniteMonoid,
    canonical_form,
    enumerate_monoids,
    is_left_reversible,
    is_right_collapsible,
    left_zeros,
    opposite,
    right_ideal_generated,
    right_zeros,
    standard_monoid,
    validate_monoid,
)
from .verify import Bounds, analyze_monoid, census, construct_An, verify_theorem, witness_two_zero_cyclic

__version__ = "0.1.0"
