"""Injectivity of finite acts, decided by the Baer criterion."""

from __future__ import annotations

from functools import lru_cache

from .act import (
    ActMorphism,
    FiniteAct,
    enumerate_right_congruences,
    enumerate_subacts,
    extensions,
    homomorphisms,
    quotient_act,
    regular_act,
    restrict,
    validate_morphism,
    zeros_of_act,
)
from .errors import NotASubact, SizeCapExceeded
from .monoid import FiniteMonoid

MAX_ORDER = 6


def find_extension(inclusion: ActMorphism, f: ActMorphism) -> ActMorphism | None:
    """Some g: inclusion.target -> f.target restricting to f, or None."""
    if not inclusion.is_injective() or inclusion.source != f.source:
        raise NotASubact("inclusion must be injective with the same source as f")
    validate_morphism(inclusion)
    validate_morphism(f)
    return next(extensions(inclusion, f), None)


def homomorphism_extends(inclusion: ActMorphism, f: ActMorphism) -> bool:
    return find_extension(inclusion, f) is not None


@lru_cache(maxsize=None)
def cyclic_inclusions(m: FiniteMonoid) -> tuple[tuple[FiniteAct, ActMorphism], ...]:
    """Every (subact, inclusion) inside every cyclic act S/rho, proper or not."""
    if m.order > MAX_ORDER:
        raise SizeCapExceeded(f"right congruence sweep supports order <= {MAX_ORDER}")
    out = []
    for rho in enumerate_right_congruences(regular_act(m)):
        cyc, _ = quotient_act(regular_act(m), rho)
        for sub in enumerate_subacts(cyc):
            if len(sub) < cyc.size:
                out.append(restrict(cyc, sub))
    return tuple(out)


def rel_cyclic_failure(q: FiniteAct) -> tuple[FiniteAct, ActMorphism, ActMorphism] | None:
    """(cyclic act, inclusion, map) for some map into q that does not extend."""
    for sub, inc in cyclic_inclusions(q.monoid):
        for f in homomorphisms(sub, q):
            if next(extensions(inc, f), None) is None:
                return inc.target, inc, f
    return None


def is_injective_rel_cyclic(q: FiniteAct) -> bool:
    return rel_cyclic_failure(q) is None


def is_injective(q: FiniteAct) -> bool:
    """Baer criterion: a zero element plus injectivity relative to cyclic inclusions."""
    return bool(zeros_of_act(q)) and is_injective_rel_cyclic(q)
