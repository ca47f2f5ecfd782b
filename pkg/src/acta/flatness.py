"""Tensor products with finite acts and flatness of the one-element act.

Tensoring the one-element right act with a left act B collapses B onto its
set of components, so every question here reduces to component counting
that is nonetheless computed through the tensor relation itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .act import (
    PRODUCT_CAP,
    ActMorphism,
    FiniteAct,
    enumerate_acts,
    product_act,
    regular_act,
    restrict,
    zero_act,
)
from .decomposition import components, power_act_indecomposable
from .errors import MixedMonoids, NotParallel, SizeCapExceeded
from .monoid import FiniteMonoid, left_zeros, opposite
from .unionfind import UnionFind


@dataclass(frozen=True)
class TensorQuotient:
    right: FiniteAct
    left: FiniteAct
    classes: tuple[int, ...]

    @property
    def count(self) -> int:
        return max(self.classes) + 1

    def class_of(self, a: int, b: int) -> int:
        return self.classes[a * self.left.size + b]


def tensor_product(right: FiniteAct, left: FiniteAct, cap: int = PRODUCT_CAP) -> TensorQuotient:
    """A (x) B for a right act A over M and a left act B, i.e. a right act over M^op.

    Pairs are identified by (a s, b) ~ (a, s b); classes are numbered by least
    pair in row-major order.
    """
    if left.monoid.table != opposite(right.monoid).table:
        raise MixedMonoids("left act must be an act over the opposite monoid")
    nb = left.size
    if right.size * nb > cap:
        raise SizeCapExceeded(f"tensor carrier of {right.size * nb} pairs exceeds cap {cap}")
    uf = UnionFind(right.size * nb)
    for a, arow in enumerate(right.action):
        for b, brow in enumerate(left.action):
            for s in range(1, right.monoid.order):
                uf.union(arow[s] * nb + b, a * nb + brow[s])
    return TensorQuotient(right, left, uf.labels())


@dataclass(frozen=True)
class ThetaTensor:
    tensor: TensorQuotient
    to_component: tuple[int, ...]
    bijective: bool

    @property
    def count(self):
        return self.tensor.count


def theta_tensor(left: FiniteAct) -> ThetaTensor:
    """Theta (x) B together with the induced map from tensor classes to components of B."""
    t = tensor_product(zero_act(opposite(left.monoid)), left)
    comp = components(left)
    to_comp = [None] * t.count
    ok = comp.count == t.count
    for b in range(left.size):
        c = t.class_of(0, b)
        if to_comp[c] is None:
            to_comp[c] = comp.component_of[b]
        elif to_comp[c] != comp.component_of[b]:
            ok = False
    ok = ok and None not in to_comp and len(set(to_comp)) == len(to_comp)
    return ThetaTensor(t, tuple(to_comp), ok)


@dataclass(frozen=True)
class ComparisonVerdict:
    kind: str  # "bijective" | "not_injective" | "not_surjective"
    witness: tuple = ()
    source_classes: int = 0
    target_classes: int = 0

    @property
    def bijective(self):
        return self.kind == "bijective"


def product_comparison(factors: Sequence[FiniteAct], cap: int = PRODUCT_CAP) -> ComparisonVerdict:
    """The canonical map Theta (x) prod B_i -> prod (Theta (x) B_i).

    Witnesses: two product elements with distinct classes but equal images
    (not injective), or a tuple of classes with no preimage (not surjective).
    """
    factors = list(factors)
    prod = product_act(factors, cap=cap)
    src = theta_tensor(prod).tensor
    parts = [theta_tensor(f).tensor for f in factors]
    image_of = {}
    first_elem = {}
    for p, coords in enumerate(itertools.product(*(range(f.size) for f in factors))):
        c = src.class_of(0, p)
        img = tuple(t.class_of(0, b) for t, b in zip(parts, coords))
        if c in image_of and image_of[c] != img:
            raise AssertionError("comparison map is not well defined")
        image_of[c] = img
        first_elem.setdefault(c, p)
    target_count = 1
    for t in parts:
        target_count *= t.count
    seen = {}
    for c in sorted(image_of):
        img = image_of[c]
        if img in seen:
            return ComparisonVerdict(
                "not_injective", (first_elem[seen[img]], first_elem[c]), src.count, target_count
            )
        seen[img] = c
    if len(seen) < target_count:
        missing = next(
            img for img in itertools.product(*(range(t.count) for t in parts)) if img not in seen
        )
        return ComparisonVerdict("not_surjective", missing, src.count, target_count)
    return ComparisonVerdict("bijective", (), src.count, target_count)


class _Empty:
    def __repr__(self):
        return "EMPTY"

    def __bool__(self):
        return False


EMPTY = _Empty()


def equalizer_act(f: ActMorphism, g: ActMorphism):
    """The subact where f and g agree (with inclusion), or EMPTY.

    Acts are nonempty, so an empty agreement set has no equalizer in the
    category; the marker makes that explicit.
    """
    if f.source != g.source or f.target != g.target:
        raise NotParallel("equalizer needs two maps with the same source and target")
    agree = [x for x in range(f.source.size) if f.map[x] == g.map[x]]
    if not agree:
        return EMPTY
    return restrict(f.source, agree)


@dataclass
class FlatnessVerdict:
    finitely_product_flat: bool
    product_flat: bool
    super_flat: bool
    left_zeros: tuple[int, ...]
    evidence: list = field(default_factory=list)

    def to_json(self):
        return {
            "finitely_product_flat": self.finitely_product_flat,
            "product_flat": self.product_flat,
            "super_flat": self.super_flat,
            "left_zeros": list(self.left_zeros),
            "evidence": self.evidence,
        }


def theta_flatness_verdict(m: FiniteMonoid, act_size: int = 2) -> FlatnessVerdict:
    """Flatness flags for the one-element right act over m.

    Finite product flatness is read off the left square S x S; product and
    super flatness both come down to m having a left zero.  The evidence
    sweeps the comparison map over pairs of small left acts.
    """
    op = opposite(m)
    fpf = power_act_indecomposable(op, 2)
    zeros = left_zeros(m)
    evidence = []
    reg = regular_act(op)
    pair = product_comparison([reg, reg])
    evidence.append({"check": "regular_pair", "comparison": pair.kind})
    if fpf:
        small = [b for k in range(1, act_size + 1) for b in enumerate_acts(op, k, up_to_iso=True)]
        checked, bad = 0, []
        for b1, b2 in itertools.product(small, repeat=2):
            v = product_comparison([b1, b2])
            checked += 1
            if not v.bijective:
                bad.append({"left_acts": [[list(r) for r in b1.action], [list(r) for r in b2.action]],
                            "comparison": v.kind})
        evidence.append({"check": "small_pairs", "pairs": checked, "counterexamples": bad})
    return FlatnessVerdict(fpf, bool(zeros), bool(zeros), zeros, evidence)
