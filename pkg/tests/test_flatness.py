import itertools

import pytest

from acta.act import (
    ActMorphism,
    cofree_act,
    coproduct_act,
    enumerate_acts,
    homomorphisms,
    product_act,
    product_projections,
    regular_act,
    zero_act,
)
from acta.decomposition import components, power_act_indecomposable
from acta.errors import MixedMonoids, NotParallel
from acta.flatness import EMPTY, equalizer_act, product_comparison, tensor_product, theta_flatness_verdict, theta_tensor
from acta.monoid import (
    cyclic_group,
    enumerate_monoids,
    full_transformation,
    left_zero_adjoined,
    left_zeros,
    opposite,
    right_zero_adjoined,
    trivial_monoid,
)

import oracles

Z2 = cyclic_group(2)
LZ2 = left_zero_adjoined(2)
T2 = full_transformation(2)
CENSUS3 = [m for n in range(1, 4) for m in enumerate_monoids(n)]


def left_regular(m):
    return regular_act(opposite(m))


def left_acts(m, max_size):
    op = opposite(m)
    return [b for k in range(1, max_size + 1) for b in enumerate_acts(op, k, up_to_iso=True)]


class TestTensor:
    @pytest.mark.parametrize("m", CENSUS3 + [T2])
    def test_unit(self, m):
        assert tensor_product(regular_act(m), left_regular(m)).count == m.order

    @pytest.mark.parametrize("m", CENSUS3)
    def test_theta_with_cyclic(self, m):
        assert tensor_product(zero_act(m), left_regular(m)).count == 1

    def test_theta_with_z2_square(self):
        b = product_act([left_regular(Z2)] * 2)
        assert tensor_product(zero_act(Z2), b).count == 2

    def test_mixed(self):
        with pytest.raises(MixedMonoids):
            tensor_product(regular_act(LZ2), regular_act(LZ2))

    @pytest.mark.parametrize("m", CENSUS3[:6])
    def test_matches_closure_oracle(self, m):
        rights = [b for k in (1, 2) for b in enumerate_acts(m, k, up_to_iso=True)] + [regular_act(m)]
        for a, b in itertools.product(rights, left_acts(m, 2)):
            assert tensor_product(a, b).count == oracles.tensor_class_count(a.action, b.action)

    def test_class_of_relation(self):
        a, b = cofree_act(LZ2, 2), left_regular(LZ2)
        t = tensor_product(a, b)
        for x, y, s in itertools.product(range(a.size), range(b.size), range(LZ2.order)):
            assert t.class_of(a.act(x, s), y) == t.class_of(x, b.act(y, s))


class TestThetaTensor:
    def test_left_regular(self):
        t = theta_tensor(left_regular(T2))
        assert t.count == 1 and t.bijective

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_thetas(self, k):
        assert theta_tensor(coproduct_act([zero_act(opposite(LZ2))] * k)).count == k

    def test_z2_square(self):
        t = theta_tensor(product_act([left_regular(Z2)] * 2))
        assert t.count == 2 and t.bijective

    @pytest.mark.parametrize("m", CENSUS3)
    def test_classes_are_components(self, m):
        for b in left_acts(m, 3):
            t = theta_tensor(b)
            assert t.bijective and t.count == components(b).count


class TestComparison:
    def test_single_factor(self):
        for b in left_acts(LZ2, 2):
            assert product_comparison([b]).bijective

    def test_z2(self):
        v = product_comparison([left_regular(Z2)] * 2)
        assert v.kind == "not_injective"
        assert (v.source_classes, v.target_classes) == (2, 1)

    def test_lz(self):
        assert product_comparison([left_regular(LZ2)] * 2).bijective

    def test_not_surjective_impossible_for_theta(self):
        # projections onto components are onto, so only injectivity can fail
        for m in CENSUS3:
            for b1, b2 in itertools.product(left_acts(m, 2), repeat=2):
                assert product_comparison([b1, b2]).kind != "not_surjective"

    @pytest.mark.parametrize("m", CENSUS3)
    def test_regular_pair_matches_left_square(self, m):
        v = product_comparison([left_regular(m)] * 2)
        assert v.bijective == power_act_indecomposable(opposite(m), 2)


class TestEqualizer:
    def test_same_map(self):
        a = regular_act(LZ2)
        f = next(homomorphisms(a, cofree_act(LZ2, 2)))
        sub, inc = equalizer_act(f, f)
        assert sub.action == a.action

    def test_disjoint(self):
        maps = list(homomorphisms(regular_act(Z2), cofree_act(Z2, 2)))
        pair = next((f, g) for f, g in itertools.combinations(maps, 2) if all(x != y for x, y in zip(f.map, g.map)))
        assert equalizer_act(*pair) is EMPTY
        assert not EMPTY

    def test_diagonal(self):
        a = regular_act(T2)
        p1, p2 = product_projections([a, a], product_act([a, a]))
        sub, inc = equalizer_act(p1, p2)
        assert sub.size == a.size
        assert all(x // a.size == x % a.size for x in inc.map)

    def test_not_parallel(self):
        a = regular_act(LZ2)
        f = ActMorphism(a, zero_act(LZ2), (0, 0, 0))
        g = next(homomorphisms(a, cofree_act(LZ2, 2)))
        with pytest.raises(NotParallel):
            equalizer_act(f, g)


class TestVerdict:
    def test_t2(self):
        v = theta_flatness_verdict(T2)
        assert (v.finitely_product_flat, v.product_flat, v.super_flat) == (True, True, True)
        assert set(v.left_zeros) == {T2.names.index("11"), T2.names.index("22")}

    def test_z2(self):
        v = theta_flatness_verdict(Z2)
        assert (v.finitely_product_flat, v.product_flat, v.super_flat) == (False, False, False)

    def test_trivial(self):
        v = theta_flatness_verdict(trivial_monoid())
        assert (v.finitely_product_flat, v.product_flat, v.super_flat) == (True, True, True)

    def test_rz(self):
        # finite products behave, arbitrary ones need a left zero
        v = theta_flatness_verdict(right_zero_adjoined(2))
        assert (v.finitely_product_flat, v.product_flat, v.super_flat) == (True, False, False)

    @pytest.mark.parametrize("m", CENSUS3)
    def test_evidence_is_clean(self, m):
        v = theta_flatness_verdict(m)
        assert v.product_flat == bool(left_zeros(m))
        if v.product_flat:
            assert v.finitely_product_flat
        for e in v.evidence:
            assert e.get("counterexamples", []) == []
        assert set(v.to_json()) == {"finitely_product_flat", "product_flat", "super_flat", "left_zeros", "evidence"}
