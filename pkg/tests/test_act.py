import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acta.act import (
    ActMorphism,
    amalgamated_coproduct,
    closure,
    cofree_act,
    congruence_closure,
    coproduct_act,
    coproduct_injections,
    enumerate_acts,
    enumerate_right_congruences,
    enumerate_subacts,
    homomorphisms,
    identity_morphism,
    product_act,
    product_projections,
    pushout,
    quotient_act,
    rees_quotient,
    regular_act,
    subact_generated,
    validate_act,
    validate_morphism,
    zero_act,
    zeros_of_act,
)
from acta.decomposition import components, is_indecomposable
from acta.errors import (
    EmptySeeds,
    MixedMonoids,
    NotARightIdeal,
    NotCompatible,
    NotInjective,
    NotUnital,
    SizeCapExceeded,
)
from acta.monoid import cyclic_group, enumerate_monoids, full_transformation, left_zero_adjoined, trivial_monoid

import oracles

Z2 = cyclic_group(2)
LZ2 = left_zero_adjoined(2)
T2 = full_transformation(2)
C1, C2 = T2.names.index("11"), T2.names.index("22")
CENSUS3 = [m for n in range(1, 4) for m in enumerate_monoids(n)]
CENSUS4 = [m for n in range(1, 5) for m in enumerate_monoids(n)]


def small_acts(monoids, max_size):
    return [a for m in monoids for k in range(1, max_size + 1) for a in enumerate_acts(m, k, up_to_iso=True)]


SMALL = small_acts(CENSUS3, 3)


class TestValidate:
    def test_regular(self):
        assert validate_act(Z2, [[0, 1], [1, 0]]).size == 2

    def test_theta(self):
        assert validate_act(Z2, [[0, 0]]).size == 1

    def test_not_compatible_witness(self):
        action = [[0, 0], [1, 0]]
        with pytest.raises(NotCompatible) as err:
            validate_act(Z2, action)
        x, s, t = err.value.witness
        assert action[action[x][s]][t] != action[x][Z2.mul(s, t)]

    def test_not_unital(self):
        with pytest.raises(NotUnital):
            validate_act(Z2, [[1, 0], [0, 1]])

    @pytest.mark.parametrize("a", SMALL[:40])
    def test_enumerated_acts_validate(self, a):
        validate_act(a.monoid, a.action)


class TestBasicActs:
    def test_zero_act(self):
        for m in (Z2, LZ2, T2):
            th = zero_act(m)
            assert th.size == 1 and zeros_of_act(th) == (0,)

    def test_regular_z2_indecomposable(self):
        assert is_indecomposable(regular_act(Z2))

    def test_regular_lz_zeros(self):
        assert set(zeros_of_act(regular_act(LZ2))) == {1, 2}

    def test_zeros_regular_z2(self):
        assert zeros_of_act(regular_act(Z2)) == ()


class TestProduct:
    def test_z2_square(self):
        assert product_act([regular_act(Z2)] * 2).size == 4

    def test_unary(self):
        a = regular_act(T2)
        assert product_act([a]).action == a.action

    def test_tn_square(self):
        sq = product_act([regular_act(T2)] * 2)
        assert sq.size == 16
        k = T2.order
        c = {0: C1, 1: C2}
        for alpha in range(k):
            for beta in range(k):
                a1 = int(T2.names[alpha][0]) - 1
                b1 = int(T2.names[beta][0]) - 1
                assert sq.act(alpha * k + beta, C1) == c[a1] * k + c[b1]

    def test_projections_are_morphisms(self):
        factors = [regular_act(LZ2), cofree_act(LZ2, 2)]
        prod = product_act(factors)
        for p in product_projections(factors, prod):
            validate_morphism(p)

    def test_mixed(self):
        with pytest.raises(MixedMonoids):
            product_act([regular_act(Z2), regular_act(LZ2)])

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            product_act([regular_act(T2)] * 3, cap=50)


class TestCoproduct:
    def test_two_thetas(self):
        c = coproduct_act([zero_act(Z2)] * 2)
        assert c.size == 2 and zeros_of_act(c) == (0, 1)

    @pytest.mark.parametrize("pair", list(itertools.combinations(SMALL[:12], 2)))
    def test_component_counts_add(self, pair):
        a, b = pair
        if a.monoid.table != b.monoid.table:
            return
        assert components(coproduct_act([a, b])).count == components(a).count + components(b).count

    def test_injections_disjoint_and_cover(self):
        parts = [regular_act(LZ2), zero_act(LZ2), regular_act(LZ2)]
        c = coproduct_act(parts)
        images = [set(validate_morphism(i).map) for i in coproduct_injections(parts, c)]
        assert all(i.isdisjoint(j) for i, j in itertools.combinations(images, 2))
        assert set().union(*images) == set(range(c.size))


class TestSubacts:
    def test_whole(self):
        a = regular_act(T2)
        sub, inc = subact_generated(a, range(a.size))
        assert sub.action == a.action

    def test_zero_generates_point(self):
        sub, inc = subact_generated(regular_act(LZ2), [1])
        assert sub.size == 1 and inc.map == (1,)

    def test_tn_constant(self):
        sub, inc = subact_generated(regular_act(T2), [C1])
        assert set(inc.map) == {C1}

    def test_empty(self):
        with pytest.raises(EmptySeeds):
            subact_generated(regular_act(Z2), [])

    def test_theta(self):
        assert len(list(enumerate_subacts(zero_act(Z2)))) == 1

    def test_group(self):
        assert list(enumerate_subacts(regular_act(Z2))) == [frozenset({0, 1})]

    def test_lz(self):
        assert set(enumerate_subacts(regular_act(LZ2))) == {
            frozenset({0, 1, 2}), frozenset({1}), frozenset({2}), frozenset({1, 2})
        }

    @pytest.mark.parametrize("a", SMALL + [regular_act(full_transformation(2)), cofree_act(LZ2, 2)])
    def test_matches_power_set_oracle(self, a):
        assert set(enumerate_subacts(a)) == set(oracles.closed_subsets(a.action))

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            list(enumerate_subacts(regular_act(full_transformation(3))))


class TestCongruences:
    def test_empty_pairs(self):
        rho = congruence_closure(regular_act(T2), [])
        assert rho.count == T2.order

    def test_lz_pair(self):
        rho = congruence_closure(regular_act(LZ2), [(1, 2)])
        assert rho.blocks == [[0], [1, 2]]

    def test_an_pairs_over_lz(self):
        k = LZ2.order
        copies = coproduct_act([regular_act(LZ2)] * 3)
        pairs = [(i * k + 1, (i + 1) * k + 2) for i in range(2)]
        rho = congruence_closure(copies, pairs)
        merged = sorted(b for b in rho.blocks if len(b) > 1)
        assert merged == sorted([u, v] for u, v in pairs)
        for i in range(3):
            assert [i * k] in rho.blocks

    def test_theta_count(self):
        assert len(list(enumerate_right_congruences(zero_act(Z2)))) == 1

    def test_z2_count(self):
        assert len(list(enumerate_right_congruences(regular_act(Z2)))) == 2

    def test_lz_contains_closure(self):
        blocks = [rho.blocks for rho in enumerate_right_congruences(regular_act(LZ2))]
        assert [[0], [1, 2]] in blocks

    @pytest.mark.parametrize("a", SMALL[:60])
    def test_enumeration_matches_oracle(self, a):
        ours = sorted(rho.block_of for rho in enumerate_right_congruences(a))
        theirs = sorted(tuple(_dense(lab)) for lab in oracles.right_congruences(a.action))
        assert ours == theirs

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            list(enumerate_right_congruences(product_act([regular_act(Z2)] * 3)))


def _dense(lab):
    ids = {}
    return [ids.setdefault(b, len(ids)) for b in lab]


class TestQuotient:
    def test_identity_congruence(self):
        a = regular_act(T2)
        q, p = quotient_act(a, congruence_closure(a, []))
        assert q.action == a.action

    def test_full_congruence(self):
        a = regular_act(T2)
        q, p = quotient_act(a, congruence_closure(a, [(0, x) for x in range(a.size)]))
        assert q.size == 1

    @pytest.mark.parametrize("a", [x for x in SMALL if is_indecomposable(x)][:40])
    def test_factor_of_indecomposable(self, a):
        for rho in enumerate_right_congruences(a):
            q, p = quotient_act(a, rho)
            validate_morphism(p)
            assert set(p.map) == set(range(q.size))
            assert is_indecomposable(q)


class TestRees:
    def test_whole(self):
        assert rees_quotient(LZ2, [0, 1, 2]).size == 1

    def test_lz(self):
        q = rees_quotient(LZ2, [2])
        assert q.size == LZ2.order - 1 + 1
        assert len(zeros_of_act(q)) == 2

    def test_not_ideal(self):
        with pytest.raises(NotARightIdeal):
            rees_quotient(Z2, [1])

    @pytest.mark.parametrize("m", CENSUS3)
    def test_always_has_zero(self, m):
        for a in range(1, m.order):
            ideal = sorted({m.mul(a, s) for s in range(m.order)})
            assert zeros_of_act(rees_quotient(m, ideal))


class TestCofree:
    def test_one_letter(self):
        assert cofree_act(T2, 1).size == 1

    @pytest.mark.parametrize("m", CENSUS3 + [T2])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_action_and_zeros(self, m, k):
        c = cofree_act(m, k)
        funcs = list(itertools.product(range(k), repeat=m.order))
        for fi, f in enumerate(funcs):
            for s in range(m.order):
                g = funcs[c.act(fi, s)]
                assert all(g[t] == f[m.mul(s, t)] for t in range(m.order))
        consts = {i for i, f in enumerate(funcs) if len(set(f)) == 1}
        assert set(zeros_of_act(c)) == consts

    def test_z2_two_letters(self):
        c = cofree_act(Z2, 2)
        assert c.size == 4
        count, _ = oracles.transitive_closure_components(c.action)
        assert components(c).count == count == 3


class TestHomomorphisms:
    def test_from_theta_are_zeros(self):
        b = cofree_act(LZ2, 2)
        maps = [f.map[0] for f in homomorphisms(zero_act(LZ2), b)]
        assert maps == list(zeros_of_act(b))

    def test_from_regular(self):
        b = cofree_act(LZ2, 2)
        assert [f.map[0] for f in homomorphisms(regular_act(LZ2), b)] == list(range(b.size))

    def test_z2_into_cofree(self):
        assert len(list(homomorphisms(regular_act(Z2), cofree_act(Z2, 2)))) == 4

    @pytest.mark.parametrize("pair", list(itertools.product(SMALL[:25], repeat=2))[::7])
    def test_matches_oracle(self, pair):
        a, b = pair
        if a.monoid.table != b.monoid.table:
            return
        assert [f.map for f in homomorphisms(a, b)] == oracles.all_morphisms(a.action, b.action)


class TestPushout:
    def test_identity_square(self):
        y = regular_act(T2)
        i = identity_morphism(y)
        q, q1, q2 = pushout(i, i)
        assert q.size == y.size

    def test_glue_at_zero(self):
        y = regular_act(LZ2)
        f = ActMorphism(zero_act(LZ2), y, (1,))
        q, q1, q2 = pushout(f, f)
        assert q.size == 5 and is_indecomposable(q)

    def test_commutes(self):
        y = regular_act(LZ2)
        f1 = ActMorphism(zero_act(LZ2), y, (1,))
        f2 = ActMorphism(zero_act(LZ2), y, (2,))
        q, q1, q2 = pushout(f1, f2)
        assert q1(1) == q2(2)
        validate_morphism(q1)
        validate_morphism(q2)

    def test_amalgamate_tn(self):
        y = regular_act(T2)
        sub, inc = subact_generated(y, [C1, C2])
        q, q1, q2 = amalgamated_coproduct(inc, inc)
        assert q.size == 6 and is_indecomposable(q)

    def test_amalgamate_identity(self):
        y = regular_act(T2)
        q, _, _ = amalgamated_coproduct(identity_morphism(y), identity_morphism(y))
        assert q.action == y.action

    def test_not_injective(self):
        y = regular_act(LZ2)
        f = ActMorphism(y, zero_act(LZ2), (0, 0, 0))
        with pytest.raises(NotInjective):
            amalgamated_coproduct(f, f)

    @settings(max_examples=40, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_universal_property(self, rnd):
        m = rnd.choice(CENSUS3)
        acts = small_acts([m], 3)
        indec = [a for a in acts if is_indecomposable(a)]
        x, y1, y2, t = rnd.choice(acts), rnd.choice(indec), rnd.choice(indec), rnd.choice(acts)
        for f1 in homomorphisms(x, y1):
            for f2 in homomorphisms(x, y2):
                q, q1, q2 = pushout(f1, f2)
                assert is_indecomposable(q)
                hs = list(homomorphisms(q, t))
                for g1 in homomorphisms(y1, t):
                    for g2 in homomorphisms(y2, t):
                        if g1.compose(f1) != g2.compose(f2):
                            continue
                        assert sum(h.compose(q1) == g1 and h.compose(q2) == g2 for h in hs) == 1


class TestEnumerateActs:
    def test_size_one(self):
        for m in CENSUS3:
            assert [a.action for a in enumerate_acts(m, 1)] == [zero_act(m).action]

    def test_trivial_monoid(self):
        # only the unit column exists, so each size has exactly one act
        assert len(list(enumerate_acts(trivial_monoid(), 2))) == len(oracles.all_action_tables(((0,),), 2)) == 1

    def test_z2_size_two(self):
        assert len(list(enumerate_acts(Z2, 2, up_to_iso=True))) == 2

    @pytest.mark.parametrize("m", CENSUS3)
    @pytest.mark.parametrize("size", [2, 3])
    def test_matches_oracle(self, m, size):
        assert {a.action for a in enumerate_acts(m, size)} == set(oracles.all_action_tables(m.table, size))

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            list(enumerate_acts(full_transformation(3), 3))
