from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from genusmass.class_group import build_class_group, prime_ideal_class
from genusmass.forms import QuadForm
from genusmass.genus import (
    build_genus_characters,
    character_pairs,
    character_value,
    orthogonality_sum,
    represented_coprime_value,
)
from genusmass.arith import kronecker, primes_up_to
from oracles import fundamental_deltas

deltas_strategy = st.sampled_from(fundamental_deltas(-250))


class TestCharacterPairs:
    @pytest.mark.parametrize(
        "delta,expected",
        [
            (-20, [(1, -20), (5, -4)]),
            (-84, [(1, -84), (12, -7), (21, -4), (28, -3)]),
            (-23, [(1, -23)]),
            (-4, [(1, -4)]),
        ],
    )
    def test_examples(self, delta, expected):
        assert character_pairs(delta) == expected

    @given(deltas_strategy)
    def test_shape(self, delta):
        pairs = character_pairs(delta)
        assert pairs[0] == (1, delta)
        for d, big_d in pairs:
            assert d > 0 > big_d
            assert d * big_d == delta
        assert len(set(pairs)) == len(pairs)


class TestRepresentedValue:
    @pytest.mark.parametrize(
        "triple,d,expected",
        [((1, 0, 5), 5, 1), ((2, 2, 3), 5, 2), ((2, 1, 3), 23, 2)],
    )
    def test_examples(self, triple, d, expected):
        assert represented_coprime_value(QuadForm(*triple), d) == expected

    @given(deltas_strategy, st.data())
    @settings(max_examples=100)
    def test_coprime_and_represented(self, delta, data):
        group = build_class_group(delta)
        q = data.draw(st.sampled_from(group.classes))
        d = data.draw(st.sampled_from([p[0] for p in character_pairs(delta)]))
        r = represented_coprime_value(q, d)
        assert r > 0 and gcd(r, d) == 1
        # r really is represented
        assert any(q(x, y) == r for x in range(-r, r + 1) for y in range(-r, r + 1))


def smallest_admissible_values(q, d, how_many=5):
    values = set()
    k = 1
    while len(values) < how_many:
        for x in range(-k, k + 1):
            for y in range(-k, k + 1):
                v = q(x, y)
                if v > 0 and gcd(v, d) == 1:
                    values.add(v)
        k += 1
    return sorted(values)[:how_many]


class TestCharacterValue:
    def test_trivial_character(self, cg20):
        for g in cg20.genus_ids:
            assert character_value(cg20, 1, g) == 1

    def test_examples(self, cg20, cg84):
        principal = cg20.principal_genus
        other = [g for g in cg20.genus_ids if g != principal][0]
        assert character_value(cg20, 5, principal) == 1
        assert character_value(cg20, 5, other) == -1  # (5|2) = -1

        g_2211 = cg84.genus_of[cg84.classes.index(QuadForm(2, 2, 11))]
        assert character_value(cg84, 21, g_2211) == -1  # (21|2) = -1

    @given(deltas_strategy, st.data())
    @settings(max_examples=60, deadline=None)
    def test_independent_of_representative_and_value(self, delta, data):
        group = build_class_group(delta)
        d = data.draw(st.sampled_from([p[0] for p in character_pairs(delta)]))
        for g in group.genus_ids:
            expected = character_value(group, d, g)
            for h in group.genus_members(g):
                q = group.classes[h]
                for r in smallest_admissible_values(q, d):
                    assert kronecker(d, r) == expected

    @given(deltas_strategy)
    @settings(max_examples=60, deadline=None)
    def test_homomorphism(self, delta):
        group = build_class_group(delta)
        for chi in build_genus_characters(group):
            for g1 in group.genus_ids:
                for g2 in group.genus_ids:
                    assert chi.value(group.genus_product(g1, g2)) == chi.value(g1) * chi.value(g2)

    @given(deltas_strategy)
    @settings(max_examples=40, deadline=None)
    def test_compatible_with_prime_translation(self, delta):
        # chi(genus of h*p) * chi(genus of h) does not depend on h
        group = build_class_group(delta)
        chars = build_genus_characters(group)
        for p in primes_up_to(20):
            if kronecker(delta, p) == -1:
                continue
            hp = prime_ideal_class(group, p)
            for chi in chars:
                products = {
                    chi.value(group.genus_of[group.compose(hp, h)]) * chi.value(group.genus_of[h])
                    for h in range(group.h)
                }
                assert len(products) == 1


class TestOrthogonality:
    def test_examples(self, cg20, cg84):
        assert orthogonality_sum(cg20, cg20.principal_genus) == 1
        other = [g for g in cg20.genus_ids if g != cg20.principal_genus][0]
        assert orthogonality_sum(cg20, other) == 0
        for g in cg84.genus_ids:
            expected = Fraction(1) if g == cg84.principal_genus else Fraction(0)
            assert orthogonality_sum(cg84, g) == expected

    @given(deltas_strategy)
    @settings(max_examples=60, deadline=None)
    def test_row_orthogonality(self, delta):
        group = build_class_group(delta)
        chars = build_genus_characters(group)
        n = len(chars)
        assert n == len(group.genus_ids)
        for c1 in chars:
            for c2 in chars:
                total = sum(c1.value(g) * c2.value(g) for g in group.genus_ids)
                assert total == (n if c1.d == c2.d else 0)

    @given(deltas_strategy)
    @settings(max_examples=60, deadline=None)
    def test_orthogonality_sum_detects_principal_genus(self, delta):
        group = build_class_group(delta)
        for g in group.genus_ids:
            expected = Fraction(1) if g == group.principal_genus else Fraction(0)
            assert orthogonality_sum(group, g) == expected

    def test_trivial_character_is_constant_one(self):
        for delta in (-3, -20, -84, -120):
            group = build_class_group(delta)
            trivial = build_genus_characters(group)[0]
            assert trivial.d == 1
            assert all(trivial.value(g) == 1 for g in group.genus_ids)
