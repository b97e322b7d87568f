from fractions import Fraction
from math import comb

import pytest

from mzv import (
    Composition,
    Word,
    WordPolynomial,
    aa_word_set,
    aa_word_sum,
    ab_power_shuffle,
    dressed_factorial_identity,
    dressed_shuffle_identity,
    euler_decomposition,
    orbit_count,
    shuffle_words,
    signed_binomial_sum,
    zagier_factorial_identity,
    zagier_shuffle_identity,
)
from oracles import orbit_count_brute


def count_aa(word: Word) -> int:
    s = word.letters
    return sum(1 for i in range(len(s) - 1) if s[i] == s[i + 1] == "A")


class TestAAWords:
    def test_examples(self):
        assert aa_word_set(2, 1) == frozenset({Word("AABB")})
        assert aa_word_set(2, 0) == frozenset({Word("ABAB")})
        assert len(aa_word_set(3, 1)) == comb(3, 2)
        assert aa_word_set(1, 0) == frozenset({Word("AB")})
        assert aa_word_set(3, 2) == frozenset()

    def test_cardinality(self):
        for blocks in range(0, 9):
            for doubles in range(0, blocks // 2 + 1):
                assert len(aa_word_set(blocks, doubles)) == comb(blocks, 2 * doubles)

    def test_matches_shuffle_filter_for_every_split(self):
        # the word set must not depend on how blocks splits into p + q
        for blocks in range(1, 9):
            for doubles in range(0, blocks // 2 + 1):
                expected = aa_word_set(blocks, doubles)
                ab = Word("AB")
                for p in range(doubles, blocks - doubles + 1):
                    q = blocks - p
                    if min(p, q) < doubles:
                        continue
                    seen = frozenset(
                        word
                        for word, _ in shuffle_words(ab ** p, ab ** q).items()
                        if count_aa(word) == doubles
                    )
                    assert seen == expected, (blocks, doubles, p, q)

    def test_word_sum(self):
        assert aa_word_sum(2, 1) == WordPolynomial({"AABB": 1})
        assert aa_word_sum(2, 0) == WordPolynomial({"ABAB": 1})
        poly = aa_word_sum(4, 2)
        assert all(c == 1 for _, c in poly.items())
        assert len(poly) == comb(4, 4)


class TestABPowerShuffle:
    def test_examples(self):
        assert ab_power_shuffle(1, 1) == WordPolynomial({"ABAB": 2, "AABB": 4})
        for q in range(5):
            assert ab_power_shuffle(0, q) == WordPolynomial({Word("AB") ** q: 1})
        assert ab_power_shuffle(1, 2).coefficient_sum() == comb(6, 2)

    def test_equals_shuffle(self):
        ab = Word("AB")
        for total in range(0, 7):
            for p in range(total + 1):
                q = total - p
                assert ab_power_shuffle(p, q) == shuffle_words(ab ** p, ab ** q), (p, q)


class TestFactorialIdentities:
    def test_zagier_values(self):
        assert zagier_factorial_identity(0) == (Fraction(1), Fraction(1))
        lhs, rhs = zagier_factorial_identity(1)
        assert lhs == rhs == Fraction(1, 90)

    def test_dressed_values(self):
        assert dressed_factorial_identity(0) == (Fraction(1, 6), Fraction(1, 6))

    def test_binomial_delta_values(self):
        assert signed_binomial_sum(0) == 1
        assert signed_binomial_sum(1) == 0
        assert signed_binomial_sum(7) == 0

    def test_exact_up_to_50(self):
        for n in range(51):
            lhs, rhs = zagier_factorial_identity(n)
            assert lhs == rhs, n
            lhs, rhs = dressed_factorial_identity(n)
            assert lhs == rhs, n
            assert signed_binomial_sum(n) == (1 if n == 0 else 0), n


class TestShuffleIdentities:
    def test_zagier_small(self):
        lhs, rhs = zagier_shuffle_identity(0)
        assert lhs == rhs == WordPolynomial({"": 1})
        lhs, rhs = zagier_shuffle_identity(1)
        assert lhs == rhs == WordPolynomial({"AABB": 4})

    def test_zagier_up_to_3(self):
        for n in range(4):
            lhs, rhs = zagier_shuffle_identity(n)
            assert lhs == rhs, n

    def test_dressed_small(self):
        lhs, rhs = dressed_shuffle_identity(0)
        assert lhs == rhs == WordPolynomial({"AB": 1})
        lhs, rhs = dressed_shuffle_identity(1)
        expected = 4 * WordPolynomial({"ABAABB": 1, "AABBAB": 1, "AABABB": 1})
        assert lhs == rhs == expected

    def test_dressed_up_to_3(self):
        for n in range(4):
            lhs, rhs = dressed_shuffle_identity(n)
            assert lhs == rhs, n


class TestEulerDecomposition:
    def test_examples(self):
        assert euler_decomposition(2, 2) == [
            (4, Composition((3, 1))),
            (2, Composition((2, 2))),
        ]
        assert sum(c for c, _ in euler_decomposition(2, 3)) == comb(5, 2)

    def test_symmetric_case(self):
        # for s == t the two sums coincide, so every multiplicity is even
        assert all(c % 2 == 0 for c, _ in euler_decomposition(3, 3))

    def test_validation(self):
        with pytest.raises(ValueError):
            euler_decomposition(1, 3)
        with pytest.raises(ValueError):
            euler_decomposition(3, 1)

    def test_matches_shuffle(self):
        for s in range(2, 5):
            for t in range(s, 9 - s):
                word_s = Word("A" * (s - 1) + "B")
                word_t = Word("A" * (t - 1) + "B")
                expected = shuffle_words(word_s, word_t).as_zeta_combination()
                assert euler_decomposition(s, t) == expected, (s, t)

    def test_total_multiplicity(self):
        for s in range(2, 7):
            for t in range(s, 13 - s):
                assert sum(c for c, _ in euler_decomposition(s, t)) == comb(s + t, s)


class TestOrbitCount:
    def test_grid(self):
        grid = {(n, m): orbit_count(n, m) for n in (1, 2, 3, 4) for m in (1, 2, 3)}
        assert [grid[(1, m)] for m in (1, 2, 3)] == [1, 2, 3]
        assert [grid[(2, m)] for m in (1, 2, 3)] == [1, 3, 5]
        assert [grid[(3, m)] for m in (1, 2, 3)] == [1, 4, 8]
        assert [grid[(4, m)] for m in (1, 2, 3)] == [1, 5, 12]

    def test_matches_brute_force(self):
        for n in range(0, 4):
            for total in range(0, 5):
                assert orbit_count(n, total) == orbit_count_brute(n, total), (n, total)

    def test_single_slot(self):
        for total in range(6):
            assert orbit_count(0, total) == 1
