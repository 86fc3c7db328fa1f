import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from korbits.combinatorics import (Family, Permutation, SignedPermutation, SymmetricPairConfig,
                                   absolute_value, embed_signed, enumerate_fpf_involutions,
                                   enumerate_involutions, enumerate_signed_permutations,
                                   length, longest_element, permutation_from_rank_table,
                                   rank_numbers, rank_table, weyl_k_fixed_points)


def test_config_ambient():
    assert SymmetricPairConfig(Family.O_ODD, 2).ambient == 5
    for fam in (Family.O_EVEN, Family.SO_EVEN, Family.SP):
        assert SymmetricPairConfig(fam, 3).ambient == 6
    with pytest.raises(ValueError):
        SymmetricPairConfig(Family.SP, 0)


def test_family_parse():
    assert Family.parse("so-even") is Family.SO_EVEN
    assert Family.parse("O_ODD") is Family.O_ODD
    with pytest.raises(ValueError):
        Family.parse("gl")


def test_length_examples():
    assert length(Permutation.identity(4)) == 0
    assert length(Permutation.parse("2314")) == 2
    assert length(longest_element(5)) == 10
    assert Permutation.parse("54321") == longest_element(5)


def test_permutation_parsing_round_trip():
    p = Permutation.parse("(1,4)(2,3)", 4)
    assert p.one_line() == "4321"
    assert p.cycle_string() == "(1,4)(2,3)"
    assert Permutation.parse("id", 3).cycle_string() == "id"
    assert Permutation.parse("2 3 1 4") == Permutation.parse("2314")
    with pytest.raises(ValueError):
        Permutation.parse("(1,5)", 4)
    with pytest.raises(ValueError):
        Permutation.parse("1134")


def test_simple_moves():
    b = Permutation.parse("(2,3)", 3)
    # left multiplication exchanges values, right exchanges positions
    assert b.left_simple(1).one_line() == "231"
    assert b.right_simple(1).one_line() == "312"
    assert b.conjugate_simple(1) == Permutation.parse("(1,3)", 3)


def test_embed_signed_examples():
    for fam in Family:
        cfg = SymmetricPairConfig(fam, 3)
        assert embed_signed(SignedPermutation((1, 2, 3)), cfg) == Permutation.identity(cfg.ambient)
    cfg = SymmetricPairConfig(Family.SO_EVEN, 2)
    assert embed_signed(SignedPermutation((1, -2)), cfg) == Permutation.from_cycles([(2, 3)], 4)
    cfg = SymmetricPairConfig(Family.O_ODD, 3)
    assert embed_signed(SignedPermutation.parse("1 3- 2-"), cfg).one_line() == "1564237"


def test_signed_parse_forms():
    want = SignedPermutation((1, -3, -2))
    assert SignedPermutation.parse("1 3- 2-") == want
    assert SignedPermutation.parse("13-2-") == want
    assert SignedPermutation.parse("1,-3,-2") == want
    assert want.sign_changes() == 2


def test_absolute_value():
    assert absolute_value(SignedPermutation.parse("1 3- 2-")).one_line() == "132"
    assert absolute_value(SignedPermutation((1, 2))) == Permutation.identity(2)
    assert absolute_value(SignedPermutation((-1, -2, -3))).one_line() == "123"


@pytest.mark.parametrize("fam", list(Family))
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_embedding_injective_and_symmetric(fam, n):
    cfg = SymmetricPairConfig(fam, n)
    N = cfg.ambient
    images = [embed_signed(s, cfg) for s in enumerate_signed_permutations(n)]
    assert len(set(images)) == len(images) == 2 ** n * len(list(itertools.permutations(range(n))))
    for sigma in images:
        for i in range(1, N + 1):
            assert sigma(N + 1 - i) == N + 1 - sigma(i)
        if fam is Family.O_ODD:
            assert sigma(n + 1) == n + 1


def test_embed_rank_mismatch():
    with pytest.raises(ValueError):
        embed_signed(SignedPermutation((1, 2)), SymmetricPairConfig(Family.SP, 3))


def test_rank_number_examples():
    b = Permutation.parse("(2,4)", 5)
    assert rank_numbers(b, 2, 1) == 1
    assert rank_numbers(longest_element(5), 2, 3) == 0
    e = Permutation.identity(5)
    assert all(rank_numbers(e, i, j) == min(i, j) for i in range(1, 6) for j in range(1, 6))
    with pytest.raises(ValueError):
        rank_numbers(Permutation.parse("231"), 1, 1)


def test_enumeration_counts():
    assert [len(enumerate_involutions(N)) for N in range(1, 7)] == [1, 2, 4, 10, 26, 76]
    assert [len(enumerate_fpf_involutions(2 * m)) for m in range(1, 5)] == [1, 3, 15, 105]
    assert [b.cycle_string() for b in enumerate_fpf_involutions(4)] == \
        ["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]
    with pytest.raises(ValueError):
        enumerate_fpf_involutions(5)


def test_enumeration_is_lexicographic():
    for N in range(1, 7):
        words = [b.word for b in enumerate_involutions(N)]
        assert words == sorted(words)
        assert all(Permutation(w).is_involution() for w in words)


def test_weyl_k_fixed_points_examples():
    assert len(weyl_k_fixed_points(SymmetricPairConfig(Family.O_ODD, 1))) == 2
    so = SymmetricPairConfig(Family.SO_EVEN, 2)
    plus, minus = weyl_k_fixed_points(so, "+"), weyl_k_fixed_points(so, "-")
    assert len(plus) == len(minus) == 4 and not set(plus) & set(minus)
    assert len(weyl_k_fixed_points(SymmetricPairConfig(Family.SP, 2))) == 8


@pytest.mark.parametrize("N", range(1, 7))
def test_rank_table_invariants_and_round_trip(N):
    for b in enumerate_involutions(N):
        table = rank_table(b)
        padded = np.pad(table, ((1, 0), (1, 0)))
        assert set(np.unique(np.diff(padded, axis=0))) <= {0, 1}
        assert set(np.unique(np.diff(padded, axis=1))) <= {0, 1}
        assert permutation_from_rank_table(table) == b
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                assert table[i - 1, j - 1] == rank_numbers(b, i, j)


@settings(max_examples=200, deadline=None)
@given(st.permutations(list(range(1, 8))))
def test_inverse_and_length(word):
    p = Permutation(tuple(word))
    assert p * p.inverse() == Permutation.identity(7)
    assert length(p) == length(p.inverse())
