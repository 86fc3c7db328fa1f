import numpy as np
import pytest

from korbits.class_engine import compute_classes
from korbits.combinatorics import (Family, Permutation, SymmetricPairConfig, enumerate_fpf_involutions,
                                   enumerate_involutions, longest_element, rank_table)
from korbits.degeneracy import (FlagBasis, YDisciplineError, exact_rank, gram_matrix,
                                is_monomial_with_pattern, rank_conditions, rectangle_ranks,
                                representative_flag, to_chern_formula, verify_orbit_membership)
from korbits.polyring import PolyRing

O2 = SymmetricPairConfig(Family.O_ODD, 2)


def test_representative_flag_examples():
    b = Permutation.parse("(2,4)", 5)
    assert str(representative_flag(b, O2)) == "<e3, e1, e2+e4, e5, e2-e4>"
    b = Permutation.parse("(1,3)(2,5)", 5)
    assert str(representative_flag(b, O2)) == "<e1, e2, e5, e3, e4>"
    for fam in Family:
        cfg = SymmetricPairConfig(fam, 2)
        flag = representative_flag(longest_element(cfg.ambient), cfg)
        assert flag.as_permutation() is not None
        g = gram_matrix(flag, cfg)
        assert np.count_nonzero(np.fliplr(g) * np.eye(cfg.ambient)) == cfg.ambient


def test_gram_matrix_examples():
    g = gram_matrix(representative_flag(Permutation.parse("(2,4)", 5), O2), O2)
    want = np.zeros((5, 5), dtype=int)
    want[0, 0], want[1, 3], want[2, 2], want[3, 1], want[4, 4] = 1, 1, 2, 1, -2
    assert np.array_equal(g, want)
    g = gram_matrix(FlagBasis.coordinate(Permutation.identity(5)), O2)
    assert np.array_equal(g, np.fliplr(np.eye(5, dtype=int)))


def test_symplectic_form_sign():
    sp = SymmetricPairConfig(Family.SP, 2)
    g = gram_matrix(FlagBasis.coordinate(Permutation.identity(4)), sp)
    assert g[0, 3] == 1 and g[3, 0] == -1 and g[1, 2] == 1 and g[2, 1] == -1


def test_membership_examples():
    e = FlagBasis.coordinate(Permutation.identity(5))
    assert verify_orbit_membership(e, longest_element(5), O2)
    assert not verify_orbit_membership(e, Permutation.identity(5), O2)


def test_flag_basis_validation():
    with pytest.raises(ValueError):
        FlagBasis(((1, 0), (2, 0)))
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[0, 1], [1, 0]]) == 2


@pytest.mark.parametrize("fam", list(Family))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_every_representative(fam, n):
    cfg = SymmetricPairConfig(fam, n)
    params = enumerate_fpf_involutions(cfg.ambient) if fam is Family.SP \
        else enumerate_involutions(cfg.ambient)
    for b in params:
        flag = representative_flag(b, cfg)
        g = gram_matrix(flag, cfg)
        assert is_monomial_with_pattern(g, b)
        assert np.array_equal(rectangle_ranks(g), rank_table(b))


def test_rank_conditions():
    b = Permutation.parse("(2,3)", 3)
    assert rank_conditions(b, SymmetricPairConfig(Family.O_ODD, 1)) == [(2, 2, 1)]
    full = rank_conditions(b, SymmetricPairConfig(Family.O_ODD, 1), nontrivial=False)
    assert len(full) == 9


def test_chern_examples():
    o1 = SymmetricPairConfig(Family.O_ODD, 1)
    f = to_chern_formula(PolyRing(3, 1).parse("2(x1+x2)"), o1)
    assert f.to_text() == "2*c1(F_1) + 2*c1(F_2/F_1)"
    assert f.degree() == 1 and not f.uses_euler()
    so = SymmetricPairConfig(Family.SO_EVEN, 2)
    f = to_chern_formula(PolyRing(4, 2).parse("2(y1y2+x1x2)(x1+x2)"), so)
    assert f.to_text() == ("2*c1(F_1)^2*c1(F_2/F_1) + 2*c1(F_1)*c1(F_2/F_1)^2"
                           " + 2*e*c1(F_1) + 2*e*c1(F_2/F_1)")
    assert f.uses_euler() and f.degree() == 3
    assert "c_1(F_{2}/F_{1})" in f.to_latex()
    assert to_chern_formula(PolyRing(4, 2).one, so).to_text() == "1"
    with pytest.raises(YDisciplineError):
        to_chern_formula(PolyRing(4, 2).parse("y1 x1"), so)


@pytest.mark.parametrize("fam", list(Family))
def test_chern_preserves_degree(fam):
    cfg = SymmetricPairConfig(fam, 2)
    _, t = compute_classes(cfg)
    for b, p in t.entries.items():
        assert to_chern_formula(p, cfg).degree() == p.degree()
