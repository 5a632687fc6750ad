"""Test raising operators and symmetric function families."""
import pytest
from sympy import QQ

from schubertkit.exceptions import (
    HypothesisViolated,
    LengthMismatch,
    NonIntegralCoefficient,
    NonTerminating,
    NotStrict,
    NotSymmetric,
)
from schubertkit.polycore import GammaElement, q, var
from schubertkit.symfunc import (
    RaisingExpr,
    alternating_check,
    basis_expand,
    c_family,
    c_hat_correction,
    c_poly,
    double_schurP,
    double_schurP_expansion,
    expand_raising,
    flagged_schur,
    h_family,
    he_duality_sides,
    lr_coefficients,
    multi_schur_Q,
    phat_pfaffian,
    phat_star,
    q_family,
    raising_apply,
    schur_expand,
    schur_poly,
    schur_Q_pfaffian,
    schur_QP,
    schur_s,
    schur_s_raising,
    symmetrized_P,
    symmetrized_P_drop_zero,
    tableau_flagged_schur,
)


def test_expand_raising():
    """Test the finite expansion of prod (1 - R_ij)."""
    assert expand_raising((1, 1), RaisingExpr.schur(2)) == {
        ((1, 1), 0, 0, False): 1,
        ((2, 0), 0, 0, False): -1,
    }
    with pytest.raises(NonTerminating):
        expand_raising((1, 1), RaisingExpr.q(2), threshold=None)
    with pytest.raises(LengthMismatch):
        expand_raising((1,), RaisingExpr.schur(2))


def test_c_family(y1, z1):
    """Test the generating family ^k c^r_p."""
    assert c_poly(0, 0, 2) == q(2)
    assert c_poly(1, 1, 1) == q(1) + y1 - z1
    assert c_poly(1, 0, 2) == q(2) + q(1) * y1
    assert c_poly(0, 0, -1) == 0
    assert c_hat_correction(0, 1, -1, 2) == y1 * z1
    assert c_hat_correction(0, 1, 0, 2) == 0
    assert c_family(1, 1, 1) == GammaElement(q(1) + y1 - z1)


def test_raising_apply(y1, y2):
    """Test raising expressions applied to the h and q families."""
    assert raising_apply(RaisingExpr.schur(2), h_family(2, 0), (1, 1)) == y1 * y2
    assert raising_apply(RaisingExpr.q(2), q_family(), (2, 1)) == q(2) * q(1) - 2 * q(3)
    assert raising_apply(RaisingExpr.schur(1), h_family(2, 0), (2,)) == y1**2 + y1 * y2 + y2**2


def test_schur_functions(y1, y2, z1):
    """Test supersymmetric and plain Schur functions."""
    assert schur_s((1, 1), 2) == y1 * y2
    assert schur_s((2,), 1, 1) == y1**2 - y1 * z1
    assert schur_s_raising((2, 1), 2, 1) == schur_s((2, 1), 2, 1)
    assert schur_poly((1,), [y1, y2]) == y1 + y2


def test_flagged_schur():
    """Test the flagged determinant against tableaux."""
    for lam, rho in [((2, 1), (2, 3)), ((2, 2), (2, 3)), ((1, 1), (1, 2))]:
        assert flagged_schur(lam, rho=rho) == tableau_flagged_schur(lam, rho)
    with pytest.raises(LengthMismatch):
        flagged_schur((1, 1), rho=(1,))


def test_he_duality():
    """Test the h/e flagged duality on a small box."""
    for lam, mu, k, l in [((1,), (), 1, 1), ((1, 1), (), 1, 2), ((2, 1), (1,), 2, 2)]:
        left, right = he_duality_sides(lam, mu, k, l)
        assert left == right


def test_schur_q():
    """Test Q functions from raising operators and Pfaffians."""
    expected = GammaElement(q(2) * q(1) - 2 * q(3))
    assert schur_QP((2, 1)) == expected
    assert schur_Q_pfaffian((2, 1)) == expected
    assert schur_QP((1,), "P") == GammaElement.from_basis({(1,): 1}, "P")
    assert multi_schur_Q((0,), (0,), (2,)) == GammaElement(q(2))


def test_phat_forms_agree():
    """Test the hatted raising form against its Pfaffian."""
    assert phat_star((0, 0), (0, 0), (2, 1)) == phat_pfaffian((0, 0), (0, 0), (2, 1))
    assert phat_star((1, 1), (-1, 0), (2, 1)) == phat_pfaffian((1, 1), (-1, 0), (2, 1))


def test_double_p():
    """Test double Schur P functions."""
    assert double_schurP((1,)) == GammaElement(q(1) * QQ(1, 2))
    assert double_schurP((2, 1)) == double_schurP_expansion((2, 1))
    with pytest.raises(NotStrict):
        double_schurP((1, 1))
    assert alternating_check((2, 1), 2, 2)


def test_zero_part_reduction():
    """Test that a trailing zero part vanishes for odd l and is dropped for even l."""
    x1, x2 = var("x", 1), var("x", 2)
    assert symmetrized_P((0,), 1, 2) == 0
    assert symmetrized_P_drop_zero((0,), 1, 2) == 0
    assert symmetrized_P((2, 0), 2, 2) == (x1 + x2) ** 2
    assert symmetrized_P((2,), 1, 2) == (x1 + x2) ** 2
    assert symmetrized_P_drop_zero((2, 0), 2, 2) == (x1 + x2) ** 2
    assert symmetrized_P((3, 1, 0), 3, 4) == 0
    assert symmetrized_P((3, 2, 1, 0), 4, 4) == symmetrized_P_drop_zero((3, 2, 1, 0), 4, 4)
    with pytest.raises(HypothesisViolated):
        symmetrized_P_drop_zero((2, 1), 2, 2)
    with pytest.raises(HypothesisViolated):
        symmetrized_P_drop_zero((1, 0), 2, 3)
    with pytest.raises(LengthMismatch):
        symmetrized_P_drop_zero((1, 0), 3, 4)


def test_schur_expand(y1, y2):
    """Test Schur expansion by leading terms."""
    assert schur_expand(y1**2 + y1 * y2 + y2**2, "y", 2) == {(2,): 1}
    with pytest.raises(NotSymmetric):
        schur_expand(y1, "y", 2)


def test_basis_expand(q1):
    """Test Q and P expansions with integrality checks."""
    assert basis_expand(GammaElement(q1**2), "Q") == {(2,): 2}
    assert basis_expand(GammaElement(q1), "P") == {(1,): 2}
    with pytest.raises(NonIntegralCoefficient):
        basis_expand(GammaElement(q1 * QQ(1, 2)), "Q")
    assert basis_expand(2 * var("x", 1), "Q") == {(1,): 1}


def test_littlewood_richardson():
    """Test products of Schur functions."""
    assert lr_coefficients((1,), (1,)) == {(2,): 1, (1, 1): 1}
    assert lr_coefficients((2, 1), (1,)) == {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1}
    with pytest.raises(LengthMismatch):
        lr_coefficients((2,), (2,), bound=3)
