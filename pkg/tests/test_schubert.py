"""Test Schubert polynomials and their companion formulas."""
import pytest
from sympy import QQ

from schubertkit.const import RING_GAMMA_PRIME
from schubertkit.exceptions import (
    HypothesisViolated,
    InvalidElement,
    InvalidOption,
    NotIncreasing,
)
from schubertkit.polycore import RING, GammaElement, q, var
from schubertkit.schubert import (
    apply_divided_difference,
    coerce_element,
    divided_difference_target,
    duality_identities,
    eta,
    full_chain_coefficient,
    grassmannian_polynomial,
    in_coinvariant_ideal,
    key_identities,
    reverse_schubert,
    reverse_schubert_factored,
    reverse_schubert_flagged,
    schubert,
    splitting_expand,
    splitting_reconstruct,
    split_chain_coefficient,
    splitting_sum,
    stanley,
    stanley_coefficients,
    stanley_from_coefficients,
    theta,
    value_to_json,
)
from schubertkit.symfunc import schur_QP
from schubertkit.weyl import (
    FlagSequence,
    Kind,
    KStrictPartition,
    TypedKStrictPartition,
    WeylElement,
    grassmannian_element,
    iter_group,
    k_strict_partitions,
    minimal_flags,
)


def test_type_a(y1, y2, z1):
    """Test small double and single Schubert polynomials of type A."""
    assert schubert("A", "2,1").value == y1 - z1
    assert schubert("A", "2,3,1", double=False).value == y1 * y2
    assert schubert("A", "2,3,1").value == (y1 - z1) * (y2 - z1)
    assert schubert("A", "e").value == RING.one


def test_type_c(y1, y2, z1, w231):
    """Test small type C Schubert polynomials."""
    expected = q(2) + q(1) * (y1 + y2 - z1) + (y1 - z1) * (y2 - z1)
    assert schubert("C", w231).value == GammaElement(expected)
    assert schubert("C", "1,3,2", double=False).value == GammaElement(q(1) + y1 + y2)
    assert schubert("C", "-1").value == GammaElement(q(1))


def test_types_b_and_d():
    """Test the P_1 polynomials of s_0 in type B and s_b in type D."""
    p1 = GammaElement.from_basis({(1,): 1}, "P")
    sb = schubert("D", "-2,-1")
    assert sb.value == p1
    assert sb.value.ring_tag == RING_GAMMA_PRIME
    assert schubert("B", "-1").value == p1


def test_bad_input(w231):
    """Test type and element validation."""
    with pytest.raises(InvalidOption):
        schubert("E", "2,1")
    with pytest.raises(InvalidElement):
        schubert("A", "-1")
    with pytest.raises(InvalidElement):
        schubert("C", w231, rank=2)
    assert coerce_element("C", WeylElement(Kind.A, (2, 1))).kind is Kind.BC


def test_stability(w231):
    """Test that the polynomial does not depend on the rank used."""
    assert schubert("C", w231, rank=3).value == schubert("C", w231, rank=4).value


def test_divided_differences_type_a():
    """Test d_i on both sides in type A."""
    sp = schubert("A", "2,1")
    assert apply_divided_difference(sp, 1) == RING.one
    assert apply_divided_difference(sp, 1, "z") == RING.one
    assert divided_difference_target(sp.element, 1).is_identity()
    assert divided_difference_target(WeylElement(Kind.A, ()), 1) is None


def test_divided_differences_type_c():
    """Test the divided difference recursion over the whole rank 2 group."""
    for w in iter_group(Kind.BC, 2):
        sp = schubert("C", w)
        for i in (0, 1):
            for side in ("y", "z"):
                target = divided_difference_target(w, i, side)
                expected = schubert("C", target).value if target is not None else 0
                assert apply_divided_difference(sp, i, side) == expected


def test_divided_difference_hypotheses():
    """Test that unsupported divided differences are refused."""
    with pytest.raises(HypothesisViolated):
        apply_divided_difference(schubert("B", "-1"), 0)
    with pytest.raises(HypothesisViolated):
        apply_divided_difference(schubert("A", "2,1", double=False), 1, "z")


def test_stanley_functions(y1, z1, w231):
    """Test Stanley functions in each variant."""
    assert stanley("A", "2,1").value == y1
    assert stanley("A", "2,1", "double").value == y1 - z1
    assert stanley("C", "-1").value == GammaElement(q(1))
    restricted = stanley("C", w231, "restricted_mixed", 1, 1)
    expected = q(2) + q(1) * (y1 - z1) - (y1 - z1) * z1
    assert restricted.value == GammaElement(expected)
    assert restricted.to_json()["k"] == 1


def test_stanley_hypotheses():
    """Test variant validation and the increasing condition."""
    with pytest.raises(InvalidOption):
        stanley("C", "-1", "triple")
    with pytest.raises(NotIncreasing):
        stanley("C", "-1", "restricted_mixed", 1, 0)


def test_theta(y1, z1):
    """Test theta polynomials of small shapes."""
    assert theta((1,), 1) == GammaElement(q(1) + y1 - z1)
    assert theta((2,), 1, double=False) == GammaElement(q(2) + q(1) * y1)
    assert theta((1, 1), 1, double=False) == GammaElement(q(2) + q(1) * y1 + y1**2)
    assert theta((2, 1), 0, double=False) == schur_QP((2, 1))
    assert theta(()) == 1


def test_eta():
    """Test eta polynomials that reduce to P functions."""
    p1 = GammaElement.from_basis({(1,): 1}, "P")
    assert eta((1,), 0) == p1
    assert eta((1,), 0, double=False) == p1
    assert eta(TypedKStrictPartition((), 1)).ring_tag == RING_GAMMA_PRIME


def test_theta_is_grassmannian_schubert():
    """Test theta polynomials against Schubert polynomials of 1-Grassmannian elements."""
    for weight in (1, 2):
        for parts in k_strict_partitions(weight, 1):
            shape = KStrictPartition(parts, 1)
            w = grassmannian_element(shape, Kind.BC, 1)
            assert schubert("C", w).value == theta(shape)
            assert grassmannian_polynomial(w, 1) == theta(shape)


def test_stanley_coefficients(w231):
    """Test Schur, theta and eta expansions of Stanley functions."""
    assert stanley_coefficients("A", "2,1") == {(1,): 1}
    assert stanley_coefficients("A", "3,2,1") == {(2, 1): 1}
    assert stanley_coefficients("C", w231, 1) == {KStrictPartition((2,), 1): 1}
    assert stanley_coefficients("C", "-1", 0) == {KStrictPartition((1,), 0): 1}
    restricted = stanley("C", w231, "restricted_mixed", 1, 0).value
    assert stanley_from_coefficients("C", w231, 1) == restricted
    with pytest.raises(InvalidOption):
        stanley_coefficients("B", "-1")
    with pytest.raises(NotIncreasing):
        stanley_coefficients("C", "-1", 1)


def test_splitting_type_a(y1, z1):
    """Test the splitting formula of a transposition."""
    a = b = FlagSequence(Kind.A, (1,))
    expansion = splitting_expand("A", "2,1", a, b)
    assert expansion == {((1,),): 1}
    assert splitting_reconstruct("A", "2,1", a, b, expansion) == y1 - z1
    assert splitting_sum("A", "2,1", a, b) == y1 - z1


def test_splitting_type_c():
    """Test the splitting formula of s_0 with its minimal flags."""
    w = WeylElement(Kind.BC, (-1,))
    a, b = minimal_flags(w)
    expansion = splitting_expand("C", w, a, b)
    assert expansion == {(KStrictPartition((1,), 0),): 1}
    assert splitting_sum("C", w, a, b) == schubert("C", w).value
    with pytest.raises(HypothesisViolated):
        splitting_expand("C", "2,1", FlagSequence(Kind.BC, (1,)), FlagSequence(Kind.BC, (1,)))


def test_reverse_polynomials(y1, z1):
    """Test the reverse double Schubert polynomial three ways."""
    w1 = var("w", 1)
    assert reverse_schubert("2,1") == y1 - z1
    assert reverse_schubert("e") == RING.one
    assert reverse_schubert_flagged(2) == y1 - z1
    for compute in (reverse_schubert, reverse_schubert_factored):
        assert compute("2,1", 1) == w1 + y1 - z1
    assert reverse_schubert_flagged(2, 1) == w1 + y1 - z1
    assert reverse_schubert("3,2,1", 1) == reverse_schubert_flagged(3, 1)


def test_coinvariant_ideal(y1, y2):
    """Test membership in the ideal of symmetric polynomials without constant term."""
    assert in_coinvariant_ideal(y1 + y2, 2)
    assert in_coinvariant_ideal(y1 * y2, 2)
    assert not in_coinvariant_ideal(y1, 2)
    assert not in_coinvariant_ideal(RING.one, 2)


def test_duality():
    """Test the duality involution for n = 3."""
    for identity in duality_identities(3):
        assert identity.agree(identity.left(), identity.right()), identity.inputs


def test_split_chain(y1, y2):
    """Test regrouping A_1(y_1)...A_1(y_n) into A and B factors."""
    s1 = WeylElement(Kind.A, (2, 1))
    assert full_chain_coefficient(s1, 2) == y1 + y2
    assert split_chain_coefficient(s1, 2) == y1 + y2
    for w in iter_group(Kind.A, 3):
        assert split_chain_coefficient(w, 3) == full_chain_coefficient(w, 3), w
        if not w.is_identity():
            assert in_coinvariant_ideal(full_chain_coefficient(w, 3), 3), w


@pytest.mark.parametrize(
    ("type_letter", "w", "k", "l"),
    [
        ("A", "1,3,2", 1, 1),
        ("A", "2,4,1,3", 2, 0),
        ("C", "2,3,1", 1, 1),
        ("C", "-1", 0, 0),
        ("D", "-2,-1", 0, 0),
    ],
)
def test_key_identities(type_letter, w, k, l):
    """Test the key and restricted Stanley identities on small elements."""
    identities = key_identities(type_letter, w, k, l)
    assert identities
    for identity in identities:
        assert identity.agree(identity.left(), identity.right()), identity.name


def test_json_values(y1, z1):
    """Test the JSON form of polynomial values."""
    data = value_to_json(y1 - z1)
    assert data["terms"] == [{"coeff": "1", "y": [1]}, {"coeff": "-1", "z": [1]}]
    gamma = value_to_json(GammaElement(q(1) * QQ(1, 2), RING_GAMMA_PRIME))
    assert gamma["basis"] == "P"
    assert gamma["terms"] == [{"coeff": "1", "P": [1]}]
