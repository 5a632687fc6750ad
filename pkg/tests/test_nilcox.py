"""Test the nilCoxeter algebra."""
import pytest

from schubertkit.const import BOX
from schubertkit.exceptions import IllegalGenerator, KindMismatch
from schubertkit.nilcox import (
    FACTOR_A,
    FACTOR_A_TILDE,
    FACTOR_B,
    FACTOR_C,
    FACTOR_D,
    NilCoxElement,
    chain,
    factor,
    factor_word,
    nc_mul,
)
from schubertkit.polycore import RING, var
from schubertkit.weyl import Kind, WeylElement, compose, generator, length


def test_factor_words():
    """Test the generator order inside each factor."""
    assert factor_word(Kind.A, FACTOR_A, 1, 3) == [(2, 1), (1, 1)]
    assert factor_word(Kind.A, FACTOR_A_TILDE, 1, 3) == [(1, -1), (2, -1)]
    assert factor_word(Kind.BC, FACTOR_C, 0, 2) == [(1, 1), (0, 1), (0, 1), (1, 1)]
    assert factor_word(Kind.D, FACTOR_D, 0, 2) == [(1, 1), (BOX, 1)]
    assert factor_word(Kind.A, FACTOR_B, 1, 3) == [(2, 1), (1, 1)]
    assert factor_word(Kind.A, FACTOR_B, 2, 3) == [(1, 1)]
    with pytest.raises(IllegalGenerator):
        factor_word(Kind.A, FACTOR_A, 0, 3)
    with pytest.raises(IllegalGenerator):
        factor_word(Kind.A, FACTOR_C, 0, 3)
    with pytest.raises(IllegalGenerator):
        factor_word(Kind.A, FACTOR_B, 0, 3)


def test_basis_products():
    """Test u_v u_w = u_vw when lengths add and 0 otherwise."""
    s1 = NilCoxElement.basis(generator(Kind.A, 1), 3)
    s2 = NilCoxElement.basis(generator(Kind.A, 2), 3)
    assert (s1 * s1).terms == {}
    product = s1 * s2
    assert product.terms == {compose(generator(Kind.A, 1), generator(Kind.A, 2)): RING.one}
    with pytest.raises(KindMismatch):
        s1 * NilCoxElement.one(Kind.BC, 3)
    with pytest.raises(KindMismatch):
        nc_mul(s1, NilCoxElement.one(Kind.A, 4))


def test_product_of_sums(y1):
    """Test (1 + y1 u_0)(1 + y1 u_0) = 1 + 2 y1 u_0 in type C."""
    s0 = generator(Kind.BC, 0)
    xi = NilCoxElement(Kind.BC, 1, {WeylElement.identity(Kind.BC): RING.one, s0: y1})
    product = nc_mul(xi, xi)
    assert product.extract(s0) == 2 * y1
    assert product.extract(WeylElement.identity(Kind.BC)) == 1
    assert len(product.terms) == 2


def test_linear_factors(y1):
    """Test coefficients of single factors."""
    assert factor(Kind.A, FACTOR_A, 1, y1, 2).extract(generator(Kind.A, 1)) == y1
    x1 = var("x", 1)
    assert factor(Kind.BC, FACTOR_C, 0, x1, 1).extract(generator(Kind.BC, 0)) == 2 * x1


def test_chain_targets(y1, y2):
    """Test that target pruning keeps the wanted coefficient."""
    w = WeylElement(Kind.A, (2, 3, 1))
    factors = [(FACTOR_A, 1, y1), (FACTOR_A, 2, y2)]
    full = chain(Kind.A, 3, factors)
    pruned = chain(Kind.A, 3, factors, targets=[w])
    assert full.extract(w) == pruned.extract(w) == y1 * y2
    assert len(pruned.terms) < len(full.terms)


def test_length_cap(y1):
    """Test that capped elements drop long terms."""
    xi = chain(Kind.A, 3, [(FACTOR_A, 1, y1)], length_cap=1)
    assert all(length(w) <= 1 for w in xi.terms)
    assert xi.extract(WeylElement(Kind.A, (3, 1, 2))) == RING.zero


def test_dump(y1):
    """Test the sorted text listing."""
    xi = factor(Kind.A, FACTOR_A, 1, y1, 2)
    assert xi.dump() == [("e", "1"), ("2,1", "y1")]
