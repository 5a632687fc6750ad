"""Test Weyl group elements, partitions and flags."""
import pytest

from schubertkit.const import BOX
from schubertkit.exceptions import (
    BoundExceeded,
    IllegalGenerator,
    InvalidElement,
    InvalidFlag,
    KindMismatch,
    NotGrassmannian,
    NotTypedKStrict,
)
from schubertkit.weyl import (
    FlagSequence,
    Kind,
    KStrictPartition,
    TypedKStrictPartition,
    WeylElement,
    check_d_flag,
    compose,
    conjugate,
    coset_data,
    descents,
    generator,
    grassmannian_bijection,
    grassmannian_element,
    grassmannian_elements,
    inverse,
    is_increasing_up_to,
    iter_group,
    k_strict_partitions,
    length,
    longest_element,
    longest_grassmannian,
    minimal_flags,
    parse_generator,
    partitions_inside,
    reduced_factorizations,
    reduced_words,
    shift,
    special_elements,
    star,
    typed_partitions,
    unshift,
)


def test_parse_and_trim():
    """Test parsing windows and trimming trailing fixed points."""
    assert WeylElement.parse(Kind.BC, "2,-1").window == (2, -1)
    assert WeylElement(Kind.A, (2, 1, 3)).window == (2, 1)
    assert WeylElement.parse(Kind.D, "e").is_identity()
    assert str(WeylElement(Kind.A, (1, 2))) == "e"


@pytest.mark.parametrize(
    ("kind", "window"),
    [
        (Kind.A, (1, -2)),
        (Kind.D, (-1, 2)),
        (Kind.BC, (1, 1)),
    ],
)
def test_invalid_elements(kind, window):
    """Test that malformed windows are rejected."""
    with pytest.raises(InvalidElement):
        WeylElement(kind, window)


def test_parse_garbage():
    """Test that a non-numeric window fails to parse."""
    with pytest.raises(InvalidElement):
        WeylElement.parse(Kind.A, "2,x")


def test_generators():
    """Test simple reflections and their legality per kind."""
    assert generator(Kind.BC, 0).window == (-1,)
    assert generator(Kind.D, BOX).window == (-2, -1)
    assert generator(Kind.A, 2).window == (1, 3, 2)
    with pytest.raises(IllegalGenerator):
        generator(Kind.A, 0)
    with pytest.raises(IllegalGenerator):
        generator(Kind.BC, BOX)
    assert parse_generator("b") == BOX
    with pytest.raises(IllegalGenerator):
        parse_generator("x")


def test_compose_and_inverse():
    """Test group multiplication."""
    w = WeylElement(Kind.BC, (2, -3, 1))
    assert compose(w, inverse(w)).is_identity()
    assert w * generator(Kind.BC, 0) == WeylElement(Kind.BC, (-2, -3, 1))
    with pytest.raises(KindMismatch):
        compose(w, generator(Kind.A, 1))


def test_lengths():
    """Test Coxeter lengths of generators and longest elements."""
    assert length(generator(Kind.BC, 0)) == 1
    assert length(generator(Kind.D, BOX)) == 1
    assert length(longest_element(Kind.A, 3)) == 3
    assert length(longest_element(Kind.BC, 2)) == 4
    assert length(longest_element(Kind.D, 2)) == 2
    assert longest_element(Kind.D, 3).window == (1, -2, -3)
    assert length(longest_element(Kind.D, 3)) == 6


def test_group_sizes():
    """Test enumeration of the finite groups."""
    assert len(iter_group(Kind.A, 3)) == 6
    assert len(iter_group(Kind.BC, 2)) == 8
    assert len(iter_group(Kind.D, 3)) == 24
    lengths = [length(w) for w in iter_group(Kind.BC, 2)]
    assert lengths == sorted(lengths)


def test_descents():
    """Test right and left descent sets."""
    w = WeylElement(Kind.A, (2, 3, 1))
    assert descents(w) == {2}
    assert descents(w, "left") == {1}
    assert descents(generator(Kind.D, BOX)) == {BOX}


def test_reduced_words():
    """Test reduced word enumeration and its bound."""
    assert reduced_words(WeylElement(Kind.A, (2, 3, 1))) == [(1, 2)]
    assert reduced_words(longest_element(Kind.A, 3)) == [(1, 2, 1), (2, 1, 2)]
    assert reduced_words(generator(Kind.D, BOX)) == [(BOX,)]
    with pytest.raises(BoundExceeded):
        reduced_words(longest_element(Kind.A, 3), limit=1)


def test_partitions():
    """Test partition helpers."""
    assert conjugate((3, 1)) == (2, 1, 1)
    assert partitions_inside((1, 1)) == [(), (1,), (1, 1)]
    assert set(k_strict_partitions(2, 1)) == {(2,), (1, 1)}
    assert k_strict_partitions(2, 0) == [(2,)]
    assert len(typed_partitions(1, 1)) == 2


def test_typed_partition_tags():
    """Test type tags of typed k-strict partitions."""
    shape = TypedKStrictPartition.parse("2,1;type=1", 1)
    assert shape.parts == (2, 1)
    assert str(shape) == "2,1;type=1"
    with pytest.raises(NotTypedKStrict):
        TypedKStrictPartition((1,), 1, 0)
    with pytest.raises(NotTypedKStrict):
        TypedKStrictPartition((2,), 1, 1)


def test_flags():
    """Test flag sequences and their validation."""
    flags = FlagSequence.parse(Kind.D, "b,2")
    assert flags.entries == (BOX, 2)
    assert flags.numeric == (0, 2)
    assert str(flags) == "b,2"
    with pytest.raises(InvalidFlag):
        FlagSequence(Kind.A, (2, 1))
    with pytest.raises(InvalidFlag):
        FlagSequence(Kind.A, (0,))
    with pytest.raises(InvalidFlag):
        check_d_flag(FlagSequence(Kind.D, (1, 2)))


def test_minimal_flags():
    """Test the smallest compatible flag pair."""
    a, b = minimal_flags(WeylElement(Kind.A, (2, 1)))
    assert (a.entries, b.entries) == ((1,), (1,))
    a, b = minimal_flags(generator(Kind.BC, 0))
    assert (a.entries, b.entries) == ((0,), (0,))
    a, b = minimal_flags(generator(Kind.D, BOX))
    assert (a.entries, b.entries) == ((BOX,), (BOX,))


def test_compatible_factorizations():
    """Test flagged reduced factorizations."""
    w = WeylElement(Kind.A, (2, 1))
    a, b = minimal_flags(w)
    assert reduced_factorizations(w, flags=(a, b)) == [(w,)]
    assert len(reduced_factorizations(w, 2)) == 2


def test_increasing_up_to():
    """Test the increasing-up-to-k condition per kind."""
    assert is_increasing_up_to(WeylElement(Kind.BC, (2, 3, 1)), 2)
    assert not is_increasing_up_to(WeylElement(Kind.BC, (-1, 2)), 1)
    assert is_increasing_up_to(WeylElement(Kind.D, (-2, 3, -1)), 2)
    assert not is_increasing_up_to(WeylElement(Kind.A, (3, 1, 2)), 2)


def test_shift_and_star():
    """Test shifting into 1_m x S and conjugating by w_0."""
    w = WeylElement(Kind.A, (2, 1))
    assert shift(w, 1).window == (1, 3, 2)
    assert unshift(shift(w, 1), 1) == w
    assert star(w, 3).window == (1, 3, 2)
    with pytest.raises(InvalidElement):
        unshift(w, 1)


def test_grassmannian_shapes():
    """Test the Grassmannian bijection in each kind."""
    assert grassmannian_bijection(WeylElement(Kind.A, (1, 3, 2)), 2) == (1,)
    assert grassmannian_bijection(generator(Kind.BC, 0), 0) == KStrictPartition((1,), 0)
    with pytest.raises(NotGrassmannian):
        grassmannian_bijection(WeylElement(Kind.A, (3, 2, 1)), 1)


@pytest.mark.parametrize(("kind", "k"), [(Kind.A, 2), (Kind.BC, 1), (Kind.D, 1), (Kind.D, BOX)])
def test_grassmannian_bijection_inverts(kind, k):
    """Test that shapes map back to their Grassmannian elements."""
    for w in grassmannian_elements(kind, k, 3):
        assert grassmannian_element(grassmannian_bijection(w, k), kind, k) == w


def test_special_elements():
    """Test Grassmannian maxima and coset data."""
    assert special_elements(Kind.A, 3).window == (3, 2, 1)
    assert special_elements(Kind.BC, 2).window == (-1, -2)
    assert special_elements(Kind.D, 3).window == (1, -2, -3)
    assert special_elements(Kind.BC, 2, k=1) == longest_grassmannian(Kind.BC, 1, 2)
    assert special_elements(Kind.BC, 2, flags=FlagSequence(Kind.BC, (0,))).window == (-2, -1)
    assert longest_grassmannian(Kind.BC, 1, 2).window == (1, -2)
    assert coset_data(Kind.BC, 2, FlagSequence(Kind.BC, (0,))) == ((2, 1), (-1, 0), (0, 0))
