"""Test fixtures for schubertkit."""
import pytest

from schubertkit.config import reset_options
from schubertkit.polycore import q, var
from schubertkit.weyl import Kind, WeylElement


@pytest.fixture(autouse=True)
def clean_options():
    """Start every test from default options."""
    reset_options()
    yield
    reset_options()


@pytest.fixture
def y1():
    return var("y", 1)


@pytest.fixture
def y2():
    return var("y", 2)


@pytest.fixture
def z1():
    return var("z", 1)


@pytest.fixture
def q1():
    return q(1)


@pytest.fixture
def w231():
    """The permutation 231 as an element of the hyperoctahedral group."""
    return WeylElement(Kind.BC, (2, 3, 1))
