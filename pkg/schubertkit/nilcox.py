"""NilCoxeter algebras and products of their linear factors."""
from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .const import BOX
from .exceptions import IllegalGenerator, InvalidElement, KindMismatch
from .polycore import RING, Poly, format_poly
from .weyl import (
    Kind,
    WeylElement,
    check_generator,
    compose,
    generator,
    length,
    prefixes,
    sort_key,
)

_LOGGER = logging.getLogger(__name__)

FACTOR_A = "A"
FACTOR_A_TILDE = "Atilde"
FACTOR_C = "C"
FACTOR_D = "D"
FACTOR_B = "B"
FACTOR_SPECS = (FACTOR_A, FACTOR_A_TILDE, FACTOR_C, FACTOR_D, FACTOR_B)


@dataclass
class NilCoxElement:
    """A finitely supported sum of basis elements u_w with polynomial coefficients."""

    kind: Kind
    rank: int
    terms: dict[WeylElement, Poly] = field(default_factory=dict)
    length_cap: int | None = None

    def __post_init__(self) -> None:
        self.kind = Kind(self.kind)
        for w in self.terms:
            if w.kind is not self.kind:
                raise KindMismatch(f"{w} is of kind {w.kind.value}, not {self.kind.value}")
            if w.rank > self.rank:
                raise InvalidElement(f"{w} is outside the rank {self.rank} group")
        self.terms = {
            w: f
            for w, f in self.terms.items()
            if f and (self.length_cap is None or length(w) <= self.length_cap)
        }

    @classmethod
    def one(cls, kind: Kind, rank: int, length_cap: int | None = None) -> NilCoxElement:
        return cls(Kind(kind), rank, {WeylElement.identity(kind): RING.one}, length_cap)

    @classmethod
    def basis(cls, w: WeylElement, rank: int, coeff: Poly | int = 1) -> NilCoxElement:
        return cls(w.kind, rank, {w: RING(coeff)})

    def __mul__(self, other: NilCoxElement) -> NilCoxElement:
        return nc_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NilCoxElement):
            return NotImplemented
        return self.kind is other.kind and self.terms == other.terms

    def extract(self, w: WeylElement) -> Poly:
        return extract(self, w)

    def dump(self) -> list[tuple[str, str]]:
        """(window, polynomial) pairs sorted by length then window."""
        return [(str(w), format_poly(self.terms[w])) for w in sorted(self.terms, key=sort_key)]


def nc_mul(a: NilCoxElement, b: NilCoxElement) -> NilCoxElement:
    """Product in the u_w basis: u_v u_w = u_vw when lengths add, else 0."""
    if a.kind is not b.kind or a.rank != b.rank:
        raise KindMismatch(
            f"Cannot multiply {a.kind.value}_{a.rank} by {b.kind.value}_{b.rank}"
        )
    caps = [c for c in (a.length_cap, b.length_cap) if c is not None]
    cap = min(caps) if caps else None
    terms: dict[WeylElement, Poly] = {}
    for v, f in a.terms.items():
        lv = length(v)
        for w, g in b.terms.items():
            vw = compose(v, w)
            if length(vw) != lv + length(w):
                continue
            if cap is not None and length(vw) > cap:
                continue
            terms[vw] = terms.get(vw, RING.zero) + f * g
    return NilCoxElement(a.kind, a.rank, terms, cap)


def extract(xi: NilCoxElement, w: WeylElement) -> Poly:
    """The coefficient of u_w in xi."""
    return xi.terms.get(w, RING.zero)


def times_linear(
    xi: NilCoxElement,
    g: int,
    c: Poly,
    allowed: frozenset[WeylElement] | None = None,
) -> NilCoxElement:
    """xi (1 + c u_g), keeping only the allowed support."""
    s = generator(xi.kind, g)
    terms = dict(xi.terms)
    for w, f in xi.terms.items():
        v = compose(w, s)
        if length(v) != length(w) + 1:
            continue
        if allowed is not None and v not in allowed:
            continue
        if xi.length_cap is not None and length(v) > xi.length_cap:
            continue
        updated = terms.get(v, RING.zero) + c * f
        if updated:
            terms[v] = updated
        else:
            terms.pop(v, None)
    return NilCoxElement(xi.kind, xi.rank, terms, xi.length_cap)


def factor_word(kind: Kind, name: str, i: int, rank: int) -> list[tuple[int, int]]:
    """Generator indices and signs of a factor, left to right."""
    kind = Kind(kind)
    n = rank
    if name == FACTOR_A:
        if i < 1:
            raise IllegalGenerator(f"A_{i} is not defined")
        return [(g, 1) for g in range(n - 1, i - 1, -1)]
    if name == FACTOR_A_TILDE:
        if i < 1:
            raise IllegalGenerator(f"A~_{i} is not defined")
        return [(g, -1) for g in range(i, n)]
    if name == FACTOR_B:
        if i < 1:
            raise IllegalGenerator(f"B_{i} is not defined")
        return [(g, 1) for g in range(n - i, 0, -1)]
    if name == FACTOR_C:
        check_generator(kind, 0)
        down = list(range(n - 1, 0, -1))
        return [(g, 1) for g in down + [0, 0] + down[::-1]]
    if name == FACTOR_D:
        check_generator(kind, BOX)
        if n < 2:
            return []
        return [(g, 1) for g in list(range(n - 1, 0, -1)) + [BOX] + list(range(2, n))]
    raise IllegalGenerator(f"Unknown factor {name!r}")


Factor = tuple[str, int, Poly]


def chain(
    kind: Kind,
    rank: int,
    factors: Iterable[Factor],
    length_cap: int | None = None,
    targets: Sequence[WeylElement] | None = None,
) -> NilCoxElement:
    """Multiply a sequence of factors (name, i, variable) left to right.

    With targets, only left prefixes of some target are kept; this loses
    nothing for extraction at those targets since every factor is a product
    of terms 1 + c u_g.
    """
    kind = Kind(kind)
    allowed = None
    if targets is not None:
        allowed = frozenset().union(*(prefixes(t) for t in targets))
    xi = NilCoxElement.one(kind, rank, length_cap)
    count = 0
    for name, i, variable in factors:
        for g, sign in factor_word(kind, name, i, rank):
            xi = times_linear(xi, g, sign * variable, allowed)
            count += 1
    _LOGGER.debug(
        "Chain of %d linear factors in %s_%d has %d terms", count, kind.value, rank, len(xi.terms)
    )
    return xi


def factor(kind: Kind, name: str, i: int, variable: Poly, rank: int) -> NilCoxElement:
    """A single generating factor such as A_i(t), C(t) or D(t)."""
    return chain(kind, rank, [(name, i, variable)])
