"""Exact polynomial arithmetic over the shared ring and the Gamma rings.

All polynomials live in one sympy ring over QQ whose generators are the
alphabets q_1.., x_1.., y_1.., z_1.., t_1.. and w_1.. (the Omega alphabet).
Elements of Gamma[Y, Z] are carried as polynomials in the free generators
q_r; relations between the q_r are only consulted when a normal form in the
Q-basis is requested.
"""
from __future__ import annotations

import logging
import re
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from functools import lru_cache
from typing import Any, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from .config import get_option
from .const import (
    ALPHABET_ARITY,
    ALPHABET_ORDER,
    BASIS_P,
    BASIS_Q,
    BOX,
    CONF_DEGREE_CAP,
    RING_GAMMA,
    RING_GAMMA_PRIME,
)
from .exceptions import (
    DegreeOverflow,
    IllegalGenerator,
    NonDivisible,
    NonIntegralCoefficient,
    NotSymmetric,
    WrongRing,
)
from .weyl import is_strict, pad, trim

_LOGGER = logging.getLogger(__name__)

_SYMBOLS = [f"{name}{i}" for name in ALPHABET_ORDER for i in range(1, ALPHABET_ARITY[name] + 1)]
RING, *GENERATORS = ring(",".join(_SYMBOLS), QQ)
NGENS = len(GENERATORS)

OFFSET: dict[str, int] = {}
_position = 0
for _name in ALPHABET_ORDER:
    OFFSET[_name] = _position
    _position += ALPHABET_ARITY[_name]
del _position, _name

Poly = PolyElement
Scalar = Union[int, Any]


def zero() -> Poly:
    return RING.zero


def one() -> Poly:
    return RING.one


def const(value: Scalar) -> Poly:
    return RING(value)


def index_of(alphabet: str, i: int) -> int:
    """Position of the generator alphabet_i in the shared ring."""
    if alphabet not in OFFSET:
        raise KeyError(f"Unknown alphabet {alphabet!r}")
    if not 1 <= i <= ALPHABET_ARITY[alphabet]:
        raise DegreeOverflow(
            f"{alphabet}{i} is outside the ring ({ALPHABET_ARITY[alphabet]} variables)"
        )
    return OFFSET[alphabet] + i - 1


def var(alphabet: str, i: int) -> Poly:
    """The variable alphabet_i; a leading "-" gives its negative."""
    if alphabet.startswith("-"):
        return -GENERATORS[index_of(alphabet[1:], i)]
    return GENERATORS[index_of(alphabet, i)]


def variables(alphabet: str, count: int) -> list[Poly]:
    return [var(alphabet, i) for i in range(1, count + 1)]


def degree(f: Poly) -> int:
    """Total degree, -1 for zero."""
    return max((sum(m) for m in f.itermonoms()), default=-1)


def q_weight(f: Poly) -> int:
    """Largest weighted q-degree sum r * e_r over the terms of f."""
    q0 = OFFSET["q"]
    return max(
        (
            sum((r + 1) * e for r, e in enumerate(m[q0 : q0 + ALPHABET_ARITY["q"]]))
            for m in f.itermonoms()
        ),
        default=0,
    )


def coefficient_of_one(f: Poly) -> Any:
    return f.coeff(1) if f else QQ(0)


# Elementary and complete symmetric functions


def elementary(j: int, args: Sequence[Poly]) -> Poly:
    """e_j of a list of ring elements."""
    if j < 0 or j > len(args):
        return RING.zero
    row = [RING.one] + [RING.zero] * j
    for a in args:
        for d in range(j, 0, -1):
            row[d] = row[d] + a * row[d - 1]
    return row[j]


def complete(j: int, args: Sequence[Poly]) -> Poly:
    """h_j of a list of ring elements."""
    if j < 0:
        return RING.zero
    if j == 0:
        return RING.one
    if not args:
        return RING.zero
    row = [RING.one] + [RING.zero] * j
    for a in args:
        for d in range(1, j + 1):
            row[d] = row[d] + a * row[d - 1]
    return row[j]


def _alphabet_args(alphabet: str | Sequence[Poly], count: int) -> list[Poly]:
    if isinstance(alphabet, str):
        return variables(alphabet, count)
    return list(alphabet)[:count]


def gen_eh(kind: str, j: int, r: int, alphabet: str | Sequence[Poly] = "y") -> Poly:
    """e^r_j or h^r_j; negative r swaps the two, r = 0 gives the Kronecker delta."""
    if kind not in ("e", "h"):
        raise ValueError(f"kind must be 'e' or 'h', got {kind!r}")
    if j < 0:
        return RING.zero
    if r == 0:
        return RING.one if j == 0 else RING.zero
    if r < 0:
        kind = "h" if kind == "e" else "e"
        r = -r
    args = _alphabet_args(alphabet, r)
    return elementary(j, args) if kind == "e" else complete(j, args)


def supersym_h(p: int, m: int, l: int) -> Poly:
    """h_p(Y/Z) in y_1..y_m and z_1..z_l."""
    if p < 0:
        return RING.zero
    ys = variables("y", m)
    zs = variables("-z", l)
    return sum((complete(p - j, ys) * elementary(j, zs) for j in range(p + 1)), RING.zero)


def q(r: int) -> Poly:
    """The free generator q_r (q_0 = 1, q_r = 0 for r < 0)."""
    if r < 0:
        return RING.zero
    if r == 0:
        return RING.one
    return var("q", r)


@lru_cache(maxsize=None)
def q_in_x(r: int, m: int) -> Poly:
    """q_r(x_1, ..., x_m) from the product of (1 + x t)/(1 - x t)."""
    xs = variables("x", m)
    return sum((elementary(a, xs) * complete(r - a, xs) for a in range(r + 1)), RING.zero)


def x_count(d: int) -> int:
    """Smallest M with M(M+1)/2 >= d."""
    m = 1
    while m * (m + 1) // 2 < d:
        m += 1
    return m


# Substitutions


def substitute(f: Poly, mapping: Mapping[int, Poly]) -> Poly:
    """Replace generator i by mapping[i] simultaneously."""
    if not mapping or not f:
        return f
    idx = sorted(mapping)
    groups: dict[tuple[int, ...], dict] = defaultdict(dict)
    for monom, coeff in f.iterterms():
        key = tuple(monom[i] for i in idx)
        rest = list(monom)
        for i in idx:
            rest[i] = 0
        groups[key][tuple(rest)] = coeff
    powers: dict[tuple[int, int], Poly] = {}
    result = RING.zero
    for key, terms in groups.items():
        factor = RING.one
        for i, e in zip(idx, key):
            if e:
                if (i, e) not in powers:
                    powers[(i, e)] = mapping[i] ** e
                factor = factor * powers[(i, e)]
        result += factor * RING.from_dict(terms)
    return result


def specialize_zero(f: Poly, alphabet: str) -> Poly:
    """Set every variable of the alphabet to zero."""
    lo = OFFSET[alphabet]
    hi = lo + ALPHABET_ARITY[alphabet]
    return RING.from_dict(
        {m: c for m, c in f.iterterms() if not any(m[lo:hi])}
    ) if f else f


def shift_alphabet(f: Poly, alphabet: str, m: int) -> Poly:
    """alphabet_i -> alphabet_{i+m}."""
    if m == 0 or not f:
        return f
    lo = OFFSET[alphabet]
    arity = ALPHABET_ARITY[alphabet]
    terms = {}
    for monom, coeff in f.iterterms():
        block = monom[lo : lo + arity]
        if any(block[arity - m :]) if m > 0 else any(block[: -m]):
            raise DegreeOverflow(f"Shifting {alphabet} by {m} leaves the ring")
        shifted = (0,) * m + block[: arity - m] if m > 0 else block[-m:] + (0,) * (-m)
        terms[monom[:lo] + tuple(shifted) + monom[lo + arity :]] = coeff
    return RING.from_dict(terms)


def swap(f: Poly, alphabet: str, i: int, j: int) -> Poly:
    a, b = index_of(alphabet, i), index_of(alphabet, j)
    return substitute(f, {a: GENERATORS[b], b: GENERATORS[a]})


def rename_alphabet(f: Poly, src: str, dst: str, sign: int = 1) -> Poly:
    """src_i -> sign * dst_i for every i."""
    count = min(ALPHABET_ARITY[src], ALPHABET_ARITY[dst])
    mapping = {index_of(src, i): sign * var(dst, i) for i in range(1, count + 1)}
    return substitute(f, mapping)


def omega(f: Poly) -> Poly:
    """The involution y_j -> -z_j, z_j -> -y_j fixing q."""
    count = min(ALPHABET_ARITY["y"], ALPHABET_ARITY["z"])
    mapping: dict[int, Poly] = {}
    for i in range(1, count + 1):
        mapping[index_of("y", i)] = -var("z", i)
        mapping[index_of("z", i)] = -var("y", i)
    return substitute(f, mapping)


def evaluate_q(f: Poly, m: int) -> Poly:
    """Substitute q_r -> q_r(x_1, ..., x_m)."""
    if m > ALPHABET_ARITY["x"]:
        raise DegreeOverflow(f"{m} x-variables requested, ring has {ALPHABET_ARITY['x']}")
    used = set()
    q0 = OFFSET["q"]
    for monom in f.itermonoms():
        used.update(r for r in range(ALPHABET_ARITY["q"]) if monom[q0 + r])
    return substitute(f, {q0 + r: q_in_x(r + 1, m) for r in used})


# Divided differences


def _exquo(numerator: Poly, denominator: Poly) -> Poly:
    try:
        return numerator.exquo(denominator)
    except ExactQuotientFailed as err:
        raise NonDivisible(f"Divided difference numerator is not divisible: {err}") from err


def _s0_mapping() -> dict[int, Poly]:
    y1 = var("y", 1)
    mapping = {index_of("y", 1): -y1}
    for r in range(1, ALPHABET_ARITY["q"] + 1):
        mapping[index_of("q", r)] = q(r) + 2 * sum(
            (y1**j * q(r - j) for j in range(1, r + 1)), RING.zero
        )
    return mapping


def _sbox_mapping() -> dict[int, Poly]:
    y1, y2 = var("y", 1), var("y", 2)
    mapping = {index_of("y", 1): -y2, index_of("y", 2): -y1}
    for r in range(1, ALPHABET_ARITY["q"] + 1):
        mapping[index_of("q", r)] = q(r) + 2 * (y1 + y2) * sum(
            (complete(j, [y1, y2]) * q(r - 1 - j) for j in range(r)), RING.zero
        )
    return mapping


_S0 = None
_SBOX = None


def _reflection_mapping(i: int) -> dict[int, Poly]:
    global _S0, _SBOX
    if i == 0:
        if _S0 is None:
            _S0 = _s0_mapping()
        return _S0
    if i == BOX:
        if _SBOX is None:
            _SBOX = _sbox_mapping()
        return _SBOX
    a, b = index_of("y", i), index_of("y", i + 1)
    return {a: GENERATORS[b], b: GENERATORS[a]}


def reflect(f: Poly, i: int) -> Poly:
    """The ring action of s_i on the y-side."""
    return substitute(f, _reflection_mapping(i))


def _divided_difference_y(f: Poly, i: int) -> Poly:
    numerator = f - reflect(f, i)
    if not numerator:
        return RING.zero
    if i == 0:
        return _exquo(numerator, -2 * var("y", 1))
    if i == BOX:
        return _exquo(numerator, -var("y", 1) - var("y", 2))
    return _exquo(numerator, var("y", i) - var("y", i + 1))


def divided_difference(f, i: int, side: str = "y"):
    """The operator d_i on the y-side or z-side (z-side is omega d^y omega)."""
    if side not in ("y", "z"):
        raise ValueError(f"side must be 'y' or 'z', got {side!r}")
    if i < 0 and i != BOX:
        raise IllegalGenerator(f"Generator index {i} is not legal")
    if isinstance(f, GammaElement):
        if i == 0 and f.ring_tag != RING_GAMMA:
            raise WrongRing("d_0 acts on Gamma, not Gamma'")
        if i == BOX and f.ring_tag != RING_GAMMA_PRIME:
            raise WrongRing("d_b acts on Gamma', not Gamma")
        return GammaElement(divided_difference(f.rep, i, side), f.ring_tag)
    if side == "y":
        return _divided_difference_y(f, i)
    return omega(_divided_difference_y(omega(f), i))


# Pfaffians and determinants


def pfaffian(size: int, entry) -> Any:
    """Pfaffian of the skew matrix with entry(i, j) above the diagonal, by first-row expansion."""
    if size % 2:
        raise ValueError("Pfaffians need an even size")
    cache: dict[tuple[int, ...], Any] = {}
    values: dict[tuple[int, int], Any] = {}

    def _entry(i: int, j: int):
        if (i, j) not in values:
            values[(i, j)] = entry(i, j)
        return values[(i, j)]

    def _pf(rows: tuple[int, ...]):
        if not rows:
            return RING.one
        if rows in cache:
            return cache[rows]
        first, rest = rows[0], rows[1:]
        total = RING.zero
        for pos, j in enumerate(rest):
            a = _entry(first, j)
            if not a:
                continue
            minor = _pf(rest[:pos] + rest[pos + 1 :])
            total = total + a * minor if pos % 2 == 0 else total - a * minor
        cache[rows] = total
        return total

    return _pf(tuple(range(size)))


def determinant(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Exact determinant over the shared ring."""
    n = len(matrix)
    if n == 0:
        return RING.one
    if n == 1:
        return RING(matrix[0][0])
    dm = DomainMatrix([[RING(e) for e in row] for row in matrix], (n, n), RING.to_domain())
    return RING(dm.det())


def _two_row_q(a: int, b: int) -> Poly:
    """Q_(a,b) = q_a q_b + 2 sum_j (-1)^j q_{a+j} q_{b-j}."""
    total = q(a) * q(b)
    for j in range(1, max(b, 0) + 1):
        term = 2 * q(a + j) * q(b - j)
        total = total - term if j % 2 else total + term
    return total


@lru_cache(maxsize=None)
def schur_Q_rep(alpha: tuple[int, ...]) -> Poly:
    """Q_alpha in free q-form via the Schur Pfaffian."""
    alpha = tuple(alpha)
    if not alpha:
        return RING.one
    if len(alpha) == 1:
        return q(alpha[0])
    if len(alpha) % 2:
        alpha = alpha + (0,)
    if len(alpha) == 2:
        return _two_row_q(*alpha)
    return pfaffian(len(alpha), lambda i, j: _two_row_q(alpha[i], alpha[j]))


# Normal forms in the Q basis


def _x_slice():
    lo = OFFSET["x"]
    return lo, lo + ALPHABET_ARITY["x"]


def _group_by_x(f: Poly, m: int) -> dict[tuple[int, ...], Poly]:
    lo, hi = _x_slice()
    groups: dict[tuple[int, ...], dict] = defaultdict(dict)
    for monom, coeff in f.iterterms():
        x_part = monom[lo:hi]
        if any(x_part[m:]):
            raise DegreeOverflow(f"Polynomial uses more than {m} x-variables")
        rest = monom[:lo] + (0,) * (hi - lo) + monom[hi:]
        groups[x_part[:m]][rest] = coeff
    return {k: RING.from_dict(v) for k, v in groups.items()}


@lru_cache(maxsize=None)
def _Q_in_x(parts: tuple[int, ...], m: int) -> dict[tuple[int, ...], Any]:
    evaluated = evaluate_q(schur_Q_rep(parts), m)
    return {k: coefficient_of_one(v) for k, v in _group_by_x(evaluated, m).items()}


def _peel(groups: dict[tuple[int, ...], Poly], m: int) -> dict[tuple[int, ...], Poly]:
    result: dict[tuple[int, ...], Poly] = {}
    while groups:
        lead = max(groups)
        parts = trim(lead)
        if tuple(lead) != pad(parts, m) or not is_strict(parts):
            raise NotSymmetric(f"Leading exponent {lead} is not a strict partition")
        coeff = groups[lead] * QQ(1, 2 ** len(parts))
        result[parts] = coeff
        for exp, c in _Q_in_x(parts, m).items():
            updated = groups.get(exp, RING.zero) - coeff * c
            if updated:
                groups[exp] = updated
            else:
                groups.pop(exp, None)
    return result


def x_to_gamma(f: Poly, m: int, ring_tag: str = RING_GAMMA) -> GammaElement:
    """Lift a polynomial symmetric in x_1..x_m (in Gamma) to a GammaElement."""
    normalized = _peel(_group_by_x(f, m), m)
    rep = sum((c * schur_Q_rep(lam) for lam, c in normalized.items()), RING.zero)
    return GammaElement(rep, ring_tag, normalized)


@lru_cache(maxsize=None)
def _q_monomial_expansion(exps: tuple[int, ...]) -> dict[tuple[int, ...], Any]:
    weight = sum((r + 1) * e for r, e in enumerate(exps))
    if weight == 0:
        return {(): QQ(1)}
    m = x_count(weight)
    product = RING.one
    for r, e in enumerate(exps):
        if e:
            product = product * q_in_x(r + 1, m) ** e
    peeled = _peel(_group_by_x(product, m), m)
    _LOGGER.debug("Cached Q-expansion of q-monomial %s (%d terms)", exps, len(peeled))
    return {lam: coefficient_of_one(c) for lam, c in peeled.items()}


def check_degree_cap(rep: Poly, degree_cap: int | None = None) -> None:
    """Raise DegreeOverflow when the q-weight of rep is above the cap."""
    if degree_cap is None:
        degree_cap = get_option(CONF_DEGREE_CAP)
    weight = q_weight(rep)
    if weight > degree_cap:
        raise DegreeOverflow(f"q-weight {weight} exceeds the degree cap {degree_cap}")


def normalize_rep(rep: Poly, degree_cap: int | None = None) -> dict[tuple[int, ...], Poly]:
    """Q-basis coefficients of a q-form element."""
    check_degree_cap(rep, degree_cap)
    q0 = OFFSET["q"]
    q1 = q0 + ALPHABET_ARITY["q"]
    groups: dict[tuple[int, ...], dict] = defaultdict(dict)
    for monom, coeff in rep.iterterms():
        rest = monom[:q0] + (0,) * (q1 - q0) + monom[q1:]
        groups[monom[q0:q1]][rest] = coeff
    normalized: dict[tuple[int, ...], Poly] = defaultdict(lambda: RING.zero)
    for exps, terms in groups.items():
        coeff = RING.from_dict(terms)
        for lam, c in _q_monomial_expansion(exps).items():
            normalized[lam] += coeff * c
    return {lam: c for lam, c in sorted(normalized.items()) if c}


class GammaElement:
    """An element of Gamma[Y, Z] or Gamma'[Y, Z] in free q-generator form."""

    __slots__ = ("rep", "ring_tag", "_normalized")

    def __init__(
        self,
        rep: Poly | int = 0,
        ring_tag: str = RING_GAMMA,
        normalized: dict[tuple[int, ...], Poly] | None = None,
    ) -> None:
        if ring_tag not in (RING_GAMMA, RING_GAMMA_PRIME):
            raise WrongRing(f"Unknown ring tag {ring_tag!r}")
        self.rep = RING(rep)
        self.ring_tag = ring_tag
        self._normalized = normalized

    @classmethod
    def from_basis(
        cls, coefficients: Mapping[tuple[int, ...], Poly | int], basis: str = BASIS_Q
    ) -> GammaElement:
        """Build from Q- or P-basis coefficients."""
        tag = RING_GAMMA_PRIME if basis == BASIS_P else RING_GAMMA
        rep = RING.zero
        for lam, c in coefficients.items():
            scale = QQ(1, 2 ** len(lam)) if basis == BASIS_P else QQ(1)
            rep += RING(c) * scale * schur_Q_rep(tuple(lam))
        return cls(rep, tag)

    def _coerce(self, other) -> GammaElement | None:
        if isinstance(other, GammaElement):
            return other
        if isinstance(other, (int, PolyElement)) or QQ.of_type(other):
            return GammaElement(RING(other), self.ring_tag)
        return None

    def _tag(self, other: GammaElement) -> str:
        if RING_GAMMA_PRIME in (self.ring_tag, other.ring_tag):
            return RING_GAMMA_PRIME
        return RING_GAMMA

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GammaElement(self.rep + other.rep, self._tag(other))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GammaElement(self.rep - other.rep, self._tag(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        rep = self.rep * other.rep
        check_degree_cap(rep)
        return GammaElement(rep, self._tag(other))

    __rmul__ = __mul__

    def __neg__(self) -> GammaElement:
        return GammaElement(-self.rep, self.ring_tag)

    def scale(self, factor) -> GammaElement:
        return GammaElement(self.rep * factor, self.ring_tag)

    def map(self, fn) -> GammaElement:
        """Apply a ring map to the representative, keeping the tag."""
        return GammaElement(fn(self.rep), self.ring_tag)

    def retag(self, ring_tag: str) -> GammaElement:
        return GammaElement(self.rep, ring_tag, self._normalized)

    @property
    def normalized(self) -> dict[tuple[int, ...], Poly]:
        if self._normalized is None:
            self._normalized = normalize_rep(self.rep)
        return self._normalized

    def coefficients(self, basis: str = BASIS_Q) -> dict[tuple[int, ...], Poly]:
        if basis == BASIS_Q:
            return dict(self.normalized)
        if basis == BASIS_P:
            return {lam: c * 2 ** len(lam) for lam, c in self.normalized.items()}
        raise ValueError(f"Unknown basis {basis!r}")

    @property
    def preferred_basis(self) -> str:
        return BASIS_P if self.ring_tag == RING_GAMMA_PRIME else BASIS_Q

    def is_zero(self) -> bool:
        return not self.rep or not self.normalized

    def constant_term(self) -> Any:
        return coefficient_of_one(self.normalized.get((), RING.zero))

    def degree(self) -> int:
        return degree(self.rep)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.rep == other.rep:
            return True
        return normalize_rep(self.rep - other.rep) == {}

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"GammaElement({format_gamma(self)}, {self.ring_tag})"


def as_gamma(value, ring_tag: str = RING_GAMMA) -> GammaElement:
    if isinstance(value, GammaElement):
        return value
    return GammaElement(value, ring_tag)


def gen_q(r: int) -> GammaElement:
    """q_r as an element of Gamma."""
    return GammaElement(q(r))


def normalize(g: GammaElement, degree_cap: int | None = None) -> GammaElement:
    """Fill the Q-basis normal form."""
    return GammaElement(g.rep, g.ring_tag, normalize_rep(g.rep, degree_cap))


def is_integral(f: Poly) -> bool:
    return all(c.denominator == 1 for c in f.itercoeffs())


def check_integral(value) -> None:
    polys = value.normalized.values() if isinstance(value, GammaElement) else [value]
    for f in polys:
        if not is_integral(f):
            raise NonIntegralCoefficient(f"Non-integral coefficient in {format_poly(f)}")


# Text and JSON forms


def _format_coeff(c) -> str:
    c = QQ(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_monom(monom: tuple[int, ...]) -> str:
    parts = []
    for name in ALPHABET_ORDER:
        lo = OFFSET[name]
        block = monom[lo : lo + ALPHABET_ARITY[name]]
        indices = range(len(block), 0, -1) if name == "q" else range(1, len(block) + 1)
        for i in indices:
            e = block[i - 1]
            if e:
                parts.append(f"{name}{i}" if e == 1 else f"{name}{i}^{e}")
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    """Render with terms in decreasing monomial order, e.g. q2*q1 + y1^2*z1."""
    if not f:
        return "0"
    out = []
    for monom, coeff in sorted(f.iterterms(), reverse=True):
        body = _format_monom(monom)
        sign = "-" if coeff < 0 else "+"
        magnitude = _format_coeff(abs(coeff))
        if body:
            text = body if magnitude == "1" else f"{magnitude}*{body}"
        else:
            text = magnitude
        out.append((sign, text))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, part in out[1:]:
        text += f" {sign} {part}"
    return text


def format_gamma(g: GammaElement, basis: str | None = None) -> str:
    basis = basis or g.preferred_basis
    coefficients = g.coefficients(basis)
    if not coefficients:
        return "0"
    pieces = []
    for lam, c in sorted(coefficients.items(), key=lambda item: (-sum(item[0]), item[0])):
        head = f"{basis}[{','.join(map(str, lam))}]" if lam else ""
        body = format_poly(c)
        if not head:
            pieces.append(body)
        elif body == "1":
            pieces.append(head)
        else:
            pieces.append(f"{head}*({body})")
    return " + ".join(pieces)


_COEFF_RE = re.compile(r"^(-?\d+)(?:/(?:2\^(\d+)|(\d+)))?$")


def format_coeff_json(c) -> str:
    c = QQ(c)
    den = c.denominator
    if den == 1:
        return str(c.numerator)
    if den & (den - 1) == 0:
        return f"{c.numerator}/2^{den.bit_length() - 1}"
    return f"{c.numerator}/{den}"


def parse_coeff_json(text: str):
    match = _COEFF_RE.match(text.strip())
    if not match:
        raise ValueError(f"Cannot parse coefficient {text!r}")
    num = int(match.group(1))
    if match.group(2) is not None:
        return QQ(num, 2 ** int(match.group(2)))
    if match.group(3) is not None:
        return QQ(num, int(match.group(3)))
    return QQ(num)


def to_json_terms(f: Poly, skip: Iterable[str] = ()) -> list[dict[str, Any]]:
    """Sorted term list {"coeff": ..., "y": [...], ...}; empty alphabets omitted."""
    terms = []
    for monom, coeff in sorted(f.iterterms(), reverse=True):
        entry: dict[str, Any] = {"coeff": format_coeff_json(coeff)}
        for name in ALPHABET_ORDER:
            if name in skip:
                continue
            lo = OFFSET[name]
            block = list(monom[lo : lo + ALPHABET_ARITY[name]])
            while block and not block[-1]:
                block.pop()
            if block:
                entry[name] = block
        terms.append(entry)
    return terms


def from_json_terms(terms: Iterable[Mapping[str, Any]]) -> Poly:
    result = {}
    for entry in terms:
        monom = [0] * NGENS
        for name in ALPHABET_ORDER:
            for i, e in enumerate(entry.get(name, ()), start=1):
                monom[index_of(name, i)] = int(e)
        result[tuple(monom)] = parse_coeff_json(entry["coeff"])
    return RING.from_dict(result)


def gamma_to_json(g: GammaElement, basis: str | None = None) -> dict[str, Any]:
    basis = basis or g.preferred_basis
    terms = []
    for lam, c in sorted(g.coefficients(basis).items()):
        for entry in to_json_terms(c, skip=("q", "x")):
            entry[basis] = list(lam)
            terms.append(entry)
    return {"ring": g.ring_tag, "basis": basis, "terms": terms}


def gamma_from_json(data: Mapping[str, Any]) -> GammaElement:
    basis = data.get("basis", BASIS_Q)
    coefficients: dict[tuple[int, ...], Poly] = defaultdict(lambda: RING.zero)
    for entry in data.get("terms", ()):
        lam = tuple(entry.get(basis, ()))
        coefficients[lam] += from_json_terms([{k: v for k, v in entry.items() if k != basis}])
    element = GammaElement.from_basis(coefficients, basis)
    return element.retag(data.get("ring", element.ring_tag))
