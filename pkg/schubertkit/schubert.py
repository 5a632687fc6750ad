"""Double Schubert polynomials of types A, B, C and D.

Every polynomial here is extracted from a product of nilCoxeter factors
(see nilcox.chain).  Types C and D carry an X-alphabet which is lifted into
Gamma (resp. Gamma') before being returned, so values are plain polynomials
in type A and GammaElement instances otherwise.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from functools import lru_cache, partial
from itertools import combinations
from typing import Any

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .const import (
    ALPHABET_ARITY,
    BASIS_P,
    BASIS_Q,
    BOX,
    F_ALTERNATING,
    RING_GAMMA,
    RING_GAMMA_PRIME,
    SCHUBERT_TYPES,
    STANLEY_VARIANTS,
)
from .exceptions import (
    HypothesisViolated,
    InvalidElement,
    InvalidOption,
    NegativeCoefficient,
    NonIntegralCoefficient,
    NonTriangular,
    NotIncreasing,
)
from .nilcox import FACTOR_A, FACTOR_A_TILDE, FACTOR_B, FACTOR_C, FACTOR_D, chain
from .polycore import (
    RING,
    GammaElement,
    Poly,
    as_gamma,
    coefficient_of_one,
    complete,
    divided_difference,
    elementary,
    format_gamma,
    format_poly,
    gamma_to_json,
    index_of,
    rename_alphabet,
    shift_alphabet,
    specialize_zero,
    substitute,
    to_json_terms,
    var,
    variables,
    x_count,
    x_to_gamma,
)
from .symfunc import (
    IndexedFamily,
    RaisingExpr,
    c_hat_correction,
    c_poly,
    expand_raising,
    flagged_schur,
    lr_coefficients,
    multi_schur_Q,
    phat_pfaffian,
    phat_star,
    raising_apply,
    schur_expand,
    schur_poly,
    schur_QP,
    schur_s,
)
from .weyl import (
    FlagSequence,
    Kind,
    KStrictPartition,
    TypedKStrictPartition,
    WeylElement,
    as_kind,
    check_d_flag,
    check_generator,
    compose,
    conjugate,
    coset_data,
    descents,
    format_generator,
    generator,
    grassmannian_bijection,
    grassmannian_element,
    inverse,
    is_increasing_up_to,
    iter_group,
    k_strict_partitions,
    length,
    longest_coset_element,
    longest_element,
    longest_grassmannian,
    minimal_rank,
    numeric,
    pad,
    partitions_inside,
    reduced_factorizations,
    shift,
    signs,
    staircase,
    staircase_star,
    star,
    trim,
    typed_partitions,
    unshift,
)

_LOGGER = logging.getLogger(__name__)

Value = Any  # Poly in type A, GammaElement otherwise


@dataclass
class SchubertPoly:
    """A computed Schubert polynomial."""

    type_letter: str
    element: WeylElement
    value: Value
    double: bool = True

    @property
    def is_gamma(self) -> bool:
        return isinstance(self.value, GammaElement)

    def __str__(self) -> str:
        return format_value(self.value)

    def to_json(self) -> dict[str, Any]:
        return {
            "type": self.type_letter,
            "w": str(self.element),
            "double": self.double,
            "value": value_to_json(self.value),
        }


@dataclass
class StanleyFunction:
    """A (mixed, double or restricted) Stanley symmetric function."""

    type_letter: str
    element: WeylElement
    variant: str
    value: Value
    k: int | None = None
    l: int | None = None

    def __str__(self) -> str:
        return format_value(self.value)

    def to_json(self) -> dict[str, Any]:
        data = {
            "type": self.type_letter,
            "w": str(self.element),
            "variant": self.variant,
            "value": value_to_json(self.value),
        }
        if self.k is not None:
            data["k"] = self.k
        if self.l is not None:
            data["l"] = self.l
        return data


@dataclass
class Identity:
    """Two lazily computed sides of an identity that should agree."""

    name: str
    inputs: dict[str, Any]
    left: Callable[[], Value]
    right: Callable[[], Value]
    notes: list[str] = field(default_factory=list)
    compare: Callable[[Value, Value], bool] | None = None

    def agree(self, left: Value, right: Value) -> bool:
        if self.compare is not None:
            return self.compare(left, right)
        return same(left, right)


# Element helpers


def check_type(type_letter: str) -> str:
    letter = str(type_letter).upper()
    if letter not in SCHUBERT_TYPES:
        raise InvalidOption(f"type must be one of {SCHUBERT_TYPES}, got {type_letter!r}")
    return letter


def coerce_element(type_letter: str, w: WeylElement | str) -> WeylElement:
    """Parse a window, or move a permutation into the group of the given type."""
    kind = Kind.from_type(type_letter)
    if isinstance(w, str):
        return WeylElement.parse(kind, w)
    if w.kind is kind:
        return w
    if w.in_symmetric_group():
        return as_kind(w, kind)
    raise InvalidElement(f"{w} is not an element of type {type_letter}")


def _rank_of(w: WeylElement) -> int:
    return max(w.rank, minimal_rank(w.kind), 1)


def _tag(kind: Kind) -> str:
    return RING_GAMMA_PRIME if kind is Kind.D else RING_GAMMA


def _zero(kind: Kind) -> Value:
    return RING.zero if kind is Kind.A else GammaElement(0, _tag(kind))


def _one(kind: Kind) -> Value:
    return RING.one if kind is Kind.A else GammaElement(1, _tag(kind))


def _mul(a: Value, b: Value) -> Value:
    if isinstance(b, GammaElement) and not isinstance(a, GammaElement):
        return b * a
    return a * b


def _product(kind: Kind, values: Iterable[Value]) -> Value:
    total = _one(kind)
    for value in values:
        total = _mul(total, value)
    return total


def _move(f: Poly, alphabet: str, sign: int = 1, offset: int = 0) -> Poly:
    """Move a polynomial in y_1, y_2, ... to sign * alphabet_{offset+1}, ..."""
    if alphabet != "y" or sign != 1:
        f = rename_alphabet(f, "y", alphabet, sign)
    return shift_alphabet(f, alphabet, offset)


def same(left: Value, right: Value) -> bool:
    """Equality that lifts plain polynomials when the other side lives in Gamma."""
    if isinstance(left, GammaElement) or isinstance(right, GammaElement):
        tag = left.ring_tag if isinstance(left, GammaElement) else right.ring_tag
        return as_gamma(left, tag) == as_gamma(right, tag)
    return left == right


def format_value(value: Value) -> str:
    if isinstance(value, GammaElement):
        return format_gamma(value)
    return format_poly(value)


def value_to_json(value: Value) -> dict[str, Any]:
    if isinstance(value, GammaElement):
        return gamma_to_json(value)
    return {"ring": "Z[Y,Z]", "terms": to_json_terms(value)}


# Schubert polynomials


@lru_cache(maxsize=None)
def _schubert_value(w: WeylElement, double: bool, rank: int) -> Value:
    kind = w.kind
    factors = []
    if double:
        factors.extend((FACTOR_A_TILDE, i, var("z", i)) for i in range(rank - 1, 0, -1))
    m = 0
    if kind is not Kind.A:
        m = x_count(length(w))
        name = FACTOR_C if kind is Kind.BC else FACTOR_D
        factors.extend((name, 0, var("x", j)) for j in range(1, m + 1))
    factors.extend((FACTOR_A, i, var("y", i)) for i in range(1, rank))
    f = chain(kind, rank, factors, targets=[w]).extract(w)
    _LOGGER.debug("Extracted Schubert polynomial of %s in rank %d (%d terms)", w, rank, len(f))
    if kind is Kind.A:
        return f
    return x_to_gamma(f, m, _tag(kind))


def schubert(
    type_letter: str,
    w: WeylElement | str,
    double: bool = True,
    rank: int | None = None,
) -> SchubertPoly:
    """The double (or single) Schubert polynomial of w."""
    letter = check_type(type_letter)
    w = coerce_element(letter, w)
    n = _rank_of(w) if rank is None else rank
    if n < w.rank:
        raise InvalidElement(f"{w} does not lie in the rank {n} group")
    value = _schubert_value(w, double, n)
    if letter == "B":
        value = GammaElement(value.rep * QQ(1, 2 ** signs(w)), RING_GAMMA_PRIME)
    return SchubertPoly(letter, w, value, double)


def schubert_a_single(u: WeylElement) -> Poly:
    """AS_u(Y) for a permutation carried in any kind."""
    u = as_kind(u, Kind.A)
    return _schubert_value(u, False, _rank_of(u))


def divided_difference_target(w: WeylElement, i: int, side: str = "y") -> WeylElement | None:
    """w s_i (y-side) or s_i w (z-side) when the length drops, else None."""
    check_generator(w.kind, i)
    s = generator(w.kind, i)
    target = compose(w, s) if side == "y" else compose(s, w)
    return target if length(target) < length(w) else None


def apply_divided_difference(sp: SchubertPoly, i: int, side: str = "y") -> Value:
    """d_i applied to a Schubert polynomial on the y-side or z-side."""
    if sp.type_letter == "B":
        raise HypothesisViolated("Divided differences are characterized in types A, C and D")
    if side == "z" and not sp.double:
        raise HypothesisViolated("z-side divided differences need a double polynomial")
    check_generator(sp.element.kind, i)
    return divided_difference(sp.value, i, side)


# Stanley functions


def _full_count(w: WeylElement) -> int:
    return max(1, min(length(w), ALPHABET_ARITY["y"]))


@lru_cache(maxsize=None)
def _stanley_value(w: WeylElement, y_count: int, z_count: int, with_x: bool) -> Value:
    """<A~(Z) C(X) A(Y), w> in z_1..z_{z_count}, y_1..y_{y_count} (C -> D(X) in type D)."""
    kind = w.kind
    rank = _rank_of(w)
    factors = [(FACTOR_A_TILDE, 1, var("z", j)) for j in range(1, z_count + 1)]
    m = 0
    if with_x and kind is not Kind.A:
        m = x_count(length(w))
        name = FACTOR_C if kind is Kind.BC else FACTOR_D
        factors.extend((name, 0, var("x", j)) for j in range(1, m + 1))
    factors.extend((FACTOR_A, 1, var("y", j)) for j in range(1, y_count + 1))
    f = chain(kind, rank, factors, targets=[w]).extract(w)
    if m:
        return x_to_gamma(f, m, _tag(kind))
    return f


def stanley_a(u: WeylElement, y_count: int, z_count: int = 0) -> Poly:
    """G_u(Y_(y_count)/Z_(z_count)) for a permutation carried in any kind."""
    return _stanley_value(as_kind(u, Kind.A), y_count, z_count, False)


def mixed_stanley(w: WeylElement, k: int, l: int = 0) -> Value:
    """J_w(X; Y_(k)/Z_(l)) (I_w in type D; G_w in type A), without hypothesis checks."""
    return _stanley_value(w, numeric(k), l, w.kind is not Kind.A)


def stanley(
    type_letter: str,
    w: WeylElement | str,
    variant: str = "single",
    k: int | None = None,
    l: int | None = None,
) -> StanleyFunction:
    """G, G(Y/Z), F, E, J or I for w, optionally restricted to k y's and l z's."""
    letter = check_type(type_letter)
    if variant not in STANLEY_VARIANTS:
        raise InvalidOption(f"variant must be one of {STANLEY_VARIANTS}, got {variant!r}")
    w = coerce_element(letter, w)
    kind = w.kind
    full = _full_count(w)
    with_x = kind is not Kind.A
    if variant == "single":
        counts = (full, 0) if kind is Kind.A else (0, 0)
    elif variant == "mixed":
        counts = (full, 0)
    elif variant == "double":
        counts = (full, full)
    else:
        k = 0 if k is None else k
        l = 0 if l is None else l
        _require_increasing(w, k, l, NotIncreasing)
        counts = (numeric(k), l)
    value = _stanley_value(w, counts[0], counts[1], with_x)
    if letter == "B":
        value = GammaElement(value.rep * QQ(1, 2 ** signs(w)), RING_GAMMA_PRIME)
    return StanleyFunction(letter, w, variant, value, k, l)


def _require_increasing(w: WeylElement, k: int, l: int | None = None, error=HypothesisViolated) -> None:
    if not is_increasing_up_to(w, k):
        raise error(f"{w} is not increasing up to {k}")
    if l is not None and not is_increasing_up_to(inverse(w), l):
        raise error(f"{inverse(w)} is not increasing up to {l}")


# Theta and eta polynomials


def _grassmannian_data(parts: tuple[int, ...], w: WeylElement, k_num: int):
    """beta(lambda) and the 0-based pairs C(lambda) read off the Grassmannian element."""
    values = [w(k_num + j) for j in range(1, len(parts) + 1)]
    beta = tuple(v + 1 if v < 0 else v for v in values)
    pairs = [
        (i, j)
        for i in range(len(parts))
        for j in range(i + 1, len(parts))
        if values[i] + values[j] < 0
    ]
    return beta, pairs


def theta(shape: KStrictPartition | Sequence[int], k: int | None = None, double: bool = True) -> GammaElement:
    """Theta_lambda(X; Y_(k), Z) = R^lambda c^beta(lambda)_lambda."""
    if not isinstance(shape, KStrictPartition):
        shape = KStrictPartition(trim(shape), 0 if k is None else k)
    k, parts = shape.k, shape.parts
    if not parts:
        return GammaElement(1, RING_GAMMA)
    w = grassmannian_element(shape, Kind.BC, k)
    beta, pairs = _grassmannian_data(parts, w, k)
    family = IndexedFamily("theta", lambda pos, p, hat: c_poly(k, beta[pos], p))
    value = raising_apply(RaisingExpr.theta(len(parts), pairs), family, parts)
    if not double:
        value = specialize_zero(value, "z")
    return GammaElement(value, RING_GAMMA)


def eta(
    shape: TypedKStrictPartition | Sequence[int],
    k: int | None = None,
    double: bool = True,
    f_choice: str = F_ALTERNATING,
) -> GammaElement:
    """Eta_lambda(X; Y_(k), Z) = 2^-l_k R^lambda * c-hat^beta(lambda)_lambda in Gamma'."""
    if not isinstance(shape, TypedKStrictPartition):
        shape = TypedKStrictPartition(trim(shape), numeric(k) if k is not None else 0)
    k, parts = shape.k, shape.parts
    if not parts:
        return GammaElement(1, RING_GAMMA_PRIME)
    w = grassmannian_element(shape, Kind.D, k)
    beta, pairs = _grassmannian_data(parts, w, k)
    mpos = sum(1 for p in parts if p > k)
    half = QQ(1, 2)
    ek = elementary(k, variables("y", k)) if k > 0 else RING.one

    def bar(pos: int, index: int, supp_m: int) -> Poly:
        value = c_poly(k, beta[pos], index)
        if not (supp_m >> pos) & 1:
            value = value + c_hat_correction(pos, k, beta[pos], index, f_choice)
        return value

    def middle(index: int, touched: bool) -> Poly:
        if touched:
            return c_poly(k, beta[mpos], index) - half * c_poly(k, 0, index)
        value = c_poly(k, beta[mpos], k) - half * c_poly(k, 0, k)
        return value + half * ek if shape.type_tag == 1 else value - half * ek

    total = RING.zero
    expr = RaisingExpr.theta(len(parts), pairs)
    for (nu, _, supp_m, touched), coeff in expand_raising(parts, expr, 0, True, mpos).items():
        term = RING(coeff)
        for pos, index in enumerate(nu):
            if pos < mpos or shape.type_tag == 0:
                factor = bar(pos, index, supp_m)
            elif pos == mpos:
                factor = middle(index, touched)
            else:
                factor = c_poly(k, beta[pos], index)
            term = term * factor
            if not term:
                break
        total += term
    total = total * QQ(1, 2**mpos)
    if not double:
        total = specialize_zero(total, "z")
    return GammaElement(total, RING_GAMMA_PRIME)


def grassmannian_polynomial(w: WeylElement, k: int, double: bool = True) -> Value:
    """The theta, eta or Schur polynomial attached to a k-Grassmannian element."""
    shape = grassmannian_bijection(w, k)
    if w.kind is Kind.A:
        return schur_s(shape, k, 0)
    if w.kind is Kind.BC:
        return theta(shape, double=double)
    return eta(shape, double=double)


# Stanley coefficients


def _coordinates(value: Value) -> dict[tuple, Any]:
    g = as_gamma(value)
    found = {}
    for lam, c in g.normalized.items():
        for monom, coeff in c.iterterms():
            found[(lam, monom)] = coeff
    return found


def _solve_in_span(target: dict[tuple, Any], columns: list[dict[tuple, Any]]) -> list[Any]:
    keys = sorted(set(target).union(*columns))
    width = len(columns)
    rows = [[col.get(key, QQ(0)) for col in columns] + [target.get(key, QQ(0))] for key in keys]
    if not rows:
        return [QQ(0)] * width
    matrix = DomainMatrix(rows, (len(rows), width + 1), QQ)
    reduced, pivots = matrix.rref()
    if width in pivots:
        raise NonTriangular("The expansion target is not in the span of the candidates")
    if len(pivots) != width:
        raise NonTriangular("The candidate basis is linearly dependent")
    dense = reduced.to_Matrix()
    return [QQ.from_sympy(dense[r, width]) for r in range(width)]


def _check_count(label: str, c: Any) -> int:
    c = QQ.convert(c)
    if c.denominator != 1:
        raise NonIntegralCoefficient(f"Coefficient of {label} is {c}")
    if c < 0:
        raise NegativeCoefficient(f"Coefficient of {label} is {c}")
    return int(c.numerator)


@lru_cache(maxsize=None)
def _schur_coefficients(u: WeylElement) -> tuple[tuple[tuple[int, ...], int], ...]:
    u = as_kind(u, Kind.A)
    if u.is_identity():
        return (((), 1),)
    m = _full_count(u)
    expansion = schur_expand(stanley_a(u, m), "y", m)
    return tuple(
        (lam, _check_count(str(lam), coefficient_of_one(c))) for lam, c in expansion.items()
    )


@lru_cache(maxsize=None)
def _mixed_coefficients(w: WeylElement, k: int) -> tuple[tuple[Any, int], ...]:
    if w.kind is Kind.BC:
        candidates = [KStrictPartition(p, k) for p in k_strict_partitions(length(w), k)]
        values = [theta(shape, double=False) for shape in candidates]
    else:
        candidates = typed_partitions(length(w), numeric(k))
        values = [eta(shape, double=False) for shape in candidates]
    target = _coordinates(mixed_stanley(w, k))
    solution = _solve_in_span(target, [_coordinates(v) for v in values])
    found = []
    for shape, c in zip(candidates, solution):
        count = _check_count(str(shape), c)
        if count:
            found.append((shape, count))
    _LOGGER.debug("Mixed Stanley coefficients of %s for k=%s: %s", w, k, found)
    return tuple(found)


def stanley_coefficients(type_letter: str, w: WeylElement | str, k: int | None = None) -> dict:
    """a^w_lambda (type A), e^w_lambda (type C) or d^w_lambda (type D)."""
    letter = check_type(type_letter)
    if letter == "B":
        raise InvalidOption("Stanley coefficients are computed for types A, C and D")
    w = coerce_element(letter, w)
    if w.kind is Kind.A:
        return dict(_schur_coefficients(w))
    k = 0 if k is None else k
    _require_increasing(w, k, error=NotIncreasing)
    return dict(_mixed_coefficients(w, k))


def stanley_from_coefficients(type_letter: str, w: WeylElement | str, k: int | None = None) -> Value:
    """Rebuild G_w(Y) or J_w(X; Y_(k)) from its coefficients."""
    letter = check_type(type_letter)
    w = coerce_element(letter, w)
    total = _zero(w.kind)
    for shape, c in stanley_coefficients(letter, w, k).items():
        if w.kind is Kind.A:
            total = total + c * schur_poly(shape, variables("y", _full_count(w)))
        elif w.kind is Kind.BC:
            total = total + theta(shape, double=False).scale(c)
        else:
            total = total + eta(shape, double=False).scale(c)
    return total


# Splitting formulas


def _blocks(entries: tuple[int, ...]) -> list[tuple[int, int]]:
    bounds = (0,) + tuple(entries)
    return [(bounds[i], bounds[i + 1]) for i in range(len(entries))]


def _split_setup(type_letter: str, w, a: FlagSequence, b: FlagSequence):
    letter = check_type(type_letter)
    if letter == "B":
        raise InvalidOption("Splitting formulas are computed for types A, C and D")
    w = coerce_element(letter, w)
    if a.kind is not w.kind or b.kind is not w.kind:
        raise InvalidOption("Flag sequences must be of the same kind as w")
    check_d_flag(a)
    factorizations = reduced_factorizations(w, flags=(a, b))
    return w, factorizations, _blocks(a.numeric), _blocks(b.numeric)


def splitting_factorizations(type_letter: str, w, a: FlagSequence, b: FlagSequence):
    """Reduced factorizations of w compatible with (a, b)."""
    return _split_setup(type_letter, w, a, b)[1]


def splitting_sum(type_letter: str, w, a: FlagSequence, b: FlagSequence) -> Value:
    """Sum of products G(0/Z_j) ... J(X; Y_1/Z_1) G(Y_2) ... over compatible factorizations."""
    w, factorizations, ya, zb = _split_setup(type_letter, w, a, b)
    q = len(zb)
    total = _zero(w.kind)
    for factors in factorizations:
        pieces = []
        for j, u in enumerate(factors, start=1):
            if j < q:
                lo, hi = zb[q - j]
                pieces.append(shift_alphabet(stanley_a(u, 0, hi - lo), "z", lo))
            elif j > q:
                lo, hi = ya[j - q]
                pieces.append(shift_alphabet(stanley_a(u, hi - lo), "y", lo))
            else:
                pieces.append(_stanley_value(u, ya[0][1], zb[0][1], w.kind is not Kind.A))
        total = total + _product(w.kind, pieces)
    return total


def splitting_expand(type_letter: str, w, a: FlagSequence, b: FlagSequence) -> dict[tuple, int]:
    """Splitting coefficients keyed by the tuple of shapes (lambda^1, ..., lambda^{p+q-1})."""
    w, factorizations, ya, zb = _split_setup(type_letter, w, a, b)
    q = len(zb)
    if w.kind is Kind.BC and zb[0][1] != 0:
        raise HypothesisViolated("Type C splitting coefficients need b_1 = 0")
    if w.kind is Kind.D and b.entries[0] != BOX:
        raise HypothesisViolated("Type D splitting coefficients need b_1 = b")
    coefficients: dict[tuple, int] = defaultdict(int)
    for factors in factorizations:
        partial: dict[tuple, int] = {(): 1}
        for j, u in enumerate(factors, start=1):
            if j == q and w.kind is not Kind.A:
                options = _mixed_coefficients(u, a.entries[0])
            else:
                options = _schur_coefficients(u)
            partial = {
                key + (shape,): c * d for key, c in partial.items() for shape, d in options
            }
        for key, c in partial.items():
            coefficients[key] += c
    return {key: c for key, c in sorted(coefficients.items(), key=lambda item: str(item[0])) if c}


def splitting_reconstruct(
    type_letter: str, w, a: FlagSequence, b: FlagSequence, expansion: dict[tuple, int]
) -> Value:
    """Evaluate a splitting expansion back into a polynomial."""
    w, _, ya, zb = _split_setup(type_letter, w, a, b)
    q = len(zb)
    total = _zero(w.kind)
    for shapes, c in expansion.items():
        pieces = []
        for j, shape in enumerate(shapes, start=1):
            if j < q:
                lo, hi = zb[q - j]
                pieces.append(shift_alphabet(schur_s(shape, 0, hi - lo), "z", lo))
            elif j > q:
                lo, hi = ya[j - q]
                pieces.append(shift_alphabet(schur_s(shape, hi - lo, 0), "y", lo))
            elif w.kind is Kind.A:
                pieces.append(schur_s(shape, ya[0][1], zb[0][1]))
            elif w.kind is Kind.BC:
                pieces.append(theta(shape, double=False))
            else:
                pieces.append(eta(shape, double=False))
        total = total + _mul(_product(w.kind, pieces), c)
    return total


# Reverse double Schubert polynomials


def _omega_args(m: int) -> list[Poly]:
    return variables("w", m)


def reverse_schubert(w: WeylElement | str, m: int = 0) -> Poly:
    """S~_{1_m x w}(Omega + Y, Z) from the nilCoxeter product."""
    w = coerce_element("A", w)
    n = _rank_of(w)
    rank = m + n
    factors = [(FACTOR_A, i, var("w", i)) for i in range(1, m + 1)]
    factors.extend((FACTOR_A, m + i, var("y", i)) for i in range(1, n))
    factors.extend((FACTOR_A_TILDE, m + i, var("z", i)) for i in range(n - 1, 0, -1))
    target = shift(w, m)
    return chain(Kind.A, rank, factors, targets=[target]).extract(target)


def _reverse_plain(w: WeylElement) -> Poly:
    total = RING.zero
    for u, v in reduced_factorizations(w, 2):
        total += schubert_a_single(u) * _move(schubert_a_single(inverse(v)), "z", -1)
    return total


def reverse_schubert_factored(w: WeylElement | str, m: int = 0) -> Poly:
    """sum over u (1_m x v) = 1_m x w of G_u(Omega) S~_v(Y, Z), with S~_v = sum AS_a(Y) AS_{b^-1}(-Z)."""
    w = coerce_element("A", w)
    if not m:
        return _reverse_plain(w)
    total = RING.zero
    for u, rest in reduced_factorizations(shift(w, m), 2):
        if any(rest(i) != i for i in range(1, m + 1)):
            continue
        g = _move(stanley_a(u, m), "w")
        total += g * _reverse_plain(unshift(rest, m))
    return total


def reverse_schubert_flagged(n: int, m: int = 0) -> Poly:
    """The flagged Schur determinant for S~ of the longest permutation of S_n."""
    size = n - 1
    rows = [
        _omega_args(m) + variables("y", i) + variables("-z", i) for i in range(1, size + 1)
    ]
    return flagged_schur(staircase(size), row_alphabets=rows, basis="h")


# Duality


def duality_map(f: Poly, n: int) -> Poly:
    """D: y_i -> -y_{n+1-i}."""
    return substitute(f, {index_of("y", i): -var("y", n + 1 - i) for i in range(1, n + 1)})


def in_coinvariant_ideal(g: Poly, n: int) -> bool:
    """Membership in the ideal generated by e_1(Y_n), ..., e_n(Y_n).

    g lies in the ideal exactly when (d_w g)(0) vanishes for every w in S_n.
    """
    for w in iter_group(Kind.A, n):
        f = g
        for i in _descent_word(w):
            f = divided_difference(f, i, "y")
            if not f:
                break
        if f and specialize_zero(f, "y"):
            return False
    return True


def _descent_word(w: WeylElement) -> tuple[int, ...]:
    word = []
    while not w.is_identity():
        i = min(descents(w))
        word.append(i)
        w = compose(w, generator(w.kind, i))
    return tuple(reversed(word))


def _modulo_ideal(n: int, left: Poly, right: Poly) -> bool:
    return in_coinvariant_ideal(left - right, n)


def _dual_schubert(w: WeylElement, n: int) -> Poly:
    return duality_map(schubert_a_single(w), n)


def _dual_elementary(i: int, r: int, n: int) -> Poly:
    return duality_map(elementary(i, variables("y", r)), n)


def full_chain_coefficient(w: WeylElement, n: int) -> Poly:
    """<A_1(y_1) A_1(y_2) ... A_1(y_n), w>."""
    factors = [(FACTOR_A, 1, var("y", j)) for j in range(1, n + 1)]
    return chain(Kind.A, n, factors, targets=[w]).extract(w)


def split_chain_coefficient(w: WeylElement, n: int) -> Poly:
    """<A_1(y_1) ... A_{n-1}(y_{n-1}) B_{n-1}(y_2) ... B_1(y_n), w>."""
    factors = [(FACTOR_A, i, var("y", i)) for i in range(1, n)]
    factors.extend((FACTOR_B, n + 1 - j, var("y", j)) for j in range(2, n + 1))
    return chain(Kind.A, n, factors, targets=[w]).extract(w)


def _unit_coefficient(w: WeylElement) -> Poly:
    return RING.one if w.is_identity() else RING.zero


def duality_identities(n: int) -> list[Identity]:
    """D AS_w = AS_{w*} and D e_i(Y_r) = h_i(Y_{n-r}) modulo the coinvariant ideal."""
    compare = partial(_modulo_ideal, n)
    found = []
    for w in iter_group(Kind.A, n):
        inputs = {"n": n, "w": str(w)}
        found.append(
            Identity(
                "chain_split",
                inputs,
                partial(full_chain_coefficient, w, n),
                partial(split_chain_coefficient, w, n),
            )
        )
        found.append(
            Identity(
                "chain_unit",
                inputs,
                partial(full_chain_coefficient, w, n),
                partial(_unit_coefficient, w),
                compare=compare,
            )
        )
        found.append(
            Identity(
                "duality_schubert",
                {"n": n, "w": str(w)},
                partial(_dual_schubert, w, n),
                partial(schubert_a_single, star(w, n)),
                compare=compare,
            )
        )
    for r in range(1, n + 1):
        for i in range(1, n + 1):
            found.append(
                Identity(
                    "duality_eh",
                    {"n": n, "r": r, "i": i},
                    partial(_dual_elementary, i, r, n),
                    partial(complete, i, variables("y", n - r)),
                    compare=compare,
                )
            )
    return found


# Key identities


def _s_factor(w: WeylElement, fixed: int) -> WeylElement | None:
    """unshift(w, fixed) when w is a permutation fixing 1..fixed."""
    if not w.in_symmetric_group() or any(w(i) != i for i in range(1, fixed + 1)):
        return None
    return unshift(w, fixed)


def key_single(w: WeylElement, k: int) -> Value:
    """sum over v (1_k x u) = w of J_v(X; Y_(k)) AS_u(y_{k+1}, ...) (G_v in type A)."""
    _require_increasing(w, k)
    kn = numeric(k)
    total = _zero(w.kind)
    for v, rest in reduced_factorizations(w, 2):
        u = _s_factor(rest, kn)
        if u is None:
            continue
        total = total + _mul(mixed_stanley(v, k), _move(schubert_a_single(u), "y", 1, kn))
    return total


def key_double(w: WeylElement, k: int, l: int) -> Value:
    """sum over (1_l x u) v (1_k x u') = w of AS_{u^-1}(-Z_{>l}) J_v(X; Y_(k)/Z_(l)) AS_{u'}(Y_{>k})."""
    _require_increasing(w, k, l)
    kn = numeric(k)
    total = _zero(w.kind)
    for left, v, right in reduced_factorizations(w, 3):
        u = _s_factor(left, l)
        u2 = _s_factor(right, kn)
        if u is None or u2 is None:
            continue
        z_part = _move(schubert_a_single(inverse(u)), "z", -1, l)
        y_part = _move(schubert_a_single(u2), "y", 1, kn)
        total = total + _mul(_mul(_stanley_value(v, kn, l, w.kind is not Kind.A), z_part), y_part)
    return total


def factored_double(w: WeylElement) -> Value:
    """sum over u v u' = w (u, u' permutations) of AS_{u^-1}(-Z) F_v(X) AS_{u'}(Y)."""
    total = _zero(w.kind)
    if w.kind is Kind.A:
        for u, v in reduced_factorizations(w, 2):
            total += _move(schubert_a_single(inverse(u)), "z", -1) * schubert_a_single(v)
        return total
    for u, v, right in reduced_factorizations(w, 3):
        if not (u.in_symmetric_group() and right.in_symmetric_group()):
            continue
        z_part = _move(schubert_a_single(inverse(u)), "z", -1)
        total = total + _mul(_mul(_stanley_value(v, 0, 0, True), z_part), schubert_a_single(right))
    return total


def restricted_left(w: WeylElement, k: int, l: int) -> Value:
    """sum over u v = w (u a permutation) of G_{u^-1}(-Z_(l)) J_v(X; Y_(k))."""
    total = _zero(w.kind)
    for u, v in reduced_factorizations(w, 2):
        if not u.in_symmetric_group():
            continue
        g = _move(stanley_a(inverse(u), l), "z", -1)
        total = total + _mul(mixed_stanley(v, k), g)
    return total


def restricted_right(w: WeylElement, k: int, l: int) -> Value:
    """sum over u v = w^-1 (u a permutation) of G_{u^-1}(Y_(k)) J_v(X; -Z_(l))."""
    total = _zero(w.kind)
    for u, v in reduced_factorizations(inverse(w), 2):
        if not u.in_symmetric_group():
            continue
        g = stanley_a(inverse(u), numeric(k))
        j = mixed_stanley(v, l)
        if isinstance(j, GammaElement):
            j = j.map(lambda f: _move(f, "z", -1))
        else:
            j = _move(j, "z", -1)
        total = total + _mul(j, g)
    return total


def _value(letter: str, w: WeylElement, double: bool = True) -> Value:
    return schubert(letter, w, double=double).value


def key_identities(type_letter: str, w: WeylElement | str, k: int = 0, l: int = 0) -> list[Identity]:
    """The key, factorization and restricted mixed Stanley identities for w."""
    letter = check_type(type_letter)
    if letter == "B":
        raise InvalidOption("Key identities are checked in types A, C and D")
    w = coerce_element(letter, w)
    inputs = {"type": letter, "w": str(w), "k": k, "l": l}
    full = partial(_value, letter, w)
    found = [Identity("factored_double", inputs, full, partial(factored_double, w))]
    if not is_increasing_up_to(w, k):
        return found
    found.append(Identity("key_single", inputs, partial(_value, letter, w, False), partial(key_single, w, k)))
    if is_increasing_up_to(inverse(w), l):
        restricted = partial(mixed_stanley, w, k, l)
        found.append(Identity("key_double", inputs, full, partial(key_double, w, k, l)))
        found.append(Identity("restricted_left", inputs, restricted, partial(restricted_left, w, k, l)))
        found.append(Identity("restricted_right", inputs, restricted, partial(restricted_right, w, k, l)))
    return found


# Top and maximal elements


def _strip_zero_rows(rho, beta, alpha):
    rho, beta, alpha = list(rho), list(beta), list(alpha)
    while alpha and alpha[-1] == 0 and beta[-1] == 0:
        rho.pop()
        beta.pop()
        alpha.pop()
    return tuple(rho), tuple(beta), tuple(alpha)


def _e_rows(size: int, n: int) -> list[list[Poly]]:
    """Row i uses y_1..y_{n-i} and -z_1..-z_{n-i}."""
    return [variables("y", n - i) + variables("-z", n - i) for i in range(1, size + 1)]


def _h_rows(size: int) -> list[list[Poly]]:
    """Row i uses y_1..y_i and -z_1..-z_i."""
    return [variables("y", i) + variables("-z", i) for i in range(1, size + 1)]


def _qp(parts: Sequence[int], basis: str) -> GammaElement:
    return schur_QP(trim(parts), basis)


def c_top_h_sum(n: int) -> GammaElement:
    """sum over lambda in delta_{n-1} of Q_{delta_n + lambda} S_{delta_{n-1}/lambda'}(h(Y, -Z))."""
    size = n - 1
    total = GammaElement(0)
    rows = _h_rows(size)
    for lam in partitions_inside(staircase(size)):
        shape = tuple(d + p for d, p in zip(staircase(n), pad(lam, n)))
        det = flagged_schur(staircase(size), pad(conjugate(lam), size), row_alphabets=rows)
        if det:
            total = total + _qp(shape, BASIS_Q) * det
    return total


def c_top_e_sum(n: int) -> GammaElement:
    """sum over lambda in delta_{n-1} of Q_{delta_n + lambda} S_{delta_{n-1}/lambda}(e(Y, -Z))."""
    size = n - 1
    total = GammaElement(0)
    rows = _e_rows(size, n)
    for lam in partitions_inside(staircase(size)):
        shape = tuple(d + p for d, p in zip(staircase(n), pad(lam, n)))
        det = flagged_schur(staircase(size), pad(lam, size), basis="e", row_alphabets=rows)
        if det:
            total = total + _qp(shape, BASIS_Q) * det
    return total


def c_top_pfaffian(n: int) -> GammaElement:
    rho = pad(staircase(n - 1), n)
    alpha = tuple(2 * n - 1 - 2 * i for i in range(n))
    return multi_schur_Q(rho, tuple(-r for r in rho), alpha)


def c_s0w0_pfaffian(n: int) -> GammaElement:
    rho = staircase(n - 1)
    alpha = tuple(a + b for a, b in zip(staircase_star(n), rho))
    return multi_schur_Q(rho, tuple(-r for r in rho), alpha)


def c_s0w0_sum(n: int) -> GammaElement:
    size = n - 1
    total = GammaElement(0)
    rows = _e_rows(size, n)
    for lam in partitions_inside(staircase_star(n)):
        shape = tuple(d + p for d, p in zip(pad(staircase(size), size), pad(lam, size)))
        det = flagged_schur(staircase_star(n), pad(lam, size), basis="e", row_alphabets=rows)
        if det:
            total = total + _qp(shape, BASIS_Q) * det
    return total


def c_grassmannian_pfaffian(k: int, n: int, shifted: bool = False) -> GammaElement:
    """^(k..k) Q^beta_(n+k, ..., 2k+1) with beta = (1-n, ..., -k), or (-k, ..., -k) when shifted."""
    size = n - k
    alpha = tuple(n + k - i for i in range(size))
    beta = (-k,) * size if shifted else tuple(1 - n + i for i in range(size))
    return multi_schur_Q((k,) * size, beta, alpha)


def c_grassmannian_lr(k: int, n: int) -> GammaElement:
    """sum N^mu_{nu1 nu2} Q_{delta_{n-k} + mu^v}(X) s_{nu1'}(Y_(k)) s_{nu2'}(-Z_(k))."""
    size = n - k
    mu0 = (2 * k,) * size
    ys, zs = variables("y", k), variables("-z", k)
    total = GammaElement(0)
    for mu in partitions_inside(mu0):
        mu_p = pad(mu, size)
        dual = tuple(2 * k - mu_p[size - 1 - i] for i in range(size))
        shape = tuple(d + p for d, p in zip(staircase(size), dual))
        q_part = _qp(shape, BASIS_Q)
        for nu1 in partitions_inside(mu):
            for nu2 in partitions_inside(mu):
                if sum(nu1) + sum(nu2) != sum(mu):
                    continue
                c = lr_coefficients(nu1, nu2).get(trim(mu), 0)
                if c:
                    poly = schur_poly(conjugate(nu1), ys) * schur_poly(conjugate(nu2), zs)
                    total = total + q_part * (c * poly)
    return total


def c_coset_pfaffian(n: int, flags: FlagSequence) -> GammaElement:
    lam, beta, rho = coset_data(Kind.BC, n, flags)
    return multi_schur_Q(rho, beta, lam)


def d_top_star(n: int, pfaffian: bool = False) -> GammaElement:
    rho = staircase(n - 1)
    beta = tuple(-r for r in rho)
    alpha = tuple(2 * r for r in rho)
    if pfaffian:
        return phat_pfaffian(rho, beta, alpha)
    return phat_star(rho, beta, alpha)


def d_top_sum(n: int) -> GammaElement:
    """The P-function expansion of the top type D polynomial (parity of n chooses the shape)."""
    size = n - 1
    rows = _e_rows(size, n)
    total = GammaElement(0, RING_GAMMA_PRIME)
    if n % 2 == 0:
        base, outer = staircase(size), staircase(size)
    else:
        base, outer = pad(staircase(n - 2), size), staircase_star(n)
    for lam in partitions_inside(outer):
        shape = tuple(d + p for d, p in zip(pad(base, size), pad(lam, size)))
        det = flagged_schur(pad(outer, size), pad(lam, size), basis="e", row_alphabets=rows)
        if det:
            total = total + _qp(shape, BASIS_P) * det
    return total


def d_grassmannian_star(k: int, n: int) -> GammaElement:
    k_num = numeric(k)
    size = n - k_num
    rho = (k_num,) * size
    beta = tuple(1 - n + i for i in range(size))
    alpha = tuple(n + k_num - 1 - i for i in range(size))
    return phat_star(*_strip_zero_rows(rho, beta, alpha))


def d_coset_star(n: int, flags: FlagSequence) -> GammaElement:
    lam, beta, rho = coset_data(Kind.D, n, flags)
    return phat_star(*_strip_zero_rows(rho, beta, lam))


def _flag_sequences(kind: Kind, n: int) -> list[FlagSequence]:
    if kind is Kind.BC:
        pool = list(range(0, n))
    else:
        pool = [BOX] + list(range(1, n))
    found = []
    for size in range(1, len(pool) + 1):
        for entries in combinations(pool, size):
            flags = FlagSequence(kind, entries)
            if kind is Kind.D and entries[0] == 1:
                continue
            found.append(flags)
    return found


def a_top_product(n: int) -> Poly:
    """prod over i + j <= n of (y_i - z_j)."""
    total = RING.one
    for i in range(1, n):
        for j in range(1, n + 1 - i):
            total = total * (var("y", i) - var("z", j))
    return total


def c_s0w0_divided(n: int) -> GammaElement:
    return divided_difference(_value("C", longest_element(Kind.BC, n)), 0, "y")


def top_identities(type_letter: str, n: int) -> list[Identity]:
    """Formulas for the longest element and the maximal (Grassmannian and coset) elements."""
    letter = check_type(type_letter)
    if letter == "B":
        raise InvalidOption("Top formulas are checked in types A, C and D")
    kind = Kind.from_type(letter)
    if n < minimal_rank(kind):
        raise InvalidOption(f"Rank {n} is too small for type {letter}")
    inputs = {"type": letter, "n": n}
    w0 = longest_element(kind, n)
    top = partial(_value, letter, w0)
    if kind is Kind.A:
        return [Identity("top_product", inputs, top, partial(a_top_product, n))]
    if kind is Kind.BC:
        s0w0 = partial(_value, letter, compose(generator(kind, 0), w0))
        found = [
            Identity("top_h_sum", inputs, top, partial(c_top_h_sum, n)),
            Identity("top_e_sum", inputs, top, partial(c_top_e_sum, n)),
            Identity("top_pfaffian", inputs, top, partial(c_top_pfaffian, n)),
            Identity("s0w0_divided", inputs, s0w0, partial(c_s0w0_divided, n)),
            Identity("s0w0_pfaffian", inputs, s0w0, partial(c_s0w0_pfaffian, n)),
            Identity("s0w0_sum", inputs, s0w0, partial(c_s0w0_sum, n)),
        ]
        for k in range(0, n):
            left = partial(_value, letter, longest_grassmannian(kind, k, n))
            k_inputs = {**inputs, "k": k}
            found.append(Identity("grassmannian_pfaffian", k_inputs, left, partial(c_grassmannian_pfaffian, k, n)))
            found.append(Identity("grassmannian_shifted", k_inputs, left, partial(c_grassmannian_pfaffian, k, n, True)))
            found.append(Identity("grassmannian_lr", k_inputs, left, partial(c_grassmannian_lr, k, n)))
        for flags in _flag_sequences(kind, n):
            left = partial(_value, letter, longest_coset_element(kind, n, flags))
            found.append(
                Identity("coset_pfaffian", {**inputs, "a": str(flags)}, left, partial(c_coset_pfaffian, n, flags))
            )
        return found
    parity = "even" if n % 2 == 0 else "odd"
    found = [
        Identity("top_star", inputs, top, partial(d_top_star, n)),
        Identity("top_sum", inputs, top, partial(d_top_sum, n), [f"n is {parity}"]),
    ]
    if n <= 3:
        found.append(Identity("top_pfaffian", inputs, top, partial(d_top_star, n, True)))
    for k in [BOX] + list(range(1, n)):
        left = partial(_value, letter, longest_grassmannian(kind, k, n))
        found.append(
            Identity("grassmannian_star", {**inputs, "k": format_generator(k)}, left, partial(d_grassmannian_star, k, n))
        )
    for flags in _flag_sequences(kind, n):
        left = partial(_value, letter, longest_coset_element(kind, n, flags))
        found.append(Identity("coset_star", {**inputs, "a": str(flags)}, left, partial(d_coset_star, n, flags)))
    return found
