"""Raising operators, Pfaffians and the symmetric function families built on them."""
from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from sympy import QQ
from sympy.combinatorics.permutations import Permutation

from .const import (
    ALPHABET_ARITY,
    BASIS_P,
    BASIS_Q,
    BASIS_SCHUR,
    F_ALTERNATING,
    F_B,
    F_BTILDE,
    F_CHOICES,
    F_HALF,
    RING_GAMMA,
    RING_GAMMA_PRIME,
)
from .exceptions import (
    HypothesisViolated,
    InvalidOption,
    LengthMismatch,
    NonIntegralCoefficient,
    NonTerminating,
    NotStrict,
    NotSymmetric,
)
from .polycore import (
    OFFSET,
    RING,
    GammaElement,
    Poly,
    check_degree_cap,
    check_integral,
    coefficient_of_one,
    complete,
    determinant,
    elementary,
    gen_eh,
    index_of,
    pfaffian,
    q,
    schur_Q_rep,
    substitute,
    supersym_h,
    variables,
    x_count,
    x_to_gamma,
)
from .weyl import conjugate, is_partition, is_strict, pad, partitions_inside, staircase, trim

_LOGGER = logging.getLogger(__name__)

PAIR_NONE = "none"
PAIR_DIFF = "diff"
PAIR_RATIO = "ratio"
PAIR_INVERSE = "inverse"
PAIR_KINDS = (PAIR_NONE, PAIR_DIFF, PAIR_RATIO, PAIR_INVERSE)


def _series(kind: str, k: int) -> int:
    """Coefficient of R^k in the factor attached to a pair."""
    if kind == PAIR_NONE:
        return 1 if k == 0 else 0
    if kind == PAIR_DIFF:
        return (1, -1)[k] if k < 2 else 0
    if kind == PAIR_RATIO:
        return 1 if k == 0 else 2 * (-1) ** k
    if kind == PAIR_INVERSE:
        return (-1) ** k
    raise ValueError(f"Unknown pair kind {kind!r}")


@dataclass(frozen=True)
class RaisingExpr:
    """A product over pairs i < j of one of 1, 1 - R_ij, (1 - R_ij)/(1 + R_ij), (1 + R_ij)^-1."""

    size: int
    pairs: tuple[tuple[tuple[int, int], str], ...] = ()
    default: str = PAIR_DIFF

    @classmethod
    def schur(cls, size: int) -> RaisingExpr:
        """prod_{i<j} (1 - R_ij)."""
        return cls(size, (), PAIR_DIFF)

    @classmethod
    def q(cls, size: int) -> RaisingExpr:
        """prod_{i<j} (1 - R_ij)/(1 + R_ij)."""
        return cls(size, (), PAIR_RATIO)

    @classmethod
    def theta(cls, size: int, ratio_pairs) -> RaisingExpr:
        """prod_{i<j} (1 - R_ij) prod_{(i,j) in C} (1 + R_ij)^-1, pairs 0-based."""
        return cls(size, tuple(sorted((tuple(p), PAIR_RATIO) for p in ratio_pairs)), PAIR_DIFF)

    def kind(self, i: int, j: int) -> str:
        for pair, kind in self.pairs:
            if pair == (i, j):
                return kind
        return self.default


@dataclass
class IndexedFamily:
    """A family of ring elements f(position, index, hat) vanishing for index < threshold."""

    flavor: str
    evaluator: Callable[[int, int, bool], Poly]
    vanishing_threshold: int | None = 0
    _memo: dict = field(default_factory=dict, repr=False)

    def value(self, pos: int, index: int, hat: bool = False) -> Poly:
        if self.vanishing_threshold is not None and index < self.vanishing_threshold:
            return RING.zero
        key = (pos, index, hat)
        if key not in self._memo:
            self._memo[key] = self.evaluator(pos, index, hat)
        return self._memo[key]


RaisingTerm = tuple[tuple[int, ...], int, int, bool]


def expand_raising(
    alpha: Sequence[int],
    expr: RaisingExpr,
    threshold: int | None = 0,
    track: bool = False,
    mpos: int | None = None,
) -> dict[RaisingTerm, int]:
    """Expand expr applied to alpha into {(nu, supp, supp_m, touches_m): coefficient}.

    supp is a bitmask of the positions moved by the monomial; supp_m only counts
    pairs (i, j) with j < mpos; touches_m records whether a pair involves mpos.
    Without track the three markers are zero.
    """
    size = len(alpha)
    if size != expr.size:
        raise LengthMismatch(f"Raising operator of size {expr.size} applied to {tuple(alpha)}")
    if threshold is None:
        if any(expr.kind(i, j) in (PAIR_RATIO, PAIR_INVERSE) for i in range(size) for j in range(i + 1, size)):
            raise NonTerminating("A geometric raising factor needs a vanishing threshold")
        floor = None
    else:
        floor = threshold
    states: dict[RaisingTerm, int] = {(tuple(alpha), 0, 0, False): 1}
    for i in range(size):
        for j in range(i + 1, size):
            kind = expr.kind(i, j)
            if kind == PAIR_NONE:
                continue
            updated: dict[RaisingTerm, int] = defaultdict(int)
            for (nu, supp, supp_m, touch), c in states.items():
                if floor is None:
                    top = 1
                else:
                    top = sum(nu[i + 1 :]) - (size - i - 1) * floor
                    if kind == PAIR_DIFF:
                        top = min(top, 1)
                for k in range(0, top + 1):
                    coeff = _series(kind, k)
                    if not coeff:
                        continue
                    if k == 0:
                        updated[(nu, supp, supp_m, touch)] += c
                        continue
                    new = list(nu)
                    new[i] += k
                    new[j] -= k
                    key = (tuple(new), supp, supp_m, touch)
                    if track:
                        bits = (1 << i) | (1 << j)
                        key = (
                            tuple(new),
                            supp | bits,
                            supp_m | bits if mpos is not None and j < mpos else supp_m,
                            touch or (mpos is not None and mpos in (i, j)),
                        )
                    updated[key] += coeff * c
            states = {key: c for key, c in updated.items() if c}
        if floor is not None:
            states = {key: c for key, c in states.items() if key[0][i] >= floor}
    return states


def raising_apply(
    expr: RaisingExpr,
    family: IndexedFamily,
    alpha: Sequence[int],
    star: bool = False,
) -> Poly:
    """Apply a raising expression to the family; with star, untouched positions use the hat family."""
    total = RING.zero
    for (nu, supp, _, _), c in expand_raising(alpha, expr, family.vanishing_threshold, track=star).items():
        term = RING(c)
        for pos, index in enumerate(nu):
            hat = star and not (supp >> pos) & 1
            term = term * family.value(pos, index, hat)
            if not term:
                break
        check_degree_cap(term)
        total += term
    return total


# Families


def h_family(m: int, l: int) -> IndexedFamily:
    """h_p(Y/Z) in m y-variables and l z-variables."""
    return IndexedFamily("h_super", lambda pos, p, hat: supersym_h(p, m, l))


def q_family() -> IndexedFamily:
    return IndexedFamily("q", lambda pos, p, hat: q(p))


@lru_cache(maxsize=None)
def c_poly(k: int, r: int, p: int) -> Poly:
    """^k c^r_p = sum_{i,j} q_{p-i-j} h^{-k}_i(Y) h^r_j(-Z)."""
    if p < 0:
        return RING.zero
    total = RING.zero
    for i in range(p + 1):
        hy = gen_eh("h", i, -k, "y")
        if not hy:
            continue
        for j in range(p - i + 1):
            hz = gen_eh("h", j, r, "-z")
            if hz:
                total += q(p - i - j) * hy * hz
    return total


def c_family(k: int, r: int, p: int) -> GammaElement:
    """^k c^r_p as an element of Gamma[Y, Z]."""
    return GammaElement(c_poly(k, r, p))


def hat_sign(pos: int, f_choice: str) -> int:
    """Sign of the e_k(Y) e(-Z) correction at 0-based position pos."""
    if f_choice == F_ALTERNATING:
        return -1 if pos % 2 == 0 else 1
    if f_choice == F_B:
        return 1
    if f_choice == F_BTILDE:
        return -1
    if f_choice == F_HALF:
        return 0
    raise InvalidOption(f"f_choice must be one of {F_CHOICES}, got {f_choice!r}")


def c_hat_correction(pos: int, rho: int, beta: int, p: int, f_choice: str = F_ALTERNATING) -> Poly:
    """The hat correction of ^rho c^beta_p, nonzero only when beta = rho - p < 0."""
    if not (beta == rho - p and beta < 0):
        return RING.zero
    sign = hat_sign(pos, f_choice)
    if not sign:
        return RING.zero
    return sign * gen_eh("e", rho, rho, "y") * gen_eh("e", p - rho, p - rho, "-z")


def c_vector_family(
    rho: Sequence[int], beta: Sequence[int], f_choice: str = F_ALTERNATING
) -> IndexedFamily:
    """The family ^rho c^beta with hat variants ^rho c-hat^beta per position."""

    def evaluate(pos: int, p: int, hat: bool) -> Poly:
        value = c_poly(rho[pos], beta[pos], p)
        if hat:
            value = value + c_hat_correction(pos, rho[pos], beta[pos], p, f_choice)
        return value

    return IndexedFamily("c_hat", evaluate)


@lru_cache(maxsize=None)
def frak_c(r: int, p: int) -> Poly:
    """frak-c^r_p = sum_j q_{p-j} e^r_j(-t)."""
    if p < 0:
        return RING.zero
    return sum((q(p - j) * gen_eh("e", j, r, "-t") for j in range(p + 1)), RING.zero)


def frak_c_family(beta: Sequence[int]) -> IndexedFamily:
    """frak-c^beta with the hat rule: add (-1)^i e^p_p(-t) when beta_i = p > 0."""

    def evaluate(pos: int, p: int, hat: bool) -> Poly:
        value = frak_c(beta[pos], p)
        if hat and beta[pos] == p > 0:
            sign = -1 if pos % 2 == 0 else 1
            value = value + sign * gen_eh("e", p, p, "-t")
        return value

    return IndexedFamily("frak_c_hat", evaluate)


# Schur functions


def schur_s(alpha: Sequence[int], m: int, l: int = 0) -> Poly:
    """s_alpha(Y/Z) = det(h_{alpha_i + j - i}(Y/Z)) in m y's and l z's."""
    size = len(alpha)
    matrix = [[supersym_h(alpha[i] + j - i, m, l) for j in range(size)] for i in range(size)]
    return determinant(matrix)


def schur_s_raising(alpha: Sequence[int], m: int, l: int = 0) -> Poly:
    """s_alpha(Y/Z) as prod (1 - R_ij) h_alpha."""
    if not alpha:
        return RING.one
    return raising_apply(RaisingExpr.schur(len(alpha)), h_family(m, l), alpha)


def schur_poly(lam: Sequence[int], args: Sequence[Poly]) -> Poly:
    """s_lambda of an explicit list of ring elements."""
    size = len(lam)
    matrix = [[complete(lam[i] + j - i, args) for j in range(size)] for i in range(size)]
    return determinant(matrix)


def flagged_schur(
    alpha: Sequence[int],
    beta: Sequence[int] | None = None,
    rho: Sequence[int] | None = None,
    basis: str = "h",
    alphabet: str = "t",
    row_alphabets: Sequence[Sequence[Poly]] | None = None,
) -> Poly:
    """S^rho_{alpha/beta} = det(h^{rho_i}_{alpha_i - beta_j + j - i}).

    With row_alphabets, row i uses the given list of ring elements instead of
    the first rho_i variables of alphabet.
    """
    size = len(alpha)
    beta = tuple(beta) if beta is not None else (0,) * size
    if len(beta) != size:
        raise LengthMismatch(f"alpha {tuple(alpha)} and beta {beta} differ in length")
    if row_alphabets is not None:
        if len(row_alphabets) != size:
            raise LengthMismatch("One alphabet per row is required")
        fn = elementary if basis == "e" else complete
        entry = lambda i, j: fn(alpha[i] - beta[j] + j - i, list(row_alphabets[i]))
    else:
        if rho is None or len(rho) != size:
            raise LengthMismatch("rho must have one entry per row")
        entry = lambda i, j: gen_eh(basis, alpha[i] - beta[j] + j - i, rho[i], alphabet)
    return determinant([[entry(i, j) for j in range(size)] for i in range(size)])


def semistandard_tableaux(lam: Sequence[int], rho: Sequence[int]):
    """Column strict tableaux of shape lam with row i entries at most rho_i."""
    lam = tuple(lam)

    def fill(row: int, above: tuple[int, ...]):
        if row == len(lam):
            yield ()
            return
        width = lam[row]

        def build(col: int, current: tuple[int, ...]):
            if col == width:
                yield current
                return
            low = current[-1] if current else 1
            if row > 0:
                low = max(low, above[col] + 1)
            for value in range(low, rho[row] + 1):
                yield from build(col + 1, current + (value,))

        for current in build(0, ()):
            for rest in fill(row + 1, current):
                yield (current,) + rest

    yield from fill(0, ())


def tableau_flagged_schur(lam: Sequence[int], rho: Sequence[int], alphabet: str = "t") -> Poly:
    """Sum of t^U over column strict tableaux U with row i entries at most rho_i."""
    total = RING.zero
    for tableau in semistandard_tableaux(lam, rho):
        term = RING.one
        for row in tableau:
            for value in row:
                term = term * RING.gens[index_of(alphabet, value)]
        total += term
    return total


def he_duality_sides(lam: Sequence[int], mu: Sequence[int], k: int, l: int) -> tuple[Poly, Poly]:
    """Both determinants of the h/e duality for lam, mu inside the l x k box."""
    lam_p, mu_p = pad(lam, l), pad(mu, l)
    lam_c, mu_c = pad(conjugate(trim(lam)), k), pad(conjugate(trim(mu)), k)
    left = flagged_schur(lam_p, mu_p, [k + i + 1 - lam_p[i] for i in range(l)], "h", "t")
    right = flagged_schur(lam_c, mu_c, [k + lam_c[i] - i - 1 for i in range(k)], "e", "t")
    return left, right


# Q and P functions


def schur_QP(alpha: Sequence[int], ring: str = BASIS_Q) -> GammaElement:
    """Q_alpha = R q_alpha by raising operators; P_alpha = 2^-l Q_alpha in Gamma'."""
    alpha = tuple(alpha)
    if not alpha:
        value = RING.one
    else:
        value = raising_apply(RaisingExpr.q(len(alpha)), q_family(), alpha)
    if ring == BASIS_P:
        return GammaElement(value * QQ(1, 2 ** len(trim(alpha))), RING_GAMMA_PRIME)
    return GammaElement(value, RING_GAMMA)


def schur_Q_pfaffian(alpha: Sequence[int]) -> GammaElement:
    """Q_alpha from the Pfaffian of two-row Q functions."""
    return GammaElement(schur_Q_rep(tuple(alpha)))


def multi_schur_Q(rho: Sequence[int], beta: Sequence[int], alpha: Sequence[int]) -> GammaElement:
    """^rho Q^beta_alpha(c) = R ^rho c^beta_alpha."""
    if not len(rho) == len(beta) == len(alpha):
        raise LengthMismatch("rho, beta and alpha must have equal length")
    if not alpha:
        return GammaElement(RING.one)
    family = c_vector_family(rho, beta)
    return GammaElement(raising_apply(RaisingExpr.q(len(alpha)), family, alpha))


def phat_star(
    rho: Sequence[int],
    beta: Sequence[int],
    alpha: Sequence[int],
    f_choice: str = F_ALTERNATING,
) -> GammaElement:
    """^rho P-hat^beta_alpha(c) = 2^-l R * ^rho c-hat^beta_alpha."""
    if not len(rho) == len(beta) == len(alpha):
        raise LengthMismatch("rho, beta and alpha must have equal length")
    size = len(alpha)
    if not size:
        return GammaElement(RING.one, RING_GAMMA_PRIME)
    family = c_vector_family(rho, beta, f_choice)
    value = raising_apply(RaisingExpr.q(size), family, alpha, star=True)
    return GammaElement(value * QQ(1, 2**size), RING_GAMMA_PRIME)


def _phat_pair(rho, beta, alpha, i: int, j: int, f_choice: str) -> Poly:
    """Two-row entry 2^-2 R * c-hat on rows i, j keeping their signs."""
    total = RING.zero
    pair = (alpha[i], alpha[j])
    for (nu, supp, _, _), c in expand_raising(pair, RaisingExpr.q(2), 0, track=True).items():
        term = RING(c)
        for slot, pos in enumerate((i, j)):
            value = c_poly(rho[pos], beta[pos], nu[slot])
            if not (supp >> slot) & 1:
                value = value + c_hat_correction(pos, rho[pos], beta[pos], nu[slot], f_choice)
            term = term * value
        total += term
    return total * QQ(1, 4)


def phat_pfaffian(
    rho: Sequence[int],
    beta: Sequence[int],
    alpha: Sequence[int],
    f_choice: str = F_ALTERNATING,
) -> GammaElement:
    """^rho P-hat^beta_alpha(c) as a Pfaffian of two-row entries (odd sizes padded)."""
    if not len(rho) == len(beta) == len(alpha):
        raise LengthMismatch("rho, beta and alpha must have equal length")
    size = len(alpha)
    if not size:
        return GammaElement(RING.one, RING_GAMMA_PRIME)

    def single(i: int) -> Poly:
        value = c_poly(rho[i], beta[i], alpha[i])
        value = value + c_hat_correction(i, rho[i], beta[i], alpha[i], f_choice)
        return value * QQ(1, 2)

    if size == 1:
        return GammaElement(single(0), RING_GAMMA_PRIME)
    padded = size + size % 2

    def entry(i: int, j: int) -> Poly:
        if j == size:
            return single(i)
        return _phat_pair(rho, beta, alpha, i, j, f_choice)

    return GammaElement(pfaffian(padded, entry), RING_GAMMA_PRIME)


# Double Schur P functions


def double_schurP(lam: Sequence[int], t_arity: int | None = None) -> GammaElement:
    """P_lambda(X|t) = 2^-l R * frak-c-hat^lambda_lambda."""
    lam = tuple(lam)
    if not is_strict(lam):
        raise NotStrict(f"{lam} is not strict")
    if not lam:
        return GammaElement(RING.one, RING_GAMMA_PRIME)
    value = raising_apply(RaisingExpr.q(len(lam)), frak_c_family(lam), lam, star=True)
    value = _truncate_t(value * QQ(1, 2 ** len(lam)), t_arity)
    return GammaElement(value, RING_GAMMA_PRIME)


def _truncate_t(f: Poly, t_arity: int | None) -> Poly:
    if t_arity is None:
        return f
    mapping = {
        index_of("t", i): RING.zero for i in range(t_arity + 1, ALPHABET_ARITY["t"] + 1)
    }
    return substitute(f, mapping)


def _antisymmetrize_over_vandermonde(numerator: Poly, n: int) -> Poly:
    """sum_w w(numerator / V) as sum c_gamma s_{gamma - delta}(x_1..x_n)."""
    lo = OFFSET["x"]
    grouped: dict[tuple[int, ...], Poly] = defaultdict(lambda: RING.zero)
    for monom, coeff in numerator.iterterms():
        exps = monom[lo : lo + n]
        if len(set(exps)) < n:
            continue
        order = sorted(range(n), key=lambda i: -exps[i])
        sign = -1 if Permutation(order).is_odd else 1
        rest = list(monom)
        rest[lo : lo + n] = [0] * n
        grouped[tuple(sorted(exps, reverse=True))] += sign * RING({tuple(rest): coeff})
    total = RING.zero
    for gamma, coeff in grouped.items():
        shape = tuple(g - (n - 1 - i) for i, g in enumerate(gamma))
        total += coeff * _schur_in_x(trim(shape), n)
    return total


@lru_cache(maxsize=None)
def _schur_in_x(lam: tuple[int, ...], n: int) -> Poly:
    return schur_poly(lam, variables("x", n))


def symmetrized_P(alpha: Sequence[int], ell: int, n: int, double: bool = False) -> Poly:
    """P^(ell)_alpha(x_1..x_n), or P_lambda(x_1..x_n|t) with double=True."""
    alpha = tuple(alpha)
    if len(alpha) != ell:
        raise LengthMismatch(f"alpha must have {ell} entries")
    if n < ell:
        raise LengthMismatch(f"n = {n} is smaller than l = {ell}")
    xs = variables("x", n)
    numerator = RING.one
    for i in range(ell):
        if double:
            for r in range(1, alpha[i] + 1):
                numerator = numerator * (xs[i] - RING.gens[index_of("t", r)])
        else:
            numerator = numerator * xs[i] ** alpha[i]
    for i in range(ell):
        for j in range(i + 1, n):
            numerator = numerator * (xs[i] + xs[j])
    for i in range(ell, n):
        for j in range(i + 1, n):
            numerator = numerator * (xs[i] - xs[j])
    total = _antisymmetrize_over_vandermonde(numerator, n)
    return total * QQ(1, factorial(n - ell))


def symmetrized_P_drop_zero(alpha: Sequence[int], ell: int, n: int) -> Poly:
    """P^(ell)_alpha for alpha ending in 0 and even n: zero for odd ell, P^(ell-1) of the rest otherwise."""
    alpha = tuple(alpha)
    if len(alpha) != ell:
        raise LengthMismatch(f"alpha must have {ell} entries")
    if not alpha or alpha[-1] != 0:
        raise HypothesisViolated(f"{alpha} does not end in a zero part")
    if n % 2:
        raise HypothesisViolated(f"n = {n} is odd")
    if ell % 2:
        return RING.zero
    return symmetrized_P(alpha[:-1], ell - 1, n)


def symmetrization_rank(lam: Sequence[int]) -> int:
    """Even n at least l(lam) with enough variables to separate P-functions of weight |lam|."""
    n = max(len(lam), x_count(sum(lam)))
    return n + n % 2


def double_schurP_symmetrized(lam: Sequence[int]) -> GammaElement:
    """P_lambda(X|t) by symmetrizing in an even number of x-variables."""
    lam = tuple(lam)
    if not is_strict(lam):
        raise NotStrict(f"{lam} is not strict")
    n = symmetrization_rank(lam)
    return x_to_gamma(symmetrized_P(lam, len(lam), n, double=True), n, RING_GAMMA_PRIME)


def double_schurP_expansion(lam: Sequence[int]) -> GammaElement:
    """P_lambda(X|t) = sum_{nu in mu} P_{delta + nu}(X) S^lambda_{mu/nu}(e(-t))."""
    lam = tuple(lam)
    if not is_strict(lam):
        raise NotStrict(f"{lam} is not strict")
    ell = len(lam)
    if not ell:
        return GammaElement(RING.one, RING_GAMMA_PRIME)
    base = pad(staircase(ell - 1), ell) if ell % 2 == 0 else staircase(ell)
    mu = tuple(a - b for a, b in zip(lam, base))
    total = RING.zero
    for nu in partitions_inside(trim(mu)):
        nu_p = pad(nu, ell)
        shape = trim(b + v for b, v in zip(base, nu_p))
        flag = flagged_schur(mu, nu_p, lam, "e", "-t")
        if flag:
            total += schur_Q_rep(shape) * QQ(1, 2 ** len(shape)) * flag
    return GammaElement(total, RING_GAMMA_PRIME)


# Basis expansions


def _group_by_alphabet(f: Poly, alphabet: str, m: int) -> dict[tuple[int, ...], Poly]:
    lo = OFFSET[alphabet]
    hi = lo + ALPHABET_ARITY[alphabet]
    groups: dict[tuple[int, ...], dict] = defaultdict(dict)
    for monom, coeff in f.iterterms():
        block = monom[lo:hi]
        if any(block[m:]):
            raise NotSymmetric(f"Polynomial uses more than {m} {alphabet}-variables")
        rest = monom[:lo] + (0,) * (hi - lo) + monom[hi:]
        groups[block[:m]][rest] = coeff
    return {k: RING.from_dict(v) for k, v in groups.items()}


def schur_expand(f: Poly, alphabet: str = "y", m: int | None = None) -> dict[tuple[int, ...], Poly]:
    """Coefficients of s_lambda(alphabet_1..alphabet_m) in f by leading-term peeling."""
    if m is None:
        m = ALPHABET_ARITY[alphabet]
    groups = _group_by_alphabet(f, alphabet, m)
    args = variables(alphabet, m)
    result: dict[tuple[int, ...], Poly] = {}
    while groups:
        lead = max(groups)
        lam = trim(lead)
        if tuple(lead) != pad(lam, m) or not is_partition(lam):
            raise NotSymmetric(f"Leading exponent {lead} is not a partition")
        coeff = groups[lead]
        result[lam] = coeff
        for exp, c in _group_by_alphabet(schur_poly(lam, args), alphabet, m).items():
            updated = groups.get(exp, RING.zero) - coeff * c
            if updated:
                groups[exp] = updated
            else:
                groups.pop(exp, None)
    return dict(sorted(result.items()))


def basis_expand(
    f: GammaElement | Poly,
    basis: str,
    alphabet: str = "y",
    m: int | None = None,
    integral: bool = True,
) -> dict[tuple[int, ...], Poly]:
    """Expand in the Schur, Q or P basis; integrality is checked for the Schur and Q bases."""
    if basis == BASIS_SCHUR:
        if isinstance(f, GammaElement):
            f = f.rep
        result = schur_expand(f, alphabet, m)
    elif basis in (BASIS_Q, BASIS_P):
        if not isinstance(f, GammaElement):
            lo = OFFSET["x"]
            used = max((i + 1 for mono in f.itermonoms() for i in range(8) if mono[lo + i]), default=1)
            f = x_to_gamma(f, used if m is None else m)
        result = f.coefficients(basis)
    else:
        raise InvalidOption(f"Unknown basis {basis!r}")
    if integral and basis in (BASIS_SCHUR, BASIS_Q):
        for lam, c in result.items():
            try:
                check_integral(c)
            except NonIntegralCoefficient as err:
                raise NonIntegralCoefficient(f"Coefficient of {lam}: {err}") from err
    return result


def lr_coefficients(mu: Sequence[int], nu: Sequence[int], bound: int | None = None) -> dict[tuple[int, ...], int]:
    """N^lambda_{mu nu} from the Schur expansion of s_mu s_nu."""
    mu, nu = trim(mu), trim(nu)
    weight = sum(mu) + sum(nu)
    if bound is not None and weight > bound:
        raise LengthMismatch(f"|mu| + |nu| = {weight} exceeds {bound}")
    m = max(len(mu) + len(nu), 1)
    args = variables("y", m)
    product = schur_poly(mu, args) * schur_poly(nu, args)
    return {lam: int(coefficient_of_one(c).numerator) for lam, c in schur_expand(product, "y", m).items()}


def lr_product(mu: Sequence[int], nu: Sequence[int], args: Sequence[Poly]) -> Poly:
    """s_mu s_nu rewritten as sum N^lambda s_lambda (used as an independent check)."""
    return sum(
        (c * schur_poly(lam, args) for lam, c in lr_coefficients(mu, nu).items()), RING.zero
    )


def alternating_check(alpha: Sequence[int], ell: int, n: int) -> bool:
    """P^(ell) changes sign under swapping two entries and vanishes on repeats."""
    base = symmetrized_P(alpha, ell, n)
    for i in range(ell):
        for j in range(i + 1, ell):
            swapped = list(alpha)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            if symmetrized_P(swapped, ell, n) != -base:
                return False
            if alpha[i] == alpha[j] and base:
                return False
    return True

