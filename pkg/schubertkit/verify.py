"""Identity suites and their reports."""
from __future__ import annotations

import asyncio
import logging
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations_with_replacement
from typing import Any

from .config import get_option
from .const import BOX, CONF_JOBS, SUITE_ALL, SUITES
from .exceptions import InvalidOption, SchubertKitError
from .polycore import (
    RING,
    GammaElement,
    as_gamma,
    coefficient_of_one,
    divided_difference,
    format_poly,
    is_integral,
    swap,
)
from .schubert import (
    Identity,
    apply_divided_difference,
    divided_difference_target,
    duality_identities,
    grassmannian_polynomial,
    key_identities,
    mixed_stanley,
    reverse_schubert,
    reverse_schubert_factored,
    reverse_schubert_flagged,
    same,
    schubert,
    splitting_expand,
    splitting_reconstruct,
    splitting_sum,
    stanley,
    stanley_coefficients,
    stanley_from_coefficients,
    top_identities,
)
from .symfunc import (
    alternating_check,
    double_schurP,
    double_schurP_expansion,
    double_schurP_symmetrized,
    flagged_schur,
    he_duality_sides,
    symmetrized_P,
    symmetrized_P_drop_zero,
    tableau_flagged_schur,
)
from .weyl import (
    Kind,
    conjugate,
    descents,
    format_generator,
    generators_of_rank,
    grassmannian_elements,
    inverse,
    is_increasing_up_to,
    iter_group,
    length,
    longest_element,
    minimal_flags,
    pad,
    partitions_inside,
    signs,
    strict_partitions,
)

_LOGGER = logging.getLogger(__name__)

DEFAULT_MAX_N = 3


@dataclass
class CheckResult:
    """Outcome of one identity check."""

    identity: str
    inputs: dict[str, Any]
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "identity": self.identity,
            "inputs": self.inputs,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass
class Report:
    """All checks of one suite, in canonical order."""

    suite: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def counts(self) -> dict[str, int]:
        passed = sum(1 for result in self.results if result.passed)
        return {"passed": passed, "failed": len(self.results) - passed, "total": len(self.results)}

    def failures(self) -> list[CheckResult]:
        return [result for result in self.results if not result.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "counts": self.counts(),
            "results": [result.to_dict() for result in self.results],
        }


def _first_difference(left: Any, right: Any) -> str:
    """A short description of where two sides differ."""
    if isinstance(left, GammaElement) or isinstance(right, GammaElement):
        tag = left.ring_tag if isinstance(left, GammaElement) else right.ring_tag
        diff = as_gamma(left, tag) - as_gamma(right, tag)
        items = sorted(diff.normalized.items())
        if items:
            lam, c = items[0]
            return f"coefficient of Q{lam} differs by {format_poly(c)}"
        return "sides differ"
    if hasattr(left, "terms") and hasattr(right, "terms"):
        diff = left - right
        if diff:
            monom, coeff = max(diff.terms())
            return f"first differing term {format_poly(RING({monom: coeff}))}"
    return f"{left!r} != {right!r}"


def run_identity(identity: Identity) -> CheckResult:
    """Evaluate both sides of an identity and compare them exactly."""
    try:
        left = identity.left()
        right = identity.right()
        passed = identity.agree(left, right)
    except SchubertKitError as err:
        _LOGGER.error("Check %s %s raised %s", identity.name, identity.inputs, err)
        return CheckResult(identity.name, identity.inputs, False, f"{type(err).__name__}: {err}")
    detail = "; ".join(identity.notes)
    if not passed:
        detail = _first_difference(left, right)
        _LOGGER.error("Check %s failed for %s: %s", identity.name, identity.inputs, detail)
    return CheckResult(identity.name, identity.inputs, passed, detail)


async def _run_all(identities: list[Identity], jobs: int) -> list[CheckResult]:
    loop = asyncio.get_running_loop()
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        tasks = [loop.run_in_executor(pool, run_identity, identity) for identity in identities]
        return list(await asyncio.gather(*tasks))


def run_identities(suite: str, identities: Iterable[Identity], jobs: int | None = None) -> Report:
    """Run checks on a worker pool and merge them by identity name, then input order."""
    identities = list(identities)
    jobs = jobs or get_option(CONF_JOBS)
    _LOGGER.info("Running suite %s: %d checks on %d worker(s)", suite, len(identities), jobs)
    results = asyncio.run(_run_all(identities, jobs))
    results.sort(key=lambda result: result.identity)
    report = Report(suite, results)
    _LOGGER.info("Suite %s finished: %s", suite, report.counts())
    return report


# Suite builders


def _types(type_letter: str | None, allowed: Iterable[str] = ("A", "C", "D")) -> list[str]:
    allowed = list(allowed)
    if type_letter is None:
        return allowed
    letter = type_letter.upper()
    if letter not in allowed:
        raise InvalidOption(f"Type {letter} is not covered by this suite (use one of {allowed})")
    return [letter]


def _ranks(letter: str, n: int | None, max_n: int) -> list[int]:
    if n is not None:
        return [n]
    low = 2 if letter == "D" else 1
    return list(range(low, max_n + 1))


def _constant_term(value: Any) -> Any:
    if isinstance(value, GammaElement):
        return value.constant_term()
    return coefficient_of_one(value)


def _schubert_constant(letter: str, w) -> Any:
    return _constant_term(schubert(letter, w).value)


def _schubert_value(letter: str, w, double: bool = True) -> Any:
    return schubert(letter, w, double=double).value


def _not_descent(w, i: int) -> bool:
    return i not in descents(w)


def _divided(letter: str, w, i: int, side: str) -> Any:
    return apply_divided_difference(schubert(letter, w), i, side)


def _target_value(letter: str, w, i: int, side: str) -> Any:
    target = divided_difference_target(w, i, side)
    if target is None:
        return RING.zero
    return schubert(letter, target).value


def _is_swap_symmetric(letter: str, w, i: int) -> bool:
    value = schubert(letter, w).value
    if isinstance(value, GammaElement):
        swapped = value.map(lambda f: swap(f, "y", i, i + 1))
    else:
        swapped = swap(value, "y", i, i + 1)
    return same(swapped, value)


def _stable_value(letter: str, w, rank: int) -> Any:
    return schubert(letter, w, rank=rank).value


def _type_b_scaled(w) -> GammaElement:
    return schubert("B", w).value.scale(2 ** signs(w))


def _integral_match(left: GammaElement, right: GammaElement) -> bool:
    return same(left, right) and all(is_integral(c) for c in as_gamma(left).normalized.values())


def _suite_characterization(type_letter, n, max_n, **_) -> list[Identity]:
    found = []
    for letter in _types(type_letter, ("A", "B", "C", "D")):
        for rank in _ranks(letter, n, max_n):
            kind = Kind.from_type(letter)
            for w in iter_group(kind, rank):
                inputs = {"type": letter, "n": rank, "w": str(w)}
                if letter == "B":
                    found.append(
                        Identity(
                            "type_b_scaling",
                            inputs,
                            partial(_type_b_scaled, w),
                            partial(_stable_value, "C", w, rank),
                            compare=_integral_match,
                        )
                    )
                    continue
                found.append(
                    Identity(
                        "constant_term",
                        inputs,
                        partial(_schubert_constant, letter, w),
                        partial(int, w.is_identity()),
                    )
                )
                found.append(
                    Identity(
                        "stability",
                        inputs,
                        partial(_stable_value, letter, w, rank),
                        partial(_stable_value, letter, w, rank + 1),
                    )
                )
                for i in generators_of_rank(kind, rank):
                    gen_inputs = {**inputs, "i": format_generator(i)}
                    for side in ("y", "z"):
                        found.append(
                            Identity(
                                f"divided_difference_{side}",
                                gen_inputs,
                                partial(_divided, letter, w, i, side),
                                partial(_target_value, letter, w, i, side),
                            )
                        )
                    if i >= 1:
                        found.append(
                            Identity(
                                "descent_symmetry",
                                gen_inputs,
                                partial(_is_swap_symmetric, letter, w, i),
                                partial(_not_descent, w, i),
                            )
                        )
    return found


def _suite_top(type_letter, n, max_n, **_) -> list[Identity]:
    found = []
    for letter in _types(type_letter):
        for rank in _ranks(letter, n, max_n):
            found.extend(top_identities(letter, rank))
    return found


def _flagged_det(lam, flag) -> Any:
    return flagged_schur(pad(lam, len(flag)), rho=flag, basis="h", alphabet="t")


def _he_side(lam, mu, k, l, side) -> Any:
    return he_duality_sides(lam, mu, k, l)[side]


def _suite_flagged(max_n, **_) -> list[Identity]:
    found = []
    rows = min(max_n, 3)
    box = (rows,) * rows
    for lam in partitions_inside(box):
        for flag in combinations_with_replacement(range(1, rows + 2), rows):
            if any(flag[i] < i + 1 for i in range(rows)):
                continue
            found.append(
                Identity(
                    "tableau_flagged_schur",
                    {"lambda": lam, "flag": flag},
                    partial(_flagged_det, lam, flag),
                    partial(tableau_flagged_schur, pad(lam, rows), flag),
                )
            )
    for k in range(1, rows + 1):
        for l in range(1, rows + 1):
            for lam in partitions_inside((k,) * l):
                for mu in partitions_inside(lam):
                    inputs = {"lambda": lam, "mu": mu, "k": k, "l": l}
                    found.append(
                        Identity(
                            "he_duality",
                            inputs,
                            partial(_he_side, lam, mu, k, l, 0),
                            partial(_he_side, lam, mu, k, l, 1),
                        )
                    )
    return found


def _suite_duality(n, max_n, **_) -> list[Identity]:
    found = []
    for rank in [n] if n is not None else range(2, max_n + 2):
        found.extend(duality_identities(rank))
    return found


def _suite_reverse(n, max_n, m=None, **_) -> list[Identity]:
    found = []
    shifts = [m] if m is not None else [0, 1, 2]
    for rank in [n] if n is not None else range(1, max_n + 1):
        for shift_m in shifts:
            for w in iter_group(Kind.A, rank):
                found.append(
                    Identity(
                        "reverse_factored",
                        {"n": rank, "m": shift_m, "w": str(w)},
                        partial(reverse_schubert, w, shift_m),
                        partial(reverse_schubert_factored, w, shift_m),
                    )
                )
            found.append(
                Identity(
                    "reverse_flagged",
                    {"n": rank, "m": shift_m},
                    partial(reverse_schubert, longest_element(Kind.A, rank), shift_m),
                    partial(reverse_schubert_flagged, rank, shift_m),
                )
            )
    return found


def _grassmannian_divided(w, k: int, i: int) -> Any:
    return divided_difference(grassmannian_polynomial(w, k), i, "z")


def _grassmannian_ks(kind: Kind, rank: int) -> list[int]:
    if kind is Kind.A:
        return list(range(1, rank))
    if kind is Kind.BC:
        return list(range(0, rank))
    return [BOX] + list(range(1, rank))


def _suite_grassmannian(type_letter, n, max_n, **_) -> list[Identity]:
    found = []
    for letter in _types(type_letter):
        kind = Kind.from_type(letter)
        for rank in _ranks(letter, n, max_n):
            for k in _grassmannian_ks(kind, rank):
                for w in grassmannian_elements(kind, k, rank):
                    inputs = {"type": letter, "n": rank, "k": format_generator(k), "w": str(w)}
                    double = kind is not Kind.A
                    found.append(
                        Identity(
                            "grassmannian_polynomial",
                            inputs,
                            partial(_schubert_value, letter, w, double),
                            partial(grassmannian_polynomial, w, k),
                        )
                    )
                    if not double:
                        continue
                    for i in generators_of_rank(kind, rank):
                        target = divided_difference_target(w, i, "z")
                        if target is None:
                            continue
                        found.append(
                            Identity(
                                "grassmannian_recursion",
                                {**inputs, "i": format_generator(i)},
                                partial(_grassmannian_divided, w, k, i),
                                partial(grassmannian_polynomial, target, k),
                            )
                        )
    return found


def _suite_type_d(n, max_n, **_) -> list[Identity]:
    found = []
    # max_n = 3 gives l <= 4 and |lambda| <= 6
    max_ell = max_n + 1
    max_weight = 2 * max_n
    for ell in range(1, max_ell + 1):
        for alpha in combinations_with_replacement(range(0, 4), ell):
            alpha = tuple(sorted(alpha, reverse=True))
            found.append(
                Identity(
                    "alternating",
                    {"alpha": alpha, "l": ell, "n": ell + ell % 2},
                    partial(alternating_check, alpha, ell, ell + ell % 2),
                    partial(bool, True),
                )
            )
        for head in combinations_with_replacement(range(0, 4), ell - 1):
            alpha = tuple(sorted(head, reverse=True)) + (0,)
            for size in sorted({ell + ell % 2, 4}):
                if size < ell:
                    continue
                found.append(
                    Identity(
                        "zero_part",
                        {"alpha": alpha, "l": ell, "n": size},
                        partial(symmetrized_P, alpha, ell, size),
                        partial(symmetrized_P_drop_zero, alpha, ell, size),
                    )
                )
    for weight in range(1, max_weight + 1):
        for lam in strict_partitions(weight):
            found.append(
                Identity("double_P_expansion", {"lambda": lam}, partial(double_schurP, lam), partial(double_schurP_expansion, lam))
            )
            found.append(
                Identity(
                    "double_P_symmetrized",
                    {"lambda": lam},
                    partial(double_schurP, lam),
                    partial(double_schurP_symmetrized, lam),
                )
            )
    for rank in _ranks("D", n, max_n):
        found.extend(top_identities("D", rank))
    return found


def _splitting_values(letter: str, w) -> Any:
    a, b = minimal_flags(w)
    return splitting_sum(letter, w, a, b)


def _splitting_rebuilt(letter: str, w) -> Any:
    a, b = minimal_flags(w)
    return splitting_reconstruct(letter, w, a, b, splitting_expand(letter, w, a, b))


def _suite_splitting(type_letter, n, max_n, **_) -> list[Identity]:
    found = []
    for letter in _types(type_letter):
        kind = Kind.from_type(letter)
        for rank in _ranks(letter, n, max_n):
            for w in iter_group(kind, rank):
                a, b = minimal_flags(w)
                inputs = {"type": letter, "w": str(w), "a": str(a), "b": str(b)}
                full = partial(_stable_value, letter, w, rank)
                found.append(Identity("splitting_sum", inputs, full, partial(_splitting_values, letter, w)))
                found.append(Identity("splitting_expand", inputs, full, partial(_splitting_rebuilt, letter, w)))
    return found


def _conjugated_coefficients(w) -> dict:
    return {conjugate(lam): c for lam, c in stanley_coefficients("A", w).items()}


def _stanley_value(letter: str, w) -> Any:
    return stanley(letter, w).value


def _suite_stanley(type_letter, n, max_n, **_) -> list[Identity]:
    found = []
    for letter in _types(type_letter):
        kind = Kind.from_type(letter)
        for rank in _ranks(letter, n, max_n):
            for w in iter_group(kind, rank):
                if length(w) > 6:
                    continue
                inputs = {"type": letter, "w": str(w)}
                if kind is Kind.A:
                    found.append(
                        Identity(
                            "stanley_transpose",
                            inputs,
                            partial(_conjugated_coefficients, w),
                            partial(stanley_coefficients, "A", inverse(w)),
                        )
                    )
                    found.append(
                        Identity(
                            "stanley_schur",
                            inputs,
                            partial(_stanley_value, letter, w),
                            partial(stanley_from_coefficients, letter, w),
                        )
                    )
                    continue
                found.append(
                    Identity(
                        "stanley_inverse",
                        inputs,
                        partial(_stanley_value, letter, w),
                        partial(_stanley_value, letter, inverse(w)),
                    )
                )
                for k in range(0, rank):
                    if not is_increasing_up_to(w, k):
                        continue
                    found.append(
                        Identity(
                            "mixed_coefficients",
                            {**inputs, "k": k},
                            partial(mixed_stanley, w, k),
                            partial(stanley_from_coefficients, letter, w, k),
                        )
                    )
    return found


def _suite_key(type_letter, n, max_n, w=None, k=None, l=None, **_) -> list[Identity]:
    if w is not None:
        letter = _types(type_letter)[0]
        return key_identities(letter, w, k or 0, l or 0)
    found = []
    for letter in _types(type_letter):
        kind = Kind.from_type(letter)
        for rank in _ranks(letter, n, max_n):
            for element in iter_group(kind, rank):
                for kk in range(rank):
                    for ll in range(rank):
                        identities = key_identities(letter, element, kk, ll)
                        if kk or ll:
                            identities = [i for i in identities if i.name != "factored_double"]
                        found.extend(identities)
    return found


_BUILDERS = {
    "top": _suite_top,
    "characterization": _suite_characterization,
    "flagged": _suite_flagged,
    "duality": _suite_duality,
    "reverse": _suite_reverse,
    "grassmannian": _suite_grassmannian,
    "typeD": _suite_type_d,
    "splitting": _suite_splitting,
    "stanley": _suite_stanley,
    "key": _suite_key,
}


def suite_identities(
    suite: str,
    type_letter: str | None = None,
    n: int | None = None,
    max_n: int = DEFAULT_MAX_N,
    **params: Any,
) -> list[Identity]:
    """The identities checked by a named suite."""
    if suite not in _BUILDERS:
        raise InvalidOption(f"Unknown suite {suite!r}; expected one of {SUITES + [SUITE_ALL]}")
    return _BUILDERS[suite](type_letter=type_letter, n=n, max_n=max_n, **params)


def run_suite(
    suite: str,
    type_letter: str | None = None,
    n: int | None = None,
    max_n: int = DEFAULT_MAX_N,
    jobs: int | None = None,
    **params: Any,
) -> Report:
    """Build and run one suite."""
    return run_identities(suite, suite_identities(suite, type_letter, n, max_n, **params), jobs)


def run_suites(
    suite: str = SUITE_ALL,
    type_letter: str | None = None,
    n: int | None = None,
    max_n: int = DEFAULT_MAX_N,
    jobs: int | None = None,
    **params: Any,
) -> list[Report]:
    """Run one suite, or every suite for "all"."""
    names = SUITES if suite == SUITE_ALL else [suite]
    return [run_suite(name, type_letter, n, max_n, jobs, **params) for name in names]


def top_formulas_verify(type_letter: str, n: int, jobs: int | None = None) -> Report:
    return run_identities("top", top_identities(type_letter, n), jobs)


def duality_verify(n: int, jobs: int | None = None) -> Report:
    return run_identities("duality", duality_identities(n), jobs)


def key_identity_verify(type_letter: str, w, k: int = 0, l: int = 0, jobs: int | None = None) -> Report:
    return run_identities("key", key_identities(type_letter, w, k, l), jobs)
