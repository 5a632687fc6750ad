"""Finite-support Weyl group elements of types A, B/C and D."""
from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations, product

from .config import get_option
from .const import BOX, BOX_TOKEN, CONF_WORD_LIMIT
from .exceptions import (
    BoundExceeded,
    IllegalGenerator,
    IncompatibleFlags,
    InvalidElement,
    InvalidFlag,
    KindMismatch,
    LengthMismatch,
    NotGrassmannian,
    NotKStrict,
    NotStrict,
    NotTypedKStrict,
)

_LOGGER = logging.getLogger(__name__)

Partition = tuple[int, ...]


class Kind(str, Enum):
    """Group family of a Weyl element."""

    A = "A"
    BC = "BC"
    D = "D"

    @classmethod
    def from_type(cls, letter: str) -> Kind:
        """Map a Lie type letter (A, B, C, D) to its group family."""
        letter = letter.upper()
        if letter == "A":
            return cls.A
        if letter in ("B", "C", "BC"):
            return cls.BC
        if letter == "D":
            return cls.D
        raise InvalidElement(f"Unknown type {letter!r}")


@dataclass(frozen=True)
class WeylElement:
    """A signed permutation in one-line notation, trailing fixed points trimmed."""

    kind: Kind
    window: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        kind = Kind(self.kind)
        window = tuple(int(v) for v in self.window)
        if sorted(abs(v) for v in window) != list(range(1, len(window) + 1)):
            raise InvalidElement(f"{window} is not a signed permutation")
        negatives = sum(1 for v in window if v < 0)
        if kind is Kind.A and negatives:
            raise InvalidElement(f"{window} has barred entries but kind is A")
        if kind is Kind.D and negatives % 2:
            raise InvalidElement(f"{window} has an odd number of bars")
        while window and window[-1] == len(window):
            window = window[:-1]
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "window", window)

    @classmethod
    def identity(cls, kind: Kind | str) -> WeylElement:
        return cls(Kind(kind), ())

    @classmethod
    def parse(cls, kind: Kind | str, text: str) -> WeylElement:
        """Parse a comma-separated signed window such as "2,-3,1"."""
        text = text.strip()
        if not text or text in ("e", "id"):
            return cls.identity(kind)
        try:
            window = tuple(int(part) for part in text.replace(" ", "").split(","))
        except ValueError as err:
            raise InvalidElement(f"Cannot parse window {text!r}") from err
        return cls(Kind(kind), window)

    @property
    def rank(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        """Value of the signed permutation at i (negative i allowed)."""
        if i < 0:
            return -self(-i)
        if i <= len(self.window):
            return self.window[i - 1]
        return i

    def padded(self, n: int) -> tuple[int, ...]:
        return tuple(self(i) for i in range(1, max(n, self.rank) + 1))

    def is_identity(self) -> bool:
        return not self.window

    def in_symmetric_group(self) -> bool:
        return all(v > 0 for v in self.window)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return compose(self, other)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.window) or "e"


def sort_key(w: WeylElement) -> tuple[int, tuple[int, ...]]:
    """Deterministic order: by length, then window."""
    return (length(w), w.window)


@lru_cache(maxsize=None)
def compose(u: WeylElement, v: WeylElement) -> WeylElement:
    """Return uv, acting as (uv)(i) = u(v(i))."""
    if u.kind is not v.kind:
        raise KindMismatch(f"Cannot compose {u.kind.value} with {v.kind.value}")
    n = max(u.rank, v.rank)
    return WeylElement(u.kind, tuple(u(v(i)) for i in range(1, n + 1)))


@lru_cache(maxsize=None)
def inverse(w: WeylElement) -> WeylElement:
    result = [0] * w.rank
    for i, v in enumerate(w.window, start=1):
        result[abs(v) - 1] = i if v > 0 else -i
    return WeylElement(w.kind, tuple(result))


def check_generator(kind: Kind, i: int) -> None:
    if i == BOX:
        if kind is not Kind.D:
            raise IllegalGenerator("s_b only exists in type D")
    elif i == 0:
        if kind is not Kind.BC:
            raise IllegalGenerator("s_0 only exists in types B/C")
    elif i < 1:
        raise IllegalGenerator(f"Generator index {i} is not legal")


@lru_cache(maxsize=None)
def generator(kind: Kind, i: int) -> WeylElement:
    """The simple reflection s_i."""
    kind = Kind(kind)
    check_generator(kind, i)
    if i == BOX:
        return WeylElement(kind, (-2, -1))
    if i == 0:
        return WeylElement(kind, (-1,))
    return WeylElement(kind, tuple(range(1, i)) + (i + 1, i))


def generators_of_rank(kind: Kind, n: int) -> tuple[int, ...]:
    """Generator indices of the rank-n group, in sorted order."""
    kind = Kind(kind)
    if kind is Kind.A:
        return tuple(range(1, n))
    if kind is Kind.BC:
        return tuple(range(0, n)) if n >= 1 else ()
    if n < 2:
        return ()
    return (BOX,) + tuple(range(1, n))


def minimal_rank(kind: Kind) -> int:
    return 2 if Kind(kind) is Kind.D else 1


def format_generator(i: int) -> str:
    return BOX_TOKEN if i == BOX else str(i)


def parse_generator(token: str) -> int:
    token = token.strip()
    if token == BOX_TOKEN:
        return BOX
    try:
        return int(token)
    except ValueError as err:
        raise IllegalGenerator(f"Cannot parse generator {token!r}") from err


@lru_cache(maxsize=None)
def length(w: WeylElement) -> int:
    """Coxeter length from inversion and sign statistics."""
    v = w.window
    n = len(v)
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if v[i] > v[j])
    if w.kind is Kind.A:
        return inversions
    negative_pairs = sum(
        1 for i in range(n) for j in range(i + 1, n) if v[i] + v[j] < 0
    )
    if w.kind is Kind.BC:
        return inversions + negative_pairs + sum(1 for x in v if x < 0)
    return inversions + negative_pairs


def signs(w: WeylElement) -> int:
    """Number of barred entries s(w)."""
    return sum(1 for v in w.window if v < 0)


@lru_cache(maxsize=None)
def descents(w: WeylElement, side: str = "right") -> frozenset[int]:
    """Indices i with l(w s_i) < l(w) (right) or l(s_i w) < l(w) (left)."""
    if side not in ("right", "left"):
        raise ValueError(f"Unknown side {side!r}")
    n = max(w.rank, minimal_rank(w.kind))
    base = length(w)
    found = set()
    for i in generators_of_rank(w.kind, n):
        s = generator(w.kind, i)
        other = compose(w, s) if side == "right" else compose(s, w)
        if length(other) < base:
            found.add(i)
    return frozenset(found)


@lru_cache(maxsize=None)
def _words(w: WeylElement, limit: int) -> tuple[tuple[int, ...], ...]:
    if w.is_identity():
        return ((),)
    words: list[tuple[int, ...]] = []
    for i in sorted(descents(w)):
        for word in _words(compose(w, generator(w.kind, i)), limit):
            words.append(word + (i,))
            if len(words) > limit:
                raise BoundExceeded(f"More than {limit} reduced words for {w}")
    return tuple(sorted(words))


def reduced_words(w: WeylElement, limit: int | None = None) -> list[tuple[int, ...]]:
    """All reduced words of w in lexicographic order (s_b sorts first)."""
    if limit is None:
        limit = get_option(CONF_WORD_LIMIT)
    return list(_words(w, limit))


def word_element(kind: Kind, word: Iterable[int]) -> WeylElement:
    """Multiply out a generator sequence."""
    result = WeylElement.identity(kind)
    for i in word:
        result = compose(result, generator(kind, i))
    return result


@lru_cache(maxsize=None)
def prefixes(w: WeylElement) -> frozenset[WeylElement]:
    """Elements u with w = u v and l(u) + l(v) = l(w)."""
    found = {w}
    for i in descents(w):
        found |= prefixes(compose(w, generator(w.kind, i)))
    return frozenset(found)


# Partitions


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def trim(parts: Iterable[int]) -> Partition:
    """Drop zero parts."""
    return tuple(p for p in parts if p)


def conjugate(parts: Sequence[int]) -> Partition:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def is_strict(parts: Sequence[int]) -> bool:
    return is_partition(parts) and len(set(parts)) == len(parts)


def is_k_strict(parts: Sequence[int], k: int) -> bool:
    """No part greater than k is repeated."""
    if not is_partition(parts):
        return False
    return all(
        parts[j] <= k or parts[j + 1] < parts[j] for j in range(len(parts) - 1)
    )


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def partitions(weight: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of weight in reverse lexicographic order."""
    if max_part is None:
        max_part = weight
    if weight == 0:
        yield ()
        return
    for first in range(min(weight, max_part), 0, -1):
        for rest in partitions(weight - first, first):
            yield (first,) + rest


def partitions_inside(outer: Sequence[int]) -> list[Partition]:
    """All partitions contained in outer."""
    found: list[Partition] = [()]
    for weight in range(1, sum(outer) + 1):
        found.extend(p for p in partitions(weight) if contains(outer, p))
    return found


def strict_partitions(weight: int) -> list[Partition]:
    return [p for p in partitions(weight) if is_strict(p)]


def k_strict_partitions(weight: int, k: int) -> list[Partition]:
    return [p for p in partitions(weight) if is_k_strict(p, k)]


def staircase(r: int) -> Partition:
    """The staircase (r, r-1, ..., 1)."""
    return tuple(range(r, 0, -1))


def staircase_star(n: int) -> Partition:
    """The vector (n, n-1, ..., 2)."""
    return tuple(range(n, 1, -1))


def pad(parts: Sequence[int], size: int) -> tuple[int, ...]:
    if len(parts) > size:
        raise LengthMismatch(f"{tuple(parts)} has more than {size} entries")
    return tuple(parts) + (0,) * (size - len(parts))


@dataclass(frozen=True)
class StrictPartition:
    parts: Partition

    def __post_init__(self) -> None:
        if not is_strict(self.parts):
            raise NotStrict(f"{self.parts} is not strict")


@dataclass(frozen=True)
class KStrictPartition:
    parts: Partition
    k: int

    def __post_init__(self) -> None:
        if not is_k_strict(self.parts, self.k):
            raise NotKStrict(f"{self.parts} is not {self.k}-strict")


@dataclass(frozen=True)
class TypedKStrictPartition:
    """A k-strict partition with a type tag in {0, 1, 2}."""

    parts: Partition
    k: int
    type_tag: int = 0

    def __post_init__(self) -> None:
        if not is_k_strict(self.parts, self.k):
            raise NotTypedKStrict(f"{self.parts} is not {self.k}-strict")
        has_k = self.k > 0 and self.k in self.parts
        if has_k and self.type_tag not in (1, 2):
            raise NotTypedKStrict(f"{self.parts} has a part {self.k} and needs type 1 or 2")
        if not has_k and self.type_tag != 0:
            raise NotTypedKStrict(f"{self.parts} has no part {self.k} and must be type 0")

    @classmethod
    def parse(cls, text: str, k: int) -> TypedKStrictPartition:
        """Parse "2,1;type=1"."""
        shape, _, tag = text.partition(";")
        parts = tuple(int(p) for p in shape.split(",") if p.strip())
        type_tag = 0
        if tag:
            key, _, value = tag.partition("=")
            if key.strip() != "type":
                raise NotTypedKStrict(f"Cannot parse {text!r}")
            type_tag = int(value)
        return cls(parts, k, type_tag)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) + f";type={self.type_tag}"


def typed_partitions(weight: int, k: int) -> list[TypedKStrictPartition]:
    found = []
    for parts in k_strict_partitions(weight, k):
        if k > 0 and k in parts:
            found.append(TypedKStrictPartition(parts, k, 1))
            found.append(TypedKStrictPartition(parts, k, 2))
        else:
            found.append(TypedKStrictPartition(parts, k, 0))
    return found


# Flags and compatibility


def numeric(entry: int) -> int:
    """Entry of a flag as a variable count (s_b counts as 0)."""
    return 0 if entry == BOX else entry


@dataclass(frozen=True)
class FlagSequence:
    """A strictly increasing sequence a_1 < ... < a_p."""

    kind: Kind
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        kind = Kind(self.kind)
        entries = tuple(self.entries)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise InvalidFlag("A flag sequence needs at least one entry")
        if any(entries[i] >= entries[i + 1] for i in range(len(entries) - 1)):
            raise InvalidFlag(f"{entries} is not strictly increasing")
        for entry in entries:
            if kind is Kind.A and entry < 1:
                raise InvalidFlag(f"{entry} is not legal in type A")
            if kind is Kind.BC and entry < 0:
                raise InvalidFlag(f"{entry} is not legal in type C")
            if kind is Kind.D and entry != BOX and entry < 1:
                raise InvalidFlag(f"{entry} is not legal in type D")

    @classmethod
    def parse(cls, kind: Kind | str, text: str) -> FlagSequence:
        tokens = [t for t in text.replace(" ", "").split(",") if t]
        try:
            return cls(Kind(kind), tuple(parse_generator(t) for t in tokens))
        except IllegalGenerator as err:
            raise InvalidFlag(str(err)) from err

    @property
    def numeric(self) -> tuple[int, ...]:
        return tuple(numeric(a) for a in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return ",".join(format_generator(a) for a in self.entries)


def check_d_flag(flags: FlagSequence) -> None:
    """Type D flags for splitting and top elements must not start with 1."""
    if flags.kind is Kind.D and flags.entries[0] == 1:
        raise InvalidFlag("Type D flags with a_1 = 1 are excluded; use b,1")


def minimal_flags(w: WeylElement) -> tuple[FlagSequence, FlagSequence]:
    """Smallest flag pair compatible with w (b_1 = 0 in type C, b_1 = b in type D)."""
    right = set(descents(w))
    left = set(descents(inverse(w)))
    if w.kind is Kind.A:
        return (
            FlagSequence(w.kind, tuple(sorted(right)) or (1,)),
            FlagSequence(w.kind, tuple(sorted(left)) or (1,)),
        )
    if w.kind is Kind.BC:
        return (
            FlagSequence(w.kind, tuple(sorted(right)) or (0,)),
            FlagSequence(w.kind, tuple(sorted(left | {0}))),
        )
    if 1 in right or not right:
        right.add(BOX)
    return (
        FlagSequence(w.kind, tuple(sorted(right))),
        FlagSequence(w.kind, tuple(sorted(left | {BOX}))),
    )


def check_compatible(w: WeylElement, a: FlagSequence, b: FlagSequence) -> None:
    if not descents(w) <= set(a.entries):
        raise IncompatibleFlags(f"Descents of {w} are not contained in {a}")
    if not descents(inverse(w)) <= set(b.entries):
        raise IncompatibleFlags(f"Descents of {inverse(w)} are not contained in {b}")


def _fixes(u: WeylElement, bound: int) -> bool:
    return all(u(i) == i for i in range(1, bound + 1))


def _factorizations(w: WeylElement, p: int) -> Iterator[tuple[WeylElement, ...]]:
    if p == 1:
        yield (w,)
        return
    for u in sorted(prefixes(w), key=sort_key):
        rest = compose(inverse(u), w)
        for tail in _factorizations(rest, p - 1):
            yield (u,) + tail


def reduced_factorizations(
    w: WeylElement,
    p: int | None = None,
    flags: tuple[FlagSequence, FlagSequence] | None = None,
) -> list[tuple[WeylElement, ...]]:
    """Reduced factorizations u_1...u_p = w, optionally compatible with (a, b)."""
    if flags is None:
        if p is None or p < 1:
            raise LengthMismatch("A factor count p >= 1 is required")
        return list(_factorizations(w, p))
    a, b = flags
    check_compatible(w, a, b)
    q = len(b)
    if p is None:
        p = len(a) + q - 1
    if p != len(a) + q - 1:
        raise LengthMismatch(f"Compatible factorizations have {len(a) + q - 1} factors")
    found = []
    for factors in _factorizations(w, p):
        if all(_factor_allowed(u, j, q, a, b) for j, u in enumerate(factors, start=1)):
            found.append(factors)
    _LOGGER.debug("%d compatible factorizations of %s for (%s; %s)", len(found), w, a, b)
    return found


def _factor_allowed(
    u: WeylElement, j: int, q: int, a: FlagSequence, b: FlagSequence
) -> bool:
    if u.kind is not Kind.A and j != q and not u.in_symmetric_group():
        return False
    if j < q:
        return _fixes(u, numeric(b.entries[q - j - 1]))
    if j > q:
        return _fixes(u, numeric(a.entries[j - q - 1]))
    return True


def shift(u: WeylElement, m: int) -> WeylElement:
    """The element 1_m x u."""
    if not u.in_symmetric_group():
        raise InvalidElement(f"{u} is not in the symmetric group")
    return WeylElement(u.kind, tuple(range(1, m + 1)) + tuple(v + m for v in u.window))


def unshift(u: WeylElement, m: int) -> WeylElement:
    """Inverse of shift; u must fix 1, ..., m."""
    if not u.in_symmetric_group() or not _fixes(u, m):
        raise InvalidElement(f"{u} does not fix 1..{m}")
    return WeylElement(u.kind, tuple(v - m for v in u.window[m:]))


def as_kind(w: WeylElement, kind: Kind) -> WeylElement:
    return WeylElement(Kind(kind), w.window)


def is_increasing_up_to(w: WeylElement, k: int) -> bool:
    """The increasing-up-to-k condition of the given kind."""
    values = [w(i) for i in range(1, max(k, 0) + 1)]
    if w.kind is Kind.A:
        return all(values[i] < values[i + 1] for i in range(len(values) - 1))
    if w.kind is Kind.BC:
        return all(v > 0 for v in values) and all(
            values[i] < values[i + 1] for i in range(len(values) - 1)
        )
    if k in (BOX, 0, 1):
        return True
    return abs(values[0]) < values[1] and all(
        values[i] < values[i + 1] for i in range(1, len(values) - 1)
    )


def iter_group(kind: Kind, n: int) -> list[WeylElement]:
    """All elements of the rank-n group, sorted by length then window."""
    kind = Kind(kind)
    elements = set()
    for perm in permutations(range(1, n + 1)):
        if kind is Kind.A:
            elements.add(WeylElement(kind, perm))
            continue
        for sign in product((1, -1), repeat=n):
            if kind is Kind.D and sign.count(-1) % 2:
                continue
            elements.add(WeylElement(kind, tuple(s * v for s, v in zip(sign, perm))))
    return sorted(elements, key=sort_key)


# Grassmannian elements


def grassmannian_descents(kind: Kind, k: int) -> frozenset[int]:
    """Allowed descent set of a k-Grassmannian element."""
    kind = Kind(kind)
    if kind is Kind.D:
        if k in (BOX, 0):
            return frozenset({BOX})
        if k == 1:
            return frozenset({BOX, 1})
    return frozenset({k})


def is_grassmannian(w: WeylElement, k: int) -> bool:
    return descents(w) <= grassmannian_descents(w.kind, k)


def grassmannian_bijection(w: WeylElement, k: int):
    """Shape of a k-Grassmannian element: a partition, k-strict or typed k-strict."""
    if not is_grassmannian(w, k):
        raise NotGrassmannian(f"{w} is not {format_generator(k)}-Grassmannian")
    if w.kind is Kind.A:
        return trim(w(j) - j for j in range(k, 0, -1))
    k_num = numeric(k)
    n = max(w.rank, k_num)
    parts = []
    for i in range(1, n - k_num + 1):
        v = w(k_num + i)
        if v < 0:
            offset = k_num if w.kind is Kind.BC else k_num - 1
            parts.append(-v + offset)
        elif w.kind is Kind.BC:
            parts.append(sum(1 for p in range(1, k_num + 1) if w(p) > v))
        else:
            parts.append(sum(1 for p in range(1, k_num + 1) if abs(w(p)) > v))
    parts = trim(parts)
    if w.kind is Kind.BC:
        return KStrictPartition(parts, k_num)
    type_tag = 0
    if k_num > 0 and abs(w(1)) > 1:
        type_tag = 1 if w(1) > 0 else 2
    return TypedKStrictPartition(parts, k_num, type_tag)


@lru_cache(maxsize=None)
def grassmannian_elements(kind: Kind, k: int, n: int) -> tuple[WeylElement, ...]:
    """All k-Grassmannian elements of the rank-n group."""
    kind = Kind(kind)
    gens = [generator(kind, i) for i in generators_of_rank(kind, n)]
    start = WeylElement.identity(kind)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens:
            v = compose(s, w)
            if v not in seen and length(v) == length(w) + 1 and is_grassmannian(v, k):
                seen.add(v)
                queue.append(v)
    return tuple(sorted(seen, key=sort_key))


def _shape_key(shape) -> tuple:
    if isinstance(shape, TypedKStrictPartition):
        return (shape.parts, shape.type_tag)
    if isinstance(shape, KStrictPartition):
        return (shape.parts, 0)
    return (tuple(shape), 0)


def grassmannian_element(shape, kind: Kind, k: int) -> WeylElement:
    """Inverse of grassmannian_bijection."""
    kind = Kind(kind)
    if kind is Kind.BC and not isinstance(shape, KStrictPartition):
        shape = KStrictPartition(tuple(shape), numeric(k))
    if kind is Kind.D and not isinstance(shape, TypedKStrictPartition):
        shape = TypedKStrictPartition(tuple(shape), numeric(k))
    parts = _shape_key(shape)[0]
    k_num = numeric(k)
    largest = parts[0] if parts else 0
    low = max(k_num, minimal_rank(kind))
    high = max(low, k_num + len(parts) + largest + 1)
    target = _shape_key(shape)
    for n in range(low, high + 1):
        for w in grassmannian_elements(kind, k, n):
            if _shape_key(grassmannian_bijection(w, k)) == target:
                return w
    raise NotGrassmannian(f"No {format_generator(k)}-Grassmannian element of shape {parts}")


# Special elements


def longest_element(kind: Kind, n: int) -> WeylElement:
    kind = Kind(kind)
    if kind is Kind.A:
        return WeylElement(kind, tuple(range(n, 0, -1)))
    window = tuple(-i for i in range(1, n + 1))
    return _fix_parity(kind, window)


def _fix_parity(kind: Kind, window: tuple[int, ...]) -> WeylElement:
    """In type D choose the sign of the entry 1 so the number of bars is even."""
    if kind is Kind.D and sum(1 for v in window if v < 0) % 2:
        window = tuple(-v if abs(v) == 1 else v for v in window)
    return WeylElement(kind, window)


def longest_coset_element(kind: Kind, n: int, flags: FlagSequence) -> WeylElement:
    """w_0(a) in type C, or its type D analogue with a hatted first entry."""
    kind = Kind(kind)
    if kind is Kind.A:
        raise InvalidFlag("Coset maxima are only defined here for types C and D")
    check_d_flag(flags)
    a = list(flags.numeric)
    if a[-1] >= n:
        raise InvalidFlag(f"Flag entries must be below {n}")
    bounds = a + [n]
    window = list(range(1, a[0] + 1))
    for i in range(len(a)):
        window.extend(-v for v in range(bounds[i + 1], bounds[i], -1))
    return _fix_parity(kind, tuple(window))


def longest_grassmannian(kind: Kind, k: int, n: int) -> WeylElement:
    """w^(k,n) = 1 ... k nbar ... (k+1)bar, with the type D parity rule."""
    kind = Kind(kind)
    k_num = numeric(k)
    if not 0 <= k_num < n:
        raise InvalidFlag(f"k must satisfy 0 <= k < n, got {k}")
    window = tuple(range(1, k_num + 1)) + tuple(-v for v in range(n, k_num, -1))
    return _fix_parity(kind, window)


def special_elements(
    kind: Kind | str,
    n: int,
    flags: FlagSequence | None = None,
    k: int | None = None,
) -> WeylElement:
    """The longest element, a coset maximum w_0(a), or a Grassmannian maximum."""
    kind = Kind(kind)
    if flags is not None:
        return longest_coset_element(kind, n, flags)
    if k is not None:
        return longest_grassmannian(kind, k, n)
    return longest_element(kind, n)


def star(w: WeylElement, n: int) -> WeylElement:
    """The conjugate w* = w_0 w w_0 in S_n."""
    w0 = longest_element(Kind.A, n)
    return compose(compose(w0, w), w0)


def coset_data(kind: Kind, n: int, flags: FlagSequence):
    """The index vectors (lambda, beta, rho) attached to w_0(a)."""
    kind = Kind(kind)
    a = list(flags.numeric)
    bounds = a + [n]
    lam: list[int] = []
    beta: list[int] = []
    rho: list[int] = []
    shift_d = 1 if kind is Kind.D else 0
    for i in range(len(a) - 1, -1, -1):
        lo, hi = bounds[i], bounds[i + 1]
        lam.extend(range(lo + hi - shift_d, 2 * lo - shift_d, -1))
        beta.extend(range(1 - hi, -lo + 1))
        rho.extend([lo] * (hi - lo))
    return tuple(lam), tuple(beta), tuple(rho)
