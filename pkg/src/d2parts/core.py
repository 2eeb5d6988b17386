"""Partitions, overpartitions and generalized pentagonal numbers.

A :class:`Partition` is a tuple of positive integers kept in weakly
decreasing order. An :class:`Overpartition` is the bipartition ``(mu, nu)``
of its nonoverlined parts ``mu`` and its (necessarily distinct) overlined
parts ``nu``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, NamedTuple


class DomainError(ValueError):
    """An input lies outside the domain of the map applied to it."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Any iterable of positive ints is accepted; the parts are sorted on
    construction so equal multisets always compare equal.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted(parts, reverse=True)
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise ValueError(f"partition parts must be positive integers, got {x!r}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> "Partition":
        # parts already known to be sorted positive ints
        return tuple.__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class Overpartition:
    """Overpartition stored as ``(mu, nu)``: plain parts and overlined parts."""

    mu: Partition = Partition()
    nu: Partition = Partition()

    def __post_init__(self):
        mu = self.mu if isinstance(self.mu, Partition) else Partition(self.mu)
        nu = self.nu if isinstance(self.nu, Partition) else Partition(self.nu)
        if len(set(nu)) != len(nu):
            raise ValueError(f"overlined parts must be distinct, got {tuple(nu)}")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)

    @property
    def weight(self) -> int:
        return sum(self.mu) + sum(self.nu)

    def __len__(self) -> int:
        return len(self.mu) + len(self.nu)

    def values(self) -> Partition:
        """All part values with overlines forgotten."""
        return Partition._trusted(sorted(self.mu + self.nu, reverse=True))

    def display_parts(self) -> list[tuple[int, bool]]:
        """Parts as ``(value, overlined)`` pairs, largest first, overlined copy leading."""
        parts = [(v, True) for v in self.nu] + [(v, False) for v in self.mu]
        parts.sort(key=lambda vp: (vp[0], vp[1]), reverse=True)
        return parts

    def __str__(self) -> str:
        return format_overpartition(self)


def weight(p: Partition | Overpartition) -> int:
    return p.weight


def conjugate(p: Iterable[int]) -> Partition:
    """Column lengths of the Ferrers diagram of ``p``."""
    parts = tuple(p)
    if not parts:
        return Partition()
    out = []
    j = len(parts)
    for col in range(1, parts[0] + 1):
        while parts[j - 1] < col:
            j -= 1
        out.append(j)
    return Partition._trusted(out)


def is_distinct(p: Iterable[int]) -> bool:
    parts = tuple(p)
    return all(a > b for a, b in zip(parts, parts[1:]))


def is_all_odd(p: Iterable[int]) -> bool:
    return all(x % 2 for x in p)


def is_all_even(p: Iterable[int]) -> bool:
    return all(x % 2 == 0 for x in p)


def is_distinct_odd(p: Iterable[int]) -> bool:
    parts = tuple(p)
    return is_distinct(parts) and is_all_odd(parts)


def is_self_conjugate(p: Iterable[int]) -> bool:
    parts = tuple(p)
    return conjugate(parts) == parts


class Flags(NamedTuple):
    distinct: bool
    all_odd: bool
    all_even: bool
    self_conjugate: bool
    even_length: bool


def classify(p: Iterable[int]) -> Flags:
    parts = tuple(p)
    return Flags(
        distinct=is_distinct(parts),
        all_odd=is_all_odd(parts),
        all_even=is_all_even(parts),
        self_conjugate=is_self_conjugate(parts),
        even_length=len(parts) % 2 == 0,
    )


def satisfies_d2(o: Overpartition) -> bool:
    """True when only even parts are overlined."""
    return is_all_even(o.nu)


def durfee_size(p: Iterable[int]) -> int:
    return sum(1 for i, x in enumerate(p, start=1) if x >= i)


# -- generalized pentagonal numbers -------------------------------------------


class PentIndex(NamedTuple):
    m: int
    n: int

    @property
    def residue_class(self) -> int:
        return self.m % 4

    @property
    def sign(self) -> int:
        return -1 if self.m % 2 else 1


def pentagonal_number(m: int) -> int:
    return m * (3 * m + 1) // 2


def pentagonal_index(n: int) -> PentIndex | None:
    """Return the unique ``m`` with ``m(3m+1)/2 == n``, or None.

    Solving ``3m^2 + m - 2n = 0`` needs ``1 + 24n`` to be a perfect square
    ``s^2``; the roots are ``(-1 +- s)/6``.
    """
    if n < 0:
        return None
    disc = 1 + 24 * n
    s = isqrt(disc)
    if s * s != disc:
        return None
    for num in (s - 1, -1 - s):
        if num % 6 == 0:
            m = num // 6
            if pentagonal_number(m) == n:
                return PentIndex(m, n)
    return None


def staircase(m: int) -> Partition:
    """The distinct-part partition of ``pentagonal_number(m)`` left unpaired by Franklin.

    ``m > 0`` gives ``(2m, 2m-1, ..., m+1)``; ``m < 0`` gives
    ``(2|m|-1, ..., |m|)``; ``m == 0`` gives the empty partition.
    """
    if m > 0:
        return Partition._trusted(range(2 * m, m, -1))
    k = -m
    return Partition._trusted(range(2 * k - 1, k - 1, -1))


# -- text formats --------------------------------------------------------------

OVERLINE = "̅"


def format_partition(p: Iterable[int]) -> str:
    return ",".join(str(x) for x in p)


def format_overpartition(o: Overpartition, ascii: bool = True) -> str:
    out = []
    for v, bar in o.display_parts():
        if not bar:
            out.append(str(v))
        elif ascii:
            out.append(f"o{v}")
        else:
            out.append("".join(c + OVERLINE for c in str(v)))
    return ",".join(out)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition()
    try:
        return Partition(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from None


def parse_overpartition(text: str) -> Overpartition:
    """Parse ``o4,2,1`` style text: a leading ``o`` marks an overlined part."""
    text = text.strip()
    mu, nu = [], []
    if text:
        for tok in text.split(","):
            tok = tok.strip()
            target = nu if tok.startswith("o") else mu
            try:
                target.append(int(tok[1:] if target is nu else tok))
            except ValueError:
                raise ValueError(f"bad overpartition {text!r}: part {tok!r}") from None
    return Overpartition(Partition(mu), Partition(nu))
