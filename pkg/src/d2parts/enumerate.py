"""Exhaustive generation of the restricted partition families.

The generators are brute force on purpose: they are the ground truth that
the involutions and the series engine are checked against. Only ``count``
beyond ``ENUMERATION_LIMIT`` reads product coefficients instead.

Order of every stream is part of the contract. Partitions come out in
lexicographically decreasing order of their part sequence. Overpartitions
``(mu, nu)`` come out by decreasing ``|mu|``, then ``mu`` decreasing, then
``nu`` decreasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import (
    Overpartition,
    Partition,
    is_distinct_odd,
    is_self_conjugate,
)

PARTITION_FAMILIES = ("P", "Q", "Q_o", "Q_e", "P_o", "P_e", "R")
OVERPARTITION_FAMILIES = ("D2", "H")
FAMILIES = PARTITION_FAMILIES + OVERPARTITION_FAMILIES

# (distinct, allowed part residue mod 2 or None)
_RESTRICTIONS = {
    "P": (False, None),
    "Q": (True, None),
    "Q_o": (True, 1),
    "Q_e": (True, 0),
    "P_o": (False, 1),
    "P_e": (False, 0),
    "R": (False, None),
}


class FamilyError(ValueError):
    """Unknown family name or length-parity flag."""


@dataclass(frozen=True)
class FamilySpec:
    base: str
    length_parity: str | None = None

    def __post_init__(self):
        if self.base not in FAMILIES:
            raise FamilyError(f"unknown family {self.base!r}; expected one of {', '.join(FAMILIES)}")
        if self.length_parity not in (None, "even", "odd"):
            raise FamilyError(f"length parity must be 'even' or 'odd', got {self.length_parity!r}")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Accept ``D2``, ``D2^e``, ``Q^o`` and similar."""
        base, _, sup = text.partition("^")
        parity = {"": None, "e": "even", "o": "odd"}.get(sup)
        if parity is None and sup:
            raise FamilyError(f"bad parity superscript in {text!r}")
        return cls(base, parity)

    @property
    def is_overpartition(self) -> bool:
        return self.base in OVERPARTITION_FAMILIES

    def __str__(self) -> str:
        if self.length_parity is None:
            return self.base
        return f"{self.base}^{self.length_parity[0]}"


def _restricted(n: int, largest: int, distinct: bool, residue: int | None) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    top = min(n, largest)
    for first in range(top, 0, -1):
        if residue is not None and first % 2 != residue:
            continue
        rest_max = first - 1 if distinct else first
        for rest in _restricted(n - first, rest_max, distinct, residue):
            yield (first,) + rest


def partitions(n: int, base: str = "P") -> Iterator[Partition]:
    """Partitions of ``n`` in one of the plain families, decreasing lex order."""
    if n < 0:
        raise ValueError(f"weight must be nonnegative, got {n}")
    distinct, residue = _RESTRICTIONS[base]
    for parts in _restricted(n, n, distinct, residue):
        if base == "R" and is_distinct_odd(parts):
            continue
        yield Partition._trusted(parts)


def _d2(n: int) -> Iterator[Overpartition]:
    for m in range(n, -1, -1):
        evens = list(partitions(n - m, "Q_e"))
        for mu in partitions(m, "P"):
            for nu in evens:
                yield _over(mu, nu)


def _over(mu: Partition, nu: Partition) -> Overpartition:
    o = object.__new__(Overpartition)
    object.__setattr__(o, "mu", mu)
    object.__setattr__(o, "nu", nu)
    return o


def generate(spec: FamilySpec | str, n: int) -> Iterator[Partition | Overpartition]:
    """Yield every member of ``spec`` at weight ``n`` exactly once."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    if n < 0:
        raise ValueError(f"weight must be nonnegative, got {n}")
    if spec.base == "D2":
        stream = _d2(n)
    elif spec.base == "H":
        stream = (o for o in _d2(n) if is_self_conjugate(o.mu))
    else:
        stream = partitions(n, spec.base)
    if spec.length_parity is None:
        yield from stream
    else:
        want = 0 if spec.length_parity == "even" else 1
        for x in stream:
            if len(x) % 2 == want:
                yield x


ENUMERATION_LIMIT = 40


def count(spec: FamilySpec | str, n: int, method: str = "auto") -> int:
    """Size of a family at weight ``n``.

    ``method="enumerate"`` walks the stream; ``"series"`` reads a product
    coefficient instead; ``"auto"`` enumerates up to ``ENUMERATION_LIMIT``.
    H has no series route and is always enumerated.
    """
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    if method not in ("auto", "enumerate", "series"):
        raise ValueError(f"unknown counting method {method!r}")
    if method == "auto":
        method = "enumerate" if n <= ENUMERATION_LIMIT or spec.base == "H" else "series"
    if method == "enumerate":
        return sum(1 for _ in generate(spec, n))
    return _series_count(spec, n)


def _series_count(spec: FamilySpec, n: int) -> int:
    from .qseries import family_series

    if n < 0:
        raise ValueError(f"weight must be nonnegative, got {n}")
    total, signed = family_series(spec.base, n)
    if spec.length_parity is None:
        return total[n]
    if spec.length_parity == "even":
        return (total[n] + signed[n]) // 2
    return (total[n] - signed[n]) // 2


def count_self_half_conjugate(n: int) -> int:
    """Number of members of D2(n) fixed by half-conjugation."""
    from .involutions import half_conjugate

    return sum(1 for o in generate("D2", n) if half_conjugate(o) == o)


def d2_counts(n: int) -> tuple[int, int, int]:
    """``(d2(n), even-length count, odd-length count)`` by one enumeration pass."""
    even = odd = 0
    for o in _d2(n):
        if len(o) % 2:
            odd += 1
        else:
            even += 1
    return even + odd, even, odd
