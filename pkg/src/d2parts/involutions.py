"""Classical partition maps (Glaisher, Franklin, Sylvester, van Leeuwen)
and half-conjugation of overpartitions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .core import (
    DomainError,
    Overpartition,
    Partition,
    conjugate,
    durfee_size,
    is_all_odd,
    is_distinct,
    is_distinct_odd,
    is_self_conjugate,
)


def _odd_part(x: int) -> tuple[int, int]:
    """Write ``x = 2**a * m`` with ``m`` odd; return ``(a, m)``."""
    a = (x & -x).bit_length() - 1
    return a, x >> a


# -- Glaisher ------------------------------------------------------------------


def glaisher(p: Iterable[int]) -> Partition:
    """Exchange distinct-part and odd-part partitions of the same weight.

    Distinct input has every even part halved repeatedly; odd input has
    equal parts merged pairwise. Distinct odd partitions are fixed.
    """
    p = Partition(p)
    if is_distinct_odd(p):
        return p
    if is_distinct(p):
        return _glaisher_split(p)
    if is_all_odd(p):
        return _glaisher_merge(p)
    raise DomainError(f"glaisher needs all-odd or distinct parts, got ({p})")


def _glaisher_split(p: Partition) -> Partition:
    out = []
    for x in p:
        a, m = _odd_part(x)
        out.extend([m] * (1 << a))
    return Partition(out)


def _glaisher_merge(p: Partition) -> Partition:
    out = []
    for m, mult in Counter(p).items():
        a = 0
        while mult:
            if mult & 1:
                out.append(m << a)
            mult >>= 1
            a += 1
    return Partition(out)


def glaisher_iterative(p: Iterable[int]) -> Partition:
    """Glaisher's map by literal repeated halving or pairwise merging."""
    p = Partition(p)
    parts = list(p)
    if is_distinct_odd(p):
        return p
    if is_distinct(p):
        while any(x % 2 == 0 for x in parts):
            x = next(x for x in parts if x % 2 == 0)
            parts.remove(x)
            parts += [x // 2, x // 2]
        return Partition(parts)
    if is_all_odd(p):
        while True:
            c = Counter(parts)
            dup = [x for x, k in c.items() if k >= 2]
            if not dup:
                return Partition(parts)
            x = min(dup)
            parts.remove(x)
            parts.remove(x)
            parts.append(2 * x)
    raise DomainError(f"glaisher needs all-odd or distinct parts, got ({p})")


# -- Franklin ------------------------------------------------------------------


@dataclass(frozen=True)
class FranklinException:
    """A staircase partition on which Franklin's map is undefined.

    ``m`` is the pentagonal index of its weight and ``sign == (-1)**len``.
    """

    staircase: Partition
    m: int

    @property
    def sign(self) -> int:
        return -1 if len(self.staircase) % 2 else 1

    @property
    def kind(self) -> str:
        return "(2k,...,k+1)" if self.m > 0 else "(2k-1,...,k)"


def slope_length(p: Partition) -> int:
    """Length of the run ``p[0], p[0]-1, ...`` at the top of ``p``."""
    d = 1
    while d < len(p) and p[d] == p[0] - d:
        d += 1
    return d


def franklin(p: Iterable[int]) -> Partition | FranklinException:
    """Franklin's map on a nonempty distinct-part partition.

    Compares the smallest part ``s`` with the slope length ``d``. If
    ``s <= d`` the smallest part is removed and spread one box each over the
    top ``s`` rows; otherwise one box is taken off each of the ``d`` slope
    rows and they form a new smallest part ``d``.
    """
    p = Partition(p)
    if not p:
        raise DomainError("franklin is undefined on the empty partition")
    if not is_distinct(p):
        raise DomainError(f"franklin needs distinct parts, got ({p})")
    t = len(p)
    s = p[-1]
    d = slope_length(p)
    if t == d and s in (d, d + 1):
        return FranklinException(p, t if s == d + 1 else -t)
    parts = list(p)
    if s <= d:
        parts.pop()
        for i in range(s):
            parts[i] += 1
    else:
        for i in range(d):
            parts[i] -= 1
        parts.append(d)
    return Partition._trusted(parts)


# -- Sylvester -----------------------------------------------------------------


def sylvester_to_distinct_odd(p: Iterable[int]) -> Partition:
    """Read the diagonal hooks of a self-conjugate partition as parts."""
    p = Partition(p)
    if not is_self_conjugate(p):
        raise DomainError(f"partition ({p}) is not self-conjugate")
    return Partition._trusted([2 * (p[i - 1] - i) + 1 for i in range(1, durfee_size(p) + 1)])


def sylvester_to_self_conjugate(q: Iterable[int]) -> Partition:
    """Bend each odd part ``2a+1`` into a diagonal hook with arm and leg ``a``."""
    q = Partition(q)
    if not is_distinct_odd(q):
        raise DomainError(f"partition ({q}) does not have distinct odd parts")
    arms = [(x - 1) // 2 for x in q]
    rows = [i + a for i, a in enumerate(arms, start=1)]
    depth = len(arms)
    r = depth + 1
    while True:
        below = sum(1 for i, a in enumerate(arms, start=1) if i + a >= r)
        if not below:
            break
        rows.append(below)
        r += 1
    return Partition._trusted(rows)


def sylvester(p: Iterable[int]) -> Partition:
    """Sylvester's bijection, direction chosen by which side ``p`` lies on."""
    p = Partition(p)
    if is_self_conjugate(p):
        return sylvester_to_distinct_odd(p)
    if is_distinct_odd(p):
        return sylvester_to_self_conjugate(p)
    raise DomainError(f"sylvester needs a self-conjugate or distinct odd partition, got ({p})")


# -- van Leeuwen ---------------------------------------------------------------


def van_leeuwen(p: Iterable[int]) -> Partition:
    """Split/merge involution on partitions that are not distinct-odd.

    Picks the least odd ``m`` whose family ``{2**k * m}`` of parts is
    neither empty nor the lone part ``m``, then acts on the largest member
    of that family: a unique copy is halved into two parts, a repeated one
    has two copies merged.
    """
    p = Partition(p)
    if sum(p) < 2:
        raise DomainError(f"van Leeuwen's map needs weight >= 2, got ({p})")
    if is_distinct_odd(p):
        raise DomainError(f"partition ({p}) has distinct odd parts")
    families: dict[int, list[int]] = {}
    for x in p:
        families.setdefault(_odd_part(x)[1], []).append(x)
    m = min(m for m, fam in families.items() if fam != [m])
    top = max(families[m])
    parts = list(p)
    parts.remove(top)
    if parts.count(top) == 0:
        parts += [top // 2, top // 2]
    else:
        parts.remove(top)
        parts.append(2 * top)
    return Partition(parts)


# -- half-conjugation ----------------------------------------------------------


def half_conjugate(o: Overpartition) -> Overpartition:
    """Conjugate the nonoverlined parts and keep the overlined ones."""
    return Overpartition(conjugate(o.mu), o.nu)
