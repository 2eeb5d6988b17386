"""Truncated power series in q with exact integer coefficients.

Infinite products of binomial factors ``(1 + sign*q**e)**power`` are
expanded factor by factor: multiplication is an in-place convolution and
division is back-substitution, so every coefficient stays an exact int.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .core import pentagonal_number


@dataclass(frozen=True)
class Series:
    """Coefficients of ``q**0 .. q**order`` inclusive."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def _common(self, other: "Series") -> tuple[tuple, tuple]:
        n = min(self.order, other.order) + 1
        return self.coeffs[:n], other.coeffs[:n]

    def __add__(self, other: "Series") -> "Series":
        a, b = self._common(other)
        return Series(x + y for x, y in zip(a, b))

    def __sub__(self, other: "Series") -> "Series":
        a, b = self._common(other)
        return Series(x - y for x, y in zip(a, b))

    def __neg__(self) -> "Series":
        return Series(-x for x in self.coeffs)

    def __mul__(self, other: "Series | int") -> "Series":
        if isinstance(other, int):
            return Series(other * x for x in self.coeffs)
        a, b = self._common(other)
        out = [0] * len(a)
        for i, x in enumerate(a):
            if x:
                for j in range(len(a) - i):
                    out[i + j] += x * b[j]
        return Series(out)

    __rmul__ = __mul__

    def to_json(self, modulus: int | None = None) -> str:
        doc = {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}
        if modulus is not None:
            doc["modulus"] = modulus
        return json.dumps(doc)

    @classmethod
    def from_json(cls, text: str) -> "Series":
        doc = json.loads(text)
        s = cls(int(c) for c in doc["coeffs"])
        if s.order != doc["order"]:
            raise ValueError(f"order field {doc['order']} disagrees with {len(s)} coefficients")
        return s


def one(order: int) -> Series:
    return Series([1] + [0] * order)


# -- products --------------------------------------------------------------------


@dataclass(frozen=True)
class Factor:
    """``prod_{i >= 1} (1 + sign * q**(step*i + offset))**power``."""

    sign: int
    step: int
    offset: int = 0
    power: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"factor sign must be +1 or -1, got {self.sign}")
        if self.step < 1 or self.step + self.offset < 1:
            raise ValueError(
                f"exponent {self.step}*i + {self.offset} must be positive for every i >= 1"
            )

    def exponents(self, order: int):
        i = 1
        while (e := self.step * i + self.offset) <= order:
            yield e
            i += 1


ProductSpec = Sequence[Factor]


def _times_binomial(c: list[int], sign: int, e: int) -> None:
    # c *= (1 + sign q^e), in place
    for n in range(len(c) - 1, e - 1, -1):
        c[n] += sign * c[n - e]


def _over_binomial(c: list[int], sign: int, e: int) -> None:
    # c /= (1 + sign q^e), in place
    for n in range(e, len(c)):
        c[n] -= sign * c[n - e]


def expand(spec: ProductSpec, order: int) -> Series:
    """Exact expansion of a product of binomial factors up to ``q**order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = [1] + [0] * order
    for f in spec:
        if not isinstance(f, Factor):
            f = Factor(*f)
        step = _times_binomial if f.power > 0 else _over_binomial
        for e in f.exponents(order):
            for _ in range(abs(f.power)):
                step(c, f.sign, e)
    return Series(c)


# Products appearing in the d2 identities.
D2_PRODUCT = (Factor(+1, 2), Factor(-1, 1, power=-1))
D2_PRODUCT_BY_4 = (Factor(-1, 4), Factor(-1, 1, power=-1), Factor(-1, 2, power=-1))
D2_PRODUCT_TWO_COLOR = (Factor(-1, 1, power=-1), Factor(-1, 4, -2, power=-1))
EULER_PRODUCT = (Factor(-1, 1),)
# d2 generating function at -q, rewritten with positive q only.
D2_NEG_Q_PRODUCT = (Factor(+1, 2), Factor(-1, 2, power=-1), Factor(+1, 2, -1, power=-1))
D2_NEG_Q_ETA = (Factor(-1, 4, power=2), Factor(-1, 1), Factor(-1, 2, power=-4))


# Per family: (product for the counts, product with every part weighted by -1).
FAMILY_PRODUCTS = {
    "P": ((Factor(-1, 1, power=-1),), (Factor(+1, 1, power=-1),)),
    "Q": ((Factor(+1, 1),), (Factor(-1, 1),)),
    "Q_o": ((Factor(+1, 2, -1),), (Factor(-1, 2, -1),)),
    "Q_e": ((Factor(+1, 2),), (Factor(-1, 2),)),
    "P_o": ((Factor(-1, 2, -1, power=-1),), (Factor(+1, 2, -1, power=-1),)),
    "P_e": ((Factor(-1, 2, power=-1),), (Factor(+1, 2, power=-1),)),
    "D2": (D2_PRODUCT, (Factor(-1, 2), Factor(+1, 1, power=-1))),
}


def family_series(base: str, order: int) -> tuple[Series, Series]:
    """Generating functions ``sum q^|x|`` and ``sum (-1)^len(x) q^|x|`` over a family."""
    if base == "R":
        p_total, p_signed = family_series("P", order)
        o_total, o_signed = family_series("Q_o", order)
        return p_total - o_total, p_signed - o_signed
    if base not in FAMILY_PRODUCTS:
        raise ValueError(f"no product formula for family {base!r}")
    total, signed = FAMILY_PRODUCTS[base]
    return expand(total, order), expand(signed, order)


def d2_series(order: int) -> Series:
    return expand(D2_PRODUCT, order)


def pentagonal_series(order: int) -> Series:
    """``sum over integers m of (-1)**m q**(m(3m+1)/2)``, built term by term."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = [0] * (order + 1)
    c[0] = 1
    m = 1
    while pentagonal_number(-m) <= order:
        sign = -1 if m % 2 else 1
        for idx in (m, -m):
            e = pentagonal_number(idx)
            if e <= order:
                c[e] += sign
        m += 1
    return Series(c)


def substitute_neg_q(s: Series) -> Series:
    return Series(-c if n % 2 else c for n, c in enumerate(s.coeffs))


def reduce_mod(s: Series, modulus: int) -> Series:
    if modulus < 2:
        raise ValueError(f"modulus must be at least 2, got {modulus}")
    return Series(c % modulus for c in s.coeffs)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def binomial_power(k: int, power: int, order: int) -> Series:
    """``(1 - q**k)**power`` truncated at ``order``, for ``power >= 0``."""
    c = [1] + [0] * order
    for _ in range(power):
        _times_binomial(c, -1, k)
    return Series(c)


def check_binomial_congruence(p: int, k: int, l: int, order: int) -> bool:
    """Whether ``(1-q^k)^(p^l) == (1-q^(pk))^(p^(l-1))`` mod ``p^l`` through ``q**order``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1 or l < 1 or order < 1:
        raise ValueError("k, l and order must all be positive")
    lhs = binomial_power(k, p**l, order)
    rhs = binomial_power(p * k, p ** (l - 1), order)
    return reduce_mod(lhs, p**l) == reduce_mod(rhs, p**l)
