"""Bijections and near-involutions on D2(n), the overpartitions of n in
which only even parts may be overlined, plus whole-set verifiers.

The verifiers only use exhaustive enumeration as their oracle; the series
engine is kept out of this module so the two stay independent checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

from .core import (
    DomainError,
    Overpartition,
    Partition,
    PentIndex,
    format_overpartition,
    format_partition,
    is_distinct,
    is_distinct_odd,
    pentagonal_index,
    satisfies_d2,
    staircase,
)
from .enumerate import d2_counts, generate
from .involutions import (
    FranklinException,
    franklin,
    glaisher,
    half_conjugate,
    sylvester_to_distinct_odd,
    sylvester_to_self_conjugate,
    van_leeuwen,
)


@dataclass(frozen=True)
class Unmatched:
    """No partner: Franklin's map hit the staircase ``staircase``."""

    staircase: Partition
    reason: str = "franklin_exception"


PairingOutcome = Overpartition | Unmatched


def _require_d2(o: Overpartition) -> None:
    if not satisfies_d2(o):
        raise DomainError(f"({format_overpartition(o)}) has an overlined odd part")


# -- Theorem 3: self-half-conjugate overpartitions vs distinct parts -----------


def hq_forward(o: Overpartition) -> Partition:
    _require_d2(o)
    if half_conjugate(o) != o:
        raise DomainError(f"({format_overpartition(o)}) is not self-half-conjugate")
    return Partition(sylvester_to_distinct_odd(o.mu) + o.nu)


def hq_backward(p) -> Overpartition:
    p = Partition(p)
    if not is_distinct(p):
        raise DomainError(f"({p}) does not have distinct parts")
    odd = Partition._trusted([x for x in p if x % 2])
    even = Partition._trusted([x for x in p if x % 2 == 0])
    return Overpartition(sylvester_to_self_conjugate(odd), even)


# -- Theorem 4: pairing within each length parity ------------------------------


def toggle_largest_even(o: Overpartition) -> Overpartition:
    """Flip whether the largest even part value carries an overline."""
    _require_d2(o)
    evens = [x for x in o.mu + o.nu if x % 2 == 0]
    if not evens:
        raise DomainError(f"({format_overpartition(o)}) has no even part")
    v = max(evens)
    if v in o.nu:
        nu = [x for x in o.nu if x != v]
        return Overpartition(Partition(o.mu + (v,)), Partition._trusted(nu))
    mu = list(o.mu)
    mu.remove(v)
    return Overpartition(Partition._trusted(mu), Partition(o.nu + (v,)))


def theorem4_pair(o: Overpartition) -> PairingOutcome:
    """Toggle the largest even part; on all-odd partitions use G, F, G."""
    _require_d2(o)
    if any(x % 2 == 0 for x in o.mu) or o.nu:
        return toggle_largest_even(o)
    if not o.mu:
        # Weight 0: the empty partition is the staircase for index 0.
        return Unmatched(Partition())
    g = glaisher(o.mu)
    f = franklin(g)
    if isinstance(f, FranklinException):
        return Unmatched(f.staircase)
    return Overpartition(glaisher(f))


# -- Theorem 5: length-parity flipping near-involution -------------------------


def theorem5_pair(o: Overpartition) -> PairingOutcome:
    """van Leeuwen on the plain parts when they are not distinct odd,
    otherwise Franklin on all parts with even parts re-overlined."""
    _require_d2(o)
    if o.weight == 0:
        raise DomainError("theorem 5 pairing needs positive weight")
    if o.mu and not is_distinct_odd(o.mu):
        return Overpartition(van_leeuwen(o.mu), o.nu)
    f = franklin(o.values())
    if isinstance(f, FranklinException):
        return Unmatched(f.staircase)
    return Overpartition(
        Partition._trusted([x for x in f if x % 2]),
        Partition._trusted([x for x in f if x % 2 == 0]),
    )


# -- verification ---------------------------------------------------------------


def expected_residue(n: int, modulus: int) -> int:
    """Predicted ``d2(n) mod modulus`` for modulus 2 or 4."""
    pent = pentagonal_index(n)
    if modulus == 2:
        return 1 if pent else 0
    if modulus == 4:
        if pent is None:
            return 0
        return 1 if pent.residue_class in (0, 3) else 3
    raise ValueError(f"only moduli 2 and 4 are characterized, got {modulus}")


@dataclass(frozen=True)
class CongruenceVerdict:
    n: int
    d2: int
    modulus: int
    d2_mod: int
    expected: int
    pent: PentIndex | None
    source: str = "enumeration"

    @property
    def passed(self) -> bool:
        return self.d2_mod == self.expected


def congruence_verdict(n: int, d2: int, modulus: int, source: str = "enumeration") -> CongruenceVerdict:
    return CongruenceVerdict(n, d2, modulus, d2 % modulus, expected_residue(n, modulus), pentagonal_index(n), source)


@dataclass
class PairingReport:
    """Outcome of checking one theorem's map on every member at weight ``n``."""

    theorem: int
    n: int
    pairs: int = 0
    unmatched: list = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _check_theorem3(n: int) -> PairingReport:
    rep = PairingReport(3, n)
    hs = list(generate("H", n))
    qs = list(generate("Q", n))
    images = []
    for h in hs:
        p = hq_forward(h)
        images.append(p)
        if hq_backward(p) != h:
            rep.failures.append(f"hq_backward(hq_forward({format_overpartition(h)})) != itself")
    for q in qs:
        if hq_forward(hq_backward(q)) != q:
            rep.failures.append(f"hq_forward(hq_backward({format_partition(q)})) != itself")
    if sorted(images) != sorted(qs):
        rep.failures.append(f"images of H({n}) are not exactly Q({n})")
    if len(hs) != len(qs):
        rep.failures.append(f"h({n}) = {len(hs)} but q({n}) = {len(qs)}")
    rep.pairs = len(hs)
    return rep


def _check_pairing(rep: PairingReport, members: list, pair, same_parity: bool) -> None:
    member_set = set(members)
    paired = 0
    for o in members:
        out = pair(o)
        if isinstance(out, Unmatched):
            rep.unmatched.append(o)
            continue
        tag = format_overpartition(o)
        if out == o:
            rep.failures.append(f"({tag}) is a fixed point")
        if (len(out) % 2 == len(o) % 2) != same_parity:
            rep.failures.append(f"({tag}) -> ({format_overpartition(out)}) has wrong length parity")
        if same_parity and out not in member_set:
            rep.failures.append(f"partner of ({tag}) left the family")
        if not satisfies_d2(out) or out.weight != o.weight:
            rep.failures.append(f"partner of ({tag}) is not in D2({o.weight})")
        if pair(out) != o:
            rep.failures.append(f"pairing is not an involution at ({tag})")
        paired += 1
    rep.pairs += paired // 2


def _check_theorem4(n: int) -> PairingReport:
    rep = PairingReport(4, n)
    pent = pentagonal_index(n)
    for parity, classes in (("even", (0, 1)), ("odd", (2, 3))):
        members = list(generate(f"D2^{parity[0]}", n))
        before = len(rep.unmatched)
        _check_pairing(rep, members, theorem4_pair, same_parity=True)
        found = rep.unmatched[before:]
        want = 1 if pent is not None and pent.residue_class in classes else 0
        if len(found) != want:
            rep.failures.append(f"D2^{parity[0]}({n}) has {len(found)} unmatched, expected {want}")
        for o in found:
            if o.nu or not all(x % 2 for x in o.mu):
                rep.failures.append(f"unmatched ({format_overpartition(o)}) is not all-odd")
            elif pent is not None and glaisher(o.mu) != staircase(pent.m):
                rep.failures.append(f"unmatched ({format_overpartition(o)}) does not map to the staircase")
    return rep


def _check_theorem5(n: int) -> PairingReport:
    rep = PairingReport(5, n)
    pent = pentagonal_index(n)
    if n == 0:
        # D2(0) is the empty overpartition alone; index 0, sign +1.
        rep.unmatched.append(Overpartition())
        return rep
    members = list(generate("D2", n))
    _check_pairing(rep, members, theorem5_pair, same_parity=False)
    want = 1 if pent is not None else 0
    if len(rep.unmatched) != want:
        rep.failures.append(f"D2({n}) has {len(rep.unmatched)} unmatched, expected {want}")
    _, even, odd = d2_counts(n)
    diff = even - odd
    expected = pent.sign if pent is not None else 0
    if diff != expected:
        rep.failures.append(f"d2e({n}) - d2o({n}) = {diff}, expected {expected}")
    for o in rep.unmatched:
        signed = -1 if len(o) % 2 else 1
        if pent is None or o.values() != staircase(pent.m) or signed != pent.sign:
            rep.failures.append(f"unmatched ({format_overpartition(o)}) is not the signed staircase")
    return rep


def verify_theorem(theorem: int, n_max: int) -> list:
    """Check one theorem at every weight ``0..n_max`` by exhaustive enumeration.

    Theorems 1 and 2 return :class:`CongruenceVerdict` rows (moduli 2 and 4);
    theorems 3 to 5 return :class:`PairingReport` rows.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if theorem in (1, 2):
        modulus = 2 if theorem == 1 else 4
        return [congruence_verdict(n, d2_counts(n)[0], modulus) for n in range(n_max + 1)]
    checks = {3: _check_theorem3, 4: _check_theorem4, 5: _check_theorem5}
    if theorem not in checks:
        raise ValueError(f"unknown theorem {theorem}")
    return [checks[theorem](n) for n in range(n_max + 1)]


# -- serialization ---------------------------------------------------------------

ROW_FIELDS = ("n", "family", "member", "outcome", "partner")


def pairing_rows(theorem: int, n: int) -> Iterator[dict]:
    """One row per member of D2(n) under the theorem 4 or 5 pairing."""
    pair = {4: theorem4_pair, 5: theorem5_pair}[theorem]
    for parity in ("e", "o"):
        family = f"D2^{parity}"
        for o in generate(family, n):
            if n == 0 and theorem == 5:
                out = Unmatched(Partition())
            else:
                out = pair(o)
            if isinstance(out, Unmatched):
                yield {"n": n, "family": family, "member": format_overpartition(o),
                       "outcome": "unmatched", "partner": f"{out.reason}:{format_partition(out.staircase)}"}
            else:
                yield {"n": n, "family": family, "member": format_overpartition(o),
                       "outcome": "paired", "partner": format_overpartition(out)}


def rows_to_tsv(rows) -> str:
    lines = ["\t".join(ROW_FIELDS)]
    lines += ["\t".join(str(r[k]) for k in ROW_FIELDS) for r in rows]
    return "\n".join(lines) + "\n"


def rows_to_json(rows) -> str:
    return json.dumps([{k: r[k] for k in ROW_FIELDS} for r in rows], indent=1) + "\n"

