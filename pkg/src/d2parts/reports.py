"""Text renderings: pairing tables for each map, count tables, Ferrers diagrams."""

from __future__ import annotations

from typing import Iterable

from .core import (
    Overpartition,
    Partition,
    conjugate,
    durfee_size,
    format_overpartition,
    format_partition,
    is_distinct_odd,
    is_self_conjugate,
)
from .enumerate import d2_counts, generate
from .involutions import (
    FranklinException,
    franklin,
    glaisher,
    half_conjugate,
    slope_length,
    sylvester_to_distinct_odd,
    van_leeuwen,
)
from .pairings import (
    Unmatched,
    hq_forward,
    pairing_rows,
    theorem4_pair,
    theorem5_pair,
)

MAPS = ("glaisher", "franklin", "sylvester", "vanleeuwen", "halfconj", "hq", "theorem4", "theorem5")


def show(x, ascii: bool = True) -> str:
    if isinstance(x, Overpartition):
        return f"({format_overpartition(x, ascii=ascii)})"
    return f"({format_partition(x)})"


# -- trace rows -------------------------------------------------------------------


def _pairs(members: Iterable, pair) -> list[tuple]:
    """``(left, right)`` rows, each 2-cycle once, keyed by its first member seen."""
    seen = set()
    rows = []
    for x in members:
        if x in seen:
            continue
        y = pair(x)
        seen.add(x)
        if isinstance(y, (Unmatched, FranklinException)):
            rows.append((x, None))
        else:
            seen.add(y)
            rows.append((x, y))
    return rows


def trace_rows(name: str, n: int) -> list[dict]:
    """Machine rows ``n, family, member, outcome, partner`` for ``name`` at weight ``n``."""
    if name in ("theorem4", "theorem5"):
        return list(pairing_rows(int(name[-1]), n))
    family, members, fn = _plain_map(name, n)
    rows = []
    for x in members:
        y = fn(x)
        fmt = format_overpartition if isinstance(x, Overpartition) else format_partition
        if isinstance(y, FranklinException):
            rows.append({"n": n, "family": family, "member": fmt(x), "outcome": "unmatched",
                         "partner": f"franklin_exception:{format_partition(y.staircase)}"})
        else:
            yfmt = format_overpartition if isinstance(y, Overpartition) else format_partition
            outcome = "fixed" if y == x else "paired"
            rows.append({"n": n, "family": family, "member": fmt(x), "outcome": outcome, "partner": yfmt(y)})
    return rows


def _plain_map(name: str, n: int):
    if name == "glaisher":
        return "P_o", list(generate("P_o", n)), glaisher
    if name == "franklin":
        return "Q", list(generate("Q", n)) if n else [], franklin
    if name == "sylvester":
        return "P|self-conjugate", [p for p in generate("P", n) if is_self_conjugate(p)], sylvester_to_distinct_odd
    if name == "vanleeuwen":
        return "R", list(generate("R", n)) if n >= 2 else [], van_leeuwen
    if name == "halfconj":
        return "D2", list(generate("D2", n)), half_conjugate
    if name == "hq":
        return "H", list(generate("H", n)), hq_forward
    raise ValueError(f"unknown map {name!r}; expected one of {', '.join(MAPS)}")


# -- human tables -------------------------------------------------------------------


def _two_columns(header: tuple[str, str], rows: list[tuple[str, str]]) -> str:
    width = max(len(a) for a, _ in [header] + rows)
    lines = [f"{header[0]:>{width}} | {header[1]}", "-" * (width + 1) + "+" + "-" * 12]
    lines += [f"{a:>{width}} | {b}".rstrip() for a, b in rows]
    return "\n".join(lines) + "\n"


def trace_table(name: str, n: int, ascii: bool = True) -> str:
    """The pairing table for ``name`` at weight ``n``, laid out like a two-column figure."""

    def s(x):
        return show(x, ascii)

    if name == "glaisher":
        rows = [(s(p), s(glaisher(p))) for p in generate("P_o", n)]
        return _two_columns((f"P_o({n})", f"Q({n})"), rows)
    if name == "franklin":
        body = _pairs(generate("Q^e", n), franklin) if n else []
        rows = [(s(a), s(b)) for a, b in body if b is not None]
        unpaired = [franklin(p) for p in generate("Q", n) if n and isinstance(franklin(p), FranklinException)]
        for exc in unpaired:
            cell = s(exc.staircase) + " *"
            rows.append((cell, "") if exc.sign > 0 else ("", cell))
        return _two_columns((f"Q^e({n})", f"Q^o({n})"), rows)
    if name == "sylvester":
        rows = [(s(p), s(sylvester_to_distinct_odd(p))) for p in generate("P", n) if is_self_conjugate(p)]
        return _two_columns((f"P({n}|self-conjugate)", f"Q_o({n})"), rows)
    if name == "vanleeuwen":
        if n < 2:
            return _two_columns((f"R^e({n})", f"R^o({n})"), [])
        rows = [(s(a), s(b)) for a, b in _pairs(generate("R^e", n), van_leeuwen)]
        return _two_columns((f"R^e({n})", f"R^o({n})"), rows)
    if name == "halfconj":
        rows = []
        for a, b in _pairs(generate("D2", n), half_conjugate):
            rows.append((s(a), "(self)" if a == b else s(b)))
        return _two_columns((f"D2({n})", "half-conjugate"), rows)
    if name == "hq":
        rows = [(s(h), s(hq_forward(h))) for h in generate("H", n)]
        return _two_columns((f"H({n})", f"Q({n})"), rows)
    if name == "theorem4":
        return _theorem4_table(n, s)
    if name == "theorem5":
        return _theorem5_table(n, s)
    raise ValueError(f"unknown map {name!r}; expected one of {', '.join(MAPS)}")


def _theorem4_table(n: int, s) -> str:
    out = []
    for parity in ("e", "o"):
        out.append(f"D2^{parity}({n})")
        seen = set()
        for o in generate(f"D2^{parity}", n):
            if o in seen:
                continue
            seen.add(o)
            partner = theorem4_pair(o)
            if isinstance(partner, Overpartition):
                seen.add(partner)
            if o.nu or any(x % 2 == 0 for x in o.mu):
                out.append(f"  {s(o)} ~ {s(partner)}")
            elif isinstance(partner, Unmatched):
                chain = f"{s(o)} G {s(glaisher(o.mu))} F *" if o.mu else f"{s(o)} *"
                out.append(f"  {chain}")
            else:
                g = glaisher(o.mu)
                f = franklin(g)
                out.append(f"  {s(o)} G {s(g)} F {s(f)} G {s(partner)}")
    return "\n".join(out) + "\n"


def _theorem5_table(n: int, s) -> str:
    """van Leeuwen pairs without overlines, then with overlines, then Franklin pairs."""
    if n == 0:
        return _two_columns(("D2^e(0)", "D2^o(0)"), [("() *", "")])
    plain, mixed, by_franklin, unpaired = [], [], [], []
    for a, b in _pairs(generate("D2^e", n), theorem5_pair):
        if b is None:
            unpaired.append((s(a) + " *", ""))
        elif a.mu and not is_distinct_odd(a.mu):
            (mixed if a.nu else plain).append((s(a), s(b)))
        else:
            by_franklin.append((s(a), s(b)))
    for o in generate("D2^o", n):
        if isinstance(theorem5_pair(o), Unmatched):
            unpaired.append(("", s(o) + " *"))
    rule = [("--", "--")]
    rows = plain + rule + mixed + rule + by_franklin + unpaired
    return _two_columns((f"D2^e({n})", f"D2^o({n})"), rows)


# -- counts ------------------------------------------------------------------------


def count_rows(n_min: int, n_max: int) -> list[dict]:
    rows = []
    for n in range(n_min, n_max + 1):
        total, even, odd = d2_counts(n)
        rows.append({"n": n, "d2": total, "d2e": even, "d2o": odd})
    return rows


# -- Ferrers diagrams ------------------------------------------------------------

CELL = "#"
HOOK_LABELS = "123456789abcdefghijklmnopqrstuvwxyz"


def ferrers(p: Iterable[int], mark: str | None = None) -> str:
    """ASCII Ferrers diagram, English convention (largest row on top).

    ``mark="slope"`` draws Franklin's slope cells as ``o`` and the smallest
    row as ``*`` (``@`` where they overlap). ``mark="hooks"`` labels every
    cell with the index of the diagonal hook containing it.
    """
    p = Partition(p)
    grid = [[CELL] * x for x in p]
    if mark == "slope" and p:
        for i in range(slope_length(p)):
            grid[i][p[i] - 1] = "o"
        last = grid[-1]
        for j in range(len(last)):
            last[j] = "@" if last[j] == "o" else "*"
    elif mark == "hooks":
        cols = conjugate(p)
        for k in range(durfee_size(p)):
            label = HOOK_LABELS[k % len(HOOK_LABELS)]
            for j in range(k, p[k]):
                grid[k][j] = label
            for i in range(k, cols[k]):
                grid[i][k] = label
    elif mark not in (None, "slope", "hooks"):
        raise ValueError(f"unknown mark {mark!r}")
    return "\n".join(" ".join(row) for row in grid) + ("\n" if grid else "")
