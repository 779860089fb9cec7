"""Total orders, strict total orders and meet semilattices on ``range(n)``.

Structures are plain tables; constructing one does not validate it. The
``check_*`` functions do, scanning axioms in a fixed order and witnesses
lexicographically, so failures are deterministic.

On a finite tabulated carrier "merely x <= y or y <= x" and the decidable
version coincide: both are read off the same boolean table.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from freesort import kernels
from freesort.verdict import Verdict, first_failure

MAX_ENUMERATION = 6


class GuardError(ValueError):
    """Requested enumeration is too large."""


class OrderAxiomError(ValueError):
    def __init__(self, verdict: Verdict):
        super().__init__(f"{verdict.name} fails at {verdict.witness}")
        self.verdict = verdict


def _table(rows: Iterable[Iterable]) -> tuple:
    return tuple(tuple(bool(v) for v in r) for r in rows)


@dataclass(frozen=True)
class TotalOrder:
    leq: tuple  # leq[x][y]

    @classmethod
    def from_relation(cls, n: int, rel) -> "TotalOrder":
        return cls(_table([[rel(x, y) for y in range(n)] for x in range(n)]))

    @classmethod
    def numeric(cls, n: int) -> "TotalOrder":
        return cls.from_relation(n, lambda x, y: x <= y)

    @classmethod
    def from_ranking(cls, ranking: Sequence[int]) -> "TotalOrder":
        """Order listing ``ranking`` from least to greatest."""
        pos = {x: i for i, x in enumerate(ranking)}
        return cls.from_relation(len(ranking), lambda x, y: pos[x] <= pos[y])

    @property
    def carrier_size(self) -> int:
        return len(self.leq)

    def __call__(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def rows(self) -> list[str]:
        return [" ".join("1" if v else "0" for v in r) for r in self.leq]


@dataclass(frozen=True)
class StrictTotalOrder:
    lt: tuple

    @property
    def carrier_size(self) -> int:
        return len(self.lt)

    def __call__(self, x: int, y: int) -> bool:
        return self.lt[x][y]


@dataclass(frozen=True)
class MeetSemilattice:
    meet: tuple  # meet[x][y]

    @classmethod
    def from_function(cls, n: int, fn) -> "MeetSemilattice":
        return cls(tuple(tuple(fn(x, y) for y in range(n)) for x in range(n)))

    @property
    def carrier_size(self) -> int:
        return len(self.meet)

    def __call__(self, x: int, y: int) -> int:
        return self.meet[x][y]


def _square(table, n_name="table"):
    n = len(table)
    if any(len(r) != n for r in table):
        raise ValueError(f"{n_name} is not square")
    return n


def total_order_verdicts(t: TotalOrder) -> list[Verdict]:
    """One verdict per axiom: reflexivity, transitivity, antisymmetry, totality."""
    n = _square(t.leq)
    le = t.leq
    pts = range(n)
    refl = next(((x,) for x in pts if not le[x][x]), None)
    trans = next(
        ((x, y, z) for x, y, z in itertools.product(pts, repeat=3)
         if le[x][y] and le[y][z] and not le[x][z]),
        None,
    )
    antisym = next(
        ((x, y) for x, y in itertools.product(pts, repeat=2)
         if x != y and le[x][y] and le[y][x]),
        None,
    )
    total = next(
        ((x, y) for x, y in itertools.product(pts, repeat=2)
         if not (le[x][y] or le[y][x])),
        None,
    )
    return [
        Verdict("reflexivity", refl),
        Verdict("transitivity", trans),
        Verdict("antisymmetry", antisym),
        Verdict("totality", total),
    ]


def check_total_order(t: TotalOrder) -> Verdict:
    return first_failure(total_order_verdicts(t))


def check_strict_total_order(s: StrictTotalOrder) -> Verdict:
    n = _square(s.lt)
    lt = s.lt
    pts = range(n)
    checks = [
        ("irreflexivity", ((x,) for x in pts if lt[x][x])),
        ("transitivity", ((x, y, z) for x, y, z in itertools.product(pts, repeat=3)
                          if lt[x][y] and lt[y][z] and not lt[x][z])),
        ("asymmetry", ((x, y) for x, y in itertools.product(pts, repeat=2)
                       if lt[x][y] and lt[y][x])),
        ("cotransitivity", ((x, y, z) for x, y, z in itertools.product(pts, repeat=3)
                            if lt[x][z] and not (lt[x][y] or lt[y][z]))),
        ("connectedness", ((x, y) for x, y in itertools.product(pts, repeat=2)
                           if x != y and not lt[x][y] and not lt[y][x])),
    ]
    for name, gen in checks:
        w = next(gen, None)
        if w is not None:
            return Verdict(name, w)
    return Verdict("all")


def check_meet_semilattice(m: MeetSemilattice, total: bool = False) -> Verdict:
    n = _square(m.meet)
    mt = m.meet
    pts = range(n)
    if any(not 0 <= v < n for r in mt for v in r):
        raise ValueError("meet table leaves the carrier")
    checks = [
        ("idempotence", ((x,) for x in pts if mt[x][x] != x)),
        ("associativity", ((x, y, z) for x, y, z in itertools.product(pts, repeat=3)
                           if mt[mt[x][y]][z] != mt[x][mt[y][z]])),
        ("commutativity", ((x, y) for x, y in itertools.product(pts, repeat=2)
                           if mt[x][y] != mt[y][x])),
    ]
    if total:
        checks.append(("totality", ((x, y) for x, y in itertools.product(pts, repeat=2)
                                    if mt[x][y] not in (x, y))))
    for name, gen in checks:
        w = next(gen, None)
        if w is not None:
            return Verdict(name, w)
    return Verdict("all")


def _require(verdict: Verdict):
    if not verdict:
        raise OrderAxiomError(verdict)


def total_to_strict(t: TotalOrder) -> StrictTotalOrder:
    """``x < y`` iff ``x <= y`` and ``x != y``."""
    _require(check_total_order(t))
    n = t.carrier_size
    return StrictTotalOrder(_table([[t(x, y) and x != y for y in range(n)] for x in range(n)]))


def strict_to_total(s: StrictTotalOrder) -> TotalOrder:
    """``x <= y`` iff ``x < y`` or ``x == y``."""
    _require(check_strict_total_order(s))
    n = s.carrier_size
    return TotalOrder(_table([[s(x, y) or x == y for y in range(n)] for x in range(n)]))


def order_to_meet(t: TotalOrder) -> MeetSemilattice:
    _require(check_total_order(t))
    return MeetSemilattice.from_function(t.carrier_size, lambda x, y: x if t(x, y) else y)


def meet_to_order(m: MeetSemilattice) -> TotalOrder:
    """``x <= y`` iff ``meet(x, y) == x``; the meet must be total."""
    _require(check_meet_semilattice(m, total=True))
    n = m.carrier_size
    return TotalOrder.from_relation(n, lambda x, y: m(x, y) == x)


def decide_order(t: TotalOrder, x: int, y: int) -> str:
    """Four-way case analysis for a checked order: ``'eq'``, ``'lt'`` or ``'gt'``.

    Raises ``AssertionError`` if the table reaches a case a total order
    rules out.
    """
    xy, yx = t(x, y), t(y, x)
    if xy and yx:
        if x != y:
            raise AssertionError(f"antisymmetry broken at {(x, y)}")
        return "eq"
    if xy:
        return "lt"
    if yx:
        return "gt"
    raise AssertionError(f"totality broken at {(x, y)}")


def enumerate_total_orders(n: int) -> list[TotalOrder]:
    """All ``n!`` total orders, one per ranking in lexicographic order."""
    if not 0 <= n <= MAX_ENUMERATION:
        raise GuardError(f"carrier size {n} outside 0..{MAX_ENUMERATION}")
    return [TotalOrder.from_ranking(p) for p in itertools.permutations(range(n))]


def order_to_code(t: TotalOrder) -> int:
    n = t.carrier_size
    return sum(1 << (x * n + y) for x in range(n) for y in range(n) if t(x, y))


def code_to_order(code: int, n: int) -> TotalOrder:
    return TotalOrder.from_relation(n, lambda x, y: (code >> (x * n + y)) & 1)


def brute_force_total_orders(n: int) -> list[TotalOrder]:
    """Filter all ``2**(n*n)`` relation tables; the cross-check for enumeration."""
    if not 0 <= n <= 5:
        raise GuardError(f"brute force over 2**{n * n} tables refused")
    return [code_to_order(c, n) for c in kernels.total_order_codes(n)]


def parse_table(text: str, n: int | None = None) -> TotalOrder:
    """Read ``n`` rows of ``n`` space-separated 0/1 digits."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if n is None:
        n = len(rows)
    if len(rows) != n:
        raise ValueError(f"expected {n} rows, got {len(rows)}")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise ValueError(f"row {i} has {len(r)} entries, expected {n}")
        if any(v not in ("0", "1") for v in r):
            raise ValueError(f"row {i} has entries other than 0/1")
    return TotalOrder(_table([[v == "1" for v in r] for r in rows]))


def format_table(t: TotalOrder) -> str:
    return "\n".join(t.rows())
