"""Free commutative monoids as quotients of free monoids.

Two presentations are carried side by side: words related by adjacent
swaps, and arrays related by index bijections ("bags"). Neither is
normalised; a bag is a representative plus the equivalence decider, so
independence from the representative is something the tests establish
rather than something the data structure assumes.
"""
from __future__ import annotations

import itertools
import operator
from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Iterable, Optional, Sequence

import numpy as np

from freesort import kernels
from freesort.freemon import (
    IndexedArray,
    MonoidStructure,
    array_ext,
    enumerate_monoids,
    to_array,
    to_word,
    word_ext,
    words,
)
from freesort.orders import MeetSemilattice, check_meet_semilattice
from freesort.ualg import comm_monoid_equations
from freesort.verdict import Verdict

# -- permutations ----------------------------------------------------------


@dataclass(frozen=True)
class FinPerm:
    """A bijection on ``range(size)``; ``fwd[k]`` is the image of ``k``."""

    fwd: tuple

    def __post_init__(self):
        if sorted(self.fwd) != list(range(len(self.fwd))):
            raise ValueError(f"{self.fwd} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> "FinPerm":
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "FinPerm":
        fwd = list(range(n))
        fwd[i], fwd[j] = j, i
        return cls(tuple(fwd))

    @classmethod
    def all(cls, n: int):
        return (cls(p) for p in itertools.permutations(range(n)))

    @property
    def size(self) -> int:
        return len(self.fwd)

    def __call__(self, k: int) -> int:
        return self.fwd[k]

    def compose(self, other: "FinPerm") -> "FinPerm":
        """``self o other``: apply ``other`` first."""
        if self.size != other.size:
            raise ValueError("sizes differ")
        return FinPerm(tuple(self.fwd[other.fwd[k]] for k in range(self.size)))

    def inverse(self) -> "FinPerm":
        inv = [0] * self.size
        for k, v in enumerate(self.fwd):
            inv[v] = k
        return FinPerm(tuple(inv))


def permute(a: IndexedArray, p: FinPerm) -> IndexedArray:
    """The array ``a.lookup o p``."""
    if len(a) != p.size:
        raise ValueError("array length and permutation size differ")
    return IndexedArray.tabulate(len(a), lambda k: a.lookup(p(k)))


def swap_block(n: int, m: int) -> FinPerm:
    """Move the first block of ``n`` indices past the next ``m``.

    Witnesses ``a ++ b ~ b ++ a`` for ``len(a) == n``, ``len(b) == m``.
    """
    return FinPerm(tuple(k + m if k < n else k - n for k in range(n + m)))


def perm_pad_sum(p: FinPerm, q: FinPerm) -> FinPerm:
    """``p`` on the first block, ``q`` shifted by ``p.size`` on the second."""
    n = p.size
    return FinPerm(p.fwd + tuple(n + v for v in q.fwd))


def perm_fix_zero(phi: FinPerm) -> FinPerm:
    """A permutation fixing 0 with the same extension behaviour as ``phi``.

    With ``k = phi^-1(0)`` the listing of ``phi`` is cut into the blocks
    before and from ``k``, which are then swapped: the result is
    ``phi o swap_block(size - k, k)``.
    """
    if phi.size == 0:
        raise ValueError("perm_fix_zero needs a non-empty permutation")
    k = phi.inverse()(0)
    return phi.compose(swap_block(phi.size - k, k))


def perm_punch(tau: FinPerm) -> FinPerm:
    """``psi(x) = tau(x + 1) - 1`` for ``tau`` fixing 0."""
    if tau.size == 0 or tau(0) != 0:
        raise ValueError("perm_punch needs tau(0) == 0")
    return FinPerm(tuple(tau(x + 1) - 1 for x in range(tau.size - 1)))


# -- equivalences ----------------------------------------------------------


def bag_equiv(a: IndexedArray, b: IndexedArray, eq: Callable = operator.eq) -> Optional[FinPerm]:
    """A ``sigma`` with ``a.lookup(k) == b.lookup(sigma(k))``, or ``None``.

    Greedy: each index of ``a`` takes the first unused matching index of
    ``b``. Greedy matching cannot get stuck when ``eq`` is an equivalence.
    """
    if len(a) != len(b):
        return None
    used = [False] * len(b)
    fwd = []
    for k in range(len(a)):
        x = a.lookup(k)
        for j in range(len(b)):
            if not used[j] and eq(x, b.lookup(j)):
                used[j] = True
                fwd.append(j)
                break
        else:
            return None
    return FinPerm(tuple(fwd))


@lru_cache(maxsize=4096)
def _swap_closure(xs: tuple) -> frozenset:
    seen = {xs}
    todo = deque([xs])
    while todo:
        w = todo.popleft()
        for i in range(len(w) - 1):
            v = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return frozenset(seen)


def perm_adjacent_reachable(xs: Sequence, ys: Sequence, eq: Callable | None = None) -> bool:
    """Is ``ys`` reachable from ``xs`` by adjacent transpositions?

    Breadth-first closure; only sensible for short words.
    """
    xs, ys = tuple(xs), tuple(ys)
    if len(xs) != len(ys):
        return False
    closure = _swap_closure(xs)
    if eq is None:
        return ys in closure
    return any(all(eq(u, v) for u, v in zip(w, ys)) for w in closure)


@dataclass(frozen=True)
class PermRelationReport:
    equivalence: Verdict
    congruence: Verdict
    commutativity: Verdict
    ext_respect: Verdict

    def verdicts(self) -> list[Verdict]:
        return [self.equivalence, self.congruence, self.commutativity, self.ext_respect]

    @property
    def passed(self) -> bool:
        return all(self.verdicts())


class CommMonoidStructure(MonoidStructure):
    """A monoid target whose certification also checks commutativity."""

    _equations = staticmethod(comm_monoid_equations)


def comm_monoid_targets(max_size: int = 3) -> list[CommMonoidStructure]:
    """Every commutative monoid on ``range(k)`` for ``1 <= k <= max_size``."""
    out = []
    for k in range(1, max_size + 1):
        out.extend(enumerate_monoids(k, commutative=True, cls=CommMonoidStructure))
    return out


def check_permutation_relation(
    rel: Callable[[tuple, tuple], bool],
    carrier: int,
    maxlen: int,
    targets: Sequence[MonoidStructure] | None = None,
) -> PermRelationReport:
    """Check the permutation-relation axioms on words up to ``maxlen``.

    Congruence and commutativity only consider products that stay within
    ``maxlen``. Extension respect ranges over every map from the carrier
    into each (finite) target; the default targets are all commutative
    monoids of size at most 3, which is a sound but incomplete stand-in
    for "every commutative monoid".
    """
    if targets is None:
        targets = comm_monoid_targets(3)
    universe = list(words(carrier, maxlen))
    related = {a: [b for b in universe if rel(a, b)] for a in universe}
    rsets = {a: set(bs) for a, bs in related.items()}

    def equivalence():
        for a in universe:
            if a not in rsets[a]:
                return Verdict("equivalence/reflexivity", (a,))
        for a in universe:
            for b in related[a]:
                if a not in rsets[b]:
                    return Verdict("equivalence/symmetry", (a, b))
        for a in universe:
            for b in related[a]:
                for c in related[b]:
                    if c not in rsets[a]:
                        return Verdict("equivalence/transitivity", (a, b, c))
        return Verdict("equivalence")

    def congruence():
        for a in universe:
            for c in universe:
                if len(a) + len(c) > maxlen:
                    continue
                for b in related[a]:
                    for d in related[c]:
                        if len(b) + len(d) <= maxlen and b + d not in rsets[a + c]:
                            return Verdict("congruence", (a, b, c, d))
        return Verdict("congruence")

    def commutativity():
        for a in universe:
            for b in universe:
                if len(a) + len(b) <= maxlen and b + a not in rsets[a + b]:
                    return Verdict("commutativity", (a + b, b + a))
        return Verdict("commutativity")

    def ext_respect():
        tables = []
        for ti, m in enumerate(targets):
            for f in itertools.product(m.carrier, repeat=carrier):
                vals = {w: word_ext(f.__getitem__, m, w) for w in universe}
                tables.append((ti, f, vals))
        for a in universe:
            for b in related[a]:
                for ti, f, vals in tables:
                    if vals[a] != vals[b]:
                        return Verdict("ext-respect", (a, b, ti, f))
        return Verdict("ext-respect")

    return PermRelationReport(equivalence(), congruence(), commutativity(), ext_respect())


# -- bags ------------------------------------------------------------------


class BagRep:
    """An element of the free commutative monoid, held by any representative.

    Equality is :func:`bag_equiv` of representatives.
    """

    __slots__ = ("rep",)

    def __init__(self, rep: IndexedArray | Sequence):
        if not isinstance(rep, IndexedArray):
            rep = to_array(tuple(rep))
        self.rep = rep

    def __eq__(self, other):
        if not isinstance(other, BagRep):
            return NotImplemented
        return bag_equiv(self.rep, other.rep) is not None

    def __hash__(self):
        return hash(frozenset(Counter(self.rep.elems).items()))

    def __len__(self):
        return len(self.rep)

    def __repr__(self):
        return "<" + ", ".join(map(repr, self.rep.elems)) + ">"

    def word(self) -> tuple:
        """The representative's elements, in representative order."""
        return to_word(self.rep)


def q(xs: Sequence) -> BagRep:
    """The quotient map from words to bags."""
    return BagRep(to_array(tuple(xs)))


def bag_ext(f: Callable, m: CommMonoidStructure, b: BagRep) -> Any:
    if not isinstance(m, CommMonoidStructure):
        raise TypeError("bag extension needs a commutative target")
    return array_ext(f, m, b.rep)


def permutation_invariance_sweep(max_len: int, carrier: int, targets=None):
    """Exhaustive ``ext f (i) == ext f (i o phi)`` over arrays and targets.

    Every array up to ``max_len`` over ``range(carrier)``, every
    permutation of its indices, every finite target and every map ``f``
    from the carrier into it. Returns ``None`` or the first failure as
    ``(array, phi, target index, f)``. Runs on the compiled kernel when
    it is available.
    """
    if targets is None:
        targets = comm_monoid_targets(3)
    for n in range(max_len + 1):
        arrays = list(itertools.product(range(carrier), repeat=n))
        arrays = np.array(arrays, dtype=np.int64).reshape(len(arrays), n)
        perms = list(itertools.permutations(range(n)))
        perms = np.array(perms, dtype=np.int64).reshape(len(perms), n)
        for ti, m in enumerate(targets):
            k = len(m.carrier)
            table = np.array(m.table(), dtype=np.int64)
            unit = m.carrier.index(m.unit)
            for f in itertools.product(range(k), repeat=carrier):
                mapped = np.asarray(f, dtype=np.int64)[arrays] if n else arrays
                hit = kernels.invariance_sweep(mapped, perms, table, k, unit)
                if hit is not None:
                    row, j = hit
                    return (tuple(arrays[row].tolist()), FinPerm(tuple(perms[j].tolist())),
                            ti, tuple(m.carrier[v] for v in f))
    return None


# -- derived operations ----------------------------------------------------

NAT_SUM = CommMonoidStructure(0, operator.add)
ANY_MONOID = CommMonoidStructure(False, lambda a, b: a or b, (False, True))
ALL_MONOID = CommMonoidStructure(True, lambda a, b: a and b, (False, True))
#: leftmost defined element; ``None`` plays the role of "nothing"
LEFTMOST = MonoidStructure(None, lambda a, b: b if a is None else a)


def _ext(f, m, x):
    if isinstance(x, BagRep):
        return bag_ext(f, m, x)
    return word_ext(f, m, x)


def length(x) -> int:
    return _ext(lambda _: 1, NAT_SUM, x)


def member(a, x, eq: Callable = operator.eq) -> bool:
    return _ext(lambda y: eq(a, y), ANY_MONOID, x)


def any_pred(p: Callable[[Any], bool], x) -> bool:
    return _ext(lambda y: bool(p(y)), ANY_MONOID, x)


def all_pred(p: Callable[[Any], bool], x) -> bool:
    return _ext(lambda y: bool(p(y)), ALL_MONOID, x)


def head_left(xs: Sequence):
    """First element of a word, or ``None``; not defined on bags."""
    if isinstance(xs, BagRep):
        raise TypeError("the leftmost-element monoid is not commutative")
    return word_ext(lambda y: y, LEFTMOST, xs)


def optional_meet_monoid(meet: MeetSemilattice) -> CommMonoidStructure:
    def op(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return meet(a, b)

    return CommMonoidStructure(None, op, (None,) + tuple(range(meet.carrier_size)))


def least(b: BagRep, meet: MeetSemilattice, certify: bool = True):
    """Meet of all elements of ``b``; ``None`` for the empty bag."""
    if certify:
        v = check_meet_semilattice(meet, total=True)
        if not v:
            raise ValueError(f"meet is not a total semilattice: {v.name} at {v.witness}")
    return bag_ext(lambda y: y, optional_meet_monoid(meet), b)
