"""Free monoids two ways: words (tuples) and length-indexed lookup arrays."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence

from freesort import ualg

#: A word is a plain tuple of carrier elements.
Word = tuple


def word_concat(xs: Sequence, ys: Sequence) -> Word:
    return tuple(xs) + tuple(ys)


def singleton(x) -> Word:
    return (x,)


@dataclass(frozen=True)
class MonoidStructure:
    """A monoid ``(unit, op)`` used as the target of an extension.

    ``carrier`` lists the elements when the monoid is finite, which is
    what :meth:`certify` needs.
    """

    unit: Any
    op: Callable[[Any, Any], Any]
    carrier: Optional[tuple] = None

    _equations = staticmethod(ualg.monoid_equations)

    def as_algebra(self) -> ualg.FiniteAlgebra:
        if self.carrier is None:
            raise ValueError("only finite monoids can be tabulated")
        idx = {x: i for i, x in enumerate(self.carrier)}
        return ualg.monoid_algebra(
            len(self.carrier),
            idx[self.unit],
            lambda i, j: idx[self.op(self.carrier[i], self.carrier[j])],
        )

    def certify(self) -> "MonoidStructure":
        """Check the laws exhaustively; raise ``ValueError`` with the witness."""
        verdict = ualg.satisfies(self.as_algebra(), self._equations())
        if not verdict:
            eq, rho = verdict.witness
            raise ValueError(
                f"law {self._equations().names[eq]} fails at "
                f"{tuple(self.carrier[i] for i in rho)}"
            )
        return self

    def table(self) -> list[int]:
        """Flat multiplication table over carrier indices (``x * k + y``)."""
        idx = {x: i for i, x in enumerate(self.carrier)}
        return [idx[self.op(x, y)] for x in self.carrier for y in self.carrier]


def table_monoid(table: Sequence[Sequence[int]], unit: int, cls=MonoidStructure):
    k = len(table)
    rows = tuple(tuple(r) for r in table)
    return cls(unit, lambda x, y: rows[x][y], tuple(range(k)))


def _unital_tables(k: int, commutative: bool) -> Iterator[tuple[int, tuple]]:
    # Cells involving the unit are forced; only the rest are free.
    for unit in range(k):
        others = [x for x in range(k) if x != unit]
        if commutative:
            cells = [(x, y) for x in others for y in others if x <= y]
        else:
            cells = [(x, y) for x in others for y in others]
        for values in itertools.product(range(k), repeat=len(cells)):
            t = [[None] * k for _ in range(k)]
            for x in range(k):
                t[unit][x] = t[x][unit] = x
            for (x, y), v in zip(cells, values):
                t[x][y] = v
                if commutative:
                    t[y][x] = v
            yield unit, tuple(tuple(r) for r in t)


def enumerate_monoids(k: int, commutative: bool = False, cls=MonoidStructure) -> list:
    """Every monoid structure on ``range(k)`` (labelled, not up to iso).

    Candidates come from tables with a two-sided unit; each survivor is
    certified with :func:`ualg.satisfies`.
    """
    eqs = ualg.comm_monoid_equations() if commutative else ualg.monoid_equations()
    out = []
    for unit, t in _unital_tables(k, commutative):
        alg = ualg.monoid_algebra(k, unit, lambda x, y, t=t: t[x][y])
        if ualg.satisfies(alg, eqs):
            out.append(table_monoid(t, unit, cls))
    return out


def word_ext(f: Callable, m: MonoidStructure, xs: Sequence) -> Any:
    """``ext f [] = unit``; ``ext f (x :: xs) = f(x) * ext f xs``."""
    acc = m.unit
    for x in reversed(xs):
        acc = m.op(f(x), acc)
    return acc


@dataclass(frozen=True)
class IndexedArray:
    """An array as a length plus a lookup on ``0..length-1``.

    Stored contiguously; equality is length plus pointwise lookup, so all
    empty arrays are equal.
    """

    elems: tuple = ()

    @classmethod
    def tabulate(cls, n: int, lookup: Callable[[int], Any]) -> "IndexedArray":
        return cls(tuple(lookup(k) for k in range(n)))

    def __len__(self):
        return len(self.elems)

    def lookup(self, k: int):
        if not 0 <= k < len(self.elems):
            raise IndexError(f"index {k} outside 0..{len(self.elems) - 1}")
        return self.elems[k]

    def __repr__(self):
        body = ", ".join(f"{k}->{v!r}" for k, v in enumerate(self.elems))
        return f"IndexedArray({len(self)}, {{{body}}})"


def eta_array(x) -> IndexedArray:
    return IndexedArray((x,))


EMPTY = IndexedArray()


def array_concat(a: IndexedArray, b: IndexedArray) -> IndexedArray:
    n = len(a)
    return IndexedArray.tabulate(
        n + len(b), lambda k: a.lookup(k) if k < n else b.lookup(k - n)
    )


def array_uncons(a: IndexedArray) -> tuple[Any, IndexedArray]:
    """Split off index 0; the tail's lookup is ``a.lookup`` after successor."""
    if len(a) == 0:
        raise ValueError("cannot uncons an empty array")
    return a.lookup(0), IndexedArray.tabulate(len(a) - 1, lambda k: a.lookup(k + 1))


def array_ext(f: Callable, m: MonoidStructure, a: IndexedArray) -> Any:
    """Recursion on length through :func:`array_uncons`."""
    if len(a) == 0:
        return m.unit
    head, tail = array_uncons(a)
    return m.op(f(head), array_ext(f, m, tail))


def to_word(a: IndexedArray) -> Word:
    return tuple(a.lookup(k) for k in range(len(a)))


def to_array(xs: Sequence) -> IndexedArray:
    return IndexedArray.tabulate(len(xs), lambda k: xs[k])


def words(carrier: int | Iterable, max_len: int) -> Iterator[Word]:
    """All words up to ``max_len``, shortest first, then lexicographic."""
    alphabet = list(range(carrier)) if isinstance(carrier, int) else list(carrier)
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


class BoundedFreeMonoid:
    """The free monoid cut down to elements of length ``<= max_len``.

    Works as a partial algebra over :data:`ualg.MONOID_SIGNATURE`:
    products that would leave the bound are undefined (``None``). With
    ``array=True`` the elements are :class:`IndexedArray` values.
    """

    signature = ualg.MONOID_SIGNATURE

    def __init__(self, carrier: int, max_len: int, array: bool = False):
        self.carrier = carrier
        self.max_len = max_len
        self.array = array
        wrap = to_array if array else tuple
        self._elems = [wrap(w) for w in words(carrier, max_len)]
        self.unit = EMPTY if array else ()
        self.concat = array_concat if array else word_concat

    def elements(self):
        return self._elems

    def apply(self, op: int, args: tuple):
        if op == ualg.E:
            return self.unit
        x, y = args
        if len(x) + len(y) > self.max_len:
            return None
        return self.concat(x, y)
