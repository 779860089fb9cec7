"""Sections of the quotient map from words to bags, and sorting axioms.

A section is modelled as a function on words that is supposed to depend
only on the bag of its input; :func:`check_well_defined` tests that.
Every checker is exhaustive over the section's bounded domain (words over
``range(carrier_size)`` up to ``max_len``) and reports the first
counterexample in shortlex order.

Image membership is decided by the fixed-point test ``s(xs) == xs``: if
``s(ys) == xs`` then ``ys`` and ``xs`` have the same bag (section law) so
``s(xs) == s(ys) == xs``. :func:`in_image_brute_force` keeps the fiber
search around as a cross-check.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from freesort.fcm import bag_equiv, member
from freesort.freemon import to_array, words
from freesort.orders import (
    MeetSemilattice,
    StrictTotalOrder,
    TotalOrder,
    check_total_order,
    meet_to_order,
    order_to_meet,
    strict_to_total,
    total_order_verdicts,
    total_to_strict,
)
from freesort.verdict import Verdict

DEFAULT_MAX_LEN = 5


class NotASection(ValueError):
    def __init__(self, verdict: Verdict):
        super().__init__(f"{verdict.name} fails at {verdict.witness}")
        self.verdict = verdict


class SectionRefused(ValueError):
    """A section failed an axiom that an operation requires."""

    def __init__(self, verdict: Verdict):
        super().__init__(f"{verdict.name} fails at {verdict.witness}")
        self.verdict = verdict


@dataclass(frozen=True)
class SectionCandidate:
    apply: Callable[[tuple], tuple]
    name: str
    carrier_size: int
    max_len: int = DEFAULT_MAX_LEN

    def __call__(self, xs: Sequence) -> tuple:
        return tuple(self.apply(tuple(xs)))

    def domain(self):
        return words(self.carrier_size, self.max_len)


def _multiset_key(xs: tuple) -> tuple:
    # enumeration bookkeeping only; never used as a section
    return tuple(sorted(xs))


def check_well_defined(s: SectionCandidate) -> Verdict:
    """Same output on every rearrangement of each word.

    Each word is compared against the least rearrangement of itself,
    which by transitivity covers all pairs. Witness ``(xs, ys)``.
    """
    first = {}
    for w in s.domain():
        key = _multiset_key(w)
        if key not in first:
            first[key] = (w, s(w))
        elif s(w) != first[key][1]:
            return Verdict("well-defined", (first[key][0], w))
    return Verdict("well-defined")


def check_is_section(s: SectionCandidate) -> Verdict:
    """``s(xs)`` is a rearrangement of ``xs``. Witness ``(xs,)``."""
    for w in s.domain():
        if bag_equiv(to_array(w), to_array(s(w))) is None:
            return Verdict("section", (w,))
    return Verdict("section")


def _require_section(s: SectionCandidate):
    for v in (check_well_defined(s), check_is_section(s)):
        if not v:
            raise NotASection(v)


def insertion_sort(t: TotalOrder, max_len: int = DEFAULT_MAX_LEN) -> SectionCandidate:
    v = check_total_order(t)
    if not v:
        raise ValueError(f"not a total order: {v.name} at {v.witness}")

    def insert(x, ys):
        for i, y in enumerate(ys):
            if t(x, y):
                return ys[:i] + [x] + ys[i:]
        return ys + [x]

    def sort(xs):
        out = []
        for x in xs:
            out = insert(x, out)
        return tuple(out)

    return SectionCandidate(sort, "insertion_sort", t.carrier_size, max_len)


def derived_leq(s: SectionCandidate, check: bool = True) -> TotalOrder:
    """``x <=s y`` iff the head of ``s([x, y])`` is ``x``.

    The result has the shape of a total order but is only guaranteed
    reflexive, antisymmetric and total.
    """
    if check:
        _require_section(s)
    n = s.carrier_size
    rows = []
    for x in range(n):
        row = []
        for y in range(n):
            out = s((x, y))
            if len(out) != 2 or sorted(out) != sorted((x, y)):
                raise NotASection(Verdict("section", ((x, y),)))
            row.append(out[0] == x)
        rows.append(tuple(row))
    return TotalOrder(tuple(rows))


def in_image(s: SectionCandidate, xs: Sequence) -> bool:
    xs = tuple(xs)
    return s(xs) == xs


def in_image_brute_force(s: SectionCandidate, xs: Sequence) -> bool:
    """Search every word of the same length for one that ``s`` maps to ``xs``."""
    xs = tuple(xs)
    return any(s(ys) == xs for ys in itertools.product(range(s.carrier_size), repeat=len(xs)))


def check_head_least(s: SectionCandidate) -> Verdict:
    """For image words ``x :: xs`` and ``y`` in them, ``[x, y]`` is an image word.

    Witness ``(x, y, xs)``.
    """
    for w in s.domain():
        if not w or not in_image(s, w):
            continue
        x = w[0]
        for y in range(s.carrier_size):
            if member(y, w) and not in_image(s, (x, y)):
                return Verdict("head-least", (x, y, w[1:]))
    return Verdict("head-least")


def check_tail_sort(s: SectionCandidate) -> Verdict:
    """Tails of image words are image words. Witness ``(x, xs)``."""
    for w in s.domain():
        if w and in_image(s, w) and not in_image(s, w[1:]):
            return Verdict("tail-sort", (w[0], w[1:]))
    return Verdict("tail-sort")


def is_sorted(t: TotalOrder, xs: Sequence) -> bool:
    xs = tuple(xs)
    while len(xs) >= 2:
        if not t(xs[0], xs[1]):
            return False
        xs = xs[1:]
    return True


def counterexample_swap_pair(base: TotalOrder, a: int, b: int,
                             max_len: int = DEFAULT_MAX_LEN) -> SectionCandidate:
    """Insertion sort, except the bag ``{a, b}`` comes out as ``[b, a]``.

    Needs ``a < b`` with some element strictly between them.
    """
    if not (base(a, b) and a != b):
        raise ValueError(f"need {a} < {b} in the base order")
    n = base.carrier_size
    if not any(c not in (a, b) and base(a, c) and base(c, b) for c in range(n)):
        raise ValueError(f"nothing sits strictly between {a} and {b}")
    sort = insertion_sort(base, max_len)
    pair = (a, b)

    def apply(xs):
        if len(xs) == 2 and bag_equiv(to_array(xs), to_array(pair)) is not None:
            return (b, a)
        return sort(xs)

    return SectionCandidate(apply, f"swap_pair:{a},{b}", n, max_len)


def counterexample_reverse_tail(base: TotalOrder, max_len: int = DEFAULT_MAX_LEN) -> SectionCandidate:
    """Sort, then reverse everything after the head."""
    sort = insertion_sort(base, max_len)

    def apply(xs):
        out = sort(xs)
        return out[:1] + out[1:][::-1]

    return SectionCandidate(apply, "reverse_tail", base.carrier_size, max_len)


def resolve_section(name: str, base: TotalOrder, max_len: int = DEFAULT_MAX_LEN) -> SectionCandidate:
    """Look up ``insertion_sort``, ``swap_pair:<a>,<b>`` or ``reverse_tail``."""
    if name == "insertion_sort":
        return insertion_sort(base, max_len)
    if name == "reverse_tail":
        return counterexample_reverse_tail(base, max_len)
    if name.startswith("swap_pair:"):
        try:
            a, b = (int(v) for v in name[len("swap_pair:"):].split(","))
        except ValueError:
            raise KeyError(name) from None
        return counterexample_swap_pair(base, a, b, max_len)
    raise KeyError(name)


def roundtrip_order(t: TotalOrder, max_len: int = DEFAULT_MAX_LEN) -> bool:
    return derived_leq(insertion_sort(t, max_len)) == t


def _require_axioms(s: SectionCandidate):
    _require_section(s)
    for v in (check_head_least(s), check_tail_sort(s)):
        if not v:
            raise SectionRefused(v)


def sections_agree(s: SectionCandidate, r: SectionCandidate) -> Verdict:
    """Extensional equality on ``s``'s domain. Witness ``(xs,)``."""
    for w in s.domain():
        if s(w) != r(w):
            return Verdict("agree", (w,))
    return Verdict("agree")


def roundtrip_section(s: SectionCandidate) -> Verdict:
    """Insertion sort by the derived order agrees with ``s`` on its domain.

    Raises :class:`SectionRefused` unless ``s`` satisfies both axioms.
    """
    _require_axioms(s)
    return sections_agree(s, insertion_sort(derived_leq(s, check=False), s.max_len))


def sort_correctness_triangle(s: SectionCandidate) -> Verdict:
    """``s`` output is sorted under the derived order and a rearrangement of the input.

    The axioms are not enforced up front so that misbehaving sections get
    a witness. Witness ``(xs,)``.
    """
    t = derived_leq(s)
    for w in s.domain():
        out = s(w)
        if not is_sorted(t, out) or bag_equiv(to_array(w), to_array(out)) is None:
            return Verdict("sort-correctness", (w,))
    return Verdict("sort-correctness")


# strict orders and meets go through total orders


def strict_to_section(lt: StrictTotalOrder, max_len: int = DEFAULT_MAX_LEN) -> SectionCandidate:
    return insertion_sort(strict_to_total(lt), max_len)


def section_to_strict(s: SectionCandidate) -> StrictTotalOrder:
    return total_to_strict(derived_leq(s))


def meet_to_section(m: MeetSemilattice, max_len: int = DEFAULT_MAX_LEN) -> SectionCandidate:
    return insertion_sort(meet_to_order(m), max_len)


def section_to_meet(s: SectionCandidate) -> MeetSemilattice:
    return order_to_meet(derived_leq(s))


@dataclass
class SortReport:
    well_defined: Verdict
    is_section: Verdict
    head_least: Verdict
    tail_sort: Verdict
    derived_order: Optional[TotalOrder] = None
    order_axiom_results: list = field(default_factory=list)
    matches_base: Optional[bool] = None
    roundtrip: Optional[Verdict] = None

    @property
    def passed(self) -> bool:
        checks = [self.well_defined, self.is_section, self.head_least, self.tail_sort]
        checks += self.order_axiom_results
        if self.roundtrip is not None:
            checks.append(self.roundtrip)
        return all(checks) and self.matches_base is not False


def certify(s: SectionCandidate, base: TotalOrder | None = None) -> SortReport:
    report = SortReport(
        check_well_defined(s), check_is_section(s), check_head_least(s), check_tail_sort(s)
    )
    if not (report.well_defined and report.is_section):
        return report
    report.derived_order = derived_leq(s, check=False)
    report.order_axiom_results = total_order_verdicts(report.derived_order)
    if base is not None:
        report.matches_base = report.derived_order == base
    if report.head_least and report.tail_sort:
        report.roundtrip = sections_agree(s, insertion_sort(report.derived_order, s.max_len))
    else:
        report.roundtrip = next(v for v in (report.head_least, report.tail_sort) if not v)
    return report
