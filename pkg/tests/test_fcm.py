import functools
import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from freesort import fcm
from freesort.fcm import (
    BagRep,
    CommMonoidStructure,
    FinPerm,
    all_pred,
    any_pred,
    bag_equiv,
    bag_ext,
    check_permutation_relation,
    head_left,
    least,
    length,
    member,
    perm_adjacent_reachable,
    perm_fix_zero,
    perm_pad_sum,
    perm_punch,
    permute,
    q,
    swap_block,
)
from freesort.freemon import IndexedArray, MonoidStructure, array_concat, array_ext, to_array, word_concat, words
from freesort.orders import MeetSemilattice, enumerate_total_orders, order_to_meet

MOD5 = CommMonoidStructure(0, lambda x, y: (x + y) % 5, tuple(range(5)))


def arr(*xs):
    return IndexedArray(tuple(xs))


def arrays(carrier, max_len):
    return [to_array(w) for w in words(carrier, max_len)]


def pointwise_witness(a, b, sigma):
    return sigma.size == len(a) == len(b) and all(a.lookup(k) == b.lookup(sigma(k)) for k in range(len(a)))


perms = st.integers(0, 6).flatmap(lambda n: st.permutations(list(range(n)))).map(lambda p: FinPerm(tuple(p)))


# -- FinPerm ---------------------------------------------------------------

def test_finperm_rejects_non_bijection():
    with pytest.raises(ValueError):
        FinPerm((0, 0))
    with pytest.raises(ValueError):
        FinPerm((1, 2))


@given(perms)
def test_inverse_and_compose(p):
    ident = FinPerm.identity(p.size)
    assert p.compose(p.inverse()) == ident == p.inverse().compose(p)
    assert p.compose(ident) == p


# -- bag_equiv -------------------------------------------------------------

def test_bag_equiv_reflexive_gives_identity():
    a = arr(1, 1, 2, 0)
    assert bag_equiv(a, a) == FinPerm.identity(4)


def test_bag_equiv_swap():
    assert bag_equiv(arr(1, 3), arr(3, 1)) == FinPerm((1, 0))


def test_bag_equiv_witnesses_exhaustive():
    universe = arrays(3, 4)
    for a in universe:
        for b in universe:
            sigma = bag_equiv(a, b)
            same = Counter(a.elems) == Counter(b.elems)
            assert (sigma is not None) == same
            if sigma is not None:
                assert pointwise_witness(a, b, sigma)


def test_bag_equiv_custom_equality():
    mod2 = lambda x, y: x % 2 == y % 2
    sigma = bag_equiv(arr(0, 1), arr(3, 2), mod2)
    assert sigma == FinPerm((1, 0))
    assert bag_equiv(arr(0, 0), arr(3, 2), mod2) is None


def test_bag_equiv_is_an_equivalence_at_witness_level():
    classes = {}
    for a in arrays(3, 4):
        classes.setdefault(tuple(sorted(a.elems)), []).append(a)
    for cls in classes.values():
        for a in cls:
            assert bag_equiv(a, a) == FinPerm.identity(len(a))
        for a, b in itertools.product(cls, repeat=2):
            sigma = bag_equiv(a, b)
            assert pointwise_witness(b, a, sigma.inverse())
        if len(cls[0]) <= 3:
            for a, b, c in itertools.product(cls, repeat=3):
                sigma, phi = bag_equiv(a, b), bag_equiv(b, c)
                assert pointwise_witness(a, c, phi.compose(sigma))


# -- adjacent swaps --------------------------------------------------------

def test_adjacent_examples():
    assert perm_adjacent_reachable("abc", "abc")
    assert perm_adjacent_reachable("abc", "bac")
    assert perm_adjacent_reachable("abc", "cba")
    assert not perm_adjacent_reachable("abc", "abb")
    assert not perm_adjacent_reachable("ab", "abc")


def test_adjacent_custom_eq():
    assert perm_adjacent_reachable((0, 1), (3, 0), lambda x, y: x % 2 == y % 2)


def test_adjacent_agrees_with_bag_equiv():
    ws = list(words(3, 4))
    for xs in ws:
        for ys in ws:
            assert perm_adjacent_reachable(xs, ys) == (bag_equiv(to_array(xs), to_array(ys)) is not None)


# -- permutation relation axioms -------------------------------------------

def test_adjacent_swaps_form_a_permutation_relation(comm_targets):
    report = check_permutation_relation(perm_adjacent_reachable, 3, 4, comm_targets)
    assert report.passed, report


def test_equality_is_not_commutative():
    report = check_permutation_relation(lambda a, b: a == b, 3, 3)
    assert report.equivalence and report.congruence and report.ext_respect
    assert report.commutativity.witness == ((0, 1), (1, 0))


def test_total_relation_breaks_ext_respect():
    report = check_permutation_relation(lambda a, b: True, 3, 3)
    assert report.equivalence and report.congruence and report.commutativity
    a, b, ti, f = report.ext_respect.witness
    assert (a, b) == ((), (0,))


def test_bag_relation_on_words_also_passes():
    rel = lambda a, b: bag_equiv(to_array(a), to_array(b)) is not None
    assert check_permutation_relation(rel, 2, 4).passed


def test_length_respecting_but_not_permutation():
    # same length only: an equivalence and congruence, commutative, but
    # counting through ext tells [0] from [1]
    report = check_permutation_relation(lambda a, b: len(a) == len(b), 2, 3)
    assert report.commutativity
    assert report.ext_respect.witness[:2] == ((0,), (1,))


# -- combinators -----------------------------------------------------------

def test_swap_block_examples():
    assert swap_block(0, 3) == FinPerm.identity(3)
    assert swap_block(1, 2) == FinPerm((2, 0, 1))
    assert bag_equiv(array_concat(arr("a"), arr("b", "c")), array_concat(arr("b", "c"), arr("a"))) == swap_block(1, 2)


def test_swap_block_witnesses_commutativity():
    for n, m in itertools.product(range(4), repeat=2):
        sigma = swap_block(n, m)
        for a in map(to_array, itertools.product(range(2), repeat=n)):
            for b in map(to_array, itertools.product(range(2), repeat=m)):
                assert pointwise_witness(array_concat(a, b), array_concat(b, a), sigma)
        assert swap_block(n, m).compose(swap_block(m, n)) == FinPerm.identity(n + m)


def test_pad_sum_examples():
    assert perm_pad_sum(FinPerm.identity(2), FinPerm.identity(3)) == FinPerm.identity(5)
    assert perm_pad_sum(FinPerm((1, 0)), FinPerm.identity(1)) == FinPerm((1, 0, 2))


def test_pad_sum_witnesses_congruence():
    universe = arrays(2, 3)
    pairs = [(a, b, bag_equiv(a, b)) for a in universe for b in universe if bag_equiv(a, b)]
    for a, b, sigma in pairs:
        for c, d, phi in pairs:
            assert pointwise_witness(array_concat(a, c), array_concat(b, d), perm_pad_sum(sigma, phi))


def test_fix_zero_examples():
    phi = FinPerm((0, 2, 1))
    assert perm_fix_zero(phi) == phi
    cycle = FinPerm((1, 2, 0))
    assert cycle.inverse()(0) == 2
    tau = perm_fix_zero(cycle)
    assert tau(0) == 0
    # rotating the listing (1, 2, 0) so the 0 comes first gives (0, 1, 2)
    assert tau == FinPerm.identity(3)
    assert tau == cycle.compose(swap_block(1, 2))


def test_fix_zero_rejects_empty():
    with pytest.raises(ValueError):
        perm_fix_zero(FinPerm(()))


def test_fix_zero_preserves_commutative_extension(comm_targets):
    # every f o rep is just some word over the target carrier, so ranging
    # over target words covers every (f, rep) pair
    for n in range(1, 5):
        for phi in FinPerm.all(n):
            tau = perm_fix_zero(phi)
            assert tau(0) == 0
            for m in comm_targets:
                for w in itertools.product(m.carrier, repeat=n):
                    a = to_array(w)
                    assert array_ext(lambda x: x, m, permute(a, phi)) == array_ext(lambda x: x, m, permute(a, tau))


def test_fix_zero_needs_commutativity():
    # with a non-commutative target the rotation changes the value
    concat = MonoidStructure("", lambda x, y: x + y)
    a = arr("a", "b", "c")
    phi = FinPerm((1, 2, 0))
    tau = perm_fix_zero(phi)
    assert array_ext(str, concat, permute(a, phi)) != array_ext(str, concat, permute(a, tau))


def test_punch_examples():
    assert perm_punch(FinPerm.identity(4)) == FinPerm.identity(3)
    assert perm_punch(FinPerm((0, 2, 1))) == FinPerm((1, 0))
    with pytest.raises(ValueError):
        perm_punch(FinPerm((1, 0)))


def test_punch_square():
    for n in range(1, 6):
        for tau in FinPerm.all(n):
            if tau(0) != 0:
                continue
            psi = perm_punch(tau)
            assert all(tau(x + 1) == psi(x) + 1 for x in range(n - 1))


# -- bags and derived operations --------------------------------------------

def test_bag_equality_is_bag_equiv():
    assert BagRep((3, 1, 2)) == BagRep((1, 2, 3))
    assert BagRep((1, 1)) != BagRep((1,))
    assert len({BagRep((1, 2)), BagRep((2, 1))}) == 1


def test_bag_ext_examples():
    for w in itertools.permutations((3, 1, 2)):
        assert length(q(w)) == 3
    assert bag_ext(lambda x: x, MOD5, q((1, 3))) == bag_ext(lambda x: x, MOD5, q((3, 1))) == 4


def test_bag_ext_rejects_plain_monoid():
    with pytest.raises(TypeError):
        bag_ext(lambda x: x, MonoidStructure(0, max), q((1,)))


def test_bag_ext_literal_route_is_invariant(comm_targets):
    for a in arrays(3, 3):
        for phi in FinPerm.all(len(a)):
            b = BagRep(permute(a, phi))
            assert b == BagRep(a)
            for m in comm_targets[::3]:
                for f in itertools.product(m.carrier, repeat=3):
                    assert bag_ext(f.__getitem__, m, b) == bag_ext(f.__getitem__, m, BagRep(a))


def test_permutation_invariance_sweep_passes_and_catches(comm_targets, all_monoids):
    assert fcm.permutation_invariance_sweep(4, 3, comm_targets) is None
    noncomm = [m for m in all_monoids if any(m.op(x, y) != m.op(y, x) for x in m.carrier for y in m.carrier)]
    hit = fcm.permutation_invariance_sweep(3, 3, noncomm)
    assert hit is not None
    w, phi, ti, f = hit
    m = noncomm[ti]
    a = to_array(w)
    assert array_ext(f.__getitem__, m, a) != array_ext(f.__getitem__, m, permute(a, phi))


def test_length_examples_and_homomorphism():
    assert length(()) == 0
    assert length(q("aab")) == 3
    ws = list(words(3, 4))
    for xs in ws:
        for ys in ws:
            if len(xs) + len(ys) <= 4:
                assert length(word_concat(xs, ys)) == length(xs) + length(ys)


def test_member_examples_and_homomorphism():
    assert not member("a", ())
    assert member(1, q((3, 1, 2)))
    ws = list(words(3, 2))
    for a in range(3):
        for xs in ws:
            for ys in ws:
                assert member(a, word_concat(xs, ys)) == (member(a, xs) or member(a, ys))


def test_any_all():
    odd = lambda x: x % 2 == 1
    assert all_pred(odd, ())
    assert not any_pred(odd, ())
    for xs in words(3, 4):
        assert any_pred(odd, xs) == (not all_pred(lambda x: not odd(x), xs))
        assert any_pred(odd, q(xs)) == any_pred(odd, xs)


def test_head_left():
    assert head_left(()) is None
    assert head_left((3, 1, 2)) == 3
    leftmost = lambda a, b: b if a is None else a
    ws = list(words(3, 2))
    for xs in ws:
        for ys in ws:
            assert head_left(word_concat(xs, ys)) == leftmost(head_left(xs), head_left(ys))
    with pytest.raises(TypeError):
        head_left(q((1, 2)))


def test_least_examples():
    mins = MeetSemilattice.from_function(4, min)
    assert least(q(()), mins) is None
    assert least(q((2, 3, 1)), mins) == 1


def test_least_is_fold_of_meet_over_any_order():
    for t in enumerate_total_orders(3):
        meet = order_to_meet(t)
        for w in words(3, 4):
            if not w:
                continue
            expected = functools.reduce(meet, w)
            for p in set(itertools.permutations(w)):
                assert least(q(p), meet) == expected
                assert functools.reduce(meet, p) == expected


def test_least_rejects_non_total_meet():
    # {0, 1, 2} with 1 and 2 incomparable, meeting at 0
    meet = MeetSemilattice(((0, 0, 0), (0, 1, 0), (0, 0, 2)))
    with pytest.raises(ValueError, match="totality"):
        least(q((1, 2)), meet)
