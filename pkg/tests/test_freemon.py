import itertools
import operator

import pytest
from hypothesis import given, strategies as st

from freesort import ualg
from freesort.freemon import (
    EMPTY,
    BoundedFreeMonoid,
    IndexedArray,
    MonoidStructure,
    array_concat,
    array_ext,
    array_uncons,
    enumerate_monoids,
    eta_array,
    table_monoid,
    to_array,
    to_word,
    word_concat,
    word_ext,
    words,
)

from conftest import array_splits, tabulated_homomorphisms, word_splits

NAT = MonoidStructure(0, operator.add)
MOD7 = MonoidStructure(0, lambda x, y: (x + y) % 7, tuple(range(7)))

small_words = st.lists(st.integers(0, 2), max_size=6).map(tuple)


def arr(*xs):
    return IndexedArray(tuple(xs))


def test_word_concat_examples():
    assert word_concat((), ("a", "b")) == ("a", "b")
    assert word_concat((3, 1), (2,)) == (3, 1, 2)
    assert word_concat(word_concat(("a",), ("b",)), ("c",)) == word_concat(("a",), word_concat(("b",), ("c",)))


def test_word_ext_examples():
    assert word_ext(lambda _: 1, NAT, (3, 1, 2)) == 3
    assert word_ext(lambda _: 1, NAT, ()) == 0
    assert word_ext(lambda x: x, MOD7, (3, 1, 2)) == 6


def test_word_ext_is_a_right_fold():
    # a non-associative op exposes the bracketing: 1 - (2 - (3 - 0))
    m = MonoidStructure(0, operator.sub)
    assert word_ext(lambda x: x, m, (1, 2, 3)) == 2


def test_array_concat_examples():
    assert array_concat(EMPTY, arr(5, 7)) == arr(5, 7)
    assert array_concat(arr(3), arr(1, 2)) == arr(3, 1, 2)


def test_array_concat_associative_pointwise():
    a, b, c = arr("a"), arr("b", "c"), arr("d")
    left = array_concat(array_concat(a, b), c)
    right = array_concat(a, array_concat(b, c))
    assert len(left) == len(right) == 4
    assert all(left.lookup(k) == right.lookup(k) for k in range(4))


def test_lookup_bounds():
    with pytest.raises(IndexError):
        arr(1, 2).lookup(2)
    with pytest.raises(IndexError):
        array_concat(arr(1), arr(2)).lookup(-1)


def test_uncons_examples():
    assert array_uncons(arr(3, 1, 2)) == (3, arr(1, 2))
    assert array_uncons(arr(9)) == (9, EMPTY)
    with pytest.raises(ValueError):
        array_uncons(EMPTY)


def test_split_law():
    for a in map(to_array, itertools.product(range(3), repeat=2)):
        for b in map(to_array, itertools.product(range(3), repeat=2)):
            head, tail = array_uncons(array_concat(a, b))
            h2, t2 = array_uncons(a)
            assert head == h2
            assert tail == array_concat(t2, b)


def test_all_empty_arrays_are_equal():
    assert IndexedArray.tabulate(0, lambda k: 1 / 0) == EMPTY


def test_array_ext_examples():
    assert array_ext(lambda _: 1, NAT, EMPTY) == 0
    assert array_ext(lambda _: 1, NAT, arr(0, 0, 0)) == 3


def test_array_ext_agrees_with_word_ext():
    m = MonoidStructure("", operator.add)
    for w in words(2, 4):
        assert array_ext(str, m, to_array(w)) == word_ext(str, m, to_word(to_array(w)))


def test_to_word_to_array():
    assert to_word(arr(3, 1, 2)) == (3, 1, 2)
    assert to_array(()) == EMPTY
    for w in words(3, 5):
        assert to_word(to_array(w)) == w
        assert to_array(to_word(to_array(w))) == to_array(w)


def test_conversions_are_homomorphisms():
    for xs in words(3, 3):
        for ys in words(3, 3):
            assert to_array(word_concat(xs, ys)) == array_concat(to_array(xs), to_array(ys))
            assert to_word(array_concat(to_array(xs), to_array(ys))) == word_concat(xs, ys)


def test_monoid_laws_words_and_arrays():
    ws = list(words(3, 4))
    for x in ws:
        assert word_concat((), x) == x == word_concat(x, ())
        a = to_array(x)
        assert array_concat(EMPTY, a) == a == array_concat(a, EMPTY)
    short = list(words(3, 2))
    for x, y, z in itertools.product(short, repeat=3):
        assert word_concat(word_concat(x, y), z) == word_concat(x, word_concat(y, z))
        a, b, c = map(to_array, (x, y, z))
        assert array_concat(array_concat(a, b), c) == array_concat(a, array_concat(b, c))


def test_ext_is_homomorphic(all_monoids):
    ws = list(words(2, 2))
    for m in all_monoids:
        for f in itertools.product(m.carrier, repeat=2):
            for xs, ys in itertools.product(ws, repeat=2):
                lhs = word_ext(f.__getitem__, m, word_concat(xs, ys))
                assert lhs == m.op(word_ext(f.__getitem__, m, xs), word_ext(f.__getitem__, m, ys))
                a, b = to_array(xs), to_array(ys)
                lhs = array_ext(f.__getitem__, m, array_concat(a, b))
                assert lhs == m.op(array_ext(f.__getitem__, m, a), array_ext(f.__getitem__, m, b))


def test_enumerate_monoids_counts():
    # brute-force oracle: every table and every unit, filtered by the laws directly
    def brute(k, comm):
        n = 0
        for cells in itertools.product(range(k), repeat=k * k):
            t = lambda x, y: cells[x * k + y]
            units = [e for e in range(k) if all(t(e, x) == x == t(x, e) for x in range(k))]
            if not units:
                continue
            assoc = all(t(t(x, y), z) == t(x, t(y, z)) for x, y, z in itertools.product(range(k), repeat=3))
            c = all(t(x, y) == t(y, x) for x in range(k) for y in range(k))
            n += assoc and (c or not comm)
        return n

    for k in (1, 2, 3):
        assert len(enumerate_monoids(k)) == brute(k, False)
        assert len(enumerate_monoids(k, commutative=True)) == brute(k, True)


def test_certify_rejects_non_monoid():
    bad = table_monoid(((0, 1), (1, 1)), 1)
    with pytest.raises(ValueError, match="unitl"):
        bad.certify()
    assert MOD7.certify() is MOD7


def test_bounded_free_monoid_partiality():
    fm = BoundedFreeMonoid(2, 2)
    assert fm.apply(ualg.MUL, ((0,), (1,))) == (0, 1)
    assert fm.apply(ualg.MUL, ((0, 0), (1,))) is None
    assert fm.apply(ualg.E, ()) == ()


@pytest.mark.parametrize("as_array", [False, True])
def test_tabulated_homomorphisms_verified_by_ualg(as_array):
    fm = BoundedFreeMonoid(2, 3, array=as_array)
    split = array_splits if as_array else word_splits
    for m in enumerate_monoids(2):
        homs = tabulated_homomorphisms(fm.elements(), split, fm.unit, m)
        assert len(homs) == 2 ** 2
        for h in homs:
            assert ualg.is_homomorphism(h, fm, m.as_algebra())


@given(small_words, small_words)
def test_concat_preserves_length_and_order(xs, ys):
    zs = word_concat(xs, ys)
    assert len(zs) == len(xs) + len(ys)
    assert zs[:len(xs)] == xs and zs[len(xs):] == ys
    a = array_concat(to_array(xs), to_array(ys))
    assert to_word(a) == zs


@given(small_words)
def test_eta_head_tail_reconstructs(xs):
    if not xs:
        return
    a = to_array(xs)
    head, tail = array_uncons(a)
    assert array_concat(eta_array(head), tail) == a
