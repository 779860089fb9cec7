import itertools

import pytest

from freesort import fcm, freemon


@pytest.fixture(scope="session")
def comm_targets():
    return fcm.comm_monoid_targets(3)


@pytest.fixture(scope="session")
def all_monoids():
    return [m for k in (1, 2, 3) for m in freemon.enumerate_monoids(k)]


def tabulated_homomorphisms(universe, split, unit, m):
    """Every table ``h`` on ``universe`` with ``h(unit) == m.unit`` and
    ``h(a ++ b) == h(a) * h(b)`` for every proper split, by backtracking.

    ``universe`` must list shorter elements first; ``split(w)`` yields the
    proper ``(a, b)`` splits of ``w``. Independent of any extension code.
    """
    universe = list(universe)
    out = []
    stack = [(0, {})]
    while stack:
        i, h = stack.pop()
        if i == len(universe):
            out.append(h)
            continue
        w = universe[i]
        fits = [
            v for v in m.carrier
            if (len(w) != 0 or v == m.unit)
            and all(m.op(h[a], h[b]) == v for a, b in split(w))
        ]
        for v in reversed(fits):
            nh = h if len(fits) == 1 else dict(h)
            nh[w] = v
            stack.append((i + 1, nh))
    return out


def word_splits(w):
    return [(w[:i], w[i:]) for i in range(1, len(w))]


def array_splits(a):
    n = len(a)
    return [
        (freemon.IndexedArray.tabulate(i, a.lookup),
         freemon.IndexedArray.tabulate(n - i, lambda k, i=i: a.lookup(i + k)))
        for i in range(1, n)
    ]


def all_maps(domain, codomain):
    domain = list(domain)
    for values in itertools.product(list(codomain), repeat=len(domain)):
        yield dict(zip(domain, values))
