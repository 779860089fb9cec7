"""Finitary signatures, finite algebras and the free term algebra.

Carriers of finite algebras are ``range(size)``. Algebras are duck-typed:
anything with ``signature``, ``elements()`` and ``apply(op, args)`` works
with :func:`term_ext`, :func:`is_homomorphism` and :func:`satisfies`.
``apply`` may return ``None`` to mark a partial operation (used for
bounded slices of infinite algebras); such cases are skipped by the
checkers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Sequence

from freesort.verdict import Verdict


class StructureError(ValueError):
    """A term or table does not fit its signature."""


@dataclass(frozen=True)
class Signature:
    arities: tuple[int, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if any(a < 0 for a in self.arities):
            raise StructureError("arities must be natural numbers")
        if self.names and len(self.names) != len(self.arities):
            raise StructureError("one name per operation")

    @property
    def op_count(self) -> int:
        return len(self.arities)

    def arity(self, op: int) -> int:
        return self.arities[op]

    def name(self, op: int) -> str:
        return self.names[op] if self.names else f"op{op}"


#: unit ``e`` (nullary) and multiplication (binary)
MONOID_SIGNATURE = Signature((0, 2), ("e", "mul"))
E, MUL = 0, 1


@dataclass(frozen=True)
class Leaf:
    value: Any


@dataclass(frozen=True)
class Node:
    op: int
    children: tuple = ()


def _check_arity(sig: Signature, t: Node):
    if not 0 <= t.op < sig.op_count:
        raise StructureError(f"unknown operation {t.op}")
    if len(t.children) != sig.arity(t.op):
        raise StructureError(
            f"{sig.name(t.op)} expects {sig.arity(t.op)} children, got {len(t.children)}"
        )


class FiniteAlgebra:
    """A tabulated algebra on ``range(size)``.

    ``interp`` maps ``(op, args)`` to a carrier element and must be total
    on every operation's argument cube.
    """

    def __init__(self, signature: Signature, size: int, interp: Mapping[tuple, int]):
        self.signature = signature
        self.size = size
        self.interp = dict(interp)
        for op in range(signature.op_count):
            for args in itertools.product(range(size), repeat=signature.arity(op)):
                v = self.interp.get((op, args))
                if v is None:
                    raise StructureError(f"{signature.name(op)}{args} is not interpreted")
                if not 0 <= v < size:
                    raise StructureError(f"{signature.name(op)}{args} = {v} is outside the carrier")

    @classmethod
    def from_functions(cls, signature: Signature, size: int, funcs: Sequence[Callable]):
        interp = {}
        for op, fn in enumerate(funcs):
            for args in itertools.product(range(size), repeat=signature.arity(op)):
                interp[(op, args)] = fn(*args)
        return cls(signature, size, interp)

    def elements(self):
        return range(self.size)

    def apply(self, op: int, args: tuple) -> int:
        return self.interp[(op, tuple(args))]

    def __repr__(self):
        return f"FiniteAlgebra(size={self.size}, ops={self.signature.op_count})"


def monoid_algebra(size: int, unit: int, mul: Callable[[int, int], int]) -> FiniteAlgebra:
    return FiniteAlgebra.from_functions(MONOID_SIGNATURE, size, [lambda: unit, mul])


def modular_monoid(k: int) -> FiniteAlgebra:
    """``(Z/k, 0, +)``."""
    return monoid_algebra(k, 0, lambda x, y: (x + y) % k)


class TermAlgebra:
    """The free algebra: terms are their own carrier.

    Not finite, so it has no ``elements()``; it is only used as an
    interpretation target for :func:`term_ext`.
    """

    def __init__(self, signature: Signature):
        self.signature = signature

    def apply(self, op: int, args: tuple):
        return Node(op, tuple(args))


def term_ext(f: Callable[[Any], Any] | Mapping, alg, t) -> Any:
    """Evaluate ``t`` in ``alg`` with leaves sent through ``f``.

    Leaf(x) goes to ``f(x)`` and Node(o, cs) to ``alg.apply(o, ...)``
    over the evaluated children.
    """
    if isinstance(f, Mapping):
        f = f.__getitem__
    sig = alg.signature

    def go(t):
        if isinstance(t, Leaf):
            return f(t.value)
        _check_arity(sig, t)
        return alg.apply(t.op, tuple(go(c) for c in t.children))

    return go(t)


def term_map(f: Callable[[Any], Any], t):
    if isinstance(t, Leaf):
        return Leaf(f(t.value))
    return Node(t.op, tuple(term_map(f, c) for c in t.children))


def term_join(t):
    """Graft each leaf's term in place (leaves of ``t`` hold terms)."""
    if isinstance(t, Leaf):
        return t.value
    return Node(t.op, tuple(term_join(c) for c in t.children))


def enumerate_terms(signature: Signature, generators: Iterable, depth: int) -> list:
    """All terms of depth at most ``depth``, leaves having depth 0.

    Ordered by depth of construction, then operation, then children.
    """
    leaves = [Leaf(g) for g in generators]
    terms = list(leaves)
    for _ in range(depth):
        nxt = list(leaves)
        for op in range(signature.op_count):
            for cs in itertools.product(terms, repeat=signature.arity(op)):
                nxt.append(Node(op, cs))
        terms = nxt
    return terms


def term_depth(t) -> int:
    if isinstance(t, Leaf):
        return 0
    return 1 + max((term_depth(c) for c in t.children), default=0)


def term_variables(t) -> set:
    if isinstance(t, Leaf):
        return {t.value}
    return set().union(*(term_variables(c) for c in t.children))


def is_homomorphism(f: Callable[[Any], Any] | Mapping, a, b) -> Verdict:
    """Check ``f(a.op(args)) == b.op(f(args))`` for every op and argument tuple.

    Scans operations in index order and argument tuples lexicographically
    (in ``a.elements()`` order); the witness is ``(op, args)``. Tuples on
    which ``a`` is undefined are skipped.
    """
    if isinstance(f, Mapping):
        f = f.__getitem__
    sig = a.signature
    if b.signature != sig:
        raise StructureError("algebras have different signatures")
    elems = list(a.elements())
    for op in range(sig.op_count):
        for args in itertools.product(elems, repeat=sig.arity(op)):
            out = a.apply(op, args)
            if out is None:
                continue
            if f(out) != b.apply(op, tuple(f(x) for x in args)):
                return Verdict("homomorphism", (op, args))
    return Verdict("homomorphism")


@dataclass(frozen=True)
class EquationSystem:
    """Equations ``lhs[i] = rhs[i]`` over variables ``0..fv[i]-1``."""

    signature: Signature
    fv: tuple[int, ...]
    lhs: tuple
    rhs: tuple
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not len(self.fv) == len(self.lhs) == len(self.rhs):
            raise StructureError("fv, lhs and rhs must have one entry per equation")
        for i, (n, l, r) in enumerate(zip(self.fv, self.lhs, self.rhs)):
            for side in (l, r):
                bad = [v for v in term_variables(side) if not 0 <= v < n]
                if bad:
                    raise StructureError(f"equation {i} uses undeclared variables {bad}")

    @property
    def eq_count(self) -> int:
        return len(self.fv)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def restrict(self, *names: str) -> "EquationSystem":
        idx = [self.index(n) for n in names]
        return EquationSystem(
            self.signature,
            tuple(self.fv[i] for i in idx),
            tuple(self.lhs[i] for i in idx),
            tuple(self.rhs[i] for i in idx),
            tuple(names),
        )


def _mul(x, y):
    return Node(MUL, (x, y))


_e = Node(E, ())
_x, _y, _z = Leaf(0), Leaf(1), Leaf(2)


def monoid_equations() -> EquationSystem:
    return EquationSystem(
        MONOID_SIGNATURE,
        fv=(1, 1, 3),
        lhs=(_mul(_e, _x), _mul(_x, _e), _mul(_mul(_x, _y), _z)),
        rhs=(_x, _x, _mul(_x, _mul(_y, _z))),
        names=("unitl", "unitr", "assoc"),
    )


def comm_monoid_equations() -> EquationSystem:
    m = monoid_equations()
    return EquationSystem(
        MONOID_SIGNATURE,
        fv=m.fv + (2,),
        lhs=m.lhs + (_mul(_x, _y),),
        rhs=m.rhs + (_mul(_y, _x),),
        names=m.names + ("comm",),
    )


def satisfies(alg, eqs: EquationSystem) -> Verdict:
    """Check every equation under every assignment of its variables.

    Equations are scanned in index order, assignments lexicographically;
    the witness is ``(equation index, assignment)`` and can be replayed
    with :func:`term_ext`.
    """
    elems = list(alg.elements())
    for i in range(eqs.eq_count):
        for rho in itertools.product(elems, repeat=eqs.fv[i]):
            if term_ext(rho.__getitem__, alg, eqs.lhs[i]) != term_ext(rho.__getitem__, alg, eqs.rhs[i]):
                return Verdict("satisfies", (i, rho))
    return Verdict("satisfies")
