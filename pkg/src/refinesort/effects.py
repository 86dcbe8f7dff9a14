"""Finite set semantics for nondeterministic computations.

A nondeterministic computation is represented by its denotation: the
canonical, duplicate-free, ordered set of values it may produce.  The
empty set is the unique representation of failure.  Every carried value
type must admit a total order (ints, tuples, ``Elm``, ``ArrayState`` and
nestings thereof all do), which makes equality and iteration order
deterministic.
"""

from __future__ import annotations

from typing import Any, Callable, Iterable, Iterator

#: The unit value returned by effect-only computations.
UNIT: tuple = ()


class Outcomes:
    """Canonical finite set of possible results.

    Elements are deduplicated and kept in sorted order; two ``Outcomes``
    are equal iff they contain the same elements.
    """

    __slots__ = ("_elems",)

    def __init__(self, elems: Iterable[Any] = ()):
        self._elems: tuple = tuple(sorted(set(elems)))

    @property
    def elements(self) -> tuple:
        return self._elems

    def __iter__(self) -> Iterator[Any]:
        return iter(self._elems)

    def __len__(self) -> int:
        return len(self._elems)

    def __contains__(self, value: Any) -> bool:
        return value in self._elems

    def __bool__(self) -> bool:
        return bool(self._elems)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Outcomes):
            return NotImplemented
        return self._elems == other._elems

    def __hash__(self) -> int:
        return hash(self._elems)

    def __repr__(self) -> str:
        inner = ", ".join(repr(e) for e in self._elems)
        return "{" + inner + "}"

    def issubset(self, other: "Outcomes") -> bool:
        return set(self._elems) <= set(other._elems)


class StateOutcomes(Outcomes):
    """Canonical set of (value, final state) pairs.

    The denotation of a nondeterministic stateful computation run from
    one initial state.  Each branch carries its own copy of the state,
    so equality is set equality on the full pairs.
    """

    __slots__ = ()

    def values(self) -> tuple:
        return tuple(v for v, _ in self._elems)

    def states(self) -> tuple:
        return tuple(s for _, s in self._elems)


def ret(value: Any) -> Outcomes:
    """Deterministic computation: the singleton set."""
    return Outcomes((value,))


def mzero() -> Outcomes:
    """Failure: the empty set of outcomes."""
    return Outcomes()


def mplus(m1: Outcomes, m2: Outcomes) -> Outcomes:
    """Nondeterministic choice: union of the alternatives."""
    return Outcomes(m1.elements + m2.elements)


def bind(m: Outcomes, f: Callable[[Any], Outcomes]) -> Outcomes:
    """Sequence ``m`` into ``f``: the union of ``f(x)`` over ``x`` in ``m``."""
    acc: list = []
    for x in m:
        acc.extend(f(x).elements)
    return Outcomes(acc)

def guard(condition: bool) -> Outcomes:
    """Succeed with unit when the condition holds, fail otherwise."""
    return ret(UNIT) if condition else mzero()


def filt(predicate: Callable[[Any], bool], value: Any) -> Outcomes:
    """Keep ``value`` when the predicate holds, fail otherwise."""
    return bind(guard(predicate(value)), lambda _: ret(value))


def lift_m2(op: Callable[[Any, Any], Any], m1: Outcomes, m2: Outcomes) -> Outcomes:
    """Apply a binary operator across all pairs of alternatives."""
    return bind(m1, lambda x1: bind(m2, lambda x2: ret(op(x1, x2))))


def kleisli(
    f: Callable[[Any], Outcomes], g: Callable[[Any], Outcomes]
) -> Callable[[Any], Outcomes]:
    """Compose two monadic functions: run ``f``, then ``g`` on each result."""

    def composed(x: Any) -> Outcomes:
        return bind(f(x), g)

    return composed


def refines(m1: Outcomes, m2: Outcomes) -> bool:
    """True when every result of ``m1`` is a possible result of ``m2``.

    Defined as ``mplus(m1, m2) == m2``, which coincides with set
    inclusion of the outcome sets.
    """
    return mplus(m1, m2) == m2


def refines_state(m1: StateOutcomes, m2: StateOutcomes) -> bool:
    """Refinement for stateful computations: inclusion on (value, state) pairs."""
    return set(m1.elements) <= set(m2.elements)


class KleisliTable:
    """A total tabulated function from a finite domain to outcome sets.

    Lookups outside the declared domain are errors: the table is the
    whole function, not a partial view of one.
    """

    __slots__ = ("domain", "_table")

    def __init__(self, domain: Iterable[Any], table: dict):
        self.domain: tuple = tuple(domain)
        missing = [a for a in self.domain if a not in table]
        if missing:
            raise ValueError(f"table has no entry for {missing[0]!r}")
        self._table = {a: table[a] for a in self.domain}

    @classmethod
    def tabulate(cls, domain: Iterable[Any], fn: Callable[[Any], Outcomes]) -> "KleisliTable":
        dom = tuple(domain)
        return cls(dom, {a: fn(a) for a in dom})

    def __call__(self, a: Any) -> Outcomes:
        try:
            return self._table[a]
        except KeyError:
            raise KeyError(f"{a!r} is outside the tabulated domain") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KleisliTable):
            return NotImplemented
        return self.domain == other.domain and self._table == other._table

    def __repr__(self) -> str:
        entries = ", ".join(f"{a!r}: {self._table[a]!r}" for a in self.domain)
        return f"KleisliTable({{{entries}}})"
