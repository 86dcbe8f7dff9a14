"""Harness primitives: enumerators, verdicts, and the left factor.

Obligations are data: a name, the statement being checked, bounds, and
a runner that sweeps an enumerated input space yielding one entry per
case.  Enumeration is shortest-input-first throughout, so the first
counterexample an obligation reports is always of minimal length.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Mapping, Optional

from .array_model import ArrayState
from .effects import KleisliTable, Outcomes, bind, refines
from .listspec import Elm


class UnknownObligation(KeyError):
    """Requested obligation name is not registered."""


@dataclass(frozen=True)
class Failure:
    """One counterexample: the input and the two sides that disagreed."""

    input: str
    expected: str
    actual: str


@dataclass(frozen=True)
class Obligation:
    """A checkable statement plus the input space it is swept over.

    ``run(programs, bounds)`` yields ``None`` per passing case and a
    ``Failure`` per failing one.  ``plumbing`` marks obligations that
    check artifact wiring rather than a law of the calculus.
    """

    name: str
    law: str
    kind: str  # equality | refinement-pure | refinement-state
    bounds: Mapping[str, Any]
    run: Callable[[Any, Mapping[str, Any]], Iterator[Optional[Failure]]]
    plumbing: bool = False


@dataclass
class Verdict:
    """Outcome of sweeping one obligation."""

    obligation: str
    cases_run: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def show(value: Any) -> str:
    """Render a value as a compact readable term."""
    if isinstance(value, (tuple, list)) and not isinstance(value, Elm):
        return "[" + ", ".join(show(v) for v in value) + "]"
    if isinstance(value, Outcomes):
        return "{" + ", ".join(show(v) for v in value) + "}"
    return repr(value)


def enumerate_lists(alphabet_size: int, max_len: int) -> Iterator[tuple]:
    """All element lists up to ``max_len``, shortest first.

    Keys range over ``[0, alphabet_size)`` (duplicates included) and the
    tag of each element is its position, so every list's elements are
    pairwise distinct values even when keys repeat.
    """
    if alphabet_size < 1:
        raise ValueError("alphabet_size must be at least 1")
    for n in range(max_len + 1):
        for keys in itertools.product(range(alphabet_size), repeat=n):
            yield tuple(Elm(k, i) for i, k in enumerate(keys))


def enumerate_triples(alphabet_size: int, max_total: int) -> Iterator[tuple]:
    """All (ys, zs, xs) list triples with total length up to ``max_total``."""
    for whole in enumerate_lists(alphabet_size, max_total):
        n = len(whole)
        for a in range(n + 1):
            for b in range(a, n + 1):
                yield (whole[:a], whole[a:b], whole[b:])


def pivots(alphabet_size: int) -> tuple:
    """One pivot element per key of the alphabet."""
    return tuple(Elm(k, -1) for k in range(alphabet_size))


def enumerate_subsets(universe: Iterable[Any]) -> Iterator[Outcomes]:
    """All outcome sets drawn from a finite universe, smallest first."""
    items = tuple(universe)
    for r in range(len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield Outcomes(combo)


def enumerate_tables(domain: Iterable[Any], universe: Iterable[Any]) -> Iterator[KleisliTable]:
    """All tabulated functions from ``domain`` into outcome sets over ``universe``."""
    dom = tuple(domain)
    choices = tuple(enumerate_subsets(universe))
    for images in itertools.product(choices, repeat=len(dom)):
        yield KleisliTable(dom, dict(zip(dom, images)))


def enumerate_states(
    window: Iterable[int], alphabet_size: int, max_cells: int
) -> Iterator[ArrayState]:
    """All array states with up to ``max_cells`` written cells in ``window``."""
    idxs = tuple(window)
    vals = tuple(Elm(k, 50 + k) for k in range(alphabet_size))
    for r in range(min(max_cells, len(idxs)) + 1):
        for cells in itertools.combinations(idxs, r):
            for assignment in itertools.product(vals, repeat=r):
                yield ArrayState.from_dict(dict(zip(cells, assignment)))


def left_factor(
    f: KleisliTable,
    h: KleisliTable,
    b_universe: Iterable[Any],
    c_universe: Iterable[Any],
) -> KleisliTable:
    """The greatest table ``g`` with ``f >=> g`` refining ``h`` pointwise.

    At each ``b``, keeps exactly the ``c`` values allowed by every
    input whose ``f``-outcomes include ``b``; a ``b`` no input reaches
    is unconstrained.
    """
    bs = tuple(b_universe)
    cs = tuple(c_universe)
    table = {}
    for b in bs:
        allowed = [
            c for c in cs if all(c in h(a) for a in f.domain if b in f(a))
        ]
        table[b] = Outcomes(allowed)
    return KleisliTable(bs, table)


def check_galois(
    f: KleisliTable,
    g: KleisliTable,
    h: KleisliTable,
    c_universe: Optional[Iterable[Any]] = None,
) -> bool:
    """Both sides of the factoring equivalence agree for this triple.

    ``f >=> g`` refines ``h`` pointwise exactly when ``g`` refines the
    left factor pointwise.  ``g``'s domain supplies the mid universe;
    the value universe must cover everything ``g`` and ``h`` can
    produce, and defaults to the union of their images.
    """
    if c_universe is None:
        c_universe = tuple(sorted(set(_outcomes_union(g)) | set(_outcomes_union(h))))
    composed_refines = all(refines(bind(f(a), g), h(a)) for a in f.domain)
    factor = left_factor(f, h, g.domain, c_universe)
    factored_refines = all(refines(g(b), factor(b)) for b in g.domain)
    return composed_refines == factored_refines


def _outcomes_union(table: KleisliTable) -> tuple:
    seen: set = set()
    for a in table.domain:
        seen.update(table(a).elements)
    return tuple(sorted(seen))
