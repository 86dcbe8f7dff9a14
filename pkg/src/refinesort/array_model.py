"""An integer-indexed array modeled as a finite map with value semantics.

Cells are either written or absent; reading an absent cell raises
``UninitializedRead`` rather than producing a default, so a derived
program that strays outside its initialized segment fails loudly.
Every primitive returns a fresh state paired with its result.

Primitives optionally record what they touched into a ``Trace``, which
the harness uses to audit that derived programs stay inside their
segment and mutate the array only by swapping.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .listspec import Elm


class UninitializedRead(LookupError):
    """Read of a cell that was never written."""

    def __init__(self, index: int):
        super().__init__(f"cell {index} was never written")
        self.index = index


@dataclass(frozen=True, order=True)
class ArrayState:
    """Immutable snapshot of the array: a sorted tuple of (index, element)."""

    cells: tuple = ()

    @staticmethod
    def from_dict(mapping: dict) -> "ArrayState":
        return ArrayState(tuple(sorted(mapping.items())))

    def as_dict(self) -> dict:
        return dict(self.cells)

    def has(self, i: int) -> bool:
        return any(j == i for j, _ in self.cells)

    def get(self, i: int) -> Elm:
        for j, x in self.cells:
            if j == i:
                return x
        raise UninitializedRead(i)

    def put(self, i: int, x: Elm) -> "ArrayState":
        d = dict(self.cells)
        d[i] = x
        return ArrayState(tuple(sorted(d.items())))

    def __repr__(self) -> str:
        inner = ", ".join(f"{i}:{x!r}" for i, x in self.cells)
        return "{" + inner + "}"


class StateStep(NamedTuple):
    """Result of one deterministic stateful computation."""

    result: object
    state: ArrayState


@dataclass
class Trace:
    """Audit log of a stateful run.

    ``writes`` carries the primitive each mutation originated from, and
    ``recursions`` the (program, parent measure, child measure) of each
    recursive call, so tests can confirm the measure strictly decreases.
    """

    reads: list = field(default_factory=list)
    writes: list = field(default_factory=list)  # (index, origin)
    recursions: list = field(default_factory=list)  # (program, parent, child)

    def touched(self) -> set:
        return set(self.reads) | {i for i, _ in self.writes}

    def write_origins(self) -> set:
        return {origin for _, origin in self.writes}


def read(s: ArrayState, i: int, trace: Optional[Trace] = None) -> StateStep:
    """Read cell ``i``; the state is unchanged."""
    if trace is not None:
        trace.reads.append(i)
    return StateStep(s.get(i), s)


def write(
    s: ArrayState,
    i: int,
    x: Elm,
    trace: Optional[Trace] = None,
    origin: str = "write",
) -> StateStep:
    """Write ``x`` to cell ``i``, extending the map if the cell was absent."""
    if trace is not None:
        trace.writes.append((i, origin))
    return StateStep((), s.put(i, x))


def read_list(s: ArrayState, i: int, n: int, trace: Optional[Trace] = None) -> StateStep:
    """Read the ``n`` cells starting at ``i``."""
    out = []
    for k in range(n):
        x, s = read(s, i + k, trace)
        out.append(x)
    return StateStep(tuple(out), s)


def write_list(
    s: ArrayState,
    i: int,
    xs: tuple,
    trace: Optional[Trace] = None,
    origin: str = "writeList",
) -> StateStep:
    """Write the elements of ``xs`` consecutively starting at ``i``."""
    for k, x in enumerate(xs):
        _, s = write(s, i + k, x, trace, origin)
    return StateStep((), s)


def write_len(s: ArrayState, i: int, xs: tuple, trace: Optional[Trace] = None) -> StateStep:
    """Store a list, returning its length."""
    _, s = write_list(s, i, xs, trace)
    return StateStep(len(xs), s)


def write_len2(
    s: ArrayState, i: int, xs: tuple, ys: tuple, trace: Optional[Trace] = None
) -> StateStep:
    """Store two lists consecutively, returning their lengths."""
    _, s = write_list(s, i, xs + ys, trace)
    return StateStep((len(xs), len(ys)), s)


def write_len3(
    s: ArrayState, i: int, xs: tuple, ys: tuple, zs: tuple, trace: Optional[Trace] = None
) -> StateStep:
    """Store three lists consecutively, returning their lengths."""
    _, s = write_list(s, i, xs + ys + zs, trace)
    return StateStep((len(xs), len(ys), len(zs)), s)


def swap(s: ArrayState, i: int, j: int, trace: Optional[Trace] = None) -> StateStep:
    """Exchange the contents of cells ``i`` and ``j``."""
    x, s = read(s, i, trace)
    y, s = read(s, j, trace)
    _, s = write(s, i, y, trace, origin="swap")
    _, s = write(s, j, x, trace, origin="swap")
    return StateStep((), s)
