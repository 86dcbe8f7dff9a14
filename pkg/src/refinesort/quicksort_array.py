"""Deterministic in-place partition and quicksort over the array model.

``ipartl`` and ``iqsort`` are the derived programs: recursive state
transformers that mutate their segment only through ``swap``.  Each is
paired with an executable form of its specification, which runs the
corresponding nondeterministic list program and stores every outcome
into the array, yielding the set of acceptable (result, state) pairs.

``perm_write_swap_*`` are the two single-swap lemmas the derivation
leans on: writing a list and swapping one boundary cell lands inside
the set of states reachable by writing a permuted list.
"""

from __future__ import annotations

from typing import Callable, Optional

from .array_model import ArrayState, StateStep, Trace, read, swap, write_len2, write_list
from .effects import StateOutcomes
from .listspec import Elm, ElmList, is_sorted, perm, slowsort
from .quicksort_list import partl_nondet


def ipartl(
    s: ArrayState,
    p: Elm,
    i: int,
    ny: int,
    nz: int,
    nx: int,
    trace: Optional[Trace] = None,
) -> StateStep:
    """Partition the segment at ``i`` around pivot ``p``.

    On entry the segment holds ny below-pivot cells, nz above-pivot
    cells, then nx unexamined cells; the returned pair is the grown
    (ny, nz) with ny + nz covering the whole segment.
    """
    if nx == 0:
        return StateStep((ny, nz), s)
    if trace is not None:
        trace.recursions.append(("ipartl", nx, nx - 1))
    x, s = read(s, i + ny + nz, trace)
    if x.key <= p.key:
        _, s = swap(s, i + ny, i + ny + nz, trace)
        return ipartl(s, p, i, ny + 1, nz, nx - 1, trace)
    return ipartl(s, p, i, ny, nz + 1, nx - 1, trace)


def ipartl_spec(
    s: ArrayState, p: Elm, i: int, ys: ElmList, zs: ElmList, xs: ElmList
) -> StateOutcomes:
    """Acceptable (lengths, state) pairs for a partition of ``ys ++ zs ++ xs``.

    Runs the nondeterministic accumulating partition, then stores each
    resulting pair of lists at ``i`` over the given initial state.
    """
    pairs = []
    for ys2, zs2 in partl_nondet(p, (ys, zs, xs)):
        lengths, s2 = write_len2(s, i, ys2, zs2)
        pairs.append((lengths, s2))
    return StateOutcomes(pairs)


def perm_write_swap_lhs(s: ArrayState, i: int, x: Elm, zs: ElmList) -> StateOutcomes:
    """States reachable by writing ``[x] ++ zs'`` for any permutation zs'."""
    return StateOutcomes(
        ((), write_list(s, i, (x,) + zs2).state) for zs2 in perm(zs)
    )


def perm_write_swap_rhs(s: ArrayState, i: int, x: Elm, zs: ElmList) -> StateOutcomes:
    """The single state from writing ``zs ++ [x]`` then swapping ``x`` to the front."""
    _, s2 = write_list(s, i, zs + (x,))
    _, s3 = swap(s2, i, i + len(zs))
    return StateOutcomes((((), s3),))


def perm_write_swap2_lhs(s: ArrayState, i: int, p: Elm, ys: ElmList) -> StateOutcomes:
    """States reachable by writing ``ys' ++ [p]`` for any permutation ys'."""
    return StateOutcomes(
        ((), write_list(s, i, ys2 + (p,)).state) for ys2 in perm(ys)
    )


def perm_write_swap2_rhs(s: ArrayState, i: int, p: Elm, ys: ElmList) -> StateOutcomes:
    """The single state from writing ``[p] ++ ys`` then swapping ``p`` to the back."""
    _, s2 = write_list(s, i, (p,) + ys)
    _, s3 = swap(s2, i, i + len(ys))
    return StateOutcomes((((), s3),))


def iqsort(
    s: ArrayState,
    i: int,
    n: int,
    trace: Optional[Trace] = None,
    *,
    ipartl_fn: Callable = ipartl,
) -> StateStep:
    """Sort the ``n`` cells starting at ``i`` in place.

    Reads the pivot from the front, partitions the rest, swaps the
    pivot onto the boundary, and recurses into both halves.
    """
    if n == 0:
        return StateStep((), s)
    p, s = read(s, i, trace)
    (ny, nz), s = ipartl_fn(s, p, i + 1, 0, 0, n - 1, trace)
    _, s = swap(s, i, i + ny, trace)
    if trace is not None:
        trace.recursions.append(("iqsort", n, ny))
        trace.recursions.append(("iqsort", n, nz))
    _, s = iqsort(s, i, ny, trace, ipartl_fn=ipartl_fn)
    _, s = iqsort(s, i + ny + 1, nz, trace, ipartl_fn=ipartl_fn)
    return StateStep((), s)


def iqsort_spec(s: ArrayState, i: int, xs: ElmList) -> StateOutcomes:
    """States reachable by writing any sorted permutation of ``xs`` at ``i``."""
    return StateOutcomes(
        ((), write_list(s, i, xs2).state) for xs2 in slowsort(xs)
    )


def ipartl_inplace(buf: list, p: Elm, i: int, ny: int, nz: int, nx: int) -> tuple:
    """Mutable-buffer rendering of ``ipartl``; must match it observationally."""
    while nx > 0:
        x = buf[i + ny + nz]
        if x.key <= p.key:
            buf[i + ny], buf[i + ny + nz] = buf[i + ny + nz], buf[i + ny]
            ny += 1
        else:
            nz += 1
        nx -= 1
    return (ny, nz)


def iqsort_inplace(buf: list, i: int = 0, n: Optional[int] = None) -> None:
    """Mutable-buffer rendering of ``iqsort``; must match it observationally."""
    if n is None:
        n = len(buf)
    if n == 0:
        return
    p = buf[i]
    ny, nz = ipartl_inplace(buf, p, i + 1, 0, 0, n - 1)
    buf[i], buf[i + ny] = buf[i + ny], buf[i]
    iqsort_inplace(buf, i, ny)
    iqsort_inplace(buf, i + ny + 1, nz)
