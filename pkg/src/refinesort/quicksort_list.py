"""Pure list quicksort and the accumulating partition family.

The deterministic programs here (``partition``, ``qsort``, ``partl``)
refine the nondeterministic ones (``partition_spec``, ``slowsort``,
``partl_nondet``); the refinement obligations live in the harness and
are checked by exhaustive enumeration.  Elements with keys equal to the
pivot go to the left partition; several tests pin that choice down.
"""

from __future__ import annotations

from typing import Callable

from .effects import Outcomes, bind, filt, ret
from .listspec import Elm, ElmList, perm, slowsort, split


def partition(p: Elm, xs: ElmList) -> tuple:
    """Stable two-way partition around pivot ``p``; equal keys go left."""
    left: list = []
    right: list = []
    for x in xs:
        if x.key <= p.key:
            left.append(x)
        else:
            right.append(x)
    return (tuple(left), tuple(right))


def partition_spec(p: Elm, xs: ElmList) -> Outcomes:
    """All order-preserving splits of ``xs`` that respect the pivot."""
    return bind(
        split(xs),
        lambda pair: filt(
            lambda pr: all(e.key <= p.key for e in pr[0])
            and all(p.key <= e.key for e in pr[1]),
            pair,
        ),
    )


def qsort(xs: ElmList, *, partition_fn: Callable = partition) -> ElmList:
    """Recursive quicksort on lists."""
    if not xs:
        return ()
    p, rest = xs[0], xs[1:]
    ys, zs = partition_fn(p, rest)
    return (
        qsort(ys, partition_fn=partition_fn)
        + (p,)
        + qsort(zs, partition_fn=partition_fn)
    )


def divide_and_conquer(p: Elm, xs: ElmList, *, partition_fn: Callable = partition) -> Outcomes:
    """Sort around a pivot: partition, sort both halves, rejoin.

    The program that quicksort's recursion refines; as an outcome set it
    must itself refine ``slowsort((p,) + xs)``.
    """
    return bind(
        ret(partition_fn(p, xs)),
        lambda pair: bind(
            slowsort(pair[0]),
            lambda ys2: bind(slowsort(pair[1]), lambda zs2: ret(ys2 + (p,) + zs2)),
        ),
    )


def partl(p: Elm, triple: tuple, *, partition_fn: Callable = partition) -> tuple:
    """Partition with accumulators: partition ``xs``, append onto ``ys``/``zs``."""
    ys, zs, xs = triple
    us, vs = partition_fn(p, xs)
    return (ys + us, zs + vs)


def partl_tailrec(p: Elm, triple: tuple) -> tuple:
    """Tail-recursive rendering of ``partl``; must agree with it everywhere."""
    ys, zs, xs = triple
    for x in xs:
        if x.key <= p.key:
            ys = ys + (x,)
        else:
            zs = zs + (x,)
    return (ys, zs)


def second_perm(pair: tuple) -> Outcomes:
    """Permute the second component of a pair, keeping the first fixed."""
    ys, zs = pair
    return bind(perm(zs), lambda zs2: ret((ys, zs2)))


def dispatch(x: Elm, p: Elm, triple: tuple) -> Outcomes:
    """Send ``x`` to a partition, permuting the right accumulator.

    One step of the nondeterministic accumulating partition: the triple
    holds the two accumulators and the not-yet-dispatched rest.
    """
    ys, zs, xs = triple
    if x.key <= p.key:
        return bind(perm(zs), lambda zs2: ret((ys + (x,), zs2, xs)))
    return bind(perm(zs + (x,)), lambda zs2: ret((ys, zs2, xs)))


def partl_nondet(p: Elm, triple: tuple) -> Outcomes:
    """Nondeterministic accumulating partition, one dispatch per element."""
    ys, zs, xs = triple
    if not xs:
        return ret((ys, zs))
    return bind(dispatch(xs[0], p, (ys, zs, xs[1:])), lambda t: partl_nondet(p, t))


def partl_nondet_direct(p: Elm, triple: tuple) -> Outcomes:
    """Same program with the dispatch step inlined; kept to cross-check
    that factoring it out changed nothing."""
    ys, zs, xs = triple
    if not xs:
        return ret((ys, zs))
    x, rest = xs[0], xs[1:]
    if x.key <= p.key:
        return bind(
            perm(zs), lambda zs2: partl_nondet_direct(p, (ys + (x,), zs2, rest))
        )
    return bind(
        perm(zs + (x,)), lambda zs2: partl_nondet_direct(p, (ys, zs2, rest))
    )
