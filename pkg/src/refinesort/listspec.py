"""List-level sorting specifications over elements with duplicate keys.

Elements carry an integer sort key plus an identity tag.  Sorting
predicates compare keys only (a total preorder: distinct elements may
have equal keys), while outcome canonicalization distinguishes elements
by the full (key, tag) pair.  That makes nondeterminism observable:
two sorted arrangements of equal-keyed elements are different outcomes.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .effects import Outcomes, bind, filt, kleisli, lift_m2, ret


class Elm(NamedTuple):
    key: int
    tag: int

    def __repr__(self) -> str:
        return f"{self.key}#{self.tag}"


#: A list of elements is an immutable tuple, so it can live inside outcome sets.
ElmList = tuple


def elms(*keys: int) -> ElmList:
    """Build an element list from keys, tagging each position distinctly."""
    return tuple(Elm(k, i) for i, k in enumerate(keys))


def keys_of(xs: ElmList) -> tuple:
    return tuple(e.key for e in xs)


def is_sorted(xs: ElmList) -> bool:
    """True iff the keys are nondecreasing."""
    return all(xs[i].key <= xs[i + 1].key for i in range(len(xs) - 1))


def sorted_cat3(ys: ElmList, x: Elm, zs: ElmList) -> bool:
    """Sortedness of ``ys + [x] + zs`` decided without concatenating.

    Equivalent to ``is_sorted(ys + (x,) + zs)``: both halves sorted,
    everything left of the pivot at most it, everything right at least it.
    """
    return (
        is_sorted(ys)
        and is_sorted(zs)
        and all(e.key <= x.key for e in ys)
        and all(x.key <= e.key for e in zs)
    )


def split(xs: ElmList) -> Outcomes:
    """All 2^n order-preserving distributions of ``xs`` over two lists."""
    if not xs:
        return ret(((), ()))
    x, rest = xs[0], xs[1:]
    return bind(
        split(rest),
        lambda pair: Outcomes([((x,) + pair[0], pair[1]), (pair[0], (x,) + pair[1])]),
    )


def insert(x: Elm, xs: ElmList) -> Outcomes:
    """Insert ``x`` at each of the len(xs)+1 positions of ``xs``."""
    return Outcomes(xs[:i] + (x,) + xs[i:] for i in range(len(xs) + 1))


def perm_insert(xs: ElmList) -> Outcomes:
    """All permutations of ``xs``, built by inserting the head everywhere."""
    if not xs:
        return ret(())
    return bind(perm_insert(xs[1:]), lambda ys: insert(xs[0], ys))


def perm_split(xs: ElmList) -> Outcomes:
    """All permutations of ``xs``, built by splitting the tail around the head."""
    if not xs:
        return ret(())
    x, rest = xs[0], xs[1:]
    return bind(
        split(rest),
        lambda pair: lift_m2(
            lambda ys, zs: ys + (x,) + zs, perm_split(pair[0]), perm_split(pair[1])
        ),
    )


# Canonical permutation generator for the programs built downstream; the
# two definitions above are interchangeable (equality is one of the
# registered obligations) and this one costs less to evaluate.
perm = perm_insert


# Cached: the harness revisits the same canonical inputs from many
# obligations, and the filtered outcome sets stay small.
@lru_cache(maxsize=None)
def slowsort(xs: ElmList) -> Outcomes:
    """The executable sorting specification: permute, keep the sorted ones."""
    return kleisli(perm, lambda ys: filt(is_sorted, ys))(xs)
