"""
GCD of n non-negative integers.

Two n-way algorithms are provided:

* ``gcd_n``: every element is reduced modulo the least non-zero element
  until a single non-zero element survives.
* ``binary_gcd_n``: the same idea using only parity tests, halving and
  subtraction (Stein-style), with common factors of two pulled out first.

Both are checked against ``fold_gcd``, the classic left-to-right fold of a
pairwise GCD.

Values are plain Python ints (arbitrary precision). A list of values is a
tuple of ints; ``as_number_list`` validates one.
"""
from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Callable, Iterable, Optional, Sequence

__all__ = [
    "NumberList",
    "OpCounters",
    "TraceEvent",
    "GcdResult",
    "as_natural",
    "as_number_list",
    "gcd_pair",
    "euclid_pair",
    "binary_pair",
    "fold_gcd",
    "least_nonzero_pivot",
    "mod_reduce_step",
    "halve_all_step",
    "halve_one_step",
    "subtract_step",
    "gcd_n",
    "binary_gcd_n",
    "gcd_n_literal",
    "binary_gcd_n_literal",
    "ALGORITHMS",
    "STEP_KINDS",
]

NumberList = tuple  # tuple[int, ...], length >= 1

STEP_KINDS = ("pivot-select", "mod-reduce", "halve-all", "halve-one", "subtract", "terminate")


def as_natural(value) -> int:
    """Return ``value`` as a non-negative int, or raise."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"expected a non-negative int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"negative value {value} is not a natural number")
    return int(value)


def as_number_list(values: Iterable[int]) -> NumberList:
    """Validate and freeze a non-empty sequence of naturals."""
    items = tuple(as_natural(v) for v in values)
    if not items:
        raise ValueError("a number list needs at least one element")
    return items


@dataclass
class OpCounters:
    """Operation tallies for one run.

    ``comparisons`` counts ordering comparisons (pivot scans, swap tests);
    ``swaps`` is only used by the literal, slot-swapping variants.
    """

    mods: int = 0
    subtractions: int = 0
    halvings: int = 0
    comparisons: int = 0
    swaps: int = 0
    outer_iterations: int = 0

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def merge(self, other: "OpCounters") -> None:
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))


@dataclass(frozen=True)
class TraceEvent:
    """One reduction step.

    ``state`` is shown pivot-first, in the order the slot-swapping
    presentation would hold it. ``pivot`` is the index of the pivot in that
    presentation (always 0 once a pivot has been chosen), ``result`` is set
    on the terminate event only.
    """

    kind: str
    state: NumberList
    p: int = 0
    pivot: Optional[int] = None
    result: Optional[int] = None


@dataclass
class GcdResult:
    gcd: int
    counters: OpCounters = field(default_factory=OpCounters)
    trace: Optional[list[TraceEvent]] = None


# ---------------------------------------------------------------------------
# pairwise GCDs


def euclid_pair(a: int, b: int, counters: Optional[OpCounters] = None) -> int:
    """Euclid's algorithm, ``gcd(a, b) = gcd(b, a mod b)``."""
    mods = 0
    while b:
        a, b = b, a % b
        mods += 1
    if counters is not None:
        counters.mods += mods
    return a


def gcd_pair(a: int, b: int) -> int:
    """Greatest common divisor of two naturals; ``gcd_pair(0, 0) == 0``."""
    return euclid_pair(as_natural(a), as_natural(b))


def binary_pair(a: int, b: int, counters: Optional[OpCounters] = None) -> int:
    """Stein's binary GCD of two naturals."""
    c = counters if counters is not None else OpCounters()
    if a == 0:
        return b
    if b == 0:
        return a
    shift = 0
    while not (a | b) & 1:
        a >>= 1
        b >>= 1
        shift += 1
    c.halvings += 2 * shift
    while not a & 1:
        a >>= 1
        c.halvings += 1
    while b:
        while not b & 1:
            b >>= 1
            c.halvings += 1
        c.comparisons += 1
        if a > b:
            a, b = b, a
        b -= a
        c.subtractions += 1
    return a << shift


def fold_gcd(
    xs: Sequence[int],
    pair_fn: Callable[..., int] = euclid_pair,
) -> GcdResult:
    """Left-to-right fold of ``pair_fn`` over ``xs``.

    ``pair_fn(a, b, counters)`` must accept an ``OpCounters`` to tally its
    internal work. Each pair invocation counts as one outer iteration.
    """
    xs = as_number_list(xs)
    counters = OpCounters()
    acc = xs[0]
    for x in xs[1:]:
        acc = pair_fn(acc, x, counters)
        counters.outer_iterations += 1
    return GcdResult(acc, counters)


# ---------------------------------------------------------------------------
# reduction steps


def least_nonzero_pivot(xs: Sequence[int], counters: Optional[OpCounters] = None) -> Optional[int]:
    """Index of the smallest non-zero element (lowest index on ties), or None."""
    best = None
    comparisons = 0
    for i, x in enumerate(xs):
        if x == 0:
            continue
        if best is None:
            best = i
            continue
        comparisons += 1
        if x < xs[best]:
            best = i
    if counters is not None:
        counters.comparisons += comparisons
    return best


def _check_pivot(xs: Sequence[int], pivot: int) -> int:
    if not 0 <= pivot < len(xs):
        raise IndexError(f"pivot index {pivot} out of range for {len(xs)} elements")
    value = xs[pivot]
    if value == 0:
        raise ZeroDivisionError("pivot value is zero")
    return value


def mod_reduce_step(
    xs: Sequence[int], pivot: int, counters: Optional[OpCounters] = None
) -> NumberList:
    """Replace every element except the pivot by its residue mod the pivot.

    Zero elements are already residues and are left alone (no mod counted).
    """
    m = _check_pivot(xs, pivot)
    out = list(xs)
    mods = 0
    for i, x in enumerate(xs):
        if i != pivot and x:
            out[i] = x % m
            mods += 1
    if counters is not None:
        counters.mods += mods
    return tuple(out)


def halve_all_step(xs: Sequence[int], counters: Optional[OpCounters] = None) -> tuple[NumberList, int]:
    """Halve every element of an all-even list; returns the list and the exponent increment (1)."""
    for i, x in enumerate(xs):
        if x & 1:
            raise ValueError(f"element {i} ({x}) is odd; cannot extract a common factor of 2")
    if counters is not None:
        counters.halvings += len(xs)
    return tuple(x >> 1 for x in xs), 1


def halve_one_step(x: int) -> int:
    if x == 0:
        raise ValueError("cannot strip factors of 2 from zero")
    if x & 1:
        raise ValueError(f"{x} is odd")
    return x >> 1


def subtract_step(
    xs: Sequence[int], pivot: int, counters: Optional[OpCounters] = None
) -> NumberList:
    """Subtract the pivot from every other non-zero element.

    Zeros stay zero. Every non-zero element must be at least the pivot.
    """
    m = _check_pivot(xs, pivot)
    out = list(xs)
    subs = 0
    for i, x in enumerate(xs):
        if i == pivot or x == 0:
            continue
        if x < m:
            raise ValueError(f"element {i} ({x}) is smaller than the pivot {m}")
        out[i] = x - m
        subs += 1
    if counters is not None:
        counters.subtractions += subs
    return tuple(out)


def _count_nonzero(xs: Sequence[int]) -> int:
    return sum(1 for x in xs if x)


class _View:
    """Presentation order of a list whose pivot is always displayed first.

    The algorithms keep elements in place and track a pivot index; this
    permutation reproduces the order a slot-swapping implementation would
    print, so traces line up with the familiar hand-worked chains.
    """

    def __init__(self, n: int):
        self.order = list(range(n))

    def bring_to_front(self, index: int) -> None:
        pos = self.order.index(index)
        self.order[0], self.order[pos] = self.order[pos], self.order[0]

    def show(self, xs: Sequence[int]) -> NumberList:
        return tuple(xs[i] for i in self.order)


# ---------------------------------------------------------------------------
# n-way algorithms


def gcd_n(xs: Sequence[int], trace: bool = False) -> GcdResult:
    """GCD of n naturals by repeated reduction modulo the least non-zero element.

    Stops as soon as at most one element is non-zero: all zeros give 0, a
    single survivor is the GCD.
    """
    state = as_number_list(xs)
    counters = OpCounters()
    events: Optional[list[TraceEvent]] = [] if trace else None
    view = _View(len(state)) if trace else None

    while _count_nonzero(state) > 1:
        counters.outer_iterations += 1
        pivot = least_nonzero_pivot(state, counters)
        if events is not None:
            view.bring_to_front(pivot)
            events.append(TraceEvent("pivot-select", view.show(state), pivot=0))
        state = mod_reduce_step(state, pivot, counters)
        if events is not None:
            events.append(TraceEvent("mod-reduce", view.show(state), pivot=0))

    result = max(state)
    if events is not None:
        events.append(TraceEvent("terminate", view.show(state), result=result))
    return GcdResult(result, counters, events)


def binary_gcd_n(xs: Sequence[int], trace: bool = False) -> GcdResult:
    """GCD of n naturals using only parity tests, halving, subtraction and comparison.

    Common factors of two are extracted first (``p`` of them); then each
    outer iteration makes every non-zero element odd, picks the least
    non-zero element as pivot and subtracts it from the others. The result
    is the surviving odd element times ``2**p``.
    """
    state = as_number_list(xs)
    counters = OpCounters()
    events: Optional[list[TraceEvent]] = [] if trace else None
    view = _View(len(state)) if trace else None
    p = 0

    if not any(state):
        if events is not None:
            events.append(TraceEvent("terminate", state, p=0, result=0))
        return GcdResult(0, counters, events)

    while all(x & 1 == 0 for x in state):
        state, inc = halve_all_step(state, counters)
        p += inc
        if events is not None:
            events.append(TraceEvent("halve-all", view.show(state), p=p))

    pivot = None
    while _count_nonzero(state) > 1:
        counters.outer_iterations += 1
        if events is None:
            items = list(state)
            for i, x in enumerate(items):
                if x and not x & 1:
                    tz = (x & -x).bit_length() - 1
                    items[i] = x >> tz
                    counters.halvings += tz
            state = tuple(items)
        else:
            for i in view.order:
                while state[i] and not state[i] & 1:
                    state = state[:i] + (halve_one_step(state[i]),) + state[i + 1:]
                    counters.halvings += 1
                    events.append(TraceEvent("halve-one", view.show(state), p=p))
        pivot = least_nonzero_pivot(state, counters)
        if events is not None:
            view.bring_to_front(pivot)
            events.append(TraceEvent("pivot-select", view.show(state), p=p, pivot=0))
        state = subtract_step(state, pivot, counters)
        if events is not None:
            events.append(TraceEvent("subtract", view.show(state), p=p, pivot=0))

    core = max(state)
    result = core << p
    if events is not None:
        events.append(TraceEvent("terminate", view.show(state), p=p, result=result))
    return GcdResult(result, counters, events)


# ---------------------------------------------------------------------------
# literal slot-swapping variants
#
# These follow the published pseudocode statement by statement, physically
# swapping the pivot into slot 0, with the guards needed to make them total:
#   - a zero in slot 0 is always replaced by a non-zero element;
#   - the max/second-max pass of GCD-N also compares slot n-2 (otherwise
#     n == 2 never terminates);
#   - BINARY-GCD-N short-circuits all-zero input and never halves or
#     subtracts from zero elements.


def _swap(a: list, i: int, j: int, counters: OpCounters) -> None:
    a[i], a[j] = a[j], a[i]
    counters.swaps += 1


def _pivot_to_front(a: list, counters: OpCounters) -> None:
    for i in range(1, len(a)):
        if a[i] == 0:
            continue
        counters.comparisons += 1
        if a[0] == 0 or a[0] > a[i]:
            _swap(a, 0, i, counters)


def gcd_n_literal(xs: Sequence[int], trace: bool = False) -> GcdResult:
    """``gcd_n`` with the largest/second-largest bookkeeping and physical swaps.

    Terminates when the largest element sits in the last slot and the
    second largest (next-to-last slot) is zero.
    """
    a = list(as_number_list(xs))
    n = len(a)
    counters = OpCounters()
    events: Optional[list[TraceEvent]] = [] if trace else None

    def done(result: int) -> GcdResult:
        if events is not None:
            events.append(TraceEvent("terminate", tuple(a), result=result))
        return GcdResult(result, counters, events)

    if n == 1:
        return done(a[0])
    while any(a):
        counters.outer_iterations += 1
        _pivot_to_front(a, counters)
        if events is not None:
            events.append(TraceEvent("pivot-select", tuple(a), pivot=0))
        for i in range(1, n):
            if a[i]:
                a[i] %= a[0]
                counters.mods += 1
        if events is not None:
            events.append(TraceEvent("mod-reduce", tuple(a), pivot=0))
        for i in range(n - 2, -1, -1):
            counters.comparisons += 1
            if a[i] > a[n - 1]:
                _swap(a, i, n - 1, counters)
            if i < n - 2:
                counters.comparisons += 1
                if a[n - 1] > a[i] > a[n - 2]:
                    _swap(a, i, n - 2, counters)
        if a[n - 1] != 0 and a[n - 2] == 0:
            return done(a[n - 1])
    return done(0)


def binary_gcd_n_literal(xs: Sequence[int], trace: bool = False) -> GcdResult:
    """``binary_gcd_n`` with the pivot physically swapped into slot 0."""
    a = list(as_number_list(xs))
    n = len(a)
    counters = OpCounters()
    events: Optional[list[TraceEvent]] = [] if trace else None
    p = 0

    def done(result: int) -> GcdResult:
        if events is not None:
            events.append(TraceEvent("terminate", tuple(a), p=p, result=result))
        return GcdResult(result, counters, events)

    if not any(a):
        return done(0)
    while all(x & 1 == 0 for x in a):
        a = [x >> 1 for x in a]
        counters.halvings += n
        p += 1
        if events is not None:
            events.append(TraceEvent("halve-all", tuple(a), p=p))
    while any(a[1:]):
        counters.outer_iterations += 1
        for i in range(n):
            while a[i] and not a[i] & 1:
                a[i] >>= 1
                counters.halvings += 1
                if events is not None:
                    events.append(TraceEvent("halve-one", tuple(a), p=p))
        _pivot_to_front(a, counters)
        if events is not None:
            events.append(TraceEvent("pivot-select", tuple(a), p=p, pivot=0))
        for i in range(1, n):
            if a[i]:
                a[i] -= a[0]
                counters.subtractions += 1
        if events is not None:
            events.append(TraceEvent("subtract", tuple(a), p=p, pivot=0))
    return done(a[0] << p)


def _fold_euclid(xs: Sequence[int], trace: bool = False) -> GcdResult:
    return fold_gcd(xs, euclid_pair)


def _fold_binary(xs: Sequence[int], trace: bool = False) -> GcdResult:
    return fold_gcd(xs, binary_pair)


ALGORITHMS: dict[str, Callable[..., GcdResult]] = {
    "gcd-n": gcd_n,
    "binary-gcd-n": binary_gcd_n,
    "fold-euclid": _fold_euclid,
    "fold-binary": _fold_binary,
}
