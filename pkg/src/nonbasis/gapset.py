"""Strictly increasing integer sequences with certified gap growth.

Every generator here produces a strictly increasing sequence of nonnegative
integers whose consecutive gaps are eventually monotone increasing, with a
closed form for the first index where the gap exceeds a given C.  That closed
form is what turns "Y has infinite gaps" into a finite, checkable statement:
all pairs at distance <= C live below a computable radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import MalformedSpec, UncertifiableTail


class GapGenerator:
    """Marker base class for gap sequence generators."""

    __slots__ = ()


@dataclass(frozen=True)
class Geometric(GapGenerator):
    """y_i = scale * base**i for i >= 0."""

    base: int
    scale: int = 1

    def __post_init__(self):
        if self.base < 2:
            raise MalformedSpec(f"geometric base must be >= 2, got {self.base}")
        if self.scale < 1:
            raise MalformedSpec(f"geometric scale must be >= 1, got {self.scale}")


@dataclass(frozen=True)
class Triangular(GapGenerator):
    """0, 1, 3, 6, 10, ...: consecutive gaps 1, 2, 3, ..."""


@dataclass(frozen=True)
class Factorial(GapGenerator):
    """1, 2, 6, 24, ...: the factorials i! for i >= 1."""


@dataclass(frozen=True)
class CustomPrefixTail(GapGenerator):
    """A finite sorted prefix followed by one of the certified families.

    Tail elements <= max(prefix) are dropped so the merged sequence stays
    strictly increasing.  The tail must itself have a certified gap bound,
    i.e. nesting custom prefixes is rejected.
    """

    prefix: tuple[int, ...]
    tail: GapGenerator

    def __post_init__(self):
        if not self.prefix:
            raise MalformedSpec("custom prefix must be non-empty")
        if any(b <= a for a, b in zip(self.prefix, self.prefix[1:])):
            raise MalformedSpec("custom prefix must be strictly increasing")
        if self.prefix[0] < 0:
            raise MalformedSpec("custom prefix must be nonnegative")
        if isinstance(self.tail, CustomPrefixTail) or not isinstance(self.tail, GapGenerator):
            raise UncertifiableTail("custom tail must be a certified closed-form family")


def values(gen: GapGenerator) -> Iterator[int]:
    """Yield the sequence in increasing order, forever."""
    if isinstance(gen, Geometric):
        v = gen.scale
        while True:
            yield v
            v *= gen.base
    elif isinstance(gen, Triangular):
        v, step = 0, 1
        while True:
            yield v
            v += step
            step += 1
    elif isinstance(gen, Factorial):
        v, i = 1, 2
        while True:
            yield v
            v *= i
            i += 1
    elif isinstance(gen, CustomPrefixTail):
        yield from gen.prefix
        top = gen.prefix[-1]
        for v in values(gen.tail):
            if v > top:
                yield v
    else:
        raise MalformedSpec(f"unknown generator {gen!r}")


def is_member(gen: GapGenerator, n: int) -> bool:
    """Exact membership test; closed form, no unbounded iteration."""
    if isinstance(gen, Geometric):
        if n < gen.scale or n % gen.scale != 0:
            return False
        v = n // gen.scale
        while v % gen.base == 0:
            v //= gen.base
        return v == 1
    if isinstance(gen, Triangular):
        if n < 0:
            return False
        k = (math.isqrt(8 * n + 1) - 1) // 2
        return k * (k + 1) // 2 == n
    if isinstance(gen, Factorial):
        if n < 1:
            return False
        f, i = 1, 2
        while f < n:
            f *= i
            i += 1
        return f == n
    if isinstance(gen, CustomPrefixTail):
        if n <= gen.prefix[-1]:
            return n in gen.prefix
        return is_member(gen.tail, n)
    raise MalformedSpec(f"unknown generator {gen!r}")


def elements_in(gen: GapGenerator, window) -> list[int]:
    """Sequence elements inside [window.lo, window.hi], ascending."""
    out = []
    for v in values(gen):
        if v > window.hi:
            break
        if v >= window.lo:
            out.append(v)
    return out


def indexed_elements_in(gen: GapGenerator, window) -> list[tuple[int, int]]:
    """(index, value) pairs for the elements inside the window."""
    out = []
    for i, v in enumerate(values(gen)):
        if v > window.hi:
            break
        if v >= window.lo:
            out.append((i, v))
    return out


def close_pairs(gen: GapGenerator, c: int, hi: int) -> list[tuple[int, int]]:
    """All pairs y < y' <= hi with y' - y <= c, lexicographically sorted."""
    if c < 1:
        raise MalformedSpec(f"close_pairs needs C >= 1, got {c}")
    elems = []
    for v in values(gen):
        if v > hi:
            break
        elems.append(v)
    pairs = []
    for i, y in enumerate(elems):
        for yp in elems[i + 1 :]:
            if yp - y > c:
                break
            pairs.append((y, yp))
    return pairs


def _monotone_gap_radius(gen: GapGenerator, c: int) -> int:
    # Walk the sequence until the (monotone increasing) consecutive gap
    # exceeds c; every pair at distance <= c lies at or below that element.
    it = values(gen)
    prev = next(it)
    for v in it:
        if v - prev > c:
            return prev
        prev = v
    raise AssertionError("unreachable: certified sequences have unbounded gaps")


def gap_radius(gen: GapGenerator, c: int) -> int:
    """Certified R such that every pair with |y - y'| <= c has y, y' <= R.

    For the closed-form families the consecutive gaps are monotone
    increasing, so R is the element just before the first gap > c.  For a
    custom prefix the pairs below max(prefix) + c are enumerated directly.
    """
    if c < 1:
        raise MalformedSpec(f"gap_radius needs C >= 1, got {c}")
    if isinstance(gen, (Geometric, Triangular, Factorial)):
        return _monotone_gap_radius(gen, c)
    if isinstance(gen, CustomPrefixTail):
        boundary = gen.prefix[-1] + c
        tail_r = gap_radius(gen.tail, c)
        return max(boundary, tail_r)
    raise UncertifiableTail(f"no certified gap bound for {gen!r}")
