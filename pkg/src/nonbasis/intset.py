"""Algebraic descriptions of integer sets and exact windowed bitsets.

A SetSpec is a small algebraic tree (residue classes, singletons, gap
sequences, union/difference, affine images) whose membership is decidable
pointwise.  A DenseSet is the exact materialization of such a set on a
finite window [lo, hi], stored as one membership bit per integer inside a
single Python int.  All values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gapset
from .errors import MalformedSpec, WindowTooLarge

WINDOW_CAP = 1 << 26


@dataclass(frozen=True)
class Window:
    """Inclusive integer interval [lo, hi]; the finite viewport onto Z."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise MalformedSpec(f"window {self.lo}:{self.hi} has lo > hi")
        if self.hi - self.lo + 1 > WINDOW_CAP:
            raise WindowTooLarge(
                f"window width {self.hi - self.lo + 1} exceeds cap {WINDOW_CAP}"
            )

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1

    def contains(self, n: int) -> bool:
        return self.lo <= n <= self.hi

    def index(self, n: int) -> int:
        return n - self.lo


class SetSpec:
    """Marker base class for set descriptions."""

    __slots__ = ()


@dataclass(frozen=True)
class Empty(SetSpec):
    pass


@dataclass(frozen=True)
class Singleton(SetSpec):
    a: int


@dataclass(frozen=True)
class ModClass(SetSpec):
    """{m*z + r : z in Z}; r is normalized into [0, m)."""

    m: int
    r: int

    def __post_init__(self):
        if self.m < 1:
            raise MalformedSpec(f"modulus must be >= 1, got {self.m}")
        object.__setattr__(self, "r", self.r % self.m)


@dataclass(frozen=True)
class ModClassNonneg(SetSpec):
    """{m*z + r : z >= 0}.

    r is the smallest element and is deliberately not reduced mod m:
    reducing it would change the set.
    """

    m: int
    r: int

    def __post_init__(self):
        if self.m < 1:
            raise MalformedSpec(f"modulus must be >= 1, got {self.m}")
        if self.r < 0:
            raise MalformedSpec(f"nonneg class start must be >= 0, got {self.r}")


@dataclass(frozen=True)
class GapTail(SetSpec):
    """The set of values of a gap generator."""

    gen: gapset.GapGenerator


@dataclass(frozen=True)
class Union(SetSpec):
    parts: tuple[SetSpec, ...]


@dataclass(frozen=True)
class Diff(SetSpec):
    keep: SetSpec
    drop: SetSpec


@dataclass(frozen=True)
class ShiftScale(SetSpec):
    """{d*x + c : x in inner}; the dilation-plus-shift image."""

    inner: SetSpec
    c: int
    d: int

    def __post_init__(self):
        if self.d == 0:
            raise MalformedSpec("shift-scale with d = 0 is rejected")


def union_of(*parts: SetSpec) -> SetSpec:
    """Union with nested unions flattened and empties dropped."""
    flat: list[SetSpec] = []
    for p in parts:
        if isinstance(p, Union):
            flat.extend(p.parts)
        elif not isinstance(p, Empty):
            flat.append(p)
    if not flat:
        return Empty()
    if len(flat) == 1:
        return flat[0]
    return Union(tuple(flat))


def member(spec: SetSpec, n: int) -> bool:
    """Exact membership of n in the described set."""
    if isinstance(spec, Empty):
        return False
    if isinstance(spec, Singleton):
        return n == spec.a
    if isinstance(spec, ModClass):
        return (n - spec.r) % spec.m == 0
    if isinstance(spec, ModClassNonneg):
        return n >= spec.r and (n - spec.r) % spec.m == 0
    if isinstance(spec, GapTail):
        return gapset.is_member(spec.gen, n)
    if isinstance(spec, Union):
        return any(member(p, n) for p in spec.parts)
    if isinstance(spec, Diff):
        return member(spec.keep, n) and not member(spec.drop, n)
    if isinstance(spec, ShiftScale):
        q, rem = divmod(n - spec.c, spec.d)
        return rem == 0 and member(spec.inner, q)
    raise MalformedSpec(f"unknown spec node {spec!r}")


_BYTE_OFFSETS = [tuple(i for i in range(8) if (b >> i) & 1) for b in range(256)]


@dataclass(frozen=True)
class DenseSet:
    """Exact bitset on a window: bit i set iff window.lo + i is a member."""

    window: Window
    bits: int

    def member(self, n: int) -> bool:
        return self.window.contains(n) and (self.bits >> (n - self.window.lo)) & 1 == 1

    def __contains__(self, n: int) -> bool:
        return self.member(n)

    def popcount(self) -> int:
        return self.bits.bit_count()

    def members(self) -> list[int]:
        """Ascending list of all members (byte-walk, fast on dense sets)."""
        w = self.window
        raw = self.bits.to_bytes((w.width + 7) // 8, "little")
        out = []
        for bi, byte in enumerate(raw):
            if byte:
                base = w.lo + 8 * bi
                for off in _BYTE_OFFSETS[byte]:
                    out.append(base + off)
        return out

    def complement(self) -> "DenseSet":
        mask = (1 << self.window.width) - 1
        return DenseSet(self.window, ~self.bits & mask)

    def restrict(self, window: Window) -> "DenseSet":
        """This set intersected with a window contained in the current one."""
        off = window.lo - self.window.lo
        if off < 0 or window.hi > self.window.hi:
            raise MalformedSpec("restrict window must be inside the dense window")
        return DenseSet(window, (self.bits >> off) & ((1 << window.width) - 1))


def dense_from_iter(values, window: Window) -> DenseSet:
    bits = 0
    for v in values:
        if window.contains(v):
            bits |= 1 << (v - window.lo)
    return DenseSet(window, bits)


def dilate_or(bits: int, gap: int, count: int, maxbits: int) -> int:
    """OR of `bits` shifted by 0, gap, 2*gap, ..., (count-1)*gap.

    Doubling on the covered shift set keeps this O(log count) big-int ops.
    Everything at or above bit `maxbits` is truncated, which is safe while
    dilating because bits only move upward.
    """
    mask = (1 << maxbits) - 1
    r = bits & mask
    if count <= 1:
        return r
    span = 1
    while span < count:
        step = min(span, count - span)
        r = (r | (r << (gap * step))) & mask
        span += step
    return r


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _ap_bits(first: int, stride: int, last: int, w: Window) -> int:
    """Bits of the progression first, first+stride, ... up to `last`, in w."""
    if first > w.hi or first > last:
        return 0
    if first < w.lo:
        k = _ceil_div(w.lo - first, stride)
        first += k * stride
    top = min(last, w.hi)
    if first > top:
        return 0
    count = (top - first) // stride + 1
    return dilate_or(1 << (first - w.lo), stride, count, w.width)


def _affine_bits(spec: SetSpec, c: int, d: int, w: Window) -> int:
    """Bits of (d*spec + c) intersected with w, relative to w.lo.

    Affine maps are pushed through the tree instead of materializing
    preimages, so residue classes stay O(log width) and gap sets stay
    O(elements in window).  d is nonzero; injectivity makes the image of a
    difference the difference of the images.
    """
    if isinstance(spec, Empty):
        return 0
    if isinstance(spec, Singleton):
        v = d * spec.a + c
        return (1 << (v - w.lo)) if w.contains(v) else 0
    if isinstance(spec, ModClass):
        g = abs(d) * spec.m
        v0 = d * spec.r + c
        first = w.lo + ((v0 - w.lo) % g)
        return _ap_bits(first, g, w.hi, w)
    if isinstance(spec, ModClassNonneg):
        g = abs(d) * spec.m
        v0 = d * spec.r + c
        if d > 0:
            return _ap_bits(v0, g, w.hi, w)
        # image descends from v0; keep the in-window part of {v <= v0, v = v0 mod g}
        first = w.lo + ((v0 - w.lo) % g)
        return _ap_bits(first, g, v0, w)
    if isinstance(spec, GapTail):
        if d > 0:
            ylo, yhi = _ceil_div(w.lo - c, d), (w.hi - c) // d
        else:
            ylo, yhi = _ceil_div(w.hi - c, d), (w.lo - c) // d
        if ylo > yhi:
            return 0
        bits = 0
        for y in gapset.elements_in(spec.gen, Window(ylo, yhi)):
            bits |= 1 << (d * y + c - w.lo)
        return bits
    if isinstance(spec, Union):
        bits = 0
        for p in spec.parts:
            bits |= _affine_bits(p, c, d, w)
        return bits
    if isinstance(spec, Diff):
        mask = (1 << w.width) - 1
        return _affine_bits(spec.keep, c, d, w) & ~_affine_bits(spec.drop, c, d, w) & mask
    if isinstance(spec, ShiftScale):
        return _affine_bits(spec.inner, d * spec.c + c, d * spec.d, w)
    raise MalformedSpec(f"unknown spec node {spec!r}")


def materialize(spec: SetSpec, window: Window) -> DenseSet:
    """Exact membership bits of the described set on the window."""
    return DenseSet(window, _affine_bits(spec, 0, 1, window))


def enumerate_dense(dense: DenseSet) -> list[int]:
    """Ascending, duplicate-free list of the set bits."""
    return dense.members()


def complement_in(dense: DenseSet) -> DenseSet:
    """Bitwise negation within the same window."""
    return dense.complement()
