"""Constructors and validation for the {s} u {h*x + t : x in X} families.

Four shapes: the full families over Z and N0 (X is the whole carrier) and
the gapped families where X is the carrier minus an infinite set Y with
certified gaps.  Gapped families require gcd(h, s - t) = 1; with that, s
never lands in {h*x + t}, so the defining union is disjoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import gapset, intset
from .errors import DomainConstraint, GcdViolation

DOMAIN_Z = "z"
DOMAIN_N0 = "n0"


@dataclass(frozen=True)
class Params:
    h: int
    s: int
    t: int
    domain: str

    def __post_init__(self):
        if self.h < 2:
            raise DomainConstraint(f"h must be >= 2, got {self.h}")
        if self.domain not in (DOMAIN_Z, DOMAIN_N0):
            raise DomainConstraint(f"domain must be 'z' or 'n0', got {self.domain!r}")
        if self.domain == DOMAIN_N0 and (self.s < 0 or self.t < 0):
            raise DomainConstraint(
                f"domain n0 needs nonnegative s and t, got s={self.s} t={self.t}"
            )


@dataclass(frozen=True)
class GcdCase:
    d: int
    tag: str  # "nonbasis" when d >= 2, else "basis"


def gcd_case(h: int, s: int, t: int) -> GcdCase:
    """The dichotomy pivot d = gcd(h, s - t), with gcd(h, 0) = h."""
    d = math.gcd(h, abs(s - t))
    return GcdCase(d, "nonbasis" if d >= 2 else "basis")


@dataclass(frozen=True)
class Family:
    """A realized family: parameters, optional gap set Y, and the set spec."""

    params: Params
    y: gapset.GapGenerator | None
    spec: intset.SetSpec

    @property
    def h(self) -> int:
        return self.params.h

    @property
    def s(self) -> int:
        return self.params.s

    @property
    def t(self) -> int:
        return self.params.t

    @property
    def domain(self) -> str:
        return self.params.domain

    @property
    def is_gapped(self) -> bool:
        return self.y is not None

    def carrier_spec(self) -> intset.SetSpec:
        if self.domain == DOMAIN_Z:
            return intset.ModClass(1, 0)
        return intset.ModClassNonneg(1, 0)

    def x_spec(self) -> intset.SetSpec:
        """The spec for X = carrier minus Y (gapped families only)."""
        if self.y is None:
            return self.carrier_spec()
        return intset.Diff(self.carrier_spec(), intset.GapTail(self.y))

    def x_contains(self, x: int) -> bool:
        if self.domain == DOMAIN_N0 and x < 0:
            return False
        if self.y is None:
            return True
        return not gapset.is_member(self.y, x)

    def y_contains(self, x: int) -> bool:
        return self.y is not None and gapset.is_member(self.y, x)

    def a_contains(self, n: int) -> bool:
        return intset.member(self.spec, n)

    def shifted_y_value(self, y: int) -> int:
        """The structured complement element produced by y in Y."""
        return (self.h - 1) * self.s + self.h * y + self.t


def build_full(params: Params) -> Family:
    """A = {s} u {h*z + t : z in carrier}."""
    if params.domain == DOMAIN_Z:
        tail: intset.SetSpec = intset.ModClass(params.h, params.t)
    else:
        tail = intset.ModClassNonneg(params.h, params.t)
    spec = intset.union_of(intset.Singleton(params.s), tail)
    return Family(params, None, spec)


def build_gapped(params: Params, y: gapset.GapGenerator) -> Family:
    """A = {s} u {h*x + t : x in carrier minus Y}; needs gcd(h, s - t) = 1."""
    case = gcd_case(params.h, params.s, params.t)
    if case.d != 1:
        raise GcdViolation(
            f"gcd({params.h}, {params.s}-{params.t}) = {case.d}; gapped families need 1"
        )
    if params.domain == DOMAIN_Z:
        carrier: intset.SetSpec = intset.ModClass(1, 0)
    else:
        carrier = intset.ModClassNonneg(1, 0)
    xspec = intset.Diff(carrier, intset.GapTail(y))
    spec = intset.union_of(
        intset.Singleton(params.s),
        intset.ShiftScale(xspec, params.t, params.h),
    )
    return Family(params, y, spec)
