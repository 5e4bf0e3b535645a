"""Textual grammar for set specs and gap generators.

The canonical forms are round-trippable: parse(format(x)) == x.

    spec     := 'empty'
              | 'single:' INT
              | 'ints'                      all of Z
              | 'nonneg'                    all of N0
              | 'class(' INT ',' INT ')'    {m*z + r : z in Z}
              | 'classnn(' INT ',' INT ')'  {m*z + r : z >= 0}
              | 'gap(' genbody ')'
              | 'union(' spec {',' spec} ')'
              | 'diff(' spec ',' spec ')'
              | 'affine(' INT ',' INT ',' spec ')'   d*spec + c, args (d, c, spec)
    genbody  := 'geometric' ',' INT ',' INT
              | 'triangular'
              | 'factorial'
              | 'custom' ',' '[' INT {',' INT} ']' ',' 'tail=' genbody

Whitespace between tokens is ignored on input and never emitted on output.
"""

from __future__ import annotations

from . import gapset
from .errors import MalformedSpec
from .intset import (
    Diff,
    Empty,
    GapTail,
    ModClass,
    ModClassNonneg,
    SetSpec,
    ShiftScale,
    Singleton,
    Union,
    union_of,
)


def format_generator(gen: gapset.GapGenerator) -> str:
    if isinstance(gen, gapset.Geometric):
        return f"geometric,{gen.base},{gen.scale}"
    if isinstance(gen, gapset.Triangular):
        return "triangular"
    if isinstance(gen, gapset.Factorial):
        return "factorial"
    if isinstance(gen, gapset.CustomPrefixTail):
        inner = ",".join(str(v) for v in gen.prefix)
        return f"custom,[{inner}],tail={format_generator(gen.tail)}"
    raise MalformedSpec(f"unknown generator {gen!r}")


def format_spec(spec: SetSpec) -> str:
    if isinstance(spec, Empty):
        return "empty"
    if isinstance(spec, Singleton):
        return f"single:{spec.a}"
    if isinstance(spec, ModClass):
        if spec.m == 1:
            return "ints"
        return f"class({spec.m},{spec.r})"
    if isinstance(spec, ModClassNonneg):
        if spec.m == 1 and spec.r == 0:
            return "nonneg"
        return f"classnn({spec.m},{spec.r})"
    if isinstance(spec, GapTail):
        return f"gap({format_generator(spec.gen)})"
    if isinstance(spec, Union):
        return "union(" + ",".join(format_spec(p) for p in spec.parts) + ")"
    if isinstance(spec, Diff):
        return f"diff({format_spec(spec.keep)},{format_spec(spec.drop)})"
    if isinstance(spec, ShiftScale):
        return f"affine({spec.d},{spec.c},{format_spec(spec.inner)})"
    raise MalformedSpec(f"unknown spec node {spec!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> MalformedSpec:
        return MalformedSpec(f"{msg} at position {self.pos} in {self.text!r}")

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def ident(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalpha() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a name")
        return self.text[start : self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or not self.text[start : self.pos].lstrip("+-"):
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def int_list(self) -> tuple[int, ...]:
        self.expect("[")
        vals = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            vals.append(self.integer())
        self.expect("]")
        return tuple(vals)

    def generator(self) -> gapset.GapGenerator:
        name = self.ident()
        if name == "geometric":
            self.expect(",")
            base = self.integer()
            self.expect(",")
            scale = self.integer()
            return gapset.Geometric(base, scale)
        if name == "triangular":
            return gapset.Triangular()
        if name == "factorial":
            return gapset.Factorial()
        if name == "custom":
            self.expect(",")
            prefix = self.int_list()
            self.expect(",")
            key = self.ident()
            if key != "tail":
                raise self.error("expected tail=")
            self.expect("=")
            tail = self.generator()
            return gapset.CustomPrefixTail(prefix, tail)
        raise self.error(f"unknown generator family {name!r}")

    def spec(self) -> SetSpec:
        name = self.ident()
        if name == "empty":
            return Empty()
        if name == "ints":
            return ModClass(1, 0)
        if name == "nonneg":
            return ModClassNonneg(1, 0)
        if name == "single":
            self.expect(":")
            return Singleton(self.integer())
        if name == "class":
            self.expect("(")
            m = self.integer()
            self.expect(",")
            r = self.integer()
            self.expect(")")
            return ModClass(m, r)
        if name == "classnn":
            self.expect("(")
            m = self.integer()
            self.expect(",")
            r = self.integer()
            self.expect(")")
            return ModClassNonneg(m, r)
        if name == "gap":
            self.expect("(")
            gen = self.generator()
            self.expect(")")
            return GapTail(gen)
        if name == "union":
            self.expect("(")
            parts = [self.spec()]
            while self.peek() == ",":
                self.pos += 1
                parts.append(self.spec())
            self.expect(")")
            return union_of(*parts)
        if name == "diff":
            self.expect("(")
            keep = self.spec()
            self.expect(",")
            drop = self.spec()
            self.expect(")")
            return Diff(keep, drop)
        if name == "affine":
            self.expect("(")
            d = self.integer()
            self.expect(",")
            c = self.integer()
            self.expect(",")
            inner = self.spec()
            self.expect(")")
            return ShiftScale(inner, c, d)
        raise self.error(f"unknown spec constructor {name!r}")


def parse_spec(text: str) -> SetSpec:
    """Parse the spec grammar; raises MalformedSpec on any syntax error."""
    p = _Parser(text)
    spec = p.spec()
    p.skip_ws()
    if p.pos != len(text):
        raise p.error("trailing input")
    return spec


def parse_generator(text: str) -> gapset.GapGenerator:
    """Parse a generator literal; the gap(...) wrapper is optional."""
    stripped = text.strip()
    if stripped.startswith("gap(") and stripped.endswith(")"):
        stripped = stripped[4:-1]
    p = _Parser(stripped)
    gen = p.generator()
    p.skip_ws()
    if p.pos != len(stripped):
        raise p.error("trailing input")
    return gen
