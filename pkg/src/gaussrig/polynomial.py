"""Exact univariate polynomials over the naturals and integers, and Gaussian integers.

Polynomials are dense coefficient tuples indexed by exponent, always trimmed
so that the leading coefficient is non-zero (the zero polynomial is ``()``).
Python ints are arbitrary precision, so nothing here can overflow.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return out


def _mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


@dataclass(frozen=True)
class GaussInt:
    """A Gaussian integer ``re + im*i``."""

    re: int = 0
    im: int = 0

    def __add__(self, other: GaussInt) -> GaussInt:
        return GaussInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussInt) -> GaussInt:
        return GaussInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: GaussInt) -> GaussInt:
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def scale(self, n: int) -> GaussInt:
        return GaussInt(n * self.re, n * self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    @classmethod
    def parse(cls, text: str) -> GaussInt:
        """Inverse of ``str``: accepts ``3``, ``-2i``, ``4-1i`` and friends."""
        s = text.replace(" ", "")
        m = re.fullmatch(r"([+-]?\d+)?(?:([+-]?\d+)i)?", s)
        if not s or m is None:
            raise ValueError(f"not a Gaussian integer: {text!r}")
        re_part, im_part = m.groups()
        return cls(int(re_part or 0), int(im_part or 0))


class _PolyBase:
    """Shared behaviour of :class:`NatPoly` and :class:`IntPoly`."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield ``(exponent, coefficient)`` for the non-zero coefficients."""
        for k, c in enumerate(self.coeffs):
            if c:
                yield k, c

    def eval_at_i(self) -> GaussInt:
        # i^k cycles through 1, i, -1, -i
        acc = [0, 0, 0, 0]
        for k, c in enumerate(self.coeffs):
            acc[k % 4] += c
        return GaussInt(acc[0] - acc[2], acc[1] - acc[3])

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_poly(self.coeffs)!r})"


@dataclass(frozen=True, repr=False)
class NatPoly(_PolyBase):
    """A polynomial with natural-number coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        trimmed = _trim(self.coeffs)
        if any(c < 0 for c in trimmed):
            raise ValueError(f"negative coefficient in NatPoly: {trimmed}")
        object.__setattr__(self, "coeffs", trimmed)

    @classmethod
    def const(cls, n: int) -> NatPoly:
        return cls((n,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> NatPoly:
        return cls((0,) * k + (c,))

    @classmethod
    def parse(cls, text: str) -> NatPoly:
        return parse(text)

    def __add__(self, other: NatPoly) -> NatPoly:
        return NatPoly(_add(self.coeffs, other.coeffs))

    def __mul__(self, other: NatPoly) -> NatPoly:
        return NatPoly(_mul(self.coeffs, other.coeffs))

    def __pow__(self, n: int) -> NatPoly:
        out = NatPoly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __sub__(self, other: NatPoly) -> IntPoly:
        return sub(self, other)

    def shift(self, m: int) -> NatPoly:
        """Multiply by ``x**m``."""
        if not self.coeffs:
            return self
        return NatPoly((0,) * m + self.coeffs)

    def eval_at_two(self) -> int:
        return eval_at_two(self)

    def contains(self, other: NatPoly) -> bool:
        """Sub-multiset test on the monomial multisets."""
        return len(other) <= len(self) and all(c <= self[k] for k, c in other.terms())

    def monomial_count(self) -> int:
        return sum(self.coeffs)


@dataclass(frozen=True, repr=False)
class IntPoly(_PolyBase):
    """A polynomial with integer coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    def __add__(self, other: IntPoly) -> IntPoly:
        return IntPoly(_add(self.coeffs, other.coeffs))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        return IntPoly(_mul(self.coeffs, other.coeffs))


def add(p: NatPoly, q: NatPoly) -> NatPoly:
    return p + q


def mul(p: NatPoly, q: NatPoly) -> NatPoly:
    return p * q


def sub(p: NatPoly, q: NatPoly) -> IntPoly:
    """Signed difference ``p - q``."""
    neg = [-c for c in q.coeffs]
    return IntPoly(_add(p.coeffs, neg))


def eval_at_i(p: NatPoly | IntPoly) -> GaussInt:
    return p.eval_at_i()


def eval_at_two(p: NatPoly) -> int:
    # Horner on shifts; exact for any degree
    acc = 0
    for c in reversed(p.coeffs):
        acc = (acc << 1) + c
    return acc


def divide_by_one_plus_x_squared(d: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Divide by the monic ``1 + x^2``; the remainder has degree at most 1."""
    rem = list(d.coeffs)
    if len(rem) <= 2:
        return IntPoly(), IntPoly(rem)
    quot = [0] * (len(rem) - 2)
    for k in range(len(rem) - 1, 1, -1):
        c = rem[k]
        if c:
            quot[k - 2] = c
            rem[k] = 0
            rem[k - 2] -= c
    return IntPoly(quot), IntPoly(rem[:2])


def pos_neg_split(w: IntPoly) -> tuple[NatPoly, NatPoly]:
    """Split ``w`` as ``w1 - w2`` with ``w1``, ``w2`` natural and disjointly supported."""
    return (
        NatPoly(tuple(max(c, 0) for c in w.coeffs)),
        NatPoly(tuple(max(-c, 0) for c in w.coeffs)),
    )


class PolyParseError(ValueError):
    """Malformed polynomial text; ``pos`` is the 0-based offset of the bad token."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        self.token = _token_at(text, pos)
        super().__init__(f"{message} at position {pos} (token {self.token!r}) in {text!r}")


def _token_at(text: str, pos: int) -> str:
    if pos >= len(text):
        return "<end>"
    m = re.match(r"\d+|\S", text[pos:])
    return m.group(0) if m else text[pos]


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            m = re.match(r"\d+", text[pos:])
            tokens.append(("nat", m.group(0), pos))
            pos += m.end()
        elif ch in "+x^":
            tokens.append((ch, ch, pos))
            pos += 1
        elif ch == "-":
            raise PolyParseError("negative coefficient not allowed", text, pos)
        else:
            raise PolyParseError("unexpected character", text, pos)
    tokens.append(("end", "", len(text)))
    return tokens


def parse(text: str) -> NatPoly:
    """Parse ``term ('+' term)*`` where ``term := nat | nat? 'x' ('^' nat)?``."""
    tokens = _tokenize(text)
    i = 0
    coeffs: dict[int, int] = {}

    def expect(kind: str) -> tuple[str, str, int]:
        nonlocal i
        tok = tokens[i]
        if tok[0] != kind:
            what = "end of input" if kind == "end" else repr(kind if kind != "nat" else "number")
            raise PolyParseError(f"expected {what}", text, tok[2])
        i += 1
        return tok

    while True:
        kind, value, pos = tokens[i]
        coeff = 1
        if kind == "nat":
            coeff = int(value)
            i += 1
            kind = tokens[i][0]
            if kind != "x":
                coeffs[0] = coeffs.get(0, 0) + coeff
        elif kind != "x":
            raise PolyParseError("expected a term", text, pos)
        if kind == "x":
            i += 1
            exp = 1
            if tokens[i][0] == "^":
                i += 1
                exp = int(expect("nat")[1])
            coeffs[exp] = coeffs.get(exp, 0) + coeff
        if tokens[i][0] == "+":
            i += 1
            continue
        expect("end")
        break

    dense = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        dense[k] += c
    return NatPoly(dense)


def format_poly(coeffs: Sequence[int]) -> str:
    """Canonical ascending-exponent printing, e.g. ``2 + x^2`` or ``x - 3x^4``."""
    parts: list[str] = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "x" if k == 1 else f"x^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def format(p: NatPoly | IntPoly) -> str:  # noqa: A001 - mirrors parse
    return format_poly(p.coeffs)
