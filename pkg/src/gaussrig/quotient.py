"""Classes of N[x]/(x ~ 1 + x + x^2) as elements of N ⊎ Z[i].

A constant polynomial ``n`` is equivalent only to itself, so its class is
``Nat(n)``.  Every non-constant polynomial is classified by its value at the
imaginary unit, giving ``Gauss(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .polynomial import GaussInt, NatPoly


@dataclass(frozen=True)
class Nat:
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"Nat requires a natural number, got {self.n}")

    def __str__(self) -> str:
        return f"nat:{self.n}"


@dataclass(frozen=True)
class Gauss:
    g: GaussInt

    def __str__(self) -> str:
        im = self.g.im
        sign = "+" if im >= 0 else "-"
        return f"gauss:{self.g.re}{sign}{abs(im)}i"


RigElement = Union[Nat, Gauss]

neg_one = Gauss(GaussInt(-1, 0))
zero_bar = Gauss(GaussInt(0, 0))
one_bar = Gauss(GaussInt(1, 0))

ZERO_BAR_POLY = NatPoly((1, 0, 1))


def parse_element(text: str) -> RigElement:
    """Inverse of ``str`` on rig elements (``nat:3``, ``gauss:-1+2i``)."""
    tag, _, body = text.strip().partition(":")
    if tag == "nat":
        return Nat(int(body))
    if tag == "gauss" and body.endswith("i"):
        return Gauss(GaussInt.parse(body))
    raise ValueError(f"not a rig element: {text!r}")


def canon(p: NatPoly) -> RigElement:
    if p.is_constant():
        return Nat(p[0])
    return Gauss(p.eval_at_i())


def decide_equal(p: NatPoly, q: NatPoly) -> bool:
    """Decide ``p ~ q`` in the quotient rig."""
    return canon(p) == canon(q)


def rig_add(a: RigElement, b: RigElement) -> RigElement:
    if isinstance(a, Nat) and isinstance(b, Nat):
        return Nat(a.n + b.n)
    if isinstance(a, Nat):
        a, b = b, a
    if isinstance(b, Nat):
        # naturals act on the real part
        return Gauss(a.g + GaussInt(b.n, 0))
    return Gauss(a.g + b.g)


def rig_mul(a: RigElement, b: RigElement) -> RigElement:
    if isinstance(a, Nat) and isinstance(b, Nat):
        return Nat(a.n * b.n)
    if isinstance(a, Nat):
        a, b = b, a
    if isinstance(b, Nat):
        # l copies of a non-constant; the empty sum is the rig zero
        if b.n == 0:
            return Nat(0)
        return Gauss(a.g.scale(b.n))
    return Gauss(a.g * b.g)


def ring_neg(a: RigElement) -> RigElement:
    if not isinstance(a, Gauss):
        raise ValueError(f"constants have no negatives in the rig: {a}")
    return rig_mul(neg_one, a)


def embed_gauss(g: GaussInt) -> NatPoly:
    """The rewrite normal form representing ``g`` among the non-constants."""
    m, n = g.re, g.im
    if n == 0 and m >= 0:
        return NatPoly((m + 1, 0, 1))
    if m >= 0:
        if n > 0:
            return NatPoly((m, n))
        return NatPoly((m, 0, 0, -n))
    if n >= 0:
        return NatPoly((0, n, -m))
    return NatPoly((0, 0, -m, -n))
