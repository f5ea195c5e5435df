"""Motzkin trees and the bijections compiled from derivations.

Tree size counts edges (a unary node adds one, a binary node two), so the
number of trees of size ``n`` is the Motzkin number ``M_n``.

A value of the type ``sum_k c_k x^k`` is a choice of summand ``(k, copy)``
with ``copy < c_k`` together with a ``k``-tuple of trees.  The generator
isomorphism ``X = 1 + X + X^2`` is the constructor trichotomy ``e | s | m``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .derivation import Derivation, Dir, Step, apply_step, check
from .polynomial import NatPoly


@dataclass(frozen=True)
class Leaf:
    def __str__(self) -> str:
        return "e"


@dataclass(frozen=True)
class Unary:
    child: Tree

    def __str__(self) -> str:
        return f"s({self.child})"


@dataclass(frozen=True)
class Binary:
    left: Tree
    right: Tree

    def __str__(self) -> str:
        return f"m({self.left},{self.right})"


Tree = Union[Leaf, Unary, Binary]

E = Leaf()


def s(t: Tree) -> Unary:
    return Unary(t)


def m(l: Tree, r: Tree) -> Binary:
    return Binary(l, r)


def size(t: Tree) -> int:
    match t:
        case Leaf():
            return 0
        case Unary(c):
            return 1 + size(c)
        case Binary(l, r):
            return 2 + size(l) + size(r)
    raise TypeError(f"not a Motzkin tree: {t!r}")


class TreeParseError(ValueError):
    pass


def parse_tree(text: str) -> Tree:
    src = re.sub(r"\s+", "", text)
    pos = 0

    def node() -> Tree:
        nonlocal pos
        if src.startswith("e", pos):
            pos += 1
            return E
        for tag in ("s(", "m("):
            if src.startswith(tag, pos):
                pos += 2
                first = node()
                if tag == "s(":
                    expect(")")
                    return Unary(first)
                expect(",")
                second = node()
                expect(")")
                return Binary(first, second)
        raise TreeParseError(f"unexpected token {src[pos:pos + 1] or '<end>'!r} at {pos} in {text!r}")

    def expect(ch: str) -> None:
        nonlocal pos
        if not src.startswith(ch, pos):
            raise TreeParseError(f"expected {ch!r} at {pos} in {text!r}, got {src[pos:pos + 1] or '<end>'!r}")
        pos += 1

    tree = node()
    if pos != len(src):
        raise TreeParseError(f"trailing input {src[pos:]!r} in {text!r}")
    return tree


@lru_cache(maxsize=None)
def trees_of_size(n: int) -> tuple[Tree, ...]:
    """All trees with exactly ``n`` edges, Leaf < Unary < Binary."""
    if n == 0:
        return (E,)
    out: list[Tree] = [Unary(t) for t in trees_of_size(n - 1)]
    for k in range(n - 1):
        for l in trees_of_size(k):
            for r in trees_of_size(n - 2 - k):
                out.append(Binary(l, r))
    return tuple(sorted(out, key=preorder))


def preorder(t: Tree) -> tuple[int, ...]:
    """Constructor tags in preorder (e=0, s=1, m=2); sorting by it is the
    lexicographic tree order."""
    out = []
    stack = [t]
    while stack:
        node = stack.pop()
        match node:
            case Leaf():
                out.append(0)
            case Unary(c):
                out.append(1)
                stack.append(c)
            case Binary(l, r):
                out.append(2)
                stack += [r, l]
    return tuple(out)


def enumerate_trees(max_size: int) -> Iterator[Tree]:
    for n in range(max_size + 1):
        yield from trees_of_size(n)


def motzkin_numbers(n: int) -> list[int]:
    """``M_0 .. M_n`` by the recurrence ``M_{k+1} = M_k + sum_j M_j M_{k-1-j}``."""
    ms = [1]
    for k in range(n):
        ms.append(ms[k] + sum(ms[j] * ms[k - 1 - j] for j in range(k)))
    return ms


@lru_cache(maxsize=None)
def tuples_of_size(k: int, total: int) -> tuple[tuple[Tree, ...], ...]:
    """All ``k``-tuples of trees whose sizes sum to exactly ``total``."""
    if k == 0:
        return ((),) if total == 0 else ()
    out = []
    for n in range(total + 1):
        for head in trees_of_size(n):
            for rest in tuples_of_size(k - 1, total - n):
                out.append((head,) + rest)
    return tuple(out)


@dataclass(frozen=True)
class TypeValue:
    type_of: NatPoly
    exponent: int
    copy: int
    trees: tuple[Tree, ...]

    def __post_init__(self) -> None:
        if self.copy >= self.type_of[self.exponent] or self.copy < 0:
            raise ValueError(f"no summand {self.exponent}#{self.copy} in {self.type_of}")
        if len(self.trees) != self.exponent:
            raise ValueError(f"summand x^{self.exponent} needs {self.exponent} trees, got {len(self.trees)}")

    def __str__(self) -> str:
        return f"{self.exponent}#{self.copy}:[{','.join(map(str, self.trees))}]"

    @property
    def total_size(self) -> int:
        return sum(size(t) for t in self.trees)


def parse_value(text: str, type_of: NatPoly) -> TypeValue:
    """Parse ``<exponent>#<copy>:[<tree>,...]`` as a value of ``type_of``."""
    mt = re.fullmatch(r"\s*(\d+)#(\d+):\[(.*)\]\s*", text)
    if mt is None:
        raise TreeParseError(f"malformed value {text!r}")
    body = mt.group(3).strip()
    trees = tuple(parse_tree(part) for part in _split_top(body)) if body else ()
    return TypeValue(type_of, int(mt.group(1)), int(mt.group(2)), trees)


def _split_top(body: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    parts.append(body[start:])
    return parts


def values(p: NatPoly, max_total: int) -> Iterator[TypeValue]:
    """Every value of type ``p`` with total tree size <= ``max_total``."""
    for k, c in p.terms():
        for copy in range(c):
            for total in range(max_total + 1):
                for trees in tuples_of_size(k, total):
                    yield TypeValue(p, k, copy, trees)


def _route(source: NatPoly, s: Step, k: int, c: int, trees: tuple[Tree, ...]):
    piv = s.pivot
    if s.dir is Dir.UNFOLD:
        if k == piv + 1 and c == s.copy:
            *init, last = trees
            init = tuple(init)
            match last:
                case Leaf():
                    return piv, source[piv], init
                case Unary(u):
                    return k, c, init + (u,)
                case Binary(u, w):
                    return piv + 2, source[piv + 2], init + (u, w)
        return k, c, trees
    if k == piv and c == source[piv] - 1:
        return piv + 1, s.copy, trees + (E,)
    if k == piv + 1 and c == s.copy:
        return k, c, trees[:-1] + (Unary(trees[-1]),)
    if k == piv + 2 and c == source[piv + 2] - 1:
        return piv + 1, s.copy, trees[:-2] + (Binary(trees[-2], trees[-1]),)
    return k, c, trees


def step_value(s: Step, source: NatPoly, v: TypeValue) -> TypeValue:
    """Transport ``v`` across one unfold/fold step."""
    if v.type_of != source:
        raise TypeError(f"value of {v.type_of} given to a step on {source}")
    target = apply_step(source, s)
    k, c, trees = _route(source, s, v.exponent, v.copy, v.trees)
    return TypeValue(target, k, c, trees)


@dataclass(frozen=True)
class Bijection:
    """Isomorphism between the tuple-types of two equal polynomials."""

    derivation: Derivation

    def __post_init__(self) -> None:
        object.__setattr__(self, "_polys", tuple(self.derivation.polys()))

    @property
    def source(self) -> NatPoly:
        return self.derivation.start

    @property
    def target(self) -> NatPoly:
        return self.derivation.end

    def forward(self, v: TypeValue) -> TypeValue:
        if v.type_of != self.source:
            raise TypeError(f"expected a value of {self.source}, got one of {v.type_of}")
        polys = self._polys
        k, c, trees = v.exponent, v.copy, v.trees
        for i, st in enumerate(self.derivation.steps):
            k, c, trees = _route(polys[i], st, k, c, trees)
        return TypeValue(self.target, k, c, trees)

    def backward(self, v: TypeValue) -> TypeValue:
        if v.type_of != self.target:
            raise TypeError(f"expected a value of {self.target}, got one of {v.type_of}")
        polys = self._polys
        k, c, trees = v.exponent, v.copy, v.trees
        for i in range(len(self.derivation.steps) - 1, -1, -1):
            inv = self.derivation.steps[i].inverse()
            k, c, trees = _route(polys[i + 1], inv, k, c, trees)
        return TypeValue(self.source, k, c, trees)

    def inverse(self) -> Bijection:
        return Bijection(self.derivation.reverse())


def compile(d: Derivation) -> Bijection:  # noqa: A001 - derivation compiler
    check(d)
    return Bijection(d)


def verify_round_trip(b: Bijection, max_total: int) -> tuple[int, int]:
    """Round-trip every source and target value up to ``max_total``.

    Returns the number of source and target values checked; raises
    ``AssertionError`` on the first failure or type error.
    """
    n_src = n_dst = 0
    images = set()
    for v in values(b.source, max_total):
        w = b.forward(v)
        if w.type_of != b.target or b.backward(w) != v:
            raise AssertionError(f"forward/backward fails on {v}")
        images.add(w)
        n_src += 1
    if len(images) != n_src:
        raise AssertionError("forward map is not injective")
    for w in values(b.target, max_total):
        v = b.backward(w)
        if v.type_of != b.source or b.forward(v) != w:
            raise AssertionError(f"backward/forward fails on {w}")
        n_dst += 1
    return n_src, n_dst


# Hand-written isomorphisms fold1 : X^4 = U and fold2 : X * U = X, composed
# into fold5 : X^5 = X.  U = o1 | o2 | p of X * X is a value of 2 + x^2.

U_TYPE = NatPoly((2, 0, 1))
O1 = TypeValue(U_TYPE, 0, 0, ())
O2 = TypeValue(U_TYPE, 0, 1, ())


def p(t1: Tree, t2: Tree) -> TypeValue:
    return TypeValue(U_TYPE, 2, 0, (t1, t2))


def fold1(v: Sequence[Tree]) -> TypeValue:
    match tuple(v):
        case (Leaf(), Leaf(), Leaf(), Leaf()):
            return O1
        case (Leaf(), Leaf(), Leaf(), Unary(Leaf())):
            return O2
        case (Leaf(), Leaf(), Leaf(), Unary(Unary(t))):
            return p(E, t)
        case (Leaf(), Leaf(), Leaf(), Unary(Binary(t1, t2))):
            return p(s(t1), t2)
        case (Leaf(), Leaf(), Leaf(), Binary(t1, t2)):
            return p(m(E, t1), t2)
        case (Leaf(), Leaf(), Unary(t1), t2):
            return p(m(s(E), t1), t2)
        case (Leaf(), Leaf(), Binary(t1, t2), t3):
            return p(m(s(s(t1)), t2), t3)
        case (Leaf(), Unary(t1), t2, t3):
            return p(m(s(m(E, t1)), t2), t3)
        case (Leaf(), Binary(t1, t2), t3, t4):
            return p(m(s(m(s(t1), t2)), t3), t4)
        case (Unary(t1), t2, t3, t4):
            return p(m(m(t1, t2), t3), t4)
        case (Binary(t1, t2), t3, t4, t5):
            return p(m(s(m(m(t1, t2), t3)), t4), t5)
    raise TypeError(f"fold1 expects four trees, got {v!r}")


def fold1_inv(u: TypeValue) -> tuple[Tree, Tree, Tree, Tree]:
    if u == O1:
        return (E, E, E, E)
    if u == O2:
        return (E, E, E, s(E))
    if u.type_of != U_TYPE or u.exponent != 2:
        raise TypeError(f"not a U-value: {u}")
    match u.trees:
        case (Leaf(), t):
            return (E, E, E, s(s(t)))
        case (Unary(t1), t2):
            return (E, E, E, s(m(t1, t2)))
        case (Binary(Leaf(), t1), t2):
            return (E, E, E, m(t1, t2))
        case (Binary(Unary(Leaf()), t1), t2):
            return (E, E, s(t1), t2)
        case (Binary(Unary(Unary(t1)), t2), t3):
            return (E, E, m(t1, t2), t3)
        case (Binary(Unary(Binary(Leaf(), t1)), t2), t3):
            return (E, s(t1), t2, t3)
        case (Binary(Unary(Binary(Unary(t1), t2)), t3), t4):
            return (E, m(t1, t2), t3, t4)
        case (Binary(Unary(Binary(Binary(t1, t2), t3)), t4), t5):
            return (m(t1, t2), t3, t4, t5)
        case (Binary(Binary(t1, t2), t3), t4):
            return (s(t1), t2, t3, t4)
    raise TypeError(f"not a U-value: {u}")


def fold2(t: Tree, u: TypeValue) -> Tree:
    if u == O1:
        return s(t)
    if u == O2:
        match t:
            case Leaf():
                return E
            case Unary(t1):
                return m(E, t1)
            case Binary(t1, t2):
                return m(s(t1), t2)
    if u.type_of == U_TYPE and u.exponent == 2:
        t2, t3 = u.trees
        return m(m(t, t2), t3)
    raise TypeError(f"fold2 expects (tree, U-value), got ({t}, {u})")


def fold2_inv(t: Tree) -> tuple[Tree, TypeValue]:
    match t:
        case Unary(t1):
            return t1, O1
        case Leaf():
            return E, O2
        case Binary(Leaf(), t1):
            return s(t1), O2
        case Binary(Unary(t1), t2):
            return m(t1, t2), O2
        case Binary(Binary(t1, t2), t3):
            return t1, p(t2, t3)
    raise TypeError(f"not a Motzkin tree: {t!r}")


def fold5(v: Sequence[Tree]) -> Tree:
    t1, *rest = v
    return fold2(t1, fold1(rest))


def fold5_inv(t: Tree) -> tuple[Tree, Tree, Tree, Tree, Tree]:
    t1, u = fold2_inv(t)
    return (t1,) + fold1_inv(u)
