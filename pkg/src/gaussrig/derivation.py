"""Checkable derivations built from unfold/fold steps.

An unfold at pivot ``k`` replaces one copy of ``x^(k+1)`` by
``x^k + x^(k+1) + x^(k+2)``; a fold at pivot ``k`` does the opposite.

Copy convention.  Summands of a polynomial are addressed as ``(exponent,
copy)``.  ``Step(UNFOLD, k, c)`` splits copy ``c`` of ``x^(k+1)``: that copy
stays in place and the new ``x^k`` and ``x^(k+2)`` summands are appended as
the last copies of their exponents.  ``Step(FOLD, k, c)`` consumes the last
copies of ``x^k`` and ``x^(k+2)`` and merges them into copy ``c`` of
``x^(k+1)``.  So the inverse of a step is the same pivot and copy with the
direction flipped, at both the polynomial and the value level.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from .polynomial import NatPoly, divide_by_one_plus_x_squared, parse, pos_neg_split, sub
from .quotient import ZERO_BAR_POLY, decide_equal


class Dir(str, Enum):
    UNFOLD = "unfold"
    FOLD = "fold"

    def flip(self) -> Dir:
        return Dir.FOLD if self is Dir.UNFOLD else Dir.UNFOLD


@dataclass(frozen=True)
class Step:
    dir: Dir
    pivot: int
    copy: int = 0

    def inverse(self) -> Step:
        return Step(self.dir.flip(), self.pivot, self.copy)

    def __str__(self) -> str:
        return f"{self.dir.value}(k={self.pivot},copy={self.copy})"


def unfold(k: int, copy: int = 0) -> Step:
    return Step(Dir.UNFOLD, k, copy)


def fold(k: int, copy: int = 0) -> Step:
    return Step(Dir.FOLD, k, copy)


class StepError(ValueError):
    """A step whose preconditions fail on the current polynomial."""

    def __init__(self, kind: str, message: str):
        self.kind = kind
        super().__init__(f"{kind}: {message}")


class DerivationError(ValueError):
    """Checker failure; ``index`` is the failing step, or ``None`` for the endpoint."""

    def __init__(self, index: Optional[int], message: str):
        self.index = index
        super().__init__(message)


class NotEqual(ValueError):
    pass


def apply_step(p: NatPoly, s: Step) -> NatPoly:
    k, c = s.pivot, s.copy
    if k < 0 or c < 0:
        raise StepError("invalid-step", f"negative pivot or copy in {s}")
    have = p[k + 1]
    if have == 0:
        kind = "pivot-monomial-missing" if s.dir is Dir.UNFOLD else "fold-triple-missing"
        raise StepError(kind, f"x^{k + 1} absent from {p}")
    if c >= have:
        raise StepError("copy-out-of-range", f"copy {c} of x^{k + 1} in {p} (has {have})")
    coeffs = list(p.coeffs) + [0] * max(0, k + 3 - len(p))
    if s.dir is Dir.UNFOLD:
        coeffs[k] += 1
        coeffs[k + 2] += 1
    else:
        if coeffs[k] == 0 or coeffs[k + 2] == 0:
            raise StepError("fold-triple-missing", f"x^{k} + x^{k + 1} + x^{k + 2} not in {p}")
        coeffs[k] -= 1
        coeffs[k + 2] -= 1
    return NatPoly(coeffs)


@dataclass(frozen=True)
class Derivation:
    start: NatPoly
    steps: tuple[Step, ...]
    end: NatPoly

    def __len__(self) -> int:
        return len(self.steps)

    def reverse(self) -> Derivation:
        return Derivation(self.end, tuple(s.inverse() for s in reversed(self.steps)), self.start)

    def then(self, other: Derivation) -> Derivation:
        if self.end != other.start:
            raise ValueError(f"cannot compose: {self.end} then {other.start}")
        return Derivation(self.start, self.steps + other.steps, other.end)

    def polys(self) -> list[NatPoly]:
        """Every intermediate polynomial, ``start`` first."""
        out = [self.start]
        for s in self.steps:
            out.append(apply_step(out[-1], s))
        return out

    def to_json(self) -> str:
        obj = {
            "start": str(self.start),
            "end": str(self.end),
            "steps": [{"dir": s.dir.value, "pivot": s.pivot, "copy": s.copy} for s in self.steps],
        }
        return json.dumps(obj, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> Derivation:
        obj = json.loads(text)
        try:
            steps = tuple(
                Step(Dir(st["dir"]), int(st["pivot"]), int(st["copy"])) for st in obj["steps"]
            )
            return cls(parse(obj["start"]), steps, parse(obj["end"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed derivation file: {exc!r}") from exc


def check(d: Derivation) -> None:
    """Replay ``d``; raise :class:`DerivationError` at the first problem."""
    cur = d.start
    for i, s in enumerate(d.steps):
        try:
            cur = apply_step(cur, s)
        except StepError as exc:
            raise DerivationError(i, f"step {i} ({s}): {exc}") from exc
    if cur != d.end:
        raise DerivationError(None, f"endpoint mismatch: replay gives {cur}, expected {d.end}")


def is_valid(d: Derivation) -> bool:
    try:
        check(d)
    except DerivationError:
        return False
    return True


@dataclass
class _Builder:
    """Accumulates steps against a running polynomial, addressing copy 0."""

    start: NatPoly
    cur: NatPoly = field(init=False)
    steps: list[Step] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.cur = self.start

    def step(self, dir: Dir, k: int) -> None:
        s = Step(dir, k, 0)
        self.cur = apply_step(self.cur, s)
        self.steps.append(s)

    def replay(self, moves: Iterable[tuple[Dir, int]]) -> None:
        for dir, k in moves:
            self.step(dir, k)

    def build(self) -> Derivation:
        return Derivation(self.start, tuple(self.steps), self.cur)


def _moves(d: Derivation) -> list[tuple[Dir, int]]:
    return [(s.dir, s.pivot) for s in d.steps]


def _absorb_moves(n: int) -> list[tuple[Dir, int]]:
    # x^j + x^(j+2) => x^(j-1) + x^(j+1), descending to 1 + x^2
    moves = []
    for j in range(n, 0, -1):
        moves += [(Dir.UNFOLD, j - 1), (Dir.FOLD, j)]
    return moves


def lemma_monomial_absorb(n: int) -> Derivation:
    """``x^n + x^(n+2)`` down to ``1 + x^2`` in ``2n`` steps."""
    b = _Builder(NatPoly.monomial(n) + NatPoly.monomial(n + 2))
    b.replay(_absorb_moves(n))
    return b.build()


def _plus_zero_moves(p: NatPoly) -> list[tuple[Dir, int]]:
    if p.is_constant():
        raise ValueError(f"p + (1 + x^2) ~ p fails for the constant {p}")
    e = next(k for k, _ in p.terms() if k >= 1)
    n = e - 1
    undo = [(dir.flip(), k) for dir, k in reversed(_absorb_moves(n))]
    return undo + [(Dir.FOLD, n)]


def lemma_plus_zero(p: NatPoly) -> Derivation:
    """``p + 1 + x^2`` down to ``p`` for non-constant ``p``."""
    moves = _plus_zero_moves(p)
    b = _Builder(p + ZERO_BAR_POLY)
    b.replay(moves)
    return b.build()


def _times_zero_moves(p: NatPoly) -> list[tuple[Dir, int]]:
    if p.is_zero():
        raise ValueError("0 * (1 + x^2) is the constant 0")
    moves = []
    copies = 0
    for k, c in p.terms():
        moves += _absorb_moves(k) * c
        copies += c
    moves += _plus_zero_moves(ZERO_BAR_POLY) * (copies - 1)
    return moves


def lemma_times_zero(p: NatPoly) -> Derivation:
    """``p * (1 + x^2)`` down to ``1 + x^2`` for non-zero ``p``."""
    moves = _times_zero_moves(p)
    b = _Builder(p * ZERO_BAR_POLY)
    b.replay(moves)
    return b.build()


def cancellation_data(p: NatPoly, q: NatPoly) -> tuple[NatPoly, NatPoly]:
    """``(w1, w2)`` with ``p - q = (w1 - w2)(1 + x^2)``; raises if unequal."""
    quot, rem = divide_by_one_plus_x_squared(sub(p, q))
    if not rem.is_zero():
        raise NotEqual(f"{p} and {q} differ in the quotient (remainder {rem})")
    return pos_neg_split(quot)


def derive(p: NatPoly, q: NatPoly) -> Derivation:
    """A derivation ``p => q`` built from division by ``1 + x^2`` and cancellation."""
    if p == q:
        return Derivation(p, (), q)
    if p.is_constant() or q.is_constant():
        if p.is_constant() and q.is_constant():
            raise NotEqual(f"distinct constants {p} and {q} are never equal")
        raise NotEqual(f"constant vs non-constant: {p} and {q}")
    w1, w2 = cancellation_data(p, q)
    x = NatPoly.monomial(1)
    r = (w1 + w2) * x

    b = _Builder(p)
    # p => p + 0bar
    b.replay((dir.flip(), k) for dir, k in reversed(_plus_zero_moves(p)))
    # p + 0bar => p + r + x^2 r
    b.replay((dir.flip(), k) for dir, k in reversed(_times_zero_moves(r)))
    # w2 x => w2 (1 + x + x^2), then w1 (1 + x + x^2) => w1 x
    for k, c in w2.terms():
        b.replay([(Dir.UNFOLD, k)] * c)
    for k, c in w1.terms():
        b.replay([(Dir.FOLD, k)] * c)
    assert b.cur == q + r + r.shift(2)
    # q + r + x^2 r => q + 0bar => q
    b.replay(_times_zero_moves(r))
    b.replay(_plus_zero_moves(q))
    d = b.build()
    assert d.end == q
    return d


def _neighbours(coeffs: tuple[int, ...]) -> list[tuple[tuple[Dir, int], tuple[int, ...]]]:
    out = []
    n = len(coeffs)
    for k in range(n - 1):
        if coeffs[k + 1]:
            new = list(coeffs) + [0] * max(0, k + 3 - n)
            new[k] += 1
            new[k + 2] += 1
            out.append(((Dir.UNFOLD, k), tuple(new)))
    for k in range(n - 2):
        if coeffs[k] and coeffs[k + 1] and coeffs[k + 2]:
            new = list(coeffs)
            new[k] -= 1
            new[k + 2] -= 1
            while new and new[-1] == 0:
                new.pop()
            out.append(((Dir.FOLD, k), tuple(new)))
    return out


def derive_bfs(p: NatPoly, q: NatPoly, step_budget: int) -> Optional[Derivation]:
    """Shortest unfold/fold derivation of length <= ``step_budget``, or ``None``.

    Bidirectional breadth-first search over polynomials; the smaller
    frontier is expanded one full layer at a time.
    """
    if not decide_equal(p, q):
        return None
    if p == q:
        return Derivation(p, (), q)
    src, dst = p.coeffs, q.coeffs
    # parent maps: state -> (move, previous state); moves on the q side are
    # recorded as taken from q outward
    seen = ({src: None}, {dst: None})
    frontiers = ([src], [dst])
    depths = [0, 0]
    while frontiers[0] and frontiers[1] and depths[0] + depths[1] < step_budget:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        here, there = seen[side], seen[1 - side]
        nxt = []
        meet = None
        for state in frontiers[side]:
            for move, new in _neighbours(state):
                if new in here:
                    continue
                here[new] = (move, state)
                if new in there:
                    meet = new
                    break
                nxt.append(new)
            if meet is not None:
                break
        depths[side] += 1
        if meet is not None:
            return _splice(p, q, seen, meet)
        frontiers = (nxt, frontiers[1]) if side == 0 else (frontiers[0], nxt)
    return None


def _path(parents: dict, state) -> list[tuple[Dir, int]]:
    moves = []
    while parents[state] is not None:
        move, state = parents[state]
        moves.append(move)
    moves.reverse()
    return moves


def _splice(p: NatPoly, q: NatPoly, seen, meet) -> Derivation:
    head = _path(seen[0], meet)
    tail = _path(seen[1], meet)
    b = _Builder(p)
    b.replay(head)
    b.replay((dir.flip(), k) for dir, k in reversed(tail))
    d = b.build()
    assert d.end == q
    return d
