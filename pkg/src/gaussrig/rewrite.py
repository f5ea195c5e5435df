"""The terminating, confluent rewrite system for x ~ 1 + x + x^2.

Rules act on the monomial multiset of a polynomial and are closed under
multiplication by ``x**m`` and under additive context::

    R1      x^4           -> 2 + x^2
    R2      x + x^3       -> 1 + x^2
    R3(n)   x^n + 1 + x^2 -> x^n        (n = 1, 2, 3)

Evaluation at 2 strictly decreases along every step.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .polynomial import NatPoly, eval_at_two


@dataclass(frozen=True)
class Rule:
    id: str
    lhs: NatPoly
    rhs: NatPoly

    def __str__(self) -> str:
        return self.id


R1 = Rule("R1", NatPoly((0, 0, 0, 0, 1)), NatPoly((2, 0, 1)))
R2 = Rule("R2", NatPoly((0, 1, 0, 1)), NatPoly((1, 0, 1)))
R3 = {
    n: Rule(f"R3({n})", NatPoly.monomial(n) + NatPoly((1, 0, 1)), NatPoly.monomial(n))
    for n in (1, 2, 3)
}
RULES: tuple[Rule, ...] = (R1, R2, R3[1], R3[2], R3[3])


@dataclass(frozen=True)
class RuleInstance:
    rule: Rule
    scale: int = 0

    @property
    def lhs(self) -> NatPoly:
        return self.rule.lhs.shift(self.scale)

    @property
    def rhs(self) -> NatPoly:
        return self.rule.rhs.shift(self.scale)

    def __str__(self) -> str:
        return f"{self.rule.id},m={self.scale}"


class RuleNotApplicable(ValueError):
    pass


class NotANormalForm(ValueError):
    pass


def measure(p: NatPoly) -> int:
    """Termination measure: the value of ``p`` at 2."""
    return eval_at_two(p)


def applicable_instances(p: NatPoly) -> list[RuleInstance]:
    """Every instance whose left-hand side is a sub-multiset of ``p``.

    Ordered by rule (R1, R2, R3(1), R3(2), R3(3)), then ascending scale.
    """
    out = []
    for rule in RULES:
        for m in range(max(len(p) - rule.lhs.degree, 0)):
            inst = RuleInstance(rule, m)
            if _fits(p.coeffs, inst):
                out.append(inst)
    return out


def _fits(coeffs, inst: RuleInstance, times: int = 1) -> bool:
    return _max_repeats(coeffs, inst) >= times


def _max_repeats(coeffs, inst: RuleInstance) -> int:
    """How many times in a row ``inst`` applies to ``coeffs``."""
    m = inst.scale
    lhs, rhs = inst.rule.lhs, inst.rule.rhs
    best = None
    for k, need in lhs.terms():
        have = coeffs[k + m] if k + m < len(coeffs) else 0
        if have < need:
            return 0
        loss = need - rhs[k]
        if loss > 0:
            t = (have - need) // loss + 1
            best = t if best is None else min(best, t)
    # every rule strictly loses some monomial, so best is always set
    return best


def _apply_in_place(coeffs: list[int], inst: RuleInstance, times: int) -> None:
    m = inst.scale
    top = max(len(inst.rule.lhs), len(inst.rule.rhs)) + m
    if len(coeffs) < top:
        coeffs.extend([0] * (top - len(coeffs)))
    for k, c in inst.rule.lhs.terms():
        coeffs[k + m] -= times * c
    for k, c in inst.rule.rhs.terms():
        coeffs[k + m] += times * c
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()


def apply(p: NatPoly, inst: RuleInstance) -> NatPoly:
    """One rewrite step; the measure strictly decreases."""
    if not _fits(p.coeffs, inst):
        raise RuleNotApplicable(f"{inst} does not apply to {p}")
    coeffs = list(p.coeffs)
    _apply_in_place(coeffs, inst, 1)
    q = NatPoly(coeffs)
    assert measure(q) < measure(p), f"measure did not drop: {p} -> {q}"
    return q


def _first_instance(coeffs: list[int]) -> Optional[RuleInstance]:
    """The instance the deterministic strategy fires next.

    R1 at the highest scale first, then R2 at the highest scale, then R3(n)
    for n = 1, 2, 3 at the highest scale.
    """
    deg = len(coeffs) - 1
    if deg >= 4:
        return RuleInstance(R1, deg - 4)
    for rule in (R2, R3[1], R3[2], R3[3]):
        for m in range(deg - rule.lhs.degree, -1, -1):
            inst = RuleInstance(rule, m)
            if _fits(coeffs, inst):
                return inst
    return None


Trace = Callable[[NatPoly, RuleInstance, NatPoly], None]


def normalize(p: NatPoly, on_step: Optional[Trace] = None) -> NatPoly:
    """Reduce ``p`` to its normal form with the deterministic strategy.

    Consecutive firings of the same instance are batched, which keeps the
    cost polynomial in the degree.  ``on_step`` is called once per single
    rule application with ``(before, instance, after)`` and forces the
    unbatched path.
    """
    coeffs = list(p.coeffs)
    while True:
        inst = _first_instance(coeffs)
        if inst is None:
            return NatPoly(coeffs)
        if on_step is None:
            times = _max_repeats(coeffs, inst)
            drop = inst.rule.lhs.eval_at_two() - inst.rule.rhs.eval_at_two()
            assert drop > 0
            _apply_in_place(coeffs, inst, times)
        else:
            before = NatPoly(coeffs)
            _apply_in_place(coeffs, inst, 1)
            after = NatPoly(coeffs)
            assert measure(after) < measure(before)
            on_step(before, inst, after)


def trace_line(before: NatPoly, inst: RuleInstance, after: NatPoly) -> str:
    return f"{before}  --[{inst.rule.id},m={inst.scale}]-->  {after}"


def normalize_traced(p: NatPoly) -> tuple[NatPoly, list[str]]:
    lines: list[str] = []
    nf = normalize(p, on_step=lambda b, i, a: lines.append(trace_line(b, i, a)))
    return nf, lines


def is_normal_form(p: NatPoly) -> bool:
    return not applicable_instances(p)


@dataclass(frozen=True)
class NormalFormClass:
    """Family of an irreducible polynomial.

    ``Constant`` carries the constant in ``m``; the five non-constant
    families carry the naturals ``(m, n)`` of their defining shapes:
    ``m + 1 + x^2``, ``m + n x``, ``m + n x^3``, ``m x^2 + n x``,
    ``m x^2 + n x^3``.
    """

    tag: str
    m: int = 0
    n: int = 0

    def __str__(self) -> str:
        if self.tag == "Constant":
            return f"Constant({self.m})"
        if self.tag == "OnePlusXSquared":
            return f"OnePlusXSquared({self.m})"
        return f"{self.tag}({self.m},{self.n})"


FAMILIES = ("Constant", "OnePlusXSquared", "Linear", "Cubic", "QuadLinear", "QuadCubic")


def classify(p: NatPoly) -> NormalFormClass:
    if not is_normal_form(p):
        raise NotANormalForm(f"{p} is reducible")
    if p.is_constant():
        return NormalFormClass("Constant", p[0])
    a, b, c, d = (p[k] for k in range(4))
    if c == 1 and a >= 1 and b == 0 and d == 0:
        return NormalFormClass("OnePlusXSquared", a - 1)
    if c == 0:
        if d == 0:
            return NormalFormClass("Linear", a, b)
        return NormalFormClass("Cubic", a, d)
    # irreducible with an x^2 term and no R3 redex forces a = 0
    if d == 0:
        return NormalFormClass("QuadLinear", c, b)
    return NormalFormClass("QuadCubic", c, d)


def family_member(cls: NormalFormClass) -> NatPoly:
    """The polynomial a family tag stands for (inverse of ``classify``)."""
    m, n = cls.m, cls.n
    shapes = {
        "Constant": (m,),
        "OnePlusXSquared": (m + 1, 0, 1),
        "Linear": (m, n),
        "Cubic": (m, 0, 0, n),
        "QuadLinear": (0, n, m),
        "QuadCubic": (0, 0, m, n),
    }
    return NatPoly(shapes[cls.tag])


def reduce_cubic_closed_form(a: int, b: int, c: int, d: int) -> NatPoly:
    """Closed-form result of exhausting R2 on ``a + b x + c x^2 + d x^3``."""
    k = min(b, d)
    return NatPoly((a + k, max(b - d, 0), c + k, max(d - b, 0)))


def critical_pairs(max_degree: int) -> list[tuple[NatPoly, NatPoly, NatPoly, bool]]:
    """Overlapping pairs of distinct rule instances with peak degree <= ``max_degree``.

    The peak is the coefficient-wise maximum of the two left-hand sides,
    which is the union of the multisets with maximal overlap.  Each entry is
    ``(peak, nf_left, nf_right, joinable)``.
    """
    if max_degree < 4:
        raise ValueError("max_degree must be at least 4")
    instances = [
        RuleInstance(rule, m)
        for rule in RULES
        for m in range(max_degree - rule.lhs.degree + 1)
    ]
    out = []
    for left, right in itertools.combinations(instances, 2):
        l, r = left.lhs, right.lhs
        if not any(r[k] for k, _ in l.terms()):
            continue
        width = max(len(l), len(r))
        peak = NatPoly(tuple(max(l[k], r[k]) for k in range(width)))
        if peak.degree > max_degree:
            continue
        nf_l = normalize(apply(peak, left))
        nf_r = normalize(apply(peak, right))
        out.append((peak, nf_l, nf_r, nf_l == nf_r))
    return out


def successors(p: NatPoly) -> Iterator[tuple[RuleInstance, NatPoly]]:
    for inst in applicable_instances(p):
        yield inst, apply(p, inst)


_RULE_TERMS = [
    (rule, tuple(rule.lhs.terms()), tuple(rule.rhs.terms()), rule.lhs.degree) for rule in RULES
]


def _successor_coeffs(coeffs: tuple[int, ...]) -> list[tuple[int, ...]]:
    # tuple-level twin of successors(), for exhaustive exploration
    out = []
    n = len(coeffs)
    for _, lhs, rhs, deg in _RULE_TERMS:
        for m in range(n - deg):
            if all(coeffs[k + m] >= c for k, c in lhs):
                new = list(coeffs)
                for k, c in lhs:
                    new[k + m] -= c
                for k, c in rhs:
                    new[k + m] += c
                while new and new[-1] == 0:
                    new.pop()
                out.append(tuple(new))
    return out


def _value_at_two(coeffs: tuple[int, ...]) -> int:
    return sum(c << k for k, c in enumerate(coeffs))


def all_normal_forms(p: NatPoly, memo: Optional[dict] = None) -> frozenset[NatPoly]:
    """Normal forms reachable from ``p`` along every possible reduction sequence.

    ``memo`` may be shared across calls; it maps coefficient tuples to the
    set of normal forms (as tuples) reachable from them.
    """
    if memo is None:
        memo = {}
    root = p.coeffs
    stack = [root]
    while stack:
        cur = stack[-1]
        if cur in memo:
            stack.pop()
            continue
        succ = _successor_coeffs(cur)
        pending = [q for q in succ if q not in memo]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        if succ:
            here = _value_at_two(cur)
            assert all(_value_at_two(q) < here for q in succ)
            memo[cur] = frozenset().union(*(memo[q] for q in succ))
        else:
            memo[cur] = frozenset([cur])
    return frozenset(NatPoly(c) for c in memo[root])
