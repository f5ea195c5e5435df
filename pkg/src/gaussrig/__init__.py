"""The quotient rig N[x]/(x ~ 1 + x + x^2): deciders, rewriting, derivations and
the bijections between tuples of Motzkin trees they compile to."""

from .polynomial import GaussInt, IntPoly, NatPoly, parse
from .quotient import Gauss, Nat, canon, decide_equal, embed_gauss
from .rewrite import normalize
from .derivation import Derivation, Step, check, derive, derive_bfs
from .motzkin import Bijection, compile

__all__ = [
    "GaussInt", "IntPoly", "NatPoly", "parse",
    "Gauss", "Nat", "canon", "decide_equal", "embed_gauss",
    "normalize",
    "Derivation", "Step", "check", "derive", "derive_bfs",
    "Bijection", "compile",
]
