"""Middle Betti number of a link from its weight system.

For a link of dimension 2n - 1 the rank of H_{n-1} is an alternating
sum over all subsets of the reduced degree/weight quotients
d / w_i = u_i / v_i (lowest terms):

    b = sum over S of (-1)^{n+1-|S|} * (prod u_i) / (prod v_i * lcm u_i)

where the empty subset contributes (-1)^{n+1} (empty product 1, empty
lcm 1).  The sum is evaluated in exact rational arithmetic and must
come out a nonnegative integer; anything else is an error, never a
rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import NonIntegerResult
from .links import BPExponents, WeightSystem, bp_link, is_well_formed


@dataclass(frozen=True)
class BettiResult:
    middle_betti: int
    link_dim: int
    quotients: tuple[Fraction, ...]


@dataclass(frozen=True)
class TorsionForm:
    """Closed-form description of the torsion of the middle homology.

    kind is one of "torsion_free", "cyclic_pair" (Z_k + Z_k, with k
    set), or "unknown"."""

    kind: str
    k: int | None = None

    def __str__(self) -> str:
        if self.kind == "cyclic_pair":
            return "Z_%d+Z_%d" % (self.k, self.k)
        return self.kind


TORSION_FREE = TorsionForm("torsion_free")
TORSION_UNKNOWN = TorsionForm("unknown")


def betti(ws: WeightSystem) -> BettiResult:
    """Exact middle Betti number of the link of the weight system."""
    n = ws.nvars - 1
    quotients = tuple(Fraction(ws.degree, w) for w in ws.weights)
    u = [q.numerator for q in quotients]
    v = [q.denominator for q in quotients]

    total = Fraction(0)
    for mask in range(1 << (n + 1)):
        pu = pv = ell = 1
        size = 0
        for i in range(n + 1):
            if mask >> i & 1:
                pu *= u[i]
                pv *= v[i]
                ell = lcm(ell, u[i])
                size += 1
        term = Fraction(pu, pv * ell)
        if (n + 1 - size) % 2:
            total -= term
        else:
            total += term

    if total.denominator != 1 or total < 0:
        raise NonIntegerResult("betti sum reduced to %s" % total)
    return BettiResult(int(total), ws.link_dim, quotients)


def is_rational_homology_sphere(ws: WeightSystem) -> bool:
    return betti(ws).middle_betti == 0


def torsion_closed_form(a: Sequence[int] | BPExponents) -> TorsionForm:
    """Torsion of H_2 for the closed-form families that have one.

    Exponents (3,3,3,k) with gcd(k,3) = 1 give Z_k + Z_k.  Otherwise a
    well-formed four-variable weight system is torsion free.  Everything
    else is reported unknown rather than guessed.
    """
    exps = (a if isinstance(a, BPExponents) else BPExponents(tuple(a))).exponents
    if len(exps) == 4:
        threes = [x for x in exps if x == 3]
        rest = [x for x in exps if x != 3]
        if len(threes) == 3 and gcd(rest[0], 3) == 1:
            return TorsionForm("cyclic_pair", rest[0])
        if is_well_formed(bp_link(exps)):
            return TORSION_FREE
    return TORSION_UNKNOWN


__all__ = [
    "BettiResult",
    "TorsionForm",
    "TORSION_FREE",
    "TORSION_UNKNOWN",
    "betti",
    "is_rational_homology_sphere",
    "torsion_closed_form",
]
