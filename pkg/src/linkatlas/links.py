"""Weight systems and links of weighted homogeneous hypersurface singularities.

A weighted homogeneous polynomial in n+1 variables with weights
w = (w_0, ..., w_n) and degree d cuts out a link of dimension 2n - 1,
the intersection of the hypersurface with the unit sphere.  Everything
here is exact integer or rational arithmetic; no floats.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import (
    DimensionUnsupported,
    InvalidInput,
    NoPositiveSolution,
    RankDeficient,
)


class SignClass(enum.Enum):
    """Sign of the transverse structure: compares degree against |w|."""

    POSITIVE = "positive"
    NULL = "null"
    NEGATIVE = "negative"


class Pi1Class(enum.Enum):
    FINITE = "finite"
    INFINITE_NILPOTENT = "infinite_nilpotent"
    INFINITE = "infinite"


@dataclass(frozen=True)
class WeightSystem:
    """Sorted primitive weight vector with its degree.

    Weights are normalized: sorted ascending and divided by their overall
    gcd (the degree is divided by the same factor, which must be possible
    for the system to carry any monomial at all).
    """

    weights: tuple[int, ...]
    degree: int

    def __post_init__(self) -> None:
        w = tuple(int(x) for x in self.weights)
        d = int(self.degree)
        if len(w) < 2:
            raise InvalidInput("need at least two weights")
        if any(x < 1 for x in w) or d < 1:
            raise InvalidInput("weights and degree must be positive")
        g = gcd(*w)
        if g > 1:
            if d % g != 0:
                raise InvalidInput(
                    "weight gcd %d does not divide degree %d" % (g, d)
                )
            w = tuple(x // g for x in w)
            d //= g
        object.__setattr__(self, "weights", tuple(sorted(w)))
        object.__setattr__(self, "degree", d)

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    @property
    def link_dim(self) -> int:
        return 2 * self.nvars - 3

    def __str__(self) -> str:
        return "w=(%s)@%d" % (",".join(map(str, self.weights)), self.degree)


@dataclass(frozen=True)
class BPExponents:
    """Exponent vector (a_0, ..., a_n) of a Brieskorn-Pham polynomial
    z_0^{a_0} + ... + z_n^{a_n}.  Order is preserved as given."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(int(x) for x in self.exponents)
        if len(a) < 2:
            raise InvalidInput("need at least two exponents")
        if any(x < 2 for x in a):
            raise InvalidInput("exponents must be at least 2")
        object.__setattr__(self, "exponents", a)

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def pairwise_coprime(self) -> bool:
        return all(
            gcd(x, y) == 1 for x, y in itertools.combinations(self.exponents, 2)
        )

    def __str__(self) -> str:
        return "bp:" + ",".join(map(str, self.exponents))


def _as_exponents(a: Sequence[int] | BPExponents) -> BPExponents:
    return a if isinstance(a, BPExponents) else BPExponents(tuple(a))


def bp_link(a: Sequence[int] | BPExponents) -> WeightSystem:
    """Weight system of the Brieskorn-Pham link L(a_0, ..., a_n).

    The degree is lcm(a_i) and the weight of z_i is d / a_i.  The
    resulting weight vector always has gcd 1: a common prime factor of
    all d / a_i would divide d and force every a_i to miss a full power
    of that prime, contradicting d = lcm(a_i).
    """
    exps = _as_exponents(a).exponents
    d = lcm(*exps)
    return WeightSystem(tuple(d // ai for ai in exps), d)


def classify_sign(ws: WeightSystem) -> SignClass:
    """Trichotomy on d - |w|: negative difference means positive class."""
    diff = ws.degree - ws.total_weight
    if diff < 0:
        return SignClass.POSITIVE
    if diff == 0:
        return SignClass.NULL
    return SignClass.NEGATIVE


def solve_weights(rows: Sequence[Sequence[int]]) -> WeightSystem:
    """Recover the weight system from the exponent rows of a polynomial.

    Each row (m_0, ..., m_n) of a monomial z^m imposes
    sum_j m_j * w_j = d.  The homogeneous system in (w, d) must have a
    one dimensional kernel; the primitive positive representative is
    returned.  Raises RankDeficient when the kernel has dimension > 1
    and NoPositiveSolution when no strictly positive solution exists.
    """
    mat = [list(r) for r in rows]
    if not mat:
        raise InvalidInput("empty monomial matrix")
    nvars = len(mat[0])
    if nvars < 2:
        raise InvalidInput("need at least two variables")
    if any(len(r) != nvars for r in mat):
        raise InvalidInput("ragged monomial matrix")
    if any(x < 0 for r in mat for x in r):
        raise InvalidInput("negative exponent")
    if any(all(x == 0 for x in r) for r in mat):
        raise InvalidInput("zero monomial row")

    ncols = nvars + 1
    a = [[Fraction(x) for x in r] + [Fraction(-1)] for r in mat]

    # Gauss elimination to row echelon form.
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(a)) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for r in range(len(a)):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
        if row == len(a):
            break

    free = [c for c in range(ncols) if c not in pivots]
    if len(free) == 0:
        raise NoPositiveSolution("only the zero solution")
    if len(free) > 1:
        raise RankDeficient("solution space has dimension %d" % len(free))

    # Kernel vector: free column set to 1, pivots back substituted.
    fcol = free[0]
    vec = [Fraction(0)] * ncols
    vec[fcol] = Fraction(1)
    for r, col in enumerate(pivots):
        vec[col] = -a[r][fcol]

    if vec[-1] < 0:
        vec = [-x for x in vec]
    if vec[-1] == 0 or any(x <= 0 for x in vec[:-1]):
        raise NoPositiveSolution("kernel vector is not strictly positive")

    # clear denominators; the constructor divides out the weight gcd,
    # which always divides d = m.w here
    denom = lcm(*(x.denominator for x in vec))
    ints = [int(x * denom) for x in vec]
    return WeightSystem(tuple(ints[:-1]), ints[-1])


def count_monomials(ws: WeightSystem) -> int:
    """Number of monomials of weighted degree d.

    Counts nonnegative integer vectors m with sum m_j * w_j = d by the
    usual coin counting recurrence, one pass per variable.
    """
    d = ws.degree
    table = [0] * (d + 1)
    table[0] = 1
    for w in ws.weights:
        for t in range(w, d + 1):
            table[t] += table[t - w]
    return table[d]


def is_well_formed(ws: WeightSystem) -> bool:
    """Whether every three of the four weights are coprime.

    Defined for 5-dimensional links only (nvars = 4).  Well-formedness
    forces the degree-two homology of the link to be torsion free.
    """
    if ws.nvars != 4:
        raise DimensionUnsupported("well-formedness needs nvars = 4")
    return all(
        gcd(gcd(x, y), z) == 1
        for x, y, z in itertools.combinations(ws.weights, 3)
    )


def pi1_class(ws: WeightSystem) -> Pi1Class:
    """Fundamental group size for 3-dimensional links: finite iff
    d < |w|, infinite nilpotent iff d = |w|, infinite otherwise."""
    if ws.nvars != 3:
        raise DimensionUnsupported("pi1 classification needs nvars = 3")
    diff = ws.degree - ws.total_weight
    if diff < 0:
        return Pi1Class.FINITE
    if diff == 0:
        return Pi1Class.INFINITE_NILPOTENT
    return Pi1Class.INFINITE


def _ade_row(rows: list[list[int]]) -> WeightSystem:
    return solve_weights(rows)


_E_ROWS = (
    ("E_6", [[4, 0, 0], [0, 3, 0], [0, 0, 2]]),
    ("E_7", [[3, 0, 0], [1, 3, 0], [0, 0, 2]]),
    ("E_8", [[5, 0, 0], [0, 3, 0], [0, 0, 2]]),
)


def ade_match(ws: WeightSystem) -> str | None:
    """Match a positive 3-dimensional weight system against the ADE table.

    The table rows are z_0^p + z_1^2 + z_2^2 (cyclic, label A_{p-1}),
    z_0^2 z_1 + z_1^m + z_2^2 (binary dihedral, label D_m, m >= 3), and
    the three exceptional rows E_6, E_7, E_8.  Returns the label or None.
    """
    if ws.nvars != 3:
        raise DimensionUnsupported("ADE table needs nvars = 3")
    if classify_sign(ws) is not SignClass.POSITIVE:
        return None
    for label, rows in _E_ROWS:
        if ws == _ade_row(rows):
            return label
    d = ws.degree
    for p in range(2, d + 1):
        if ws == _ade_row([[p, 0, 0], [0, 2, 0], [0, 0, 2]]):
            return "A_%d" % (p - 1)
    for m in range(3, d + 1):
        if ws == _ade_row([[2, 1, 0], [0, m, 0], [0, 0, 2]]):
            return "D_%d" % m
    return None


def canonical_key(obj: WeightSystem | BPExponents) -> str:
    """Stable catalog key: sorted exponents for Brieskorn-Pham input,
    sorted primitive weights with degree otherwise."""
    if isinstance(obj, BPExponents):
        return "bp:" + ",".join(map(str, sorted(obj.exponents)))
    return "w:%s@%d" % (",".join(map(str, obj.weights)), obj.degree)


def reciprocal_sum(a: Sequence[int] | BPExponents) -> Fraction:
    """sum 1/a_i; the sign class of a BP link compares this against 1."""
    exps = _as_exponents(a).exponents
    return sum((Fraction(1, x) for x in exps), Fraction(0))


__all__ = [
    "SignClass",
    "Pi1Class",
    "WeightSystem",
    "BPExponents",
    "bp_link",
    "classify_sign",
    "solve_weights",
    "count_monomials",
    "is_well_formed",
    "pi1_class",
    "ade_match",
    "canonical_key",
    "reciprocal_sum",
]
