"""Exact Ricci curvature of left-invariant metrics on frame algebras.

A MetricAlgebra is a frame e_1, ..., e_d with constant brackets
[e_i, e_j] = sum_k c[i][j][k] e_k and a constant frame metric.  The
Levi-Civita connection follows from the Koszul formula restricted to
the frame,

    2 g(nabla_i e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i)
                            + g([e_k,e_i],e_j),

and curvature from R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z
- nabla_[X,Y] Z.  Everything is exact rational arithmetic, so an
eta-Einstein fit either has residual exactly zero or it does not.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateMetric, InvalidInput, PoleProximity
from .eta import heisenberg_alpha_squared

Rational = Fraction | int
Matrix = tuple[tuple[Fraction, ...], ...]


def _frac_matrix(rows: Sequence[Sequence[Rational]]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


@dataclass(frozen=True)
class MetricAlgebra:
    """Frame algebra with metric; brackets[i][j][k] is the e_k
    coefficient of [e_i, e_j]."""

    brackets: tuple[Matrix, ...]
    metric: Matrix
    reeb_index: int

    def __post_init__(self) -> None:
        c = tuple(_frac_matrix(plane) for plane in self.brackets)
        g = _frac_matrix(self.metric)
        d = len(g)
        if d < 2:
            raise InvalidInput("need dimension >= 2")
        if len(c) != d or any(
            len(p) != d or any(len(r) != d for r in p) for p in c
        ):
            raise InvalidInput("brackets must be d x d x d")
        if any(len(r) != d for r in g):
            raise InvalidInput("metric must be d x d")
        if any(g[i][j] != g[j][i] for i in range(d) for j in range(d)):
            raise InvalidInput("metric must be symmetric")
        if not 0 <= self.reeb_index < d:
            raise InvalidInput("reeb_index out of range")
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    if c[i][j][k] != -c[j][i][k]:
                        raise InvalidInput("brackets must be antisymmetric")
        self._check_jacobi(c, d)
        object.__setattr__(self, "brackets", c)
        object.__setattr__(self, "metric", g)

    @staticmethod
    def _check_jacobi(c, d) -> None:
        for i in range(d):
            for j in range(i + 1, d):
                for k in range(j + 1, d):
                    for l in range(d):
                        s = sum(
                            c[i][j][m] * c[m][k][l]
                            + c[j][k][m] * c[m][i][l]
                            + c[k][i][m] * c[m][j][l]
                            for m in range(d)
                        )
                        if s != 0:
                            raise InvalidInput(
                                "Jacobi identity fails at (%d,%d,%d)" % (i, j, k)
                            )

    @property
    def dim(self) -> int:
        return len(self.metric)

    @property
    def eta(self) -> tuple[Fraction, ...]:
        """Frame components of eta = g(xi, .)."""
        return self.metric[self.reeb_index]


def _inverse(g: Matrix) -> list[list[Fraction]]:
    d = len(g)
    a = [list(row) + [Fraction(int(i == j)) for j in range(d)] for i, row in enumerate(g)]
    for col in range(d):
        piv = next((r for r in range(col, d) if a[r][col] != 0), None)
        if piv is None:
            raise DegenerateMetric("frame metric is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(d):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[d:] for row in a]


def ricci_tensor(alg: MetricAlgebra) -> Matrix:
    """Ricci tensor of the left-invariant metric, in frame components."""
    c = alg.brackets
    g = alg.metric
    d = alg.dim
    ginv = _inverse(g)

    # B[i][j][k] = g([e_i, e_j], e_k)
    B = [
        [
            [sum(c[i][j][l] * g[l][k] for l in range(d)) for k in range(d)]
            for j in range(d)
        ]
        for i in range(d)
    ]
    # K[i][j][k] = g(nabla_i e_j, e_k)
    K = [
        [
            [
                (B[i][j][k] - B[j][k][i] + B[k][i][j]) / 2
                for k in range(d)
            ]
            for j in range(d)
        ]
        for i in range(d)
    ]
    gamma = [
        [
            [
                sum(K[i][j][k] * ginv[k][m] for k in range(d))
                for m in range(d)
            ]
            for j in range(d)
        ]
        for i in range(d)
    ]

    ric = [[Fraction(0)] * d for _ in range(d)]
    for j in range(d):
        for k in range(d):
            total = Fraction(0)
            # trace over i of the e_i component of R(e_i, e_j) e_k
            for i in range(d):
                total += sum(
                    gamma[j][k][l] * gamma[i][l][i]
                    - gamma[i][k][l] * gamma[j][l][i]
                    - c[i][j][l] * gamma[l][k][i]
                    for l in range(d)
                )
            ric[j][k] = total
    return tuple(tuple(row) for row in ric)


@dataclass(frozen=True)
class RicciFit:
    """Least-squares fit Ric = lam g + nu eta (x) eta with exact
    residuals; k_contact_residual is max |Ric(xi, e_i) - 2n eta_i|."""

    n: int
    lam: Fraction
    nu: Fraction
    residual: Fraction
    k_contact_residual: Fraction

    @property
    def is_eta_einstein(self) -> bool:
        return self.residual == 0


def eta_fit(alg: MetricAlgebra, ric: Matrix | None = None) -> RicciFit:
    """Fit the Ricci tensor of the algebra to lam g + nu eta (x) eta."""
    d = alg.dim
    if d % 2 == 0 or d < 3:
        raise InvalidInput("eta-Einstein fit needs odd dimension >= 3")
    n = (d - 1) // 2
    if ric is None:
        ric = ricci_tensor(alg)
    g = alg.metric
    eta = alg.eta
    q = [[eta[i] * eta[j] for j in range(d)] for i in range(d)]

    def dot(x, y):
        return sum(x[i][j] * y[i][j] for i in range(d) for j in range(d))

    a11, a12, a22 = dot(g, g), dot(g, q), dot(q, q)
    b1, b2 = dot(g, ric), dot(q, ric)
    det = a11 * a22 - a12 * a12
    if det == 0:
        raise DegenerateMetric("g and eta (x) eta are dependent")
    lam = (b1 * a22 - b2 * a12) / det
    nu = (a11 * b2 - a12 * b1) / det

    residual = max(
        abs(ric[i][j] - lam * g[i][j] - nu * q[i][j])
        for i in range(d)
        for j in range(d)
    )
    r = alg.reeb_index
    kc = max(abs(ric[r][i] - 2 * n * eta[i]) for i in range(d))
    return RicciFit(n, lam, nu, residual, kc)


def heisenberg_algebra(n: int) -> MetricAlgebra:
    """Sasakian frame of the Heisenberg group H(n): orthonormal
    X_1..X_n, Y_1..Y_n, xi with [X_i, Y_i] = 2 xi.

    The factor 2 is the contact normalization: it makes xi a unit
    Killing field with sectional curvature 1 on planes containing it,
    so the fit lands on the null constants (-2, 2n+2).
    """
    if n < 1:
        raise InvalidInput("n must be >= 1")
    d = 2 * n + 1
    c = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for i in range(n):
        c[i][n + i][d - 1] = Fraction(2)
        c[n + i][i][d - 1] = Fraction(-2)
    g = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    return MetricAlgebra(tuple(map(_frac_matrix, c)), _frac_matrix(g), d - 1)


def berger_sphere(a: Rational) -> MetricAlgebra:
    """Transverse homothety of the round 3-sphere with scale a > 0.

    Round frame: [e_i, e_j] = 2 e_k cyclically, identity metric.  The
    deformed structure keeps e_1, e_2 and rescales the Reeb direction
    to xi = e_3 / a; in the frame (e_1, e_2, xi) the metric is
    diag(a, a, 1) and the brackets pick up factors a and 1/a.
    """
    a = Fraction(a)
    if a <= 0:
        raise InvalidInput("scale must be positive")
    z = Fraction(0)
    c = [[[z] * 3 for _ in range(3)] for _ in range(3)]
    for i, j, k, val in (
        (0, 1, 2, 2 * a),
        (1, 2, 0, 2 / a),
        (2, 0, 1, 2 / a),
    ):
        c[i][j][k] = val
        c[j][i][k] = -val
    g = [[a, z, z], [z, a, z], [z, z, Fraction(1)]]
    return MetricAlgebra(tuple(map(_frac_matrix, c)), _frac_matrix(g), 2)


def ew_function_check(
    n: int,
    samples: int | Sequence[float] = 100,
    offset: float = 0.0,
    seed: int = 0,
) -> float:
    """Max residual of f^2 - xibar(f) = -alpha^2 for f = alpha tan(z+c).

    xibar is the rescaled Reeb field alpha d/dz, so the identity reads
    alpha^2 tan^2 - alpha^2 sec^2 + alpha^2 = 0 pointwise.  Floats are
    appropriate here (alpha is irrational); samples within 1e-6 of a
    pole of tan raise PoleProximity instead of returning garbage.
    """
    alpha = math.sqrt(float(heisenberg_alpha_squared(n)))
    if isinstance(samples, int):
        rng = random.Random(seed)
        zs = [rng.uniform(-1.5, 1.5) for _ in range(samples)]
    else:
        zs = [float(z) for z in samples]
    worst = 0.0
    for z in zs:
        t = z + offset
        dist = abs((t - math.pi / 2) % math.pi)
        dist = min(dist, math.pi - dist)
        if dist < 1e-6:
            raise PoleProximity("z + c = %r is within 1e-6 of a pole" % t)
        f = alpha * math.tan(t)
        xibar_f = alpha * (alpha / math.cos(t) ** 2)
        worst = max(worst, abs(f * f - xibar_f + alpha * alpha))
    return worst


__all__ = [
    "MetricAlgebra",
    "RicciFit",
    "ricci_tensor",
    "eta_fit",
    "heisenberg_algebra",
    "berger_sphere",
    "ew_function_check",
]
