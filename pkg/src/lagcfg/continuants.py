"""Continuants, cyclic continuants, tridiagonal determinants and Pfaffians.

The combinatorial engine behind the cross-ratio relation: the index sets
I_n(r) enumerate r-tuples in {0..n} whose (n+1)-cyclic distances all exceed
one (equivalently, matchings of disjoint cyclically-adjacent pairs), the
tridiagonal determinant expands as the diagonal product times an alternating
sum over such pair sets, and the Pfaffian of the banded skew matrix built
from a configuration's nonzero products has a closed form over I_n(r).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import (
    EulerFormulaUndefined,
    FormulaUndefined,
    NotSkew,
    RangeError,
    ZeroCrossRatio,
)


def continuant(a):
    """K_m(a_1..a_m): the tridiagonal determinant with unit off-diagonals."""
    km1, k = 0, 1
    for x in a:
        km1, k = k, x * k - km1
    return k


def cyclic_continuant(a):
    """R_m(a_0..a_{m-1}) = K_m(a) - K_{m-2}(a_1..a_{m-2}), m >= 1."""
    if not a:
        raise RangeError("cyclic continuant needs at least one entry")
    if len(a) == 1:
        return a[0]
    return continuant(a) - continuant(a[1:-1])


def cyclic_continuant_transfer(a):
    """Same value as the trace of the product of [[a_i, -1], [1, 0]] factors."""
    m = ((1, 0), (0, 1))
    for x in a:
        p, q, r, s = m[0][0], m[0][1], m[1][0], m[1][1]
        # multiply on the left by [[x, -1], [1, 0]]
        m = ((x * p - r, x * q - s), (p, q))
    return m[0][0] + m[1][1]


@dataclass
class TridiagData:
    """Size-m tridiagonal data: diagonal, superdiagonal, subdiagonal."""

    diag: list
    sup: list
    sub: list

    def __post_init__(self):
        m = len(self.diag)
        if len(self.sup) != max(m - 1, 0) or len(self.sub) != max(m - 1, 0):
            raise RangeError("off-diagonals must have length m-1")

    @property
    def size(self):
        return len(self.diag)

    def matrix(self, ctx):
        m = self.size
        out = linalg.zeros(m, m, ctx)
        for i in range(m):
            out[i][i] = self.diag[i]
            if i + 1 < m:
                out[i][i + 1] = self.sup[i]
                out[i + 1][i] = self.sub[i]
        return out


def _pair_tuples(limit, closed_max):
    """Increasing tuples from range(limit) with gaps >= 2, up to closed_max long."""
    out = [[()]]
    for r in range(1, closed_max + 1):
        level = []
        for shorter in out[r - 1]:
            start = shorter[-1] + 2 if shorter else 0
            for k in range(start, limit):
                level.append(shorter + (k,))
        out.append(level)
    return out


def tridiag_det(data, method="direct", ctx=None):
    """Determinant of a tridiagonal matrix by recursion or the closed formula.

    ``direct`` is the three-term recursion (always defined); ``euler_formula``
    is the diagonal product times the alternating sum over disjoint adjacent
    pairs, which divides by diagonal entries and is undefined if any vanish.
    """
    m = data.size
    if method == "direct":
        dm2, dm1 = 0, 1
        for k in range(m):
            dm2, dm1 = dm1, data.diag[k] * dm1 - (
                data.sup[k - 1] * data.sub[k - 1] * dm2 if k else 0
            )
        return dm1
    if method != "euler_formula":
        raise ValueError(f"unknown method {method!r}")
    for x in data.diag:
        if (ctx is not None and ctx.is_zero(x)) or (ctx is None and x == 0):
            raise EulerFormulaUndefined("zero diagonal entry in formula mode")
    base = 1
    for x in data.diag:
        base = base * x
    total = base  # r = 0 term
    levels = _pair_tuples(m - 1, m // 2)
    sign = 1
    for r in range(1, m // 2 + 1):
        sign = -sign
        for tup in levels[r]:
            term = base
            for k in tup:
                term = term * data.sup[k] * data.sub[k] / (data.diag[k] * data.diag[k + 1])
            total = total + sign * term
    return total


def index_set(n, r):
    """I_n(r): increasing r-tuples in {0..n} with (n+1)-cyclic gaps > 1."""
    if r < 1 or r > (n + 1) // 2:
        raise RangeError(f"r = {r} outside 1..{(n + 1) // 2}")
    out = []

    def rec(start, tup):
        if len(tup) == r:
            if not (tup[0] == 0 and tup[-1] == n):
                out.append(tuple(tup))
            return
        for k in range(start, n + 1):
            rec(k + 2, tup + [k])

    rec(0, [])
    return out


def index_set_size(n, r):
    """|I_n(r)| by the matching count on an (n+1)-cycle."""
    from math import comb

    m = n + 1
    return m * comb(m - r, r) // (m - r)


def gen_eq_value(c):
    """Left side of the cross-ratio relation: 1 + sum (-1)^r / (c_{i_1}..c_{i_r})."""
    n = len(c) - 1
    if n < 0:
        raise RangeError("empty cross-ratio vector")
    for x in c:
        if x == 0:
            raise ZeroCrossRatio("cross-ratios must be nonzero")
    total = 1 + 0 * c[0]
    sign = 1
    for r in range(1, (n + 1) // 2 + 1):
        sign = -sign
        for tup in index_set(n, r):
            prod = c[tup[0]]
            for k in tup[1:]:
                prod = prod * c[k]
            total = total + sign / prod
    return total


def gen_eq_residual_scale(c):
    """Largest monomial magnitude in the relation (for normalized residuals)."""
    n = len(c) - 1
    scale = 1.0
    for r in range(1, (n + 1) // 2 + 1):
        for tup in index_set(n, r):
            prod = 1.0
            for k in tup:
                prod *= abs(complex(c[k]))
            if prod > 0:
                scale = max(scale, 1.0 / prod)
    return scale


# -- Pfaffians ---------------------------------------------------------------


def pfaffian(mat, ctx):
    """Pfaffian of a skew matrix, convention pf([[0, a], [-a, 0]]) = a.

    Skew congruence elimination: each update is det-1 congruence, so the
    value is exact in rational mode; complex mode pivots on magnitude.
    """
    sz = len(mat)
    for i in range(sz):
        if len(mat[i]) != sz:
            raise NotSkew("matrix is not square")
        for k in range(sz):
            if not ctx.approx_eq(mat[i][k], -mat[k][i]):
                raise NotSkew("matrix is not skew-symmetric")
    if sz == 0:
        return ctx.one()
    if sz % 2:
        return ctx.zero()
    a = linalg.copy_matrix(mat)
    sign = 1
    result = ctx.one()
    for k in range(0, sz, 2):
        piv = None
        if ctx.is_rational:
            for j in range(k + 1, sz):
                if a[j][k] != 0:
                    piv = j
                    break
        else:
            best = ctx.eps_abs
            for j in range(k + 1, sz):
                if abs(a[j][k]) > best:
                    piv, best = j, abs(a[j][k])
        if piv is None:
            return ctx.zero()
        if piv != k + 1:
            a[k + 1], a[piv] = a[piv], a[k + 1]
            for row in a:
                row[k + 1], row[piv] = row[piv], row[k + 1]
            sign = -sign
        for j in range(k + 2, sz):
            if not ctx.is_zero(a[j][k]):
                f = a[j][k] / a[k + 1][k]
                a[j] = [x - f * y for x, y in zip(a[j], a[k + 1])]
                for row in a:
                    row[j] = row[j] - f * row[k + 1]
        for j in range(k + 2, sz):
            if not ctx.is_zero(a[j][k + 1]):
                f = a[j][k + 1] / a[k][k + 1]
                a[j] = [x - f * y for x, y in zip(a[j], a[k])]
                for row in a:
                    row[j] = row[j] - f * row[k]
        result = result * a[k][k + 1]
    return sign * result


@dataclass
class OmegaData:
    """Banded skew data of a (2n+2)-point configuration Gram.

    ``corner_low`` and ``corner_high`` are the two in-block entries
    omega_{0,n} and omega_{n+1,2n+1}; ``diag``, ``upper`` and ``lower`` are
    the tridiagonal cross-block band omega_{i,i+n+1}, omega_{i,i+n+2} and
    omega_{i+1,i+n+1}.
    """

    n: int
    corner_low: object
    corner_high: object
    diag: list
    upper: list
    lower: list

    def __post_init__(self):
        n = self.n
        if len(self.diag) != n + 1 or len(self.upper) != n or len(self.lower) != n:
            raise RangeError("band lengths must be n+1, n, n")

    @classmethod
    def from_configuration(cls, cfg):
        n = cfg.n
        if cfg.N != 2 * n + 2:
            raise RangeError("banded Gram data needs N = 2n+2")
        return cls(
            n=n,
            corner_low=cfg.omega(0, n),
            corner_high=cfg.omega(n + 1, 2 * n + 1),
            diag=[cfg.omega(i, i + n + 1) for i in range(n + 1)],
            upper=[cfg.omega(i, i + n + 2) for i in range(n)],
            lower=[cfg.omega(i + 1, i + n + 1) for i in range(n)],
        )

    def matrix(self, ctx):
        n = self.n
        sz = 2 * n + 2
        m = linalg.zeros(sz, sz, ctx)
        m[0][n] = self.corner_low
        m[n + 1][2 * n + 1] = self.corner_high
        for i in range(n + 1):
            m[i][n + 1 + i] = self.diag[i]
        for i in range(n):
            m[i][n + 2 + i] = self.upper[i]
            m[i + 1][n + 1 + i] = self.lower[i]
        for i in range(sz):
            for k in range(i + 1, sz):
                m[k][i] = -m[i][k]
        return m


def pfaffian_omega(data, method, ctx):
    """Pfaffian of the banded skew matrix, by closed formula or elimination."""
    n = data.n
    if method == "generic":
        return pfaffian(data.matrix(ctx), ctx)
    if method != "formula":
        raise ValueError(f"unknown method {method!r}")
    for x in data.diag:
        if ctx.is_zero(x):
            raise FormulaUndefined("formula mode divides by the diameters")
    base = ctx.one()
    for x in data.diag:
        base = base * x

    def ratio(i):
        if i < n:
            return (data.upper[i] * data.lower[i]) / (data.diag[i] * data.diag[i + 1])
        return (data.corner_low * data.corner_high) / (data.diag[n] * data.diag[0])

    total = ctx.one()
    sign = 1
    for r in range(1, (n + 1) // 2 + 1):
        sign = -sign
        for tup in index_set(n, r):
            term = ctx.one()
            for i in tup:
                term = term * ratio(i)
            total = total + sign * term
    lead = -ctx.one() if (n * (n + 1) // 2) % 2 else ctx.one()
    return lead * base * total


def block_pfaffian(a, x, y, ctx):
    """Both sides of the bordered-skew Pfaffian identity, plus their difference.

    Assembles [[x E, A], [-A^T, y E]] with E = e_{1,m} - e_{m,1} and compares
    its Pfaffian with (-1)^{m(m-1)/2} (det A - x y det A_mid).
    """
    m = len(a)
    if m < 2 or any(len(row) != m for row in a):
        raise RangeError("block data needs a square matrix of size >= 2")
    sz = 2 * m
    big = linalg.zeros(sz, sz, ctx)
    big[0][m - 1] = x
    big[m - 1][0] = -x
    big[m][2 * m - 1] = y
    big[2 * m - 1][m] = -y
    for i in range(m):
        for k in range(m):
            big[i][m + k] = a[i][k]
            big[m + k][i] = -a[i][k]
    lhs = pfaffian(big, ctx)
    mid = [row[1 : m - 1] for row in a[1 : m - 1]]
    rhs = linalg.det(a, ctx) - x * y * linalg.det(mid, ctx)
    if (m * (m - 1) // 2) % 2:
        rhs = -rhs
    return lhs, rhs, lhs - rhs
