"""The standard symplectic space (K^2n, omega).

Coordinates are taken in the ordered basis (e_1..e_n, f_1..f_n), so that
omega(e_i, f_j) = delta_ij and the form matrix is J = [[0, I], [-I, 0]].
Provides symplectic products, Gram matrices, rank, reconstruction of the
unique symplectic map matching two equal-Gram spanning families, symplectic
congruence reduction of nonsingular skew forms, and seeded random
symplectic matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import DimensionMismatch, GramMismatch, NotSkew, RankDeficient
from .fields import FieldContext
from .seeding import rng_for


def omega(u, v):
    """Standard symplectic product of two coordinate vectors."""
    if len(u) != len(v) or len(u) % 2:
        raise DimensionMismatch("symplectic product needs equal even dimensions")
    n = len(u) // 2
    return sum(u[i] * v[n + i] - u[n + i] * v[i] for i in range(n))


def j_matrix(n, ctx):
    """Matrix of omega in the standard basis."""
    m = linalg.zeros(2 * n, 2 * n, ctx)
    one = ctx.one()
    for i in range(n):
        m[i][n + i] = one
        m[n + i][i] = -one
    return m


@dataclass
class GramMatrix:
    """Skew matrix of pairwise symplectic products of m vectors in K^2n."""

    n: int
    entries: list

    @property
    def size(self):
        return len(self.entries)

    def to_json(self, ctx):
        return {
            "n": self.n,
            "N": self.size,
            "entries": [[ctx.encode(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj, ctx):
        entries = [[ctx.parse(x) for x in row] for row in obj["entries"]]
        if len(entries) != obj["N"] or any(len(r) != obj["N"] for r in entries):
            raise ValueError("Gram entry shape does not match N")
        return cls(n=obj["n"], entries=entries)


def gram(xs, n=None):
    """Gram matrix of symplectic products omega(x_i, x_j)."""
    dims = {len(x) for x in xs}
    if len(dims) > 1:
        raise DimensionMismatch("mixed vector dimensions")
    dim = dims.pop() if dims else 0
    if n is None:
        n = dim // 2
    entries = [[omega(xi, xj) for xj in xs] for xi in xs]
    return GramMatrix(n=n, entries=entries)


def gram_rank(g, ctx):
    return linalg.rank(g.entries, ctx)


def is_symplectic(t, ctx):
    """Whether t^T J t = J within the context's tolerance."""
    sz = len(t)
    if sz % 2 or any(len(row) != sz for row in t):
        return False
    n = sz // 2
    j = j_matrix(n, ctx)
    lhs = linalg.matmul(linalg.matmul(linalg.transpose(t), j), t)
    return all(
        ctx.approx_eq(lhs[i][k], j[i][k]) for i in range(sz) for k in range(sz)
    )


def _grams_equal(ga, gb, ctx):
    if ga.size != gb.size:
        return False
    return all(
        ctx.approx_eq(ga.entries[i][k], gb.entries[i][k])
        for i in range(ga.size)
        for k in range(ga.size)
    )


def reconstruct_transform(xs, ys, ctx):
    """The unique symplectic T with T(x_i) = y_i, given equal rank-2n Grams."""
    if len(xs) != len(ys):
        raise DimensionMismatch("vector families differ in length")
    dim = len(xs[0])
    n = dim // 2
    ga, gb = gram(xs, n), gram(ys, n)
    if not _grams_equal(ga, gb, ctx):
        raise GramMismatch("the two families have different Gram matrices")
    if gram_rank(ga, ctx) != 2 * n:
        raise RankDeficient("Gram rank below 2n; families do not span")
    cols = linalg.independent_columns(xs, 2 * n, ctx)
    x_mat = linalg.transpose([list(xs[i]) for i in cols])
    y_mat = linalg.transpose([list(ys[i]) for i in cols])
    t = linalg.transpose(linalg.solve(linalg.transpose(x_mat), linalg.transpose(y_mat), ctx))
    for x, y in zip(xs, ys):
        tx = linalg.mat_vec(t, list(x))
        if not all(ctx.approx_eq(a, b) for a, b in zip(tx, y)):
            raise GramMismatch("reconstructed map fails on a non-basis vector")
    return t


def symplectic_basis_from_form(g, ctx):
    """Coordinates realizing a nonsingular skew form as the standard omega.

    Given a nonsingular skew 2m x 2m matrix ``g``, returns a 2m x 2m matrix
    M whose columns v_1..v_2m satisfy omega(v_i, v_j) = g[i][j].
    """
    sz = len(g)
    if sz % 2:
        raise NotSkew("odd-size skew form is singular")
    for i in range(sz):
        for k in range(sz):
            if not ctx.approx_eq(g[i][k], -g[k][i]):
                raise NotSkew("form matrix is not skew-symmetric")
    m = sz // 2

    def form(u, v):
        return sum(u[i] * s for i, s in enumerate(linalg.mat_vec(g, v)))

    remaining = [row[:] for row in linalg.identity(sz, ctx)]
    pairs = []
    for _ in range(m):
        u = remaining.pop(0)
        pick, best = None, ctx.eps_abs if not ctx.is_rational else 0
        for idx, w in enumerate(remaining):
            val = form(u, w)
            if ctx.is_rational:
                if val != 0:
                    pick = idx
                    break
            else:
                if abs(val) > best:
                    pick, best = idx, abs(val)
        if pick is None:
            raise RankDeficient("skew form is degenerate")
        w = remaining.pop(pick)
        scale = form(u, w)
        w = [x / scale for x in w]
        pairs.append((u, w))
        projected = []
        for x in remaining:
            bu, bw = form(x, u), form(x, w)
            projected.append([xx + bu * ww - bw * uu for xx, uu, ww in zip(x, u, w)])
        remaining = projected
    c_cols = [p[0] for p in pairs] + [p[1] for p in pairs]
    c = linalg.transpose(c_cols)
    return linalg.inverse(c, ctx)


def random_symplectic(n, seed, ctx, factors=6):
    """Deterministic random element of Sp(2n) from elementary factors."""
    rng = rng_for(seed, "sp", n)
    t = linalg.identity(2 * n, ctx)
    for _ in range(factors):
        kind = rng.choice(("diag", "upper", "lower"))
        f = linalg.identity(2 * n, ctx)
        if kind == "diag":
            for i in range(n):
                d = ctx.coerce(rng.choice([-3, -2, -1, 1, 2, 3]))
                f[i][i] = d
                f[n + i][n + i] = ctx.one() / d
        else:
            s = [[ctx.coerce(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
            for i in range(n):
                for k in range(i + 1, n):
                    s[k][i] = s[i][k]
            for i in range(n):
                for k in range(n):
                    if kind == "upper":
                        f[i][n + k] = s[i][k]
                    else:
                        f[n + i][k] = s[i][k]
        t = linalg.matmul(t, f)
    return t
