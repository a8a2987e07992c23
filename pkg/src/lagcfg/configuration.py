"""Lagrangian configurations of lines in K^2n.

A configuration stores N representative vectors x_0..x_{N-1} (0-based
throughout; classical sources often start at 1 or mix origins, and every
formula in this package has been translated once to the 0-based antiperiodic
convention x_{i +- N} = -x_i).  Line-level semantics are recovered by using
only rescale-invariant quantities downstream.

Index translation table (1-based source convention -> here):
    x_1..x_N            -> points[0..N-1]
    omega_{i,j}         -> cfg.omega(i-1, j-1)
    first 2n standard   -> positions 0..2n-1
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import linalg, symplectic
from .errors import (
    DimensionMismatch,
    NotRealField,
    RankDeficient,
    SamplingFailed,
    UndefinedCrossRatio,
    WrongN,
    ZeroProductEntry,
)
from .fields import COMPLEX, RATIONAL, FieldContext, complex_ctx
from .seeding import rng_for


def cyclic_distance(i, j, N):
    """min over q of |i - j + q*N| (separation modulo N)."""
    if N < 1:
        raise ValueError("N must be positive")
    d = (i - j) % N
    return min(d, N - d)


class Configuration:
    """N-tuple of nonzero vectors in K^2n with antiperiodic index semantics."""

    def __init__(self, n, N, points, ctx, real=None):
        if N < 2 * n:
            raise WrongN(f"N = {N} below 2n = {2 * n}")
        if len(points) != N:
            raise DimensionMismatch(f"expected {N} points, got {len(points)}")
        coerced = []
        for p in points:
            if len(p) != 2 * n:
                raise DimensionMismatch("point dimension differs from 2n")
            v = tuple(ctx.coerce(x) for x in p)
            if all(ctx.is_zero(x) for x in v):
                raise DimensionMismatch("configuration points must be nonzero")
            coerced.append(v)
        self.n = n
        self.N = N
        self.points = tuple(coerced)
        self.ctx = ctx
        if real is None:
            real = ctx.is_rational
        self.real = bool(real)
        self._gram = None

    # -- antiperiodic access -------------------------------------------------

    def point(self, i):
        """Representative x_i for any integer i, with x_{i+-N} = -x_i."""
        q, r = divmod(i, self.N)
        p = self.points[r]
        if q % 2:
            return tuple(-x for x in p)
        return p

    @property
    def gram(self):
        if self._gram is None:
            self._gram = symplectic.gram(self.points, self.n).entries
        return self._gram

    def omega(self, i, j):
        """omega(x_i, x_j) for arbitrary integers i, j."""
        qi, ri = divmod(i, self.N)
        qj, rj = divmod(j, self.N)
        v = self.gram[ri][rj]
        if (qi + qj) % 2:
            return -v
        return v

    @property
    def is_real_field(self):
        return self.ctx.is_rational or self.real

    # -- conversions -----------------------------------------------------------

    def with_points(self, points, real=None):
        return Configuration(self.n, self.N, points, self.ctx,
                             self.real if real is None else real)

    def to_complex(self, ctx=None):
        """Embed into complex mode (rational input keeps its real flag)."""
        ctx = ctx or complex_ctx()
        pts = [[complex(x) for x in p] for p in self.points]
        return Configuration(self.n, self.N, pts, ctx, real=self.real)

    def to_json(self):
        return {
            "field": self.ctx.kind,
            "real": self.real,
            "n": self.n,
            "N": self.N,
            "points": [[self.ctx.encode(x) for x in p] for p in self.points],
        }

    def __repr__(self):
        return f"Configuration(n={self.n}, N={self.N}, field={self.ctx.kind})"


def config_from_json(obj, ctx=None):
    kind = obj.get("field")
    if kind not in (RATIONAL, COMPLEX):
        raise ValueError(f"unknown field kind {kind!r}")
    if ctx is None:
        ctx = FieldContext(kind)
    elif ctx.kind != kind:
        raise ValueError("context kind does not match the stored field")
    n, N = int(obj["n"]), int(obj["N"])
    pts = obj["points"]
    if len(pts) != N:
        raise ValueError(f"expected {N} points, found {len(pts)}")
    points = [[ctx.parse(x) for x in p] for p in pts]
    return Configuration(n, N, points, ctx, real=bool(obj.get("real", kind == RATIONAL)))


# -- validity ------------------------------------------------------------------


@dataclass
class ValidityReport:
    is_lagrangian: bool
    is_spanning: bool
    is_generic: bool
    offending: list = field(default_factory=list)

    @property
    def is_valid(self):
        return self.is_lagrangian and self.is_spanning

    def to_json(self):
        return {
            "is_lagrangian": self.is_lagrangian,
            "is_spanning": self.is_spanning,
            "is_generic": self.is_generic,
            "offending": [list(t) for t in self.offending],
        }


def validate(cfg):
    """Check the Lagrangian / spanning / genericity conditions independently."""
    n, N, ctx = cfg.n, cfg.N, cfg.ctx
    offending = []
    lagr = True
    spanning = True
    generic = True
    for i in range(N):
        for j in range(i + 1, N):
            d = cyclic_distance(i, j, N)
            entry = cfg.gram[i][j]
            if d < n:
                if not ctx.is_zero(entry):
                    lagr = False
                    offending.append((i, j, "nonzero-inside-band"))
            else:
                if ctx.is_zero(entry):
                    generic = False
                    offending.append((i, j, "zero-outside-band"))
                    if d == n:
                        spanning = False
    return ValidityReport(lagr, spanning, generic, offending)


# -- invariants ------------------------------------------------------------------


def cross_ratio(cfg, i1, i2, j1, j2):
    """Symplectic cross-ratio [x_i1, x_i2; x_j1, x_j2]."""
    ctx = cfg.ctx
    d1, d2 = cfg.omega(i1, j2), cfg.omega(i2, j1)
    if ctx.is_zero(d1) or ctx.is_zero(d2):
        raise UndefinedCrossRatio(f"zero denominator for indices {(i1, i2, j1, j2)}")
    return (cfg.omega(i1, j1) * cfg.omega(i2, j2)) / (d1 * d2)


def sequence_cross_ratios(cfg):
    """The N-periodic cross-ratios c_i = [x_i, x_{i+1}; x_{i+n+1}, x_{i+n+2}]."""
    if cfg.N < 2 * cfg.n + 2:
        raise WrongN("sequence cross-ratios need N >= 2n+2")
    return [cross_ratio(cfg, i, i + 1, i + cfg.n + 1, i + cfg.n + 2) for i in range(cfg.N)]


def diametric_cross_ratios(cfg):
    """(c_0, ..., c_n) for N = 2n+2; always defined on valid configurations."""
    if cfg.N != 2 * cfg.n + 2:
        raise WrongN(f"diametric cross-ratios need N = 2n+2, got N = {cfg.N}")
    n, ctx = cfg.n, cfg.ctx
    out = []
    for i in range(n + 1):
        den1 = cfg.omega(i - n, i)
        den2 = cfg.omega(i + 1, i + n + 1)
        if ctx.is_zero(den1) or ctx.is_zero(den2):
            raise UndefinedCrossRatio("vanishing subdiameter; configuration not spanning")
        out.append((cfg.omega(i, i + n + 1) * cfg.omega(i + 1, i + n + 2)) / (den1 * den2))
    return out


def gamma(cfg, i, j):
    """The invariant omega_ij omega_{i+n,j+n} / (omega_{i,i+n} omega_{j,j+n})."""
    n = cfg.n
    return (cfg.omega(i, j) * cfg.omega(i + n, j + n)) / (
        cfg.omega(i, i + n) * cfg.omega(j, j + n)
    )


def opposite(cfg):
    """Image under diag(Id, -Id), which negates all symplectic products."""
    n = cfg.n
    pts = [list(p[:n]) + [-x for x in p[n:]] for p in cfg.points]
    return cfg.with_points(pts)


def sign_invariant(cfg, path):
    """Sign of prod omega_{j_{s-1}, j_s} over a closed index path (real only)."""
    if not cfg.is_real_field:
        raise NotRealField("sign invariants are defined over the reals")
    if len(path) < 2 or (path[0] - path[-1]) % cfg.N != 0:
        raise ValueError("path must close up modulo N")
    prod = cfg.ctx.one()
    for a, b in zip(path, path[1:]):
        w = cfg.omega(a, b)
        if cfg.ctx.is_zero(w):
            raise ZeroProductEntry(f"omega({a},{b}) vanishes along the path")
        prod *= w
    return cfg.ctx.sign(prod)


# -- standard representatives -----------------------------------------------------


def standardize(cfg):
    """Equivalent configuration with standard representatives.

    Positions 0..n-1 become e_1..e_n, position n becomes f_1 and positions
    n+j carry f_{j+1} plus a combination of earlier f's.  The remaining
    points are transported by the same symplectic map.
    """
    n, N, ctx = cfg.n, cfg.N, cfg.ctx
    report = validate(cfg)
    if not report.is_valid:
        raise RankDeficient("standard form needs a valid configuration")
    zero, one = ctx.zero(), ctx.one()
    targets = []
    for i in range(n):
        v = [zero] * (2 * n)
        v[i] = one
        targets.append(v)
    for j in range(n):
        v = [zero] * (2 * n)
        for i in range(n):
            v[n + i] = cfg.gram[i][n + j]
        targets.append(v)
    t = symplectic.reconstruct_transform(
        [list(p) for p in cfg.points[: 2 * n]], targets, ctx
    )
    new_pts = [linalg.mat_vec(t, list(p)) for p in cfg.points]
    for j in range(n):
        scale = cfg.gram[j][n + j]
        new_pts[n + j] = [x / scale for x in new_pts[n + j]]
    out = cfg.with_points(new_pts)
    out._standard_transform = t
    return out


# -- random sampling -----------------------------------------------------------


def _int_omega(u, v):
    n = len(u) // 2
    return sum(u[i] * v[n + i] - u[n + i] * v[i] for i in range(n))


def _sample_point_int(rng, basis, forbid, dim, tries=64):
    for _ in range(tries):
        y = [0] * dim
        for b in basis:
            c = rng.randint(-3, 3)
            if c:
                for k in range(dim):
                    y[k] += c * b[k]
        if all(v == 0 for v in y):
            continue
        g = 0
        for v in y:
            g = math.gcd(g, abs(v))
        if g > 1:
            y = [v // g for v in y]
        if all(_int_omega(x, y) != 0 for x in forbid):
            return y
    return None


def random_config(n, N, seed, ctx, force_isotropic=(), max_restarts=64):
    """Seeded generic (n, N)-configuration built line by line.

    Each new point is drawn with small integer coefficients from the
    subspace enforcing the isotropy constraints against already-chosen
    points, then rejected unless all non-forced products are nonzero.
    ``force_isotropic`` adds extra zero pairs (for deliberately non-generic
    but still spanning samples).
    """
    if N < 2 * n:
        raise WrongN(f"N = {N} below 2n = {2 * n}")
    rng = rng_for(seed, "cfg", n, N, ctx.kind)
    dim = 2 * n
    forced = {(min(a % N, b % N), max(a % N, b % N)) for a, b in force_isotropic}
    for a, b in forced:
        if cyclic_distance(a, b, N) < n:
            raise ValueError("forced isotropic pairs must be outside the Lagrangian band")
    gaussian = not ctx.is_rational

    for _ in range(max_restarts):
        points = []
        ok = True
        for i in range(N):
            iso = [j for j in range(i) if cyclic_distance(i, j, N) < n and j != i]
            iso += [j for j in range(i) if (min(i, j), max(i, j)) in forced]
            nonzero = [
                points[j]
                for j in range(i)
                if cyclic_distance(i, j, N) >= n and (min(i, j), max(i, j)) not in forced
            ]
            if gaussian:
                rows = [_jrow(list(points[j]), dim) for j in iso]
                basis = linalg.nullspace(rows, ctx) if rows else [
                    row[:] for row in linalg.identity(dim, ctx)
                ]
                y = _sample_complex_point(rng, basis, nonzero, dim, ctx)
            else:
                rows = [_jrow([int(x) for x in points[j]], dim) for j in iso]
                basis = linalg.int_nullspace(rows, dim)
                y = _sample_point_int(
                    rng, basis, [[int(v) for v in p] for p in nonzero], dim
                )
            if y is None:
                ok = False
                break
            points.append([ctx.coerce(v) for v in y])
        if not ok:
            continue
        cfg = Configuration(n, N, points, ctx)
        report = validate(cfg)
        target_ok = report.is_valid and (report.is_generic or bool(forced))
        if target_ok:
            return cfg
    raise SamplingFailed(f"could not sample a generic ({n},{N}) configuration")


def _jrow(x, dim):
    """Row r with r . y = omega(x, y), for any scalar coordinate list."""
    n = dim // 2
    return [-x[n + k] for k in range(n)] + [x[k] for k in range(n)]


def _sample_complex_point(rng, basis, forbid, dim, ctx, tries=64):
    for _ in range(tries):
        y = [ctx.zero()] * dim
        for b in basis:
            c = complex(rng.randint(-3, 3), rng.randint(-3, 3))
            if c:
                y = [yy + c * bb for yy, bb in zip(y, b)]
        if all(ctx.is_zero(v) for v in y):
            continue
        if all(not ctx.is_zero(symplectic.omega(x, y)) for x in forbid):
            return y
    return None
