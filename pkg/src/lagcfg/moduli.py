"""Moduli-space toolkit for N = 2n+2 (plus the trivial N = 2n, 2n+1 cases).

Covers the single relation satisfied by the diametric cross-ratios,
construction of a configuration realizing prescribed cross-ratios,
the equivalence decision with explicit symplectic witnesses, the four
normalization schemes, and reduction of the trivial moduli to canonical
representatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import configuration as cfgmod
from . import symplectic
from .configuration import Configuration, diametric_cross_ratios, opposite, validate
from .continuants import (
    cyclic_continuant,
    gen_eq_residual_scale,
    gen_eq_value,
    index_set,
)
from .errors import (
    GramMismatch,
    InvalidConfiguration,
    NotGeneric,
    NotRealField,
    ParityMismatch,
    PositivityFailed,
    RelationViolated,
    RequiresExtension,
    WrongN,
    WrongParity,
    ZeroCrossRatio,
)
from .fields import FieldContext
from .seeding import rng_for

RELATION_TOL = 1e-8

CONSTRUCTION_MODES = ("unit_diameters", "even_roots", "odd_rational", "odd_symmetric")
NORMALIZATION_SCHEMES = (
    "even_complex",
    "even_real",
    "odd_complex",
    "odd_real",
    "subdiameters_one",
)


# -- relation ------------------------------------------------------------------


def check_relation(c, n, ctx):
    """Residual of the cross-ratio relation; zero exactly on the hypersurface."""
    if len(c) != n + 1:
        raise WrongN(f"expected {n + 1} cross-ratios, got {len(c)}")
    vals = [ctx.coerce(x) for x in c]
    if any(ctx.is_zero(x) for x in vals):
        raise ZeroCrossRatio("cross-ratios must be nonzero")
    return gen_eq_value(vals)


def relation_residual_magnitude(c, n, ctx):
    """|residual| normalized by the largest monomial magnitude (complex mode)."""
    res = check_relation(c, n, ctx)
    if ctx.is_rational:
        return 0.0 if res == 0 else float("inf")
    return abs(complex(res)) / gen_eq_residual_scale([ctx.coerce(x) for x in c])


def solve_last_cross_ratio(c_head, n, ctx):
    """The unique c_n closing the relation for given nonzero c_0..c_{n-1}.

    The relation is affine in 1/c_n because no index tuple repeats n.
    """
    if len(c_head) != n:
        raise WrongN(f"expected {n} leading cross-ratios")
    vals = [ctx.coerce(x) for x in c_head]
    if any(ctx.is_zero(x) for x in vals):
        raise ZeroCrossRatio("cross-ratios must be nonzero")
    alpha = ctx.one()
    beta = ctx.zero()
    sign = 1
    for r in range(1, (n + 1) // 2 + 1):
        sign = -sign
        for tup in index_set(n, r):
            if tup[-1] == n:
                prod = ctx.one()
                for k in tup[:-1]:
                    prod = prod * vals[k]
                beta = beta + sign / prod
            else:
                prod = ctx.one()
                for k in tup:
                    prod = prod * vals[k]
                alpha = alpha + sign / prod
    if ctx.is_zero(alpha):
        raise ZeroCrossRatio("leading cross-ratios make the relation degenerate")
    c_n = -beta / alpha
    if ctx.is_zero(c_n):
        raise ZeroCrossRatio("closing cross-ratio vanishes")
    return c_n


def random_relation_vector(n, seed, ctx, max_tries=128):
    """Seeded nonzero cross-ratio vector satisfying the relation."""
    rng = rng_for(seed, "relvec", n, ctx.kind)
    for _ in range(max_tries):
        if ctx.is_rational:
            head = [
                ctx.coerce(rng.randint(1, 9)) / rng.randint(1, 9)
                * rng.choice((1, -1))
                for _ in range(n)
            ]
        else:
            head = [
                complex(rng.randint(-9, 9), rng.randint(-9, 9)) / 3.0 for _ in range(n)
            ]
        if any(ctx.is_zero(x) for x in head):
            continue
        try:
            last = solve_last_cross_ratio(head, n, ctx)
        except ZeroCrossRatio:
            continue
        if not ctx.is_rational and abs(last) < 1e-3:
            continue
        return head + [last]
    raise RelationViolated("could not sample a relation-satisfying vector")


# -- construction from cross-ratios ------------------------------------------------


def _band_gram(n, subdiam, diam, ctx):
    """Full (2n+2) Gram matrix from subdiameter and diameter sequences."""
    N = 2 * n + 2
    g = [[ctx.zero() for _ in range(N)] for _ in range(N)]
    for i in range(N):
        for j in range(i + 1, N):
            d = j - i
            if d == n:
                v = subdiam[i]
            elif d == n + 1:
                v = diam[i % (n + 1)]
            elif d == n + 2:
                v = subdiam[(i + n + 2) % N]
            else:
                continue
            g[i][j] = v
            g[j][i] = -v
    return g


def _points_from_band(n, band, ctx):
    """Representatives realizing a banded Gram (three-term determinant recursion)."""
    N = 2 * n + 2
    dim = 2 * n
    zero = ctx.zero()

    def w(i, j):
        return band[i % N][j % N] if 0 <= i < N and 0 <= j < N else zero

    pts = [None] * N
    for i in range(1, n + 1):
        v = [zero] * dim
        v[i - 1] = ctx.one()
        pts[i] = v
    for i in range(1, n + 1):
        v = [zero] * dim
        for k in range(max(1, i - 2), i + 1):
            v[dim // 2 + k - 1] = w(k, i + n)
        pts[i + n] = v

    # d_i = det of the leading band minors; both tails satisfy the same recursion
    d = [None, ctx.one()]
    dp = [None, w(0, 1 + n)]
    if n >= 2:
        d.append(w(1, 2 + n))
        dp.append(w(0, 1 + n) * w(1, 2 + n) - w(0, 2 + n) * w(1, 1 + n))
    for i in range(3, n + 1):
        coeff1 = w(i - 1, i + n)
        coeff2 = w(i - 1, i + n - 1) * w(i - 2, i + n)
        d.append(coeff1 * d[i - 1] - coeff2 * d[i - 2])
        dp.append(coeff1 * dp[i - 1] - coeff2 * dp[i - 2])

    inv_prod = ctx.one()
    e_last = [zero] * dim
    e_zero = [zero] * dim
    for i in range(1, n + 1):
        inv_prod = inv_prod / w(i, i + n)
        s = -inv_prod if i % 2 else inv_prod
        e_last[i - 1] = s * d[i]
        e_zero[i - 1] = s * dp[i]

    v = [zero] * dim
    if n >= 2:
        v[dim // 2 + n - 2] = w(n - 1, 2 * n + 1)
    v[dim // 2 + n - 1] = w(n, 2 * n + 1)
    scale = w(1 + n, 2 * n + 1)
    pts[2 * n + 1] = [a + scale * b for a, b in zip(v, e_last)]

    v0 = [zero] * dim
    v0[dim // 2 + n - 1] = -w(0, n)
    pts[0] = [a - b for a, b in zip(v0, e_zero)]
    return pts


def _verify_band(cfg, band, ctx):
    N = cfg.N
    for i in range(N):
        for j in range(N):
            if not _close(ctx, cfg.gram[i][j], band[i][j]):
                return (i, j)
    return None


def _close(ctx, x, y, slack=1e4):
    if ctx.is_rational:
        return x == y
    return abs(x - y) <= max(ctx.eps_abs * slack, ctx.eps_rel * slack * max(abs(x), abs(y)))


def from_cross_ratios(c, n, mode, ctx, verify=True):
    """A generic (n, 2n+2)-configuration with prescribed diametric cross-ratios.

    Modes fix the residual gauge freedom of the nonzero products:

    * ``unit_diameters``: all diameters 1, decoupled subdiameter pairs; exact
      over the rationals for every n.
    * ``even_roots``: subdiameters 1 (or alternating signs over a real field
      with negative cross-ratio product), diameters from square roots; n even.
    * ``odd_rational``: one distinguished subdiameter carries the alternating
      cross-ratio product, everything else rational; n odd.
    * ``odd_symmetric``: subdiameters alternate between a scalar and its
      reciprocal with balanced diameter products; n odd, complex only.
    """
    if len(c) != n + 1:
        raise WrongN(f"expected {n + 1} cross-ratios")
    vals = [ctx.coerce(x) for x in c]
    if any(ctx.is_zero(x) for x in vals):
        raise ZeroCrossRatio("cross-ratios must be nonzero")
    if ctx.is_rational:
        if gen_eq_value(vals) != 0:
            raise RelationViolated("cross-ratios do not satisfy the relation")
    else:
        if relation_residual_magnitude(vals, n, ctx) > RELATION_TOL:
            raise RelationViolated("cross-ratio relation residual above tolerance")

    N = 2 * n + 2
    one = ctx.one()
    if mode == "unit_diameters":
        diam = [one] * (n + 1)
        subdiam = [one] * (n + 1) + [one / vals[(j - 1) % (n + 1)] for j in range(n + 1)]
    elif mode == "even_roots":
        if n % 2:
            raise WrongParity("even_roots needs n even")
        subdiam, diam = _even_roots_band(vals, n, ctx)
    elif mode == "odd_rational":
        if n % 2 == 0:
            raise WrongParity("odd_rational needs n odd")
        prod = one
        for i, x in enumerate(vals):
            prod = prod * x if i % 2 == 0 else prod / x
        subdiam = [prod] + [one] * (2 * n + 1)
        diam = [None] * (n + 1)
        for k in range((n - 1) // 2 + 1):
            num, den = one, one
            for j in range(1, 2 * k, 2):
                num = num * vals[j]
            for j in range(0, 2 * k - 1, 2):
                den = den * vals[j]
            diam[2 * k] = num / den
            num2, den2 = one, one
            for j in range(0, 2 * k + 1, 2):
                num2 = num2 * vals[j]
            for j in range(1, 2 * k, 2):
                den2 = den2 * vals[j]
            diam[2 * k + 1] = num2 / den2
    elif mode == "odd_symmetric":
        if n % 2 == 0:
            raise WrongParity("odd_symmetric needs n odd")
        eta = [ctx.nth_root(x, 2 * n + 2) for x in vals]
        mu = one
        for j in range(0, n, 2):
            mu = mu * eta[j]
        for j in range(1, n + 1, 2):
            mu = mu / eta[j]
        subdiam = [mu if i % 2 == 0 else one / mu for i in range(N)]
        diam = []
        for i in range(n + 1):
            val = one
            for j in range(n + 1):
                exp = (n - 2 * j) * (1 if j % 2 == 0 else -1)
                base = eta[(i + j) % (n + 1)]
                val = val * base**exp if exp >= 0 else val / base ** (-exp)
            diam.append(val)
    else:
        raise ValueError(f"unknown construction mode {mode!r}")

    band = _band_gram(n, subdiam, diam, ctx)
    pts = _points_from_band(n, band, ctx)
    cfg = Configuration(n, N, pts, ctx)
    if verify:
        bad = _verify_band(cfg, band, ctx)
        if bad is not None:
            raise RelationViolated(
                f"constructed products deviate from the band at {bad}"
            )
    return cfg


def _even_roots_band(vals, n, ctx):
    one = ctx.one()
    N = 2 * n + 2
    if ctx.is_rational:
        prod = one
        for x in vals:
            prod = prod * x
        if prod > 0:
            subdiam = [one] * N
            a0sq = one
            for j in range(0, n + 1, 2):
                a0sq = a0sq * vals[j]
            for j in range(1, n, 2):
                a0sq = a0sq / vals[j]
            a = [ctx.sqrt(a0sq)]
            for i in range(n):
                a.append(vals[i] / a[i])
        else:
            subdiam = [one if i % 2 == 0 else -one for i in range(N)]
            a0sq = -one
            for j in range(0, n + 1, 2):
                a0sq = a0sq * vals[j]
            for j in range(1, n, 2):
                a0sq = a0sq / vals[j]
            a = [ctx.sqrt(a0sq)]
            for i in range(n):
                a.append(-vals[i] / a[i])
        return subdiam, a
    sigma = [ctx.sqrt(x) for x in vals]
    a = []
    for i in range(n + 1):
        val = one
        for j in range(n + 1):
            s = sigma[(i + j) % (n + 1)]
            val = val * s if j % 2 == 0 else val / s
        a.append(val)
    return [one] * N, a


# -- multiplicative rescaling chains ------------------------------------------------


def solve_rescaling_chain(ratio, n, N, ctx):
    """lambda with lambda_i lambda_{i+n} = ratio(i) for all i.

    Walks each step-n cycle; even cycles leave a free unit (set to 1) and
    odd cycles close with one square root.  Raises GramMismatch when an even
    cycle's closing product is inconsistent.
    """
    lam = [None] * N
    g = math.gcd(n, N)
    length = N // g
    for start in range(g):
        verts = [(start + k * n) % N for k in range(length)]
        cvals = [ctx.one()]
        for k in range(length - 1):
            cvals.append(ratio(verts[k]) / cvals[k])
        closing = ratio(verts[-1])
        if length % 2 == 0:
            if not _close(ctx, cvals[-1] * cvals[0], closing):
                raise GramMismatch("inconsistent rescaling chain")
            u = ctx.one()
        else:
            u = ctx.sqrt(closing / (cvals[-1] * cvals[0]))
        for k, v in enumerate(verts):
            lam[v] = cvals[k] * u if k % 2 == 0 else cvals[k] / u
    return lam


def rescale_configuration(cfg, lam):
    pts = [[l * x for x in p] for l, p in zip(lam, cfg.points)]
    return cfg.with_points(pts)


# -- equivalence -----------------------------------------------------------------


@dataclass
class EquivalenceVerdict:
    kind: str  # "equivalent" | "opposite" | "inequivalent"
    transform: list | None = None
    rescaling: list | None = None
    note: str = ""

    @property
    def is_equivalent(self):
        return self.kind == "equivalent"


def _even_index_sign(cfg, parity):
    n = cfg.n
    prod = cfg.ctx.one()
    for s in range(n + 1):
        prod = prod * cfg.omega(2 * s + parity, 2 * s + parity + n)
    return cfg.ctx.sign(prod)


def epsilon_signs(cfg):
    """(eps_0, eps_1, eps_c) sign invariants of a real (n even, 2n+2)-configuration."""
    if not cfg.is_real_field:
        raise NotRealField("sign invariants need a real configuration")
    if cfg.n % 2:
        raise ParityMismatch("parity sign invariants are defined for n even")
    e0 = _even_index_sign(cfg, 0)
    e1 = _even_index_sign(cfg, 1)
    return e0, e1, e0 * e1


def _require_generic_pair(a, b):
    if a.n != b.n or a.N != b.N:
        raise WrongN("configurations have different shapes")
    if a.N != 2 * a.n + 2:
        raise WrongN("equivalence decision is for N = 2n+2")
    if a.ctx.kind != b.ctx.kind:
        raise WrongN("configurations live over different fields")
    for cfg in (a, b):
        rep = validate(cfg)
        if not rep.is_valid:
            raise InvalidConfiguration("configuration fails the defining conditions")
        if not rep.is_generic:
            raise NotGeneric("equivalence decision requires generic configurations")


def equivalent(a, b):
    """Decide symplectic equivalence of two generic (n, 2n+2)-configurations.

    Returns a verdict with a witness transform T and rescaling lambda such
    that T(lambda_i a_i) equals b's representatives (or the opposite of b's,
    for an ``opposite`` verdict over a real field).  If only an irrational
    rescaling exists in rational mode, the verdict is still decided exactly
    but the witness is omitted.
    """
    _require_generic_pair(a, b)
    ctx = a.ctx
    n, N = a.n, a.N
    ca = diametric_cross_ratios(a)
    cb = diametric_cross_ratios(b)
    if not all(_close(ctx, x, y) for x, y in zip(ca, cb)):
        return EquivalenceVerdict("inequivalent")

    real = a.is_real_field and b.is_real_field
    kind = "equivalent"
    target = b
    if n % 2 == 0:
        if real and _even_index_sign(a, 0) != _even_index_sign(b, 0):
            target = opposite(b)
            kind = "opposite"
        try:
            lam = solve_rescaling_chain(
                lambda i: target.omega(i, i + n) / a.omega(i, i + n), n, N, ctx
            )
        except RequiresExtension:
            return EquivalenceVerdict(kind, note="witness needs a field extension")
        a1 = rescale_configuration(a, lam)
        rho = target.omega(0, n + 1) / a1.omega(0, n + 1)
        if not _close(ctx, rho * rho, ctx.one()):
            raise GramMismatch("diameter ratio is not a sign")
        if _close(ctx, rho, -ctx.one()):
            lam = [l if i % 2 == 0 else -l for i, l in enumerate(lam)]
            a1 = rescale_configuration(a, lam)
        t = symplectic.reconstruct_transform(
            [list(p) for p in a1.points], [list(p) for p in target.points], ctx
        )
        return EquivalenceVerdict(kind, t, lam)

    # n odd: a single even rescaling cycle, then one scalar decides the class
    lam = solve_rescaling_chain(
        lambda i: b.omega(i, i + n) / a.omega(i, i + n), n, N, ctx
    )
    a1 = rescale_configuration(a, lam)
    tvals = []
    for i in range(n + 1):
        q = b.omega(i, i + n + 1) / a1.omega(i, i + n + 1)
        tvals.append(q if i % 2 == 0 else ctx.one() / q)
    t0 = tvals[0]
    for q in tvals[1:]:
        if not _close(ctx, q, t0):
            raise GramMismatch("diameter ratios are not alternating-constant")
    if real and ctx.sign(t0) < 0:
        kind = "opposite"
        target = opposite(b)
        try:
            delta = ctx.sqrt(-t0)
        except RequiresExtension:
            return EquivalenceVerdict(kind, note="witness needs a field extension")
        # delta^{(-1)^i} matches diameter magnitudes; the extra (-1)^i flips
        # every product, landing on the opposite configuration exactly.
        lam = [
            l * delta if i % 2 == 0 else -l / delta for i, l in enumerate(lam)
        ]
    else:
        try:
            delta = ctx.sqrt(t0)
        except RequiresExtension:
            return EquivalenceVerdict(kind, note="witness needs a field extension")
        lam = [l * delta if i % 2 == 0 else l / delta for i, l in enumerate(lam)]
    a2 = rescale_configuration(a, lam)
    t = symplectic.reconstruct_transform(
        [list(p) for p in a2.points], [list(p) for p in target.points], ctx
    )
    return EquivalenceVerdict(kind, t, lam)


# -- normalization -----------------------------------------------------------------


@dataclass
class NormalizationResult:
    scheme: str
    configuration: Configuration
    diameters: list
    data: dict = field(default_factory=dict)

    def to_json(self):
        ctx = self.configuration.ctx
        data = {}
        for k, v in self.data.items():
            data[k] = ctx.encode(v) if not isinstance(v, (int, str)) else v
        return {
            "scheme": self.scheme,
            "configuration": self.configuration.to_json(),
            "diameters": [ctx.encode(a) for a in self.diameters],
            "data": data,
        }


def _require_shape(cfg, scheme):
    rep = validate(cfg)
    if not rep.is_valid:
        raise InvalidConfiguration("normalization needs a valid configuration")
    if not rep.is_generic:
        raise NotGeneric("normalization needs a generic configuration")
    if scheme != "subdiameters_one" and cfg.N != 2 * cfg.n + 2:
        raise WrongN(f"scheme {scheme} needs N = 2n+2")


def _rescale_to_targets(cfg, targets):
    lam = solve_rescaling_chain(
        lambda i: targets[i % len(targets)] / cfg.omega(i, i + cfg.n),
        cfg.n,
        cfg.N,
        cfg.ctx,
    )
    return lam, rescale_configuration(cfg, lam)


def normalize(cfg, scheme):
    """Rescale representatives to one of the canonical subdiameter patterns.

    * ``even_complex``: all subdiameters 1 (n even); diameters defined up to
      an overall sign.
    * ``even_real``: subdiameters eps_{i mod 2} over a real field (n even);
      real diameters.
    * ``odd_complex``: subdiameters mu^{(-1)^i} with balanced alternating
      diameter product (n odd); exactly 2n+2 choices.
    * ``odd_real``: the positive-mu real refinement (n odd), only under the
      positivity conditions.
    * ``subdiameters_one``: all subdiameters 1 for general (n, N) with
      N / gcd(n, N) odd.
    """
    ctx = cfg.ctx
    n, N = cfg.n, cfg.N
    _require_shape(cfg, scheme)
    if scheme == "even_complex":
        if n % 2:
            raise ParityMismatch("even_complex needs n even")
        lam, out = _rescale_to_targets(cfg, [ctx.one()] * N)
        diam = [out.omega(i, i + n + 1) for i in range(n + 1)]
        return NormalizationResult(scheme, out, diam, {"rescaling": lam})
    if scheme == "even_real":
        if n % 2:
            raise ParityMismatch("even_real needs n even")
        if not cfg.is_real_field:
            raise NotRealField("even_real needs a real configuration")
        e0, e1, ec = epsilon_signs(cfg)
        targets = [ctx.one() * (e0 if i % 2 == 0 else e1) for i in range(N)]
        lam, out = _rescale_to_targets(cfg, targets)
        diam = [out.omega(i, i + n + 1) for i in range(n + 1)]
        return NormalizationResult(
            scheme, out, diam, {"eps0": e0, "eps1": e1, "epsc": ec, "rescaling": lam}
        )
    if scheme == "odd_complex":
        if n % 2 == 0:
            raise ParityMismatch("odd_complex needs n odd")
        c = diametric_cross_ratios(cfg)
        prod = ctx.one()
        for i, x in enumerate(c):
            prod = prod * x if i % 2 == 0 else prod / x
        mu = ctx.nth_root(prod, 2 * n + 2)
        targets = [mu if i % 2 == 0 else ctx.one() / mu for i in range(N)]
        lam, out = _rescale_to_targets(cfg, targets)
        diam = [out.omega(i, i + n + 1) for i in range(n + 1)]
        alt = ctx.one()
        for i, a in enumerate(diam):
            alt = alt * a if i % 2 == 0 else alt / a
        delta = ctx.nth_root(ctx.one() / alt, 2 * n + 2)
        lam = [l * delta if i % 2 == 0 else l / delta for i, l in enumerate(lam)]
        out = rescale_configuration(cfg, lam)
        diam = [out.omega(i, i + n + 1) for i in range(n + 1)]
        return NormalizationResult(scheme, out, diam, {"mu": mu, "rescaling": lam})
    if scheme == "odd_real":
        if n % 2 == 0:
            raise ParityMismatch("odd_real needs n odd")
        if not cfg.is_real_field:
            raise NotRealField("odd_real needs a real configuration")
        c = diametric_cross_ratios(cfg)
        prod = ctx.one()
        for i, x in enumerate(c):
            prod = prod * x if i % 2 == 0 else prod / x
        if ctx.sign(prod) <= 0:
            raise PositivityFailed("alternating cross-ratio product must be positive")
        even_prod = ctx.one()
        odd_prod = ctx.one()
        for j in range(0, n, 2):
            even_prod = even_prod * c[j]
        for j in range(1, n + 1, 2):
            odd_prod = odd_prod * c[j]
        if ctx.sign(even_prod) <= 0 or ctx.sign(odd_prod) <= 0:
            raise PositivityFailed("alternating index products must both be positive")
        mu = ctx.nth_root(prod, 2 * n + 2)
        targets = [mu if i % 2 == 0 else ctx.one() / mu for i in range(N)]
        lam, out = _rescale_to_targets(cfg, targets)
        diam = [out.omega(i, i + n + 1) for i in range(n + 1)]
        alt = ctx.one()
        for i, a in enumerate(diam):
            alt = alt * a if i % 2 == 0 else alt / a
        delta = ctx.nth_root(ctx.one() / alt, 2 * n + 2)
        lam = [l * delta if i % 2 == 0 else l / delta for i, l in enumerate(lam)]
        out = rescale_configuration(cfg, lam)
        diam = [out.omega(i, i + n + 1) for i in range(n + 1)]
        return NormalizationResult(scheme, out, diam, {"mu": mu, "rescaling": lam})
    if scheme == "subdiameters_one":
        q = N // math.gcd(n, N)
        if q % 2 == 0:
            raise ParityMismatch("subdiameters_one needs N / gcd(n, N) odd")
        lam, out = _rescale_to_targets(cfg, [ctx.one()] * N)
        diam = [out.omega(i, i + n + 1) for i in range(N)]
        return NormalizationResult(scheme, out, diam, {"rescaling": lam})
    raise ValueError(f"unknown normalization scheme {scheme!r}")


def enumerate_normalizations(cfg, scheme):
    """All normalized representative choices for the counting statements."""
    import cmath

    base = normalize(cfg, scheme)
    out = base.configuration
    ctx = cfg.ctx
    n, N = cfg.n, cfg.N
    variants = []
    if scheme in ("even_complex", "even_real"):
        for sign_even, sign_odd in ((1, 1), (-1, -1), (1, -1), (-1, 1)):
            lam = [
                ctx.one() * (sign_even if i % 2 == 0 else sign_odd) for i in range(N)
            ]
            variants.append(rescale_configuration(out, lam))
        return variants
    if scheme in ("odd_complex", "odd_real"):
        if scheme == "odd_real":
            deltas = [ctx.one(), -ctx.one()]
        else:
            deltas = [
                ctx.coerce(cmath.exp(2j * cmath.pi * k / (2 * n + 2)))
                for k in range(2 * n + 2)
            ]
        for d in deltas:
            lam = [d if i % 2 == 0 else ctx.one() / d for i in range(N)]
            variants.append(rescale_configuration(out, lam))
        return variants
    raise ValueError(f"no enumeration for scheme {scheme!r}")


def continuant_check(cfg):
    """Cyclic continuant of the normalized diameters; vanishes identically."""
    if cfg.n % 2:
        raise ParityMismatch("the continuant statement needs n even")
    res = normalize(cfg, "even_complex")
    return cyclic_continuant(res.diameters)


# -- trivial moduli (N = 2n, 2n+1) ----------------------------------------------


@dataclass
class TrivialForm:
    kind: str  # "2n" | "2n+1"
    canonical: Configuration
    epsilon: int | None
    transform: list | None
    rescaling: list | None


def canonical_min_config(n, ctx):
    """The standard-basis (n, 2n)-configuration."""
    pts = []
    for i in range(2 * n):
        v = [ctx.zero()] * (2 * n)
        v[i] = ctx.one()
        pts.append(v)
    return Configuration(n, 2 * n, pts, ctx)


def canonical_odd_config(n, epsilon, ctx):
    """The epsilon-tagged canonical (n, 2n+1)-configuration."""
    zero, one = ctx.zero(), ctx.one()
    eps = one * epsilon
    pts = []
    for i in range(n):
        v = [zero] * (2 * n)
        v[i] = one
        pts.append(v)
    for j in range(n):
        v = [zero] * (2 * n)
        if j == 0:
            v[n] = eps
        else:
            v[n + j - 1] = eps
            v[n + j] = eps
        pts.append(v)
    v = [zero] * (2 * n)
    v[2 * n - 1] = eps
    for k in range(1, n + 1):
        v[k - 1] = one if k % 2 == 0 else -one
    pts.append(v)
    return Configuration(n, 2 * n + 1, pts, ctx)


def classify_trivial(cfg):
    """Reduce an (n, 2n) or (n, 2n+1) configuration to its canonical class."""
    n, N, ctx = cfg.n, cfg.N, cfg.ctx
    if N not in (2 * n, 2 * n + 1):
        raise WrongN("trivial classification covers N = 2n and 2n+1 only")
    rep = validate(cfg)
    if not rep.is_valid:
        raise InvalidConfiguration("configuration fails the defining conditions")
    if N == 2 * n:
        canonical = canonical_min_config(n, ctx)
        epsilon = None
        kind = "2n"
    else:
        if cfg.is_real_field:
            prod = ctx.one()
            for i in range(2 * n + 1):
                prod = prod * cfg.omega(i, n + i)
            epsilon = ctx.sign(prod)
        else:
            epsilon = 1
        canonical = canonical_odd_config(n, epsilon, ctx)
        kind = "2n+1"
    lam = solve_rescaling_chain(
        lambda i: canonical.omega(i, i + n) / cfg.omega(i, i + n), n, N, ctx
    )
    scaled = rescale_configuration(cfg, lam)
    t = symplectic.reconstruct_transform(
        [list(p) for p in scaled.points], [list(p) for p in canonical.points], ctx
    )
    return TrivialForm(kind, canonical, epsilon, t, lam)
