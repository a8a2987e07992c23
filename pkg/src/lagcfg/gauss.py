"""Generalized Gauss relations for N = 2n+3.

After normalizing the representatives so every omega_{i,i+n} equals 1, the
(2n+3)-periodic main diagonals d_i = omega_{i,i+n+1} satisfy 2n+3 polynomial
relations generalizing the classical pentagon identities d_i d_{i+1} =
d_{i+3} + 1.  The relation coefficients are the normalized difference
operator coefficients, written directly in the d_i through a short
substitution table.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import diffop, moduli
from .configuration import sequence_cross_ratios, validate
from .errors import (
    InvalidConfiguration,
    LengthMismatch,
    NotGeneric,
    UnsupportedN,
    WrongN,
)


@dataclass
class MainDiagonals:
    """Main diagonals of a normalized (n, 2n+3)-configuration plus branch tag."""

    n: int
    d: list
    branch: str = "+"

    def __post_init__(self):
        if len(self.d) != 2 * self.n + 3:
            raise LengthMismatch("need 2n+3 main diagonals")

    def to_json(self, ctx):
        return {"n": self.n, "d": [ctx.encode(x) for x in self.d], "branch": self.branch}


def normalize_2n3(cfg):
    """Normalized representatives and main diagonals of an (n, 2n+3)-configuration.

    For 3 not dividing n the diagonals are branch-independent; for 3 | n the
    eight sign branches are resolved deterministically (d_0 then d_1 with
    non-negative real part, ties toward positive imaginary part) and the
    chosen sign triple is reported.
    """
    n, N = cfg.n, cfg.N
    if N != 2 * n + 3:
        raise WrongN(f"expected N = 2n+3, got {N}")
    rep = validate(cfg)
    if not rep.is_valid:
        raise InvalidConfiguration("normalization needs a valid configuration")
    if not rep.is_generic:
        raise NotGeneric("main diagonals need a generic configuration")
    res = moduli.normalize(cfg, "subdiameters_one")
    out = res.configuration
    d = [out.omega(i, i + n + 1) for i in range(N)]
    if n % 3 != 0:
        return MainDiagonals(n, d, "+")
    # Sign branches act on the diagonals through multipliers (m_0, m_1, m_2)
    # with m_0 m_1 m_2 = 1; only the first two are free.
    m0 = -1 if _negative_half(d[0]) else 1
    m1 = -1 if _negative_half(d[1]) else 1
    m = (m0, m1, m0 * m1)
    d = [x * m[i % 3] for i, x in enumerate(d)]
    branch = "".join("+" if s > 0 else "-" for s in m)
    return MainDiagonals(n, d, branch)


def _negative_half(value):
    z = complex(value)
    return z.real < 0 or (z.real == 0 and z.imag < 0)


def apply_branch(d, signs):
    """Main diagonals after the 3-periodic sign change eps_i eps_{i+1} d_i."""
    return [x * signs[i % 3] * signs[(i + 1) % 3] for i, x in enumerate(d)]


def _coeff_from_diagonals(d, n, i, ell):
    """Normalized operator coefficient a^ell_i written in the main diagonals."""
    N = 2 * n + 3
    p = n - ell
    if p < 0:
        return 0
    if p == 0:
        return 1

    def factor(prev, nxt):
        gap = nxt - prev
        if gap == 1:
            return d[(i - n + nxt - 1) % N]
        if gap == 2:
            return d[(i + nxt) % N]
        if gap == 3:
            return 1
        return 0

    total = 0
    for subset in _subsets(range(1, p)):
        chain = (0, *subset, p)
        prod = 1
        for prev, nxt in zip(chain, chain[1:]):
            prod = prod * factor(prev, nxt)
            if prod == 0:
                break
        total = total - prod if len(subset) % 2 == 0 else total + prod
    return total


def _subsets(items):
    items = list(items)
    out = [()]
    for x in items:
        out += [s + (x,) for s in out]
    return out


def gauss_residuals(diag, n=None):
    """The 2n+3 polynomial residuals on the main diagonals (zero on samples)."""
    if isinstance(diag, MainDiagonals):
        d, n = diag.d, diag.n
    else:
        if n is None:
            raise LengthMismatch("pass a MainDiagonals or an explicit n")
        d = list(diag)
    N = 2 * n + 3
    if len(d) != N:
        raise LengthMismatch(f"need {N} diagonals")
    out = []
    for i in range(N):
        a2 = _coeff_from_diagonals(d, n, i, 2) if n > 1 else 0
        a1_i = _coeff_from_diagonals(d, n, i, 1)
        a0_i = _coeff_from_diagonals(d, n, i, 0)
        a1_next = _coeff_from_diagonals(d, n, i + 1, 1)
        out.append(a2 + d[(i + n + 1) % N] * a1_i + d[i % N] * a0_i + a1_next)
    return out


def operator_coefficients_from_diagonals(d, n):
    """All normalized coefficients a^ell_i, for cross-checking against solves."""
    N = 2 * n + 3
    return [
        [_coeff_from_diagonals(d, n, i, ell) for i in range(N)]
        for ell in range(n + 1)
    ]


def gauss_cross_ratio_residuals(c, n):
    """Residuals of the closed cross-ratio identities (known for n <= 3)."""
    N = 2 * n + 3
    if len(c) != N:
        raise LengthMismatch(f"need {N} cross-ratios")
    if n == 1:
        return [1 / c[i % N] + 1 / (c[(i - 1) % N] * c[(i + 1) % N]) - 1 for i in range(N)]
    if n == 2:
        return [
            1 / c[(i - 3) % N]
            + 1 / c[(i + 3) % N]
            + 1 / (c[(i - 2) % N] * c[(i + 2) % N])
            - 1 / (c[(i - 3) % N] * c[i % N] * c[(i + 3) % N])
            - 1
            for i in range(N)
        ]
    if n == 3:
        # the 1/(c_{i-1} c_{i+1}) term enters negatively: substituting
        # c_j = d_j d_{j+1} / d_{j-4} must reproduce the diagonal relation
        return [
            1 / c[(i - 1) % N]
            + 1 / c[i % N]
            + 1 / c[(i + 1) % N]
            - 1 / (c[(i - 1) % N] * c[(i + 1) % N])
            + 1 / (c[(i - 2) % N] * c[(i + 2) % N])
            - 1 / (c[(i - 4) % N] * c[i % N] * c[(i + 1) % N])
            - 1 / (c[(i - 2) % N] * c[i % N] * c[(i + 2) % N])
            - 1 / (c[(i - 1) % N] * c[i % N] * c[(i + 4) % N])
            - 1
            for i in range(N)
        ]
    raise UnsupportedN("closed cross-ratio forms are available for n in {1, 2, 3}")


def pentagon_matrix_product(d):
    """Ordered product of [[d_i, 1], [-1, 0]]; equals -Id on pentagon diagonals."""
    if len(d) != 5:
        raise LengthMismatch("need five diagonals")
    m = ((1, 0), (0, 1))
    for x in d:
        p, q, r, s = m[0][0], m[0][1], m[1][0], m[1][1]
        m = ((p * x - q, p), (r * x - s, r))
    return [list(m[0]), list(m[1])]


def diagonals_cross_check(cfg):
    """Max deviation between diagonal-built and solved operator coefficients."""
    res = moduli.normalize(cfg, "subdiameters_one")
    out = res.configuration
    op = diffop.operator_from_config(out)
    coeffs = operator_coefficients_from_diagonals(
        [out.omega(i, i + cfg.n + 1) for i in range(cfg.N)], cfg.n
    )
    worst = 0.0
    for ell in range(cfg.n + 1):
        for i in range(cfg.N):
            worst = max(worst, abs(complex(coeffs[ell][i]) - complex(op.a(ell, i))))
    return worst
