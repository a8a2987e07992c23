"""Symmetric linear difference operators with periodic coefficients.

An operator of order 2n with N-periodic coefficient sequences a^0..a^n acts
on bi-infinite scalar sequences by

    (A V)_i = sum_l a^l_i V_{i-l} + a^0_i V_i + sum_l a^l_{i+l} V_{i+l},

is nondegenerate when a^n never vanishes, and then carries a canonical
symplectic form (a discrete Wronskian) on its 2n-dimensional kernel.  The
module provides kernel solving on finite windows, the distinguished kernel
basis, the Wronskian, monodromy, rescaling, and the two-way correspondence
with Lagrangian configurations.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg, symplectic
from .configuration import Configuration, validate
from .errors import (
    DegenerateOperator,
    DimensionMismatch,
    InvalidConfiguration,
    NotInE,
    WindowTooSmall,
    ZeroRescaleEntry,
)


class DifferenceOperator:
    """Order-2n symmetric operator with N-periodic coefficients a^0..a^n."""

    def __init__(self, n, N, coeffs, ctx):
        if len(coeffs) != n + 1:
            raise DimensionMismatch(f"expected {n + 1} coefficient sequences")
        rows = []
        for seq in coeffs:
            if len(seq) != N:
                raise DimensionMismatch("coefficient sequences must have length N")
            rows.append(tuple(ctx.coerce(x) for x in seq))
        self.n = n
        self.N = N
        self.coeffs = tuple(rows)
        self.ctx = ctx

    def a(self, ell, i):
        """Coefficient a^ell_i, N-periodic in i, symmetric in ell."""
        if ell < 0:
            return self.coeffs[-ell][(i - ell) % self.N]
        return self.coeffs[ell][i % self.N]

    @property
    def is_nondegenerate(self):
        return all(not self.ctx.is_zero(x) for x in self.coeffs[self.n])

    def apply(self, window, i):
        """(A V)_i evaluated on a solution window."""
        total = self.a(0, i) * window.value(i)
        for ell in range(1, self.n + 1):
            total += self.a(ell, i) * window.value(i - ell)
            total += self.a(ell, i + ell) * window.value(i + ell)
        return total

    def to_json(self):
        return {
            "n": self.n,
            "N": self.N,
            "coeffs": [[self.ctx.encode(x) for x in seq] for seq in self.coeffs],
        }

    def __repr__(self):
        return f"DifferenceOperator(n={self.n}, N={self.N})"


def operator_from_json(obj, ctx):
    coeffs = [[ctx.parse(x) for x in seq] for seq in obj["coeffs"]]
    return DifferenceOperator(int(obj["n"]), int(obj["N"]), coeffs, ctx)


@dataclass
class SolutionWindow:
    """Values V_start..V_{start+len-1} of a kernel element."""

    start: int
    values: tuple
    op: DifferenceOperator

    @property
    def stop(self):
        return self.start + len(self.values)

    def value(self, j):
        if not (self.start <= j < self.stop):
            raise WindowTooSmall(f"index {j} outside window [{self.start}, {self.stop})")
        return self.values[j - self.start]

    def covers(self, lo, hi):
        return self.start <= lo and hi < self.stop


def solve(op, start, init, lo, hi):
    """Unique kernel window on [lo, hi] with V_{start..start+2n-1} = init."""
    n = op.n
    if len(init) != 2 * n:
        raise DimensionMismatch("need 2n consecutive initial values")
    if not op.is_nondegenerate:
        raise DegenerateOperator("leading coefficient vanishes somewhere")
    ctx = op.ctx
    lo = min(lo, start)
    hi = max(hi, start + 2 * n - 1)
    vals = {start + k: ctx.coerce(v) for k, v in enumerate(init)}
    # forward: the relation at i determines V_{i+n}
    top = start + 2 * n - 1
    while top < hi:
        i = top - n + 1
        total = op.a(0, i) * vals[i]
        for ell in range(1, n + 1):
            total += op.a(ell, i) * vals[i - ell]
            if ell < n:
                total += op.a(ell, i + ell) * vals[i + ell]
        vals[i + n] = -total / op.a(n, i + n)
        top += 1
    bottom = start
    while bottom > lo:
        i = bottom + n - 1
        total = op.a(0, i) * vals[i]
        for ell in range(1, n + 1):
            total += op.a(ell, i + ell) * vals[i + ell]
            if ell < n:
                total += op.a(ell, i) * vals[i - ell]
        vals[i - n] = -total / op.a(n, i)
        bottom -= 1
    seq = tuple(vals[j] for j in range(lo, hi + 1))
    return SolutionWindow(lo, seq, op)


def basis_solution(op, i, lo=None, hi=None):
    """The kernel element with window (-1/a^n_i, 0, ..., 0, 1/a^n_{i+n}) at i."""
    n = op.n
    if not op.is_nondegenerate:
        raise DegenerateOperator("leading coefficient vanishes somewhere")
    ctx = op.ctx
    init = [ctx.zero()] * (2 * n)
    init[-1] = ctx.one() / op.a(n, i + n)
    lo = i - n if lo is None else min(lo, i - n)
    hi = i + n if hi is None else max(hi, i + n)
    return solve(op, i - n + 1, init, lo, hi)


def wronskian(op, v, w, i):
    """The i-independent symplectic form on the kernel, evaluated at i."""
    if not (v.covers(i + 1 - op.n, i + op.n) and w.covers(i + 1 - op.n, i + op.n)):
        raise WindowTooSmall("windows must cover [i+1-n, i+n]")
    total = op.ctx.zero()
    for ell in range(1, op.n + 1):
        for m in range(i + 1, i + ell + 1):
            total += op.a(ell, m) * (
                v.value(m - ell) * w.value(m) - v.value(m) * w.value(m - ell)
            )
    return total


def monodromy(op):
    """Matrix of the shift by N on the kernel, in the basis V^1..V^2n."""
    n, N, ctx = op.n, op.N, op.ctx
    if not op.is_nondegenerate:
        raise DegenerateOperator("leading coefficient vanishes somewhere")
    lo, hi = 1 - N - n, N + 2 * n
    windows = [basis_solution(op, k, lo, hi) for k in range(1, 2 * n + 1)]
    b = [[windows[k].value(j) for k in range(2 * n)] for j in range(1, 2 * n + 1)]
    c = [[windows[k].value(j - N) for k in range(2 * n)] for j in range(1, 2 * n + 1)]
    return linalg.solve(b, c, ctx)


def kernel_gram(op, size=None):
    """Gram nu_{ij} = W(V^i, V^j) = V^i_j for i, j in 0..size-1."""
    n, N = op.n, op.N
    size = N if size is None else size
    lo, hi = -n, size + n
    windows = [basis_solution(op, i, lo, hi) for i in range(size)]
    return [[windows[i].value(j) for j in range(size)] for i in range(size)], windows


def is_in_monodromy_class(op):
    """(flag, reasons): nondegenerate symmetric N-periodic with monodromy -Id."""
    ctx = op.ctx
    reasons = {
        "symmetric": True,  # structural: only a^0..a^n are stored
        "periodic": True,  # structural: sequences have period N
        "nondegenerate": op.is_nondegenerate,
        "monodromy_minus_id": False,
    }
    if reasons["nondegenerate"]:
        m = monodromy(op)
        minus = [[-x for x in row] for row in linalg.identity(2 * op.n, ctx)]
        reasons["monodromy_minus_id"] = all(
            ctx.approx_eq(m[i][k], minus[i][k])
            for i in range(2 * op.n)
            for k in range(2 * op.n)
        )
    return all(reasons.values()), reasons


def rescale(op, lam):
    """Conjugated operator with coefficients a^l_i / (lambda_i lambda_{i-l})."""
    ctx = op.ctx
    if len(lam) != op.N:
        raise DimensionMismatch("rescaling must be N-periodic")
    lam = [ctx.coerce(x) for x in lam]
    if any(ctx.is_zero(x) for x in lam):
        raise ZeroRescaleEntry("rescaling entries must be nonzero")
    coeffs = []
    for ell in range(op.n + 1):
        coeffs.append(
            [
                op.a(ell, i) / (lam[i % op.N] * lam[(i - ell) % op.N])
                for i in range(op.N)
            ]
        )
    return DifferenceOperator(op.n, op.N, coeffs, ctx)


# -- correspondence with configurations -----------------------------------------


def operator_from_config(cfg, cross_check=True):
    """The symmetric operator annihilating the representative sequence.

    Coefficients are computed by solving the defining linear system per
    index and, when ``cross_check`` is set, re-derived from the closed-form
    expansion in the symplectic products; any disagreement is an error.
    """
    n, N, ctx = cfg.n, cfg.N, cfg.ctx
    report = validate(cfg)
    if not report.is_valid:
        raise InvalidConfiguration("operator construction needs a valid configuration")
    coeffs = [[None] * N for _ in range(n + 1)]
    lower = {}
    for i in range(N):
        an_i = ctx.one() / cfg.omega(i - n, i)
        coeffs[n][i] = an_i
        basis_cols = [list(cfg.point(i - n + k)) for k in range(1, 2 * n + 1)]
        rhs = [-an_i * x for x in cfg.point(i - n)]
        sol = linalg.solve(linalg.transpose(basis_cols), rhs, ctx)
        # sol[k-1] multiplies x_{i-n+k}: the coefficient a^{n-k}_i
        for k in range(1, 2 * n + 1):
            ell = n - k
            if ell >= 0:
                if ell < n:
                    coeffs[ell][i] = sol[k - 1]
            else:
                lower[(ell, i)] = sol[k - 1]
    op = DifferenceOperator(n, N, coeffs, ctx)
    # symmetry of the solved system: a^{-l}_i = a^l_{i+l}
    for (ell, i), val in lower.items():
        expected = op.a(ell, i)
        if not ctx.approx_eq(val, expected):
            raise InvalidConfiguration(
                f"solved coefficients break the symmetry a^{ell}_{i}"
            )
    if cross_check:
        for i in range(N):
            for p in range(1, n + 1):
                closed = _closed_form_coeff(cfg, i, p)
                if not ctx.approx_eq(closed, op.a(n - p, i)):
                    raise InvalidConfiguration(
                        f"closed-form coefficient mismatch at (p={p}, i={i})"
                    )
    return op


def _closed_form_coeff(cfg, i, p):
    """a^{n-p}_i as the signed sum over increasing chains in {1..p-1}."""
    n, ctx = cfg.n, cfg.ctx
    total = ctx.zero()
    for subset in _subsets(range(1, p)):
        chain = (0, *subset, p)
        num = ctx.one()
        for prev, nxt in zip(chain, chain[1:]):
            num = num * cfg.omega(i - n + prev, i + nxt)
        den = ctx.one()
        for q in chain:
            den = den * cfg.omega(i - n + q, i + q)
        term = num / den
        total = total - term if len(subset) % 2 == 0 else total + term
    return total


def _subsets(items):
    items = list(items)
    out = [()]
    for x in items:
        out += [s + (x,) for s in out]
    return out


def config_from_operator(op):
    """The Lagrangian configuration class projected from a monodromy -Id operator.

    Identifies the kernel with standard symplectic space by congruence
    reduction of the kernel Gram on V^0..V^{2n-1}; the output satisfies
    omega(v_i, v_j) = W(V^i, V^j) entrywise.  Different identifications give
    equivalent configurations, so compare results as classes.
    """
    n, N, ctx = op.n, op.N, op.ctx
    ok, reasons = is_in_monodromy_class(op)
    if not ok:
        raise NotInE(f"operator outside the monodromy class: {reasons}")
    nu, _ = kernel_gram(op, N)
    block = [[nu[i][j] for j in range(2 * n)] for i in range(2 * n)]
    m = symplectic.symplectic_basis_from_form(block, ctx)
    cols = linalg.transpose(m)
    points = [list(cols[i]) for i in range(2 * n)]
    if N > 2 * n:
        # remaining representatives solve the Gram conditions against the basis
        mt_j = linalg.matmul(
            linalg.transpose(m), symplectic.j_matrix(n, ctx)
        )
        for i in range(2 * n, N):
            rhs = [nu[k][i] for k in range(2 * n)]
            points.append(linalg.solve(mt_j, rhs, ctx))
    return Configuration(n, N, points, ctx)
