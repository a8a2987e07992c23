"""Dense linear algebra over a :class:`~lagcfg.fields.FieldContext`.

Rational mode uses fraction-free Bareiss elimination (no intermediate
fraction blow-up on integer input); complex mode uses partial pivoting with
the context's tolerance to reject negligible pivots.  Everything here works
on plain lists of lists; matrices are desk-scale throughout the package.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch, RankDeficient


def copy_matrix(m):
    return [list(row) for row in m]


def identity(k, ctx):
    one, zero = ctx.one(), ctx.zero()
    return [[one if i == j else zero for j in range(k)] for i in range(k)]


def zeros(r, c, ctx):
    z = ctx.zero()
    return [[z for _ in range(c)] for _ in range(r)]


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    if len(a[0]) != len(b):
        raise DimensionMismatch("matmul shape mismatch")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    if len(a[0]) != len(v):
        raise DimensionMismatch("mat_vec shape mismatch")
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def _pivot_row(rows, col, start, ctx):
    """Index of the best pivot row at ``col`` from ``start`` down, or None."""
    if ctx.is_rational:
        for r in range(start, len(rows)):
            if rows[r][col] != 0:
                return r
        return None
    best, best_mag = None, ctx.eps_abs
    for r in range(start, len(rows)):
        mag = abs(rows[r][col])
        if mag > best_mag:
            best, best_mag = r, mag
    return best


def row_echelon(m, ctx):
    """Reduce a copy of ``m``; returns (echelon rows, pivot column list)."""
    rows = copy_matrix(m)
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(rows):
            break
        p = _pivot_row(rows, c, r, ctx)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for rr in range(len(rows)):
            if rr != r and not ctx.is_zero(rows[rr][c]):
                f = rows[rr][c]
                rows[rr] = [x - f * y for x, y in zip(rows[rr], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m, ctx):
    if not m or not m[0]:
        return 0
    if ctx.is_rational:
        return _rank_bareiss(m)
    _, pivots = row_echelon(m, ctx)
    return len(pivots)


def _rank_bareiss(m):
    """Fraction-free Bareiss elimination; exact rank for Fraction/int entries."""
    a = copy_matrix(m)
    nr, nc = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(nc):
        piv = None
        for rr in range(r, nr):
            if a[rr][c] != 0:
                piv = rr
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for rr in range(r + 1, nr):
            for cc in range(c + 1, nc):
                a[rr][cc] = (a[r][c] * a[rr][cc] - a[rr][c] * a[r][cc]) / prev
            a[rr][c] = 0 * a[rr][c]
        prev = a[r][c]
        r += 1
        if r == nr:
            break
    return r


def det(m, ctx):
    n = len(m)
    if n == 0:
        return ctx.one()
    if any(len(row) != n for row in m):
        raise DimensionMismatch("determinant of a non-square matrix")
    a = copy_matrix(m)
    sign = 1
    if ctx.is_rational:
        # Bareiss: a[n-1][n-1] ends up equal to the determinant.
        prev = Fraction(1)
        for c in range(n - 1):
            piv = None
            for rr in range(c, n):
                if a[rr][c] != 0:
                    piv = rr
                    break
            if piv is None:
                return ctx.zero()
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                sign = -sign
            for rr in range(c + 1, n):
                for cc in range(c + 1, n):
                    a[rr][cc] = (a[c][c] * a[rr][cc] - a[rr][c] * a[c][cc]) / prev
                a[rr][c] = Fraction(0)
            prev = a[c][c]
        return sign * Fraction(a[n - 1][n - 1])
    result = ctx.one()
    for c in range(n):
        p = _pivot_row(a, c, c, ctx)
        if p is None:
            return ctx.zero()
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        result *= a[c][c]
        for rr in range(c + 1, n):
            f = a[rr][c] / a[c][c]
            a[rr] = [x - f * y for x, y in zip(a[rr], a[c])]
    return sign * result


def solve(a, b, ctx):
    """Solve a (square, nonsingular) @ x = b for a vector or matrix ``b``."""
    n = len(a)
    vector = not isinstance(b[0], (list, tuple))
    cols = [b] if vector else transpose(b)
    aug = [list(row) + [col[i] for col in cols] for i, row in enumerate(a)]
    rows, pivots = row_echelon(aug, ctx)
    if pivots[: n if len(pivots) >= n else len(pivots)] != list(range(n)):
        raise RankDeficient("singular linear system")
    sol_cols = [[rows[i][n + k] for i in range(n)] for k in range(len(cols))]
    return sol_cols[0] if vector else transpose(sol_cols)


def inverse(a, ctx):
    return solve(a, identity(len(a), ctx), ctx)


def nullspace(a, ctx):
    """Basis of the right nullspace of ``a`` (list of vectors)."""
    if not a:
        raise DimensionMismatch("nullspace of an empty constraint set")
    ncols = len(a[0])
    rows, pivots = row_echelon(a, ctx)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    zero, one = ctx.zero(), ctx.one()
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(v)
    return basis


def independent_columns(vectors, k, ctx):
    """Greedy indices of ``k`` linearly independent vectors, else RankDeficient."""
    chosen = []
    rows = []
    for idx, v in enumerate(vectors):
        _, pivots = row_echelon(rows + [list(v)], ctx)
        if len(pivots) > len(rows):
            rows.append(list(v))
            chosen.append(idx)
            if len(chosen) == k:
                return chosen
    raise RankDeficient(f"only {len(chosen)} independent vectors, needed {k}")


def int_nullspace(rows, dim):
    """Integer basis of the nullspace of integer constraint rows.

    Fraction-free elimination keeps everything in machine/big ints; used by
    the configuration sampler where speed matters.  ``rows`` may be empty.
    """
    work = [_content_reduced(list(r)) for r in rows]
    pivots = []
    r = 0
    for c in range(dim):
        piv = None
        for rr in range(r, len(work)):
            if work[rr][c] != 0:
                piv = rr
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for rr in range(len(work)):
            if rr != r and work[rr][c] != 0:
                f_num, f_den = work[rr][c], work[r][c]
                work[rr] = _content_reduced(
                    [f_den * x - f_num * y for x, y in zip(work[rr], work[r])]
                )
        pivots.append(c)
        r += 1
    basis = []
    free = [c for c in range(dim) if c not in pivots]
    lcm = 1
    for rr, pc in enumerate(pivots):
        p = abs(work[rr][pc])
        lcm = lcm * p // _gcd(lcm, p)
    for f in free:
        # Common-multiple construction keeps the vector integral.
        v = [0] * dim
        v[f] = lcm
        for rr, pc in enumerate(pivots):
            v[pc] = -work[rr][f] * lcm // work[rr][pc]
        g = 0
        for x in v:
            g = _gcd(g, x)
        if g > 1:
            v = [x // g for x in v]
        basis.append(v)
    if len(basis) > 1:
        basis = lll_reduce(basis)
    return basis


def lll_reduce(basis, delta=Fraction(3, 4)):
    """Lenstra-Lenstra-Lovasz reduction of an independent integer basis.

    Keeps nullspace bases short so that repeated sampling over them does not
    blow up coordinate sizes.  Naive re-orthogonalizing variant; dimensions
    here never exceed a few dozen.
    """
    b = [[int(x) for x in v] for v in basis]
    m = len(b)
    if m <= 1:
        return b

    def gso():
        mu = [[Fraction(0)] * m for _ in range(m)]
        star = []
        norms = []
        for i in range(m):
            vec = [Fraction(x) for x in b[i]]
            for j in range(i):
                if norms[j] == 0:
                    continue
                mu[i][j] = (
                    sum(Fraction(x) * y for x, y in zip(b[i], star[j])) / norms[j]
                )
                vec = [x - mu[i][j] * y for x, y in zip(vec, star[j])]
            star.append(vec)
            norms.append(sum(x * x for x in vec))
        return mu, norms

    mu, norms = gso()
    k = 1
    while k < m:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                mu, norms = gso()
        if norms[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, norms = gso()
            k = max(k - 1, 1)
    return b


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _content_reduced(row):
    g = 0
    for x in row:
        g = _gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return [x // g for x in row]
    return row
