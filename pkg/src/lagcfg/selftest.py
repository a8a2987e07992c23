"""Property-based verification harness.

Each criterion function runs one family of identity checks at a
configurable scale and returns a result record; ``run_all`` executes the
whole battery.  The package's theorems are the oracle: every check is
either an exact identity in rational mode or a normalized residual bound
in complex mode.  ``tests/test_acceptance.py`` runs these at full scale.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from . import diffop, gauss, linalg, moduli
from .configuration import (
    diametric_cross_ratios,
    opposite,
    random_config,
    sequence_cross_ratios,
    validate,
)
from .continuants import (
    OmegaData,
    block_pfaffian,
    cyclic_continuant,
    gen_eq_value,
    pfaffian,
    pfaffian_omega,
)
from .errors import LagError
from .fields import complex_ctx, rational_ctx
from .moduli import (
    classify_trivial,
    enumerate_normalizations,
    epsilon_signs,
    equivalent,
    from_cross_ratios,
    normalize,
    random_relation_vector,
    relation_residual_magnitude,
    rescale_configuration,
)
from .seeding import derive_seed, rng_for
from .symplectic import is_symplectic, random_symplectic

RESIDUAL_TOL = 1e-8


@dataclass
class CriterionResult:
    index: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status} - criterion {self.index}: {self.name} ({self.detail}) [{self.seconds:.1f}s]"


def _scaled(base, trials):
    if trials is None:
        return base
    return max(1, min(base, trials))


def criterion_1_relation(n_max=6, trials=None, seed=0):
    """Diametric cross-ratios of generic configurations satisfy the relation."""
    rctx, cctx = rational_ctx(), complex_ctx()
    per_source = _scaled(100, trials)
    complex_per_source = _scaled(20, trials)
    checked = 0
    for n in range(1, min(n_max, 6) + 1):
        for k in range(per_source):
            cfg = random_config(n, 2 * n + 2, derive_seed(seed, "c1s", n, k), rctx)
            if gen_eq_value(diametric_cross_ratios(cfg)) != 0:
                return False, f"sampled n={n} trial {k} residual nonzero"
            checked += 1
        for k in range(per_source):
            c = random_relation_vector(n, derive_seed(seed, "c1v", n, k), rctx)
            cfg = from_cross_ratios(c, n, "unit_diameters", rctx)
            if gen_eq_value(diametric_cross_ratios(cfg)) != 0:
                return False, f"constructed n={n} trial {k} residual nonzero"
            checked += 1
        for k in range(complex_per_source):
            cfg = random_config(n, 2 * n + 2, derive_seed(seed, "c1cs", n, k), cctx)
            r = relation_residual_magnitude(diametric_cross_ratios(cfg), n, cctx)
            if r > RESIDUAL_TOL:
                return False, f"complex sampled n={n} trial {k} residual {r:.2e}"
            c = random_relation_vector(n, derive_seed(seed, "c1cv", n, k), cctx)
            cfg2 = from_cross_ratios(c, n, "unit_diameters", cctx)
            r2 = relation_residual_magnitude(diametric_cross_ratios(cfg2), n, cctx)
            if r2 > RESIDUAL_TOL:
                return False, f"complex constructed n={n} trial {k} residual {r2:.2e}"
            checked += 2
    return True, f"{checked} configurations, exact zeros in rational mode"


def criterion_2_roundtrip(n_max=6, trials=None, seed=0):
    """Construction from relation-satisfying cross-ratios inverts exactly."""
    rctx = rational_ctx()
    per_n = _scaled(200, trials)
    checked = 0
    for n in range(1, min(n_max, 6) + 1):
        for k in range(per_n):
            c = random_relation_vector(n, derive_seed(seed, "c2", n, k), rctx)
            cfg = from_cross_ratios(c, n, "unit_diameters", rctx)
            if diametric_cross_ratios(cfg) != c:
                return False, f"n={n} trial {k} round-trip mismatch"
            checked += 1
    return True, f"{checked} exact round-trips"


def criterion_3_completeness(n_max=4, trials=None, seed=0):
    """Transformed rescalings come back Equivalent with exact witnesses."""
    rctx = rational_ctx()
    per_n = _scaled(100, trials)
    opp_per_n = _scaled(20, trials)
    checked = 0
    for n in range(1, min(n_max, 4) + 1):
        for k in range(per_n):
            cfg = random_config(n, 2 * n + 2, derive_seed(seed, "c3", n, k), rctx)
            rng = rng_for(seed, "c3lam", n, k)
            lam = [
                Fraction(rng.randint(1, 5), rng.randint(1, 5)) * rng.choice((1, -1))
                for _ in range(2 * n + 2)
            ]
            moved = rescale_configuration(cfg, lam)
            s = random_symplectic(n, derive_seed(seed, "c3s", n, k), rctx)
            moved = moved.with_points(
                [linalg.mat_vec(s, list(p)) for p in moved.points]
            )
            verdict = equivalent(cfg, moved)
            if verdict.kind != "equivalent" or verdict.transform is None:
                return False, f"n={n} trial {k}: verdict {verdict.kind}"
            if not is_symplectic(verdict.transform, rctx):
                return False, f"n={n} trial {k}: witness not symplectic"
            for lam_i, a_i, b_i in zip(verdict.rescaling, cfg.points, moved.points):
                ta = linalg.mat_vec(verdict.transform, [lam_i * x for x in a_i])
                if ta != list(b_i):
                    return False, f"n={n} trial {k}: witness misses a line"
            checked += 1
        for k in range(opp_per_n):
            cfg = random_config(n, 2 * n + 2, derive_seed(seed, "c3o", n, k), rctx)
            verdict = equivalent(cfg, opposite(cfg))
            if verdict.kind != "opposite":
                return False, f"n={n} opposite trial {k}: verdict {verdict.kind}"
            checked += 1
    return True, f"{checked} verdicts with verified witnesses"


def criterion_4_pfaffian(n_max=5, trials=None, seed=0):
    """Closed Pfaffian formula, bordered identity, and pf^2 = det."""
    rctx = rational_ctx()
    per_n = _scaled(100, trials)
    checked = 0
    for n in range(1, min(n_max, 5) + 1):
        rng = rng_for(seed, "c4", n)
        for k in range(per_n):
            nz = lambda: Fraction(rng.choice([x for x in range(-6, 7) if x]), rng.randint(1, 4))
            data = OmegaData(
                n=n,
                corner_low=nz(),
                corner_high=nz(),
                diag=[nz() for _ in range(n + 1)],
                upper=[Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)],
                lower=[Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)],
            )
            if pfaffian_omega(data, "formula", rctx) != pfaffian_omega(data, "generic", rctx):
                return False, f"band n={n} trial {k}: formula != generic"
            checked += 1
    rng = rng_for(seed, "c4b")
    for m in range(2, 7):
        for k in range(_scaled(50, trials)):
            a = [[Fraction(rng.randint(-5, 5)) for _ in range(m)] for _ in range(m)]
            x, y = Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5))
            _, _, diff = block_pfaffian(a, x, y, rctx)
            if diff != 0:
                return False, f"bordered identity fails at m={m} trial {k}"
            checked += 1
    for sz in range(2, 13):
        for k in range(_scaled(20, trials)):
            mat = [[Fraction(0)] * sz for _ in range(sz)]
            for i in range(sz):
                for j in range(i + 1, sz):
                    v = Fraction(rng.randint(-5, 5))
                    mat[i][j], mat[j][i] = v, -v
            pf = pfaffian(mat, rctx)
            if pf * pf != linalg.det(mat, rctx):
                return False, f"pf^2 != det at size {sz} trial {k}"
            checked += 1
    return True, f"{checked} exact Pfaffian identities"


def criterion_5_continuant(trials=None, seed=0, n_values=(2, 4, 6)):
    """Cyclic continuant of normalized diameters vanishes (n even, complex)."""
    cctx = complex_ctx()
    rctx = rational_ctx()
    hex_diam = [Fraction(1), Fraction(2), Fraction(3)]
    if cyclic_continuant(hex_diam) != 0:
        return False, "integer hexagon diameters fail exactly"
    per_n = _scaled(100, trials)
    checked = 1
    for n in n_values:
        for k in range(per_n):
            c = random_relation_vector(n, derive_seed(seed, "c5", n, k), cctx)
            cfg = from_cross_ratios(c, n, "unit_diameters", cctx)
            res = normalize(cfg, "even_complex")
            val = abs(complex(cyclic_continuant(res.diameters)))
            scale = max(1.0, max(abs(complex(a)) for a in res.diameters) ** (n + 1))
            if val / scale > RESIDUAL_TOL:
                return False, f"n={n} trial {k}: |R| = {val:.2e}"
            checked += 1
    return True, f"{checked} vanishing cyclic continuants"


def criterion_6_operators(trials=None, seed=0, n_values=(1, 2, 3)):
    """Operator correspondence: monodromy -Id, kernel products, fibers."""
    rctx = rational_ctx()
    per_shape = _scaled(50, trials)
    checked = 0
    for n in n_values:
        for N in (2 * n + 2, 2 * n + 3, 2 * n + 4):
            for k in range(per_shape):
                cfg = random_config(n, N, derive_seed(seed, "c6", n, N, k), rctx)
                op = diffop.operator_from_config(cfg)
                ok, reasons = diffop.is_in_monodromy_class(op)
                if not ok:
                    return False, f"(n={n},N={N}) trial {k}: {reasons}"
                nu, _ = diffop.kernel_gram(op, N)
                if nu != cfg.gram:
                    return False, f"(n={n},N={N}) trial {k}: kernel products differ"
                back = diffop.config_from_operator(op)
                if back.gram != cfg.gram:
                    return False, f"(n={n},N={N}) trial {k}: projection loses the class"
                op2 = diffop.operator_from_config(back, cross_check=False)
                if op2.coeffs != op.coeffs:
                    return False, f"(n={n},N={N}) trial {k}: canonical section broken"
                rng = rng_for(seed, "c6lam", n, N, k)
                lam = [
                    Fraction(rng.randint(1, 4), rng.randint(1, 4)) * rng.choice((1, -1))
                    for _ in range(N)
                ]
                resc = diffop.rescale(op, lam)
                cfg_l = rescale_configuration(cfg, lam)
                op_l = diffop.operator_from_config(cfg_l, cross_check=False)
                if resc.coeffs != op_l.coeffs:
                    return False, f"(n={n},N={N}) trial {k}: rescaling fiber broken"
                pl = diffop.config_from_operator(resc)
                scaled_gram = [
                    [lam[i] * lam[j] * cfg.gram[i][j] for j in range(N)]
                    for i in range(N)
                ]
                if pl.gram != scaled_gram:
                    return False, f"(n={n},N={N}) trial {k}: projected rescaling differs"
                checked += 1
    return True, f"{checked} exact operator correspondences"


def criterion_7_wronskian(trials=None, seed=0):
    """The kernel form is evaluation-point independent with the stated values."""
    rctx = rational_ctx()
    count = _scaled(100, trials)
    rng = rng_for(seed, "c7")
    checked = 0
    for k in range(count):
        n = rng.randint(1, 3)
        N = rng.randint(2 * n + 1, 2 * n + 5)
        coeffs = [
            [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(N)]
            for _ in range(n)
        ]
        coeffs.append(
            [
                Fraction(rng.choice([x for x in range(-5, 6) if x]), rng.randint(1, 3))
                for _ in range(N)
            ]
        )
        op = diffop.DifferenceOperator(n, N, coeffs, rctx)
        lo, hi = -3 - n - N, 3 + 2 * n + N
        v = diffop.basis_solution(op, 0, lo, hi)
        w = diffop.basis_solution(op, n + 1, lo, hi)
        vals = {diffop.wronskian(op, v, w, i) for i in (-3, -1, 0, 2, 5)}
        if len(vals) != 1:
            return False, f"trial {k}: form depends on the evaluation point"
        j = rng.randint(0, N - 1)
        vj = diffop.basis_solution(op, j, lo, hi + N)
        vjn = diffop.basis_solution(op, j - n, lo - n, hi)
        if diffop.wronskian(op, vjn, vj, j) != 1 / op.a(n, j):
            return False, f"trial {k}: pairing value differs from 1/a^n_j"
        checked += 1
    return True, f"{checked} operators checked exactly"


def criterion_8_sl_bridge(trials=None, seed=0):
    """Second-order kernel values from (0, 1) initial data are continuants."""
    from .continuants import continuant

    rctx = rational_ctx()
    count = _scaled(50, trials)
    rng = rng_for(seed, "c8")
    for k in range(count):
        m = rng.randint(1, 20)
        a = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(m)]
        op = diffop.DifferenceOperator(1, m, [[-x for x in a], [Fraction(1)] * m], rctx)
        win = diffop.solve(op, -1, [Fraction(0), Fraction(1)], -1, m)
        if any(win.value(t) != continuant(a[:t]) for t in range(m + 1)):
            return False, f"trial {k}: kernel values are not continuants"
    return True, f"{count} coefficient sequences, lengths up to 20"


def criterion_9_gauss(trials=None, seed=0):
    """Pentagon/heptagon/nonagon relations on sampled configurations."""
    rctx = rational_ctx()
    per_n = _scaled(20, trials)
    checked = 0
    for n in (1, 2, 3):
        for k in range(per_n):
            cfg = random_config(n, 2 * n + 3, derive_seed(seed, "c9", n, k), rctx).to_complex()
            md = gauss.normalize_2n3(cfg)
            scale = max(1.0, max(abs(complex(x)) for x in md.d) ** (n + 1))
            worst = max(abs(complex(r)) for r in gauss.gauss_residuals(md))
            if worst / scale > RESIDUAL_TOL:
                return False, f"n={n} trial {k}: diagonal residual {worst:.2e}"
            c = sequence_cross_ratios(cfg)
            worst_c = max(abs(complex(r)) for r in gauss.gauss_cross_ratio_residuals(c, n))
            if worst_c > 1e-6:
                return False, f"n={n} trial {k}: cross-ratio residual {worst_c:.2e}"
            if gauss.diagonals_cross_check(cfg) / scale > RESIDUAL_TOL:
                return False, f"n={n} trial {k}: coefficient dual check"
            if n == 1:
                prod = gauss.pentagon_matrix_product(md.d)
                dev = max(
                    abs(complex(prod[i][j]) + (1 if i == j else 0))
                    for i in range(2)
                    for j in range(2)
                )
                if dev > 1e-6:
                    return False, f"pentagon trial {k}: product deviates {dev:.2e}"
            checked += 1
    return True, f"{checked} normalized (n, 2n+3) samples"


def criterion_10_trivial(n_max=4, trials=None, seed=0):
    """Trivial moduli reduce to canonical forms; epsilon splits N = 2n+1."""
    rctx = rational_ctx()
    per_n = _scaled(25, trials)
    checked = 0
    for n in range(1, min(n_max, 4) + 1):
        for k in range(per_n):
            cfg = random_config(n, 2 * n, derive_seed(seed, "c10a", n, k), rctx)
            tf = classify_trivial(cfg)
            if not is_symplectic(tf.transform, rctx):
                return False, f"(n,2n) n={n} trial {k}: witness not symplectic"
            checked += 1
        eps_seen = set()
        for k in range(per_n):
            cfg = random_config(n, 2 * n + 1, derive_seed(seed, "c10b", n, k), rctx)
            for sample in (cfg, opposite(cfg)):
                exact = classify_trivial(sample)  # epsilon is exact over Q
                eps_seen.add(exact.epsilon)
                emb = classify_trivial(sample.to_complex())
                if emb.epsilon != exact.epsilon:
                    return False, f"(n,2n+1) n={n} trial {k}: epsilon mismatch"
                if not is_symplectic(emb.transform, emb.canonical.ctx):
                    return False, f"(n,2n+1) n={n} trial {k}: witness not symplectic"
                checked += 1
        if eps_seen != {1, -1}:
            return False, f"n={n}: classes seen {eps_seen}, expected both signs"
    return True, f"{checked} canonical reductions, both sign classes present"


def criterion_11_counts(trials=None, seed=0):
    """Normalization branch counts: 4 / 4 / 2n+2."""
    rctx, cctx = rational_ctx(), complex_ctx()

    def distinct(variants):
        keys = set()
        for v in variants:
            keys.add(
                tuple(
                    tuple(
                        (round(complex(x).real, 8), round(complex(x).imag, 8))
                        for x in p
                    )
                    for p in v.points
                )
            )
        return len(keys)

    for n in (2, 4):
        cfg = random_config(n, 2 * n + 2, derive_seed(seed, "c11e", n), rctx).to_complex()
        for scheme, expected in (("even_complex", 4), ("even_real", 4)):
            variants = enumerate_normalizations(cfg, scheme)
            if distinct(variants) != expected:
                return False, f"{scheme} n={n}: wrong branch count"
            for v in variants:
                tgt = 1.0 if scheme == "even_complex" else None
                for i in range(2 * n + 2):
                    s = complex(v.omega(i, i + n))
                    want = (
                        tgt
                        if tgt is not None
                        else complex(variants[0].omega(i, i + n))
                    )
                    if abs(s - want) > 1e-6:
                        return False, f"{scheme} n={n}: variant breaks the pattern"
    for n in (1, 3):
        c = random_relation_vector(n, derive_seed(seed, "c11o", n), rctx)
        cfg = from_cross_ratios(c, n, "unit_diameters", rctx).to_complex()
        variants = enumerate_normalizations(cfg, "odd_complex")
        if distinct(variants) != 2 * n + 2:
            return False, f"odd_complex n={n}: wrong branch count"
        for v in variants:
            alt = complex(1)
            for i in range(n + 1):
                a = complex(v.omega(i, i + n + 1))
                alt = alt * a if i % 2 == 0 else alt / a
            if abs(alt - 1) > 1e-6:
                return False, f"odd_complex n={n}: variant breaks the balance"
    return True, "4 / 4 / 2n+2 branches verified"


CRITERIA = (
    (1, "cross-ratio relation on generic configurations", criterion_1_relation),
    (2, "construction round-trip from cross-ratios", criterion_2_roundtrip),
    (3, "equivalence completeness with witnesses", criterion_3_completeness),
    (4, "Pfaffian formula, bordered identity, pf^2 = det", criterion_4_pfaffian),
    (5, "cyclic continuant of normalized diameters", criterion_5_continuant),
    (6, "difference-operator correspondence", criterion_6_operators),
    (7, "kernel form independence and values", criterion_7_wronskian),
    (8, "second-order kernel / continuant bridge", criterion_8_sl_bridge),
    (9, "pentagon, heptagon and nonagon relations", criterion_9_gauss),
    (10, "trivial moduli canonical reduction", criterion_10_trivial),
    (11, "normalization branch counts", criterion_11_counts),
)


def run_all(n_max=6, trials=None, seed=0, indices=None):
    results = []
    for index, name, fn in CRITERIA:
        if indices and index not in indices:
            continue
        t0 = time.time()
        kwargs = {"trials": trials, "seed": seed}
        if "n_max" in fn.__code__.co_varnames[: fn.__code__.co_argcount]:
            kwargs["n_max"] = n_max
        try:
            passed, detail = fn(**kwargs)
        except LagError as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CriterionResult(index, name, passed, detail, time.time() - t0))
    return results
