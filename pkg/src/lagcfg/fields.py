"""Scalar arithmetic over exact rationals or complex binary64 values.

Every other module is generic over a :class:`FieldContext`, which fixes the
scalar kind (``fractions.Fraction`` or ``complex``) together with the
comparison and square-root contract, so the exact and floating code paths
share one set of formulas.  Real data is carried either in rational mode or
in complex mode with a per-object "real" flag.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, MixedFieldKinds, NotRealField, RequiresExtension

RATIONAL = "rational"
COMPLEX = "complex"

DEFAULT_EPS_REL = 1e-9
DEFAULT_EPS_ABS = 1e-12


def scalar_kind(x):
    """Classify a scalar as rational-like or complex-like."""
    if isinstance(x, (Fraction, int)):
        return RATIONAL
    if isinstance(x, (complex, float)):
        return COMPLEX
    raise MixedFieldKinds(f"unsupported scalar type {type(x).__name__!r}")


def check_same_kind(a, b):
    ka, kb = scalar_kind(a), scalar_kind(b)
    if ka != kb:
        raise MixedFieldKinds(f"cannot mix {ka} and {kb} scalars")
    return ka


@dataclass(frozen=True)
class FieldContext:
    """Field kind plus the tolerance policy used for comparisons.

    ``eps_rel`` and ``eps_abs`` only matter in complex mode; rational mode
    compares exactly.
    """

    kind: str = RATIONAL
    eps_rel: float = DEFAULT_EPS_REL
    eps_abs: float = DEFAULT_EPS_ABS

    def __post_init__(self):
        if self.kind not in (RATIONAL, COMPLEX):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == COMPLEX and (self.eps_rel <= 0 or self.eps_abs <= 0):
            raise ValueError("tolerances must be positive in complex mode")

    # -- basic values ------------------------------------------------------

    @property
    def is_rational(self):
        return self.kind == RATIONAL

    def zero(self):
        return Fraction(0) if self.is_rational else complex(0.0)

    def one(self):
        return Fraction(1) if self.is_rational else complex(1.0)

    def coerce(self, x):
        """Bring an int/float/Fraction/complex into this context's scalar type."""
        if self.is_rational:
            if isinstance(x, (Fraction, int)):
                return Fraction(x)
            raise MixedFieldKinds(f"{type(x).__name__} is not a rational scalar")
        if isinstance(x, (complex, float, int, Fraction)):
            z = complex(x)
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise ValueError("non-finite complex scalar")
            return z
        raise MixedFieldKinds(f"{type(x).__name__} is not a complex scalar")

    # -- comparisons -------------------------------------------------------

    def magnitude(self, a):
        return abs(a) if not self.is_rational else abs(a)

    def is_zero(self, a):
        if self.is_rational:
            return a == 0
        return abs(a) <= self.eps_abs

    def approx_eq(self, a, b):
        if self.is_rational:
            return a == b
        return abs(a - b) <= max(self.eps_abs, self.eps_rel * max(abs(a), abs(b)))

    def sign(self, a):
        """Sign of a real value: +1, -1 or 0.  Complex input must be near-real."""
        if self.is_rational:
            return (a > 0) - (a < 0)
        z = complex(a)
        if abs(z.imag) > max(self.eps_abs, self.eps_rel * abs(z)):
            raise NotRealField(f"value {z} has a non-negligible imaginary part")
        if abs(z.real) <= self.eps_abs:
            return 0
        return 1 if z.real > 0 else -1

    # -- arithmetic with the documented guards ------------------------------

    def div(self, a, b):
        if self.is_rational:
            if b == 0:
                raise DivisionByZero("exact division by zero")
            return a / b
        if abs(b) <= self.eps_abs:
            raise DivisionByZero(f"divisor magnitude {abs(b)} below eps_abs")
        return a / b

    def sqrt(self, a):
        """Principal square root; exact perfect squares only in rational mode."""
        if self.is_rational:
            a = Fraction(a)
            if a < 0:
                raise RequiresExtension("negative rational has no rational square root")
            rn = math.isqrt(a.numerator)
            rd = math.isqrt(a.denominator)
            if rn * rn != a.numerator or rd * rd != a.denominator:
                raise RequiresExtension(f"{a} is not a perfect rational square")
            return Fraction(rn, rd)
        return cmath.sqrt(complex(a))

    def nth_root(self, a, k):
        """Principal k-th root; rational mode requires an exact root."""
        if k <= 0:
            raise ValueError("root order must be positive")
        if self.is_rational:
            a = Fraction(a)
            if a == 0:
                return Fraction(0)
            if a < 0 and k % 2 == 0:
                raise RequiresExtension("even root of a negative rational")
            sign = -1 if a < 0 else 1
            mag = -a if a < 0 else a
            rn = round(mag.numerator ** (1.0 / k))
            rd = round(mag.denominator ** (1.0 / k))
            for dn in (rn - 1, rn, rn + 1):
                for dd in (rd - 1, rd, rd + 1):
                    if dn > 0 and dd > 0 and Fraction(dn**k, dd**k) == mag:
                        return sign * Fraction(dn, dd)
            raise RequiresExtension(f"{a} has no exact rational {k}-th root")
        z = complex(a)
        if z == 0:
            return complex(0.0)
        return cmath.exp(cmath.log(z) / k)

    # -- JSON scalar encoding ------------------------------------------------

    def encode(self, a):
        if self.is_rational:
            f = Fraction(a)
            return f"{f.numerator}/{f.denominator}"
        z = complex(a)
        return [z.real, z.imag]

    def parse(self, obj):
        if self.is_rational:
            if isinstance(obj, int) and not isinstance(obj, bool):
                return Fraction(obj)
            if isinstance(obj, str):
                try:
                    return Fraction(obj)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ValueError(f"malformed rational scalar {obj!r}") from exc
            raise ValueError(f"malformed rational scalar {obj!r}")
        if isinstance(obj, (int, float)) and not isinstance(obj, bool):
            return self.coerce(float(obj))
        if (
            isinstance(obj, (list, tuple))
            and len(obj) == 2
            and all(isinstance(t, (int, float)) and not isinstance(t, bool) for t in obj)
        ):
            return self.coerce(complex(float(obj[0]), float(obj[1])))
        raise ValueError(f"malformed complex scalar {obj!r}")


def rational_ctx():
    return FieldContext(RATIONAL)


def complex_ctx(eps_rel=DEFAULT_EPS_REL, eps_abs=DEFAULT_EPS_ABS):
    return FieldContext(COMPLEX, eps_rel, eps_abs)


def arith(a, b, op):
    """Same-kind scalar arithmetic with the documented error contract."""
    kind = check_same_kind(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if kind == RATIONAL:
            if b == 0:
                raise DivisionByZero("exact division by zero")
        elif abs(b) <= DEFAULT_EPS_ABS:
            raise DivisionByZero("divisor magnitude below eps_abs")
        return a / b
    raise ValueError(f"unknown operation {op!r}")
