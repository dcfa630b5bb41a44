"""Exact arithmetic kernels.

Provides the scalar tower used everywhere else: arbitrary-precision
rationals (stdlib ``fractions.Fraction``), elements of the cyclotomic field
Q(zeta_k) in canonical form modulo the k-th cyclotomic polynomial,
dense univariate polynomials with cyclotomic coefficients, and truncated
formal power series with polynomial coefficients.

All values are immutable after construction and every operation is a pure
function, so objects may be shared freely between threads.  The only global
state is the memoized table of cyclotomic polynomials.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

RationalLike = Union[Fraction, int]

#: sentinel accepted by :func:`TruncatedSeries.exp_linear` for the formal variable
FORMAL_X = "x"


def as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def format_rational(q: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(q)


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


@functools.lru_cache(maxsize=None)
def euler_phi(k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    n, result, p = k, k, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


# ---------------------------------------------------------------------------
# dense rational polynomial helpers (little-endian Fraction tuples)
# ---------------------------------------------------------------------------

def _strip(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _poly_mul_frac(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_divmod_frac(
    num: Sequence[Fraction], den: Sequence[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    den = list(_strip(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num)
    quot = [Fraction(0)] * max(len(rem) - len(den) + 1, 0)
    inv_lead = 1 / den[-1]
    for i in range(len(rem) - len(den), -1, -1):
        c = rem[i + len(den) - 1] * inv_lead
        if c:
            quot[i] = c
            for j, dj in enumerate(den):
                rem[i + j] -= c * dj
    return quot, list(_strip(rem))


@functools.lru_cache(maxsize=None)
def _cyclotomic_coeffs(k: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_k, via (x^k - 1) / prod of Phi_d over proper divisors."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return (Fraction(-1), Fraction(1))
    num: Sequence[Fraction] = [Fraction(-1)] + [Fraction(0)] * (k - 1) + [Fraction(1)]
    den: list[Fraction] = [Fraction(1)]
    for d in range(1, k):
        if k % d == 0:
            den = _poly_mul_frac(den, _cyclotomic_coeffs(d))
    quot, rem = _poly_divmod_frac(num, den)
    if rem:
        raise ArithmeticError(f"cyclotomic division left a remainder for k={k}")
    return tuple(quot)


def _reduce_mod_cyclotomic(coeffs: Sequence[Fraction], k: int) -> tuple[Fraction, ...]:
    phi = euler_phi(k)
    if len(_strip(coeffs)) <= phi:
        out = list(coeffs) + [Fraction(0)] * phi
        return tuple(out[:phi])
    _, rem = _poly_divmod_frac(coeffs, _cyclotomic_coeffs(k))
    rem = list(rem) + [Fraction(0)] * phi
    return tuple(rem[:phi])


# ---------------------------------------------------------------------------
# cyclotomic field elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclotomicNumber:
    """An element of Q(zeta_k), reduced modulo Phi_k.

    ``coeffs`` has length phi(k) and holds the coordinates in the power basis
    1, zeta, zeta^2, ...  Equality of values is equality of representations
    (after promotion to a common order, taken to be lcm of the two orders).
    """

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be a positive integer")
        if len(self.coeffs) != euler_phi(self.order):
            raise ValueError(
                f"need {euler_phi(self.order)} coefficients for order {self.order}, "
                f"got {len(self.coeffs)}"
            )

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(value: RationalLike, order: int = 1) -> CyclotomicNumber:
        q = as_fraction(value)
        coeffs = [Fraction(0)] * euler_phi(order)
        coeffs[0] = q
        return CyclotomicNumber(order, tuple(coeffs))

    @staticmethod
    def zero(order: int = 1) -> CyclotomicNumber:
        return CyclotomicNumber.from_rational(0, order)

    @staticmethod
    def one(order: int = 1) -> CyclotomicNumber:
        return CyclotomicNumber.from_rational(1, order)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def promote(self, new_order: int) -> CyclotomicNumber:
        """Embed into Q(zeta_L) via zeta_k -> zeta_L^(L/k); L must be a multiple of k."""
        if new_order == self.order:
            return self
        if new_order % self.order != 0:
            raise ValueError(f"cannot promote order {self.order} to {new_order}")
        step = new_order // self.order
        raw = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1 if self.coeffs else 1)
        for i, c in enumerate(self.coeffs):
            if c:
                raw[i * step] += c
        return CyclotomicNumber(new_order, _reduce_mod_cyclotomic(raw, new_order))

    def _coerce(self, other) -> tuple[CyclotomicNumber, CyclotomicNumber]:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(other, 1)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented, NotImplemented  # type: ignore[return-value]
        common = math.lcm(self.order, other.order)
        return self.promote(common), other.promote(common)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> CyclotomicNumber:
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> CyclotomicNumber:
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other) -> CyclotomicNumber:
        return (-self).__add__(other)

    def __mul__(self, other) -> CyclotomicNumber:
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        prod = _poly_mul_frac(a.coeffs, b.coeffs)
        return CyclotomicNumber(a.order, _reduce_mod_cyclotomic(prod, a.order))

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        """Field inverse via the extended Euclidean algorithm against Phi_k."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        if self.is_rational():
            return CyclotomicNumber.from_rational(1 / self.coeffs[0], self.order)
        r0, r1 = list(_cyclotomic_coeffs(self.order)), list(_strip(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while _strip(r1):
            q, rem = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, rem
            qs1 = _poly_mul_frac(q, s1)
            new_s = [Fraction(0)] * max(len(s0), len(qs1))
            for i, c in enumerate(s0):
                new_s[i] += c
            for i, c in enumerate(qs1):
                new_s[i] -= c
            s0, s1 = s1, list(_strip(new_s))
        g = _strip(r0)
        if len(g) != 1:
            raise ArithmeticError("gcd with the cyclotomic polynomial is not constant")
        inv = [c / g[0] for c in s0]
        return CyclotomicNumber(self.order, _reduce_mod_cyclotomic(inv, self.order))

    def __truediv__(self, other) -> CyclotomicNumber:
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other) -> CyclotomicNumber:
        return self.inverse().__mul__(other)

    def __pow__(self, exponent: int) -> CyclotomicNumber:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicNumber.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(other, 1)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        a, b = self._coerce(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # type: ignore[assignment]  # cross-order equality; do not hash

    # -- numerics and serialization -----------------------------------------

    def embed(self) -> complex:
        """Numeric image under zeta_k -> exp(2*pi*i/k)."""
        total = 0j
        for i, c in enumerate(self.coeffs):
            if c:
                total += float(c) * cmath.exp(2j * cmath.pi * i / self.order)
        return total

    def to_json_obj(self) -> dict:
        return {"k": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    @staticmethod
    def from_json_obj(obj: dict) -> CyclotomicNumber:
        return CyclotomicNumber(int(obj["k"]), tuple(parse_rational(c) for c in obj["coeffs"]))

    def __str__(self) -> str:
        if self.is_rational():
            return format_rational(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(format_rational(c))
            else:
                z = f"z{self.order}" if i == 1 else f"z{self.order}^{i}"
                terms.append(f"{format_rational(c)}*{z}")
        return " + ".join(terms) if terms else "0"

    __repr__ = __str__


def cyc_root(k: int, t: int) -> CyclotomicNumber:
    """zeta_k^t in canonical form (t reduced mod k, then mod Phi_k)."""
    if k < 1:
        raise ValueError("k must be positive")
    t %= k
    raw = [Fraction(0)] * (t + 1)
    raw[t] = Fraction(1)
    return CyclotomicNumber(k, _reduce_mod_cyclotomic(raw, k))


# ---------------------------------------------------------------------------
# polynomials in a formal variable x over Q(zeta_k)
# ---------------------------------------------------------------------------

def _as_cyclotomic(value, order: int) -> CyclotomicNumber:
    if isinstance(value, CyclotomicNumber):
        return value.promote(math.lcm(order, value.order))
    return CyclotomicNumber.from_rational(value, order)


@dataclass(frozen=True)
class PolynomialX:
    """Dense univariate polynomial with CyclotomicNumber coefficients.

    ``coeffs[i]`` is the coefficient of x^i; the tuple carries no trailing
    zeros, and the zero polynomial is the empty tuple.
    """

    order: int
    coeffs: tuple[CyclotomicNumber, ...]

    @staticmethod
    def from_coeffs(values: Sequence, order: int = 1) -> PolynomialX:
        common = order
        for v in values:
            if isinstance(v, CyclotomicNumber):
                common = math.lcm(common, v.order)
        cs = [_as_cyclotomic(v, common) for v in values]
        while cs and cs[-1].is_zero():
            cs.pop()
        return PolynomialX(common, tuple(cs))

    @staticmethod
    def zero(order: int = 1) -> PolynomialX:
        return PolynomialX(order, ())

    @staticmethod
    def constant(value, order: int = 1) -> PolynomialX:
        return PolynomialX.from_coeffs([value], order)

    @staticmethod
    def x(order: int = 1) -> PolynomialX:
        return PolynomialX.from_coeffs([0, 1], order)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def promote(self, new_order: int) -> PolynomialX:
        if new_order == self.order:
            return self
        return PolynomialX(new_order, tuple(c.promote(new_order) for c in self.coeffs))

    def _coerce(self, other) -> tuple[PolynomialX, PolynomialX]:
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = PolynomialX.from_coeffs([other], self.order)
        if not isinstance(other, PolynomialX):
            return NotImplemented, NotImplemented  # type: ignore[return-value]
        common = math.lcm(self.order, other.order)
        return self.promote(common), other.promote(common)

    def __add__(self, other) -> PolynomialX:
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        n = max(len(a.coeffs), len(b.coeffs))
        zero = CyclotomicNumber.zero(a.order)
        out = [
            (a.coeffs[i] if i < len(a.coeffs) else zero)
            + (b.coeffs[i] if i < len(b.coeffs) else zero)
            for i in range(n)
        ]
        return PolynomialX.from_coeffs(out, a.order)

    __radd__ = __add__

    def __neg__(self) -> PolynomialX:
        return PolynomialX(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> PolynomialX:
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other) -> PolynomialX:
        return (-self).__add__(other)

    def __mul__(self, other) -> PolynomialX:
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        if a.is_zero() or b.is_zero():
            return PolynomialX.zero(a.order)
        zero = CyclotomicNumber.zero(a.order)
        out = [zero] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ai in enumerate(a.coeffs):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b.coeffs):
                if not bj.is_zero():
                    out[i + j] = out[i + j] + ai * bj
        return PolynomialX.from_coeffs(out, a.order)

    __rmul__ = __mul__

    def coeff(self, i: int) -> CyclotomicNumber:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return CyclotomicNumber.zero(self.order)

    def eval_exact(self, x: RationalLike) -> CyclotomicNumber:
        """Horner evaluation at a rational point; result stays in Q(zeta_k)."""
        xq = as_fraction(x)
        acc = CyclotomicNumber.zero(self.order)
        for c in reversed(self.coeffs):
            acc = acc * xq + c
        return acc

    def eval_cyclotomic(self, x: CyclotomicNumber) -> CyclotomicNumber:
        acc = CyclotomicNumber.zero(math.lcm(self.order, x.order))
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_complex(self, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + c.embed()
        return acc

    def taylor_shift(self, c: RationalLike) -> PolynomialX:
        """Return p(x + c) for rational c, computed by exact binomial expansion."""
        cq = as_fraction(c)
        n = len(self.coeffs)
        zero = CyclotomicNumber.zero(self.order)
        out = [zero] * n
        for i, ai in enumerate(self.coeffs):
            if ai.is_zero():
                continue
            power = Fraction(1)
            for j in range(i, -1, -1):
                out[j] = out[j] + ai * (math.comb(i, j) * power)
                power *= cq
        return PolynomialX.from_coeffs(out, self.order)

    def rational_coeffs(self) -> list[Fraction]:
        return [c.as_rational() for c in self.coeffs]

    def float_coeffs(self) -> list[complex]:
        return [c.embed() for c in self.coeffs]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = PolynomialX.from_coeffs([other], self.order)
        if not isinstance(other, PolynomialX):
            return NotImplemented
        a, b = self._coerce(other)
        return len(a.coeffs) == len(b.coeffs) and all(
            x == y for x, y in zip(a.coeffs, b.coeffs)
        )

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            term = f"({c})"
            if i == 1:
                term += "*x"
            elif i > 1:
                term += f"*x^{i}"
            parts.append(term)
        return " + ".join(parts)

    __repr__ = __str__


def cyclotomic_polynomial(k: int) -> PolynomialX:
    """The k-th cyclotomic polynomial Phi_k as a polynomial with rational coefficients."""
    return PolynomialX.from_coeffs(list(_cyclotomic_coeffs(k)), 1)


# ---------------------------------------------------------------------------
# truncated formal power series with PolynomialX coefficients
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TruncatedSeries:
    """Formal power series in z, truncated at order ``trunc`` (inclusive).

    ``coeffs[n]`` is the coefficient of z^n, a :class:`PolynomialX`.  All ring
    operations agree with full formal-series arithmetic through order
    ``trunc``.
    """

    trunc: int
    order: int
    coeffs: tuple[PolynomialX, ...]

    def __post_init__(self):
        if self.trunc < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError("coefficient list must have length trunc+1")

    @staticmethod
    def from_coeffs(values: Sequence, trunc: int, order: int = 1) -> TruncatedSeries:
        polys = []
        common = order
        for v in values[: trunc + 1]:
            p = v if isinstance(v, PolynomialX) else PolynomialX.from_coeffs([v], order)
            common = math.lcm(common, p.order)
            polys.append(p)
        while len(polys) < trunc + 1:
            polys.append(PolynomialX.zero(common))
        polys = [p.promote(common) for p in polys]
        return TruncatedSeries(trunc, common, tuple(polys))

    @staticmethod
    def one(trunc: int, order: int = 1) -> TruncatedSeries:
        return TruncatedSeries.from_coeffs([1], trunc, order)

    @staticmethod
    def exp_linear(scale, trunc: int, order: int = 1) -> TruncatedSeries:
        """exp(scale*z) truncated; ``scale`` is a rational or the formal x.

        With ``scale=FORMAL_X`` the n-th coefficient is the monomial x^n/n!,
        which is how the e^{x z} factor of a generating function enters.
        """
        coeffs: list[PolynomialX] = []
        if scale == FORMAL_X:
            for n in range(trunc + 1):
                mono = [Fraction(0)] * n + [Fraction(1, math.factorial(n))]
                coeffs.append(PolynomialX.from_coeffs(mono, order))
        else:
            sq = as_fraction(scale)
            power = Fraction(1)
            for n in range(trunc + 1):
                coeffs.append(PolynomialX.constant(power / math.factorial(n), order))
                power *= sq
        return TruncatedSeries.from_coeffs(coeffs, trunc, order)

    def _coerce(self, other: TruncatedSeries) -> tuple[TruncatedSeries, TruncatedSeries]:
        if self.trunc != other.trunc:
            raise ValueError("truncation orders differ")
        common = math.lcm(self.order, other.order)
        a = TruncatedSeries(self.trunc, common, tuple(p.promote(common) for p in self.coeffs))
        b = TruncatedSeries(other.trunc, common, tuple(p.promote(common) for p in other.coeffs))
        return a, b

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        a, b = self._coerce(other)
        return TruncatedSeries(
            a.trunc, a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs))
        )

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        a, b = self._coerce(other)
        return TruncatedSeries(
            a.trunc, a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs))
        )

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        a, b = self._coerce(other)
        out = [PolynomialX.zero(a.order)] * (a.trunc + 1)
        for i, ai in enumerate(a.coeffs):
            if ai.is_zero():
                continue
            for j in range(a.trunc + 1 - i):
                bj = b.coeffs[j]
                if not bj.is_zero():
                    out[i + j] = out[i + j] + ai * bj
        return TruncatedSeries(a.trunc, a.order, tuple(out))

    def scale(self, factor) -> TruncatedSeries:
        f = _as_cyclotomic(factor, self.order) if not isinstance(factor, PolynomialX) else factor
        common = math.lcm(self.order, f.order)
        return TruncatedSeries(
            self.trunc, common, tuple(p.promote(common) * f for p in self.coeffs)
        )

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse through order ``trunc``.

        Requires the constant term to be a nonzero constant polynomial; uses
        the standard recursion b_n = -b_0 * sum_{i=1..n} a_i b_{n-i}.
        """
        a0 = self.coeffs[0]
        if a0.degree() > 0:
            raise ValueError("constant term must be a constant polynomial")
        if a0.is_zero():
            raise ValueError("constant term must be nonzero")
        inv0 = a0.coeff(0).inverse()
        b: list[PolynomialX] = [PolynomialX.constant(inv0, self.order)]
        for n in range(1, self.trunc + 1):
            acc = PolynomialX.zero(self.order)
            for i in range(1, n + 1):
                if not self.coeffs[i].is_zero():
                    acc = acc + self.coeffs[i] * b[n - i]
            b.append(acc * PolynomialX.constant(-inv0, self.order))
        return TruncatedSeries.from_coeffs(b, self.trunc, self.order)

    def coeff(self, n: int) -> PolynomialX:
        return self.coeffs[n]

    def taylor_value(self, n: int) -> PolynomialX:
        """n! times the z^n coefficient (the Taylor-convention value)."""
        return self.coeffs[n] * Fraction(math.factorial(n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        a, b = self._coerce(other)
        return all(x == y for x, y in zip(a.coeffs, b.coeffs))

    __hash__ = None  # type: ignore[assignment]


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_inv(a: TruncatedSeries) -> TruncatedSeries:
    return a.inverse()
