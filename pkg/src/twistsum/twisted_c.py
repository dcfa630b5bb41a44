"""Twisted Bernoulli-type values.

The basic object is

    C_{n,k}(x;a) = sum_{l=0}^{k-1} B_n(x - l/k) zeta_k^{a l},      k does not divide a,

together with its periodic companion C~_{n,k}(x;a) built from B_n({.}).
Two evaluations at x = 0 occur and they differ:

* the polynomial value C_{n,k}(0;a), which is what the generating function
  (z e^{xz}/(e^z-1)) * (e^{-z}-1)/(zeta^a e^{-z/k}-1) produces, and
* the periodic value C~_{n,k}(0;a), which is the constant that actually
  appears in the twisted Euler-Maclaurin formula (its l=1 case has the
  closed form -(1 + sum_q (q/k) zeta^{aq})).

``em_constant`` returns the periodic one; the starred values C*_{m,k}(a),
their multinomial extension C*_{m,k}(A_r) and the complex-order combination
C*_{s,m,k}(x;A_r) are built on it, matching what the zeta asymptotics need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .bernoulli_euler import (
    SingularTwistError,
    WeightVector,
    _as_weights,
    bernoulli_poly,
    periodic_bernoulli,
)
from .exact import (
    CyclotomicNumber,
    PolynomialX,
    RationalLike,
    TruncatedSeries,
    as_fraction,
    cyc_root,
)


def _require_twist(k: int, a: int) -> None:
    if k < 2:
        raise ValueError("modulus k must be at least 2")
    if a % k == 0:
        raise SingularTwistError(f"singular twist: k={k} divides a={a}")


@dataclass(frozen=True)
class CPolySpec:
    """Index (n, k, a) with k >= 2 and k not dividing a."""

    n: int
    k: int
    a: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("degree index n must be nonnegative")
        _require_twist(self.k, self.a)


def c_poly(spec: CPolySpec) -> PolynomialX:
    """C_{n,k}(x;a) as an exact polynomial over Q(zeta_k)."""
    bn = bernoulli_poly(spec.n)
    acc = PolynomialX.zero(spec.k)
    for l in range(spec.k):
        shifted = bn.taylor_shift(Fraction(-l, spec.k))
        acc = acc + shifted * cyc_root(spec.k, spec.a * l)
    return acc


def c_tilde(spec: CPolySpec, x: Union[RationalLike, float]) -> Union[CyclotomicNumber, complex]:
    """C~_{n,k}(x;a): exact cyclotomic for rational x, complex for float x."""
    if isinstance(x, (int, Fraction)):
        acc = CyclotomicNumber.zero(spec.k)
        xq = as_fraction(x)
        for l in range(spec.k):
            b = periodic_bernoulli(spec.n, xq - Fraction(l, spec.k))
            acc = acc + cyc_root(spec.k, spec.a * l) * b
        return acc
    return _periodic_kernel(spec.n, spec.k, spec.a)(float(x))


class _PeriodicKernel:
    """Float evaluator for C~_{q,k}(x;a); smooth between consecutive j/k."""

    def __init__(self, n: int, k: int, a: int):
        _require_twist(k, a)
        self.n, self.k = n, k
        self._bcoeffs = [float(c) for c in bernoulli_poly(n).rational_coeffs()]
        self._roots = [cyc_root(k, a * l).embed() for l in range(k)]

    def _bern(self, x: float) -> float:
        frac = x - math.floor(x)
        acc = 0.0
        for c in reversed(self._bcoeffs):
            acc = acc * frac + c
        return acc

    def __call__(self, x: float) -> complex:
        total = 0j
        for l in range(self.k):
            total += self._roots[l] * self._bern(x - l / self.k)
        return total


_kernel_cache: dict[tuple[int, int, int], _PeriodicKernel] = {}


def _periodic_kernel(n: int, k: int, a: int) -> _PeriodicKernel:
    key = (n, k, a % k)
    kernel = _kernel_cache.get(key)
    if kernel is None:
        kernel = _kernel_cache[key] = _PeriodicKernel(n, k, a)
    return kernel


def em_constant(l: int, k: int, a: int) -> CyclotomicNumber:
    """The Euler-Maclaurin constant C_{l,k}(a) := C~_{l,k}(0;a)."""
    return c_tilde(CPolySpec(l, k, a), Fraction(0))


def c_star(m: int, k: int, a: int) -> CyclotomicNumber:
    """C*_{m,k}(a) = C_{m,k}(a) * a^{m-1} (exact; m=0 divides by a)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return em_constant(m, k, a) * Fraction(a) ** (m - 1)


def _c_poly_at_zero(m: int, k: int, a: int) -> CyclotomicNumber:
    return c_poly(CPolySpec(m, k, a)).eval_exact(0)


def _c_star_nonperiodic(m: int, k: int, a: int) -> CyclotomicNumber:
    return _c_poly_at_zero(m, k, a) * Fraction(a) ** (m - 1)


def _multinomial_convolve(m: int, k: int, A: WeightVector, single) -> CyclotomicNumber:
    """sum over l_1+..+l_r=m of multinomial(m; l..) * prod single(l_i, k, a_i)."""
    tables = [[single(l, k, a) for l in range(m + 1)] for a in A]
    acc = tables[0]
    for table in tables[1:]:
        nxt = []
        for total in range(m + 1):
            val = CyclotomicNumber.zero(k)
            for i in range(total + 1):
                val = val + acc[i] * table[total - i] * Fraction(math.comb(total, i))
            nxt.append(val)
        acc = nxt
    return acc[m]


def c_star_multi(m: int, k: int, A) -> CyclotomicNumber:
    """C*_{m,k}(A_r): the multinomial convolution of the single-weight stars."""
    A = _as_weights(A)
    for a in A:
        _require_twist(k, a)
    return _multinomial_convolve(m, k, A, c_star)


def c_star_multi_gf_check(m_max: int, k: int, A) -> bool:
    """Cross-check the starred values against their generating functions.

    Two identities are verified through order ``m_max``, both exactly.  The
    multinomial convolution of the periodic stars must match the product of
    the per-weight series z/(zeta^{-a} e^{az/k} - 1); the convolution of the
    non-periodic stars must match the closed-form product

        prod_p [z/(e^{a_p z}-1)] * [(e^{-a_p z}-1)/(zeta^{a_p} e^{-a_p z/k}-1)].

    The fractional substitution z -> z/k stays inside integer-exponent series
    arithmetic by working in w = z/k and rescaling coefficients afterwards.
    """
    A = _as_weights(A)
    for a in A:
        _require_twist(k, a)
    trunc = m_max

    def twisted_exp(root: CyclotomicNumber, rate: int) -> TruncatedSeries:
        # root * e^{rate*w} - 1; its constant term root-1 is nonzero by admissibility
        coeffs: list = [root - CyclotomicNumber.one(k)]
        for n in range(1, trunc + 1):
            coeffs.append(root * Fraction(rate**n, math.factorial(n)))
        return TruncatedSeries.from_coeffs(coeffs, trunc, k)

    # Periodic side, per weight a: (k w)/(zeta^{-a} e^{aw} - 1).
    periodic_prod = TruncatedSeries.one(trunc, k)
    for a in A:
        numerator = TruncatedSeries.from_coeffs([0, Fraction(k)], trunc, k)
        periodic_prod = periodic_prod * numerator * twisted_exp(cyc_root(k, -a), a).inverse()

    # Closed-form side, per weight a:
    #   [k w/(e^{akw}-1)] * [(e^{-akw}-1)/(zeta^{a} e^{-aw}-1)].
    closed_prod = TruncatedSeries.one(trunc, k)
    for a in A:
        stripped = TruncatedSeries.from_coeffs(
            [Fraction((a * k) ** n, math.factorial(n + 1)) for n in range(trunc + 1)],
            trunc,
            k,
        )
        factor1 = stripped.inverse().scale(Fraction(1, a))  # k/(ak * stripped)
        numerator2 = TruncatedSeries.from_coeffs(
            [0] + [Fraction((-a * k) ** n, math.factorial(n)) for n in range(1, trunc + 1)],
            trunc,
            k,
        )
        factor2 = numerator2 * twisted_exp(cyc_root(k, a), -a).inverse()
        closed_prod = closed_prod * factor1 * factor2

    for m in range(m_max + 1):
        scale = Fraction(math.factorial(m), k**m)
        periodic_value = periodic_prod.coeff(m).coeff(0) * scale
        closed_value = closed_prod.coeff(m).coeff(0) * scale
        if periodic_value != _multinomial_convolve(m, k, A, c_star):
            return False
        if closed_value != _multinomial_convolve(m, k, A, _c_star_nonperiodic):
            return False
    return True


# ---------------------------------------------------------------------------
# complex-order machinery
# ---------------------------------------------------------------------------

def pochhammer(s: complex, r: int) -> complex:
    """Rising factorial (s)_r = s (s+1) ... (s+r-1), with (s)_0 = 1.

    Computed as the explicit product, never via gamma quotients, so integer
    arguments at poles of gamma are unproblematic.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    acc: complex = 1.0
    for i in range(r):
        acc *= s + i
    return acc


def general_binomial(s: complex, j: int) -> complex:
    """Binomial coefficient C(s, j) = s (s-1) ... (s-j+1) / j! for complex s."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    return pochhammer(s - j + 1, j) / math.factorial(j)


def c_star_s(s: complex, m: int, k: int, x: float, A) -> complex:
    """C*_{s,m,k}(x;A_r) = sum_{j<=m} (-k)^j C(s,j) C*_{j,k}(A_r) x^{s-j}.

    Principal branch for x^{s-j}; requires x > 0.
    """
    A = _as_weights(A)
    if not (x > 0):
        raise ValueError("x must be positive (principal branch)")
    total = 0j
    for j in range(m + 1):
        star = c_star_multi(j, k, A)
        if star.is_zero():
            continue
        total += (
            (-k) ** j
            * general_binomial(s, j)
            * star.embed()
            * complex(x) ** (s - j)
        )
    if not (math.isfinite(total.real) and math.isfinite(total.imag)):
        raise ArithmeticError("non-finite value in C* evaluation")
    return total


def c_star_s_exact(n: int, m: int, k: int, x: RationalLike, A) -> CyclotomicNumber:
    """Exact evaluation of C*_{n,m,k}(x;A_r) for integer order n >= m, rational x."""
    A = _as_weights(A)
    if n < m:
        raise ValueError("integer order n must be at least the truncation m")
    xq = as_fraction(x)
    total = CyclotomicNumber.zero(k)
    for j in range(m + 1):
        star = c_star_multi(j, k, A)
        if star.is_zero():
            continue
        term = star * Fraction((-k) ** j * math.comb(n, j)) * xq ** (n - j)
        total = total + term
    return total
