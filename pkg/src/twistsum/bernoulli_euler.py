"""Bernoulli numbers/polynomials and (generalized) Euler numbers/polynomials.

The classical objects come from the generating functions z/(e^z - 1),
z e^{xz}/(e^z - 1), 2/(e^z + 1) and 2 e^{xz}/(e^z + 1).  The generalized
Euler numbers E_m(j, A_r) and polynomials E_m(x, j; A_r) attach a root-of-
unity twist e^{a j} to each of r denominator factors:

    2^r e^{xz} / prod_l (1 - zeta^{t a_l} e^{a_l z}),   zeta = zeta_k, j = 2*pi*i*t/k.

Values are m!-scaled Taylor coefficients (the sum E_m z^m/m! convention), and
E_0 is whatever the generating function produces at z = 0 -- it is not forced
to 1.  Twists are restricted to roots of unity so that every coefficient lives
in Q(zeta_k) and all identities can be checked exactly.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    FORMAL_X,
    CyclotomicNumber,
    PolynomialX,
    RationalLike,
    TruncatedSeries,
    as_fraction,
    cyc_root,
)


class SingularTwistError(ValueError):
    """Raised when a twist makes a generating-function factor singular at z=0."""


@dataclass(frozen=True)
class TwistSpec:
    """The twist j = 2*pi*i*t/k; the alternating case is k=2, t=1."""

    k: int
    t: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        object.__setattr__(self, "t", self.t % self.k)

    @staticmethod
    def alternating() -> TwistSpec:
        return TwistSpec(2, 1)

    def root(self, power: int = 1) -> CyclotomicNumber:
        """zeta_k^(t*power) as an exact cyclotomic number."""
        return cyc_root(self.k, self.t * power)

    def admits(self, a: int) -> bool:
        """True when e^{a j} != 1, i.e. k does not divide t*a."""
        return (self.t * a) % self.k != 0


@dataclass(frozen=True)
class WeightVector:
    """The positive integer weights A_r = (a_1, ..., a_r)."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) < 1:
            raise ValueError("weight vector must have at least one entry")
        if any(a < 1 for a in self.entries):
            raise ValueError("weights must be positive integers")

    @staticmethod
    def of(*entries: int) -> WeightVector:
        return WeightVector(tuple(entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def admissible_for(self, twist: TwistSpec) -> bool:
        return all(twist.admits(a) for a in self.entries)

    def require_admissible(self, twist: TwistSpec) -> None:
        for a in self.entries:
            if not twist.admits(a):
                raise SingularTwistError(
                    f"singular twist: k={twist.k} divides t*a = {twist.t}*{a}"
                )


def _as_weights(A) -> WeightVector:
    if isinstance(A, WeightVector):
        return A
    return WeightVector(tuple(int(a) for a in A))


# ---------------------------------------------------------------------------
# Bernoulli numbers and polynomials
# ---------------------------------------------------------------------------

_bernoulli_cache: list[Fraction] = []
_bernoulli_lock = threading.Lock()


def bernoulli_numbers(n_max: int) -> list[Fraction]:
    """B_0..B_n_max, computed by inverting the series (e^z - 1)/z.

    The cache is append-only and guarded by a lock, so concurrent callers see
    deterministic values.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    with _bernoulli_lock:
        if len(_bernoulli_cache) <= n_max:
            trunc = max(n_max, 2 * len(_bernoulli_cache), 8)
            base = TruncatedSeries.from_coeffs(
                [Fraction(1, math.factorial(n + 1)) for n in range(trunc + 1)], trunc
            )
            inv = base.inverse()
            _bernoulli_cache.clear()
            _bernoulli_cache.extend(
                inv.taylor_value(n).coeff(0).as_rational() for n in range(trunc + 1)
            )
        return _bernoulli_cache[: n_max + 1]


def bernoulli_poly(n: int) -> PolynomialX:
    """The degree-n Bernoulli polynomial, B_n(y) = sum_k C(n,k) B_{n-k} y^k."""
    numbers = bernoulli_numbers(n)
    coeffs = [math.comb(n, k) * numbers[n - k] for k in range(n + 1)]
    return PolynomialX.from_coeffs(coeffs, 1)


def periodic_bernoulli(n: int, x: RationalLike) -> Fraction:
    """B_n({x}) with {x} in [0,1) the fractional part (exact, rational x)."""
    xq = as_fraction(x)
    frac = xq - math.floor(xq)
    return bernoulli_poly(n).eval_exact(frac).as_rational()


# ---------------------------------------------------------------------------
# classical Euler polynomials
# ---------------------------------------------------------------------------

def classical_euler_poly(n: int) -> PolynomialX:
    """E_n(x) from the generating function 2 e^{xz}/(e^z + 1)."""
    denom = TruncatedSeries.from_coeffs(
        [Fraction(1)]
        + [Fraction(1, 2 * math.factorial(m)) for m in range(1, n + 1)],
        n,
    )
    gf = denom.inverse() * TruncatedSeries.exp_linear(FORMAL_X, n)
    return gf.taylor_value(n)


def classical_euler_numbers(n_max: int) -> list[Fraction]:
    """E_0..E_n_max with E_n = E_n(0) (coefficients of 2/(e^z + 1))."""
    denom = TruncatedSeries.from_coeffs(
        [Fraction(1)]
        + [Fraction(1, 2 * math.factorial(m)) for m in range(1, n_max + 1)],
        n_max,
    )
    inv = denom.inverse()
    return [inv.taylor_value(n).coeff(0).as_rational() for n in range(n_max + 1)]


# ---------------------------------------------------------------------------
# generalized Euler numbers and polynomials
# ---------------------------------------------------------------------------

def _gen_euler_series(m_max: int, twist: TwistSpec, A: WeightVector) -> TruncatedSeries:
    """2^r / prod_l (1 - zeta^{t a_l} e^{a_l z}) through order m_max."""
    A.require_admissible(twist)
    prod = TruncatedSeries.one(m_max, twist.k)
    for a in A:
        root = twist.root(a)
        coeffs: list = [CyclotomicNumber.one(twist.k) - root]
        for n in range(1, m_max + 1):
            coeffs.append(-root * Fraction(a**n, math.factorial(n)))
        prod = prod * TruncatedSeries.from_coeffs(coeffs, m_max, twist.k)
    return prod.inverse().scale(Fraction(2 ** len(A)))


def gen_euler_numbers(m_max: int, twist: TwistSpec, A) -> list[CyclotomicNumber]:
    """E_0(j,A_r)..E_m_max(j,A_r) by series inversion of the twisted product."""
    A = _as_weights(A)
    series = _gen_euler_series(m_max, twist, A)
    return [series.taylor_value(m).coeff(0) for m in range(m_max + 1)]


def gen_euler_poly(m: int, twist: TwistSpec, A) -> PolynomialX:
    """E_m(x, j; A_r): the m!-scaled z^m coefficient once the e^{xz} factor is on."""
    A = _as_weights(A)
    series = _gen_euler_series(m, twist, A) * TruncatedSeries.exp_linear(
        FORMAL_X, m, twist.k
    )
    return series.taylor_value(m)


def _binomial_convolve(
    left: Sequence[CyclotomicNumber], right: Sequence[CyclotomicNumber]
) -> list[CyclotomicNumber]:
    out = []
    for m in range(len(left)):
        acc = CyclotomicNumber.zero(left[0].order)
        for i in range(m + 1):
            acc = acc + left[i] * right[m - i] * Fraction(math.comb(m, i))
        out.append(acc)
    return out


def gen_euler_numbers_by_convolution(
    m_max: int, twist: TwistSpec, A
) -> list[CyclotomicNumber]:
    """Same values as :func:`gen_euler_numbers`, via the multinomial convolution
    over the single-entry weight vectors.  Exists as an independent cross-check
    path: E_m(j, A_r) = sum multinomial(m; l_1..l_r) prod_i E_{l_i}(j, a_i).
    """
    A = _as_weights(A)
    A.require_admissible(twist)
    acc = gen_euler_numbers(m_max, twist, WeightVector.of(A.entries[0]))
    for a in A.entries[1:]:
        acc = _binomial_convolve(acc, gen_euler_numbers(m_max, twist, WeightVector.of(a)))
    return acc


def gen_euler_poly_partition_check(
    m: int,
    twist: TwistSpec,
    A,
    parts: Sequence[Sequence[int]],
    x_parts: Sequence[RationalLike],
) -> bool:
    """Check the partition identity for E_m(x, j; A_r) at rational points.

    ``parts`` must partition the entries of A (as a multiset) and ``x_parts``
    must have the same length; x = sum of x_parts.  The identity equates
    E_m(x, j; A_r) with the binomially weighted convolution of the
    E_{l_i}(x_i, j; A'_i).
    """
    A = _as_weights(A)
    part_vectors = [_as_weights(p) for p in parts]
    if len(part_vectors) != len(x_parts):
        raise ValueError("parts and x_parts must have the same length")
    merged = sorted(a for p in part_vectors for a in p.entries)
    if merged != sorted(A.entries):
        raise ValueError("parts do not form a partition of the weight vector")

    x_total = sum(as_fraction(xp) for xp in x_parts)
    lhs = gen_euler_poly(m, twist, A).eval_exact(x_total)

    values = [
        [gen_euler_poly(l, twist, p).eval_exact(as_fraction(xp)) for l in range(m + 1)]
        for p, xp in zip(part_vectors, x_parts)
    ]
    acc = values[0]
    for vals in values[1:]:
        acc = _binomial_convolve(acc, vals)
    return acc[m] == lhs
