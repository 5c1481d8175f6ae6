"""Exact rational arithmetic helpers: p-adic valuations, digits, the Dwork map.

Rationals are stdlib ``fractions.Fraction`` values throughout; they are always
stored in lowest terms with positive denominator, which is exactly the
invariant this layer needs.  Everything here is pure and exact; no floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError

INFINITY = math.inf


def vp(x: Fraction | int, p: int) -> int | float:
    """p-adic valuation of a rational; ``math.inf`` for x = 0."""
    x = Fraction(x)
    if x == 0:
        return INFINITY
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def frac0(x: Fraction | int) -> Fraction:
    """Fractional part in [0, 1)."""
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def frac1(x: Fraction | int) -> Fraction:
    """Fractional part in (0, 1]: integers are assigned 1, not 0."""
    f = frac0(x)
    return Fraction(1) if f == 0 else f


def christol_leq(a: Fraction | int, b: Fraction | int) -> bool:
    """Christol's total order: compare by frac1, ties broken by reversed value."""
    fa, fb = frac1(a), frac1(b)
    if fa != fb:
        return fa < fb
    return a >= b


def euclid_rq(gamma: Fraction | int, q: int, p: int | None = None) -> tuple[int, Fraction]:
    """Write gamma = q*Q - R with 0 <= R < q and Q p-integral; return (R, Q).

    q must be a power of the prime p (q itself when p is omitted and q is
    prime).  Requires vp(gamma, p) >= 0.
    """
    gamma = Fraction(gamma)
    if p is None:
        p = q
    if vp(gamma, p) < 0:
        raise PreconditionError(f"{gamma} has negative {p}-adic valuation")
    num, den = gamma.numerator, gamma.denominator
    r = (-num * pow(den, -1, q)) % q
    return r, (gamma + r) / q


def dwork(gamma: Fraction | int, p: int) -> Fraction:
    """Dwork map: the unique Q with p*Q - gamma in {0, ..., p-1}."""
    return euclid_rq(gamma, p)[1]


def pochhammer_divisible(gamma: Fraction, p: int, r: int) -> bool:
    """Whether the rising factorial (gamma)_r is divisible by p.

    Equivalent to the residue (-gamma mod p) lying in {0, ..., r-1}; costs one
    modular inverse instead of an r-term product.
    """
    if r == 0:
        return False
    res = (-gamma.numerator * pow(gamma.denominator, -1, p)) % p
    return res < r


def dwork_r(gamma: tuple[Fraction, ...], p: int, r: int) -> tuple[Fraction, ...]:
    """Shifted Dwork map on a tuple: add 1 wherever (gamma_i)_r vanishes mod p."""
    out = []
    for g in gamma:
        g = Fraction(g)
        img = dwork(g, p)
        if pochhammer_divisible(g, p, r):
            img += 1
        out.append(img)
    return tuple(out)


def digit(gamma: Fraction | int, p: int, k: int) -> int:
    """k-th digit in [0, p-1] of the p-adic expansion of -gamma."""
    g = Fraction(gamma)
    for _ in range(k):
        g = dwork(g, p)
    return euclid_rq(g, p)[0]


@dataclass(frozen=True)
class PAdicDigitSeq:
    """Eventually periodic digit stream of -gamma in base p."""

    gamma: Fraction
    p: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def digit(self, k: int) -> int:
        if k < len(self.preperiod):
            return self.preperiod[k]
        k -= len(self.preperiod)
        return self.period[k % len(self.period)]

    def reconstruct(self) -> Fraction:
        """Exact value of -(digit stream), which must equal gamma."""
        p = self.p
        pre = sum(d * p**k for k, d in enumerate(self.preperiod))
        per = sum(d * p**k for k, d in enumerate(self.period))
        n = len(self.preperiod)
        m = len(self.period)
        return -(pre + Fraction(per * p**n, 1 - p**m))


def digit_seq(gamma: Fraction | int, p: int) -> PAdicDigitSeq:
    """Materialize the digits of -gamma as preperiod + period.

    The Dwork orbit of gamma is finite, so the stream is eventually periodic;
    digit k is the 0-digit of the k-th Dwork iterate.
    """
    gamma = Fraction(gamma)
    seen: dict[Fraction, int] = {}
    digits: list[int] = []
    g = gamma
    while g not in seen:
        seen[g] = len(digits)
        r, g_next = euclid_rq(g, p)
        digits.append(r)
        g = g_next
    start = seen[g]
    return PAdicDigitSeq(gamma, p, tuple(digits[:start]), tuple(digits[start:]))


def ell_p_single(gamma: Fraction | int, p: int) -> int:
    """Period of gamma in (0, 1] under the Dwork map."""
    gamma = Fraction(gamma)
    if not 0 < gamma <= 1:
        raise PreconditionError(f"{gamma} not in (0, 1]")
    if gamma.denominator % p == 0:
        raise PreconditionError(f"denominator of {gamma} divisible by {p}")
    g = dwork(gamma, p)
    ell = 1
    while g != gamma:
        g = dwork(g, p)
        ell += 1
    return ell


def ell_p_params(alpha, beta, p: int) -> int:
    """Smallest ell > 0 with D_p^ell fixing both parameter multisets mod Z.

    Mod Z the Dwork map is multiplication by p^{-1}, so it suffices to iterate
    on the frac1-normalized multisets.
    """
    a = sorted(frac1(x) for x in alpha)
    b = sorted(frac1(x) for x in beta)

    def step(vals):
        return sorted(frac1(dwork(v, p)) for v in vals)

    cur_a, cur_b = step(a), step(b)
    ell = 1
    while cur_a != a or cur_b != b:
        cur_a, cur_b = step(cur_a), step(cur_b)
        ell += 1
    return ell


def gamma_poly(gamma: Fraction | int, d: int, t: int) -> tuple[int, int]:
    """Digit polynomial (slope, constant): for p = d*s + t prime, the value
    slope*s + constant is the representative of (-gamma mod p) in [0, p).

    The Bezout coefficient u is picked canonically in [0, d).
    """
    if math.gcd(t, d) != 1:
        raise PreconditionError(f"gcd({t}, {d}) != 1")
    gamma = Fraction(gamma)
    if not 0 < gamma < 1:
        raise PreconditionError(f"{gamma} not in (0, 1)")
    if d % gamma.denominator != 0:
        raise PreconditionError(f"denominator of {gamma} does not divide {d}")
    a = gamma.numerator * (d // gamma.denominator)
    u = pow(t, -1, d)
    v = (1 - u * t) // d
    w = (a * u) // d
    slope = a * u - w * d
    const = -a * v - w * t
    return slope, const


@dataclass(frozen=True)
class PrimeContext:
    """A prime together with its residue data modulo d."""

    p: int
    d: int
    t: int
    delta: int

    @classmethod
    def create(cls, p: int, d: int) -> "PrimeContext":
        if math.gcd(p, d) != 1:
            raise PreconditionError(f"{p} not coprime to {d}")
        t = p % d
        delta = pow(p, -1, d) if d > 1 else 1
        return cls(p, d, t, delta)
