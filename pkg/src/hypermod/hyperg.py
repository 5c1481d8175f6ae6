"""Hypergeometric parameters, exact coefficients, and mod-p reduction theory.

A parameter set is the pair (alpha_1..alpha_n; beta_1..beta_{n-1}); the
implicit bottom entry beta_n = 1 (absorbing the k! of the coefficient
formula) is appended internally everywhere it matters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key

from .errors import NoViolationError, NotApplicableError, PreconditionError
from .rationals import christol_leq, euclid_rq, frac0, frac1, vp

ONE = Fraction(1)


def _is_nonpositive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


@dataclass(frozen=True)
class HParams:
    """Exact parameters of an nFn-1 series with their derived invariants."""

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]  # n-1 entries; beta_n = 1 is implicit
    n: int = field(init=False)
    d: int = field(init=False)

    def __post_init__(self):
        alpha = tuple(Fraction(a) for a in self.alpha)
        beta = tuple(Fraction(b) for b in self.beta)
        if len(beta) != len(alpha) - 1:
            raise PreconditionError(
                f"need n-1 bottom parameters for n = {len(alpha)}, got {len(beta)}")
        for x in alpha + beta:
            if _is_nonpositive_integer(x):
                raise PreconditionError(f"parameter {x} is a nonpositive integer")
        d = 1
        for x in alpha + beta:
            d = math.lcm(d, x.denominator)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "n", len(alpha))
        object.__setattr__(self, "d", d)

    @classmethod
    def create(cls, alpha, beta) -> "HParams":
        return cls(tuple(Fraction(a) for a in alpha), tuple(Fraction(b) for b in beta))

    @property
    def beta_full(self) -> tuple[Fraction, ...]:
        return self.beta + (ONE,)

    def height(self) -> Fraction:
        """max of |alpha_i|, |beta_j| and 1."""
        return max(max(abs(x) for x in self.alpha + self.beta_full), ONE)

    def reduction_bound(self) -> Fraction:
        """Primes above 2d*max(|alpha_i|, |beta_j|, 1) + 1 are 'large'."""
        return 2 * self.d * self.height() + 1

    def units_mod_d(self) -> list[int]:
        if self.d == 1:
            return [1]
        return [u for u in range(1, self.d) if math.gcd(u, self.d) == 1]

    def orbit_of(self, p: int) -> list[int]:
        """The subgroup generated by p inside the units mod d."""
        if self.d == 1:
            return [1]
        if math.gcd(p, self.d) != 1:
            raise PreconditionError(f"{p} divides d = {self.d}")
        orbit = [1]
        cur = p % self.d
        while cur != 1:
            orbit.append(cur)
            cur = cur * p % self.d
        return orbit


def h_exact(params: HParams, k: int) -> Fraction:
    """Exact coefficient: a ratio of rising factorials over k!."""
    h = ONE
    for i in range(k):
        num = ONE
        for a in params.alpha:
            num *= a + i
        den = Fraction(i + 1)
        for b in params.beta:
            den *= b + i
        h *= num / den
    return h


def h_series(params: HParams, count: int) -> list[Fraction]:
    """First `count` exact coefficients, via the ratio recurrence."""
    out = [ONE]
    h = ONE
    for i in range(count - 1):
        num = ONE
        for a in params.alpha:
            num *= a + i
        den = Fraction(i + 1)
        for b in params.beta:
            den *= b + i
        h *= num / den
        out.append(h)
    return out


def M_func(params: HParams, x: Fraction, lam: int) -> int:
    """Christol's counting function: alphas below x minus betas below x,
    in the frac1 ordering, after scaling all parameters by lam."""
    count = 0
    for a in params.alpha:
        if christol_leq(lam * a, x):
            count += 1
    for b in params.beta_full:
        if christol_leq(lam * b, x):
            count -= 1
    return count


def interlacing_ok(params: HParams, lam: int) -> bool:
    """Nonnegativity of M(., lam); checking the downward jumps suffices."""
    return all(M_func(params, lam * b, lam) >= 0 for b in params.beta_full)


def globally_bounded(params: HParams) -> bool:
    return all(interlacing_ok(params, lam) for lam in params.units_mod_d())


def algebraic(params: HParams) -> bool:
    """Strict interlacing on the unit circle for every unit lam.

    The merged frac1-ordering of the 2n scaled parameters must alternate
    alpha, beta, alpha, beta, ...; coincident points (repeated parameter
    values) break alternation and yield False.
    """
    for a in params.alpha:
        if a.denominator == 1:
            raise NotApplicableError(f"top parameter {a} is an integer")
        for b in params.beta_full:
            if (a - b).denominator == 1:
                raise NotApplicableError(f"integer difference {a} - {b}")
    order = cmp_to_key(lambda u, v: -1 if christol_leq(u[0], v[0]) else 1)
    for lam in params.units_mod_d():
        tagged = [(lam * a, 0) for a in params.alpha] + \
                 [(lam * b, 1) for b in params.beta_full]
        tagged.sort(key=order)
        if any(tag != i % 2 for i, (_, tag) in enumerate(tagged)):
            return False
    return True


def V_func(params: HParams, x: Fraction, p: int, r: int) -> int:
    """Signed count of shifted fractional parts below x at level p^r."""
    if params.d % p == 0:
        raise PreconditionError(f"{p} divides d = {params.d}")
    q = p**r
    delta_r = pow(q, -1, params.d) if params.d > 1 else 0
    count = 0
    for a in params.alpha:
        if frac1(delta_r * a) - Fraction(a, q) < x:
            count += 1
    for b in params.beta_full:
        if frac1(delta_r * b) - Fraction(b, q) < x:
            count -= 1
    return count


def level_term(params: HParams, p: int, r: int, k: int) -> int:
    """Contribution of level p^r to the valuation of the k-th coefficient.

    Counting multiples of p^r among the first k rising-factorial steps gives
    floor(k/p^r) + [residue < k mod p^r] per parameter; the floors cancel
    between top and bottom, leaving this signed residue count.  It equals
    V_func at {k/p^r}_0 once p^r exceeds d times the parameter height, but
    unlike V_func makes no largeness assumption.
    """
    q = p**r
    kr = k % q
    count = 0
    for a in params.alpha:
        if euclid_rq(a, q, p)[0] < kr:
            count += 1
    for b in params.beta_full:
        if euclid_rq(b, q, p)[0] < kr:
            count -= 1
    return count


def vp_hk(params: HParams, p: int, k: int) -> int:
    """Valuation of the k-th coefficient, summing level terms.

    Levels with p^r > d*(height + k) contribute nothing: a residue below k
    there would force some shifted parameter to vanish.
    """
    if params.d % p == 0:
        raise PreconditionError(f"{p} divides d = {params.d}")
    stop = params.d * (params.height() + k)
    v = 0
    r = 1
    while p**r <= stop:
        v += level_term(params, p, r, k)
        r += 1
    return v


def vp_hk_via_V(params: HParams, p: int, k: int) -> int:
    """Valuation of the k-th coefficient as a truncated sum of V values.

    Terms vanish once p^r exceeds both the reduction bound and 2dk, so the
    sum may stop at r_max = max(r0, ceil(log_p(2dk)) + 1).
    """
    if k == 0:
        return 0
    bound = params.reduction_bound()
    r0 = 1
    while p**r0 <= bound:
        r0 += 1
    r_max = max(r0, math.ceil(math.log(2 * params.d * k, p)) + 1)
    total = 0
    for r in range(1, r_max + 1):
        total += V_func(params, frac0(Fraction(k, p**r)), p, r)
    return total


@dataclass(frozen=True)
class ReductionVerdict:
    """Outcome of the mod-p reduction test.

    For small primes the verdict is empirical: ``certified_lower_bound`` is a
    proven lower bound on every coefficient valuation (only when interlacing
    holds on the orbit of p), while ``min_valuation`` is the smallest
    valuation actually witnessed in the scanned range.
    """

    status: str  # 'reducible' | 'divergent' | 'small_prime_empirical'
    p: int
    bound_used: Fraction
    witness: tuple[int, Fraction] | None = None  # violating (lambda, beta_j)
    interlacing_on_orbit: bool | None = None
    min_valuation: int | None = None
    min_at_k: int | None = None
    certified_lower_bound: int | None = None
    scanned_up_to: int | None = None

    @property
    def reducible(self) -> bool:
        if self.status == "reducible":
            return True
        if self.status == "divergent":
            return False
        return self.certified_lower_bound is not None and self.certified_lower_bound >= 0


def _find_violation(params: HParams, p: int):
    """Minimal m and the worst j with M(delta^m beta_j, delta^m) < 0."""
    d = params.d
    delta = pow(p, -1, d) if d > 1 else 1
    ell = len(params.orbit_of(p))
    for m in range(1, ell + 1):
        lam = pow(delta, m, d) if d > 1 else 1
        worst = None
        for j, b in enumerate(params.beta_full):
            val = M_func(params, lam * b, lam)
            if val < 0 and (worst is None or val < worst[2]):
                worst = (m, j, val)
        if worst is not None:
            return worst
    return None


def reducible_mod_p(params: HParams, p: int) -> ReductionVerdict:
    """Classify the prime: reducible, divergent (with witness), or, below
    the largeness bound, an explicitly flagged empirical verdict."""
    if params.d % p == 0:
        raise PreconditionError(f"{p} divides d = {params.d}")
    bound = params.reduction_bound()
    orbit_ok = all(interlacing_ok(params, lam) for lam in params.orbit_of(p))
    if p > bound:
        if orbit_ok:
            return ReductionVerdict("reducible", p, bound)
        m, j, _ = _find_violation(params, p)
        d = params.d
        lam = pow(pow(p, -1, d), m, d) if d > 1 else 1
        return ReductionVerdict("divergent", p, bound,
                                witness=(lam, params.beta_full[j]))
    # small prime: the low levels (p^r <= bound) of the valuation sum are
    # periodic in k with period p^(r0-1); the higher levels contribute
    # nonnegatively whenever interlacing holds on the orbit of p, so the
    # minimum of the low-level sums over one period is then a proven bound
    r0 = 1
    while p**r0 <= bound:
        r0 += 1
    period = p ** (r0 - 1)
    left_min = 0
    for k in range(period):
        left = sum(level_term(params, p, r, k) for r in range(1, r0))
        left_min = min(left_min, left)
    scan = max(2 * period, 64)
    witnessed, witness_k = 0, 0
    for k in range(scan):
        v = vp_hk(params, p, k)
        if v < witnessed:
            witnessed, witness_k = v, k
    return ReductionVerdict("small_prime_empirical", p, bound,
                            interlacing_on_orbit=orbit_ok,
                            min_valuation=witnessed, min_at_k=witness_k,
                            certified_lower_bound=left_min if orbit_ok else None,
                            scanned_up_to=scan)


def divergence_witness(params: HParams, p: int, a: int = 1,
                       return_chain: bool = False):
    """Construct k with vp_hk <= -a by the descending digit correction.

    Starts from the residue of the violating bottom parameter at the top
    level and walks levels downward, forcing each k_r into the window where
    exactly the designated V terms fire.
    """
    if params.d % p == 0:
        raise PreconditionError(f"{p} divides d = {params.d}")
    if p <= params.reduction_bound():
        raise PreconditionError(f"{p} is below the largeness bound")
    viol = _find_violation(params, p)
    if viol is None:
        raise NoViolationError(
            f"interlacing holds on the orbit of {p}; no divergence witness")
    m, j, _ = viol
    beta_j = params.beta_full[j]
    ell = len(params.orbit_of(p))
    top = m + (a - 1) * ell
    k_cur, _ = euclid_rq(beta_j, p**top, p)
    chain = {top: k_cur}
    for r in range(top - 1, 0, -1):
        if r % ell == m % ell:
            target, _ = euclid_rq(beta_j, p**r, p)
        else:
            target = 0
        d_r = (target - k_cur) % p**r
        k_cur += d_r
        chain[r] = k_cur
    k = k_cur
    got = vp_hk(params, p, k)
    if got > -a:
        raise RuntimeError(f"witness construction failed: vp = {got} > -{a}")
    return (k, chain) if return_chain else k
