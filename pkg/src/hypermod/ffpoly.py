"""Exact polynomial and rational-function algebra over F_p and F_{p^ell}.

Prime-field polynomials are plain lists of residues in [0, p-1], least degree
first, normalized so the last entry is nonzero ([] is the zero polynomial).
Extension fields carry their own element representation: a tuple of length
ell (a plain int residue when ell == 1), managed by :class:`FqField`.

Everything is exact.  Factorization uses squarefree decomposition followed by
distinct-degree and equal-degree splitting; the only randomness (equal-degree
splitting) comes from a per-call generator with a fixed default seed, so
results are reproducible.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import reduce

from .errors import PreconditionError

# ---------------------------------------------------------------------------
# prime-field polynomials: list[int] coefficients, ascending degree
# ---------------------------------------------------------------------------


def ptrim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def pdeg(a: list[int]) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(a) - 1


def padd(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return ptrim(out)


def psub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return ptrim(out)


def pscale(a, c, p):
    c %= p
    if c == 0:
        return []
    return [x * c % p for x in a]


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return ptrim([v % p for v in out])


def pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = pow(lb, -1, p)
    q = [0] * max(0, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            c = c * inv % p
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return ptrim(q), ptrim([v % p for v in a])


def pmod(a, b, p):
    return pdivmod(a, b, p)[1]


def pmonic(a, p):
    if not a:
        return []
    return pscale(a, pow(a[-1], -1, p), p)


def pgcd(a, b, p):
    """Monic gcd."""
    while b:
        a, b = b, pmod(a, b, p)
    return pmonic(a, p)


def ppow(a, e, p):
    out = [1]
    base = list(a)
    while e:
        if e & 1:
            out = pmul(out, base, p)
        e >>= 1
        if e:
            base = pmul(base, base, p)
    return out


def ppow_mod(a, e, m, p):
    out = [1]
    base = pmod(a, m, p)
    while e:
        if e & 1:
            out = pmod(pmul(out, base, p), m, p)
        e >>= 1
        if e:
            base = pmod(pmul(base, base, p), m, p)
    return out


def peval(a, x, p):
    y = 0
    for c in reversed(a):
        y = (y * x + c) % p
    return y


def pderiv(a, p):
    return ptrim([i * c % p for i, c in enumerate(a)][1:])


def pval_at(a, xi, p):
    """Multiplicity of the root xi (valuation of a at x - xi)."""
    if not a:
        raise PreconditionError("zero polynomial has no root multiplicity")
    v = 0
    lin = [(-xi) % p, 1]
    while True:
        q, r = pdivmod(a, lin, p)
        if r:
            return v
        v += 1
        a = q


def pshift_series(a, n):
    """Multiply by x^n."""
    if not a:
        return []
    return [0] * n + list(a)


def series_mul(a, b, p, n):
    """Product truncated to n coefficients."""
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            top = min(n - i, len(b))
            for j in range(top):
                out[i + j] += x * b[j]
    return [v % p for v in out]


def series_inv(a, p, n):
    """Inverse power series mod x^n; constant term must be a unit."""
    if not a or a[0] % p == 0:
        raise PreconditionError("series has no inverse: constant term is zero")
    inv0 = pow(a[0], -1, p)
    out = [inv0] + [0] * (n - 1)
    for k in range(1, n):
        s = 0
        for i in range(1, min(k, len(a) - 1) + 1):
            s += a[i] * out[k - i]
        out[k] = (-inv0 * s) % p
    return out


def series_sqrt(f, p, n):
    """Square root g of f mod x^n with g(0) = 1; needs f(0) = 1 and p odd."""
    if p == 2:
        raise PreconditionError("square root of a series needs p > 2")
    if not f or f[0] % p != 1:
        raise PreconditionError("series square root needs constant term 1")
    g = [1] + [0] * (n - 1)
    inv2 = pow(2, -1, p)
    for k in range(1, n):
        s = 0
        for i in range(1, k):
            s += g[i] * g[k - i]
        fk = f[k] if k < len(f) else 0
        g[k] = (fk - s) * inv2 % p
    return g


# ---------------------------------------------------------------------------
# extension fields
# ---------------------------------------------------------------------------


def _first_irreducible(p: int, ell: int) -> list[int]:
    # smallest monic irreducible of degree ell, ordering the lower
    # coefficient vector (c_{ell-1}, ..., c_0) lexicographically
    for k in range(p**ell):
        digits = []
        kk = k
        for _ in range(ell):
            digits.append(kk % p)
            kk //= p
        cand = digits + [1]  # c_0 .. c_{ell-1}, 1
        if _is_irreducible(cand, p):
            return cand
    raise RuntimeError("unreachable: irreducible polynomials of every degree exist")


def _is_irreducible(f, p):
    n = pdeg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [0, 1]
    # x^(p^n) = x mod f, and x^(p^(n/r)) != x for prime r | n
    acc = x
    for _ in range(n):
        acc = ppow_mod(acc, p, f, p)
    if acc != pmod(x, f, p):
        return False
    for r in _prime_divisors(n):
        acc = x
        for _ in range(n // r):
            acc = ppow_mod(acc, p, f, p)
        if pdeg(pgcd(psub(acc, x, p), f, p)) > 0:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FqField:
    """The field F_{p^ell} with a deterministic modulus.

    Elements are raw representations: a plain residue int when ell == 1, a
    tuple of ell residues (coefficients of the residue polynomial) otherwise.
    """

    def __init__(self, p: int, ell: int = 1, modulus: list[int] | None = None):
        self.p = p
        self.ell = ell
        self.q = p**ell
        if ell == 1:
            self.modulus = modulus or [0, 1]
        else:
            self.modulus = modulus or _first_irreducible(p, ell)
            if pdeg(self.modulus) != ell:
                raise PreconditionError("modulus degree must equal ell")
        self.zero = 0 if ell == 1 else (0,) * ell
        self.one = 1 if ell == 1 else (1,) + (0,) * (ell - 1)

    def __repr__(self):
        return f"FqField({self.p}^{self.ell})"

    def __eq__(self, other):
        return (isinstance(other, FqField)
                and (self.p, self.ell, tuple(self.modulus))
                == (other.p, other.ell, tuple(other.modulus)))

    def __hash__(self):
        return hash((self.p, self.ell, tuple(self.modulus)))

    # -- raw element ops ----------------------------------------------------

    def from_int(self, n: int):
        if self.ell == 1:
            return n % self.p
        return (n % self.p,) + (0,) * (self.ell - 1)

    def from_coeffs(self, coeffs):
        if self.ell == 1:
            c = list(coeffs)
            return c[0] % self.p if c else 0
        c = [x % self.p for x in coeffs[: self.ell]]
        c += [0] * (self.ell - len(c))
        return tuple(c)

    def gen(self):
        """Image of x in F_p[x]/modulus (equals 0 when ell == 1)."""
        return self.from_coeffs([0, 1]) if self.ell > 1 else 0

    def add(self, a, b):
        if self.ell == 1:
            return (a + b) % self.p
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        if self.ell == 1:
            return (a - b) % self.p
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        if self.ell == 1:
            return -a % self.p
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        if self.ell == 1:
            return a * b % self.p
        prod = pmul(list(a), list(b), self.p)
        rem = pmod(prod, self.modulus, self.p)
        return tuple(rem + [0] * (self.ell - len(rem)))

    def inv(self, a):
        if self.ell == 1:
            return pow(a, -1, self.p)
        # extended Euclid in F_p[x]
        r0, r1 = list(self.modulus), ptrim(list(a))
        s0, s1 = [], [1]
        if not r1:
            raise ZeroDivisionError("inverse of zero field element")
        while r1:
            q, r = pdivmod(r0, r1, self.p)
            r0, r1 = r1, r
            s0, s1 = s1, psub(s0, pmul(q, s1, self.p), self.p)
        c = pow(r0[-1], -1, self.p)
        s0 = pscale(s0, c, self.p)
        return tuple(s0 + [0] * (self.ell - len(s0)))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = self.one
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return out

    def frobenius(self, a):
        return self.pow(a, self.p)

    def is_zero(self, a):
        return a == self.zero

    def element_order(self, a):
        """Multiplicative order of a nonzero element."""
        if self.is_zero(a):
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.q - 1
        order = n
        for r in _prime_divisors(n):
            while order % r == 0 and self.pow(a, order // r) == self.one:
                order //= r
        return order

    def elements_iter(self):
        for n in range(self.q):
            digits = []
            for _ in range(self.ell):
                digits.append(n % self.p)
                n //= self.p
            yield digits[0] if self.ell == 1 else tuple(digits)

    def random_element(self, rng):
        if self.ell == 1:
            return rng.randrange(self.p)
        return tuple(rng.randrange(self.p) for _ in range(self.ell))


@dataclass(frozen=True)
class FqElement:
    """A field element bundled with its field, for the public API."""

    field: FqField
    rep: object

    def __add__(self, other):
        return FqElement(self.field, self.field.add(self.rep, other.rep))

    def __sub__(self, other):
        return FqElement(self.field, self.field.sub(self.rep, other.rep))

    def __mul__(self, other):
        return FqElement(self.field, self.field.mul(self.rep, other.rep))

    def __truediv__(self, other):
        return FqElement(self.field, self.field.mul(self.rep, self.field.inv(other.rep)))

    def order(self):
        return self.field.element_order(self.rep)


# ---------------------------------------------------------------------------
# polynomials over F_q
# ---------------------------------------------------------------------------


class FqPoly:
    """Dense polynomial over an FqField; coefficients are raw element reps."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FqField, coeffs):
        self.field = field
        c = list(coeffs)
        while c and field.is_zero(c[-1]):
            c.pop()
        self.coeffs = c

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int(n) for n in ints])

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def one(cls, field):
        return cls(field, [field.one])

    @classmethod
    def x(cls, field):
        return cls(field, [field.zero, field.one])

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, FqPoly) and self.field == other.field \
            and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, tuple(self.coeffs)))

    def __repr__(self):
        return f"FqPoly({self.coeffs!r})"

    def __add__(self, other):
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = [F.zero] * n
        for i, c in enumerate(self.coeffs):
            out[i] = c
        for i, c in enumerate(other.coeffs):
            out[i] = F.add(out[i], c)
        return FqPoly(F, out)

    def __neg__(self):
        return FqPoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        if self.is_zero() or other.is_zero():
            return FqPoly.zero(F)
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if F.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return FqPoly(F, out)

    def scale(self, c):
        F = self.field
        return FqPoly(F, [F.mul(c, a) for a in self.coeffs])

    def divmod(self, other):
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree()
        inv = F.inv(other.leading())
        q = [F.zero] * max(0, len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if F.is_zero(c):
                continue
            c = F.mul(c, inv)
            q[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, other.coeffs[j]))
        return FqPoly(F, q), FqPoly(F, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.leading()))

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def pow_mod(self, e, m):
        F = self.field
        out = FqPoly.one(F)
        base = self % m
        while e:
            if e & 1:
                out = (out * base) % m
            e >>= 1
            if e:
                base = (base * base) % m
        return out

    def pow(self, e):
        out = FqPoly.one(self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def derivative(self):
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(F.mul(F.from_int(i), self.coeffs[i]))
        return FqPoly(F, out)

    def evaluate(self, x):
        F = self.field
        y = F.zero
        for c in reversed(self.coeffs):
            y = F.add(F.mul(y, x), c)
        return y

    def pth_root(self):
        """p-th root of a polynomial in F_q[x^p]."""
        F = self.field
        p = F.p
        out = []
        for i, c in enumerate(self.coeffs):
            if i % p == 0:
                # c^(p^(ell-1)) is the p-th root of c in F_q
                out.append(F.pow(c, p ** (F.ell - 1)))
            elif not F.is_zero(c):
                raise PreconditionError("polynomial is not a p-th power")
        return FqPoly(F, out)


def fq_from_fp(field: FqField, coeffs: list[int]) -> FqPoly:
    """Lift an F_p coefficient list into F_q[x]."""
    return FqPoly.from_ints(field, coeffs)


# ---------------------------------------------------------------------------
# squarefree decomposition and factorization
# ---------------------------------------------------------------------------


def squarefree_decomposition(f: FqPoly) -> list[tuple[FqPoly, int]]:
    """Write f (monic-normalized) as prod g_i^i with the g_i squarefree and
    pairwise coprime; returns [(g_i, i)] for the nonconstant g_i.

    Characteristic-p aware: when the derivative vanishes, f is a p-th power
    and the decomposition recurses on its p-th root.
    """
    if f.is_zero():
        raise PreconditionError("zero polynomial has no squarefree decomposition")
    F = f.field
    p = F.p
    f = f.monic()
    out: dict[int, FqPoly] = {}

    def accumulate(g: FqPoly, mult: int):
        if g.degree() > 0:
            out[mult] = out[mult] * g if mult in out else g

    def decompose(f: FqPoly, scale: int):
        if f.degree() <= 0:
            return
        df = f.derivative()
        if df.is_zero():
            decompose(f.pth_root(), scale * p)
            return
        # Yun's algorithm on the separable part
        a = f.gcd(df)
        b = f // a  # product of distinct factors with mult not divisible by p
        i = 1
        while b.degree() > 0:
            c = b.gcd(a)
            piece = b // c
            accumulate(piece, scale * i)
            b = c
            a = a // c
            i += 1
        if a.degree() > 0:
            decompose(a, scale)  # remaining part: multiplicities divisible by p
        # note: "a" here collects factors whose multiplicity is a multiple of p
        # only after the loop has stripped all others, so recursion terminates

    decompose(f, 1)
    return [(g, m) for m, g in sorted(out.items())]


def distinct_degree_factor(f: FqPoly) -> list[tuple[FqPoly, int]]:
    """Split a monic squarefree f into products of irreducibles of equal degree.

    Returns [(product, degree)] pairs.
    """
    F = f.field
    q = F.q
    out = []
    x = FqPoly.x(F)
    h = x
    v = f
    d = 0
    while v.degree() >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(q, v)
        g = v.gcd(h - x)
        if g.degree() > 0:
            out.append((g, d))
            v = v // g
            h = h % v
    if v.degree() > 0:
        out.append((v, v.degree()))
    return out


def _equal_degree_split(f: FqPoly, d: int, rng) -> list[FqPoly]:
    """Cantor-Zassenhaus: split monic squarefree f, all of whose irreducible
    factors have degree d, into those factors."""
    F = f.field
    q = F.q
    n = f.degree()
    if n == d:
        return [f]
    while True:
        a = FqPoly(F, [F.random_element(rng) for _ in range(n)])
        if a.degree() < 1:
            continue
        g = f.gcd(a)
        if 0 < g.degree() < n:
            return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)
        if F.p == 2:
            # trace map sum a^(2^i) over the degree of F_{q^d}
            t = a
            acc = a
            m = F.ell * d
            for _ in range(m - 1):
                acc = acc.pow_mod(2, f)
                t = (t + acc) % f
            g = f.gcd(t)
        else:
            b = a.pow_mod((q**d - 1) // 2, f)
            g = f.gcd(b - FqPoly.one(F))
        if 0 < g.degree() < n:
            return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)


def factor(f: FqPoly, seed: int = 0) -> tuple[object, list[tuple[FqPoly, int]]]:
    """Full factorization: (leading coefficient, [(monic irreducible, mult)]).

    Factors are sorted by (degree, coefficient tuple) so output is stable.
    """
    if f.is_zero():
        raise PreconditionError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    lead = f.leading()
    pieces: list[tuple[FqPoly, int]] = []
    for g, mult in squarefree_decomposition(f):
        for prod, d in distinct_degree_factor(g):
            for irr in _equal_degree_split(prod, d, rng):
                pieces.append((irr, mult))
    pieces.sort(key=lambda fm: (fm[0].degree(), [tuple([c]) if isinstance(c, int) else c
                                                 for c in fm[0].coeffs]))
    return lead, pieces


def refine_coprime(profiles: list[list[tuple[FqPoly, int]]]) -> list[tuple[FqPoly, tuple[int, ...]]]:
    """Given per-input squarefree profiles [(factor, mult)], produce pairwise
    coprime squarefree polynomials with one multiplicity per input.

    Every returned polynomial has a uniform multiplicity vector across its
    irreducible factors, so gcd computations can replace full factorization.
    """
    k = len(profiles)
    basis: list[tuple[FqPoly, list[int]]] = []
    for idx, profile in enumerate(profiles):
        for g, mult in profile:
            work = [(g, mult)]
            while work:
                g, mult = work.pop()
                if g.degree() <= 0:
                    continue
                placed = False
                for i, (b, vec) in enumerate(basis):
                    h = b.gcd(g)
                    if h.degree() == 0:
                        continue
                    if h.degree() == b.degree():
                        if h.degree() == g.degree():
                            vec[idx] += mult
                            placed = True
                            break
                        vec[idx] += mult
                        work.append((g // h, mult))
                        placed = True
                        break
                    # split the basis element
                    rest = b // h
                    new_vec = list(vec)
                    basis[i] = (h, vec)
                    basis.append((rest, new_vec))
                    work.append((g, mult))
                    placed = True
                    break
                if not placed:
                    basis.append((g, [0] * k))
                    basis[-1][1][idx] += mult
    return [(b, tuple(vec)) for b, vec in basis]


@dataclass(frozen=True)
class PerfectPowerData:
    """gcd of factor multiplicities and the leading-coefficient cofactor."""

    g_e: int | None  # None for constants (any exponent works)
    d_c: int  # (q-1) / ord(leading coefficient)

    def largest_exponent(self, q: int) -> int | None:
        """Largest r with A = B^r over F_q(x); None (unbounded) for constants
        whose class allows every exponent."""
        if self.g_e is None:
            return None
        best = 1
        for r in range(1, self.g_e + 1):
            if self.g_e % r == 0 and self.d_c % math.gcd(r, q - 1) == 0:
                best = r
        return best


def perfect_power_data(f: FqPoly) -> PerfectPowerData:
    if f.is_zero():
        raise PreconditionError("zero polynomial")
    F = f.field
    d_c = (F.q - 1) // F.element_order(f.leading())
    if f.degree() == 0:
        return PerfectPowerData(None, d_c)
    g_e = reduce(math.gcd, (m for _, m in squarefree_decomposition(f)))
    return PerfectPowerData(g_e, d_c)


def kummer_order(f: FqPoly, q: int | None = None) -> int:
    """Order of the class of f in F_q(x)^x / (F_q(x)^x)^(q-1).

    This is the degree of the extension generated by a (q-1)-th root of f,
    hence the order of its Kummer Galois group.
    """
    if f.is_zero():
        raise PreconditionError("zero polynomial")
    F = f.field
    if q is None:
        q = F.q
    data = perfect_power_data(f)
    g_e = 0 if data.g_e is None else data.g_e
    return (q - 1) // math.gcd(q - 1, math.gcd(g_e, data.d_c))


# ---------------------------------------------------------------------------
# rational functions and matrices over F_q(x)
# ---------------------------------------------------------------------------


class RatFunc:
    """Reduced fraction of FqPoly with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: FqPoly, den: FqPoly | None = None, reduce_frac: bool = True):
        field = num.field
        if den is None:
            den = FqPoly.one(field)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce_frac and not num.is_zero():
            g = num.gcd(den)
            if g.degree() > 0:
                num, den = num // g, den // g
        if num.is_zero():
            den = FqPoly.one(field)
        lc = den.leading()
        if lc != field.one:
            inv = field.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @classmethod
    def from_ints(cls, field, num_ints, den_ints=(1,)):
        return cls(FqPoly.from_ints(field, num_ints), FqPoly.from_ints(field, den_ints))

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num.coeffs}/{self.den.coeffs})"

    def __add__(self, other):
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce_frac=False)

    def __mul__(self, other):
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)


def mat_rank(m: list[list[RatFunc]]) -> int:
    """Exact rank over F_q(x), by elimination after clearing denominators."""
    if not m:
        return 0
    rows = [row[:] for row in m]
    ncols = len(rows[0])
    rank = 0
    col = 0
    while col < ncols and rank < len(rows):
        pivot = next((r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col].is_zero():
                continue
            factor_ = rows[r][col] / pv
            rows[r] = [rows[r][c] - factor_ * rows[rank][c] for c in range(ncols)]
        rank += 1
        col += 1
    return rank


def mat_nullspace(m: list[list[RatFunc]]) -> list[list[RatFunc]]:
    """Basis of the right nullspace over F_q(x)."""
    if not m:
        return []
    field = m[0][0].num.field
    one = RatFunc(FqPoly.one(field))
    zero = RatFunc(FqPoly.zero(field))
    rows = [row[:] for row in m]
    ncols = len(rows[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [c / pv for c in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [rows[r][c] - f * rows[rank][c] for c in range(ncols)]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis
