import math
import random

import pytest

from hypermod.errors import PreconditionError
from hypermod.ffpoly import (
    FqField,
    FqPoly,
    RatFunc,
    factor,
    kummer_order,
    mat_nullspace,
    mat_rank,
    pdivmod,
    perfect_power_data,
    pgcd,
    pmul,
    ppow,
    refine_coprime,
    series_inv,
    series_mul,
    series_sqrt,
    squarefree_decomposition,
)


def rand_poly(field, deg, rng, monic=False):
    coeffs = [field.random_element(rng) for _ in range(deg)]
    coeffs.append(field.one if monic else field.random_element(rng))
    poly = FqPoly(field, coeffs)
    return poly if not poly.is_zero() else FqPoly.one(field)


class TestPrimeFieldOps:
    def test_gcd_example(self):
        # gcd(x^2 - 1, x - 1) over F_5 is x - 1 = x + 4
        assert pgcd([4, 0, 1], [4, 1], 5) == [4, 1]

    def test_freshman_dream(self):
        for p in [3, 5, 7]:
            assert ppow([1, 1], p, p) == [1] + [0] * (p - 1) + [1]

    def test_divrem_roundtrip(self):
        rng = random.Random(10)
        for _ in range(1000):
            p = rng.choice([2, 3, 5, 13, 97])
            a = [rng.randrange(p) for _ in range(rng.randint(0, 12))]
            b = [rng.randrange(p) for _ in range(rng.randint(1, 8))]
            while not any(b):
                b = [rng.randrange(p) for _ in range(rng.randint(1, 8))]
            while b and b[-1] == 0:
                b.pop()
            while a and a[-1] == 0:
                a.pop()
            q, r = pdivmod(a, b, p)
            assert len(r) - 1 < len(b) - 1 or not r
            recomposed = [v % p for v in pmul(q, b, p)]
            total = list(recomposed) + [0] * (len(a) - len(recomposed))
            for i, c in enumerate(r):
                total[i] = (total[i] + c) % p
            while total and total[-1] == 0:
                total.pop()
            assert total == list(a)


class TestSeries:
    def test_inverse(self):
        rng = random.Random(11)
        for _ in range(50):
            p = rng.choice([5, 101])
            f = [1] + [rng.randrange(p) for _ in range(20)]
            g = series_inv(f, p, 21)
            prod = series_mul(f, g, p, 21)
            assert prod == [1] + [0] * 20

    def test_sqrt_trivial(self):
        assert series_sqrt([1], 7, 5) == [1, 0, 0, 0, 0]
        # (1+x)^2 truncated
        assert series_sqrt([1, 2, 1], 7, 5) == [1, 1, 0, 0, 0]

    def test_sqrt_random(self):
        rng = random.Random(12)
        for _ in range(20):
            p = 101
            f = [1] + [rng.randrange(p) for _ in range(63)]
            g = series_sqrt(f, p, 64)
            assert series_mul(g, g, p, 64) == f[:64]


class TestFqField:
    def test_modulus_deterministic(self):
        f1 = FqField(5, 2)
        f2 = FqField(5, 2)
        assert f1.modulus == f2.modulus
        # x^2 + 2 is the first irreducible over F_5 in our ordering:
        # candidates x^2, x^2+1 factor, x^2+2 does not (-2 is a non-residue)
        assert f1.modulus == [2, 0, 1]

    def test_field_axioms_spot(self):
        rng = random.Random(13)
        for p, ell in [(3, 2), (5, 3), (7, 2), (2, 4)]:
            F = FqField(p, ell)
            for _ in range(40):
                a, b = F.random_element(rng), F.random_element(rng)
                c = F.random_element(rng)
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
                if not F.is_zero(a):
                    assert F.mul(a, F.inv(a)) == F.one

    def test_frobenius_order(self):
        for p, ell in [(3, 3), (5, 2), (2, 5)]:
            F = FqField(p, ell)
            g = F.gen()
            acc = g
            for k in range(1, ell + 1):
                acc = F.frobenius(acc)
                if k < ell:
                    assert acc != g
            assert acc == g

    def test_element_order(self):
        F = FqField(7)
        assert F.element_order(3) == 6  # 3 generates F_7^x
        assert F.element_order(2) == 3
        F9 = FqField(3, 2)
        orders = {F9.element_order(a) for a in F9.elements_iter() if not F9.is_zero(a)}
        assert max(orders) == 8


class TestFactor:
    def test_x2_plus_1(self):
        F5 = FqField(5)
        lead, pieces = factor(FqPoly.from_ints(F5, [1, 0, 1]))
        roots = sorted(-f.coeffs[0] % 5 for f, _ in pieces)
        assert roots == [2, 3] and all(m == 1 for _, m in pieces)
        F7 = FqField(7)
        lead, pieces = factor(FqPoly.from_ints(F7, [1, 0, 1]))
        assert len(pieces) == 1 and pieces[0][0].degree() == 2

    def test_roundtrip_random(self):
        rng = random.Random(14)
        for trial in range(60):
            p = rng.choice([2, 3, 5, 13, 97])
            ell = rng.choice([1, 1, 1, 2])
            F = FqField(p, ell)
            target = FqPoly.one(F)
            for _ in range(rng.randint(1, 4)):
                target = target * rand_poly(F, rng.randint(1, 6), rng)
            if target.degree() > 64 or target.degree() < 1:
                continue
            lead, pieces = factor(target, seed=trial)
            reconstructed = FqPoly(F, [lead])
            for f, m in pieces:
                assert f.leading() == F.one
                reconstructed = reconstructed * f.pow(m)
            assert reconstructed == target

    def test_squarefree_decomposition_char_p(self):
        # (x+1)^p * (x+2)^2 over F_p exercises the p-th-power branch
        for p in [3, 5]:
            F = FqField(p)
            f = FqPoly.from_ints(F, [1, 1]).pow(p) * FqPoly.from_ints(F, [2, 1]).pow(2)
            dec = dict((m, g) for g, m in squarefree_decomposition(f))
            assert dec[p] == FqPoly.from_ints(F, [1, 1])
            assert dec[2] == FqPoly.from_ints(F, [2, 1])


class TestPerfectPower:
    def test_sixth_power(self):
        F5 = FqField(5)
        f = FqPoly.from_ints(F5, [-1, 1]).pow(6)
        data = perfect_power_data(f)
        assert data.g_e == 6
        assert data.d_c == 4  # leading coefficient 1 has order 1
        assert data.largest_exponent(5) == 6

    def test_twist_blocks_square(self):
        # 2x^2 over F_5: 2 is not a square mod 5 (squares are {1,4})
        squares = {a * a % 5 for a in range(1, 5)}
        assert 2 not in squares
        F5 = FqField(5)
        data = perfect_power_data(FqPoly.from_ints(F5, [0, 0, 2]))
        assert data.g_e == 2 and data.d_c == 1
        assert data.largest_exponent(5) == 1

    def test_x(self):
        F5 = FqField(5)
        assert perfect_power_data(FqPoly.x(F5)).g_e == 1

    def test_constructible_root(self):
        rng = random.Random(15)
        for _ in range(30):
            p = rng.choice([3, 5, 7])
            F = FqField(p)
            base = rand_poly(F, rng.randint(1, 3), rng, monic=True)
            r = rng.choice([2, 3, 4])
            c = rng.randrange(1, p)
            f = base.pow(r).scale(F.from_int(pow(c, r, p)))
            data = perfect_power_data(f)
            rmax = data.largest_exponent(p)
            assert rmax is not None and rmax % r == 0 or rmax >= r


class TestKummerOrder:
    def test_squarefree_unit_lead(self):
        F7 = FqField(7)
        f = FqPoly.from_ints(F7, [3, 1]) * FqPoly.from_ints(F7, [5, 1])
        assert kummer_order(f) == 6

    def test_half_power(self):
        F7 = FqField(7)
        base = FqPoly.from_ints(F7, [3, 1])
        f = base.pow(3)  # (q-1)/2 = 3
        assert kummer_order(f) == 2

    def test_class_invariance(self):
        rng = random.Random(16)
        for _ in range(25):
            p = rng.choice([3, 5, 7])
            F = FqField(p)
            a = rand_poly(F, rng.randint(1, 4), rng)
            c = rand_poly(F, rng.randint(1, 3), rng)
            assert kummer_order(a * c.pow(p - 1)) == kummer_order(a)

    def test_splitting_field_oracle(self):
        # the class order is the smallest e with A^e a (q-1)-th power in
        # F_5(x)^x; measure that by brute force on A^e
        rng = random.Random(17)
        F5 = FqField(5)

        def is_fourth_power(f):
            # f = B^4 iff all multiplicities are divisible by 4 and the
            # leading coefficient is a 4th power, i.e. equal to 1 in F_5
            for _, m in squarefree_decomposition(f) if f.degree() > 0 else []:
                if m % 4 != 0:
                    return False
            return F5.pow(f.leading(), (5 - 1) // math.gcd(4, 5 - 1)) == F5.one

        for _ in range(50):
            A = rand_poly(F5, rng.randint(0, 4), rng)
            if A.is_zero():
                continue
            order = kummer_order(A)
            e = 1
            acc = A
            while not is_fourth_power(acc):
                e += 1
                acc = acc * A
            assert order == e


class TestRefineCoprime:
    def test_disjoint_and_shared(self):
        F5 = FqField(5)
        a = FqPoly.from_ints(F5, [1, 1])
        b = FqPoly.from_ints(F5, [2, 1])
        c = FqPoly.from_ints(F5, [3, 1])
        prof0 = [(a * b, 1), (c, 3)]
        prof1 = [(b * c, 2)]
        basis = refine_coprime([prof0, prof1])
        as_map = {tuple(tuple([x]) if isinstance(x, int) else x for x in poly.coeffs): vec
                  for poly, vec in basis}
        assert as_map[((1,), (1,))] == (1, 0)
        assert as_map[((2,), (1,))] == (1, 2)
        assert as_map[((3,), (1,))] == (3, 2)

    def test_products_reconstruct(self):
        # profiles come from real squarefree decompositions, as in production
        rng = random.Random(18)
        for _ in range(30):
            p = rng.choice([3, 5])
            F = FqField(p)
            profiles = []
            for _ in range(rng.randint(1, 3)):
                poly = FqPoly.one(F)
                for _ in range(rng.randint(1, 3)):
                    poly = poly * rand_poly(F, rng.randint(1, 2), rng, monic=True)
                profiles.append(squarefree_decomposition(poly))
            basis = refine_coprime(profiles)
            # pairwise coprime
            for i in range(len(basis)):
                for j in range(i + 1, len(basis)):
                    assert basis[i][0].gcd(basis[j][0]).degree() == 0
            # reconstruct each input product, up to leading coefficient
            for idx, prof in enumerate(profiles):
                want = FqPoly.one(F)
                for g, m in prof:
                    want = want * g.pow(m)
                got = FqPoly.one(F)
                for b, vec in basis:
                    got = got * b.pow(vec[idx])
                assert got.monic() == want.monic()


class TestMatrices:
    def test_identity_rank(self):
        F5 = FqField(5)
        one = RatFunc(FqPoly.one(F5))
        zero = RatFunc(FqPoly.zero(F5))
        m = [[one, zero], [zero, one]]
        assert mat_rank(m) == 2

    def test_dependent_rows(self):
        F5 = FqField(5)
        x = RatFunc(FqPoly.x(F5))
        one = RatFunc(FqPoly.one(F5))
        m = [[x, x * x], [one, x]]
        assert mat_rank(m) == 1

    def test_nullspace_random(self):
        rng = random.Random(19)
        for _ in range(200):
            p = rng.choice([3, 5])
            F = FqField(p)
            rows, cols = rng.randint(1, 4), rng.randint(1, 4)
            m = [[RatFunc(rand_poly(F, rng.randint(0, 2), rng) if rng.random() < 0.7
                          else FqPoly.zero(F))
                  for _ in range(cols)] for _ in range(rows)]
            basis = mat_nullspace(m)
            assert len(basis) == cols - mat_rank(m)
            zero = RatFunc(FqPoly.zero(F))
            for vec in basis:
                for row in m:
                    acc = zero
                    for c, v in zip(row, vec):
                        acc = acc + c * v
                    assert acc.is_zero()


class TestErrors:
    def test_zero_polynomial_rejected(self):
        F5 = FqField(5)
        with pytest.raises(PreconditionError):
            factor(FqPoly.zero(F5))
        with pytest.raises(PreconditionError):
            kummer_order(FqPoly.zero(F5))
        with pytest.raises(PreconditionError):
            series_sqrt([2], 7, 4)
