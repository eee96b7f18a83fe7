import itertools
import random

import pytest

from hodgegap.algebra import (
    FiniteField,
    MatrixModP,
    Polynomial,
    discriminant_squarefree,
    fq_sqrt,
    is_prime,
    kernel_dim_mod_p,
    kernel_dim_rational,
    poly_divmod,
    poly_gcd,
    rank_mod_p,
)
from hodgegap.cyclotomic import cyclotomic_field
from hodgegap.modularrep import build_augmentation

F5 = FiniteField(5)
F7 = FiniteField(7)
F9 = FiniteField(3, modulus=(1, 0))


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_field_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        FiniteField(6)
    with pytest.raises(ValueError):
        FiniteField(5, modulus=(4, 0))  # t^2 + 4 = t^2 - 1 splits mod 5


def test_f9_arithmetic():
    t = F9.gen()
    assert t * t == -F9.one
    assert (t + 1) * (t + 1) == 2 * t
    for a in F9:
        if a:
            assert a * a.inv() == F9.one
    assert len(list(F9)) == 9


def test_poly_compose():
    u = Polynomial(F7, [0, 1])
    f = u * u
    assert f.compose(u + 1) == u * u + u.scale(2) + 1
    quintic = Polynomial(F5, [0, -1, 0, 0, 0, 1])  # u^5 - u
    identity = Polynomial(F5, [0, 1])
    assert quintic.compose(identity) == quintic
    assert identity.compose(quintic) == quintic


def test_frobenius_freshman_dream():
    u_plus_1 = Polynomial(F5, [1, 1])
    assert u_plus_1**5 == Polynomial(F5, [1, 0, 0, 0, 0, 1])


def test_ring_mismatch_is_rejected():
    with pytest.raises(ValueError):
        Polynomial(F5, [1, 1]) + Polynomial(F7, [1, 1])
    with pytest.raises(ValueError):
        F5.coerce(F7.one)


def test_squarefree_decisions():
    quintic = Polynomial(F5, [0, -1, 0, 0, 0, 1])  # derivative is -1 in F_5
    ok, g = discriminant_squarefree(quintic)
    assert ok and g.degree == 0

    k5 = cyclotomic_field(5)
    u_sq = Polynomial(k5, [0, 0, 1])
    ok, g = discriminant_squarefree(u_sq)
    assert not ok and g.degree >= 1

    for p in (3, 5, 7, 11, 13):
        fp = FiniteField(p)
        coeffs = [0] * (p + 1)
        coeffs[1], coeffs[p] = -1, 1
        assert discriminant_squarefree(Polynomial(fp, coeffs))[0]

    with pytest.raises(ValueError):
        discriminant_squarefree(Polynomial(F5, [3]))


def _all_monic_of_degree(field, d):
    for tail in itertools.product(field, repeat=d):
        yield Polynomial(field, list(tail) + [field.one])


def _naive_monic_gcd(f, g):
    # try every monic divisor, largest common degree wins
    field = f.ring
    best = Polynomial(field, [field.one])
    for d in range(1, min(f.degree, g.degree) + 1):
        for cand in _all_monic_of_degree(field, d):
            if poly_divmod(f, cand)[1].is_zero() and poly_divmod(g, cand)[1].is_zero():
                best = cand
    return best


@pytest.mark.parametrize("field", [F5, F7])
def test_gcd_against_divisor_enumeration(field):
    rng = random.Random(field.p)
    for _ in range(50):
        f = Polynomial(field, [rng.randrange(field.p) for _ in range(rng.randint(2, 5))])
        g = Polynomial(field, [rng.randrange(field.p) for _ in range(rng.randint(2, 5))])
        if f.is_zero() or g.is_zero() or f.degree < 1 or g.degree < 1:
            continue
        assert poly_gcd(f, g) == _naive_monic_gcd(f, g)


def test_kernel_dims():
    ident = MatrixModP(5, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert kernel_dim_mod_p(ident) == 0
    zero = MatrixModP(5, ((0,) * 3,) * 3)
    assert kernel_dim_mod_p(zero) == 3

    # (generator - 1) on the augmentation ideal for p = 5: one invariant line
    m = build_augmentation(5).generator_matrix
    shifted = MatrixModP(
        5, tuple(tuple(m[i][j] - (1 if i == j else 0) for j in range(4)) for i in range(4))
    )
    assert kernel_dim_mod_p(shifted) == 1


def test_rank_nullity_on_random_matrices():
    rng = random.Random(505)
    for _ in range(100):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = MatrixModP(
            5, tuple(tuple(rng.randrange(5) for _ in range(cols)) for _ in range(rows))
        )
        assert kernel_dim_mod_p(m) + rank_mod_p(m) == cols


def test_rational_kernel():
    assert kernel_dim_rational([[1, 0], [0, 1]]) == 0
    assert kernel_dim_rational([[0, 0], [0, 0]]) == 2
    assert kernel_dim_rational([[1, 2], [2, 4]]) == 1


def test_sqrt_examples():
    assert fq_sqrt(F5.from_int(4)) == 2  # smaller of the two lifts comes first
    assert fq_sqrt(F5.from_int(2)) is None
    t = F9.gen()
    r = fq_sqrt(F9.from_int(2))
    assert r in (t, 2 * t)
    assert r == t  # canonical enumeration order


@pytest.mark.parametrize("field", [F5, F7, F9])
def test_sqrt_squares_back(field):
    for a in field:
        r = fq_sqrt(a)
        if r is not None:
            assert r * r == a
    # every square has a root
    for a in field:
        assert fq_sqrt(a * a) is not None
