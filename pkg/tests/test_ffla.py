"""Field and linear-algebra layer, checked against independent oracles:
integer arithmetic mod p for prime fields, sympy for polynomial
factorization and determinants, and direct axiom sampling for extension
fields."""

import random

import pytest
import sympy
from sympy import GF, Poly, symbols

from modrep.ffla import (Mat, char_poly, make_field, min_poly, poly_deriv,
                         poly_eval, poly_factor, poly_is_irreducible,
                         poly_mul, poly_of_matrix, poly_roots)

FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (2, 3), (5, 2)]


@pytest.mark.parametrize("p,r", FIELDS)
def test_field_axioms_sampled(p, r):
    F = make_field(p, r)
    rng = random.Random(11)
    els = list(F.elements()) if F.q <= 64 else [F.random(rng)
                                               for _ in range(40)]
    for a in els:
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        # Frobenius fixes the prime field and x -> x^q is the identity
        assert F.pow(a, F.q) == a
    for _ in range(60):
        a, b, c = (F.random(rng) for _ in range(3))
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_prime_field_is_integers_mod_p():
    # oracle: plain integer arithmetic
    for p in (2, 3, 5, 11):
        F = make_field(p)
        for a in range(p):
            for b in range(p):
                assert F.add(a, b) == (a + b) % p
                assert F.mul(a, b) == (a * b) % p


@pytest.mark.parametrize("p,r", [(2, 2), (3, 2), (2, 4), (5, 2)])
def test_multiplicative_group_cyclic(p, r):
    F = make_field(p, r)
    g = F.multiplicative_generator()
    seen = set()
    x = 1
    for _ in range(F.q - 1):
        seen.add(x)
        x = F.mul(x, g)
    assert len(seen) == F.q - 1


def test_modulus_is_deterministic_and_irreducible():
    # same (p, r) must always produce the same field tables
    assert make_field(3, 4).modulus == make_field(3, 4).modulus
    for p, r in [(2, 8), (3, 5), (7, 3)]:
        F = make_field(p, r)
        assert poly_is_irreducible(make_field(p), list(F.modulus))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_poly_factor_against_sympy(p):
    # oracle: sympy's factor_list over GF(p)
    F = make_field(p)
    rng = random.Random(5)
    x = symbols("x")
    for trial in range(25):
        deg = rng.randrange(1, 7)
        coeffs = [rng.randrange(p) for _ in range(deg)] + [1]
        got = poly_factor(F, coeffs)
        sy = Poly(list(reversed(coeffs)), x, domain=GF(p)).factor_list()
        sy_factors = sorted(
            (f.degree(), e) for f, e in sy[1])
        assert sorted((len(f) - 1, e) for f, e in got) == sy_factors
        # multiplying back recovers the input
        prod = [1]
        for f, e in got:
            for _ in range(e):
                prod = poly_mul(F, prod, f)
        assert list(prod) == coeffs


@pytest.mark.parametrize("p,r", [(2, 2), (3, 2), (2, 3)])
def test_poly_factor_extension_fields(p, r):
    # oracle: refactoring the expanded product of random linear factors
    F = make_field(p, r)
    rng = random.Random(7)
    for trial in range(15):
        roots = [F.random(rng) for _ in range(rng.randrange(1, 5))]
        poly = [1]
        for a in roots:
            poly = poly_mul(F, poly, [F.neg(a), 1])
        fac = poly_factor(F, poly)
        assert all(len(f) == 2 for f, _ in fac)
        got_roots = sorted(poly_roots(F, poly))
        assert got_roots == sorted(set(roots))
        for a in set(roots):
            assert poly_eval(F, poly, a) == 0


def test_poly_deriv_char_p():
    F = make_field(3)
    # d/dx (x^3 + 1) = 0 in characteristic 3
    assert not poly_deriv(F, [1, 0, 0, 1])


def _random_mat(F, n, rng):
    return Mat(F, [[F.random(rng) for _ in range(n)] for _ in range(n)])


@pytest.mark.parametrize("p,r", [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)])
def test_rref_kernel_inverse(p, r):
    F = make_field(p, r)
    rng = random.Random(13)
    for n in (2, 3, 4, 5):
        for _ in range(8):
            m = _random_mat(F, n, rng)
            R, rank, pivots = m.rref()
            assert len(pivots) == rank
            K = m.kernel()
            assert K.cols == n - rank
            # every kernel column is annihilated
            for j in range(K.cols):
                v = [K.data[i][j] for i in range(n)]
                assert all(x == 0 for x in m.apply(v))
            if rank == n:
                inv = m.inverse()
                assert (m * inv).data == Mat.identity(F, n).data
                assert (inv * m).data == Mat.identity(F, n).data


@pytest.mark.parametrize("p", [2, 3, 5])
def test_det_against_sympy(p):
    F = make_field(p)
    rng = random.Random(3)
    for n in (2, 3, 4):
        for _ in range(10):
            m = _random_mat(F, n, rng)
            sy = sympy.Matrix(m.data).det() % p
            assert m.det() == sy


@pytest.mark.parametrize("p", [2, 3, 5])
def test_char_poly_against_sympy(p):
    F = make_field(p)
    rng = random.Random(17)
    for n in (2, 3, 4):
        for _ in range(6):
            m = _random_mat(F, n, rng)
            cp = char_poly(m)  # low-to-high coefficients, monic
            x = symbols("x")
            sy = sympy.Matrix(m.data).charpoly(x)
            sy_coeffs = tuple(int(c) % p for c in reversed(sy.all_coeffs()))
            assert tuple(cp) == sy_coeffs


@pytest.mark.parametrize("p,r", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_min_poly_annihilates_and_divides(p, r):
    from modrep.ffla import poly_divmod
    F = make_field(p, r)
    rng = random.Random(23)
    for n in (2, 3, 4):
        for _ in range(6):
            m = _random_mat(F, n, rng)
            v = [F.random(rng) for _ in range(n)]
            mp = min_poly(m, v)
            # the vector minimal polynomial annihilates v ...
            z = poly_of_matrix(mp, m)
            assert all(x == 0 for x in z.apply(v))
            # ... and divides the characteristic polynomial
            cp = char_poly(m)
            _, rem = poly_divmod(F, list(cp), list(mp))
            assert not rem


def test_kron_mixed_products():
    # (A kron B)(C kron D) = AC kron BD
    F = make_field(5)
    rng = random.Random(29)
    for _ in range(10):
        A, B, C, D = (_random_mat(F, 2, rng) for _ in range(4))
        left = A.kron(B) * C.kron(D)
        right = (A * C).kron(B * D)
        assert left.data == right.data


def test_trace_and_transpose():
    F = make_field(7)
    rng = random.Random(31)
    m = _random_mat(F, 4, rng)
    assert m.trace() == m.transpose().trace()
    assert m.transpose().transpose().data == m.data


def test_embed_into():
    # GF(2) embeds in GF(4); images satisfy the same arithmetic
    F2 = make_field(2)
    F4 = make_field(2, 2)
    emb = F2.embed_into(F4)
    for a in range(2):
        for b in range(2):
            assert emb(F2.add(a, b)) == F4.add(emb(a), emb(b))
            assert emb(F2.mul(a, b)) == F4.mul(emb(a), emb(b))
