"""Exact arithmetic in GF(p^r), dense matrices, and polynomial factorization.

Field elements are plain integers ("codes") in [0, p^r).  The base-p
digits of a code, least significant first, are the coefficients of the
residue polynomial modulo the field's defining polynomial.  For prime
fields the code is just the residue mod p.

Polynomials over a field are tuples of codes, constant term first, with
no trailing zeros; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

import random
from functools import lru_cache

from sympy import isprime

__all__ = [
    "FiniteField",
    "Mat",
    "make_field",
    "poly_factor",
    "min_poly",
    "char_poly",
]

# Fields at most this large get full multiplication/inverse lookup tables.
_TABLE_CAP = 512


class FiniteField:
    """GF(p^r) with deterministic construction.

    When no modulus is supplied, the defining polynomial is the
    lexicographically smallest monic irreducible of degree r over GF(p),
    where candidates are compared by their coefficient lists read from
    the top degree down.  This makes make_field(p, r) reproducible with
    no external tables.
    """

    def __init__(self, p, r=1, modulus=None):
        if not isprime(p):
            raise ValueError("characteristic %r is not prime" % (p,))
        if r < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.r = r
        self.q = p ** r
        if r == 1:
            self.modulus = (0, 1)  # x
        else:
            base = FiniteField(p, 1)
            if modulus is None:
                modulus = _lex_smallest_irreducible(base, r)
            else:
                modulus = tuple(c % p for c in modulus)
                if len(modulus) != r + 1 or modulus[-1] != 1:
                    raise ValueError("modulus must be monic of degree r")
                if not poly_is_irreducible(base, modulus):
                    raise ValueError("modulus is reducible")
            self.modulus = modulus
            # x^(r+j) reduced mod the modulus, as coefficient lists of length r
            red = [(-c) % p for c in modulus[:r]]
            xpows = [red]
            for _ in range(r - 2):
                prev = xpows[-1]
                nxt = [0] + prev[:-1]
                top = prev[-1]
                if top:
                    nxt = [(nxt[i] + top * red[i]) % p for i in range(r)]
                xpows.append(nxt)
            self._xpow = xpows
        self._install_ops()

    # -- representation ------------------------------------------------

    def decode(self, a):
        "Coefficient list (length r, constant first) of the code a."
        p = self.p
        out = []
        for _ in range(self.r):
            a, c = divmod(a, p)
            out.append(c)
        return out

    def encode(self, coeffs):
        a = 0
        for c in reversed(list(coeffs)):
            a = a * self.p + (c % self.p)
        return a

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def random(self, rng):
        return rng.randrange(self.q)

    def random_unit(self, rng):
        return rng.randrange(1, self.q)

    # -- arithmetic ----------------------------------------------------

    def _install_ops(self):
        p, r = self.p, self.r
        if r == 1:
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.neg = lambda a: (-a) % p
            self.mul = lambda a, b: (a * b) % p
            self.inv = self._inv_prime
            return
        if self.q <= _TABLE_CAP:
            q = self.q
            mt = [[0] * q for _ in range(q)]
            for a in range(q):
                row = mt[a]
                for b in range(a, q):
                    v = self._mul_generic(a, b)
                    row[b] = v
                    mt[b][a] = v
            self._multab = mt
            self.mul = lambda a, b: mt[a][b]
            inv = [0] * q
            for a in range(1, q):
                inv[a] = self._pow_generic(a, q - 2)
            self._invtab = inv
            self.inv = self._inv_small
        else:
            self.mul = self._mul_generic
            self.inv = self._inv_generic
        self.add = self._add_ext
        self.sub = self._sub_ext
        self.neg = self._neg_ext

    def _inv_prime(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def _inv_small(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._invtab[a]

    def _add_ext(self, a, b):
        p = self.p
        out = 0
        shift = 1
        for _ in range(self.r):
            out += ((a + b) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def _sub_ext(self, a, b):
        p = self.p
        out = 0
        shift = 1
        for _ in range(self.r):
            out += ((a - b) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def _neg_ext(self, a):
        return self._sub_ext(0, a)

    def _mul_generic(self, a, b):
        if a == 0 or b == 0:
            return 0
        p, r = self.p, self.r
        A = self.decode(a)
        B = self.decode(b)
        prod = [0] * (2 * r - 1)
        for i, ai in enumerate(A):
            if ai:
                for j, bj in enumerate(B):
                    if bj:
                        prod[i + j] = (prod[i + j] + ai * bj) % p
        # fold degrees r .. 2r-2 back down
        for j in range(2 * r - 2, r - 1, -1):
            c = prod[j]
            if c:
                red = self._xpow[j - r]
                for i in range(r):
                    if red[i]:
                        prod[i] = (prod[i] + c * red[i]) % p
        return self.encode(prod[:r])

    def _pow_generic(self, a, e):
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._mul_generic(out, base)
            base = self._mul_generic(base, base)
            e >>= 1
        return out

    def _inv_generic(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.q - 2)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = 1
        base = a
        mul = self.mul
        while e:
            if e & 1:
                out = mul(out, base)
            base = mul(base, base)
            e >>= 1
        return out

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def frobenius(self, a):
        return self.pow(a, self.p)

    # -- structure -----------------------------------------------------

    def multiplicative_generator(self):
        "Smallest code generating the unit group."
        from sympy import factorint

        exps = [(self.q - 1) // f for f in factorint(self.q - 1)]
        for a in range(1, self.q):
            if all(self.pow(a, e) != 1 for e in exps):
                return a
        raise AssertionError("unit group has no generator")

    def embed_into(self, big):
        """Field embedding GF(p^r) -> GF(p^(r*s)) as a code-to-code function.

        The defining polynomial is sent to its smallest root in the big
        field, so the embedding is deterministic.
        """
        if big.p != self.p or big.r % self.r != 0:
            raise ValueError("no embedding GF(%d^%d) -> GF(%d^%d)"
                             % (self.p, self.r, big.p, big.r))
        if big is self or (big.p == self.p and big.r == self.r):
            return lambda a: a
        # subfield coefficients are constants in the big field
        f_big = tuple(c for c in self.modulus)
        roots = sorted(poly_roots(big, f_big))
        root = roots[0]
        table = [0] * self.q
        for a in range(self.q):
            coeffs = self.decode(a)
            acc = 0
            for c in reversed(coeffs):
                acc = big.add(big.mul(acc, root), c)
            table[a] = acc
        return lambda a: table[a]

    def __repr__(self):
        if self.r == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.r)

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and self.p == other.p and self.r == other.r
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))


@lru_cache(maxsize=None)
def make_field(p, r=1):
    "The deterministic GF(p^r); cached so codes are interchangeable."
    return FiniteField(p, r)


# ---------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------

def poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_deg(f):
    return len(f) - 1


def poly_add(F, a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return poly_trim(F.add(x, y) for x, y in zip(a, b))


def poly_sub(F, a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return poly_trim(F.sub(x, y) for x, y in zip(a, b))


def poly_scale(F, a, s):
    if s == 0:
        return ()
    return tuple(F.mul(c, s) for c in a)


def poly_mul(F, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    mul, add = F.mul, F.add
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, bj))
    return poly_trim(out)


def poly_divmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    if da < db:
        return (), poly_trim(a)
    inv_lead = F.inv(b[-1])
    quot = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = F.mul(a[db + k], inv_lead)
        if c:
            quot[k] = c
            for j in range(db + 1):
                a[j + k] = F.sub(a[j + k], F.mul(c, b[j]))
    return poly_trim(quot), poly_trim(a)


def poly_mod(F, a, b):
    return poly_divmod(F, a, b)[1]


def poly_monic(F, a):
    if not a:
        return a
    if a[-1] == 1:
        return a
    return poly_scale(F, a, F.inv(a[-1]))


def poly_gcd(F, a, b):
    while b:
        a, b = b, poly_mod(F, a, b)
    return poly_monic(F, a)


def poly_pow_mod(F, base, e, mod):
    out = (1,)
    base = poly_mod(F, base, mod)
    while e:
        if e & 1:
            out = poly_mod(F, poly_mul(F, out, base), mod)
        base = poly_mod(F, poly_mul(F, base, base), mod)
        e >>= 1
    return out


def poly_eval(F, f, x):
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_deriv(F, f):
    out = []
    for i in range(1, len(f)):
        out.append(F.mul(f[i], i % F.p))
    return poly_trim(out)


_X = (0, 1)


def poly_is_irreducible(F, f):
    "Rabin's test; f must be nonconstant."
    n = poly_deg(f)
    if n < 1:
        return False
    if n == 1:
        return True
    from sympy import factorint

    xq = poly_pow_mod(F, _X, F.q ** n, f)
    if poly_sub(F, xq, _X):
        return False
    for t in factorint(n):
        xqt = poly_pow_mod(F, _X, F.q ** (n // t), f)
        if poly_deg(poly_gcd(F, poly_sub(F, xqt, _X), f)) != 0:
            return False
    return True


def _lex_smallest_irreducible(F, r):
    # candidates ordered by coefficient list read from degree r-1 down to 0
    for code in range(F.q ** r):
        coeffs = []
        c = code
        for _ in range(r):
            coeffs.append(c % F.q)
            c //= F.q
        # `code` counts with the constant coefficient least significant,
        # which is exactly the high-to-low lexicographic order we want
        # once the list is reversed into low-to-high position.
        f = tuple(coeffs) + (1,)
        if poly_is_irreducible(F, f):
            return f
    raise AssertionError("no irreducible of degree %d over %r" % (r, F))


def _squarefree_decomposition(F, f):
    "Monic f -> dict {monic squarefree factor: multiplicity}."
    out = {}
    fp = poly_deriv(F, f)
    if not fp:
        # f is a p-th power: take the p-th root coefficient-wise
        p = F.p
        root = []
        for i in range(0, len(f), p):
            root.append(F.pow(f[i], F.q // p))
        for g, m in _squarefree_decomposition(F, poly_trim(root)).items():
            out[g] = out.get(g, 0) + m * p
        return out
    c = poly_gcd(F, f, fp)
    w = poly_divmod(F, f, c)[0]
    i = 1
    while poly_deg(w) > 0:
        y = poly_gcd(F, w, c)
        fac = poly_divmod(F, w, y)[0]
        if poly_deg(fac) > 0:
            out[poly_monic(F, fac)] = out.get(poly_monic(F, fac), 0) + i
        w = y
        c = poly_divmod(F, c, y)[0]
        i += 1
    if poly_deg(c) > 0:
        # the residual is a perfect p-th power; the recursion enters the
        # zero-derivative branch and supplies the factor of p itself
        for g, m in _squarefree_decomposition(F, c).items():
            out[g] = out.get(g, 0) + m
    return out


def _distinct_degree(F, f):
    "Squarefree monic f -> list of (product of degree-d factors, d)."
    out = []
    h = _X
    i = 1
    rest = f
    while poly_deg(rest) >= 2 * i:
        h = poly_pow_mod(F, h, F.q, rest)
        g = poly_gcd(F, poly_sub(F, h, _X), rest)
        if poly_deg(g) > 0:
            out.append((g, i))
            rest = poly_divmod(F, rest, g)[0]
            h = poly_mod(F, h, rest)
        i += 1
    if poly_deg(rest) > 0:
        out.append((rest, poly_deg(rest)))
    return out


def _equal_degree(F, f, d, rng):
    "Split squarefree monic f, all of whose factors have degree d."
    n = poly_deg(f)
    if n == d:
        return [f]
    while True:
        h = poly_trim([F.random(rng) for _ in range(n)])
        if poly_deg(h) < 1:
            continue
        if F.p == 2:
            # trace map over GF(2)
            acc = h
            t = h
            k = F.r * d
            for _ in range(k - 1):
                t = poly_mod(F, poly_mul(F, t, t), f)
                acc = poly_add(F, acc, t)
            g = poly_gcd(F, acc, f)
        else:
            e = (F.q ** d - 1) // 2
            t = poly_pow_mod(F, h, e, f)
            g = poly_gcd(F, poly_sub(F, t, (1,)), f)
        if 0 < poly_deg(g) < n:
            rest = poly_divmod(F, f, g)[0]
            return _equal_degree(F, g, d, rng) + _equal_degree(F, rest, d, rng)


def poly_factor(F, f, seed=0):
    """Factor a nonzero polynomial into monic irreducibles.

    Returns a list of (factor, multiplicity) sorted by (degree,
    coefficients).  The Cantor-Zassenhaus step uses an RNG seeded by
    `seed`, so the output is reproducible (and the factor set is unique
    regardless).
    """
    f = poly_trim(f)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    out = {}
    for sqf, mult in _squarefree_decomposition(F, poly_monic(F, f)).items():
        for block, d in _distinct_degree(F, sqf):
            for irr in _equal_degree(F, block, d, rng):
                out[irr] = out.get(irr, 0) + mult
    return sorted(out.items(), key=lambda t: (poly_deg(t[0]), t[0]))


def poly_roots(F, f):
    "Roots in F of a nonzero polynomial, with multiplicity ignored."
    roots = []
    for g, _ in poly_factor(F, f):
        if poly_deg(g) == 1:
            roots.append(F.neg(g[0]))
    return roots


# ---------------------------------------------------------------------
# dense matrices
# ---------------------------------------------------------------------

class Mat:
    """Dense matrix over a FiniteField; entries are field codes.

    Instances are treated as immutable by every public operation.
    """

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data):
        self.field = field
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @classmethod
    def zeros(cls, field, rows, cols):
        m = cls.__new__(cls)
        m.field = field
        m.rows = rows
        m.cols = cols
        m.data = [[0] * cols for _ in range(rows)]
        return m

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.data[i][i] = 1
        return m

    @classmethod
    def diagonal(cls, field, diag):
        m = cls.zeros(field, len(diag), len(diag))
        for i, d in enumerate(diag):
            m.data[i][i] = d
        return m

    @classmethod
    def from_int_rows(cls, field, data):
        "Build from integer entries, reduced into the prime subfield."
        return cls(field, [[e % field.p for e in row] for row in data])

    def copy(self):
        return Mat(self.field, self.data)

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.field == other.field
                and self.data == other.data)

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self.data)
        return "Mat(%r, %dx%d: %s)" % (self.field, self.rows, self.cols, body)

    def is_zero(self):
        return all(e == 0 for row in self.data for e in row)

    def is_identity(self):
        return self == Mat.identity(self.field, self.rows)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        self._check(other)
        add = self.field.add
        return Mat(self.field,
                   [[add(a, b) for a, b in zip(ra, rb)]
                    for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other):
        self._check(other)
        sub = self.field.sub
        return Mat(self.field,
                   [[sub(a, b) for a, b in zip(ra, rb)]
                    for ra, rb in zip(self.data, other.data)])

    def __neg__(self):
        neg = self.field.neg
        return Mat(self.field, [[neg(a) for a in row] for row in self.data])

    def scale(self, s):
        mul = self.field.mul
        return Mat(self.field, [[mul(a, s) for a in row] for row in self.data])

    def _check(self, other):
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __mul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ValueError("dimension mismatch %dx%d * %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        F = self.field
        out = Mat.zeros(F, self.rows, other.cols)
        odata = other.data
        if F.r == 1:
            p = F.p
            for i, row in enumerate(self.data):
                orow = out.data[i]
                for k, a in enumerate(row):
                    if a:
                        brow = odata[k]
                        for j, b in enumerate(brow):
                            if b:
                                orow[j] = (orow[j] + a * b) % p
        else:
            mul, add = F.mul, F.add
            for i, row in enumerate(self.data):
                orow = out.data[i]
                for k, a in enumerate(row):
                    if a:
                        brow = odata[k]
                        for j, b in enumerate(brow):
                            if b:
                                orow[j] = add(orow[j], mul(a, b))
        return out

    def apply(self, vec):
        "Matrix times column vector (a list of codes)."
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        F = self.field
        mul, add = F.mul, F.add
        out = []
        for row in self.data:
            acc = 0
            for a, v in zip(row, vec):
                if a and v:
                    acc = add(acc, mul(a, v))
            out.append(acc)
        return out

    def transpose(self):
        return Mat(self.field, [list(col) for col in zip(*self.data)]) \
            if self.data else Mat.zeros(self.field, self.cols, self.rows)

    def kron(self, other):
        self._check(other)
        F = self.field
        mul = F.mul
        out = Mat.zeros(F, self.rows * other.rows, self.cols * other.cols)
        for i, row in enumerate(self.data):
            for k, a in enumerate(row):
                if a:
                    for j, brow in enumerate(other.data):
                        orow = out.data[i * other.rows + j]
                        off = k * other.cols
                        for l, b in enumerate(brow):
                            if b:
                                orow[off + l] = mul(a, b)
        return out

    def submatrix(self, row_idx, col_idx):
        return Mat(self.field,
                   [[self.data[i][j] for j in col_idx] for i in row_idx])

    # -- elimination ---------------------------------------------------

    def rref(self):
        """Reduced row echelon form.

        Returns (R, rank, pivot_columns).  Pivots are chosen as the
        first nonzero entry in column order, so the result is
        deterministic.
        """
        F = self.field
        data = [list(row) for row in self.data]
        rows, cols = self.rows, self.cols
        mul, sub, inv = F.mul, F.sub, F.inv
        pivots = []
        rank = 0
        for j in range(cols):
            piv = None
            for i in range(rank, rows):
                if data[i][j]:
                    piv = i
                    break
            if piv is None:
                continue
            data[rank], data[piv] = data[piv], data[rank]
            prow = data[rank]
            c = prow[j]
            if c != 1:
                cinv = inv(c)
                for l in range(j, cols):
                    if prow[l]:
                        prow[l] = mul(prow[l], cinv)
            for i in range(rows):
                if i != rank and data[i][j]:
                    f = data[i][j]
                    irow = data[i]
                    for l in range(j, cols):
                        if prow[l]:
                            irow[l] = sub(irow[l], mul(f, prow[l]))
            pivots.append(j)
            rank += 1
            if rank == rows:
                break
        return Mat(F, data), rank, pivots

    def rank(self):
        return self.rref()[1]

    def kernel(self):
        "Matrix whose columns form a basis of the right null space."
        F = self.field
        R, rank, pivots = self.rref()
        free = [j for j in range(self.cols) if j not in set(pivots)]
        basis = []
        for j in free:
            v = [0] * self.cols
            v[j] = 1
            for i, pj in enumerate(pivots):
                v[pj] = F.neg(R.data[i][j])
            basis.append(v)
        out = Mat.zeros(F, self.cols, len(basis))
        for c, v in enumerate(basis):
            for i in range(self.cols):
                out.data[i][c] = v[i]
        return out

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("not square")
        F = self.field
        n = self.rows
        aug = Mat(F, [self.data[i] + Mat.identity(F, n).data[i]
                      for i in range(n)])
        R, rank, _ = aug.rref()
        if rank < n or any(R.data[i][i] != 1 for i in range(n)):
            raise ValueError("matrix is singular")
        return Mat(F, [row[n:] for row in R.data])

    def det(self):
        if self.rows != self.cols:
            raise ValueError("not square")
        F = self.field
        data = [list(row) for row in self.data]
        n = self.rows
        mul, sub, inv = F.mul, F.sub, F.inv
        det = 1
        for j in range(n):
            piv = None
            for i in range(j, n):
                if data[i][j]:
                    piv = i
                    break
            if piv is None:
                return 0
            if piv != j:
                data[j], data[piv] = data[piv], data[j]
                det = F.neg(det)
            det = mul(det, data[j][j])
            cinv = inv(data[j][j])
            for i in range(j + 1, n):
                if data[i][j]:
                    f = mul(data[i][j], cinv)
                    for l in range(j, n):
                        if data[j][l]:
                            data[i][l] = sub(data[i][l], mul(f, data[j][l]))
        return det

    def trace(self):
        F = self.field
        acc = 0
        for i in range(min(self.rows, self.cols)):
            acc = F.add(acc, self.data[i][i])
        return acc

    def is_invertible(self):
        return self.rows == self.cols and self.rank() == self.rows


def hstack(mats):
    F = mats[0].field
    rows = mats[0].rows
    return Mat(F, [sum((m.data[i] for m in mats), []) for i in range(rows)])


def vstack(mats):
    F = mats[0].field
    return Mat(F, [row for m in mats for row in m.data])


# ---------------------------------------------------------------------
# minimal / characteristic polynomials
# ---------------------------------------------------------------------

class _Echelon:
    "Growing echelon basis with optional combination tracking."

    def __init__(self, field, dim):
        self.field = field
        self.dim = dim
        self.rows = []      # reduced vectors
        self.pivots = []    # pivot index per row
        self.combos = []    # expression of each row in the inserted vectors

    def reduce(self, v, combo=None):
        "Reduce v against the basis; returns (residue, combo_residue)."
        F = self.field
        v = list(v)
        combo = list(combo) if combo is not None else None
        for row, piv, rcombo in zip(self.rows, self.pivots, self.combos):
            c = v[piv]
            if c:
                for i in range(self.dim):
                    if row[i]:
                        v[i] = F.sub(v[i], F.mul(c, row[i]))
                if combo is not None:
                    for i in range(len(combo)):
                        if i < len(rcombo) and rcombo[i]:
                            combo[i] = F.sub(combo[i], F.mul(c, rcombo[i]))
        return v, combo

    def insert(self, v, combo=None):
        "Insert v if independent; returns True when the basis grew."
        F = self.field
        v, combo = self.reduce(v, combo)
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            return False, combo
        c = F.inv(v[piv])
        v = [F.mul(c, x) for x in v]
        if combo is not None:
            combo = [F.mul(c, x) for x in combo]
        self.rows.append(v)
        self.pivots.append(piv)
        self.combos.append(combo if combo is not None else [])
        return True, combo

    def __len__(self):
        return len(self.rows)


def min_poly(m, v):
    """Monic minimal polynomial of the vector v under the matrix m.

    Krylov iteration: iterate v, m v, m^2 v, ... until the first linear
    dependence, whose coefficients are read off an augmented echelon.
    """
    if m.rows != m.cols:
        raise ValueError("matrix must be square")
    if len(v) != m.cols:
        raise ValueError("vector length mismatch")
    F = m.field
    ech = _Echelon(F, m.cols)
    w = list(v)
    step = 0
    while True:
        combo = [0] * (m.cols + 1)
        combo[step] = 1
        grew, resid = ech.insert(w, combo)
        if not grew:
            # resid expresses 0 = sum resid[j] * m^j v with resid[step] != 0
            lead = resid[step]
            cinv = F.inv(lead)
            return poly_trim([F.mul(cinv, resid[j]) for j in range(step + 1)])
        w = m.apply(w)
        step += 1


def char_poly(m):
    """Monic characteristic polynomial via cyclic-quotient minimal polynomials."""
    if m.rows != m.cols:
        raise ValueError("matrix must be square")
    F = m.field
    n = m.cols
    ech = _Echelon(F, n)
    out = (1,)
    start = 0
    while len(ech) < n:
        # first standard basis vector not in the current invariant span
        while True:
            v = [0] * n
            v[start] = 1
            resid, _ = ech.reduce(v)
            if any(resid):
                break
            start += 1
        # relative minimal polynomial of v in the quotient by span(ech)
        sub = _Echelon(F, n)
        w = v
        step = 0
        while True:
            resid, _ = ech.reduce(w)
            combo = [0] * (n + 1)
            combo[step] = 1
            grew, rc = sub.insert(resid, combo)
            if not grew:
                lead = rc[step]
                cinv = F.inv(lead)
                g = poly_trim([F.mul(cinv, rc[j]) for j in range(step + 1)])
                break
            w = m.apply(w)
            step += 1
        # fold the processed Krylov vectors into the invariant span
        w = v
        for _ in range(poly_deg(g)):
            ech.insert(w)
            w = m.apply(w)
        out = poly_mul(F, out, g)
    return out


def poly_of_matrix(f, m):
    "Evaluate the polynomial f at the square matrix m (Horner)."
    F = m.field
    n = m.rows
    acc = Mat.zeros(F, n, n)
    for c in reversed(f):
        acc = acc * m
        if c:
            for i in range(n):
                acc.data[i][i] = F.add(acc.data[i][i], c)
    return acc
