"""Finite groups by generators, matrix representations, and the functors
acting on them: exterior powers, tensor and box products, duals, twists,
restriction along homomorphisms, and monomial induction.

Group elements are opaque hashable handles (entry tuples for matrix
groups, pairs for semidirect products, tuples of handles for products).
A representation stores one invertible matrix per generator, plus an
optional evaluator for arbitrary elements when the construction supports
it (standard matrix reps, characters, induced reps, and anything built
from those by the functors here).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from sympy import factorint, isprime, n_order

from .ffla import Mat, make_field

DEFAULT_CLOSURE_CAP = 10 ** 6


class Group:
    """A finite group given by generators and explicit element operations.

    `relations`, when present, is a list of words (lists of
    (generator_index, exponent) pairs) that evaluate to the identity and
    present the group; `word_of`, when present, writes an arbitrary
    element as such a word.
    """

    def __init__(self, name, generators, multiply, invert, identity,
                 order=None, relations=None, word_of=None, gen_names=None):
        self.name = name
        self.generators = list(generators)
        self.multiply = multiply
        self.invert = invert
        self.identity = identity
        self.known_order = order
        self.relations = relations
        self.word_of = word_of
        self.gen_names = gen_names or ["g%d" % i for i in range(len(generators))]
        self.closure_cap = DEFAULT_CLOSURE_CAP
        self._elements = None

    def elements(self):
        "Full element list by closure; cached.  Raises past closure_cap."
        if self._elements is None:
            if self.known_order is not None and self.known_order > self.closure_cap:
                raise ValueError("group %s too large to enumerate (order %d)"
                                 % (self.name, self.known_order))
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in self.generators:
                        y = self.multiply(x, g)
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
                            if len(seen) > self.closure_cap:
                                raise ValueError("closure cap exceeded for %s"
                                                 % self.name)
                frontier = nxt
            self._elements = sorted(seen) if _sortable(seen) else list(seen)
            if self.known_order is not None:
                assert len(self._elements) == self.known_order, \
                    "closure size %d != expected order %d" \
                    % (len(self._elements), self.known_order)
        return self._elements

    def order(self):
        if self.known_order is not None:
            return self.known_order
        return len(self.elements())

    def power(self, x, e):
        if e < 0:
            return self.power(self.invert(x), -e)
        out = self.identity
        while e:
            if e & 1:
                out = self.multiply(out, x)
            x = self.multiply(x, x)
            e >>= 1
        return out

    def evaluate_word(self, word):
        out = self.identity
        for idx, e in word:
            out = self.multiply(out, self.power(self.generators[idx], e))
        return out

    def conjugacy_classes(self):
        "List of frozensets; requires full enumeration."
        els = self.elements()
        seen = set()
        classes = []
        for x in els:
            if x in seen:
                continue
            orbit = {self.multiply(self.multiply(g, x), self.invert(g))
                     for g in els}
            seen |= orbit
            classes.append(frozenset(orbit))
        return classes

    def __repr__(self):
        return "Group(%s)" % self.name


def _sortable(items):
    try:
        sorted(items)
        return True
    except TypeError:
        return False


@dataclass(frozen=True)
class Hom:
    "Group homomorphism given by an element-level map."
    source: Group
    target: Group
    apply: object  # callable element -> element

    def image_of_generators(self):
        return [self.apply(g) for g in self.source.generators]


class Rep:
    "A matrix representation: one invertible matrix per group generator."

    def __init__(self, group, field, matrices, evaluate=None, name="",
                 check=True):
        if len(matrices) != len(group.generators):
            raise ValueError("need one matrix per generator")
        self.group = group
        self.field = field
        self.matrices = list(matrices)
        self.evaluate = evaluate
        self.name = name
        self.dim = matrices[0].rows if matrices else 0
        for m in self.matrices:
            if m.field != field:
                raise ValueError("matrix field mismatch")
            if m.rows != self.dim or m.cols != self.dim:
                raise ValueError("matrices must be square of equal size")
        if check:
            for m in self.matrices:
                if not m.is_invertible():
                    raise ValueError("generator matrix is singular")
            if group.relations is not None:
                self.check_relations()

    def check_relations(self):
        for word in self.group.relations or []:
            m = Mat.identity(self.field, self.dim)
            for idx, e in word:
                g = self.matrices[idx]
                if e < 0:
                    g = g.inverse()
                    e = -e
                for _ in range(e):
                    m = m * g
            if not m.is_identity():
                raise ValueError("matrices violate relation %r of %s"
                                 % (word, self.group.name))

    def at(self, element):
        "Matrix of an arbitrary element, when the rep can evaluate it."
        if element == self.group.identity:
            return Mat.identity(self.field, self.dim)
        for g, m in zip(self.group.generators, self.matrices):
            if element == g:
                return m
        if self.evaluate is not None:
            return self.evaluate(element)
        if self.group.word_of is not None:
            m = Mat.identity(self.field, self.dim)
            for idx, e in self.group.word_of(element):
                g = self.matrices[idx]
                if e < 0:
                    g = g.inverse()
                    e = -e
                for _ in range(e):
                    m = m * g
            return m
        raise ValueError("representation %r cannot evaluate %r"
                         % (self.name, element))

    def char_tuple(self):
        "For 1-dimensional reps: the tuple of generator scalars."
        if self.dim != 1:
            raise ValueError("not one-dimensional")
        return tuple(m.data[0][0] for m in self.matrices)

    def __repr__(self):
        return "Rep(%s, dim=%d over %r)" % (self.name or self.group.name,
                                            self.dim, self.field)


# ---------------------------------------------------------------------
# built-in groups
# ---------------------------------------------------------------------

def _prime_power(q):
    fac = factorint(q)
    if len(fac) != 1:
        raise ValueError("%d is not a prime power" % q)
    (p, r), = fac.items()
    return p, r


def validate_zero_pattern(n, zero_pattern):
    """A forced-zero pattern defines a subgroup of the upper-triangular
    group iff for every (i,j) in the pattern and every i<k<j, (i,k) or
    (k,j) is also forced to zero.  Returns None or the violating triple.
    """
    zp = set(zero_pattern)
    for (i, j) in zp:
        if not (1 <= i < j <= n):
            raise ValueError("position %r is not strictly upper" % ((i, j),))
        for k in range(i + 1, j):
            if (i, k) not in zp and (k, j) not in zp:
                return (i, k, j)
    return None


def borel_group(q, n, zero_pattern=()):
    """Upper-triangular invertible n x n matrices over GF(q) with the given
    strictly-upper positions forced to zero.  Returns (Group, standard Rep).

    Generators: one torus generator per diagonal position (a primitive
    scalar there, 1 elsewhere), one elementary unipotent generator per
    free position.
    """
    bad = validate_zero_pattern(n, zero_pattern)
    if bad is not None:
        i, k, j = bad
        raise ValueError(
            "zero pattern not multiplicative: (%d,%d)*(%d,%d) feeds (%d,%d)"
            % (i, k, k, j, i, j))
    p, r = _prime_power(q)
    F = make_field(p, r)
    zp = set(zero_pattern)
    free = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)
            if (i, j) not in zp]

    def tup(mat):
        return tuple(e for row in mat.data for e in row)

    def multiply(x, y):
        mx = Mat(F, [list(x[i * n:(i + 1) * n]) for i in range(n)])
        my = Mat(F, [list(y[i * n:(i + 1) * n]) for i in range(n)])
        return tup(mx * my)

    def invert(x):
        mx = Mat(F, [list(x[i * n:(i + 1) * n]) for i in range(n)])
        return tup(mx.inverse())

    identity = tup(Mat.identity(F, n))
    gamma = F.multiplicative_generator()
    gens = []
    names = []
    for l in range(1, n + 1):
        diag = [1] * n
        diag[l - 1] = gamma
        gens.append(tup(Mat.diagonal(F, diag)))
        names.append("t%d" % l)
    for (i, j) in free:
        m = Mat.identity(F, n)
        m.data[i - 1][j - 1] = 1
        gens.append(tup(m))
        names.append("u%d%d" % (i, j))
    order = (q - 1) ** n * q ** len(free)
    name = "B%d(F%d)" % (n, q)
    if zp:
        name += "/zero" + "".join("%d%d" % ij for ij in sorted(zp))
    G = Group(name, gens, multiply, invert, identity, order=order,
              gen_names=names)

    def evaluate(x):
        return Mat(F, [list(x[i * n:(i + 1) * n]) for i in range(n)])

    rep = Rep(G, F, [evaluate(g) for g in gens], evaluate=evaluate,
              name="std " + name)
    return G, rep


def diag_char(rep, l):
    """The l-th diagonal coordinate character (1-based) of an
    upper-triangular matrix group, as a 1-dimensional Rep."""
    G = rep.group
    n = rep.dim
    F = rep.field

    def evaluate(x):
        return Mat(F, [[rep.at(x).data[l - 1][l - 1]]])

    mats = [Mat(F, [[m.data[l - 1][l - 1]]]) for m in rep.matrices]
    return Rep(G, F, mats, evaluate=evaluate, name="chi%d" % l)


def semidirect_group(ell, p):
    """G_ell = (Z/ell) x| K, K = <p> inside (Z/ell)^x, acting by
    multiplication.  Elements are pairs (a, t)."""
    if not isprime(ell) or not isprime(p):
        raise ValueError("both arguments must be prime")
    if ell == p:
        raise ValueError("the two primes must differ")
    k = n_order(p, ell)
    pl = p % ell

    def multiply(x, y):
        (a, t), (b, u) = x, y
        return ((a + t * b) % ell, (t * u) % ell)

    def invert(x):
        a, t = x
        tinv = pow(t, -1, ell)
        return ((-tinv * a) % ell, tinv)

    # t-part discrete log table for word_of
    tlog = {}
    v = 1
    for j in range(k):
        tlog[v] = j
        v = (v * pl) % ell

    relations = [
        [(0, ell)],
        [(1, k)],
        [(1, 1), (0, 1), (1, -1), (0, -pl)],  # t a t^-1 = a^p
    ]
    G = Group("G_%d(p=%d)" % (ell, p), [(1, 1), (0, pl)],
              multiply, invert, (0, 1), order=ell * k,
              relations=relations,
              word_of=lambda x: [(0, x[0]), (1, tlog[x[1]])],
              gen_names=["a", "t"])
    G.ell = ell
    G.p = p
    G.k_order = k
    return G


def cyclic_group(m):
    "Z/m with elements 0..m-1."
    G = Group("Z/%d" % m, [1] if m > 1 else [],
              lambda x, y: (x + y) % m,
              lambda x: (-x) % m,
              0, order=m,
              relations=[[(0, m)]] if m > 1 else [],
              word_of=lambda x: [(0, x)] if m > 1 else [],
              gen_names=["a"] if m > 1 else [])
    return G


def trivial_group():
    return cyclic_group(1)


_product_cache = {}


def product_group(factors):
    "Direct product; elements are tuples, generators embedded per factor."
    key = tuple(id(g) for g in factors)
    if key in _product_cache:
        return _product_cache[key]
    idents = tuple(g.identity for g in factors)

    def multiply(x, y):
        return tuple(g.multiply(a, b) for g, a, b in zip(factors, x, y))

    def invert(x):
        return tuple(g.invert(a) for g, a in zip(factors, x))

    gens = []
    names = []
    for i, g in enumerate(factors):
        for j, h in enumerate(g.generators):
            e = list(idents)
            e[i] = h
            gens.append(tuple(e))
            names.append("%d.%s" % (i + 1, g.gen_names[j]))
    order = None
    if all(g.known_order is not None for g in factors):
        order = 1
        for g in factors:
            order *= g.known_order
    G = Group(" x ".join(g.name for g in factors), gens, multiply, invert,
              idents, order=order, gen_names=names)
    G.factors = list(factors)
    _product_cache[key] = G
    return G


def diagonal_hom(G, m):
    "The diagonal embedding G -> G^m."
    P = product_group([G] * m)
    return Hom(G, P, lambda g: (g,) * m)


# ---------------------------------------------------------------------
# functors
# ---------------------------------------------------------------------

def exterior_matrix(m, i):
    """Matrix of the i-th exterior power in the basis of lex-ordered
    i-subsets; entries are the i x i minors."""
    n = m.rows
    if not 0 <= i <= n:
        raise ValueError("exterior degree %d out of range for dim %d" % (i, n))
    subsets = list(combinations(range(n), i))
    F = m.field
    if i == 0:
        return Mat.identity(F, 1)
    out = Mat.zeros(F, len(subsets), len(subsets))
    for a, I in enumerate(subsets):
        for b, J in enumerate(subsets):
            out.data[a][b] = m.submatrix(I, J).det()
    return out


def exterior_power(rep, i):
    if not 0 <= i <= rep.dim:
        raise ValueError("exterior degree %d out of range for dim %d"
                         % (i, rep.dim))
    ev = None
    if rep.evaluate is not None or rep.group.word_of is not None:
        ev = lambda x: exterior_matrix(rep.at(x), i)
    return Rep(rep.group, rep.field,
               [exterior_matrix(m, i) for m in rep.matrices],
               evaluate=ev, name="L%d(%s)" % (i, rep.name), check=False)


def tensor(r1, r2):
    "Inner tensor product of two reps of the same group."
    if r1.group is not r2.group:
        raise ValueError("tensor needs a common group")
    if r1.field != r2.field:
        raise ValueError("field mismatch")
    ev = None
    if (r1.evaluate or r1.group.word_of) and (r2.evaluate or r2.group.word_of):
        ev = lambda x: r1.at(x).kron(r2.at(x))
    return Rep(r1.group, r1.field,
               [a.kron(b) for a, b in zip(r1.matrices, r2.matrices)],
               evaluate=ev, name="%s(x)%s" % (r1.name, r2.name), check=False)


def box(r1, r2):
    "Outer (box) product: a rep of the product group."
    if r1.field != r2.field:
        raise ValueError("field mismatch")
    P = product_group([r1.group, r2.group])
    i1 = Mat.identity(r1.field, r1.dim)
    i2 = Mat.identity(r2.field, r2.dim)
    mats = [m.kron(i2) for m in r1.matrices] + [i1.kron(m) for m in r2.matrices]
    ev = None
    if (r1.evaluate or r1.group.word_of) and (r2.evaluate or r2.group.word_of):
        ev = lambda x: r1.at(x[0]).kron(r2.at(x[1]))
    return Rep(P, r1.field, mats, evaluate=ev,
               name="%s(box)%s" % (r1.name, r2.name), check=False)


def box_many(reps):
    out = reps[0]
    for r in reps[1:]:
        # rebuild over the flat product group rather than nesting pairs
        out = _box_flat(out, r)
    return out


def _box_flat(r1, r2):
    gs1 = r1.group.factors if hasattr(r1.group, "factors") else [r1.group]
    gs2 = r2.group.factors if hasattr(r2.group, "factors") else [r2.group]
    P = product_group(gs1 + gs2)
    i1 = Mat.identity(r1.field, r1.dim)
    i2 = Mat.identity(r2.field, r2.dim)
    mats = [m.kron(i2) for m in r1.matrices] + [i1.kron(m) for m in r2.matrices]

    k1 = len(gs1)

    def ev(x):
        x1 = x[:k1] if k1 > 1 else x[0]
        x2 = x[k1:] if len(gs2) > 1 else x[k1]
        return r1.at(x1).kron(r2.at(x2))

    can_ev = (r1.evaluate or r1.group.word_of) and (r2.evaluate or r2.group.word_of)
    return Rep(P, r1.field, mats, evaluate=ev if can_ev else None,
               name="%s(box)%s" % (r1.name, r2.name), check=False)


def direct_sum(reps):
    "Block-diagonal sum of reps of one group over one field."
    g0, f0 = reps[0].group, reps[0].field
    if any(r.group is not g0 or r.field != f0 for r in reps):
        raise ValueError("direct sum needs a common group and field")
    dim = sum(r.dim for r in reps)
    mats = []
    for idx in range(len(g0.generators)):
        m = Mat.zeros(f0, dim, dim)
        off = 0
        for r in reps:
            blk = r.matrices[idx]
            for i in range(r.dim):
                for j in range(r.dim):
                    m.data[off + i][off + j] = blk.data[i][j]
            off += r.dim
        mats.append(m)
    ev = None
    if all(r.evaluate or r.group.word_of for r in reps):
        def ev(x):
            blocks = [r.at(x) for r in reps]
            m = Mat.zeros(f0, dim, dim)
            off = 0
            for b in blocks:
                for i in range(b.rows):
                    for j in range(b.rows):
                        m.data[off + i][off + j] = b.data[i][j]
                off += b.rows
            return m
    return Rep(g0, f0, mats, evaluate=ev,
               name="(+)".join(r.name for r in reps), check=False)


def dual(rep):
    "Contragredient: inverse transpose on every generator."
    ev = None
    if rep.evaluate is not None or rep.group.word_of is not None:
        ev = lambda x: rep.at(x).inverse().transpose()
    return Rep(rep.group, rep.field,
               [m.inverse().transpose() for m in rep.matrices],
               evaluate=ev, name="dual(%s)" % rep.name, check=False)


def twist(rep, c):
    "Tensor by a 1-dimensional rep of the same group."
    if c.dim != 1:
        raise ValueError("twist needs a 1-dimensional rep")
    return tensor(rep, c)


def restrict_along(rep, hom):
    "Pullback of a rep of the target along a homomorphism."
    if hom.target is not rep.group:
        raise ValueError("homomorphism target does not match the rep's group")
    mats = [rep.at(hom.apply(g)) for g in hom.source.generators]
    ev = lambda x: rep.at(hom.apply(x))
    return Rep(hom.source, rep.field, mats, evaluate=ev,
               name="res(%s)" % rep.name, check=False)


def lbar_tensor(rep):
    "Tensor over i of the i-th exterior powers, 1 <= i < dim."
    n = rep.dim
    if n < 2:
        raise ValueError("needs dimension >= 2")
    out = exterior_power(rep, 1)
    for i in range(2, n):
        out = tensor(out, exterior_power(rep, i))
    out.name = "Lbar_tensor(%s)" % rep.name
    return out


def lbar_box(rep):
    "Box product over i of the i-th exterior powers: a rep of G^(dim-1)."
    n = rep.dim
    if n < 2:
        raise ValueError("needs dimension >= 2")
    out = box_many([exterior_power(rep, i) for i in range(1, n)])
    out.name = "Lbar_box(%s)" % rep.name
    return out


def induce(group, in_subgroup, psi, transversal, field):
    """Monomial induction of a 1-dimensional character of a subgroup.

    `in_subgroup` is a membership predicate, `psi` maps subgroup
    elements to field unit codes, `transversal` lists left coset
    representatives.  The matrix of g has (i, j) entry
    psi(t_i^-1 g t_j) when that product lands in the subgroup.
    """
    d = len(transversal)
    inv = [group.invert(t) for t in transversal]

    def evaluate(g):
        m = Mat.zeros(field, d, d)
        for j, t in enumerate(transversal):
            gt = group.multiply(g, t)
            hit = False
            for i in range(d):
                s = group.multiply(inv[i], gt)
                if in_subgroup(s):
                    m.data[i][j] = psi(s)
                    hit = True
                    break
            if not hit:
                raise ValueError("transversal does not cover the group")
        return m

    mats = [evaluate(g) for g in group.generators]
    return Rep(group, field, mats, evaluate=evaluate,
               name="Ind(%s)" % group.name, check=False)


def enumerate_characters(group, field):
    """All 1-dimensional representations over the field, by exhausting
    unit-value assignments to the generators against the relation set."""
    if group.relations is None:
        raise ValueError("need a relation set to enumerate characters")
    k = len(group.generators)
    out = []

    def word_value(word, values):
        acc = 1
        for idx, e in word:
            acc = field.mul(acc, field.pow(values[idx], e))
        return acc

    def rec(values):
        if len(values) == k:
            if all(word_value(w, values) == 1 for w in group.relations):
                out.append(tuple(values))
            return
        for u in field.units():
            rec(values + [u])

    rec([])
    reps = []
    for vals in sorted(out):
        mats = [Mat(field, [[u]]) for u in vals]
        reps.append(Rep(group, field, mats, name="chi" + str(vals)))
    return reps


# ---------------------------------------------------------------------
# character data and genericity
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class CharData:
    """A smooth character encoded as (cyclotomic exponent a mod p-1,
    nonzero unramified value lam)."""
    a: int
    lam: int

    def __post_init__(self):
        if self.lam == 0:
            raise ValueError("unramified value must be nonzero")


def is_generic(chars, p):
    """True when no ratio of the three characters is trivial or a
    (de)twist by the cyclotomic character.  Degenerates for p = 2, where
    exponents mod p-1 collapse; callers should treat that case as flagged.
    """
    mod = max(p - 1, 1)
    bad = {0 % mod, 1 % mod, (-1) % mod}
    for i in range(len(chars)):
        for j in range(len(chars)):
            if i == j:
                continue
            ci, cj = chars[i], chars[j]
            if ci.lam == cj.lam and (ci.a - cj.a) % mod in bad:
                return False
    return True


# ---------------------------------------------------------------------
# representation files
# ---------------------------------------------------------------------

def external_group(k):
    "Placeholder group for reps loaded from files: k generators, no ops."
    def unsupported(*_):
        raise NotImplementedError("external group has no element operations")
    return Group("external", list(range(k)), unsupported, unsupported, -1)


def rep_to_dict(rep, group_info=None):
    return {
        "schema": 1,
        "field": {"p": rep.field.p, "r": rep.field.r,
                  "modulus": list(rep.field.modulus)},
        "group": group_info or {"name": rep.group.name,
                                "generators": len(rep.group.generators)},
        "dim": rep.dim,
        "generators": [[row[:] for row in m.data] for m in rep.matrices],
    }


def rep_from_dict(d):
    f = d["field"]
    if f["r"] == 1:
        F = make_field(f["p"])
    else:
        F = FiniteFieldFromModulus(f["p"], f["r"], tuple(f["modulus"]))
    mats = [Mat(F, rows) for rows in d["generators"]]
    G = external_group(len(mats))
    return Rep(G, F, mats, name=d.get("group", {}).get("name", "external"),
               check=False)


def FiniteFieldFromModulus(p, r, modulus):
    F = make_field(p, r)
    if tuple(F.modulus) == tuple(modulus):
        return F
    from .ffla import FiniteField
    return FiniteField(p, r, modulus)


def save_rep(rep, path):
    with open(path, "w") as fh:
        json.dump(rep_to_dict(rep), fh, indent=1, sort_keys=True)


def load_rep(path):
    with open(path) as fh:
        return rep_from_dict(json.load(fh))
