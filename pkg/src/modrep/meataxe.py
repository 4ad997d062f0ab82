"""MeatAxe-style structural analysis of finite-dimensional modules.

A module is a Rep: generator matrices over a finite field.  This module
provides irreducibility testing with Norton certificates, composition
series, intertwiner spaces, socle/radical (Loewy) series, and a
brute-force invariant-subspace oracle for small modules.

Submodules are carried around as lists of row vectors in reduced row
echelon form; "vectors" are column vectors of the module.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .ffla import Mat, char_poly, poly_deg, poly_factor, poly_of_matrix
from .grouprep import Rep

MAX_WORD_LEN = 12
# exhaustive vector spin is used below this many projective points
EXHAUST_POINTS = 4000


@dataclass
class SeriesReport:
    """Composition factors plus Loewy data.

    factors: list of (dim, label, multiplicity), in order of first
    appearance bottom-up.  factor_sequence: the bottom-up factor labels
    of one composition series.  socle_series: graded dimensions bottom
    up; radical_series: graded dimensions top down.
    """
    factors: list
    factor_sequence: list
    socle_series: list = dc_field(default_factory=list)
    radical_series: list = dc_field(default_factory=list)
    socle_layers: list = dc_field(default_factory=list)
    loewy_length: int = 0

    def dim(self):
        return sum(d * m for d, _, m in self.factors)


# ---------------------------------------------------------------------
# subspace plumbing
# ---------------------------------------------------------------------

def rref_rows(field, rows):
    "Reduced echelon basis (nonzero rows) of the span of the given rows."
    if not rows:
        return []
    R, rank, _ = Mat(field, rows).rref()
    return [row[:] for row in R.data[:rank]]


def _pivots(rows):
    return [next(i for i, c in enumerate(row) if c) for row in rows]


def reduce_vector(field, rows, pivots, v):
    "Residue of v modulo the rref row space."
    v = list(v)
    sub, mul = field.sub, field.mul
    for row, piv in zip(rows, pivots):
        c = v[piv]
        if c:
            for i, r in enumerate(row):
                if r:
                    v[i] = sub(v[i], mul(c, r))
    return v


def in_span(field, rows, pivots, v):
    return not any(reduce_vector(field, rows, pivots, v))


def spin(field, mats, vectors):
    """Smallest invariant subspace containing the vectors, as rref rows."""
    basis = []
    pivots = []
    frontier = []
    inv = field.inv
    mul = field.mul

    def insert(v):
        v = reduce_vector(field, basis, pivots, v)
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            return False
        c = inv(v[piv])
        v = [mul(c, x) for x in v]
        basis.append(v)
        pivots.append(piv)
        frontier.append(v)
        return True

    for v in vectors:
        insert(v)
    while frontier:
        v = frontier.pop()
        for m in mats:
            insert(m.apply(v))
    return rref_rows(field, basis)


def restrict_mats(field, mats, basis):
    "Action matrices on an invariant subspace, in the given rref basis."
    pivots = _pivots(basis)
    out = []
    for m in mats:
        cols = []
        for b in basis:
            w = m.apply(b)
            coords = [w[p] for p in pivots]
            if any(reduce_vector(field, basis, pivots, w)):
                raise ValueError("subspace is not invariant")
            cols.append(coords)
        out.append(Mat(field, [[cols[j][i] for j in range(len(basis))]
                               for i in range(len(basis))]))
    return out


def quotient_mats(field, mats, basis):
    "Action matrices on the quotient by an invariant rref subspace."
    n = mats[0].cols
    pivots = _pivots(basis)
    free = [j for j in range(n) if j not in set(pivots)]
    out = []
    for m in mats:
        cols = []
        for j in free:
            e = [0] * n
            e[j] = 1
            w = reduce_vector(field, basis, pivots, m.apply(e))
            cols.append([w[i] for i in free])
        out.append(Mat(field, [[cols[j][i] for j in range(len(free))]
                               for i in range(len(free))]))
    return out


def perp_subspace(field, rows):
    "Orthogonal complement (right kernel of the row matrix), as rref rows."
    k = Mat(field, rows).kernel()
    vectors = [[k.data[i][c] for i in range(k.rows)] for c in range(k.cols)]
    return rref_rows(field, vectors)


# ---------------------------------------------------------------------
# irreducibility
# ---------------------------------------------------------------------

def _random_algebra_element(field, mats, rng):
    "Random element of the enveloping algebra: a short sum of random words."
    d = mats[0].rows
    acc = Mat.zeros(field, d, d)
    for _ in range(rng.randint(1, 3)):
        w = mats[rng.randrange(len(mats))]
        for _ in range(rng.randint(0, MAX_WORD_LEN - 1)):
            w = w * mats[rng.randrange(len(mats))]
        acc = acc + w.scale(field.random_unit(rng))
    return acc


def _projective_vectors(field, dim):
    "One vector per projective point (first nonzero coordinate = 1)."
    q = field.q
    for lead in range(dim):
        tail = dim - lead - 1
        for code in range(q ** tail):
            v = [0] * lead + [1]
            c = code
            for _ in range(tail):
                v.append(c % q)
                c //= q
            yield v


def is_irreducible(rep, seed=0, max_tries=80):
    """Irreducibility test.

    Returns (True, certificate) or (False, witness) where the witness
    contains an `invariant_subspace` (rref rows of a proper nonzero
    invariant subspace).  The certificate records a random algebra
    element A and an irreducible factor f of its characteristic
    polynomial with nullity(f(A)) = deg f, for which the one-vector
    Norton criterion applies: a kernel vector of f(A) spins to the whole
    module, as does a kernel vector of f(A)^T under the transposed
    action.
    """
    F = rep.field
    d = rep.dim
    mats = rep.matrices
    if d == 1:
        return True, {"certificate": "one-dimensional"}
    rng = random.Random("irr:%s:%d" % (seed, d))
    tmats = None
    for attempt in range(max_tries):
        A = _random_algebra_element(F, mats, rng)
        cp = char_poly(A)
        for f, _ in poly_factor(F, cp, seed=seed):
            fA = poly_of_matrix(f, A)
            K = fA.kernel()
            if K.cols == 0:
                continue
            for c in range(K.cols):
                v = [K.data[i][c] for i in range(d)]
                W = spin(F, mats, [v])
                if len(W) < d:
                    return False, {"invariant_subspace": W}
            if K.cols == poly_deg(f):
                if tmats is None:
                    tmats = [m.transpose() for m in mats]
                Kt = poly_of_matrix(f, A.transpose()).kernel()
                w = [Kt.data[i][0] for i in range(d)]
                Wt = spin(F, tmats, [w])
                if len(Wt) < d:
                    return False, {"invariant_subspace": perp_subspace(F, Wt)}
                return True, {"certificate": {
                    "attempt": attempt,
                    "factor": f,
                    "nullity": K.cols,
                }}
    # deterministic fallback: spin every projective point
    points = (F.q ** d - 1) // (F.q - 1)
    if points <= EXHAUST_POINTS:
        for v in _projective_vectors(F, d):
            W = spin(F, mats, [v])
            if len(W) < d:
                return False, {"invariant_subspace": W}
        return True, {"certificate": "exhaustive"}
    raise RuntimeError("meataxe failed to decide irreducibility "
                       "(dim %d over %r)" % (d, F))


# ---------------------------------------------------------------------
# composition series
# ---------------------------------------------------------------------

def _subquotient_rep(rep, mats):
    return Rep(rep.group, rep.field, mats, check=False,
               name="%s[%d]" % (rep.name, mats[0].rows if mats else 0))


def composition_factors(rep, seed=0):
    "Bottom-up list of irreducible subquotient Reps."
    out = []

    def split(mats, depth):
        r = _subquotient_rep(rep, mats)
        irr, wit = is_irreducible(r, seed="%s:%d" % (seed, depth))
        if irr:
            out.append(r)
            return
        basis = wit["invariant_subspace"]
        split(restrict_mats(rep.field, mats, basis), depth + 1)
        split(quotient_mats(rep.field, mats, basis), depth + 2)

    split(rep.matrices, 0)
    return out


def hom_space(r1, r2):
    """Basis of intertwiners X with X r1(g) = r2(g) X on every generator.

    X maps the module of r1 into that of r2; matrices are d2 x d1.
    """
    if r1.field != r2.field:
        raise ValueError("field mismatch")
    if len(r1.matrices) != len(r2.matrices):
        raise ValueError("generator count mismatch")
    F = r1.field
    d1, d2 = r1.dim, r2.dim
    nunk = d1 * d2
    rows = []
    for A, B in zip(r1.matrices, r2.matrices):
        # equation (i, j):  sum_k X[i,k] A[k,j] - sum_k B[i,k] X[k,j] = 0
        for i in range(d2):
            for j in range(d1):
                row = [0] * nunk
                for k in range(d1):
                    a = A.data[k][j]
                    if a:
                        row[i * d1 + k] = F.add(row[i * d1 + k], a)
                for k in range(d2):
                    b = B.data[i][k]
                    if b:
                        idx = k * d1 + j
                        row[idx] = F.sub(row[idx], b)
                rows.append(row)
    ker = Mat(F, rows).kernel() if rows else Mat.identity(F, nunk)
    out = []
    for c in range(ker.cols):
        X = Mat(F, [[ker.data[i * d1 + j][c] for j in range(d1)]
                    for i in range(d2)])
        out.append(X)
    return out


class IsoRegistry:
    """Assigns stable labels to irreducible iso-classes.

    A cheap trace fingerprint buckets candidates; a nonzero intertwiner
    (conclusive by Schur) confirms the match.
    """

    def __init__(self):
        self.classes = []  # (label, rep, fingerprint)

    @staticmethod
    def fingerprint(rep):
        traces = [m.trace() for m in rep.matrices]
        traces += [(a * b).trace() for a in rep.matrices for b in rep.matrices]
        if rep.dim == 1:
            traces += list(rep.char_tuple())
        return (rep.dim, tuple(traces))

    def label(self, rep):
        fp = self.fingerprint(rep)
        for lbl, cand, cfp in self.classes:
            if cfp == fp and hom_space(rep, cand):
                return lbl
        lbl = "%d%s" % (rep.dim, chr(ord("a") + len(self.classes)))
        self.classes.append((lbl, rep, fp))
        return lbl

    def representative(self, label):
        for lbl, cand, _ in self.classes:
            if lbl == label:
                return cand
        raise KeyError(label)


def composition_series(rep, seed=0, registry=None):
    "SeriesReport with the factors part filled in (bottom-up order)."
    registry = registry if registry is not None else IsoRegistry()
    seq = []
    for f in composition_factors(rep, seed):
        seq.append((f.dim, registry.label(f)))
    factors = []
    seen = {}
    for d, lbl in seq:
        if lbl in seen:
            factors[seen[lbl]] = (d, lbl, factors[seen[lbl]][2] + 1)
        else:
            seen[lbl] = len(factors)
            factors.append((d, lbl, 1))
    report = SeriesReport(factors=factors, factor_sequence=seq)
    report._registry = registry
    return report


# ---------------------------------------------------------------------
# socle / radical series
# ---------------------------------------------------------------------

def _socle_grades(rep, class_reps, seed):
    "Graded socle dims bottom-up, plus per-layer class multiplicities."
    F = rep.field
    mats = rep.matrices
    grades = []
    layers = []
    while mats and mats[0].rows > 0:
        cur = _subquotient_rep(rep, mats)
        soc_rows = []
        layer = {}
        for lbl, S in class_reps:
            homs = hom_space(S, cur)
            if homs:
                layer[lbl] = len(homs)
            for X in homs:
                for c in range(X.cols):
                    soc_rows.append([X.data[i][c] for i in range(X.rows)])
        basis = rref_rows(F, soc_rows)
        if not basis:
            raise RuntimeError("socle computation found no socle; "
                               "missing iso-classes?")
        grades.append(len(basis))
        layers.append(layer)
        if len(basis) == mats[0].rows:
            break
        mats = quotient_mats(F, mats, basis)
    return grades, layers


def socle_series(rep, seed=0):
    """Full SeriesReport: factors, socle series (bottom-up), radical
    series (top-down, via the dual module), layer contents, Loewy length.
    """
    from .grouprep import dual as dual_rep

    report = composition_series(rep, seed)
    registry = report._registry
    class_reps = [(lbl, registry.representative(lbl))
                  for _, lbl, _ in report.factors]
    grades, layers = _socle_grades(rep, class_reps, seed)

    drep = dual_rep(rep)
    dreport = composition_series(drep, seed)
    dregistry = dreport._registry
    dclass_reps = [(lbl, dregistry.representative(lbl))
                   for _, lbl, _ in dreport.factors]
    dgrades, _ = _socle_grades(drep, dclass_reps, seed)

    if len(dgrades) != len(grades) or sum(dgrades) != sum(grades):
        raise RuntimeError("socle/radical series disagree: %r vs %r"
                           % (grades, dgrades))
    report.socle_series = grades
    report.radical_series = list(dgrades)  # top-down by construction
    report.socle_layers = layers
    report.loewy_length = len(grades)
    return report


def loewy_convolution(v, w):
    "Graded dims of an outer product from the factors' graded dims."
    if not v or not w or min(v) <= 0 or min(w) <= 0:
        raise ValueError("graded dimension vectors must be positive")
    out = [0] * (len(v) + len(w) - 1)
    for i, a in enumerate(v):
        for j, b in enumerate(w):
            out[i + j] += a * b
    return out


# ---------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------

def all_subspaces(field, dim):
    "Every subspace of F^dim as rref rows.  Only sensible for tiny q^dim."
    from itertools import combinations

    q = field.q
    out = [[]]
    for k in range(1, dim + 1):
        for pivots in combinations(range(dim), k):
            free_positions = []
            for i, p in enumerate(pivots):
                for j in range(p + 1, dim):
                    if j not in pivots:
                        free_positions.append((i, j))
            for code in range(q ** len(free_positions)):
                rows = [[0] * dim for _ in range(k)]
                for i, p in enumerate(pivots):
                    rows[i][p] = 1
                c = code
                for (i, j) in free_positions:
                    rows[i][j] = c % q
                    c //= q
                out.append(rows)
    return out


def invariant_subspaces(rep):
    "All invariant subspaces (as rref rows), via exhaustive enumeration."
    F = rep.field
    out = []
    for rows in all_subspaces(F, rep.dim):
        if not rows:
            out.append(rows)
            continue
        pivots = _pivots(rows)
        ok = True
        for m in rep.matrices:
            for v in rows:
                if any(reduce_vector(F, rows, pivots, m.apply(v))):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(rows)
    return out


def brute_composition_factors(rep):
    """Composition factors by exhaustive invariant-subspace enumeration:
    repeatedly strip a minimal nonzero invariant subspace."""
    F = rep.field
    out = []

    def rec(mats):
        if not mats or mats[0].rows == 0:
            return
        cur = _subquotient_rep(rep, mats)
        invs = [s for s in invariant_subspaces(cur) if s]
        minimal = min(invs, key=len)
        out.append(_subquotient_rep(rep, restrict_mats(F, mats, minimal)))
        if len(minimal) < mats[0].rows:
            rec(quotient_mats(F, mats, minimal))

    rec(rep.matrices)
    return out
