"""Exact integral symplectic action on first homology.

The meridians and the chain connectors together span the full first homology
lattice (their intersection Gram matrix reduces to the standard form with a
rank-two radical from one relation in each family).  A symplectic basis is
extracted by integer Gram reduction; classes of arbitrary curves are read off
from signed crossing numbers against the reference curves.  Matrices are
plain integer row-lists with a multiplier flag: +1 for symplectic images,
-1 for anti-symplectic ones (orientation-reversing classes).
"""

from fractions import Fraction

from .drawings import (build_arrangement, respace_components, map_drawing,
                       Drawing, _cross, _sub)
from .words import MappingWord, WordError


def fast_signed_intersection(d1, d2):
    """Algebraic intersection number of two oriented drawings."""
    cx = d1.cx
    comps = [c.copy() for c in d1.components] + [c.copy() for c in d2.components]
    n1 = len(d1.components)
    respace_components(comps)
    arr = build_arrangement(cx, comps)
    return arr.signed_between(set(range(n1)), set(range(n1, len(comps))))


# ----------------------------------------------------------------------
# integer matrices with a symplectic-multiplier flag


class SpMatrix(object):
    """Square integer matrix with multiplier flag under the standard form."""

    def __init__(self, rows, multiplier=1):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self.multiplier = multiplier
        self.dim = len(self.rows)

    @classmethod
    def identity(cls, dim):
        return cls([[1 if i == j else 0 for j in range(dim)]
                    for i in range(dim)], 1)

    def __mul__(self, other):
        assert self.dim == other.dim
        bcols = list(zip(*other.rows))
        rows = [[sum(x * y for x, y in zip(ra, bc)) for bc in bcols]
                for ra in self.rows]
        return SpMatrix(rows, self.multiplier * other.multiplier)

    def __eq__(self, other):
        return (isinstance(other, SpMatrix) and self.rows == other.rows
                and self.multiplier == other.multiplier)

    def __hash__(self):
        return hash((self.rows, self.multiplier))

    def is_identity(self):
        n = self.dim
        return all(self.rows[i][j] == (1 if i == j else 0)
                   for i in range(n) for j in range(n))

    def transpose(self):
        return SpMatrix(list(zip(*self.rows)), self.multiplier)

    def apply(self, vec):
        return tuple(sum(r[k] * vec[k] for k in range(self.dim))
                     for r in self.rows)

    def inverse(self):
        """Inverse using the symplectic relation M^T J M = eps J."""
        n = self.dim
        J = standard_form(n)
        # M^{-1} = -eps * J * M^T * J   (since J^2 = -I)
        Jm = SpMatrix(J, 1)
        inv = Jm * self.transpose() * Jm
        rows = [[-self.multiplier * inv.rows[i][j] for j in range(n)]
                for i in range(n)]
        return SpMatrix(rows, self.multiplier)

    def to_json(self):
        return {"multiplier": self.multiplier,
                "rows": [[str(x) for x in row] for row in self.rows]}


def standard_form(dim):
    """Block-diagonal J with pairs (x_i, y_i): <x_i, y_i> = 1."""
    J = [[0] * dim for _ in range(dim)]
    for i in range(0, dim, 2):
        J[i][i + 1] = 1
        J[i + 1][i] = -1
    return J


def check_symplectic(M):
    """Multiplier eps with M^T J M = eps J, or None if neither holds."""
    n = M.dim
    J = SpMatrix(standard_form(n), 1)
    prod = M.transpose() * J * M
    for eps in (1, -1):
        if all(prod.rows[i][j] == eps * J.rows[i][j]
               for i in range(n) for j in range(n)):
            return eps
    return None


def element_order(M, bound=None):
    """Least k >= 1 with M^k = 1, or the string "exceeds-bound"."""
    if bound is None:
        bound = 6 * M.dim + 12
    acc = M
    for k in range(1, bound + 1):
        if acc.is_identity() and acc.multiplier == 1:
            return k
        acc = acc * M
    return "exceeds-bound"


# ----------------------------------------------------------------------
# homology data of a model


class HomologyData(object):
    """Symplectic basis, curve classes and induced matrices for one model."""

    def __init__(self, model):
        self.model = model
        g = model.genus
        n = g + 1
        self.dim = 2 * g
        self._ref_keys = ([("B", i) for i in range(1, n + 1)]
                          + [self._chain_key(j) for j in range(n)])
        self._refs = [model.curves[k] for k in self._ref_keys]
        gram = self._gram()
        self._basis_combo = self._symplectic_reduce(gram)
        self._check_basis(gram)
        self._class_cache = {}
        self._twist_cache = {}
        self._sym_cache = {}

    def _chain_key(self, j):
        g = self.model.genus
        if j == g:
            return ("A", 1)
        if j == g - 1:
            return ("A", "g")
        return ("C", j + 1)

    def _gram(self):
        refs = self._refs
        m = len(refs)
        gram = [[0] * m for _ in range(m)]
        for i in range(m):
            for j in range(i + 1, m):
                v = fast_signed_intersection(refs[i], refs[j])
                gram[i][j] = v
                gram[j][i] = -v
        return gram

    def _symplectic_reduce(self, gram):
        """Integer combos of references forming a standard symplectic basis."""
        m = len(gram)

        def pair(u, v):
            return sum(u[i] * sum(gram[i][j] * v[j] for j in range(m))
                       for i in range(m))

        vecs = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
        basis = []
        while True:
            best = None
            for a in range(len(vecs)):
                for b in range(a + 1, len(vecs)):
                    p = pair(vecs[a], vecs[b])
                    if p and (best is None or abs(p) < abs(best[2])):
                        best = (a, b, p)
            if best is None:
                break
            a, b, p = best
            u, v = vecs[a], vecs[b]
            if p < 0:
                v = [-x for x in v]
                p = -p
            # reduce the pairing to 1 with gcd steps against the other vectors
            while p != 1:
                progressed = False
                for w in vecs:
                    q = pair(u, w)
                    if q % p:
                        v = [wi - (q // p) * vi for wi, vi in zip(w, v)]
                        p = pair(u, v)   # equals q % p, in (0, p)
                        progressed = True
                        break
                if not progressed:
                    raise AssertionError("form not unimodular on span")
            x, y = u, v
            basis.append(x)
            basis.append(y)
            rest = []
            for k, w in enumerate(vecs):
                if k in (a, b):
                    continue
                wy = pair(w, y)
                wx = pair(w, x)
                w2 = [wi - wy * xi + wx * yi for wi, xi, yi in zip(w, x, y)]
                rest.append(w2)
            vecs = rest
        if len(basis) != self.dim:
            raise AssertionError("homology rank mismatch: %d pairs"
                                 % (len(basis) // 2,))
        return basis

    def _check_basis(self, gram):
        m = len(gram)

        def pair(u, v):
            return sum(u[i] * sum(gram[i][j] * v[j] for j in range(m))
                       for i in range(m))

        J = standard_form(self.dim)
        for a in range(self.dim):
            for b in range(self.dim):
                if pair(self._basis_combo[a], self._basis_combo[b]) != J[a][b]:
                    raise AssertionError("basis reduction failed")

    # -- classes ---------------------------------------------------------

    def class_of_drawing(self, drawing):
        """Class in basis coordinates: alpha_i = <c,y_i>, beta_i = -<c,x_i>."""
        r = [fast_signed_intersection(drawing, ref) for ref in self._refs]
        m = len(r)
        # pairings[k] = <c, basis_k>
        pairings = [sum(combo[i] * r[i] for i in range(m))
                    for combo in self._basis_combo]
        out = [0] * self.dim
        for i in range(0, self.dim, 2):
            out[i] = pairings[i + 1]        # <c, y_i>
            out[i + 1] = -pairings[i]       # -<c, x_i>
        return tuple(out)

    def class_of_key(self, key):
        if key not in self._class_cache:
            self._class_cache[key] = self.class_of_drawing(
                self.model.curves[key])
        return self._class_cache[key]

    def pair_classes(self, u, v):
        total = 0
        for i in range(0, self.dim, 2):
            total += u[i] * v[i + 1] - u[i + 1] * v[i]
        return total

    # -- matrices ---------------------------------------------------------

    def twist_matrix(self, key, power=1):
        """Transvection v -> v + power * <v,c> c about the named curve."""
        if (key, power) in self._twist_cache:
            return self._twist_cache[(key, power)]
        c = self.class_of_key(key)
        n = self.dim
        J = standard_form(n)
        Jc = [sum(J[a][b] * c[b] for b in range(n)) for a in range(n)]
        rows = [[(1 if a == b else 0) + power * c[a] * Jc[b]
                 for b in range(n)] for a in range(n)]
        M = SpMatrix(rows, 1)
        self._twist_cache[(key, power)] = M
        return M

    def symmetry_matrix(self, name):
        """Induced map of the rotation, reflection, or their composition."""
        if name in self._sym_cache:
            return self._sym_cache[name]
        if name == "T":
            M = self.symmetry_matrix("S") * self.symmetry_matrix("R")
            self._sym_cache["T"] = M
            return M
        auto = self.model.rot if name == "S" else self.model.refl
        # classes of the mapped reference drawings
        img = [self.class_of_drawing(map_drawing(auto, ref))
               for ref in self._refs]
        m = len(self._refs)
        cols = []
        for combo in self._basis_combo:
            vec = [0] * self.dim
            for i in range(m):
                if combo[i]:
                    for a in range(self.dim):
                        vec[a] += combo[i] * img[i][a]
            cols.append(vec)
        rows = [[cols[b][a] for b in range(self.dim)]
                for a in range(self.dim)]
        mult = 1 if auto.preserves_orientation else -1
        M = SpMatrix(rows, mult)
        eps = check_symplectic(M)
        if eps != mult:
            raise AssertionError("symmetry matrix has wrong multiplier")
        self._sym_cache[name] = M
        return M

    # -- words -------------------------------------------------------------

    def word_matrix(self, word):
        """Matrix of a mapping word (leftmost letter applied last)."""
        if isinstance(word, str):
            word = MappingWord.parse(word)
        M = SpMatrix.identity(self.dim)
        for kind, index, step in word.atoms():
            if kind in ("S", "R", "T"):
                base = self.symmetry_matrix(kind)
                letter = base if step > 0 else base.inverse()
            else:
                idx = index.resolve(self.model.genus) if index is not None \
                    else None
                key = self.model.resolve(kind, idx)
                letter = self.twist_matrix(key, step)
            M = M * letter
        return M


_HOM_CACHE = {}


def homology_of(model):
    key = id(model)
    if key not in _HOM_CACHE:
        _HOM_CACHE[key] = HomologyData(model)
    return _HOM_CACHE[key]


def lemma_order_transfer(hom, rw, xw, yw, bound=None):
    """Order transfer along a conjugation: returns (hypothesis_ok, k).

    Verifies W(rw) W(xw) W(rw)^-1 == W(yw) exactly; when it holds, computes
    k = order(W(rw)) and checks order(W(rw * xw * yw^-1)) == k, raising if the
    transfer fails (it cannot, but it is checked, not assumed).
    """
    if isinstance(rw, str):
        rw = MappingWord.parse(rw)
    if isinstance(xw, str):
        xw = MappingWord.parse(xw)
    if isinstance(yw, str):
        yw = MappingWord.parse(yw)
    R = hom.word_matrix(rw)
    X = hom.word_matrix(xw)
    Y = hom.word_matrix(yw)
    if R * X * R.inverse() != Y:
        return (False, None)
    k = element_order(R, bound)
    if k == "exceeds-bound":
        return (True, "exceeds-bound")
    W = hom.word_matrix(rw * xw * yw.inverse())
    k2 = element_order(W, bound)
    if k2 != k:
        raise AssertionError("order transfer violated: %r vs %r" % (k, k2))
    return (True, k)
