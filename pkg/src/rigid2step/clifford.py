"""Representations of Cl(r,s), admissible forms and pseudo H-type algebras.

Convention: Cl(r,s) has generators J_1..J_{r+s} with
J_iJ_j + J_jJ_i = -2 eta_ij Id and eta = diag(+1^r, -1^s), so the first r
generators square to -Id and the last s to +Id.

Every module built here is a signed-permutation module: each generator maps
basis vectors to basis vectors up to sign. The internal :class:`SignedPerm`
keeps that structure so that dimension-256 modules stay cheap.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from . import linalg as la
from .lie import Graded2Step, Metric, MTypeAlgebra
from .poly import Poly, ResourceExhausted, _det_poly

__all__ = [
    "SignedPerm", "CliffordRep", "InvolutionSet", "irreducible_dim",
    "build_generators", "admissible_form", "minimal_admissible", "build_htype",
    "involution_set", "clifford_relations_hold", "is_admissible", "eta",
    "TABLE1", "table1_grid", "DEFAULT_QUADRUPLES", "EIGEN_COLUMNS_34",
    "SIGN_PATTERNS", "TABLE2_34", "table3_check", "pair_closure_check",
]

MAX_RS = 8


# -- signed permutations ----------------------------------------------------

@dataclass(frozen=True)
class SignedPerm:
    """The matrix with J e_c = sign[c] e_{perm[c]}."""

    perm: tuple
    sign: tuple

    @property
    def dim(self):
        return len(self.perm)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def from_dense(cls, M):
        n = len(M)
        perm = [None] * n
        sign = [0] * n
        for c in range(n):
            nz = [(r, M[r][c]) for r in range(n) if M[r][c]]
            if len(nz) != 1 or nz[0][1] not in (1, -1):
                return None
            perm[c], sign[c] = nz[0]
        if sorted(perm) != list(range(n)):
            return None
        return cls(tuple(perm), tuple(sign))

    def __matmul__(self, other):
        # (A B) e_c = sB[c] sA[pB[c]] e_{pA[pB[c]]}
        p = tuple(self.perm[other.perm[c]] for c in range(other.dim))
        s = tuple(other.sign[c] * self.sign[other.perm[c]] for c in range(other.dim))
        return SignedPerm(p, s)

    def __neg__(self):
        return SignedPerm(self.perm, tuple(-x for x in self.sign))

    def kron(self, other):
        b = other.dim
        perm, sign = [], []
        for i in range(self.dim):
            for j in range(b):
                perm.append(self.perm[i] * b + other.perm[j])
                sign.append(self.sign[i] * other.sign[j])
        return SignedPerm(tuple(perm), tuple(sign))

    def apply(self, v):
        out = [0] * self.dim
        for c, x in enumerate(v):
            if x:
                out[self.perm[c]] += self.sign[c] * x
        return out

    def dense(self):
        n = self.dim
        M = [[0] * n for _ in range(n)]
        for c in range(n):
            M[self.perm[c]][c] = self.sign[c]
        return tuple(tuple(r) for r in M)

    def to_numpy(self):
        n = self.dim
        M = np.zeros((n, n), dtype=np.int64)
        M[list(self.perm), list(range(n))] = self.sign
        return M

    def is_scalar(self, c):
        return self.perm == tuple(range(self.dim)) and all(x == c for x in self.sign)


def _direct_sum(a, b):
    off = a.dim
    return SignedPerm(a.perm + tuple(p + off for p in b.perm), a.sign + b.sign)


def eta(r, s):
    return (1,) * r + (-1,) * s


def _check_rs(r, s):
    if not (0 <= r <= MAX_RS and 0 <= s <= MAX_RS):
        raise ValueError(f"(r, s) = ({r}, {s}) outside the supported range 0..{MAX_RS}")


# -- classification ---------------------------------------------------------

def irreducible_dim(r, s):
    """Dimension of an irreducible real Cl(r,s)-module and whether two classes exist.

    Uses the classical identification of Cl(r,s) with a matrix algebra over
    R, C, H or a double copy, which depends only on (s - r) mod 8 in our
    sign convention.
    """
    _check_rs(r, s)
    n = r + s
    key = (s - r) % 8
    if key in (0, 2):  # M(R)
        d = 2 ** (n // 2)
    elif key == 1:  # M(R) + M(R)
        d = 2 ** ((n - 1) // 2)
    elif key in (3, 7):  # M(C)
        d = 2 ** ((n + 1) // 2)
    elif key in (4, 6):  # M(H)
        d = 2 ** (n // 2 + 1)
    else:  # key 5, M(H) + M(H)
        d = 2 ** ((n + 1) // 2)
    return d, (r - s) % 4 == 3


# -- generator construction -------------------------------------------------

_JP = SignedPerm((1, 0), (1, -1))    # [[0,-1],[1,0]], square -Id
_JM = SignedPerm((1, 0), (1, 1))     # [[0,1],[1,0]], square +Id
_OMEGA11 = _JP @ _JM                 # diag(-1, 1)
# Cl(2,0) on the quaternions (left multiplication by i and j)
_Q_I = SignedPerm.from_dense(((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, -1), (0, 0, 1, 0)))
_Q_J = SignedPerm.from_dense(((0, 0, -1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, -1, 0, 0)))
# Cl(0,2) on R^2
_E1 = SignedPerm((1, 0), (1, 1))
_E2 = SignedPerm((0, 1), (1, -1))


@lru_cache(maxsize=None)
def _tensor_default(r, s):
    """Faithful signed-permutation Cl(r,s)-module from the fixed recursions."""
    if (r, s) == (0, 0):
        return ()
    if (r, s) == (1, 0):
        return (_JP,)
    if (r, s) == (0, 1):
        return (_JM,)
    if r >= 1 and s >= 1:
        A = _tensor_default(r - 1, s - 1)
        d = A[0].dim if A else 1
        I = SignedPerm.identity(d)
        neg = [a.kron(_OMEGA11) for a in A[:r - 1]]
        pos = [a.kron(_OMEGA11) for a in A[r - 1:]]
        return tuple(neg + [I.kron(_JP)] + pos + [I.kron(_JM)])
    if r >= 2:
        # Cl(r,0) from Cl(0,r-2) (x) Cl(2,0)
        A = _tensor_default(0, r - 2)
        d = A[0].dim if A else 1
        I = SignedPerm.identity(d)
        w = _Q_I @ _Q_J
        return tuple([a.kron(w) for a in A] + [I.kron(_Q_I), I.kron(_Q_J)])
    # Cl(0,s) from Cl(s-2,0) (x) Cl(0,2)
    A = _tensor_default(s - 2, 0)
    d = A[0].dim if A else 1
    I = SignedPerm.identity(d)
    w = _E1 @ _E2
    return tuple([a.kron(w) for a in A] + [I.kron(_E1), I.kron(_E2)])


def _monomial(gens, mask):
    out = SignedPerm.identity(gens[0].dim)
    for i, g in enumerate(gens):
        if mask >> i & 1:
            out = out @ g
    return out


def _mono_square_sign(mask, etas):
    k = bin(mask).count("1")
    s = -1 if (k * (k - 1) // 2) % 2 else 1
    for i, e in enumerate(etas):
        if mask >> i & 1:
            s *= -e
    return s


def _mono_commute(a, b):
    ka, kb = bin(a).count("1"), bin(b).count("1")
    kab = bin(a & b).count("1")
    return (ka * kb - kab) % 2 == 0


def _gf2_independent(masks, new):
    basis = {}
    for m in list(masks) + [new]:
        v = m
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                break
        else:
            if m == new:
                return False
    return True


def _commuting_involutions(n, etas, need, seed_masks):
    """Depth-first search for ``need`` independent commuting monomial involutions."""
    cands = [m for m in range(1, 1 << n) if _mono_square_sign(m, etas) == 1]
    cands.sort(key=lambda m: (bin(m).count("1"), m))

    def dfs(chosen, start):
        if len(chosen) == need:
            return chosen
        for idx in range(start, len(cands)):
            m = cands[idx]
            if all(_mono_commute(m, c) for c in chosen) and _gf2_independent(chosen, m):
                res = dfs(chosen + [m], idx + 1)
                if res is not None:
                    return res
        return None

    return dfs(list(seed_masks), 0)


def _extract_irreducible(gens, etas, d, omega_mask=None):
    """Cut an irreducible submodule out of a signed-permutation module.

    A primitive idempotent f = prod (1 + J_I)/2 over commuting involutions is
    applied to a basis vector; the orbit of f e_a under the monomials, taken
    up to sign, is a basis in which the generators are signed permutations.
    """
    n = len(gens)
    D = gens[0].dim
    t = n - (d.bit_length() - 1)
    seed = [omega_mask] if omega_mask is not None else []
    masks = _commuting_involutions(n, etas, t, seed)
    if masks is None:
        raise AssertionError("no primitive idempotent found")
    monos = [_monomial(gens, m) for m in masks]
    for signs in product((1, -1), repeat=len(monos)):
        for a in range(D):
            v = [0] * D
            v[a] = 1
            for P, e in zip(monos, signs):
                w = P.apply(v)
                v = [x + e * y for x, y in zip(v, w)]
            if not any(v):
                continue
            basis, index = _orbit_basis(gens, v)
            if len(basis) != d:
                continue
            new = []
            for g in gens:
                perm, sign = [], []
                for b in basis:
                    img = tuple(g.apply(b))
                    j, e = index[_sign_key(img)]
                    perm.append(j)
                    sign.append(e * _sign_of(img))
                new.append(SignedPerm(tuple(perm), tuple(sign)))
            return tuple(new)
    raise AssertionError("irreducible extraction failed")


def _sign_of(v):
    for x in v:
        if x:
            return 1 if x > 0 else -1
    return 0


def _sign_key(v):
    s = _sign_of(v)
    return tuple(s * x for x in v)


def _orbit_basis(gens, v):
    start = _sign_key(tuple(v))
    basis = [start]
    index = {start: (0, 1)}
    queue = [start]
    while queue:
        nxt = []
        for b in queue:
            for g in gens:
                img = _sign_key(tuple(g.apply(b)))
                if img not in index:
                    index[img] = (len(basis), 1)
                    basis.append(img)
                    nxt.append(img)
        queue = nxt
        if len(basis) > 4096:
            break
    # the orbit vectors must be independent for a signed-permutation basis
    if len(basis) <= 64 and la.rank(basis) != len(basis):
        return [], {}
    if len(basis) > 64 and _rank_mod_p(np.array(basis, dtype=np.int64)) != len(basis):
        return [], {}
    return basis, index


@lru_cache(maxsize=None)
def _irreducible(r, s):
    """Signed-permutation irreducible module; for two classes this is V+."""
    d, two = irreducible_dim(r, s)
    n = r + s
    if n == 0:
        return ()
    gens = _tensor_default(r, s)
    etas = eta(r, s)
    full = (1 << n) - 1
    if gens[0].dim == d:
        irr = gens
    else:
        irr = _extract_irreducible(gens, etas, d, full if two else None)
    if two:
        omega = _monomial(irr, full)
        if omega.is_scalar(-1):
            irr = tuple(-g for g in irr)
        elif not omega.is_scalar(1):
            raise AssertionError("volume element is not scalar on an irreducible")
    return irr


def build_generators(r, s, target="irreducible"):
    """Dense integer generators of a Cl(r,s)-module.

    ``target`` is "tensor" for the recursive tensor-product module,
    "irreducible" (V+ when two classes exist), "+" or "-".
    """
    _check_rs(r, s)
    d, two = irreducible_dim(r, s)
    if target == "tensor":
        gens = _tensor_default(r, s)
    elif target in ("irreducible", "+"):
        gens = _irreducible(r, s)
    elif target == "-":
        if not two:
            raise ValueError(f"Cl({r},{s}) has a single irreducible class")
        gens = tuple(-g for g in _irreducible(r, s))
    else:
        raise ValueError(f"unknown target {target!r}")
    return [g.dense() for g in gens]


# -- admissible forms -------------------------------------------------------

_P = 2147483629  # prime below 2^31


def _rank_mod_p(M, p=_P):
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            # split the product to stay inside int64
            f = col[nzr][:, None]
            prod = (f * (A[r] & 0xFFFF)) % p + ((f * (A[r] >> 16)) % p) * 65536 % p
            A[nzr] = (A[nzr] - prod) % p
        r += 1
    return r


def _nondegenerate(G):
    n = len(G)
    if n == 0:
        return True
    if _rank_mod_p(np.array(G, dtype=object).astype(np.int64) if _is_int(G) else _int_scaled(G)) == n:
        return True
    return la.det(G) != 0


def _is_int(G):
    return all(isinstance(x, int) for row in G for x in row)


def _int_scaled(G):
    rows = la._integer_rows(G)
    return np.array(rows, dtype=np.int64)


class _SignedUnionFind:
    def __init__(self):
        self.parent = {}
        self.par = {}
        self.zero = set()

    def find(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.par[x] = 1
            return x, 1
        path = []
        s = 1
        y = x
        while self.parent[y] != y:
            path.append(y)
            s *= self.par[y]
            y = self.parent[y]
        # path compression
        acc = s
        for z in path:
            old = self.par[z]
            self.parent[z] = y
            self.par[z] = acc
            acc *= old
        return y, s

    def union(self, a, b, sign):
        """Record value(a) = sign * value(b)."""
        ra, sa = self.find(a)
        rb, sb = self.find(b)
        if ra == rb:
            if sa != sign * sb:
                self.zero.add(ra)
            return
        lo, hi = sorted((ra, rb))
        # value(hi) = rel * value(lo)
        rel = sa * sign * sb
        self.parent[hi] = lo
        self.par[hi] = rel
        if hi in self.zero:
            self.zero.discard(hi)
            self.zero.add(lo)


def _form_space_signed(gens):
    """Basis of {G symmetric : J^T G + G J = 0} for signed-permutation J."""
    n = gens[0].dim
    uf = _SignedUnionFind()
    key = lambda a, b: (a, b) if a <= b else (b, a)
    for a in range(n):
        for b in range(a, n):
            uf.find((a, b))
    for g in gens:
        p, s = g.perm, g.sign
        for a in range(n):
            for b in range(n):
                # s_a G[p(a), b] = - s_b G[a, p(b)]
                uf.union(key(p[a], b), key(a, p[b]), -s[a] * s[b])
    classes = {}
    for a in range(n):
        for b in range(a, n):
            root, sg = uf.find((a, b))
            classes.setdefault(root, []).append(((a, b), sg))
    zero = {uf.find(z)[0] for z in uf.zero}
    basis = []
    for root in sorted(classes):
        if root in zero:
            continue
        G = [[0] * n for _ in range(n)]
        for (a, b), sg in classes[root]:
            G[a][b] = sg
            G[b][a] = sg
        basis.append(tuple(tuple(r) for r in G))
    return basis


def _form_space_dense(gens):
    n = len(gens[0])
    idx = {}
    for a in range(n):
        for b in range(a, n):
            idx[(a, b)] = len(idx)
    var = lambda a, b: idx[(a, b) if a <= b else (b, a)]
    rows = []
    for J in gens:
        for a in range(n):
            for b in range(n):
                row = [0] * len(idx)
                for k in range(n):
                    if J[k][a]:
                        row[var(k, b)] += J[k][a]
                    if J[k][b]:
                        row[var(a, k)] += J[k][b]
                if any(row):
                    rows.append(row)
    K = la.kernel(rows, len(idx)) if rows else la.identity(len(idx))
    basis = []
    for v in K:
        G = [[0] * n for _ in range(n)]
        for (a, b), i in idx.items():
            G[a][b] = G[b][a] = v[i]
        basis.append(la.as_matrix(G))
    return basis


def _combine(basis, coeffs):
    n = len(basis[0])
    return tuple(
        tuple(sum(c * B[i][j] for c, B in zip(coeffs, basis) if c) for j in range(n))
        for i in range(n))


def _coefficient_search(basis):
    k = len(basis)
    for B in basis:
        if _nondegenerate(B):
            return B
    box = (-2, -1, 0, 1, 2)
    if k <= 6:
        combos = product(box, repeat=k)
    else:
        combos = (c for size in (2, 3) for sup in combinations(range(k), size)
                  for vals in product((-2, -1, 1, 2), repeat=size)
                  for c in [tuple(vals[sup.index(i)] if i in sup else 0 for i in range(k))])
    for c in combos:
        if sum(1 for x in c if x) < 2:
            continue
        G = _combine(basis, c)
        if _nondegenerate(G):
            return G
    return None


def _det_identically_zero(basis, grid_budget=4096):
    """Decide exactly whether det(sum t_i B_i) is the zero polynomial."""
    k = len(basis)
    n = len(basis[0])
    if k <= 4 and n <= 10:
        M = [[Poly(k, {tuple(1 if q == i else 0 for q in range(k)): B[a][b]
                       for i, B in enumerate(basis) if B[a][b]}) for b in range(n)]
             for a in range(n)]
        return not _det_poly(M)
    # a polynomial of degree n vanishing on {0..n}^k is zero
    if (n + 1) ** k > grid_budget:
        raise ResourceExhausted("admissible-form degeneracy proof exceeds the grid budget")
    for pt in product(range(n + 1), repeat=k):
        if any(pt) and la.det(_combine(basis, pt)) != 0:
            return False
    return True


def admissible_form(gens, dim=None):
    """A non-degenerate symmetric G with J^T G + G J = 0 for all J, or None.

    None is a proof: either the solution space is zero or the determinant
    vanishes identically on it.
    """
    gens = list(gens)
    if not gens:
        if dim is None:
            raise ValueError("admissible_form needs dim when there are no generators")
        return la.identity(dim)
    sp = [g if isinstance(g, SignedPerm) else SignedPerm.from_dense(g) for g in gens]
    if all(g is not None for g in sp):
        basis = _form_space_signed(sp)
    else:
        basis = _form_space_dense([la.as_matrix(g) for g in gens])
    if not basis:
        return None
    G = _coefficient_search(basis)
    if G is not None:
        return G
    if _det_identically_zero(basis):
        return None
    raise AssertionError("determinant not identically zero but no witness found")


def _schur_form(gens):
    """Admissible form on a module where any nonzero solution is non-degenerate.

    That holds for an irreducible module, and for a sum of two irreducibles
    neither of which is admissible on its own (the solution is then an
    off-diagonal intertwiner). The non-degeneracy is still checked exactly.
    """
    basis = _form_space_signed(gens)
    for B in basis:
        if _nondegenerate(B):
            return B
    if basis:
        G = _coefficient_search(basis)
        if G is not None:
            return G
    return None


# -- minimal admissible modules ---------------------------------------------

@dataclass(frozen=True)
class CliffordRep:
    """A Cl(r,s)-module with an admissible form and grid metadata."""

    r: int
    s: int
    dim: int
    gens: tuple
    G: tuple
    composition: tuple
    twin_flag: bool = False
    mixed_flag: bool = False
    signed: tuple = field(default=(), repr=False, compare=False)

    @property
    def eta(self):
        return eta(self.r, self.s)

    def J(self, k):
        """Generator J_{z_k}, 1-based."""
        return self.gens[k - 1]


def _rep(r, s, gens, G, composition, twin=False, mixed=False):
    dim = gens[0].dim if gens else len(G)
    return CliffordRep(r, s, dim, tuple(g.dense() for g in gens), G,
                       tuple(composition), twin, mixed, tuple(gens))


def _class_summands(r, s, cls):
    irr = _irreducible(r, s)
    if cls == "-":
        irr = tuple(-g for g in irr)
    return irr


@lru_cache(maxsize=None)
def _minimal_parts(r, s):
    """(summand generator tuples, composition, G, twin, mixed) for the minimal module."""
    _check_rs(r, s)
    d, two = irreducible_dim(r, s)
    if r + s == 0:
        return ((),), (("V", 1),), ((1,),), False, False
    classes = ("+", "-") if two else ("",)
    tag = lambda c: "V" + c
    # (a) one irreducible
    ok = {}
    for c in classes:
        gens = _class_summands(r, s, c)
        G = _schur_form(gens)
        if G is not None:
            ok[c] = (gens, G)
    if ok:
        c = classes[0] if classes[0] in ok else classes[1]
        gens, G = ok[c]
        return (gens,), ((tag(c), 1),), G, two and len(ok) == 2, False
    # (b) isotypic doubles
    for c in classes:
        irr = _class_summands(r, s, c)
        gens = tuple(_direct_sum(g, g) for g in irr)
        G = _schur_form(gens)
        if G is not None:
            other_ok = two and _schur_form(tuple(_direct_sum(-g, -g) for g in irr)) is not None
            return (gens,), ((tag(c), 2),), G, other_ok, True
    # (c) mixed
    if two:
        irr = _irreducible(r, s)
        gens = tuple(_direct_sum(g, -g) for g in irr)
        G = _schur_form(gens)
        if G is not None:
            return (gens,), (("V+", 1), ("V-", 1)), G, False, True
    raise AssertionError(f"no admissible module found for Cl({r},{s})")


def minimal_admissible(r, s):
    """The minimal admissible Cl(r,s)-module with its grid flags.

    ``mixed_flag`` marks a minimal module that is a sum of two irreducibles
    (bold in the reference grid); ``twin_flag`` marks two inequivalent minimal modules.
    """
    (gens,), comp, G, twin, mixed = _minimal_parts(r, s)
    if not gens:
        return CliffordRep(r, s, 1, (), la.as_matrix(G), comp, False, False, ())
    return _rep(r, s, gens, la.as_matrix(G), comp, twin, mixed)


def _class_module(r, s, cls):
    """Minimal admissible module built from one class: '+', '-' or 'min'."""
    rep = minimal_admissible(r, s)
    if cls == "min":
        return rep
    _, two = irreducible_dim(r, s)
    if not two:
        raise ValueError(f"Cl({r},{s}) has one irreducible class; use 'min'")
    tags = {t for t, _ in rep.composition}
    if len(tags) == 2:
        raise ValueError(f"the minimal admissible Cl({r},{s})-module is mixed; use 'min'")
    tag, count = rep.composition[0]
    if tag == "V" + cls:
        return rep
    # the other class: negate generators, the form is unchanged
    gens = tuple(-g for g in rep.signed)
    return CliffordRep(r, s, rep.dim, tuple(g.dense() for g in gens), rep.G,
                       (("V" + cls, count),), rep.twin_flag, rep.mixed_flag, gens)


TABLE1 = {
    # (r, s): (dim, twin, bold)
    **{(r, 8): v for r, v in enumerate([
        (16, 0, 0), (32, 0, 0), (64, 0, 0), (64, 1, 0), (128, 0, 0), (128, 0, 0),
        (128, 0, 0), (128, 1, 0), (256, 0, 0)])},
    **{(r, 7): v for r, v in enumerate([
        (16, 0, 0), (32, 0, 0), (64, 0, 1), (64, 0, 0), (128, 0, 1), (128, 0, 1),
        (128, 0, 1), (128, 0, 0), (256, 0, 0)])},
    **{(r, 6): v for r, v in enumerate([
        (16, 0, 0), (16, 1, 0), (32, 0, 0), (32, 0, 0), (64, 0, 1), (64, 1, 1),
        (128, 0, 1), (128, 0, 0), (256, 0, 0)])},
    **{(r, 5): v for r, v in enumerate([
        (16, 0, 1), (16, 0, 0), (16, 0, 0), (16, 0, 0), (32, 0, 1), (64, 0, 1),
        (128, 0, 1), (128, 0, 0), (256, 0, 1)])},
    **{(r, 4): v for r, v in enumerate([
        (8, 0, 0), (8, 0, 0), (8, 0, 0), (8, 1, 0), (16, 0, 0), (32, 0, 0),
        (64, 0, 0), (64, 1, 0), (128, 0, 0)])},
    **{(r, 3): v for r, v in enumerate([
        (8, 0, 1), (8, 0, 1), (8, 0, 1), (8, 0, 0), (16, 0, 0), (32, 0, 0),
        (64, 0, 1), (64, 0, 0), (128, 0, 1)])},
    **{(r, 2): v for r, v in enumerate([
        (4, 0, 1), (4, 1, 1), (8, 0, 1), (8, 0, 0), (16, 0, 0), (16, 1, 0),
        (32, 0, 0), (32, 0, 0), (64, 0, 1)])},
    **{(r, 1): v for r, v in enumerate([
        (2, 0, 1), (4, 0, 1), (8, 0, 1), (8, 0, 0), (16, 0, 1), (16, 0, 0),
        (16, 0, 0), (16, 0, 0), (32, 0, 1)])},
    **{(r, 0): v for r, v in enumerate([
        (1, 0, 0), (2, 0, 0), (4, 0, 0), (4, 1, 0), (8, 0, 0), (8, 0, 0),
        (8, 0, 0), (8, 1, 0), (16, 0, 0)])},
}
"""Reference grid of minimal admissible modules: (dimension, two minimal modules, bold)."""


def table1_grid(max_dim=64, full=False):
    """Computed grid entries as a dict (r, s) -> (dim, twin, mixed).

    Entries whose reference dimension exceeds ``max_dim`` are skipped unless
    ``full`` is set.
    """
    out = {}
    for s in range(MAX_RS + 1):
        for r in range(MAX_RS + 1):
            if not full and TABLE1[(r, s)][0] > max_dim:
                continue
            (gens,), comp, G, twin, mixed = _minimal_parts(r, s)
            dim = gens[0].dim if gens else 1
            out[(r, s)] = (dim, bool(twin), bool(mixed))
    return out


# -- pseudo H-type algebras -------------------------------------------------

def build_htype(r, s, copies=(("min", 1),)):
    """The pseudo H-type algebra n^{r,s}(V) on an orthogonal sum of minimal modules.

    ``copies`` lists (class, count) with class '+', '-' (the minimal module
    built from V+ or V-) or 'min'. The bracket inverts the J-map relation:
    [x, y] = sum_k eta_k <J_k x, y>_V z_k.
    """
    copies = [(c, int(k)) for c, k in copies]
    if not copies or sum(k for _, k in copies) <= 0 or any(k < 0 for _, k in copies):
        raise ValueError("copies must request at least one module")
    blocks = []
    for cls, k in copies:
        if cls not in ("+", "-", "min"):
            raise ValueError(f"unknown module class {cls!r}")
        rep = _class_module(r, s, cls)
        blocks.extend([rep] * k)
    gens_blocks = [b.signed for b in blocks]
    m = r + s
    n = sum(b.dim for b in blocks)
    GV = [[0] * n for _ in range(n)]
    off = 0
    offsets = []
    for b in blocks:
        offsets.append(off)
        for i in range(b.dim):
            for j in range(b.dim):
                GV[off + i][off + j] = b.G[i][j]
        off += b.dim
    et = eta(r, s)
    brackets = {}
    for b, o, gens in zip(blocks, offsets, gens_blocks):
        for k in range(m):
            g = gens[k]
            # <J_k e_x, e_y> = (G J_k)[y][x] = G[y][perm[x]] * sign[x]
            for x in range(b.dim):
                px, sx = g.perm[x], g.sign[x]
                for y in range(b.dim):
                    v = b.G[y][px] * sx
                    if v and x < y:
                        brackets.setdefault((o + x, o + y), [0] * m)[k] += et[k] * v
    br = [(i, j, z) for (i, j), z in sorted(brackets.items()) if any(z)]
    alg = Graded2Step(n, m, br)
    GZ = [[et[i] if i == j else 0 for j in range(m)] for i in range(m)]
    return MTypeAlgebra(alg, Metric(la.as_matrix(GV), la.as_matrix(GZ)))


# -- relations and involutions ----------------------------------------------

def clifford_relations_hold(gens, r, s):
    """Exact check of J_iJ_j + J_jJ_i = -2 eta_ij Id."""
    et = eta(r, s)
    if len(gens) != r + s:
        return False
    mats = [np.array(g, dtype=np.int64) if not isinstance(g, SignedPerm) else g.to_numpy() for g in gens]
    if not mats:
        return True
    n = mats[0].shape[0]
    I = np.eye(n, dtype=np.int64)
    for i in range(len(mats)):
        for j in range(i, len(mats)):
            lhs = mats[i] @ mats[j] + mats[j] @ mats[i]
            rhs = -2 * et[i] * I if i == j else 0 * I
            if not np.array_equal(lhs, rhs):
                return False
    return True


def is_admissible(gens, G):
    """Exact check that every J is G-skew and G is symmetric and non-degenerate."""
    G = la.as_matrix(G)
    Gt = la.transpose(G)
    if G != Gt or not _nondegenerate(G):
        return False
    Gn = np.array(G, dtype=object)
    for g in gens:
        J = np.array(g.dense() if isinstance(g, SignedPerm) else g, dtype=object)
        if (J.T.dot(Gn) + Gn.dot(J)).any():
            return False
    return True


DEFAULT_QUADRUPLES = {
    (3, 4): ((1, 2, 4, 5), (1, 2, 6, 7), (1, 3, 5, 7)),
    (7, 0): ((1, 2, 3, 4), (1, 2, 5, 6), (1, 3, 5, 7)),
}

SIGN_PATTERNS = tuple(product((1, -1), repeat=3))
"""Common eigenvalue patterns of (P1, P2, P3) in the column order of the eigenspace table."""

# Column of each pattern: the vectors that must span the same line, given as
# index tuples of the J-products applied to w in E^{+,+,+}.
EIGEN_COLUMNS_34 = {
    (1, 1, 1): ((),),
    (1, 1, -1): ((3,), (1, 2), (4, 5), (6, 7)),
    (1, -1, 1): ((6,), (1, 5), (2, 4), (3, 7)),
    (1, -1, -1): ((7,), (1, 4), (2, 5), (3, 6)),
    (-1, 1, 1): ((4,), (1, 7), (2, 6), (3, 5)),
    (-1, 1, -1): ((5,), (1, 6), (2, 7), (3, 4)),
    (-1, -1, 1): ((2,), (1, 3), (4, 6), (5, 7)),
    (-1, -1, -1): ((1,), (2, 3), (4, 7), (5, 6)),
}


@dataclass(frozen=True)
class InvolutionSet:
    P: tuple
    quadruples: tuple
    sign_table: tuple
    eigenbasis: dict


def _word(gens, idx):
    out = None
    for i in idx:
        g = gens[i - 1]
        out = g if out is None else out @ g
    return out


def involution_set(rep, quadruples=None):
    """Products of four generators acting as commuting G-symmetric involutions."""
    if quadruples is None:
        try:
            quadruples = DEFAULT_QUADRUPLES[(rep.r, rep.s)]
        except KeyError:
            raise ValueError(f"no default quadruples for Cl({rep.r},{rep.s})") from None
    quadruples = tuple(tuple(q) for q in quadruples)
    m = rep.r + rep.s
    if any(not (1 <= i <= m) for q in quadruples for i in q):
        raise ValueError("quadruple index out of range")
    gens = rep.signed or tuple(SignedPerm.from_dense(g) for g in rep.gens)
    n = rep.dim
    Id = SignedPerm.identity(n)
    P = [_word(gens, q) for q in quadruples]
    Gn = np.array(rep.G, dtype=object)
    for k, p in enumerate(P):
        if p @ p != Id:
            raise ValueError(f"P{k + 1} is not an involution")
        Pn = np.array(p.dense(), dtype=object)
        if (Pn.T.dot(Gn) - Gn.dot(Pn)).any():
            raise ValueError(f"P{k + 1} is not G-symmetric")
    for a, b in combinations(range(len(P)), 2):
        if P[a] @ P[b] != P[b] @ P[a]:
            raise ValueError(f"P{a + 1} and P{b + 1} do not commute")
    table = []
    for p in P:
        row = []
        for g in gens:
            if p @ g == g @ p:
                row.append(1)
            elif p @ g == -(g @ p):
                row.append(-1)
            else:
                raise ValueError("involution neither commutes nor anticommutes with a generator")
        table.append(tuple(row))
    eig = {}
    dense = [p.dense() for p in P]
    for pattern in product((1, -1), repeat=len(P)):
        rows = []
        for D, e in zip(dense, pattern):
            rows.extend(la.matsub(D, la.scale(e, la.identity(n))))
        eig[pattern] = tuple(la.kernel(rows, n))
    return InvolutionSet(tuple(dense), quadruples, tuple(table), eig)


TABLE2_34 = (
    (-1, -1, 1, -1, -1, 1, 1),
    (-1, -1, 1, 1, 1, -1, -1),
    (-1, 1, -1, 1, -1, 1, -1),
)
"""Commutation signs of P1, P2, P3 with J_1..J_7 for the (3, 4) defaults."""


def _apply_word(gens, idx, v):
    for i in reversed(idx):
        v = la.matvec(gens[i - 1], v)
    return tuple(v)


def _sign_multiple(u, v):
    """+1 or -1 if u = +-v (both nonzero), else 0."""
    if not any(u):
        return 0
    if tuple(u) == tuple(v):
        return 1
    if tuple(u) == tuple(-x for x in v):
        return -1
    return 0


def table3_check(rep, inv=None):
    """Check each eigenspace column for (3, 4): the listed J-words applied to
    w in E^{+,+,+} are pairwise equal up to sign and lie in that eigenspace.

    Returns {pattern: (sign of each word relative to the first, in_eigenspace)}.
    """
    if (rep.r, rep.s) != (3, 4):
        raise ValueError("the eigenspace table is stated for Cl(3,4)")
    inv = inv or involution_set(rep)
    (w,) = inv.eigenbasis[(1, 1, 1)]
    out = {}
    for pattern, words in EIGEN_COLUMNS_34.items():
        vecs = [_apply_word(rep.gens, idx, w) for idx in words]
        signs = tuple(_sign_multiple(v, vecs[0]) for v in vecs)
        inside = all(la.matvec(P, v) == tuple(e * x for x in v)
                     for v in vecs for P, e in zip(inv.P, pattern))
        out[pattern] = (signs, inside)
    return out


def pair_closure_check(rep, inv=None):
    """For every common eigenvector x and pair i < j, find (k, sigma) with
    J_i J_j x = sigma J_k x. Returns {(p, i, j): (k, sigma)} with 1-based
    indices; a missing entry means no such k exists.
    """
    inv = inv or involution_set(rep)
    m = rep.r + rep.s
    out = {}
    for p, pattern in enumerate(SIGN_PATTERNS):
        for x in inv.eigenbasis[pattern]:
            for i, j in combinations(range(1, m + 1), 2):
                v = _apply_word(rep.gens, (i, j), x)
                for k in range(1, m + 1):
                    sg = _sign_multiple(v, _apply_word(rep.gens, (k,), x))
                    if sg:
                        out[(p, i, j)] = (k, sg)
                        break
    return out
