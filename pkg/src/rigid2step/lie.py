"""Graded 2-step nilpotent Lie algebras, metrics and J-maps.

An algebra n = n_{-2} + n_{-1} has basis e_1..e_n of n_{-1} and f_1..f_m of
n_{-2}; it is stored as m skew-symmetric n x n matrices ``C[k]`` with
``C[k][i][j]`` the f_k-coefficient of [e_i, e_j]. Indices are 0-based in the
API and 1-based in the JSON schema.

The J-map of a metric algebra is defined by <J_z x, y> = <z, [x, y]>; J_z acts
on column vectors, so ``J e_i`` is the i-th column.
"""

from dataclasses import dataclass
from itertools import combinations, product

from . import linalg as la
from .poly import Poly

__all__ = [
    "Graded2Step", "Metric", "MTypeAlgebra", "JMaps", "ValidationReport",
    "validate", "ad_matrix", "ad_matrix_symbolic", "j_maps", "verify_htype",
    "verify_jtype", "orthonormal_basis", "condition_C", "ConditionCCertificate",
    "metivier_probe", "free_two_step", "heisenberg", "abelian",
    "structure_from_jmaps", "orthonormal_center",
]


class Graded2Step:
    """A graded 2-step nilpotent Lie algebra with rational structure constants."""

    def __init__(self, n, m, brackets):
        """``brackets`` is an iterable of ``(i, j, z)``: [e_i, e_j] += sum_k z[k] f_k.

        Indices are 0-based; pairs with i > j are flipped with a sign and
        repeated pairs are summed.
        """
        if n < 0 or m < 0:
            raise ValueError("dimensions must be non-negative")
        C = [[[0] * n for _ in range(n)] for _ in range(m)]
        for i, j, z in brackets:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"bracket index out of range: ({i}, {j})")
            if i == j:
                if any(la.rat(c) for c in z):
                    raise ValueError("[e_i, e_i] must vanish")
                continue
            if len(z) != m:
                raise ValueError("bracket value has wrong length")
            for k, c in enumerate(z):
                c = la.rat(c)
                C[k][i][j] += c
                C[k][j][i] -= c
        self.n = n
        self.m = m
        self.C = tuple(la.as_matrix(Ck) for Ck in C)

    @classmethod
    def from_matrices(cls, n, C):
        C = [la.as_matrix(Ck) for Ck in C]
        br = []
        for i, j in combinations(range(n), 2):
            z = [Ck[i][j] for Ck in C]
            if any(z):
                br.append((i, j, z))
        return cls(n, len(C), br)

    def bracket(self, x, y):
        """[x, y] for coordinate vectors x, y of n_{-1}; returns a vector in n_{-2}."""
        return tuple(la.dot(x, la.matvec(Ck, y)) for Ck in self.C)

    def brackets(self):
        """Nonzero structure constants as ``(i, j, z)`` with i < j."""
        out = []
        for i, j in combinations(range(self.n), 2):
            z = tuple(Ck[i][j] for Ck in self.C)
            if any(z):
                out.append((i, j, z))
        return out

    def __eq__(self, other):
        return isinstance(other, Graded2Step) and (self.n, self.m, self.C) == (other.n, other.m, other.C)

    def __hash__(self):
        return hash((self.n, self.m, self.C))

    def __repr__(self):
        return f"Graded2Step(n={self.n}, m={self.m}, brackets={len(self.brackets())})"


@dataclass(frozen=True)
class Metric:
    """Non-degenerate symmetric forms on n_{-1} (``V``) and n_{-2} (``Z``)."""

    V: tuple
    Z: tuple

    def __post_init__(self):
        V = la.as_matrix(self.V)
        Z = la.as_matrix(self.Z)
        object.__setattr__(self, "V", V)
        object.__setattr__(self, "Z", Z)
        for name, G in (("V", V), ("Z", Z)):
            if any(G[i][j] != G[j][i] for i in range(len(G)) for j in range(len(G))):
                raise ValueError(f"metric block {name} is not symmetric")
            if len(G) and la.det(G) == 0:
                raise ValueError(f"metric block {name} is degenerate")

    @classmethod
    def euclidean(cls, n, m):
        return cls(la.identity(n), la.identity(m))

    def inner_V(self, x, y):
        return la.dot(x, la.matvec(self.V, y))

    def inner_Z(self, z, w):
        return la.dot(z, la.matvec(self.Z, w))


@dataclass(frozen=True)
class MTypeAlgebra:
    """A graded 2-step algebra together with an orthogonal metric."""

    algebra: Graded2Step
    metric: Metric

    def __post_init__(self):
        a, g = self.algebra, self.metric
        if len(g.V) != a.n or len(g.Z) != a.m:
            raise ValueError("metric size does not match the algebra")

    @classmethod
    def euclidean(cls, algebra):
        return cls(algebra, Metric.euclidean(algebra.n, algebra.m))


@dataclass(frozen=True)
class JMaps:
    """J_{f_1}, ..., J_{f_m} together with the metric they were built from."""

    maps: tuple
    metric: Metric

    @property
    def n(self):
        return len(self.metric.V)

    @property
    def m(self):
        return len(self.maps)

    def J(self, z):
        """J_z for a coordinate vector z of n_{-2} (linear in z)."""
        out = la.zeros(self.n, self.n)
        for c, Jk in zip(z, self.maps):
            if c:
                out = la.matadd(out, la.scale(c, Jk))
        return out


@dataclass(frozen=True)
class ValidationReport:
    fundamental: bool
    surjective_bracket: bool
    central_in_minus1: tuple


def validate(a):
    """Check that n_{-1} generates n and carries no central elements."""
    images = [z for _, _, z in a.brackets()]
    surjective = la.rank(images) == a.m if images else a.m == 0
    # x is central in n_{-1} iff [x, e_j] = 0 for all j: stack ad-constraints.
    rows = []
    for Ck in a.C:
        for j in range(a.n):
            rows.append(tuple(Ck[i][j] for i in range(a.n)))
    central = la.kernel(rows, a.n) if rows else la.identity(a.n)
    return ValidationReport(
        fundamental=surjective and not central,
        surjective_bracket=surjective,
        central_in_minus1=tuple(central),
    )


def ad_matrix(a, x):
    """The m x n matrix of ad_x : n_{-1} -> n_{-2} at a concrete x (any field)."""
    out = []
    for Ck in a.C:
        row = []
        for j in range(a.n):
            s = 0
            for i in range(a.n):
                if Ck[i][j] and x[i]:
                    s = s + x[i] * Ck[i][j]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def ad_matrix_symbolic(a):
    """ad_x as an m x n matrix of linear forms in x_1..x_n.

    Entry (k, j) is sum_i c_{ij}^k x_i, the f_k-coefficient of [x, e_j].
    """
    n = a.n
    M = []
    for Ck in a.C:
        row = []
        for j in range(n):
            t = {}
            for i in range(n):
                if Ck[i][j]:
                    e = [0] * n
                    e[i] = 1
                    t[tuple(e)] = Ck[i][j]
            row.append(Poly(n, t))
        M.append(row)
    return M


def j_maps(A):
    """The J-map family of an M-type algebra, one matrix per basis vector f_k."""
    a, g = A.algebra, A.metric
    Vinv = la.inverse(g.V) if a.n else ()
    maps = []
    for k in range(a.m):
        # B[x][y] = <f_k, [e_x, e_y]>
        B = [[0] * a.n for _ in range(a.n)]
        for l in range(a.m):
            w = g.Z[k][l]
            if w:
                Cl = a.C[l]
                for x in range(a.n):
                    for y in range(a.n):
                        if Cl[x][y]:
                            B[x][y] += w * Cl[x][y]
        # <J e_x, e_y> = (G_V J)[y][x] = B[x][y]
        maps.append(la.matmul(Vinv, la.transpose(la.as_matrix(B))))
    return JMaps(tuple(maps), g)


def structure_from_jmaps(maps, metric=None):
    """Invert the J-map construction: recover the algebra from J-matrices.

    With metric (G_V, G_Z): <f_k, [e_i, e_j]> = (G_V J_k)[j][i], and the
    bracket coefficients are G_Z^{-1} applied to those pairings.
    """
    maps = [la.as_matrix(J) for J in maps]
    m = len(maps)
    n = len(maps[0]) if maps else 0
    if metric is None:
        metric = Metric.euclidean(n, m)
    Zinv = la.inverse(metric.Z) if m else ()
    pair = [la.matmul(metric.V, J) for J in maps]
    br = []
    for i, j in combinations(range(n), 2):
        p = [P[j][i] for P in pair]
        z = la.matvec(Zinv, p) if m else ()
        if any(z):
            br.append((i, j, z))
    return Graded2Step(n, m, br)


def verify_htype(J):
    """True iff J_i J_j + J_j J_i = -2 <f_i, f_j> Id for all basis pairs."""
    n = J.n
    Id = la.identity(n)
    for i in range(J.m):
        for j in range(i, J.m):
            lhs = la.matmul(J.maps[i], J.maps[j])
            lhs = la.matadd(lhs, la.matmul(J.maps[j], J.maps[i]))
            rhs = la.scale(-2 * J.metric.Z[i][j], Id)
            if lhs != rhs:
                return False
    return True


def orthonormal_basis(G):
    """Columns S with S^T G S = diag(+-1), found by Gram-Schmidt inside Q.

    Raises ValueError when a normalisation would need an irrational square
    root; callers must then supply a basis that is already orthonormal.
    """
    from fractions import Fraction
    from math import isqrt

    n = len(G)
    G = la.as_matrix(G)
    basis = [list(v) for v in la.identity(n)]
    ortho = []
    norms = []
    for v in basis:
        w = [Fraction(x) for x in v]
        for u, nu in zip(ortho, norms):
            c = Fraction(la.dot(u, la.matvec(G, w))) / nu
            w = [a - c * b for a, b in zip(w, u)]
        nw = la.dot(w, la.matvec(G, w))
        if nw == 0:
            # try to mix in a later basis vector to avoid null vectors
            for extra in basis:
                w2 = [a + b for a, b in zip(w, extra)]
                for u, nu in zip(ortho, norms):
                    c = Fraction(la.dot(u, la.matvec(G, w2))) / nu
                    w2 = [a - c * b for a, b in zip(w2, u)]
                if la.dot(w2, la.matvec(G, w2)) and la.rank(ortho + [w2]) == len(ortho) + 1:
                    w = w2
                    nw = la.dot(w, la.matvec(G, w))
                    break
            else:
                raise ValueError("degenerate form")
        ortho.append(w)
        norms.append(Fraction(nw))
    if la.rank(ortho) != n:
        raise ValueError("could not build an orthogonal basis")
    cols = []
    for w, nw in zip(ortho, norms):
        a = abs(nw)
        p, q = a.numerator, a.denominator
        rp, rq = isqrt(p), isqrt(q)
        if rp * rp != p or rq * rq != q:
            raise ValueError(
                "orthonormalising this form needs an irrational square root; "
                "pass a metric whose n_{-2} block is diagonal with entries +-1")
        s = Fraction(rq, rp)
        cols.append([la.rat(x * s) for x in w])
    return la.transpose(cols)


def orthonormal_center(A):
    """The same algebra written in a basis of n_{-2} that is orthonormal (+-1)."""
    Z = A.metric.Z
    m = len(Z)
    if all(Z[i][j] == 0 for i in range(m) for j in range(m) if i != j) and \
            all(Z[i][i] in (1, -1) for i in range(m)):
        return A
    S = orthonormal_basis(Z)
    Si = la.inverse(S)
    n = A.algebra.n
    C = [la.zeros(n, n) for _ in range(m)]
    for k in range(m):
        for i in range(m):
            if Si[k][i]:
                C[k] = la.matadd(C[k], la.scale(Si[k][i], A.algebra.C[i]))
    alg = Graded2Step.from_matrices(n, C)
    GZ = la.matmul(la.transpose(S), la.matmul(Z, S))
    return MTypeAlgebra(alg, Metric(A.metric.V, GZ))


def _signs_of_Z(J):
    Z = J.metric.Z
    m = len(Z)
    if all(Z[i][j] == 0 for i in range(m) for j in range(m) if i != j) and all(Z[i][i] in (1, -1) for i in range(m)):
        return la.identity(m), [Z[i][i] for i in range(m)]
    S = orthonormal_basis(Z)
    D = la.matmul(la.transpose(S), la.matmul(Z, S))
    return S, [D[i][i] for i in range(m)]


def verify_jtype(J):
    """Sign vector (eps_1..eps_m) with J_{z_i}^2 = eps_i Id, or None.

    The z_i are the given basis when G_Z is already diagonal +-1, otherwise
    an orthonormal basis produced by :func:`orthonormal_basis`.
    """
    S, _ = _signs_of_Z(J)
    Id = la.identity(J.n)
    signs = []
    for k in range(J.m):
        Jz = J.J(tuple(S[i][k] for i in range(J.m)))
        sq = la.matmul(Jz, Jz)
        if sq == Id:
            signs.append(1)
        elif sq == la.scale(-1, Id):
            signs.append(-1)
        else:
            return None
    return tuple(signs)


@dataclass(frozen=True)
class ConditionCCertificate:
    indices: tuple
    sigma: tuple  # sigma[a][b] in {+1, -1} for a != b, 0 on the diagonal

    def product(self):
        s = self.sigma
        return s[0][1] * s[0][2] * s[1][2]


def _comm_sign(A, B):
    AB = la.matmul(A, B)
    BA = la.matmul(B, A)
    if AB == BA:
        return 1
    if AB == la.scale(-1, BA):
        return -1
    return 0


def condition_C(J, triples=None):
    """Search for three basis directions witnessing condition (C).

    Returns the first certificate in lexicographic triple order, or None.
    None is not a proof that condition (C) fails for arbitrary triples.
    """
    if J.m < 3:
        raise ValueError("condition (C) needs dim n_{-2} >= 3")
    if triples is None:
        triples = combinations(range(J.m), 3)
    nondeg = {}

    def ok(k):
        if k not in nondeg:
            nondeg[k] = la.det(J.maps[k]) != 0
        return nondeg[k]

    for tri in triples:
        tri = tuple(tri)
        vecs = [tuple(1 if i == k else 0 for i in range(J.m)) for k in tri] if all(isinstance(k, int) for k in tri) else None
        if vecs is None:
            raise TypeError("triples must be index triples")
        if not all(ok(k) for k in tri):
            continue
        sig = [[0] * 3 for _ in range(3)]
        good = True
        for a, b in ((0, 1), (0, 2), (1, 2)):
            s = _comm_sign(J.maps[tri[a]], J.maps[tri[b]])
            if s == 0:
                good = False
                break
            sig[a][b] = sig[b][a] = s
        if good and sig[0][1] * sig[0][2] * sig[1][2] == -1:
            return ConditionCCertificate(tri, tuple(tuple(r) for r in sig))
    return None


@dataclass(frozen=True)
class MetivierReport:
    all_nondegenerate_on_probes: bool
    degenerate_witness: tuple = None


def metivier_probe(J, probes):
    """Check det J_z != 0 on each probe z; a degenerate probe refutes (H)."""
    for z in probes:
        if not any(z):
            raise ValueError("probe vectors must be nonzero")
        if la.det(J.J(z)) == 0:
            return MetivierReport(False, tuple(z))
    return MetivierReport(True, None)


def default_metivier_probes(m):
    """Basis vectors and all +-1 combinations with support size two or more."""
    probes = [tuple(1 if i == k else 0 for i in range(m)) for k in range(m)]
    for signs in product((0, 1, -1), repeat=m):
        if sum(1 for s in signs if s) >= 2 and next(s for s in signs if s) == 1:
            probes.append(signs)
    return probes


def free_two_step(n):
    """The free 2-step algebra: [e_i, e_j] = f_(i,j), pairs numbered lexicographically."""
    if n < 2:
        raise ValueError("free_two_step needs n >= 2")
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    br = []
    for k, (i, j) in enumerate(pairs):
        z = [0] * m
        z[k] = 1
        br.append((i, j, z))
    return Graded2Step(n, m, br)


def heisenberg():
    return Graded2Step(2, 1, [(0, 1, [1])])


def abelian(n, m=0):
    return Graded2Step(n, m, [])
