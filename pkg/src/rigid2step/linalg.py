"""Exact dense linear algebra over the rationals and the Gaussian rationals.

Matrices are tuples of row tuples. Entries are Python ``int`` or
``fractions.Fraction`` (an integral Fraction is normalised to ``int`` so that
integer-only matrices stay on the fast integer path), or :class:`GaussRat`
for computations over Q(i).

Elimination is fraction-free (Bareiss): rows are scaled to integers first and
every intermediate division is exact.
"""

from fractions import Fraction
from math import lcm

__all__ = [
    "GaussRat", "rat", "rat_str", "as_matrix", "identity", "zeros",
    "transpose", "matmul", "matvec", "matadd", "matsub", "scale", "is_zero",
    "echelon", "rank", "rref", "kernel", "solve", "det", "inverse",
    "signature", "algebra_closure", "in_span", "flatten", "dot", "sparse_kernel",
]


def rat(x):
    """Normalise ``x`` (int, Fraction or "p/q" string) to an exact rational."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        x = Fraction(x.strip())
    elif isinstance(x, Fraction):
        pass
    elif isinstance(x, GaussRat):
        if x.im:
            raise ValueError("non-real Gaussian rational")
        return x.re
    else:
        raise TypeError(f"cannot interpret {x!r} as an exact rational")
    return x.numerator if x.denominator == 1 else x


def rat_str(x):
    """Canonical string form: "p/q", or "p" when the denominator is one."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class GaussRat:
    """An element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", rat(re))
        object.__setattr__(self, "im", rat(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    @staticmethod
    def _lift(other):
        if isinstance(other, GaussRat):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussRat(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return GaussRat(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        p = self * other.conjugate()
        return GaussRat(Fraction(p.re) / n, Fraction(p.im) / n)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other / self

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussRat({rat_str(self.re)!r}, {rat_str(self.im)!r})"


# -- construction helpers ---------------------------------------------------

def _norm_entry(x):
    if isinstance(x, GaussRat):
        return x
    return rat(x)


def as_matrix(rows):
    """Freeze a nested sequence into an immutable matrix of exact entries."""
    return tuple(tuple(_norm_entry(x) for x in row) for row in rows)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(r, c):
    return tuple((0,) * c for _ in range(r))


def transpose(A):
    return tuple(zip(*A)) if A else ()


def _clean(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def matmul(A, B):
    Bt = transpose(B)
    return tuple(
        tuple(_clean(sum(a * b for a, b in zip(row, col) if a and b)) for col in Bt)
        for row in A)


def matvec(A, v):
    return tuple(_clean(sum(a * b for a, b in zip(row, v) if a and b)) for row in A)


def dot(u, v):
    return _clean(sum(a * b for a, b in zip(u, v) if a and b))


def matadd(A, B):
    return tuple(tuple(_clean(a + b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def matsub(A, B):
    return tuple(tuple(_clean(a - b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def scale(c, A):
    return tuple(tuple(_clean(c * a) for a in row) for row in A)


def is_zero(A):
    return all(not x for row in A for x in row)


def flatten(A):
    return tuple(x for row in A for x in row)


# -- fraction-free elimination ----------------------------------------------

def _integer_rows(rows):
    """Scale every rational row by the lcm of its denominators."""
    out = []
    for row in rows:
        dens = [x.denominator for x in row if isinstance(x, Fraction)]
        m = lcm(*dens) if dens else 1
        out.append([int(x * m) if m != 1 else int(x) for x in row])
    return out


def _is_gaussian(rows):
    return any(isinstance(x, GaussRat) for row in rows for x in row)


def _bareiss(rows, ncols, exact_div):
    """In-place fraction-free forward elimination. Returns pivot columns.

    After the call the first ``len(pivots)`` rows are an echelon form of the
    row space; the remaining rows are zero.
    """
    nrows = len(rows)
    prev = 1
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and not rows[p][c]:
            p += 1
        if p == nrows:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        piv = pr[c]
        for i in range(r + 1, nrows):
            ri = rows[i]
            f = ri[c]
            if f:
                for j in range(c + 1, ncols):
                    ri[j] = exact_div(piv * ri[j] - f * pr[j], prev)
            else:
                for j in range(c + 1, ncols):
                    if ri[j]:
                        ri[j] = exact_div(piv * ri[j], prev)
            ri[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def _int_div(a, b):
    q, rem = divmod(a, b)
    assert rem == 0, "Bareiss division must be exact"
    return q


def _field_div(a, b):
    return a / b


def echelon(A):
    """Fraction-free row echelon form.

    Returns ``(rows, pivots)`` where ``rows`` are the nonzero echelon rows
    (integer entries for rational input) and ``pivots`` their pivot columns.
    """
    if not A:
        return [], []
    ncols = len(A[0])
    if _is_gaussian(A):
        rows = [[x if isinstance(x, GaussRat) else GaussRat(x) for x in row] for row in A]
        div = _field_div
    else:
        rows = _integer_rows(A)
        div = _int_div
    pivots = _bareiss(rows, ncols, div)
    return rows[:len(pivots)], pivots


def rank(A):
    """Exact rank of ``A`` over its entry field."""
    return len(echelon(A)[1])


def rref(A):
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    rows, pivots = echelon(A)
    if not rows:
        return (), ()
    gauss = isinstance(rows[0][0], GaussRat) or _is_gaussian(rows)
    out = []
    for row, c in zip(rows, pivots):
        p = row[c]
        if gauss:
            out.append([x / p for x in row])
        else:
            out.append([Fraction(x, p) for x in row])
    for i in range(len(out) - 1, -1, -1):
        c = pivots[i]
        for k in range(i):
            f = out[k][c]
            if f:
                rk, ri = out[k], out[i]
                for j in range(c, len(rk)):
                    if ri[j]:
                        rk[j] = rk[j] - f * ri[j]
    return tuple(tuple(_clean(x) for x in row) for row in out), tuple(pivots)


def kernel(A, ncols=None):
    """Null-space basis as a tuple of column vectors.

    The basis is the canonical one read off the reduced echelon form: one
    vector per free column, with that free variable set to one and the other
    free variables zero.
    """
    if ncols is None:
        ncols = len(A[0]) if A else 0
    R, pivots = rref(A) if A else ((), ())
    free = [c for c in range(ncols) if c not in set(pivots)]
    zero = GaussRat(0) if A and _is_gaussian(A) else 0
    one = GaussRat(1) if A and _is_gaussian(A) else 1
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(R, pivots):
            if row[f]:
                v[p] = _clean(-row[f])
        basis.append(tuple(v))
    return tuple(basis)


def solve(A, b):
    """One exact solution of ``A x = b`` (free variables set to 0), or None."""
    ncols = len(A[0]) if A else 0
    aug = [tuple(row) + (bi,) for row, bi in zip(A, b)]
    R, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[ncols]
    return tuple(x)


def det(A):
    """Exact determinant via Bareiss (the last pivot is the determinant)."""
    n = len(A)
    if n == 0:
        return 1
    if _is_gaussian(A):
        rows = [[x if isinstance(x, GaussRat) else GaussRat(x) for x in row] for row in A]
        scale_back = GaussRat(1)
        div = _field_div
    else:
        scale_back = Fraction(1)
        rows = []
        for row in A:
            dens = [x.denominator for x in row if isinstance(x, Fraction)]
            m = lcm(*dens) if dens else 1
            scale_back /= m
            rows.append([int(x * m) for x in row])
        div = _int_div
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not rows[k][k]:
            for p in range(k + 1, n):
                if rows[p][k]:
                    rows[k], rows[p] = rows[p], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = div(piv * rows[i][j] - rows[i][k] * rows[k][j], prev)
            rows[i][k] = 0
        prev = piv
    d = rows[n - 1][n - 1] * scale_back * sign
    return d if isinstance(d, GaussRat) else rat(Fraction(d))


def inverse(A):
    """Exact inverse of a square rational matrix; raises on singular input."""
    n = len(A)
    aug = [tuple(row) + tuple(1 if i == j else 0 for j in range(n)) for i, row in enumerate(A)]
    R, pivots = rref(aug)
    if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in R)


def in_span(rows, v):
    """True when ``v`` lies in the row space spanned by ``rows``."""
    if not rows:
        return all(not x for x in v)
    return rank(list(rows) + [v]) == rank(rows)


# -- symmetric forms --------------------------------------------------------

def signature(G):
    """Inertia ``(pos, neg, null)`` of a symmetric rational matrix.

    Symmetric elimination with diagonal pivots, falling back to the 2x2
    trick e_i -> e_i + e_j when the diagonal is zero; Sylvester's law of
    inertia makes the counts congruence invariants.
    """
    n = len(G)
    for i in range(n):
        for j in range(i + 1, n):
            if G[i][j] != G[j][i]:
                raise ValueError("signature() needs a symmetric matrix")
    M = [[Fraction(x) for x in row] for row in G]
    pos = neg = 0
    while M:
        k = len(M)
        piv = next((i for i in range(k) if M[i][i]), None)
        if piv is None:
            off = next(((i, j) for i in range(k) for j in range(i + 1, k) if M[i][j]), None)
            if off is None:
                return pos, neg, n - pos - neg
            i, j = off
            # congruence e_i <- e_i + e_j makes M[i][i] = 2 M[i][j] != 0
            for c in range(k):
                M[i][c] += M[j][c]
            for r in range(k):
                M[r][i] += M[r][j]
            piv = i
        d = M[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        rowp = M[piv]
        keep = [i for i in range(k) if i != piv]
        M = [[M[i][j] - M[i][piv] * rowp[j] / d for j in keep] for i in keep]
    return pos, neg, n - pos - neg


# -- associative closure ----------------------------------------------------

class _SpanBuilder:
    """Incrementally maintained reduced basis of a subspace of Q^N."""

    def __init__(self, length):
        self.length = length
        self.rows = {}  # pivot column -> reduced row (pivot entry 1)

    def reduce(self, v):
        v = [Fraction(x) for x in v]
        for c in sorted(self.rows):
            f = v[c]
            if f:
                row = self.rows[c]
                for j in range(c, self.length):
                    if row[j]:
                        v[j] -= f * row[j]
        return v

    def add(self, v):
        v = self.reduce(v)
        c = next((j for j, x in enumerate(v) if x), None)
        if c is None:
            return False
        p = v[c]
        v = [x / p for x in v]
        for k, row in self.rows.items():
            f = row[c]
            if f:
                self.rows[k] = [a - f * b for a, b in zip(row, v)]
        self.rows[c] = v
        return True

    def __len__(self):
        return len(self.rows)

    def basis(self):
        return [tuple(_clean(x) for x in self.rows[c]) for c in sorted(self.rows)]


def algebra_closure(gens, max_dim=None, n=None):
    """Basis of the unital associative algebra generated by ``gens``.

    Words in the generators are added breadth-first until the span stops
    growing or reaches ``max_dim``. The returned basis is the reduced echelon
    basis of the span in row-major flattening order.
    """
    gens = [as_matrix(g) for g in gens]
    if n is None:
        if not gens:
            raise ValueError("algebra_closure needs n when no generators are given")
        n = len(gens[0])
    for g in gens:
        if len(g) != n or any(len(row) != n for row in g):
            raise ValueError("generators must all be square of the same size")
    if max_dim is None:
        max_dim = n * n
    span = _SpanBuilder(n * n)
    span.add(flatten(identity(n)))
    frontier = [identity(n)]
    while frontier and len(span) < max_dim:
        nxt = []
        for w in frontier:
            for g in gens:
                p = matmul(g, w)
                if span.add(flatten(p)):
                    nxt.append(p)
                    if len(span) >= max_dim:
                        break
            if len(span) >= max_dim:
                break
        frontier = nxt
    return [tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)) for flat in span.basis()]


# -- sparse systems ---------------------------------------------------------

def sparse_kernel(rows, ncols):
    """Null space of a sparse rational system.

    ``rows`` is an iterable of dicts mapping column -> coefficient. The
    result is the same canonical free-variable basis that :func:`kernel`
    returns, as a list of dicts. Rows are kept fully reduced while they are
    inserted, so memory tracks the rank rather than the equation count.
    """
    piv = {}        # pivot column -> row dict with entry 1 at the pivot
    where = {}      # column -> set of pivot columns whose row touches it
    for row in rows:
        v = {c: Fraction(x) for c, x in row.items() if x}
        for c in [c for c in v if c in piv]:
            f = v.get(c)
            if not f:
                continue
            for cc, x in piv[c].items():
                y = v.get(cc, 0) - f * x
                if y:
                    v[cc] = y
                else:
                    v.pop(cc, None)
        if not v:
            continue
        p = min(v)
        inv = 1 / v[p]
        v = {c: x * inv for c, x in v.items()}
        # eliminate the new pivot column from existing rows
        for q in list(where.get(p, ())):
            r = piv[q]
            f = r.get(p)
            if not f:
                continue
            for cc, x in v.items():
                y = r.get(cc, 0) - f * x
                if y:
                    if cc not in r:
                        where.setdefault(cc, set()).add(q)
                    r[cc] = y
                else:
                    if cc in r:
                        del r[cc]
                        where[cc].discard(q)
        piv[p] = v
        for c in v:
            where.setdefault(c, set()).add(p)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        vec = {f: 1}
        for p in where.get(f, ()):
            x = piv[p].get(f)
            if x:
                vec[p] = _clean(-x)
        basis.append(vec)
    return basis
