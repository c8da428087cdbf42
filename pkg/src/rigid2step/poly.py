"""Multivariate polynomials over Q and a Buchberger Groebner-basis engine.

Monomials are exponent tuples; the term order is degrevlex with
x1 > x2 > ... > xn. Coefficients are ints or Fractions (see ``linalg.rat``).
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .linalg import rat, rat_str

__all__ = [
    "Poly", "Ideal", "ResourceExhausted", "groebner", "normal_form",
    "vanishes_only_at_origin", "symbolic_matrix_minors", "linear_form",
    "DEFAULT_REDUCTION_BUDGET",
]

DEFAULT_REDUCTION_BUDGET = 200_000


class ResourceExhausted(RuntimeError):
    """The Groebner computation ran past its reduction budget."""


@lru_cache(maxsize=None)
def _order_key(mono):
    return (sum(mono), tuple(-e for e in reversed(mono)))


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    """Immutable polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("nvars", "terms", "_lm")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError("exponent vector has wrong length")
            c = rat(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
        self.terms = {m: _clean(c) for m, c in clean.items() if c}
        self._lm = None

    # constructors
    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._lm = None
        return p

    # basic queries
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    @property
    def lm(self):
        if self._lm is None and self.terms:
            self._lm = max(self.terms, key=_order_key)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(m) for m in self.terms}) <= 1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _order_key(t[0]), reverse=True)

    # arithmetic
    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError("variable-count mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = _clean(v)
            else:
                t.pop(m, None)
        return Poly._raw(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly.zero(self.nvars)
            return Poly._raw(self.nvars, {m: _clean(c * other) for m, c in self.terms.items()})
        other = self._check(other)
        if other is NotImplemented:
            return other
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = t.get(m, 0) + c1 * c2
                if v:
                    t[m] = v
                else:
                    t.pop(m, None)
        return Poly._raw(self.nvars, {m: _clean(c) for m, c in t.items()})

    __rmul__ = __mul__

    def mul_term(self, mono, c):
        return Poly._raw(self.nvars, {
            tuple(a + b for a, b in zip(m, mono)): _clean(v * c) for m, v in self.terms.items()})

    def monic(self):
        if not self.terms:
            return self
        lc = self.lc
        if lc == 1:
            return self
        return Poly._raw(self.nvars, {m: _clean(Fraction(c) / lc) for m, c in self.terms.items()})

    def evaluate(self, point):
        total = 0
        for m, c in self.terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t = t * x ** e
            total = total + t
        return total

    def substitute(self, images):
        """Replace variable i by the polynomial ``images[i]``."""
        nv = images[0].nvars if images else 0
        out = Poly.zero(nv)
        for m, c in self.terms.items():
            t = Poly.constant(nv, c)
            for img, e in zip(images, m):
                for _ in range(e):
                    t = t * img
            out = out + t
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            mag = abs(Fraction(c))
            if factors:
                body = "*".join(factors)
                body = body if mag == 1 else f"{rat_str(mag)}*{body}"
            else:
                body = rat_str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    __repr__ = __str__


def linear_form(coeffs):
    """The linear polynomial sum coeffs[i] * x_(i+1)."""
    n = len(coeffs)
    t = {}
    for i, c in enumerate(coeffs):
        if c:
            e = [0] * n
            e[i] = 1
            t[tuple(e)] = c
    return Poly(n, t)


class Ideal:
    """An ideal given by a list of generators sharing one variable count."""

    def __init__(self, generators, nvars=None):
        gens = [g for g in generators if g]
        if nvars is None:
            if not gens:
                raise ValueError("nvars required for an ideal without generators")
            nvars = gens[0].nvars
        if any(g.nvars != nvars for g in gens):
            raise ValueError("variable-count mismatch among generators")
        self.nvars = nvars
        self.generators = tuple(gens)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)


# -- Buchberger -------------------------------------------------------------

def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _reduce(f, basis, lms):
    """Full reduction of the term dict ``f`` by monic ``basis``. Returns a dict."""
    f = dict(f)
    rem = {}
    while f:
        m = max(f, key=_order_key)
        c = f[m]
        for g, lg in zip(basis, lms):
            if _divides(lg, m):
                q = tuple(a - b for a, b in zip(m, lg))
                for gm, gc in g.terms.items():
                    mm = tuple(a + b for a, b in zip(gm, q))
                    v = f.get(mm, 0) - c * gc
                    if v:
                        f[mm] = v
                    else:
                        del f[mm]
                break
        else:
            rem[m] = c
            del f[m]
    return rem


def normal_form(p, basis):
    """Remainder of ``p`` on full division by the polynomials ``basis``."""
    basis = [b.monic() for b in basis if b]
    terms = _reduce(p.terms, basis, [b.lm for b in basis])
    return Poly._raw(p.nvars, {m: _clean(c) for m, c in terms.items()})


def _spoly(f, g):
    L = _lcm(f.lm, g.lm)
    a = f.mul_term(tuple(x - y for x, y in zip(L, f.lm)), 1)
    b = g.mul_term(tuple(x - y for x, y in zip(L, g.lm)), 1)
    return a - b


def _update(G, pairs, h):
    """Gebauer-Moeller installation of a new basis element ``h``."""
    t = len(G)
    lh = h.lm
    # criterion B on existing pairs
    kept = set()
    for (i, j) in pairs:
        L = _lcm(G[i].lm, G[j].lm)
        if (_divides(lh, L) and _lcm(G[i].lm, lh) != L and _lcm(G[j].lm, lh) != L):
            continue
        kept.add((i, j))
    # criteria M, F and the product criterion on the new pairs
    by_lcm = {}
    for i, g in enumerate(G):
        by_lcm.setdefault(_lcm(g.lm, lh), []).append(i)
    minimal = []
    for L in sorted(by_lcm, key=_order_key):
        if not any(_divides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        idx = by_lcm[L]
        coprime = any(_lcm(G[i].lm, lh) == tuple(a + b for a, b in zip(G[i].lm, lh)) for i in idx)
        if not coprime:
            kept.add((min(idx), t))
    return G + [h], kept


def groebner(ideal, budget=DEFAULT_REDUCTION_BUDGET):
    """Reduced degrevlex Groebner basis of ``ideal``.

    Pairs are processed by the normal strategy (smallest lcm first, ties by
    index). ``budget`` caps the number of S-polynomial reductions; past it
    :class:`ResourceExhausted` is raised.
    """
    if not isinstance(ideal, Ideal):
        ideal = Ideal(list(ideal))
    G = []
    pairs = set()
    for f in ideal.generators:
        G, pairs = _update(G, pairs, f.monic())
    done = 0
    while pairs:
        i, j = min(pairs, key=lambda p: (_order_key(_lcm(G[p[0]].lm, G[p[1]].lm)), p))
        pairs.discard((i, j))
        done += 1
        if done > budget:
            raise ResourceExhausted(f"Groebner basis exceeded {budget} reductions")
        s = _spoly(G[i], G[j])
        r = _reduce(s.terms, G, [g.lm for g in G])
        if r:
            h = Poly._raw(ideal.nvars, {m: _clean(c) for m, c in r.items()}).monic()
            G, pairs = _update(G, pairs, h)
    return _interreduce(G)


def _interreduce(G):
    G = sorted(G, key=lambda g: _order_key(g.lm))
    minimal = []
    for g in G:
        if not any(_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        r = _reduce(g.terms, others, [h.lm for h in others])
        out.append(Poly._raw(g.nvars, {m: _clean(c) for m, c in r.items()}).monic())
    return sorted(out, key=lambda g: _order_key(g.lm), reverse=True)


def vanishes_only_at_origin(ideal, budget=DEFAULT_REDUCTION_BUDGET, basis=None):
    """True iff the complex zero set of a homogeneous ideal is exactly {0}.

    For a homogeneous ideal this is equivalent to the quotient ring being
    finite dimensional, which a Groebner basis detects: every variable must
    occur as a pure power among the leading monomials.
    """
    if not ideal.is_homogeneous() or any(g.degree() < 1 for g in ideal.generators):
        raise ValueError("vanishes_only_at_origin needs homogeneous generators of degree >= 1")
    if basis is None:
        basis = groebner(ideal, budget) if ideal.generators else []
    n = ideal.nvars
    seen = set()
    for g in basis:
        lm = g.lm
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            seen.add(support[0])
    return len(seen) == n


def _det_poly(M):
    """Determinant of a small square matrix of polynomials (Laplace expansion)."""
    k = len(M)
    if k == 1:
        return M[0][0]
    if k == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = Poly.zero(M[0][0].nvars)
    for j in range(k):
        if not M[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _det_poly(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def symbolic_matrix_minors(M, k):
    """Ideal of all k x k minors of a matrix of linear homogeneous polynomials."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if not 1 <= k <= min(rows, cols):
        raise ValueError("minor size out of range")
    nvars = M[0][0].nvars
    for row in M:
        for p in row:
            if p and (p.degree() != 1 or not p.is_homogeneous()):
                raise ValueError("entries must be linear homogeneous polynomials")
    gens = []
    for rs in combinations(range(rows), k):
        for cs in combinations(range(cols), k):
            d = _det_poly([[M[r][c] for c in cs] for r in rs])
            if d:
                gens.append(d)
    return Ideal(gens, nvars)
