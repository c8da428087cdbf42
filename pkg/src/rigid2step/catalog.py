"""Named algebras, seeded random algebras and the moduli codimension formula."""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from . import linalg as la
from .lie import Graded2Step, Metric, MTypeAlgebra, structure_from_jmaps, validate

__all__ = [
    "CatalogEntry", "gnla", "example_35", "EXAMPLE_35_JMAPS", "random_algebra",
    "SplitMix64", "moduli_codim", "stabilizer_dim", "entries", "get",
    "GNLA5_HTYPE_METRIC", "GNLA6_HTYPE_METRIC",
]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: Graded2Step
    expected: dict = field(default_factory=dict)
    metric: Metric = None

    def m_type(self):
        if self.metric is None:
            return MTypeAlgebra.euclidean(self.algebra)
        return MTypeAlgebra(self.algebra, self.metric)


def _alg(n, m, pairs):
    """Build from 1-based (i, j, k, coeff) quadruples."""
    br = []
    for i, j, k, c in pairs:
        z = [0] * m
        z[k - 1] = c
        br.append((i - 1, j - 1, z))
    return Graded2Step(n, m, br)


_GNLA = {
    1: [(1, 4, 1, 1), (2, 4, 2, 1), (3, 4, 3, 1)],
    2: [(1, 4, 1, 1), (2, 4, 2, 1), (3, 4, 3, 1), (2, 3, 1, 1)],
    3: [(1, 4, 1, 1), (2, 3, 2, 1), (3, 4, 3, 1)],
    4: [(1, 3, 1, 1), (4, 2, 1, 1), (1, 4, 2, 1), (2, 3, 2, 1), (3, 4, 3, 1)],
    5: [(1, 2, 1, 1), (3, 4, 1, 1), (1, 4, 2, 1), (2, 3, 3, 1)],
    6: [(1, 2, 1, 1), (3, 4, 1, 1), (1, 3, 2, 1), (4, 2, 2, 1), (1, 4, 3, 1), (2, 3, 3, 1)],
}

# Metrics under which the J-maps of gnla(5) and gnla(6) satisfy the Clifford
# relations. gnla(6) works with the Euclidean metric. gnla(5) cannot: every
# J_{f_k} built from a diagonal form on n_{-2} has rank 2, so the form must
# mix f_2 and f_3. Up to scale it is the Pfaffian of the 2-form
# a(e12 + e34) + b e14 + c e23, which is a^2 + bc, giving signature (1, 2).
GNLA6_HTYPE_METRIC = Metric(la.identity(4), la.identity(3))
GNLA5_HTYPE_METRIC = Metric(
    la.as_matrix([[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    la.as_matrix([[-1, 0, 0], [0, 0, -2], [0, -2, 0]]),
)


def gnla(k):
    """One of the six algebras with n = 4, m = 3 whose rigidity is classified."""
    if k not in _GNLA:
        raise ValueError("gnla index must be in 1..6")
    expected = {"rigidity": "rigid" if k >= 5 else "infinite"}
    metric = {5: GNLA5_HTYPE_METRIC, 6: GNLA6_HTYPE_METRIC}.get(k)
    if metric is not None:
        expected["htype_metric"] = True
    return CatalogEntry(f"gnla{k}", _alg(4, 3, _GNLA[k]), expected, metric)


EXAMPLE_35_JMAPS = (
    ((0, 1, 0, 0, 1), (-1, 0, 0, 0, 0), (0, 0, 0, 1, 0), (0, 0, -1, 0, 0), (-1, 0, 0, 0, 0)),
    ((0, 0, 0, 0, 0), (0, 0, 1, 0, 1), (0, -1, 0, 0, 0), (0, 0, 0, 0, 0), (0, -1, 0, 0, 0)),
    ((0, 0, 0, 1, 0), (0, 0, 0, 0, 1), (0, 0, 0, 0, 0), (-1, 0, 0, 0, 1), (0, -1, 0, -1, 0)),
)
"""The three 5x5 J-matrices of the explicit rigid (m, n) = (3, 5) algebra."""


def example_35():
    """The (3, 5) algebra whose Euclidean J-maps are :data:`EXAMPLE_35_JMAPS`."""
    alg = structure_from_jmaps(EXAMPLE_35_JMAPS)
    return CatalogEntry("example_35", alg, {"rigidity": "rigid"})


def entries():
    """All named entries in a fixed order."""
    return [gnla(k) for k in range(1, 7)] + [example_35()]


def get(name):
    for e in entries():
        if e.name == name:
            return e
    raise KeyError(f"unknown catalog entry {name!r}")


# -- random algebras --------------------------------------------------------

_MASK = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator.

    state <- state + 0x9E3779B97F4A7C15 (mod 2^64), then the output is
    z = state; z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9;
    z = (z ^ z >> 27) * 0x94D049BB133111EB; z ^ z >> 31 (all mod 2^64).
    """

    def __init__(self, seed):
        self.state = seed & _MASK

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def coefficient(self):
        """Uniform integer in -3..3: top three bits, 7 rejected."""
        while True:
            v = self.next() >> 61
            if v != 7:
                return v - 3


MAX_REJECTIONS = 100


def random_algebra(m, n, seed):
    """Seeded random algebra with coefficients in -3..3.

    Draw order: pairs (i, j), i < j, lexicographically, and for each pair
    the coefficients of f_1..f_m. Draws continue from the same stream until
    the algebra is fundamental (m >= 1). m = 0 gives the abelian algebra.
    """
    if n < 2 or not (0 <= m <= n * (n - 1) // 2):
        raise ValueError(f"invalid bi-dimension (m, n) = ({m}, {n})")
    if m == 1 and n % 2:
        # a single 2-form on an odd-dimensional space always has a kernel
        raise ValueError(f"no fundamental algebra exists for (m, n) = (1, {n})")
    rng = SplitMix64(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(MAX_REJECTIONS + 1):
        br = [(i, j, [rng.coefficient() for _ in range(m)]) for i, j in pairs]
        a = Graded2Step(n, m, br)
        if m == 0 or validate(a).fundamental:
            return a
    raise RuntimeError("rejection budget exhausted while sampling a fundamental algebra")


# -- moduli -----------------------------------------------------------------

def stabilizer_dim(m, n):
    """Tabulated d(m, n); other pairs raise rather than guess."""
    if m == 2 and n % 2 == 1 and n >= 3:
        return n + 3  # 2k + 4 with n = 2k + 1
    table = {(2, 4): 7, (2, 6): 9, (3, 4): 6, (3, 5): 3}
    if (m, n) in table:
        return table[(m, n)]
    if m == 2 and n % 2 == 0 and n // 2 > 3:
        return 3 * (n // 2)
    raise ValueError(f"stabilizer dimension not tabulated for (m, n) = ({m}, {n})")


def moduli_codim(m, n):
    """m C(n,2) - m^2 - n^2 + 1 + d(m, n)."""
    return Fraction(m * comb(n, 2) - m * m - n * n + 1 + stabilizer_dim(m, n))
