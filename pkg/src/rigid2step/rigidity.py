"""Rigid versus infinite type, with certificates, and Tanaka prolongation levels.

The authoritative test is the corank-one criterion in ideal form: a
fundamental algebra has infinite type exactly when the 2x2 minors of ad_x
have a common nonzero complex zero. Cheaper stages run first and each one
only answers when its answer is provably correct.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from . import linalg as la
from .lie import (MTypeAlgebra, Metric, ad_matrix, ad_matrix_symbolic,
                  condition_C, j_maps, validate, verify_jtype)
from .poly import (DEFAULT_REDUCTION_BUDGET, Ideal, ResourceExhausted,
                   groebner, normal_form, symbolic_matrix_minors,
                   vanishes_only_at_origin)

__all__ = [
    "RigidityVerdict", "Certificate", "ProlongationResult", "NotFundamental",
    "Inconclusive", "decide", "corank_ideal", "prolong", "burnside_check",
    "sample_generic", "rank_one_probes", "verify_certificate", "RIGID",
    "INFINITE", "METHODS", "DEFAULT_MAX_LEVEL",
]

RIGID = "rigid"
INFINITE = "infinite"
METHODS = ("auto", "ideal", "prolong", "fast", "all")
DEFAULT_MAX_LEVEL = 10


class NotFundamental(ValueError):
    """The criterion needs n_{-1} to generate n and to have no central elements."""


class Inconclusive(RuntimeError):
    """A method was asked for a verdict it could not prove."""


@dataclass(frozen=True)
class Certificate:
    """Evidence for a verdict; ``kind`` names the argument, ``data`` its payload."""

    kind: str
    data: dict = field(default_factory=dict)


@dataclass(frozen=True)
class RigidityVerdict:
    verdict: str
    certificate: Certificate
    method: str = "auto"
    checks: tuple = ()
    prolongation: object = None

    @property
    def rigid(self):
        return self.verdict == RIGID


@dataclass(frozen=True)
class ProlongationResult:
    level_dims: tuple
    terminated: bool
    n: int
    m: int

    @property
    def total_dim(self):
        return self.n + self.m + sum(self.level_dims)


# -- stages -----------------------------------------------------------------

def rank_one_probes(n):
    """Probe vectors: e_i, e_i +- e_j, then e_i +- i e_j over Q(i)."""
    basis = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    yield from basis
    for i, j in combinations(range(n), 2):
        for s in (1, -1):
            yield tuple(1 if k == i else s if k == j else 0 for k in range(n))
    for i, j in combinations(range(n), 2):
        for s in (1, -1):
            yield tuple(la.GaussRat(1) if k == i else la.GaussRat(0, s) if k == j
                        else la.GaussRat(0) for k in range(n))


def _rank_one_stage(a):
    for x in rank_one_probes(a.n):
        r = la.rank(ad_matrix(a, x)) if a.m else 0
        if 0 < r <= 1:
            return Certificate("RankOneWitness", {"x": x, "rank": r})
    return None


def corank_ideal(a):
    """Ideal of the 2x2 minors of ad_x in the coordinates x_1..x_n."""
    M = ad_matrix_symbolic(a)
    if a.m < 2 or a.n < 2:
        return Ideal([], a.n)
    return symbolic_matrix_minors(M, 2)


def _minor_count(a):
    """Number of 2x2 minors of ad_x, identically zero ones included."""
    return comb(a.m, 2) * comb(a.n, 2)


def _ideal_stage(a, budget):
    I = corank_ideal(a)
    if len(I) == 0:
        return INFINITE, Certificate("IdealPositiveDim", {
            "minors": _minor_count(a), "generators": 0, "basis": (), "pure_powers": ()})
    G = groebner(I, budget)
    origin = vanishes_only_at_origin(I, budget, basis=G)
    # variables (named as in the printed basis) with a pure power among the leading terms
    pure = [f"x{i + 1}" for i in sorted({next(i for i, e in enumerate(p.lm) if e)
                                         for p in G if sum(1 for e in p.lm if e) == 1})]
    data = {"minors": _minor_count(a), "generators": len(I), "basis": tuple(G),
            "pure_powers": tuple(pure)}
    return (RIGID, Certificate("IdealOriginOnly", data)) if origin else \
        (INFINITE, Certificate("IdealPositiveDim", data))


def burnside_check(J):
    """n^2 when the products J_i J_j generate all of End(n_{-1}), else None.

    Only meaningful as a rigidity certificate for pseudo J-type algebras.
    """
    n = J.n
    prods = [la.matmul(A, B) for A in J.maps for B in J.maps]
    basis = la.algebra_closure(prods, max_dim=n * n, n=n)
    return n * n if len(basis) == n * n else None


def _jtype_signs(J):
    try:
        return verify_jtype(J)
    except ValueError:
        return None


def _metric_stages(a, metric):
    """Condition (C) and the Burnside closure; returns (certificate, notes)."""
    A = MTypeAlgebra(a, metric or Metric.euclidean(a.n, a.m))
    J = j_maps(A)
    cert = condition_C(J)
    if cert is not None:
        return Certificate("ConditionC", {"indices": cert.indices, "sigma": cert.sigma})
    if _jtype_signs(J) is not None:
        dim = burnside_check(J)
        if dim is not None:
            return Certificate("BurnsideFull", {"closure_dim": dim})
    return None


# -- prolongation -----------------------------------------------------------

def prolong(a, max_level=DEFAULT_MAX_LEVEL):
    """Dimensions of g_0, g_1, ... of the Tanaka prolongation.

    An element u of g_k is a pair of maps X: n_{-1} -> g_{k-1} and
    Y: n_{-2} -> g_{k-2}; the derivation identities on [n_{-1}, n_{-1}],
    [n_{-1}, n_{-2}] and [n_{-2}, n_{-2}] are linear in (X, Y). Brackets of
    earlier levels with n are the stored maps themselves.
    """
    if not validate(a).fundamental:
        raise NotFundamental("prolongation needs a fundamental algebra")
    n, m = a.n, a.m
    # A[j][p]: {(t, b): v} meaning [p, e_b] has coordinate v on basis t of g_{j-1}
    # B[j][p]: {(t, c): v} meaning [p, f_c] has coordinate v on basis t of g_{j-2}
    A = {-2: [{} for _ in range(m)],
         -1: [{(c, b): a.C[c][p][b] for c in range(m) for b in range(n) if a.C[c][p][b]}
              for p in range(n)]}
    B = {-2: [{} for _ in range(m)], -1: [{} for _ in range(n)]}
    dims = {-2: m, -1: n, -3: 0, -4: 0}
    levels = []
    for k in range(max_level + 1):
        d1, d2 = dims[k - 1], dims[k - 2]
        nx = d1 * n
        X = lambda p, a_: p * n + a_
        Y = lambda q, c: nx + q * m + c
        eqs = {}

        def add(key, col, v):
            row = eqs.setdefault(key, {})
            row[col] = row.get(col, 0) + v

        # (i) u[e_a, e_b] = [u e_a, e_b] - [u e_b, e_a]
        for i, j in combinations(range(n), 2):
            for c in range(m):
                v = a.C[c][i][j]
                if v:
                    for q in range(d2):
                        add(("i", i, j, q), Y(q, c), v)
        for p, Ap in enumerate(A[k - 1]):
            for (t, col), v in Ap.items():
                for x in range(n):
                    if x < col:
                        add(("i", x, col, t), X(p, x), -v)
                    elif x > col:
                        add(("i", col, x, t), X(p, x), v)
        # (ii) [u e_a, f_c] - [u f_c, e_a] = 0
        if dims[k - 3]:
            for p, Bp in enumerate(B[k - 1]):
                for (t, c), v in Bp.items():
                    for x in range(n):
                        add(("ii", x, c, t), X(p, x), v)
            for q, Aq in enumerate(A[k - 2]):
                for (t, x), v in Aq.items():
                    for c in range(m):
                        add(("ii", x, c, t), Y(q, c), -v)
        # (iii) [u f_c, f_d] - [u f_d, f_c] = 0
        if dims[k - 4]:
            for q, Bq in enumerate(B[k - 2]):
                for (t, col), v in Bq.items():
                    for c in range(m):
                        if c < col:
                            add(("iii", c, col, t), Y(q, c), v)
                        elif c > col:
                            add(("iii", col, c, t), Y(q, c), -v)
        nvars = nx + d2 * m
        rows = [eqs[key] for key in sorted(eqs, key=repr)]
        sol = la.sparse_kernel(rows, nvars)
        dims[k] = len(sol)
        levels.append(len(sol))
        A[k], B[k] = [], []
        for vec in sol:
            Ak, Bk = {}, {}
            for idx, v in vec.items():
                if idx < nx:
                    p, x = divmod(idx, n)
                    Ak[(p, x)] = v
                else:
                    q, c = divmod(idx - nx, m)
                    Bk[(q, c)] = v
            A[k].append(Ak)
            B[k].append(Bk)
        if not sol:
            return ProlongationResult(tuple(levels), True, n, m)
        # levels two below are no longer needed
        A.pop(k - 3, None)
        B.pop(k - 3, None)
    return ProlongationResult(tuple(levels), False, n, m)


# -- decision pipeline ------------------------------------------------------

def _small_center(a):
    return Certificate("SmallCenter", {"m": a.m})


def decide(a, metric=None, method="auto", budget=DEFAULT_REDUCTION_BUDGET,
           max_level=DEFAULT_MAX_LEVEL):
    """Rigid or infinite type, with a certificate.

    ``method``: "auto" runs the staged pipeline; "ideal" only the Groebner
    decision; "prolong" only the prolongation (rigid if it terminates);
    "fast" only the shortcut stages; "all" runs everything and checks that
    no two stages disagree. "prolong" and "fast" raise :class:`Inconclusive`
    when they cannot prove a verdict.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if metric is not None and (len(metric.V) != a.n or len(metric.Z) != a.m):
        raise ValueError("metric size does not match the algebra")
    if a.m <= 2 and method in ("auto", "fast"):
        return RigidityVerdict(INFINITE, _small_center(a), method)
    if a.m >= 3 and not validate(a).fundamental:
        raise NotFundamental("the rigidity criterion needs a fundamental algebra "
                             "(n_{-1} generating n, no central elements in n_{-1})")
    if method == "auto":
        cert = _rank_one_stage(a)
        if cert:
            return RigidityVerdict(INFINITE, cert, method)
        cert = _metric_stages(a, metric)
        if cert:
            return RigidityVerdict(RIGID, cert, method)
        v, cert = _ideal_stage(a, budget)
        return RigidityVerdict(v, cert, method)
    if method == "ideal":
        v, cert = _ideal_stage(a, budget)
        return RigidityVerdict(v, cert, method)
    if method == "fast":
        cert = _rank_one_stage(a)
        if cert:
            return RigidityVerdict(INFINITE, cert, method)
        cert = _metric_stages(a, metric)
        if cert:
            return RigidityVerdict(RIGID, cert, method)
        raise Inconclusive("no shortcut certificate applies; use the ideal method")
    if method == "prolong":
        if a.m <= 2 and not validate(a).fundamental:
            raise NotFundamental("prolongation needs a fundamental algebra")
        res = prolong(a, max_level)
        if res.terminated:
            return RigidityVerdict(RIGID, Certificate("ProlongationTerminated", {
                "level": len(res.level_dims) - 1, "dims": res.level_dims}), method,
                prolongation=res)
        raise Inconclusive(f"prolongation did not terminate within {max_level} levels")
    return _decide_all(a, metric, budget, max_level)


def _decide_all(a, metric, budget, max_level):
    v, cert = _ideal_stage(a, budget)
    checks = [("ideal", v, cert.kind)]
    if a.m <= 2:
        checks.append(("small_center", INFINITE, "SmallCenter"))
    c1 = _rank_one_stage(a)
    if c1:
        checks.append(("rank_one", INFINITE, c1.kind))
    if a.m >= 3:
        c2 = _metric_stages(a, metric)
        if c2:
            checks.append(("metric", RIGID, c2.kind))
    res = None
    if validate(a).fundamental:
        res = prolong(a, max_level)
        if res.terminated:
            checks.append(("prolong", RIGID, "ProlongationTerminated"))
    bad = [c for c in checks if c[1] != v]
    if bad:
        raise AssertionError(f"certificate conflict: {bad} against ideal verdict {v}")
    if res is not None and v == INFINITE and res.terminated:
        raise AssertionError("prolongation terminated on an infinite-type algebra")
    if res is not None and v == RIGID and not res.terminated:
        checks.append(("prolong", "open", f"no termination within {max_level} levels"))
    return RigidityVerdict(v, cert, "all", tuple(checks), res)


# -- certificate re-verification --------------------------------------------

def verify_certificate(a, verdict, metric=None, budget=DEFAULT_REDUCTION_BUDGET):
    """Independently re-check the certificate carried by ``verdict``."""
    c = verdict.certificate
    if c.kind == "SmallCenter":
        return verdict.verdict == INFINITE and a.m <= 2
    if c.kind == "RankOneWitness":
        x = c.data["x"]
        return verdict.verdict == INFINITE and any(x) and \
            0 < la.rank(ad_matrix(a, x)) <= 1
    if c.kind == "ConditionC":
        J = j_maps(MTypeAlgebra(a, metric or Metric.euclidean(a.n, a.m)))
        idx, sig = c.data["indices"], c.data["sigma"]
        Js = [J.maps[i] for i in idx]
        if any(la.det(M) == 0 for M in Js):
            return False
        for p, q in ((0, 1), (0, 2), (1, 2)):
            if la.matmul(Js[p], Js[q]) != la.scale(sig[p][q], la.matmul(Js[q], Js[p])):
                return False
        return verdict.verdict == RIGID and sig[0][1] * sig[0][2] * sig[1][2] == -1
    if c.kind == "BurnsideFull":
        J = j_maps(MTypeAlgebra(a, metric or Metric.euclidean(a.n, a.m)))
        return verdict.verdict == RIGID and _jtype_signs(J) is not None and \
            burnside_check(J) == c.data["closure_dim"]
    if c.kind in ("IdealOriginOnly", "IdealPositiveDim"):
        I = corank_ideal(a)
        G = list(c.data["basis"])
        if len(I) == 0:
            return verdict.verdict == INFINITE and not G
        if any(normal_form(p, G) for p in I):
            return False
        if tuple(groebner(I, budget)) != tuple(G):
            return False
        origin = vanishes_only_at_origin(I, budget, basis=G)
        return origin == (verdict.verdict == RIGID)
    if c.kind == "ProlongationTerminated":
        res = prolong(a, c.data["level"])
        return res.terminated and res.level_dims == tuple(c.data["dims"])
    return False


# -- generic sampling -------------------------------------------------------

@dataclass(frozen=True)
class SampleReport:
    m: int
    n: int
    seed: int
    rigid_count: int
    infinite_count: int
    verdicts: tuple


def sample_generic(m, n, seed, trials, method="auto"):
    """Decide ``trials`` random algebras random_algebra(m, n, seed + t)."""
    from .catalog import random_algebra

    if n < 2 or not (0 <= m <= n * (n - 1) // 2):
        raise ValueError(f"invalid bi-dimension (m, n) = ({m}, {n})")
    verdicts = []
    for t in range(trials):
        a = random_algebra(m, n, seed + t)
        verdicts.append(decide(a, method=method))
    rigid = sum(1 for v in verdicts if v.verdict == RIGID)
    return SampleReport(m, n, seed, rigid, len(verdicts) - rigid, tuple(verdicts))
