"""Command-line front end. Every command prints one JSON document on stdout.

Exit codes: 0 success, 1 usage or validation error, 2 resource exhaustion
(Groebner budget or prolongation cap hit where a verdict was requested).
"""

import argparse
import sys

from . import catalog, clifford, jsquared, rigidity
from .lie import Metric, MTypeAlgebra, j_maps, orthonormal_center, verify_htype
from .poly import DEFAULT_REDUCTION_BUDGET, ResourceExhausted
from .serialize import (SchemaError, algebra_to_json, dumps, generators_to_json,
                        j2_to_json, load_algebra, prolongation_to_json, verdict_to_json)

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_algebra(path):
    try:
        with open(path, "rb") as f:
            raw = f.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return load_algebra(raw)


def _m_type(a, metric):
    return MTypeAlgebra(a, metric or Metric.euclidean(a.n, a.m))


def parse_copies(spec):
    """'+:2,-:1' or 'min' -> [('+', 2), ('-', 1)]; a missing count means 1."""
    out = []
    for part in spec.split(","):
        part = part.strip()
        cls, _, count = part.partition(":")
        if cls not in ("+", "-", "min"):
            raise UsageError(f"bad module class {cls!r} in --copies (use +, - or min)")
        try:
            k = int(count) if count else 1
        except ValueError:
            raise UsageError(f"bad count {count!r} in --copies") from None
        out.append((cls, k))
    return out


# -- commands ---------------------------------------------------------------

def cmd_rigidity(args):
    a, metric = _read_algebra(args.file)
    v = rigidity.decide(a, metric=metric, method=args.method, budget=args.budget,
                        max_level=args.max_level)
    return verdict_to_json(v)


def cmd_prolong(args):
    a, _ = _read_algebra(args.file)
    return prolongation_to_json(rigidity.prolong(a, args.max_level))


def cmd_jsquared(args):
    a, metric = _read_algebra(args.file)
    A = _m_type(a, metric)
    if args.general:
        return j2_to_json(jsquared.j2_general_probe(j_maps(A)))
    if not verify_htype(j_maps(A)):
        raise UsageError("the algebra is not pseudo H-type for its metric; use --general")
    # the condition does not depend on the basis of n_{-2}
    return j2_to_json(jsquared.j2_standard(orthonormal_center(A)))


def cmd_htype(args):
    A = clifford.build_htype(args.r, args.s, parse_copies(args.copies))
    doc = algebra_to_json(A)
    if args.dump_generators:
        J = j_maps(A)
        gens = clifford.CliffordRep(args.r, args.s, A.algebra.n, tuple(J.maps),
                                    A.metric.V, tuple(parse_copies(args.copies)))
        doc = {"algebra": doc, "module": generators_to_json(gens)}
    if args.output:
        with open(args.output, "w") as f:
            f.write(dumps(doc))
        return {"written": args.output, "n": A.algebra.n, "m": A.algebra.m}
    return doc


def cmd_table1(args):
    grid = clifford.table1_grid(max_dim=args.max_dim, full=args.full)
    rows = []
    for (r, s), (dim, twin, mixed) in sorted(grid.items(), key=lambda t: (t[0][1], t[0][0])):
        ref = clifford.TABLE1[(r, s)]
        rows.append({"r": r, "s": s, "dim": dim, "twin": twin, "mixed": mixed,
                     "match": (dim, twin, mixed) == tuple(ref)})
    return {"max_dim": None if args.full else args.max_dim, "full": args.full,
            "entries": rows, "all_match": all(r["match"] for r in rows)}


def cmd_involutions(args):
    try:
        r, s = (int(t) for t in args.case.split(","))
    except ValueError:
        raise UsageError("--case expects R,S such as 3,4") from None
    if (r, s) not in clifford.DEFAULT_QUADRUPLES:
        raise UsageError("--case must be 3,4 or 7,0")
    rep = clifford.minimal_admissible(r, s)
    inv = clifford.involution_set(rep)
    closure = clifford.pair_closure_check(rep, inv)
    doc = {
        "case": [r, s],
        "quadruples": [list(q) for q in inv.quadruples],
        "sign_table": [list(row) for row in inv.sign_table],
        "eigenspace_dims": {",".join(str(e) for e in p): len(b)
                            for p, b in inv.eigenbasis.items()},
        "pair_closure": {"checked": 8 * (r + s) * (r + s - 1) // 2, "found": len(closure)},
    }
    if (r, s) == (3, 4):
        doc["table2_match"] = inv.sign_table == clifford.TABLE2_34
        t3 = clifford.table3_check(rep, inv)
        doc["table3"] = [{"pattern": list(p), "signs": list(sg), "in_eigenspace": inside,
                          "proportional": all(sg)}
                         for p, (sg, inside) in t3.items()]
    return doc


def cmd_catalog(args):
    if args.action == "list":
        return {"entries": [{"name": e.name, "n": e.algebra.n, "m": e.algebra.m,
                             "expected": e.expected} for e in catalog.entries()]}
    if not args.name:
        raise UsageError("catalog get needs a NAME")
    try:
        e = catalog.get(args.name)
    except KeyError as err:
        raise UsageError(str(err.args[0])) from None
    return algebra_to_json(e.algebra, e.metric)


def cmd_random(args):
    if args.decide:
        rep = rigidity.sample_generic(args.m, args.n, args.seed, args.trials)
        return {"m": rep.m, "n": rep.n, "seed": rep.seed, "trials": args.trials,
                "rigid": rep.rigid_count, "infinite": rep.infinite_count,
                "verdicts": [v.verdict for v in rep.verdicts]}
    algs = [catalog.random_algebra(args.m, args.n, args.seed + t) for t in range(args.trials)]
    if args.trials == 1:
        return algebra_to_json(algs[0])
    return {"algebras": [algebra_to_json(a) for a in algs]}


def cmd_moduli(args):
    try:
        d = catalog.stabilizer_dim(args.m, args.n)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return {"m": args.m, "n": args.n, "stabilizer_dim": d,
            "codim": catalog.moduli_codim(args.m, args.n)}


def build_parser():
    p = _Parser(prog="rigid2step", description="Rigidity and J^2 tools for graded 2-step algebras.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    q = sub.add_parser("rigidity", help="decide rigid / infinite type")
    q.add_argument("file")
    q.add_argument("--method", choices=rigidity.METHODS, default="auto")
    q.add_argument("--budget", type=int, default=DEFAULT_REDUCTION_BUDGET)
    q.add_argument("--max-level", type=int, default=rigidity.DEFAULT_MAX_LEVEL)
    q.set_defaults(func=cmd_rigidity)

    q = sub.add_parser("prolong", help="Tanaka prolongation level dimensions")
    q.add_argument("file")
    q.add_argument("--max-level", type=int, default=rigidity.DEFAULT_MAX_LEVEL)
    q.set_defaults(func=cmd_prolong)

    q = sub.add_parser("jsquared", help="J^2-condition")
    q.add_argument("file")
    q.add_argument("--general", action="store_true", help="probe semi-decision of the general condition")
    q.set_defaults(func=cmd_jsquared)

    q = sub.add_parser("htype", help="build a pseudo H-type algebra n^{r,s}")
    q.add_argument("r", type=int)
    q.add_argument("s", type=int)
    q.add_argument("--copies", default="min", help="module classes, e.g. '+:2,-:1' (default: min)")
    q.add_argument("-o", "--output")
    q.add_argument("--dump-generators", action="store_true")
    q.set_defaults(func=cmd_htype)

    q = sub.add_parser("table1", help="minimal admissible module dimensions")
    q.add_argument("--max-dim", type=int, default=64)
    q.add_argument("--full", action="store_true", help="include the 128/256 entries (slow)")
    q.set_defaults(func=cmd_table1)

    q = sub.add_parser("involutions", help="commuting involutions for Cl(3,4) or Cl(7,0)")
    q.add_argument("--case", required=True)
    q.set_defaults(func=cmd_involutions)

    q = sub.add_parser("catalog", help="named algebras")
    q.add_argument("action", choices=("list", "get"))
    q.add_argument("name", nargs="?")
    q.set_defaults(func=cmd_catalog)

    q = sub.add_parser("random", help="seeded random algebras")
    q.add_argument("m", type=int)
    q.add_argument("n", type=int)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--trials", type=int, default=1)
    q.add_argument("--decide", action="store_true")
    q.set_defaults(func=cmd_random)

    q = sub.add_parser("moduli", help="codimension formula for the moduli space")
    q.add_argument("m", type=int)
    q.add_argument("n", type=int)
    q.set_defaults(func=cmd_moduli)
    return p


def run(argv=None, stdout=None, stderr=None):
    """Run one command; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        doc = args.func(args)
    except (UsageError, SchemaError, rigidity.NotFundamental, ValueError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE
    except (rigidity.Inconclusive, ResourceExhausted) as e:
        print(f"resource limit: {e}", file=stderr)
        return EXIT_RESOURCE
    stdout.write(dumps(doc))
    return EXIT_OK


def main():
    sys.exit(run())
