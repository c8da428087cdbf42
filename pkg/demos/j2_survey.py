"""J^2-condition on pseudo H-type algebras n^{r,s} for r + s in {1, 3, 7}."""

from rigid2step.clifford import build_htype
from rigid2step.jsquared import j2_standard

CASES = [
    ((1, 0), (("min", 1),)), ((0, 1), (("min", 1),)),
    ((3, 0), (("min", 1),)), ((3, 0), (("+", 1), ("-", 1))),
    ((1, 2), (("+", 2),)), ((1, 2), (("+", 1), ("-", 1))),
    ((2, 1), (("min", 1),)), ((0, 3), (("min", 1),)),
    ((7, 0), (("min", 1),)), ((3, 4), (("min", 1),)), ((3, 4), (("+", 2),)),
]


def main():
    for (r, s), copies in CASES:
        A = build_htype(r, s, copies)
        v = j2_standard(A)
        label = ",".join(f"{c}:{k}" for c, k in copies)
        line = f"n^{{{r},{s}}} [{label:>9s}] dim {A.algebra.n:2d}: {'holds' if v.holds else 'fails'}"
        if v.witness:
            i, j = v.witness["pair"]
            line += f"  witness pair (z{i + 1}, z{j + 1}), x = {v.witness['x']}"
        print(line)


if __name__ == "__main__":
    main()
