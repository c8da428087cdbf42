"""Print the computed grid of minimal admissible module dimensions.

'x2' marks two inequivalent minimal modules, '*' a minimal module that is a sum of
two irreducibles. Entries above 64 are left out (pass --full to the CLI instead).
"""

from rigid2step.clifford import MAX_RS, table1_grid


def main():
    grid = table1_grid(max_dim=64)
    print("s\\r " + "".join(f"{r:>8d}" for r in range(MAX_RS + 1)))
    for s in range(MAX_RS + 1):
        cells = []
        for r in range(MAX_RS + 1):
            if (r, s) not in grid:
                cells.append(f"{'-':>8s}")
                continue
            dim, twin, mixed = grid[(r, s)]
            cells.append(f"{str(dim) + ('*' if mixed else '') + ('x2' if twin else ''):>8s}")
        print(f"{s:>3d} " + "".join(cells))


if __name__ == "__main__":
    main()
