"""Decide rigidity of every catalog algebra and print the certificates."""

from rigid2step.catalog import entries
from rigid2step.rigidity import decide, prolong, verify_certificate


def main():
    for e in entries():
        v = decide(e.algebra)
        ok = verify_certificate(e.algebra, v)
        p = prolong(e.algebra, 5)
        dims = ",".join(map(str, p.level_dims))
        print(f"{e.name:11s} {v.verdict:9s} {v.certificate.kind:16s} "
              f"re-verified={ok}  g_0.. dims: {dims}{'' if p.terminated else ' ...'}")


if __name__ == "__main__":
    main()
